#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Script principal de Cocycle.
Analiza grafos orientados, cuenta árboles, construye duales planares, evalúa
estados termodinámicos y ejecuta la suite aleatoria de propiedades.
"""

import argparse
import json
import sys
from typing import List, Optional, Sequence

import yaml

from cocycle.config import (
    EMOJIS,
    EXIT_CODES,
    MESSAGES,
    SEPARATOR_MAJOR,
    SEPARATOR_MINOR,
    VERSION,
    VERSION_NAME,
)
from cocycle.core.exceptions import EmbeddingError, MatrixError
from cocycle.core.linalg import RationalMatrix
from cocycle.core.reports import RunReport, VerificationReport, to_jsonable
from cocycle.generators.basis import BasisBundle, build_basis, verify_basis
from cocycle.generators.projections import build_projections, verify_projection_identities, verify_two_form
from cocycle.managers.settings_manager import (
    SettingsManager,
    VerifySettings,
    get_global_settings,
    set_global_settings_manager,
)
from cocycle.models.graph_models import GraphDocument, load_document, load_state, read_document
from cocycle.utils.graph_core import select_tree
from cocycle.verifiers.duality import dual_graph, dual_of_dual_check, reverse_dual, verify_duality
from cocycle.verifiers.ks_spectral import (
    eigenvector_transport_check,
    ks_matrices,
    matrix_tree_check,
    spectra_match_mod_one,
    tree_change_report,
    verify_ks_identities,
)
from cocycle.verifiers.suite import SuiteOptions, run_random_suite
from cocycle.verifiers.thermo import (
    entropy_production,
    kirchhoff_checks,
    linear_regime_epr,
    macroscopic_observables,
    orthogonal_projectors,
    verify_lambda_duality,
)


# =============================================================================
# CARGA DE ENTRADAS
# =============================================================================

def _parse_tree_option(option: Optional[str]) -> Optional[List[str]]:
    if option is None:
        return None
    return [item.strip() for item in option.split(",") if item.strip()]


def _load(graph_path: str, tree_option: Optional[str] = None):
    """Documento y árbol: --tree tiene prioridad sobre el 'tree' del documento."""
    doc = load_document(read_document(graph_path))
    edge_ids = _parse_tree_option(tree_option)
    if edge_ids is None and doc.tree is not None:
        edge_ids = list(doc.tree)
    return doc, select_tree(doc.graph, edge_ids)


def _describe(report: RunReport, doc: GraphDocument, b: BasisBundle) -> None:
    g = doc.graph
    report.data['graph'] = {
        'vertices': g.num_vertices,
        'edges': g.num_edges,
        'cycles': g.cyclomatic_number,
    }
    report.data['tree'] = b.tree.to_dict()
    report.data['permutation'] = list(b.tree.permutation)


# =============================================================================
# COMANDOS
# =============================================================================

def cmd_analyze(graph_path: str, tree: Optional[str] = None, tree2: Optional[str] = None,
                settings: Optional[VerifySettings] = None) -> RunReport:
    """Matrices completas y la batería de identidades para un grafo y un árbol."""
    settings = settings or VerifySettings()
    report = RunReport("analyze", {'graph': graph_path, 'tree': tree, 'tree2': tree2})
    doc, t = _load(graph_path, tree)
    g = doc.graph
    b = build_basis(g, t)
    p = build_projections(b)
    ks = ks_matrices(b, p)
    _describe(report, doc, b)

    spectra = spectra_match_mod_one(ks, settings.float_tolerance)
    report.add_section(verify_basis(b))
    report.add_section(verify_projection_identities(p, b))
    report.add_section(verify_two_form(b, p))
    report.add_section(spectra.report)
    report.add_section(verify_ks_identities(b, p, ks))
    report.add_section(eigenvector_transport_check(b, p, ks, settings.float_tolerance, settings.unit_window))
    report.add_section(orthogonal_projectors(b, ks).report)
    report.add_section(verify_lambda_duality(b))
    if g.num_edges <= settings.spanning_tree_guard:
        report.add_section(matrix_tree_check(g, ks, settings.spanning_tree_guard))
    else:
        spectra.report.note(f"Conteo de árboles omitido: |E| = {g.num_edges} > {settings.spanning_tree_guard}")

    if tree2 is not None:
        t2 = select_tree(g, _parse_tree_option(tree2))
        report.add_section(tree_change_report(g, t, t2))

    report.add_matrix('incidence', b.incidence())
    report.add_matrix('cycles', b.cycle_matrix())
    report.add_matrix('cocycles', b.cocycle_matrix())
    report.add_matrix('P', p.P)
    report.add_matrix('Q', p.Q)
    report.add_matrix('Omega', p.omega_full)
    report.add_matrix('omega', p.omega_block)
    report.add_matrix('I - Omega^2', RationalMatrix.identity(b.size) - p.omega_full @ p.omega_full)
    report.add_matrix('K', ks.K)
    report.add_matrix('*K', ks.Kstar)
    report.data['char_K'] = str(spectra.char_K)
    report.data['char_Kstar'] = str(spectra.char_Kstar)
    report.data['basis'] = b.to_dict()
    return report.finish()


def cmd_count_trees(graph_path: str, settings: Optional[VerifySettings] = None) -> RunReport:
    """det K, det *K y el conteo por fuerza bruta deben coincidir."""
    settings = settings or VerifySettings()
    report = RunReport("count-trees", {'graph': graph_path})
    doc, t = _load(graph_path)
    b = build_basis(doc.graph, t)
    ks = ks_matrices(b)
    _describe(report, doc, b)
    section = report.add_section(matrix_tree_check(doc.graph, ks, settings.spanning_tree_guard))
    report.data.update({
        'det_K': section.values['det_K'],
        'det_Kstar': section.values['det_Kstar'],
        'spanning_trees': section.values['spanning_trees'],
    })
    return report.finish()


def cmd_dual(graph_path: str, tree: Optional[str] = None) -> RunReport:
    """Grafo dual en JSON junto con las comprobaciones de dualidad."""
    report = RunReport("dual", {'graph': graph_path, 'tree': tree})
    doc, t = _load(graph_path, tree)
    if doc.embedding.is_empty:
        raise EmbeddingError(MESSAGES['missing_embedding'])
    b = build_basis(doc.graph, t)
    p = build_projections(b)
    _describe(report, doc, b)

    dual = dual_graph(doc.graph, doc.embedding, t)
    duality = report.add_section(verify_duality(b, p, dual))
    report.add_section(dual_of_dual_check(b, p, dual))
    if duality.values.get('flipped'):
        dual = reverse_dual(dual)
    report.data['dual'] = dual.to_dict()
    report.add_matrix('*P', duality.values['dual_P'])
    report.add_matrix('*Q', duality.values['dual_Q'])
    return report.finish()


def cmd_thermo(graph_path: str, state_path: str, tree: Optional[str] = None) -> RunReport:
    """Observables macroscópicos, leyes de Kirchhoff y producción de entropía."""
    report = RunReport("thermo", {'graph': graph_path, 'state': state_path, 'tree': tree})
    doc, t = _load(graph_path, tree)
    b = build_basis(doc.graph, t)
    p = build_projections(b)
    ks = ks_matrices(b, p)
    state = load_state(read_document(state_path), doc.graph, t)
    _describe(report, doc, b)

    kirchhoff = report.add_section(kirchhoff_checks(b, p, state))
    report.add_section(verify_lambda_duality(b, state))
    report.add_section(orthogonal_projectors(b, ks).report)
    if state.currents == state.forces:
        report.add_section(linear_regime_epr(b, ks, state.currents))

    epr = entropy_production(b, state)
    report.data['observables'] = macroscopic_observables(b, state).to_dict()
    report.data['kcl'] = kirchhoff.values['kcl']
    report.data['kvl'] = kirchhoff.values['kvl']
    report.data['equilibrium'] = kirchhoff.values['equilibrium']
    report.data['sigma'] = epr.sigma
    report.data['sigma_vortex'] = epr.vortex_part
    report.data['sigma_tidal'] = epr.tidal_part
    report.data['state'] = state.to_dict(t)
    return report.finish()


def cmd_verify(cases: int, seed: int, settings: Optional[VerifySettings] = None,
               show_progress: bool = False) -> RunReport:
    """Suite aleatoria: casos de grafos y de proyecciones abstractas."""
    settings = settings or VerifySettings()
    report = RunReport("verify", {'cases': cases, 'seed': seed,
                                  'max_v': settings.max_v, 'max_e': settings.max_e})
    options = SuiteOptions(
        max_v=settings.max_v,
        max_e=settings.max_e,
        lab_max_n=settings.lab_max_n,
        entry_range=settings.entry_range,
        max_denominator=settings.max_denominator,
        tolerance=settings.float_tolerance,
        unit_window=settings.unit_window,
        spanning_tree_guard=settings.spanning_tree_guard,
        generation_retries=settings.generation_retries,
    )

    def progress(index: int, total: int) -> None:
        print(MESSAGES['suite_progress'].format(index=index, total=total), end="\r", flush=True)

    suite = report.add_section(run_random_suite(cases, seed, options, progress if show_progress else None))
    if show_progress and cases:
        print()
    report.data['failures'] = len(suite.failures)
    report.data['checks'] = len(suite.checks)
    return report.finish()


def _parse_assignment(text: str):
    """'seccion.clave=valor' -> (seccion, clave, valor con tipo YAML)."""
    path, sep, raw = text.partition("=")
    section, dot_sep, key = path.strip().partition(".")
    if not sep or not dot_sep or not section or not key:
        raise ValueError(MESSAGES['bad_assignment'].format(text=text))
    value = yaml.safe_load(raw) if raw.strip() else None
    if isinstance(value, str):
        # YAML 1.1 lee "1e-8" como cadena
        try:
            value = float(value)
        except ValueError:
            pass
    return section, key, value


def cmd_settings(assignments: Sequence[str] = (), reset: bool = False,
                 data_dir: Optional[str] = None) -> RunReport:
    """Muestra settings.yaml; con --set o --reset lo modifica y lo guarda."""
    report = RunReport("settings", {'set': list(assignments), 'reset': reset})
    manager = get_global_settings(data_dir)
    if reset:
        manager.reset_defaults()
    for text in assignments:
        manager.set_value(*_parse_assignment(text))
    report.data['file'] = manager.file_path
    report.data['settings'] = manager.data
    return report.finish()


# =============================================================================
# PRESENTACIÓN
# =============================================================================

# Icono de las secciones según el subcomando
SECTION_EMOJIS = {
    'analyze': EMOJIS['spectrum'],
    'count-trees': EMOJIS['tree'],
    'dual': EMOJIS['dual'],
    'thermo': EMOJIS['thermo'],
    'verify': EMOJIS['lab'],
}


def _format_matrix(matrix: RationalMatrix) -> List[str]:
    cells = matrix.to_strings()
    if not cells or not cells[0]:
        return ["    (vacía)"]
    width = max(len(cell) for row in cells for cell in row)
    return ["    [" + " ".join(cell.rjust(width) for cell in row) + "]" for row in cells]


def _render_section(section: VerificationReport, emoji: str) -> List[str]:
    lines = [SEPARATOR_MINOR, f"{emoji} {section.title}"]
    for check in section.checks:
        if check.passed:
            lines.append(MESSAGES['check_passed'].format(name=check.name))
        else:
            lines.append(MESSAGES['check_failed'].format(name=check.name, detail=check.detail))
    for note in section.notes:
        lines.append(MESSAGES['note'].format(note=note))
    return lines


def render_text(report: RunReport, show_matrices: bool = True) -> str:
    """Texto legible con las mismas secciones que el JSON."""
    lines = [SEPARATOR_MAJOR, f"{EMOJIS['graph']} Cocycle {VERSION} - {report.command}", SEPARATOR_MAJOR]

    data = dict(report.data)
    graph = data.pop('graph', None)
    if graph:
        lines.append(MESSAGES['loaded_graph'].format(**graph))
    tree = data.pop('tree', None)
    if tree:
        lines.append(f"{EMOJIS['tree']} " + MESSAGES['tree_header'].format(tree=", ".join(tree['tree']) or "-",
                                                    chords=", ".join(tree['chords']) or "-"))
    order = data.pop('permutation', None)
    if order is not None:
        lines.append(MESSAGES['permutation_header'].format(order=", ".join(order) or "-"))

    if show_matrices and report.matrices:
        lines.append(SEPARATOR_MINOR)
        for name, matrix in report.matrices.items():
            lines.append(f"{EMOJIS['matrix']} {name}:")
            lines.extend(_format_matrix(matrix))

    data.pop('basis', None)
    dual = data.pop('dual', None)
    if dual:
        lines.append(SEPARATOR_MINOR)
        lines.append(f"{EMOJIS['dual']} Grafo dual: {', '.join(dual['vertices'])}")
        for edge in dual['edges']:
            lines.append(f"    {edge['id']}: {edge['tail']} -> {edge['head']}")
    for key, value in data.items():
        lines.append(f"  {key}: {json.dumps(to_jsonable(value), ensure_ascii=False)}")

    emoji = SECTION_EMOJIS.get(report.command, EMOJIS['matrix'])
    for section in report.sections:
        lines.extend(_render_section(section, emoji))

    lines.append(SEPARATOR_MAJOR)
    total = len(report.checks)
    failed = total - sum(1 for check in report.checks if check.passed)
    if failed == 0:
        lines.append(MESSAGES['all_passed'].format(count=total))
    else:
        lines.append(MESSAGES['some_failed'].format(failed=failed, count=total))
    if report.elapsed is not None:
        lines.append(f"{EMOJIS['timer']} " + MESSAGES['elapsed'].format(seconds=report.elapsed))
    return "\n".join(lines)


# =============================================================================
# PUNTO DE ENTRADA
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocycle",
        description=f"Cocycle {VERSION} - {VERSION_NAME}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Ejemplos de uso:
  cocycle analyze data/fixtures/four_vertex.json --tree e1,e2,e3
  cocycle analyze data/fixtures/four_vertex.json --tree2 e1,e3,e4
  cocycle count-trees data/fixtures/triangle.json
  cocycle dual data/fixtures/four_vertex.json --format json
  cocycle thermo data/fixtures/four_vertex.json data/fixtures/state_c4.json
  cocycle verify --random 200 --seed 0
  cocycle settings --set random_suite.cases=50
        """
    )
    parser.add_argument("--version", action="version", version=f"cocycle {VERSION}")
    parser.add_argument(
        "--data-dir",
        default=None,
        help="Directorio con settings.yaml (por defecto: data/ o $COCYCLE_DATA_DIR)"
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=None,
        help="Formato de salida (por defecto: settings.yaml)"
    )

    tree_option = argparse.ArgumentParser(add_help=False)
    tree_option.add_argument(
        "--tree",
        metavar="E1,E2,...",
        help="Aristas del árbol generador (por defecto: el del archivo o DFS)"
    )

    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common, tree_option],
                                  help="Matrices e identidades de un grafo")
    analyze.add_argument("graph", help="Archivo JSON/YAML del grafo")
    analyze.add_argument("--tree2", metavar="E1,E2,...", help="Segundo árbol para el informe de cambio de árbol")

    count = commands.add_parser("count-trees", parents=[common], help="det K = det *K = #árboles")
    count.add_argument("graph", help="Archivo JSON/YAML del grafo")

    dual = commands.add_parser("dual", parents=[common, tree_option], help="Grafo dual planar")
    dual.add_argument("graph", help="Archivo del grafo con 'rotations' o 'faces'")

    thermo = commands.add_parser("thermo", parents=[common, tree_option], help="Estado termodinámico")
    thermo.add_argument("graph", help="Archivo JSON/YAML del grafo")
    thermo.add_argument("state", help="Archivo con 'currents' y 'forces'")

    verify = commands.add_parser("verify", parents=[common], help="Suite aleatoria de propiedades")
    verify.add_argument("--random", type=int, default=None, metavar="N", help="Número de casos")
    verify.add_argument("--seed", type=int, default=None, help="Semilla")
    verify.add_argument("--max-v", type=int, default=None, help="Máximo de vértices")
    verify.add_argument("--max-e", type=int, default=None, help="Máximo de aristas")

    settings_cmd = commands.add_parser("settings", parents=[common], help="Ver o cambiar settings.yaml")
    settings_cmd.add_argument("--set", dest="assignments", action="append", default=[],
                              metavar="SECCION.CLAVE=VALOR", help="Cambia un valor (repetible)")
    settings_cmd.add_argument("--reset", action="store_true", help="Restaura los valores por defecto")
    return parser


def _settings_from_args(args: argparse.Namespace) -> VerifySettings:
    manager = SettingsManager(args.data_dir)
    set_global_settings_manager(manager)
    settings = manager.settings
    if args.format is not None:
        settings.output_format = args.format
    if getattr(args, 'max_v', None) is not None:
        settings.max_v = args.max_v
    if getattr(args, 'max_e', None) is not None:
        settings.max_e = args.max_e
    return settings


def run_command(args: argparse.Namespace, settings: VerifySettings) -> RunReport:
    text_mode = settings.output_format == "text"
    if args.command == "analyze":
        return cmd_analyze(args.graph, args.tree, args.tree2, settings)
    if args.command == "count-trees":
        return cmd_count_trees(args.graph, settings)
    if args.command == "dual":
        return cmd_dual(args.graph, args.tree)
    if args.command == "thermo":
        return cmd_thermo(args.graph, args.state, args.tree)
    if args.command == "settings":
        return cmd_settings(args.assignments, args.reset, args.data_dir)
    cases = settings.cases if args.random is None else args.random
    seed = settings.seed if args.seed is None else args.seed
    return cmd_verify(cases, seed, settings, show_progress=text_mode)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Función principal. Devuelve el código de salida."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = _settings_from_args(args)
        report = run_command(args, settings)
    except FileNotFoundError as e:
        print(MESSAGES['file_not_found'].format(filename=e.filename or e), file=sys.stderr)
        return EXIT_CODES['input_error']
    except (MatrixError, ArithmeticError) as e:
        # Bases, proyecciones o balances que no cuadran: fallo de verificación
        print(MESSAGES['broken_identity'].format(error=e), file=sys.stderr)
        return EXIT_CODES['verification_failed']
    except (ValueError, OSError) as e:
        print(MESSAGES['input_error'].format(error=e), file=sys.stderr)
        return EXIT_CODES['input_error']

    if settings.output_format == "json":
        print(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
    else:
        print(render_text(report, settings.show_matrices))
    return EXIT_CODES['ok'] if report.passed else EXIT_CODES['verification_failed']


if __name__ == '__main__':
    sys.exit(main())
