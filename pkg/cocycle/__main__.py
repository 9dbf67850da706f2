"""``python -m cocycle <subcomando> ...``"""

import io
import sys

from .main import main


def _utf8_streams() -> None:
    """Las consolas de Windows no siempre aceptan ⁻¹, ᵀ ni los emojis."""
    for name in ('stdout', 'stderr'):
        stream = getattr(sys, name)
        if hasattr(stream, 'reconfigure'):
            stream.reconfigure(encoding='utf-8')
        else:
            setattr(sys, name, io.TextIOWrapper(stream.buffer, encoding='utf-8'))


if __name__ == '__main__':
    if sys.platform == 'win32':
        _utf8_streams()
    sys.exit(main())
