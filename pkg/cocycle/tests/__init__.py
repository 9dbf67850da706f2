"""
Paquete de tests para el sistema Cocycle.
"""
