#!/usr/bin/env python3
"""Script principal de lanzamiento de Cocycle.
Este archivo actúa como punto de entrada desde la raíz del proyecto.
"""

import sys

from cocycle.main import main

if __name__ == "__main__":
    sys.exit(main())
