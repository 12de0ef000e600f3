"""Entry point for running as a module: python -m curvefree"""

from .cli import main

if __name__ == "__main__":
    main()
