"""Module entry point for python -m tadic."""

from .cli import main

if __name__ == "__main__":
    main()
