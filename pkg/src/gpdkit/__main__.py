"""Module entry point: ``python3 -m gpdkit``."""

from .cli import entry

if __name__ == "__main__":
    entry()
