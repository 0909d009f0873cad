from __future__ import annotations

from qhom.cli import app

if __name__ == "__main__":
    app()
