from __future__ import annotations

from mvlogic.cli import run_cli


if __name__ == '__main__':
    run_cli()
