import argparse

from . import blowup, diagonal, fitting, tree
from .common import common_options


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fitting_forge",
        description="Fitting ideals, diagonalization and blow-up charts of polynomial modules",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parent = common_options()
    fitting.register(subparsers, parent)
    diagonal.register(subparsers, parent)
    blowup.register(subparsers, parent)
    tree.register(subparsers, parent)
    return parser
