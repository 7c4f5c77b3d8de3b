"""Exact Hopf algebra computations backed by the hopfq C++ library."""

import json

from ._core import HopfError, Presentation, catalog_names, export_complex, fd_structure
from ._core import run as _run

__all__ = [
    "HopfError",
    "Presentation",
    "Report",
    "catalog",
    "catalog_names",
    "export_complex",
    "fd_structure",
    "run",
]


class Report(dict):
    """A command report: the parsed JSON plus the CLI exit code."""

    def __init__(self, text, exit_code):
        super().__init__(json.loads(text))
        self.text = text
        self.exit_code = exit_code

    @property
    def passed(self):
        return self.exit_code == 0


def run(command, algebra="", **options):
    """Runs a CLI command in-process; options mirror the CLI flags."""
    text, code = _run(command, algebra, **options)
    return Report(text, code)


def catalog():
    return run("catalog")["results"]["entries"]
