"""
Runtime configuration helpers.

Limits and defaults come from the ``K33LAB`` settings dict, which is populated
from the environment by python-decouple in ``settings/base.py``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from django.conf import settings

from .constants import FORMAT_CSV, OUTPUT_FORMATS
from .exceptions import ConfigurationError

_DEFAULTS = {
    'WORKERS': None,
    'ORACLE_MAX_N': 8,
    'ATLAS_MAX_N': 7,
    'MINOR_SEARCH_MAX_VERTICES': 14,
    'CORNER_SEARCH_MAX_VERTICES': 12,
    'K5_SEARCH_MAX_VERTICES': 40,
    'API_MAX_DECOMPOSE_VERTICES': 60,
}


def get_limit(name):
    """
    Return a K33LAB setting, falling back to the built-in default.

    Works without configured settings so the algebra and graph modules stay
    importable from plain scripts.
    """
    try:
        values = getattr(settings, 'K33LAB', {})
    except Exception:  # settings not configured
        values = {}
    return values.get(name, _DEFAULTS[name])


@dataclass(frozen=True)
class RunConfig:
    """
    Options of one command invocation.
    """
    command: str
    nmax: int = 0
    class_name: str | None = None
    basis_paths: tuple[Path, ...] = field(default_factory=tuple)
    output_format: str = FORMAT_CSV
    workers: int | None = None
    extended: bool = False

    def __post_init__(self):
        if self.nmax < 0:
            raise ConfigurationError(f"nmax must be >= 0, got {self.nmax}")
        if self.workers is not None and self.workers < 1:
            raise ConfigurationError(f"worker count must be >= 1, got {self.workers}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(f"unknown output format {self.output_format!r}")

    @classmethod
    def from_options(cls, command, options):
        """
        Build a RunConfig from management command options.
        """
        workers = options.get('workers')
        if workers is None:
            workers = get_limit('WORKERS')
        paths = tuple(Path(p) for p in (options.get('basis') or []))
        return cls(
            command=command,
            nmax=options.get('nmax') or 0,
            class_name=options.get('class_name'),
            basis_paths=paths,
            output_format=options.get('format') or FORMAT_CSV,
            workers=workers,
            extended=bool(options.get('extended')),
        )
