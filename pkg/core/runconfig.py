from dataclasses import dataclass
from typing import Optional

from django.db import models


class Command(models.TextChoices):
    CLASSIFY = 'classify', 'vertex type table'
    CELLS = 'cells', 'cell descriptors'
    DIMS = 'dims', 'fixed-cell dimensions'
    POINCARE = 'poincare', 'Poincaré coefficients'
    ORDER = 'order', 'filtration order'
    VERIFY = 'verify', 'oracle suite'
    FIGURE = 'figure', 'apartment figure'


class OutputFormat(models.TextChoices):
    JSON = 'json', 'JSON'
    CSV = 'csv', 'CSV'
    SVG = 'svg', 'SVG'


GAMMA_COMMANDS = (Command.DIMS, Command.POINCARE)

FORMATS = {
    Command.CLASSIFY: (OutputFormat.CSV, OutputFormat.JSON),
    Command.CELLS: (OutputFormat.JSON,),
    Command.DIMS: (OutputFormat.CSV, OutputFormat.JSON),
    Command.POINCARE: (OutputFormat.JSON,),
    Command.ORDER: (OutputFormat.CSV, OutputFormat.JSON),
    Command.VERIFY: (OutputFormat.JSON,),
    Command.FIGURE: (OutputFormat.SVG,),
}


@dataclass(frozen=True)
class RunConfig:
    """A validated command invocation; every computation is deterministic"""
    command: str
    N: int = 3
    a: int = 0
    m: Optional[int] = None
    n: Optional[int] = None
    q: Optional[int] = None
    prec: Optional[int] = None
    format: str = ''
    out: str = ''
    kind: str = ''
    scopes: tuple = ()
    timings: bool = False

    @property
    def output_format(self):
        return self.format or FORMATS[self.command][0]
