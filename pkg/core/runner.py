"""
Dispatch of a validated RunConfig to the service layer.
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from lattice.services import ClassificationService
from oracle.suite import run_suite
from paving.filtration import CSV_HEADER
from paving.services import PavingService
from springer.services import SpringerService
from .output import render_csv, render_json
from .runconfig import Command, OutputFormat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunResult:
    text: str
    exit_status: int = 0


def _table(config, header, rows):
    if config.output_format == OutputFormat.CSV:
        return render_csv(header, rows)
    return render_json(rows)


def classify(config):
    rows = ClassificationService.type_table(config.N, config.a)
    return RunResult(_table(config, ClassificationService.HEADER, rows))


def cells(config):
    descriptors = PavingService.cells(config.N, config.a)
    return RunResult(render_json({
        'N': config.N,
        'a': config.a,
        'cells': [d.to_dict() for d in descriptors],
    }))


def dims(config):
    g = SpringerService.gamma(config.m, config.n, config.q, config.N, config.prec)
    rows = SpringerService.dimension_table(config.N, g)
    return RunResult(_table(config, SpringerService.DIMENSION_HEADER, rows))


def poincare(config):
    g = SpringerService.gamma(config.m, config.n, config.q, config.N, config.prec)
    return RunResult(render_json(SpringerService.poincare_record(config.N, g, config.q)))


def order(config):
    entries = PavingService.order(config.N, config.a)
    if config.output_format == OutputFormat.CSV:
        return RunResult(render_csv(CSV_HEADER, [e.to_row() for e in entries]))
    return RunResult(render_json([dict(zip(CSV_HEADER, e.to_row())) for e in entries]))


def verify(config):
    report = run_suite(config.scopes, budget=settings.APAVER_BUDGET)
    return RunResult(report.to_json(timings=config.timings) + '\n', 0 if report.passed else 1)


def figure(config):
    return RunResult(PavingService.figure(config.kind, config.N, config.a))


HANDLERS = {
    Command.CLASSIFY: classify,
    Command.CELLS: cells,
    Command.DIMS: dims,
    Command.POINCARE: poincare,
    Command.ORDER: order,
    Command.VERIFY: verify,
    Command.FIGURE: figure,
}


def run(config):
    logger.info(f"Running {config.command} with N={config.N}, a={config.a}, m={config.m}, n={config.n}, q={config.q}")
    return HANDLERS[config.command](config)
