from paving.figures import FigureKind
from core.management.base import ApaverCommand


class Command(ApaverCommand):
    help = 'Render an apartment diagram of Δ_N as SVG'
    command_name = 'figure'
    extra_options = ('kind',)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--kind',
            choices=FigureKind.values,
            default=FigureKind.TYPES,
            help='Which diagram to draw',
        )
