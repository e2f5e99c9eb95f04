from core.management.base import ApaverCommand
from oracle.suite import SCOPES


class Command(ApaverCommand):
    help = 'Run the brute-force verification suite; exits 1 when any check fails'
    command_name = 'verify'
    extra_options = ('scopes', 'timings')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--scope',
            dest='scopes',
            action='append',
            choices=SCOPES,
            help='Restrict the run to these scopes (repeatable); all by default',
        )
        parser.add_argument(
            '--timings',
            action='store_true',
            help='Include elapsed seconds in the report',
        )
