"""
Shared option handling for the apaver management commands.
"""
import logging

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import ApaverError
from core.forms import RunConfigForm
from core.output import write_artifact
from core.runner import run

logger = logging.getLogger(__name__)


class ApaverCommand(BaseCommand):
    """Validates options through RunConfigForm, runs, and writes the artifact.

    Usage errors end with exit status 2, failed verification with 1.
    """
    command_name = None
    extra_options = ()

    def add_arguments(self, parser):
        parser.add_argument('--N', type=int, dest='N', help='Outer ring of the triangle Δ_N')
        parser.add_argument('--a', type=int, help='Level of the paving (derived from --m/--n when given)')
        parser.add_argument('--m', type=int, help='Smaller valuation of γ')
        parser.add_argument('--n', type=int, help='Larger valuation of γ')
        parser.add_argument('--q', type=int, help='Residue field size')
        parser.add_argument('--prec', type=int, help='Override the precision budget')
        parser.add_argument('--format', help='json, csv or svg')
        parser.add_argument('--out', help='Write the artifact to this file instead of stdout')

    def handle(self, *args, **options):
        data = {name: options.get(name) for name in ('N', 'a', 'm', 'n', 'q', 'prec', 'format', 'out')}
        data.update({name: options.get(name) for name in self.extra_options})
        data['command'] = self.command_name
        form = RunConfigForm(data={k: v for k, v in data.items() if v not in (None, '', [])})
        if not form.is_valid():
            messages = '; '.join(
                f"{field}: {' '.join(errors)}" if field != '__all__' else ' '.join(errors)
                for field, errors in form.errors.items()
            )
            raise CommandError(messages, returncode=2)

        config = form.to_config()
        try:
            result = run(config)
        except (ApaverError, ValueError) as exc:
            logger.error(f"{self.command_name} failed: {exc}")
            raise CommandError(str(exc), returncode=2)

        if config.out:
            path = write_artifact(result.text, config.out)
            self.stdout.write(self.style.SUCCESS(f'Wrote {path}'))
        else:
            self.stdout.write(result.text, ending='')

        if result.exit_status:
            raise CommandError('Verification failed', returncode=result.exit_status)
