import csv
import io
import json
import tempfile
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from oracle.reports import VerificationReport
from paving.triangles import triangle_size
from .forms import RunConfigForm
from .output import render_csv
from .runconfig import Command, OutputFormat


def run(name, **options):
    out = io.StringIO()
    call_command(name, stdout=out, **options)
    return out.getvalue()


class RunConfigFormTests(SimpleTestCase):

    def test_a_is_derived_from_m_and_n(self):
        form = RunConfigForm(data={'command': 'dims', 'm': 1, 'n': 3})
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.to_config().a, 2)

    def test_inconsistent_a(self):
        form = RunConfigForm(data={'command': 'dims', 'm': 1, 'n': 3, 'a': 1})
        self.assertFalse(form.is_valid())

    def test_m_above_n(self):
        self.assertFalse(RunConfigForm(data={'command': 'poincare', 'm': 2, 'n': 1}).is_valid())

    def test_gamma_commands_need_valuations(self):
        self.assertFalse(RunConfigForm(data={'command': 'dims', 'N': 2}).is_valid())
        self.assertTrue(RunConfigForm(data={'command': 'classify', 'N': 2}).is_valid())

    def test_unsupported_field(self):
        self.assertFalse(RunConfigForm(data={'command': 'dims', 'm': 0, 'n': 0, 'q': 4}).is_valid())

    def test_format_must_suit_the_command(self):
        self.assertFalse(RunConfigForm(data={'command': 'figure', 'format': 'csv'}).is_valid())
        self.assertFalse(RunConfigForm(data={'command': 'order', 'format': 'svg'}).is_valid())

    def test_missing_q_is_left_unset(self):
        form = RunConfigForm(data={'command': 'poincare', 'm': 0, 'n': 0})
        self.assertTrue(form.is_valid(), form.errors)
        self.assertIsNone(form.cleaned_data['q'])

    def test_verify_takes_no_grid_options(self):
        self.assertTrue(RunConfigForm(data={'command': 'verify', 'scopes': ['order']}).is_valid())
        for extra in ({'N': 2}, {'q': 3}, {'m': 1, 'n': 2}, {'prec': 8}):
            form = RunConfigForm(data={'command': 'verify', **extra})
            self.assertFalse(form.is_valid(), extra)

    @override_settings(APAVER_DEFAULT_Q=7)
    def test_defaults(self):
        form = RunConfigForm(data={'command': 'dims', 'm': 0, 'n': 1})
        self.assertTrue(form.is_valid(), form.errors)
        config = form.to_config()
        self.assertEqual((config.N, config.q), (3, 7))
        self.assertEqual(config.command, Command.DIMS)
        self.assertEqual(config.output_format, OutputFormat.CSV)


class OutputTests(SimpleTestCase):

    def test_csv_from_dicts_and_rows(self):
        text = render_csv(['a', 'b'], [{'a': 1, 'b': 2}, [3, 4]])
        self.assertEqual(text, 'a,b\n1,2\n3,4\n')


class CommandTests(SimpleTestCase):

    def test_classify_csv(self):
        rows = list(csv.reader(io.StringIO(run('classify', N=1))))
        self.assertEqual(rows[0][:4], ['s', 't', 'triangle', 'type'])
        self.assertEqual(len(rows), 1 + triangle_size(1))

    def test_cells_json(self):
        payload = json.loads(run('cells', N=2, a=1))
        self.assertEqual(len(payload['cells']), triangle_size(2))
        self.assertEqual(payload['a'], 1)

    def test_dims_has_one_row_per_vertex(self):
        rows = list(csv.reader(io.StringIO(run('dims', m=1, n=2, N=3))))
        self.assertEqual(len(rows), 1 + triangle_size(3))

    def test_poincare_of_the_base_point(self):
        payload = json.loads(run('poincare', m=0, n=0, N=0))
        self.assertEqual(payload['coeffs'], [1])

    def test_order_csv(self):
        rows = list(csv.reader(io.StringIO(run('order', N=9, a=4))))
        ring = [row for row in rows[1:] if row[3] == '9']
        self.assertEqual([row[4] for row in ring], ['i'] * 8 + ['ii'] * 16 + ['iii'] * 3)

    def test_identical_runs_are_byte_identical(self):
        self.assertEqual(run('order', N=4, a=2, format='json'), run('order', N=4, a=2, format='json'))
        self.assertEqual(run('figure', N=3, kind='movement', a=2), run('figure', N=3, kind='movement', a=2))

    def test_figure(self):
        svg = run('figure', N=2, kind='triangles')
        self.assertTrue(svg.startswith('<svg'))

    def test_usage_error_exits_with_two(self):
        with self.assertRaises(CommandError) as ctx:
            run('dims', m=1, n=2, a=3)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_infeasible_gamma_exits_with_two(self):
        with self.assertRaises(CommandError) as ctx:
            run('dims', m=1, n=1, q=2)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_verify_scope(self):
        payload = json.loads(run('verify', scopes=['order']))
        self.assertTrue(payload['passed'])
        self.assertNotIn('elapsed', payload)

    def test_verify_timings(self):
        payload = json.loads(run('verify', scopes=['order'], timings=True))
        self.assertIn('elapsed', payload)

    def test_verify_rejects_grid_options(self):
        with self.assertRaises(CommandError) as ctx:
            run('verify', N=2)
        self.assertEqual(ctx.exception.returncode, 2)

    @override_settings(APAVER_DEFAULT_Q=5)
    def test_dims_without_q_uses_the_default_field(self):
        rows = list(csv.DictReader(io.StringIO(run('dims', m=1, n=2, N=3))))
        self.assertEqual(len(rows), triangle_size(3))

    def test_failed_verification_exits_with_one(self):
        failing = VerificationReport('demo')
        failing.add('broken', False, 1, 2, {'vertex': '(0,0)'})
        with mock.patch('core.runner.run_suite', return_value=failing):
            with self.assertRaises(CommandError) as ctx:
                run('verify')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_out_writes_the_artifact(self):
        with tempfile.TemporaryDirectory() as tmp:
            with override_settings(APAVER_OUTPUT_DIR=tmp):
                message = run('poincare', m=0, n=0, N=1, out='poincare.json')
            path = Path(tmp) / 'poincare.json'
            self.assertIn(str(path), message)
            self.assertEqual(json.loads(path.read_text())['coeffs'], [4])
