from django import forms
from django.conf import settings

from oracle.suite import SCOPES
from paving.figures import FigureKind
from series.field import SUPPORTED_PRIMES
from .runconfig import FORMATS, GAMMA_COMMANDS, Command, OutputFormat, RunConfig

# Options the verification grid fixes for itself
FIXED_BY_SUITE = ('N', 'a', 'm', 'n', 'q', 'prec')


class RunConfigForm(forms.Form):
    """Validates command-line options before anything is computed"""
    command = forms.ChoiceField(choices=Command.choices)
    N = forms.IntegerField(min_value=0, required=False)
    a = forms.IntegerField(min_value=0, required=False)
    m = forms.IntegerField(min_value=0, required=False)
    n = forms.IntegerField(min_value=0, required=False)
    q = forms.TypedChoiceField(choices=[(p, p) for p in SUPPORTED_PRIMES], coerce=int,
                               required=False, empty_value=None)
    prec = forms.IntegerField(min_value=1, required=False)
    format = forms.ChoiceField(choices=OutputFormat.choices, required=False)
    out = forms.CharField(required=False)
    kind = forms.ChoiceField(choices=FigureKind.choices, required=False)
    scopes = forms.MultipleChoiceField(choices=[(s, s) for s in SCOPES], required=False)
    timings = forms.BooleanField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        command = cleaned_data.get('command')
        m, n, a = cleaned_data.get('m'), cleaned_data.get('n'), cleaned_data.get('a')

        if command == Command.VERIFY:
            given = [f"--{name}" for name in FIXED_BY_SUITE if cleaned_data.get(name) is not None]
            if given:
                raise forms.ValidationError(f"verify runs a fixed grid and takes no {', '.join(given)}")

        if (m is None) != (n is None):
            raise forms.ValidationError("--m and --n must be given together")
        if m is not None:
            if n < m:
                raise forms.ValidationError(f"Need n >= m, got m={m}, n={n}")
            # a is derived from the valuations; an explicit a must agree
            if a is not None and a != n - m:
                raise forms.ValidationError(f"--a {a} disagrees with n - m = {n - m}")
            cleaned_data['a'] = n - m
        elif command in GAMMA_COMMANDS:
            raise forms.ValidationError(f"{command} needs --m and --n")

        fmt = cleaned_data.get('format')
        if command and fmt and fmt not in FORMATS[command]:
            allowed = ', '.join(str(f) for f in FORMATS[command])
            raise forms.ValidationError(f"{command} writes {allowed}, not {fmt}")
        if command == Command.FIGURE and not cleaned_data.get('kind'):
            cleaned_data['kind'] = FigureKind.TYPES
        return cleaned_data

    def to_config(self):
        data = self.cleaned_data
        q = data.get('q')
        if q is None and data['command'] in GAMMA_COMMANDS:
            q = settings.APAVER_DEFAULT_Q
        return RunConfig(
            command=data['command'],
            N=3 if data.get('N') is None else data['N'],
            a=data.get('a') or 0,
            m=data.get('m'),
            n=data.get('n'),
            q=q,
            prec=data.get('prec'),
            format=data.get('format') or '',
            out=data.get('out') or '',
            kind=data.get('kind') or '',
            scopes=tuple(data.get('scopes') or SCOPES),
            timings=bool(data.get('timings')),
        )
