from django import forms
from django.core.exceptions import ValidationError

from .conf import get_setting
from .harness import ExperimentSpec
from .objectives import ObjectiveKind, SyntheticSpec
from .solvers.config import PMode
from .solvers.registry import SOLVER_CHOICES


def _int_list(raw, name):
    try:
        values = [int(part) for part in str(raw).split(',') if part.strip()]
    except ValueError:
        raise ValidationError(f"{name} must be an integer or a comma-separated list of integers.")
    if not values:
        raise ValidationError(f"At least one {name} value is required.")
    return values


class ExperimentForm(forms.Form):
    """Form validating solver and benchmark options from flags or a config file"""
    OBJECTIVE_CHOICES = [
        ('coverage', 'Coverage-diversity'),
        ('facility', 'Facility-diversity'),
        ('cut', 'Graph cut'),
    ]
    P_MODE_CHOICES = [(mode.value, mode.value.title()) for mode in PMode]

    objective = forms.ChoiceField(choices=OBJECTIVE_CHOICES)
    data = forms.CharField(required=False, help_text="Similarity CSV or edge list")
    n = forms.IntegerField(required=False, min_value=2, help_text="Size of a synthetic instance")
    density = forms.FloatField(required=False, min_value=0.0, max_value=1.0)
    lam = forms.FloatField(required=False, min_value=0.0, max_value=1.0)
    k = forms.CharField(help_text="Single value or comma-separated list")
    eps = forms.FloatField(required=False)
    ts = forms.FloatField(required=False, min_value=0.0, max_value=1.0)
    algo = forms.CharField(required=False, help_text="Single algorithm or comma-separated list")
    p_mode = forms.ChoiceField(choices=P_MODE_CHOICES, required=False)
    reps = forms.IntegerField(required=False, min_value=1)
    seed = forms.IntegerField(required=False, min_value=0)
    workers = forms.IntegerField(required=False, min_value=1)
    L = forms.IntegerField(required=False, min_value=1)
    strict_pool = forms.NullBooleanField(required=False)

    def clean_k(self):
        values = _int_list(self.cleaned_data.get('k', ''), 'k')
        if any(k < 1 for k in values):
            raise ValidationError("k must be positive.")
        return values

    def clean_eps(self):
        eps = self.cleaned_data.get('eps')
        if eps is None:
            return get_setting('EPS')
        if not 0.0 < eps < 1.0:
            raise ValidationError("eps must lie strictly between 0 and 1.")
        return eps

    def clean_ts(self):
        ts = self.cleaned_data.get('ts')
        return get_setting('FLIP_POINT') if ts is None else ts

    def clean_algo(self):
        raw = self.cleaned_data.get('algo') or 'main'
        algos = [part.strip() for part in raw.split(',') if part.strip()]
        unknown = [a for a in algos if a not in SOLVER_CHOICES]
        if unknown:
            raise ValidationError(f"Unknown algorithm(s): {', '.join(unknown)}. Choose from {', '.join(SOLVER_CHOICES)}.")
        return algos

    def clean_p_mode(self):
        return self.cleaned_data.get('p_mode') or get_setting('P_MODE')

    def clean_reps(self):
        reps = self.cleaned_data.get('reps')
        return get_setting('REPS') if reps is None else reps

    def clean_seed(self):
        seed = self.cleaned_data.get('seed')
        return get_setting('MASTER_SEED') if seed is None else seed

    def clean_workers(self):
        workers = self.cleaned_data.get('workers')
        return get_setting('WORKERS') if workers is None else workers

    def clean(self):
        cleaned_data = super().clean()
        data = cleaned_data.get('data')
        n = cleaned_data.get('n')
        ks = cleaned_data.get('k') or []

        if bool(data) == (n is not None):
            raise ValidationError("Give either a data file or a synthetic size n, not both.")

        if n is not None and any(k > n for k in ks):
            raise ValidationError(f"k cannot exceed the instance size n={n}.")

        if cleaned_data.get('objective') == 'coverage' and cleaned_data.get('lam') is None:
            cleaned_data['lam'] = 0.75

        cleaned_data['strict_pool'] = bool(cleaned_data.get('strict_pool'))
        return cleaned_data

    def synthetic_spec(self):
        data = self.cleaned_data
        kind = ObjectiveKind.from_cli(data['objective'])
        extra = {}
        if data.get('density') is not None:
            extra['density'] = data['density']
        if data.get('lam') is not None:
            extra['lam'] = data['lam']
        return SyntheticSpec(kind=kind, n=data['n'], **extra)

    def source_label(self):
        data = self.cleaned_data
        if data.get('data'):
            return data['data']
        return f"synthetic {data['objective']} n={data['n']}"

    def to_spec(self):
        data = self.cleaned_data
        return ExperimentSpec(
            kind=ObjectiveKind.from_cli(data['objective']),
            algos=data['algo'],
            ks=data['k'],
            data=data.get('data') or None,
            synthetic=None if data.get('data') else self.synthetic_spec(),
            lam=data.get('lam') if data.get('lam') is not None else 0.75,
            eps=data['eps'],
            t_s=data['ts'],
            p_mode=PMode(data['p_mode']),
            reps=data['reps'],
            master_seed=data['seed'],
            workers=data['workers'],
            L_override=data.get('L'),
            strict_pool=data['strict_pool'],
        )
