"""Flags, config files and error reporting shared by the maxsub commands."""
import functools
import logging

from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from ..exceptions import DataParseError, MaxsubError
from ..forms import ExperimentForm
from ..solvers.registry import SOLVER_CHOICES

logger = logging.getLogger(__name__)

# form field names that differ from the flag names
KEY_ALIASES = {'lambda': 'lam', 'p-mode': 'p_mode', 'strict-pool': 'strict_pool'}

EXIT_CONFIG = 1
EXIT_IO = 2


def add_instance_arguments(parser):
    parser.add_argument('--objective', choices=['coverage', 'facility', 'cut'], help='Objective function')
    parser.add_argument('--data', help='Similarity CSV (coverage, facility) or edge list (cut)')
    parser.add_argument('--n', type=int, help='Size of a synthetic instance, used when --data is absent')
    parser.add_argument('--density', type=float, help='Edge density of a synthetic graph')
    parser.add_argument('--lambda', dest='lam', type=float, help='Diversity weight of coverage-diversity')
    parser.add_argument('--seed', type=int, help='Master seed')


def add_solver_arguments(parser, many=False):
    parser.add_argument('--k', help='Cardinality bound' + (' (comma-separated list allowed)' if many else ''))
    parser.add_argument('--eps', type=float, help='Accuracy parameter in (0, 1)')
    parser.add_argument('--ts', type=float, help='Flip point in [0, 1]')
    parser.add_argument('--algo', help=f'One of {", ".join(SOLVER_CHOICES)}' + (' (comma-separated list allowed)' if many else ''))
    parser.add_argument('--p-mode', dest='p_mode', choices=['theoretical', 'practical'], help='Sample size rule')
    parser.add_argument('--L', dest='L', type=int, help='Override the local search iteration count')
    parser.add_argument('--strict-pool', dest='strict_pool', action='store_true', default=None,
                        help='Let guided stochastic greedy sample elements already selected')


def read_config_file(path):
    """Flat ``key=value`` file, one pair per line, ``#`` starts a comment."""
    values = {}
    with open(path) as handle:
        for line_no, line in enumerate(handle, start=1):
            text = line.split('#', 1)[0].strip()
            if not text:
                continue
            if '=' not in text:
                raise DataParseError(f'expected key=value, got {text!r}', line=line_no)
            key, value = (part.strip() for part in text.split('=', 1))
            if not key:
                raise DataParseError('empty key', line=line_no)
            values[KEY_ALIASES.get(key, key.replace('-', '_'))] = value
    return values


def build_form(options, config=None):
    """Merge config-file values under explicit flags and validate them."""
    data = dict(config or {})
    for name in ExperimentForm.base_fields:
        value = options.get(name)
        if value is not None:
            data[name] = value
    form = ExperimentForm(data)
    if not form.is_valid():
        messages = []
        for field, errors in form.errors.items():
            label = 'options' if field == '__all__' else field
            messages.append(f"{label}: {' '.join(errors)}")
        raise CommandError('; '.join(messages), returncode=EXIT_CONFIG)
    return form


def reports_errors(handle):
    """Turn library errors into CommandError with the documented exit codes."""
    @functools.wraps(handle)
    def wrapper(self, *args, **options):
        try:
            return handle(self, *args, **options)
        except CommandError:
            raise
        except OSError as exc:
            logger.error('I/O failure: %s', exc)
            raise CommandError(str(exc), returncode=EXIT_IO) from exc
        except (MaxsubError, ValidationError, ValueError) as exc:
            raise CommandError(str(exc), returncode=EXIT_CONFIG) from exc
    return wrapper
