from django.core.management.base import BaseCommand

from maxsub.exceptions import ConfigError
from maxsub.loaders import write_edge_list, write_similarity_csv
from maxsub.management.options import reports_errors
from maxsub.objectives import ObjectiveKind, SyntheticSpec, gen_synthetic
from maxsub.rng import RngStream


class Command(BaseCommand):
    help = 'Write a synthetic instance as a similarity CSV or an edge list'

    def add_arguments(self, parser):
        parser.add_argument('--objective', choices=['coverage', 'facility', 'cut'], required=True)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--density', type=float, default=0.5)
        parser.add_argument('--lambda', dest='lam', type=float, default=0.75)
        parser.add_argument('--weight-low', dest='weight_low', type=float, default=0.0)
        parser.add_argument('--weight-high', dest='weight_high', type=float, default=1.0)
        parser.add_argument('--dim', type=int, default=25, help='Feature dimension of similarity instances')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--out', required=True)

    @reports_errors
    def handle(self, *args, **options):
        if options['seed'] < 0:
            raise ConfigError('seed must be non-negative')
        kind = ObjectiveKind.from_cli(options['objective'])
        spec = SyntheticSpec(
            kind=kind,
            n=options['n'],
            density=options['density'],
            lam=options['lam'],
            weight_low=options['weight_low'],
            weight_high=options['weight_high'],
            dim=options['dim'],
        )
        inst = gen_synthetic(spec, RngStream(options['seed']))
        if kind.is_graph:
            write_edge_list(inst, options['out'])
        else:
            write_similarity_csv(inst, options['out'])
        self.stdout.write(self.style.SUCCESS(f"Wrote {kind.value} instance with n={inst.n} to {options['out']}"))
