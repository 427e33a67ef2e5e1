from django.core.management.base import BaseCommand, CommandError

from maxsub.bruteforce import brute_force_opt
from maxsub.conf import get_setting
from maxsub.management.options import add_instance_arguments, build_form, reports_errors
from maxsub.objectives import build_objective
from maxsub.oracle import OracleHandle, make_ground_set


class Command(BaseCommand):
    help = 'Find the exact optimum of a small instance by enumeration'

    def add_arguments(self, parser):
        add_instance_arguments(parser)
        parser.add_argument('--k', help='Cardinality bound')

    @reports_errors
    def handle(self, *args, **options):
        spec = build_form(options).to_spec()
        if len(spec.ks) != 1:
            raise CommandError('bruteforce takes a single --k', returncode=1)
        inst = spec.instance()
        k = spec.ks[0]
        handle = OracleHandle(build_objective(inst), make_ground_set(inst.n, min(k, inst.n)))
        cert = brute_force_opt(handle, k, max_n=get_setting('BRUTE_FORCE_MAX_N'))
        elements = ' '.join(str(u) for u in sorted(cert.opt_set))
        self.stdout.write(self.style.SUCCESS(f'optimum={cert.opt_value:.9g} set=[{elements}]'))
        self.stdout.write(f'enumerated {cert.enumerated} subsets')
