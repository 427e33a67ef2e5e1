from django.core.management.base import BaseCommand, CommandError

from maxsub.bruteforce import brute_force_opt
from maxsub.conf import get_setting
from maxsub.harness import RunRecord, run_single
from maxsub.management.options import add_instance_arguments, add_solver_arguments, build_form, reports_errors
from maxsub.objectives import build_objective
from maxsub.oracle import OracleHandle, make_ground_set
from maxsub.reporting import write_csv


class Command(BaseCommand):
    help = 'Run one solver once and print its value and query count'

    def add_arguments(self, parser):
        add_instance_arguments(parser)
        add_solver_arguments(parser)
        parser.add_argument('--ratio', action='store_true', help='Divide by the brute-force optimum (small instances)')
        parser.add_argument('--out', help='Write the run record as CSV')

    @reports_errors
    def handle(self, *args, **options):
        form = build_form(options)
        spec = form.to_spec()
        if len(spec.ks) != 1 or len(spec.algos) != 1:
            raise CommandError('solve takes a single --k and a single --algo', returncode=1)
        inst = spec.instance()
        k, algo = spec.ks[0], spec.algos[0]
        if k > inst.n:
            raise CommandError(f'k={k} exceeds the instance size {inst.n}', returncode=1)

        record = run_single(inst, algo, spec.config(k, spec.master_seed))
        status = 'FAILED' if record.failed else 'ok'
        self.stdout.write(
            self.style.SUCCESS(
                f'{algo} k={k}: value={record.value:.9g} queries={record.queries} '
                f'wall_ms={record.wall_ms:.1f} status={status}'
            )
        )

        if options['ratio']:
            self._report_ratio(inst, k, record)
        if options['out']:
            write_csv([record], options['out'])
            self.stdout.write(self.style.SUCCESS(f"Wrote {options['out']}"))

    def _report_ratio(self, inst, k, record: RunRecord):
        limit = get_setting('BRUTE_FORCE_MAX_N')
        if inst.n > limit:
            self.stdout.write(self.style.WARNING(f'Ratio skipped: n={inst.n} exceeds the enumeration limit {limit}'))
            return
        handle = OracleHandle(build_objective(inst), make_ground_set(inst.n, k))
        cert = brute_force_opt(handle, k, max_n=limit)
        ratio = record.value / cert.opt_value if cert.opt_value > 0 else 1.0
        self.stdout.write(self.style.SUCCESS(f'optimum={cert.opt_value:.9g} ratio={ratio:.6f}'))
