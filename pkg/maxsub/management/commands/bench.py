import logging

from django.core.management.base import BaseCommand

from maxsub.harness import run_experiment, summarize
from maxsub.management.options import (
    add_instance_arguments, add_solver_arguments, build_form, read_config_file, reports_errors,
)
from maxsub.models import Experiment
from maxsub.reporting import render_svg, write_csv

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Run a seeded benchmark over algorithms, k values and repetitions'

    def add_arguments(self, parser):
        add_instance_arguments(parser)
        add_solver_arguments(parser, many=True)
        parser.add_argument('--reps', type=int, help='Repetitions per (algorithm, k)')
        parser.add_argument('--workers', type=int, help='Worker processes')
        parser.add_argument('--config', help='key=value file; explicit flags take precedence')
        parser.add_argument('--out', help='Write all run records as CSV')
        parser.add_argument('--summary', help='Write the per-(algorithm, k) summary as CSV')
        parser.add_argument('--svg', help='Write the value-vs-k chart')
        parser.add_argument('--store', action='store_true', help='Save the experiment and its runs in the database')

    @reports_errors
    def handle(self, *args, **options):
        config = read_config_file(options['config']) if options['config'] else None
        form = build_form(options, config)
        spec = form.to_spec()

        records = run_experiment(spec)
        table = summarize(records)
        for row in table:
            self.stdout.write(
                f'{row.algo:>12} k={row.k:<4} mean={row.mean_value:.6g} std={row.std_value:.6g} '
                f'queries={row.mean_queries:.6g} failure_rate={row.failure_rate:.3f}'
            )

        if options['out']:
            write_csv(records, options['out'])
        if options['summary']:
            write_csv(table, options['summary'])
        if options['svg']:
            render_svg(table, options['svg'])
        if options['store']:
            experiment = Experiment.store(spec, records, form.source_label())
            self.stdout.write(self.style.SUCCESS(f'Stored experiment #{experiment.pk}'))

        self.stdout.write(self.style.SUCCESS(f'\nSummary: {len(records)} runs over {len(table)} (algorithm, k) cells'))
