import csv
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from maxsub.loaders import load_edge_list, load_similarity_csv
from maxsub.models import Experiment


class CommandTestMixin:

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)

    def path(self, name):
        return os.path.join(self._tmp.name, name)

    def write(self, name, text):
        path = self.path(name)
        with open(path, 'w') as handle:
            handle.write(text)
        return path

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO(), **options)
        return out.getvalue()


class GenCommandTests(CommandTestMixin, SimpleTestCase):

    def test_writes_edge_list(self):
        out = self.path('g.txt')
        self.call('gen', objective='cut', n=15, density=0.3, seed=4, out=out)
        self.assertEqual(load_edge_list(out).n, 15)

    def test_writes_similarity_csv(self):
        out = self.path('s.csv')
        self.call('gen', objective='facility', n=8, seed=1, out=out)
        self.assertEqual(load_similarity_csv(out).payload.shape, (8, 8))

    def test_same_seed_same_file(self):
        first, second = self.path('a.txt'), self.path('b.txt')
        self.call('gen', objective='cut', n=10, seed=2, out=first)
        self.call('gen', objective='cut', n=10, seed=2, out=second)
        with open(first) as a, open(second) as b:
            self.assertEqual(a.read(), b.read())

    def test_invalid_size(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('gen', objective='cut', n=1, out=self.path('x.txt'))
        self.assertEqual(ctx.exception.returncode, 1)


class SolveCommandTests(CommandTestMixin, SimpleTestCase):

    def test_synthetic_run(self):
        output = self.call('solve', objective='cut', n=20, k='3', algo='samplegreedy', seed=1)
        self.assertIn('samplegreedy k=3: value=', output)
        self.assertIn('status=ok', output)

    def test_ratio_on_small_file(self):
        data = self.write('path.txt', '0 1 1\n1 2 1\n')
        output = self.call('solve', objective='cut', data=data, k='1', algo='localsearch', ratio=True)
        self.assertIn('optimum=2 ratio=1.000000', output)

    def test_ratio_skipped_for_large_instance(self):
        output = self.call('solve', objective='cut', n=30, k='2', algo='randomgreedy', ratio=True)
        self.assertIn('Ratio skipped', output)

    def test_writes_record(self):
        out = self.path('run.csv')
        self.call('solve', objective='coverage', n=12, k='2', algo='randomgreedy', out=out)
        with open(out) as handle:
            rows = list(csv.reader(handle))
        self.assertEqual(rows[0], ['algo', 'k', 'seed', 'value', 'queries', 'wall_ms', 'failed'])
        self.assertEqual(len(rows), 2)

    def test_missing_file_is_io_error(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('solve', objective='cut', data=self.path('missing.txt'), k='2')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_invalid_k(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('solve', objective='cut', n=10, k='0')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_k_above_n(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('solve', objective='cut', n=10, k='11')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_both_sources(self):
        data = self.write('path.txt', '0 1 1\n')
        with self.assertRaises(CommandError) as ctx:
            self.call('solve', objective='cut', data=data, n=5, k='1')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_malformed_data_is_config_error(self):
        data = self.write('bad.txt', '0 x 1\n')
        with self.assertRaises(CommandError) as ctx:
            self.call('solve', objective='cut', data=data, k='1')
        self.assertEqual(ctx.exception.returncode, 1)


class BruteForceCommandTests(CommandTestMixin, SimpleTestCase):

    def test_path_graph(self):
        data = self.write('path.txt', '0 1 1\n1 2 1\n')
        output = self.call('bruteforce', objective='cut', data=data, k='1')
        self.assertIn('optimum=2 set=[1]', output)
        self.assertIn('enumerated 4 subsets', output)


class BenchCommandTests(CommandTestMixin, TestCase):

    CONFIG = (
        '# small reproducibility run\n'
        'objective=cut\n'
        'n=14\n'
        'density=0.4\n'
        'k=1,2,3\n'
        'algo=randomgreedy,samplegreedy\n'
        'reps=2\n'
        'seed=21\n'
    )

    def _rows_without_wall_time(self, path):
        with open(path) as handle:
            return [row[:5] + row[6:] for row in csv.reader(handle)]

    def test_rerun_gives_identical_records(self):
        config = self.write('bench.cfg', self.CONFIG)
        first, second = self.path('one.csv'), self.path('two.csv')
        self.call('bench', config=config, out=first)
        self.call('bench', config=config, out=second)
        rows = self._rows_without_wall_time(first)
        self.assertEqual(len(rows), 13)
        self.assertEqual(rows, self._rows_without_wall_time(second))

    def test_flags_override_config(self):
        config = self.write('bench.cfg', self.CONFIG)
        output = self.call('bench', config=config, reps=1, algo='randomgreedy')
        self.assertIn('Summary: 3 runs over 3 (algorithm, k) cells', output)

    def test_summary_svg_and_store(self):
        summary, svg = self.path('summary.csv'), self.path('plot.svg')
        output = self.call('bench', objective='facility', n=12, k='2,4', algo='samplegreedy',
                           reps=2, summary=summary, svg=svg, store=True)
        self.assertIn('Stored experiment #', output)
        experiment = Experiment.objects.get()
        self.assertEqual(experiment.status, 'DONE')
        self.assertEqual(experiment.runs.count(), 4)
        with open(summary) as handle:
            self.assertEqual(len(handle.read().splitlines()), 3)
        with open(svg) as handle:
            self.assertIn('data-algo="samplegreedy"', handle.read())

    def test_bad_config_line(self):
        config = self.write('bench.cfg', 'objective=cut\nthis line is wrong\n')
        with self.assertRaises(CommandError) as ctx:
            self.call('bench', config=config)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('line 2', str(ctx.exception))

    def test_missing_config(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('bench', config=self.path('nope.cfg'))
        self.assertEqual(ctx.exception.returncode, 2)
