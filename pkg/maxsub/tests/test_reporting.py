import os
import tempfile
import xml.etree.ElementTree as ET

from django.test import SimpleTestCase

from maxsub.exceptions import DataParseError, EmptyInputError
from maxsub.harness import RunRecord, SummaryRow
from maxsub.reporting import (
    RECORD_HEADER, SUMMARY_HEADER, chart_geometry, read_csv, render_svg, render_svg_string, write_csv,
)

SVG = '{http://www.w3.org/2000/svg}'


class CsvTests(SimpleTestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)
        self.path = os.path.join(self._tmp.name, 'out.csv')

    def lines(self):
        with open(self.path) as handle:
            return handle.read().split('\n')

    def test_empty_list_writes_header(self):
        write_csv([], self.path)
        self.assertEqual(self.lines(), [','.join(RECORD_HEADER), ''])

    def test_one_line_per_record(self):
        records = [RunRecord('main', k, rep, 1.0 / 3, 100 + rep, 2.5, rep == 0, rep)
                   for k in range(6) for rep in range(8)]
        write_csv(records, self.path)
        lines = self.lines()
        self.assertEqual(len(lines), 50)
        self.assertEqual(lines[-1], '')
        self.assertEqual(lines[1], 'main,0,0,0.333333333,100,2.5,1')

    def test_record_round_trip(self):
        records = [RunRecord('fastls', 4, 2 ** 63 + 5, 12.345678912345, 777, 1.25, False)]
        write_csv(records, self.path)
        loaded, = read_csv(self.path)
        self.assertEqual(loaded.seed, 2 ** 63 + 5)
        self.assertEqual(loaded.value, float(format(12.345678912345, '.9g')))
        self.assertEqual(loaded.queries, 777)
        self.assertFalse(loaded.failed)

    def test_summary_round_trip(self):
        rows = [SummaryRow('main', 10, 2.0, 0.5, 1234.5, 0.125)]
        write_csv(rows, self.path)
        self.assertEqual(self.lines()[0], ','.join(SUMMARY_HEADER))
        self.assertEqual(read_csv(self.path), rows)

    def test_unknown_header(self):
        with open(self.path, 'w') as handle:
            handle.write('a,b\n1,2\n')
        with self.assertRaises(DataParseError):
            read_csv(self.path)

    def test_bad_number_reports_line(self):
        with open(self.path, 'w') as handle:
            handle.write(','.join(RECORD_HEADER) + '\nmain,x,1,1,1,1,0\n')
        with self.assertRaises(DataParseError) as ctx:
            read_csv(self.path)
        self.assertEqual(ctx.exception.line, 2)


class SvgTests(SimpleTestCase):

    table = [
        SummaryRow('main', 10, 5.0, 1.0, 100.0, 0.0),
        SummaryRow('main', 20, 8.0, 0.5, 200.0, 0.0),
        SummaryRow('samplegreedy', 10, 4.0, 0.0, 50.0, 0.0),
        SummaryRow('samplegreedy', 20, 6.0, 2.0, 90.0, 0.0),
    ]

    def test_parses_as_svg(self):
        root = ET.fromstring(render_svg_string(self.table))
        self.assertEqual(root.tag, SVG + 'svg')
        groups = root.findall(f'{SVG}g[@class="series"]')
        self.assertEqual([g.get('data-algo') for g in groups], ['main', 'samplegreedy'])
        for group in groups:
            self.assertEqual(len(group.findall(f'{SVG}circle')), 2)

    def test_band_width_matches_std(self):
        geometry = chart_geometry(self.table)
        root = ET.fromstring(render_svg_string(self.table))
        band = root.find(f'{SVG}g[@data-algo="main"]/{SVG}polygon')
        points = [tuple(map(float, p.split(','))) for p in band.get('points').split()]
        upper_first, lower_first = points[0], points[-1]
        self.assertAlmostEqual(upper_first[0], lower_first[0])
        half = (lower_first[1] - upper_first[1]) / 2
        self.assertAlmostEqual(half, 1.0 * geometry.scale_y, delta=1e-2)

    def test_axis_includes_zero(self):
        self.assertEqual(chart_geometry(self.table).y_min, 0.0)

    def test_single_k_is_centred(self):
        geometry = chart_geometry([SummaryRow('main', 5, 1.0, 0.0, 1.0, 0.0)])
        self.assertEqual(geometry.x(5), 70 + geometry.plot_width / 2)

    def test_writes_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'plot.svg')
            render_svg(self.table, path)
            with open(path) as handle:
                self.assertTrue(handle.read().startswith('<?xml'))

    def test_empty_table(self):
        with self.assertRaises(EmptyInputError):
            render_svg_string([])
