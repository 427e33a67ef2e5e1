"""CSV tables and the value-vs-k SVG chart."""
import csv
import logging
from dataclasses import dataclass
from itertools import groupby

from django.template.loader import render_to_string

from .exceptions import DataParseError, EmptyInputError
from .harness import RunRecord, SummaryRow

logger = logging.getLogger(__name__)

RECORD_HEADER = ['algo', 'k', 'seed', 'value', 'queries', 'wall_ms', 'failed']
SUMMARY_HEADER = ['algo', 'k', 'mean_value', 'std_value', 'mean_queries', 'failure_rate']

WIDTH, HEIGHT = 640, 400
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 150, 20, 50
PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd', '#8c564b', '#e377c2', '#17becf']


def _fmt(x):
    return format(x, '.9g')


def _record_row(r):
    return [r.algo, r.k, r.seed, _fmt(r.value), r.queries, _fmt(r.wall_ms), int(bool(r.failed))]


def _summary_row(r):
    return [r.algo, r.k, _fmt(r.mean_value), _fmt(r.std_value), _fmt(r.mean_queries), _fmt(r.failure_rate)]


def write_csv(rows, path):
    """Records or summary rows; an empty list writes the record header only."""
    rows = list(rows)
    summary = bool(rows) and isinstance(rows[0], SummaryRow)
    with open(path, 'w', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(SUMMARY_HEADER if summary else RECORD_HEADER)
        for row in rows:
            writer.writerow(_summary_row(row) if summary else _record_row(row))
    logger.debug('wrote %d rows to %s', len(rows), path)


def read_csv(path):
    with open(path, newline='') as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        rows = []
        for line_no, row in enumerate(reader, start=2):
            try:
                if header == RECORD_HEADER:
                    algo, k, seed, value, queries, wall_ms, failed = row
                    rows.append(RunRecord(algo, int(k), int(seed), float(value), int(queries),
                                          float(wall_ms), failed == '1'))
                elif header == SUMMARY_HEADER:
                    algo, k, mean_value, std_value, mean_queries, failure_rate = row
                    rows.append(SummaryRow(algo, int(k), float(mean_value), float(std_value),
                                           float(mean_queries), float(failure_rate)))
                else:
                    raise DataParseError(f'unrecognised header {header!r}', line=1)
            except ValueError as exc:
                if isinstance(exc, DataParseError):
                    raise
                raise DataParseError(str(exc), line=line_no) from None
    return rows


@dataclass
class Series:
    algo: str
    color: str
    points: list
    line: str
    band: str
    legend_y: float


@dataclass
class ChartGeometry:
    """Fixed viewport transform from (k, value) to pixel coordinates."""
    k_min: float
    k_max: float
    y_min: float
    y_max: float

    @property
    def plot_width(self):
        return WIDTH - MARGIN_LEFT - MARGIN_RIGHT

    @property
    def plot_height(self):
        return HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    @property
    def scale_y(self):
        return self.plot_height / (self.y_max - self.y_min)

    def x(self, k):
        if self.k_max == self.k_min:
            return MARGIN_LEFT + self.plot_width / 2
        return MARGIN_LEFT + (k - self.k_min) / (self.k_max - self.k_min) * self.plot_width

    def y(self, value):
        return MARGIN_TOP + (self.y_max - value) * self.scale_y


def chart_geometry(table):
    if not table:
        raise EmptyInputError('nothing to plot')
    lows = [r.mean_value - r.std_value for r in table]
    highs = [r.mean_value + r.std_value for r in table]
    y_min, y_max = min(min(lows), 0.0), max(highs)
    if y_max <= y_min:
        y_max = y_min + 1.0
    ks = [r.k for r in table]
    return ChartGeometry(min(ks), max(ks), y_min, y_max)


def chart_context(table):
    geometry = chart_geometry(table)
    series = []
    ordered = sorted(table, key=lambda r: (r.algo, r.k))
    for index, (algo, rows) in enumerate(groupby(ordered, key=lambda r: r.algo)):
        rows = list(rows)
        points = [(geometry.x(r.k), geometry.y(r.mean_value)) for r in rows]
        upper = [(geometry.x(r.k), geometry.y(r.mean_value + r.std_value)) for r in rows]
        lower = [(geometry.x(r.k), geometry.y(r.mean_value - r.std_value)) for r in reversed(rows)]
        series.append(Series(
            algo=algo,
            color=PALETTE[index % len(PALETTE)],
            points=[{'x': f'{x:.3f}', 'y': f'{y:.3f}'} for x, y in points],
            line=' '.join(f'{x:.3f},{y:.3f}' for x, y in points),
            band=' '.join(f'{x:.3f},{y:.3f}' for x, y in upper + lower),
            legend_y=MARGIN_TOP + 20 * index + 10,
        ))
    ks = sorted({r.k for r in table})
    return {
        'width': WIDTH,
        'height': HEIGHT,
        'left': MARGIN_LEFT,
        'top': MARGIN_TOP,
        'right': WIDTH - MARGIN_RIGHT,
        'bottom': HEIGHT - MARGIN_BOTTOM,
        'legend_x': WIDTH - MARGIN_RIGHT + 15,
        'series': series,
        'x_ticks': [{'label': k, 'x': f'{geometry.x(k):.3f}'} for k in ks],
        'y_ticks': [{'label': _fmt(v), 'y': f'{geometry.y(v):.3f}'} for v in (geometry.y_min, geometry.y_max)],
        'geometry': geometry,
    }


def render_svg_string(table):
    return render_to_string('maxsub/report.svg', chart_context(table))


def render_svg(table, path):
    """Mean value against k per algorithm with a ±1 std band."""
    with open(path, 'w') as handle:
        handle.write(render_svg_string(table))
