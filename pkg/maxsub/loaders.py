"""Reading and writing instance files."""
import csv
import logging

import numpy as np

from .exceptions import ConfigError, DataParseError, ShapeError
from .objectives import Instance, ObjectiveKind

logger = logging.getLogger(__name__)


def load_similarity_csv(path, kind=ObjectiveKind.COVERAGE, lam=0.75):
    """n×n comma-separated similarity matrix, no header; negatives become 0."""
    kind = ObjectiveKind(kind)
    if kind.is_graph:
        raise ConfigError('graph-cut instances are read from edge lists')
    rows = []
    with open(path, newline='') as handle:
        for line_no, row in enumerate(csv.reader(handle), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                values = [float(cell) for cell in row]
            except ValueError:
                raise DataParseError(f'non-numeric cell in {row!r}', line=line_no) from None
            if rows and len(values) != len(rows[0]):
                raise DataParseError(f'expected {len(rows[0])} columns, found {len(values)}', line=line_no)
            rows.append(values)
    if not rows:
        raise ShapeError(f'{path} holds no matrix rows')
    matrix = np.array(rows, dtype=float)
    if matrix.shape[0] != matrix.shape[1]:
        raise ShapeError(f'similarity matrix must be square, got {matrix.shape[0]}x{matrix.shape[1]}')
    negative = int((matrix < 0).sum())
    if negative:
        logger.warning('%s: clamped %d negative similarities to 0', path, negative)
        matrix = np.maximum(matrix, 0.0)
    return Instance(kind, matrix, lam if kind is ObjectiveKind.COVERAGE else None)


def load_edge_list(path, n=None):
    """Undirected weighted graph from ``u v [w]`` lines with 0-based ids.

    Repeated pairs, in either direction, add up. ``n`` fixes the node count;
    otherwise it is one more than the largest id seen.
    """
    edges = []
    with open(path) as handle:
        for line_no, line in enumerate(handle, start=1):
            fields = line.split('#', 1)[0].split()
            if not fields:
                continue
            if len(fields) not in (2, 3):
                raise DataParseError(f'expected "u v w", got {line.strip()!r}', line=line_no)
            try:
                u, v = int(fields[0]), int(fields[1])
            except ValueError:
                raise DataParseError(f'node ids must be integers, got {fields[0]!r} {fields[1]!r}', line=line_no) from None
            try:
                w = float(fields[2]) if len(fields) == 3 else 1.0
            except ValueError:
                raise DataParseError(f'weight must be a number, got {fields[2]!r}', line=line_no) from None
            if u < 0 or v < 0:
                raise DataParseError('node ids must be non-negative', line=line_no)
            if w < 0:
                raise ConfigError(f'line {line_no}: negative weight {w}')
            edges.append((line_no, u, v, w))
    size = n if n is not None else max((max(u, v) for _, u, v, _ in edges), default=-1) + 1
    if size < 1:
        raise ShapeError(f'{path} defines no nodes')
    weights = np.zeros((size, size))
    for line_no, u, v, w in edges:
        if max(u, v) >= size:
            raise DataParseError(f'node id {max(u, v)} exceeds n={size}', line=line_no)
        if u == v:
            logger.warning('%s line %d: dropped self-loop on node %d', path, line_no, u)
            continue
        weights[u, v] += w
        weights[v, u] += w
    return Instance(ObjectiveKind.CUT, weights)


def write_similarity_csv(inst, path):
    with open(path, 'w', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        for row in inst.payload:
            writer.writerow(format(x, '.17g') for x in row)


def write_edge_list(inst, path):
    """One ``u v w`` line per undirected edge, u < v; a header comment keeps n."""
    weights = inst.payload
    with open(path, 'w') as handle:
        handle.write(f'# n={inst.n}\n')
        for u, v in zip(*np.nonzero(np.triu(weights, k=1))):
            handle.write(f'{u} {v} {format(weights[u, v], ".17g")}\n')


def read_node_count(path):
    """``n`` from a ``# n=`` header written by ``write_edge_list``, else None."""
    with open(path) as handle:
        first = handle.readline().strip()
    if first.startswith('# n='):
        try:
            return int(first[4:])
        except ValueError:
            return None
    return None


def load_instance(path, kind, lam=0.75):
    kind = ObjectiveKind(kind)
    if kind.is_graph:
        return load_edge_list(path, n=read_node_count(path))
    return load_similarity_csv(path, kind, lam)
