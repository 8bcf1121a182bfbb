'''Timing comparison of the pure-python and compiled bitmask lanes.

Runs identical deterministic workloads through finspec._bits_py and,
when the extension built, finspec._fastbits, checks that both lanes
return the same answers, and prints a table with speedups.

    python3 benchmarks/bench_backends.py            # standard sizes
    python3 benchmarks/bench_backends.py --full     # adds the 7-point run
'''

import argparse
import hashlib
import time

from finspec import _bits_py as pure
from finspec.duality import downset_lattice
from finspec.enumeration import enumerate_posets

try:
    from finspec import _fastbits as fast
except ImportError:
    fast = None


def digest(value):
    return hashlib.sha256(repr(value).encode()).hexdigest()[:12]


def canonical_inputs():
    return [rows for rows in pure.labeled_stream(5)]


def downset_inputs():
    return [rows for rows in pure.unlabeled_reps(6)]


def lattice_inputs():
    out = []
    for n in range(6):
        for poset in enumerate_posets(n):
            lat = downset_lattice(poset)
            assert lat._pos is None  # ascending construction order
            out.append((lat.down, lat.up))
    return out


def run_lattice_helpers(lane, shapes):
    acc = []
    for down, up in shapes:
        size = len(down)
        acc.append(lane.pseudocomplement_vector(down, None, 0))
        acc.append(lane.prime_element_mask(down, None))
        acc.append(lane.distributive_witness(down, up, None))
        acc.append(tuple(lane.implication_index(down, None, a, b)
                         for a in range(size) for b in range(size)))
    return digest(acc)


WORKLOADS = [
    ('enumerate unlabeled n=5',
     lambda lane, data: digest(lane.unlabeled_reps(5)), None),
    ('enumerate unlabeled n=6',
     lambda lane, data: digest(lane.unlabeled_reps(6)), None),
    ('count labeled n=6',
     lambda lane, data: lane.count_labeled(6), None),
    ('canonical keys, all labeled n=5',
     lambda lane, data: digest([lane.canonical_key(rows) for rows in data]),
     canonical_inputs),
    ('down-set masks, unlabeled n=6',
     lambda lane, data: digest([lane.downset_masks(rows) for rows in data]),
     downset_inputs),
    ('lattice helpers, lattices to n=5',
     run_lattice_helpers, lattice_inputs),
]

FULL_WORKLOADS = [
    ('enumerate unlabeled n=7',
     lambda lane, data: digest(lane.unlabeled_reps(7)), None),
]


def time_workload(lane, body, data, repeats):
    best = None
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = body(lane, data)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument('--full', action='store_true',
                        help='add the long 7-point enumeration')
    parser.add_argument('--repeats', type=int, default=3,
                        help='timings keep the best of this many runs')
    args = parser.parse_args()

    workloads = WORKLOADS + (FULL_WORKLOADS if args.full else [])
    lanes = [('pure', pure)] + ([('compiled', fast)] if fast else [])
    print('lanes: ' + ', '.join('%s (%s)' % (name, lane.BACKEND)
                                for name, lane in lanes))
    if fast is None:
        print('compiled extension not built; showing the pure lane only')
    print()
    header = '%-36s %10s %10s %9s' % ('workload', 'pure', 'compiled', 'speedup')
    print(header)
    print('-' * len(header))
    for label, body, prepare in workloads:
        repeats = 1 if label.endswith('n=7') else args.repeats
        data = prepare() if prepare else None
        times = {}
        results = {}
        for name, lane in lanes:
            times[name], results[name] = time_workload(lane, body, data, repeats)
        if fast is not None and results['pure'] != results['compiled']:
            raise SystemExit('lane outputs differ on %r' % label)
        if fast is not None:
            print('%-36s %9.4fs %9.4fs %8.1fx'
                  % (label, times['pure'], times['compiled'],
                     times['pure'] / max(times['compiled'], 1e-9)))
        else:
            print('%-36s %9.4fs %10s %9s' % (label, times['pure'], '-', '-'))
    print()
    print('identical outputs across lanes on every workload'
          if fast is not None else 'install with the extension to compare')


if __name__ == '__main__':
    main()
