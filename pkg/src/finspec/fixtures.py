'''Named structures used by tests, docs and the command line.

Poset fixtures: v3 (two minimal points under one top), l3 (one bottom
under two maximal points), c2 (two-point chain), a2 (two-point
antichain), d4 (diamond).  Lattice fixtures: m3 and n5, the two minimal
non-distributive lattices, plus chain<k> and bool<k> families.
'''

import re

from .errors import InputError, ResourceLimitError
from .lattice import Lattice
from .poset import Poset

BOOL_MAX_ATOMS = 12


def v3():
    return Poset(3, [(0, 2), (1, 2)])


def l3():
    return Poset(3, [(0, 1), (0, 2)])


def c2():
    return chain_poset(2)


def a2():
    return antichain(2)


def d4():
    return Poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def chain_poset(k):
    if k < 0:
        raise InputError('chain length must be non-negative')
    return Poset(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k):
    if k < 0:
        raise InputError('antichain size must be non-negative')
    return Poset(k)


def m3():
    return Lattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def n5():
    return Lattice(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])


def chain_lattice(k):
    if k < 1:
        raise InputError('a chain lattice needs at least one element')
    return Lattice(k, [(i, i + 1) for i in range(k - 1)])


def bool_lattice(k):
    'Powerset of k atoms ordered by inclusion, elements numbered by mask.'
    if k < 0:
        raise InputError('bool lattice needs a non-negative atom count')
    if k > BOOL_MAX_ATOMS:
        raise ResourceLimitError('bool lattice capped at %d atoms' % BOOL_MAX_ATOMS)
    size = 1 << k
    rows = []
    for s in range(size):
        mask = 0
        for t in range(size):
            if s & ~t == 0:
                mask |= 1 << t
        rows.append(mask)
    labels = ['{%s}' % ','.join(str(i) for i in range(k) if s >> i & 1)
              for s in range(size)]
    return Lattice.from_up_rows(rows, labels=labels)


_PLAIN = {
    'v3': v3, 'l3': l3, 'c2': c2, 'a2': a2, 'd4': d4,
    'm3': m3, 'n5': n5,
}


def builtin(name):
    'Resolve a fixture name like v3, m3, chain4 or bool3.'
    key = name.lower()
    if key in _PLAIN:
        return _PLAIN[key]()
    got = re.fullmatch(r'(chain|bool)(\d+)', key)
    if got:
        k = int(got.group(2))
        return chain_lattice(k) if got.group(1) == 'chain' else bool_lattice(k)
    raise InputError('unknown builtin structure %r' % (name,))


def builtin_names():
    return sorted(_PLAIN) + ['chain<k>', 'bool<k>']
