'''Reading and writing posets and lattices.

Text format, one structure per file::

    # two bottoms under a shared top
    poset 3
    0 < 2
    1 < 2

The header names the kind (poset or lattice) and the point count; every
other line is a relation pair, a comment, or blank.  Lattice files may
also declare the expected bounds::

    lattice 4
    0 < 1
    0 < 2
    1 < 3
    2 < 3
    bottom 0
    top 3

The declared bounds are checked against the ones derived from the
order, so a stale header fails loudly instead of shifting meaning.

JSON carries the same data with an explicit kind discriminator::

    {"kind": "poset", "size": 3, "less_than": [[0, 2], [1, 2]]}

DOT output draws the covering relation only, bottom-to-top, which is
the usual way to draw a Hasse diagram.
'''

import json
import re

from .errors import InputError
from .lattice import Lattice
from .poset import Poset

_HEADER = re.compile(r'^(poset|lattice)\s+(\d+)$')
_PAIR = re.compile(r'^(\d+)\s*<\s*(\d+)$')
_BOUND = re.compile(r'^(bottom|top)\s+(\d+)$')


def parse_text(text):
    'Parse the text format into a Poset or a Lattice, per its header.'
    kind = None
    size = 0
    pairs = []
    bounds = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            if kind is not None:
                raise InputError('line %d: second header' % lineno)
            kind, size = m.group(1), int(m.group(2))
            continue
        if kind is None:
            raise InputError('line %d: expected a "poset N" or "lattice N" '
                             'header before %r' % (lineno, line))
        m = _PAIR.match(line)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            if not (i < size and j < size):
                raise InputError('line %d: pair (%d, %d) out of range for '
                                 '%d points' % (lineno, i, j, size))
            pairs.append((i, j))
            continue
        m = _BOUND.match(line)
        if m:
            if kind != 'lattice':
                raise InputError('line %d: %s declarations belong to '
                                 'lattice files' % (lineno, m.group(1)))
            if m.group(1) in bounds:
                raise InputError('line %d: duplicate %s declaration'
                                 % (lineno, m.group(1)))
            if int(m.group(2)) >= size:
                raise InputError('line %d: %s %s out of range for %d points'
                                 % (lineno, m.group(1), m.group(2), size))
            bounds[m.group(1)] = int(m.group(2))
            continue
        raise InputError('line %d: cannot parse %r' % (lineno, line))
    if kind is None:
        raise InputError('missing "poset N" or "lattice N" header')
    if kind == 'poset':
        return Poset(size, pairs)
    return Lattice(size, pairs, bottom=bounds.get('bottom'),
                   top=bounds.get('top'))


def _require(obj, key, types):
    if key not in obj:
        raise InputError('json object is missing %r' % key)
    if not isinstance(obj[key], types):
        raise InputError('json field %r has the wrong type' % key)
    return obj[key]


def from_json_obj(obj):
    'Decode one structure from a parsed json object.'
    if not isinstance(obj, dict):
        raise InputError('json input must be an object')
    kind = _require(obj, 'kind', str)
    if kind not in ('poset', 'lattice'):
        raise InputError('json kind must be "poset" or "lattice", got %r' % kind)
    size = _require(obj, 'size', int)
    raw_pairs = _require(obj, 'less_than', list)
    pairs = []
    for entry in raw_pairs:
        if not (isinstance(entry, list) and len(entry) == 2
                and all(isinstance(v, int) for v in entry)):
            raise InputError('less_than entries must be [i, j] pairs, got %r'
                             % (entry,))
        pairs.append(tuple(entry))
    if kind == 'poset':
        for key in ('bottom', 'top'):
            if key in obj:
                raise InputError('json field %r belongs to lattices' % key)
        return Poset(size, pairs)
    bottom = obj.get('bottom')
    top = obj.get('top')
    for key, value in (('bottom', bottom), ('top', top)):
        if value is not None and not isinstance(value, int):
            raise InputError('json field %r has the wrong type' % key)
    return Lattice(size, pairs, bottom=bottom, top=top)


def parse_json(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError('invalid json: %s' % exc) from None
    return from_json_obj(obj)


def parse(text):
    'Parse either format; json when the first character is a brace.'
    if text.lstrip()[:1] == '{':
        return parse_json(text)
    return parse_text(text)


def read_path(path):
    try:
        with open(path, encoding='utf-8') as handle:
            return parse(handle.read())
    except OSError as exc:
        raise InputError('cannot read %s: %s' % (path, exc.strerror)) from None


# ----------------------------------------------------------------------
# writers


def poset_to_text(poset):
    'Text form listing the covering pairs; closure restores the rest.'
    lines = ['poset %d' % poset.n]
    lines.extend('%d < %d' % pair for pair in poset.covers())
    return '\n'.join(lines) + '\n'


def lattice_to_text(lattice):
    lines = ['lattice %d' % lattice.n]
    lines.extend('%d < %d' % pair for pair in lattice.order_poset().covers())
    lines.append('bottom %d' % lattice.bottom)
    lines.append('top %d' % lattice.top)
    return '\n'.join(lines) + '\n'


def to_json_obj(structure):
    if isinstance(structure, Lattice):
        return {'kind': 'lattice', 'size': structure.n,
                'less_than': [list(pair)
                              for pair in structure.order_poset().covers()],
                'bottom': structure.bottom, 'top': structure.top}
    if isinstance(structure, Poset):
        return {'kind': 'poset', 'size': structure.n,
                'less_than': [list(pair) for pair in structure.covers()]}
    raise InputError('expected a Poset or a Lattice, got %r' % (structure,))


def to_json(structure):
    return json.dumps(to_json_obj(structure), sort_keys=True) + '\n'


def _dot_quote(label):
    return '"%s"' % str(label).replace('\\', '\\\\').replace('"', '\\"')


def to_dot(structure, name='finspec'):
    'Hasse diagram in DOT, drawn upward so maximal points end up on top.'
    if isinstance(structure, Lattice):
        covers = structure.order_poset().covers()
        labels = [structure.label(a) for a in range(structure.n)]
        size = structure.n
    elif isinstance(structure, Poset):
        covers = structure.covers()
        labels = [str(x) for x in range(structure.n)]
        size = structure.n
    else:
        raise InputError('expected a Poset or a Lattice, got %r' % (structure,))
    lines = ['digraph %s {' % name, '  rankdir=BT;']
    for x in range(size):
        lines.append('  %d [label=%s];' % (x, _dot_quote(labels[x])))
    for low, high in covers:
        lines.append('  %d -> %d;' % (low, high))
    lines.append('}')
    return '\n'.join(lines) + '\n'
