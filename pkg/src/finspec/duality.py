'''Finite Stone duality, both directions.

A poset yields its lattice of down-sets; a lattice yields its poset of
proper prime ideals ordered by inclusion.  On the distributive side the
two trips compose to isomorphisms, and the round-trip operations verify
that instead of assuming it: stone_roundtrip hands back None whenever
the canonical comparison map fails to be an isomorphism.

Numbering is deterministic everywhere: down-sets, up-sets and prime
ideals are sorted ascending by member mask, which is also a linear
extension of inclusion.
'''

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import InputError, ResourceLimitError
from .lattice import Lattice
from .poset import Poset

DOWNSET_CAP = 4096
ENVELOPE_MAX_POINTS = 12


def _set_label(mask):
    return '{%s}' % ','.join(str(i) for i in kernels.pure.bit_indices(mask))


def _inclusion_lattice(masks):
    rows = []
    for s in masks:
        row = 0
        for j, t in enumerate(masks):
            if s & ~t == 0:
                row |= 1 << j
        rows.append(row)
    return Lattice.from_up_rows(rows, labels=[_set_label(m) for m in masks])


@lru_cache(maxsize=8192)
def _downset_lattice_cached(poset, cap):
    masks = kernels.downset_masks(poset.up, cap)
    return _inclusion_lattice(masks), tuple(masks)


def downset_lattice(poset, cap=DOWNSET_CAP):
    'Lattice of down-sets ordered by inclusion; element i holds downset_masks(P)[i].'
    return _downset_lattice_cached(poset, cap)[0]


def downset_masks(poset, cap=DOWNSET_CAP):
    'The member masks behind downset_lattice, in element order.'
    return _downset_lattice_cached(poset, cap)[1]


def qccl_lattice(poset, cap=DOWNSET_CAP):
    'Lattice of up-sets (the closed constructible sets) ordered by inclusion.'
    masks = sorted(poset.full ^ d for d in kernels.downset_masks(poset.up, cap))
    return _inclusion_lattice(masks)


def upset_masks(poset, cap=DOWNSET_CAP):
    return tuple(sorted(poset.full ^ d for d in kernels.downset_masks(poset.up, cap)))


def spec_poset(lattice):
    'Poset of proper prime ideals under inclusion, ascending by member mask.'
    primes = lattice.prime_ideals()
    rows = []
    for ideal in primes:
        row = 0
        for j, other in enumerate(primes):
            if ideal.mask & ~other.mask == 0:
                row |= 1 << j
        rows.append(row)
    return Poset.from_up_rows(rows)


def d_map(lattice, a):
    'Point set of spec_poset supporting a: the primes that avoid a.'
    lattice._index(a)
    return frozenset(i for i, ideal in enumerate(lattice.prime_ideals())
                     if a not in ideal)


@dataclass(frozen=True)
class Isomorphism:
    'Mutually inverse order-preserving assignments between two structures.'
    source: object
    target: object
    forward: tuple
    backward: tuple

    def __post_init__(self):
        src, tgt = self.source, self.target
        if len(self.forward) != src.n or len(self.backward) != tgt.n:
            raise InputError('isomorphism assignments must be total')
        for a in range(src.n):
            if self.backward[self.forward[a]] != a:
                raise InputError('assignments are not mutually inverse')
        for b in range(tgt.n):
            if self.forward[self.backward[b]] != b:
                raise InputError('assignments are not mutually inverse')
        for a in range(src.n):
            row = src.up[a]
            image = 0
            for j in range(src.n):
                if row >> j & 1:
                    image |= 1 << self.forward[j]
            if image != tgt.up[self.forward[a]]:
                raise InputError('assignment does not preserve the order both ways')


def stone_roundtrip(lattice):
    '''Isomorphism of L onto the down-set lattice of its prime spectrum, or None.

    The comparison map sends a to the set of primes avoiding a.  It is an
    isomorphism exactly for the distributive lattices, which the caller
    can cross-check against is_distributive.
    '''
    primes = lattice.prime_ideals()
    spectrum = spec_poset(lattice)
    target = downset_lattice(spectrum)
    masks = downset_masks(spectrum)
    index = {mask: i for i, mask in enumerate(masks)}
    forward = []
    for a in range(lattice.n):
        image = 0
        for i, ideal in enumerate(primes):
            if not ideal.mask >> a & 1:
                image |= 1 << i
        forward.append(index[image])
    if len(set(forward)) != lattice.n or target.n != lattice.n:
        return None
    backward = [0] * target.n
    for a, b in enumerate(forward):
        backward[b] = a
    for a in range(lattice.n):
        for b in range(lattice.n):
            if bool(lattice.up[a] >> b & 1) != bool(target.up[forward[a]] >> forward[b] & 1):
                return None
    return Isomorphism(lattice, target, tuple(forward), tuple(backward))


def poset_roundtrip(poset):
    'Does P come back from the prime spectrum of its down-set lattice?'
    return poset.isomorphic_to(spec_poset(downset_lattice(poset)))


def boolean_envelope(poset, max_points=ENVELOPE_MAX_POINTS):
    '''Powerset lattice of the carrier plus the down-set lattice embedding.

    At finite scale the enveloping Boolean algebra of the down-set
    lattice is the full powerset; the returned tuple maps down-set
    lattice elements to powerset elements.
    '''
    if poset.n > max_points:
        raise ResourceLimitError('boolean envelope capped at %d points' % max_points)
    masks = list(range(1 << poset.n))
    envelope = _inclusion_lattice(masks)
    embedding = tuple(int(m) for m in downset_masks(poset))
    return envelope, embedding
