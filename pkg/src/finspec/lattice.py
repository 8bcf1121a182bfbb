'''Finite bounded lattices specified by their order alone.

The constructor closes the relation, checks antisymmetry, locates bottom
and top, and verifies that every pair of elements has a greatest lower
and least upper bound; meet and join are then derived from the order, so
there is a single source of truth.  Absent values (a pseudocomplement or
implication that does not exist) come back as None, never as an error.
'''

from functools import cached_property

from . import kernels
from .errors import InputError
from .poset import Poset


class Lattice:
    'Immutable finite bounded lattice on elements 0..n-1.'

    def __init__(self, n, relation=(), bottom=None, top=None, labels=None):
        if not isinstance(n, int) or n < 1:
            raise InputError('a bounded lattice needs at least one element')
        order = Poset(n, relation)
        self._adopt(order, bottom, top, labels)

    @classmethod
    def from_up_rows(cls, rows, labels=None):
        'Constructor from closed row masks; still validates lattice-ness.'
        self = object.__new__(cls)
        if not rows:
            raise InputError('a bounded lattice needs at least one element')
        self._adopt(Poset.from_up_rows(rows), None, None, labels)
        return self

    def _adopt(self, order, bottom, top, labels):
        n = order.n
        self.n = n
        self.up = order.up
        self.down = order.down
        self.full = order.full
        if labels is not None and len(labels) != n:
            raise InputError('need %d labels, got %d' % (n, len(labels)))
        self.labels = None if labels is None else tuple(labels)

        found_bottom = found_top = None
        for i in range(n):
            if self.up[i] == self.full:
                found_bottom = i
            if self.down[i] == self.full:
                found_top = i
        if found_bottom is None:
            raise InputError('not a lattice: no bottom element')
        if found_top is None:
            raise InputError('not a lattice: no top element')
        if bottom is not None and bottom != found_bottom:
            raise InputError('declared bottom %d but the least element is %d'
                             % (bottom, found_bottom))
        if top is not None and top != found_top:
            raise InputError('declared top %d but the greatest element is %d'
                             % (top, found_top))
        self.bottom = found_bottom
        self.top = found_top

        # None when the numbering is already a linear extension, which is
        # what every internal construction produces and what the compiled
        # kernels require; arbitrary numberings get explicit ranks.
        self._pos = None
        if any(self.down[i] >> (i + 1) for i in range(n)):
            by_rank = sorted(range(n), key=lambda i: (bin(self.down[i]).count('1'), i))
            pos = [0] * n
            for rank, i in enumerate(by_rank):
                pos[i] = rank
            self._pos = pos

        for a in range(n):
            for b in range(a + 1, n):
                if kernels.pure._set_max(self.down[a] & self.down[b],
                                         self.down, self._pos) < 0:
                    raise InputError('not a lattice: %d and %d have no meet' % (a, b))
                if kernels.pure._set_min(self.up[a] & self.up[b],
                                         self.up, self._pos) < 0:
                    raise InputError('not a lattice: %d and %d have no join' % (a, b))

    def __reduce__(self):
        return (_rebuild_lattice, (self.up, self.labels))

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.up == other.up

    def __hash__(self):
        return hash(('lattice', self.up))

    def __repr__(self):
        return 'Lattice(%d, %r)' % (self.n, self.order_poset().covers())

    def _index(self, a):
        if not (isinstance(a, int) and 0 <= a < self.n):
            raise InputError('element %r out of range for %d elements' % (a, self.n))

    def label(self, a):
        self._index(a)
        return str(a) if self.labels is None else self.labels[a]

    def order_poset(self):
        'The order reduct as a plain poset.'
        return Poset.from_up_rows(self.up)

    def leq(self, a, b):
        self._index(a)
        self._index(b)
        return bool(self.up[a] >> b & 1)

    def meet(self, a, b):
        self._index(a)
        self._index(b)
        got = kernels.pure._set_max(self.down[a] & self.down[b], self.down, self._pos)
        assert got >= 0, 'validated lattice lost a meet'
        return got

    def join(self, a, b):
        self._index(a)
        self._index(b)
        got = kernels.pure._set_min(self.up[a] & self.up[b], self.up, self._pos)
        assert got >= 0, 'validated lattice lost a join'
        return got

    def dual(self):
        'Order dual; swaps meet with join and bottom with top.'
        return Lattice.from_up_rows(self.down, labels=self.labels)

    # ------------------------------------------------------------------
    # derived algebraic structure

    @cached_property
    def _distributive_witness(self):
        return kernels.distributive_witness(self.down, self.up, self._pos)

    def is_distributive(self):
        return self._distributive_witness is None

    def distributivity_witness(self):
        'Triple (a, b, c) with a ^ (b v c) != (a ^ b) v (a ^ c), or None.'
        return self._distributive_witness

    @cached_property
    def _pseudocomplements(self):
        return tuple(kernels.pseudocomplement_vector(self.down, self._pos, self.bottom))

    def pseudocomplement(self, a):
        'Greatest element meeting a at bottom, or None when there is none.'
        self._index(a)
        got = self._pseudocomplements[a]
        return None if got < 0 else got

    def is_pseudocomplemented(self):
        return all(got >= 0 for got in self._pseudocomplements)

    def is_stone(self):
        'Pseudocomplemented and every a* v a** reaches the top.'
        if not self.is_pseudocomplemented():
            return False
        pc = self._pseudocomplements
        for a in range(self.n):
            if self.join(pc[a], pc[pc[a]]) != self.top:
                return False
        return True

    def implication(self, a, b):
        'Greatest x with meet(a, x) <= b, or None; the relative pseudocomplement.'
        self._index(a)
        self._index(b)
        got = kernels.implication_index(self.down, self._pos, a, b)
        return None if got < 0 else got

    def is_heyting(self):
        return all(self.implication(a, b) is not None
                   for a in range(self.n) for b in range(self.n))

    def is_boolean(self):
        'Distributive, and every element has a complement.'
        if not self.is_distributive():
            return False
        bot = 1 << self.bottom
        topmask = 1 << self.top
        for a in range(self.n):
            if not any(self.down[a] & self.down[b] == bot
                       and self.up[a] & self.up[b] == topmask
                       for b in range(self.n)):
                return False
        return True

    def join_irreducibles(self):
        'Non-bottom elements never obtained as a join of two smaller ones.'
        out = []
        for j in range(self.n):
            if j == self.bottom:
                continue
            strict = kernels.pure.bit_indices(self.down[j] ^ 1 << j)
            if all(self.join(a, b) != j for a in strict for b in strict):
                out.append(j)
        return out

    # ------------------------------------------------------------------
    # ideals

    def ideal_avoiding(self, j):
        'The elements not above j, as an ideal; valid whenever j is join-prime.'
        self._index(j)
        members = self.full & ~self.up[j]
        return LatticeIdeal(self, self.order_poset().set_of(members))

    def prime_ideals(self):
        '''Proper prime ideals, ascending by member mask.

        Every ideal of a finite lattice is principal, so the scan walks
        principal down-sets and keeps the prime ones.
        '''
        mask = kernels.prime_element_mask(self.down, self._pos)
        ideals = []
        rest = mask
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            ideals.append(LatticeIdeal(self, self.order_poset().set_of(self.down[x])))
            rest ^= low
        ideals.sort(key=lambda ideal: ideal.mask)
        return ideals

    def prime_ideals_via_irreducibles(self):
        'Second route: the avoided-element ideals of the join-irreducibles.'
        ideals = [self.ideal_avoiding(j) for j in self.join_irreducibles()]
        ideals.sort(key=lambda ideal: ideal.mask)
        return ideals

    def minimal_prime_ideals(self):
        primes = self.prime_ideals()
        return [ideal for ideal in primes
                if not any(other.mask != ideal.mask and other.mask & ~ideal.mask == 0
                           for other in primes)]

    def non_coprime_witness(self):
        'Pair of distinct minimal primes with no join reaching top, or None.'
        minimal = self.minimal_prime_ideals()
        for i in range(len(minimal)):
            for j in range(i + 1, len(minimal)):
                first, second = minimal[i], minimal[j]
                if not any(self.join(a, b) == self.top
                           for a in first.members for b in second.members):
                    return first, second
        return None

    def minimal_primes_coprime(self):
        'Every two distinct minimal primes contain a pair joining to top.'
        return self.non_coprime_witness() is None


class LatticeIdeal:
    'Nonempty, down-closed, join-closed subset of a lattice.'

    def __init__(self, lattice, members):
        mask = lattice.order_poset().mask_of(members)
        if mask == 0:
            raise InputError('an ideal cannot be empty')
        if lattice.order_poset().down_closure_mask(mask) != mask:
            raise InputError('ideal members must be down-closed')
        idx = kernels.pure.bit_indices(mask)
        for a in idx:
            for b in idx:
                if not mask >> lattice.join(a, b) & 1:
                    raise InputError('ideal members must be closed under join')
        self.lattice = lattice
        self.mask = mask
        self.members = frozenset(idx)

    def __contains__(self, a):
        return isinstance(a, int) and 0 <= a < self.lattice.n and self.mask >> a & 1

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return (isinstance(other, LatticeIdeal)
                and self.lattice == other.lattice and self.mask == other.mask)

    def __hash__(self):
        return hash(('ideal', self.lattice.up, self.mask))

    def __repr__(self):
        return 'LatticeIdeal(%r)' % (sorted(self.members),)

    def is_proper(self):
        return self.mask != self.lattice.full

    def is_prime(self):
        'Proper, and a meet lands inside only if a factor was inside.'
        if not self.is_proper():
            return False
        lat = self.lattice
        outside = kernels.pure.bit_indices(lat.full & ~self.mask)
        for a in outside:
            for b in outside:
                if self.mask >> lat.meet(a, b) & 1:
                    return False
        return True


def _rebuild_lattice(rows, labels):
    return Lattice.from_up_rows(rows, labels=labels)
