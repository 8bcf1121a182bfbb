# cython: language_level=3, boundscheck=False, wraparound=False
'''Bit-twiddled kernels, compiled lane: uint64 masks, up to 64 points.

Function-for-function mirror of _bits_py with bit-identical outputs,
including iteration order, tie-breaking and error messages.  The
wrapper in kernels.py only routes structures of at most 64 points here
and only with linear-extension element numbering (pos is None).
'''

from libc.stdlib cimport free, malloc, qsort, realloc
from libc.stdint cimport uint64_t

from .errors import ResourceLimitError

BACKEND = 'compiled'

cdef extern from *:
    '''
    #define FS_POPCNT(x) __builtin_popcountll(x)
    '''
    int FS_POPCNT(uint64_t) nogil


cdef inline int _bl(uint64_t m) nogil:
    cdef int k = 0
    while m:
        m >>= 1
        k += 1
    return k


cdef int _load(object rows, uint64_t* buf) except -1:
    cdef int n = len(rows)
    cdef int i
    if n > 64:
        raise ValueError('compiled lane is limited to 64 points')
    for i in range(n):
        buf[i] = rows[i]
    return n


cdef int _cmp_u64(const void* a, const void* b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t*> a)[0]
    cdef uint64_t y = (<const uint64_t*> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def transitive_closure(rows):
    'Warshall closure of a reflexive relation held as row masks.'
    cdef uint64_t buf[64]
    cdef int n = _load(rows, buf)
    cdef int i, k
    cdef uint64_t bk, rk
    for k in range(n):
        bk = (<uint64_t> 1) << k
        rk = buf[k]
        for i in range(n):
            if buf[i] & bk:
                buf[i] |= rk
    return [buf[i] for i in range(n)]


cdef void _transpose(uint64_t* rows, int n, uint64_t* cols) nogil:
    cdef int i, j
    for j in range(n):
        cols[j] = 0
    for i in range(n):
        for j in range(n):
            if rows[i] >> j & 1:
                cols[j] |= (<uint64_t> 1) << i


cdef uint64_t* _downsets(uint64_t* rows, int n, object cap,
                         Py_ssize_t* count_out) except NULL:
    'Malloc-backed ascending down-set list; caller frees.'
    cdef uint64_t cols[64]
    cdef int order[64]
    cdef int i, j, v, tmp
    cdef Py_ssize_t count = 1, room = 256, k, grown
    cdef uint64_t need, bit, d
    cdef long limit = -1
    if cap is not None:
        limit = cap
    _transpose(rows, n, cols)
    for i in range(n):
        order[i] = i
    # insertion sort on (popcount(cols[v]), v), matching the pure lane
    for i in range(1, n):
        v = order[i]
        j = i - 1
        while j >= 0 and (FS_POPCNT(cols[order[j]]), order[j]) > (FS_POPCNT(cols[v]), v):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = v
    cdef uint64_t* sets_ = <uint64_t*> malloc(room * sizeof(uint64_t))
    if sets_ == NULL:
        raise MemoryError()
    sets_[0] = 0
    try:
        for i in range(n):
            v = order[i]
            bit = (<uint64_t> 1) << v
            need = cols[v] ^ bit
            grown = 0
            for k in range(count):
                if need & ~sets_[k] == 0:
                    grown += 1
            while count + grown > room:
                room *= 2
                sets_ = <uint64_t*> realloc(sets_, room * sizeof(uint64_t))
                if sets_ == NULL:
                    raise MemoryError()
            grown = count
            for k in range(count):
                d = sets_[k]
                if need & ~d == 0:
                    sets_[grown] = d | bit
                    grown += 1
            count = grown
            if limit >= 0 and count > limit:
                raise ResourceLimitError(
                    'more than %d down-sets on %d points' % (cap, n))
        qsort(sets_, count, sizeof(uint64_t), _cmp_u64)
    except BaseException:
        free(sets_)
        raise
    count_out[0] = count
    return sets_


def downset_masks(rows, cap=None):
    'Every down-closed subset as a mask, ascending; cap guards blowup.'
    cdef uint64_t buf[64]
    cdef int n = _load(rows, buf)
    cdef Py_ssize_t count = 0, k
    cdef uint64_t* sets_ = _downsets(buf, n, cap, &count)
    try:
        return [sets_[k] for k in range(count)]
    finally:
        free(sets_)


# ----------------------------------------------------------------------
# canonical form


cdef struct CanonState:
    int n
    uint64_t* rows
    uint64_t* cols
    int* order
    int* assign
    int* best_perm
    uint64_t* col_steps
    uint64_t* row_steps
    uint64_t* best_col
    uint64_t* best_row
    bint have_best
    uint64_t used
    long version


cdef void _canon_rec(CanonState* st, int k, bint tight) nogil:
    '''Depth-first relabeling search with prefix pruning.

    tight tracks whether the current step prefix equals the best prefix
    against the current best; a best update always happens on the live
    path, so the version counter restores tightness on the way out.
    '''
    cdef int i, v, u, tried_n = 0, t
    cdef uint64_t colval, rowval, sig_up, sig_dn
    cdef uint64_t tried_up[64]
    cdef uint64_t tried_dn[64]
    cdef bint child_tight, seen
    cdef long ver
    if k == st.n:
        if not st.have_best or not tight:
            for i in range(st.n):
                st.best_col[i] = st.col_steps[i]
                st.best_row[i] = st.row_steps[i]
                st.best_perm[i] = st.assign[i]
            st.have_best = True
            st.version += 1
        return
    for i in range(st.n):
        v = st.order[i]
        if st.used >> v & 1:
            continue
        # interchangeable points are automorphic; try one per depth
        sig_up = st.rows[v] ^ (<uint64_t> 1) << v
        sig_dn = st.cols[v] ^ (<uint64_t> 1) << v
        seen = False
        for t in range(tried_n):
            if tried_up[t] == sig_up and tried_dn[t] == sig_dn:
                seen = True
                break
        if seen:
            continue
        tried_up[tried_n] = sig_up
        tried_dn[tried_n] = sig_dn
        tried_n += 1
        colval = 0
        rowval = 0
        for u in range(k):
            colval = colval << 1 | (st.rows[st.assign[u]] >> v & 1)
        for u in range(k):
            rowval = rowval << 1 | (st.rows[v] >> st.assign[u] & 1)
        if st.have_best and tight:
            if colval > st.best_col[k] or (colval == st.best_col[k]
                                           and rowval > st.best_row[k]):
                continue
            child_tight = colval == st.best_col[k] and rowval == st.best_row[k]
        else:
            child_tight = False
        st.col_steps[k] = colval
        st.row_steps[k] = rowval
        st.assign[k] = v
        st.used |= (<uint64_t> 1) << v
        ver = st.version
        _canon_rec(st, k + 1, child_tight)
        st.used &= ~((<uint64_t> 1) << v)
        if st.version != ver:
            tight = True


def canonical_key(rows):
    'Relabeling of rows minimizing the staircase-read relation matrix.'
    cdef uint64_t buf[64]
    cdef int n = _load(rows, buf)
    if n <= 1:
        return tuple(rows)
    cdef uint64_t cols[64]
    cdef int order[64]
    cdef int assign[64]
    cdef int best_perm[64]
    cdef uint64_t col_steps[64]
    cdef uint64_t row_steps[64]
    cdef uint64_t best_col[64]
    cdef uint64_t best_row[64]
    cdef int i, j, v, p, q
    cdef uint64_t src, mask
    _transpose(buf, n, cols)
    for i in range(n):
        order[i] = i
    # insertion sort on (points above, points below, index)
    for i in range(1, n):
        v = order[i]
        j = i - 1
        while j >= 0 and (FS_POPCNT(buf[order[j]]), FS_POPCNT(cols[order[j]]),
                          order[j]) > (FS_POPCNT(buf[v]), FS_POPCNT(cols[v]), v):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = v
    cdef CanonState st
    st.n = n
    st.rows = buf
    st.cols = cols
    st.order = order
    st.assign = assign
    st.best_perm = best_perm
    st.col_steps = col_steps
    st.row_steps = row_steps
    st.best_col = best_col
    st.best_row = best_row
    st.have_best = False
    st.used = 0
    st.version = 0
    _canon_rec(&st, 0, False)
    out = []
    for p in range(n):
        src = buf[best_perm[p]]
        mask = 0
        for q in range(n):
            if src >> best_perm[q] & 1:
                mask |= (<uint64_t> 1) << q
        out.append(mask)
    return tuple(out)


# ----------------------------------------------------------------------
# enumeration by one-point extension


def _extension_pairs(rows):
    'Mask pairs (strict down-set, strict up-set) for one extra point.'
    cdef uint64_t buf[64]
    cdef int k = _load(rows, buf)
    cdef uint64_t full = ((<uint64_t> 1) << k) - 1 if k else 0
    cdef uint64_t strict[64]
    cdef int i
    cdef Py_ssize_t count = 0, ai, bi
    cdef uint64_t a_mask, b_mask, common, rest, low
    for i in range(k):
        strict[i] = buf[i] ^ (<uint64_t> 1) << i
    cdef uint64_t* dsets = _downsets(buf, k, None, &count)
    cdef uint64_t* usets = <uint64_t*> malloc(count * sizeof(uint64_t))
    if usets == NULL:
        free(dsets)
        raise MemoryError()
    try:
        for ai in range(count):
            usets[ai] = full ^ dsets[ai]
        qsort(usets, count, sizeof(uint64_t), _cmp_u64)
        pairs = []
        for ai in range(count):
            a_mask = dsets[ai]
            common = full
            rest = a_mask
            while rest:
                low = rest & (0 - rest)
                common &= strict[_bl(low) - 1]
                rest ^= low
            for bi in range(count):
                b_mask = usets[bi]
                if b_mask & ~common:
                    continue
                pairs.append((a_mask, b_mask))
        return pairs
    finally:
        free(dsets)
        free(usets)


def _extend(rows, a_mask, b_mask):
    k = len(rows)
    bit = 1 << k
    out = [rows[i] | (bit if a_mask >> i & 1 else 0) for i in range(k)]
    out.append(bit | b_mask)
    return out


def labeled_stream(n):
    'Every partial order on 0..n-1 exactly once, depth-first extension order.'

    def rec(rows):
        if len(rows) == n:
            yield tuple(rows)
            return
        for a_mask, b_mask in _extension_pairs(rows):
            yield from rec(_extend(rows, a_mask, b_mask))

    yield from rec([])


def count_labeled(n):
    'Number of partial orders on 0..n-1, by the same recursion as the stream.'

    def rec(rows):
        if len(rows) == n - 1:
            return len(_extension_pairs(rows))
        total = 0
        for a_mask, b_mask in _extension_pairs(rows):
            total += rec(_extend(rows, a_mask, b_mask))
        return total

    if n == 0:
        return 1
    return rec([])


def unlabeled_reps(n):
    'Canonical representative rows of every isomorphism class, ascending.'
    reps = [()]
    for _ in range(n):
        seen = set()
        for rows in reps:
            for a_mask, b_mask in _extension_pairs(list(rows)):
                seen.add(canonical_key(tuple(_extend(list(rows), a_mask, b_mask))))
        reps = sorted(seen)
    return reps


# ----------------------------------------------------------------------
# lattice helpers, linear-extension numbering only


cdef int _set_max_c(uint64_t mask, uint64_t* down) nogil:
    cdef int cand
    if mask == 0:
        return -1
    cand = _bl(mask) - 1
    if mask & ~down[cand]:
        return -1
    return cand


cdef int _set_min_c(uint64_t mask, uint64_t* up) nogil:
    cdef int cand
    if mask == 0:
        return -1
    cand = _bl(mask & (0 - mask)) - 1
    if mask & ~up[cand]:
        return -1
    return cand


cdef _need_linear(pos):
    if pos is not None:
        raise ValueError('compiled lane needs linear-extension numbering')


def pseudocomplement_vector(down, pos, bottom):
    'Per element, the greatest disjoint partner, or -1 when absent.'
    _need_linear(pos)
    cdef uint64_t dbuf[64]
    cdef int n = _load(down, dbuf)
    cdef uint64_t bot = (<uint64_t> 1) << <int> bottom
    cdef uint64_t da, cand
    cdef int a, x
    out = []
    for a in range(n):
        da = dbuf[a]
        cand = 0
        for x in range(n):
            if da & dbuf[x] == bot:
                cand |= (<uint64_t> 1) << x
        out.append(_set_max_c(cand, dbuf))
    return out


def implication_index(down, pos, a, b):
    'Greatest x with meet(a, x) <= b, or -1 when absent.'
    _need_linear(pos)
    cdef uint64_t dbuf[64]
    cdef int n = _load(down, dbuf)
    cdef uint64_t da = dbuf[<int> a]
    cdef uint64_t db = dbuf[<int> b]
    cdef uint64_t cand = 0
    cdef int x
    for x in range(n):
        if da & dbuf[x] & ~db == 0:
            cand |= (<uint64_t> 1) << x
    return _set_max_c(cand, dbuf)


def prime_element_mask(down, pos):
    'Mask of elements whose principal down-set is a proper prime ideal.'
    _need_linear(pos)
    cdef uint64_t dbuf[64]
    cdef int n = _load(down, dbuf)
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1 if n else 0
    cdef uint64_t out = 0, above, covers, rest, low, da, notx
    cdef int x, y, nout, ai, bi
    cdef int outside[64]
    cdef bint prime
    for x in range(n):
        if dbuf[x] == full:
            continue
        above = 0
        for y in range(n):
            if y != x and dbuf[y] >> x & 1:
                above |= (<uint64_t> 1) << y
        covers = 0
        rest = above
        while rest:
            low = rest & (0 - rest)
            y = _bl(low) - 1
            if dbuf[y] & above == low:
                covers |= low
                if covers != low:
                    break
            rest ^= low
        if FS_POPCNT(covers) > 1:
            continue
        nout = 0
        rest = full & ~dbuf[x]
        while rest:
            low = rest & (0 - rest)
            outside[nout] = _bl(low) - 1
            nout += 1
            rest ^= low
        notx = ~dbuf[x]
        prime = True
        for ai in range(nout):
            da = dbuf[outside[ai]]
            for bi in range(ai, nout):
                if da & dbuf[outside[bi]] & notx == 0:
                    prime = False
                    break
            if not prime:
                break
        if prime:
            out |= (<uint64_t> 1) << x
    return out


def distributive_witness(down, up, pos):
    'Triple breaking meet-over-join distributivity, or None.'
    _need_linear(pos)
    cdef uint64_t dbuf[64]
    cdef uint64_t ubuf[64]
    cdef int n = _load(down, dbuf)
    _load(up, ubuf)
    cdef int a, b, c, ab, bc, left, ac, right
    cdef uint64_t da
    for a in range(n):
        da = dbuf[a]
        for b in range(n):
            ab = _set_max_c(da & dbuf[b], dbuf)
            for c in range(b, n):
                bc = _set_min_c(ubuf[b] & ubuf[c], ubuf)
                # -1 wraps to the last element, as negative indexing does
                # in the pure lane; harmless, validated lattices never hit it
                left = _set_max_c(da & dbuf[bc if bc >= 0 else n + bc], dbuf)
                ac = _set_max_c(da & dbuf[c], dbuf)
                right = _set_min_c(ubuf[ab if ab >= 0 else n + ab]
                                   & ubuf[ac if ac >= 0 else n + ac], ubuf)
                if left != right:
                    return a, b, c
    return None
