# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled folds over constrained cycle-distribution matrices.

Same contract as ``hobchar._kernels`` but the sum is folded during the
backtracking search instead of materializing matrices.  Every intermediate
is bounded by the induced-character degree, so results are exact whenever
that bound fits in a signed 64-bit integer; the dispatcher in
``hobchar._backend`` only routes inputs inside the window here
(total weight <= 20 unsigned, <= 16 signed).
"""

SYM_SAFE_WEIGHT = 20   # 20! < 2**63
HOB_SAFE_WEIGHT = 16   # 2**16 * 16! < 2**63

cdef long long FACT[21]

cdef void _init_fact():
    cdef int i
    FACT[0] = 1
    for i in range(1, 21):
        FACT[i] = FACT[i - 1] * i

_init_fact()


cdef struct SymState:
    int length          # number of cycle lengths (1..length)
    int k               # number of parts
    long long exps[24]
    long long rem[24]


cdef long long _sym_fill(SymState* st, int i):
    # Sum of multinomial products over all placements of lengths i..1,
    # given the remaining column capacities in st.rem.
    cdef long long term
    cdef int j
    if i == 1:
        # 1-cycles are forced: each column absorbs its leftover capacity.
        term = FACT[st.exps[0]]
        for j in range(st.k):
            term //= FACT[st.rem[j]]
        return term
    return _sym_row(st, i, <int> st.exps[i - 1], 0, FACT[st.exps[i - 1]])


cdef long long _sym_row(SymState* st, int i, int left, int j, long long coeff):
    cdef long long acc = 0
    cdef int c, cmax
    if j == st.k:
        if left == 0:
            return coeff * _sym_fill(st, i - 1)
        return 0
    cmax = <int> (st.rem[j] // i)
    if cmax > left:
        cmax = left
    for c in range(cmax + 1):
        st.rem[j] -= c * i
        acc += _sym_row(st, i, left - c, j + 1, coeff // FACT[c])
        st.rem[j] += c * i
    return acc


def sym_char_value(exponents, parts):
    """Induced-character value for one (partition row, class column) cell."""
    cdef SymState st
    cdef int i, n = 0, w = 0
    exponents = tuple(exponents)
    parts = tuple(parts)
    if len(exponents) > 20 or len(parts) > 20:
        raise ValueError("input too large for the compiled kernel")
    st.length = len(exponents) if exponents else 1
    st.k = len(parts)
    for i in range(st.length):
        st.exps[i] = 0
    for i, e in enumerate(exponents):
        if e < 0:
            raise ValueError("negative cycle count")
        st.exps[i] = e
        n += (i + 1) * e
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError("parts must be positive")
        st.rem[i] = p
        w += p
    if n != w:
        return 0
    if n > SYM_SAFE_WEIGHT:
        raise ValueError("weight exceeds the exact int64 window")
    if st.k == 0:
        return 1 if n == 0 else 0
    return _sym_fill(&st, st.length)


cdef struct HobState:
    int length
    int k
    long long pos[24]
    long long neg[24]
    long long rem[24]
    long long npar[24]   # negative cycles placed per column so far
    unsigned char mask[24]


cdef long long _hob_fill(HobState* st, int i):
    if i == 1:
        return _hob_last(st, <int> st.neg[0], 0, FACT[st.neg[0]], FACT[st.pos[0]])
    return _hob_pos(st, i, <int> st.pos[i - 1], 0, FACT[st.pos[i - 1]])


cdef long long _hob_pos(HobState* st, int i, int left, int j, long long coeff):
    cdef long long acc = 0
    cdef int c, cmax
    if j == st.k:
        if left == 0:
            return coeff * _hob_neg(st, i, <int> st.neg[i - 1], 0, FACT[st.neg[i - 1]])
        return 0
    cmax = <int> (st.rem[j] // i)
    if cmax > left:
        cmax = left
    for c in range(cmax + 1):
        st.rem[j] -= c * i
        # a filled column with odd negative parity can never recover
        if not (st.rem[j] == 0 and st.mask[j] and (st.npar[j] & 1)):
            acc += _hob_pos(st, i, left - c, j + 1, coeff // FACT[c])
        st.rem[j] += c * i
    return acc


cdef long long _hob_neg(HobState* st, int i, int left, int j, long long coeff):
    cdef long long acc = 0
    cdef int c, cmax
    if j == st.k:
        if left == 0:
            return coeff * _hob_fill(st, i - 1)
        return 0
    cmax = <int> (st.rem[j] // i)
    if cmax > left:
        cmax = left
    for c in range(cmax + 1):
        st.rem[j] -= c * i
        st.npar[j] += c
        if not (st.rem[j] == 0 and st.mask[j] and (st.npar[j] & 1)):
            acc += _hob_neg(st, i, left - c, j + 1, coeff // FACT[c])
        st.rem[j] += c * i
        st.npar[j] -= c
    return acc


cdef long long _hob_last(HobState* st, int left, int j, long long ncoeff, long long pcoeff):
    # Distribute the negative 1-cycles; positive 1-cycles fill the rest.
    cdef long long acc = 0
    cdef int d, dmax, dstart, step
    if j == st.k:
        if left == 0:
            return ncoeff * pcoeff
        return 0
    dmax = <int> st.rem[j]
    if dmax > left:
        dmax = left
    if st.mask[j]:
        dstart = <int> (st.npar[j] & 1)
        step = 2
    else:
        dstart = 0
        step = 1
    for d in range(dstart, dmax + 1, step):
        acc += _hob_last(
            st, left - d, j + 1,
            ncoeff // FACT[d],
            pcoeff // FACT[st.rem[j] - d],
        )
    return acc


def hob_char_value(pos, neg, parts, mask):
    """Signed-variant induced-character value for one cell."""
    cdef HobState st
    cdef int i, n = 0, w = 0, shift = 0
    pos, neg, parts = tuple(pos), tuple(neg), tuple(parts)
    mask = tuple(mask)
    cdef int length = max(len(pos), len(neg), 1)
    if length > 16 or len(parts) > 16:
        raise ValueError("input too large for the compiled kernel")
    if len(mask) != len(parts):
        raise ValueError("mask length must match the number of parts")
    st.length = length
    st.k = len(parts)
    for i in range(length):
        st.pos[i] = 0
        st.neg[i] = 0
    for i, e in enumerate(pos):
        if e < 0:
            raise ValueError("negative cycle count")
        st.pos[i] = e
        n += (i + 1) * e
    for i, e in enumerate(neg):
        if e < 0:
            raise ValueError("negative cycle count")
        st.neg[i] = e
        n += (i + 1) * e
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError("parts must be positive")
        st.rem[i] = p
        st.npar[i] = 0
        st.mask[i] = 1 if mask[i] else 0
        w += p
        shift += st.mask[i]
    if n != w:
        return 0
    if n > HOB_SAFE_WEIGHT:
        raise ValueError("weight exceeds the exact int64 window")
    if st.k == 0:
        return 1 if n == 0 else 0
    return (1 << shift) * _hob_fill(&st, st.length)
