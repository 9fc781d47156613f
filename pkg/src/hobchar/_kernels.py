"""Pure-Python evaluation of the two induced-character folds.

These are the reference kernels: they literally sum multinomial products
over the shared cell-matrix enumeration.  ``hobchar._speedups`` holds the
compiled equivalents; ``hobchar._backend`` picks between them.
"""

from math import factorial, prod

from hobchar.combinatorics import _iter_cell_matrices


def _multinomial(total, counts):
    return factorial(total) // prod(map(factorial, counts))


def sym_char_value(exponents, parts):
    """Number of cycle distributions of a class over parts, weighted by
    within-length multinomials; the induced-character value for one cell."""
    total = 0
    for m in _iter_cell_matrices(tuple(exponents), tuple(parts)):
        term = 1
        for e, row in zip(_padded(exponents, len(m.entries)), m.entries):
            term *= _multinomial(e, row)
        total += term
    return total


def hob_char_value(pos, neg, parts, mask):
    """Signed-variant induced-character value for one cell."""
    pos, neg = tuple(pos), tuple(neg)
    total = 0
    for m in _iter_cell_matrices((pos, neg), tuple(parts), signed=True, parity_mask=mask):
        term = 1
        for e, row in zip(_padded(pos, len(m.entries)), m.entries):
            term *= _multinomial(e, row)
        for e, row in zip(_padded(neg, len(m.neg_entries)), m.neg_entries):
            term *= _multinomial(e, row)
        total += term
    return (1 << sum(mask)) * total


def _padded(seq, length):
    seq = tuple(seq)
    return seq + (0,) * (length - len(seq))
