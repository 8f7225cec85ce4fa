"""Pure-Python enumeration kernels.

These are the reference versions; ``_ckernels.pyx`` implements the same
functions with the same enumeration order and must return identical results.
"""

from itertools import product
from math import comb


def taylor_at_one(coeffs):
    """t_j with P(1 + h) = sum t_j h**j, for an integer coefficient list."""
    cs = list(coeffs)
    n = len(cs)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            cs[j] += cs[j + 1]
    return cs


def root_order(coeffs):
    """Multiplicity of 1 as a root of a nonzero integer coefficient list."""
    cs = list(coeffs)
    k = 0
    while True:
        acc = 0
        n = len(cs)
        for i in range(n - 1, -1, -1):
            acc += cs[i]
            cs[i] = acc
        # cs[0] is now P(1); cs[1:] is the quotient by (x - 1)
        if acc != 0:
            return k
        k += 1
        cs = cs[1:]


def order_scan(N, W):
    """Root order at 1 over every nonzero coefficient vector of length N + 1.

    Returns ``(max_by_degree, histogram)``: the largest order seen among
    polynomials of exact degree d, for d = 0..N, and a count of polynomials
    per order.
    """
    rng = range(-W, W + 1)
    leads = [a for a in rng if a != 0]
    max_by_degree = [0] * (N + 1)
    hist = {}
    for d in range(N + 1):
        best = 0
        for lead in leads:
            for low in product(rng, repeat=d):
                if sum(low) + lead != 0:
                    hist[0] = hist.get(0, 0) + 1
                    continue
                k = root_order(low + (lead,))
                hist[k] = hist.get(k, 0) + 1
                if k > best:
                    best = k
        max_by_degree[d] = best
    return max_by_degree, [hist.get(k, 0) for k in range(max(hist) + 1)]


def family_size(N, W):
    """Number of degree-N polynomials with |a_i| <= W and positive leading coefficient."""
    return W * (2 * W + 1) ** N


def decode_family(index, N, W):
    """Coefficient list of the index-th member of the positive-lead family."""
    base = 2 * W + 1
    cs = []
    for _ in range(N):
        index, r = divmod(index, base)
        cs.append(r - W)
    cs.append(index + 1)
    return cs


def gap_screen(N, W, q):
    """Indices of positive-lead degree-N polynomials that fail the Taylor screen.

    With P(1 + h) = h**k (t_k + t_{k+1} h + ...), a polynomial passes when
    ``sum_{j>k} |t_j| < |t_k| * q``; then it has no root other than 1 in
    [1 - 1/q, 1 + 1/q].
    """
    out = []
    base = 2 * W + 1
    total = family_size(N, W)
    for idx in range(total):
        cs = decode_family(idx, N, W)
        t = taylor_at_one(cs)
        k = 0
        while t[k] == 0:
            k += 1
        s = 0
        for j in range(k + 1, N + 1):
            s += abs(t[j])
        if not s < abs(t[k]) * q:
            out.append(idx)
    return out


def pigeonhole_collision(N, k):
    """First pair of {0,1} polynomials of degree <= N agreeing on t_0..t_{k-1} at 1.

    Polynomials are bit masks (bit i = coefficient of x**i) visited in
    reflected Gray-code order.  Returns ``(earlier_mask, later_mask)`` or None.
    """
    binom = [[comb(i, j) for j in range(k)] for i in range(N + 1)]
    sig = [0] * k
    seen = {tuple(sig): 0}
    mask = 0
    for s in range(1, 1 << (N + 1)):
        bit = (s & -s).bit_length() - 1
        mask ^= 1 << bit
        row = binom[bit]
        if mask >> bit & 1:
            for j in range(k):
                sig[j] += row[j]
        else:
            for j in range(k):
                sig[j] -= row[j]
        key = tuple(sig)
        prev = seen.get(key)
        if prev is not None:
            return prev, mask
        seen[key] = mask
    return None
