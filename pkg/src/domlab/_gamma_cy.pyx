# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the pure-Python search kernel in _gamma_py.

Identical algorithm and exploration order; limited to n <= 62 so that vertex
sets fit in one machine word. The dispatcher falls back to the pure kernel
beyond that.
"""

BACKEND_NAME = "cython"

MAX_N = 62

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef struct Ctx:
    int n
    int k
    bint restrained
    unsigned long long full
    unsigned long long forced
    unsigned long long masks[64]
    int deg[64]
    long long nodes


cdef bint _check(Ctx *c, unsigned long long smask) noexcept:
    cdef int v
    cdef unsigned long long outside
    for v in range(c.n):
        if __builtin_popcountll(c.masks[v] & smask) < c.k:
            return False
    if c.restrained:
        outside = c.full & ~smask
        for v in range(c.n):
            if not (smask >> v) & 1ULL:
                if __builtin_popcountll(c.masks[v] & outside) < c.k:
                    return False
    return True


cdef long long _dfs(Ctx *c, int i, unsigned long long in_mask,
                    unsigned long long out_mask, int cnt_in, int s) noexcept:
    cdef int budget, rest, v, in_nb
    cdef unsigned long long undecided, cand, bit, nb
    cdef long long r
    c.nodes += 1
    budget = s - cnt_in
    rest = c.n - i
    if budget < 0 or budget > rest:
        return -1
    if budget == 0:
        if _check(c, in_mask):
            return <long long> in_mask
        return -1
    undecided = c.full & ~((1ULL << i) - 1ULL)
    if budget == rest:
        cand = in_mask | undecided
        if _check(c, cand):
            return <long long> cand
        return -1
    for v in range(c.n):
        nb = c.masks[v]
        in_nb = __builtin_popcountll(nb & in_mask)
        if in_nb < c.k:
            if in_nb + __builtin_popcountll(nb & undecided) < c.k:
                return -1
            if c.k - in_nb > budget:
                return -1
        if c.restrained and (out_mask >> v) & 1ULL and c.deg[v] - in_nb < c.k:
            return -1
    bit = 1ULL << i
    r = _dfs(c, i + 1, in_mask | bit, out_mask, cnt_in + 1, s)
    if r >= 0:
        return r
    if c.forced & bit:
        return -1
    return _dfs(c, i + 1, in_mask, out_mask | bit, cnt_in, s)


def solve_gamma(int n, int k, bint restrained, masks):
    """Minimum size of a kTDS/kTRDS; mirrors _gamma_py.solve_gamma exactly."""
    if n > MAX_N:
        raise ValueError(f"compiled kernel supports n <= {MAX_N}")
    cdef Ctx c
    cdef int v, s, min_deg
    cdef long long r
    c.n = n
    c.k = k
    c.restrained = restrained
    c.full = (1ULL << n) - 1ULL if n < 64 else ~0ULL
    c.forced = 0
    c.nodes = 0
    min_deg = n
    for v in range(n):
        c.masks[v] = <unsigned long long> masks[v]
        c.deg[v] = __builtin_popcountll(c.masks[v])
        if c.deg[v] < min_deg:
            min_deg = c.deg[v]
    if n == 0 or min_deg < k:
        return (-1, 0, 0)
    if restrained:
        for v in range(n):
            if c.deg[v] <= 2 * k - 1:
                c.forced |= 1ULL << v
    cdef int lb = k + 1
    if __builtin_popcountll(c.forced) > lb:
        lb = __builtin_popcountll(c.forced)
    for s in range(lb, n + 1):
        r = _dfs(&c, 0, 0, 0, 0, s)
        if r >= 0:
            return (s, int(<unsigned long long> r), int(c.nodes))
    return (n, int(c.full), int(c.nodes))
