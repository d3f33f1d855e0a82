# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirror of ``_kernels_py``.  Same signatures, same results.

Coefficients stay Python integers (arbitrary precision); lattice
coordinates in the chain enumeration are C long long.
"""

from math import comb

BACKEND = "cython"


def commutative_product(list p, list q):
    cdef dict out = {}
    cdef long a, j, b, k
    cdef object c, d, key
    for a, j, c in p:
        for b, k, d in q:
            key = (a + b, j + k)
            out[key] = out.get(key, 0) + c * d
    return out


def weyl_row(long j, long b, long level, long jmax):
    cdef list row = []
    cdef object falling = 1
    cdef long t
    for t in range(j + 1):
        if t:
            falling *= b - (t - 1) * level
            if falling == 0:
                break
        row.append((t, comb(j, t) * falling * (<object>level) ** (jmax - t)))
    return row


def weyl_product(list p, list q, long level):
    cdef long jmax = 0
    cdef long a, j, b, k, t, base_x, base_y
    cdef object c, d, cd, w, key
    cdef dict rows = {}
    cdef dict out = {}
    cdef list row
    for a, j, c in p:
        if j > jmax:
            jmax = j
    for a, j, c in p:
        for b, k, d in q:
            key = (j, b)
            row = rows.get(key)
            if row is None:
                row = weyl_row(j, b, level, jmax)
                rows[key] = row
            cd = c * d
            base_x = a + b
            base_y = j + k
            for t, w in row:
                key = (base_x - t * level, base_y - t)
                out[key] = out.get(key, 0) + cd * w
    return out


# ---------------------------------------------------------------------------
# chain enumeration

ctypedef long long ll


cdef inline ll _gcd(ll a, ll b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline bint _dir_less(ll r1, ll s1, ll r2, ll s2):
    return r1 * s2 - s1 * r2 > 0


def dir_less(ll r1, ll s1, ll r2, ll s2):
    return _dir_less(r1, s1, r2, s2)


_DIR_CACHE = {}


def search_directions(ll max_rho):
    cached = _DIR_CACHE.get(max_rho)
    if cached is not None:
        return cached
    from fractions import Fraction
    cdef list dirs = []
    cdef ll rho, sigma
    for rho in range(2, max_rho + 1):
        for sigma in range(-rho + 1, 0):
            if _gcd(rho, -sigma) == 1:
                dirs.append((rho, sigma))
    dirs.sort(key=lambda d: Fraction(d[1], d[0]))
    cdef Py_ssize_t i
    for i in range(len(dirs) - 1):
        if not _dir_less(dirs[i][0], dirs[i][1], dirs[i + 1][0], dirs[i + 1][1]):
            raise AssertionError("direction list is not strictly ascending")
    result = tuple(dirs)
    _DIR_CACHE[max_rho] = result
    return result


cdef bint _has_lower_witness(ll xnum, ll y, ll level, ll rho, ll sigma):
    cdef ll t, num
    t = y - 1
    while t >= 0:
        num = rho * xnum + sigma * level * (y - t)
        if num <= 0:
            return False
        if num % rho == 0:
            return True
        t -= 1
    return False


def has_lower_witness(ll xnum, ll y, ll level, ll rho, ll sigma):
    return _has_lower_witness(xnum, y, level, rho, sigma)


cdef inline bint _rejected_by_filter(ll xnum, ll y, ll level):
    return y >= 2 and xnum == y * level - 1


def rejected_by_filter(ll xnum, ll y, ll level):
    return _rejected_by_filter(xnum, y, level)


cdef bint _scaled_multiple_ok(ll xnum, ll y, ll level, ll rho, ll sigma):
    cdef ll v_num = rho * xnum + sigma * y * level
    cdef ll w
    if v_num <= 0:
        return False
    w = (rho + sigma) * level
    if (w * xnum) % v_num:
        return False
    if (w * y) % v_num:
        return False
    return True


def scaled_multiple_ok(ll xnum, ll y, ll level, ll rho, ll sigma):
    return _scaled_multiple_ok(xnum, y, level, rho, sigma)


cdef bint _node_ok(ll xnum, ll y, ll level, ll rho, ll sigma):
    if xnum <= 0 or y <= 0:
        return False
    if xnum >= y * level:
        return False
    if rho * xnum + sigma * y * level <= 0:
        return False
    if _rejected_by_filter(xnum, y, level):
        return False
    return _has_lower_witness(xnum, y, level, rho, sigma)


def node_ok(ll xnum, ll y, ll level, ll rho, ll sigma):
    return _node_ok(xnum, y, level, rho, sigma)


def start_nodes(ll max_v11, ll max_rho, ll max_height):
    cdef tuple dirs = search_directions(max_rho)
    cdef list out = []
    cdef ll total, x, y, rho, sigma
    for total in range(3, max_v11 + 1):
        for x in range(1, (total + 1) // 2):
            y = total - x
            if y > max_height:
                continue
            for rho, sigma in dirs:
                if _node_ok(x, y, 1, rho, sigma):
                    out.append((x, y, 1, rho, sigma))
    return out


def extend(tuple node, ll max_rho, ll max_level, ll max_height):
    cdef ll xnum = node[0], y = node[1], level = node[2], rho = node[3], sigma = node[4]
    cdef ll new_level = rho * level // _gcd(rho, level)
    cdef ll k, base_x, t, num, r2, s2, u
    cdef bint moving_ok
    cdef list points = []
    cdef list out = []
    if new_level > max_level:
        return out
    moving_ok = _scaled_multiple_ok(xnum, y, level, rho, sigma)
    k = new_level // level
    base_x = xnum * k
    for t in range(1, y + 1):
        if t > max_height or (t != y and not moving_ok):
            continue
        num = rho * base_x + sigma * new_level * (y - t)
        if num <= 0 or num % rho:
            continue
        points.append((num // rho, t))
    for r2, s2 in search_directions(max_rho):
        if not _dir_less(r2, s2, rho, sigma):
            break
        for u, t in points:
            if _node_ok(u, t, new_level, r2, s2):
                out.append((u, t, new_level, r2, s2))
    return out


def tail_quotient(ll xnum, ll y, ll level, ll rho, ll sigma):
    cdef ll v_num = rho * xnum + sigma * y * level
    cdef ll w = (rho + sigma) * level
    if v_num <= 0 or w % v_num:
        return 0
    return w // v_num


cdef bint _splits_coprime(ll q):
    cdef ll m
    for m in range(2, q - 1):
        if _gcd(m, q) == 1:
            return True
    return False


def splits_coprime(ll q):
    return _splits_coprime(q)


def explore(tuple start, ll max_rho, ll max_level, ll max_height, ll max_len, ll min_len):
    cdef list found = []
    cdef ll visited = 0
    cdef list stack = [(start,)]
    cdef tuple chain, tail
    cdef list children
    cdef Py_ssize_t i
    while stack:
        chain = stack.pop()
        visited += 1
        tail = chain[len(chain) - 1]
        if len(chain) >= min_len and _splits_coprime(
                tail_quotient(tail[0], tail[1], tail[2], tail[3], tail[4])):
            found.append(chain)
        if len(chain) < max_len:
            children = extend(tail, max_rho, max_level, max_height)
            for i in range(len(children) - 1, -1, -1):
                stack.append(chain + (children[i],))
    return found, visited
