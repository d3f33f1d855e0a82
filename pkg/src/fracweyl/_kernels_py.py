"""Pure-Python hot kernels.  ``_kernels.pyx`` mirrors these signatures and
results exactly; ``_core`` picks one at import time.

All inputs are integers.  Points are scaled by their level: a point
(xnum/level, y) travels as the pair (xnum, y) together with ``level``.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

BACKEND = "python"


def commutative_product(p, q):
    out = {}
    for a, j, c in p:
        for b, k, d in q:
            key = (a + b, j + k)
            out[key] = out.get(key, 0) + c * d
    return out


def weyl_row(j, b, level, jmax):
    """Integer coefficients of Y^j X^{b/l} = sum_t coef_t X^{b/l - t} Y^{j-t},
    each multiplied by level**jmax."""
    row = []
    falling = 1
    for t in range(j + 1):
        if t:
            falling *= b - (t - 1) * level
            if falling == 0:
                break
        row.append((t, comb(j, t) * falling * level ** (jmax - t)))
    return row


def weyl_product(p, q, level):
    """Sparse product in W^(l).  Result coefficients are scaled by
    level**jmax where jmax is the largest y exponent in ``p``."""
    jmax = max(j for _, j, _ in p)
    rows = {}
    out = {}
    for a, j, c in p:
        for b, k, d in q:
            row = rows.get((j, b))
            if row is None:
                row = rows[(j, b)] = weyl_row(j, b, level, jmax)
            cd = c * d
            base_x = a + b
            base_y = j + k
            for t, w in row:
                key = (base_x - t * level, base_y - t)
                out[key] = out.get(key, 0) + cd * w
    return out


# ---------------------------------------------------------------------------
# chain enumeration
#
# Nodes are tuples (xnum, y, level, rho, sigma) meaning A = (xnum/level, y)
# with direction (rho, sigma).  Directions in the search satisfy rho > 0,
# -rho < sigma < 0, so they are ordered by the slope sigma/rho.


def dir_less(r1, s1, r2, s2):
    """(r1,s1) < (r2,s2) for interior directions: cross product > 0."""
    return r1 * s2 - s1 * r2 > 0


@lru_cache(maxsize=None)
def search_directions(max_rho):
    """All primitive (rho, sigma) with 0 < rho <= max_rho and -rho < sigma < 0,
    ascending in the direction order."""
    dirs = []
    for rho in range(2, max_rho + 1):
        for sigma in range(-rho + 1, 0):
            if gcd(rho, -sigma) == 1:
                dirs.append((rho, sigma))
    # ascending slope sigma/rho; slopes are distinct for primitive pairs
    dirs.sort(key=lambda d: Fraction(d[1], d[0]))
    _check_sorted(dirs)
    return tuple(dirs)


def _check_sorted(dirs):
    for (r1, s1), (r2, s2) in zip(dirs, dirs[1:]):
        if not dir_less(r1, s1, r2, s2):
            raise AssertionError("direction list is not strictly ascending")


def has_lower_witness(xnum, y, level, rho, sigma):
    """Condition (6): some A' = (u/level, t) with u > 0, 0 <= t, on the line
    v_dir(A') = v_dir(A) and with v_{1,-1}(A') > v_{1,-1}(A).  Along the
    line x - y decreases as t grows, so only t < y can qualify."""
    # rho*u/level + sigma*t = rho*xnum/level + sigma*y
    # => rho*u = rho*xnum + sigma*level*(y - t)
    for t in range(y - 1, -1, -1):
        num = rho * xnum + sigma * level * (y - t)
        if num <= 0:
            # u shrinks as t decreases (sigma < 0), nothing further works
            return False
        if num % rho == 0:
            return True
    return False


def rejected_by_filter(xnum, y, level):
    """A = (r - 1/l, r) with integer r >= 2."""
    return y >= 2 and xnum == y * level - 1


def scaled_multiple_ok(xnum, y, level, rho, sigma):
    """Condition (7) test on A: ((rho+sigma)/v) * A in (1/l)N x N."""
    v_num = rho * xnum + sigma * y * level  # v = v_num / level
    if v_num <= 0:
        return False
    w = (rho + sigma) * level  # lambda = w / v_num
    # lambda * xnum / level must have denominator dividing level
    if (w * xnum) % v_num:
        return False
    if (w * y) % v_num:
        return False
    return True


def node_ok(xnum, y, level, rho, sigma):
    """Conditions (2), (3), (6) and the filter for a single node."""
    if xnum <= 0 or y <= 0:
        return False
    if xnum >= y * level:
        return False
    if rho * xnum + sigma * y * level <= 0:
        return False
    if rejected_by_filter(xnum, y, level):
        return False
    return has_lower_witness(xnum, y, level, rho, sigma)


def start_nodes(max_v11, max_rho, max_height):
    """Level-one starts A = (x, y), x < y, x + y <= max_v11, y <= max_height,
    ordered by (x + y, x, direction)."""
    dirs = search_directions(max_rho)
    out = []
    for total in range(3, max_v11 + 1):
        for x in range(1, (total + 1) // 2):
            y = total - x
            if y > max_height:
                continue
            for rho, sigma in dirs:
                if node_ok(x, y, 1, rho, sigma):
                    out.append((x, y, 1, rho, sigma))
    return out


def extend(node, max_rho, max_level, max_height):
    """Successor nodes of ``node``: level lcm(rho, level), direction below the
    current one, A on the current edge line and not above A in y."""
    xnum, y, level, rho, sigma = node
    new_level = rho * level // gcd(rho, level)
    if new_level > max_level:
        return []
    moving_ok = scaled_multiple_ok(xnum, y, level, rho, sigma)
    k = new_level // level
    base_x = xnum * k
    # points on rho*x + sigma*y = const at the new level:
    # rho*u = rho*base_x + sigma*new_level*(y - t)
    points = []
    for t in range(1, y + 1):
        if t > max_height or (t != y and not moving_ok):
            continue
        num = rho * base_x + sigma * new_level * (y - t)
        if num <= 0 or num % rho:
            continue
        points.append((num // rho, t))
    out = []
    for r2, s2 in search_directions(max_rho):
        if not dir_less(r2, s2, rho, sigma):
            break
        for u, t in points:
            if node_ok(u, t, new_level, r2, s2):
                out.append((u, t, new_level, r2, s2))
    return out


def tail_quotient(xnum, y, level, rho, sigma):
    """(rho+sigma)/v_dir(A) when it is an integer, else 0."""
    v_num = rho * xnum + sigma * y * level
    w = (rho + sigma) * level
    if v_num <= 0 or w % v_num:
        return 0
    return w // v_num


def splits_coprime(q):
    """True when q = m + n with m, n > 1 and gcd(m, n) = 1."""
    for m in range(2, q - 1):
        if gcd(m, q) == 1:
            return True
    return False


def explore(start, max_rho, max_level, max_height, max_len, min_len):
    """Depth-first walk from ``start``.  Returns (complete_chains, visited)
    where each chain is a tuple of node tuples and ``visited`` counts nodes."""
    found = []
    visited = 0
    stack = [(start,)]
    while stack:
        chain = stack.pop()
        visited += 1
        tail = chain[-1]
        if len(chain) >= min_len and splits_coprime(tail_quotient(*tail)):
            found.append(chain)
        if len(chain) < max_len:
            children = extend(tail, max_rho, max_level, max_height)
            for child in reversed(children):
                stack.append(chain + (child,))
    return found, visited
