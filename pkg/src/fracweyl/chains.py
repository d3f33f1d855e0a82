"""Chains of corners S_j = (A_j, (rho_j, sigma_j), l_j): the necessary
conditions they satisfy, a pruning rule, and a bounded exhaustive search for
the complete chain with the smallest v_{1,1}(A_0)."""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Tuple

from . import _core
from .algebra import SupportPoint
from .errors import PreconditionError
from .valuation import Direction, dir_cmp

CHECKPOINT_ENV = "FRACWEYL_CHECKPOINT_DIR"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class ChainNode:
    A: SupportPoint
    dir: Direction
    level: int

    @classmethod
    def make(cls, x, y: int, rho: int, sigma: int, level: int) -> "ChainNode":
        return cls(SupportPoint.of(Fraction(x), y), Direction(rho, sigma), level)

    def weight(self, d: Optional[Direction] = None) -> Fraction:
        d = self.dir if d is None else d
        return d.rho * self.A.x + d.sigma * self.A.y

    def to_json(self) -> dict:
        xnum = self.A.x * self.level
        if xnum.denominator != 1:
            raise ValueError(f"A = {self.A} is not on the 1/{self.level} lattice")
        return {"A_xnum": int(xnum), "A_y": self.A.y, "rho": self.dir.rho,
                "sigma": self.dir.sigma, "level": self.level}

    @classmethod
    def from_json(cls, obj: dict) -> "ChainNode":
        level = int(obj["level"])
        if level <= 0:
            raise ValueError("node level must be positive")
        return cls(SupportPoint(int(obj["A_xnum"]), level, int(obj["A_y"])),
                   Direction(int(obj["rho"]), int(obj["sigma"])), level)

    def as_tuple(self) -> Tuple[int, int, int, int, int]:
        return tuple(self.to_json()[k] for k in ("A_xnum", "A_y", "level", "rho", "sigma"))

    @classmethod
    def from_tuple(cls, t) -> "ChainNode":
        xnum, y, level, rho, sigma = t
        return cls(SupportPoint(xnum, level, y), Direction(rho, sigma), level)

    def __repr__(self):
        return f"(({self.A.x},{self.A.y}),{self.dir},{self.level})"


@dataclass(frozen=True)
class Chain:
    nodes: Tuple[ChainNode, ...]
    mn: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("a chain needs at least one node")

    @property
    def tail(self) -> ChainNode:
        return self.nodes[-1]

    def v11_start(self) -> Fraction:
        a = self.nodes[0].A
        return a.x + a.y

    def to_json(self) -> dict:
        m, n = self.mn if self.mn else (None, None)
        return {"m": m, "n": n, "nodes": [s.to_json() for s in self.nodes]}

    @classmethod
    def from_json(cls, obj: dict) -> "Chain":
        nodes = tuple(ChainNode.from_json(o) for o in obj["nodes"])
        m, n = obj.get("m"), obj.get("n")
        return cls(nodes, (int(m), int(n)) if m is not None and n is not None else None)


# ---------------------------------------------------------------------------
# the eight conditions


def _in_lattice(p: SupportPoint, level: int, allow_zero_y: bool = False) -> bool:
    """p in (1/level)N x N with positive first coordinate."""
    if p.x <= 0 or (p.x * level).denominator != 1:
        return False
    return p.y >= 0 if allow_zero_y else p.y > 0


def lower_witness(node: ChainNode) -> Optional[SupportPoint]:
    """Condition (6): A' with positive first coordinate in (1/l)Z, second
    coordinate >= 0, on the line v_dir(A') = v_dir(A) and with larger x - y."""
    d, A, level = node.dir, node.A, node.level
    if d.rho <= 0 or not d.interior():
        return None
    c = node.weight()
    for t in range(A.y - 1, -1, -1):
        x = (c - d.sigma * t) / d.rho
        cand = SupportPoint.of(x, t)
        if cand.x - cand.y > A.x - A.y and _in_lattice(cand, level, allow_zero_y=True):
            return cand
    return None


@dataclass
class ConditionReport:
    results: Dict[int, bool]
    details: Dict[int, str] = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(self.results.values())

    def failed(self) -> List[int]:
        return [k for k, ok in sorted(self.results.items()) if not ok]

    def to_json(self) -> dict:
        return {"all_pass": self.all_pass,
                "conditions": [{"condition": k, "pass": ok, "detail": self.details.get(k, "")}
                               for k, ok in sorted(self.results.items())]}


def _check_mn(m: int, n: int):
    if m <= 1 or n <= 1 or gcd(m, n) != 1:
        raise PreconditionError("m and n must be coprime and greater than 1")


def check_conditions(chain: Chain, m: int, n: int) -> ConditionReport:
    _check_mn(m, n)
    nodes = chain.nodes
    res: Dict[int, bool] = {}
    det: Dict[int, str] = {}

    def note(k, ok, msg):
        res[k] = res.get(k, True) and ok
        if not ok and k not in det:
            det[k] = msg

    # (1) levels
    note(1, nodes[0].level == 1, "l_0 must be 1")
    for j in range(1, len(nodes)):
        want = lcm(nodes[j - 1].dir.rho, nodes[j - 1].level)
        note(1, nodes[j].level == want, f"l_{j} should be {want}")
    for j, s in enumerate(nodes):
        # (2) lattice membership with positive coordinates
        note(2, _in_lattice(s.A, s.level), f"A_{j} not in (1/l)N x N")
        # (3) sign conditions
        note(3, s.A.x - s.A.y < 0 and s.weight() > 0, f"A_{j} fails the sign conditions")
        # (6) lower witness
        note(6, lower_witness(s) is not None, f"no witness below A_{j}")
    # (4) decreasing directions, below (1,0)
    note(4, dir_cmp(nodes[0].dir, Direction(1, 0)) < 0, "d_0 must be below (1,0)")
    for j in range(1, len(nodes)):
        note(4, dir_cmp(nodes[j].dir, nodes[j - 1].dir) < 0, f"d_{j} not below d_{j-1}")
    # (5) consecutive corners share the previous edge line
    res.setdefault(5, True)
    for j in range(1, len(nodes)):
        prev = nodes[j - 1]
        note(5, nodes[j].weight(prev.dir) == prev.weight(), f"A_{j} off the edge of S_{j-1}")
    # (7) scaled corner stays on the lattice when the corner moves
    res.setdefault(7, True)
    for j in range(len(nodes) - 1):
        s = nodes[j]
        if s.A != nodes[j + 1].A:
            v = s.weight()
            ok = False
            if v > 0:
                k = Fraction(s.dir.total()) / v
                sy = k * s.A.y
                ok = sy.denominator == 1 and _in_lattice(SupportPoint.of(k * s.A.x, int(sy)),
                                                         s.level)
            note(7, ok, f"scaled A_{j} leaves the lattice")
    # (8) terminal degree
    tail = nodes[-1]
    note(8, tail.weight() == Fraction(tail.dir.total(), m + n),
         "tail degree differs from (rho+sigma)/(m+n)")
    return ConditionReport({k: res[k] for k in sorted(res)}, det)


def mn_candidates(tail: ChainNode) -> List[Tuple[int, int]]:
    v = tail.weight()
    if v <= 0:
        raise PreconditionError("mn_candidates needs v_dir(A) > 0")
    q = Fraction(tail.dir.total()) / v
    if q.denominator != 1 or q < 5:
        return []
    q = int(q)
    return [(m, q - m) for m in range(2, q - 1) if gcd(m, q - m) == 1]


def lema_general_filter(node: ChainNode) -> str:
    """'reject' iff A = (r - 1/l, r) for an integer r >= 2."""
    A = node.A
    if A.y >= 2 and A.x == A.y - Fraction(1, node.level):
        return "reject"
    return "keep"


def is_complete(chain: Chain) -> Optional[Tuple[int, int]]:
    """The first admissible (m, n) making every condition pass, if any."""
    try:
        options = mn_candidates(chain.tail)
    except PreconditionError:
        return None
    for m, n in options:
        if check_conditions(chain, m, n).all_pass:
            return m, n
    return None


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class SearchBounds:
    max_start_v11: Fraction
    max_rho: int
    max_level: int
    max_len: int
    max_A_height: Optional[int] = None

    def __post_init__(self):
        for name in ("max_rho", "max_level", "max_len"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_start_v11 <= 0:
            raise ValueError("max_start_v11 must be positive")
        if self.max_A_height is not None and self.max_A_height <= 0:
            raise ValueError("max_A_height must be positive")

    @property
    def height(self) -> int:
        cap = int(Fraction(self.max_start_v11))
        return cap if self.max_A_height is None else min(cap, self.max_A_height)

    def to_json(self) -> dict:
        return {"max_start_v11": str(Fraction(self.max_start_v11)), "max_rho": self.max_rho,
                "max_level": self.max_level, "max_len": self.max_len,
                "max_A_height": self.max_A_height}

    @classmethod
    def from_json(cls, obj: dict) -> "SearchBounds":
        return cls(Fraction(obj["max_start_v11"]), int(obj["max_rho"]), int(obj["max_level"]),
                   int(obj["max_len"]),
                   None if obj.get("max_A_height") is None else int(obj["max_A_height"]))


@dataclass
class SearchCertificate:
    bounds: SearchBounds
    survivors: List[Chain]
    explored_count: int
    checkpoint_digest: str
    start_count: int = 0

    @property
    def bound(self) -> Optional[Fraction]:
        return min((c.v11_start() for c in self.survivors), default=None)

    def to_json(self) -> dict:
        b = self.bound
        return {"bounds": self.bounds.to_json(),
                "start_count": self.start_count,
                "explored_count": self.explored_count,
                "survivor_count": len(self.survivors),
                "min_start_v11": None if b is None else str(b),
                "survivors": [c.to_json() for c in self.survivors],
                "checkpoint_digest": self.checkpoint_digest}


def extend_candidates(partial: Chain, bounds: SearchBounds) -> List[ChainNode]:
    tail = partial.tail
    out = _core.kernels.extend(tail.as_tuple(), bounds.max_rho, bounds.max_level, bounds.height)
    return [ChainNode.from_tuple(t) for t in out]


def start_candidates(bounds: SearchBounds) -> List[ChainNode]:
    cap = int(Fraction(bounds.max_start_v11))
    return [ChainNode.from_tuple(t)
            for t in _core.kernels.start_nodes(cap, bounds.max_rho, bounds.height)]


def _label(chain_tuple) -> Chain:
    chain = Chain(tuple(ChainNode.from_tuple(t) for t in chain_tuple))
    options = mn_candidates(chain.tail)
    return Chain(chain.nodes, options[0] if options else None)


def _explore_batch(args):
    starts, bounds_json, min_len = args
    bounds = SearchBounds.from_json(bounds_json)
    out = []
    for index, start in starts:
        found, visited = _core.kernels.explore(tuple(start), bounds.max_rho, bounds.max_level,
                                               bounds.height, bounds.max_len, min_len)
        out.append((index, [list(map(list, c)) for c in found], visited))
    return out


def _header_digest(bounds: SearchBounds, min_len: int) -> str:
    blob = json.dumps({"bounds": bounds.to_json(), "min_len": min_len,
                       "version": FORMAT_VERSION}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _read_checkpoint(path: str, header: str) -> Dict[int, Tuple[list, int]]:
    done: Dict[int, Tuple[list, int]] = {}
    if not os.path.exists(path):
        return done
    with open(path) as fh:
        lines = fh.read().split("\n")
    if not lines or not lines[0]:
        return done
    try:
        head = json.loads(lines[0])
    except json.JSONDecodeError:
        return done
    if head.get("digest") != header:
        raise PreconditionError("checkpoint belongs to a different search")
    for line in lines[1:]:
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            break  # torn final record from an interrupted run
        done[rec["index"]] = (rec["survivors"], rec["visited"])
    return done


def search_min_chain(bounds: SearchBounds, workers: int = 1,
                     checkpoint: Optional[str] = None, min_len: int = 2,
                     batch_size: int = 64) -> SearchCertificate:
    """Depth-first search over start nodes in ascending v_{1,1} order.

    Results are merged by start index, so the certificate does not depend on
    the worker count or on how often the run was interrupted."""
    starts = _core.kernels.start_nodes(int(Fraction(bounds.max_start_v11)),
                                       bounds.max_rho, bounds.height)
    header = _header_digest(bounds, min_len)
    done: Dict[int, Tuple[list, int]] = {}
    fh = None
    if checkpoint:
        done = _read_checkpoint(checkpoint, header)
        fresh = not os.path.exists(checkpoint) or os.path.getsize(checkpoint) == 0
        fh = open(checkpoint, "a")
        if fresh:
            fh.write(json.dumps({"kind": "header", "digest": header,
                                 "bounds": bounds.to_json()}) + "\n")
            fh.flush()
    pending = [(i, s) for i, s in enumerate(starts) if i not in done]
    batches = [pending[k:k + batch_size] for k in range(0, len(pending), batch_size)]
    jobs = [(b, bounds.to_json(), min_len) for b in batches]

    def record(results):
        for index, found, visited in results:
            done[index] = (found, visited)
            if fh:
                fh.write(json.dumps({"kind": "start", "index": index,
                                     "survivors": found, "visited": visited}) + "\n")
        if fh:
            fh.flush()

    try:
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for results in pool.map(_explore_batch, jobs):
                    record(results)
        else:
            for job in jobs:
                record(_explore_batch(job))
    finally:
        if fh:
            fh.close()

    survivors: List[Chain] = []
    explored = 0
    for i in range(len(starts)):
        found, visited = done[i]
        explored += visited
        survivors.extend(_label(tuple(tuple(t) for t in c)) for c in found)
    blob = json.dumps({"bounds": bounds.to_json(), "explored": explored,
                       "survivors": [c.to_json() for c in survivors]}, sort_keys=True)
    digest = hashlib.sha256(blob.encode()).hexdigest()
    return SearchCertificate(bounds, survivors, explored, digest, len(starts))


# ---------------------------------------------------------------------------
# corner cases (r, s) of the leading root


@dataclass(frozen=True)
class CornerCase:
    r: int
    s: int
    mu: Fraction
    inner: Tuple[int, int]
    direction: Direction
    st_candidates: Tuple[Tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "mu": str(self.mu), "inner": list(self.inner),
                "direction": [self.direction.rho, self.direction.sigma],
                "st_candidates": [list(p) for p in self.st_candidates]}


def corner_case_enumerator(r: int, s: int) -> List[CornerCase]:
    """For each mu in (0,1) with mu*(r,s) integral and != (1,1): the inner
    corner, its direction val(inner - (1,1)) and the possible start corners
    (r + g*sigma, s - g*rho), g >= 1, in N_0 x N_0."""
    if not 0 < r < s:
        raise PreconditionError("need 0 < r < s")
    g = gcd(r, s)
    cases = []
    for k in range(1, g):
        mu = Fraction(k, g)
        r1, s1 = r * k // g, s * k // g
        if (r1, s1) == (1, 1):
            continue
        d = _val_int(r1 - 1, s1 - 1)
        sts = []
        gamma = 1
        while True:
            a, b = r + gamma * d.sigma, s - gamma * d.rho
            if a < 0 or b < 0:
                break
            sts.append((a, b))
            gamma += 1
        cases.append(CornerCase(r, s, mu, (r1, s1), d, tuple(sts)))
    return cases


def _val_int(a: int, b: int) -> Direction:
    from .valuation import val_of_point
    return val_of_point(SupportPoint(a, 1, b))


def corner_cases_upto(N: int, table: Optional["ExternalTable"] = None) -> Dict[Tuple[int, int], List[CornerCase]]:
    """Range mode: all (r, s) with 0 < r < s, r + s <= N that have cases.
    With a table, keep only what it admits."""
    out = {}
    for total in range(3, N + 1):
        for r in range(1, (total + 1) // 2):
            s = total - r
            cases = corner_case_enumerator(r, s)
            if table is not None:
                if not table.admits_pair(r, s):
                    continue
                cases = [c for c in cases if table.admits_inner(r, s, c.inner)]
            if cases:
                out[(r, s)] = cases
    return out


class ExternalTable:
    """Outcomes of constraints proved elsewhere, shipped as data.

    ``pairs`` lists admitted (r, s) up to ``coverage`` (r + s); ``inner``
    lists admitted inner corners per pair and ``start`` the start corners
    surviving the last constraint.  Pairs beyond the coverage are admitted
    (the table has nothing to say about them)."""

    def __init__(self, data: dict):
        self.source = data.get("source", "")
        self.coverage = int(data["coverage"])
        self.pairs = {tuple(p["pair"]): p for p in data["pairs"]}

    @classmethod
    def bundled(cls) -> "ExternalTable":
        path = os.path.join(os.path.dirname(__file__), "data", "external_corner_table.json")
        with open(path) as fh:
            return cls(json.load(fh))

    def admits_pair(self, r: int, s: int) -> bool:
        if r + s > self.coverage:
            return True
        return (r, s) in self.pairs

    def admits_inner(self, r: int, s: int, inner) -> bool:
        entry = self.pairs.get((r, s))
        if entry is None:
            return r + s > self.coverage
        return [*inner] in entry["inner"]

    def surviving_starts(self, r: int, s: int, inner) -> Optional[List[Tuple[int, int]]]:
        entry = self.pairs.get((r, s))
        if entry is None:
            return None
        key = f"{inner[0]},{inner[1]}"
        return [tuple(p) for p in entry["start"].get(key, [])]
