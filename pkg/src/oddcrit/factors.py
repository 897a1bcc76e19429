"""Existence of odd factors and k-criticality by odd-component counting.

A spanning subgraph in which every degree lies in {1, 3, ..., b} (b odd) is an
odd factor with bound b.  A graph is k-critical for that property when the
factor survives the deletion of any k vertices.  Both questions reduce to an
odd-component inequality: the factor exists after deleting any k vertices iff

    o(G - S)  <=  sum_{v in S} f(v)  -  max{ sum_{v in X} f(v) : X <= S, |X| = k }

holds for every S with |S| >= k (for constant f == b the right side is
b(|S| - k)).  The checkers below enumerate S exhaustively in increasing size
with early exit, which is exact and fast enough up to ~22 vertices; a
backtracking search over edge subsets provides an independent constructive
oracle at very small scale.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from .errors import ParameterError, ScaleLimitError
from .graphs import ExtremalParams, Graph

#: default cap on the order of graphs accepted for exhaustive subset enumeration
ENUMERATION_CAP = 22

#: size limits of the constructive odd-factor search
ORACLE_MAX_VERTICES = 12
ORACLE_MAX_EDGES = 24


@dataclass(frozen=True)
class FactorSpec:
    """Per-vertex odd degree bounds and a criticality order.

    ``f`` is either one odd positive integer (the constant [1,b] case) or a
    per-vertex sequence of odd positive integers.
    """

    f: Union[int, tuple[int, ...]]
    k: int = 0

    def __post_init__(self):
        values = (self.f,) if isinstance(self.f, int) else tuple(self.f)
        if not values:
            raise ParameterError("factor bounds must be nonempty")
        for x in values:
            if x < 1 or x % 2 == 0:
                raise ParameterError(f"factor bound {x} must be a positive odd integer")
        if self.k < 0:
            raise ParameterError(f"criticality order k={self.k} must be >= 0")
        if not isinstance(self.f, int):
            object.__setattr__(self, "f", values)

    def values_for(self, n: int) -> tuple[int, ...]:
        if isinstance(self.f, int):
            return (self.f,) * n
        if len(self.f) != n:
            raise ParameterError(
                f"per-vertex bounds cover {len(self.f)} vertices, graph has {n}"
            )
        return self.f


@dataclass(frozen=True)
class CriticalityVerdict:
    """Outcome of the odd-component criterion.

    ``witness`` is a violating vertex set S (present iff not critical);
    ``subsets_examined`` counts the subsets actually tested.
    """

    critical: bool
    witness: Optional[frozenset[int]]
    subsets_examined: int


def _subsets_of_size(n: int, size: int):
    """All size-subsets of {0..n-1} as bitmasks, in increasing numeric order."""
    if size == 0:
        yield 0
        return
    v = (1 << size) - 1
    limit = 1 << n
    while v < limit:
        yield v
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r


def _odd_components_bounded(adj, alive: int, bound: int) -> int:
    """Odd components among ``alive``, scanning only until a verdict is known.

    Returns the exact count unless it can stop early: once the count exceeds
    ``bound`` (violation certain) or once the remaining vertices cannot push
    it above ``bound`` (compliance certain, returns a value <= bound).
    """
    odd = 0
    rem = alive
    while rem:
        if odd > bound:
            return odd
        if odd + rem.bit_count() <= bound:
            return odd
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & rem & ~comp
            comp |= frontier
        rem ^= comp
        odd += comp.bit_count() & 1
    return odd


def _find_violation(
    g: Graph,
    fvals: Sequence[int],
    k: int,
    *,
    cap: int,
    skip_settled_sizes: bool,
    max_size: Optional[int] = None,
):
    """First S (by size, then numeric bitmask order) violating the criterion.

    Returns ``(mask, odd_count, bound, examined)`` or ``(None, 0, 0, examined)``.
    S ranges over k <= |S| <= n-1: deleting everything leaves no components, so
    S = V can never violate and is skipped.  When ``skip_settled_sizes`` is on,
    sizes s with n - s <= min(f) * (s - k) are discharged arithmetically
    (o(G-S) <= n - |S| always).
    """
    n = g.n
    if n > cap:
        raise ScaleLimitError(
            f"graph order {n} exceeds the enumeration cap {cap}; "
            "raise the cap explicitly to run anyway"
        )
    adj = g.adjacency_rows
    full = (1 << n) - 1
    constant = len(set(fvals)) <= 1
    fmin = min(fvals) if fvals else 1
    top = n - 1 if max_size is None else min(max_size, n - 1)
    examined = 0
    for size in range(k, top + 1):
        if skip_settled_sizes and n - size <= fmin * (size - k):
            break
        bound = fvals[0] * (size - k) if constant else None
        for mask in _subsets_of_size(n, size):
            examined += 1
            if not constant:
                chosen = sorted((fvals[i] for i in _mask_bits(mask)), reverse=True)
                bound = sum(chosen) - sum(chosen[:k])
            odd = _odd_components_bounded(adj, full & ~mask, bound)
            if odd > bound:
                return mask, odd, bound, examined
    return None, 0, 0, examined


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _as_spec(f, k: int) -> FactorSpec:
    if isinstance(f, FactorSpec):
        if f.k != k:
            raise ParameterError(f"factor spec has k={f.k}, expected k={k}")
        return f
    return FactorSpec(f, k)


def has_odd_factor(g: Graph, f, *, cap: int = ENUMERATION_CAP) -> bool:
    """Whether G has a spanning subgraph with every degree odd and <= f(v).

    ``f`` is an odd integer bound, a per-vertex sequence, or a FactorSpec with
    k=0.  Decided by exhaustive subset enumeration (S = empty set alone forces
    o(G) = 0, so odd-order graphs always fail).
    """
    spec = _as_spec(f, 0)
    if g.n == 0:
        return True
    mask, _, _, _ = _find_violation(
        g, spec.values_for(g.n), 0, cap=cap, skip_settled_sizes=True
    )
    return mask is None


def is_k_critical(
    g: Graph,
    f,
    k: Optional[int] = None,
    *,
    cap: int = ENUMERATION_CAP,
    skip_settled_sizes: bool = True,
) -> CriticalityVerdict:
    """Whether deleting any k vertices leaves a graph with an odd factor.

    Exhaustive check of the odd-component criterion over all S with |S| >= k,
    in increasing size with early exit on the first violation; the witness of
    a negative verdict is the first violating set in (size, numeric) order.
    ``skip_settled_sizes=False`` forces the literal full scan.
    """
    spec = f if isinstance(f, FactorSpec) else FactorSpec(f, 0 if k is None else k)
    if k is not None and spec.k != k:
        spec = FactorSpec(spec.f, k)
    if g.n < spec.k + 2:
        raise ParameterError(f"criticality needs n >= k+2, got n={g.n}, k={spec.k}")
    mask, odd, bound, examined = _find_violation(
        g, spec.values_for(g.n), spec.k, cap=cap, skip_settled_sizes=skip_settled_sizes
    )
    if mask is None:
        return CriticalityVerdict(True, None, examined)
    return CriticalityVerdict(False, frozenset(_mask_bits(mask)), examined)


def is_k_critical_definitional(g: Graph, b: int, k: int, *, cap: int = ENUMERATION_CAP) -> bool:
    """Definitional route: every k-vertex deletion leaves a graph with an odd factor.

    Exponentially slower than the criterion route; used as the agreement
    cross-check at small scale.
    """
    if k < 0:
        raise ParameterError(f"criticality order k={k} must be >= 0")
    if g.n < k + 2:
        raise ParameterError(f"criticality needs n >= k+2, got n={g.n}, k={k}")
    for removal in combinations(range(g.n), k):
        if not has_odd_factor(g.without_vertices(removal), b, cap=cap):
            return False
    return True


def criticality_witness_extremal(p: ExtremalParams) -> frozenset[int]:
    """The join cell of the main extremal family as a criticality violation.

    Deleting those delta vertices leaves the big clique (odd order, forced by
    the parity constraints) plus b*delta - b*k + 1 isolated vertices, so
    o(G'-S) = b*delta - b*k + 2 > b*(delta - k): the family is never k-critical.
    """
    p.gprime_parts()  # validates
    return frozenset(range(p.delta))


def find_odd_factor(g: Graph, b: int) -> Optional[tuple[tuple[int, int], ...]]:
    """Constructive oracle: an edge set whose spanning subgraph has all degrees
    odd and <= b, or None if no such subgraph exists.

    Depth-first search over edges with degree-parity pruning; capped at
    12 vertices / 24 edges, which is all the oracle is meant for.
    """
    if b < 1 or b % 2 == 0:
        raise ParameterError(f"bound b={b} must be a positive odd integer")
    n = g.n
    edges = sorted(g.edges())
    if n > ORACLE_MAX_VERTICES or len(edges) > ORACLE_MAX_EDGES:
        raise ScaleLimitError(
            f"oracle scale: limited to n <= {ORACLE_MAX_VERTICES} and "
            f"e <= {ORACLE_MAX_EDGES}, got n={n}, e={len(edges)}"
        )
    if n == 0:
        return ()
    if any(d == 0 for d in g.degrees()):
        return None
    remaining = g.degrees()
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def feasible(v: int) -> bool:
        # v still needs an odd final degree: an even current degree requires
        # at least one undecided incident edge (the jump to b+1 cannot occur
        # because b is odd).
        return deg[v] % 2 == 1 or remaining[v] >= 1

    def search(i: int) -> bool:
        if i == len(edges):
            return all(d % 2 == 1 for d in deg)
        u, v = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        if deg[u] < b and deg[v] < b:
            deg[u] += 1
            deg[v] += 1
            if feasible(u) and feasible(v):
                chosen.append((u, v))
                if search(i + 1):
                    return True
                chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if feasible(u) and feasible(v) and search(i + 1):
            return True
        remaining[u] += 1
        remaining[v] += 1
        return False

    return tuple(chosen) if search(0) else None
