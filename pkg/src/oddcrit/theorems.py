"""Verdict evaluators for the sufficient-condition theorems.

Six sufficient conditions (labeled '1.1'..'1.6') assert that a graph meeting
parity, connectivity, order and minimum-degree hypotheses is k-critical for
odd factors with bound b whenever a size or spectral comparison against a
fixed extremal family holds -- unless the graph is that extremal family
itself.  The evaluators check the hypotheses literally, run the comparison at
the configured tolerance, and classify the outcome; a sweep driver confirms
positive verdicts by brute-force criticality and reports any falsification.

"Unless isomorphic to the extremal graph" is decided by label identity only:
graphs produced by this package's constructors carry a canonical labeling, and
general isomorphism testing is out of scope.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ParameterError, ScaleLimitError
from .factors import ENUMERATION_CAP, is_k_critical
from .graphs import ExtremalParams, Graph, extremal_gprime, family, g_star
from .spectral import spectral_radius
from .tolerances import DEFAULT_TOLERANCES, Tolerances

THEOREM_IDS = ("1.1", "1.2", "1.3", "1.4", "1.5", "1.6")

ASSERTS_CRITICAL = "asserts_critical"
EXTREMAL_EXCEPTION = "extremal_exception"
INAPPLICABLE = "inapplicable"
CONDITION_FAILS = "condition_fails"

#: comparison carried by each condition: the measured quantity and orientation
_CONDITION = {
    "1.1": ("size", "ge"),
    "1.2": ("adjacency", "ge"),
    "1.3": ("signless_laplacian", "ge"),
    "1.4": ("distance", "le"),
    "1.5": ("distance", "le"),
    "1.6": ("distance_signless_laplacian", "le"),
}


def _validate_bk(b: int, k: int) -> None:
    if b < 1 or b % 2 == 0:
        raise ParameterError(f"b must be a positive odd integer, got {b}")
    if k < 1:
        raise ParameterError(f"k must be a positive integer, got {k}")


def order_bound(theorem_id: str, b: int, k: int, delta: Optional[int] = None) -> Fraction:
    """Order lower bound n0(b, k, delta) of a theorem, as an exact rational."""
    _validate_bk(b, k)
    if theorem_id not in THEOREM_IDS:
        raise ParameterError(f"unknown theorem id {theorem_id!r}")
    if theorem_id == "1.4":
        return Fraction(b * b + 2 * b * k + 5 * b + 2 * k + 4, b)
    if delta is None or delta < 1:
        raise ParameterError(f"theorem {theorem_id} needs a positive delta")
    d = delta
    if theorem_id == "1.1":
        first = Fraction(
            b * b * k * k
            - 2 * b * b * k * d
            - 4 * b * b * k
            - b * k
            + b * b * d * d
            + 4 * b * b * d
            + 7 * b * d
            + b * b
            + 8 * b
            + 1,
            6 * b,
        )
        second = (b + 5) * d - (b + 4) * k - b + 1 + Fraction(5, b)
        return max(first, second)
    if theorem_id == "1.2":
        return Fraction(max(b * d * d - b * k, (2 * b + 3) * d - b * k + 1))
    if theorem_id == "1.3":
        return (2 * b + Fraction(43, 10)) * d - 2 * b * k + Fraction(11, 10)
    if theorem_id == "1.5":
        first = (
            (2 * b * b + 3 * b + 11) * d
            - (2 * b * b + Fraction(5 * b, 2) + Fraction(3, 2)) * k
            + Fraction(3 * b, 2)
            + 2
            + Fraction(3, 2 * b)
        )
        second = Fraction(2, 3) * b * b * d ** 3 + Fraction(4, 3) * b * b * k * d * d
        return max(first, second)
    # theorem 1.6
    first = Fraction((2 * b * b + 4 * b) * d * d + 2 * d + 2 * b * b * k * k)
    second = Fraction(6, 5) * b * b * d ** 3 + Fraction(8, 5) * b * b * k * d * d
    return max(first, second)


def extremal_graph_for(theorem_id: str, n: int, b: int, k: int, delta: Optional[int]) -> Graph:
    """The comparison graph of a theorem's size or spectral condition."""
    if theorem_id == "1.4":
        big = n - b - k - 2
        if big < 1:
            raise ParameterError(f"part n-b-k-2 = {big} must be >= 1")
        return family(k + 1, [big] + [1] * (b + 1))
    if delta is None:
        raise ParameterError(f"theorem {theorem_id} needs delta")
    return extremal_gprime(ExtremalParams(n, b, k, delta))


def exceptional_graphs_for(theorem_id: str, n: int, b: int, k: int, delta: Optional[int]) -> list[Graph]:
    """The graphs excluded from the criticality conclusion, under canonical labels."""
    if theorem_id == "1.4":
        out = [extremal_graph_for("1.4", n, b, k, delta)]
        if n - k - 1 >= 1:
            out.append(family(k, [n - k - 1, 1]))
        return out
    return [extremal_graph_for(theorem_id, n, b, k, delta)]


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one hypothesis-plus-condition evaluation."""

    theorem_id: str
    hypotheses: dict[str, bool]
    condition_met: bool
    condition_lhs: float
    condition_rhs: float
    conclusion: str

    @property
    def hypotheses_met(self) -> bool:
        return all(self.hypotheses.values())

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "hypotheses": dict(self.hypotheses),
            "hypotheses_met": self.hypotheses_met,
            "condition_met": self.condition_met,
            "condition_lhs": self.condition_lhs,
            "condition_rhs": self.condition_rhs,
            "conclusion": self.conclusion,
        }


def evaluate_theorem(
    g: Graph,
    theorem_id: str,
    b: int,
    k: int,
    delta: Optional[int] = None,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> TheoremVerdict:
    """Check one theorem's hypotheses and condition against a graph.

    Hypothesis failures yield conclusion 'inapplicable' rather than errors.
    Variant '1.4' only requires connectivity and ignores delta; the others
    require (k+1)-connectivity and minimum degree exactly delta.
    """
    if theorem_id not in THEOREM_IDS:
        raise ParameterError(f"unknown theorem id {theorem_id!r}")
    _validate_bk(b, k)
    n = g.n
    hyp: dict[str, bool] = {}
    hyp["parity"] = (n - k) % 2 == 0
    if theorem_id == "1.4":
        hyp["connectivity"] = g.n > 0 and g.is_connected()
        bound = order_bound(theorem_id, b, k)
    else:
        if delta is None or delta < 1:
            raise ParameterError(f"theorem {theorem_id} needs a positive delta")
        hyp["connectivity"] = g.is_k_connected(k + 1)
        hyp["min_degree"] = n > 0 and g.min_degree() == delta
        bound = order_bound(theorem_id, b, k, delta)
        if theorem_id == "1.6":
            hyp["factor_bound_dominates"] = b >= k
    hyp["order"] = Fraction(n) >= bound

    if not all(hyp.values()):
        return TheoremVerdict(theorem_id, hyp, False, float("nan"), float("nan"), INAPPLICABLE)

    quantity, orientation = _CONDITION[theorem_id]
    ext = extremal_graph_for(theorem_id, n, b, k, delta)
    if quantity == "size":
        lhs, rhs = float(g.edge_count()), float(ext.edge_count())
        met = lhs >= rhs
    else:
        lhs = spectral_radius(g, quantity)
        rhs = spectral_radius(ext, quantity)
        met = lhs >= rhs - tol.equality if orientation == "ge" else lhs <= rhs + tol.equality
    if not met:
        return TheoremVerdict(theorem_id, hyp, False, lhs, rhs, CONDITION_FAILS)
    if any(g == ex for ex in exceptional_graphs_for(theorem_id, n, b, k, delta)):
        return TheoremVerdict(theorem_id, hyp, True, lhs, rhs, EXTREMAL_EXCEPTION)
    return TheoremVerdict(theorem_id, hyp, True, lhs, rhs, ASSERTS_CRITICAL)


def gstar_ordering_check(
    n: int, b: int, k: int, *, tol: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """Strict radius ordering of the one-extra-edge graph between two families.

    Checks mu1(K_{k+1} v (K_{n-b-k-2} u (b+1)K_1)) < mu1(G*) <
    mu1(K_{k+2} v (K_{n-2b-k-3} u (2b+1)K_1)) with the strictness margin.
    """
    star = g_star(n, b, k)
    wide = extremal_graph_for("1.4", n, b, k, None)
    narrow = family(k + 2, [n - 2 * b - k - 3] + [1] * (2 * b + 1))
    mu_wide = spectral_radius(wide, "distance")
    mu_star = spectral_radius(star, "distance")
    mu_narrow = spectral_radius(narrow, "distance")
    return mu_wide < mu_star - tol.strict and mu_star < mu_narrow - tol.strict


def interlacing_bound_check(
    p: ExtremalParams, *, tol: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """mu1 of the extremal family is at least n - b*delta + b*k - 2.

    The join cell and the big clique together induce a complete subgraph of
    order n - b*delta + b*k - 1, and distance spectra interlace.
    """
    mu = spectral_radius(extremal_gprime(p), "distance")
    return mu >= p.n - p.b * p.delta + p.b * p.k - 2 - tol.equality


def eta_lower_bound_check(
    p: ExtremalParams, *, tol: Tolerances = DEFAULT_TOLERANCES
) -> Optional[bool]:
    """Whether eta1 of the extremal family exceeds 2n + 4b*delta - 4b*k + 1.

    Applies only when n >= 2(b^2+2b)delta^2 + 2delta + 2b^2k^2 (the regime in
    which the 4W/n lower bound gives this); returns None when inapplicable.
    """
    p.gprime_parts()  # validates
    n, b, k, d = p.n, p.b, p.k, p.delta
    if n < 2 * (b * b + 2 * b) * d * d + 2 * d + 2 * b * b * k * k:
        return None
    eta = spectral_radius(extremal_gprime(p), "distance_signless_laplacian")
    return eta > 2 * n + 4 * b * d - 4 * b * k + 1 + tol.strict


def ordering_lemma_check(
    lemma_id: str,
    s: int,
    parts: Sequence[int],
    p: Optional[int] = None,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Optional[bool]:
    """Radius comparisons between a join family and its flattened counterpart.

    '2.8': with n_1 >= ... >= n_t >= p >= 1 and n_1 < n - s - p(t-1), the
    distance radius strictly exceeds that of K_s v (K_{n-s-p(t-1)} u (t-1)K_p).
    '2.9': the distance-signless-Laplacian radius is >= that of
    K_s v (K_{n-s-t+1} u (t-1)K_1), with equality only for identical parts.
    '2.10': same comparison against K_s v (K_{n-s-p(t-1)} u (t-1)K_p) under
    n_1 >= 5p and t >= s+1.  Returns None when a lemma's hypotheses fail.
    """
    parts = list(parts)
    if s < 0 or not parts or any(x < 1 for x in parts):
        raise ParameterError("need s >= 0 and nonempty positive parts")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ParameterError("parts must be sorted in nonincreasing order")
    t = len(parts)
    n = s + sum(parts)

    if lemma_id == "2.8":
        if p is None or p < 1 or parts[-1] < p:
            return None
        big = n - s - p * (t - 1)
        if parts[0] >= big:
            return None
        lhs = spectral_radius(family(s, parts), "distance")
        rhs = spectral_radius(family(s, [big] + [p] * (t - 1)), "distance")
        return lhs > rhs + tol.strict

    if lemma_id == "2.9":
        flat = [n - s - t + 1] + [1] * (t - 1)
    elif lemma_id == "2.10":
        if p is None or p < 1 or parts[-1] < p or parts[0] < 5 * p or t < s + 1:
            return None
        flat = [n - s - p * (t - 1)] + [p] * (t - 1)
    else:
        raise ParameterError(f"unknown lemma id {lemma_id!r}")

    lhs = spectral_radius(family(s, parts), "distance_signless_laplacian")
    rhs = spectral_radius(family(s, flat), "distance_signless_laplacian")
    if sorted(parts, reverse=True) == sorted(flat, reverse=True):
        return abs(lhs - rhs) <= tol.equality
    return lhs > rhs + tol.strict


@dataclass
class SweepReport:
    """Per-graph records of a theorem sweep plus the falsification count."""

    theorem_id: str
    records: list[dict] = field(default_factory=list)

    @property
    def falsifications(self) -> list[dict]:
        return [r for r in self.records if r.get("falsification")]

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "graphs": len(self.records),
            "falsification_count": len(self.falsifications),
            "records": self.records,
        }

    def to_json(self) -> str:
        return json.dumps(_format_floats(self.as_dict()), indent=2, sort_keys=True) + "\n"


def _format_floats(obj):
    """Round floats to 12 significant digits for byte-stable reports."""
    if isinstance(obj, float):
        return float(format(obj, ".12g"))
    if isinstance(obj, dict):
        return {key: _format_floats(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_format_floats(val) for val in obj]
    return obj


def counterexample_sweep(
    corpus,
    b: int,
    k: int,
    delta: Optional[int],
    theorem_id: str,
    *,
    cap: int = ENUMERATION_CAP,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SweepReport:
    """Evaluate a theorem over a corpus, brute-force checking every assertion.

    ``corpus`` yields (graph_id, Graph) pairs.  Graphs whose hypotheses and
    condition hold are checked by exhaustive criticality: an asserted graph
    that fails the brute force becomes a falsification record with its witness.
    Extremal exceptions are confirmed non-critical the same way.  Graphs above
    the enumeration cap produce per-graph error records, not failures.
    """
    report = SweepReport(theorem_id)
    for graph_id, g in corpus:
        verdict = evaluate_theorem(g, theorem_id, b, k, delta, tol=tol)
        record: dict = {"graph_id": str(graph_id), **verdict.as_dict()}
        record["brute_force_verdict"] = None
        record["witness"] = None
        record["falsification"] = False
        if verdict.conclusion in (ASSERTS_CRITICAL, EXTREMAL_EXCEPTION):
            try:
                brute = is_k_critical(g, b, k, cap=cap)
            except ScaleLimitError as exc:
                record["error"] = str(exc)
            else:
                record["brute_force_verdict"] = brute.critical
                record["witness"] = (
                    sorted(brute.witness) if brute.witness is not None else None
                )
                record["subsets_examined"] = brute.subsets_examined
                if verdict.conclusion == ASSERTS_CRITICAL and not brute.critical:
                    record["falsification"] = True
        report.records.append(record)
    return report


def one_edge_supergraphs(g: Graph) -> list[tuple[str, Graph]]:
    """All graphs obtained from g by adding a single missing edge."""
    return [(f"+{u}-{v}", g.with_edge(u, v)) for u, v in g.non_edges()]


__all__ = [
    "ASSERTS_CRITICAL",
    "CONDITION_FAILS",
    "EXTREMAL_EXCEPTION",
    "INAPPLICABLE",
    "THEOREM_IDS",
    "SweepReport",
    "TheoremVerdict",
    "counterexample_sweep",
    "eta_lower_bound_check",
    "evaluate_theorem",
    "exceptional_graphs_for",
    "extremal_graph_for",
    "gstar_ordering_check",
    "interlacing_bound_check",
    "one_edge_supergraphs",
    "order_bound",
    "ordering_lemma_check",
]
