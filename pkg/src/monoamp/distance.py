"""Exact distance from monotonicity.

The normalized distance of f to the nearest monotone function equals
(size of a maximum matching in the violating-pair graph) / 2^n, and by
Koenig's theorem the matching size equals the minimum vertex-cover size,
so every exact computation here ships with an equal-size cover as a
self-contained optimality certificate.

A brute-force oracle (enumerate every monotone function, n <= 5) provides
the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from . import kernels
from .boolfn import BoolFn

DEFAULT_EXACT_CAP = 14
BRUTEFORCE_ARITY_CAP = 5

METHOD_EXACT = "exact-matching"
METHOD_BRUTEFORCE = "brute-force"
METHOD_SAMPLED = "sampled-lower-bound"


class CertificateError(RuntimeError):
    """A matching/cover pair failed its optimality invariants."""


@dataclass
class ViolationGraph:
    """Bipartite graph between f^-1(1) and f^-1(0); edges are the pairs
    ordered against the function's values."""

    n: int
    left: np.ndarray        # all points with f=1, ascending
    right: np.ndarray       # all points with f=0, ascending
    edge_left: np.ndarray   # edge endpoints, sorted by (left, right)
    edge_right: np.ndarray

    @property
    def num_edges(self) -> int:
        return int(self.edge_left.size)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(zip(self.edge_left.tolist(), self.edge_right.tolist()))


@dataclass
class MatchingCertificate:
    """A matching plus a vertex cover of equal size.

    Equal sizes certify simultaneously that the matching is maximum and the
    cover minimum; ``validate_certificate`` checks this on every run.
    """

    matching: list[tuple[int, int]]
    cover: list[int]

    @property
    def size(self) -> int:
        return len(self.matching)


@dataclass
class EpsilonReport:
    epsilon: Fraction
    matching_size: int
    cube_size: int
    method: str
    certificate: Optional[MatchingCertificate] = None


def build_violation_graph(f: BoolFn, cap: int = DEFAULT_EXACT_CAP) -> ViolationGraph:
    """Enumerate every violating pair of f (streamed; only the edge list is
    materialized)."""
    if f.table is None:
        raise ValueError("violation graph needs a truth-table-backed function")
    if f.n > cap:
        raise ValueError(
            f"arity {f.n} above the exact-distance cap {cap}; raise the cap "
            "or use the sampled lower bound"
        )
    lefts, rights = kernels.violating_pairs(f.table, f.n)
    order = np.lexsort((rights, lefts))
    idx = np.arange(1 << f.n, dtype=np.int64)
    return ViolationGraph(
        n=f.n,
        left=idx[f.table == 1],
        right=idx[f.table == 0],
        edge_left=lefts[order],
        edge_right=rights[order],
    )


def max_matching(g: ViolationGraph) -> MatchingCertificate:
    """Maximum matching plus Koenig cover; validated before returning."""
    if g.num_edges == 0:
        cert = MatchingCertificate(matching=[], cover=[])
        validate_certificate(g, cert)
        return cert
    ul, inv_l = np.unique(g.edge_left, return_inverse=True)
    ur, inv_r = np.unique(g.edge_right, return_inverse=True)
    n_left = int(ul.size)
    n_right = int(ur.size)
    # edge_left is sorted, so inv_l is non-decreasing: CSR comes for free.
    indptr = np.zeros(n_left + 1, dtype=np.int64)
    np.cumsum(np.bincount(inv_l, minlength=n_left), out=indptr[1:])
    indices = inv_r.astype(np.int64)

    match_l, match_r = kernels.maximum_matching(n_left, n_right, indptr, indices)
    cover_l, cover_r = kernels.koenig_cover(
        n_left, n_right, indptr, indices, match_l, match_r
    )
    matched = np.nonzero(match_l >= 0)[0]
    matching = list(zip(ul[matched].tolist(), ur[match_l[matched]].tolist()))
    cover = sorted(ul[cover_l].tolist() + ur[cover_r].tolist())
    cert = MatchingCertificate(matching=matching, cover=cover)
    validate_certificate(g, cert)
    return cert


def validate_certificate(g: ViolationGraph, cert: MatchingCertificate) -> None:
    """Raise CertificateError unless the certificate proves optimality."""
    edges = g.edge_set()
    seen: set[int] = set()
    for a, b in cert.matching:
        if (a, b) not in edges:
            raise CertificateError(f"matched pair ({a}, {b}) is not a graph edge")
        if a in seen or b in seen:
            raise CertificateError(f"matching reuses a vertex in ({a}, {b})")
        seen.add(a)
        seen.add(b)
    cover = set(cert.cover)
    if len(cover) != len(cert.cover):
        raise CertificateError("cover lists a vertex twice")
    for a, b in edges:
        if a not in cover and b not in cover:
            raise CertificateError(f"edge ({a}, {b}) not covered")
    if len(cert.matching) != len(cover):
        raise CertificateError(
            f"|matching|={len(cert.matching)} != |cover|={len(cover)}; "
            "matching is not maximum or cover not minimum"
        )


def epsilon_exact(f: BoolFn, cap: int = DEFAULT_EXACT_CAP) -> EpsilonReport:
    """Exact distance via maximum matching, certificate attached."""
    g = build_violation_graph(f, cap=cap)
    cert = max_matching(g)
    return EpsilonReport(
        epsilon=Fraction(cert.size, 1 << f.n),
        matching_size=cert.size,
        cube_size=1 << f.n,
        method=METHOD_EXACT,
        certificate=cert,
    )


@lru_cache(maxsize=None)
def monotone_tables(n: int) -> np.ndarray:
    """All monotone functions of arity n, each packed as an integer mask
    with bit u holding the value at point u.

    Built by extending values along increasing point index (a linear
    extension of the hypercube order) and pruning non-monotone prefixes.
    """
    if not 1 <= n <= BRUTEFORCE_ARITY_CAP:
        raise ValueError(f"monotone enumeration supported for 1 <= n <= {BRUTEFORCE_ARITY_CAP}")
    size = 1 << n
    out: list[int] = []

    def extend(u: int, mask: int) -> None:
        if u == size:
            out.append(mask)
            return
        forced = False
        rest = u
        while rest:
            bit = rest & -rest
            if (mask >> (u ^ bit)) & 1:
                forced = True
                break
            rest ^= bit
        if not forced:
            extend(u + 1, mask)
        extend(u + 1, mask | (1 << u))

    extend(0, 0)
    return np.array(sorted(out), dtype=np.uint64)


def epsilon_bruteforce(f: BoolFn) -> EpsilonReport:
    """Minimum normalized Hamming distance to any monotone function, by
    enumeration. The independent oracle for the matching-based path."""
    if f.table is None:
        raise ValueError("brute force needs a truth-table-backed function")
    if f.n > BRUTEFORCE_ARITY_CAP:
        raise ValueError(
            f"brute force enumerates all monotone functions; arity {f.n} > "
            f"{BRUTEFORCE_ARITY_CAP} refused"
        )
    mask = 0
    for u in range(1 << f.n):
        mask |= int(f.table[u]) << u
    candidates = monotone_tables(f.n)
    distances = np.bitwise_count(candidates ^ np.uint64(mask))
    best = int(distances.min())
    return EpsilonReport(
        epsilon=Fraction(best, 1 << f.n),
        matching_size=best,
        cube_size=1 << f.n,
        method=METHOD_BRUTEFORCE,
        certificate=None,
    )


def certificate_json(cert: MatchingCertificate, n: int) -> dict:
    """Certificate in the CLI dump format: points as bitstrings."""
    fmt = f"0{n}b"
    return {
        "matching": [[format(a, fmt), format(b, fmt)] for a, b in cert.matching],
        "cover": [format(v, fmt) for v in cert.cover],
    }
