"""Boolean functions on the hypercube as queryable oracles.

Conventions used throughout the package:

* A point of {0,1}^n is stored as an integer whose binary string, written
  with n digits, reads coordinate 1 first. Coordinate ``i`` (0-based) is
  bit ``n-1-i`` of the integer, so the integer value of a point equals its
  position in the truth-table file format below.
* The partial order is coordinatewise: ``x <= y`` iff the support of x is
  a submask of the support of y.

Truth-table file format (CLI and fixtures): first line ``n=<int>``, second
line ``2^n`` characters of ``0``/``1`` in lexicographic input order, the
all-zeros input first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .kernels import first_violated_edge

TABLE_ARITY_CAP = 24

PAD_COORDS = 6
PAD_FIRE_LOW = 1 / 3
PAD_FIRE_HIGH = 2 / 3


@dataclass(frozen=True)
class Point:
    """A vertex of {0,1}^n."""

    bits: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative arity {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits:#x} out of range for n={self.n}")

    @classmethod
    def from_string(cls, s: str) -> "Point":
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {s!r}")
        return cls(int(s, 2), len(s))

    def to_string(self) -> str:
        return format(self.bits, f"0{self.n}b")

    def coord(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"coordinate {i} out of range for n={self.n}")
        return (self.bits >> (self.n - 1 - i)) & 1

    def with_coord(self, i: int, value: int) -> "Point":
        bit = 1 << (self.n - 1 - i)
        bits = (self.bits | bit) if value else (self.bits & ~bit)
        return Point(bits, self.n)

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_below(self, other: "Point") -> bool:
        """Coordinatewise x <= y."""
        if self.n != other.n:
            raise ValueError("points of different arity are incomparable")
        return self.bits & ~other.bits == 0

    def __str__(self) -> str:
        return self.to_string()


class BoolFn:
    """Oracle access to f: {0,1}^n -> {0,1} with query accounting.

    Backed either by a materialized truth table (arity <= 24) or by a
    virtual evaluator taking the integer form of a point. Evaluation never
    mutates the function; ``query_count`` is the only mutable state. When
    evaluating from several workers, give each worker its own copy and merge
    the counters afterwards.
    """

    def __init__(
        self,
        n: int,
        *,
        table: Optional[np.ndarray] = None,
        evaluator: Optional[Callable[[int], int]] = None,
        name: str = "",
    ):
        if (table is None) == (evaluator is None):
            raise ValueError("exactly one of table/evaluator must be given")
        if n < 1:
            raise ValueError(f"arity must be >= 1, got {n}")
        if table is not None:
            if n > TABLE_ARITY_CAP:
                raise ValueError(
                    f"truth-table backing limited to n <= {TABLE_ARITY_CAP}, got {n}"
                )
            table = np.ascontiguousarray(table, dtype=np.uint8)
            if table.shape != (1 << n,):
                raise ValueError(
                    f"table length {table.shape} does not match arity {n}"
                )
            if not np.isin(table, (0, 1)).all():
                raise ValueError("table entries must be 0 or 1")
        self.n = n
        self.table = table
        self._evaluator = evaluator
        self.name = name
        self.query_count = 0

    @classmethod
    def from_table(cls, table, name: str = "") -> "BoolFn":
        table = np.asarray(table, dtype=np.uint8)
        n = int(table.size).bit_length() - 1
        if 1 << n != table.size:
            raise ValueError(f"table length {table.size} is not a power of two")
        return cls(n, table=table, name=name)

    @classmethod
    def from_evaluator(cls, n: int, evaluator: Callable[[int], int], name: str = "") -> "BoolFn":
        return cls(n, evaluator=evaluator, name=name)

    @property
    def is_table_backed(self) -> bool:
        return self.table is not None

    def eval(self, x: Point) -> int:
        """Counted oracle query."""
        if x.n != self.n:
            raise ValueError(f"arity mismatch: point has n={x.n}, oracle n={self.n}")
        self.query_count += 1
        if self.table is not None:
            return int(self.table[x.bits])
        return int(self._evaluator(x.bits))

    def value(self, bits: int) -> int:
        """Uncounted white-box lookup, for analysis paths only."""
        if self.table is not None:
            return int(self.table[bits])
        return int(self._evaluator(bits))

    def materialize(self) -> "BoolFn":
        """Truth-table-backed copy, evaluated without touching the counter."""
        if self.table is not None:
            return self
        if self.n > TABLE_ARITY_CAP:
            raise ValueError(f"cannot materialize arity {self.n} > {TABLE_ARITY_CAP}")
        table = np.fromiter(
            (self._evaluator(u) for u in range(1 << self.n)),
            dtype=np.uint8,
            count=1 << self.n,
        )
        return BoolFn(self.n, table=table, name=self.name)

    def exact_mean(self) -> float:
        """Exact Pr[f=1] under the uniform measure (table-backed only)."""
        if self.table is None:
            raise ValueError("exact mean needs a truth table")
        return float(self.table.mean())

    def __repr__(self) -> str:
        backing = "table" if self.table is not None else "virtual"
        label = f" {self.name!r}" if self.name else ""
        return f"<BoolFn{label} n={self.n} {backing} queries={self.query_count}>"


def is_monotone(f: BoolFn) -> tuple[bool, Optional[tuple[Point, Point]]]:
    """Exhaustive edge scan; returns the lexicographically first violated
    edge (lower point, then coordinate) as a witness when non-monotone.

    A violating comparable pair always contains a violating edge along a
    monotone path between its endpoints, so checking edges suffices.
    """
    if f.table is None:
        raise ValueError("is_monotone unsupported for virtual oracles; materialize first")
    u, i = first_violated_edge(f.table, f.n)
    if u < 0:
        return True, None
    lo = Point(int(u), f.n)
    return False, (lo, lo.with_coord(int(i), 1))


def pad_to_balanced(f: BoolFn) -> BoolFn:
    """Prefix f with 6 fresh coordinates y: output 0 when |y| <= 2, f(x)
    when |y| = 3, and 1 when |y| >= 4.

    Both output values of the result then have probability >= 22/64 under
    the uniform measure, monotonicity is preserved, and any distance from
    monotonicity survives scaled by at least 20/64 (the |y|=3 layer carries
    20 of the 64 prefixes).
    """
    n = f.n
    n_pad = n + PAD_COORDS
    name = f"pad6({f.name})" if f.name else "pad6"
    if f.table is not None and n_pad <= TABLE_ARITY_CAP:
        idx = np.arange(1 << n_pad, dtype=np.int64)
        y_weight = np.bitwise_count(idx >> n)
        table = np.where(
            y_weight <= 2, 0, np.where(y_weight >= 4, 1, f.table[idx & ((1 << n) - 1)])
        ).astype(np.uint8)
        return BoolFn(n_pad, table=table, name=name)

    def padded(bits: int) -> int:
        y_weight = (bits >> n).bit_count()
        if y_weight <= 2:
            return 0
        if y_weight >= 4:
            return 1
        return f.value(bits & ((1 << n) - 1))

    return BoolFn(n_pad, evaluator=padded, name=name)


def uniform_point(n: int, rng: np.random.Generator) -> Point:
    """One uniform point of {0,1}^n."""
    if n <= 62:
        return Point(int(rng.integers(0, 1 << n)), n)
    return sample_biased_point(n, 0.5, rng)


def sample_biased_point(n: int, p: float, rng: np.random.Generator) -> Point:
    """One point with each coordinate independently 1 with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"bias must lie in [0,1], got {p}")
    bits = rng.random(n) < p
    packed = np.packbits(bits)
    value = int.from_bytes(packed.tobytes(), "big") >> (8 * packed.size - n)
    return Point(value, n)


def empirical_mean(f: BoolFn, m: int, rng: np.random.Generator) -> float:
    """Average of f over m independent uniform points; spends exactly m
    oracle queries."""
    if m < 1:
        raise ValueError(f"need at least one sample, got {m}")
    if f.table is not None:
        draws = rng.integers(0, 1 << f.n, size=m)
        f.query_count += m
        return float(f.table[draws].mean())
    total = 0
    for _ in range(m):
        total += f.eval(uniform_point(f.n, rng))
    return total / m


# Small catalog of named functions used by tests, fixtures and the CLI.

def const_fn(n: int, value: int) -> BoolFn:
    return BoolFn(n, table=np.full(1 << n, value, dtype=np.uint8), name=f"const{value}")


def dictator(n: int, i: int = 0) -> BoolFn:
    idx = np.arange(1 << n)
    table = ((idx >> (n - 1 - i)) & 1).astype(np.uint8)
    return BoolFn(n, table=table, name=f"x{i + 1}")


def antidictator(n: int, i: int = 0) -> BoolFn:
    f = dictator(n, i)
    return BoolFn(n, table=1 - f.table, name=f"not-x{i + 1}")


def parity(n: int) -> BoolFn:
    idx = np.arange(1 << n)
    table = (np.bitwise_count(idx) & 1).astype(np.uint8)
    return BoolFn(n, table=table, name="parity")


def and_fn(n: int) -> BoolFn:
    table = np.zeros(1 << n, dtype=np.uint8)
    table[-1] = 1
    return BoolFn(n, table=table, name="and")


def or_fn(n: int) -> BoolFn:
    table = np.ones(1 << n, dtype=np.uint8)
    table[0] = 0
    return BoolFn(n, table=table, name="or")


def majority(n: int) -> BoolFn:
    if n % 2 == 0:
        raise ValueError("majority needs odd arity")
    idx = np.arange(1 << n)
    table = (np.bitwise_count(idx) > n // 2).astype(np.uint8)
    return BoolFn(n, table=table, name="majority")


def all_functions(n: int):
    """Iterate every function on n variables as a table-backed oracle."""
    size = 1 << n
    for mask in range(1 << size):
        table = np.fromiter(
            ((mask >> u) & 1 for u in range(size)), dtype=np.uint8, count=size
        )
        yield BoolFn(n, table=table, name=f"fn{mask}")


def random_function(n: int, rng: np.random.Generator) -> BoolFn:
    return BoolFn(n, table=rng.integers(0, 2, size=1 << n, dtype=np.uint8).copy(), name="random")


def load_truth_table(path) -> BoolFn:
    """Parse the two-line truth-table file format."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        body = fh.readline().strip()
    if not header.startswith("n="):
        raise ValueError(f"{path}: first line must be 'n=<int>', got {header!r}")
    try:
        n = int(header[2:])
    except ValueError:
        raise ValueError(f"{path}: bad arity in header {header!r}") from None
    if n < 1 or n > TABLE_ARITY_CAP:
        raise ValueError(f"{path}: arity {n} outside [1, {TABLE_ARITY_CAP}]")
    if len(body) != 1 << n or set(body) - {"0", "1"}:
        raise ValueError(
            f"{path}: second line must be exactly {1 << n} characters of 0/1"
        )
    table = np.frombuffer(body.encode("ascii"), dtype=np.uint8) - ord("0")
    return BoolFn(n, table=table, name=str(path))


def save_truth_table(f: BoolFn, path) -> None:
    if f.table is None:
        raise ValueError("cannot save a virtual oracle; materialize first")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"n={f.n}\n")
        fh.write("".join("1" if v else "0" for v in f.table))
        fh.write("\n")
