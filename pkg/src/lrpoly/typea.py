"""Type-A root-system data and the symmetric-group action on weights.

Weights are tuples of Fractions in the standard e_i coordinates of
R^k; permutations are one-line tuples on {1..k}.  Partitions are plain
tuples of weakly decreasing nonnegative ints; trailing zeros carry no
meaning and are stripped by normalize_partition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


# ---------------------------------------------------------------------------
# partitions

def parse_partition(text: str) -> tuple:
    """Parse "3,2,1" (empty string = empty partition)."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition text: {text!r}")
    return validate_partition(parts)


def validate_partition(parts) -> tuple:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def normalize_partition(parts) -> tuple:
    """Strip trailing zeros; partitions are equal modulo padding."""
    parts = tuple(parts)
    n = len(parts)
    while n and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


def partition_weight(parts) -> int:
    return sum(parts)


def partition_length(parts) -> int:
    """Number of nonzero parts."""
    return len(normalize_partition(parts))


def pad_partition(parts, k: int) -> tuple:
    parts = tuple(parts)
    if partition_length(parts) > k:
        raise ValueError(f"partition {parts} has more than {k} parts")
    parts = normalize_partition(parts)
    return parts + (0,) * (k - len(parts))


def format_partition(parts) -> str:
    return ",".join(str(p) for p in parts)


# ---------------------------------------------------------------------------
# weights

def weight(coords) -> tuple:
    return tuple(Fraction(x) for x in coords)


def dot(v, w) -> Fraction:
    if len(v) != len(w):
        raise ValueError("length mismatch")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(v, w)), Fraction(0))


def add(v, w) -> tuple:
    if len(v) != len(w):
        raise ValueError("length mismatch")
    return tuple(Fraction(a) + Fraction(b) for a, b in zip(v, w))


def sub(v, w) -> tuple:
    if len(v) != len(w):
        raise ValueError("length mismatch")
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(v, w))


def scale(s, v) -> tuple:
    s = Fraction(s)
    return tuple(s * Fraction(x) for x in v)


def to_simple_root_coords(v) -> tuple:
    """Coordinates of a sum-zero vector in the simple-root basis.

    v = sum_i b_i alpha_i with alpha_i = e_i - e_{i+1} gives
    b_i = v_1 + ... + v_i.
    """
    v = weight(v)
    if sum(v) != 0:
        raise ValueError("vector has nonzero coordinate sum")
    out = []
    acc = Fraction(0)
    for x in v[:-1]:
        acc += x
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# permutations (one-line form on {1..k})

def identity_permutation(k: int) -> tuple:
    return tuple(range(1, k + 1))


def validate_permutation(p) -> tuple:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def all_permutations(k: int):
    """All of S_k in lexicographic one-line order (the fixed total order)."""
    return itertools.permutations(range(1, k + 1))


def compose(p, q) -> tuple:
    """(p o q)(i) = p(q(i))."""
    if len(p) != len(q):
        raise ValueError("length mismatch")
    return tuple(p[q[i] - 1] for i in range(len(p)))


def invert(p) -> tuple:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def act(p, w) -> tuple:
    """Permutation action sending e_i to e_{p(i)}.

    The result's coordinate i is w's coordinate p^{-1}(i).
    """
    if len(p) != len(w):
        raise ValueError("length mismatch")
    inv = invert(p)
    return tuple(Fraction(w[inv[i] - 1]) for i in range(len(w)))


def inversions(p) -> int:
    k = len(p)
    return sum(1 for i in range(k) for j in range(i + 1, k) if p[i] > p[j])


# ---------------------------------------------------------------------------
# root-system data

@dataclass(frozen=True)
class RootSystemData:
    k: int
    simple_roots: tuple
    positive_roots: tuple
    fundamental_weights: tuple
    delta: tuple


def build(k: int) -> RootSystemData:
    """Root data for sl_k: simple/positive roots, fundamental weights, delta.

    Positive roots are e_i - e_j for i < j; the fundamental weight
    omega_i has i leading entries (k-i)/k and k-i trailing entries -i/k,
    so that <alpha_i, omega_j> is the Kronecker delta.  delta is the
    half-sum of the positive roots, (k-1, k-3, ..., -(k-1))/2.
    """
    if k < 2:
        raise ValueError("rank parameter k must be >= 2")
    simple = tuple(
        tuple(
            Fraction(1) if t == i else Fraction(-1) if t == i + 1 else Fraction(0)
            for t in range(k)
        )
        for i in range(k - 1)
    )
    positive = tuple(
        tuple(
            Fraction(1) if t == i else Fraction(-1) if t == j else Fraction(0)
            for t in range(k)
        )
        for i in range(k)
        for j in range(i + 1, k)
    )
    fundamental = tuple(
        tuple(
            Fraction(k - i, k) if t < i else Fraction(-i, k) for t in range(k)
        )
        for i in range(1, k)
    )
    delta = tuple(Fraction(k - 1 - 2 * t, 2) for t in range(k))
    return RootSystemData(k, simple, positive, fundamental, delta)


def bar(parts, k: int) -> tuple:
    """GL weight to SL weight: subtract the mean from every coordinate."""
    padded = pad_partition(parts, k)
    mean = Fraction(sum(padded), k)
    return tuple(Fraction(p) - mean for p in padded)


def conjugates_of_fundamental_weights(k: int) -> tuple:
    """Union of the S_k orbits of the fundamental weights, deduplicated.

    Returned sorted for determinism; these are the wall normals of the
    Kostant chamber complex.
    """
    if k < 2:
        raise ValueError("rank parameter k must be >= 2")
    data = build(k)
    seen = set()
    for omega in data.fundamental_weights:
        for p in all_permutations(k):
            seen.add(act(p, omega))
    return tuple(sorted(seen))
