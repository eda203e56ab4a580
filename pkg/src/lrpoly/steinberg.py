"""Steinberg's formula, the associated hyperplane arrangement, and
empirical polynomiality of the coefficient count over its regions.

The count is the signed double sum over pairs of Weyl-group elements of
Kostant partition values at shifted points.  Each shifted point moves
continuously with (lambda, mu, nu); the arrangement collects every
hyperplane on which some point meets a wall of the Kostant chamber
complex.  Within one region all points keep their chambers, so the
count is one fixed polynomial there; verify_region_polynomial recovers
that polynomial by exact interpolation and checks it on held-out data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import kostant, typea
from .exactla import MatrixQ, fit_poly, monomials_up_to_degree
from .exactla import rank as matrix_rank
from .hive import hive_count


def _shifted_point(sigma, tau, lam_w, mu_w, nu_w, delta):
    two_delta = typea.scale(2, delta)
    return typea.sub(
        typea.add(
            typea.act(sigma, typea.add(lam_w, delta)),
            typea.act(tau, typea.add(mu_w, delta)),
        ),
        typea.add(nu_w, two_delta),
    )


def steinberg_sum(lam_w, mu_w, nu_w, k: int) -> int:
    """The signed Kostant sum for arbitrary weight vectors of length k."""
    data = typea.build(k)
    total = 0
    for sigma in typea.all_permutations(k):
        for tau in typea.all_permutations(k):
            v = _shifted_point(sigma, tau, lam_w, mu_w, nu_w, data.delta)
            value = kostant.kostant_count(k, v)
            if value:
                sign = (-1) ** typea.inversions(typea.compose(sigma, tau))
                total += sign * value
    return total


def steinberg_count(lam, mu, nu, k: int = None) -> int:
    """Littlewood-Richardson coefficient via Steinberg's formula."""
    lam = typea.validate_partition(lam)
    mu = typea.validate_partition(mu)
    nu = typea.validate_partition(nu)
    if k is None:
        k = max(
            typea.partition_length(lam),
            typea.partition_length(mu),
            typea.partition_length(nu),
            2,
        )
    if sum(lam) + sum(mu) != sum(nu):
        raise ValueError("|lambda| + |mu| must equal |nu|")
    lam_w = typea.weight(typea.pad_partition(lam, k))
    mu_w = typea.weight(typea.pad_partition(mu, k))
    nu_w = typea.weight(typea.pad_partition(nu, k))
    return steinberg_sum(lam_w, mu_w, nu_w, k)


def steinberg_count_via_chambers(lam, mu, nu, k: int) -> int:
    """Same sum, but each Kostant value comes from a chamber polynomial.

    Only for k <= 3 (needs the explicit chamber decomposition) and
    generic triples, where every shifted point inside the cone lies in
    the open interior of a unique region.
    """
    if k > 3:
        raise ValueError("chamber evaluation only supported for k <= 3")
    if not is_generic(lam, mu, nu, k):
        raise ValueError("triple is not generic")
    n = k - 1
    chambers = kostant.kostant_chambers(n)
    walls = kostant.wall_hyperplanes(n)
    data = typea.build(k)
    lam_w = typea.weight(typea.pad_partition(lam, k))
    mu_w = typea.weight(typea.pad_partition(mu, k))
    nu_w = typea.weight(typea.pad_partition(nu, k))
    total = 0
    for sigma in typea.all_permutations(k):
        for tau in typea.all_permutations(k):
            v = _shifted_point(sigma, tau, lam_w, mu_w, nu_w, data.delta)
            b = typea.to_simple_root_coords(v)
            region = kostant.region_containing(chambers, walls, b)
            if region is None:
                continue  # outside pos(M): contributes 0
            value = region.polynomial.evaluate(b)
            sign = (-1) ** typea.inversions(typea.compose(sigma, tau))
            total += sign * value
    assert total.denominator == 1
    return total.numerator


@dataclass(frozen=True)
class SteinbergHyperplane:
    """One wall <sigma(lam)+tau(mu)-nu, theta(omega_j)> = shift.

    normal holds the raw coefficients on (lambda | mu | nu) and shift
    the delta-shift <2 delta - sigma(delta) - tau(delta), theta(omega_j)>.
    Each block of the normal sums to zero (omega_j does), so the equation
    is already adapted to the subspace |lambda| + |mu| = |nu| and two
    hyperplanes agree there iff their (normal, shift) pairs are
    positive multiples of each other.
    """

    sigma: tuple
    tau: tuple
    theta: tuple
    j: int
    normal: tuple
    shift: Fraction

    def canonical(self):
        """(normal, shift) scaled primitive with positive leading entry."""
        scaled = kostant._primitive(self.normal)
        lead_raw = next(x for x in self.normal if x != 0)
        lead_new = next(x for x in scaled if x != 0)
        factor = Fraction(lead_new) / lead_raw
        return scaled, self.shift * factor


def _raw_hyperplane(sigma, tau, theta, j, data) -> SteinbergHyperplane:
    # <sigma(lam), w> = sum_i lam_i w_{sigma(i)}, so the lambda block of
    # the normal is w permuted by sigma (and likewise mu by tau).
    w = typea.act(theta, data.fundamental_weights[j - 1])
    k = data.k
    lam_part = tuple(w[sigma[i] - 1] for i in range(k))
    mu_part = tuple(w[tau[i] - 1] for i in range(k))
    nu_part = tuple(-w[i] for i in range(k))
    shift = typea.dot(
        typea.sub(
            typea.scale(2, data.delta),
            typea.add(typea.act(sigma, data.delta), typea.act(tau, data.delta)),
        ),
        w,
    )
    return SteinbergHyperplane(
        sigma, tau, theta, j, lam_part + mu_part + nu_part, shift
    )


def enumerate_hyperplanes(k: int) -> list:
    """All arrangement hyperplanes, deduplicated up to positive scaling.

    Every (sigma, tau, theta, j) tuple with 1 <= j <= k-1 is
    materialized; tuples whose (normal, shift) agree after primitive
    sign normalization are collapsed to the first representative.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    data = typea.build(k)
    seen = {}
    for sigma in typea.all_permutations(k):
        for tau in typea.all_permutations(k):
            for theta in typea.all_permutations(k):
                for j in range(1, k):
                    h = _raw_hyperplane(sigma, tau, theta, j, data)
                    key = h.canonical()
                    if key not in seen:
                        seen[key] = h
    return list(seen.values())


def max_delta_shift(k: int) -> Fraction:
    """Largest |delta-shift| over all tuples, before any normalization."""
    data = typea.build(k)
    best = Fraction(0)
    for sigma in typea.all_permutations(k):
        for tau in typea.all_permutations(k):
            off = typea.sub(
                typea.scale(2, data.delta),
                typea.add(
                    typea.act(sigma, data.delta), typea.act(tau, data.delta)
                ),
            )
            for theta in typea.all_permutations(k):
                for j in range(1, k):
                    w = typea.act(theta, data.fundamental_weights[j - 1])
                    best = max(best, abs(typea.dot(off, w)))
    return best


def _signature_walls(k: int) -> tuple:
    return typea.conjugates_of_fundamental_weights(k)


def _padded_weights(lam, mu, nu, k):
    return (
        typea.weight(typea.pad_partition(lam, k)),
        typea.weight(typea.pad_partition(mu, k)),
        typea.weight(typea.pad_partition(nu, k)),
    )


def is_generic(lam, mu, nu, k: int) -> bool:
    """True when no shifted point lies on a Kostant chamber wall."""
    data = typea.build(k)
    walls = _signature_walls(k)
    lam_w, mu_w, nu_w = _padded_weights(lam, mu, nu, k)
    for sigma in typea.all_permutations(k):
        for tau in typea.all_permutations(k):
            v = _shifted_point(sigma, tau, lam_w, mu_w, nu_w, data.delta)
            if any(typea.dot(v, w) == 0 for w in walls):
                return False
    return True


@dataclass(frozen=True)
class TypeSignature:
    """Sign of every shifted point against every wall normal.

    Rows follow S_k x S_k in lexicographic one-line order, columns the
    sorted wall normals; entries are strictly +-1 for generic input.
    Equal signatures put two triples in the same arrangement region.
    """

    k: int
    signs: tuple

    def digest(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def type_signature(lam, mu, nu, k: int) -> TypeSignature:
    data = typea.build(k)
    walls = _signature_walls(k)
    lam_w, mu_w, nu_w = _padded_weights(lam, mu, nu, k)
    signs = []
    for sigma in typea.all_permutations(k):
        for tau in typea.all_permutations(k):
            v = _shifted_point(sigma, tau, lam_w, mu_w, nu_w, data.delta)
            for w in walls:
                d = typea.dot(v, w)
                if d == 0:
                    raise ValueError("triple is not generic")
                signs.append(1 if d > 0 else -1)
    return TypeSignature(k, tuple(signs))


# ---------------------------------------------------------------------------
# per-region polynomiality

def free_coordinates(lam, mu, nu, k: int) -> tuple:
    """(lam_1..lam_k, mu_1..mu_{k-1}, nu_1..nu_k): mu_k is dependent."""
    lam = typea.pad_partition(lam, k)
    mu = typea.pad_partition(mu, k)
    nu = typea.pad_partition(nu, k)
    return tuple(lam) + tuple(mu[:-1]) + tuple(nu)


def triple_from_free(coords, k: int):
    lam = coords[:k]
    mu_head = coords[k : 2 * k - 1]
    nu = coords[2 * k - 1 :]
    mu_last = sum(nu) - sum(lam) - sum(mu_head)
    return lam, tuple(mu_head) + (mu_last,), tuple(nu)


def _is_partition(seq) -> bool:
    return all(p >= 0 for p in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1)
    )


def _perturbations(nfree: int, radius: int):
    """Integer offsets ordered radius- then sparsity-first: the zero
    vector, then every +-1 offset starting with the single-entry ones,
    then offsets involving +-2, and so on.  Unit offsets lead so the
    collected neighborhood spans affinely as soon as possible."""
    yield (0,) * nfree
    for r in range(1, radius + 1):
        magnitudes = [m for rr in range(1, r + 1) for m in (rr, -rr)]
        for nnz in range(1, nfree + 1):
            for support in itertools.combinations(range(nfree), nnz):
                for vals in itertools.product(magnitudes, repeat=nnz):
                    if max(abs(v) for v in vals) != r:
                        continue
                    d = [0] * nfree
                    for i, v in zip(support, vals):
                        d[i] = v
                    yield tuple(d)


def same_region_samples(
    lam, mu, nu, k: int, count: int, radius: int = 2, budget: int = 20000
):
    """Lattice triples near the seed with the seed's type signature.

    Walks integer perturbations of the free coordinates (sparse offsets
    first); every hit is a valid partition triple, generic, and in the
    same arrangement region as the seed.  Stops after `count` hits or
    `budget` candidates.
    """
    seed_sig = type_signature(lam, mu, nu, k)
    seed_free = free_coordinates(lam, mu, nu, k)
    nfree = len(seed_free)
    found = []
    for d in itertools.islice(_perturbations(nfree, radius), budget):
        coords = tuple(s + x for s, x in zip(seed_free, d))
        cl, cm, cn = triple_from_free(coords, k)
        if not (_is_partition(cl) and _is_partition(cm) and _is_partition(cn)):
            continue
        if not is_generic(cl, cm, cn, k):
            continue
        if type_signature(cl, cm, cn, k).signs != seed_sig.signs:
            continue
        found.append((cl, cm, cn))
        if len(found) >= count:
            break
    return found


def verify_region_polynomial(lam, mu, nu, k: int, sample_count: int = 24):
    """Fit the region's polynomial and verify it on held-out samples.

    Collects sample_count same-signature lattice triples around the
    generic seed and fits a polynomial of total degree <= C(k-1,2) in
    the free coordinates.  The fitting subset is chosen greedily for
    linear independence; every other sample is held out and must match
    the fit exactly (against hive_count).  Returns (polynomial, ok).
    """
    if not is_generic(lam, mu, nu, k):
        raise ValueError("seed triple is not generic")
    degree = comb(k - 1, 2)
    nfree = 3 * k - 1
    samples = same_region_samples(lam, mu, nu, k, sample_count)
    monos = monomials_up_to_degree(nfree, degree)
    nmono = len(monos)
    if len(samples) < nmono + 3:
        raise RuntimeError(
            f"only {len(samples)} same-region samples found, "
            f"need at least {nmono + 3}"
        )
    data = [
        (free_coordinates(cl, cm, cn, k), hive_count(cl, cm, cn, k))
        for cl, cm, cn in samples
    ]

    def mono_row(point):
        row = []
        for e in monos:
            v = Fraction(1)
            for x, p in zip(point, e):
                for _ in range(p):
                    v *= x
            row.append(v)
        return row

    fit_idx = []
    basis_rows = []
    for i, (point, _) in enumerate(data):
        trial = basis_rows + [mono_row(point)]
        if matrix_rank(MatrixQ.from_rows(trial)) == len(trial):
            basis_rows = trial
            fit_idx.append(i)
        if len(fit_idx) == nmono:
            break
    if len(fit_idx) < nmono:
        raise RuntimeError(
            "collected samples do not determine the polynomial "
            f"({len(fit_idx)} independent of {nmono} needed)"
        )
    poly = fit_poly([data[i] for i in fit_idx], nfree, degree)
    if poly is None:
        return None, False
    holdout = [d for i, d in enumerate(data) if i not in set(fit_idx)]
    ok = all(poly.evaluate(point) == value for point, value in holdout)
    return poly, ok
