"""The complete chamber complex for coefficients of three-row partitions.

Eleven rays and eighteen maximal cones, each cone carrying the exact
affine polynomial that equals the Littlewood-Richardson coefficient on
it.  The complex is embedded as data (recomputing a common refinement
is out of scope); verify_cone checks every cone against independent
counting, which is the correctness argument for the data, and test_lr3
re-derives the kappa13/kappa14 rows by interpolation.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .exactla import MatrixQ, MultiPolyQ, solve_nonneg_combination
from .hive import hive_count
from .steinberg import steinberg_count

VAR_NAMES = ("λ1", "λ2", "λ3", "μ1", "μ2", "μ3", "ν1", "ν2", "ν3")

DEFAULT_SEED = 1729

RAYS = {
    "a1": (1, 1, 1, 0, 0, 0, 1, 1, 1),
    "a2": (0, 0, 0, 1, 1, 1, 1, 1, 1),
    "b": (2, 1, 0, 2, 1, 0, 3, 2, 1),
    "c": (1, 1, 0, 1, 1, 0, 2, 1, 1),
    "d1": (1, 1, 0, 1, 0, 0, 1, 1, 1),
    "d2": (1, 0, 0, 1, 1, 0, 1, 1, 1),
    "e1": (1, 1, 0, 0, 0, 0, 1, 1, 0),
    "e2": (0, 0, 0, 1, 1, 0, 1, 1, 0),
    "f": (1, 0, 0, 1, 0, 0, 1, 1, 0),
    "g1": (1, 0, 0, 0, 0, 0, 1, 0, 0),
    "g2": (0, 0, 0, 1, 0, 0, 1, 0, 0),
}

# cone -> (generators, affine coefficients on lam1..lam3, mu1..mu3, nu1..nu3)
_CONE_TABLE = [
    ("kappa1", ("a1", "a2", "b", "c", "d1", "d2", "e1", "e2"),
     {1: -1, 4: -1, 6: 1}),
    ("kappa2", ("a1", "a2", "b", "c", "d1", "d2", "g1", "g2"),
     {7: 1, 8: -1}),
    ("kappa3", ("a1", "a2", "b", "c", "e1", "e2", "g1", "g2"),
     {0: 1, 3: 1, 6: -1}),
    ("kappa4", ("a1", "a2", "b", "d1", "d2", "e1", "e2", "f"),
     {6: 1, 7: -1}),
    ("kappa5", ("a1", "a2", "b", "d1", "d2", "f", "g1", "g2"),
     {1: 1, 4: 1, 8: -1}),
    ("kappa6", ("a1", "a2", "b", "e1", "e2", "f", "g1", "g2"),
     {2: -1, 5: -1, 8: 1}),
    ("kappa7", ("a1", "a2", "b", "c", "d1", "d2", "e1", "g1"),
     {2: 1, 3: 1, 8: -1}),
    ("kappa8", ("a1", "a2", "b", "c", "d1", "d2", "e2", "g2"),
     {0: 1, 5: 1, 8: -1}),
    ("kappa9", ("a1", "a2", "b", "c", "d1", "e1", "e2", "g2"),
     {0: 1, 1: -1}),
    ("kappa10", ("a1", "a2", "b", "c", "d2", "e1", "e2", "g1"),
     {3: 1, 4: -1}),
    ("kappa11", ("a1", "a2", "b", "c", "d1", "e1", "g1", "g2"),
     {1: -1, 5: -1, 7: 1}),
    ("kappa12", ("a1", "a2", "b", "c", "d2", "e2", "g1", "g2"),
     {2: -1, 4: -1, 7: 1}),
    ("kappa13", ("a1", "a2", "b", "d1", "d2", "e1", "f", "g1"),
     {0: -1, 5: -1, 6: 1}),
    ("kappa14", ("a1", "a2", "b", "d1", "d2", "e2", "f", "g2"),
     {2: -1, 3: -1, 6: 1}),
    ("kappa15", ("a1", "a2", "b", "d1", "e1", "f", "g1", "g2"),
     {4: 1, 5: -1}),
    ("kappa16", ("a1", "a2", "b", "d2", "e2", "f", "g1", "g2"),
     {1: 1, 2: -1}),
    ("kappa17", ("a1", "a2", "b", "d1", "e1", "e2", "f", "g2"),
     {0: 1, 4: 1, 7: -1}),
    ("kappa18", ("a1", "a2", "b", "d2", "e1", "e2", "f", "g1"),
     {1: 1, 3: 1, 7: -1}),
]

# the lambda/mu swap fixes b, c, f and exchanges the numbered pairs
RAY_SWAP = {
    "a1": "a2", "a2": "a1", "b": "b", "c": "c", "d1": "d2", "d2": "d1",
    "e1": "e2", "e2": "e1", "f": "f", "g1": "g2", "g2": "g1",
}


@dataclass(frozen=True)
class ConeK3:
    name: str
    generators: tuple
    polynomial: MultiPolyQ

    def generator_matrix(self) -> MatrixQ:
        return MatrixQ.from_rows(
            [[RAYS[g][r] for g in self.generators] for r in range(9)]
        )


def load_k3():
    """All 18 cones plus the ray table, with the load-time sanity checks."""
    cones = []
    for name, gens, coeffs in _CONE_TABLE:
        poly = MultiPolyQ.linear(9, 1, coeffs)
        assert len(gens) == 8
        assert poly.total_degree() <= 1
        assert poly.coefficient((0,) * 9) == 1
        assert all(c.denominator == 1 for _, c in poly.terms)
        cones.append(ConeK3(name, gens, poly))
    assert len(cones) == 18
    assert len(RAYS) == 11
    for coords in RAYS.values():
        assert sum(coords[0:3]) + sum(coords[3:6]) == sum(coords[6:9])
    return cones, dict(RAYS)


def split_point(point):
    point = tuple(point)
    if len(point) != 9:
        raise ValueError("point must have 9 coordinates")
    return point[0:3], point[3:6], point[6:9]


def satisfies_validity_cones(point) -> bool:
    """lam_i, mu_i <= nu_i plus the sum constraint, and all three
    blocks weakly decreasing and nonnegative."""
    lam, mu, nu = split_point(point)
    if sum(lam) + sum(mu) != sum(nu):
        return False
    for block in (lam, mu, nu):
        if any(x < 0 for x in block):
            return False
        if any(block[i] < block[i + 1] for i in range(2)):
            return False
    return all(l <= n for l, n in zip(lam, nu)) and all(
        m <= n for m, n in zip(mu, nu)
    )


def membership(point, cone: ConeK3) -> bool:
    """Is the point in the cone (and in the validity cones)?"""
    lam, mu, nu = split_point(point)
    if sum(lam) + sum(mu) != sum(nu):
        raise ValueError("point violates |lambda| + |mu| = |nu|")
    if not satisfies_validity_cones(point):
        return False
    return solve_nonneg_combination(cone.generator_matrix(), point) is not None


def locate(point) -> list:
    """Names of every cone containing the point."""
    cones, _ = load_k3()
    return [c.name for c in cones if membership(point, c)]


def swap_lambda_mu(point) -> tuple:
    lam, mu, nu = split_point(point)
    return tuple(mu) + tuple(lam) + tuple(nu)


def swap_polynomial(poly: MultiPolyQ) -> MultiPolyQ:
    """Exchange the lambda and mu variables of a 9-variable polynomial."""
    swapped = {}
    for e, c in poly.terms:
        swapped[tuple(e[3:6]) + tuple(e[0:3]) + tuple(e[6:9])] = c
    return MultiPolyQ.from_terms(9, swapped)


def cone_swap_image(cone: ConeK3, cones) -> ConeK3:
    """The cone whose generator set is the swapped generator set."""
    target = frozenset(RAY_SWAP[g] for g in cone.generators)
    for other in cones:
        if frozenset(other.generators) == target:
            return other
    raise LookupError(f"no swap image for {cone.name}")


def interior_points(cone: ConeK3, samples: int, seed: int):
    """The all-generators sum plus seeded random positive combinations."""
    rng = random.Random(seed)
    pts = []
    gens = [RAYS[g] for g in cone.generators]
    pts.append(tuple(sum(col) for col in zip(*gens)))
    while len(pts) < samples:
        coeffs = [rng.randint(1, 5) for _ in gens]
        pts.append(
            tuple(
                sum(c * g[r] for c, g in zip(coeffs, gens)) for r in range(9)
            )
        )
    return pts


@dataclass(frozen=True)
class ConeVerification:
    cone: str
    points_checked: int
    passed: bool
    counterexamples: tuple  # (point, polynomial_value, count) triples


def verify_cone(
    cone: ConeK3,
    samples: int = 20,
    seed: int = DEFAULT_SEED,
    check_steinberg: bool = False,
) -> ConeVerification:
    """Compare the cone polynomial with actual counts on interior points.

    Every sampled point is also located in all cones containing it and
    the polynomials of those cones must agree there (a disagreement
    would be a data-entry error).
    """
    cones, _ = load_k3()
    bad = []
    pts = interior_points(cone, samples, seed)
    for p in pts:
        value = cone.polynomial.evaluate(p)
        lam, mu, nu = split_point(p)
        count = hive_count(lam, mu, nu, 3)
        ok = value == count
        if ok and check_steinberg:
            ok = steinberg_count(lam, mu, nu, 3) == count
        if ok:
            for other in cones:
                if other.name != cone.name and membership(p, other):
                    if other.polynomial.evaluate(p) != count:
                        ok = False
                        break
        if not ok:
            bad.append((p, value, count))
    return ConeVerification(
        cone=cone.name,
        points_checked=len(pts),
        passed=not bad,
        counterexamples=tuple(bad),
    )


def _poly_json(poly: MultiPolyQ) -> dict:
    out = {}
    for e, c in poly.terms:
        factors = []
        for name, p in zip(VAR_NAMES, e):
            factors.extend([name] * p)
        key = "*".join(factors) if factors else "1"
        out[key] = str(c)
    return out


def export_json() -> str:
    """The complex as JSON: rays, generator lists, polynomials."""
    cones, rays = load_k3()
    payload = {
        "rays": {name: list(coords) for name, coords in sorted(rays.items())},
        "variables": list(VAR_NAMES),
        "cones": [
            {
                "name": c.name,
                "generators": list(c.generators),
                "polynomial": _poly_json(c.polynomial),
            }
            for c in cones
        ],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False)
