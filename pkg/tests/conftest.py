import itertools

import pytest


def partitions_up_to(max_parts: int, max_part: int):
    """All partitions with at most max_parts parts, each <= max_part."""
    out = []

    def rec(prefix, last):
        out.append(tuple(prefix))
        if len(prefix) == max_parts:
            return
        for p in range(min(last, max_part), 0, -1):
            rec(prefix + [p], p)

    rec([], max_part)
    return out


def triples_with_matching_sum(parts_list):
    """All (lam, mu, nu) from the list with |lam| + |mu| = |nu|."""
    by_size = {}
    for p in parts_list:
        by_size.setdefault(sum(p), []).append(p)
    triples = []
    for lam, mu in itertools.product(parts_list, repeat=2):
        for nu in by_size.get(sum(lam) + sum(mu), []):
            triples.append((lam, mu, nu))
    return triples


@pytest.fixture(scope="session")
def k3_exhaustive_triples():
    """Every triple with <= 3 parts, parts <= 5, matching sums."""
    return triples_with_matching_sum(partitions_up_to(3, 5))
