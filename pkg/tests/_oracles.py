"""Brute-force oracles, kept independent of the library's computation paths.

Everything here works from exhaustive closure element lists and definitional
filters: no stabilizer chains, no sifting, no generator tricks.  Only the
raw permutation arithmetic (compose/inverse), which the test suite pins
separately with hand-evaluated examples, is shared with the library.
"""

from __future__ import annotations

import itertools

from centerbound.perm import Perm, identity


def closure(degree: int, gens) -> set[Perm]:
    """<gens> as an element set, by breadth-first multiplication."""
    elems = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return elems


def center_oracle(elems) -> set[Perm]:
    """Elements commuting with every element (the definition, quadratic)."""
    return {g for g in elems
            if all(g * h == h * g for h in elems)}


def centralizer_oracle(elems, targets) -> set[Perm]:
    return {g for g in elems
            if all(g * s == s * g for s in targets)}


def derived_oracle(degree: int, elems) -> set[Perm]:
    """Closure of all pairwise commutators."""
    inv = {g: g.inverse() for g in elems}
    commutators = {inv[x] * inv[y] * x * y for x in elems for y in elems}
    return closure(degree, [c for c in commutators if not c.is_identity()])


def second_center_oracle(degree: int, elems) -> set[Perm]:
    """{g | [g, x] central for every element x}, from the center oracle."""
    z = center_oracle(elems)
    inv = {g: g.inverse() for g in elems}
    return {g for g in elems
            if all(inv[g] * inv[x] * g * x in z for x in elems)}


def normalizer_oracle(elems, sub_elems) -> set[Perm]:
    sub = set(sub_elems)
    out = set()
    for g in elems:
        ginv = g.inverse()
        if all(ginv * h * g in sub for h in sub):
            out.add(g)
    return out


def subgroups_oracle(degree: int, elems) -> set[frozenset[Perm]]:
    """All subgroups of a tiny group: closures of all generator subsets
    of size at most 3 (complete for every group whose rank is <= 3)."""
    elems = sorted(elems)
    found = {frozenset({identity(degree)})}
    for k in (1, 2, 3):
        for combo in itertools.combinations(elems, k):
            found.add(frozenset(closure(degree, combo)))
    return found


def min_generators_oracle(degree: int, elems) -> int:
    """Smallest k with some k-subset generating, by exhaustive search."""
    n = len(elems)
    if n == 1:
        return 0
    elems = sorted(elems)
    for k in range(1, n + 1):
        for combo in itertools.combinations(elems, k):
            if len(closure(degree, combo)) == n:
                return k
    raise AssertionError("unreachable")


def element_orders(elems) -> dict[Perm, int]:
    out = {}
    for g in elems:
        n = 1
        power = g
        while not power.is_identity():
            power = power * g
            n += 1
        out[g] = n
    return out
