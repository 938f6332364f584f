"""Minimal generator numbers and ranks.

d(G) is the least size of a generating set; the rank of G is the maximum of
d(H) over all subgroups H.  The strategy ladder for d is:

* trivial group: 0;
* abelian: the number of invariant factors, read off socle sizes (for each
  prime p the solutions of x^p = 1 number p^k with k the p-rank);
* p-group: the Burnside basis theorem, d = log_p |G : Phi(G)| with Phi the
  subgroup generated by commutators and p-th powers, normally closed;
* general: squeeze between the abelianization lower bound and a greedily
  pruned generating set, then exhaustive search over element subsets under
  a tuple cap.

Exact rank needs the full subgroup list, which is exponential; the default
cap is small and deliberate, and past it rank evaluates to Unknown -- a
value, never a guess.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .arith import integer_log, is_prime_power, prime_factors
from .errors import CapExceeded, NotAbelian, NotGenerating, NotPGroup
from .group import DEFAULT_ENUMERATION_CAP, Group, Subgroup
from .perm import Perm, commutator
from .structure import derived_subgroup

DEFAULT_SUBGROUP_CAP = 512
DEFAULT_TUPLE_CAP = 2_000_000
_INDEX_TABLE_CAP = 1024


@dataclass(frozen=True)
class UnknownRank:
    """Rank not computed because a cap fired; records which one."""
    what: str
    limit: int
    value: int

    def __repr__(self):
        return f"Unknown({self.what} cap {self.limit}, needed {self.value})"


@dataclass
class RankReport:
    dee_gens: int
    rank: "int | UnknownRank"
    method: str


def _cached(G: Group, key, compute):
    if key not in G._cache:
        G._cache[key] = compute()
    return G._cache[key]


# -- multiplication-table world ----------------------------------------------
#
# Subgroup enumeration and generator searches run over element indices with a
# precomputed Cayley table: tight integer loops instead of tuple composition.


class _Indexed:
    def __init__(self, G: Group, cap: int):
        elems = G.elements(cap)
        n = len(elems)
        if n > _INDEX_TABLE_CAP:
            raise CapExceeded("multiplication table", _INDEX_TABLE_CAP, n)
        index = {e: i for i, e in enumerate(elems)}
        self.elems = elems
        self.index = index
        self.table = [tuple(index[a * b] for b in elems) for a in elems]
        self.inv = tuple(index[e.inverse()] for e in elems)
        self.orders = tuple(e.order() for e in elems)
        self.identity = index[G.identity_element()]
        self.n = n

    def power(self, x: int, k: int) -> int:
        result = self.identity
        base = x
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def closure(self, gens: tuple[int, ...]) -> frozenset[int]:
        known = {self.identity}
        frontier = [self.identity]
        table = self.table
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = table[x][g]
                if y not in known:
                    known.add(y)
                    frontier.append(y)
        return frozenset(known)

    def conjugate(self, x: int, h: int) -> int:
        return self.table[self.table[self.inv[h]][x]][h]

    def commutator(self, x: int, y: int) -> int:
        t = self.table
        return t[t[t[self.inv[x]][self.inv[y]]][x]][y]

    def normal_closure(self, seed: list[int],
                       conjugators: tuple[int, ...]) -> frozenset[int]:
        gens = [g for g in seed if g != self.identity]
        current = self.closure(tuple(gens))
        while True:
            new = [self.conjugate(k, t)
                   for k in gens for t in conjugators
                   if self.conjugate(k, t) not in current]
            if not new:
                return current
            gens.extend(new)
            current = self.closure(tuple(gens))

    # d(H) for a subgroup given by its element set and a known generating list
    def min_generators_of(self, hset: frozenset[int], gens: tuple[int, ...],
                          tuple_cap: int) -> tuple[int, bool]:
        """(d, used_exhaustive_search)."""
        size = len(hset)
        if size == 1:
            return 0, False
        if self._abelian(gens):
            return self._abelian_invariants(hset), False
        p = is_prime_power(size)
        if p is not None:
            phi = self.normal_closure(
                [self.commutator(a, b) for a, b in
                 itertools.combinations(gens, 2)]
                + [self.power(g, p) for g in gens], gens)
            return integer_log(size // len(phi), p), False
        lower = max(2, self._abelianization_d(hset, gens))
        pruned = self._prune(hset, gens)
        if len(pruned) == lower:
            return lower, False
        return self._search(hset, lower, len(pruned), tuple_cap), True

    def _abelian(self, gens) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a]
                   for a, b in itertools.combinations(gens, 2))

    def _abelian_invariants(self, hset: frozenset[int]) -> int:
        size = len(hset)
        best = 0
        for p in prime_factors(size):
            count = sum(1 for x in hset if self.orders[x] in (1, p))
            best = max(best, integer_log(count, p))
        return best

    def _abelianization_d(self, hset, gens) -> int:
        derived = self.normal_closure(
            [self.commutator(a, b) for a, b in
             itertools.combinations(gens, 2)], gens)
        index = len(hset) // len(derived)
        if index == 1:
            return 0
        best = 0
        for p in prime_factors(index):
            count = sum(1 for x in hset if self.power(x, p) in derived)
            best = max(best, integer_log(count // len(derived), p))
        return best

    def _prune(self, hset, gens) -> tuple[int, ...]:
        kept = list(gens)
        i = 0
        while i < len(kept):
            trial = kept[:i] + kept[i + 1:]
            if len(self.closure(tuple(trial))) == len(hset):
                kept = trial
            else:
                i += 1
        return tuple(kept)

    def _search(self, hset, lower: int, upper: int, tuple_cap: int) -> int:
        members = sorted(hset - {self.identity})
        size = len(hset)
        tried = 0
        for k in range(lower, upper):
            for combo in itertools.combinations(members, k):
                tried += 1
                if tried > tuple_cap:
                    raise CapExceeded("generator tuple search", tuple_cap, k)
                if len(self.closure(combo)) == size:
                    return k
        return upper


def _indexed(G: Group, cap: int) -> _Indexed:
    return _cached(G, "indexed", lambda: _Indexed(G, cap))


# -- public operations ---------------------------------------------------------


def frattini_p(G: Group, p: int,
               cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """For a p-group: the normal closure of generator commutators and
    generator p-th powers; the quotient is elementary abelian of rank d."""
    order = G.order()
    if order > 1 and is_prime_power(order) != p:
        raise NotPGroup(f"order {order} is not a power of {p}")

    def compute():
        seed = [commutator(a, b) for a, b in
                itertools.combinations(G.generators, 2)]
        seed += [g ** p for g in G.generators]
        seed = [s for s in seed if not s.is_identity()]
        K = Subgroup(G, seed, _trusted=True)
        while True:
            new = [t.inverse() * k * t
                   for k in K.generators for t in G.generators
                   if (t.inverse() * k * t) not in K]
            if not new:
                return K
            K = Subgroup(G, tuple(K.generators) + tuple(new), _trusted=True)
    return _cached(G, ("frattini", p), compute)


def abelian_rank(A: Group, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Invariant-factor count of a finite abelian group: the largest p-socle
    rank over primes p dividing the order."""
    if not A.is_abelian():
        raise NotAbelian("abelian_rank requires an abelian group")
    order = A.order()
    if order == 1:
        return 0
    best = 0
    for p in prime_factors(order):
        count = sum(1 for x in A.elements(cap) if x.order() in (1, p))
        best = max(best, integer_log(count, p))
    return best


def min_generators(G: Group, cap: int = DEFAULT_ENUMERATION_CAP,
                   tuple_cap: int = DEFAULT_TUPLE_CAP) -> int:
    """Exact d(G) by the strategy ladder (see module docstring)."""
    def compute():
        order = G.order()
        if order == 1:
            return 0
        if G.is_abelian():
            return abelian_rank(G, cap)
        p = is_prime_power(order)
        if p is not None:
            phi = frattini_p(G, p, cap)
            return integer_log(order // phi.order(), p)
        lower = max(2, _abelianization_d_perm(G, cap))
        pruned = _pruned_generators(G)
        if len(pruned) == lower:
            return lower
        try:
            idx = _indexed(G, cap)
        except CapExceeded:
            raise CapExceeded(f"generator tuple search (k={lower})",
                              tuple_cap, order ** lower)
        d, _ = idx.min_generators_of(frozenset(range(idx.n)),
                                     tuple(idx.index[g] for g in pruned),
                                     tuple_cap)
        return d
    return _cached(G, "min_generators", compute)


def _abelianization_d_perm(G: Group, cap: int) -> int:
    derived = derived_subgroup(G)
    index = G.order() // derived.order()
    if index == 1:
        return 0
    best = 0
    for p in prime_factors(index):
        count = sum(1 for x in G.elements(cap) if (x ** p) in derived)
        best = max(best, integer_log(count // derived.order(), p))
    return best


def _pruned_generators(G: Group) -> tuple[Perm, ...]:
    """Greedily drop redundant generators (order test on the rest)."""
    kept = list(G.generators)
    target = G.order()
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1:]
        if Group(G.degree, trial).order() == target:
            kept = trial
        else:
            i += 1
    return tuple(kept)


def all_subgroups(G: Group, subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
                  cap: int = DEFAULT_ENUMERATION_CAP) -> list[Subgroup]:
    """Every subgroup exactly once, by bottom-up closure: all cyclic
    subgroups, then repeated one-element extensions, deduplicated by
    element-set fingerprint.

    Extensions only need elements of prime-power order (every subgroup is
    generated by such elements), and for a fixed H the candidates g, g^k
    (for <g^k> = <g>) and g^h (h in H) all generate the same extension, so
    one representative per such orbit is tried.
    """
    def compute():
        order = G.order()
        if order > subgroup_cap:
            raise CapExceeded("subgroup enumeration", subgroup_cap, order)
        idx = _Indexed(G, cap) if "indexed" not in G._cache \
            else G._cache["indexed"]
        G._cache.setdefault("indexed", idx)
        table = idx.table

        found: dict[frozenset[int], tuple[int, ...]] = {}
        worklist: list[frozenset[int]] = []

        def record(hset: frozenset[int], gens: tuple[int, ...]):
            if hset not in found:
                found[hset] = gens
                worklist.append(hset)

        record(frozenset({idx.identity}), ())
        for x in range(idx.n):
            if x == idx.identity:
                continue
            powers = {x}
            y = table[x][x]
            while y != x:
                powers.add(y)
                y = table[y][x]
            record(frozenset(powers), (x,))

        candidates = [x for x in range(idx.n)
                      if is_prime_power(idx.orders[x]) is not None]

        pos = 0
        while pos < len(worklist):
            hset = worklist[pos]
            gens = found[hset]
            pos += 1
            if len(hset) == order:
                continue
            skip: set[int] = set()
            for g in candidates:
                if g in hset or g in skip:
                    continue
                new_gens = gens + (g,)
                record(idx.closure(new_gens), new_gens)
                # same extension from any <g>-generator conjugated into H
                g_order = idx.orders[g]
                gen_powers = [idx.power(g, k) for k in range(1, g_order)
                              if gcd(k, g_order) == 1]
                for gk in gen_powers:
                    for h in hset:
                        skip.add(idx.conjugate(gk, h))

        handles = []
        for hset, gens in found.items():
            handle = Subgroup(G, [idx.elems[g] for g in gens], _trusted=True)
            handle._adopt_elements([idx.elems[i] for i in sorted(hset)])
            handles.append(handle)
        handles.sort(key=lambda h: (h.order(),
                                    tuple(sorted(e._img for e in h.elements()))))
        G._cache["subgroup_sets"] = dict(found)
        return handles
    return _cached(G, "all_subgroups", compute)



def group_rank(G: Group, cap: int = DEFAULT_ENUMERATION_CAP,
               subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
               tuple_cap: int = DEFAULT_TUPLE_CAP) -> "int | UnknownRank":
    """max d(H) over subgroups; abelian groups shortcut through socle ranks.
    Past the subgroup cap the result is Unknown, never a guess."""
    def compute():
        if G.order() == 1:
            return 0
        if G.is_abelian():
            return abelian_rank(G, cap)
        try:
            all_subgroups(G, subgroup_cap, cap)
        except CapExceeded as exc:
            return UnknownRank(exc.what, exc.limit, exc.value)
        idx = G._cache["indexed"]
        best = 0
        for hset, gens in G._cache["subgroup_sets"].items():
            d, _ = idx.min_generators_of(hset, gens, tuple_cap)
            best = max(best, d)
        return best
    return _cached(G, "group_rank", compute)


def rank_report(G: Group, cap: int = DEFAULT_ENUMERATION_CAP,
                subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
                tuple_cap: int = DEFAULT_TUPLE_CAP) -> RankReport:
    rank = group_rank(G, cap, subgroup_cap, tuple_cap)
    d = min_generators(G, cap, tuple_cap)
    if G.order() == 1 or G.is_abelian():
        method = "abelian-socle"
    elif isinstance(rank, UnknownRank):
        method = "subgroup-enumeration"
    elif is_prime_power(G.order()) is not None:
        method = "frattini"
    else:
        method = "subgroup-enumeration"
    return RankReport(d, rank, method)


def shrink_generating_set(G: Group, gens: list[Perm],
                          cap: int = DEFAULT_ENUMERATION_CAP) -> list[Perm]:
    """From a generating set of a p-group, keep a subset of size exactly d
    that still generates: scan in order, keeping generators whose images in
    the Frattini quotient are independent of those already kept."""
    order = G.order()
    if order == 1:
        return []
    p = is_prime_power(order)
    if p is None:
        raise NotPGroup(f"order {order} is not a prime power")
    if Group(G.degree, gens).order() != order:
        raise NotGenerating("the given elements do not generate the group")
    phi = frattini_p(G, p, cap)
    kept: list[Perm] = []
    K = phi
    for g in gens:
        if g in K:
            continue
        kept.append(g)
        K = Subgroup(G, tuple(K.generators) + (g,), _trusted=True)
        if K.order() == order:
            break
    if Group(G.degree, kept).order() != order:
        raise AssertionError("Frattini-independent subset fails to generate")
    expected = integer_log(order // phi.order(), p)
    if len(kept) != expected:
        raise AssertionError(
            f"kept {len(kept)} generators, Burnside basis says {expected}")
    return kept
