"""The subgroup algebra: centralizers, centers, derived and mutual commutator
subgroups, the second center, Sylow subgroups, normalizers, quotients by
normal subgroups, socles of abelian p-groups, and coprime Fitting
decompositions.

Centralizer-style subgroups are computed by exhaustive element filtering
under the enumeration cap: at desk scale the simple, obviously-correct
method wins, and the cap fails loudly.  Normality is always checked
explicitly, never assumed from theory, so implementation bugs surface as
NotNormal instead of silently wrong answers.

Results that are expensive and reused (derived subgroup, center, second
center, the quotient by the center) are cached on the group object, which
is immutable once built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .arith import p_part, prime_factors
from .errors import (CapExceeded, NotAbelian, NotCoprime, NotNormal,
                     NotPGroup)
from .group import (DEFAULT_ENUMERATION_CAP, Group, Subgroup,
                    generated_subgroup, subgroup_from_elements)
from .perm import Perm, commutator, identity


def _cached(G: Group, key, compute: Callable):
    if key not in G._cache:
        G._cache[key] = compute()
    return G._cache[key]


def _ambient(A: Group) -> Group:
    g = A
    while isinstance(g, Subgroup):
        g = g.parent
    return g


# -- centralizer-style filters ---------------------------------------------


def centralizer(G: Group, S: Sequence[Perm],
                cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """{g in G | gs = sg for all s in S}, by exhaustive filter."""
    targets = [s for s in S if not s.is_identity()]
    if not targets:
        return subgroup_from_elements(G, list(G.elements(cap)))
    selected = [g for g in G.elements(cap)
                if all(g * s == s * g for s in targets)]
    return subgroup_from_elements(G, selected)


def center(G: Group, cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """Z(G) = centralizer of a generating set."""
    return _cached(G, "center", lambda: centralizer(G, G.generators, cap))


def second_center(G: Group, cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """{g | [g, x] lies in Z(G) for every generator x}.

    Sufficient because for central [g, x] and [g, y] one has
    [g, xy] = [g, y][g, x]^y = [g, y][g, x].
    """
    def compute():
        zset = center(G, cap).element_set(cap)
        gens = [(x, x.inverse()) for x in G.generators]
        selected = []
        for g in G.elements(cap):
            ginv = g.inverse()
            if all(ginv * xinv * g * x in zset for x, xinv in gens):
                selected.append(g)
        return subgroup_from_elements(G, selected)
    return _cached(G, "second_center", compute)


def dee_subgroup(G: Group, cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """{g | [g, c] central for every generator c of the derived subgroup};
    this is exactly {g | [g, G'] <= Z(G)} since the conditions multiply."""
    def compute():
        zset = center(G, cap).element_set(cap)
        dgens = [(c, c.inverse()) for c in derived_subgroup(G).generators]
        selected = []
        for g in G.elements(cap):
            ginv = g.inverse()
            if all(ginv * cinv * g * c in zset for c, cinv in dgens):
                selected.append(g)
        return subgroup_from_elements(G, selected)
    return _cached(G, "dee", compute)


def normalizer(G: Group, H: Group,
               cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """{g in G | H^g = H}, by exhaustive filter."""
    hgens = H.generators
    selected = []
    for g in G.elements(cap):
        ginv = g.inverse()
        if all((ginv * h * g) in H for h in hgens):
            selected.append(g)
    return subgroup_from_elements(G, selected)


def intersection(A: Group, B: Group,
                 cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """A intersect B as a handle on the ambient group of A."""
    small, large = (A, B) if A.order() <= B.order() else (B, A)
    selected = [x for x in small.elements(cap) if x in large]
    return subgroup_from_elements(_ambient(A), selected)


def is_normal(G: Group, H: Group) -> bool:
    """H normal in G, decided by sifting generator conjugates into H."""
    return all((g.inverse() * h * g) in H
               for h in H.generators for g in G.generators)


def is_subgroup_of(A: Group, B: Group) -> bool:
    return all(a in B for a in A.generators)


# -- commutator subgroups ----------------------------------------------------


def mutual_commutator(A: Group, B: Group) -> Subgroup:
    """[A, B]: the normal closure in <A, B> of the generator commutators."""
    ambient = _ambient(A)
    seed = []
    for a in A.generators:
        for b in B.generators:
            c = commutator(a, b)
            if not c.is_identity():
                seed.append(c)
    K = Subgroup(ambient, seed, _trusted=True)
    conjugators = tuple(A.generators) + tuple(B.generators)
    while True:
        new = []
        for k in K.generators:
            for t in conjugators:
                c = t.inverse() * k * t
                if c not in K:
                    new.append(c)
        if not new:
            return K
        K = Subgroup(ambient, tuple(K.generators) + tuple(new), _trusted=True)


def derived_subgroup(G: Group) -> Subgroup:
    return _cached(G, "derived", lambda: mutual_commutator(G, G))


def zed_subgroup(G: Group, cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """The intersection of the derived subgroup with the center."""
    def compute():
        gp = derived_subgroup(G)
        selected = [z for z in center(G, cap).elements(cap) if z in gp]
        return subgroup_from_elements(G, selected)
    return _cached(G, "zed", compute)


# -- Sylow subgroups ---------------------------------------------------------


def sylow(G: Group, p: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """A Sylow p-subgroup by normalizer ascent; trivial when p doesn't
    divide the order."""
    def compute():
        target = p_part(G.order(), p)
        P = Subgroup(G, (), _trusted=True)
        while P.order() < target:
            N = normalizer(G, P, cap) if P.order() > 1 else G
            grown = False
            for y in N.elements(cap):
                if y in P:
                    continue
                if (y ** p) in P:
                    P = Subgroup(G, tuple(P.generators) + (y,), _trusted=True)
                    grown = True
                    break
            if not grown:
                raise AssertionError(
                    f"sylow ascent stalled at order {P.order()} of {target}")
        return P
    return _cached(G, ("sylow", p), compute)


# -- quotients ----------------------------------------------------------------


class QuotientPresentation:
    """A faithful action of G/N on the right cosets of N.

    ``quotient`` is the image group; ``projection`` maps an element of G to
    its image permutation; ``section`` maps an image element back to the
    canonical representative of the corresponding coset.  Because the coset
    action of the quotient on itself is regular, the section is read off the
    image of the identity coset.
    """

    def __init__(self, source: Group, kernel: Group, quotient: Group,
                 reps: list[Perm], coset_of: Callable[[Perm], int]):
        self.source = source
        self.kernel = kernel
        self.quotient = quotient
        self._reps = reps
        self._coset_of = coset_of

    def projection(self, g: Perm) -> Perm:
        m = len(self._reps)
        if m == 0:
            return identity(0)
        images = [0] * m
        for i, rep in enumerate(self._reps):
            images[i] = self._coset_of(rep * g)
        return Perm._raw(tuple(images))

    def section(self, q: Perm) -> Perm:
        return self._reps[q._img[0]]

    def project_subgroup(self, H: Group) -> Subgroup:
        return Subgroup(self.quotient,
                        [self.projection(h) for h in H.generators],
                        _trusted=True)

    def preimage_elements(self, elems: Sequence[Perm],
                          cap: int = DEFAULT_ENUMERATION_CAP) -> list[Perm]:
        """All of G mapping onto the given quotient elements."""
        lifted = []
        for q in elems:
            rep = self.section(q)
            for n in self.kernel.elements(cap):
                lifted.append(n * rep)
        return lifted


class _IdentityQuotient(QuotientPresentation):
    """Quotient by the trivial subgroup: G is its own coset action."""

    def __init__(self, source: Group, kernel: Group):
        super().__init__(source, kernel, source, [], lambda g: 0)

    def projection(self, g: Perm) -> Perm:
        return g

    def section(self, q: Perm) -> Perm:
        return q

    def project_subgroup(self, H: Group) -> Subgroup:
        return Subgroup(self.quotient, H.generators, _trusted=True)

    def preimage_elements(self, elems, cap: int = DEFAULT_ENUMERATION_CAP):
        return list(elems)


def quotient(G: Group, N: Group, coset_cap: int = 100_000,
             cap: int = DEFAULT_ENUMERATION_CAP) -> QuotientPresentation:
    """The right-coset action of G on the cosets of a normal subgroup N."""
    if not is_normal(G, N):
        raise NotNormal("quotient requires a normal subgroup")
    index = G.order() // N.order()
    if index > coset_cap:
        raise CapExceeded("coset enumeration", coset_cap, index)
    if N.order() == 1:
        return _IdentityQuotient(G, N)

    n_elems = N.elements(cap)

    def canonical(x: Perm) -> Perm:
        return min(n * x for n in n_elems)

    index_of: dict[Perm, int] = {}
    reps: list[Perm] = []

    def coset_of(x: Perm) -> int:
        return index_of[canonical(x)]

    start = canonical(identity(G.degree))
    index_of[start] = 0
    reps.append(start)
    head = 0
    while head < len(reps):
        rep = reps[head]
        head += 1
        for s in G.generators:
            key = canonical(rep * s)
            if key not in index_of:
                index_of[key] = len(reps)
                reps.append(key)
    if len(reps) != index:
        raise AssertionError(
            f"coset walk found {len(reps)} cosets, expected {index}")

    presentation = QuotientPresentation(G, N, Group(0), reps, coset_of)
    image_gens = [presentation.projection(s) for s in G.generators]
    presentation.quotient = Group(max(index, 1), image_gens)
    return presentation


def quotient_by_center(G: Group, coset_cap: int = 100_000,
                       cap: int = DEFAULT_ENUMERATION_CAP) -> QuotientPresentation:
    return _cached(G, "quotient_by_center",
                   lambda: quotient(G, center(G, cap), coset_cap, cap))


# -- socles and Fitting decompositions ---------------------------------------


def socle_p(A: Group, p: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Subgroup:
    """Subgroup of an abelian p-group generated by its order-p elements,
    i.e. {a | a^p = 1}; elementary abelian of rank = rank of A."""
    if not A.is_abelian():
        raise NotAbelian("socle_p requires an abelian group")
    order = A.order()
    if order > 1 and p_part(order, p) != order:
        raise NotPGroup(f"socle_p requires a {p}-group, order is {order}")
    selected = [a for a in A.elements(cap) if (a ** p).is_identity()]
    return subgroup_from_elements(A, selected)


def fitting_decomposition(P: Group, Q: Group,
                          cap: int = DEFAULT_ENUMERATION_CAP,
                          strict: bool = True) -> tuple[Subgroup, Subgroup]:
    """For a coprime action of Q on abelian normal P: P = [P,Q] x C_P(Q).

    With strict=False, P may be non-abelian and only the weaker product
    decomposition P = [P,Q]·C_P(Q) (no directness) is verified.
    """
    if strict and not P.is_abelian():
        raise NotAbelian("fitting decomposition requires abelian P")
    if math.gcd(P.order(), Q.order()) != 1:
        raise NotCoprime(
            f"orders {P.order()} and {Q.order()} are not coprime")
    if not all((q.inverse() * x * q) in P
               for x in P.generators for q in Q.generators):
        raise NotNormal("P must be normalised by Q")
    commutator_part = mutual_commutator(P, Q)
    fixed = [x for x in P.elements(cap)
             if all(x * q == q * x for q in Q.generators)]
    fixed_part = subgroup_from_elements(_ambient(P), fixed)
    meet = [x for x in fixed if x in commutator_part]
    product_order = commutator_part.order() * fixed_part.order() // len(meet)
    if product_order != P.order():
        raise AssertionError("Fitting product [P,Q]·C_P(Q) != P")
    if strict and len(meet) != 1:
        raise AssertionError("Fitting decomposition is not direct")
    return commutator_part, fixed_part


# -- the structure report -----------------------------------------------------


@dataclass
class StructureReport:
    """The cast of subgroups walked by every statement check, with orders.

    dee is {g | [g, G'] <= Z(G)} and zed is the intersection of the derived
    subgroup with the center; p_parts maps each prime dividing |G' : zed| to
    its p-part.
    """
    group: Group
    derived: Subgroup
    center: Subgroup
    second_center: Subgroup
    centralizer_of_derived: Subgroup
    dee: Subgroup
    zed: Subgroup
    orders: dict[str, int]
    p_parts: dict[int, int]

    @property
    def derived_mod_zed(self) -> int:
        return self.orders["derived"] // self.orders["zed"]


def structure_report(G: Group, cap: int = DEFAULT_ENUMERATION_CAP,
                     coset_cap: int = 100_000) -> StructureReport:
    """Compute all the named subgroups for one group and sanity-check the
    containments between them (a failure here is an implementation bug,
    not a property of the group)."""
    def compute():
        derived = derived_subgroup(G)
        zent = center(G, cap)
        zed = zed_subgroup(G, cap)
        second = second_center(G, cap)
        cent_derived = centralizer(G, derived.generators, cap)
        dee = dee_subgroup(G, cap)

        # cross-check the filter definition of the second center against the
        # preimage of the center of G/Z(G)
        pres = quotient_by_center(G, coset_cap, cap)
        center_above = center(pres.quotient, cap)
        preimage = set(pres.preimage_elements(center_above.elements(cap), cap))
        if preimage != set(second.elements(cap)):
            raise AssertionError(
                "second center: filter and quotient preimage disagree")

        for smaller, larger, what in (
                (zent, second, "Z <= Z2"),
                (second, cent_derived, "Z2 <= C_G(G')"),
                (cent_derived, dee, "C_G(G') <= D")):
            if not is_subgroup_of(smaller, larger):
                raise AssertionError(f"structure containment {what} failed")
        for H in (derived, zent, second, cent_derived, dee):
            if not is_normal(G, H):
                raise AssertionError("structure subgroup is not normal")
        #  zed by double inclusion
        if not (is_subgroup_of(zed, derived) and is_subgroup_of(zed, zent)):
            raise AssertionError("zed escapes derived or center")
        for z in zent.elements(cap):
            if z in derived and z not in zed:
                raise AssertionError("zed misses a central derived element")

        orders = {
            "group": G.order(),
            "derived": derived.order(),
            "center": zent.order(),
            "second_center": second.order(),
            "centralizer_of_derived": cent_derived.order(),
            "dee": dee.order(),
            "zed": zed.order(),
        }
        n = orders["derived"] // orders["zed"]
        p_parts = {p: p_part(n, p) for p in prime_factors(n)}
        if math.prod(p_parts.values()) != n:
            raise AssertionError("p-parts do not multiply back")
        return StructureReport(G, derived, zent, second, cent_derived, dee,
                               zed, orders, p_parts)
    return _cached(G, "structure_report", compute)
