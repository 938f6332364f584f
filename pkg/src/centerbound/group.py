"""Permutation groups backed by a deterministic base and strong generating set.

The stabilizer chain is built by the classic deterministic Schreier-Sims
procedure (no randomisation), so orders, membership answers and element
enumeration order are bit-stable across runs.  Groups are immutable after
construction; lazily filled caches (chain, element list) are write-once, so
a group may be shared freely once built.

Element enumeration walks the transversal chain in sorted-orbit order and is
guarded by a configurable cap: operations that need the full element list
fail loudly with CapExceeded rather than subsample.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .errors import CapExceeded, DegreeMismatch
from .perm import Perm, identity

DEFAULT_ENUMERATION_CAP = 200_000


class _Level:
    """One level of the stabilizer chain: a base point, the strong
    generators first assigned to this level, and a Schreier transversal.

    The group of level i is generated by the gens of ALL levels >= i; a
    generator sits at the first level whose base point it moves.
    """

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int):
        self.point = point              # 0-based internally
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {}

    def rebuild(self, degree: int, gens: Sequence[Perm]):
        """BFS the orbit of the base point, recording one representative
        u with point^u = delta per orbit member (first writer wins)."""
        self.transversal = {self.point: identity(degree)}
        queue = [self.point]
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            u = self.transversal[a]
            for g in gens:
                b = g._img[a]
                if b not in self.transversal:
                    self.transversal[b] = u * g
                    queue.append(b)


def _schreier_sims(degree: int, generators: Sequence[Perm]) -> list[_Level]:
    """Deterministic stabilizer chain (textbook Schreier-Sims).

    Base points are chosen as the smallest point moved by the generator
    that forces a new level; orbits are BFS in generator-list order; level
    i is complete once every Schreier generator at level i strips to the
    identity through the deeper levels.
    """
    levels: list[_Level] = []

    def gens_at(i: int) -> list[Perm]:
        out: list[Perm] = []
        for level in levels[i:]:
            out.extend(level.gens)
        return out

    def rebuild(i: int):
        levels[i].rebuild(degree, gens_at(i))

    def strip(p: Perm, start: int) -> Perm:
        h = p
        for level in levels[start:]:
            delta = h._img[level.point]
            if delta == level.point:
                continue
            u = level.transversal.get(delta)
            if u is None:
                return h
            h = h * u.inverse()
        return h

    def place(h: Perm) -> int:
        """File a new strong generator at the first level whose base point
        it moves, appending a level if it fixes every existing base point."""
        for j, level in enumerate(levels):
            if h._img[level.point] != level.point:
                level.gens.append(h)
                return j
        moved = next(i for i in range(degree) if h._img[i] != i)
        levels.append(_Level(moved))
        levels[-1].gens.append(h)
        return len(levels) - 1

    def complete(i: int):
        """Close level i, assuming all deeper levels are complete."""
        rebuild(i)
        while True:
            level = levels[i]
            sgens = gens_at(i)
            dirty = False
            for delta in sorted(level.transversal):
                u = level.transversal[delta]
                for s in sgens:
                    target = level.transversal[s._img[delta]]
                    schreier = u * s * target.inverse()
                    if schreier.is_identity():
                        continue
                    residue = strip(schreier, i + 1)
                    if residue.is_identity():
                        continue
                    j = place(residue)
                    for k in range(j, i, -1):
                        complete(k)
                    rebuild(i)
                    dirty = True
                    break
                if dirty:
                    break
            if not dirty:
                return

    for g in generators:
        if not g.is_identity():
            place(g)
    for i in range(len(levels) - 1, -1, -1):
        complete(i)
    return levels


class Group:
    """A finite permutation group given by generators on {1..degree}."""

    def __init__(self, degree: int, generators: Iterable[Perm] = ()):
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}")
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._levels: list[_Level] | None = None
        self._order: int | None = None
        self._elements: tuple[Perm, ...] | None = None
        self._element_set: frozenset[Perm] | None = None
        self._cache: dict = {}

    # -- stabilizer chain ------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = _schreier_sims(self.degree, self.generators)
        return self._levels

    def build_bsgs(self) -> "Group":
        """Force construction of the stabilizer chain; idempotent."""
        self._chain()
        return self

    @property
    def base(self) -> tuple[int, ...]:
        """The 1-based base points of the stabilizer chain."""
        return tuple(level.point + 1 for level in self._chain())

    def order(self) -> int:
        if self._order is None:
            if self._elements is not None:
                self._order = len(self._elements)
            else:
                n = 1
                for level in self._chain():
                    n *= len(level.transversal)
                self._order = n
        return self._order

    def sift(self, p: Perm) -> Perm:
        """Strip p through the chain; the residue is the identity exactly
        when p is a member."""
        if p.degree != self.degree:
            raise DegreeMismatch(
                f"perm degree {p.degree} != group degree {self.degree}")
        h = p
        for level in self._chain():
            delta = h._img[level.point]
            if delta == level.point:
                continue
            u = level.transversal.get(delta)
            if u is None:
                return h
            h = h * u.inverse()
        return h

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(
                f"perm degree {p.degree} != group degree {self.degree}")
        if self._element_set is not None:
            return p in self._element_set
        return self.sift(p).is_identity()

    def __contains__(self, p: Perm) -> bool:
        return self.contains(p)

    # -- element enumeration ---------------------------------------------

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[Perm, ...]:
        """All elements exactly once, in deterministic transversal order."""
        if self._elements is None:
            if self.order() > cap:
                raise CapExceeded("element enumeration", cap, self.order())
            elems = [identity(self.degree)]
            for level in reversed(self._chain()):
                reps = [level.transversal[d] for d in sorted(level.transversal)]
                elems = [e * u for u in reps for e in elems]
            self._elements = tuple(elems)
            self._element_set = frozenset(elems)
        elif len(self._elements) > cap:
            raise CapExceeded("element enumeration", cap, len(self._elements))
        return self._elements

    def element_set(self, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Perm]:
        self.elements(cap)
        return self._element_set

    def _adopt_elements(self, elems: Sequence[Perm]):
        # trusted: elems is exactly the element list of this group
        if self._elements is None:
            self._elements = tuple(elems)
            self._element_set = frozenset(elems)
            self._order = len(self._elements)

    def random_element(self, rng: random.Random) -> Perm:
        """Uniform random element, drawn level-by-level from the transversals."""
        g = identity(self.degree)
        for level in reversed(self._chain()):
            delta = rng.choice(sorted(level.transversal))
            g = g * level.transversal[delta]
        return g

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def identity_element(self) -> Perm:
        return identity(self.degree)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"Group(degree={self.degree}, <{gens}>)"


class Subgroup(Group):
    """A subgroup handle: a Group plus a reference to the parent it lives in.

    Generators are checked to sift to the identity through the parent's
    chain, so a handle can never silently escape its parent.
    """

    def __init__(self, parent: Group, generators: Iterable[Perm] = (),
                 _trusted: bool = False):
        super().__init__(parent.degree, generators)
        self.parent = parent
        if not _trusted:
            for g in self.generators:
                if not parent.contains(g):
                    raise ValueError(f"generator {g} lies outside the parent group")

    @property
    def root(self) -> Group:
        g = self.parent
        while isinstance(g, Subgroup):
            g = g.parent
        return g

    def __repr__(self) -> str:
        return f"Sub{super().__repr__()}"


def subgroup_from_elements(parent: Group, elems: Sequence[Perm],
                           _trusted: bool = True) -> Subgroup:
    """Build a handle from a full element list (as produced by a filter),
    selecting a small generating subset and caching the elements.

    The generator selection is greedy in list order, so deterministic input
    order gives a deterministic handle.
    """
    if len(elems) == parent.order():
        handle = Subgroup(parent, parent.generators, _trusted=True)
        handle._adopt_elements(list(elems))
        return handle
    gens: list[Perm] = []
    known: set[Perm] = {identity(parent.degree)}
    for e in elems:
        if e in known or e.is_identity():
            continue
        gens.append(e)
        # close the enlarged subgroup inside the known element set
        frontier = list(known)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = x * g
                if y not in known:
                    known.add(y)
                    frontier.append(y)
        if len(known) == len(elems):
            break
    handle = Subgroup(parent, gens, _trusted=_trusted)
    handle._adopt_elements(list(elems))
    return handle


def generated_subgroup(parent: Group, gens: Iterable[Perm]) -> Subgroup:
    return Subgroup(parent, gens)
