"""The statement catalog: each theorem or lemma instance as a checkable
predicate over one group, producing a Verdict with exact integer sides.

Tags:

* T1: |G'| <= |G : Z(G)|^(r+1), r = rank(G/Z(G)).
* T2: |G : Z2(G)| <= |G'|^(2r), r = rank(G').
* T3: |G : Z2(G)| <= |G' : G' n Z(G)|^(4r), r = rank of that section.
* C4: |H : Z(H)| <= |H'|^(4 rank(H')) for the capable group H = G/Z(G).
* T5: with trivial center, C_G(G') <= G' (violating-element count).
* T6: with trivial center, |G| <= |G'|^(d+1), d = d(G').
* T7: p-groups: rank(G/Z2) <= (13 r^2 - r)/2, r = rank(G' mod zed).
* L9: Z2(G) <= C_G(G') and [C_G(G'), C_G(G')] <= Z(G).
* LK: |K : C_K(H)| <= |G' n K|^d(H) over sampled pairs, K normal.
* CK: |G : C_G(G')| <= |G'|^d(G').
* LA: |C_G(G') : Z2(G)| <= |G' : zed|^r.
* LB: G'/C_{G'}(P) is a p-group for each Sylow P of D.
* LS: |D : C_G(G')| <= |G' : zed|^(2r)  (the exponent-r form is recorded
  as data in the notes, never asserted).
* P1/P2: p-groups: rank(C_G(G')/Z2) <= r^2, rank(D/C_G(G')) <= 2 r^2.
* AUT: p-groups: rank(G/D) <= (7r^2-r)/2 for p = 2, (5r^2-r)/2 otherwise.
* FOC: G' n P n Z(G) = P' n Z(G) for every Sylow P of G.

Inapplicable hypotheses yield applicable=False (vacuously true); a cap
firing anywhere yields computable=False -- never a guessed bound.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .arith import is_prime_power, prime_factors
from .config import Config
from .errors import CapExceeded
from .group import Group, Subgroup, subgroup_from_elements
from .perm import Perm
from .rank import (UnknownRank, all_subgroups, group_rank, min_generators,
                   _pruned_generators)
from .structure import (centralizer, intersection, is_normal,
                        mutual_commutator, quotient_by_center,
                        structure_report, sylow)
from .witness import (WitnessRecord, _section_rank, also_witness,
                      szivas_witness)

STATEMENT_TAGS = ("T1", "T2", "T3", "C4", "T5", "T6", "T7", "L9", "LK",
                  "CK", "LA", "LB", "LS", "P1", "P2", "AUT", "FOC")


@dataclass
class Verdict:
    """One statement instance: exact sides, hypothesis and cap flags, and
    an optional witness payload.  Inclusion-shaped statements encode
    lhs = number of violating elements and rhs = 0."""
    statement: str
    applicable: bool
    computable: bool
    lhs: int
    rhs: int
    holds: bool
    witness: WitnessRecord | None = None
    notes: str = ""

    @property
    def violated(self) -> bool:
        return self.applicable and self.computable and not self.holds

    def to_json(self) -> dict:
        record = {
            "statement": self.statement,
            "applicable": self.applicable,
            "computable": self.computable,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "notes": self.notes,
        }
        if self.witness is not None:
            record["witness"] = self.witness.to_json()
        return record


def _vacuous(tag: str, note: str) -> Verdict:
    return Verdict(tag, False, True, 0, 0, True, None, note)


def _uncomputable(tag: str, note: str) -> Verdict:
    return Verdict(tag, True, False, 0, 0, True, None, note)


def _tightness(lhs: int, rhs: int) -> str:
    if lhs > 1 and rhs > 1:
        return f"tightness={math.log(lhs) / math.log(rhs):.4f}"
    return "tightness=trivial"


def _bound(tag: str, lhs: int, rhs: int, witness=None, extra: str = "") -> Verdict:
    notes = _tightness(lhs, rhs)
    if extra:
        notes = f"{extra}; {notes}"
    return Verdict(tag, True, True, lhs, rhs, lhs <= rhs, witness, notes)


def _inclusion(tag: str, violations: int, extra: str = "") -> Verdict:
    notes = extra or "inclusion encoded as violating-element count"
    return Verdict(tag, True, True, violations, 0, violations == 0, None, notes)


class _Evaluator:
    """Evaluation context for one group: structure report, section ranks
    and quotients computed once and shared across statements."""

    def __init__(self, G: Group, config: Config):
        self.G = G
        self.config = config
        self.cap = config.enumeration_cap
        self.coset_cap = config.coset_cap
        self.subgroup_cap = config.subgroup_cap
        self.tuple_cap = config.tuple_cap
        self._memo: dict = {}

    def _get(self, key, compute):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    @property
    def sr(self):
        return structure_report(self.G, self.cap, self.coset_cap)

    def rank_of(self, H: Group):
        return group_rank(H, self.cap, self.subgroup_cap, self.tuple_cap)

    def section_rank(self, num: Group, den: Group):
        return _section_rank(num, den, self.cap, self.subgroup_cap,
                             self.tuple_cap, self.coset_cap)

    @property
    def r_derived_mod_zed(self):
        return self._get("r_dz", lambda: self.section_rank(
            self.sr.derived, self.sr.zed))

    @property
    def central_quotient(self):
        return self._get("quot_center", lambda: quotient_by_center(
            self.G, self.coset_cap, self.cap))

    @property
    def p_group_prime(self):
        return is_prime_power(self.G.order())

    def is_p_group(self) -> bool:
        return self.G.order() == 1 or self.p_group_prime is not None

    # -- individual statements -------------------------------------------

    def evaluate(self, tag: str) -> Verdict:
        return self._get(("verdict", tag), lambda: self._dispatch(tag))

    def _dispatch(self, tag: str) -> Verdict:
        try:
            return getattr(self, "_eval_" + tag.lower())()
        except CapExceeded as exc:
            return _uncomputable(tag, f"cap fired: {exc}")

    def _eval_t1(self) -> Verdict:
        sr = self.sr
        pres = self.central_quotient
        r = self.rank_of(pres.quotient)
        if isinstance(r, UnknownRank):
            return _uncomputable("T1", f"rank of G/Z(G) is {r}")
        lhs = sr.orders["derived"]
        index = sr.orders["group"] // sr.orders["center"]
        return _bound("T1", lhs, index ** (r + 1), extra=f"r={r}")

    def _eval_t2(self) -> Verdict:
        sr = self.sr
        r = self.rank_of(sr.derived)
        if isinstance(r, UnknownRank):
            return _uncomputable("T2", f"rank of G' is {r}")
        lhs = sr.orders["group"] // sr.orders["second_center"]
        return _bound("T2", lhs, sr.orders["derived"] ** (2 * r),
                      extra=f"r={r}")

    def _eval_t3(self) -> Verdict:
        sr = self.sr
        r = self.r_derived_mod_zed
        if isinstance(r, UnknownRank):
            return _uncomputable("T3", f"rank of G'/zed is {r}")
        lhs = sr.orders["group"] // sr.orders["second_center"]
        return _bound("T3", lhs, sr.derived_mod_zed ** (4 * r),
                      extra=f"r={r}")

    def _eval_c4(self) -> Verdict:
        H = self.central_quotient.quotient
        sr_h = structure_report(H, self.cap, self.coset_cap)
        r = self.rank_of(sr_h.derived)
        if isinstance(r, UnknownRank):
            return _uncomputable("C4", f"rank of H' is {r}")
        lhs = sr_h.orders["group"] // sr_h.orders["center"]
        return _bound("C4", lhs, sr_h.orders["derived"] ** (4 * r),
                      extra=f"H=G/Z(G), r={r}")

    def _eval_t5(self) -> Verdict:
        sr = self.sr
        if sr.orders["center"] != 1:
            return _vacuous("T5", "requires trivial center")
        derived_set = sr.derived.element_set(self.cap)
        violations = sum(
            1 for c in sr.centralizer_of_derived.elements(self.cap)
            if c not in derived_set)
        return _inclusion("T5", violations, "C_G(G') <= G'")

    def _eval_t6(self) -> Verdict:
        sr = self.sr
        if sr.orders["center"] != 1:
            return _vacuous("T6", "requires trivial center")
        d = min_generators(sr.derived, self.cap, self.tuple_cap)
        return _bound("T6", sr.orders["group"],
                      sr.orders["derived"] ** (d + 1), extra=f"d={d}")

    def _eval_t7(self) -> Verdict:
        if not self.is_p_group():
            return _vacuous("T7", "requires a p-group")
        sr = self.sr
        r = self.r_derived_mod_zed
        if isinstance(r, UnknownRank):
            return _uncomputable("T7", f"rank of G'/zed is {r}")
        lhs = self.section_rank(self.G, sr.second_center)
        if isinstance(lhs, UnknownRank):
            return _uncomputable("T7", f"rank of G/Z2 is {lhs}")
        return _bound("T7", lhs, (13 * r * r - r) // 2, extra=f"r={r}")

    def _eval_l9(self) -> Verdict:
        sr = self.sr
        cent_set = sr.centralizer_of_derived.element_set(self.cap)
        z_set = sr.center.element_set(self.cap)
        violations = sum(1 for z in sr.second_center.elements(self.cap)
                         if z not in cent_set)
        cc = mutual_commutator(sr.centralizer_of_derived,
                               sr.centralizer_of_derived)
        violations += sum(1 for c in cc.elements(self.cap)
                          if c not in z_set)
        return _inclusion("L9", violations,
                          "Z2 <= C_G(G') and [C_G(G'),C_G(G')] <= Z(G)")

    def _eval_lk(self) -> Verdict:
        G = self.G
        sr = self.sr
        try:
            subs = all_subgroups(G, self.subgroup_cap, self.cap)
            normals = [K for K in subs if is_normal(G, K)]
            source = "all normal subgroups"
        except CapExceeded:
            normals = []
            seen = set()
            for K in (Subgroup(G, (), _trusted=True), sr.zed, sr.center,
                      sr.derived, sr.second_center,
                      sr.centralizer_of_derived, sr.dee,
                      Subgroup(G, G.generators, _trusted=True)):
                fp = K.order()
                if (fp, K.element_set(self.cap)) not in seen:
                    seen.add((fp, K.element_set(self.cap)))
                    normals.append(K)
            source = "canonical normal subgroups (subgroup cap fired)"
        library = self._lk_library()
        worst = None
        pairs = 0
        for H, h_name, d, d_note in library:
            gprime_meets = {}
            for K in normals:
                pairs += 1
                ck = sum(1 for k in K.elements(self.cap)
                         if all(k * h == h * k for h in H.generators))
                lhs = K.order() // ck
                key = K.element_set(self.cap)
                if key not in gprime_meets:
                    gprime_meets[key] = intersection(
                        K, sr.derived, self.cap).order()
                rhs = gprime_meets[key] ** d
                descriptor = (f"H={h_name} (d={d}{d_note}), "
                              f"|K|={K.order()}")
                if worst is None or _worse(lhs, rhs, worst[0], worst[1]):
                    worst = (lhs, rhs, descriptor)
        lhs, rhs, descriptor = worst
        return _bound("LK", lhs, rhs,
                      extra=f"{pairs} pairs, K from {source}; worst: {descriptor}")

    def _lk_library(self):
        G = self.G
        sr = self.sr
        library = []
        for name, H in (("G'", sr.derived), ("Z2", sr.second_center)):
            library.append((name, H))
        for p in sorted(prime_factors(G.order())):
            library.append((f"sylow_{p}", sylow(G, p, self.cap)))
        rng = random.Random(f"{self.config.seed}:lk")
        for i in range(3):
            x = G.random_element(rng)
            y = G.random_element(rng)
            library.append((f"random_2gen_{i}", Subgroup(G, [x, y])))
        out = []
        for name, H in library:
            try:
                d = min_generators(H, self.cap, self.tuple_cap)
                note = ""
            except CapExceeded:
                d = len(_pruned_generators(H))
                note = ", upper bound"
            out.append((H, name, d, note))
        return out

    def _eval_ck(self) -> Verdict:
        sr = self.sr
        d = min_generators(sr.derived, self.cap, self.tuple_cap)
        lhs = sr.orders["group"] // sr.orders["centralizer_of_derived"]
        return _bound("CK", lhs, sr.orders["derived"] ** d, extra=f"d={d}")

    def _eval_la(self) -> Verdict:
        sr = self.sr
        r = self.r_derived_mod_zed
        if isinstance(r, UnknownRank):
            return _uncomputable("LA", f"rank of G'/zed is {r}")
        witness = also_witness(self.G, self.cap, self.coset_cap,
                               self.subgroup_cap, self.tuple_cap)
        lhs = (sr.orders["centralizer_of_derived"]
               // sr.orders["second_center"])
        return _bound("LA", lhs, sr.derived_mod_zed ** r, witness,
                      extra=f"r={r}")

    def _eval_lb(self) -> Verdict:
        sr = self.sr
        failing = 0
        checked = []
        for p in sorted(prime_factors(sr.orders["dee"])):
            P = sylow(sr.dee, p, self.cap)
            cgp = sum(1 for c in sr.derived.elements(self.cap)
                      if all(c * g == g * c for g in P.generators))
            index = sr.orders["derived"] // cgp
            if index > 1 and is_prime_power(index) != p:
                failing += 1
            checked.append(p)
        return _inclusion(
            "LB", failing,
            f"G'/C_G'(P) is a p-group for Sylow P of D, p in {checked}")

    def _eval_ls(self) -> Verdict:
        sr = self.sr
        r = self.r_derived_mod_zed
        if isinstance(r, UnknownRank):
            return _uncomputable("LS", f"rank of G'/zed is {r}")
        witness = szivas_witness(self.G, self.cap, self.coset_cap,
                                 self.subgroup_cap, self.tuple_cap)
        lhs = sr.orders["dee"] // sr.orders["centralizer_of_derived"]
        n = sr.derived_mod_zed
        r_form = "holds" if lhs <= n ** r else "exceeds"
        return _bound("LS", lhs, n ** (2 * r), witness,
                      extra=f"r={r}; printed exponent-r form {r_form}")

    def _eval_p1(self) -> Verdict:
        if not self.is_p_group():
            return _vacuous("P1", "requires a p-group")
        sr = self.sr
        r = self.r_derived_mod_zed
        if isinstance(r, UnknownRank):
            return _uncomputable("P1", f"rank of G'/zed is {r}")
        lhs = self.section_rank(sr.centralizer_of_derived, sr.second_center)
        if isinstance(lhs, UnknownRank):
            return _uncomputable("P1", f"rank of C/Z2 is {lhs}")
        return _bound("P1", lhs, r * r, extra=f"r={r}")

    def _eval_p2(self) -> Verdict:
        if not self.is_p_group():
            return _vacuous("P2", "requires a p-group")
        sr = self.sr
        r = self.r_derived_mod_zed
        if isinstance(r, UnknownRank):
            return _uncomputable("P2", f"rank of G'/zed is {r}")
        lhs = self.section_rank(sr.dee, sr.centralizer_of_derived)
        if isinstance(lhs, UnknownRank):
            return _uncomputable("P2", f"rank of D/C is {lhs}")
        return _bound("P2", lhs, 2 * r * r, extra=f"r={r}")

    def _eval_aut(self) -> Verdict:
        if not self.is_p_group():
            return _vacuous("AUT", "requires a p-group")
        sr = self.sr
        r = self.r_derived_mod_zed
        if isinstance(r, UnknownRank):
            return _uncomputable("AUT", f"rank of G'/zed is {r}")
        lhs = self.section_rank(self.G, sr.dee)
        if isinstance(lhs, UnknownRank):
            return _uncomputable("AUT", f"rank of G/D is {lhs}")
        p = self.p_group_prime
        rhs = (7 * r * r - r) // 2 if p == 2 else (5 * r * r - r) // 2
        return _bound("AUT", lhs, rhs, extra=f"r={r}, p={p}")

    def _eval_foc(self) -> Verdict:
        sr = self.sr
        violations = 0
        for p in sorted(prime_factors(self.G.order())):
            P = sylow(self.G, p, self.cap)
            z_set = sr.center.element_set(self.cap)
            derived_set = sr.derived.element_set(self.cap)
            left = {x for x in P.elements(self.cap)
                    if x in derived_set and x in z_set}
            p_derived = mutual_commutator(P, P)
            right = {x for x in p_derived.elements(self.cap) if x in z_set}
            violations += len(left ^ right)
        return _inclusion("FOC", violations,
                          "G' n P n Z(G) = P' n Z(G) per Sylow P")


def _worse(lhs1: int, rhs1: int, lhs2: int, rhs2: int) -> bool:
    """Pair 1 is a worse (tighter or violating) instance than pair 2."""
    v1, v2 = lhs1 > rhs1, lhs2 > rhs2
    if v1 != v2:
        return v1
    # compare lhs/rhs as exact fractions
    return lhs1 * rhs2 > lhs2 * rhs1


def _evaluator(G: Group, config: Config) -> _Evaluator:
    key = ("evaluator", config)
    if key not in G._cache:
        G._cache[key] = _Evaluator(G, config)
    return G._cache[key]


def evaluate(tag: str, G: Group, config: Config | None = None) -> Verdict:
    """Evaluate one statement on one group."""
    if tag not in STATEMENT_TAGS:
        raise ValueError(f"unknown statement {tag!r}")
    config = config or Config()
    return _evaluator(G, config).evaluate(tag)


def evaluate_all(G: Group, config: Config | None = None) -> list[Verdict]:
    """All statements in catalog order."""
    config = config or Config()
    ev = _evaluator(G, config)
    return [ev.evaluate(tag) for tag in STATEMENT_TAGS]
