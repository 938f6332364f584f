"""Subgroup algebra against definitional filter oracles and the worked
examples (quaternion, dihedral, symmetric, Heisenberg)."""

import random

import pytest

from centerbound.corpus import build_group, parse_group_spec
from centerbound.errors import (CapExceeded, NotAbelian, NotCoprime,
                                NotNormal, NotPGroup)
from centerbound.group import Group, Subgroup
from centerbound.perm import identity, parse_perm
from centerbound.structure import (center, centralizer, dee_subgroup,
                                   derived_subgroup, fitting_decomposition,
                                   intersection, is_normal,
                                   mutual_commutator, normalizer, quotient,
                                   second_center, socle_p, structure_report,
                                   sylow, zed_subgroup)

from _oracles import (center_oracle, centralizer_oracle, closure,
                      derived_oracle, second_center_oracle,
                      normalizer_oracle)


def group(text):
    return build_group(parse_group_spec("family:" + text))


def make(degree, *gens):
    return Group(degree, [parse_perm(s, degree) for s in gens])


Q8 = lambda: group("dicyclic(2)")


class TestCentralizerAndCenter:
    def test_centralizer_of_derived_in_sym3(self):
        G = group("symmetric(3)")
        C = centralizer(G, derived_subgroup(G).generators)
        assert C.order() == 3
        oracle = centralizer_oracle(closure(3, G.generators),
                                    derived_subgroup(G).generators)
        assert set(C.elements()) == oracle

    def test_centralizer_of_identity_is_whole_group(self):
        G = group("symmetric(4)")
        assert centralizer(G, [identity(4)]).order() == 24

    def test_center_examples(self):
        assert center(group("symmetric(4)")).order() == 1
        assert center(Q8()).order() == 2
        abelian = group("cyclic(12)")
        assert center(abelian).order() == 12
        assert center(group("dihedral(4)")).order() == 2

    def test_center_matches_definitional_oracle(self):
        for text in ("symmetric(4)", "dihedral(6)", "dicyclic(3)",
                     "heisenberg(3)"):
            G = group(text)
            assert set(center(G).elements()) == \
                center_oracle(closure(G.degree, G.generators))


class TestDerivedSubgroup:
    def test_sym3(self):
        G = group("symmetric(3)")
        D = derived_subgroup(G)
        assert D.order() == 3
        assert set(D.elements()) == derived_oracle(3, closure(3, G.generators))

    def test_dih4(self):
        G = group("dihedral(4)")
        assert derived_subgroup(G).order() == 2

    def test_trivial_factor(self):
        G = group("symmetric(3)")
        B = Subgroup(G, [])
        assert mutual_commutator(derived_subgroup(G), B).order() == 1

    def test_against_oracle_on_sample(self):
        for text in ("symmetric(4)", "dicyclic(4)", "dihedral(8)",
                     "direct_product(symmetric(3),dihedral(4))"):
            G = group(text)
            assert set(derived_subgroup(G).elements()) == \
                derived_oracle(G.degree, closure(G.degree, G.generators))


class TestSecondCenter:
    def test_class_two_group_is_all(self):
        G = group("dihedral(4)")
        assert second_center(G).order() == 8

    def test_trivial_center_forces_trivial(self):
        G = group("symmetric(4)")
        assert second_center(G).order() == 1

    def test_abelian_is_all(self):
        G = group("cyclic(9)")
        assert second_center(G).order() == 9

    def test_against_oracle(self):
        for text in ("dicyclic(4)", "dihedral(8)", "symmetric(4)",
                     "heisenberg(3)"):
            G = group(text)
            assert set(second_center(G).elements()) == \
                second_center_oracle(G.degree, closure(G.degree, G.generators))


class TestDeeSubgroup:
    def test_sym3(self):
        G = group("symmetric(3)")
        D = dee_subgroup(G)
        assert D.order() == 3
        assert set(D.elements()) == set(derived_subgroup(G).elements())

    def test_class_two_gives_whole_group(self):
        G = group("heisenberg(3)")
        assert dee_subgroup(G).order() == 27

    def test_sym4_by_oracle(self):
        # {g | [g, A4] <= Z(S4) = 1} is the centralizer of A4, which is trivial
        G = group("symmetric(4)")
        elems = closure(4, G.generators)
        derived = derived_oracle(4, elems)
        z = center_oracle(elems)
        inv = {g: g.inverse() for g in elems}
        oracle = {g for g in elems
                  if all(inv[g] * inv[c] * g * c in z for c in derived)}
        assert set(dee_subgroup(G).elements()) == oracle
        assert dee_subgroup(G).order() == 1


class TestSylow:
    def test_sym4(self):
        G = group("symmetric(4)")
        P2, P3 = sylow(G, 2), sylow(G, 3)
        assert P2.order() == 8
        assert P3.order() == 3
        assert all(x.order() in (1, 2, 4, 8) for x in P2.elements())
        assert sylow(G, 5).order() == 1

    def test_orders_are_exact_p_parts(self):
        for text, parts in (("symmetric(5)", {2: 8, 3: 3, 5: 5}),
                            ("dicyclic(6)", {2: 8, 3: 3}),
                            ("cyclic(30)", {2: 2, 3: 3, 5: 5})):
            G = group(text)
            for p, expected in parts.items():
                P = sylow(G, p)
                assert P.order() == expected
                assert all(x.order() == 1 or x.order() % p == 0
                           or p % x.order() == 0 for x in P.elements())


class TestNormalizer:
    def test_whole_group(self):
        G = group("symmetric(3)")
        assert normalizer(G, G).order() == 6

    def test_transposition_self_normalizing_in_sym3(self):
        G = group("symmetric(3)")
        H = Subgroup(G, [parse_perm("(1 2)", 3)])
        N = normalizer(G, H)
        assert set(N.elements()) == set(H.elements())

    def test_sylow3_normalizer_in_sym4(self):
        G = group("symmetric(4)")
        N = normalizer(G, sylow(G, 3))
        assert N.order() == 6
        assert set(N.elements()) == normalizer_oracle(
            closure(4, G.generators), sylow(G, 3).elements())


class TestQuotient:
    def test_q8_mod_center_is_klein(self):
        G = Q8()
        pres = quotient(G, center(G))
        assert pres.quotient.order() == 4
        assert all((q * q).is_identity() for q in pres.quotient.elements())

    def test_trivial_kernel_keeps_order(self):
        G = group("symmetric(4)")
        pres = quotient(G, Subgroup(G, []))
        assert pres.quotient.order() == 24
        assert pres.projection(G.generators[0]) == G.generators[0]

    def test_sym4_mod_klein_is_nonabelian_order6(self):
        G = group("symmetric(4)")
        V = Subgroup(G, [parse_perm("(1 2)(3 4)", 4),
                         parse_perm("(1 3)(2 4)", 4)])
        pres = quotient(G, V)
        Q = pres.quotient
        assert Q.order() == 6
        assert not Q.is_abelian()

    def test_projection_is_homomorphism(self):
        G = group("dicyclic(4)")
        pres = quotient(G, center(G))
        rng = random.Random(5)
        elems = G.elements()
        for _ in range(100):
            a, b = rng.choice(elems), rng.choice(elems)
            assert pres.projection(a * b) == \
                pres.projection(a) * pres.projection(b)

    def test_projection_section_consistent(self):
        G = group("dihedral(6)")
        pres = quotient(G, derived_subgroup(G))
        for q in pres.quotient.elements():
            assert pres.projection(pres.section(q)) == q

    def test_order_product(self):
        G = group("symmetric(4)")
        for N in (center(G), derived_subgroup(G), Subgroup(G, [])):
            pres = quotient(G, N)
            assert pres.quotient.order() * N.order() == G.order()

    def test_rejects_non_normal(self):
        G = group("symmetric(3)")
        H = Subgroup(G, [parse_perm("(1 2)", 3)])
        with pytest.raises(NotNormal):
            quotient(G, H)

    def test_coset_cap(self):
        G = group("symmetric(5)")
        with pytest.raises(CapExceeded):
            quotient(G, Subgroup(G, []), coset_cap=10)


class TestSocle:
    def test_c4_times_c2(self):
        A = make(6, "(1 2 3 4)", "(5 6)")
        assert socle_p(A, 2).order() == 4

    def test_elementary_abelian_is_own_socle(self):
        A = group("elem_abelian(3,2)")
        assert socle_p(A, 3).order() == 9

    def test_c9(self):
        assert socle_p(group("cyclic(9)"), 3).order() == 3

    def test_rejects_bad_input(self):
        with pytest.raises(NotAbelian):
            socle_p(group("dihedral(4)"), 2)
        with pytest.raises(NotPGroup):
            socle_p(group("cyclic(6)"), 2)


class TestFitting:
    def test_sym3_action(self):
        G = group("symmetric(3)")
        P = derived_subgroup(G)
        Q = Subgroup(G, [parse_perm("(1 2)", 3)])
        com, fix = fitting_decomposition(P, Q)
        assert com.order() == 3 and fix.order() == 1

    def test_trivial_action(self):
        G = group("direct_product(cyclic(3),cyclic(2))")
        P = Subgroup(G, [parse_perm("(1 2 3)", 5)])
        Q = Subgroup(G, [parse_perm("(4 5)", 5)])
        com, fix = fitting_decomposition(P, Q)
        assert com.order() == 1 and fix.order() == 3

    def test_partial_inversion_in_product_of_sym3(self):
        # C3 x C3 with an involution inverting only the first factor
        G = make(6, "(1 2 3)", "(4 5 6)", "(1 2)")
        P = Subgroup(G, [parse_perm("(1 2 3)", 6), parse_perm("(4 5 6)", 6)])
        Q = Subgroup(G, [parse_perm("(1 2)", 6)])
        com, fix = fitting_decomposition(P, Q)
        assert com.order() == 3 and fix.order() == 3
        assert intersection(com, fix).order() == 1

    def test_rejects_non_coprime(self):
        G = group("dihedral(4)")
        P = derived_subgroup(G)
        with pytest.raises(NotCoprime):
            fitting_decomposition(P, G)

    def test_rejects_non_abelian_unless_relaxed(self):
        G = group("direct_product(symmetric(3),cyclic(5))")
        P = Subgroup(G, [parse_perm("(1 2 3)", 8), parse_perm("(1 2)", 8)])
        Q = Subgroup(G, [parse_perm("(4 5 6 7 8)", 8)])
        with pytest.raises(NotAbelian):
            fitting_decomposition(P, Q)
        com, fix = fitting_decomposition(P, Q, strict=False)
        assert com.order() == 1 and fix.order() == 6


class TestStructureReport:
    def test_sym3_times_dih4(self):
        G = group("direct_product(symmetric(3),dihedral(4))")
        sr = structure_report(G)
        assert sr.orders == {
            "group": 48, "derived": 6, "center": 2, "second_center": 8,
            "centralizer_of_derived": 24, "dee": 24, "zed": 2}
        assert sr.p_parts == {3: 3}
        assert sr.derived_mod_zed == 3

    def test_zed_is_intersection(self):
        for text in ("dicyclic(4)", "dihedral(8)",
                     "direct_product(symmetric(3),dihedral(4))"):
            G = group(text)
            sr = structure_report(G)
            assert set(sr.zed.elements()) == \
                set(intersection(sr.derived, sr.center).elements())

    def test_containment_chain_and_normality(self):
        for text in ("symmetric(4)", "dicyclic(8)", "heisenberg(3)",
                     "direct_product(alternating(4),dihedral(4))"):
            G = group(text)
            sr = structure_report(G)
            zset = set(sr.center.elements())
            z2set = set(sr.second_center.elements())
            cset = set(sr.centralizer_of_derived.elements())
            dset = set(sr.dee.elements())
            assert zset <= z2set <= cset <= dset
            for H in (sr.derived, sr.center, sr.second_center,
                      sr.centralizer_of_derived, sr.dee):
                assert is_normal(G, H)


class TestLemmaNineInstances:
    SAMPLE = ("symmetric(3)", "symmetric(4)", "dihedral(8)", "dicyclic(4)",
              "heisenberg(3)", "direct_product(symmetric(3),dihedral(4))")

    @pytest.mark.parametrize("text", SAMPLE)
    def test_second_center_below_centralizer_of_derived(self, text):
        G = group(text)
        sr = structure_report(G)
        cset = set(sr.centralizer_of_derived.elements())
        assert set(sr.second_center.elements()) <= cset

    @pytest.mark.parametrize("text", SAMPLE)
    def test_derived_of_centralizer_is_central(self, text):
        G = group(text)
        sr = structure_report(G)
        C = sr.centralizer_of_derived
        cc = mutual_commutator(C, C)
        assert set(cc.elements()) <= set(sr.center.elements())

    @pytest.mark.parametrize("text", SAMPLE)
    def test_sylows_of_centralizer_normal_in_g(self, text):
        from centerbound.arith import prime_factors
        G = group(text)
        C = structure_report(G).centralizer_of_derived
        for p in prime_factors(C.order()):
            assert is_normal(G, sylow(C, p))


class TestFocInstances:
    @pytest.mark.parametrize("text", TestLemmaNineInstances.SAMPLE)
    def test_derived_meet_sylow_meet_center(self, text):
        from centerbound.arith import prime_factors
        G = group(text)
        sr = structure_report(G)
        zset = set(sr.center.elements())
        gpset = set(sr.derived.elements())
        for p in prime_factors(G.order()):
            P = sylow(G, p)
            left = {x for x in P.elements() if x in gpset and x in zset}
            right = {x for x in mutual_commutator(P, P).elements()
                     if x in zset}
            assert left == right


class TestQuotientKernel:
    def test_projection_kernel_equals_normal_subgroup(self):
        for text in ("dicyclic(4)", "symmetric(4)", "dihedral(6)"):
            G = group(text)
            N = derived_subgroup(G)
            pres = quotient(G, N)
            kernel = {g for g in G.elements()
                      if pres.projection(g).is_identity()}
            assert kernel == set(N.elements())
