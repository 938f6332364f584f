"""Generator counts and ranks against exhaustive-search oracles."""

import math

import pytest

from centerbound.corpus import build_group, parse_group_spec
from centerbound.errors import CapExceeded, NotAbelian, NotGenerating, NotPGroup
from centerbound.group import Group
from centerbound.perm import parse_perm
from centerbound.rank import (RankReport, UnknownRank, abelian_rank,
                              all_subgroups, frattini_p, group_rank,
                              min_generators, rank_report,
                              shrink_generating_set)

from _oracles import closure, min_generators_oracle, subgroups_oracle


def group(text):
    return build_group(parse_group_spec("family:" + text))


def make(degree, *gens):
    return Group(degree, [parse_perm(s, degree) for s in gens])


class TestMinGenerators:
    def test_examples(self):
        assert min_generators(group("elem_abelian(2,2)")) == 2
        assert min_generators(group("cyclic(7)")) == 1
        assert min_generators(group("cyclic(1)")) == 0
        assert min_generators(group("symmetric(4)")) == 2
        assert min_generators(group("dicyclic(2)")) == 2
        assert min_generators(group("heisenberg(3)")) == 2

    @pytest.mark.parametrize("text", [
        "cyclic(12)", "dihedral(6)", "symmetric(4)", "alternating(4)",
        "elem_abelian(3,2)", "dicyclic(3)", "heisenberg(2)",
        "direct_product(cyclic(2),cyclic(4))",
    ])
    def test_against_exhaustive_oracle(self, text):
        G = group(text)
        assert min_generators(G) == \
            min_generators_oracle(G.degree, closure(G.degree, G.generators))

    def test_redundant_generators_do_not_inflate(self):
        G = make(4, "(1 2)", "(1 2 3 4)", "(1 3)", "(1 2)(3 4)")
        assert G.order() == 24
        assert min_generators(G) == 2


class TestFrattini:
    def test_cyclic4(self):
        assert frattini_p(group("cyclic(4)"), 2).order() == 2

    def test_elementary_abelian_has_trivial_frattini(self):
        assert frattini_p(group("elem_abelian(5,2)"), 5).order() == 1

    def test_dih4_frattini_is_center(self):
        G = group("dihedral(4)")
        from centerbound.structure import center
        phi = frattini_p(G, 2)
        assert phi.order() == 2
        assert set(phi.elements()) == set(center(G).elements())

    def test_quotient_elementary_abelian(self):
        from centerbound.structure import quotient
        for text in ("dicyclic(4)", "heisenberg(3)", "dihedral(8)"):
            G = group(text)
            p = 3 if text == "heisenberg(3)" else 2
            pres = quotient(G, frattini_p(G, p))
            assert all((q ** p).is_identity() for q in pres.quotient.elements())
            assert pres.quotient.is_abelian()

    def test_rejects_non_p_group(self):
        with pytest.raises(NotPGroup):
            frattini_p(group("symmetric(3)"), 2)


class TestAbelianRank:
    def test_examples(self):
        assert abelian_rank(group("cyclic(6)")) == 1
        assert abelian_rank(group("cyclic(1)")) == 0
        assert abelian_rank(make(9, "(1 2)", "(3 4 5 6)", "(7 8 9)")) == 2
        assert abelian_rank(group("elem_abelian(2,3)")) == 3

    def test_rejects_non_abelian(self):
        with pytest.raises(NotAbelian):
            abelian_rank(group("symmetric(3)"))

    def test_cross_oracle_max_over_subgroups(self):
        for text in ("cyclic(12)", "elem_abelian(3,2)",
                     "direct_product(cyclic(2),cyclic(6))"):
            A = group(text)
            best = 0
            for H in all_subgroups(A):
                best = max(best, min_generators(H))
            assert abelian_rank(A) == best


class TestAllSubgroups:
    def test_counts(self):
        assert len(all_subgroups(group("cyclic(6)"))) == 4
        assert len(all_subgroups(group("cyclic(1)"))) == 1
        assert len(all_subgroups(group("symmetric(3)"))) == 6
        assert len(all_subgroups(group("dicyclic(2)"))) == 6
        assert len(all_subgroups(group("symmetric(4)"))) == 30
        assert len(all_subgroups(group("elem_abelian(2,3)"))) == 16

    @pytest.mark.parametrize("text", [
        "symmetric(3)", "alternating(4)", "dihedral(6)", "dicyclic(3)",
        "elem_abelian(3,2)", "heisenberg(2)",
    ])
    def test_matches_closure_oracle(self, text):
        G = group(text)
        mine = {frozenset(H.elements()) for H in all_subgroups(G)}
        oracle = subgroups_oracle(G.degree, closure(G.degree, G.generators))
        assert mine == oracle

    def test_each_subgroup_once(self):
        subs = all_subgroups(group("dihedral(8)"))
        fingerprints = [frozenset(H.elements()) for H in subs]
        assert len(fingerprints) == len(set(fingerprints))
        # dihedral of order 2n: tau(n) + sigma(n) subgroups, here n = 8
        assert len(subs) == 4 + 15

    def test_cap_is_loud(self):
        with pytest.raises(CapExceeded):
            all_subgroups(group("symmetric(5)"), subgroup_cap=100)


class TestGroupRank:
    def test_examples(self):
        assert group_rank(group("dicyclic(2)")) == 2   # quaternion
        assert group_rank(group("elem_abelian(2,3)")) == 3
        assert group_rank(group("symmetric(4)")) == 2
        assert group_rank(group("cyclic(32)")) == 1

    def test_unknown_past_cap(self):
        rank = group_rank(group("symmetric(6)"))
        assert isinstance(rank, UnknownRank)
        assert rank.limit == 512
        assert rank.value == 720

    def test_rank_bounds_chain(self):
        # d(G) <= rk(G) <= log2 |G|
        for text in ("symmetric(4)", "dicyclic(4)", "heisenberg(3)",
                     "elem_abelian(2,3)", "dihedral(12)"):
            G = group(text)
            rank = group_rank(G)
            assert min_generators(G) <= rank <= math.log2(G.order())

    def test_rank_report_methods(self):
        assert rank_report(group("cyclic(6)")).method == "abelian-socle"
        assert rank_report(group("dihedral(4)")).method == "frattini"
        assert rank_report(group("symmetric(4)")).method == "subgroup-enumeration"
        report = rank_report(group("symmetric(6)"))
        assert isinstance(report.rank, UnknownRank)
        assert report.dee_gens == 2

    def test_p_group_rank_vs_exhaustive_tuples(self):
        # frattini-based d agrees with exhaustive search for orders <= 256
        for text in ("dihedral(4)", "dicyclic(4)", "heisenberg(2)",
                     "dihedral(16)", "elem_abelian(2,3)"):
            G = group(text)
            assert G.order() <= 256
            assert min_generators(G) == \
                min_generators_oracle(G.degree,
                                      closure(G.degree, G.generators))


class TestShrink:
    def test_dih4_three_generators(self):
        G = group("dihedral(4)")
        r, s = G.generators
        kept = shrink_generating_set(G, [r, s, r * s])
        assert len(kept) == 2
        assert Group(G.degree, kept).order() == 8

    def test_cyclic_with_redundancy(self):
        G = group("cyclic(8)")
        g = G.generators[0]
        kept = shrink_generating_set(G, [g ** 2, g, g ** 3])
        assert len(kept) == 1

    def test_klein_with_all_involutions(self):
        G = group("elem_abelian(2,2)")
        a, b = G.generators
        kept = shrink_generating_set(G, [a, b, a * b])
        assert len(kept) == 2
        assert Group(G.degree, kept).order() == 4

    def test_size_is_always_d(self):
        for text in ("dicyclic(8)", "heisenberg(3)", "dihedral(16)"):
            G = group(text)
            gens = list(G.generators)
            gens.append(gens[0] * gens[-1])
            kept = shrink_generating_set(G, gens)
            assert len(kept) == min_generators(G)
            assert Group(G.degree, kept).order() == G.order()

    def test_rejects_bad_input(self):
        G = group("symmetric(3)")
        with pytest.raises(NotPGroup):
            shrink_generating_set(G, list(G.generators))
        D = group("dihedral(4)")
        with pytest.raises(NotGenerating):
            shrink_generating_set(D, [D.generators[0]])


class TestCorpusRankChain:
    def test_d_le_rank_le_log2_wherever_rank_known(self):
        # the d <= rk <= log2|G| chain on every corpus group whose rank
        # computes under the default caps (abelian, or order within the
        # subgroup-enumeration cap)
        from centerbound.corpus import default_corpus, build_group
        checked = 0
        for spec in default_corpus().specs:
            G = build_group(spec)
            if not G.is_abelian() and G.order() > 512:
                continue
            rank = group_rank(G)
            assert not isinstance(rank, UnknownRank), spec.label
            assert min_generators(G) <= rank <= math.log2(max(G.order(), 2)) \
                or G.order() == 1, spec.label
            checked += 1
        assert checked >= 100
