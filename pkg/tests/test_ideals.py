"""Ideals, the Jacobson radical, quotient rings, and ring predicates."""

import math

import pytest

from modclass import (
    SideError,
    chain_conditions,
    galois_field,
    ideal_generated,
    idempotents,
    is_local,
    is_simple_ring,
    jacobson_radical,
    matrix_units,
    maximal_ideals,
    one_sided_ideals,
    quotient_ring,
    radical_nilpotency_degree,
    units,
)


def e12_of_t2f2():
    return matrix_units(2, galois_field(2), upper_only=True)[(0, 1)]


class TestIdealGenerated:
    def test_z6_two(self, z6):
        assert ideal_generated(z6, "two-sided", [2]).elements == (0, 2, 4)

    def test_matrix_ring_is_simple_from_e11(self, m2f2):
        e11 = matrix_units(2, galois_field(2))[(0, 0)]
        assert len(ideal_generated(m2f2, "two-sided", [e11])) == 16

    def test_triangular_nilpotent_corner(self, t2f2):
        e12 = e12_of_t2f2()
        ideal = ideal_generated(t2f2, "two-sided", [e12])
        assert ideal.elements == (0, e12)

    def test_empty_generators_give_zero_ideal(self, z6):
        assert ideal_generated(z6, "left", []).elements == (0,)

    def test_one_sided_differ_in_triangular(self, t2f2):
        e11 = matrix_units(2, galois_field(2), upper_only=True)[(0, 0)]
        left = ideal_generated(t2f2, "left", [e11])
        right = ideal_generated(t2f2, "right", [e11])
        assert left.elements != right.elements


class TestRadical:
    def test_examples(self, z4, z6, t2f2):
        assert jacobson_radical(z4).elements == (0, 2)
        assert jacobson_radical(z6).elements == (0,)
        assert jacobson_radical(t2f2).elements == (0, e12_of_t2f2())

    def test_matches_maximal_left_ideal_intersection(self, corpus):
        # Independent oracle: J = intersection of all maximal left ideals.
        for spec, ring in corpus.items():
            if ring.size > 64:
                continue
            radical = set(jacobson_radical(ring).elements)
            intersection = set(range(ring.size))
            for maximal in maximal_ideals(ring, "left"):
                intersection &= set(maximal)
            assert radical == intersection, spec

    def test_nilpotency_bound(self, corpus):
        for spec, ring in corpus.items():
            radical = jacobson_radical(ring)
            degree = radical_nilpotency_degree(ring, radical)
            assert degree <= math.log2(ring.size) + 1, spec

    def test_quotient_by_radical_is_semisimple(self, corpus):
        for spec, ring in corpus.items():
            radical = jacobson_radical(ring)
            quotient = quotient_ring(ring, radical)
            assert jacobson_radical(quotient).elements == (0,), spec


class TestQuotientRing:
    def test_z4_mod_radical_is_f2(self, z4):
        quotient = quotient_ring(z4, jacobson_radical(z4))
        assert quotient.size == 2
        assert units(quotient) == frozenset({quotient.one})
        assert is_simple_ring(quotient).value

    def test_t2f2_mod_radical_has_two_nontrivial_idempotents(self, t2f2):
        quotient = quotient_ring(t2f2, jacobson_radical(t2f2))
        assert quotient.size == 4
        assert len(idempotents(quotient)) == 4

    def test_zero_ideal_returns_same_ring(self, z6):
        zero = ideal_generated(z6, "two-sided", [])
        assert quotient_ring(z6, zero) is z6

    def test_quotient_by_whole_ring(self, z4):
        whole = ideal_generated(z4, "two-sided", [1])
        assert quotient_ring(z4, whole).size == 1

    def test_one_sided_ideal_rejected(self, t2f2):
        e11 = matrix_units(2, galois_field(2), upper_only=True)[(0, 0)]
        left = ideal_generated(t2f2, "left", [e11])
        with pytest.raises(SideError):
            quotient_ring(t2f2, left)

    def test_sizes_multiply(self, corpus):
        for ring in corpus.values():
            if ring.size > 64:
                continue
            for elements in one_sided_ideals(ring, "right"):
                ideal = ideal_generated(ring, "two-sided", list(elements))
                if len(ideal) != len(elements):
                    continue  # right ideal that is not two-sided
                quotient = quotient_ring(ring, ideal)
                assert quotient.size * len(ideal) == ring.size

    def test_every_quotient_passes_the_axioms(self):
        # mixed additive orders and noncommutativity stress the re-presentation
        from modclass import build_ring, verify_ring_axioms

        for spec in ("Z/4 x Z/6", "T(2,GF(2))", "PolyQuot(Z/4,[2,0,1])"):
            ring = build_ring(spec)
            for elements in one_sided_ideals(ring, "right"):
                ideal = ideal_generated(ring, "two-sided", list(elements))
                if len(ideal) != len(elements):
                    continue
                quotient = quotient_ring(ring, ideal)
                assert quotient.size * len(ideal) == ring.size, spec
                assert verify_ring_axioms(quotient).ok, spec


class TestPredicates:
    def test_is_local(self, z4, z6, gf4):
        assert is_local(z4).value
        assert len(is_local(z4).witness) == 2
        verdict = is_local(z6)
        assert not verdict.value
        a, b = verdict.witness
        assert (a + b) % 6 in units(z6)
        assert is_local(gf4).value

    def test_is_simple(self, m2f2, z6):
        assert is_simple_ring(m2f2).value
        verdict = is_simple_ring(z6)
        assert not verdict.value
        assert verdict.witness.elements in ((0, 3), (0, 2, 4))

    def test_chain_conditions_z6(self, z6):
        report = chain_conditions(z6)
        assert report.all_hold
        assert report.right_ideal_count == 4
        assert sorted(report.right_ideal_lattice, key=len) == [
            (0,),
            (0, 3),
            (0, 2, 4),
            (0, 1, 2, 3, 4, 5),
        ]

    def test_chain_conditions_z8_chain_length(self, z8):
        report = chain_conditions(z8)
        assert report.longest_chain == 4  # {0} < (4) < (2) < R

    def test_chain_conditions_above_cap_keep_rationale(self, corpus):
        ring = corpus["M(2,GF(3))"]
        report = chain_conditions(ring)
        assert report.all_hold
        assert report.right_ideal_count is None
        assert "finite" in report.rationale

    def test_local_iff_quotient_is_division_ring(self, corpus):
        # is_local(R) <=> R/J has exactly the trivial idempotents and all
        # nonzero elements invertible.
        for spec, ring in corpus.items():
            radical = jacobson_radical(ring)
            quotient = quotient_ring(ring, radical)
            division_like = (
                set(idempotents(quotient)) == {0, quotient.one}
                and len(units(quotient)) == quotient.size - 1
            )
            assert bool(is_local(ring)) == division_like, spec
