"""Module presentations, carriers, homomorphism enumeration."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from modclass import (
    ClosureError,
    SizeCapError,
    all_submodules,
    build_ring,
    cyclic_submodule,
    direct_sum,
    free_module,
    hom_enumerate,
    identity_hom,
    is_isomorphic,
    quotient_module,
    regular_module,
    submodule_as_module,
    verify_module_axioms,
    zero_module,
    EngineConfig,
)


class TestConstruction:
    def test_free_modules(self, z4, z6):
        assert free_module(z4, 1).size == 4
        assert free_module(z6, 2).size == 36
        assert free_module(z4, 0).size == 1

    def test_free_module_cap(self, z6):
        with pytest.raises(SizeCapError):
            free_module(z6, 2, cfg=EngineConfig(max_module=30))

    def test_axioms_hold(self, corpus):
        for ring in corpus.values():
            if ring.size > 16:
                continue
            assert verify_module_axioms(regular_module(ring))
            assert verify_module_axioms(free_module(ring, 2))

    def test_quotient_action_reduces(self, z4):
        reg = regular_module(z4)
        half = quotient_module(reg, [0, 2])
        assert half.size == 2
        assert verify_module_axioms(half)
        assert half.act(2, 1) == 0  # 2 acts as zero after reduction
        assert half.act(3, 1) == 1

    def test_quotient_identities(self, z6):
        reg = regular_module(z6)
        assert quotient_module(reg, [0]) is reg
        assert quotient_module(reg, list(range(6))).size == 1

    def test_quotient_needs_a_submodule(self, z6):
        reg = regular_module(z6)
        with pytest.raises(ClosureError):
            quotient_module(reg, [0, 1])  # 1 generates everything

    def test_sizes_multiply_through_quotients(self, corpus):
        for ring in corpus.values():
            if ring.size > 16:
                continue
            reg = regular_module(ring)
            for sub in all_submodules(reg):
                assert quotient_module(reg, sub).size * len(sub) == reg.size


class TestDirectSum:
    def test_sizes_and_axioms(self, z6):
        reg = regular_module(z6)
        total = direct_sum(reg, reg)
        assert total.size == 36
        assert verify_module_axioms(total)

    def test_ring_mismatch(self, z4, z6):
        with pytest.raises(ValueError):
            direct_sum(regular_module(z4), regular_module(z6))

    def test_sum_with_zero_is_identity_up_to_isomorphism(self, z6):
        reg = regular_module(z6)
        assert is_isomorphic(direct_sum(reg, zero_module(z6)), reg).value

    def test_commutative_and_associative_up_to_isomorphism(self, z6):
        reg = regular_module(z6)
        p1 = submodule_as_module(reg, cyclic_submodule(reg, 3), label="P1")
        p2 = submodule_as_module(reg, cyclic_submodule(reg, 2), label="P2")
        assert is_isomorphic(direct_sum(p1, p2), direct_sum(p2, p1)).value
        left = direct_sum(direct_sum(p1, p2), p1)
        right = direct_sum(p1, direct_sum(p2, p1))
        assert is_isomorphic(left, right).value

    def test_summand_modules_rebuild_the_regular_module(self, z6):
        reg = regular_module(z6)
        p1 = submodule_as_module(reg, cyclic_submodule(reg, 3), label="P1")
        p2 = submodule_as_module(reg, cyclic_submodule(reg, 2), label="P2")
        verdict = is_isomorphic(direct_sum(p1, p2), reg)
        assert verdict.value and verdict.witness is not None


class TestHomEnumeration:
    def test_z2_to_z4_has_two_maps(self, z4):
        reg = regular_module(z4)
        half = quotient_module(reg, [0, 2])
        homs = hom_enumerate(half, reg)
        assert len(homs) == 2
        assert sorted(h(half.gens[0]) for h in homs) == [0, 2]

    def test_regular_endomorphisms(self, z4):
        reg = regular_module(z4)
        assert len(hom_enumerate(reg, reg)) == 4

    def test_hom_to_zero_module(self, z4):
        reg = regular_module(z4)
        assert len(hom_enumerate(reg, zero_module(z4))) == 1

    def test_free_source_counts(self, corpus):
        # |Hom(R^n, M)| = |M|^n over every corpus ring, n <= 2, within caps
        for spec, ring in corpus.items():
            reg = regular_module(ring)
            x = _proper_element(reg)
            small = (
                quotient_module(reg, cyclic_submodule(reg, x))
                if x is not None
                else zero_module(ring)
            )
            for n in (1, 2):
                try:
                    source = free_module(ring, n)
                except SizeCapError:
                    continue
                for target in (reg, small):
                    try:
                        homs = hom_enumerate(source, target)
                    except SizeCapError:
                        continue
                    assert len(homs) == target.size**n, (spec, n, target.label)

    def test_all_enumerated_homs_are_valid(self, z4, z6):
        for ring in (z4, z6):
            reg = regular_module(ring)
            half = quotient_module(reg, cyclic_submodule(reg, _proper_element(reg)))
            for hom in hom_enumerate(half, reg) + hom_enumerate(reg, half):
                assert hom.is_valid()

    def test_cap_respected(self, z6):
        reg = regular_module(z6)
        big = direct_sum(reg, reg)
        with pytest.raises(SizeCapError):
            hom_enumerate(big, big, cfg=EngineConfig(max_homs=100))

    def test_composition(self, z4):
        reg = regular_module(z4)
        double = hom_enumerate(reg, reg)[2]  # generator image 2
        assert double.compose(identity_hom(reg)).table.tolist() == double.table.tolist()


def _proper_element(reg):
    """Least element generating a proper nonzero submodule, None for simple carriers."""
    for x in range(1, reg.size):
        sub = cyclic_submodule(reg, x)
        if 1 < len(sub) < reg.size:
            return x
    return None


class TestSubmodules:
    def test_z6_lattice(self, z6):
        subs = all_submodules(regular_module(z6))
        assert [tuple(int(v) for v in s) for s in subs] == [
            (0,),
            (0, 3),
            (0, 2, 4),
            (0, 1, 2, 3, 4, 5),
        ]

    def test_m2f2_square_matches_subspace_count(self, m2f2):
        # Column-module equivalence: submodules of R^2 correspond to
        # subspaces of a 4-dimensional binary space: 67 of them.
        reg = regular_module(m2f2)
        assert len(all_submodules(direct_sum(reg, reg))) == 67

    @given(st.sampled_from(["Z/4", "Z/6", "Z/8", "T(2,GF(2))"]), st.integers(0, 1000))
    @settings(max_examples=25, deadline=None)
    def test_cyclic_submodules_are_submodules(self, spec, seed):
        ring = build_ring(spec)
        reg = regular_module(ring)
        x = seed % reg.size
        sub = cyclic_submodule(reg, x)
        mask = np.zeros(reg.size, dtype=bool)
        mask[sub] = True
        assert mask[reg.add(sub[:, None], sub[None, :])].all()
        assert mask[reg.act_table[:, sub]].all()
