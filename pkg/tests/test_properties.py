"""Freeness, projectivity, flatness, and the cross-checks between them."""

import itertools

import numpy as np
import pytest

from modclass import (
    ModuleHom,
    cyclic_submodule,
    direct_sum,
    free_module,
    identity_hom,
    is_flat_module,
    is_free_module,
    is_projective_module,
    jacobson_radical,
    primitive_decomposition,
    quotient_module,
    regular_module,
    split_surjection_search,
    submodule_as_module,
    zero_module,
)


def flat_by_definition(module, n_max=2, l_max=2):
    """Literal oracle: every relation must factor through an annihilating matrix.

    For each tuple m in M^n and coefficient tuple r with sum(r_i m_i) = 0,
    search exhaustively for H (n x l over the ring) and m' in M^l with
    m_i = sum_j H[i][j] m'_j and sum_i r_i H[i][j] = 0.  Tiny inputs only.
    """
    ring = module.ring

    def factors(r_tuple, m_tuple):
        n = len(r_tuple)
        for l in range(1, l_max + 1):
            for flat_h in itertools.product(range(ring.size), repeat=n * l):
                h = [flat_h[i * l : (i + 1) * l] for i in range(n)]
                if any(
                    _ring_sum(ring, (ring.mul(r_tuple[i], h[i][j]) for i in range(n))) != 0
                    for j in range(l)
                ):
                    continue
                for m_prime in itertools.product(range(module.size), repeat=l):
                    if all(
                        _module_sum(module, (module.act(h[i][j], m_prime[j]) for j in range(l)))
                        == m_tuple[i]
                        for i in range(n)
                    ):
                        return True
        return False

    for n in range(1, n_max + 1):
        for m_tuple in itertools.product(range(module.size), repeat=n):
            for r_tuple in itertools.product(range(ring.size), repeat=n):
                total = _module_sum(
                    module, (module.act(r, m) for r, m in zip(r_tuple, m_tuple))
                )
                if total != 0:
                    continue
                if not factors(r_tuple, m_tuple):
                    return False, (r_tuple, m_tuple)
    return True, None


def _ring_sum(ring, values):
    out = 0
    for v in values:
        out = ring.add(out, v)
    return out


def _module_sum(module, values):
    out = 0
    for v in values:
        out = module.add(out, v)
    return out


class TestFreeness:
    def test_column_module_not_free(self, m2f2):
        p = primitive_decomposition(m2f2).representatives[0]
        verdict = is_free_module(p)
        assert not verdict.value
        assert "not a multiple of 2" in verdict.note

    def test_p_plus_p_is_free(self, m2f2):
        p = primitive_decomposition(m2f2).representatives[0]
        verdict = is_free_module(direct_sum(p, p))
        assert verdict.value and verdict.witness == 1

    def test_zero_module_free_of_rank_zero(self, m2f2):
        verdict = is_free_module(zero_module(m2f2))
        assert verdict.value and verdict.witness == 0

    def test_free_modules_detected_with_rank(self, z6):
        for rank in (1, 2):
            verdict = is_free_module(free_module(z6, rank))
            assert verdict.value and verdict.witness == rank


class TestProjectivity:
    def test_z2_over_z4_not_projective(self, z4):
        reg = regular_module(z4)
        half = quotient_module(reg, [0, 2])
        verdict = is_projective_module(half)
        assert not verdict.value

    def test_semisimple_ring_everything_projective(self, z6):
        reg = regular_module(z6)
        for sub in ([0, 3], [0, 2, 4]):
            assert is_projective_module(quotient_module(reg, sub)).value
            assert is_projective_module(submodule_as_module(reg, np.array(sub))).value

    def test_free_modules_projective(self, corpus):
        for spec in ("Z/4", "Z/8", "T(2,GF(2))"):
            assert is_projective_module(free_module(corpus[spec], 2)).value

    def test_section_witness_is_genuine(self, m2f2):
        p = primitive_decomposition(m2f2).representatives[0]
        verdict = is_projective_module(p)
        assert verdict.value
        section = verdict.witness
        assert isinstance(section, ModuleHom)
        assert np.array_equal(p.cls[section.table], np.arange(p.size))


class TestSplitSurjection:
    def test_no_section_for_z4_to_z2(self, z4):
        reg = regular_module(z4)
        half = quotient_module(reg, [0, 2])
        pi = ModuleHom(reg, half, half.cls.copy())
        assert split_surjection_search(pi) is None

    def test_identity_splits_with_identity(self, z6):
        reg = regular_module(z6)
        section = split_surjection_search(identity_hom(reg))
        assert section is not None
        assert np.array_equal(section.table, np.arange(reg.size))

    def test_regular_onto_column_module_splits(self, m2f2):
        p = primitive_decomposition(m2f2).representatives[0]
        reg = regular_module(m2f2)
        pi = ModuleHom(reg, p, p.cls.copy())
        section = split_surjection_search(pi)
        assert section is not None
        assert np.array_equal(pi.table[section.table], np.arange(p.size))

    def test_non_surjective_rejected(self, z4):
        reg = regular_module(z4)
        doubling = ModuleHom(reg, reg, reg.act_table[2].astype(np.int64))
        with pytest.raises(ValueError):
            split_surjection_search(doubling)


class TestFlatness:
    def test_z2_over_z4_fails_with_witnessed_relation(self, z4):
        reg = regular_module(z4)
        half = quotient_module(reg, [0, 2])
        report = is_flat_module(half)
        assert not report.value and report.exact
        assert report.witness["support_coefficients"] == (2,)
        assert report.projective is False
        assert report.agrees_with_projective

    def test_free_modules_flat(self, corpus):
        for spec in ("Z/6", "M(2,GF(2))", "Z/8"):
            report = is_flat_module(free_module(corpus[spec], 1))
            assert report.value and report.exact

    def test_column_module_flat_at_bound_two(self, m2f2):
        p = primitive_decomposition(m2f2).representatives[0]
        report = is_flat_module(p, relation_length_bound=2)
        assert report.value and report.exact
        assert report.projective and report.agrees_with_projective

    def test_brute_force_oracle_agreement(self, z4, t2f2):
        # Literal existential search over (H, m') against the engine verdict.
        reg4 = regular_module(z4)
        modules = [
            quotient_module(reg4, [0, 2], label="Z/2 over Z/4"),
            reg4,
            zero_module(z4),
        ]
        regt = regular_module(t2f2)
        modules.append(
            submodule_as_module(regt, cyclic_submodule(regt, _least_proper(regt)))
        )
        for module in modules:
            engine = is_flat_module(module, relation_length_bound=2, cross_check=False)
            oracle, witness = flat_by_definition(module, n_max=2, l_max=2)
            assert engine.value == oracle, (module.label, witness)

    def test_bound_one_still_catches_the_z4_witness(self, z4):
        reg = regular_module(z4)
        half = quotient_module(reg, [0, 2])
        report = is_flat_module(half, relation_length_bound=1)
        assert not report.value


class TestPropertyChain:
    def test_free_implies_projective_implies_flat(self, corpus):
        for spec in ("Z/4", "Z/6", "Z/8", "T(2,GF(2))", "M(2,GF(2))"):
            ring = corpus[spec]
            reg = regular_module(ring)
            modules = [reg, free_module(ring, 2), zero_module(ring)]
            x = _least_proper(reg)
            if x is not None:
                modules.append(quotient_module(reg, cyclic_submodule(reg, x)))
                modules.append(submodule_as_module(reg, cyclic_submodule(reg, x)))
            for module in modules:
                free = bool(is_free_module(module))
                projective = bool(is_projective_module(module))
                flat = bool(is_flat_module(module, cross_check=False))
                assert (not free) or projective, (spec, module.label)
                assert (not projective) or flat, (spec, module.label)
                assert flat == projective, (spec, module.label)

    def test_radical_quotient_projective_iff_semisimple_block(self, z4, z6):
        # Z/4: R/J = Z/2 is not projective; Z/6: J = 0 so R/J = R is.
        reg4 = regular_module(z4)
        assert not is_projective_module(
            quotient_module(reg4, list(jacobson_radical(z4).elements))
        ).value
        reg6 = regular_module(z6)
        assert is_projective_module(reg6).value

    def test_semisimple_rings_make_every_family_module_projective(self, corpus):
        from modclass import all_submodules

        for spec in ("Z/6", "GF(4)", "M(2,GF(2))"):
            ring = corpus[spec]
            assert len(jacobson_radical(ring)) == 1
            reg = regular_module(ring)
            for sub in all_submodules(reg):
                assert is_projective_module(quotient_module(reg, sub)).value, spec


def _least_proper(reg):
    for x in range(1, reg.size):
        sub = cyclic_submodule(reg, x)
        if 1 < len(sub) < reg.size:
            return x
    return None
