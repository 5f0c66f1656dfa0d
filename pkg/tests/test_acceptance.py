"""Acceptance suite: one check per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every tolerance and time budget is pinned here; nothing is deferred.
"""

import json
import time

import modclass
from modclass import (
    BUILTIN_CORPUS_SPECS,
    build_ring,
    builtin_corpus,
    classify_matrix_family,
    classify_ring,
    decomposition_determinism_suite,
    direct_sum,
    flat_projective_suite,
    is_flat_module,
    is_free_module,
    is_isomorphic,
    multiplicativity_suite,
    primitive_decomposition,
    quotient_module,
    random_recipe_rings,
    regular_module,
    verify_implication_chain,
)
from modclass.classify import verdict_holds
from modclass.cli import EXIT_OK, main
from modclass.pp import library_pairs


def report_line(tag: str, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {tag}: {status} ({detail})")
    assert ok, f"{tag}: {detail}"


class TestCriterion1:
    def test_matrix_ring_over_f2(self):
        start = time.perf_counter()
        ring = build_ring("M(2,GF(2))")
        report = classify_ring(ring)
        decomposition = primitive_decomposition(ring)
        p = decomposition.representatives[0]
        p_free = is_free_module(p)
        doubled = is_isomorphic(direct_sum(p, p), regular_module(ring))
        elapsed = time.perf_counter() - start

        ok = (
            report.k == 1
            and report.indecomposables == [[4, 2]]
            and not p_free.value
            and doubled.value
            and report.categorical
            and report.frees_elementary
            and not report.projective_equals_free
            and elapsed < 5.0
        )
        report_line(
            "C1 matrix-ring-over-F2",
            ok,
            f"k={report.k} P=[size {p.size}, mult 2] P-free={p_free.value} "
            f"P+P≅R={doubled.value} categorical={report.categorical} "
            f"frees={report.frees_elementary} proj=free={report.projective_equals_free} "
            f"in {elapsed:.2f}s < 5s",
        )


class TestCriterion2:
    def test_z6(self):
        start = time.perf_counter()
        report = classify_ring(build_ring("Z/6"))
        elapsed = time.perf_counter() - start
        ok = (
            report.k == 2
            and sorted(s for s, _ in report.indecomposables) == [2, 3]
            and not report.categorical
            and not report.frees_elementary
            and report.flats_elementary
            and report.projectives_elementary
            and elapsed < 2.0
        )
        report_line(
            "C2 Z/6",
            ok,
            f"k={report.k} sizes={sorted(s for s, _ in report.indecomposables)} "
            f"categorical={report.categorical} frees={report.frees_elementary} "
            f"flats={report.flats_elementary} projs={report.projectives_elementary} "
            f"in {elapsed:.2f}s < 2s",
        )

    def test_z4(self):
        start = time.perf_counter()
        report = classify_ring(build_ring("Z/4"))
        elapsed = time.perf_counter() - start
        ok = (
            report.is_local
            and report.k == 1
            and report.indecomposables == [[4, 1]]
            and report.property_II == "true"
            and report.property_III == "true"
            and report.property_IV == "true"
            and elapsed < 2.0
        )
        report_line(
            "C2 Z/4",
            ok,
            f"local={report.is_local} k={report.k} r={report.indecomposables[0][1]} "
            f"II={report.property_II} III={report.property_III} IV={report.property_IV} "
            f"in {elapsed:.2f}s < 2s",
        )


class TestCriterion3:
    def test_implication_chain_corpus_plus_random(self):
        start = time.perf_counter()
        rings = builtin_corpus() + random_recipe_rings(100, seed=2024, max_size=16)
        reports = [classify_ring(ring) for ring in rings]
        meta = verify_implication_chain(reports)
        elapsed = time.perf_counter() - start
        ok = meta.ok and len(reports) == 112 and elapsed < 60.0
        report_line(
            "C3 implication-chain",
            ok,
            f"{len(reports)} rings (12 corpus + 100 random), "
            f"{len(meta.findings)} violations, in {elapsed:.1f}s < 60s",
        )


class TestCriterion4:
    def test_flat_iff_projective_over_generated_family(self):
        start = time.perf_counter()
        suite = flat_projective_suite(builtin_corpus())
        z4 = build_ring("Z/4")
        half = quotient_module(regular_module(z4), [0, 2])
        witness_report = is_flat_module(half)
        elapsed = time.perf_counter() - start
        witness_ok = (
            not witness_report.value
            and witness_report.witness["support_coefficients"] == (2,)
        )
        ok = (
            suite.ok
            and suite.nonflat_instances >= 1
            and witness_ok
            and elapsed < 120.0
        )
        report_line(
            "C4 flat-iff-projective",
            ok,
            f"{suite.checked} family modules, {len(suite.findings)} disagreements, "
            f"{suite.nonflat_instances} non-flat, Z/2-over-Z/4 witness r="
            f"{witness_report.witness['support_coefficients']}, in {elapsed:.1f}s < 120s",
        )


class TestCriterion5:
    def test_invariant_multiplicativity(self):
        start = time.perf_counter()
        pair_count = len(library_pairs(build_ring("Z/4")))
        suite = multiplicativity_suite(builtin_corpus())
        elapsed = time.perf_counter() - start
        ok = suite.ok and pair_count >= 10 and suite.checked > 0 and elapsed < 60.0
        report_line(
            "C5 invariant-multiplicativity",
            ok,
            f"{pair_count} formula pairs, {suite.checked} products checked exactly, "
            f"{len(suite.findings)} violations, in {elapsed:.1f}s < 60s",
        )


class TestCriterion6:
    def test_decomposition_determinism(self):
        start = time.perf_counter()
        suite = decomposition_determinism_suite(builtin_corpus(), seeds=(1, 2, 3))
        elapsed = time.perf_counter() - start
        # Every corpus ring must contribute both R and R^2.
        ok = suite.ok and suite.checked == 2 * len(BUILTIN_CORPUS_SPECS)
        report_line(
            "C6 decomposition-determinism",
            ok,
            f"{suite.checked} targets (R and R^2 for {len(BUILTIN_CORPUS_SPECS)} rings) "
            f"x 3 seeds, {len(suite.findings)} mismatches, in {elapsed:.1f}s",
        )


class TestCriterion7:
    def test_family_consistency_and_certificate(self, capsys):
        family_report, _ = classify_matrix_family(2, 2)
        direct = classify_ring(build_ring("M(2,GF(2))"))
        fields_agree = family_report.to_dict() == direct.to_dict()

        symbolic, _ = classify_matrix_family(2, "infinite")
        strict = verdict_holds(symbolic.property_II) and not verdict_holds(
            symbolic.property_IV
        )

        code = main(["certificate", "--n", "2", "--field", "infinite"])
        out = capsys.readouterr().out
        cert = json.loads(out)
        names = {c["name"] for c in cert["claims"]}
        tarski = {
            "unique_indecomposable",
            "regular_is_p_power",
            "p_not_free",
            "uncountably_categorical",
        }
        emitted = code == EXIT_OK and tarski <= names and all(
            c["holds"] for c in cert["claims"] if c["name"] in tarski
        )
        ok = fields_agree and strict and emitted
        report_line(
            "C7 matrix-family-consistency",
            ok,
            f"finite q=2 agrees with direct classification={fields_agree}, "
            f"symbolic II∧¬IV={strict}, certificate claims emitted={emitted}",
        )


class TestCriterion8:
    def test_out_of_scope_machinery_absent(self):
        forbidden = ("saturat", "morley", "transcend", "cardinal")
        api_names = [n.lower() for n in dir(modclass)]
        report_fields = [
            f.lower() for f in modclass.ClassificationReport.__dataclass_fields__
        ]
        _, cert = classify_matrix_family(2, "infinite")
        claim_names = [c.name.lower() for c in cert.claims]
        leaks = [
            name
            for pool in (api_names, report_fields, claim_names)
            for name in pool
            if any(bad in name for bad in forbidden)
        ]
        ok = not leaks
        report_line(
            "C8 out-of-scope-absent",
            ok,
            f"no saturation/rank/infinite-cardinal verdicts exposed; leaks={leaks}",
        )
