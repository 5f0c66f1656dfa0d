"""pp-definable subgroups and the multiplicative index invariants."""

from modclass import (
    baur_monk_invariant,
    build_ring,
    direct_sum,
    library_pairs,
    pp_evaluate,
    pp_subgroup_is_right_ideal,
    regular_module,
    scalar_formula,
)

z4 = build_ring("Z/4")
reg = regular_module(z4)

# phi(x): exists y with x = 2y.  On Z/4 the solution set is {0, 2}.
phi = scalar_formula(z4, 1, 1, [[1, -2]], name="div2")
print("phi(Z/4) =", pp_evaluate(reg, phi).tolist())

# On the regular module every one-variable pp subgroup is a right ideal.
verdict = pp_subgroup_is_right_ideal(z4, phi)
print("right ideal:", verdict.value, "generated by", verdict.witness)

# The index invariant |phi(M)| / |phi(M) ∩ psi(M)| is multiplicative over
# direct sums - the finite-scale engine behind elementary equivalence of
# free modules of different infinite ranks.
psi = scalar_formula(z4, 1, 0, [[1]], name="zero")
single = baur_monk_invariant(reg, phi, psi)
double = baur_monk_invariant(direct_sum(reg, reg), phi, psi)
print(f"\ninvariant on R: {single.index}, on R (+) R: {double.index}",
      f"(= {single.index}^2)")

# The frozen library ships >= 10 formula pairs; multiplicativity holds for
# every pair on every corpus module.
pairs = library_pairs(z4)
print(f"\nlibrary pairs: {len(pairs)}")
for phi, psi in pairs[:5]:
    a = baur_monk_invariant(reg, phi, psi).index
    b = baur_monk_invariant(direct_sum(reg, reg), phi, psi).index
    print(f"  {phi.name:12s}/{psi.name:8s} index {a} -> {b} on the double")
