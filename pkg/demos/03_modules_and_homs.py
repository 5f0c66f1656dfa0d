"""Finite modules: presentations, quotients, direct sums, hom enumeration."""

from modclass import (
    build_ring,
    cyclic_submodule,
    direct_sum,
    free_module,
    hom_enumerate,
    is_isomorphic,
    quotient_module,
    regular_module,
    submodule_as_module,
)

z4 = build_ring("Z/4")
reg = regular_module(z4)

# The Z/4-module Z/2, presented as R/(2): the action factors through reduction.
half = quotient_module(reg, [0, 2], label="Z/2 over Z/4")
print(half.label, "size:", half.size, "generators:", half.num_generators)
print("2 acts as", half.act(2, 1), "on the generator (annihilated)")

# Hom sets are enumerated exactly: the generator image must satisfy 2*y = 0.
homs = hom_enumerate(half, reg)
print("Hom(Z/2, Z/4):", [h(half.gens[0]) for h in homs], "- two maps")
print("Hom(Z/4, Z/4):", len(hom_enumerate(reg, reg)), "maps (free rank 1)")

# Over Z/6 the regular module splits into two summand ideals of sizes 2 and 3,
# and their direct sum rebuilds it.
z6 = build_ring("Z/6")
reg6 = regular_module(z6)
p1 = submodule_as_module(reg6, cyclic_submodule(reg6, 3), label="P1")
p2 = submodule_as_module(reg6, cyclic_submodule(reg6, 2), label="P2")
verdict = is_isomorphic(direct_sum(p1, p2), reg6)
print(f"\nP1 (size {p1.size}) + P2 (size {p2.size}) ≅ Z/6:", verdict.value)

# Free modules of higher rank are direct powers.
print("Z/6^2 size:", free_module(z6, 2).size)
