"""Primitive idempotents and Krull-Schmidt decomposition of modules."""

import numpy as np

from modclass import (
    build_ring,
    direct_sum,
    free_module,
    idempotents,
    krull_schmidt,
    primitive_decomposition,
    regular_module,
)

# All idempotents of Z/6, then the refinement into a complete orthogonal
# primitive set {3, 4} whose left ideals are the two summands of sizes 2, 3.
z6 = build_ring("Z/6")
print("idempotents of Z/6:", idempotents(z6))
decomposition = primitive_decomposition(z6)
print("primitive set:", decomposition.idempotents,
      "sizes:", decomposition.sizes, "multiplicities:", decomposition.multiplicities)

# M(2,GF(2)): one class with multiplicity two - the column module P appears
# twice inside the regular module.
m2 = build_ring("M(2,GF(2))")
d = primitive_decomposition(m2)
print("\nM(2,GF(2)):", "k =", d.k, "r =", d.multiplicities[0], "|P| =", d.sizes[0])

# Krull-Schmidt on modules: signatures are multisets of indecomposable
# classes; the regular module always matches the idempotent decomposition.
reg = regular_module(m2)
print("signature of R:      ", krull_schmidt(reg).sizes())
print("signature of R^2:    ", krull_schmidt(free_module(m2, 2)).sizes())
print("signature of P (+) P:", krull_schmidt(
    direct_sum(d.representatives[0], d.representatives[0])).sizes())

# The multiset does not depend on the search order.
for seed in (1, 2, 3):
    assert krull_schmidt(reg, rng=np.random.default_rng(seed)) == krull_schmidt(reg)
print("\nsignatures identical across 3 randomized search seeds")
