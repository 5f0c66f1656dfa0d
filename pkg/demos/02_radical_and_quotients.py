"""Jacobson radicals, quotient rings, and the ring-level predicates."""

from modclass import (
    build_ring,
    chain_conditions,
    is_local,
    is_simple_ring,
    jacobson_radical,
    quotient_ring,
    radical_nilpotency_degree,
)

for spec in ["Z/4", "Z/6", "Z/8", "T(2,GF(2))", "M(2,GF(2))"]:
    ring = build_ring(spec)
    radical = jacobson_radical(ring)
    degree = radical_nilpotency_degree(ring, radical)
    quotient = quotient_ring(ring, radical, label=f"{spec}/J")
    print(f"{spec:12s} |J|={len(radical)}  J^{degree}=0  |R/J|={quotient.size}  "
          f"local={bool(is_local(ring))}  R/J simple={bool(is_simple_ring(quotient))}")

# The local test carries its witness: either the maximal ideal or a pair of
# non-units whose sum is a unit.
verdict = is_local(build_ring("Z/6"))
print("\nZ/6 local?", verdict.value, "-", verdict.note)

# Chain conditions are automatic for finite rings; at small size the right
# ideal lattice is enumerated as an explicit witness.
report = chain_conditions(build_ring("Z/8"))
print("\nZ/8 right ideals:", report.right_ideal_lattice)
print("longest chain:", report.longest_chain, "-", report.rationale)
