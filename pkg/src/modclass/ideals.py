"""One-sided ideals, the Jacobson radical, quotient rings, and ring predicates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Literal, Sequence

import numpy as np

from .config import DEFAULTS, EngineConfig
from .errors import ConsistencyError, SideError, SizeCapError
from .rings import FiniteRing, unit_mask
from .verdict import Verdict

Side = Literal["left", "right", "two-sided"]


@dataclass(frozen=True)
class Ideal:
    """A one- or two-sided ideal, stored as its full (sorted) element set."""

    ring: FiniteRing
    side: Side
    elements: tuple[int, ...]
    generators: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    @property
    def is_zero(self) -> bool:
        return self.elements == (0,)

    @property
    def is_whole_ring(self) -> bool:
        return len(self.elements) == self.ring.size


def _expand_subgroup(ring: FiniteRing, mask: np.ndarray, members: list[int], g: int) -> list[int]:
    """Grow the subgroup marked in ``mask`` by the element g; returns new members."""
    added: list[int] = []
    x = int(g)
    base = np.array(members, dtype=np.int64)
    while not mask[x]:
        coset = ring.add(base, np.full(len(base), x, dtype=np.int64))
        fresh = coset[~mask[coset]]
        mask[fresh] = True
        added.extend(int(v) for v in fresh)
        members.extend(int(v) for v in fresh)
        x = ring.add(x, int(g))
    return added


def additive_closure(ring: FiniteRing, seeds: Iterable[int]) -> np.ndarray:
    """Smallest additive subgroup containing the seeds, as sorted indices."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[0] = True
    members = [0]
    for g in seeds:
        _expand_subgroup(ring, mask, members, int(g))
    return np.nonzero(mask)[0]


def ideal_generated(
    ring: FiniteRing,
    side: Side,
    gens: Sequence[int],
    cfg: EngineConfig | None = None,
) -> Ideal:
    """Least ideal of the given side containing ``gens`` (closure to a fixed point)."""
    ring.require_tables("ideal_generated")
    if side not in ("left", "right", "two-sided"):
        raise SideError(f"unknown side {side!r}")
    mask = np.zeros(ring.size, dtype=bool)
    mask[0] = True
    members = [0]
    pending = [int(g) for g in gens]
    mul = ring.mul_table
    while pending:
        x = pending.pop()
        if mask[x]:
            continue
        added = _expand_subgroup(ring, mask, members, x)
        for y in added:
            if side in ("left", "two-sided"):
                col = mul[:, y]
                pending.extend(int(v) for v in np.unique(col[~mask[col]]))
            if side in ("right", "two-sided"):
                row = mul[y, :]
                pending.extend(int(v) for v in np.unique(row[~mask[row]]))
    elements = tuple(int(v) for v in np.nonzero(mask)[0])
    return Ideal(ring=ring, side=side, elements=elements, generators=tuple(int(g) for g in gens))


def _join(ring: FiniteRing, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Sum of two same-side ideals: the additive closure of their union."""
    return tuple(int(v) for v in additive_closure(ring, set(a) | set(b)))


def one_sided_ideals(
    ring: FiniteRing, side: Side, cfg: EngineConfig | None = None
) -> list[tuple[int, ...]]:
    """The full lattice of ideals of the given side (element-set tuples).

    Every ideal is a sum of cyclic ones, so the lattice is the closure of the
    cyclic ideals under pairwise joins.  Guarded by the enumeration cap.
    """
    cfg = cfg or DEFAULTS
    if ring.size > cfg.ideal_enum_cap:
        raise SizeCapError(
            f"ideal lattice of {ring.label}: size {ring.size} above cap {cfg.ideal_enum_cap}"
        )
    cyclics: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for x in range(ring.size):
        elems = ideal_generated(ring, side, [x], cfg).elements
        if elems not in seen:
            seen.add(elems)
            cyclics.append(elems)
    found = set(cyclics)
    queue = list(cyclics)
    while queue:
        current = queue.pop()
        for cyc in cyclics:
            joined = _join(ring, current, cyc)
            if joined not in found:
                found.add(joined)
                queue.append(joined)
    return sorted(found, key=lambda t: (len(t), t))


def maximal_ideals(ring: FiniteRing, side: Side, cfg: EngineConfig | None = None) -> list[tuple[int, ...]]:
    """Maximal proper ideals of the given side, from the full lattice."""
    lattice = one_sided_ideals(ring, side, cfg)
    proper = [i for i in lattice if len(i) < ring.size]
    out = []
    for i in proper:
        iset = set(i)
        if not any(len(j) > len(i) and iset < set(j) for j in proper):
            out.append(i)
    return out


def jacobson_radical(ring: FiniteRing, cfg: EngineConfig | None = None) -> Ideal:
    """J = {x : 1 - r*x is a unit for every r}, verified two-sided and nilpotent."""
    ring.require_tables("jacobson_radical")
    mul = ring.mul_table
    um = unit_mask(ring)
    one_minus = ring.add(ring.one, ring.neg_table[mul])  # (r, x) -> 1 - r*x
    in_radical = um[one_minus].all(axis=0)
    elements = np.nonzero(in_radical)[0]

    elem_set = frozenset(int(v) for v in elements)
    # Quasi-regularity must already be a two-sided ideal; anything else means
    # the ring tables are corrupt.
    sums = ring.add(elements[:, None], elements[None, :])
    left = mul[:, elements]
    right = mul[elements, :]
    for arr, what in ((sums, "addition"), (left, "left multiples"), (right, "right multiples")):
        if not in_radical[arr].all():
            raise ConsistencyError(
                f"jacobson_radical({ring.label}): quasi-regular set not closed under {what}"
            )

    _check_nilpotent(ring, elements)
    gens = _subgroup_generators(ring, elements)
    return Ideal(ring=ring, side="two-sided", elements=tuple(int(v) for v in elements), generators=gens)


def _subgroup_generators(ring: FiniteRing, elements: np.ndarray) -> tuple[int, ...]:
    """A small additive generating set for a subgroup given as element indices."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[0] = True
    members = [0]
    gens: list[int] = []
    for x in elements:
        if not mask[x]:
            gens.append(int(x))
            _expand_subgroup(ring, mask, members, int(x))
    return tuple(gens)


def _check_nilpotent(ring: FiniteRing, elements: np.ndarray) -> int:
    """Verify the span of ``elements`` is nilpotent; returns the degree."""
    mul = ring.mul_table
    current = elements
    degree = 1
    while not (len(current) == 1 and current[0] == 0):
        if degree > ring.size:
            raise ConsistencyError(f"radical of {ring.label} is not nilpotent")
        products = np.unique(mul[np.ix_(elements, current)])
        current = additive_closure(ring, products)
        degree += 1
    return degree


def radical_nilpotency_degree(ring: FiniteRing, radical: Ideal) -> int:
    """Least m with J^m = 0 (m = 1 for the zero radical)."""
    return _check_nilpotent(ring, np.array(radical.elements, dtype=np.int64))


# -- quotient rings ------------------------------------------------------------


def _snf_diagonal_with_left(rows: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Smith-normal-form diagonal of an integer matrix, tracking row ops only.

    Returns (diag, U) with U unimodular such that U*A*V is diagonal for some
    unimodular V; the diagonal entries satisfy d1 | d2 | ... (V is not needed
    to present the quotient group).
    """
    a = [row[:] for row in rows]
    t = len(a)
    c = len(a[0]) if t else 0
    u = [[1 if i == j else 0 for j in range(t)] for i in range(t)]

    def row_op(i, j, k):  # row_i += k * row_j
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, k):  # col_i += k * col_j
        for row in a:
            row[i] += k * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    for pivot in range(min(t, c)):
        while True:
            best = None
            for i in range(pivot, t):
                for j in range(pivot, c):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(pivot, best[0])
            swap_cols(pivot, best[1])
            p = a[pivot][pivot]
            dirty = False
            for i in range(pivot + 1, t):
                if a[i][pivot] % p:
                    row_op(i, pivot, -(a[i][pivot] // p))
                    dirty = True
                elif a[i][pivot]:
                    row_op(i, pivot, -(a[i][pivot] // p))
            for j in range(pivot + 1, c):
                if a[pivot][j] % p:
                    col_op(j, pivot, -(a[pivot][j] // p))
                    dirty = True
                elif a[pivot][j]:
                    col_op(j, pivot, -(a[pivot][j] // p))
            if dirty:
                continue
            # Pivot must divide the rest of the submatrix for the divisor chain.
            offender = None
            for i in range(pivot + 1, t):
                for j in range(pivot + 1, c):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(pivot, offender, 1)
        if pivot < t and pivot < c and a[pivot][pivot] < 0:
            a[pivot] = [-x for x in a[pivot]]
            u[pivot] = [-x for x in u[pivot]]
    diag = [a[i][i] if i < c else 0 for i in range(t)]
    return diag, u


def quotient_ring(
    ring: FiniteRing,
    ideal: Ideal,
    label: str | None = None,
    cfg: EngineConfig | None = None,
) -> FiniteRing:
    """Ring on the cosets of a two-sided ideal, with least-index representatives.

    The additive quotient group is re-presented as a product of cyclic groups
    via the Smith normal form of the ideal's generator lattice, so the result
    is a first-class ring with the same mixed-radix conventions.
    """
    ring.require_tables("quotient_ring")
    if ideal.side != "two-sided":
        raise SideError(f"quotient_ring needs a two-sided ideal, got {ideal.side}")
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")
    if len(ideal) == 1:
        return ring

    t = len(ring.orders)
    gens = _subgroup_generators(ring, np.array(ideal.elements, dtype=np.int64))
    cols: list[list[int]] = [[int(d) for d in ring.decode(g)] for g in gens]
    cols += [[ring.orders[i] if i == j else 0 for i in range(t)] for j in range(t)]
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(t)]
    diag, u = _snf_diagonal_with_left(rows)

    keep = [i for i, d in enumerate(diag) if d > 1]
    new_orders = tuple(diag[i] for i in keep) if keep else (1,)
    u_arr = np.array(u, dtype=np.int64)

    digits_all = ring._digits  # (size, t)
    coords = digits_all @ u_arr.T  # (size, t)
    if keep:
        kept = coords[:, keep] % np.array([diag[i] for i in keep], dtype=np.int64)
        weights = np.concatenate(([1], np.cumprod([diag[i] for i in keep])[:-1]))
        new_index = (kept * weights).sum(axis=1)
    else:
        new_index = np.zeros(ring.size, dtype=np.int64)

    new_size = int(reduce(lambda x, y: x * y, new_orders, 1))
    if int(new_index.max()) >= new_size or len(np.unique(new_index)) != new_size:
        raise ConsistencyError(f"quotient of {ring.label}: coset labeling is not a bijection")
    if ring.size // len(ideal) != new_size:
        raise ConsistencyError(f"quotient of {ring.label}: size mismatch")

    # Least element index per coset, for deterministic representatives.
    reps = np.full(new_size, -1, dtype=np.int64)
    for x in range(ring.size):
        q = new_index[x]
        if reps[q] < 0:
            reps[q] = x
    mul_q = new_index[ring.mul_table[np.ix_(reps, reps)]]
    one_q = int(new_index[ring.one])
    label = label or f"({ring.label})/[{len(ideal)}]"
    return FiniteRing(new_orders, one=one_q, label=label, mul_table=mul_q)


# -- ring predicates ------------------------------------------------------------


def is_local(ring: FiniteRing, cfg: EngineConfig | None = None) -> Verdict:
    """Local iff the non-units form an additive subgroup (= the radical)."""
    ring.require_tables("is_local")
    if ring.size == 1:
        return Verdict(False, note="zero ring has no maximal ideal")
    um = unit_mask(ring)
    nonunits = np.nonzero(~um)[0]
    sums = ring.add(nonunits[:, None], nonunits[None, :])
    bad = np.argwhere(um[sums])
    if bad.size:
        i, j = bad[0]
        witness = (int(nonunits[i]), int(nonunits[j]))
        return Verdict(
            False,
            witness=witness,
            note=f"non-units {witness[0]} + {witness[1]} = {sums[i, j]} is a unit",
        )
    maximal = Ideal(
        ring=ring,
        side="left",
        elements=tuple(int(v) for v in nonunits),
        generators=_subgroup_generators(ring, nonunits),
    )
    return Verdict(True, witness=maximal, note="non-units form the unique maximal left ideal")


def is_simple_ring(ring: FiniteRing, cfg: EngineConfig | None = None) -> Verdict:
    """Simple iff every nonzero element generates the whole ring two-sidedly."""
    if ring.size < 2:
        raise ValueError("simplicity needs a ring with 0 != 1")
    ring.require_tables("is_simple_ring")
    for x in range(1, ring.size):
        ideal = ideal_generated(ring, "two-sided", [x], cfg)
        if not ideal.is_whole_ring:
            return Verdict(False, witness=ideal, note=f"element {x} generates a proper ideal")
    return Verdict(True, note="every nonzero element generates the whole ring")


@dataclass
class ChainConditionsReport:
    """Chain-condition predicates, trivially satisfied by finite rings.

    When the carrier is within the enumeration cap the full right-ideal
    lattice is attached as an explicit witness for the descending chain
    condition; above the cap only the rationale is reported.
    """

    right_artinian: bool
    left_perfect: bool
    right_coherent: bool
    rationale: str
    right_ideal_count: int | None = None
    longest_chain: int | None = None
    right_ideal_lattice: list[tuple[int, ...]] | None = None

    @property
    def all_hold(self) -> bool:
        return self.right_artinian and self.left_perfect and self.right_coherent


def _longest_chain(lattice: list[tuple[int, ...]]) -> int:
    ordered = sorted(lattice, key=len)
    sets = [set(t) for t in ordered]
    best = [1] * len(ordered)
    for i in range(len(ordered)):
        for j in range(i):
            if len(sets[j]) < len(sets[i]) and sets[j] < sets[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


def chain_conditions(ring: FiniteRing, cfg: EngineConfig | None = None) -> ChainConditionsReport:
    """Right artinian / left perfect / right coherent verdicts with witnesses."""
    cfg = cfg or DEFAULTS
    rationale = (
        "finite carrier: every descending chain of right ideals stabilizes, "
        "and the artinian condition carries perfectness and coherence with it"
    )
    if ring.size <= cfg.ideal_enum_cap:
        lattice = one_sided_ideals(ring, "right", cfg)
        return ChainConditionsReport(
            right_artinian=True,
            left_perfect=True,
            right_coherent=True,
            rationale=rationale,
            right_ideal_count=len(lattice),
            longest_chain=_longest_chain(lattice),
            right_ideal_lattice=lattice,
        )
    return ChainConditionsReport(
        right_artinian=True,
        left_perfect=True,
        right_coherent=True,
        rationale=rationale,
    )
