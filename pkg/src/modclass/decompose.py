"""Primitive idempotent decomposition of rings and Krull-Schmidt decomposition
of finite modules, with a per-ring registry of indecomposable isomorphism classes."""

from __future__ import annotations

import weakref
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .config import DEFAULTS, EngineConfig
from .errors import ConsistencyError, SizeCapError
from .modules import (
    FiniteModule,
    cyclic_submodule,
    find_bijective_hom,
    hom_value_at,
    iter_hom_images,
    regular_module,
    submodule_as_module,
    submodule_generated,
)
from .rings import FiniteRing
from .verdict import Verdict


def idempotents(ring: FiniteRing) -> tuple[int, ...]:
    """All e with e*e = e, by full enumeration."""
    ring.require_tables("idempotents")
    idx = np.arange(ring.size)
    return tuple(int(v) for v in idx[ring.mul_table[idx, idx] == idx])


def _corner(ring: FiniteRing, e: int) -> np.ndarray:
    """The corner ring e*R*e as sorted element indices."""
    return np.unique(ring.mul_table[ring.mul_table[e, :], e])


def _corner_idempotent(ring: FiniteRing, e: int, order: np.ndarray | None = None) -> int | None:
    """An idempotent f of eRe with f not in {0, e}, or None if e is primitive."""
    corner = _corner(ring, e)
    candidates = corner[(ring.mul_table[corner, corner] == corner)]
    candidates = candidates[(candidates != 0) & (candidates != e)]
    if len(candidates) == 0:
        return None
    if order is not None:
        pos = np.argsort(order[candidates], kind="stable")
        return int(candidates[pos[0]])
    return int(candidates[0])


def corner_isomorphism(ring: FiniteRing, e: int, f: int) -> tuple[int, int] | None:
    """Witness (a, b) with a in eRf, b in fRe, ab = e, ba = f, if Re ≅ Rf."""
    mul = ring.mul_table
    erf = np.unique(mul[mul[e, :], f])
    fre = np.unique(mul[mul[f, :], e])
    prod_ab = mul[np.ix_(erf, fre)]
    hits = np.argwhere(prod_ab == e)
    for i, j in hits:
        a, b = int(erf[i]), int(fre[j])
        if int(mul[b, a]) == f:
            return a, b
    return None


@dataclass
class IdempotentDecomposition:
    """A complete orthogonal set of primitive idempotents, grouped by the
    isomorphism class of the left ideals they generate."""

    ring: FiniteRing
    idempotents: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]  # partition of the idempotent list
    multiplicities: tuple[int, ...]  # r_i = size of class i
    representatives: tuple[FiniteModule, ...]  # P_i = R*e for class representative e

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(p.size for p in self.representatives)

    def check(self) -> None:
        ring = self.ring
        mul = ring.mul_table
        es = self.idempotents
        total = 0
        for e in es:
            if int(mul[e, e]) != e:
                raise ConsistencyError(f"{ring.label}: {e} is not idempotent")
            total = ring.add(total, e)
        if total != ring.one:
            raise ConsistencyError(f"{ring.label}: idempotents do not sum to 1")
        for i, e in enumerate(es):
            for j, f in enumerate(es):
                if i != j and (int(mul[e, f]) != 0 or int(mul[f, e]) != 0):
                    raise ConsistencyError(f"{ring.label}: idempotents {e},{f} not orthogonal")
        product = 1
        for p, r in zip(self.sizes, self.multiplicities):
            product *= p**r
        if product != ring.size:
            raise ConsistencyError(
                f"{ring.label}: product of |P_i|^r_i = {product} != |R| = {ring.size}"
            )


def primitive_decomposition(
    ring: FiniteRing,
    cfg: EngineConfig | None = None,
    rng: np.random.Generator | None = None,
) -> IdempotentDecomposition:
    """Refine {1} into a complete orthogonal set of primitive idempotents.

    Each non-primitive idempotent e splits as {f, e-f} for an idempotent f of
    the corner eRe; the count strictly increases, so refinement terminates.
    The search order is ascending by element index unless an rng is supplied
    (the randomized mode exists for the order-invariance property test).
    """
    cfg = cfg or DEFAULTS
    ring.require_tables("primitive_decomposition")
    if ring.size == 1:
        return IdempotentDecomposition(ring, (), (), (), ())

    order = None
    if rng is not None:
        order = rng.permutation(ring.size)
    work = [ring.one]
    primitive: list[int] = []
    while work:
        e = work.pop(0)
        if e == 0:
            raise ConsistencyError(f"{ring.label}: zero appeared during refinement")
        f = _corner_idempotent(ring, e, order)
        if f is None:
            primitive.append(e)
        else:
            work.append(f)
            work.append(ring.sub(e, f))

    primitive.sort()
    reg = regular_module(ring, cfg)
    groups: list[list[int]] = []
    for e in primitive:
        for group in groups:
            if corner_isomorphism(ring, group[0], e) is not None:
                group.append(e)
                break
        else:
            groups.append([e])

    reps = []
    for i, group in enumerate(groups):
        elements = cyclic_submodule(reg, group[0])
        reps.append(
            submodule_as_module(
                reg, elements, label=f"P{i + 1}({ring.label})", generators=[group[0]], cfg=cfg
            )
        )
    order_key = sorted(
        range(len(groups)),
        key=lambda i: (reps[i].size, tuple(int(v) for v in reps[i].act_table.ravel())),
    )
    groups = [groups[i] for i in order_key]
    reps = [reps[i] for i in order_key]
    decomposition = IdempotentDecomposition(
        ring=ring,
        idempotents=tuple(primitive),
        classes=tuple(tuple(g) for g in groups),
        multiplicities=tuple(len(g) for g in groups),
        representatives=tuple(reps),
    )
    decomposition.check()
    return decomposition


# -- indecomposable registry and signatures --------------------------------------


class IndecomposableRegistry:
    """Per-ring registry of indecomposable isomorphism classes.

    The registry is the engine's only mutable store; callers must serialize
    writes (single-writer).  New modules are matched against existing classes
    of the same size by direct isomorphism search.
    """

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self.representatives: list[FiniteModule] = []

    def classify(self, module: FiniteModule, cfg: EngineConfig | None = None) -> int:
        cfg = cfg or DEFAULTS
        for class_id, rep in enumerate(self.representatives):
            if rep.size != module.size:
                continue
            if find_bijective_hom(module, rep, cfg) is not None:
                return class_id
        self.representatives.append(module)
        return len(self.representatives) - 1

    def class_size(self, class_id: int) -> int:
        return self.representatives[class_id].size


_REGISTRIES: "weakref.WeakValueDictionary[int, FiniteRing]" = weakref.WeakValueDictionary()
_REGISTRY_STORE: dict[int, IndecomposableRegistry] = {}


def get_registry(ring: FiniteRing) -> IndecomposableRegistry:
    """The shared registry for a ring (stable ids across calls in a session)."""
    key = id(ring)
    if key not in _REGISTRY_STORE or _REGISTRIES.get(key) is not ring:
        _REGISTRIES[key] = ring
        _REGISTRY_STORE[key] = IndecomposableRegistry(ring)
    return _REGISTRY_STORE[key]


@dataclass(frozen=True)
class DecompositionSignature:
    """Multiset of indecomposable classes with multiplicities (sorted by id)."""

    registry: IndecomposableRegistry
    entries: tuple[tuple[int, int], ...]  # (class_id, multiplicity)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def sizes(self) -> tuple[tuple[int, int], ...]:
        """(indecomposable size, multiplicity) pairs, sorted by size."""
        return tuple(
            sorted((self.registry.class_size(c), m) for c, m in self.entries)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, DecompositionSignature):
            return NotImplemented
        return self.registry is other.registry and self.entries == other.entries

    def __hash__(self):
        return hash((id(self.registry), self.entries))

    def combine(self, other: "DecompositionSignature") -> "DecompositionSignature":
        if self.registry is not other.registry:
            raise ValueError("signatures from different registries")
        counts = Counter(dict(self.entries))
        counts.update(dict(other.entries))
        return DecompositionSignature(self.registry, tuple(sorted(counts.items())))


def _find_splitting_idempotent(
    module: FiniteModule,
    cfg: EngineConfig,
    rng: np.random.Generator | None,
) -> tuple[int, ...] | None:
    """Generator images of an idempotent endomorphism other than 0 and id.

    The map defined by images (y_i) is idempotent iff every y_i is a fixed
    point, since pi(pi(g_i)) = pi(y_i).
    """
    g = module.num_generators
    zero_images = (0,) * g
    id_images = module.gens
    for images in iter_hom_images(module, module, cfg, rng=rng):
        if images == zero_images or images == id_images:
            continue
        if all(hom_value_at(module, module, images, y) == y for y in images):
            return images
    return None


def krull_schmidt(
    module: FiniteModule,
    cfg: EngineConfig | None = None,
    rng: np.random.Generator | None = None,
    registry: IndecomposableRegistry | None = None,
) -> DecompositionSignature:
    """Decompose into indecomposables by splitting idempotent endomorphisms.

    Requires End(M) searches within the hom cap.  The output multiset does not
    depend on the search order; the seeded mode exists to test exactly that.
    """
    cfg = cfg or DEFAULTS
    registry = registry or get_registry(module.ring)
    if rng is None:
        cached = getattr(module, "_signature_cache", None)
        if cached is not None and cached.registry is registry:
            return cached

    if module.size == 1:
        return DecompositionSignature(registry, ())

    images = _find_splitting_idempotent(module, cfg, rng)
    if images is None:
        class_id = registry.classify(module, cfg)
        result = DecompositionSignature(registry, ((class_id, 1),))
    else:
        complement = tuple(
            module.sub(gen, y) for gen, y in zip(module.gens, images)
        )
        part1 = submodule_generated(module, [y for y in images if y])
        part2 = submodule_generated(module, [z for z in complement if z])
        if len(part1) * len(part2) != module.size:
            raise ConsistencyError(
                f"{module.label}: idempotent split sizes {len(part1)} x {len(part2)} "
                f"!= {module.size}"
            )
        sub1 = submodule_as_module(
            module, part1, label=f"{module.label}|im", generators=images, cfg=cfg
        )
        sub2 = submodule_as_module(
            module, part2, label=f"{module.label}|ker", generators=complement, cfg=cfg
        )
        sig1 = krull_schmidt(sub1, cfg, rng, registry)
        sig2 = krull_schmidt(sub2, cfg, rng, registry)
        result = sig1.combine(sig2)

    if rng is None:
        module._signature_cache = result
    return result


def regular_signature(ring: FiniteRing, cfg: EngineConfig | None = None) -> DecompositionSignature:
    return krull_schmidt(regular_module(ring, cfg), cfg)


def is_isomorphic(
    a: FiniteModule, b: FiniteModule, cfg: EngineConfig | None = None
) -> Verdict:
    """Size check, then decomposition signatures, then direct hom search.

    A true verdict carries an explicit isomorphism when the search space is
    small, otherwise the common signature; a false verdict carries the
    distinguishing signatures (or sizes).
    """
    cfg = cfg or DEFAULTS
    if a.ring is not b.ring:
        raise ValueError("modules over different rings")
    if a.size != b.size:
        return Verdict(False, witness=("size", a.size, b.size), note="sizes differ")
    try:
        sig_a = krull_schmidt(a, cfg)
        sig_b = krull_schmidt(b, cfg)
    except SizeCapError:
        hom = find_bijective_hom(a, b, cfg)
        if hom is not None:
            return Verdict(True, witness=hom, note="isomorphism found by direct search")
        return Verdict(False, note="no bijective homomorphism exists")
    if sig_a == sig_b:
        if a.size ** b.num_generators <= 100_000:
            hom = find_bijective_hom(a, b, cfg)
            if hom is not None:
                return Verdict(True, witness=hom, note="isomorphism realized explicitly")
        return Verdict(True, witness=sig_a, note="equal decomposition signatures")
    return Verdict(
        False,
        witness=(sig_a.sizes(), sig_b.sizes()),
        note="decomposition signatures differ",
    )
