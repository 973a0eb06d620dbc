"""The class F_{q,n}: instances, value profiles and spectra.

An instance starts from ``g(x) = a x + b`` and ordered poles
``x_1 = 0, ..., x_n = -b/a``; the permutation ``f`` agrees with ``g`` off the
poles, sends ``x_i`` to ``g(x_{i-1})`` for ``i >= 2`` and ``x_1`` to
``g(x_n) = 0``.  The instance polynomial is ``F(x) = f(x) + x``.

Everything is table-level: a table is a length-``q`` sequence of field
elements listed in :meth:`FieldCtx.elements` order.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from .carlitz import CarlitzChain, LinearMap, PoleSet, decompose
from .errors import BudgetExceeded, InvalidN, InvalidPoleSet, ValueSetError
from .gf import FieldCtx, FieldElement

__all__ = [
    "LinearMap",
    "FamilyInstance",
    "ValueProfile",
    "build_instance",
    "value_profile",
    "is_permutation",
    "is_complete_mapping",
    "sum_of_values",
    "interpolate",
    "evaluate_poly",
    "allowed_sizes",
    "InstanceBatch",
    "instance_batches",
    "count_instances",
    "SpectrumEntry",
    "SpectrumReport",
    "enumerate_spectrum",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10 ** 8
Table = Sequence[FieldElement]


@dataclass(frozen=True)
class ValueProfile:
    values: frozenset
    mult: dict
    counts: tuple[int, ...]  # v_0, ..., v_M
    max_count: int

    @property
    def size(self) -> int:
        return len(self.values)

    def count(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    def sparse_counts(self) -> dict[int, int]:
        """v_0 and v_1 always, interior zero runs dropped, v_M always."""
        return {i: v for i, v in enumerate(self.counts) if i <= 1 or v}

    def render_counts(self) -> str:
        return "(" + ", ".join(f"v_{i}={v}" for i, v in self.sparse_counts().items()) + ")"

    def to_json(self) -> dict:
        ordered = sorted(self.values)
        return {
            "size": self.size,
            "values": [v.to_json() for v in ordered],
            "mult": [[v.to_json(), self.mult[v]] for v in ordered],
            "counts": {str(i): v for i, v in self.sparse_counts().items()},
            "max_count": self.max_count,
        }


def value_profile(table: Table) -> ValueProfile:
    q = len(table)
    mult = Counter(table)
    top = max(mult.values())
    counts = [0] * (top + 1)
    for m in mult.values():
        counts[m] += 1
    counts[0] = q - len(mult)
    return ValueProfile(frozenset(mult), dict(mult), tuple(counts), top)


def is_permutation(table: Table) -> bool:
    return len(set(table)) == len(table)


def sum_of_values(table: Table) -> FieldElement:
    return reduce(lambda s, v: s + v, table)


@dataclass(frozen=True)
class FamilyInstance:
    ctx: FieldCtx
    g: LinearMap
    poles: PoleSet
    f_table: tuple[FieldElement, ...]
    F_table: tuple[FieldElement, ...]

    @property
    def n(self) -> int:
        return len(self.poles)

    def f(self, delta) -> FieldElement:
        return self.f_table[self.ctx(delta).value]

    def F(self, delta) -> FieldElement:
        return self.F_table[self.ctx(delta).value]

    @cached_property
    def profile(self) -> ValueProfile:
        return value_profile(self.F_table)

    @cached_property
    def chain(self) -> CarlitzChain:
        return decompose(self.g, self.poles)

    def to_json(self) -> dict:
        return {"field": self.ctx.to_json(), "g": self.g.to_json(),
                "poles": self.poles.to_json()}


def build_instance(ctx: FieldCtx, g: LinearMap | Sequence, poles: PoleSet | Sequence
                   ) -> FamilyInstance:
    if not isinstance(g, LinearMap):
        g = LinearMap.of(ctx, *g)
    if not isinstance(poles, PoleSet):
        poles = PoleSet.of(ctx, poles)
    poles.check_for(g)
    n = len(poles)
    if n > ctx.q - 1:
        raise InvalidPoleSet(f"n = {n} exceeds q - 1 = {ctx.q - 1}")
    f = [g(d) for d in ctx.elements()]
    for i in range(1, n):
        f[poles[i].value] = g(poles[i - 1])
    f[0] = g(poles[-1])
    F = tuple(fv + ctx.from_index(d) for d, fv in enumerate(f))
    return FamilyInstance(ctx, g, poles, tuple(f), F)


def is_complete_mapping(instance: FamilyInstance) -> bool:
    return is_permutation(instance.f_table) and is_permutation(instance.F_table)


def evaluate_poly(coeffs: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    """Horner evaluation of ``sum coeffs[k] x^k``."""
    acc = x.ctx.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def interpolate(table: Table) -> list[FieldElement]:
    """Coefficients ``[a_0, ..., a_d]`` of the reduced polynomial through ``table``.

    Uses ``a_0 = T(0)``, ``a_k = -sum_{c != 0} T(c) c^(q-1-k)`` for
    ``1 <= k <= q-2`` and ``a_{q-1} = -sum_c T(c)``.
    """
    ctx = table[0].ctx
    q = ctx.q
    coeffs = [table[0]]
    nz = ctx.nonzero()
    for k in range(1, q - 1):
        s = ctx.zero
        for c in nz:
            s = s + table[c.value] * c ** (q - 1 - k)
        coeffs.append(-s)
    coeffs.append(-sum_of_values(table))
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def allowed_sizes(q: int, n: int) -> set[int]:
    """The sizes ``{2..n+1} | {q-n..q-2} | {q}`` every instance must land in."""
    return set(range(2, n + 2)) | set(range(q - n, q - 1)) | {q}


# -- vectorised enumeration -------------------------------------------------

@dataclass
class InstanceBatch:
    """All instances sharing one ``(a, b)``: poles and F tables as index arrays."""

    a: int
    b: int
    poles: np.ndarray  # (K, n) element indices, column 0 is zero
    F: np.ndarray  # (K, q) element indices

    def counts(self, q: int) -> np.ndarray:
        """Per-instance multiplicity of every element, shape (K, q)."""
        k = self.F.shape[0]
        flat = (self.F + q * np.arange(k)[:, None]).ravel()
        return np.bincount(flat, minlength=k * q).reshape(k, q)


def _F_tables(ctx: FieldCtx, a: int, b: int, pole_idx: np.ndarray) -> np.ndarray:
    t = ctx.tables
    q = ctx.q
    elems = np.arange(q)
    base = t.add[t.mul[t.add[a, 1], elems], b]
    k, n = pole_idx.shape
    F = np.broadcast_to(base, (k, q)).copy()
    rows = np.arange(k)
    # F(x_i) = a x_{i-1} + x_i + b for i >= 2, F(x_1) = 0
    for i in range(1, n):
        val = t.add[t.add[t.mul[a, pole_idx[:, i - 1]], pole_idx[:, i]], b]
        F[rows, pole_idx[:, i]] = val
    F[:, 0] = 0
    return F


def _interior_candidates(ctx: FieldCtx, a: int, b: int) -> tuple[int, np.ndarray]:
    root = ctx.mul(ctx.neg(b), ctx.inv(a))
    cand = np.array([x for x in range(1, ctx.q) if x != root], dtype=np.int64)
    return root, cand


def instance_batches(ctx: FieldCtx, n: int, a_values: Sequence[int] | None = None
                     ) -> Iterator[InstanceBatch]:
    """Every instance of F_{q,n}, grouped by ``(a, b)``.

    Order: ``a`` then ``b`` by element index, then interior poles
    ``x_2..x_{n-1}`` lexicographically.
    """
    _check_n(ctx, n)
    q = ctx.q
    perms = list(permutations(range(q - 2), n - 2))
    slots = np.array(perms, dtype=np.int64).reshape(len(perms), n - 2)
    for a in (range(1, q) if a_values is None else a_values):
        for b in range(1, q):
            root, cand = _interior_candidates(ctx, a, b)
            k = slots.shape[0]
            P = np.empty((k, n), dtype=np.int64)
            P[:, 0] = 0
            P[:, 1:n - 1] = cand[slots]
            P[:, n - 1] = root
            yield InstanceBatch(a, b, P, _F_tables(ctx, a, b, P))


def count_instances(q: int, n: int) -> int:
    return (q - 1) ** 2 * math.perm(q - 2, n - 2)


def _check_n(ctx: FieldCtx, n: int) -> None:
    if not 2 <= n <= ctx.q - 1:
        raise InvalidN(f"need 2 <= n <= q-1 = {ctx.q - 1}, got n = {n}")


@dataclass(frozen=True)
class Witness:
    g: LinearMap
    poles: PoleSet
    chain: CarlitzChain

    def to_json(self) -> dict:
        return {"a": self.g.a.to_json(), "b": self.g.b.to_json(),
                "poles": self.poles.to_json(),
                "chain": [c.to_json() for c in self.chain.c]}


@dataclass(frozen=True)
class SpectrumEntry:
    size: int
    witness: Witness
    count: int | None  # exhaustive mode only


@dataclass
class SpectrumReport:
    ctx: FieldCtx
    n: int
    mode: str
    seed: int | None
    instances: int
    entries: dict[int, SpectrumEntry] = field(default_factory=dict)

    @property
    def sizes(self) -> set[int]:
        return set(self.entries)

    def records(self) -> list[dict]:
        out = []
        for size in sorted(self.entries):
            e = self.entries[size]
            rec = {"q": self.ctx.q, "n": self.n, "mode": self.mode, "size": size,
                   "witness": e.witness.to_json()}
            if e.count is not None:
                rec["count_of_instances"] = e.count
            if self.seed is not None:
                rec["seed"] = self.seed
            out.append(rec)
        return out

    def tsv(self) -> str:
        rows = ["size\tcount_of_instances\ta\tb\tpoles\tchain"]
        for size in sorted(self.entries):
            e = self.entries[size]
            w = e.witness
            rows.append("\t".join([
                str(size),
                "" if e.count is None else str(e.count),
                str(w.g.a), str(w.g.b),
                ",".join(map(str, w.poles)),
                ",".join(map(str, w.chain.c)),
            ]))
        return "\n".join(rows) + "\n"


# partial results: size -> (least key, instance count); key = (a, b, interior poles)
_Partial = dict[int, tuple[tuple, int]]


def _merge(into: _Partial, part: _Partial) -> None:
    for size, (key, cnt) in part.items():
        if size in into:
            old_key, old_cnt = into[size]
            into[size] = (min(old_key, key), old_cnt + cnt)
        else:
            into[size] = (key, cnt)


def _scan_batch(batch: InstanceBatch, q: int) -> _Partial:
    sizes = (batch.counts(q) > 0).sum(axis=1)
    uniq, first, cnt = np.unique(sizes, return_index=True, return_counts=True)
    out: _Partial = {}
    for s, i, c in zip(uniq.tolist(), first.tolist(), cnt.tolist()):
        key = (batch.a, batch.b, tuple(batch.poles[i, 1:-1].tolist()))
        out[s] = (key, c)
    return out


def _scan_exhaustive(ctx: FieldCtx, n: int, a_values: list[int]) -> _Partial:
    acc: _Partial = {}
    for batch in instance_batches(ctx, n, a_values):
        _merge(acc, _scan_batch(batch, ctx.q))
    return acc


def _scan_sample(ctx: FieldCtx, n: int, samples: int, seed: int) -> _Partial:
    rng = np.random.default_rng(seed)
    q = ctx.q
    acc: _Partial = {}
    for _ in range(samples):
        a = int(rng.integers(1, q))
        b = int(rng.integers(1, q))
        root, cand = _interior_candidates(ctx, a, b)
        interior = rng.choice(cand, size=n - 2, replace=False)
        P = np.concatenate([[0], interior, [root]]).astype(np.int64)[None, :]
        batch = InstanceBatch(a, b, P, _F_tables(ctx, a, b, P))
        _merge(acc, _scan_batch(batch, q))
    return acc


def _witness(ctx: FieldCtx, key: tuple) -> Witness:
    a, b, interior = key
    g = LinearMap(ctx.from_index(a), ctx.from_index(b))
    poles = PoleSet((ctx.zero,) + tuple(ctx.from_index(x) for x in interior) + (g.root,))
    return Witness(g, poles, decompose(g, poles))


def enumerate_spectrum(ctx: FieldCtx, n: int, mode: str = "exhaustive", *,
                       samples: int = 10_000, seed: int = 0,
                       budget: int = DEFAULT_BUDGET, workers: int = 1) -> SpectrumReport:
    """Attained value-set sizes of F_{q,n}, one least witness per size.

    ``budget`` caps table evaluations (instances times q).  With
    ``workers > 1`` the ``a`` axis is split across processes; the merge is a
    set union with least-key witnesses, so output does not depend on
    ``workers``.
    """
    _check_n(ctx, n)
    q = ctx.q
    if mode == "exhaustive":
        total = count_instances(q, n)
        if total * q > budget:
            raise BudgetExceeded(
                f"exhaustive F_{{{q},{n}}} needs {total * q} table evaluations "
                f"(budget {budget}); use sample mode")
        a_all = list(range(1, q))
        if workers > 1:
            chunks = [a_all[i::workers] for i in range(workers) if a_all[i::workers]]
            acc: _Partial = {}
            with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
                for part in pool.map(_scan_exhaustive, [ctx] * len(chunks),
                                     [n] * len(chunks), chunks):
                    _merge(acc, part)
        else:
            acc = _scan_exhaustive(ctx, n, a_all)
        counted = True
        seed_out = None
    elif mode == "sample":
        if samples * q > budget:
            raise BudgetExceeded(f"{samples} samples exceed the budget of {budget} evaluations")
        total = samples
        acc = _scan_sample(ctx, n, samples, seed)
        counted = False
        seed_out = seed
    else:
        raise ValueSetError(f"unknown mode {mode!r}")

    report = SpectrumReport(ctx, n, mode, seed_out, total)
    for size in sorted(acc):
        key, cnt = acc[size]
        report.entries[size] = SpectrumEntry(size, _witness(ctx, key), cnt if counted else None)
    return report
