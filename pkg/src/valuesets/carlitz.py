"""Carlitz chains ``P_n(c_0, ..., c_n; x)``.

A chain is the permutation

    x -> (...((c_0 x)^(q-2) + c_1)^(q-2) + ... + c_n)^(q-2)

of F_q.  Its convergent-style sequences

    alpha_k = c_{k-1} alpha_{k-1} + alpha_{k-2},  alpha_0 = 0, alpha_1 = c_0
    beta_k  = c_{k-1} beta_{k-1}  + beta_{k-2},   beta_0 = 1,  beta_1 = 0

give the pole set ``x_i = -beta_i / alpha_i`` and the linear map
``g(x) = (alpha_n x + beta_n) / beta_{n+1}`` that the chain agrees with away
from its poles.  :func:`decompose` runs the recursion backwards to recover
the chain from ``(g, poles)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    DegenerateDenominator,
    DuplicatePoles,
    InvalidChain,
    InvalidPoleSet,
    MixedFields,
    PoleAnchorMismatch,
    ZeroAlpha,
    ZeroBetaLast,
    ZeroCoefficient,
)
from .gf import FieldCtx, FieldElement, pow_qm2

__all__ = [
    "LinearMap",
    "PoleSet",
    "CarlitzChain",
    "RecursionTable",
    "ChainValidity",
    "EpsilonScalar",
    "DecompositionTrace",
    "eval_chain",
    "chain_table",
    "recursion_table",
    "validate_chain",
    "poles",
    "linear_part",
    "decompose",
    "decompose_with_trace",
]


@dataclass(frozen=True)
class LinearMap:
    """``g(x) = a x + b`` with ``a, b != 0``."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.ctx != self.b.ctx:
            raise MixedFields("a and b live in different fields")
        if not self.a or not self.b:
            raise ZeroCoefficient(f"g(x) = {self.a}x + {self.b} needs a, b != 0")

    @classmethod
    def of(cls, ctx: FieldCtx, a, b) -> "LinearMap":
        return cls(ctx(a), ctx(b))

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    @property
    def root(self) -> FieldElement:
        """``-b/a``, the mandatory last pole."""
        return -self.b / self.a

    def __call__(self, x: FieldElement) -> FieldElement:
        return self.a * x + self.b

    def to_json(self):
        return {"a": self.a.to_json(), "b": self.b.to_json()}

    def __str__(self):
        return f"{self.a}x + {self.b}"


@dataclass(frozen=True)
class PoleSet:
    """Ordered, pairwise distinct poles ``x_1 = 0, x_2, ..., x_n``."""

    x: tuple[FieldElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        if not self.x:
            raise InvalidPoleSet("empty pole set")
        if self.x[0]:
            raise PoleAnchorMismatch(f"x_1 must be 0, got {self.x[0]}")
        if len({e.value for e in self.x}) != len(self.x):
            raise DuplicatePoles("poles must be pairwise distinct: "
                                 + ",".join(map(str, self.x)))

    @classmethod
    def of(cls, ctx: FieldCtx, xs: Sequence) -> "PoleSet":
        return cls(tuple(ctx(v) for v in xs))

    def __len__(self):
        return len(self.x)

    def __iter__(self):
        return iter(self.x)

    def __getitem__(self, i):
        return self.x[i]

    def check_for(self, g: LinearMap) -> None:
        """Raise unless these poles are admissible for ``g``."""
        if len(self.x) < 2:
            raise InvalidPoleSet("need at least two poles (n >= 2)")
        if self.x[0].ctx != g.ctx:
            raise MixedFields("poles and g live in different fields")
        if self.x[-1] != g.root:
            raise PoleAnchorMismatch(f"x_n must be -b/a = {g.root}, got {self.x[-1]}")

    def to_json(self):
        return [e.to_json() for e in self.x]


@dataclass(frozen=True)
class CarlitzChain:
    ctx: FieldCtx
    c: tuple[FieldElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.ctx(v) for v in self.c))
        if len(self.c) < 3:
            raise InvalidChain("a chain needs constants c_0, ..., c_n with n >= 2")
        for i, ci in enumerate(self.c):
            if not ci:
                raise InvalidChain(f"c_i must be nonzero (c_{i} = 0)")

    @classmethod
    def of(cls, ctx: FieldCtx, cs: Sequence) -> "CarlitzChain":
        return cls(ctx, tuple(cs))

    @property
    def n(self) -> int:
        return len(self.c) - 1

    def __call__(self, delta: FieldElement) -> FieldElement:
        return eval_chain(self, delta)

    def to_json(self):
        return {"field": self.ctx.to_json(), "c": [e.to_json() for e in self.c]}

    def __str__(self):
        return f"P_{self.n}(" + ",".join(map(str, self.c)) + ";x)"


@dataclass(frozen=True)
class RecursionTable:
    alpha: tuple[FieldElement, ...]
    beta: tuple[FieldElement, ...]


@dataclass(frozen=True)
class ChainValidity:
    alpha_last_zero: bool
    alphas_nonzero: bool
    poles_distinct: bool

    @property
    def valid(self) -> bool:
        return self.alpha_last_zero and self.alphas_nonzero and self.poles_distinct

    def __bool__(self):
        return self.valid

    def reasons(self) -> list[str]:
        out = []
        if not self.alpha_last_zero:
            out.append("alpha_{n+1} != 0")
        if not self.alphas_nonzero:
            out.append("alpha_k = 0 for some 1 <= k <= n")
        if not self.poles_distinct:
            out.append("poles are not n distinct elements")
        return out


def eval_chain(chain: CarlitzChain, delta: FieldElement) -> FieldElement:
    ctx = chain.ctx
    t = ctx.mul(chain.c[0].value, ctx(delta).value)
    for ci in chain.c[1:]:
        t = ctx.add(ctx.qm2(t), ci.value)
    return ctx.from_index(ctx.qm2(t))


def chain_table(chain: CarlitzChain) -> tuple[FieldElement, ...]:
    """Values of the chain at every element, in :meth:`FieldCtx.elements` order."""
    return tuple(eval_chain(chain, d) for d in chain.ctx.elements())


def recursion_table(chain: CarlitzChain) -> RecursionTable:
    ctx = chain.ctx
    alpha = [ctx.zero, chain.c[0]]
    beta = [ctx.one, ctx.zero]
    for k in range(2, chain.n + 2):
        alpha.append(chain.c[k - 1] * alpha[k - 1] + alpha[k - 2])
        beta.append(chain.c[k - 1] * beta[k - 1] + beta[k - 2])
    return RecursionTable(tuple(alpha), tuple(beta))


def _raw_poles(chain: CarlitzChain, table: RecursionTable) -> list[FieldElement]:
    return [-table.beta[i] / table.alpha[i] for i in range(1, chain.n + 1)]


def validate_chain(chain: CarlitzChain) -> ChainValidity:
    t = recursion_table(chain)
    n = chain.n
    last_zero = not t.alpha[n + 1]
    nonzero = all(t.alpha[k] for k in range(1, n + 1))
    distinct = nonzero and len({x.value for x in _raw_poles(chain, t)}) == n
    return ChainValidity(last_zero, nonzero, distinct)


def poles(chain: CarlitzChain) -> PoleSet:
    t = recursion_table(chain)
    for k in range(1, chain.n + 1):
        if not t.alpha[k]:
            raise ZeroAlpha(f"alpha_{k} = 0; chain is not in the family")
    return PoleSet(tuple(_raw_poles(chain, t)))


def linear_part(chain: CarlitzChain) -> LinearMap:
    t = recursion_table(chain)
    n = chain.n
    if not t.beta[n + 1]:
        raise ZeroBetaLast("beta_{n+1} = 0")
    return LinearMap(t.alpha[n] / t.beta[n + 1], t.beta[n] / t.beta[n + 1])


class EpsilonScalar:
    """``coeff * eps`` for an unknown nonzero scalar ``eps``."""

    __slots__ = ("coeff",)

    def __init__(self, coeff: FieldElement):
        self.coeff = coeff

    def __add__(self, other: "EpsilonScalar") -> "EpsilonScalar":
        return EpsilonScalar(self.coeff + other.coeff)

    def __sub__(self, other: "EpsilonScalar") -> "EpsilonScalar":
        return EpsilonScalar(self.coeff - other.coeff)

    def scale(self, k: FieldElement) -> "EpsilonScalar":
        return EpsilonScalar(self.coeff * k)

    def __truediv__(self, other: "EpsilonScalar") -> FieldElement:
        if not other.coeff:
            raise DegenerateDenominator("division by 0*eps")
        return self.coeff / other.coeff

    def at(self, eps: FieldElement) -> FieldElement:
        return self.coeff * eps

    def __repr__(self):
        return f"{self.coeff}*eps"


@dataclass
class DecompositionTrace:
    """Intermediate values of :func:`decompose`, kept for auditing."""

    c_high: list[tuple[int, FieldElement]] = field(default_factory=list)  # (i, c_i), i = n..3
    alpha_eps: dict[int, FieldElement] = field(default_factory=dict)  # eps-coefficients
    beta_eps: dict[int, FieldElement] = field(default_factory=dict)
    epsilon: FieldElement | None = None
    c2: FieldElement | None = None
    alpha1: FieldElement | None = None
    c1: FieldElement | None = None
    c0: FieldElement | None = None

    def to_json(self):
        return {
            "c_high": [[i, c.to_json()] for i, c in self.c_high],
            "alpha_eps": {str(k): v.to_json() for k, v in sorted(self.alpha_eps.items())},
            "beta_eps": {str(k): v.to_json() for k, v in sorted(self.beta_eps.items())},
            "epsilon": self.epsilon.to_json(),
            "c2": self.c2.to_json(),
            "alpha1": self.alpha1.to_json(),
            "c1": self.c1.to_json(),
            "c0": self.c0.to_json(),
        }

    def lines(self) -> list[str]:
        out = [f"c_{i} = {c}" for i, c in self.c_high]
        out += [f"eps = {self.epsilon}", f"c_2 = {self.c2}",
                f"alpha_1 = {self.alpha1}", f"c_1 = {self.c1}", f"c_0 = {self.c0}"]
        return out


def decompose_with_trace(g: LinearMap, pole_set: PoleSet | Sequence
                         ) -> tuple[CarlitzChain, DecompositionTrace]:
    """Recover the chain agreeing with ``g`` modified at ``pole_set``.

    Seeds ``alpha_n = eps a``, ``beta_n = eps b``, ``alpha_{n+1} = 0``,
    ``beta_{n+1} = eps`` and walks the recursion down; the constants
    ``c_n, ..., c_3`` come out eps-free, and ``beta_2 = 1`` fixes eps.
    """
    ctx = g.ctx
    if not isinstance(pole_set, PoleSet):
        pole_set = PoleSet.of(ctx, pole_set)
    pole_set.check_for(g)
    n = len(pole_set)
    x = (None,) + pole_set.x  # 1-based

    zero = EpsilonScalar(ctx.zero)
    alpha: dict[int, EpsilonScalar] = {n + 1: zero, n: EpsilonScalar(g.a)}
    beta: dict[int, EpsilonScalar] = {n + 1: EpsilonScalar(ctx.one), n: EpsilonScalar(g.b)}
    c: dict[int, FieldElement] = {}
    trace = DecompositionTrace()

    for i in range(n, 2, -1):
        num = beta[i + 1] + alpha[i + 1].scale(x[i - 1])
        den = beta[i] + alpha[i].scale(x[i - 1])
        c[i] = num / den
        trace.c_high.append((i, c[i]))
        alpha[i - 1] = alpha[i + 1] - alpha[i].scale(c[i])
        beta[i - 1] = beta[i + 1] - beta[i].scale(c[i])

    trace.alpha_eps = {k: v.coeff for k, v in alpha.items()}
    trace.beta_eps = {k: v.coeff for k, v in beta.items()}
    if not beta[2].coeff:
        raise DegenerateDenominator("beta_2 vanishes identically; eps is undetermined")
    eps = ctx.one / beta[2].coeff
    c[2] = beta[3].at(eps)
    alpha1 = alpha[3].at(eps) - c[2] * alpha[2].at(eps)
    if not alpha1:
        raise DegenerateDenominator("alpha_1 = 0")
    c[1] = alpha[2].at(eps) / alpha1
    c[0] = alpha1
    trace.epsilon, trace.c2, trace.alpha1, trace.c1, trace.c0 = eps, c[2], alpha1, c[1], c[0]
    return CarlitzChain(ctx, tuple(c[i] for i in range(n + 1))), trace


def decompose(g: LinearMap, pole_set: PoleSet | Sequence) -> CarlitzChain:
    return decompose_with_trace(g, pole_set)[0]
