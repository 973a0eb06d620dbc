"""Explicit families with known value sets, and a brute-force checker.

Each generator returns a :class:`Construction`: either a chain or a
``(g, poles)`` pair, plus the :class:`PredictedProfile` that the family's
theorem claims.  :func:`verify` builds the instance, measures its
:class:`~valuesets.family.ValueProfile` and compares the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .carlitz import (
    CarlitzChain,
    LinearMap,
    PoleSet,
    chain_table,
    decompose,
    linear_part,
    poles as chain_poles,
    validate_chain,
)
from .errors import (
    BadCosetRep,
    BadParameter,
    CharacteristicTooSmall,
    CongruenceViolation,
    InvalidN,
    NoSuchRoot,
    NotAGenerator,
    OrderMismatch,
    ValueSetError,
    ZeroParameter,
)
from .family import ValueProfile, build_instance, is_complete_mapping, is_permutation
from .gf import FieldCtx, FieldElement, order

__all__ = [
    "PredictedProfile",
    "Construction",
    "ConstructionReport",
    "FAMILIES",
    "cor3_i",
    "cor3_ii",
    "cor5_i",
    "cor5_ii",
    "cor5_iii",
    "cor_small_n3",
    "thm7_i",
    "thm7_ii",
    "thm7_iii",
    "thm7_iv",
    "thm8_coset",
    "construct",
    "sweep",
    "verify",
    "roots",
]


@dataclass
class PredictedProfile:
    """What a family claims about ``F``.  ``None`` fields are not claimed."""

    source: str
    value_set: frozenset | None = None
    missing: frozenset | None = None  # value set is F_q minus these
    mult: dict = field(default_factory=dict)  # partial
    counts: dict = field(default_factory=dict)  # sparse v_i; unlisted i >= 2 are zero
    size: int | None = None
    min_size: int | None = None
    max_count: int | None = None
    max_count_at_most: int | None = None
    permutation: bool | None = None
    complete_mapping: bool | None = None

    def __post_init__(self):
        if self.value_set is not None and self.size is not None:
            assert len(self.value_set) == self.size, "explicit value set disagrees with size"

    def to_json(self) -> dict:
        def els(s):
            return None if s is None else [e.to_json() for e in sorted(s)]

        return {
            "source": self.source,
            "value_set": els(self.value_set),
            "missing": els(self.missing),
            "mult": [[k.to_json(), v] for k, v in sorted(self.mult.items())],
            "counts": {str(i): v for i, v in sorted(self.counts.items())},
            "size": self.size,
            "min_size": self.min_size,
            "max_count": self.max_count,
            "max_count_at_most": self.max_count_at_most,
            "permutation": self.permutation,
            "complete_mapping": self.complete_mapping,
        }

    @classmethod
    def from_json(cls, ctx: FieldCtx, obj: dict) -> "PredictedProfile":
        def els(s):
            return None if s is None else frozenset(ctx(e) for e in s)

        return cls(
            source=obj["source"],
            value_set=els(obj["value_set"]),
            missing=els(obj["missing"]),
            mult={ctx(k): v for k, v in obj["mult"]},
            counts={int(i): v for i, v in obj["counts"].items()},
            size=obj["size"],
            min_size=obj["min_size"],
            max_count=obj["max_count"],
            max_count_at_most=obj["max_count_at_most"],
            permutation=obj["permutation"],
            complete_mapping=obj["complete_mapping"],
        )


@dataclass
class Construction:
    family: str
    ctx: FieldCtx
    params: dict
    predicted: PredictedProfile
    chain: CarlitzChain | None = None
    g: LinearMap | None = None
    poles: PoleSet | None = None

    def params_json(self) -> dict:
        return {k: (v.to_json() if isinstance(v, FieldElement) else v)
                for k, v in self.params.items()}


@dataclass
class ConstructionReport:
    family: str
    ctx: FieldCtx
    params: dict
    g: LinearMap
    poles: PoleSet
    chain: CarlitzChain
    predicted: PredictedProfile
    observed: ValueProfile
    mismatches: list[str]

    @property
    def match(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "field": self.ctx.to_json(),
            "params": self.params,
            "g": self.g.to_json(),
            "poles": self.poles.to_json(),
            "chain": [c.to_json() for c in self.chain.c],
            "predicted": self.predicted.to_json(),
            "observed": self.observed.to_json(),
            "match": self.match,
            "mismatches": list(self.mismatches),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ConstructionReport":
        ctx = FieldCtx.from_json(obj["field"])
        ob = obj["observed"]
        mult = {ctx(k): v for k, v in ob["mult"]}
        top = ob["max_count"]
        counts = [0] * (top + 1)
        for i, v in ob["counts"].items():
            counts[int(i)] = v
        observed = ValueProfile(frozenset(mult), mult, tuple(counts), top)
        return cls(
            family=obj["family"],
            ctx=ctx,
            params=obj["params"],
            g=LinearMap(ctx(obj["g"]["a"]), ctx(obj["g"]["b"])),
            poles=PoleSet.of(ctx, obj["poles"]),
            chain=CarlitzChain.of(ctx, obj["chain"]),
            predicted=PredictedProfile.from_json(ctx, obj["predicted"]),
            observed=observed,
            mismatches=list(obj["mismatches"]),
        )


# -- helpers ------------------------------------------------------------------

def roots(ctx: FieldCtx, pred: Callable[[FieldElement], bool]) -> list[FieldElement]:
    """All elements satisfying ``pred``, by exhaustive scan."""
    return [x for x in ctx.elements() if pred(x)]


def _nonzero(ctx: FieldCtx, value, name: str) -> FieldElement:
    x = ctx(value)
    if not x:
        raise ZeroParameter(f"{name} must be nonzero")
    return x


def _check_n(n: int) -> int:
    n = int(n)
    if n < 2:
        raise InvalidN(f"n must be >= 2, got {n}")
    return n


# -- n = 2 ------------------------------------------------------------------

def cor3_i(ctx: FieldCtx, c) -> Construction:
    """``P_2(1/c^2, c, -1/c)``: value set ``{0, -c, -2c}``."""
    c = _nonzero(ctx, c, "c")
    q = ctx.q
    chain = CarlitzChain(ctx, (ctx.one / (c * c), c, -ctx.one / c))
    pred = PredictedProfile(
        source="cor3i",
        value_set=frozenset({ctx.zero, -c, -2 * c}),
        size=3,
        counts={0: q - 3, 1: 2, q - 2: 1},
    )
    return Construction("cor3i", ctx, {"c": c.to_json()}, pred, chain=chain)


def cor3_ii(ctx: FieldCtx, c) -> Construction:
    """``P_2(-1/c^2, c, -1/c)``: value set ``F_q`` minus ``{c, -c}``."""
    c = _nonzero(ctx, c, "c")
    q = ctx.q
    chain = CarlitzChain(ctx, (-ctx.one / (c * c), c, -ctx.one / c))
    pred = PredictedProfile(
        source="cor3ii",
        missing=frozenset({c, -c}),
        size=q - 2,
        counts={0: 2, 1: q - 3, 3: 1},
    )
    return Construction("cor3ii", ctx, {"c": c.to_json()}, pred, chain=chain)


# -- n = 3 ------------------------------------------------------------------

def _n3_chain(ctx: FieldCtx, c0: FieldElement, c: FieldElement, d: FieldElement) -> CarlitzChain:
    return CarlitzChain(ctx, (c0, c, d / c, -c / (d + 1)))


def _pick_root(ctx: FieldCtx, d, pred, what: str) -> FieldElement:
    if d is None:
        found = roots(ctx, pred)
        if not found:
            raise NoSuchRoot(f"no {what} in F_{ctx.q}")
        return found[0]
    d = ctx(d)
    if not pred(d):
        if not roots(ctx, pred):
            raise NoSuchRoot(f"no {what} in F_{ctx.q}")
        raise BadParameter(f"d = {d} is not a {what}")
    return d


def _is_cube_root(d: FieldElement) -> bool:
    return not (d * d + d + 1)


def _is_quarter(d: FieldElement) -> bool:
    return not ((d + 1) * (d + 1) + 1)


def cor5_i(ctx: FieldCtx, c, d=None) -> Construction:
    """q = 1 mod 3, d a primitive cube root of unity: F is a permutation."""
    if ctx.q % 3 != 1:
        raise CongruenceViolation(f"needs q = 1 mod 3, got q = {ctx.q}")
    c = _nonzero(ctx, c, "c")
    d = _pick_root(ctx, d, _is_cube_root, "root of d^2 + d + 1")
    q = ctx.q
    chain = _n3_chain(ctx, -ctx.one / (d + 1), c, d)
    pred = PredictedProfile(
        source="cor5i", size=q, counts={0: 0, 1: q}, max_count=1,
        permutation=True, complete_mapping=True,
    )
    return Construction("cor5i", ctx, {"c": c.to_json(), "d": d.to_json()}, pred, chain=chain)


def cor5_ii(ctx: FieldCtx, c, d=None) -> Construction:
    """q = 5 mod 12, (d+1)^2 = -1: two missing values, maximum count 3."""
    if ctx.q % 12 != 5:
        raise CongruenceViolation(f"needs q = 5 mod 12, got q = {ctx.q}")
    c = _nonzero(ctx, c, "c")
    d = _pick_root(ctx, d, _is_quarter, "solution of (d+1)^2 = -1")
    q = ctx.q
    chain = _n3_chain(ctx, -ctx.one / (d + 1), c, d)
    pred = PredictedProfile(
        source="cor5ii",
        missing=frozenset({d / c, (-d - 2) / c}),
        size=q - 2,
        mult={-ctx.one / c: 3},
        counts={0: 2, 1: q - 3, 3: 1},
        max_count=3,
    )
    return Construction("cor5ii", ctx, {"c": c.to_json(), "d": d.to_json()}, pred, chain=chain)


def cor5_iii(ctx: FieldCtx, c, d) -> Construction:
    """q = 11 mod 12: three missing values, counts (3, q-5, 1, 1)."""
    if ctx.q % 12 != 11:
        raise CongruenceViolation(f"needs q = 11 mod 12, got q = {ctx.q}")
    c = _nonzero(ctx, c, "c")
    d = ctx(d)
    if d in (-ctx.one, -ctx.one / 2, ctx.zero):
        raise BadParameter(f"d must avoid -1, -1/2 and 0, got {d}")
    q = ctx.q
    chain = _n3_chain(ctx, ctx.one / (d * (d + 1)), c, d)
    pred = PredictedProfile(
        source="cor5iii",
        missing=frozenset({d * (d + 1) / c, -(d + 1) * (d + 1) / c, -d * d / c}),
        size=q - 3,
        mult={ctx.zero: 3, (-d * d - d - 1) / c: 2},
        counts={0: 3, 1: q - 5, 2: 1, 3: 1},
        max_count=3,
    )
    return Construction("cor5iii", ctx, {"c": c.to_json(), "d": d.to_json()}, pred, chain=chain)


def cor_small_n3(ctx: FieldCtx, c, d) -> Construction:
    """Four-element value set ``{0, (d^2-1)/c, (d+1)d/c, (d+1)(2d+1)/c}``."""
    c = _nonzero(ctx, c, "c")
    d = ctx(d)
    # d = -1 is implicitly excluded: c_0 = -1/(d+1)^2
    if d in (-2 * ctx.one, -ctx.one / 2, ctx.zero, ctx.one, -ctx.one):
        raise BadParameter(f"d must avoid -2, -1/2, 0, 1 and -1, got {d}")
    q = ctx.q
    chain = _n3_chain(ctx, -ctx.one / ((d + 1) * (d + 1)), c, d)
    vs = frozenset({ctx.zero, (d * d - 1) / c, (d + 1) * d / c, (d + 1) * (2 * d + 1) / c})
    pred = PredictedProfile(
        source="cor6", value_set=vs, size=4, counts={0: q - 4, 1: 3, q - 3: 1},
    )
    return Construction("cor6", ctx, {"c": c.to_json(), "d": d.to_json()}, pred, chain=chain)


# -- general n ----------------------------------------------------------------

def thm7_i(ctx: FieldCtx, n: int) -> Construction:
    """a = -1, b = n(n-1)/2, poles at the triangular numbers: |V_F| = n + 1."""
    n = _check_n(n)
    if ctx.p <= n * (n + 1):
        raise CharacteristicTooSmall(f"needs p > n(n+1) = {n * (n + 1)}, got p = {ctx.p}")
    q = ctx.q
    b = ctx(n * (n - 1) // 2)
    g = LinearMap(-ctx.one, b)
    pls = PoleSet(tuple(ctx(i * (i - 1) // 2) for i in range(1, n + 1)))
    pred = PredictedProfile(
        source="thm7i",
        value_set=frozenset({ctx.zero} | {b + i for i in range(n)}),
        size=n + 1,
        counts={0: q - n - 1, 1: n, q - n: 1},
    )
    return Construction("thm7i", ctx, {"n": n}, pred, g=g, poles=pls)


def _geometric_poles(ctx: FieldCtx, n: int, a: FieldElement, b: FieldElement) -> PoleSet:
    # x_i = b * sum_{j=0}^{n-i} (-1/a)^{j+1}
    r = -ctx.one / a
    xs = []
    for i in range(1, n + 1):
        s, t = ctx.zero, r
        for _ in range(n - i + 1):
            s, t = s + t, t * r
        xs.append(b * s)
    return PoleSet(tuple(xs))


def thm7_ii(ctx: FieldCtx, n: int, a, b) -> Construction:
    """ord(-a) = n: |V_F| = q - n with only 0 repeated (n + 1 times)."""
    n = _check_n(n)
    q = ctx.q
    if (q - 1) % n:
        raise CongruenceViolation(f"needs q = 1 mod n, got q = {q}, n = {n}")
    a = _nonzero(ctx, a, "a")
    b = _nonzero(ctx, b, "b")
    if order(-a) != n:
        raise OrderMismatch(f"ord(-a) = {order(-a)}, need {n}")
    pred = PredictedProfile(
        source="thm7ii", size=q - n, mult={ctx.zero: n + 1},
        counts={0: n, 1: q - n - 1, n + 1: 1}, max_count=n + 1,
    )
    return Construction("thm7ii", ctx, {"n": n, "a": a.to_json(), "b": b.to_json()}, pred,
                        g=LinearMap(a, b), poles=_geometric_poles(ctx, n, a, b))


def thm7_iii(ctx: FieldCtx, n: int, a, b) -> Construction:
    """ord(a) = 2n: |V_F| >= q - n and maximum count at most 2."""
    n = _check_n(n)
    q = ctx.q
    if (q - 1) % (2 * n):
        raise CongruenceViolation(f"needs q = 1 mod 2n, got q = {q}, n = {n}")
    a = _nonzero(ctx, a, "a")
    b = _nonzero(ctx, b, "b")
    if order(a) != 2 * n:
        raise OrderMismatch(f"ord(a) = {order(a)}, need {2 * n}")
    pls = PoleSet(tuple((b * a ** (i - 1) - b) / (a + 1) for i in range(1, n + 1)))
    pred = PredictedProfile(source="thm7iii", min_size=q - n, max_count_at_most=2)
    return Construction("thm7iii", ctx, {"n": n, "a": a.to_json(), "b": b.to_json()}, pred,
                        g=LinearMap(a, b), poles=pls)


def thm7_iv(ctx: FieldCtx, n: int, b) -> Construction:
    """a = -1, poles 0, -b, ..., -(n-2)b, b: value set ``{0, b, nb}``."""
    n = _check_n(n)
    q = ctx.q
    # p = n - 1 would make x_{n-1} = (2-n)b collide with x_n = b
    if ctx.p <= n - 1 or n > q - 1:
        raise CharacteristicTooSmall(f"needs p >= n and n < q, got p = {ctx.p}, n = {n}")
    b = _nonzero(ctx, b, "b")
    pls = PoleSet(tuple((1 - i) * b for i in range(1, n)) + (b,))
    nb = n * b
    mult = {ctx.zero: n - 1, b: q - n}
    mult[nb] = mult.get(nb, 0) + 1
    pred = PredictedProfile(
        source="thm7iv", value_set=frozenset(mult), size=len(mult), mult=mult,
    )
    return Construction("thm7iv", ctx, {"n": n, "b": b.to_json()}, pred,
                        g=LinearMap(-ctx.one, b), poles=pls)


def thm8_coset(ctx: FieldCtx, alpha, c, n: int | None = None) -> Construction:
    """``U = <alpha>``, a = -1/alpha, b = -ac: value set ``F_q`` minus ``cU``."""
    alpha = ctx(alpha)
    if not alpha:
        raise NotAGenerator("alpha must be nonzero")
    k = order(alpha)
    if n is not None and k != int(n):
        raise NotAGenerator(f"alpha has order {k}, not {n}")
    if k < 2:
        raise NotAGenerator("alpha = 1 generates the trivial subgroup")
    c = ctx(c)
    if c in (ctx.zero, ctx.one):
        raise BadCosetRep("c must avoid 0 and 1")
    a = -ctx.one / alpha
    b = -a * c
    coset = frozenset(c * alpha ** j for j in range(k))
    pred = PredictedProfile(source="coset", missing=coset, size=ctx.q - k)
    return Construction("coset", ctx, {"alpha": alpha.to_json(), "c": c.to_json(), "n": k},
                        pred, g=LinearMap(a, b), poles=_geometric_poles(ctx, k, a, b))


FAMILIES: dict[str, Callable[..., Construction]] = {
    "cor3i": cor3_i,
    "cor3ii": cor3_ii,
    "cor5i": cor5_i,
    "cor5ii": cor5_ii,
    "cor5iii": cor5_iii,
    "cor6": cor_small_n3,
    "thm7i": thm7_i,
    "thm7ii": thm7_ii,
    "thm7iii": thm7_iii,
    "thm7iv": thm7_iv,
    "coset": thm8_coset,
}

# parameters each family accepts, in call order
FAMILY_PARAMS = {
    "cor3i": ("c",),
    "cor3ii": ("c",),
    "cor5i": ("c", "d"),
    "cor5ii": ("c", "d"),
    "cor5iii": ("c", "d"),
    "cor6": ("c", "d"),
    "thm7i": ("n",),
    "thm7ii": ("n", "a", "b"),
    "thm7iii": ("n", "a", "b"),
    "thm7iv": ("n", "b"),
    "coset": ("alpha", "c", "n"),
}


def construct(family: str, ctx: FieldCtx, **params) -> Construction:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueSetError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    names = FAMILY_PARAMS[family]
    extra = {k for k, v in params.items() if v is not None} - set(names)
    if extra:
        raise BadParameter(f"{family} does not take {sorted(extra)}")
    kwargs = {k: params.get(k) for k in names if params.get(k) is not None}
    try:
        return fn(ctx, **kwargs)
    except TypeError as exc:
        raise BadParameter(f"{family}: missing parameter ({exc})") from None


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def sweep(family: str, ctx: FieldCtx, *, n: int | None = None,
          only_b: bool = False, **fixed) -> Iterator[Construction]:
    """Every admissible parameter point of ``family`` over ``ctx``.

    With ``only_b`` the other parameters come from ``fixed`` (or default to
    the first admissible choice) and only ``b`` ranges over F_q*.
    """
    nz = ctx.nonzero()
    q = ctx.q
    if family in ("cor3i", "cor3ii"):
        for c in nz:
            yield FAMILIES[family](ctx, c)
    elif family in ("cor5i", "cor5ii"):
        if family == "cor5i":
            if q % 3 != 1:
                raise CongruenceViolation(f"needs q = 1 mod 3, got q = {q}")
            ds = roots(ctx, _is_cube_root)
        else:
            if q % 12 != 5:
                raise CongruenceViolation(f"needs q = 5 mod 12, got q = {q}")
            ds = roots(ctx, _is_quarter)
        for d in ds:
            for c in nz:
                yield FAMILIES[family](ctx, c, d)
    elif family in ("cor5iii", "cor6"):
        if family == "cor5iii":
            bad = {-ctx.one, -ctx.one / 2, ctx.zero}
        else:
            bad = {-2 * ctx.one, -ctx.one / 2, ctx.zero, ctx.one, -ctx.one}
        for d in ctx.elements():
            if d in bad:
                continue
            for c in nz:
                yield FAMILIES[family](ctx, c, d)
    elif family == "thm7i":
        ns = [n] if n is not None else [k for k in range(2, q) if k * (k + 1) < ctx.p]
        for k in ns:
            yield thm7_i(ctx, k)
    elif family in ("thm7ii", "thm7iii"):
        factor = 1 if family == "thm7ii" else 2
        ns = [n] if n is not None else [k for k in _divisors(q - 1)
                                        if k >= 2 and (q - 1) % (factor * k) == 0]
        for k in ns:
            if family == "thm7ii":
                avals = [a for a in nz if order(-a) == k]
            else:
                avals = [a for a in nz if order(a) == 2 * k]
            if only_b:
                avals = [ctx(fixed["a"])] if fixed.get("a") is not None else avals[:1]
            bvals = nz if (only_b or fixed.get("b") is None) else [ctx(fixed["b"])]
            for a in avals:
                for b in bvals:
                    yield FAMILIES[family](ctx, k, a, b)
    elif family == "thm7iv":
        ns = [n] if n is not None else [k for k in range(2, min(ctx.p, q - 1) + 1)]
        for k in ns:
            for b in nz:
                yield thm7_iv(ctx, k, b)
    elif family == "coset":
        for alpha in nz:
            k = order(alpha)
            if k < 2 or (n is not None and k != n):
                continue
            for c in nz:
                if c == ctx.one:
                    continue
                yield thm8_coset(ctx, alpha, c)
    else:
        raise ValueSetError(f"unknown family {family!r}")


def verify(con: Construction) -> ConstructionReport:
    """Build the instance behind ``con`` and compare it with the prediction."""
    ctx = con.ctx
    mismatches: list[str] = []
    if con.chain is not None:
        chain = con.chain
        validity = validate_chain(chain)
        if not validity:
            raise ValueSetError(f"{con.family}: chain {chain} is not in the family: "
                                + "; ".join(validity.reasons()))
        g, pls = linear_part(chain), chain_poles(chain)
        if con.g is not None and con.g != g:
            mismatches.append(f"linear part {g} != stated {con.g}")
    else:
        g, pls = con.g, con.poles
        chain = decompose(g, pls)
        if not validate_chain(chain):
            mismatches.append(f"decomposed chain {chain} is not family-valid")
    inst = build_instance(ctx, g, pls)
    if chain_table(chain) != inst.f_table:
        mismatches.append("chain evaluation disagrees with the modified linear map")
    obs = inst.profile
    pred = con.predicted

    def fmt(s):
        return "{" + ",".join(map(str, sorted(s))) + "}"

    if pred.value_set is not None and pred.value_set != obs.values:
        mismatches.append(f"value set {fmt(obs.values)} != predicted {fmt(pred.value_set)}")
    if pred.missing is not None:
        missing = frozenset(ctx.elements()) - obs.values
        if missing != pred.missing:
            mismatches.append(f"missing values {fmt(missing)} != predicted {fmt(pred.missing)}")
    for v, m in pred.mult.items():
        if obs.mult.get(v, 0) != m:
            mismatches.append(f"m({v}) = {obs.mult.get(v, 0)} != predicted {m}")
    if pred.counts:
        want = {i: v for i, v in pred.counts.items() if v}
        got = {i: v for i, v in enumerate(obs.counts) if v}
        if want != got:
            mismatches.append(f"counts {obs.render_counts()} != predicted "
                              + "(" + ", ".join(f"v_{i}={v}" for i, v in
                                               sorted(pred.counts.items())) + ")")
    if pred.size is not None and obs.size != pred.size:
        mismatches.append(f"|V_F| = {obs.size} != predicted {pred.size}")
    if pred.min_size is not None and obs.size < pred.min_size:
        mismatches.append(f"|V_F| = {obs.size} < predicted lower bound {pred.min_size}")
    if pred.max_count is not None and obs.max_count != pred.max_count:
        mismatches.append(f"max count {obs.max_count} != predicted {pred.max_count}")
    if pred.max_count_at_most is not None and obs.max_count > pred.max_count_at_most:
        mismatches.append(f"max count {obs.max_count} > predicted bound {pred.max_count_at_most}")
    if pred.permutation is not None and is_permutation(inst.F_table) != pred.permutation:
        mismatches.append(f"F permutation: {not pred.permutation}, predicted {pred.permutation}")
    if pred.complete_mapping is not None and is_complete_mapping(inst) != pred.complete_mapping:
        mismatches.append(f"complete mapping: {not pred.complete_mapping}, "
                          f"predicted {pred.complete_mapping}")
    return ConstructionReport(con.family, ctx, con.params_json(), g, pls, chain, pred, obs,
                              mismatches)
