"""Averaged cocycles on the kernel and the evaluation pairing.

The stage: fix one y-generator and two distinct non-y generators a, b.
Words that die under delete_y project to finite integer combinations of
basis symbols y^v, one per point v of the (x, z) exponent lattice; the
projection of f(s) s^-1 is the invariant I_s(f).  On the subgroup L of
kernel elements fixing the chosen y exactly up to conjugation depth zero
(jprime_y = 0), picking off the coefficient at the lattice point rA gives
a functional alpha_r, whose lattice translates combine into the averaged
cochain zeta_r.  Everything is exact integer arithmetic; all the infinite
sums collapse to finite ones over explicitly computed supports.

Conventions recorded in PairingContext: the section sigma multiplies the
conjugation generators in the fixed order x_1 ... x_n z_1 ... z_l, and
per-(element, lattice point) conjugated projections are cached on the
context, keyed by the automorphism's image table.
"""

from __future__ import annotations

from .freegroup import Signature, Word, delete_y, gen_word, invert, multiply
from .automorphism import (
    NamedAut,
    apply,
    c_name,
    compose,
    gen_aut,
    identity,
    inverse,
    is_in_autfb_prime,
    is_in_kernel,
    m_name,
    power,
)
from .abelianization import johnson_y


class FormalSum:
    """Finite integer combination of lattice basis symbols y^v."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {v: c for v, c in (terms or {}).items() if c}

    @classmethod
    def point(cls, v, c=1):
        return cls({tuple(v): c})

    def coeff(self, v):
        return self.terms.get(tuple(v), 0)

    def support(self):
        return frozenset(self.terms)

    def shifted(self, d):
        return FormalSum(
            {tuple(a + b for a, b in zip(v, d)): c for v, c in self.terms.items()}
        )

    def __add__(self, other):
        out = dict(self.terms)
        for v, c in other.terms.items():
            out[v] = out.get(v, 0) + c
        return FormalSum(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for v, c in other.terms.items():
            out[v] = out.get(v, 0) - c
        return FormalSum(out)

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "FormalSum(0)"
        parts = [f"{c}*y^{v}" for v, c in sorted(self.terms.items())]
        return "FormalSum(" + " + ".join(parts) + ")"


class PairingContext:
    """Chosen y, distinguished lattice directions A and B, and caches."""

    def __init__(self, sig: Signature, y: int, a: int, b: int):
        if sig.k < 1:
            raise ValueError("needs at least one y-generator")
        if sig.n + sig.l < 2:
            raise ValueError("needs at least two non-y generators")
        if sig.klass(y) != "y":
            raise ValueError(f"{y} is not a y-generator code")
        for g in (a, b):
            if sig.klass(g) == "y":
                raise ValueError(f"{g} is not an x- or z-generator code")
        if a == b:
            raise ValueError("the two distinguished generators must differ")
        self.sig = sig
        self.y = y
        self.a = a
        self.b = b
        self.order = tuple(list(sig.x_gens()) + list(sig.z_gens()))
        self._index = {g: i for i, g in enumerate(self.order)}
        self.A = self.unit(a)
        self.B = self.unit(b)
        self._sigma_cache = {}
        self._twist_cache = {}

    def unit(self, g, c=1):
        v = [0] * len(self.order)
        v[self._index[g]] = c
        return tuple(v)

    @property
    def zero(self):
        return (0,) * len(self.order)

    def scale(self, r, v):
        return tuple(r * c for c in v)


def ny_project(ctx: PairingContext, u: Word) -> FormalSum:
    """Project a word with trivial y-free part onto the y^v basis.

    One scan: non-y letters advance the running lattice prefix, each
    occurrence of the chosen y contributes its sign at the current
    prefix, and the remaining y-generators contribute nothing.
    """
    sig = ctx.sig
    if bool(delete_y(u)):
        raise ValueError("word survives deleting the y-generators")
    prefix = [0] * len(ctx.order)
    terms = {}
    for g in u.letters:
        base = abs(g)
        e = 1 if g > 0 else -1
        if sig.klass(base) == "y":
            if base == ctx.y:
                v = tuple(prefix)
                terms[v] = terms.get(v, 0) + e
        else:
            prefix[ctx._index[base]] += e
    return FormalSum(terms)


def _require_kernel(f):
    if not is_in_kernel(f):
        raise ValueError("automorphism is not in the kernel")


def i_s(ctx: PairingContext, f: NamedAut, s: int) -> FormalSum:
    """Projection of f(s) s^-1; s ranges over the x- and z-generators."""
    _require_kernel(f)
    if s not in ctx._index:
        raise ValueError(f"{s} is not an x- or z-generator code")
    sw = gen_word(ctx.sig, s)
    return ny_project(ctx, multiply(apply(f, sw), invert(sw)))


def jprime_y(ctx: PairingContext, f: NamedAut):
    """Lattice point recording how f conjugates the chosen y."""
    return tuple(johnson_y(ctx.sig, f, ctx.y))


def is_in_l(ctx: PairingContext, f: NamedAut) -> bool:
    return jprime_y(ctx, f) == ctx.zero


def sigma(ctx: PairingContext, x) -> NamedAut:
    """Section of jprime_y: the ordered product of C[y,s]^{x_s}."""
    x = tuple(x)
    cached = ctx._sigma_cache.get(x)
    if cached is None:
        acc = identity(ctx.sig)
        for g, exp in zip(ctx.order, x):
            if exp:
                acc = compose(acc, power(gen_aut(ctx.sig, c_name(ctx.y, g)), exp))
        ctx._sigma_cache[x] = cached = acc
    return cached


def hat(ctx: PairingContext, g: NamedAut) -> NamedAut:
    """The section applied to g's own jprime_y value."""
    _require_kernel(g)
    return sigma(ctx, jprime_y(ctx, g))


def _drop_to_l(ctx, g):
    return compose(g, inverse(hat(ctx, g)))


def _require_l(ctx, f):
    if not is_in_l(ctx, f):
        raise ValueError("automorphism moves the chosen y-generator")


def alpha(ctx: PairingContext, r: int, f: NamedAut) -> int:
    """Coefficient at the lattice point rA of the b-invariant."""
    _require_l(ctx, f)
    return i_s(ctx, f, ctx.b).coeff(ctx.scale(r, ctx.A))


def _twisted_i_b(ctx, f, x):
    """I_b of the sigma(x)-transport of f, cached per (image table, x).

    The transport is sigma(x) o f o sigma(x)^-1, which translates the
    projection's support by +x; evaluating alpha after it realizes the
    lattice-translated functionals.
    """
    key = (f.key(), x)
    cached = ctx._twist_cache.get(key)
    if cached is None:
        s = sigma(ctx, x)
        conj = compose(compose(s, f), inverse(s))
        cached = i_s(ctx, conj, ctx.b)
        ctx._twist_cache[key] = cached
    return cached


def alpha_twisted(ctx: PairingContext, x, r: int, f: NamedAut) -> int:
    """The lattice translate of alpha: evaluate on the sigma(x) transport."""
    _require_l(ctx, f)
    return _twisted_i_b(ctx, f, tuple(x)).coeff(ctx.scale(r, ctx.A))


def support_of_twist(ctx: PairingContext, r: int, f: NamedAut):
    """The finitely many x with a chance of a nonzero twisted value."""
    _require_l(ctx, f)
    rA = ctx.scale(r, ctx.A)
    return frozenset(
        tuple(p - q for p, q in zip(rA, v)) for v in i_s(ctx, f, ctx.b).support()
    )


def kappa_eval(ctx: PairingContext, r: int, g0, g1, g2) -> int:
    """Difference-product cochain, arguments dropped into L by hats."""
    d0, d1, d2 = (_drop_to_l(ctx, g) for g in (g0, g1, g2))
    return (alpha(ctx, r, d1) - alpha(ctx, r, d0)) * (
        alpha(ctx, 0, d2) - alpha(ctx, 0, d1)
    )


def zeta_eval(ctx: PairingContext, r: int, g0, g1, g2) -> int:
    """Sum of all lattice translates of kappa; finite by support bounds."""
    d0, d1, d2 = (_drop_to_l(ctx, g) for g in (g0, g1, g2))
    xs = (
        support_of_twist(ctx, r, d0)
        | support_of_twist(ctx, r, d1)
        | support_of_twist(ctx, 0, d1)
        | support_of_twist(ctx, 0, d2)
    )
    rA = ctx.scale(r, ctx.A)
    zero = ctx.zero
    total = 0
    for x in xs:
        t1 = _twisted_i_b(ctx, d1, x).coeff(rA) - _twisted_i_b(ctx, d0, x).coeff(rA)
        if not t1:
            continue
        t2 = _twisted_i_b(ctx, d2, x).coeff(zero) - _twisted_i_b(ctx, d1, x).coeff(zero)
        total += t1 * t2
    return total


def mu_witnesses(ctx: PairingContext, m: int):
    """The commuting pair (f_m, g) generating the m-th abelian cycle."""
    cya = gen_aut(ctx.sig, c_name(ctx.y, ctx.a))
    cay = gen_aut(ctx.sig, c_name(ctx.a, ctx.y))
    cby = gen_aut(ctx.sig, c_name(ctx.b, ctx.y))
    f_m = compose(compose(power(cya, m), cby), power(cya, -m))
    g = compose(cay, cby)
    return f_m, g


def pairing(ctx: PairingContext, r: int, m: int) -> int:
    """Evaluation of the r-th averaged class on the m-th abelian cycle."""
    if r < 1 or m < 1:
        raise ValueError("both indices must be positive")
    f_m, g = mu_witnesses(ctx, m)
    for f in (f_m, g):
        _require_l(ctx, f)
    xs = (
        support_of_twist(ctx, r, f_m)
        | support_of_twist(ctx, 0, g)
        | support_of_twist(ctx, r, g)
        | support_of_twist(ctx, 0, f_m)
    )
    rA = ctx.scale(r, ctx.A)
    zero = ctx.zero
    total = 0
    for x in xs:
        total += _twisted_i_b(ctx, f_m, x).coeff(rA) * _twisted_i_b(ctx, g, x).coeff(
            zero
        ) - _twisted_i_b(ctx, g, x).coeff(rA) * _twisted_i_b(ctx, f_m, x).coeff(zero)
    return total


def independence_witness(ctx: PairingContext, m: int, s: int, t: int):
    """The conjugated multiplier h_m and its s-invariant, one basis point.

    h_m multiplies s by a y conjugated t-deep; its invariant is the single
    basis symbol at m times the t-direction, so distinct m give
    independent images.
    """
    sig = ctx.sig
    if sig.klass(s) != "x":
        raise ValueError("the multiplied generator must be an x-generator")
    if t not in ctx._index:
        raise ValueError("the conjugating generator must be an x- or z-generator")
    if s == t:
        raise ValueError("the two generators must differ")
    if m < 0:
        raise ValueError("nonnegative power expected")
    cyt = gen_aut(sig, c_name(ctx.y, t))
    h_m = compose(
        compose(power(cyt, m), gen_aut(sig, m_name(s, 1, ctx.y))), power(cyt, -m)
    )
    if not is_in_autfb_prime(h_m):
        raise AssertionError("witness fails to fix the boundary letters")
    value = i_s(ctx, h_m, s)
    expected = FormalSum.point(ctx.unit(t, m))
    if value != expected:
        raise AssertionError("witness invariant is not the expected basis point")
    return h_m, value
