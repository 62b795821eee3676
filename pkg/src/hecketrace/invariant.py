"""The normalized solid-torus link invariant X and its (x, r) form."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .braid import (BraidWord, conjugate, exponent_sum_s, markov_stabilize,
                    skein_site_triple)
from .symbolic import R, SCQ, SL, SQ, X, Z, Poly, RatFun, _strip, substitute
from .trace import FORMAL, TraceParams, eval_trace_word

__all__ = [
    "InvariantResult", "XRFormError", "normalization", "z_value", "invariant_X",
    "substitute_xr", "laurent_to_r", "verify_markov", "verify_conjugation",
    "verify_skein", "skein_sides",
]

_sq = RatFun.var(SQ)
_sQ = RatFun.var(SCQ)
_sl = RatFun.var(SL)
_q = RatFun.var(SQ, 2)
_lam = RatFun.var(SL, 2)


def z_value() -> RatFun:
    """z = (1 - q) / (q lambda - 1)."""
    return (1 - _q) / (_q * _lam - 1)


def normalization() -> RatFun:
    """-(1 - lambda q) / (sqrt(lambda) (1 - q))."""
    return -(1 - _lam * _q) / (_sl * (1 - _q))


class XRFormError(ArithmeticError):
    """The value does not have a monomial denominator in x and r."""

    def __init__(self, message: str, residual: RatFun | None = None):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class InvariantResult:
    value: RatFun
    strands: int
    exponent_sum: int
    xr_form: RatFun | None = None


def invariant_X(w: BraidWord, params: TraceParams = FORMAL) -> InvariantResult:
    tau = eval_trace_word(w, params)
    tau = substitute(tau, {Z: z_value()})
    n, e = w.strands, exponent_sum_s(w)
    value = normalization() ** (n - 1) * RatFun.var(SL, e) * tau
    return InvariantResult(value, n, e)


def laurent_to_r(p: Poly) -> Poly:
    """Rewrite a Laurent polynomial in sqrt(q) as a polynomial in r = sqrt(q) - 1/sqrt(q).

    Only elements fixed by sqrt(q) -> -1/sqrt(q) can be rewritten; anything
    else raises :class:`XRFormError` carrying the part that could not be
    absorbed.
    """
    rpow_cache: dict[int, Poly] = {0: Poly.const(1)}
    r_poly = Poly.var(SQ, 1) - Poly.var(SQ, -1)

    def r_in_sq(d: int) -> Poly:
        if d not in rpow_cache:
            rpow_cache[d] = r_in_sq(d - 1) * r_poly
        return rpow_cache[d]

    out = Poly()
    rest = p
    while not rest.is_zero():
        by_deg: dict[int, dict] = {}
        for m, c in rest.terms.items():
            e = m[0] if m else 0
            other = _strip([0] + list(m[1:])) if m else ()
            by_deg.setdefault(e, {})[other] = c
        hi, lo = max(by_deg), min(by_deg)
        if hi != -lo or hi < 0:
            raise XRFormError("residual sqrt(q) dependence", RatFun(rest))
        coeff = Poly(by_deg[hi])
        if hi == 0:
            out = out + coeff
            break
        out = out + coeff * Poly.var(R, hi)
        rest = rest - coeff * r_in_sq(hi)
    return out


def _sigma(p: Poly) -> Poly:
    """sqrt(q) -> -1/sqrt(q)."""
    out = {}
    for m, c in p.terms.items():
        e = m[0] if m else 0
        mm = (-e,) + tuple(m[1:]) if m else ()
        out[mm] = -c if e % 2 else c
    return Poly(out)


def substitute_xr(res: InvariantResult) -> InvariantResult:
    """Populate the (x, r) form: lambda = x^2/q, then absorb sqrt(q) into r."""
    f = substitute(res.value, {SL: RatFun.var(X) / _sq})
    num, den = f.num, f.den
    conj = _sigma(den)
    num_r = laurent_to_r(num * conj)
    den_r = laurent_to_r(den * conj)
    xr = RatFun(num_r, den_r)
    if not xr.den.is_one():
        raise XRFormError("denominator is not a monomial in x and r", xr)
    return replace(res, xr_form=xr)


# -- Markov moves, conjugation and skein relations ---------------------------------

def verify_markov(w: BraidWord, params: TraceParams = FORMAL) -> bool:
    base = invariant_X(w, params).value
    return all(invariant_X(markov_stabilize(w, s), params).value == base for s in (1, -1))


def verify_conjugation(w: BraidWord, beta: BraidWord, params: TraceParams = FORMAL) -> bool:
    return invariant_X(conjugate(w, beta), params).value == invariant_X(w, params).value


def skein_sides(w: BraidWord, pos: int, params: TraceParams = FORMAL) -> tuple[RatFun, RatFun]:
    """Left and right sides of the skein identity at the letter ``pos``."""
    plus, minus, zero = (invariant_X(v, params).value for v in skein_site_triple(w, pos))
    if w.letters[pos].is_t:
        a = _sQ
    else:
        a = _sq * _sl
    lhs = plus / a - a * minus
    p = _sQ if w.letters[pos].is_t else _sq
    rhs = (p - 1 / p) * zero
    return lhs, rhs


def verify_skein(w: BraidWord, pos: int, params: TraceParams = FORMAL) -> bool:
    lhs, rhs = skein_sides(w, pos, params)
    return lhs == rhs
