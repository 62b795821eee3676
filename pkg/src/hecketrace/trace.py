"""Markov traces on the tower of type-B Hecke algebras.

A trace is fixed by the parameter z and the values y_k of the t'-chains
t'_0 t'_1 ... t'_{k-1}.  The engine evaluates with z and every y_k formal and
specializes afterwards, so a single memo serves every choice of parameters.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Mapping

from . import coxeter as cx
from .braid import BraidWord
from .coxeter import ClassLabel, SignedPerm
from .hecke import (HeckeElem, LevelError, MAX_TABLE_LEVEL, g_tail, mul, pi_map,
                    scrambled_t, split_table)
from .symbolic import ONE, Var, Z, RatFun, as_ratfun, substitute

__all__ = [
    "TraceParams", "TruncationError", "DEFAULT_MAX_Y", "class_value", "eval_trace",
    "eval_trace_word", "basis_trace", "block_profile", "chain_value",
    "geometric_specialization_check", "FORMAL",
]

DEFAULT_MAX_Y = 16


class TruncationError(ValueError):
    """A y-variable beyond the configured bound K would appear."""


@dataclass(frozen=True)
class TraceParams:
    """z and y_k specializations; unset entries stay formal."""

    z: RatFun | None = None
    y: Mapping[int, RatFun] = field(default_factory=dict)
    max_y: int = DEFAULT_MAX_Y

    def bindings(self) -> dict[Var, RatFun]:
        out = {Var.y(k): as_ratfun(v) for k, v in self.y.items()}
        if self.z is not None:
            out[Z] = as_ratfun(self.z)
        return out

    @classmethod
    def geometric(cls, y: RatFun, upto: int = DEFAULT_MAX_Y, **kw) -> "TraceParams":
        """The specialization y_k = y^k."""
        return cls(y={k: y ** k for k in range(1, upto + 1)}, **kw)

    def apply(self, value: RatFun) -> RatFun:
        _check_truncation(value, self.max_y)
        b = self.bindings()
        return substitute(value, b) if b else value


FORMAL = TraceParams()


def _check_truncation(value: RatFun, k_max: int):
    for v in value.num.variables():
        if v.is_y and v.y_index > k_max:
            raise TruncationError(f"y{v.y_index} exceeds the bound K={k_max}")


def block_profile(c: ClassLabel) -> tuple[int, int]:
    rep = cx.minimal_rep(c)
    return rep.a, rep.b


def class_value(c: ClassLabel, params: TraceParams = FORMAL) -> RatFun:
    """z^a y_b for the class, with y_0 = 1."""
    a, b = block_profile(c)
    if b > params.max_y:
        raise TruncationError(f"y{b} exceeds the bound K={params.max_y}")
    val = RatFun.var(Z, a) if a else ONE
    if b:
        val = val * RatFun.var(Var.y(b))
    return params.apply(val)


# -- the chain evaluator ---------------------------------------------------------
#
# chain_value(j, m, w) is tau(g_w t'_j t'_{j+1} ... t'_{j+m-1}) for w in W_j.
# Writing w = u r with r in R_j and g_r = sum a_{r'} r' (a_{r'} in H_{j-1}):
#   r' = 1          keeps the chain, now anchored at t'_{j-1};
#   r' = t'_{j-1}   extends the chain by one link;
#   r' = g_{j-1} v  contributes z and moves v in front of the prefix.

_memo: dict[tuple[int, int, SignedPerm], RatFun] = {}
_memo_lock = threading.RLock()


def _pairing(h: HeckeElem, j: int, m: int) -> RatFun:
    total = None
    for x, c in h.terms.items():
        v = chain_value(j, m, x)
        if not v.is_zero():
            term = c * v
            total = term if total is None else total + term
    return total if total is not None else RatFun(0)


def chain_value(j: int, m: int, w: SignedPerm) -> RatFun:
    key = (j, m, w)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if j == 0:
        val = RatFun.var(Var.y(m)) if m else ONE
    else:
        u, rep = cx.coset_decompose(w)
        gu = HeckeElem.basis(u)
        val = RatFun(0)
        for rp, a in split_table(j, rep).items():
            pre = mul(gu, a)
            if rp.kind == "one":
                val = val + _pairing(pre, j - 1, m)
            elif rp.kind == "t":
                val = val + _pairing(pre, j - 1, m + 1)
            else:
                moved = mul(g_tail(j, rp), pre)
                val = val + RatFun.var(Z) * _pairing(moved, j - 1, m)
    with _memo_lock:
        _memo.setdefault(key, val)
    return val


def basis_trace(w: SignedPerm) -> RatFun:
    """Formal trace of the basis element g_w."""
    return chain_value(len(w), 0, tuple(w))


def eval_trace(h: HeckeElem, params: TraceParams = FORMAL) -> RatFun:
    if h.level > MAX_TABLE_LEVEL:
        raise LevelError(f"trace evaluation is capped at level {MAX_TABLE_LEVEL}")
    return params.apply(_pairing(h, h.level, 0))


def eval_trace_word(w: BraidWord, params: TraceParams = FORMAL) -> RatFun:
    return eval_trace(pi_map(w), params)


def geometric_specialization_check(h: HeckeElem, y: RatFun, masks) -> bool:
    """tau(h t'_{n,*}) = y tau(h) under y_k = y^k, for every scramble mask given."""
    n = h.level
    params = TraceParams.geometric(y)
    base = y * eval_trace(h, params)
    up = h.embed(n + 1)
    for mask in masks:
        if mask.index != n:
            raise ValueError(f"mask index {mask.index} does not match level {n}")
        if eval_trace(mul(up, scrambled_t(mask, n + 1)), params) != base:
            return False
    return True
