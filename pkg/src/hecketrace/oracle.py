"""Independent trace oracle by exact linear algebra.

At a rational point (q, Q) the values tau(g_w), w in W_n, are the unknowns.
They are pinned by the trace property against every generator together with
one class value z^a y_b per conjugacy class, and solved over Q with formal
right-hand sides.  Nothing here touches the recursive evaluator.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import coxeter as cx
from .hecke import HeckeElem, mul_gen, pi_letters, t_prime_letters
from .symbolic import SCQ, SQ, Poly, RatFun, Var, Z

__all__ = ["OracleError", "specialize_qQ", "class_element", "oracle_trace_table",
           "MAX_ORACLE_LEVEL"]

MAX_ORACLE_LEVEL = 3


class OracleError(ArithmeticError):
    """The linear system is singular or inconsistent."""


def _spec_poly(p: Poly, q: Fraction, Q: Fraction) -> Poly:
    out = {}
    for m, c in p.terms.items():
        e_q = m[SQ.index] if len(m) > SQ.index else 0
        e_Q = m[SCQ.index] if len(m) > SCQ.index else 0
        if e_q % 2 or e_Q % 2:
            raise ValueError("half-integer power of q or Q cannot be specialized at a rational point")
        rest = [0 if i <= SCQ.index else e for i, e in enumerate(m)]
        val = Fraction(c) * q ** (e_q // 2) * Q ** (e_Q // 2)
        key = tuple(rest)
        out[key] = out.get(key, 0) + val
    return Poly(out)


def specialize_qQ(f: RatFun, q, Q) -> RatFun:
    """Evaluate q and Q at rationals, leaving every other variable formal."""
    q, Q = Fraction(q), Fraction(Q)
    return RatFun(_spec_poly(f.num, q, Q), _spec_poly(f.den, q, Q))


def class_element(c: cx.ClassLabel) -> HeckeElem:
    """The D-form product attached to a class: its trace is z^a y_b."""
    rep = cx.minimal_rep(c)
    letters = []
    for i, kind in enumerate(rep.dform, 1):
        if kind == "g":
            letters.append((i - 1, 1))
        elif kind == "t":
            letters += t_prime_letters(i - 1)
    return pi_letters(letters, rep.n)


def _class_monomial(c: cx.ClassLabel) -> tuple[int, int]:
    rep = cx.minimal_rep(c)
    return rep.a, rep.b


def _row(h: HeckeElem, index: dict, q, Q) -> dict[int, Fraction]:
    row = {}
    for w, coeff in h.terms.items():
        val = specialize_qQ(coeff, q, Q)
        if not val.is_constant():
            raise ValueError(f"coefficient {coeff} depends on more than q and Q")
        row[index[w]] = row.get(index[w], 0) + val.constant()
    return row


def oracle_trace_table(n: int, q_point, Q_point, max_level: int = MAX_ORACLE_LEVEL) -> dict[cx.SignedPerm, RatFun]:
    """tau(g_w) for all w in W_n as combinations of z^a y_b, at rational (q, Q)."""
    if n > max_level:
        raise ValueError(f"the oracle is capped at level {max_level}")
    q, Q = Fraction(q_point), Fraction(Q_point)
    if q == 0 or Q == 0:
        raise ValueError("q and Q must be nonzero")
    group = cx.enumerate_group(n)
    index = {w: i for i, w in enumerate(group)}
    classes = cx.conjugacy_classes(n)
    rhs_keys = sorted({_class_monomial(c) for c in classes})
    rhs_index = {k: i for i, k in enumerate(rhs_keys)}
    N, K = len(group), len(rhs_keys)

    rows: list[tuple[dict, dict]] = []
    for w in group:
        gw = HeckeElem.basis(w)
        for s in range(n):
            diff = mul_gen(gw, s, 1, "left") - mul_gen(gw, s, 1, "right")
            r = _row(diff, index, q, Q)
            if any(r.values()):
                rows.append((r, {}))
    for c in classes:
        rows.append((_row(class_element(c), index, q, Q), {rhs_index[_class_monomial(c)]: 1}))

    dense = []
    for lhs, rhs in rows:
        line = [QQ(0)] * (N + K)
        for i, v in lhs.items():
            line[i] = QQ(v.numerator, v.denominator)
        for i, v in rhs.items():
            line[N + i] = QQ(v)
        dense.append(line)
    M = DomainMatrix(dense, (len(dense), N + K), QQ)
    A = M[:, :N]
    if A.rank() != N:
        raise OracleError(f"trace system at level {n} has rank {A.rank()} < {N}")
    R, pivots = M.rref()
    if any(p >= N for p in pivots):
        raise OracleError("trace system is inconsistent")
    R = R.to_Matrix()

    def formal(k: tuple[int, int]) -> RatFun:
        a, b = k
        f = RatFun.var(Z, a) if a else RatFun.const(1)
        return f * RatFun.var(Var.y(b)) if b else f

    basis = [formal(k) for k in rhs_keys]
    table = {}
    for row_i, col in enumerate(pivots):
        val = RatFun.const(0)
        for j in range(K):
            entry = R[row_i, N + j]
            if entry != 0:
                val = val + basis[j] * Fraction(int(entry.p), int(entry.q))
        table[group[col]] = val
    return table
