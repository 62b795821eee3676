"""Type-D restriction: the subalgebra generated by u = t g_1 t at Q = 1."""

from __future__ import annotations

import re

from .braid import BraidSyntaxError
from .hecke import HeckeElem, pi_letters
from .symbolic import SCQ, RatFun, substitute
from .trace import FORMAL, TraceParams, eval_trace

__all__ = ["at_Q_one", "parse_dword", "dword_to_hecke", "dtype_trace", "u_letters",
           "u_prime_letters", "u_element"]

_TOKEN = re.compile(r"(u|s(\d+))(?:\^(-?\d+))?")


def at_Q_one(h: HeckeElem) -> HeckeElem:
    return h.map_coeffs(lambda c: substitute(c, {SCQ: RatFun.const(1)}))


def u_letters(sign: int = 1) -> list[tuple[int, int]]:
    return [(0, sign), (1, sign), (0, sign)]


def u_prime_letters(i: int) -> list[tuple[int, int]]:
    """u'_i = g_i ... g_2 u g_1^-1 g_2^-1 ... g_i^-1, for i >= 1."""
    if i < 1:
        raise ValueError("u'_i is defined for i >= 1")
    return ([(k, 1) for k in range(i, 1, -1)] + u_letters()
            + [(k, -1) for k in range(1, i + 1)])


def parse_dword(text: str) -> tuple[list[tuple[int, int]], int]:
    """Parse letters u, s1, s2, ... (with exponents) into t/g letters and a level."""
    letters: list[tuple[int, int]] = []
    level = 1
    for tok in re.finditer(r"\S+", text):
        m = _TOKEN.fullmatch(tok.group())
        if not m:
            raise BraidSyntaxError(f"bad letter {tok.group()!r}", tok.start())
        exp = int(m.group(3)) if m.group(3) is not None else 1
        sign = 1 if exp > 0 else -1
        if m.group(1) == "u":
            letters += u_letters(sign) * abs(exp)
            level = max(level, 2)
        else:
            gen = int(m.group(2))
            if gen < 1:
                raise BraidSyntaxError("s-letters are indexed from 1", tok.start())
            letters += [(gen, sign)] * abs(exp)
            level = max(level, gen + 1)
    return letters, level


def dword_to_hecke(text: str, level: int | None = None) -> HeckeElem:
    letters, need = parse_dword(text)
    n = need if level is None else max(level, need)
    return at_Q_one(pi_letters(letters, n))


def u_element(n: int) -> HeckeElem:
    return at_Q_one(pi_letters(u_letters(), n))


def dtype_trace(text: str, params: TraceParams = FORMAL) -> RatFun:
    """Trace of a word in u and the s_i, through the B-type trace at Q = 1."""
    value = eval_trace(dword_to_hecke(text), params)
    return substitute(value, {SCQ: RatFun.const(1)})
