"""Randomized and exhaustive verification suites shared by the CLI and tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import coxeter as cx
from .braid import conjugate, format_word, markov_stabilize, random_word
from .dtype import at_Q_one, dtype_trace, u_element, u_prime_letters
from .hecke import HeckeElem, mul, mul_gen, pi_letters, t_prime, t_prime_letters
from .identities import all_lemma_cases, check_case
from .invariant import invariant_X, skein_sides
from .oracle import oracle_trace_table, specialize_qQ
from .symbolic import SCQ, SQ, RatFun, Var, Z
from .trace import basis_trace, eval_trace

__all__ = [
    "SuiteReport", "random_hecke", "random_point", "markov_suite", "conjugation_suite",
    "skein_suite", "axioms_suite", "lemma_suite", "dtype_suite", "SUITES",
    "STRANDS_MAX", "LEN_MAX",
]

STRANDS_MAX = 4
LEN_MAX = 10


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, detail=None):
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(detail() if callable(detail) else str(detail))

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        return f"{self.name}: {self.passed}/{self.total} pass"


def random_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    """A rational (q, Q) away from 0 and 1."""
    def pick():
        while True:
            v = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
            if v not in (0, 1, -1):
                return v
    return pick(), pick()


def random_hecke(rng: random.Random, n: int, terms: int = 3) -> HeckeElem:
    """Small random combination of basis elements with Laurent coefficients in q, Q."""
    group = cx.enumerate_group(n)
    out = {}
    for _ in range(rng.randint(1, terms)):
        w = rng.choice(group)
        c = RatFun.monomial({SQ: 2 * rng.randint(-1, 1), SCQ: 2 * rng.randint(-1, 1)},
                            rng.choice([-3, -2, -1, 1, 2, 3]))
        out[w] = out.get(w, RatFun(0)) + c
    return HeckeElem(n, out)


def markov_suite(count: int = 200, seed: int = 0) -> SuiteReport:
    """X(w) = X(w s_n) = X(w s_n^-1) on random words."""
    rng = random.Random(seed)
    rep = SuiteReport("markov")
    for _ in range(count):
        w = random_word(rng, STRANDS_MAX, LEN_MAX)
        base = invariant_X(w).value
        vals = {sign: invariant_X(markov_stabilize(w, sign)).value for sign in (1, -1)}
        rep.record(all(v == base for v in vals.values()),
                   lambda: f"word {format_word(w)!r} (strands {w.strands}): X = {base}, "
                           f"after s_n: {vals[1]}, after s_n^-1: {vals[-1]}")
    return rep


def conjugation_suite(count: int = 200, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("conj")
    for _ in range(count):
        w = random_word(rng, STRANDS_MAX, LEN_MAX)
        beta = random_word(rng, w.strands, LEN_MAX)
        a, b = invariant_X(w).value, invariant_X(conjugate(w, beta)).value
        rep.record(a == b, lambda: f"word {format_word(w)!r} conjugator "
                                   f"{format_word(beta)!r}: {a} != {b}")
    return rep


def skein_suite(count: int = 100, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("skein")
    while rep.total < count:
        w = random_word(rng, STRANDS_MAX, LEN_MAX)
        if not w.letters:
            continue
        pos = rng.randrange(len(w.letters))
        lhs, rhs = skein_sides(w, pos)
        rep.record(lhs == rhs, lambda: f"word {format_word(w)!r} site {pos}: {lhs} != {rhs}")
    return rep


def axioms_suite(n: int = 3, seed: int = 0, count: int = 100, points: int = 3) -> SuiteReport:
    """Trace axioms at levels up to n, plus oracle agreement at random points."""
    if not 1 <= n <= 4:
        raise ValueError("axioms suite supports 1 <= n <= 4")
    rng = random.Random(seed)
    rep = SuiteReport("axioms")
    z = RatFun.var(Z)
    rep.record(eval_trace(HeckeElem.one(n)) == 1, "tau(1) != 1")
    for _ in range(count):
        level = rng.randint(1, n)
        h = random_hecke(rng, level)
        lhs = eval_trace(mul_gen(h.embed(level + 1), level))
        rhs = z * eval_trace(h)
        rep.record(lhs == rhs, lambda: f"Markov rule fails for {h}")
    for level in range(1, min(n, 3) + 1):
        for w in cx.enumerate_group(level):
            g = HeckeElem.basis(w)
            for s in range(level):
                a = eval_trace(mul_gen(g, s, 1, "left"))
                b = eval_trace(mul_gen(g, s, 1, "right"))
                rep.record(a == b, lambda: f"trace property fails for w={w}, generator {s}")
    for k in range(1, n + 1):
        letters = [x for i in range(k) for x in t_prime_letters(i)]
        val = eval_trace(pi_letters(letters, k))
        rep.record(val == RatFun.var(Var.y(k)), lambda: f"chain of length {k} gives {val}")
    level = min(n, 3)
    for _ in range(points):
        q, Q = random_point(rng)
        table = oracle_trace_table(level, q, Q)
        for w in cx.enumerate_group(level):
            mine = specialize_qQ(basis_trace(w), q, Q)
            rep.record(mine == table[w],
                       lambda: f"oracle mismatch at w={w}, (q,Q)=({q},{Q}): {mine} vs {table[w]}")
    return rep


def lemma_suite(max_level: int = 5) -> SuiteReport:
    rep = SuiteReport("lemmas")
    for case in all_lemma_cases(max_level):
        rep.record(check_case(case), case.name)
    return rep


def dtype_suite(max_index: int = 3) -> SuiteReport:
    rep = SuiteReport("dtype")
    q = RatFun.var(SQ, 2)
    u = u_element(2)
    lhs = at_Q_one(u * u)
    rhs = u.scale(q - 1) + HeckeElem.one(2).scale(q)
    rep.record(lhs == rhs, "u^2 != (q-1)u + q")
    for i in range(1, max_index + 1):
        n = i + 1
        a = at_Q_one(pi_letters(u_prime_letters(i), n))
        b = at_Q_one(mul(pi_letters([(0, 1)], n), t_prime(i, n)))
        rep.record(a == b, f"u'_{i} != t t'_{i}")
    val = dtype_trace("s1")
    rep.record(val == RatFun.var(Z), f"tau(s1) = {val}, expected z")
    rel = dtype_trace("u u") - (q - 1) * dtype_trace("u") - q
    rep.record(rel.is_zero(), f"tau(u^2 - (q-1)u - q) = {rel}")
    return rep


SUITES = {
    "markov": markov_suite,
    "conj": conjugation_suite,
    "skein": skein_suite,
    "axioms": axioms_suite,
    "lemmas": lemma_suite,
    "dtype": dtype_suite,
}
