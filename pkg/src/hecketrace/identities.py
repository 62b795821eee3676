"""Commutation and block-conjugation identities, checked as Hecke equalities.

Each check builds both sides from letters with :func:`pi_letters` and
compares standard-basis expansions.  The ``*_cases`` generators enumerate
every admissible index tuple up to a level bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .hecke import HeckeElem, ScrambleMask, pi_letters, t_prime_letters

__all__ = [
    "IdentityCase", "commute_cases", "chain_swap_cases", "run_swap_cases",
    "block_cases", "all_lemma_cases", "check_case",
]

Letters = list[tuple[int, int]]


@dataclass(frozen=True)
class IdentityCase:
    """lhs == rhs in H_level; ``name`` says which identity and indices."""

    name: str
    level: int
    lhs: tuple
    rhs: tuple

    def sides(self) -> tuple[HeckeElem, HeckeElem]:
        return pi_letters(list(self.lhs), self.level), pi_letters(list(self.rhs), self.level)


def check_case(case: IdentityCase) -> bool:
    a, b = case.sides()
    return a == b


def _run(lo: int, hi: int) -> Letters:
    """s_lo s_{lo+1} ... s_hi (empty when hi < lo)."""
    return [(j, 1) for j in range(lo, hi + 1)]


def _down(hi: int, lo: int) -> Letters:
    return [(j, 1) for j in range(hi, lo - 1, -1)]


def commute_cases(max_level: int) -> Iterator[IdentityCase]:
    """g_i^{+-1} t'_m = t'_m g_i^{+-1} for i < m or i > m + 1."""
    for n in range(1, max_level + 1):
        for m in range(n):
            tm = t_prime_letters(m)
            for i in range(1, n):
                if m <= i <= m + 1:
                    continue
                for sign in (1, -1):
                    yield IdentityCase(f"commute(i={i},m={m},sign={sign})", n,
                                       tuple([(i, sign)] + tm), tuple(tm + [(i, sign)]))


def chain_swap_cases(max_level: int) -> Iterator[IdentityCase]:
    """t'_i t'_m = (t'_m, inverse at i+1 moved left) t'_i for i < m."""
    for n in range(1, max_level + 1):
        for m in range(n):
            for i in range(m):
                flipped = ScrambleMask(m, {i + 1}).letters()
                ti = t_prime_letters(i)
                yield IdentityCase(f"chain_swap(i={i},m={m})", n,
                                   tuple(ti + t_prime_letters(m)), tuple(flipped + ti))


def run_swap_cases(max_level: int) -> Iterator[IdentityCase]:
    """s_{m-1}...s_{m-k} t'_{m-k-1} t'_m = (t'_m, inverse at m moved left) s_{m-1}...s_{m-k} t'_{m-k-1}."""
    for n in range(1, max_level + 1):
        for m in range(1, n):
            for k in range(m):
                head = _down(m - 1, m - k) + t_prime_letters(m - k - 1)
                flipped = ScrambleMask(m, {m}).letters()
                yield IdentityCase(f"run_swap(k={k},m={m})", n,
                                   tuple(head + t_prime_letters(m)), tuple(flipped + head))


def _twist(i: int, k: int, m: int) -> Letters:
    out: Letters = []
    for g in range(k + 1):
        out += _down(i + m + 1 + g, i + 1 + g)
    return out


def block_cases(max_level: int) -> Iterator[IdentityCase]:
    """Conjugating adjacent signed blocks by a half twist: w y = y v."""
    for n in range(2, max_level + 1):
        for i in range(n):
            for k in range(n):
                for m in range(n):
                    if i + m + k + 2 != n:
                        continue
                    y = _twist(i, k, m)
                    # positive blocks on both sides
                    w = _run(i + 1, i + m) + _run(i + m + 2, i + m + k + 1)
                    v = _run(i + 1, i + k) + _run(i + k + 2, i + k + m + 1)
                    yield IdentityCase(f"block_pos(i={i},k={k},m={m})", n,
                                       tuple(w + y), tuple(y + v))
                    # a negative block moves to the front
                    w = _run(i + 1, i + m) + t_prime_letters(i + m + 1) + _run(i + m + 2, i + m + k + 1)
                    v = t_prime_letters(i) + _run(i + 1, i + k) + _run(i + k + 2, i + k + m + 1)
                    yield IdentityCase(f"block_neg(i={i},k={k},m={m})", n,
                                       tuple(w + y), tuple(y + v))
                    if m > k:
                        # two negative blocks; the second one comes back scrambled
                        w = (t_prime_letters(i) + _run(i + 1, i + m)
                             + t_prime_letters(i + m + 1) + _run(i + m + 2, i + m + k + 1))
                        scrambled = ScrambleMask(i + k + 1, set(range(i + 1, i + k + 1))).letters()
                        v = (t_prime_letters(i) + _run(i + 1, i + k)
                             + scrambled + _run(i + k + 2, i + k + m + 1))
                        yield IdentityCase(f"block_two_neg(i={i},k={k},m={m})", n,
                                           tuple(w + y), tuple(y + v))


def all_lemma_cases(max_level: int = 5) -> Iterator[IdentityCase]:
    yield from commute_cases(max_level)
    yield from chain_swap_cases(max_level)
    yield from run_swap_cases(max_level)
    yield from block_cases(max_level)
