"""The Iwahori-Hecke algebra H_n of type B_n in its standard basis {g_w}.

Relations: t^2 = (Q-1) t + Q and g_i^2 = (q-1) g_i + q.  Elements are
immutable maps from signed permutations to :class:`RatFun` coefficients.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import coxeter as cx
from .braid import BraidWord
from .coxeter import CosetRep, SignedPerm
from .symbolic import ONE, SCQ, SQ, ZERO, RatFun, as_ratfun

__all__ = [
    "HeckeElem", "PrimedFactor", "ScrambleMask", "LevelError", "MAX_TABLE_LEVEL",
    "mul_gen", "mul", "pi_map", "pi_letters", "t_prime", "t_prime_letters",
    "primed_letters", "primed_product", "primed_element", "primed_basis_table",
    "to_primed_coords", "from_primed_coords", "scrambled_t", "n_inverses",
    "split_table", "g_tail",
]

MAX_TABLE_LEVEL = 5


class LevelError(ValueError):
    """Level mismatch or a level beyond a configured cap."""


def _gen_params(gen: int):
    v = SCQ if gen == 0 else SQ
    p = RatFun.var(v, 2)
    pinv = RatFun.var(v, -2)
    return p, p - 1, pinv, pinv - 1


_PARAMS = {True: _gen_params(0), False: _gen_params(1)}


def _acc(out: dict, key, val: RatFun):
    cur = out.get(key)
    out[key] = val if cur is None else cur + val


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if not v.is_zero()}


class HeckeElem:
    """Finite combination of basis elements g_w of H_n."""

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms: Mapping[SignedPerm, object] | None = None):
        self.level = level
        out = {}
        for w, c in (terms or {}).items():
            if len(w) != level:
                raise LevelError(f"key {w} is not at level {level}")
            _acc(out, tuple(w), as_ratfun(c))
        self.terms = _clean(out)

    @classmethod
    def _raw(cls, level: int, terms: dict) -> "HeckeElem":
        h = cls.__new__(cls)
        h.level = level
        h.terms = terms
        return h

    @classmethod
    def one(cls, n: int) -> "HeckeElem":
        return cls._raw(n, {cx.identity(n): ONE})

    @classmethod
    def zero(cls, n: int) -> "HeckeElem":
        return cls._raw(n, {})

    @classmethod
    def basis(cls, w: SignedPerm, coeff=ONE) -> "HeckeElem":
        return cls(len(w), {tuple(w): coeff})

    def coefficient(self, w: SignedPerm) -> RatFun:
        return self.terms.get(tuple(w), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def _check(self, other: "HeckeElem"):
        if self.level != other.level:
            raise LevelError(f"levels differ: {self.level} vs {other.level}")

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return HeckeElem._raw(self.level, _clean(out))

    def __neg__(self):
        return HeckeElem._raw(self.level, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElem") -> "HeckeElem":
        return self + (-other)

    def scale(self, c) -> "HeckeElem":
        c = as_ratfun(c)
        if c.is_zero():
            return HeckeElem.zero(self.level)
        return HeckeElem._raw(self.level, _clean({w: v * c for w, v in self.terms.items()}))

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.level == other.level and self.terms == other.terms

    def __hash__(self):
        return hash((self.level, frozenset(self.terms.items())))

    def embed(self, n: int) -> "HeckeElem":
        """Image under the inclusion H_level -> H_n."""
        if n < self.level:
            raise LevelError(f"cannot embed level {self.level} into level {n}")
        if n == self.level:
            return self
        return HeckeElem._raw(n, {cx.embed(w, n): c for w, c in self.terms.items()})

    def map_coeffs(self, fn) -> "HeckeElem":
        return HeckeElem._raw(self.level, _clean({w: fn(c) for w, c in self.terms.items()}))

    def max_length(self) -> int:
        return max((cx.length(w) for w in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return f"HeckeElem({self.level}, 0)"
        parts = [f"({c})*g{list(w)}" for w, c in
                 sorted(self.terms.items(), key=lambda t: (cx.length(t[0]), t[0]))]
        return f"HeckeElem({self.level}, " + " + ".join(parts) + ")"


# -- generator multiplication ---------------------------------------------------

def mul_gen(h: HeckeElem, gen: int, sign: int = 1, side: str = "right") -> HeckeElem:
    """Multiply h by t^{sign} (gen 0) or g_gen^{sign} on one side."""
    if not 0 <= gen < h.level:
        raise LevelError(f"generator {gen} out of range for level {h.level}")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    p, pm1, pinv, pinvm1 = _PARAMS[gen == 0]
    out: dict = {}
    right = side == "right"
    for w, c in h.terms.items():
        if right:
            ws = cx.apply_gen(w, gen)
            down = cx.is_right_descent(w, gen)
        else:
            ws = cx.apply_gen(w, gen, "left")
            down = cx.is_left_descent(w, gen)
        if sign > 0:
            if down:
                _acc(out, w, c * pm1)
                _acc(out, ws, c * p)
            else:
                _acc(out, ws, c)
        elif down:
            _acc(out, ws, c)
        else:
            _acc(out, ws, c * pinv)
            _acc(out, w, c * pinvm1)
    return HeckeElem._raw(h.level, _clean(out))


def apply_letters(h: HeckeElem, letters: Iterable[tuple[int, int]], side: str = "right") -> HeckeElem:
    """Multiply by a sequence of (gen, sign) letters, in reading order."""
    letters = list(letters)
    if side == "left":
        letters.reverse()
    for gen, sign in letters:
        h = mul_gen(h, gen, sign, side)
    return h


def mul(h1: HeckeElem, h2: HeckeElem) -> HeckeElem:
    h1._check(h2)
    n = h1.level
    cache: dict[tuple, HeckeElem] = {(): h1}
    out: dict = {}
    for v, c in sorted(h2.terms.items(), key=lambda t: cx.reduced_word(t[0])):
        word = cx.reduced_word(v)
        k = len(word)
        while word[:k] not in cache:
            k -= 1
        x = cache[word[:k]]
        for i in range(k, len(word)):
            x = mul_gen(x, word[i])
            cache[word[:i + 1]] = x
        for w, d in x.terms.items():
            _acc(out, w, d * c)
    return HeckeElem._raw(n, _clean(out))


def pi_letters(letters: Sequence[tuple[int, int]], n: int) -> HeckeElem:
    return apply_letters(HeckeElem.one(n), letters)


def pi_map(w: BraidWord, level: int | None = None) -> HeckeElem:
    """Image of a braid word in H_n (n = strands unless a larger level is given)."""
    n = w.strands if level is None else level
    if n < w.strands:
        raise LevelError(f"word needs level {w.strands}, got {n}")
    return pi_letters([(l.gen, l.sign) for l in w.letters], n)


# -- primed elements -------------------------------------------------------------

def t_prime_letters(i: int) -> list[tuple[int, int]]:
    """Letters of t'_i = s_i ... s_1 t s_1^-1 ... s_i^-1."""
    return [(k, 1) for k in range(i, 0, -1)] + [(0, 1)] + [(k, -1) for k in range(1, i + 1)]


def t_prime(i: int, n: int) -> HeckeElem:
    if not 0 <= i < n:
        raise LevelError(f"t'_{i} does not live at level {n}")
    return pi_letters(t_prime_letters(i), n)


def primed_letters(rep: CosetRep, level: int) -> list[tuple[int, int]]:
    """Letters of the primed lift r' of a coset representative of R_level."""
    if rep.kind == "one":
        return []
    if rep.kind == "t":
        return t_prime_letters(level - 1)
    run = [(level - 1 - s, 1) for s in range(rep.k)]
    if rep.kind == "g":
        return run
    return run + t_prime_letters(level - rep.k - 1)


def n_inverses(factors: Sequence[CosetRep]) -> int:
    return sum(sum(1 for _, s in primed_letters(r, i) if s < 0)
               for i, r in enumerate(factors, 1))


@dataclass(frozen=True)
class PrimedFactor:
    """A level-i factor r'_i of a primed product r'_1 ... r'_n."""

    level: int
    rep: CosetRep

    def __post_init__(self):
        valid = {r for r, _ in cx.coset_reps(self.level)}
        if self.rep not in valid:
            raise LevelError(f"{self.rep} is not a representative at level {self.level}")

    def letters(self) -> list[tuple[int, int]]:
        return primed_letters(self.rep, self.level)

    @property
    def n_inv(self) -> int:
        return sum(1 for _, s in self.letters() if s < 0)


def primed_product(factors: Sequence[PrimedFactor]) -> HeckeElem:
    n = len(factors)
    letters = []
    for i, f in enumerate(factors, 1):
        if f.level != i:
            raise LevelError(f"factor {i} has level {f.level}")
        letters += f.letters()
    return pi_letters(letters, n)


_lock = threading.RLock()
_primed: dict[SignedPerm, HeckeElem] = {}


def primed_element(w: SignedPerm) -> HeckeElem:
    """The primed product r'_1 ... r'_n attached to w's canonical factorization."""
    w = tuple(w)
    hit = _primed.get(w)
    if hit is not None:
        return hit
    n = len(w)
    if n > MAX_TABLE_LEVEL:
        raise LevelError(f"primed tables are capped at level {MAX_TABLE_LEVEL}")
    with _lock:
        hit = _primed.get(w)
        if hit is not None:
            return hit
        if n == 0:
            val = HeckeElem.one(0)
        else:
            u, rep = cx.coset_decompose(w)
            val = apply_letters(primed_element(u).embed(n), primed_letters(rep, n))
        _primed[w] = val
        return val


def primed_basis_table(n: int) -> dict[SignedPerm, HeckeElem]:
    if n > MAX_TABLE_LEVEL:
        raise LevelError(f"primed tables are capped at level {MAX_TABLE_LEVEL}")
    return {w: primed_element(w) for w in cx.enumerate_group(n)}


def _q_power(e: int) -> RatFun:
    return RatFun.var(SQ, 2 * e) if e else ONE


def to_primed_coords(h: HeckeElem) -> dict[SignedPerm, RatFun]:
    """Coordinates of h in the primed basis, keyed by the w indexing each product.

    Back-substitution from the longest basis element down; the diagonal entry
    of the base change for w is q^{-n_w}.
    """
    if h.level > MAX_TABLE_LEVEL:
        raise LevelError(f"primed tables are capped at level {MAX_TABLE_LEVEL}")
    rest = dict(h.terms)
    coords: dict[SignedPerm, RatFun] = {}
    while rest:
        w = max(rest, key=lambda v: (cx.length(v), v))
        coord = rest[w] * _q_power(n_inverses(cx.coset_factors(w)))
        coords[w] = coord
        for v, c in primed_element(w).terms.items():
            _acc(rest, v, -(c * coord))
        if not rest[w].is_zero():
            raise ArithmeticError(f"base change is not triangular at {w}")
        rest = _clean(rest)
    return coords


def from_primed_coords(coords: Mapping[SignedPerm, RatFun], n: int) -> HeckeElem:
    out = HeckeElem.zero(n)
    for w, c in coords.items():
        out = out + primed_element(w).scale(c)
    return out


# -- left-module split H_n = sum over r' of H_{n-1} r' ---------------------------

_split: dict[tuple[int, CosetRep], dict[CosetRep, HeckeElem]] = {}


def split_table(n: int, rep: CosetRep) -> dict[CosetRep, HeckeElem]:
    """Write g_r = sum over r' of a_{r'} r' with every a_{r'} in H_{n-1}.

    ``r`` is the coset representative ``rep`` of R_n; the keys of the result
    name primed representatives of R'_n.
    """
    key = (n, rep)
    hit = _split.get(key)
    if hit is not None:
        return hit
    with _lock:
        hit = _split.get(key)
        if hit is not None:
            return hit
        perm = dict(cx.coset_reps(n))[rep]
        expansion = primed_element(perm)
        blocks: dict[CosetRep, dict] = {}
        for w, c in expansion.terms.items():
            u, r2 = cx.coset_decompose(w)
            _acc(blocks.setdefault(r2, {}), u, c)
        diag = blocks.pop(rep, {})
        n_s = sum(1 for _, s in primed_letters(rep, n) if s < 0)
        if diag != {cx.identity(n - 1): _q_power(-n_s)}:
            raise ArithmeticError(f"unexpected diagonal block for {rep} at level {n}")
        result: dict[CosetRep, HeckeElem] = {rep: HeckeElem.one(n - 1)}
        for r2, terms in blocks.items():
            b = HeckeElem._raw(n - 1, _clean(terms))
            if b.is_zero():
                continue
            for r3, a in split_table(n, r2).items():
                prod = -mul(b, a)
                result[r3] = result[r3] + prod if r3 in result else prod
        scale = _q_power(n_s)
        result = {r: a.scale(scale) for r, a in result.items()}
        result = {r: a for r, a in result.items() if not a.is_zero()}
        _split[key] = result
        return result


def g_tail(n: int, rep: CosetRep) -> HeckeElem:
    """For r' = g_{n-1} v with rep of kind "g" or "gt", the remainder v in H_{n-1}."""
    if rep.kind not in ("g", "gt"):
        raise ValueError(f"{rep} has no leading g_{n - 1}")
    return pi_letters(primed_letters(rep, n)[1:], n - 1)


# -- scrambled t-conjugates ------------------------------------------------------

@dataclass(frozen=True)
class ScrambleMask:
    """Placement of inverses in s_i ... s_1 t s_1 ... s_i.

    Indices in ``left`` carry their inverse on the left of t; the rest on the
    right.  The empty mask gives t'_i.
    """

    index: int
    left: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "left", frozenset(self.left))
        if self.index < 0 or any(not 1 <= k <= self.index for k in self.left):
            raise ValueError(f"bad scramble mask {sorted(self.left)} for index {self.index}")

    def letters(self) -> list[tuple[int, int]]:
        i = self.index
        head = [(k, -1 if k in self.left else 1) for k in range(i, 0, -1)]
        tail = [(k, 1 if k in self.left else -1) for k in range(1, i + 1)]
        return head + [(0, 1)] + tail


def scrambled_t(mask: ScrambleMask, n: int) -> HeckeElem:
    if mask.index >= n:
        raise LevelError(f"mask index {mask.index} does not fit level {n}")
    return pi_letters(mask.letters(), n)
