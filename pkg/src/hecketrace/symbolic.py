"""Exact sparse Laurent polynomials and rational functions over Q.

The ground ring is generated by the square roots ``sq``, ``sQ``, ``sl`` of
q, Q and lambda, the trace parameter ``z``, the output variables ``x`` and
``r``, and the family ``y1, y2, ...``.  The parameters q, Q and lambda
themselves are never separate variables: ``q == sq**2``.

Monomials are tuples of integer exponents indexed by variable, with trailing
zeros stripped.  Coefficients are Python ints, or :class:`fractions.Fraction`
when not integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

__all__ = [
    "Var", "SQ", "SCQ", "SL", "Z", "X", "R", "Poly", "RatFun",
    "SymbolicError", "UnboundVariableError",
    "substitute", "substitute_square", "eval_at_point", "canonical_eq", "as_ratfun",
    "ONE", "ZERO", "sq", "q", "sQ", "Q", "sl", "lam", "z", "x", "r", "y",
]

Scalar = Fraction
Monomial = tuple  # tuple[int, ...], trailing zeros stripped

_FIRST_Y = 6
_NAMES = ("sq", "sQ", "sl", "z", "x", "r")


class SymbolicError(ArithmeticError):
    """An operation would leave the ground ring (e.g. invert a y-variable)."""


class UnboundVariableError(KeyError):
    pass


@dataclass(frozen=True, order=True)
class Var:
    """A ring variable, identified by its position in the monomial order."""

    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"bad variable index {self.index}")

    @classmethod
    def y(cls, k: int) -> "Var":
        if k < 1:
            raise ValueError(f"y-variables are indexed from 1, got {k}")
        return cls(_FIRST_Y + k - 1)

    @classmethod
    def parse(cls, name: str) -> "Var":
        if name in _NAMES:
            return cls(_NAMES.index(name))
        if name.startswith("y") and name[1:].isdigit():
            return cls.y(int(name[1:]))
        raise ValueError(f"unknown variable {name!r}")

    @property
    def is_y(self) -> bool:
        return self.index >= _FIRST_Y

    @property
    def y_index(self) -> int | None:
        return self.index - _FIRST_Y + 1 if self.is_y else None

    @property
    def name(self) -> str:
        if self.is_y:
            return f"y{self.y_index}"
        return _NAMES[self.index]

    def __repr__(self):
        return f"Var({self.name})"


SQ, SCQ, SL, Z, X, R = (Var(i) for i in range(6))


# -- monomials ---------------------------------------------------------------

def _strip(m: list) -> tuple:
    while m and m[-1] == 0:
        m.pop()
    return tuple(m)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    m = list(a)
    for i, e in enumerate(b):
        m[i] += e
    if len(a) == len(b) and m[-1] == 0:
        return _strip(m)
    return tuple(m)


def _mono_neg(a: tuple) -> tuple:
    return tuple(-e for e in a)


def _pad(m: tuple, n: int) -> tuple:
    return m + (0,) * (n - len(m))


def _monomial(var: Var, e: int = 1) -> tuple:
    if e == 0:
        return ()
    m = [0] * (var.index + 1)
    m[var.index] = e
    return tuple(m)


def _norm_coeff(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


# -- polynomials ---------------------------------------------------------------

class Poly:
    """Sparse Laurent polynomial: a finite map monomial -> nonzero rational.

    Instances are immutable; equality is equality of term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = _norm_coeff(c)
            if c:
                m = _strip(list(m))
                c = clean.get(m, 0) + c
                if c:
                    clean[m] = _norm_coeff(c)
                else:
                    clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = _norm_coeff(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v: Var, e: int = 1) -> "Poly":
        return cls._raw({_monomial(v, e): 1})

    @property
    def terms(self) -> Mapping[tuple, object]:
        return self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        t = self._terms
        return not t or (len(t) == 1 and () in t)

    def constant(self):
        """Value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), 0)

    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get(()) == 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def nvars(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def variables(self) -> set[Var]:
        out = set()
        for m in self._terms:
            out.update(Var(i) for i, e in enumerate(m) if e)
        return out

    def min_exponents(self) -> tuple:
        """Componentwise minimum exponent (the monomial content)."""
        if not self._terms:
            return ()
        n = self.nvars
        lo = [0] * n
        for k, m in enumerate(self._terms):
            pm = _pad(m, n)
            lo = list(pm) if k == 0 else [min(a, b) for a, b in zip(lo, pm)]
        return _strip(lo)

    def sorted_terms(self, reverse: bool = True) -> list[tuple[tuple, object]]:
        n = self.nvars
        return sorted(self._terms.items(), key=lambda t: _pad(t[0], n), reverse=reverse)

    def leading_term(self) -> tuple[tuple, object]:
        """Largest term under lex order on (sq, sQ, sl, z, x, r, y1, ...)."""
        n = self.nvars
        return max(self._terms.items(), key=lambda t: _pad(t[0], n))

    # arithmetic

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s if type(s) is int else _norm_coeff(s)
                else:
                    del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def scale(self, c) -> "Poly":
        c = _norm_coeff(c)
        if not c:
            return Poly._raw({})
        if c == 1:
            return self
        return Poly._raw({m: _norm_coeff(v * c) for m, v in self._terms.items()})

    def shift(self, mono: tuple) -> "Poly":
        """Multiply by a monomial."""
        if not mono:
            return self
        return Poly._raw({_mono_mul(m, mono): c for m, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((m2, c2),) = b.items()
            if c2 == 1:
                return Poly._raw({_mono_mul(m, m2): c for m, c in a.items()})
            return Poly._raw({_mono_mul(m, m2): _norm_coeff(c * c2) for m, c in a.items()})
        out: dict = {}
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw({m: _norm_coeff(c) for m, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise SymbolicError("only monomials have Laurent inverses")
            ((m, c),) = self._terms.items()
            return Poly._raw({tuple(-x * (-e) for x in m) if m else (): _norm_coeff(Fraction(1) / c ** (-e))})
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def eval(self, point: Mapping[Var, object]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            v = Fraction(c)
            for i, e in enumerate(m):
                if e:
                    try:
                        v *= Fraction(point[Var(i)]) ** e
                    except KeyError:
                        raise UnboundVariableError(Var(i).name) from None
            total += v
        return total

    def __repr__(self):
        from .serialize import poly_to_text
        return f"Poly({poly_to_text(self)})"


_P_ZERO = Poly._raw({})
_P_ONE = Poly._raw({(): 1})


# -- gcd via sympy's sparse polynomial rings -------------------------------------

@lru_cache(maxsize=None)
def _sympy_ring(nvars: int):
    from sympy import QQ
    from sympy.polys.rings import ring
    return ring(",".join(f"v{i}" for i in range(nvars)), QQ)[0]


def _to_sympy(p: Poly, R, n: int):
    from sympy import QQ
    return R.from_dict({
        _pad(m, n): QQ(c.numerator, c.denominator) if isinstance(c, Fraction) else QQ(c)
        for m, c in p.terms.items()
    })


def _from_sympy(p) -> Poly:
    return Poly({
        tuple(int(e) for e in m): Fraction(int(c.numerator), int(c.denominator))
        for m, c in p.items()
    })


def _cancel(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Remove the polynomial gcd of num (Laurent) and den (polynomial)."""
    lo = num.min_exponents()
    num0 = num.shift(_mono_neg(lo)) if lo else num
    n = max(num0.nvars, den.nvars)
    R = _sympy_ring(n)
    g, a, b = _to_sympy(num0, R, n).cofactors(_to_sympy(den, R, n))
    if g.is_ground:
        return num, den
    a, b = _from_sympy(a), _from_sympy(b)
    return (a.shift(lo) if lo else a), b


# -- rational functions --------------------------------------------------------

def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return _P_ZERO, _P_ONE
    if den.is_one():
        return num, den
    lo = den.min_exponents()
    if lo:
        if any(lo[_FIRST_Y:]):
            raise SymbolicError("y-variables cannot be inverted")
        inv = _mono_neg(lo)
        num, den = num.shift(inv), den.shift(inv)
    if den.is_constant():
        return num.scale(Fraction(1) / Fraction(den.constant())), _P_ONE
    if den.nvars > _FIRST_Y:
        raise SymbolicError("y-variables cannot appear in a denominator")
    num, den = _cancel(num, den)
    lc = den.leading_term()[1]
    if lc != 1:
        inv = Fraction(1) / Fraction(lc)
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def _check_y(num: Poly):
    for m in num.terms:
        if len(m) > _FIRST_Y and min(m[_FIRST_Y:]) < 0:
            raise SymbolicError("y-variables cannot be inverted")


class RatFun:
    """Element of Q(sq, sQ, sl, z, x, r)[y1, y2, ...].

    Stored as ``num / den`` where ``num`` is a Laurent polynomial and ``den``
    an ordinary polynomial free of monomial factors and y-variables, coprime
    to ``num``, with leading coefficient 1.  That makes the representation
    canonical, so ``==`` and ``hash`` agree.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int | Fraction = 0, den: Poly | int | Fraction = 1):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if not isinstance(den, Poly):
            den = Poly.const(den)
        num, den = _normalize(num, den)
        _check_y(num)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: Poly, den: Poly = _P_ONE) -> "RatFun":
        f = cls.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def const(cls, c) -> "RatFun":
        return cls._raw(Poly.const(c))

    @classmethod
    def var(cls, v: Var, e: int = 1) -> "RatFun":
        if v.is_y and e < 0:
            raise SymbolicError("y-variables cannot be inverted")
        return cls._raw(Poly.var(v, e))

    @classmethod
    def monomial(cls, mono: Mapping[Var, int], c=1) -> "RatFun":
        m = [0] * (max((v.index for v in mono), default=-1) + 1)
        for v, e in mono.items():
            m[v.index] += e
        return cls(Poly({tuple(m): c}))

    # predicates and accessors

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        """True when the value is a Laurent polynomial."""
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant(self) -> Fraction:
        return Fraction(self.num.constant())

    def variables(self) -> set[Var]:
        return self.num.variables() | self.den.variables()

    # arithmetic

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __add__(self, other):
        other = as_ratfun(other)
        if self.den.is_one() and other.den.is_one():
            return RatFun._raw(self.num + other.num)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_ratfun(other))

    def __rsub__(self, other):
        return as_ratfun(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFun._raw(self.num.scale(other), self.den) if other else ZERO
        other = as_ratfun(other)
        if self.den.is_one() and other.den.is_one():
            return RatFun._raw(self.num * other.num)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_ratfun(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return as_ratfun(other) / self

    def inverse(self) -> "RatFun":
        return ONE / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.den.is_one():
            return RatFun._raw(self.num ** e)
        return RatFun._raw(self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFun.const(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return canonical_eq(self, other)

    def __hash__(self):
        return hash((self.num, self.den))

    def substitute(self, bindings: Mapping[Var, object]) -> "RatFun":
        return substitute(self, bindings)

    def eval_at_point(self, point: Mapping[Var, object]) -> Fraction:
        return eval_at_point(self, point)

    def __repr__(self):
        from .serialize import to_text
        return f"RatFun({to_text(self)})"

    def __str__(self):
        from .serialize import to_text
        return to_text(self)


def as_ratfun(value) -> RatFun:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, Poly):
        return RatFun(value)
    if isinstance(value, (int, Fraction)):
        return RatFun.const(value)
    if isinstance(value, Var):
        return RatFun.var(value)
    raise TypeError(f"cannot convert {type(value).__name__} to RatFun")


def canonical_eq(a: RatFun, b: RatFun) -> bool:
    """Decide a == b by cross-multiplication."""
    a, b = as_ratfun(a), as_ratfun(b)
    if a.den.is_one() and b.den.is_one():
        return a.num == b.num
    return a.num * b.den == b.num * a.den


def _poly_substitute(p: Poly, bindings: Mapping[int, RatFun]) -> RatFun:
    # Every bound value v = a/b gets a common denominator b^E+ * a^E- so the
    # whole sum stays polynomial until one final normalization.
    if not bindings or p.is_zero():
        return RatFun._raw(p)
    n = p.nvars
    lo, hi = {}, {}
    for m in p.terms:
        for i in bindings:
            e = m[i] if i < len(m) else 0
            lo[i] = min(lo.get(i, 0), e)
            hi[i] = max(hi.get(i, 0), e)
    powers: dict = {}

    def power(base: Poly, k: int) -> Poly:
        key = (id(base), k)
        if key not in powers:
            powers[key] = base ** k
        return powers[key]

    num = _P_ZERO
    for m, c in p.terms.items():
        free = list(_pad(m, n))
        factor = Poly.const(c)
        for i, val in bindings.items():
            e = free[i] if i < n else 0
            if i < n:
                free[i] = 0
            a, b = val.num, val.den
            factor = factor * power(a, e - lo[i]) * power(b, hi[i] - e)
        num = num + factor.shift(_strip(free))
    den = _P_ONE
    for i, val in bindings.items():
        den = den * power(val.den, hi[i]) * power(val.num, -lo[i])
    if den.is_zero():
        raise ZeroDivisionError("substitution makes a denominator vanish")
    return RatFun(num, den)


def substitute(f: RatFun, bindings: Mapping[Var, object]) -> RatFun:
    """Simultaneously replace each bound variable by its value."""
    f = as_ratfun(f)
    used = f.variables()
    vals = {v.index: as_ratfun(val) for v, val in bindings.items() if v in used}
    if not vals:
        return f
    num = _poly_substitute(f.num, vals)
    if f.den.is_one():
        return num
    den = _poly_substitute(f.den, vals)
    if den.is_zero():
        raise ZeroDivisionError("substitution makes the denominator vanish")
    return num / den


def _square_poly(p: Poly, var: Var, value: Fraction) -> Poly:
    out: dict = {}
    for m, c in p.terms.items():
        e = m[var.index] if len(m) > var.index else 0
        if e % 2:
            raise SymbolicError(f"odd power of {var.name} cannot be specialized through its square")
        rest = list(m)
        if e:
            rest[var.index] = 0
        key = _strip(rest)
        out[key] = out.get(key, 0) + Fraction(c) * value ** (e // 2)
    return Poly(out)


def substitute_square(f: RatFun, var: Var, value) -> RatFun:
    """Set var**2 to a rational value; every exponent of var must be even."""
    f = as_ratfun(f)
    value = Fraction(value)
    if value == 0:
        raise ZeroDivisionError(f"{var.name}**2 must be nonzero")
    den = _square_poly(f.den, var, value)
    if den.is_zero():
        raise ZeroDivisionError("substitution makes the denominator vanish")
    return RatFun(_square_poly(f.num, var, value), den)


def eval_at_point(f: RatFun, point: Mapping[Var, object]) -> Fraction:
    """Exact value of f at a rational point binding every variable of f."""
    f = as_ratfun(f)
    d = f.den.eval(point)
    if d == 0:
        raise ZeroDivisionError("denominator vanishes at this point")
    return f.num.eval(point) / d


ZERO = RatFun._raw(_P_ZERO)
ONE = RatFun._raw(_P_ONE)
sq = RatFun.var(SQ)
sQ = RatFun.var(SCQ)
sl = RatFun.var(SL)
q = RatFun.var(SQ, 2)
Q = RatFun.var(SCQ, 2)
lam = RatFun.var(SL, 2)
z = RatFun.var(Z)
x = RatFun.var(X)
r = RatFun.var(R)


def y(k: int) -> RatFun:
    return RatFun.var(Var.y(k))
