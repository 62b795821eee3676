"""Text, JSON and LaTeX renderings of ring elements."""

from __future__ import annotations

import json
from fractions import Fraction

from .symbolic import Poly, RatFun, Var, _FIRST_Y, _pad, _strip

__all__ = [
    "poly_to_text", "to_text", "to_json", "from_json", "to_latex", "poly_to_latex",
    "parse_scalar",
]

# (printed name, exponent divisor) per non-y variable index
_PRINT = {0: ("q", 2), 1: ("Q", 2), 2: ("lambda", 2), 3: ("z", 1), 4: ("x", 1), 5: ("r", 1)}
_LATEX = {0: "q", 1: "Q", 2: "\\lambda", 3: "z", 4: "x", 5: "r"}
_OUTER = {3}  # z; every y-index is outer too


def _is_outer(i: int) -> bool:
    return i in _OUTER or i >= _FIRST_Y


def _exp_text(e: int, div: int) -> str:
    if div == 2 and e % 2:
        return f"({e}/2)"
    e //= div
    return f"({e})" if e < 0 else str(e)


def _factor_text(i: int, e: int) -> str:
    if i >= _FIRST_Y:
        name, div = f"y{i - _FIRST_Y + 1}", 1
    else:
        name, div = _PRINT[i]
    if e == div:
        return name
    return f"{name}^{_exp_text(e, div)}"


def _mono_text(m: tuple) -> str:
    return "*".join(_factor_text(i, e) for i, e in enumerate(m) if e)


def _coeff_text(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join(signed: list[tuple[int, str]]) -> str:
    if not signed:
        return "0"
    out = []
    for k, (sgn, body) in enumerate(signed):
        if k == 0:
            out.append(body if sgn > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if sgn > 0 else f" - {body}")
    return "".join(out)


def _signed_terms(p: Poly) -> list[tuple[int, str]]:
    items = []
    for m, c in p.sorted_terms():
        sgn = 1 if c > 0 else -1
        c = abs(Fraction(c))
        mono = _mono_text(m)
        if not mono:
            body = _coeff_text(c)
        elif c == 1:
            body = mono
        else:
            body = f"{_coeff_text(c)}*{mono}"
        items.append((sgn, body))
    return items


def poly_to_text(p: Poly) -> str:
    """Flat sum of terms, largest monomial first."""
    return _join(_signed_terms(p))


def _grouped(p: Poly) -> str:
    # Collect terms by their (z, y) part so the trace parameters stay visible.
    n = p.nvars
    groups: dict[tuple, dict] = {}
    for m, c in p.terms.items():
        pm = _pad(m, n)
        outer = _strip([e if _is_outer(i) else 0 for i, e in enumerate(pm)])
        inner = _strip([0 if _is_outer(i) else e for i, e in enumerate(pm)])
        groups.setdefault(outer, {})[inner] = c
    items = []
    for outer in sorted(groups, key=lambda o: _pad(o, n), reverse=True):
        inner = Poly(groups[outer])
        otext = _mono_text(outer)
        if not otext:
            items.extend(_signed_terms(inner))
            continue
        if len(inner) == 1:
            ((m, c),) = inner.terms.items()
            sgn = 1 if c > 0 else -1
            single = Poly({m: abs(Fraction(c))})
            body = otext if single.is_one() else f"{poly_to_text(single)}*{otext}"
            items.append((sgn, body))
        else:
            items.append((1, f"({poly_to_text(inner)})*{otext}"))
    return _join(items)


def _split_monomial_den(f: RatFun) -> tuple[Poly, Poly, tuple]:
    """Pull negative exponents of the numerator out as a monomial denominator."""
    lo = f.num.min_exponents()
    neg = _strip([min(e, 0) for e in lo]) if lo else ()
    if not neg:
        return f.num, f.den, ()
    pos = tuple(-e for e in neg)
    return f.num.shift(pos), f.den, pos


def _has_top_level_sum(s: str) -> bool:
    depth = 0
    for k, ch in enumerate(s):
        depth += (ch == "(") - (ch == ")")
        if depth == 0 and ch in "+-" and k > 0 and s[k - 1] == " ":
            return True
    return False


def to_text(f: RatFun) -> str:
    num, den, mono = _split_monomial_den(f)
    body = _grouped(num)
    den_parts = []
    if not den.is_one():
        den_parts.append(f"({poly_to_text(den)})" if len(den) > 1 else poly_to_text(den))
    if mono:
        den_parts.append(_mono_text(mono))
    if not den_parts:
        return body
    if _has_top_level_sum(body):
        body = f"({body})"
    den_text = "*".join(den_parts)
    if "*" in den_text and not (len(den_parts) == 1 and den_text.startswith("(")):
        den_text = f"({den_text})"
    return f"{body}/{den_text}"


# -- JSON ------------------------------------------------------------------

def _term_json(m: tuple, c) -> dict:
    pm = _pad(m, _FIRST_Y)
    mono = {name: pm[i] for i, name in enumerate(("sq", "sQ", "sl", "z", "x", "r"))}
    mono["y"] = [[i - _FIRST_Y + 1, e] for i, e in enumerate(m) if i >= _FIRST_Y and e]
    return {"c": _coeff_text(c), "m": mono}


def _poly_json(p: Poly) -> list:
    return [_term_json(m, c) for m, c in p.sorted_terms()]


def to_json_obj(f: RatFun) -> dict:
    return {"num": _poly_json(f.num), "den": _poly_json(f.den)}


def to_json(f: RatFun) -> str:
    return json.dumps(to_json_obj(f), separators=(",", ":"))


def _poly_from_json(terms: list) -> Poly:
    out = {}
    for t in terms:
        mono = t["m"]
        m = [mono.get(name, 0) for name in ("sq", "sQ", "sl", "z", "x", "r")]
        for k, e in mono.get("y", []):
            idx = Var.y(int(k)).index
            m.extend([0] * (idx + 1 - len(m)))
            m[idx] += int(e)
        out[tuple(int(e) for e in m)] = parse_scalar(t["c"])
    return Poly(out)


def from_json(data) -> RatFun:
    if isinstance(data, str):
        data = json.loads(data)
    return RatFun(_poly_from_json(data["num"]), _poly_from_json(data["den"]))


def parse_scalar(text: str) -> Fraction:
    return Fraction(text.strip())


# -- LaTeX -----------------------------------------------------------------

def _latex_factor(i: int, e: int) -> str:
    if i >= _FIRST_Y:
        name, div = f"y_{{{i - _FIRST_Y + 1}}}", 1
    else:
        name, div = _LATEX[i], _PRINT[i][1]
    if e == div:
        return name
    if div == 2 and e % 2:
        return f"{name}^{{{e}/2}}"
    return f"{name}^{{{e // div}}}"


def _latex_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def poly_to_latex(p: Poly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        c = Fraction(c)
        sign = "-" if c < 0 else ("+" if k else "")
        c = abs(c)
        mono = " ".join(_latex_factor(i, e) for i, e in enumerate(m) if e)
        if not mono:
            body = _latex_coeff(c)
        elif c == 1:
            body = mono
        else:
            body = f"{_latex_coeff(c)} {mono}"
        out.append(f"{sign} {body}".strip() if k else f"{sign}{body}")
    return " ".join(out)


def to_latex(f: RatFun) -> str:
    num, den, mono = _split_monomial_den(f)
    if mono:
        den = den.shift(mono)
    if den.is_one():
        return poly_to_latex(num)
    return f"\\frac{{{poly_to_latex(num)}}}{{{poly_to_latex(den)}}}"
