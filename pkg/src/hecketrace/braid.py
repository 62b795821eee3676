"""Words in the type-B braid group on the letters t, s_1, s_2, ..."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

__all__ = [
    "Letter", "BraidWord", "BraidSyntaxError", "parse_braid", "format_word",
    "exponent_sum_s", "conjugate", "markov_stabilize", "skein_site_triple",
    "random_word",
]


class BraidSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Letter:
    """``gen`` is 0 for t and i for s_i; ``sign`` is +1 or -1."""

    gen: int
    sign: int = 1

    def __post_init__(self):
        if self.gen < 0:
            raise ValueError(f"bad generator index {self.gen}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def is_t(self) -> bool:
        return self.gen == 0

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def __str__(self):
        base = "t" if self.gen == 0 else f"s{self.gen}"
        return base if self.sign > 0 else f"{base}^-1"


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[Letter, ...]
    strands: int = 1

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise ValueError("a braid word needs at least one strand")
        need = _required_strands(self.letters)
        if need > self.strands:
            raise ValueError(f"letters need {need} strands, got {self.strands}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters, max(self.strands, other.strands))

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(l.inverse() for l in reversed(self.letters)), self.strands)

    def with_strands(self, n: int) -> "BraidWord":
        return BraidWord(self.letters, n)


def _required_strands(letters) -> int:
    return 1 + max((l.gen for l in letters), default=0)


_TOKEN = re.compile(r"(t|s(\d+))(?:\^(-?\d+))?")


def parse_braid(text: str, strands_override: int | None = None) -> BraidWord:
    """Parse whitespace-separated letters such as ``s1 s2^-1 t^2``."""
    letters: list[Letter] = []
    for tok in re.finditer(r"\S+", text):
        m = _TOKEN.fullmatch(tok.group())
        if not m:
            raise BraidSyntaxError(f"bad letter {tok.group()!r}", tok.start())
        gen = 0 if m.group(1) == "t" else int(m.group(2))
        if m.group(1) != "t" and gen < 1:
            raise BraidSyntaxError("s-letters are indexed from 1", tok.start())
        exp = int(m.group(3)) if m.group(3) is not None else 1
        sign = 1 if exp > 0 else -1
        letters += [Letter(gen, sign)] * abs(exp)
    need = _required_strands(letters)
    if strands_override is None:
        return BraidWord(tuple(letters), need)
    if strands_override < need:
        raise ValueError(f"word needs {need} strands, override gives {strands_override}")
    return BraidWord(tuple(letters), strands_override)


def format_word(w: BraidWord) -> str:
    return " ".join(str(l) for l in w.letters)


def exponent_sum_s(w: BraidWord) -> int:
    return sum(l.sign for l in w.letters if not l.is_t)


def conjugate(alpha: BraidWord, beta: BraidWord) -> BraidWord:
    """beta^-1 alpha beta, on alpha's strands."""
    if beta.strands > alpha.strands:
        raise ValueError("conjugator lives on more strands than the word")
    return BraidWord(beta.inverse().letters + alpha.letters + beta.letters, alpha.strands)


def markov_stabilize(alpha: BraidWord, sign: int) -> BraidWord:
    n = alpha.strands
    return BraidWord(alpha.letters + (Letter(n, sign),), n + 1)


def skein_site_triple(w: BraidWord, pos: int) -> tuple[BraidWord, BraidWord, BraidWord]:
    """The words with the letter at ``pos`` made positive, negative, and deleted."""
    if not 0 <= pos < len(w.letters):
        raise IndexError(f"no letter at position {pos}")
    gen = w.letters[pos].gen
    before, after = w.letters[:pos], w.letters[pos + 1:]
    return (
        BraidWord(before + (Letter(gen, 1),) + after, w.strands),
        BraidWord(before + (Letter(gen, -1),) + after, w.strands),
        BraidWord(before + after, w.strands),
    )


def random_word(seed, strands_max: int, len_max: int, strands: int | None = None) -> BraidWord:
    """Deterministic random word; strands and length are drawn uniformly too."""
    if strands_max < 1 or len_max < 0:
        raise ValueError("need strands_max >= 1 and len_max >= 0")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    n = strands if strands is not None else rng.randint(1, strands_max)
    size = rng.randint(0, len_max)
    letters = tuple(Letter(rng.randrange(n), rng.choice((1, -1))) for _ in range(size))
    return BraidWord(letters, n)
