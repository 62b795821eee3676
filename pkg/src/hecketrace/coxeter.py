"""The hyperoctahedral group W_n (type B_n) as signed permutations.

A signed permutation is a plain tuple ``(w(1), ..., w(n))``.  Generators are
numbered ``0`` for t and ``i`` for s_i.  Products compose as functions,
``(uv)(i) = u(v(i))``, so right multiplication by a generator acts on
positions and left multiplication acts on values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "SignedPerm", "ClassLabel", "BlockWord", "CosetRep", "MAX_ENUM_LEVEL",
    "identity", "from_word", "apply_gen", "mul", "inverse", "length",
    "reduced_word", "coset_reps", "coset_decompose", "coset_factors",
    "enumerate_group", "conjugacy_classes", "minimal_rep", "signed_cycle_type",
    "embed", "is_right_descent", "is_left_descent", "t_word", "partitions",
]

SignedPerm = tuple
MAX_ENUM_LEVEL = 5
MAX_CLASS_LEVEL = 6


def identity(n: int) -> SignedPerm:
    return tuple(range(1, n + 1))


def _check_gen(n: int, gen: int):
    if not 0 <= gen < n:
        raise IndexError(f"generator {gen} out of range for level {n}")


def apply_gen(w: SignedPerm, gen: int, side: str = "right") -> SignedPerm:
    """Multiply by t (gen 0) or s_gen on the given side."""
    n = len(w)
    _check_gen(n, gen)
    if side == "right":
        if gen == 0:
            return (-w[0],) + w[1:]
        return w[:gen - 1] + (w[gen], w[gen - 1]) + w[gen + 1:]
    if side != "left":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if gen == 0:
        return tuple(-v if abs(v) == 1 else v for v in w)

    def swap(v):
        a = abs(v)
        if a == gen:
            return v // a * (gen + 1)
        if a == gen + 1:
            return v // a * gen
        return v
    return tuple(swap(v) for v in w)


def from_word(word: Sequence[int], n: int) -> SignedPerm:
    w = identity(n)
    for g in word:
        w = apply_gen(w, g)
    return w


def mul(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def inverse(w: SignedPerm) -> SignedPerm:
    inv = [0] * len(w)
    for i, v in enumerate(w, 1):
        inv[abs(v) - 1] = i if v > 0 else -i
    return tuple(inv)


def embed(w: SignedPerm, n: int) -> SignedPerm:
    """View w in W_n by fixing the extra points."""
    return w + tuple(range(len(w) + 1, n + 1))


def is_right_descent(w: SignedPerm, gen: int) -> bool:
    if gen == 0:
        return w[0] < 0
    return w[gen - 1] > w[gen]


def is_left_descent(w: SignedPerm, gen: int) -> bool:
    return is_right_descent(inverse(w), gen)


@lru_cache(maxsize=1 << 16)
def length(w: SignedPerm) -> int:
    """Coxeter length, by stripping right descents one at a time."""
    count = 0
    while True:
        for g in range(len(w)):
            if is_right_descent(w, g):
                w = apply_gen(w, g)
                count += 1
                break
        else:
            return count


# -- coset representatives ---------------------------------------------------

@dataclass(frozen=True, order=True)
class CosetRep:
    """Distinguished right coset representative of W_{n-1} in W_n.

    ``kind`` is "one", "t" (the element t_{n-1}), "g" (s_{n-1}...s_{n-k}) or
    "gt" (s_{n-1}...s_{n-k} t_{n-k-1}).
    """

    kind: str
    k: int = 0

    def word(self, n: int) -> tuple[int, ...]:
        if self.kind == "one":
            return ()
        if self.kind == "t":
            return t_word(n - 1)
        run = tuple(range(n - 1, n - 1 - self.k, -1))
        if self.kind == "g":
            return run
        return run + t_word(n - self.k - 1)


def t_word(i: int) -> tuple[int, ...]:
    """Generator word of t_i = s_i ... s_1 t s_1 ... s_i."""
    return tuple(range(i, 0, -1)) + (0,) + tuple(range(1, i + 1))


@lru_cache(maxsize=None)
def coset_reps(n: int) -> tuple[tuple[CosetRep, SignedPerm], ...]:
    reps = [CosetRep("one"), CosetRep("t")]
    reps += [CosetRep("g", k) for k in range(1, n)]
    reps += [CosetRep("gt", k) for k in range(1, n)]
    return tuple((r, from_word(r.word(n), n)) for r in reps)


@lru_cache(maxsize=None)
def _rep_by_position(n: int) -> dict:
    out = {}
    for rep, perm in coset_reps(n):
        j = next(i for i, v in enumerate(perm) if abs(v) == n)
        out[(j, perm[j] > 0)] = (rep, perm)
    if len(out) != 2 * n:
        raise AssertionError(f"coset representatives of level {n} collide")
    return out


@lru_cache(maxsize=1 << 16)
def coset_decompose(w: SignedPerm) -> tuple[SignedPerm, CosetRep]:
    """Split w = u r with u in W_{n-1} (returned at level n-1) and r in R_n."""
    n = len(w)
    j = next(i for i, v in enumerate(w) if abs(v) == n)
    rep, perm = _rep_by_position(n)[(j, w[j] > 0)]
    u = mul(w, inverse(perm))
    if u[-1] != n:
        raise AssertionError(f"coset decomposition failed for {w}")
    return u[:-1], rep


@lru_cache(maxsize=1 << 16)
def coset_factors(w: SignedPerm) -> tuple[CosetRep, ...]:
    """Canonical factorization w = r_1 ... r_n, as representatives per level."""
    out = []
    while w:
        w, rep = coset_decompose(w)
        out.append(rep)
    return tuple(reversed(out))


@lru_cache(maxsize=1 << 16)
def reduced_word(w: SignedPerm) -> tuple[int, ...]:
    word: tuple[int, ...] = ()
    for level, rep in enumerate(coset_factors(w), 1):
        word += rep.word(level)
    return word


@lru_cache(maxsize=None)
def enumerate_group(n: int) -> tuple[SignedPerm, ...]:
    if n > MAX_ENUM_LEVEL:
        raise ValueError(f"enumeration is capped at level {MAX_ENUM_LEVEL}, got {n}")
    seen = {identity(n)}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for g in range(n):
            v = apply_gen(w, g)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return tuple(sorted(seen, key=lambda w: (length(w), reduced_word(w))))


# -- conjugacy classes ---------------------------------------------------------

@dataclass(frozen=True)
class ClassLabel:
    negative: tuple[int, ...]
    positive: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "negative", tuple(sorted(self.negative, reverse=True)))
        object.__setattr__(self, "positive", tuple(sorted(self.positive, reverse=True)))
        if any(p < 1 for p in self.negative + self.positive):
            raise ValueError("partition parts must be positive")

    @property
    def n(self) -> int:
        return sum(self.negative) + sum(self.positive)

    def __str__(self):
        neg = ",".join(map(str, self.negative))
        pos = ",".join(map(str, self.positive))
        return f"(({neg}),({pos}))"


def partitions(k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of k as weakly decreasing tuples, in reverse lex order."""
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def conjugacy_classes(n: int) -> list[ClassLabel]:
    if n > MAX_CLASS_LEVEL:
        raise ValueError(f"class listing is capped at level {MAX_CLASS_LEVEL}, got {n}")
    return [ClassLabel(neg, pos)
            for k in range(n, -1, -1)
            for neg in partitions(k)
            for pos in partitions(n - k)]


def signed_cycle_type(w: SignedPerm) -> ClassLabel:
    n = len(w)
    seen = [False] * (n + 1)
    neg, pos = [], []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        size, sign, i = 0, 1, start
        while not seen[i]:
            seen[i] = True
            v = w[i - 1]
            sign *= 1 if v > 0 else -1
            i = abs(v)
            size += 1
        (neg if sign < 0 else pos).append(size)
    return ClassLabel(tuple(neg), tuple(pos))


@dataclass(frozen=True)
class BlockWord:
    """Minimal class representative as a product of signed blocks.

    ``letters`` is a generator word for w_C in W_n.  ``dform`` records the
    level-by-level factor of the matching Hecke product: "t" for t'_i, "g" for
    g_i and "one" for 1, read from level 1 upwards.
    """

    label: ClassLabel
    letters: tuple[int, ...]
    dform: tuple[str, ...]

    @property
    def a(self) -> int:
        return self.dform.count("g")

    @property
    def b(self) -> int:
        return self.dform.count("t")

    @property
    def n(self) -> int:
        return len(self.dform)

    def perm(self) -> SignedPerm:
        return from_word(self.letters, self.n)


def minimal_rep(c: ClassLabel) -> BlockWord:
    letters: list[int] = []
    dform: list[str] = []
    offset = 0
    for negative, parts in ((True, sorted(c.negative)), (False, sorted(c.positive))):
        for p in parts:
            if negative:
                letters += t_word(offset)
                dform.append("t")
            else:
                dform.append("one")
            letters += range(offset + 1, offset + p)
            dform += ["g"] * (p - 1)
            offset += p
    return BlockWord(c, tuple(letters), tuple(dform))
