"""Ordered alphabets, words, evaluations, and per-letter power maps.

Letters are stored as dense ranks into an :class:`Alphabet`; every order
comparison goes through the ranks, so the algorithms are generic over the
alphabet.  All types are immutable values and safe to share.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field

from .errors import ContentMismatch, OccurrenceOutOfRange


@dataclass(frozen=True)
class Alphabet:
    """A finite totally ordered alphabet of distinct letter names."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"duplicate letters in {self.letters!r}")
        for name in self.letters:
            if not name:
                raise ValueError("empty letter name")

    @classmethod
    def standard(cls, n: int) -> "Alphabet":
        """The alphabet a < b < c < ... of size n (n <= 26)."""
        if not 0 <= n <= 26:
            raise ValueError(f"standard alphabet size must be in 0..26, got {n}")
        return cls(tuple(string.ascii_lowercase[:n]))

    @classmethod
    def of(cls, spec: str) -> "Alphabet":
        """Parse "a,b,c" or "abc" into an alphabet."""
        if "," in spec:
            return cls(tuple(s.strip() for s in spec.split(",")))
        return cls(tuple(spec))

    def rank(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise ValueError(f"letter {name!r} not in alphabet {self.letters!r}") from None

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, name):
        return name in self.letters

    def word(self, text: str | None = None, ranks=None) -> "Word":
        """Build a word from single-character letters or from ranks."""
        if ranks is not None:
            return Word(self, tuple(ranks))
        if text is None:
            return Word(self, ())
        return Word(self, tuple(self.rank(ch) for ch in text))


@dataclass(frozen=True)
class Word:
    """A word over an alphabet, stored as a tuple of letter ranks."""

    alphabet: Alphabet
    ranks: tuple[int, ...]

    def __post_init__(self):
        n = len(self.alphabet)
        if any(not 0 <= r < n for r in self.ranks):
            raise ValueError(f"rank out of range for alphabet of size {n}: {self.ranks}")

    def __len__(self):
        return len(self.ranks)

    def __str__(self):
        return "".join(self.alphabet.letters[r] for r in self.ranks)

    def __mul__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.ranks + other.ranks)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.alphabet.letters[r] for r in self.ranks)

    def to_json(self) -> list[str]:
        return list(self.names)

    @classmethod
    def from_json(cls, alphabet: Alphabet, data) -> "Word":
        return cls(alphabet, tuple(alphabet.rank(name) for name in data))


@dataclass(frozen=True)
class SigmaMap:
    """Per-letter quotient orders: the relation a^order(a) = a, order >= 2."""

    alphabet: Alphabet
    orders: tuple[int, ...]

    def __post_init__(self):
        if len(self.orders) != len(self.alphabet):
            raise ValueError("one order per letter required")
        if any(k < 2 for k in self.orders):
            raise ValueError(f"orders must be >= 2, got {self.orders}")

    @classmethod
    def constant(cls, alphabet: Alphabet, k: int) -> "SigmaMap":
        return cls(alphabet, (k,) * len(alphabet))

    def of_rank(self, rank: int) -> int:
        return self.orders[rank]

    def of(self, name: str) -> int:
        return self.orders[self.alphabet.rank(name)]

    @property
    def is_constant(self) -> bool:
        return len(set(self.orders)) <= 1

    def to_json(self) -> dict[str, int]:
        return {name: k for name, k in zip(self.alphabet.letters, self.orders)}

    @classmethod
    def from_json(cls, alphabet: Alphabet, data: dict) -> "SigmaMap":
        missing = set(alphabet.letters) - set(data)
        if missing:
            raise ValueError(f"missing orders for letters {sorted(missing)}")
        return cls(alphabet, tuple(int(data[name]) for name in alphabet.letters))


@dataclass(frozen=True)
class Evaluation:
    """A commutative exponent vector: letter -> multiplicity >= 0.

    ``reduced`` records that the exponents were put in canonical quotient
    form (each nonzero exponent in 1..order-1); it is metadata and does
    not take part in equality.
    """

    alphabet: Alphabet
    exponents: tuple[int, ...]
    reduced: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.exponents) != len(self.alphabet):
            raise ValueError("one exponent per letter required")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Evaluation":
        return cls(alphabet, (0,) * len(alphabet))

    @classmethod
    def of(cls, alphabet: Alphabet, **exps: int) -> "Evaluation":
        vec = [0] * len(alphabet)
        for name, e in exps.items():
            vec[alphabet.rank(name)] = e
        return cls(alphabet, tuple(vec))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(r for r, e in enumerate(self.exponents) if e > 0)

    def __str__(self):
        return "".join(
            f"{name}^{e}" if e > 1 else name
            for name, e in zip(self.alphabet.letters, self.exponents)
            if e > 0
        ) or "1"

    def to_json(self) -> dict[str, int]:
        return {
            name: e for name, e in zip(self.alphabet.letters, self.exponents) if e > 0
        }

    @classmethod
    def from_json(cls, alphabet: Alphabet, data: dict) -> "Evaluation":
        vec = [0] * len(alphabet)
        for name, e in data.items():
            vec[alphabet.rank(name)] = int(e)
        return cls(alphabet, tuple(vec))


def content(word: Word) -> frozenset[str]:
    """The set of distinct letters occurring in the word."""
    return frozenset(word.alphabet.letters[r] for r in set(word.ranks))


def content_ranks(word: Word) -> frozenset[int]:
    return frozenset(word.ranks)


def evaluation_of(word: Word) -> Evaluation:
    """The exponent vector counting each letter's multiplicity."""
    vec = [0] * len(word.alphabet)
    for r in word.ranks:
        vec[r] += 1
    return Evaluation(word.alphabet, tuple(vec))


def _reduce_exponent(e: int, order: int) -> int:
    # a^order = a keeps the letter present, so 0 is fixed and nonzero
    # exponents live on the cycle 1..order-1.
    if e == 0:
        return 0
    return (e - 1) % (order - 1) + 1


def reduce_evaluation(ev: Evaluation, sigma: SigmaMap) -> Evaluation:
    """Canonical form of an evaluation in the commutative quotient."""
    if ev.alphabet != sigma.alphabet:
        raise ValueError("evaluation and sigma map use different alphabets")
    vec = tuple(_reduce_exponent(e, k) for e, k in zip(ev.exponents, sigma.orders))
    return Evaluation(ev.alphabet, vec, reduced=True)


def multiply_evaluations(e1: Evaluation, e2: Evaluation, sigma: SigmaMap) -> Evaluation:
    """Product in the commutative quotient: exponentwise sum, then reduce."""
    if e1.alphabet != e2.alphabet:
        raise ValueError("evaluations use different alphabets")
    total = Evaluation(e1.alphabet, tuple(a + b for a, b in zip(e1.exponents, e2.exponents)))
    return reduce_evaluation(total, sigma)


def is_reduced_evaluation(ev: Evaluation, sigma: SigmaMap) -> bool:
    return all(
        e == 0 or 1 <= e <= k - 1 for e, k in zip(ev.exponents, sigma.orders)
    )


def shortlex_key(word: Word):
    """Sort key for the shortlex order: length first, then letter ranks."""
    return (len(word.ranks), word.ranks)


def shortlex_compare(u: Word, v: Word) -> int:
    """-1, 0, or 1 as u precedes, equals, or follows v in shortlex order."""
    if u.alphabet != v.alphabet:
        raise ValueError("cannot compare words over different alphabets")
    ku, kv = shortlex_key(u), shortlex_key(v)
    return (ku > kv) - (ku < kv)


def expansion(word: Word, letter: str, i: int) -> Word:
    """Duplicate the i-th occurrence (1-based) of the letter in the word."""
    r = word.alphabet.rank(letter)
    seen = 0
    for pos, d in enumerate(word.ranks):
        if d == r:
            seen += 1
            if seen == i:
                return Word(word.alphabet, word.ranks[: pos + 1] + word.ranks[pos:])
    raise OccurrenceOutOfRange(
        f"word {str(word)!r} has {seen} occurrences of {letter!r}, need {i}"
    )


def runs(ranks: tuple[int, ...]) -> list[tuple[int, int]]:
    """Maximal blocks of equal letters as (rank, length) pairs."""
    out = []
    for d in ranks:
        if out and out[-1][0] == d:
            out[-1] = (d, out[-1][1] + 1)
        else:
            out.append((d, 1))
    return out


def sigma_reduce_word(word: Word, sigma: SigmaMap) -> Word:
    """Collapse every maximal block a^m to a^(((m-1) mod (order-1)) + 1).

    Per-block reduction already is the fixpoint of replacing factors
    a^order by a: after it, no block is long enough to rewrite again,
    and blocks cannot merge because neighbours hold different letters.
    """
    if word.alphabet != sigma.alphabet:
        raise ValueError("word and sigma map use different alphabets")
    out = []
    for d, m in runs(word.ranks):
        out.extend([d] * _reduce_exponent(m, sigma.orders[d]))
    return Word(word.alphabet, tuple(out))


def is_inflation_of(v: Word, w: Word) -> bool:
    """True iff v = w1^e1 ... wn^en with every exponent >= 1."""
    if v.alphabet != w.alphabet:
        raise ValueError("words use different alphabets")
    rv, rw = runs(v.ranks), runs(w.ranks)
    return len(rv) == len(rw) and all(
        a == b and m >= k for (a, m), (b, k) in zip(rv, rw)
    )


def inflate_to_evaluation(word: Word, target: Evaluation, sigma: SigmaMap) -> Word:
    """Inflate the last occurrence of each letter to hit a target evaluation.

    For a letter with multiplicity m in the word and target exponent t
    (in canonical form, 1 <= t <= order-1), the last occurrence becomes a
    block of g copies where g >= 1 is least with m - 1 + g = t modulo
    order - 1.  The result is the least inflation of the word whose
    evaluation reduces to the target.
    """
    if word.alphabet != sigma.alphabet or target.alphabet != sigma.alphabet:
        raise ValueError("mismatched alphabets")
    if not is_reduced_evaluation(target, sigma):
        raise ContentMismatch(f"target evaluation {target} is not in canonical form")
    counts = evaluation_of(word).exponents
    if frozenset(r for r, e in enumerate(counts) if e) != target.support:
        raise ContentMismatch(
            f"word content {sorted(set(word.names))} does not match "
            f"evaluation support of {target}"
        )
    last = {d: pos for pos, d in enumerate(word.ranks)}
    out = []
    for pos, d in enumerate(word.ranks):
        if pos == last[d]:
            m = sigma.orders[d] - 1
            g = (target.exponents[d] - counts[d] + 1) % m
            out.extend([d] * (g if g else m))
        else:
            out.append(d)
    return Word(word.alphabet, tuple(out))


def square_positions(ranks: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    """Positions of adjacent equal pairs, located content-wise.

    Each adjacent equal pair at offsets (t, t+1) with letter a is recorded
    as (a, j) where j is the number of earlier occurrences of a; this
    locates squares in a way that is stable across commuting rewrites.
    """
    seen = [0] * (max(ranks) + 1 if ranks else 0)
    out = set()
    for t in range(len(ranks) - 1):
        d = ranks[t]
        if d == ranks[t + 1]:
            out.add((d, seen[d]))
        seen[d] += 1
    return frozenset(out)


def all_words(alphabet: Alphabet, max_len: int):
    """Yield every word of length <= max_len in shortlex order."""
    n = len(alphabet)
    for length in range(max_len + 1):
        if length == 0:
            yield Word(alphabet, ())
            continue
        if n == 0:
            return
        ranks = [0] * length
        while True:
            yield Word(alphabet, tuple(ranks))
            j = length - 1
            while j >= 0 and ranks[j] == n - 1:
                ranks[j] = 0
                j -= 1
            if j < 0:
                break
            ranks[j] += 1
