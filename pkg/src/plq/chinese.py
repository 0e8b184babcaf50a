"""Monotone-function invariants for the square-collapsed Chinese monoid.

A class of the 2-quotient is determined by a monotone self-map p of its
content with p(x) <= x.  The map has a one-letter-at-a-time insertion, a
reading word, an equivalent lattice-path form, and an equivalent
staircase diagram whose row reading is the shortlex normal form.
Pairing with a canonical evaluation gives normal forms for every power
quotient, exactly as in the plactic case.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from .errors import ContentMismatch, LengthMismatch
from .sequences import catalan
from .words import (
    Alphabet,
    Evaluation,
    SigmaMap,
    Word,
    evaluation_of,
    inflate_to_evaluation,
    is_reduced_evaluation,
    reduce_evaluation,
)


@dataclass(frozen=True)
class TwoChineseFunction:
    """A monotone self-map of a letter subset with p(x) <= x.

    ``domain`` is sorted; ``image[i]`` is the value at ``domain[i]``.
    """

    alphabet: Alphabet
    domain: tuple[int, ...]
    image: tuple[int, ...]

    def __post_init__(self):
        if list(self.domain) != sorted(set(self.domain)):
            raise ValueError("domain must be strictly increasing")
        if len(self.image) != len(self.domain):
            raise ValueError("one image value per domain letter")
        if any(v > x for x, v in zip(self.domain, self.image)):
            raise ValueError("images must satisfy p(x) <= x")
        if any(a > b for a, b in zip(self.image, self.image[1:])):
            raise ValueError("images must be monotone")
        if not set(self.image) <= set(self.domain):
            raise ValueError("images must lie in the domain")

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "TwoChineseFunction":
        return cls(alphabet, (), ())

    def __call__(self, x: int) -> int:
        return self.image[self.domain.index(x)]

    def to_json(self) -> dict:
        letters = self.alphabet.letters
        return {
            "domain": [letters[x] for x in self.domain],
            "image": [letters[v] for v in self.image],
        }

    @classmethod
    def from_json(cls, alphabet: Alphabet, data: dict) -> "TwoChineseFunction":
        return cls(
            alphabet,
            tuple(alphabet.rank(x) for x in data["domain"]),
            tuple(alphabet.rank(v) for v in data["image"]),
        )


@dataclass(frozen=True)
class DyckPath:
    """A balanced U/D step sequence whose prefixes never go below zero."""

    steps: str

    def __post_init__(self):
        height = 0
        for s in self.steps:
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
            else:
                raise ValueError(f"bad step {s!r}")
            if height < 0:
                raise ValueError(f"prefix dips below zero in {self.steps!r}")
        if height != 0:
            raise ValueError(f"unbalanced path {self.steps!r}")

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return self.steps


@dataclass(frozen=True)
class TwoChineseStaircase:
    """Cells (row letter, column letter) with at most one cell per row.

    A diagonal cell (x, x) is present exactly when row x and column x are
    otherwise empty.
    """

    alphabet: Alphabet
    letters: tuple[int, ...]
    cells: frozenset[tuple[int, int]]

    def __post_init__(self):
        rows = [x for x, _ in self.cells]
        if len(rows) != len(set(rows)):
            raise ValueError("at most one filled cell per row")
        for x, y in self.cells:
            if y > x:
                raise ValueError(f"cell {(x, y)} lies above the diagonal")
            if x not in self.letters or y not in self.letters:
                raise ValueError(f"cell {(x, y)} uses a letter outside the set")
        off_rows = {x for x, y in self.cells if x != y}
        off_cols = {y for x, y in self.cells if x != y}
        for x in self.letters:
            empty_hook = x not in off_rows and x not in off_cols
            if ((x, x) in self.cells) != empty_hook:
                raise ValueError(
                    f"diagonal cell ({x}, {x}) must be filled exactly when its "
                    "row and column are otherwise empty"
                )

    def to_json(self) -> dict:
        letters = self.alphabet.letters
        return {
            "letters": [letters[x] for x in self.letters],
            "cells": sorted([letters[x], letters[y]] for x, y in self.cells),
        }


def fn_insert(p: TwoChineseFunction, letter: str) -> TwoChineseFunction:
    """Insert a letter: new images are min of the letter and the old image
    at the least old domain element >= each point."""
    y = p.alphabet.rank(letter)
    domain = tuple(sorted(set(p.domain) | {y}))
    old = dict(zip(p.domain, p.image))
    image = []
    for x in domain:
        candidates = [y]
        above = [z for z in p.domain if z >= x]
        if above:
            candidates.append(old[min(above)])
        image.append(min(candidates))
    return TwoChineseFunction(p.alphabet, domain, tuple(image))


def function_of(word: Word) -> TwoChineseFunction:
    """Fold insertion over the word, left to right."""
    p = TwoChineseFunction.empty(word.alphabet)
    for r in word.ranks:
        p = fn_insert(p, word.alphabet.letters[r])
    return p


def fn_reading(p: TwoChineseFunction) -> Word:
    """Domain letters in increasing order, each followed by its image."""
    out: list[int] = []
    for x, v in zip(p.domain, p.image):
        out.append(x)
        out.append(v)
    return Word(p.alphabet, tuple(out))


def dyck_of(p: TwoChineseFunction) -> DyckPath:
    """Lattice path of the function: one U per domain letter in decreasing
    order, one D per preimage of that letter.

    Together with the content this separates the classes of the
    2-quotient; the orientation (largest letter first) is this library's
    fixed convention for the path.
    """
    steps = []
    for x in sorted(p.domain, reverse=True):
        steps.append("U")
        steps.extend("D" * sum(1 for v in p.image if v == x))
    return DyckPath("".join(steps))


def function_from_path(
    alphabet: Alphabet, letters, path: DyckPath
) -> TwoChineseFunction:
    """Inverse of the path construction on a given letter set."""
    desc = sorted(letters, reverse=True)
    if len(path) != 2 * len(desc):
        raise LengthMismatch(
            f"path length {len(path)} != 2 * {len(desc)} letters"
        )
    images: dict[int, int] = {}
    u_seen = 0
    d_seen = 0
    for step in path.steps:
        if step == "U":
            u_seen += 1
        else:
            images[desc[d_seen]] = desc[u_seen - 1]
            d_seen += 1
    domain = tuple(sorted(desc))
    return TwoChineseFunction(
        alphabet, domain, tuple(images[x] for x in domain)
    )


def staircase_of(p: TwoChineseFunction) -> TwoChineseStaircase:
    """Fill (max preimage of v, v) per image value, then every diagonal
    cell whose row and column are otherwise empty."""
    cells = set()
    for v in set(p.image):
        row = max(x for x, w in zip(p.domain, p.image) if w == v)
        cells.add((row, v))
    occupied_rows = {x for x, _ in cells}
    occupied_cols = {y for _, y in cells}
    for x in p.domain:
        if x not in occupied_rows and x not in occupied_cols:
            cells.add((x, x))
    return TwoChineseStaircase(p.alphabet, tuple(sorted(p.domain)), frozenset(cells))


def staircase_reading(s: TwoChineseStaircase) -> Word:
    """Rows in increasing order; (x, x) reads x, (x, y) reads x then y.

    This is the shortlex-least word of the staircase's class.
    """
    out: list[int] = []
    for x, y in sorted(s.cells):
        if x == y:
            out.append(x)
        else:
            out.append(x)
            out.append(y)
    return Word(s.alphabet, tuple(out))


def ch_row_reading_sigma(
    p: TwoChineseFunction, ev: Evaluation, sigma: SigmaMap
) -> Word:
    """Normal form for the pair (function, canonical evaluation)."""
    if ev.alphabet != p.alphabet or sigma.alphabet != p.alphabet:
        raise ValueError("mismatched alphabets")
    if not is_reduced_evaluation(ev, sigma):
        raise ContentMismatch(f"evaluation {ev} is not in canonical form")
    if ev.support != frozenset(p.domain):
        raise ContentMismatch(
            f"function domain {sorted(p.domain)} != evaluation support "
            f"{sorted(ev.support)}"
        )
    return inflate_to_evaluation(fn_reading(p), ev, sigma)


def normal_form(word: Word, sigma: SigmaMap) -> Word:
    """The canonical word equivalent to ``word`` in the power quotient."""
    ev = reduce_evaluation(evaluation_of(word), sigma)
    return ch_row_reading_sigma(function_of(word), ev, sigma)


def shortlex_normal_form(word: Word) -> Word:
    """Shortlex-least word of the 2-quotient class, via the staircase."""
    return staircase_reading(staircase_of(function_of(word)))


def all_functions(alphabet: Alphabet, letters) -> list[TwoChineseFunction]:
    """Every monotone self-map p <= id on the given letter set."""
    domain = tuple(sorted(letters))
    out: list[TwoChineseFunction] = []

    def build(i, prefix):
        if i == len(domain):
            out.append(TwoChineseFunction(alphabet, domain, tuple(prefix)))
            return
        floor = prefix[-1] if prefix else domain[0]
        for v in domain:
            if floor <= v <= domain[i]:
                build(i + 1, prefix + [v])

    build(0, [])
    return out


def ch_cardinality(sigma: SigmaMap) -> int:
    """Size of the power quotient: sum over letter subsets of
    Catalan(|subset|) * prod (order - 1)."""
    n = len(sigma.alphabet)
    total = 0
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            total += catalan(k) * prod(sigma.orders[b] - 1 for b in subset)
    return total


def ch_idempotent(letters, sigma: SigmaMap) -> Word:
    """The idempotent word supported exactly on a nonempty letter set."""
    from .oracle import min_j_pattern

    subset = tuple(sorted(letters))
    if not subset:
        raise ValueError("the empty set supports only the identity")
    pattern = min_j_pattern("chinese", len(subset))
    ranks = tuple(subset[r] for r in pattern)
    word = Word(sigma.alphabet, ranks)
    target = Evaluation(
        sigma.alphabet,
        tuple(
            sigma.orders[r] - 1 if r in subset else 0
            for r in range(len(sigma.alphabet))
        ),
        reduced=True,
    )
    return inflate_to_evaluation(word, target, sigma)
