"""Row-set tableaux for the square-collapsed plactic monoid.

Elements of the 2-quotient are tableaux whose rows are sets of letters:
rows strictly increase and each row is contained in the row underneath.
Insertion adds a letter to the bottom row and bumps the least strictly
greater letter of that row upward.  Pairing a tableau with a canonical
evaluation then gives normal forms for every power quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from .errors import ContentMismatch
from .sequences import bell
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
class NTableau:
    """Rows of strictly increasing letter sets, top row first.

    Invariants: each row is a subset of the row underneath; the bottom
    row is the content of every reading word.
    """

    alphabet: Alphabet
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.rows:
            if list(row) != sorted(set(row)):
                raise ValueError(f"row {row} is not strictly increasing")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if not set(upper) <= set(lower):
                raise ValueError("each row must be contained in the row underneath")

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "NTableau":
        return cls(alphabet, ())

    @property
    def content(self) -> frozenset[int]:
        return frozenset(self.rows[-1]) if self.rows else frozenset()

    def to_json(self) -> dict:
        return {
            "rows": [[self.alphabet.letters[r] for r in row] for row in self.rows]
        }

    @classmethod
    def from_json(cls, alphabet: Alphabet, data: dict) -> "NTableau":
        return cls(
            alphabet,
            tuple(tuple(alphabet.rank(x) for x in row) for row in data["rows"]),
        )


def n_insert(tableau: NTableau, letter: str) -> NTableau:
    """Insert into the bottom row; bump the least strictly greater letter.

    The bumped letter recurses into the row above; a bump out of the top
    row opens a new top row.
    """
    rows = [set(row) for row in tableau.rows]
    x = tableau.alphabet.rank(letter)
    i = len(rows) - 1
    while i >= 0:
        greater = [y for y in rows[i] if y > x]
        rows[i].add(x)
        if not greater:
            break
        x = min(greater)
        i -= 1
    else:
        rows.insert(0, {x})
    return NTableau(tableau.alphabet, tuple(tuple(sorted(r)) for r in rows))


def tableau_of(word: Word) -> NTableau:
    """Fold insertion over the word, left to right."""
    t = NTableau.empty(word.alphabet)
    for r in word.ranks:
        t = n_insert(t, word.alphabet.letters[r])
    return t


def row_reading(tableau: NTableau) -> Word:
    """Concatenate the rows, each in increasing order, top row first."""
    out: list[int] = []
    for row in tableau.rows:
        out.extend(row)
    return Word(tableau.alphabet, tuple(out))


def row_reading_sigma(tableau: NTableau, ev: Evaluation, sigma: SigmaMap) -> Word:
    """Normal form for the pair (tableau, canonical evaluation).

    Starting from the plain row reading, the last occurrence of each
    letter is raised to the least power that makes the word's evaluation
    reduce to ``ev``.
    """
    if ev.alphabet != tableau.alphabet or sigma.alphabet != tableau.alphabet:
        raise ValueError("mismatched alphabets")
    if not is_reduced_evaluation(ev, sigma):
        raise ContentMismatch(f"evaluation {ev} is not in canonical form")
    if ev.support != tableau.content:
        raise ContentMismatch(
            f"tableau content {sorted(tableau.content)} != evaluation support "
            f"{sorted(ev.support)}"
        )
    return inflate_to_evaluation(row_reading(tableau), ev, sigma)


def normal_form(word: Word, sigma: SigmaMap) -> Word:
    """The canonical word equivalent to ``word`` in the power quotient."""
    ev = reduce_evaluation(evaluation_of(word), sigma)
    return row_reading_sigma(tableau_of(word), ev, sigma)


def plax_cardinality(sigma: SigmaMap) -> int:
    """Size of the power quotient: sum over letter subsets of
    Bell(|subset|) * prod (order - 1)."""
    n = len(sigma.alphabet)
    total = 0
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            total += bell(k) * prod(sigma.orders[b] - 1 for b in subset)
    return total


def plax_idempotent(letters: frozenset[int] | tuple[int, ...], sigma: SigmaMap) -> Word:
    """The idempotent word supported exactly on a nonempty letter set.

    It is the least inflation, with canonical evaluation letter^(order-1),
    of the shortlex-least word of the minimal ideal class of the
    2-quotient over those letters.
    """
    from .oracle import min_j_pattern

    subset = tuple(sorted(letters))
    if not subset:
        raise ValueError("the empty set supports only the identity")
    pattern = min_j_pattern("plactic", len(subset))
    ranks = tuple(subset[r] for r in pattern)
    word = Word(sigma.alphabet, ranks)
    target = Evaluation(
        sigma.alphabet,
        tuple(sigma.orders[r] - 1 if r in subset else 0 for r in range(len(sigma.alphabet))),
        reduced=True,
    )
    return inflate_to_evaluation(word, target, sigma)
