"""Monoid presentations: the built-in relation families plus power relations.

Relations are stored as pairs of words over the presentation's alphabet.
The binary-search-tree exchange family is an infinite schema (one
instance per inner word), so it is materialized up to a length bound and
handled structurally by the closure kernel during enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownFamily
from .words import Alphabet, SigmaMap, Word, evaluation_of

FAMILIES = ("plactic", "chinese", "sylvester", "commutative", "custom")


def _knuth_pairs(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # acb = cab for a <= b < c;  bac = bca for a < b <= c
    out = []
    for a in range(n):
        for b in range(a, n):
            for c in range(b + 1, n):
                out.append(((a, c, b), (c, a, b)))
    for b in range(n):
        for a in range(b):
            for c in range(b, n):
                out.append(((b, a, c), (b, c, a)))
    return out


def _chinese_pairs(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # cba = cab = bca for a < b < c;  aba = baa and bba = bab for a < b
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                out.append(((c, b, a), (c, a, b)))
                out.append(((c, a, b), (b, c, a)))
    for a in range(n):
        for b in range(a + 1, n):
            out.append(((a, b, a), (b, a, a)))
            out.append(((b, b, a), (b, a, b)))
    return out


def _rank_tuples(n: int, max_len: int):
    out = [()]
    level = [()]
    for _ in range(max_len):
        level = [w + (d,) for w in level for d in range(n)]
        out.extend(level)
    return out


def _sylvester_pairs(n: int, bound: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # x z W y = z x W y for x <= y < z, one instance per W with |W| <= bound - 3
    out = []
    inner = _rank_tuples(n, max(bound - 3, 0))
    for x in range(n):
        for z in range(x + 1, n):
            for y in range(x, z):
                for w in inner:
                    out.append(((x, z) + w + (y,), (z, x) + w + (y,)))
    return out


def _commutative_pairs(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    return [((b, a), (a, b)) for a in range(n) for b in range(a + 1, n)]


def _power_pairs(sigma: SigmaMap) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    return [((a,) * k, (a,)) for a, k in enumerate(sigma.orders)]


def instantiate_relations(
    family: str,
    alphabet: Alphabet,
    sigma: SigmaMap | None = None,
    schema_bound: int | None = None,
) -> list[tuple[Word, Word]]:
    """All defining relation instances over the alphabet, as word pairs.

    For the sylvester family one instance is produced per inner word of
    length <= schema_bound - 3 (schema_bound >= 3 required); power
    relations a^order = a are appended when a sigma map is given.
    """
    n = len(alphabet)
    if family == "plactic":
        pairs = _knuth_pairs(n)
    elif family == "chinese":
        pairs = _chinese_pairs(n)
    elif family == "sylvester":
        if schema_bound is None or schema_bound < 3:
            raise ValueError("sylvester relations need a schema length bound >= 3")
        pairs = _sylvester_pairs(n, schema_bound)
    elif family == "commutative":
        pairs = _commutative_pairs(n)
    elif family == "custom":
        pairs = []
    else:
        raise UnknownFamily(f"unknown family {family!r}; expected one of {FAMILIES}")
    if sigma is not None:
        if sigma.alphabet != alphabet:
            raise ValueError("sigma map is over a different alphabet")
        pairs = pairs + _power_pairs(sigma)
    return [(Word(alphabet, u), Word(alphabet, v)) for u, v in pairs]


@dataclass(frozen=True)
class Presentation:
    """A monoid presentation: alphabet, family tag, optional power map.

    ``extra`` holds explicit relation pairs for the custom family;
    built-in families generate their relations on demand.
    """

    alphabet: Alphabet
    family: str = "custom"
    sigma: SigmaMap | None = None
    extra: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()
    schema_bound: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnknownFamily(f"unknown family {self.family!r}")
        if self.sigma is not None and self.sigma.alphabet != self.alphabet:
            raise ValueError("sigma map is over a different alphabet")
        if self.family != "custom" and self.extra:
            raise ValueError("explicit relations are only for the custom family")
        n = len(self.alphabet)
        for lhs, rhs in self.extra:
            if any(not 0 <= d < n for d in lhs + rhs):
                raise ValueError(f"relation {(lhs, rhs)} out of range")

    @property
    def evaluation_preserving(self) -> bool:
        """Whether the base relations (power relations aside) preserve evaluations."""
        if self.family in ("plactic", "chinese", "sylvester", "commutative"):
            return True
        return all(
            evaluation_of(Word(self.alphabet, u)) == evaluation_of(Word(self.alphabet, v))
            for u, v in self.extra
        )

    @property
    def length_preserving(self) -> bool:
        if self.family in ("plactic", "chinese", "sylvester", "commutative"):
            return True
        return all(len(u) == len(v) for u, v in self.extra)

    def base_pairs(self, cap: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Relation instances (without power relations) that can act below the cap."""
        n = len(self.alphabet)
        if self.family == "plactic":
            return _knuth_pairs(n)
        if self.family == "chinese":
            return _chinese_pairs(n)
        if self.family == "sylvester":
            return _sylvester_pairs(n, max(cap, 3))
        if self.family == "commutative":
            return _commutative_pairs(n)
        return list(self.extra)

    def power_pairs(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return _power_pairs(self.sigma) if self.sigma is not None else []

    def relation_pairs(self, cap: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return self.base_pairs(cap) + self.power_pairs()


def presentation(
    family: str,
    alphabet: Alphabet,
    sigma: SigmaMap | None = None,
    relations: list[tuple[Word, Word]] | None = None,
    schema_bound: int | None = None,
) -> Presentation:
    """Convenience constructor accepting word-level custom relations."""
    extra = ()
    if relations:
        extra = tuple((u.ranks, v.ranks) for u, v in relations)
    return Presentation(alphabet, family, sigma, extra, schema_bound)
