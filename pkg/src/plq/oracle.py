"""Ground-truth engine: enumerate finite quotients from their presentations.

The oracle unites all words up to a length cap by single-relation
rewrites (union-find fixpoint over the bounded rewrite graph) and accepts
the result only when the element set and multiplication behaviour are
unchanged by raising the cap by one.  Everything else - equivalence,
idempotents, the two-sided ideal order, the embedding and gathered-word
checks - is computed from the resulting multiplication table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import closure
from .errors import NotStabilized, NotUnique
from .presentations import Presentation, presentation
from .sylvester import is_gathered
from .words import (
    Alphabet,
    SigmaMap,
    Word,
    evaluation_of,
    expansion,
    reduce_evaluation,
)

# Bounded-closure cap policy: start at max(6, 2n+2) and retry in steps of
# two; beyond a cap of 12 the enumeration is declared out of desk scale.
CAP_LIMIT = 12


def default_caps(n_letters: int) -> list[int]:
    start = max(6, 2 * n_letters + 2)
    return [c for c in range(start, CAP_LIMIT + 1, 2)]


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid with shortlex-least canonical words per element.

    Element ids are 0..size-1 in shortlex order of their canonical words,
    so id 0 is always the class of the empty word (the identity).
    ``succ[x][a]`` is the element reached from x by right-multiplying
    with generator a; the full table is derived from it.
    """

    alphabet: Alphabet
    words: tuple[tuple[int, ...], ...]
    succ: tuple[tuple[int, ...], ...]
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.words)

    def word(self, x: int) -> Word:
        return Word(self.alphabet, self.words[x])

    def word_str(self, x: int) -> str:
        return str(self.word(x)) or "1"

    def class_of_ranks(self, ranks) -> int:
        x = 0
        for d in ranks:
            x = self.succ[x][d]
        return x

    def class_of_word(self, w: Word) -> int:
        if w.alphabet != self.alphabet:
            raise ValueError("word is over a different alphabet")
        return self.class_of_ranks(w.ranks)

    def multiply(self, x: int, y: int) -> int:
        return self.table[x][y]

    def idempotents(self) -> list[int]:
        return [x for x in range(self.size) if self.table[x][x] == x]

    def to_json(self) -> dict:
        return {
            "elements": [
                {"id": x, "word": list(self.word(x).names)} for x in range(self.size)
            ],
            "table": [e for row in self.table for e in row],
            "generators": list(self.generators),
        }


def _skeleton(pres: Presentation, cap: int):
    """Classes of the bounded rewrite graph: canonical words + Cayley steps.

    Returns None when some canonical word is too long for its generator
    successors to stay under the cap (a sure sign the cap is too small).
    """
    n = len(pres.alphabet)
    rules = pres.power_pairs() if pres.family == "sylvester" else pres.relation_pairs(cap)
    reps = closure.closure_reps(
        n, cap, rules, front_transposition=(pres.family == "sylvester")
    )
    off = closure.offsets(n, cap)
    rep_indices = sorted(set(reps))
    words = tuple(closure.index_word(r, n, off) for r in rep_indices)
    if any(len(w) >= cap for w in words):
        return None
    id_of = {r: i for i, r in enumerate(rep_indices)}
    succ = tuple(
        tuple(id_of[reps[closure.word_index(w + (a,), n, off)]] for a in range(n))
        for w in words
    )
    return words, succ


def enumerate_monoid(pres: Presentation, max_len: int | None = None) -> FiniteMonoid:
    """Realize a finite quotient as a multiplication table.

    With an explicit ``max_len`` a single stabilization attempt is made at
    that cap; otherwise the default cap policy is followed.  Raises
    NotStabilized when the element set or the Cayley steps still change
    between consecutive caps.
    """
    if pres.sigma is None:
        raise ValueError("enumeration requires a power map (the quotient must be finite)")
    caps = [max_len] if max_len is not None else default_caps(len(pres.alphabet))
    if not caps:
        raise NotStabilized(
            f"alphabet of size {len(pres.alphabet)} exceeds the cap policy", CAP_LIMIT
        )
    last = None
    for cap in caps:
        first = _skeleton(pres, cap)
        second = _skeleton(pres, cap + 1)
        if first is not None and first == second:
            words, succ = first
            return _finish_monoid(pres.alphabet, words, succ)
        last = cap
    raise NotStabilized(f"not stabilized at cap {last}", last)


def _finish_monoid(alphabet: Alphabet, words, succ) -> FiniteMonoid:
    size = len(words)
    table = tuple(
        tuple(_fold(succ, x, words[y]) for y in range(size)) for x in range(size)
    )
    generators = tuple(_fold(succ, 0, (a,)) for a in range(len(alphabet)))
    return FiniteMonoid(alphabet, tuple(words), tuple(succ), table, generators)


def _fold(succ, x, ranks):
    for d in ranks:
        x = succ[x][d]
    return x


@lru_cache(maxsize=None)
def standard_monoid(family: str, n_letters: int, orders: tuple[int, ...]) -> FiniteMonoid:
    """Cached oracle enumeration over the standard alphabet a, b, c, ..."""
    alphabet = Alphabet.standard(n_letters)
    sigma = SigmaMap(alphabet, orders)
    return enumerate_monoid(presentation(family, alphabet, sigma))


def monoid_of(family: str, alphabet: Alphabet, sigma: SigmaMap) -> FiniteMonoid:
    return standard_monoid(family, len(alphabet), sigma.orders)


def are_equivalent(pres: Presentation, u: Word, v: Word) -> bool:
    """Whether two words fall in the same congruence class.

    With a power map the full quotient is enumerated and compared.
    Without one the quotient may be infinite: for length-preserving
    presentations (all built-in families) the bounded closure at the
    words' own length is exact, because no rewrite chain can leave that
    length.  For custom non-length-preserving relations the closure is
    retried at increasing caps (length + 2, +4, +6) and a negative answer
    after the last cap is only desk-scale evidence, not a proof.
    """
    if u.alphabet != pres.alphabet or v.alphabet != pres.alphabet:
        raise ValueError("words are over a different alphabet")
    if pres.sigma is not None:
        monoid = enumerate_monoid(pres)
        return monoid.class_of_word(u) == monoid.class_of_word(v)
    if pres.length_preserving:
        if len(u) != len(v):
            return False
        caps = [len(u.ranks)]
    else:
        base = max(len(u.ranks), len(v.ranks))
        caps = [base + 2, base + 4, base + 6]
    n = len(pres.alphabet)
    for cap in caps:
        rules = [] if pres.family == "sylvester" else pres.base_pairs(cap)
        reps = closure.closure_reps(
            n, cap, rules, front_transposition=(pres.family == "sylvester")
        )
        off = closure.offsets(n, cap)
        if reps[closure.word_index(u.ranks, n, off)] == reps[
            closure.word_index(v.ranks, n, off)
        ]:
            return True
    return False


def word_classes(pres: Presentation, max_len: int) -> list[list[Word]]:
    """All congruence classes of words of length <= max_len (no power map).

    Exact for length-preserving presentations; each class is returned in
    shortlex order.
    """
    if not pres.length_preserving:
        raise ValueError("word classes are only exact for length-preserving relations")
    n = len(pres.alphabet)
    cap = max_len
    rules = [] if pres.family == "sylvester" else pres.base_pairs(cap)
    reps = closure.closure_reps(
        n, cap, rules, front_transposition=(pres.family == "sylvester")
    )
    off = closure.offsets(n, cap)
    groups: dict[int, list[Word]] = {}
    for i in range(off[cap + 1]):
        groups.setdefault(reps[i], []).append(
            Word(pres.alphabet, closure.index_word(i, n, off))
        )
    return [groups[r] for r in sorted(groups)]


def idempotents_of(monoid: FiniteMonoid) -> list[int]:
    """All x with x*x = x, by table scan."""
    return monoid.idempotents()


# ---------------------------------------------------------------------------
# Two-sided ideal (J) order


@dataclass(frozen=True)
class JReport:
    """The two-sided-ideal preorder of a finite monoid, fully analysed."""

    monoid: FiniteMonoid
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    below: tuple[tuple[bool, ...], ...]  # below[i][j]: class i <= class j
    hasse: tuple[tuple[int, int], ...]  # (upper, lower) cover pairs
    j_trivial: bool
    graded: bool
    ranks: tuple[int, ...] | None
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    minimum: int | None  # class index of the unique minimal class, if any

    def class_words(self, i: int) -> list[str]:
        return [self.monoid.word_str(x) for x in self.classes[i]]

    def witness_chains(self) -> tuple[list[str], list[str]] | None:
        if self.witness is None:
            return None
        return (
            [" | ".join(self.class_words(c)) for c in self.witness[0]],
            [" | ".join(self.class_words(c)) for c in self.witness[1]],
        )

    def min_element(self) -> int:
        if self.minimum is None:
            raise NotUnique("no unique minimal ideal class")
        return self.classes[self.minimum][0]

    def to_json(self) -> dict:
        return {
            "j_trivial": self.j_trivial,
            "graded": self.graded,
            "classes": [self.class_words(i) for i in range(len(self.classes))],
            "hasse": [[u, l] for u, l in self.hasse],
            "ranks": list(self.ranks) if self.ranks is not None else None,
            "witness": (
                [list(self.witness[0]), list(self.witness[1])]
                if self.witness is not None
                else None
            ),
            "witness_chains": self.witness_chains(),
            "minimum": self.minimum,
        }


def _principal_ideals(monoid: FiniteMonoid) -> list[int]:
    """Bitmask of M x M for every x, closed under one-sided generator steps."""
    size = monoid.size
    gens = sorted(set(monoid.generators))
    table = monoid.table
    ideals = []
    for x in range(size):
        mask = 1 << x
        todo = [x]
        while todo:
            y = todo.pop()
            for g in gens:
                for z in (table[y][g], table[g][y]):
                    if not mask >> z & 1:
                        mask |= 1 << z
                        todo.append(z)
        ideals.append(mask)
    return ideals


def j_analysis(monoid: FiniteMonoid) -> JReport:
    """J-classes, their order, gradedness of the order, and the minimum.

    The order is graded when a rank function compatible with the cover
    relation exists; equivalently every saturated chain between two
    comparable classes has the same length.  When it is not, two cover
    chains of different lengths between the top and a witness class are
    reported.
    """
    size = monoid.size
    ideals = _principal_ideals(monoid)
    # group mutually-contained elements into classes
    key_to_class: dict[int, int] = {}
    classes: list[list[int]] = []
    class_of = [0] * size
    for x in range(size):
        c = key_to_class.get(ideals[x])
        if c is None:
            c = len(classes)
            key_to_class[ideals[x]] = c
            classes.append([])
        classes[c].append(x)
        class_of[x] = c
    m = len(classes)
    # class i <= class j iff a representative of i lies in the ideal of j
    below = [
        [bool(ideals[classes[j][0]] >> classes[i][0] & 1) for j in range(m)]
        for i in range(m)
    ]
    j_trivial = all(len(c) == 1 for c in classes)

    strict = [[below[i][j] and i != j for j in range(m)] for i in range(m)]
    hasse = []
    for j in range(m):  # j covers i when nothing sits strictly between
        for i in range(m):
            if strict[i][j] and not any(
                strict[i][k] and strict[k][j] for k in range(m)
            ):
                hasse.append((j, i))
    hasse.sort()

    top = class_of[0]  # the identity's class contains every ideal
    children = {u: [] for u in range(m)}
    for u, l in hasse:
        children[u].append(l)
    # longest and shortest cover-path lengths from the top, by DP over the
    # cover DAG in topological (ideal-size) order
    order = sorted(range(m), key=lambda c: -bin(ideals[classes[c][0]]).count("1"))
    lo = {top: 0}
    hi = {top: 0}
    lo_par: dict[int, int] = {}
    hi_par: dict[int, int] = {}
    for u in order:
        if u not in lo:
            continue
        for l in children[u]:
            if l not in lo or lo[u] + 1 < lo[l]:
                lo[l] = lo[u] + 1
                lo_par[l] = u
            if l not in hi or hi[u] + 1 > hi[l]:
                hi[l] = hi[u] + 1
                hi_par[l] = u
    graded = True
    witness = None
    ranks: tuple[int, ...] | None = None
    bad = [c for c in range(m) if lo.get(c) != hi.get(c)]
    if bad:
        graded = False
        c = min(bad, key=lambda c: (hi[c], lo[c]))
        witness = (_chain(lo_par, top, c), _chain(hi_par, top, c))
    else:
        ranks = tuple(lo[c] for c in range(m))

    minimal = [
        i for i in range(m) if not any(strict[j][i] for j in range(m))
    ]
    minimum = minimal[0] if len(minimal) == 1 else None
    return JReport(
        monoid,
        tuple(tuple(c) for c in classes),
        tuple(class_of),
        tuple(tuple(row) for row in below),
        tuple(hasse),
        j_trivial,
        graded,
        ranks,
        witness,
        minimum,
    )


def _chain(parents: dict[int, int], top: int, c: int) -> tuple[int, ...]:
    out = [c]
    while out[-1] != top:
        out.append(parents[out[-1]])
    return tuple(reversed(out))


def min_j_element(monoid: FiniteMonoid) -> int:
    """Element id of the canonical word of the unique J-minimal class."""
    return j_analysis(monoid).min_element()


@lru_cache(maxsize=None)
def min_j_pattern(family: str, k: int) -> tuple[int, ...]:
    """Canonical word (ranks) of the J-minimum of the k-letter 2-quotient.

    Computed from the oracle once per (family, k) and cached; the pattern
    relabels to any k-letter subset because the relations only compare
    letter order.
    """
    monoid = standard_monoid(family, k, (2,) * k)
    return monoid.words[min_j_element(monoid)]


def hasse_dot(report: JReport, title: str = "j_order") -> str:
    """Hasse diagram of the J-order in DOT format, top class first."""
    lines = [f'digraph "{title}" {{', "  rankdir=TB;", '  node [shape=box];']
    for i in range(len(report.classes)):
        label = ", ".join(report.class_words(i))
        lines.append(f'  c{i} [label="{label}"];')
    for upper, lower in report.hasse:
        lines.append(f"  c{upper} -> c{lower};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def monoid_json(monoid: FiniteMonoid) -> str:
    return json.dumps(monoid.to_json(), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# The two structural properties


def check_type1(
    family: str, sigma: SigmaMap, alphabet: Alphabet
) -> tuple[bool, tuple[Word, Word] | None]:
    """Is (class in the 2-quotient, reduced evaluation) injective?

    Enumerates the full quotient and the 2-quotient and maps every
    element through the pair; returns a witness pair of canonical words
    on the first collision.
    """
    quotient = monoid_of(family, alphabet, sigma)
    two = monoid_of(family, alphabet, SigmaMap.constant(alphabet, 2))
    seen: dict[tuple, int] = {}
    for x in range(quotient.size):
        w = quotient.word(x)
        image = (
            two.class_of_word(w),
            reduce_evaluation(evaluation_of(w), sigma).exponents,
        )
        other = seen.get(image)
        if other is not None:
            return False, (quotient.word(other), w)
        seen[image] = x
    return True, None


@dataclass(frozen=True)
class Type2Report:
    all_classes_gathered: bool
    expansion_commutes: bool
    ungathered_class: tuple[Word, ...] | None
    expansion_witness: tuple | None

    @property
    def holds(self) -> bool:
        return self.all_classes_gathered and self.expansion_commutes


def canonical_gathered_of_class(cls: list[Word]) -> Word | None:
    """Lexicographically largest gathered member, or None if none exists.

    All members of a class share a length here (length-preserving
    relations), so lexicographic comparison of rank tuples is enough.
    """
    gathered = [w for w in cls if is_gathered(w, cls)]
    if not gathered:
        return None
    return max(gathered, key=lambda w: w.ranks)


def check_type2(family: str, alphabet: Alphabet, max_len: int) -> Type2Report:
    """Gathered representatives and their compatibility with expansions.

    Checks, over all classes of words of length <= max_len of the base
    presentation: (a) every class has a gathered member; (b) duplicating
    the i-th occurrence of a letter in the canonical gathered element
    lands on the canonical gathered element of the class of the same
    duplication applied to any member.
    """
    pres = presentation(family, alphabet)
    classes = word_classes(pres, max_len + 1)
    by_rep: dict[tuple[int, ...], list[Word]] = {}
    for cls in classes:
        by_rep[cls[0].ranks] = cls
    rep_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    for cls in classes:
        for w in cls:
            rep_of[w.ranks] = cls[0].ranks

    gathered_cache: dict[tuple[int, ...], Word | None] = {}

    def canonical(w: Word) -> Word | None:
        key = rep_of[w.ranks]
        if key not in gathered_cache:
            gathered_cache[key] = canonical_gathered_of_class(by_rep[key])
        return gathered_cache[key]

    ungathered = None
    witness = None
    for cls in classes:
        if len(cls[0]) > max_len:
            continue
        g = canonical(cls[0])
        if g is None:
            ungathered = tuple(cls)
            continue
        for w in cls:
            for rank in sorted(set(w.ranks)):
                letter = alphabet.letters[rank]
                count = w.ranks.count(rank)
                for i in range(1, count + 1):
                    expanded = expansion(w, letter, i)
                    expected = canonical(expanded)
                    got = expansion(g, letter, i)
                    if expected is None or got.ranks != expected.ranks:
                        witness = (w, letter, i, got, expected)
                        break
                if witness:
                    break
            if witness:
                break
    return Type2Report(
        all_classes_gathered=ungathered is None,
        expansion_commutes=witness is None,
        ungathered_class=ungathered,
        expansion_witness=witness,
    )


# ---------------------------------------------------------------------------
# Monoids from validated normal forms (for sizes beyond the oracle's reach)


def monoid_from_normal_form(alphabet: Alphabet, normal_form) -> FiniteMonoid:
    """Build a finite monoid from a normal-form map on words.

    ``normal_form(ranks) -> ranks`` must be constant on congruence
    classes and injective across them.  Elements are found by closing the
    identity under right multiplication by generators; canonical labels
    are the normal-form words themselves (element order is shortlex on
    them, matching the oracle's convention whenever the normal form is
    the shortlex representative).
    """
    n = len(alphabet)
    identity = normal_form(())
    states = {identity: 0}
    order = [identity]
    todo = [identity]
    edges: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    while todo:
        state = todo.pop()
        row = []
        for a in range(n):
            nxt = normal_form(state + (a,))
            if nxt not in states:
                states[nxt] = len(order)
                order.append(nxt)
                todo.append(nxt)
            row.append(nxt)
        edges[state] = row
    ranked = sorted(order, key=lambda w: (len(w), w))
    id_of = {w: i for i, w in enumerate(ranked)}
    succ = tuple(tuple(id_of[edges[w][a]] for a in range(n)) for w in ranked)
    return _finish_monoid(alphabet, tuple(ranked), succ)
