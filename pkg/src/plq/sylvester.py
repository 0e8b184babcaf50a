"""Binary search trees, their 2-reduced variant, and gathered normal forms.

Words insert into binary search trees from right to left; the right-to-
left postfix reading of the resulting tree is the lexicographically
largest word of the congruence class and is "gathered": it carries every
adjacent duplicate pair that occurs anywhere in the class.  Collapsing
letter blocks then yields normal forms for the power quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import IndexOutOfRange
from .words import (
    Alphabet,
    SigmaMap,
    Word,
    sigma_reduce_word,
    square_positions,
)


@dataclass(frozen=True)
class Node:
    """One tree node; labels are letter ranks."""

    label: int
    left: "Node | None" = None
    right: "Node | None" = None


@dataclass(frozen=True)
class Bst:
    """A binary search tree over an alphabet (possibly empty).

    The search-tree shape is: each node's label is >= every label in its
    left subtree and < every label in its right subtree.  The shape is a
    checkable property rather than a construction invariant, because the
    left-branch reversal below deliberately leaves the class of search
    trees.
    """

    alphabet: Alphabet
    root: Node | None = None

    def is_search_tree(self) -> bool:
        def ok(node, lo, hi):
            if node is None:
                return True
            if not lo <= node.label <= hi:
                return False
            return ok(node.left, lo, node.label) and ok(
                node.right, node.label + 1, hi
            )

        return ok(self.root, 0, len(self.alphabet) - 1) if self.root else True

    def node_count(self) -> int:
        def count(node):
            return 0 if node is None else 1 + count(node.left) + count(node.right)

        return count(self.root)

    def labels(self) -> list[int]:
        out = []

        def walk(node):
            if node is None:
                return
            out.append(node.label)
            walk(node.left)
            walk(node.right)

        walk(self.root)
        return out

    def to_json(self):
        def conv(node):
            if node is None:
                return None
            return {
                "label": self.alphabet.letters[node.label],
                "left": conv(node.left),
                "right": conv(node.right),
            }

        return conv(self.root)

    @classmethod
    def from_json(cls, alphabet: Alphabet, data) -> "Bst":
        def conv(obj):
            if obj is None:
                return None
            return Node(
                alphabet.rank(obj["label"]), conv(obj["left"]), conv(obj["right"])
            )

        return cls(alphabet, conv(data))

    def to_dot(self, title: str = "bst") -> str:
        lines = [f'digraph "{title}" {{', "  node [shape=circle];"]
        counter = [0]

        def walk(node):
            my = counter[0]
            counter[0] += 1
            lines.append(f'  n{my} [label="{self.alphabet.letters[node.label]}"];')
            for child, tag in ((node.left, "L"), (node.right, "R")):
                if child is not None:
                    cid = walk(child)
                    lines.append(f'  n{my} -> n{cid} [label="{tag}"];')
                else:
                    counter[0] += 1
                    lines.append(f"  n{counter[0] - 1} [shape=point];")
                    lines.append(f"  n{my} -> n{counter[0] - 1} [style=dotted];")
            return my

        if self.root is not None:
            walk(self.root)
        lines.append("}")
        return "\n".join(lines) + "\n"


class ReducedBst(Bst):
    """A search tree where no node has a left child with an equal label."""

    def is_reduced(self) -> bool:
        def ok(node):
            if node is None:
                return True
            if node.left is not None and node.left.label == node.label:
                return False
            return ok(node.left) and ok(node.right)

        return self.is_search_tree() and ok(self.root)


def _insert(node: Node | None, x: int) -> Node:
    if node is None:
        return Node(x)
    if x <= node.label:
        return Node(node.label, _insert(node.left, x), node.right)
    return Node(node.label, node.left, _insert(node.right, x))


def bst_insert(tree: Bst, letter: str) -> Bst:
    """Leaf insertion: go left on <=, right on >, attach at the bottom."""
    return Bst(tree.alphabet, _insert(tree.root, tree.alphabet.rank(letter)))


def bst_of(word: Word) -> Bst:
    """Insert the word's letters from rightmost to leftmost."""
    root = None
    for x in reversed(word.ranks):
        root = _insert(root, x)
    return Bst(word.alphabet, root)


def _insert_reduced(node: Node | None, x: int) -> Node:
    if node is None:
        return Node(x)
    if x <= node.label:
        if node.left is None and node.label == x:
            return node  # would become an equal-labelled left child: drop it
        return Node(node.label, _insert_reduced(node.left, x), node.right)
    return Node(node.label, node.left, _insert_reduced(node.right, x))


def reduced_bst_of(word: Word) -> ReducedBst:
    """Right-to-left insertion that drops equal-labelled left children."""
    root = None
    for x in reversed(word.ranks):
        root = _insert_reduced(root, x)
    return ReducedBst(word.alphabet, root)


def postfix_reading(tree: Bst) -> Word:
    """Right subtree, then left subtree, then the root, recursively."""
    out: list[int] = []

    def walk(node):
        if node is None:
            return
        walk(node.right)
        walk(node.left)
        out.append(node.label)

    walk(tree.root)
    return Word(tree.alphabet, tuple(out))


def canonical_gathered(word: Word) -> Word:
    """The postfix reading of the word's search tree.

    This is the lexicographically largest gathered member of the word's
    congruence class.
    """
    return postfix_reading(bst_of(word))


def is_gathered(word: Word, cls) -> bool:
    """Does the word carry every adjacent duplicate found in its class?

    ``cls`` must be the full congruence class of the word.  A duplicate
    pair is located by (letter, number of earlier copies of that letter),
    which is stable across the evaluation-preserving rewrites.
    """
    mine = square_positions(word.ranks)
    return all(square_positions(w.ranks) <= mine for w in cls)


def sigma_normal_form(word: Word, sigma: SigmaMap) -> Word:
    """Canonical gathered element with all letter blocks collapsed."""
    return sigma_reduce_word(canonical_gathered(word), sigma)


# ---------------------------------------------------------------------------
# Enumeration of 2-reduced trees


def _gen_reduced(items: tuple[tuple[int, int], ...], forbid_root: int | None):
    """All 2-reduced search trees on a multiset of (label, multiplicity).

    The root label determines the split, so every tree is produced
    exactly once; ``forbid_root`` implements the no-equal-left-child rule
    one level down.
    """
    if not items:
        yield None
        return
    for i, (r, m) in enumerate(items):
        if r == forbid_root:
            continue
        left_items = items[:i] + (((r, m - 1),) if m > 1 else ())
        right_items = items[i + 1 :]
        for left in _gen_reduced(left_items, r):
            for right in _gen_reduced(right_items, None):
                yield Node(r, left, right)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def reduced_trees(alphabet: Alphabet, nodes: int, distinct: int):
    """Generate every 2-reduced tree with the given node and label counts."""
    n = len(alphabet)
    for letters in combinations(range(n), distinct):
        for mults in _compositions(nodes, distinct):
            items = tuple(zip(letters, mults))
            for root in _gen_reduced(items, None):
                yield ReducedBst(alphabet, root)


def count_reduced_trees(i: int, k: int, n: int) -> int:
    """Number of 2-reduced trees with i nodes, k of them repeats, n letters.

    A node is a repeat when some ancestor carries the same label; in a
    search tree the copies of one label form a chain, so k is the node
    count minus the number of distinct labels.  Counted by exhaustive
    generation.
    """
    if i < 1 or not 0 <= k <= i // 2 or n < 0:
        raise IndexOutOfRange(f"count_reduced_trees({i}, {k}, {n})")
    distinct = i - k
    if distinct > n:
        return 0
    alphabet = Alphabet.standard(min(n, 26))
    return sum(1 for _ in reduced_trees(alphabet, i, distinct))


def ancestor_repeats(tree: Bst) -> int:
    """Number of nodes having an ancestor with the same label."""
    count = 0

    def walk(node, seen):
        nonlocal count
        if node is None:
            return
        if node.label in seen:
            count += 1
        walk(node.left, seen | {node.label})
        walk(node.right, seen | {node.label})

    walk(tree.root, frozenset())
    return count


def sylv2_cardinality(n: int) -> int:
    """Size of the 2-quotient over n letters, by the Borel-triangle formula."""
    from .sequences import borel

    if n < 0:
        raise IndexOutOfRange(f"sylv2_cardinality({n})")
    total = 1
    for i in range(1, 2 * n):
        for k in range(i // 2 + 1):
            m = i - k - 1
            if k <= m:
                total += borel(m, k) * comb(n, i - k)
    return total


def is_idempotent_tree(tree: ReducedBst) -> bool:
    """Whether the tree's reading squares to itself in the 2-quotient.

    Criterion: for every label, the deepest node carrying it has no left
    subtree.  The copies of one label are totally ordered by the ancestor
    relation, so the deepest copy is the unique one with no equal-labelled
    descendant.
    """

    def has_equal_below(node, label):
        if node is None:
            return False
        if node.label == label:
            return True
        return has_equal_below(node.left, label) or has_equal_below(node.right, label)

    ok = True

    def check(node):
        nonlocal ok
        if node is None or not ok:
            return
        below = has_equal_below(node.left, node.label) or has_equal_below(
            node.right, node.label
        )
        if not below and node.left is not None:
            ok = False
            return
        check(node.left)
        check(node.right)

    check(tree.root)
    return ok


def sylv2_idempotent_count(n: int) -> int:
    """Idempotent count in the 2-quotient: sum of C(n,k) * shifted Schroeder."""
    from .sequences import schroder_shifted

    if n < 0:
        raise IndexOutOfRange(f"sylv2_idempotent_count({n})")
    return sum(comb(n, k) * schroder_shifted(k) for k in range(n + 1))


def idempotent_readings(alphabet: Alphabet) -> list[Word]:
    """Readings of all idempotent 2-reduced trees over the alphabet."""
    n = len(alphabet)
    out = [Word(alphabet, ())]
    for distinct in range(1, n + 1):
        for nodes in range(distinct, 2 * distinct):
            for tree in reduced_trees(alphabet, nodes, distinct):
                if is_idempotent_tree(tree):
                    out.append(postfix_reading(tree))
    return out


def left_branch_reversal(tree: Bst) -> Bst:
    """Reverse the left spine recursively; right subtrees travel along.

    An involution on labelled binary trees that preserves the node count
    and the label multiset but generally leaves the search-tree class.
    """

    def rev(node):
        if node is None:
            return None
        spine = []
        cur = node
        while cur is not None:
            spine.append(cur)
            cur = cur.left
        out = None
        for item in spine:  # original root ends up deepest; last spine node on top
            out = Node(item.label, out, rev(item.right))
        return out

    return Bst(tree.alphabet, rev(tree.root))
