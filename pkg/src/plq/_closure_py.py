"""Pure-Python congruence closure kernel.

Same contract as the compiled kernel in ``_closure_cy``: given an
alphabet size, a length cap, rewrite rules, and optionally the built-in
front-transposition schema, partition all words of length <= cap into
connected components under single-factor rewrites, and return for each
word index the least index in its component.

Words of length l are indexed densely: offset(l) + base-n value of the
rank sequence, so index order is exactly shortlex order.
"""

from __future__ import annotations


def offsets(n: int, cap: int) -> list[int]:
    out = [0]
    for length in range(cap + 1):
        out.append(out[-1] + n**length)
    return out


def closure_reps(n, cap, rules, front_transposition=False):
    """Component representative (least word index) for every word index.

    rules: iterable of (lhs, rhs) tuples of letter ranks with
      len(lhs) >= len(rhs); every occurrence of lhs as a factor is joined
      with the word where it is replaced by rhs.  Scanning only the long
      side is enough: whenever both endpoints of a rewrite fit under the
      cap, the longer one is itself scanned.
    front_transposition: also join u x y w b v with u y x w b v whenever
      x <= b < y (the binary-search-tree exchange schema, instantiated
      implicitly for every gap length).
    """
    off = offsets(n, cap)
    total = off[cap + 1]
    parent = list(range(total))
    size = [1] * total

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_len: dict[int, dict[int, list[tuple[int, int]]]] = {}
    maxk = 0
    for lhs, rhs in rules:
        if len(lhs) < len(rhs):
            lhs, rhs = rhs, lhs
        k = len(lhs)
        if k > maxk:
            maxk = k
        fv = 0
        for d in lhs:
            fv = fv * n + d
        rv = 0
        for d in rhs:
            rv = rv * n + d
        by_len.setdefault(k, {}).setdefault(fv, []).append((rv, len(rhs)))

    pw = [n**i for i in range(cap + 2)]
    for length in range(1, cap + 1):
        base = off[length]
        digits = [0] * length
        suffix = [0] * (length + 1)
        for value in range(n**length):
            idx = base + value
            for j in range(length - 1, -1, -1):
                suffix[j] = suffix[j + 1] + digits[j] * pw[length - 1 - j]
            high = 0
            for p in range(length):
                f = 0
                for k in range(1, min(maxk, length - p) + 1):
                    f = f * n + digits[p + k - 1]
                    group = by_len.get(k)
                    if not group:
                        continue
                    hits = group.get(f)
                    if not hits:
                        continue
                    for rv, rl in hits:
                        l2 = length - k + rl
                        if l2 <= cap:
                            idx2 = (
                                off[l2]
                                + (high * pw[rl] + rv) * pw[length - p - k]
                                + suffix[p + k]
                            )
                            rx, ry = find(idx), find(idx2)
                            if rx != ry:
                                if size[rx] < size[ry]:
                                    rx, ry = ry, rx
                                parent[ry] = rx
                                size[rx] += size[ry]
                if front_transposition and p + 2 < length:
                    x = digits[p]
                    y = digits[p + 1]
                    if y > x:
                        for q in range(p + 2, length):
                            if x <= digits[q] < y:
                                idx2 = idx + (y - x) * (
                                    pw[length - 1 - p] - pw[length - 2 - p]
                                )
                                rx, ry = find(idx), find(idx2)
                                if rx != ry:
                                    if size[rx] < size[ry]:
                                        rx, ry = ry, rx
                                    parent[ry] = rx
                                    size[rx] += size[ry]
                                break
                high = high * n + digits[p]
            j = length - 1
            while j >= 0:
                digits[j] += 1
                if digits[j] < n:
                    break
                digits[j] = 0
                j -= 1

    reps = [0] * total
    least: dict[int, int] = {}
    for i in range(total):
        r = find(i)
        m = least.get(r)
        if m is None:
            least[r] = m = i
        reps[i] = m
    return reps
