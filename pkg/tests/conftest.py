"""Shared enumeration helpers for the test suite."""

from itertools import product


def sorted_partitions(max_n, min_n=2, max_parts=None):
    """All non-increasing size vectors with 2 <= r and min_n <= n <= max_n."""
    out = []

    def rec(total, largest, prefix):
        if total == 0:
            if len(prefix) >= 2:
                out.append(tuple(prefix))
            return
        if max_parts is not None and len(prefix) >= max_parts:
            return
        for part in range(min(total, largest), 0, -1):
            rec(total - part, part, prefix + [part])

    for n in range(min_n, max_n + 1):
        rec(n, n, [])
    return out


def part_pairings(size):
    """All ways to split a part into floor(size/2) disjoint pairs plus
    (size mod 2) leftover vertices, in deterministic order."""

    def rec(items):
        if not items:
            yield ()
            return
        first, rest = items[0], items[1:]
        if len(items) % 2 == 1:
            for matching in rec(rest):
                yield matching
        for i in range(len(rest)):
            partner = rest[i]
            for matching in rec(rest[:i] + rest[i + 1 :]):
                yield ((first, partner),) + matching

    yield from rec(tuple(range(size)))


def spec_pairings(sizes, count):
    """First `count` legal whole-graph pairings in lexicographic order."""
    per_part = [list(part_pairings(size)) for size in sizes]
    out = []
    for combo in product(*per_part):
        out.append(tuple(combo))
        if len(out) == count:
            break
    return out
