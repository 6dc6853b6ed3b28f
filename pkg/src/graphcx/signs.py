"""Sign rules shared by every module.

Each rule is a small pure function on sequences so it can be checked
against a table of hand-worked cases.
"""
from __future__ import annotations

from typing import Callable, Iterable, Sequence


def perm_sign(images: Sequence[int]) -> int:
    """Sign of the permutation i -> images[i] of range(len(images))."""
    n = len(images)
    seen = [False] * n
    parity = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        parity += length - 1
    return -1 if parity % 2 else 1


def sort_sign(items: Sequence) -> int:
    """Sign of the permutation that sorts a sequence of distinct items."""
    order = sorted(range(len(items)), key=lambda i: items[i])
    return perm_sign(order)


def reorder_sign(seq: Sequence, target: Sequence) -> int:
    """Sign of the permutation carrying seq onto target (same distinct items)."""
    rank = {x: i for i, x in enumerate(target)}
    return perm_sign([rank[x] for x in seq])


def shuffle_sign(seq: Sequence, first: Callable[[object], bool]) -> int:
    """Sign of the stable regrouping of seq that puts items with first(x) in front."""
    sign = 1
    passed = 0
    for x in seq:
        if first(x):
            if passed % 2:
                sign = -sign
        else:
            passed += 1
    return sign


def collapse_sign(vertex_order: Sequence[int], v: int, w: int, v_is_initial: bool) -> int:
    """Sign picked up when an orientation is rewritten with v first, w second
    and the collapsed edge running from v to w."""
    rest = [u for u in vertex_order if u != v and u != w]
    sign = reorder_sign(vertex_order, [v, w] + rest)
    return sign if v_is_initial else -sign


def forest_append(order: Sequence[int], edge: int) -> tuple:
    """A new forest edge is numbered after all existing ones."""
    return tuple(order) + (edge,)


def partition_sign(k: int, part: Iterable[int]) -> int:
    """epsilon(I, J): x_1 ... x_k = epsilon * x_I x_J for odd factors, I given."""
    chosen = set(part)
    return shuffle_sign(range(k), lambda i: i in chosen)


def koszul_sign(a: int, b: int) -> int:
    """Sign for swapping two factors of degrees a and b."""
    return -1 if (a * b) % 2 else 1


def chord_orientation(partner: Sequence[int], initial: frozenset, pairing: Sequence[int]):
    """Orientation of a regluing.

    partner is the standard pairing, initial the set of initial half-edges of
    the current representative, pairing the new involution.  Each circle of
    the union of the two chord diagrams is traversed so that every standard
    chord runs initial -> terminal (flipping edges where needed); every new
    chord then joins a terminal half-edge to an initial one and is directed
    from the initial one.  Returns (sign, new_initial, circle_count).
    """
    n = len(partner)
    seen = [False] * n
    sign = 1
    new_initial = set()
    circles = 0
    for start in range(n):
        if seen[start]:
            continue
        circles += 1
        a = start
        while True:
            b = partner[a]
            seen[a] = seen[b] = True
            if a not in initial:
                sign = -sign
            c = pairing[b]
            new_initial.add(c)
            a = c
            if a == start:
                break
    return sign, frozenset(new_initial), circles
