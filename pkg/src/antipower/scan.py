"""Sliding scans for anti-power factors and the bounded extension search.

The factor scan is exact: for each block length it decides block equality
by direct symbol comparison, vectorized with numpy (windowed cumulative
sums of per-offset match masks), so no probabilistic step is involved.
A pure-Python call like find_anti_power_factor(x, 4, 20000) would need
tens of millions of per-position checks; this path does it in seconds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .detect import naive_is_k_anti_power
from .words import InfiniteWord, Word


def find_anti_power_in_word(w: Word, k: int) -> tuple[int, int] | None:
    """First k-anti-power factor of w, as (1-based position, block length).

    Block lengths are tried ascending and, within a block length, start
    positions ascending: the (block_length, position) lexicographic order.
    """
    if k < 2:
        raise ValueError("order k must be >= 2")
    arr = np.frombuffer(w.symbols, dtype=np.uint8)
    n = len(arr)
    for ell in range(1, n // k + 1):
        span = k * ell
        npos = n - span + 1
        ok = np.ones(npos, dtype=bool)
        for m in range(1, k):
            d = m * ell
            match = arr[: n - d] == arr[d:]
            csum = np.concatenate(([0], np.cumsum(match, dtype=np.int64)))
            # full[a] <=> the length-ell blocks at a and a+d coincide
            full = (csum[ell:] - csum[:-ell]) == ell
            for i in range(k - m):
                ok &= ~full[i * ell : i * ell + npos]
        hit = int(np.argmax(ok)) if ok.any() else -1
        if hit >= 0:
            found = w[hit : hit + span]
            if not naive_is_k_anti_power(found, k):  # exactness guard
                raise AssertionError("vectorized scan disagreed with the naive oracle")
            return hit + 1, ell
    return None


def find_anti_power_factor(x: InfiniteWord, k: int, max_prefix: int) -> tuple[int, int] | None:
    """First k-anti-power factor inside the length-``max_prefix`` prefix of x."""
    if k < 2:
        raise ValueError("order k must be >= 2")
    if max_prefix < k:
        raise ValueError("max_prefix must be at least k")
    return find_anti_power_in_word(x.prefix(max_prefix), k)


def anti_power_at_position(x: InfiniteWord, k: int, pos: int, limit: int) -> int | None:
    """Least block length ell <= limit with x[pos .. pos+k*ell-1] a k-anti-power.

    Returns None when no such ell exists up to the limit; that is a normal
    outcome, never an error; omega-power-free words start an anti-power of
    every order at every position, but with no a-priori bound on ell.
    """
    if k < 2 or pos < 1 or limit < 1:
        raise ValueError("need k >= 2, pos >= 1, limit >= 1")
    start = pos - 1
    for ell in range(1, limit + 1):
        ph = x.hashes(start + k * ell)
        buckets: dict[tuple[int, int], list[int]] = {}
        distinct = True
        for t in range(k):
            a = start + t * ell
            hv = ph.block(a, ell)
            bucket = buckets.setdefault(hv, [])
            if any(ph.symbols(other, ell) == ph.symbols(a, ell) for other in bucket):
                distinct = False
                break
            bucket.append(a)
        if distinct:
            return ell
    return None


@dataclass(frozen=True)
class ExtensionOutcome:
    """Result of the right-extension search.

    status "exhausted": every extension branch died; depth is the deepest
    number of appended letters any surviving node reached (0 when the seed
    itself already ends in a k-anti-power, or admits no live extension).
    status "open": some branch survived to depth_cap appended letters.
    """

    status: str
    depth: int


def _suffix_anti_power(s: bytes, k: int) -> bool:
    """Does some suffix ending at the last letter split into k distinct blocks?"""
    n = len(s)
    for b in range(1, n // k + 1):
        start = n - k * b
        blocks = {s[start + t * b : start + (t + 1) * b] for t in range(k)}
        if len(blocks) == k:
            return True
    return False


def max_avoiding_extension(w: Word, k: int, alphabet_size: int, depth_cap: int) -> ExtensionOutcome:
    """DFS over right-extensions of w, pruning any that end in a k-anti-power.

    Only suffixes ending at the newest letter are checked (a k-anti-power
    factor of an extension either lies inside w (the caller's concern) or
    ends at an appended position); the seed's own last position is checked
    up front, so a seed that is itself a k-anti-power is exhausted(0).
    """
    if k < 2 or alphabet_size < 2 or depth_cap < 0:
        raise ValueError("need k >= 2, alphabet_size >= 2, depth_cap >= 0")
    seed = w.symbols
    if seed and _suffix_anti_power(seed, k):
        return ExtensionOutcome(status="exhausted", depth=0)

    letters = [bytes((c,)) for c in range(alphabet_size)]
    best = 0

    def extend(s: bytes, depth: int) -> bool:
        nonlocal best
        best = max(best, depth)
        if depth == depth_cap:
            return True
        for letter in letters:
            t = s + letter
            if not _suffix_anti_power(t, k) and extend(t, depth + 1):
                return True
        return False

    if extend(seed, 0):
        return ExtensionOutcome(status="open", depth=depth_cap)
    return ExtensionOutcome(status="exhausted", depth=best)
