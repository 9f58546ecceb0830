"""Finite words and lazy infinite-word generators.

Symbols are small non-negative integers (letter indexes below the alphabet
size).  Infinite words are 1-based: x = x_1 x_2 x_3 ...  Each generator's
``symbol_at`` is a pure function of the generator and the position; prefix
materialization caches symbols internally but is observationally pure.
"""

from __future__ import annotations

import string
import threading
from dataclasses import dataclass
from typing import Iterable

from .hashing import PrefixHashes

DEFAULT_CAP = 10_000_000

_LETTERS = string.ascii_lowercase


class MaterializationCapError(RuntimeError):
    """Asked to materialize more symbols than the configured cap allows.

    The cap guards against accidental unbounded generation; callers that
    really need a longer prefix must construct the word with a larger cap.
    """


class Word:
    """Immutable finite word over an integer alphabet.

    Stored as one byte per symbol, which bounds alphabet sizes at 256 (every
    construction in this package is binary or ternary).  Treat instances as
    immutable; equality and hashing look only at the symbol sequence.
    """

    __slots__ = ("symbols", "alphabet_size")

    def __init__(self, symbols: Iterable[int] = b"", alphabet_size: int | None = None) -> None:
        data = bytes(symbols)
        if alphabet_size is None:
            alphabet_size = (max(data) + 1) if data else 1
        if not 1 <= alphabet_size <= 256:
            raise ValueError(f"alphabet_size must be in 1..256, got {alphabet_size}")
        if data and max(data) >= alphabet_size:
            raise ValueError("symbol value out of alphabet range")
        self.symbols = data
        self.alphabet_size = alphabet_size

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """Parse an ASCII rendering: digits 0-9 map to 0-9, letters a-z to 0-25."""
        if any(c.isalpha() for c in text):
            if not all(c in _LETTERS for c in text):
                raise ValueError(f"cannot parse word literal {text!r}")
            values = bytes(_LETTERS.index(c) for c in text)
        elif all(c.isdigit() for c in text):
            values = bytes(int(c) for c in text)
        else:
            raise ValueError(f"cannot parse word literal {text!r}")
        return cls(values)

    def to_text(self) -> str:
        """ASCII rendering: digits for alphabets up to 10, letters up to 26."""
        if self.alphabet_size <= 10:
            return "".join(str(c) for c in self.symbols)
        if self.alphabet_size <= 26:
            return "".join(_LETTERS[c] for c in self.symbols)
        raise ValueError("no ASCII rendering for alphabets larger than 26; serialize as integers")

    def to_json_value(self):
        """JSON form: ASCII string for small alphabets, list of ints otherwise."""
        if self.alphabet_size <= 10:
            return self.to_text()
        return list(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.symbols[index], self.alphabet_size)
        return self.symbols[index]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols, max(self.alphabet_size, other.alphabet_size))

    def __mul__(self, times: int) -> "Word":
        return Word(self.symbols * times, self.alphabet_size)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        try:
            return f"Word({self.to_text()!r})"
        except ValueError:
            return f"Word({list(self.symbols)!r})"


class InfiniteWord:
    """Deterministic indexable symbol source with cached prefix materialization.

    Subclasses implement ``_compute(n)`` (1-based, pure).  ``prefix`` and
    ``hashes`` cache materialized symbols; repeated calls agree on the common
    prefix, and caching is invisible to callers (safe under concurrency).
    """

    alphabet_size = 2
    name = "?"

    def __init__(self, cap: int = DEFAULT_CAP) -> None:
        self.cap = int(cap)
        self._buf = bytearray()
        self._hashes = PrefixHashes()
        self._lock = threading.Lock()

    def _compute(self, n: int) -> int:
        raise NotImplementedError

    def _bulk(self, lo: int, hi: int) -> bytes:
        """Symbols at positions lo..hi inclusive; override when a batch form is cheaper."""
        return bytes(self._compute(n) for n in range(lo, hi + 1))

    def symbol_at(self, n: int) -> int:
        if n < 1:
            raise ValueError("positions are 1-based")
        return self._compute(n)

    def _ensure(self, n: int) -> None:
        if n > self.cap:
            raise MaterializationCapError(
                f"{self.name}: prefix of length {n} exceeds the materialization cap {self.cap}; "
                "construct the generator with a larger cap to proceed"
            )
        with self._lock:
            have = len(self._buf)
            if have < n:
                self._buf.extend(self._bulk(have + 1, n))

    def prefix(self, n: int) -> Word:
        """The first n symbols as a finite word."""
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        if n == 0:
            return Word(b"", self.alphabet_size)
        self._ensure(n)
        return Word(bytes(self._buf[:n]), self.alphabet_size)

    def hashes(self, n: int) -> PrefixHashes:
        """Shared prefix-hash table covering at least the first n symbols."""
        self._ensure(n)
        with self._lock:
            have = len(self._hashes)
            if have < n:
                self._hashes.extend(self._buf[have : len(self._buf)])
        return self._hashes

    def __repr__(self) -> str:
        return f"<InfiniteWord {self.name}>"


class ThueMorseWord(InfiniteWord):
    """t = 0110100110010110...; symbol n is the bit-parity of n - 1."""

    name = "thue-morse"

    def _compute(self, n: int) -> int:
        return (n - 1).bit_count() & 1


class FibonacciWord(InfiniteWord):
    """Fixed point of the morphism 0 -> 01, 1 -> 0, starting 0100101001001..."""

    name = "fibonacci"

    def __init__(self, cap: int = DEFAULT_CAP) -> None:
        super().__init__(cap)
        # S_{m+1} = S_m + S_{m-1}; every S_m is a prefix of the fixed point
        self._prev = b"\x00"
        self._cur = b"\x00\x01"

    def _grow(self, n: int) -> None:
        while len(self._cur) < n:
            self._prev, self._cur = self._cur, self._cur + self._prev

    def _compute(self, n: int) -> int:
        self._grow(n)
        return self._cur[n - 1]

    def _bulk(self, lo: int, hi: int) -> bytes:
        self._grow(hi)
        return self._cur[lo - 1 : hi]


class PeriodicWord(InfiniteWord):
    """seed repeated forever: x_n = seed[(n - 1) mod |seed|]."""

    def __init__(self, seed: Word, cap: int = DEFAULT_CAP) -> None:
        if len(seed) == 0:
            raise ValueError("periodic seed must be non-empty")
        super().__init__(cap)
        self.seed = seed
        self.alphabet_size = seed.alphabet_size
        self.name = f"periodic:{seed.to_text()}"

    def _compute(self, n: int) -> int:
        return self.seed.symbols[(n - 1) % len(self.seed)]

    def _bulk(self, lo: int, hi: int) -> bytes:
        p = len(self.seed)
        reps = (hi - lo) // p + 2
        tiled = self.seed.symbols * reps
        start = (lo - 1) % p
        return tiled[start : start + (hi - lo + 1)]


@dataclass(frozen=True)
class GeneratorConfig:
    """Closed-form marker positions a_i = alpha1 * growth**(i-1).

    growth >= 5 keeps consecutive markers at least a factor of five apart,
    which is what the sparse avoider's 4-anti-power-freeness rests on.
    """

    alpha1: int = 1
    growth: int = 5

    def __post_init__(self) -> None:
        if self.alpha1 < 1:
            raise ValueError("alpha1 must be >= 1")
        if self.growth < 5:
            raise ValueError("growth must be >= 5")


class SparseAvoiderWord(InfiniteWord):
    """1 exactly at the marker positions of a fast-growing geometric sequence.

    Aperiodic, and free of 4-anti-power factors.  Membership is decided from
    the closed form in O(log n), not by scanning.
    """

    def __init__(self, config: GeneratorConfig | None = None, cap: int = DEFAULT_CAP) -> None:
        super().__init__(cap)
        self.config = config or GeneratorConfig()
        if self.config == GeneratorConfig():
            self.name = "sparse-avoider"
        else:
            self.name = f"sparse-avoider:{self.config.alpha1}:{self.config.growth}"

    def _compute(self, n: int) -> int:
        a1 = self.config.alpha1
        g = self.config.growth
        if n < a1 or n % a1:
            return 0
        q = n // a1
        while q % g == 0:
            q //= g
        return 1 if q == 1 else 0


class RecurrentAvoiderWord(InfiniteWord):
    """Limit of w_0 = 0, w_m = w_{m-1} 1^{3*5^(m-1)} w_{m-1}.

    Recurrent, aperiodic, and free of 6-anti-power factors; |w_m| = 5^m.
    """

    name = "recurrent-avoider"

    def _compute(self, n: int) -> int:
        i = n - 1
        if i == 0:
            return 0
        p = 1
        while p <= i:  # p = 5^m, the least power of 5 above i
            p *= 5
        while p > 1:
            q = p // 5
            if i < q:
                p = q
                continue
            if i < 4 * q:
                return 1
            i -= 4 * q
            p = q
        return 0


class LiteralWord(InfiniteWord):
    """Finite head followed by a repeated tail: head . tail^omega."""

    def __init__(self, head: Word, tail: Word, cap: int = DEFAULT_CAP) -> None:
        if len(tail) == 0:
            raise ValueError("literal tail must be non-empty")
        super().__init__(cap)
        self.head = head
        self.tail = tail
        self.alphabet_size = max(head.alphabet_size, tail.alphabet_size)
        self.name = f"literal:{head.to_text()}:{tail.to_text()}"

    def _compute(self, n: int) -> int:
        if n <= len(self.head):
            return self.head.symbols[n - 1]
        return self.tail.symbols[(n - len(self.head) - 1) % len(self.tail)]


def thue_morse_prefix(n: int) -> Word:
    """First n symbols of the Thue-Morse word."""
    return ThueMorseWord().prefix(n)


def fibonacci_prefix(n: int) -> Word:
    """First n symbols of the Fibonacci word (fixed point of 0 -> 01, 1 -> 0)."""
    return FibonacciWord().prefix(n)


def sparse_avoider_symbol(n: int, config: GeneratorConfig | None = None) -> int:
    """Symbol at 1-based position n of the sparse 4-anti-power avoider."""
    if n < 1:
        raise ValueError("positions are 1-based")
    return SparseAvoiderWord(config)._compute(n)


def recurrent_avoider_symbol(n: int) -> int:
    """Symbol at 1-based position n of the recurrent 6-anti-power avoider."""
    if n < 1:
        raise ValueError("positions are 1-based")
    return RecurrentAvoiderWord()._compute(n)


def parse_generator(text: str, cap: int = DEFAULT_CAP) -> InfiniteWord:
    """Build a generator from its command-line name.

    Recognized: thue-morse, fibonacci, periodic:<seed>, sparse-avoider
    (optionally sparse-avoider:<alpha1>:<growth>), recurrent-avoider, and
    literal:<head>:<tail> for an ultimately periodic word head.tail^omega
    (the head may be empty).
    """
    name, _, arg = text.partition(":")
    if name == "thue-morse":
        word = ThueMorseWord(cap)
    elif name == "fibonacci":
        word = FibonacciWord(cap)
    elif name == "periodic":
        word = PeriodicWord(Word.from_text(arg), cap)
    elif name == "sparse-avoider":
        if arg:
            a1_text, sep, g_text = arg.partition(":")
            if not sep:
                raise ValueError("sparse-avoider takes two arguments: <alpha1>:<growth>")
            config = GeneratorConfig(int(a1_text), int(g_text))
        else:
            config = None
        word = SparseAvoiderWord(config, cap)
    elif name == "recurrent-avoider":
        word = RecurrentAvoiderWord(cap)
    elif name == "literal":
        head_text, sep, tail_text = arg.partition(":")
        if not sep:
            raise ValueError("literal generator takes <head>:<tail> (head may be empty)")
        word = LiteralWord(Word.from_text(head_text), Word.from_text(tail_text), cap)
    else:
        raise ValueError(f"unknown generator {text!r}")
    return word
