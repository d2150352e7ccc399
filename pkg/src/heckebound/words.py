"""Word-level machinery for the rank-3 presentations.

Generators are encoded as small integers s=0, t=1, r=2 and words as ``bytes``
over {0,1,2}; ``bytes`` are immutable, hash fast, and compare lexicographically,
which matches the fixed ShortLex order s < t < r once lengths agree.

The presentation is

    s^2 = t^2 = r^2 = e,   (s r)^m_sr = (s t)^m_st = (t r)^2 = e

with m_sr, m_st >= 3 and the t-r bond fixed at 2.  A *braid move* replaces an
alternating run  aba...  of length m(a,b) by the mirrored run  bab...  of the
same length.  Tits' solution to the word problem: a word is reduced iff no
sequence of braid moves exposes two equal adjacent letters, and two reduced
words represent the same element iff they are connected by braid moves alone.
Everything here is the direct, exhaustive form of that statement: breadth-first
search over braid moves with deletion of exposed squares.
"""

from __future__ import annotations

from collections import deque

S, T, R = 0, 1, 2
GENERATORS = (S, T, R)
GEN_NAMES = "str"

Word = bytes


class NotReducedError(ValueError):
    """Raised when an operation that requires a reduced word receives one that is not."""


class CacheParametersError(ValueError):
    """Raised when a persisted reduction cache was built for different bond labels."""


def word_from_text(text: str) -> Word:
    """Parse a word over the alphabet {s, t, r}; the empty string is the identity."""
    try:
        return bytes(GEN_NAMES.index(ch) for ch in text)
    except ValueError:
        raise ValueError(f"invalid word {text!r}: letters must come from 'str'") from None


def word_to_text(word: Word) -> str:
    return "".join(GEN_NAMES[g] for g in word)


def as_word(value) -> Word:
    """Coerce str / bytes / iterable of generator indices to the internal form."""
    if isinstance(value, bytes):
        w = value
    elif isinstance(value, str):
        return word_from_text(value)
    else:
        w = bytes(value)
    if any(g not in (0, 1, 2) for g in w):
        raise ValueError("generator indices must be 0 (s), 1 (t) or 2 (r)")
    return w


def _alternating(a: int, b: int, length: int) -> Word:
    return bytes((a if i % 2 == 0 else b) for i in range(length))


def _first_square(word: Word) -> int:
    """Index of the first adjacent equal pair, or -1."""
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            return i
    return -1


class BraidSystem:
    """The braid-rewriting system for one choice of bond labels (m_sr, m_st)."""

    __slots__ = ("m_sr", "m_st", "_moves")

    def __init__(self, m_sr: int, m_st: int):
        for name, m in (("m_sr", m_sr), ("m_st", m_st)):
            if not isinstance(m, int) or isinstance(m, bool):
                raise ValueError(f"{name} must be a finite integer, got {m!r}")
            if m < 3:
                raise ValueError(f"{name} must be at least 3, got {m}")
        self.m_sr = m_sr
        self.m_st = m_st
        moves = []
        for a, b, m in ((S, T, m_st), (S, R, m_sr), (T, R, 2)):
            moves.append((_alternating(a, b, m), _alternating(b, a, m)))
            moves.append((_alternating(b, a, m), _alternating(a, b, m)))
        self._moves = tuple(moves)

    def order(self, a: int, b: int) -> int:
        """Order of the product of two distinct generators."""
        pair = {a, b}
        if pair == {S, T}:
            return self.m_st
        if pair == {S, R}:
            return self.m_sr
        if pair == {T, R}:
            return 2
        raise ValueError("generators must be distinct")

    def neighbors(self, word: Word):
        """All words one braid move away."""
        for pattern, replacement in self._moves:
            start = 0
            while True:
                i = word.find(pattern, start)
                if i < 0:
                    break
                yield word[:i] + replacement + word[i + len(pattern):]
                start = i + 1

    def closure(self, word: Word) -> frozenset[Word]:
        """All words reachable by braid moves alone (lengths never change)."""
        seen = {word}
        queue = deque((word,))
        while queue:
            v = queue.popleft()
            for nb in self.neighbors(v):
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return frozenset(seen)

    def is_reduced(self, word: Word) -> bool:
        """True iff no braid-reachable form of the word contains an adjacent equal pair."""
        if _first_square(word) >= 0:
            return False
        seen = {word}
        queue = deque((word,))
        while queue:
            v = queue.popleft()
            for nb in self.neighbors(v):
                if nb not in seen:
                    if _first_square(nb) >= 0:
                        return False
                    seen.add(nb)
                    queue.append(nb)
        return True

    def normal_form(self, word: Word) -> Word:
        """ShortLex-least reduced word of the element the input spells.

        Repeatedly: search the braid closure for a form with an adjacent equal
        pair; delete that pair and start over.  Once no closure member has such
        a pair the word is reduced and the closure minimum is the normal form.
        """
        cur = word
        while True:
            i = _first_square(cur)
            if i >= 0:
                cur = cur[:i] + cur[i + 2:]
                continue
            seen = {cur}
            queue = deque((cur,))
            best = cur
            shortened = None
            while queue:
                v = queue.popleft()
                for nb in self.neighbors(v):
                    if nb in seen:
                        continue
                    j = _first_square(nb)
                    if j >= 0:
                        shortened = nb[:j] + nb[j + 2:]
                        break
                    seen.add(nb)
                    queue.append(nb)
                    if nb < best:
                        best = nb
                if shortened is not None:
                    break
            if shortened is None:
                return best
            cur = shortened

    def words_equal(self, a: Word, b: Word) -> bool:
        return self.normal_form(a) == self.normal_form(b)


CACHE_FORMAT_VERSION = 1


class ReductionCache:
    """Memo of word -> normal form, with hit statistics and a text persistence format.

    The file format is line oriented: a header naming the format version and
    the bond labels the entries were computed for, then one ``word TAB nf``
    record per line (words rendered over the letters s, t, r; the empty string
    is the identity).  Loading a cache built for different bond labels is an
    error -- normal forms do not transfer between presentations.
    """

    __slots__ = ("m_sr", "m_st", "entries", "hits", "misses")

    def __init__(self, m_sr: int, m_st: int):
        self.m_sr = m_sr
        self.m_st = m_st
        self.entries: dict[Word, Word] = {}
        self.hits = 0
        self.misses = 0

    def get(self, word: Word) -> Word | None:
        nf = self.entries.get(word)
        if nf is None:
            self.misses += 1
        else:
            self.hits += 1
        return nf

    def put(self, word: Word, nf: Word) -> None:
        self.entries[word] = nf

    def __len__(self) -> int:
        return len(self.entries)

    def save(self, path) -> None:
        lines = [f"heckebound-cache\t{CACHE_FORMAT_VERSION}\t{self.m_sr}\t{self.m_st}\n"]
        for word in sorted(self.entries, key=lambda w: (len(w), w)):
            lines.append(f"{word_to_text(word)}\t{word_to_text(self.entries[word])}\n")
        with open(path, "w", encoding="ascii") as fh:
            fh.writelines(lines)

    @classmethod
    def load(cls, path, m_sr: int, m_st: int) -> "ReductionCache":
        with open(path, "r", encoding="ascii") as fh:
            header = fh.readline().rstrip("\n").split("\t")
            try:
                version, file_params = int(header[1]), (int(header[2]), int(header[3]))
                tag = header[0]
            except (IndexError, ValueError):
                raise CacheParametersError(f"{path}: not a reduction cache file") from None
            if tag != "heckebound-cache" or len(header) != 4:
                raise CacheParametersError(f"{path}: not a reduction cache file")
            if version != CACHE_FORMAT_VERSION:
                raise CacheParametersError(
                    f"{path}: format version {version} unsupported "
                    f"(expected {CACHE_FORMAT_VERSION})"
                )
            if file_params != (m_sr, m_st):
                raise CacheParametersError(
                    f"{path}: cache built for (m_sr, m_st) = {file_params}, "
                    f"this run uses ({m_sr}, {m_st})"
                )
            cache = cls(m_sr, m_st)
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                left, tab, right = line.partition("\t")
                if not tab:
                    raise CacheParametersError(f"{path}: malformed record {line!r}")
                cache.entries[word_from_text(left)] = word_from_text(right)
        return cache
