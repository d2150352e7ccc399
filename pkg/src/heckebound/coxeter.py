"""Rank-3 Coxeter groups W = <s, t, r> with the t-r bond fixed at 2.

Elements are interned: each group instance keeps one canonical object per
group element, identified by its ShortLex-least reduced word (generator order
s < t < r).  Equality of elements is therefore object identity.

The interner is filled stratum by stratum.  To extend from length n to n+1,
every element w of length n is multiplied by every generator g that is not
already known to shorten it; the concatenated word is reduced (its element has
length n+1), so its full braid closure is exactly the set of reduced words of
the new element.  Every closure member is registered, which makes candidate
identification a dictionary lookup and has two pleasant corollaries:

* once a stratum is complete, the down-edges of all its elements are known,
  i.e. right descent sets are exact;
* the reverse of any registered word is registered, so inversion is a lookup.

Word length is capped (default 20): the closure search is exact and fast at
these lengths, and every quantity in the verifier lives well below the cap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .words import (
    GEN_NAMES,
    GENERATORS,
    R,
    S,
    T,
    BraidSystem,
    NotReducedError,
    ReductionCache,
    Word,
    as_word,
    word_to_text,
)

__all__ = [
    "S",
    "T",
    "R",
    "GENERATORS",
    "TheoremCase",
    "GroupParams",
    "Element",
    "CoxeterGroup",
    "InfiniteParabolicError",
    "NotComparableError",
    "WordLengthCapError",
]


class InfiniteParabolicError(ValueError):
    """Raised for longest-element queries on the full (infinite or untreated) group."""


class NotComparableError(ValueError):
    """Raised when an operation requires a strict Bruhat relation that does not hold."""


class WordLengthCapError(ValueError):
    """Raised when an input word exceeds the configured reduction cap."""


class TheoremCase(enum.Enum):
    """Which regime of the boundedness statement a parameter pair falls in."""

    CASE_A = "A"        # m_sr >= 7 and m_st = 3; bound m_sr
    CASE_B = "B"        # m_sr >= 5 and m_st >= 4; bound max(m_sr, m_st)
    OUT_OF_SCOPE = "none"   # engine still works; bound checks become advisory


@dataclass(frozen=True)
class GroupParams:
    """Bond labels of the presentation; m_tr is always 2 and s < t < r is fixed."""

    m_sr: int
    m_st: int

    M_TR = 2

    def __post_init__(self):
        for name, m in (("m_sr", self.m_sr), ("m_st", self.m_st)):
            if not isinstance(m, int) or isinstance(m, bool):
                raise ValueError(f"{name} must be a finite integer >= 3, got {m!r}")
            if m < 3:
                raise ValueError(f"{name} must be a finite integer >= 3, got {m}")

    @property
    def case(self) -> TheoremCase:
        if self.m_sr >= 7 and self.m_st == 3:
            return TheoremCase.CASE_A
        if self.m_sr >= 5 and self.m_st >= 4:
            return TheoremCase.CASE_B
        return TheoremCase.OUT_OF_SCOPE

    def degree_bound(self) -> int | None:
        """The asserted bound on structure-constant degrees, None outside both cases."""
        if self.case is TheoremCase.CASE_A:
            return self.m_sr
        if self.case is TheoremCase.CASE_B:
            return max(self.m_sr, self.m_st)
        return None


class Element:
    """One interned group element.  Compare with ``is`` or ``==`` (same thing here)."""

    __slots__ = ("group", "index")

    def __init__(self, group: "CoxeterGroup", index: int):
        self.group = group
        self.index = index

    @property
    def word(self) -> Word:
        """ShortLex-least reduced word, as bytes over {0,1,2}."""
        return self.group._words[self.index]

    @property
    def length(self) -> int:
        return self.group._lengths[self.index]

    @property
    def text(self) -> str:
        return word_to_text(self.word)

    @property
    def right_descents(self) -> frozenset[int]:
        mask = self.group._rdesc[self.index]
        return frozenset(g for g in GENERATORS if mask >> g & 1)

    @property
    def left_descents(self) -> frozenset[int]:
        return self.group.inverse(self).right_descents

    @property
    def sort_key(self) -> tuple[int, Word]:
        return (self.length, self.word)

    def __lt__(self, other: "Element") -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        return f"Element({self.text or 'e'!r})"


class CoxeterGroup:
    """The interner plus every group-level operation the verifier needs."""

    def __init__(self, params: GroupParams | None = None, *, m_sr: int | None = None,
                 m_st: int | None = None, max_word_length: int = 20):
        if params is None:
            params = GroupParams(m_sr, m_st)
        self.params = params
        self.braid = BraidSystem(params.m_sr, params.m_st)
        self.max_word_length = max_word_length
        self.reduction_cache = ReductionCache(params.m_sr, params.m_st)

        self._words: list[Word] = [b""]
        self._lengths: list[int] = [0]
        self._rmul: list[list[int]] = [[-1, -1, -1]]
        self._rdesc: list[int] = [0]
        self._inv: list[int] = [0]
        self._all_words: dict[Word, int] = {b"": 0}
        self._strata: list[list[int]] = [[0]]
        self._complete_length = 0
        self._exhausted = False
        self._elements: list[Element] = [Element(self, 0)]
        self._bruhat: dict[tuple[int, int], bool] = {}

    # ----- interner ----------------------------------------------------

    def _intern(self, closure: frozenset[Word], length: int) -> int:
        index = len(self._words)
        self._words.append(min(closure))
        self._lengths.append(length)
        self._rmul.append([-1, -1, -1])
        self._rdesc.append(0)
        self._inv.append(-1)
        self._elements.append(Element(self, index))
        for w in closure:
            self._all_words[w] = index
        return index

    def _build_next_stratum(self) -> None:
        n = self._complete_length
        new_stratum: list[int] = []
        for i in self._strata[n]:
            word_i = self._words[i]
            for g in GENERATORS:
                if self._rmul[i][g] != -1:
                    continue
                candidate = word_i + bytes((g,))
                j = self._all_words.get(candidate)
                if j is None:
                    j = self._intern(self.braid.closure(candidate), n + 1)
                    new_stratum.append(j)
                self._rmul[i][g] = j
                self._rmul[j][g] = i
                self._rdesc[j] |= 1 << g
        self._strata.append(new_stratum)
        self._complete_length = n + 1
        if not new_stratum:
            self._exhausted = True

    def _extend_to(self, length: int) -> None:
        while self._complete_length < length and not self._exhausted:
            self._build_next_stratum()

    # ----- basic operations ---------------------------------------------

    def neutral(self) -> Element:
        return self._elements[0]

    def _rmul_index(self, i: int, g: int) -> int:
        j = self._rmul[i][g]
        if j == -1:
            self._extend_to(self._lengths[i] + 1)
            j = self._rmul[i][g]
        return j

    def reduce(self, word) -> Element:
        """Element spelled by an arbitrary word (Tits' algorithm under the hood)."""
        w = as_word(word)
        if len(w) > self.max_word_length:
            raise WordLengthCapError(
                f"word of length {len(w)} exceeds the cap {self.max_word_length}"
            )
        nf = self.reduction_cache.get(w)
        if nf is not None:
            self._extend_to(len(nf))
            return self._elements[self._all_words[nf]]
        i = 0
        for g in w:
            i = self._rmul_index(i, g)
        self.reduction_cache.put(w, self._words[i])
        return self._elements[i]

    def element(self, text: str) -> Element:
        """Convenience spelling of reduce() for string input."""
        return self.reduce(text)

    def is_reduced(self, word) -> bool:
        w = as_word(word)
        if len(w) > self.max_word_length:
            raise WordLengthCapError(
                f"word of length {len(w)} exceeds the cap {self.max_word_length}"
            )
        return self.reduce(w).length == len(w)

    def equal(self, a, b) -> bool:
        return self.reduce(a) is self.reduce(b)

    def braid_closure(self, word) -> frozenset[Word]:
        """All reduced words of the element spelled by a *reduced* word."""
        w = as_word(word)
        if not self.is_reduced(w):
            raise NotReducedError(f"word {word_to_text(w)!r} is not reduced")
        return self.braid.closure(w)

    def multiply_gen(self, w: Element, g: int, side: str = "right") -> Element:
        if side == "right":
            return self._elements[self._rmul_index(w.index, g)]
        if side == "left":
            inv = self.inverse(w)
            return self.inverse(self._elements[self._rmul_index(inv.index, g)])
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def multiply(self, w: Element, u: Element) -> Element:
        i = w.index
        for g in u.word:
            i = self._rmul_index(i, g)
        return self._elements[i]

    def inverse(self, w: Element) -> Element:
        j = self._inv[w.index]
        if j == -1:
            j = self._all_words[w.word[::-1]]
            self._inv[w.index] = j
            self._inv[j] = w.index
        return self._elements[j]

    def has_descent(self, w: Element, g: int, side: str = "right") -> bool:
        if side == "right":
            return bool(self._rdesc[w.index] >> g & 1)
        return bool(self._rdesc[self.inverse(w).index] >> g & 1)

    def descents(self, w: Element, side: str = "right") -> frozenset[int]:
        if side == "right":
            return w.right_descents
        return w.left_descents

    # ----- enumeration ---------------------------------------------------

    def enumerate_up_to(self, length: int) -> list[Element]:
        """All elements of length <= the cap, sorted by (length, word)."""
        self._extend_to(length)
        out: list[Element] = []
        for n in range(min(length, self._complete_length) + 1):
            out.extend(sorted((self._elements[i] for i in self._strata[n]),
                              key=lambda e: e.word))
        return out

    def stratum(self, length: int) -> list[Element]:
        self._extend_to(length)
        if length > self._complete_length:
            return []
        return sorted((self._elements[i] for i in self._strata[length]),
                      key=lambda e: e.word)

    # ----- parabolic subgroups -------------------------------------------

    def longest_parabolic(self, gens) -> Element:
        """Longest element of the standard parabolic on the given generators.

        The full generator set is rejected: the engine only guarantees finite
        parabolics for at most two generators.
        """
        gen_set = frozenset(gens)
        if not gen_set <= set(GENERATORS):
            raise ValueError(f"unknown generators in {gens!r}")
        if len(gen_set) == 3:
            raise InfiniteParabolicError("the full group has no longest element here")
        if not gen_set:
            return self.neutral()
        if len(gen_set) == 1:
            (g,) = gen_set
            return self.reduce(bytes((g,)))
        a, b = sorted(gen_set)
        m = self.braid.order(a, b)
        return self.reduce(bytes((a if i % 2 == 0 else b) for i in range(m)))

    def parabolic_elements(self, gens) -> list[Element]:
        """All elements of a standard parabolic on at most two generators."""
        gen_set = frozenset(gens)
        if len(gen_set) == 3:
            raise InfiniteParabolicError("refusing to enumerate the full group here")
        if not gen_set:
            return [self.neutral()]
        if len(gen_set) == 1:
            (g,) = gen_set
            return [self.neutral(), self.reduce(bytes((g,)))]
        a, b = sorted(gen_set)
        m = self.braid.order(a, b)
        out = {self.neutral()}
        for k in range(1, m + 1):
            out.add(self.reduce(bytes((a if i % 2 == 0 else b) for i in range(k))))
            out.add(self.reduce(bytes((b if i % 2 == 0 else a) for i in range(k))))
        return sorted(out, key=lambda e: e.sort_key)

    def parabolic_decompose(self, w: Element, gens, side: str = "right"
                            ) -> tuple[Element, Element]:
        """Split w across a standard parabolic, factors returned in product order.

        side='right': w = x * u with u in the parabolic and x shortest in its
        coset (no right descent of x lies in the parabolic); side='left' is the
        mirror image, returning (u, x).
        """
        gen_set = frozenset(gens)
        if not gen_set <= set(GENERATORS):
            raise ValueError(f"unknown generators in {gens!r}")
        if side not in ("right", "left"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        letters: list[int] = []
        v = w
        while True:
            hits = [g for g in sorted(gen_set) if self.has_descent(v, g, side)]
            if not hits:
                break
            g = hits[0]
            v = self.multiply_gen(v, g, side)
            letters.append(g)
        if side == "right":
            u = self.reduce(bytes(reversed(letters)))
            return v, u
        u = self.reduce(bytes(letters))
        return u, v

    # ----- suffixes and Bruhat order ---------------------------------------

    def ends_with_reduced(self, w: Element, suffix) -> bool:
        """True iff l(w) = l(w * suffix^-1) + l(suffix); the suffix must be reduced."""
        sfx = as_word(suffix)
        if not self.is_reduced(sfx):
            raise NotReducedError(f"suffix {word_to_text(sfx)!r} is not reduced")
        i = w.index
        for g in reversed(sfx):
            if not self._rdesc[i] >> g & 1:
                return False
            i = self._rmul[i][g]
        return True

    def starts_with_reduced(self, w: Element, prefix) -> bool:
        pfx = as_word(prefix)
        return self.ends_with_reduced(self.inverse(w), pfx[::-1])

    def bruhat_leq(self, y: Element, w: Element) -> bool:
        """Bruhat order via the descent recursion.

        With g a right descent of w and v = wg:  if g also shortens y the
        relation delegates to yg <= v, otherwise to y <= v.
        """
        if y is w:
            return True
        if y.length >= w.length:
            return False
        if y.length == 0:
            return True
        key = (y.index, w.index)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        mask = self._rdesc[w.index]
        g = next(g for g in GENERATORS if mask >> g & 1)
        v = self._elements[self._rmul[w.index][g]]
        if self._rdesc[y.index] >> g & 1:
            result = self.bruhat_leq(self._elements[self._rmul[y.index][g]], v)
        else:
            result = self.bruhat_leq(y, v)
        self._bruhat[key] = result
        return result

    def bruhat_interval_below(self, w: Element) -> list[Element]:
        """All y <= w, sorted by (length, word)."""
        return [y for y in self.enumerate_up_to(w.length) if self.bruhat_leq(y, w)]

    # ----- cache persistence ----------------------------------------------

    def save_reduction_cache(self, path) -> None:
        self.reduction_cache.save(path)

    def load_reduction_cache(self, path) -> None:
        self.reduction_cache = ReductionCache.load(path, self.params.m_sr, self.params.m_st)
