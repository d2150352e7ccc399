"""The Hecke algebra in its normalized standard basis.

Basis elements are indexed by group elements; the normalization absorbs a
half-power of q per letter, so the multiplication rule by a generator g is

    B_w B_g = B_{wg}                 if the product lengthens w,
    B_w B_g = xi B_w + B_{wg}        if g is a right descent of w,

with xi = q^(1/2) - q^(-1/2).  Products of two basis elements therefore have
structure constants in Z[xi] (conjecturally with nonnegative coefficients;
the test-suite checks this exhaustively at desk scale rather than assuming it).

A vector is a plain dict mapping Element -> coefficient.  The generator rule
is coefficient-ring agnostic: callers pass the image of xi, which lets the
Kazhdan-Lusztig layer reuse the same folding with Laurent coefficients.
"""

from __future__ import annotations

from .coxeter import CoxeterGroup, Element
from .laurent import XI, XI_ONE, XiPoly

HeckeVector = dict


def mul_gen_right(group: CoxeterGroup, vec: HeckeVector, g: int, xi=XI) -> HeckeVector:
    """Right multiplication of a vector by the basis element of one generator."""
    out: HeckeVector = {}
    for v, c in vec.items():
        vg = group.multiply_gen(v, g)
        if group.has_descent(v, g):
            cur = out.get(v)
            out[v] = c * xi if cur is None else cur + c * xi
        cur = out.get(vg)
        out[vg] = c if cur is None else cur + c
    for v in [v for v, c in out.items() if c.is_zero]:
        del out[v]
    return out


class HeckeAlgebra:
    """Products and structure constants over one group.

    ``memo=True`` caches the intermediate vector after each prefix of the
    right factor's normal form (prefixes of normal forms are themselves normal
    forms, so the cache key is just a pair of element indices).  Off by
    default: the scans are fast enough without it, and the flag exists to make
    the speed/memory trade explicit.
    """

    def __init__(self, group: CoxeterGroup, memo: bool = False):
        self.group = group
        self.memo = memo
        self._prefix_cache: dict[tuple[int, int], HeckeVector] = {}

    def basis(self, w: Element) -> HeckeVector:
        return {w: XI_ONE}

    def product(self, w: Element, u: Element) -> HeckeVector:
        """The vector B_w B_u.  Treat the result as read-only."""
        if not self.memo:
            vec = {w: XI_ONE}
            for g in u.word:
                vec = mul_gen_right(self.group, vec, g)
            return vec
        return self._product_memo(w, u)

    def _product_memo(self, w: Element, u: Element) -> HeckeVector:
        if u.length == 0:
            return {w: XI_ONE}
        key = (w.index, u.index)
        vec = self._prefix_cache.get(key)
        if vec is None:
            last = u.word[-1]
            prev = self.group.multiply_gen(u, last)  # peel the final letter
            vec = mul_gen_right(self.group, self._product_memo(w, prev), last)
            self._prefix_cache[key] = vec
        return vec

    def f_coeff(self, w: Element, u: Element, v: Element) -> XiPoly:
        """Structure constant: the coefficient of B_v in B_w B_u."""
        return self.product(w, u).get(v, XiPoly())

    def max_f_degree(self, w: Element, u: Element) -> int:
        """Largest xi-degree over the support of B_w B_u (always >= 0)."""
        return max(c.degree for c in self.product(w, u).values())

    def degrees(self, vec: HeckeVector) -> dict[Element, int]:
        return {v: c.degree for v, c in vec.items()}
