"""Exact coefficient arithmetic for rank-3 Hecke computations.

Three closely related coefficient rings show up:

* ``XiPoly``    -- integer polynomials in xi = q^(1/2) - q^(-1/2).  Structure
                   constants of the normalized standard basis live here.
* ``HalfLaurent`` -- integer Laurent polynomials in q^(1/2).  Exponents are
                   stored *doubled*, so the monomial q^(n/2) sits at integer
                   key n and no fractional arithmetic ever happens.
* ``QPoly``     -- ordinary integer polynomials in q (Kazhdan-Lusztig
                   polynomials).

Conversions between XiPoly and HalfLaurent are exact ring maps; the inverse
direction is partial and raises ``NotInXiSpanError`` when the input is not an
integer combination of powers of xi.  The telltale invariant: the image of
the xi-span is exactly the set of Laurent polynomials fixed by the sign-twisted
mirror q^(1/2) -> -q^(-1/2).

All coefficients are Python ints, so overflow cannot occur.
"""

from __future__ import annotations

from typing import Iterable


class NotInXiSpanError(ValueError):
    """Raised when a HalfLaurent value is not an integer polynomial in xi."""


def _dense_trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = tuple(coeffs)
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return cs[:n]


def _dense_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _dense_trim(out)


def _dense_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _dense_trim(out)


def _dense_text(coeffs: tuple[int, ...], var: str) -> str:
    if not coeffs:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}{var}" if k == 1 else f"{mag}{var}^{k}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


class XiPoly:
    """Integer polynomial in xi = q^(1/2) - q^(-1/2), dense coefficient tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _dense_trim(coeffs))

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("XiPoly is immutable")

    @classmethod
    def from_int(cls, n: int) -> "XiPoly":
        return cls((n,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree in xi; None plays the role of -infinity for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: "XiPoly") -> "XiPoly":
        if not isinstance(other, XiPoly):
            return NotImplemented
        return XiPoly(_dense_add(self.coeffs, other.coeffs))

    def __neg__(self) -> "XiPoly":
        return XiPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "XiPoly") -> "XiPoly":
        if not isinstance(other, XiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XiPoly):
            return XiPoly(_dense_mul(self.coeffs, other.coeffs))
        if isinstance(other, int):
            return XiPoly(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, XiPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("XiPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def to_text(self) -> str:
        return _dense_text(self.coeffs, "x")

    def __repr__(self) -> str:
        return f"XiPoly({self.to_text()!r})"


XI_ZERO = XiPoly()
XI_ONE = XiPoly((1,))
XI = XiPoly((0, 1))


class QPoly:
    """Integer polynomial in q, dense coefficient tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _dense_trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def from_int(cls, n: int) -> "QPoly":
        return cls((n,))

    @classmethod
    def q_power(cls, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("QPoly has no negative powers")
        return cls((0,) * k + (1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly(_dense_add(self.coeffs, other.coeffs))

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QPoly):
            return QPoly(_dense_mul(self.coeffs, other.coeffs))
        if isinstance(other, int):
            return QPoly(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def to_text(self) -> str:
        return _dense_text(self.coeffs, "q")

    def __repr__(self) -> str:
        return f"QPoly({self.to_text()!r})"


Q_ZERO = QPoly()
Q_ONE = QPoly((1,))


def _exp_text(n: int) -> str:
    # doubled exponent n stands for q^(n/2)
    if n % 2 == 0:
        k = n // 2
        return "q" if k == 1 else f"q^{k}" if k >= 0 else f"q^({k})"
    return f"q^({n}/2)"


class HalfLaurent:
    """Integer Laurent polynomial in q^(1/2); term map keyed by doubled exponent."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        clean = {n: c for n, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HalfLaurent is immutable")

    @classmethod
    def from_int(cls, n: int) -> "HalfLaurent":
        return cls({0: n})

    @classmethod
    def monomial(cls, doubled_exp: int, coeff: int = 1) -> "HalfLaurent":
        """coeff * q^(doubled_exp / 2)."""
        return cls({doubled_exp: coeff})

    @classmethod
    def from_qpoly(cls, p: QPoly, shift: int = 0) -> "HalfLaurent":
        """Image of p(q), then multiplied by q^(shift/2)."""
        return cls({2 * k + shift: c for k, c in enumerate(p.coeffs)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Top exponent measured in units of q^(1/2); None for the zero value."""
        return max(self.terms) if self.terms else None

    @property
    def valuation(self) -> int | None:
        return min(self.terms) if self.terms else None

    def coeff(self, doubled_exp: int) -> int:
        return self.terms.get(doubled_exp, 0)

    def bar(self) -> "HalfLaurent":
        """The mirror q^(1/2) -> q^(-1/2)."""
        return HalfLaurent({-n: c for n, c in self.terms.items()})

    @property
    def is_bar_symmetric(self) -> bool:
        return all(self.terms.get(-n, 0) == c for n, c in self.terms.items())

    def shifted(self, doubled_exp: int) -> "HalfLaurent":
        return HalfLaurent({n + doubled_exp: c for n, c in self.terms.items()})

    def __add__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out = dict(self.terms)
        for n, c in other.terms.items():
            out[n] = out.get(n, 0) + c
        return HalfLaurent(out)

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({n: -c for n, c in self.terms.items()})

    def __sub__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HalfLaurent):
            out: dict[int, int] = {}
            for n, c in self.terms.items():
                for m, d in other.terms.items():
                    k = n + m
                    out[k] = out.get(k, 0) + c * d
            return HalfLaurent(out)
        if isinstance(other, int):
            return HalfLaurent({n: c * other for n, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, HalfLaurent) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("HalfLaurent", tuple(sorted(self.terms.items()))))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for n in sorted(self.terms):
            c = self.terms[n]
            if n == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}{_exp_text(n)}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"HalfLaurent({self.to_text()!r})"


HALF_ZERO = HalfLaurent()
HALF_ONE = HalfLaurent({0: 1})
HALF_XI = HalfLaurent({1: 1, -1: -1})  # q^(1/2) - q^(-1/2)


def xi_to_half(p: XiPoly) -> HalfLaurent:
    """Exact ring map: substitute xi = q^(1/2) - q^(-1/2)."""
    out = HALF_ZERO
    power = HALF_ONE
    for c in p.coeffs:
        if c:
            out = out + power * c
        power = power * HALF_XI
    return out


def half_to_xi(p: HalfLaurent) -> XiPoly:
    """Partial inverse of xi_to_half.

    Peels the top monomial against the matching power of xi; any remainder
    that escapes downward past exponent zero means the input was not an
    integer combination of xi powers.
    """
    residue = p
    coeffs: dict[int, int] = {}
    while not residue.is_zero:
        n = residue.degree
        if n is None or n < 0:
            raise NotInXiSpanError(f"not in the xi span: {p.to_text()}")
        c = residue.coeff(n)
        coeffs[n] = coeffs.get(n, 0) + c
        residue = residue - xi_to_half(XiPoly((0,) * n + (1,))) * c
        new_deg = residue.degree
        if new_deg is not None and new_deg >= n:
            raise NotInXiSpanError(f"not in the xi span: {p.to_text()}")
    top = max(coeffs) if coeffs else -1
    return XiPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)))
