"""Sparse integer polynomials and truncated power series.

A :class:`MultiPoly` maps exponent tuples to ``int`` coefficients.  A
:class:`Series` is a polynomial kept modulo monomials whose weighted
degree exceeds ``trunc``; the default weight of every variable is 1
(total degree).  Bivariate series in x, y truncated in x alone use
weights ``(1, 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[tuple, int]] = None):
        self.nvars = nvars
        self.terms: dict[tuple, int] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if c:
                self.terms[tuple(e)] = self.terms.get(tuple(e), 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def const(cls, c: int, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        """The variable x_i (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, support: Iterable[int], nvars: int, coef: int = 1) -> "MultiPoly":
        """``coef * prod(x_i for i in support)`` (1-based indices, repeats allowed)."""
        e = [0] * nvars
        for i in support:
            e[i - 1] += 1
        return cls(nvars, {tuple(e): coef})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return MultiPoly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, p: int):
        out = MultiPoly.const(1, self.nvars)
        for _ in range(p):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.format()!r})"

    def __str__(self):
        return self.format()

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def constant(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self, weights: Optional[Sequence[int]] = None) -> int:
        if not self.terms:
            return -1
        w = weights or (1,) * self.nvars
        return max(sum(a * b for a, b in zip(e, w)) for e in self.terms)

    def extend(self, nvars: int, offset: int = 0) -> "MultiPoly":
        """Embed into ``nvars`` variables, shifting x_i to x_{i+offset}."""
        pad = nvars - self.nvars - offset
        if pad < 0 or offset < 0:
            raise ValueError("target ring is too small")
        return MultiPoly(nvars, {(0,) * offset + e + (0,) * pad: c for e, c in self.terms.items()})

    def evaluate(self, point: Sequence):
        """Value at ``point``; works for ints, Fractions, floats, complex."""
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, a in zip(point, e):
                if a:
                    t = t * x**a
            total = total + t
        return total

    def substitute(self, i: int, value) -> "MultiPoly":
        """Set x_i (1-based) to an integer, keeping the variable slot."""
        out: dict[tuple, int] = {}
        for e, c in self.terms.items():
            f = list(e)
            a = f[i - 1]
            f[i - 1] = 0
            f = tuple(f)
            out[f] = out.get(f, 0) + c * value**a
        return MultiPoly(self.nvars, out)

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Graded lexicographic order with x_1 < x_2 < ... ."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0][::-1]))

    def format(self, names: Optional[Sequence[str]] = None, descending: bool = False) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(1, self.nvars + 1)]
        items = self.sorted_terms()
        if descending:
            items.reverse()
        parts = []
        for e, c in items:
            mono = "*".join(f"{v}^{a}" if a > 1 else v for v, a in zip(names, e) if a)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coef": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, items: list, nvars: Optional[int] = None) -> "MultiPoly":
        if nvars is None:
            nvars = len(items[0]["exps"]) if items else 0
        return cls(nvars, {tuple(t["exps"]): int(t["coef"]) for t in items})


def one(nvars: int) -> MultiPoly:
    return MultiPoly.const(1, nvars)


def evaluate_exact(poly: MultiPoly, point: Sequence) -> Fraction:
    return Fraction(poly.evaluate([Fraction(x) for x in point]))


@dataclass(frozen=True)
class Series:
    """A polynomial modulo monomials of weighted degree > ``trunc``."""

    poly: MultiPoly
    trunc: int
    weights: tuple = ()

    def __post_init__(self):
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * self.poly.nvars)
        object.__setattr__(self, "poly", self._cut(self.poly))

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def _wdeg(self, e: tuple) -> int:
        return sum(a * b for a, b in zip(e, self.weights))

    def _cut(self, p: MultiPoly) -> MultiPoly:
        return MultiPoly(p.nvars, {e: c for e, c in p.terms.items() if self._wdeg(e) <= self.trunc})

    def _like(self, p) -> "Series":
        if isinstance(p, Series):
            return p
        if isinstance(p, int):
            p = MultiPoly.const(p, self.nvars)
        return Series(p, self.trunc, self.weights)

    def graded(self) -> list[MultiPoly]:
        """Homogeneous pieces by weighted degree 0..trunc."""
        parts: list[dict] = [{} for _ in range(self.trunc + 1)]
        for e, c in self.poly.terms.items():
            parts[self._wdeg(e)][e] = c
        return [MultiPoly(self.nvars, d) for d in parts]

    def __add__(self, other):
        return Series(self.poly + self._like(other).poly, self.trunc, self.weights)

    __radd__ = __add__

    def __neg__(self):
        return Series(-self.poly, self.trunc, self.weights)

    def __sub__(self, other):
        return self + (-self._like(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._like(other)
        a, b = self.graded(), other.graded()
        out = MultiPoly(self.nvars)
        for i, pa in enumerate(a):
            if not pa:
                continue
            for j in range(self.trunc + 1 - i):
                if b[j]:
                    out = out + pa * b[j]
        return Series(out, self.trunc, self.weights)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Reciprocal; the weight-0 part must be the constant 1."""
        g = self.graded()
        if g[0] != one(self.nvars):
            raise ZeroDivisionError("series inverse needs weight-0 part equal to 1")
        inv = [one(self.nvars)]
        for d in range(1, self.trunc + 1):
            acc = MultiPoly(self.nvars)
            for e in range(1, d + 1):
                if g[e]:
                    acc = acc - g[e] * inv[d - e]
            inv.append(acc)
        total = MultiPoly(self.nvars)
        for p in inv:
            total = total + p
        return Series(total, self.trunc, self.weights)

    def __truediv__(self, other):
        return self * self._like(other).inverse()

    def __rtruediv__(self, other):
        return self._like(other) * self.inverse()

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.trunc == other.trunc and self.weights == other.weights and self.poly == other.poly

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.poly.coefficient(exps)

    def to_json(self) -> dict:
        return {"trunc": self.trunc, "terms": self.poly.to_json()}

    @classmethod
    def from_json(cls, obj: dict, nvars: Optional[int] = None, weights: tuple = ()) -> "Series":
        return cls(MultiPoly.from_json(obj["terms"], nvars), int(obj["trunc"]), weights)


class UniSeries:
    """Integer power series in one variable, truncated at degree ``trunc``."""

    def __init__(self, coeffs: Sequence, trunc: int):
        self.trunc = trunc
        c = list(coeffs)[: trunc + 1]
        self.coeffs = c + [0] * (trunc + 1 - len(c))

    def _like(self, other) -> "UniSeries":
        if isinstance(other, UniSeries):
            return other
        return UniSeries([other], self.trunc)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __add__(self, other):
        other = self._like(other)
        return UniSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    __radd__ = __add__

    def __neg__(self):
        return UniSeries([-a for a in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-self._like(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniSeries):
            return UniSeries([a * other for a in self.coeffs], self.trunc)
        out = [0] * (self.trunc + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.trunc + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return UniSeries(out, self.trunc)

    __rmul__ = __mul__

    def inverse(self) -> "UniSeries":
        c = self.coeffs
        if c[0] != 1:
            raise ZeroDivisionError("series inverse needs constant term 1")
        inv = [c[0]]
        for d in range(1, self.trunc + 1):
            acc = 0
            for e in range(1, d + 1):
                acc = acc - c[e] * inv[d - e]
            inv.append(acc)
        return UniSeries(inv, self.trunc)

    def __truediv__(self, other):
        return self * self._like(other).inverse()

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __repr__(self):
        return f"UniSeries({self.coeffs!r}, trunc={self.trunc})"

    def to_json(self) -> dict:
        return {
            "trunc": self.trunc,
            "coeffs": [c.to_json() if isinstance(c, MultiPoly) else str(c) for c in self.coeffs],
        }
