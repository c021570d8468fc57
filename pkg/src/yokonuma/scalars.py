"""Exact scalars: the cyclotomic field Q(zeta_M) and rational functions in q over it.

A :class:`Scalar` is stored as ``q**shift * N(q) / D(q)`` where

* ``N`` is a polynomial in q with coefficients in Q(zeta_M), kept as a tuple
  of ``phi(M)`` rational polynomials (one per power-basis element zeta^j),
* ``D`` is a monic rational polynomial with nonzero constant term.

Canonical form: ``q`` does not divide every component of ``N``, and
``gcd(D, N_0, ..., N_{phi-1}) = 1``.  Because ``D`` may always be chosen
rational (multiply through by Galois conjugates), this makes the
representation unique, so structural equality is field equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

from flint import fmpq, fmpq_poly, fmpz_poly

__all__ = [
    "CycloField",
    "CycloNumber",
    "Scalar",
    "Specialization",
    "GENERIC",
    "PoleAtSpecialization",
    "cyclo_field",
    "quantum_characteristic",
]


class PoleAtSpecialization(ZeroDivisionError):
    """The denominator of a scalar vanishes under a specialization."""


def _totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


_ZERO_POLY = fmpq_poly([])
_ONE_POLY = fmpq_poly([1])


def _to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return fmpq(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


def _fmpq_to_fraction(x: fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _valuation(p: fmpq_poly) -> int:
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    raise ValueError("valuation of zero polynomial")


class CycloField:
    """The field Q(zeta_M) = Q[x]/(Phi_M(x)), one instance per order ``M``."""

    _instances: dict[int, "CycloField"] = {}

    def __new__(cls, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        inst = cls._instances.get(order)
        if inst is None:
            inst = super().__new__(cls)
            inst._init(order)
            cls._instances[order] = inst
        return inst

    def __reduce__(self):
        return (CycloField, (self.order,))

    def _init(self, order: int) -> None:
        self.order = order
        self.degree = _totient(order)
        self.modulus = fmpq_poly(fmpz_poly.cyclotomic(order).coeffs())
        # power-basis vectors of zeta^k for 0 <= k < M
        self._powers: list[tuple[fmpq, ...]] = []
        for k in range(order):
            red = fmpq_poly([0] * k + [1]) % self.modulus
            cs = list(red.coeffs()) + [fmpq(0)] * self.degree
            self._powers.append(tuple(cs[: self.degree]))
        # zeta^k for degree <= k <= 2*degree-2, needed when folding products
        self._fold = [self._powers[k % order] for k in range(2 * self.degree - 1)]
        self.units = [k for k in range(1, order + 1) if gcd(k, order) == 1]

    def __repr__(self) -> str:
        return f"CycloField({self.order})"

    # -- constructors -------------------------------------------------
    def zeta_power(self, k: int) -> "CycloNumber":
        """zeta_M ** k."""
        return CycloNumber._from_vector(self, self._powers[k % self.order])

    def root(self, r: int, k: int) -> "CycloNumber":
        """The ordered root zeta_k = zeta_r**(k-1), 1 <= k <= r."""
        if self.order % r:
            raise ValueError(f"{r} does not divide {self.order}")
        return self.zeta_power((self.order // r) * (k - 1))

    def roots(self, r: int) -> list["CycloNumber"]:
        return [self.root(r, k) for k in range(1, r + 1)]

    def number(self, x) -> "CycloNumber":
        if isinstance(x, CycloNumber):
            return x.embed(self)
        return CycloNumber(self, fmpq_poly([_to_fmpq(x)]))

    @property
    def q(self) -> "Scalar":
        return Scalar._raw(self, 1, self._const_comps(_ONE_POLY), _ONE_POLY)

    def scalar(self, x) -> "Scalar":
        return Scalar.coerce(self, x)

    @property
    def zero(self) -> "Scalar":
        return Scalar._zero(self)

    @property
    def one(self) -> "Scalar":
        return Scalar._raw(self, 0, self._const_comps(_ONE_POLY), _ONE_POLY)

    def q_power(self, k: int) -> "Scalar":
        return Scalar._raw(self, k, self._const_comps(_ONE_POLY), _ONE_POLY)

    def _const_comps(self, p: fmpq_poly) -> tuple:
        return (p,) + (_ZERO_POLY,) * (self.degree - 1)

    def zeta_scalar(self, k: int) -> "Scalar":
        """zeta_M ** k as a constant scalar."""
        return Scalar._make(self, 0, tuple(fmpq_poly([c]) for c in self._powers[k % self.order]), _ONE_POLY)

    # -- component arithmetic -----------------------------------------
    def _mul_comps(self, a: tuple, b: tuple) -> tuple:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [_ZERO_POLY] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if bj.is_zero():
                    continue
                prod[i + j] = prod[i + j] + ai * bj
        out = list(prod[:d])
        for k in range(d, 2 * d - 1):
            if prod[k].is_zero():
                continue
            for j, c in enumerate(self._fold[k]):
                if c != 0:
                    out[j] = out[j] + prod[k] * c
        return tuple(out)

    def _conj_comps(self, a: tuple, k: int) -> tuple:
        """Apply the Galois automorphism zeta -> zeta**k."""
        d = self.degree
        out = [_ZERO_POLY] * d
        for j, aj in enumerate(a):
            if aj.is_zero():
                continue
            vec = self._powers[(j * k) % self.order]
            for i, c in enumerate(vec):
                if c != 0:
                    out[i] = out[i] + aj * c
        return tuple(out)


@lru_cache(maxsize=None)
def cyclo_field(order: int) -> CycloField:
    return CycloField(order)


# ---------------------------------------------------------------------------
class CycloNumber:
    """An element of Q(zeta_M), stored as a polynomial reduced mod Phi_M."""

    __slots__ = ("field", "poly", "_hash")

    def __init__(self, field: CycloField, poly: fmpq_poly):
        self.field = field
        self.poly = poly % field.modulus if poly.degree() >= field.degree else poly
        self._hash = None

    @classmethod
    def _from_vector(cls, field: CycloField, vec: Iterable) -> "CycloNumber":
        return cls(field, fmpq_poly([_to_fmpq(c) for c in vec]))

    @classmethod
    def from_vector(cls, field: CycloField, vec: Iterable) -> "CycloNumber":
        vec = list(vec)
        if len(vec) != field.degree:
            raise ValueError("coefficient vector has wrong length")
        return cls._from_vector(field, vec)

    @property
    def ambient_order(self) -> int:
        return self.field.order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        cs = list(self.poly.coeffs()) + [fmpq(0)] * self.field.degree
        return tuple(_fmpq_to_fraction(c) for c in cs[: self.field.degree])

    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            if other.field is not self.field:
                raise ValueError("mixing different cyclotomic fields")
            return other
        return CycloNumber(self.field, fmpq_poly([_to_fmpq(other)]))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    def __add__(self, other):
        return CycloNumber(self.field, self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __sub__(self, other):
        return CycloNumber(self.field, self.poly - self._coerce(other).poly)

    def __rsub__(self, other):
        return CycloNumber(self.field, self._coerce(other).poly - self.poly)

    def __neg__(self):
        return CycloNumber(self.field, -self.poly)

    def __mul__(self, other):
        return CycloNumber(self.field, self.poly * self._coerce(other).poly)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.poly.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = self.poly.xgcd(self.field.modulus)
        # g is a nonzero constant since Phi_M is irreducible
        return CycloNumber(self.field, s * (1 / g[0]))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloNumber(self.field, _ONE_POLY)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, fmpq)):
            other = self._coerce(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.field is other.field and self.poly == other.poly

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.order, tuple(self.poly.coeffs())))
        return self._hash

    def conjugate(self, k: int) -> "CycloNumber":
        comps = self.field._conj_comps(tuple(fmpq_poly([c]) for c in self.coeffs), k)
        return CycloNumber(self.field, fmpq_poly([c[0] if not c.is_zero() else 0 for c in comps]))

    def embed(self, field: CycloField) -> "CycloNumber":
        """Image under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M**(M/m)."""
        if field is self.field:
            return self
        if field.order % self.field.order:
            raise ValueError("field does not embed")
        step = field.order // self.field.order
        out = fmpq_poly([])
        for j, c in enumerate(self.coeffs):
            if c:
                out += fmpq_poly([0] * (j * step) + [1]) * _to_fmpq(c)
        return CycloNumber(field, out)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field: CycloField, data: list[str]) -> "CycloNumber":
        return cls.from_vector(field, [Fraction(s) for s in data])

    def _cost(self) -> int:
        return self.poly.length()

    def __repr__(self) -> str:
        return f"CycloNumber({self.field.order}, {self})"

    def __str__(self) -> str:
        return _format_cyclo(self.coeffs, "z")


def _format_cyclo(coeffs, var: str) -> str:
    terms = []
    for j, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


# ---------------------------------------------------------------------------
Number = Union[int, Fraction, fmpq, CycloNumber, "Scalar"]


class Scalar:
    """A rational function in q with coefficients in Q(zeta_M), in canonical form."""

    __slots__ = ("field", "shift", "comps", "den", "_hash")

    def __init__(self, *args, **kwargs):
        raise TypeError("use CycloField.scalar / Scalar.coerce to build scalars")

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, field, shift, comps, den) -> "Scalar":
        self = object.__new__(cls)
        self.field = field
        self.shift = shift
        self.comps = comps
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _zero(cls, field) -> "Scalar":
        return cls._raw(field, 0, (_ZERO_POLY,) * field.degree, _ONE_POLY)

    @classmethod
    def _make(cls, field, shift: int, comps: tuple, den: fmpq_poly) -> "Scalar":
        """Bring (shift, comps, den) to canonical form."""
        if all(c.is_zero() for c in comps):
            return cls._zero(field)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.degree() > 0:
            v = _valuation(den)
            if v:
                den = den.right_shift(v)
                shift -= v
            g = den
            for c in comps:
                if not c.is_zero():
                    g = g.gcd(c)
                    if g.degree() == 0:
                        break
            if g.degree() > 0:
                den = den // g
                comps = tuple(c // g for c in comps)
        lc = den.leading_coefficient()
        if lc != 1:
            inv = 1 / lc
            den = den * inv
            comps = tuple(c * inv for c in comps)
        v = min(_valuation(c) for c in comps if not c.is_zero())
        if v:
            comps = tuple(c.right_shift(v) for c in comps)
            shift += v
        return cls._raw(field, shift, comps, den)

    @classmethod
    def coerce(cls, field: CycloField, x) -> "Scalar":
        if isinstance(x, Scalar):
            if x.field is field:
                return x
            return x.embed(field)
        if isinstance(x, CycloNumber):
            x = x.embed(field)
            comps = tuple(fmpq_poly([_to_fmpq(c)]) for c in x.coeffs)
            return cls._make(field, 0, comps, _ONE_POLY)
        c = _to_fmpq(x)
        if c == 0:
            return cls._zero(field)
        return cls._raw(field, 0, field._const_comps(fmpq_poly([c])), _ONE_POLY)

    @classmethod
    def from_laurent(cls, field: CycloField, terms: dict) -> "Scalar":
        """Build from ``{exponent: coefficient}`` with rational or CycloNumber coefficients."""
        if not terms:
            return cls._zero(field)
        low = min(terms)
        comps = [[fmpq(0)] * (max(terms) - low + 1) for _ in range(field.degree)]
        for e, c in terms.items():
            if isinstance(c, CycloNumber):
                vec = c.embed(field).coeffs
            else:
                vec = (_to_fmpq(c),) + (0,) * (field.degree - 1)
            for j, cj in enumerate(vec):
                comps[j][e - low] += _to_fmpq(cj)
        return cls._make(field, low, tuple(fmpq_poly(c) for c in comps), _ONE_POLY)

    def embed(self, field: CycloField) -> "Scalar":
        if field is self.field:
            return self
        if field.order % self.field.order:
            raise ValueError("field does not embed")
        step = field.order // self.field.order
        out = [_ZERO_POLY] * field.degree
        for j, aj in enumerate(self.comps):
            if aj.is_zero():
                continue
            for i, c in enumerate(field._powers[(j * step) % field.order]):
                if c != 0:
                    out[i] = out[i] + aj * c
        return Scalar._make(field, self.shift, tuple(out), self.den)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return self.comps[0].is_zero() and all(c.is_zero() for c in self.comps)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_laurent_integral(self) -> bool:
        return self.den.degree() == 0

    def is_constant(self) -> bool:
        return self.is_zero() or (
            self.shift == 0 and self.den.degree() == 0 and all(c.degree() <= 0 for c in self.comps)
        )

    def _cost(self) -> int:
        return sum(c.length() for c in self.comps) + 2 * self.den.length()

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise ValueError("mixing scalars over different fields")
            return other
        return Scalar.coerce(self.field, other)

    def __add__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        s1, s2 = self.shift, other.shift
        m = min(s1, s2)
        d1, d2 = self.den, other.den
        if d1.degree() == 0 and d2.degree() == 0:
            comps = tuple(
                a.left_shift(s1 - m) + b.left_shift(s2 - m) for a, b in zip(self.comps, other.comps)
            )
            return Scalar._make(self.field, m, comps, _ONE_POLY)
        if d1 == d2:
            comps = tuple(
                a.left_shift(s1 - m) + b.left_shift(s2 - m) for a, b in zip(self.comps, other.comps)
            )
            return Scalar._make(self.field, m, comps, d1)
        g = d1.gcd(d2)
        f1 = d2 // g
        f2 = d1 // g
        comps = tuple(
            (a * f1).left_shift(s1 - m) + (b * f2).left_shift(s2 - m)
            for a, b in zip(self.comps, other.comps)
        )
        return Scalar._make(self.field, m, comps, d1 * f1)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.field, self.shift, tuple(-c for c in self.comps), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Scalar._zero(self.field)
        comps = self.field._mul_comps(self.comps, other.comps)
        shift = self.shift + other.shift
        if self.den.degree() == 0 and other.den.degree() == 0:
            if self.field.degree == 1:
                return Scalar._raw(self.field, shift, comps, _ONE_POLY)
            return Scalar._make(self.field, shift, comps, _ONE_POLY)
        return Scalar._make(self.field, shift, comps, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        F = self.field
        comps = self.comps
        if F.degree == 1:
            return Scalar._make(F, -self.shift, (self.den,), comps[0])
        adj = F._const_comps(_ONE_POLY)
        for k in F.units[1:]:
            adj = F._mul_comps(adj, F._conj_comps(comps, k))
        norm = F._mul_comps(comps, adj)
        assert all(c.is_zero() for c in norm[1:]), "norm is not rational"
        num = tuple(a * self.den for a in adj)
        return Scalar._make(F, -self.shift, num, norm[0])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction, fmpq, CycloNumber)):
                other = self._coerce(other)
            else:
                return NotImplemented
        return (
            self.field is other.field
            and self.shift == other.shift
            and self.den == other.den
            and all(a == b for a, b in zip(self.comps, other.comps))
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (
                    self.field.order,
                    self.shift,
                    tuple(tuple(c.coeffs()) for c in self.comps),
                    tuple(self.den.coeffs()),
                )
            )
        return self._hash

    # -- substitutions ------------------------------------------------
    def prime(self) -> "Scalar":
        """The substitution q -> -q**-1."""
        if self.is_zero():
            return self
        F = self.field
        d = max(c.degree() for c in self.comps)
        comps = tuple(_reverse_alternating(c, d) for c in self.comps)
        e = self.den.degree()
        den = _reverse_alternating(self.den, e)
        out = Scalar._make(F, -self.shift - d + e, comps, den)
        return -out if self.shift % 2 else out

    def conjugate(self, k: int) -> "Scalar":
        """Apply the Galois automorphism zeta_M -> zeta_M**k (q fixed)."""
        return Scalar._make(self.field, self.shift, self.field._conj_comps(self.comps, k), self.den)

    # -- inspection ---------------------------------------------------
    def numerator_terms(self) -> dict[int, CycloNumber]:
        F = self.field
        out: dict[int, CycloNumber] = {}
        length = max(c.length() for c in self.comps)
        for i in range(length):
            vec = [c[i] if i < c.length() else fmpq(0) for c in self.comps]
            if any(v != 0 for v in vec):
                out[i + self.shift] = CycloNumber._from_vector(F, vec)
        return out

    def denominator_terms(self) -> dict[int, Fraction]:
        return {i: _fmpq_to_fraction(c) for i, c in enumerate(self.den.coeffs()) if c != 0}

    def laurent_terms(self) -> dict[int, CycloNumber]:
        if not self.is_laurent_integral():
            raise ValueError("not a Laurent polynomial")
        return self.numerator_terms()

    def to_json(self) -> dict:
        num = {str(e): c.to_json() for e, c in sorted(self.numerator_terms().items())} if self else {}
        den = {str(e): str(c) for e, c in sorted(self.denominator_terms().items())}
        return {"num": num, "den": den}

    @classmethod
    def from_json(cls, field: CycloField, data: dict) -> "Scalar":
        num = cls.from_laurent(field, {int(e): CycloNumber.from_json(field, v) for e, v in data["num"].items()})
        den = cls.from_laurent(field, {int(e): Fraction(v) for e, v in data["den"].items()})
        return num / den

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        num = _format_laurent(self.numerator_terms())
        if self.den.degree() == 0:
            return num
        den = _format_laurent({e: c for e, c in self.denominator_terms().items()})
        return f"({num})/({den})"


def _reverse_alternating(p: fmpq_poly, d: int) -> fmpq_poly:
    """q**d * p(-1/q)."""
    cs = list(p.coeffs())
    out = [fmpq(0)] * (d + 1)
    for k, c in enumerate(cs):
        if c != 0:
            out[d - k] = -c if k % 2 else c
    return fmpq_poly(out)


def _format_laurent(terms: dict) -> str:
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        cs = str(c)
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if not mono:
            parts.append(cs if " " not in cs else f"({cs})")
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        elif " " in cs:
            parts.append(f"({cs})*{mono}")
        else:
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Specialization:
    """Either GENERIC (``order is None``) or q -> zeta_M**(M/order) inside Q(zeta_M)."""

    order: int | None = None
    ambient: int | None = None

    def __post_init__(self):
        if self.order is not None:
            if self.order < 1:
                raise ValueError("specialization order must be positive")
            amb = self.ambient if self.ambient is not None else self.order
            if amb % self.order:
                raise ValueError(f"order {self.order} does not divide ambient order {amb}")
            object.__setattr__(self, "ambient", amb)

    @classmethod
    def root_of_unity(cls, order: int, ambient: int | None = None) -> "Specialization":
        return cls(order, ambient)

    @property
    def is_generic(self) -> bool:
        return self.order is None

    def target_field(self, source: CycloField) -> CycloField:
        from math import lcm

        return CycloField(lcm(self.ambient, source.order))

    @property
    def e(self) -> int | None:
        """Minimal e with 1 + q^2 + ... + q^(2(e-1)) = 0, or None when no such e exists."""
        return quantum_characteristic(self.order)

    def apply(self, x):
        if self.order is None:
            return x
        if isinstance(x, CycloNumber):
            return x.embed(self.target_field(x.field))
        if not isinstance(x, Scalar):
            raise TypeError("can only specialize scalars")
        F = self.target_field(x.field)
        step = F.order // x.field.order
        e = F.order // self.order
        qv = F.zeta_power(e)
        num = CycloNumber(F, _ZERO_POLY)
        for j, aj in enumerate(x.comps):
            if aj.is_zero():
                continue
            num = num + _eval_poly(aj, qv) * F.zeta_power(j * step)
        den = _eval_poly(x.den, qv)
        if den.is_zero():
            raise PoleAtSpecialization(f"denominator of {x} vanishes at q = zeta_{self.order}")
        return num * F.zeta_power(e * x.shift) / den

    def __str__(self) -> str:
        return "generic" if self.order is None else f"q->zeta_{self.order}"


GENERIC = Specialization()


def _eval_poly(p: fmpq_poly, x: CycloNumber) -> CycloNumber:
    out = CycloNumber(x.field, _ZERO_POLY)
    for c in reversed(p.coeffs()):
        out = out * x + CycloNumber(x.field, fmpq_poly([c]))
    return out


def quantum_characteristic(order: int | None) -> int | None:
    if order is None:
        return None
    m = order // gcd(order, 2)  # multiplicative order of q^2
    return None if m == 1 else m
