"""Weighted polynomial rings and sparse exact polynomials."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from operator import add, sub

from .fields import QQ, Field, _mpq_type, _mpz_type
from .orders import MonomialOrder, compile_key

#: Degree of the zero polynomial; compares below every integer and equals none.
ZERO_DEGREE = -math.inf
#: Tag returned by :func:`weighted_degree` for polynomials with mixed degrees.
INHOMOGENEOUS = "inhomogeneous"

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")


def normalize_name(name: str) -> str:
    """Spelling-insensitive form of a variable name: ``x_1``, ``x_{1}`` and ``x1`` agree."""
    return re.sub(r"[_{}\s,]", "", name)


class GradedPolyRing:
    """``k[vars]`` with positive integer weights and an active monomial order.

    Equality ignores the active order: ``R.with_order(o) == R``.
    """

    def __init__(self, variables, weights=None, field: Field = QQ, order: MonomialOrder | None = None):
        names = tuple(variables)
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise ValueError("one weight per variable is required")
        if any(w < 1 for w in weights):
            raise ValueError("weights must be positive integers")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for v in names:
            if not _NAME.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        lookup = {}
        for v in names:
            k = normalize_name(v)
            if k in lookup:
                raise ValueError(f"variable names {lookup[k]!r} and {v!r} collide after normalization")
            lookup[k] = v
        self.names = names
        self.weights = weights
        self.field = field
        self.order = order if order is not None else MonomialOrder("grevlex")
        self.nvars = len(names)
        self._index = {v: i for i, v in enumerate(names)}
        self._lookup = lookup
        self._keys = {}
        self.key = self.order_key(self.order)

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, GradedPolyRing)
            and self.names == other.names
            and self.weights == other.weights
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.names, self.weights, self.field))

    def __repr__(self):
        return f"GradedPolyRing({list(self.names)!r}, weights={list(self.weights)!r}, field={self.field!r})"

    def __str__(self):
        return ", ".join(f"{v}:{w}" for v, w in zip(self.names, self.weights)) + f" over {self.field}"

    # -- variables ----------------------------------------------------------
    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            pass
        try:
            return self._index[self._lookup[normalize_name(name)]]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def resolve(self, name: str) -> str | None:
        """Canonical spelling of ``name`` in this ring, or ``None``."""
        if name in self._index:
            return name
        return self._lookup.get(normalize_name(name))

    def __contains__(self, name) -> bool:
        return isinstance(name, str) and self.resolve(name) is not None

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial._make(self, {tuple(e): self.field.one})

    __getitem__ = var

    @property
    def gens(self) -> list["Polynomial"]:
        return [self.var(v) for v in self.names]

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    # -- construction -------------------------------------------------------
    @property
    def zero(self) -> "Polynomial":
        return Polynomial._make(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        if not c:
            return self.zero
        return Polynomial._make(self, {(0,) * self.nvars: c})

    def monomial(self, exponents, coeff=1) -> "Polynomial":
        e = tuple(int(a) for a in exponents)
        if len(e) != self.nvars or min(e, default=0) < 0:
            raise ValueError("exponent vector does not fit the ring")
        return Polynomial(self, {e: coeff})

    def poly(self, terms) -> "Polynomial":
        return Polynomial(self, terms)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value.to_ring(self)
        if isinstance(value, str):
            from .parser import parse_polynomial

            return parse_polynomial(value, self)
        return self.const(value)

    def parse(self, text: str) -> "Polynomial":
        from .parser import parse_polynomial

        return parse_polynomial(text, self)

    # -- derived rings ------------------------------------------------------
    def order_key(self, order: MonomialOrder):
        k = self._keys.get(order)
        if k is None:
            k = compile_key(order, self.names, self.weights)
            self._keys[order] = k
        return k

    def with_order(self, order: MonomialOrder) -> "GradedPolyRing":
        if order == self.order:
            return self
        return GradedPolyRing(self.names, self.weights, self.field, order)

    def with_field(self, field: Field) -> "GradedPolyRing":
        return GradedPolyRing(self.names, self.weights, field, self.order)

    def extend(self, names, weights=None, order: MonomialOrder | None = None) -> "GradedPolyRing":
        names = tuple(names)
        if weights is None:
            weights = (1,) * len(names)
        if order is None and self.order.ranking is None and self.order.kind != "elim":
            order = MonomialOrder(self.order.kind)
        return GradedPolyRing(self.names + names, self.weights + tuple(weights), self.field, order)

    def drop(self, names) -> "GradedPolyRing":
        gone = {self.resolve(v) or v for v in names}
        keep = [(v, w) for v, w in zip(self.names, self.weights) if v not in gone]
        order = MonomialOrder(self.order.kind) if self.order.kind != "elim" else None
        return GradedPolyRing([v for v, _ in keep], [w for _, w in keep], self.field, order)

    def degree_of(self, exponents) -> int:
        return sum(a * w for a, w in zip(exponents, self.weights))


class Polynomial:
    """Immutable sparse polynomial: a dict ``exponents -> nonzero coefficient``.

    ``terms`` lists ``(coeff, exponents)`` in decreasing order under the ring's
    active order, so the leading term is ``terms[0]``.
    """

    __slots__ = ("ring", "_t", "_sorted", "_hash")

    def __init__(self, ring: GradedPolyRing, terms=None):
        field = ring.field
        d = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        n = ring.nvars
        for e, c in items:
            e = tuple(int(a) for a in e)
            if len(e) != n:
                raise ValueError("exponent vector length does not match the ring")
            c = field(c)
            if e in d:
                c = d[e] + c
                if field.characteristic:
                    c %= field.characteristic
            if c:
                d[e] = c
            else:
                d.pop(e, None)
        self.ring = ring
        self._t = d
        self._sorted = None
        self._hash = None

    @classmethod
    def _make(cls, ring, d):
        """Wrap a dict already in canonical form (no zeros, field elements)."""
        self = object.__new__(cls)
        self.ring = ring
        self._t = d
        self._sorted = None
        self._hash = None
        return self

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> list[tuple]:
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(((c, e) for e, c in self._t.items()), key=lambda t: key(t[1]), reverse=True)
        return self._sorted

    def as_dict(self) -> dict:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def coefficient(self, exponents):
        return self._t.get(tuple(exponents), self.ring.field.zero)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    @property
    def is_zero(self) -> bool:
        return not self._t

    @property
    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and not any(next(iter(self._t))))

    @property
    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def constant_value(self):
        if not self.is_constant:
            raise ValueError("not a constant")
        return next(iter(self._t.values())) if self._t else self.ring.field.zero

    @property
    def lt(self):
        return self.terms[0]

    @property
    def lc(self):
        return self.terms[0][0]

    @property
    def lm(self) -> tuple:
        return self.terms[0][1]

    def leading_term(self, order: MonomialOrder | None = None):
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        if order is None:
            return self.lt
        key = self.ring.order_key(order)
        e = max(self._t, key=key)
        return self._t[e], e

    def support(self) -> set[str]:
        used = set()
        for e in self._t:
            used.update(i for i, a in enumerate(e) if a)
        return {self.ring.names[i] for i in used}

    def total_degree(self) -> int:
        return max((sum(e) for e in self._t), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self._t), default=-1)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise ValueError(f"polynomials live in different rings: {self.ring} vs {other.ring}")
        if isinstance(other, (int, Fraction, _mpq_type, _mpz_type)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.characteristic
        if len(other._t) > len(self._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        d = dict(a)
        for e, c in b.items():
            v = d.get(e)
            if v is None:
                d[e] = c
            else:
                v = v + c
                if p:
                    v %= p
                if v:
                    d[e] = v
                else:
                    del d[e]
        return Polynomial._make(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.characteristic
        if p:
            return Polynomial._make(self.ring, {e: (-c) % p for e, c in self._t.items()})
        return Polynomial._make(self.ring, {e: -c for e, c in self._t.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c):
        field = self.ring.field
        c = field(c)
        if not c:
            return self.ring.zero
        p = field.characteristic
        if p:
            return Polynomial._make(self.ring, {e: v * c % p for e, v in self._t.items()})
        return Polynomial._make(self.ring, {e: v * c for e, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, _mpq_type, _mpz_type)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.characteristic
        d = {}
        get = d.get
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(map(add, e1, e2))
                d[e] = get(e, 0) + c1 * c2
        if p:
            d = {e: c % p for e, c in d.items() if c % p}
        else:
            d = {e: c for e, c in d.items() if c}
        return Polynomial._make(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant or other.is_zero:
                raise ValueError("use divide_exact for division by a non-constant polynomial")
            other = other.constant_value()
        return self.scale(self.ring.field.inv(self.ring.field(other)))

    def monic(self) -> "Polynomial":
        if not self._t:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def mul_monomial(self, exponents, coeff=None) -> "Polynomial":
        d = {tuple(map(add, e, exponents)): c for e, c in self._t.items()}
        f = Polynomial._make(self.ring, d)
        return f if coeff is None else f.scale(coeff)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._t == other._t
        if isinstance(other, (int, Fraction, _mpq_type, _mpz_type)):
            return self._t == self.ring.const(other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._t.items())))
        return self._hash

    # -- conversion ---------------------------------------------------------
    def to_ring(self, ring: GradedPolyRing) -> "Polynomial":
        """Move into ``ring`` by variable name; every used variable must exist there."""
        if ring is self.ring:
            return self
        if ring == self.ring:
            return Polynomial._make(ring, self._t)
        pos = []
        for i, v in enumerate(self.ring.names):
            j = ring.resolve(v)
            pos.append(None if j is None else ring.index(j))
        n = ring.nvars
        d = {}
        for e, c in self._t.items():
            new = [0] * n
            for i, a in enumerate(e):
                if a:
                    if pos[i] is None:
                        raise ValueError(f"variable {self.ring.names[i]!r} does not exist in the target ring")
                    new[pos[i]] += a
            d[tuple(new)] = ring.field(c) if ring.field != self.ring.field else c
        return Polynomial(ring, d) if ring.field != self.ring.field else Polynomial._make(ring, d)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: decreasing active order, explicit ``*`` and ``^``."""
    if not f._t:
        return "0"
    names = f.ring.names
    pieces = []
    for c, e in f.terms:
        mono = "*".join(v if a == 1 else f"{v}^{a}" for v, a in zip(names, e) if a)
        cs = str(c)
        if not mono:
            s = cs
        elif cs == "1":
            s = mono
        elif cs == "-1":
            s = "-" + mono
        else:
            s = f"{cs}*{mono}"
        pieces.append(s)
    out = pieces[0]
    for s in pieces[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out
