"""Exact scalars, coordinate vectors, linear maps and row reduction.

Vectors are plain tuples of field elements. Rationals use
:class:`fractions.Fraction`; prime fields use :class:`Fp`. Integers are
accepted everywhere as the image of ``Z`` in the field, but elements of two
different fields never mix.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

Vector = tuple


class FieldMismatch(TypeError):
    """Raised when scalars of two different fields meet in one operation."""


class LiteralError(ValueError):
    pass


# ---------------------------------------------------------------- scalars


class Fp:
    """Residue class modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} and F_{other.p} do not mix")
            return other.v
        if isinstance(other, bool) or not isinstance(other, int):
            raise FieldMismatch(f"cannot combine F_{self.p} with {type(other).__name__}")
        return other

    def __add__(self, other):
        return Fp(self.v + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.v - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other) - self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = Fp(self._coerce(other), self.p)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Fp(self._coerce(other), self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} and F_{other.p} do not mix")
            return self.v == other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return (self.v - other) % self.p == 0
        if isinstance(other, Fraction):
            raise FieldMismatch(f"cannot compare F_{self.p} with a rational")
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return f"{self.v} mod {self.p}"


_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_MODP = re.compile(r"^\s*([+-]?\d+)\s+mod\s+(\d+)\s*$")


class Rationals:
    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fp):
            raise FieldMismatch("cannot coerce an F_p element into Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        m = _RATIONAL.match(text)
        if not m:
            raise LiteralError(f"bad rational literal {text!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise LiteralError(f"zero denominator in {text!r}")
        return Fraction(num, den)

    def format(self, x) -> str:
        x = Fraction(x)
        return str(x)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def __call__(self, x) -> Fp:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element given to F_{self.p}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        return Fp(int(x), self.p)

    def parse(self, text: str) -> Fp:
        m = _MODP.match(text)
        if m:
            if int(m.group(2)) != self.p:
                raise LiteralError(f"literal {text!r} is not in F_{self.p}")
            return Fp(int(m.group(1)), self.p)
        m = _RATIONAL.match(text)
        if not m:
            raise LiteralError(f"bad F_{self.p} literal {text!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den % self.p == 0:
            raise LiteralError(f"denominator of {text!r} vanishes in F_{self.p}")
        return Fp(num, self.p) / Fp(den, self.p)

    def format(self, x) -> str:
        return f"{self(x).v} mod {self.p}"

    def contains(self, x) -> bool:
        return (isinstance(x, Fp) and x.p == self.p) or (
            isinstance(x, int) and not isinstance(x, bool))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


Field = "Rationals | PrimeField"

QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str):
    """``"Q"`` or ``"Fp:<p>"``."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"(?:Fp|GF|F):(\d+)", name)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown field {name!r}; use Q or Fp:<p>")


# ---------------------------------------------------------------- vectors


def zeros(n: int, F=QQ) -> Vector:
    return (F.zero,) * n


def unit_vector(n: int, i: int, F=QQ) -> Vector:
    return tuple(F.one if k == i else F.zero for k in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vsum(vectors: Iterable[Vector], n: int, F=QQ) -> Vector:
    acc = [F.zero] * n
    for v in vectors:
        for i, a in enumerate(v):
            if a:
                acc[i] += a
    return tuple(acc)


def is_zero(u: Vector) -> bool:
    return not any(u)


def tensor(u: Vector, v: Vector) -> Vector:
    """Kronecker product in the lexicographic pair basis."""
    return tuple(a * b for a in u for b in v)


# ---------------------------------------------------------------- spaces and maps


@dataclass(frozen=True)
class VecSpace:
    labels: tuple

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate basis labels in {self.labels}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @classmethod
    def of_dim(cls, n: int, prefix: str = "v") -> "VecSpace":
        return cls(tuple(f"{prefix}{i}" for i in range(n)))


def tensor_space(V: VecSpace, W: VecSpace) -> VecSpace:
    return VecSpace(tuple(f"({a}⊗{b})" for a in V.labels for b in W.labels))


@dataclass(frozen=True)
class LinMap:
    domain: VecSpace
    codomain: VecSpace
    matrix: tuple  # rows indexed by codomain, columns by domain
    field: object = QQ

    def __post_init__(self):
        if len(self.matrix) != self.codomain.dim or any(
                len(r) != self.domain.dim for r in self.matrix):
            raise ValueError("matrix shape does not match domain/codomain")

    @classmethod
    def from_columns(cls, domain, codomain, columns, F=QQ) -> "LinMap":
        rows = tuple(tuple(col[i] for col in columns) for i in range(codomain.dim))
        return cls(domain, codomain, rows, F)

    @classmethod
    def identity(cls, V: VecSpace, F=QQ) -> "LinMap":
        return cls(V, V, tuple(unit_vector(V.dim, i, F) for i in range(V.dim)), F)

    def __call__(self, v: Vector) -> Vector:
        if len(v) != self.domain.dim:
            raise ValueError("vector does not lie in the domain")
        F = self.field
        return tuple(sum((a * b for a, b in zip(row, v) if a and b), F.zero)
                     for row in self.matrix)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.matrix)

    def compose(self, other: "LinMap") -> "LinMap":
        """``self ∘ other``."""
        if other.codomain.dim != self.domain.dim:
            raise ValueError("dimension mismatch in composition")
        cols = [self(other.column(j)) for j in range(other.domain.dim)]
        return LinMap.from_columns(other.domain, self.codomain, cols, self.field)

    def rank(self) -> int:
        return len(rref(self.matrix)[1])

    def is_injective(self) -> bool:
        return self.rank() == self.domain.dim

    def image(self) -> "Subspace":
        return Subspace.span(self.codomain.dim,
                             [self.column(j) for j in range(self.domain.dim)], self.field)


# ---------------------------------------------------------------- row reduction


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row-echelon form. Returns ``(nonzero_rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def solve_linear(A, b: Sequence, F=None):
    """Some ``x`` with ``A x = b`` or ``None``.

    Free variables are set to zero, so the answer is canonical.
    """
    matrix = A.matrix if isinstance(A, LinMap) else A
    if F is None:
        F = A.field if isinstance(A, LinMap) else QQ
    if len(matrix) != len(b):
        raise ValueError("right-hand side does not lie in the codomain")
    n = len(matrix[0]) if matrix else (A.domain.dim if isinstance(A, LinMap) else 0)
    aug = [list(row) + [bi] for row, bi in zip(matrix, b)]
    red, pivots = rref(aug, n + 1) if aug else ([], [])
    if n in pivots:
        return None
    x = [F.zero] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return tuple(x)


def nullspace(matrix: Sequence[Sequence], ncols: int, F=QQ) -> list:
    red, pivots = rref(matrix, ncols) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [F.zero] * ncols
        x[f] = F.one
        for row, c in zip(red, pivots):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``F^n`` kept as a reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple
    pivots: tuple
    field: object = QQ

    @classmethod
    def span(cls, n: int, vectors: Iterable[Vector], F=QQ) -> "Subspace":
        vs = [tuple(v) for v in vectors if any(v)]
        red, piv = rref(vs, n) if vs else ([], [])
        return cls(n, tuple(red), tuple(piv), F)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def residual(self, v: Vector) -> Vector:
        r = list(v)
        for row, c in zip(self.basis, self.pivots):
            if r[c]:
                f = r[c]
                r = [a - f * b for a, b in zip(r, row)]
        return tuple(r)

    def __contains__(self, v) -> bool:
        return not any(self.residual(v))

    def coordinates(self, v: Vector) -> Vector:
        """Coordinates in ``self.basis``; the pivot entries read them off."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def from_coordinates(self, coords: Vector) -> Vector:
        return vsum((vscale(c, b) for c, b in zip(coords, self.basis)),
                    self.ambient_dim, self.field)

    def extend(self, vectors: Iterable[Vector]) -> "Subspace":
        return Subspace.span(self.ambient_dim, list(self.basis) + list(vectors), self.field)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(b in self for b in other.basis)


def bilinear(table, u: Vector, v: Vector, n: int, F=QQ) -> Vector:
    """Evaluate a structure-constant table ``table[i][j] -> vector``."""
    acc = [F.zero] * n
    for i, a in enumerate(u):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(v):
            if not b:
                continue
            c = a * b
            for k, t in enumerate(row[j]):
                if t:
                    acc[k] += c * t
    return tuple(acc)


def subspace_closure(gens: Iterable[Vector], product, n: int | None = None,
                     F=QQ) -> Subspace:
    """Smallest subspace containing ``gens`` and closed under ``product``.

    ``product`` is a structure-constant table or a callable on vector pairs.
    """
    gens = [tuple(g) for g in gens]
    if n is None:
        n = len(gens[0]) if gens else len(product)
    mul: Callable = (product if callable(product)
                     else (lambda u, v: bilinear(product, u, v, n, F)))
    S = Subspace.span(n, gens, F)
    while True:
        new = [mul(a, b) for a in S.basis for b in S.basis]
        T = S.extend(new)
        if T.dim == S.dim:
            return S
        S = T
