"""The convolution algebra Hom(C, A) of a finite-dimensional coalgebra and an algebra.

Maps are stored by their values on the basis of ``C``. Maps out of ``H⊗H``
use the tensor square of ``H`` as source, with basis index ``i*n + k`` for
the pair ``(b_i, b_k)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactlin import Subspace, solve_linear, unit_vector, vadd, vscale, vsub, vsum, zeros
from .hopf import FinBialgebra, UnitalAlgebra, tensor_square


class ConvolutionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ConvMap:
    source: FinBialgebra
    target: UnitalAlgebra
    values: tuple  # values[i] = image of the i-th source basis vector

    def __post_init__(self):
        if len(self.values) != self.source.dim or any(
                len(v) != self.target.dim for v in self.values):
            raise ConvolutionError("value table does not match source/target dimensions")

    @property
    def field(self):
        return self.target.field

    def __call__(self, c) -> tuple:
        """Evaluate on a source coordinate vector."""
        return vsum((vscale(a, self.values[i]) for i, a in enumerate(c) if a),
                    self.target.dim, self.field)

    def at(self, *indices) -> tuple:
        """Value on a basis element; for maps on H⊗H pass the two indices."""
        if len(indices) == 1:
            return self.values[indices[0]]
        n = self._base_dim()
        return self.values[indices[0] * n + indices[1]]

    def pair(self, u, v) -> tuple:
        """Value on ``u⊗v`` for a map out of H⊗H."""
        n = self._base_dim()
        F = self.field
        acc = zeros(self.target.dim, F)
        for i, a in enumerate(u):
            if not a:
                continue
            for k, b in enumerate(v):
                if b:
                    acc = vadd(acc, vscale(a * b, self.values[i * n + k]))
        return acc

    def _base_dim(self) -> int:
        n = int(round(self.source.dim ** 0.5))
        if n * n != self.source.dim:
            raise ConvolutionError("not a map out of a tensor square")
        return n

    def __mul__(self, other: "ConvMap") -> "ConvMap":
        return conv_mul(self, other)

    def __add__(self, other: "ConvMap") -> "ConvMap":
        _same_shape(self, other)
        return ConvMap(self.source, self.target,
                       tuple(vadd(a, b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ConvMap") -> "ConvMap":
        _same_shape(self, other)
        return ConvMap(self.source, self.target,
                       tuple(vsub(a, b) for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "ConvMap":
        return ConvMap(self.source, self.target, tuple(vscale(c, v) for v in self.values))

    def __eq__(self, other):
        return (isinstance(other, ConvMap) and self.source.dim == other.source.dim
                and self.target.dim == other.target.dim and self.values == other.values)

    def __hash__(self):
        return hash(self.values)

    def flat(self) -> tuple:
        return tuple(x for v in self.values for x in v)

    def is_zero(self) -> bool:
        return not any(self.flat())

    def __repr__(self):
        return f"ConvMap({self.source.name} -> {self.target.name})"


def _same_shape(f: ConvMap, g: ConvMap) -> None:
    if f.source.dim != g.source.dim or f.target.dim != g.target.dim:
        raise ConvolutionError("maps have different source or target")
    if f.field != g.field:
        raise ConvolutionError("maps live over different fields")


def from_flat(C: FinBialgebra, A: UnitalAlgebra, flat) -> ConvMap:
    m = A.dim
    return ConvMap(C, A, tuple(tuple(flat[i * m:(i + 1) * m]) for i in range(C.dim)))


def from_function(C: FinBialgebra, A: UnitalAlgebra, fn) -> ConvMap:
    """``fn(i)`` gives the value on the i-th basis vector of ``C``."""
    return ConvMap(C, A, tuple(tuple(fn(i)) for i in range(C.dim)))


def from_pair_function(H: FinBialgebra, A: UnitalAlgebra, fn) -> ConvMap:
    """A map on H⊗H from ``fn(i, k)``."""
    n = H.dim
    return ConvMap(tensor_square(H), A,
                   tuple(tuple(fn(i, k)) for i in range(n) for k in range(n)))


def conv_unit(C: FinBialgebra, A: UnitalAlgebra) -> ConvMap:
    return ConvMap(C, A, tuple(vscale(C.counit[i], A.unit) for i in range(C.dim)))


def zero_map(C: FinBialgebra, A: UnitalAlgebra) -> ConvMap:
    return ConvMap(C, A, (A.zero(),) * C.dim)


def elementary(C: FinBialgebra, A: UnitalAlgebra, i: int, j: int) -> ConvMap:
    """``b_i ↦ a_j``, all other basis vectors to zero."""
    z = A.zero()
    return ConvMap(C, A, tuple(unit_vector(A.dim, j, A.field) if r == i else z
                               for r in range(C.dim)))


def elementary_maps(C: FinBialgebra, A: UnitalAlgebra) -> list:
    return [elementary(C, A, i, j) for i in range(C.dim) for j in range(A.dim)]


def conv_mul(f: ConvMap, g: ConvMap) -> ConvMap:
    """``(f∗g)(c) = f(c_(1)) g(c_(2))``."""
    _same_shape(f, g)
    C, A = f.source, f.target
    out = []
    for i in range(C.dim):
        acc = A.zero()
        for j, k, c in C.comult[i]:
            fv, gv = f.values[j], g.values[k]
            if any(fv) and any(gv):
                acc = vadd(acc, vscale(c, A.mul(fv, gv)))
        out.append(acc)
    return ConvMap(C, A, tuple(out))


def conv_prod(*maps: ConvMap) -> ConvMap:
    out = maps[0]
    for m in maps[1:]:
        out = conv_mul(out, m)
    return out


def conv_inverse(f: ConvMap) -> ConvMap | None:
    """Two-sided convolution inverse, or None.

    ``f∗x = unit`` and ``x∗f = unit`` are solved as one stacked system, so a
    one-sided inverse is never accepted.
    """
    C, A = f.source, f.target
    basis = elementary_maps(C, A)
    cols = [conv_mul(f, E).flat() + conv_mul(E, f).flat() for E in basis]
    rows = tuple(tuple(col[r] for col in cols) for r in range(len(cols[0])))
    u = conv_unit(C, A).flat()
    x = solve_linear(rows, u + u, A.field)
    if x is None:
        return None
    return from_flat(C, A, x)


def is_central(f: ConvMap) -> bool:
    # Elementary maps span Hom(C, A) and ∗ is bilinear, so commuting with
    # each of them is the same as commuting with everything.
    return all(conv_mul(f, E) == conv_mul(E, f) for E in elementary_maps(f.source, f.target))


def first_noncommuting(f: ConvMap):
    for i in range(f.source.dim):
        for j in range(f.target.dim):
            E = elementary(f.source, f.target, i, j)
            if conv_mul(f, E) != conv_mul(E, f):
                return f.source.labels[i], f.target.labels[j]
    return None


def is_idempotent(f: ConvMap) -> bool:
    return conv_mul(f, f) == f


# ---------------------------------------------------------------- e, f1, f2


def idempotents_e_f1_f2(m) -> tuple:
    """``e(h) = h·1``, ``f1(h,k) = (h·1)ε(k)``, ``f2(h,k) = hk·1``.

    ``m`` is a measuring (anything with ``hopf``, ``target`` and ``act``).
    """
    H, A = m.hopf, m.target
    n = H.dim
    ones = [m.act(H.basis(i), A.unit) for i in range(n)]
    e = ConvMap(H, A, tuple(ones))
    f1 = from_pair_function(H, A, lambda i, k: vscale(H.counit[k], ones[i]))
    f2 = from_pair_function(H, A, lambda i, k: m.act(H.table[i][k], A.unit))
    return e, f1, f2


def ideal_subspace(g: ConvMap) -> Subspace:
    """The subspace ``g ∗ Hom(C, A)`` (an ideal when ``g`` is central)."""
    C, A = g.source, g.target
    return Subspace.span(C.dim * A.dim, [conv_mul(g, E).flat() for E in elementary_maps(C, A)],
                         A.field)


def in_ideal(w: ConvMap, g: ConvMap) -> bool:
    return w.flat() in ideal_subspace(g)


def ideal_inverse(omega: ConvMap, f1: ConvMap, f2: ConvMap) -> ConvMap | None:
    """``ω′`` in the ideal generated by ``f1∗f2`` with ``ω∗ω′ = ω′∗ω = f1∗f2``."""
    if not is_central(f1) or not is_central(f2):
        raise ConvolutionError("f1 and f2 must be central for the ideal to be two-sided")
    C, A = omega.source, omega.target
    g = conv_mul(f1, f2)
    ideal = ideal_subspace(g)
    if ideal.dim == 0:
        return zero_map(C, A)  # f1∗f2 = 0, so the zero map is the inverse
    gens = [from_flat(C, A, b) for b in ideal.basis]
    cols = [conv_mul(omega, x).flat() + conv_mul(x, omega).flat() for x in gens]
    rows = tuple(tuple(col[r] for col in cols) for r in range(len(cols[0])))
    target = g.flat()
    coeffs = solve_linear(rows, target + target, A.field)
    if coeffs is None:
        return None
    return from_flat(C, A, ideal.from_coordinates(coeffs))


# ---------------------------------------------------------------- L-invariance


def is_L_invariant(omega: ConvMap, G, L) -> bool:
    return first_L_invariance_failure(omega, G, L) is None


def first_L_invariance_failure(omega: ConvMap, G, L):
    """Check ω(p_g,p_h) = ω(p_{kg},p_{lh}) = ω(p_{gk},p_{hl}) for k, l in L.

    ``omega`` must be a map on (κG)*⊗(κG)* with basis ordered as ``G``.
    """
    n = G.order
    if omega.source.dim != n * n:
        raise ConvolutionError("omega is not a map on (κG)*⊗(κG)*")
    val = lambda g, h: omega.values[g * n + h]
    for g in range(n):
        for h in range(n):
            for k in L.elements:
                for l in L.elements:
                    if val(g, h) != val(G.mul(k, g), G.mul(l, h)) or \
                            val(g, h) != val(G.mul(g, k), G.mul(h, l)):
                        return tuple(G.names[x] for x in (g, h, k, l))
    return None


# ---------------------------------------------------------------- Hom(C, A) as an algebra


def convolution_algebra(C: FinBialgebra, A: UnitalAlgebra, name: str | None = None
                        ) -> UnitalAlgebra:
    """Hom(C, A) with basis ``E_{i,j}: b_i ↦ a_j`` (index ``i*dim A + j``)."""
    basis = elementary_maps(C, A)
    table = tuple(tuple(conv_mul(E, Fm).flat() for Fm in basis) for E in basis)
    labels = tuple(f"{c}->{a}" for c in C.labels for a in A.labels)
    return UnitalAlgebra(labels, table, conv_unit(C, A).flat(), A.field,
                         name or f"Hom({C.name},{A.name})")
