"""The Coxeter group of a defining graph, with an exact word problem.

Elements are matrices of the reflection representation acting on the simple
root basis, with entries in the exact cyclotomic field of the graph's labels.
The representation is faithful, so equality of elements is equality of
matrices.  Every element also carries its inverse matrix, maintained under
multiplication, because descent tests read columns of the inverse: a
generator s descends w on the left exactly when w^{-1} maps the simple root
of s to a negative root.

A non-adjacent pair contributes the standard Gram entry -1 (the limit of
-cos(pi/m)), which is what makes the length theory below valid for infinite
groups as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Sequence

from .graph import DefiningGraph
from .scalar import FieldContext, Scalar, cos_pi_over, field_context

if TYPE_CHECKING:
    from .words import ArtinWord

Matrix = tuple[tuple[Scalar, ...], ...]

MAX_COXETER_ORDER_STEPS = 10**5


@lru_cache(maxsize=None)
def field_of(g: DefiningGraph) -> FieldContext:
    return field_context(g.finite_labels())


def _identity_matrix(ctx: FieldContext, n: int) -> Matrix:
    return tuple(
        tuple(ctx.one if i == j else ctx.zero for j in range(n)) for i in range(n)
    )


def _mat_mul(a: Matrix, b: Matrix, ctx: FieldContext) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b)) if n else ()
    zero = ctx.zero
    rows = []
    for arow in a:
        row = []
        for bcol in bt:
            acc = zero
            for x, y in zip(arow, bcol):
                if any(x.nums) and any(y.nums):
                    acc = acc + x * y
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


class CoxeterElement:
    """Group element as a reflection-representation matrix plus its inverse.

    Instances are only created by this module (identity, generators, products),
    which keeps the matrices inside the image of the representation.
    """

    __slots__ = ("graph", "mat", "inv", "_word", "_hash")

    def __init__(self, graph: DefiningGraph, mat: Matrix, inv: Matrix):
        self.graph = graph
        self.mat = mat
        self.inv = inv
        self._word: tuple[str, ...] | None = None
        self._hash: int | None = None

    def __eq__(self, other):
        if not isinstance(other, CoxeterElement):
            return NotImplemented
        return self.graph == other.graph and self.mat == other.mat

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.mat)
        return self._hash

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        if self.graph != other.graph:
            raise ValueError("elements of different Coxeter groups")
        ctx = field_of(self.graph)
        return CoxeterElement(
            self.graph,
            _mat_mul(self.mat, other.mat, ctx),
            _mat_mul(other.inv, self.inv, ctx),
        )

    def __pow__(self, k: int) -> "CoxeterElement":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = identity(self.graph)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "CoxeterElement":
        return CoxeterElement(self.graph, self.inv, self.mat)

    def is_identity(self) -> bool:
        return self.mat == identity(self.graph).mat

    def __repr__(self):
        return f"CoxeterElement({' '.join(self.reduced_word()) or '1'})"

    # -- descents and lengths ------------------------------------------------

    def _column_is_negative(self, mat: Matrix, idx: int) -> bool:
        # Sign of the root mat * alpha_idx; roots have one-signed coordinates,
        # so the first nonzero coordinate decides.
        for row in mat:
            s = row[idx].sign()
            if s:
                return s < 0
        raise ArithmeticError("zero column in a reflection matrix")

    def has_left_descent(self, v: str) -> bool:
        """True iff multiplying by the generator v on the left shortens the element."""
        return self._column_is_negative(self.inv, self.graph.index(v))

    def has_right_descent(self, v: str) -> bool:
        return self._column_is_negative(self.mat, self.graph.index(v))

    def left_descents(self) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if self.has_left_descent(v))

    def right_descents(self) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if self.has_right_descent(v))

    def first_left_descent(self, among: Sequence[str] | None = None) -> str | None:
        for v in among if among is not None else self.graph.vertices:
            if self.has_left_descent(v):
                return v
        return None

    def reduced_word(self) -> tuple[str, ...]:
        """Canonical reduced word: greedily strip the declaration-order-smallest
        left descent.  Multiplies back to the element and realizes its length."""
        if self._word is None:
            letters = []
            w = self
            while True:
                v = w.first_left_descent()
                if v is None:
                    break
                letters.append(v)
                w = simple_reflection(w.graph, v) * w
            self._word = tuple(letters)
        return self._word

    def length(self) -> int:
        return len(self.reduced_word())

    def is_reduced_for(self, subset: Iterable[str]) -> bool:
        """True iff the element is the minimal-length representative of its
        left coset under the standard subgroup on the subset (no left descent
        lies in the subset)."""
        return not any(self.has_left_descent(v) for v in self.graph.subset(subset))

    def match_simple_reflection(self, subset: Iterable[str]) -> str | None:
        """The unique vertex in the subset whose generator equals this element,
        or None.  Distinct generators have distinct matrices."""
        for x in self.graph.subset(subset):
            if self == simple_reflection(self.graph, x):
                return x
        return None


@lru_cache(maxsize=None)
def identity(g: DefiningGraph) -> CoxeterElement:
    mat = _identity_matrix(field_of(g), len(g.vertices))
    return CoxeterElement(g, mat, mat)


@lru_cache(maxsize=None)
def simple_reflection(g: DefiningGraph, v: str) -> CoxeterElement:
    """Reflection matrix of a generator: alpha_v -> -alpha_v and
    alpha_u -> alpha_u + 2 cos(pi/m_uv) alpha_v for u != v."""
    ctx = field_of(g)
    n = len(g.vertices)
    i = g.index(v)
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            if r == c:
                row.append(-ctx.one if r == i else ctx.one)
            elif r == i:
                row.append(2 * cos_pi_over(g.label(v, g.vertices[c]), ctx))
            else:
                row.append(ctx.zero)
        rows.append(tuple(row))
    mat = tuple(rows)
    return CoxeterElement(g, mat, mat)


def theta(g: DefiningGraph, word: "ArtinWord | Iterable[tuple[str, int]]") -> CoxeterElement:
    """Image of an Artin word in the Coxeter group (exponent signs collapse)."""
    letters = getattr(word, "letters", word)
    out = identity(g)
    for v, _exp in letters:
        out = out * simple_reflection(g, v)
    return out


@dataclass(frozen=True)
class CosetDecomposition:
    """u = subgroup_part * reduced_part with the first factor inside the
    standard subgroup on the subset and the second factor reduced for it."""

    subgroup_part: CoxeterElement
    reduced_part: CoxeterElement
    subset: tuple[str, ...]


def coset_decompose(u: CoxeterElement, subset: Iterable[str]) -> CosetDecomposition:
    """Split off the standard-subgroup part on the left by repeatedly stripping
    the smallest descent contained in the subset.  The reduced part is the
    unique minimal-length representative of the coset."""
    x_set = u.graph.subset(subset)
    v_part = identity(u.graph)
    w = u
    while True:
        x = w.first_left_descent(x_set)
        if x is None:
            break
        refl = simple_reflection(u.graph, x)
        v_part = v_part * refl
        w = refl * w
    return CosetDecomposition(v_part, w, x_set)


# -- Gram form and type recognition ------------------------------------------


def gram_matrix(g: DefiningGraph) -> Matrix:
    """Symmetric bilinear form: 1 on the diagonal, -cos(pi/m_uv) off it."""
    ctx = field_of(g)
    n = len(g.vertices)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(ctx.one)
            else:
                row.append(-cos_pi_over(g.label(g.vertices[i], g.vertices[j]), ctx))
        rows.append(tuple(row))
    return tuple(rows)


def _det(rows: Sequence[Sequence[Scalar]], ctx: FieldContext) -> Scalar:
    # Division-free determinant: expand row by row over column subsets.
    n = len(rows)
    if n == 0:
        return ctx.one
    level = {0: ctx.one}
    for r in range(n):
        nxt: dict[int, Scalar] = {}
        for mask, val in level.items():
            if val.is_zero():
                continue
            parity = r & 1
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    parity ^= 1
                    continue
                entry = rows[r][j]
                if not entry.is_zero():
                    term = val * entry if parity == 0 else -(val * entry)
                    key = mask | bit
                    acc = nxt.get(key)
                    nxt[key] = term if acc is None else acc + term
        level = nxt
        if not level:
            return ctx.zero
    return level.get((1 << n) - 1, ctx.zero)


def _rank(rows: Sequence[Sequence[Scalar]], ctx: FieldContext) -> int:
    work = [list(r) for r in rows]
    n = len(work)
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col].inverse()
        for r in range(rank + 1, n):
            factor = work[r][col] * inv
            if not factor.is_zero():
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


@lru_cache(maxsize=None)
def is_spherical(g: DefiningGraph) -> bool:
    """True iff the Coxeter group is finite: the Gram form is positive
    definite, decided by exact signs of the leading principal minors."""
    b = gram_matrix(g)
    ctx = field_of(g)
    for k in range(1, len(g.vertices) + 1):
        minor = _det([row[:k] for row in b[:k]], ctx)
        if minor.sign() <= 0:
            return False
    return True


def is_affine(g: DefiningGraph) -> bool:
    """True iff the Gram form is positive semidefinite of rank n-1 (Euclidean
    type for an irreducible graph).  Checks every principal minor exactly."""
    n = len(g.vertices)
    if n > 16:
        raise ValueError("affine test guard: at most 16 vertices")
    if n == 0:
        return False
    b = gram_matrix(g)
    ctx = field_of(g)
    indices = range(n)
    for size in range(1, n + 1):
        for subset in combinations(indices, size):
            sub = [[b[i][j] for j in subset] for i in subset]
            if _det(sub, ctx).sign() < 0:
                return False
    full = _det(b, ctx)
    return full.is_zero() and _rank(b, ctx) == n - 1


def coxeter_number(g: DefiningGraph) -> int:
    """Order of the product of all generators in declaration order; defined
    for irreducible spherical graphs."""
    if not is_spherical(g):
        raise ValueError("Coxeter number requires a spherical graph")
    c = theta(g, [(v, 1) for v in g.vertices])
    power = c
    h = 1
    while not power.is_identity():
        power = power * c
        h += 1
        if h > MAX_COXETER_ORDER_STEPS:
            raise ArithmeticError("Coxeter element order guard exceeded")
    return h


def longest_element(g: DefiningGraph) -> CoxeterElement:
    """The maximal-length element, reached by greedily appending the smallest
    generator that still increases length."""
    if not is_spherical(g):
        raise ValueError("longest element requires a spherical graph")
    w = identity(g)
    while True:
        v = next((v for v in g.vertices if not w.has_right_descent(v)), None)
        if v is None:
            return w
        w = w * simple_reflection(g, v)


def is_minus_identity(w: CoxeterElement) -> bool:
    ctx = field_of(w.graph)
    n = len(w.graph.vertices)
    return w.mat == tuple(
        tuple(-ctx.one if i == j else ctx.zero for j in range(n)) for i in range(n)
    )
