"""Exact linear algebra over Q and GF(p).

Vectors, matrices and 3-tensors are numpy arrays of dtype ``object`` holding
field elements.  Conventions used throughout the package:

* a matrix ``A`` of a linear map stores the image of basis vector ``e_j`` in
  column ``j``, so ``A @ x`` applies the map;
* a product tensor ``T`` stores ``e_i * e_j = sum_k T[i, j, k] e_k``.

Contractions are evaluated by rescaling rational operands to integers and
running ``np.einsum`` on Python ints, which is two orders of magnitude faster
than multiplying ``Fraction`` objects directly.
"""

from __future__ import annotations

import math
from functools import lru_cache
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, SingularMatrix
from .field import QQ, GF, GFElement, field_of_scalar


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def field_of(*arrays, default=QQ):
    """Field of the entries of ``arrays``; empty arrays fall back to ``default``."""
    found = None
    for a in arrays:
        a = np.asarray(a, dtype=object)
        if a.size == 0:
            continue
        f = field_of_scalar(a.flat[0])
        if found is None:
            found = f
        elif found is not f:
            raise FieldMismatch(f"operands live in {found!r} and {f!r}")
    return found if found is not None else default


def array(data, field=QQ) -> np.ndarray:
    """Convert nested data to an object array of ``field`` elements."""
    raw = np.asarray(data, dtype=object)
    out = np.empty(raw.shape, dtype=object)
    for idx, x in np.ndenumerate(raw):
        out[idx] = field(x)
    return out


def convert(arr, field) -> np.ndarray:
    """Explicit change of scalar field (e.g. Q -> GF(3))."""
    return array(arr, field)


def zeros(shape, field=QQ) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(field.zero)
    return out


def identity(n: int, field=QQ) -> np.ndarray:
    out = zeros((n, n), field)
    for i in range(n):
        out[i, i] = field.one
    return out


def unit_vector(n: int, i: int, field=QQ) -> np.ndarray:
    v = zeros(n, field)
    v[i] = field.one
    return v


def scalar_matrix(n: int, lam, field=QQ) -> np.ndarray:
    return identity(n, field) * field(lam)


def frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=object, copy=True)
    arr.flags.writeable = False
    return arr


# ---------------------------------------------------------------------------
# exact contraction
# ---------------------------------------------------------------------------


def _output_shape(subscripts, operands):
    dummies = [np.zeros(np.shape(op), dtype=np.int8) for op in operands]
    return np.einsum(subscripts, *dummies).shape


def _as_scaled_ints(a: np.ndarray):
    den = 1
    for x in a.flat:
        d = x.denominator
        if d != 1:
            den = math.lcm(den, d)
    if den == 1:
        ints = np.empty(a.shape, dtype=object)
        ints.flat[:] = [x.numerator for x in a.flat]
    else:
        ints = np.empty(a.shape, dtype=object)
        ints.flat[:] = [x.numerator * (den // x.denominator) for x in a.flat]
    return ints, den


@lru_cache(maxsize=1024)
def _plan(subscripts: str, shapes: tuple):
    """Greedy pairwise contraction order: list of (i, j, pair_subscripts).

    Each step contracts operands i < j into a new operand appended at the end
    (after removing i and j); the final operand is transposed to the output.
    """
    inputs, _, output = subscripts.partition("->")
    specs = inputs.split(",")
    sizes = {}
    for spec, shape in zip(specs, shapes):
        sizes.update(zip(spec, shape))
    steps = []
    while len(specs) > 1:
        best = None
        for i in range(len(specs)):
            for j in range(i + 1, len(specs)):
                others = "".join(specs[k] for k in range(len(specs)) if k not in (i, j)) + output
                keep = "".join(dict.fromkeys(c for c in specs[i] + specs[j] if c in others))
                cost = 1
                for c in keep:
                    cost *= sizes[c]
                if best is None or cost < best[0]:
                    best = (cost, i, j, keep)
        _, i, j, keep = best
        steps.append((i, j, f"{specs[i]},{specs[j]}->{keep}"))
        specs = [specs[k] for k in range(len(specs)) if k not in (i, j)] + [keep]
    steps.append((0, -1, f"{specs[0]}->{output}"))
    return tuple(steps)


def _run_plan(subscripts, arrays):
    ops = list(arrays)
    for i, j, sub in _plan(subscripts, tuple(a.shape for a in ops)):
        if j < 0:
            return np.einsum(sub, ops[0])
        res = np.einsum(sub, ops[i], ops[j])
        ops = [ops[k] for k in range(len(ops)) if k not in (i, j)] + [res]
    return ops[0]


def _summed_terms(subscripts: str, operands) -> int:
    """Upper bound on the number of products summed into one output entry."""
    inputs, _, output = subscripts.partition("->")
    sizes = {}
    for spec, op in zip(inputs.split(","), operands):
        sizes.update(zip(spec, op.shape))
    count = 1
    for letter, size in sizes.items():
        if letter not in output:
            count *= size
    return count


def _int_einsum(subscripts: str, ints):
    """Contract Python-int object arrays, in int64 when overflow is impossible."""
    bound = _summed_terms(subscripts, ints)
    for a in ints:
        bound *= max((abs(int(x)) for x in a.flat), default=0)
    if bound < 2**62:
        ints = [np.fromiter(a.flat, dtype=np.int64, count=a.size).reshape(a.shape) for a in ints]
    return _run_plan(subscripts, ints)


_SMALL = {v: Fraction(v) for v in range(-256, 257)}


@lru_cache(maxsize=None)
def _gf_elements(p: int):
    return [GFElement(v, p) for v in range(p)]


def _to_ints(operands, field):
    """Integer arrays and a common denominator (1 over GF(p))."""
    if field is QQ:
        scaled, den = [], 1
        for op in operands:
            ints, d = _as_scaled_ints(op)
            scaled.append(ints)
            den *= d
        return scaled, den
    ints = [np.fromiter((x.value for x in op.flat), dtype=np.int64, count=op.size).reshape(op.shape) for op in operands]
    return ints, 1


def _wrap(res, den: int, field) -> np.ndarray:
    res = np.asarray(res)
    if res.dtype != object and not res.any():
        return np.full(res.shape, field.zero, dtype=object)
    out = np.empty(res.shape, dtype=object)
    if field is QQ:
        vals = res.reshape(-1).tolist()
        if den == 1:
            get = _SMALL.get
            out.flat[:] = [f if (f := get(v)) is not None else Fraction(v) for v in vals]
        else:
            out.flat[:] = [_SMALL[0] if not v else Fraction(int(v), den) for v in vals]
        return out
    elems = _gf_elements(field.p)
    out.flat[:] = [elems[v] for v in (res % field.p).reshape(-1).tolist()]
    return out


def _contract(subscripts, operands, field):
    ints, den = _to_ints(operands, field)
    if field is QQ:
        return _int_einsum(subscripts, ints), den
    return _run_plan(subscripts, ints) % field.p, 1


def einsum(subscripts: str, *operands) -> np.ndarray:
    """Exact ``np.einsum`` for object arrays of field elements."""
    operands = [np.asarray(op, dtype=object) for op in operands]
    field = field_of(*operands)
    if any(op.size == 0 for op in operands):
        return zeros(_output_shape(subscripts, operands), field)
    res, den = _contract(subscripts, operands, field)
    return _wrap(res, den, field)


def einsum_diff(first: tuple, second: tuple) -> np.ndarray:
    """``einsum(*first) - einsum(*second)`` with a single conversion back to field elements."""
    ops1 = [np.asarray(op, dtype=object) for op in first[1:]]
    ops2 = [np.asarray(op, dtype=object) for op in second[1:]]
    field = field_of(*ops1, *ops2)
    if any(op.size == 0 for op in ops1 + ops2):
        return einsum(*first) - einsum(*second)
    a, da = _contract(first[0], ops1, field)
    b, db = _contract(second[0], ops2, field)
    if da == db:
        return _wrap(np.asarray(a) - np.asarray(b), da, field)
    den = math.lcm(da, db)
    a = np.asarray(a, dtype=object) * (den // da)
    b = np.asarray(b, dtype=object) * (den // db)
    return _wrap(a - b, den, field)


def matmul(*mats) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        if out.shape[-1] != m.shape[0]:
            raise DimensionMismatch(f"cannot compose {out.shape} with {m.shape}")
        out = einsum("ij,jk->ik", out, m)
    return out


def apply(A, v) -> np.ndarray:
    return einsum("ij,j->i", A, v)


def contract_product(T, x, y) -> np.ndarray:
    """Bilinear evaluation ``result_k = sum_ij x_i y_j T[i, j, k]``."""
    T = np.asarray(T, dtype=object)
    if T.ndim != 3 or len(x) != T.shape[0] or len(y) != T.shape[1]:
        raise DimensionMismatch(f"tensor {T.shape} with vectors of length {len(x)}, {len(y)}")
    return einsum("i,j,ijk->k", x, y, T)


def twist_inputs(T, A, B) -> np.ndarray:
    """``T o (A (x) B)``: the bilinear map ``(x, y) -> T(A x, B y)``."""
    return einsum("pi,qj,pqk->ijk", A, B, T)


def post_compose(A, T) -> np.ndarray:
    """``A o T``: the bilinear map ``(x, y) -> A T(x, y)``."""
    return einsum("kr,ijr->ijk", A, T)


def is_zero(arr) -> bool:
    return not any(x != 0 for x in np.asarray(arr, dtype=object).flat)


def equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def commutes(A, B) -> bool:
    return equal(matmul(A, B), matmul(B, A))


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def _sparse_rref(rows, ncols):
    """Fully reduced echelon form of sparse rows (dicts col -> value).

    Returns ``{pivot_col: row}`` with every row normalised to 1 at its pivot
    and zero at every other pivot column.
    """
    pivots: dict[int, dict] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v != 0}
        for c in [c for c in row if c in pivots]:
            f = row.get(c)
            if not f:
                continue
            for cc, vv in pivots[c].items():
                nv = row.get(cc, 0) - f * vv
                if nv != 0:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {c: v * inv for c, v in row.items()}
        for other in pivots.values():
            f = other.get(pc)
            if f:
                for cc, vv in row.items():
                    nv = other.get(cc, 0) - f * vv
                    if nv != 0:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
        pivots[pc] = row
    return pivots


def _rows_of(M):
    M = np.asarray(M, dtype=object)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {M.shape}")
    return [{j: x for j, x in enumerate(r) if x != 0} for r in M], M.shape[1]


def rref(M):
    """Reduced row-echelon form; returns ``(R, pivot_columns)``.

    ``R`` has the same shape as ``M`` with zero rows at the bottom.
    """
    M = np.asarray(M, dtype=object)
    field = field_of(M)
    rows, ncols = _rows_of(M)
    piv = _sparse_rref(rows, ncols)
    cols = sorted(piv)
    R = zeros(M.shape, field)
    for r, c in enumerate(cols):
        for cc, v in piv[c].items():
            R[r, cc] = v
    return R, cols


def rank(M) -> int:
    M = np.asarray(M, dtype=object)
    if M.size == 0:
        return 0
    rows, ncols = _rows_of(M)
    return len(_sparse_rref(rows, ncols))


def nullspace(M, field=None) -> list[np.ndarray]:
    """Basis of ``{v : M v = 0}``, one vector per free column in ascending order."""
    M = np.asarray(M, dtype=object)
    field = field or field_of(M)
    ncols = M.shape[1]
    piv = _sparse_rref(_rows_of(M)[0], ncols) if M.shape[0] else {}
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = zeros(ncols, field)
        v[f] = field.one
        for pc, row in piv.items():
            x = row.get(f)
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


def solve(M, b, field=None):
    """One solution of ``M x = b`` (free variables set to zero) or ``None``."""
    M = np.asarray(M, dtype=object)
    field = field or field_of(M, b)
    b = np.asarray(b, dtype=object)
    if M.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"{M.shape} system with right-hand side of length {b.shape[0]}")
    ncols = M.shape[1]
    rows = [{j: x for j, x in enumerate(r) if x != 0} for r in M]
    for r, rhs in zip(rows, b):
        if rhs != 0:
            r[ncols] = rhs
    piv = _sparse_rref(rows, ncols + 1)
    if ncols in piv:
        return None
    x = zeros(ncols, field)
    for pc, row in piv.items():
        x[pc] = row.get(ncols, field.zero)
    return x


def invert(M) -> np.ndarray:
    M = np.asarray(M, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"cannot invert a {M.shape} matrix")
    n = M.shape[0]
    field = field_of(M)
    rows = []
    for i in range(n):
        r = {j: x for j, x in enumerate(M[i]) if x != 0}
        r[n + i] = field.one
        rows.append(r)
    piv = _sparse_rref(rows, 2 * n)
    if any(c not in piv for c in range(n)):
        raise SingularMatrix(f"matrix has rank {sum(1 for c in piv if c < n)} < {n}")
    out = zeros((n, n), field)
    for i in range(n):
        for c, v in piv[i].items():
            if c >= n:
                out[i, c - n] = v
    return out


def is_invertible(M) -> bool:
    M = np.asarray(M, dtype=object)
    return M.shape[0] == M.shape[1] and rank(M) == M.shape[0]


def matrix_power(A, k: int) -> np.ndarray:
    """``A**k``; negative ``k`` uses the exact inverse (SingularMatrix if none)."""
    A = np.asarray(A, dtype=object)
    n = A.shape[0]
    if k < 0:
        A, k = invert(A), -k
    out = identity(n, field_of(A))
    base = A
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


def row_basis(vectors, n: int, field=QQ) -> list[np.ndarray]:
    """Canonical (RREF) basis of the span of ``vectors``."""
    vectors = [np.asarray(v, dtype=object) for v in vectors]
    if not vectors:
        return []
    R, cols = rref(np.array(vectors, dtype=object).reshape(len(vectors), n))
    return [R[i].copy() for i in range(len(cols))]


def in_span(basis, v) -> bool:
    v = np.asarray(v, dtype=object)
    if not basis:
        return is_zero(v)
    M = np.array([np.asarray(b, dtype=object) for b in basis], dtype=object)
    return rank(np.vstack([M, v[None, :]])) == rank(M)


def span_contains(basis, vectors) -> bool:
    vectors = [np.asarray(v, dtype=object) for v in vectors]
    if not vectors:
        return True
    if not basis:
        return all(is_zero(v) for v in vectors)
    M = np.array([np.asarray(b, dtype=object) for b in basis], dtype=object)
    r = rank(M)
    return rank(np.vstack([M, np.array(vectors, dtype=object)])) == r


def columns(M) -> list[np.ndarray]:
    M = np.asarray(M, dtype=object)
    return [M[:, j].copy() for j in range(M.shape[1])]


def block_diag(A, B, field=None) -> np.ndarray:
    field = field or field_of(A, B)
    n, m = A.shape[0], B.shape[0]
    out = zeros((n + m, n + m), field)
    out[:n, :n] = A
    out[n:, n:] = B
    return out


def gf_int_array(arr) -> np.ndarray:
    """Raw residues of a GF(p) object array as int64 (for vectorised searches)."""
    arr = np.asarray(arr, dtype=object)
    return np.vectorize(lambda x: x.value, otypes=[np.int64])(arr) if arr.size else np.zeros(arr.shape, np.int64)


def gf_from_ints(ints, p: int) -> np.ndarray:
    return array(np.asarray(ints).tolist(), GF(p)) if np.size(ints) else zeros(np.shape(ints), GF(p))
