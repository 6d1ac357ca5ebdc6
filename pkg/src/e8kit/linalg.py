"""Exact sparse linear algebra over Q(i): echelon forms, kernels, subspaces,
inertia of real symmetric forms, and a complex-float mirror for the few
transcendental identities that cannot be checked exactly.

Sparse vectors are dicts {column -> Scalar} holding no explicit zeros.
Subspace bases are kept in canonical reduced row echelon form with pivots in
strictly increasing column order, so equal subspaces have identical
representations.
"""

from __future__ import annotations

import math

import numpy as np

from .rationals import ONE, ZERO, Rat, Scalar

# ---------------------------------------------------------------------------
# sparse row primitives


def vec_axpy(dst: dict, src: dict, c: Scalar) -> None:
    """dst -= c * src, dropping entries that cancel."""
    for j, v in src.items():
        w = dst.get(j)
        if w is None:
            dst[j] = -(c * v)
        else:
            w = w - c * v
            if w.re or w.im:
                dst[j] = w
            else:
                del dst[j]


def vec_scale(row: dict, c: Scalar) -> dict:
    return {j: c * v for j, v in row.items()}


def vec_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for j, v in b.items():
        w = out.get(j)
        if w is None:
            out[j] = v
        else:
            w = w + v
            if w.re or w.im:
                out[j] = w
            else:
                del out[j]
    return out


def vec_clean(row: dict) -> dict:
    return {j: v for j, v in row.items() if v.re or v.im}


def vec_dense(row: dict, n: int) -> list:
    out = [ZERO] * n
    for j, v in row.items():
        out[j] = v
    return out


def vec_sparse(values) -> dict:
    return {j: v for j, v in enumerate(values) if v.re or v.im}


class Echelon:
    """Incrementally maintained reduced row echelon basis of a row space.

    Stored rows are fully reduced: each has a 1 at its pivot column and zeros
    at every other pivot column, so reducing a new row is a single pass over
    its support.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}  # pivot column -> row
        self._occupancy: dict[int, set] = {}  # column -> pivot cols of rows hitting it

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        """Return row reduced against the current basis (row is not inserted)."""
        r = vec_clean(row)
        for j in [c for c in r if c in self.rows]:
            c = r.get(j)
            if c is not None and (c.re or c.im):
                vec_axpy(r, self.rows[j], c)
        return r

    def insert(self, row: dict) -> bool:
        """Insert a row; returns True if it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        lead = r[p]
        if lead != ONE:
            inv = ONE / lead
            r = {j: inv * v for j, v in r.items()}
        # back-eliminate the new pivot column from existing rows
        holders = self._occupancy.get(p)
        if holders:
            for q in list(holders):
                s = self.rows[q]
                c = s.get(p)
                if c is None:
                    continue
                vec_axpy(s, r, c)
                for j in r:
                    if j not in s:
                        occ = self._occupancy.get(j)
                        if occ:
                            occ.discard(q)
                for j in s:
                    self._occupancy.setdefault(j, set()).add(q)
        self.rows[p] = r
        for j in r:
            self._occupancy.setdefault(j, set()).add(p)
        return True

    def insert_all(self, rows) -> None:
        for row in rows:
            self.insert(row)

    def pivot_columns(self) -> list:
        return sorted(self.rows)

    def basis_rows(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]

    def kernel_basis(self) -> list:
        """Canonical basis of {x : row . x = 0 for every inserted row}."""
        pivots = sorted(self.rows)
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        out = []
        for f in free:
            v = {f: ONE}
            for p in pivots:
                c = self.rows[p].get(f)
                if c is not None:
                    v[p] = -c
            out.append(v)
        return out


def solve_linear(rows, rhs, ncols: int):
    """Solve the consistent system (row_k . x) = rhs_k exactly.

    Returns the unique solution as a sparse dict, or raises ValueError when
    the system is inconsistent or underdetermined.
    """
    ech = Echelon(ncols + 1)
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b.re or b.im:
            r[ncols] = b
        ech.insert(r)
    if ncols in ech.rows:
        raise ValueError("inconsistent linear system")
    if ech.rank < ncols:
        raise ValueError("underdetermined linear system (rank %d < %d)" % (ech.rank, ncols))
    sol = {}
    for p, row in ech.rows.items():
        b = row.get(ncols)
        if b is not None:
            sol[p] = b
    return sol


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Exact matrix over Q(i), stored column-sparse."""

    __slots__ = ("rows", "cols", "_cols")

    def __init__(self, rows: int, cols: int, coldata=None):
        self.rows = rows
        self.cols = cols
        self._cols = coldata if coldata is not None else {}

    # -- constructors ------------------------------------------------------
    @staticmethod
    def from_rows(data) -> "Matrix":
        m = len(data)
        n = len(data[0]) if m else 0
        cols: dict[int, dict] = {}
        for i, row in enumerate(data):
            if len(row) != n:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if type(v) is not Scalar:
                    v = Scalar(v)
                if v.re or v.im:
                    cols.setdefault(j, {})[i] = v
        return Matrix(m, n, cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, {j: {j: ONE} for j in range(n)})

    @staticmethod
    def zeros(m: int, n: int) -> "Matrix":
        return Matrix(m, n, {})

    def copy(self) -> "Matrix":
        return Matrix(self.rows, self.cols, {j: dict(c) for j, c in self._cols.items()})

    # -- element access ----------------------------------------------------
    def get(self, i: int, j: int) -> Scalar:
        return self._cols.get(j, {}).get(i, ZERO)

    def set_(self, i: int, j: int, v: Scalar) -> None:
        if v.re or v.im:
            self._cols.setdefault(j, {})[i] = v
        else:
            col = self._cols.get(j)
            if col and i in col:
                del col[i]
                if not col:
                    del self._cols[j]

    def column(self, j: int) -> dict:
        return self._cols.get(j, {})

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, o: "Matrix") -> "Matrix":
        self._check_shape(o)
        cols = {j: dict(c) for j, c in self._cols.items()}
        for j, c in o._cols.items():
            dst = cols.setdefault(j, {})
            for i, v in c.items():
                w = dst.get(i)
                w = v if w is None else w + v
                if w.re or w.im:
                    dst[i] = w
                elif i in dst:
                    del dst[i]
        return Matrix(self.rows, self.cols, {j: c for j, c in cols.items() if c})

    def __sub__(self, o: "Matrix") -> "Matrix":
        return self + (-o)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols,
                      {j: {i: -v for i, v in c.items()} for j, c in self._cols.items()})

    def scale(self, c: Scalar) -> "Matrix":
        if not (c.re or c.im):
            return Matrix.zeros(self.rows, self.cols)
        return Matrix(self.rows, self.cols,
                      {j: {i: c * v for i, v in col.items()} for j, col in self._cols.items()})

    def __matmul__(self, o: "Matrix") -> "Matrix":
        if self.cols != o.rows:
            raise ValueError("shape mismatch %dx%d @ %dx%d"
                             % (self.rows, self.cols, o.rows, o.cols))
        cols: dict[int, dict] = {}
        for k, ocol in o._cols.items():
            acc: dict[int, Scalar] = {}
            for j, v in ocol.items():
                mycol = self._cols.get(j)
                if not mycol:
                    continue
                for i, w in mycol.items():
                    t = acc.get(i)
                    t = w * v if t is None else t + w * v
                    acc[i] = t
            acc = {i: v for i, v in acc.items() if v.re or v.im}
            if acc:
                cols[k] = acc
        return Matrix(self.rows, o.cols, cols)

    def apply(self, x: dict) -> dict:
        """Matrix times sparse vector."""
        acc: dict[int, Scalar] = {}
        for j, v in x.items():
            col = self._cols.get(j)
            if not col:
                continue
            for i, w in col.items():
                t = acc.get(i)
                t = w * v if t is None else t + w * v
                acc[i] = t
        return {i: v for i, v in acc.items() if v.re or v.im}

    def transpose(self) -> "Matrix":
        cols: dict[int, dict] = {}
        for j, col in self._cols.items():
            for i, v in col.items():
                cols.setdefault(i, {})[j] = v
        return Matrix(self.cols, self.rows, cols)

    def conj_entries(self) -> "Matrix":
        return Matrix(self.rows, self.cols,
                      {j: {i: v.conj() for i, v in c.items()} for j, c in self._cols.items()})

    def trace(self) -> Scalar:
        t = ZERO
        for j, col in self._cols.items():
            v = col.get(j)
            if v is not None:
                t = t + v
        return t

    def commutator(self, o: "Matrix") -> "Matrix":
        return self @ o - o @ self

    def is_zero(self) -> bool:
        return not self._cols

    def __eq__(self, o):
        if not isinstance(o, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (o.rows, o.cols) and (self - o).is_zero()

    def __hash__(self):
        raise TypeError("Matrix is not hashable")

    def is_symmetric(self) -> bool:
        for j, col in self._cols.items():
            for i, v in col.items():
                if self.get(j, i) != v:
                    return False
        return True

    def is_real(self) -> bool:
        return all(v.is_real() for c in self._cols.values() for v in c.values())

    def to_rows(self) -> list:
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for j, col in self._cols.items():
            for i, v in col.items():
                out[i][j] = v
        return out

    def row_vectors(self):
        rows: dict[int, dict] = {}
        for j, col in self._cols.items():
            for i, v in col.items():
                rows.setdefault(i, {})[j] = v
        return [rows.get(i, {}) for i in range(self.rows)]

    def _check_shape(self, o: "Matrix") -> None:
        if (self.rows, self.cols) != (o.rows, o.cols):
            raise ValueError("shape mismatch %dx%d vs %dx%d"
                             % (self.rows, self.cols, o.rows, o.cols))

    def __repr__(self):
        return "Matrix(%dx%d, nnz=%d)" % (self.rows, self.cols, self.nnz())

    # -- serialization -----------------------------------------------------
    def to_json(self):
        return [[v.to_str() for v in row] for row in self.to_rows()]

    @staticmethod
    def from_json(data) -> "Matrix":
        return Matrix.from_rows([[Scalar.from_str(s) for s in row] for row in data])


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of a coordinate space, held as a canonical RREF basis."""

    __slots__ = ("ambient_dim", "_rows", "pivot_columns")

    def __init__(self, ambient_dim: int, rows: list, pivots: list):
        self.ambient_dim = ambient_dim
        self._rows = rows
        self.pivot_columns = pivots

    @staticmethod
    def from_vectors(ambient_dim: int, vectors) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            ech.insert(v if isinstance(v, dict) else vec_sparse(v))
        return Subspace(ambient_dim, ech.basis_rows(), ech.pivot_columns())

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, [], [])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> list:
        """Basis vectors as dense lists of Scalars (canonical order)."""
        return [vec_dense(r, self.ambient_dim) for r in self._rows]

    def basis_sparse(self) -> list:
        return [dict(r) for r in self._rows]

    def _echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for r in self._rows:
            ech.insert(dict(r))
        return ech

    def contains(self, vector) -> bool:
        v = vector if isinstance(vector, dict) else vec_sparse(vector)
        return not self._echelon().reduce(v)

    def coordinates_of(self, vector):
        """Coefficients of vector in the canonical basis, or None."""
        v = dict(vector) if isinstance(vector, dict) else vec_sparse(vector)
        coeffs = {}
        for k, (p, row) in enumerate(zip(self.pivot_columns, self._rows)):
            c = v.get(p)
            if c is not None and (c.re or c.im):
                coeffs[k] = c
                vec_axpy(v, row, c)
        return coeffs if not v else None

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: RREF of [[A,A],[B,0]]; rows supported on the right
        half of the 2n-column system span the intersection."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch: %d vs %d"
                             % (self.ambient_dim, other.ambient_dim))
        n = self.ambient_dim
        ech = Echelon(2 * n)
        for r in self._rows:
            row = dict(r)
            row.update({j + n: v for j, v in r.items()})
            ech.insert(row)
        for r in other._rows:
            ech.insert(dict(r))
        vecs = []
        for p in sorted(ech.rows):
            if p >= n:
                vecs.append({j - n: v for j, v in ech.rows[p].items()})
        return Subspace.from_vectors(n, vecs)

    def sum_with(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_vectors(self.ambient_dim,
                                     self.basis_sparse() + other.basis_sparse())

    def solve_constraints(self, constraint_maps) -> "Subspace":
        """Largest subspace of self killed by every map in constraint_maps.

        Each map sends a sparse ambient vector to a sparse vector (any target
        dimension); the system is solved in the coefficient space of the
        canonical basis, which keeps the elimination small.
        """
        k = self.dim
        if k == 0:
            return self
        images = []
        for f in constraint_maps:
            images.append([f(dict(r)) for r in self._rows])
        ech = Echelon(k)
        for imgs in images:
            coords = set()
            for img in imgs:
                coords.update(img)
            for c in sorted(coords):
                row = {}
                for a, img in enumerate(imgs):
                    v = img.get(c)
                    if v is not None and (v.re or v.im):
                        row[a] = v
                if row:
                    ech.insert(row)
        coeff_kernel = ech.kernel_basis()
        vecs = []
        for cf in coeff_kernel:
            acc: dict = {}
            for a, c in cf.items():
                vec_axpy(acc, self._rows[a], -c)
            vecs.append(acc)
        return Subspace.from_vectors(self.ambient_dim, vecs)

    def __eq__(self, o):
        if not isinstance(o, Subspace):
            return NotImplemented
        return (self.ambient_dim == o.ambient_dim
                and self.pivot_columns == o.pivot_columns
                and self._rows == o._rows)

    def __hash__(self):
        raise TypeError("Subspace is not hashable")

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)

    def to_json(self):
        return {"ambient": self.ambient_dim,
                "basis": [[v.to_str() for v in row] for row in self.basis]}

    @staticmethod
    def from_json(data) -> "Subspace":
        vecs = [[Scalar.from_str(s) for s in row] for row in data["basis"]]
        return Subspace.from_vectors(data["ambient"], vecs)


def full_space(n: int) -> Subspace:
    return Subspace(n, [{j: ONE} for j in range(n)], list(range(n)))


# ---------------------------------------------------------------------------
# spec operations


def rref(m: Matrix):
    """(rank, row space as canonical Subspace)."""
    ech = Echelon(m.cols)
    for row in m.row_vectors():
        ech.insert(row)
    return ech.rank, Subspace(m.cols, ech.basis_rows(), ech.pivot_columns())


def kernel(m: Matrix) -> Subspace:
    ech = Echelon(m.cols)
    for row in m.row_vectors():
        ech.insert(row)
    return Subspace.from_vectors(m.cols, ech.kernel_basis())


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def trace_form(a: Matrix, b: Matrix) -> Scalar:
    """Exact tr(a @ b) without materializing the product."""
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ValueError("trace_form needs square matrices of equal dimension")
    t = ZERO
    for j, col in b._cols.items():
        # tr(ab) = sum_j (a row_j) . (b col_j) = sum_{i,j} a[j][i] b[i][j]
        for i, v in col.items():
            w = a.get(j, i)
            if w.re or w.im:
                t = t + w * v
    return t


def signature(m: Matrix):
    """Exact inertia (n_pos, n_neg, n_zero) of a real symmetric matrix,
    by symmetric Gaussian (congruence) reduction."""
    if m.rows != m.cols:
        raise ValueError("signature needs a square matrix")
    if not m.is_real():
        raise ValueError("signature needs real entries")
    if not m.is_symmetric():
        raise ValueError("signature needs a symmetric matrix")
    n = m.rows
    a = {}
    for j, col in m._cols.items():
        for i, v in col.items():
            a[(i, j)] = v.re
    active = list(range(n))
    pos = neg = 0
    while active:
        # prefer a nonzero diagonal pivot
        piv = None
        for i in active:
            if a.get((i, i)):
                piv = i
                break
        if piv is None:
            # find an off-diagonal entry; if none the rest is zero
            hot = None
            for i in active:
                for j in active:
                    if i < j and a.get((i, j)):
                        hot = (i, j)
                        break
                if hot:
                    break
            if hot is None:
                break
            i, j = hot
            # congruence by (row_i += row_j, col_i += col_j): makes (i,i) nonzero
            for k in active:
                v = a.get((i, k), Rat(0)) + a.get((j, k), Rat(0))
                if v:
                    a[(i, k)] = v
                elif (i, k) in a:
                    del a[(i, k)]
            for k in active:
                v = a.get((k, i), Rat(0)) + a.get((k, j), Rat(0))
                if v:
                    a[(k, i)] = v
                elif (k, i) in a:
                    del a[(k, i)]
            piv = i
        d = a[(piv, piv)]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        # eliminate row/col piv from the active block
        coeffs = {k: a[(piv, k)] / d for k in active if a.get((piv, k))}
        for k, ck in coeffs.items():
            for l in active:
                v = a.get((piv, l))
                if not v:
                    continue
                w = a.get((k, l), Rat(0)) - ck * v
                if w:
                    a[(k, l)] = w
                elif (k, l) in a:
                    del a[(k, l)]
    zero = n - pos - neg
    return pos, neg, zero


# ---------------------------------------------------------------------------
# span solver with coefficient tracking


class SpanSolver:
    """Expresses vectors in a fixed (not necessarily canonical) spanning set.

    Reduction rows are augmented with coefficient bookkeeping so that
    express() recovers exact coordinates in the original generator order.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.count = 0
        self._ech = Echelon(ambient_dim)
        self._coeffs: dict[int, dict] = {}  # pivot col -> coeff row

    def add(self, vector) -> bool:
        v = dict(vector) if isinstance(vector, dict) else vec_sparse(vector)
        cf = {self.count: ONE}
        self.count += 1
        inserted = self._insert(v, cf)
        return inserted

    def _reduce(self, v: dict, cf: dict):
        for j in [c for c in list(v) if c in self._ech.rows]:
            c = v.get(j)
            if c is None or not (c.re or c.im):
                continue
            vec_axpy(v, self._ech.rows[j], c)
            vec_axpy(cf, self._coeffs[j], c)
        return v, cf

    def _insert(self, v: dict, cf: dict) -> bool:
        v, cf = self._reduce(v, cf)
        if not v:
            return False
        p = min(v)
        lead = v[p]
        if lead != ONE:
            inv = ONE / lead
            v = {j: inv * w for j, w in v.items()}
            cf = {j: inv * w for j, w in cf.items()}
        # back-eliminate p from stored rows
        for q, row in list(self._ech.rows.items()):
            c = row.get(p)
            if c is not None and (c.re or c.im):
                vec_axpy(row, v, c)
                vec_axpy(self._coeffs[q], cf, c)
        self._ech.rows[p] = v
        self._coeffs[p] = cf
        return True

    @property
    def rank(self) -> int:
        return self._ech.rank

    def express(self, vector):
        """Coefficients {generator index -> Scalar} with vector = sum c_k g_k,
        or None when the vector lies outside the span."""
        v = dict(vector) if isinstance(vector, dict) else vec_sparse(vector)
        cf: dict = {}
        v, cf = self._reduce(v, cf)
        if v:
            return None
        return {k: -c for k, c in cf.items()}


# ---------------------------------------------------------------------------
# float mirror


class FloatMatrix:
    """complex128 mirror of an exact Matrix (numpy-backed)."""

    __slots__ = ("a",)

    def __init__(self, a):
        self.a = np.asarray(a, dtype=np.complex128)
        if not np.all(np.isfinite(self.a)):
            raise ValueError("non-finite entries")

    @staticmethod
    def mirror(m: Matrix) -> "FloatMatrix":
        a = np.zeros((m.rows, m.cols), dtype=np.complex128)
        for j, col in m._cols.items():
            for i, v in col.items():
                a[i, j] = complex(v)
        return FloatMatrix(a)

    def __matmul__(self, o: "FloatMatrix") -> "FloatMatrix":
        return FloatMatrix(self.a @ o.a)

    def __sub__(self, o: "FloatMatrix") -> "FloatMatrix":
        return FloatMatrix(self.a - o.a)

    def scale(self, c: complex) -> "FloatMatrix":
        return FloatMatrix(self.a * c)

    def max_abs_diff(self, o: "FloatMatrix") -> float:
        return float(np.max(np.abs(self.a - o.a))) if self.a.size else 0.0

    def __repr__(self):
        return "FloatMatrix(%dx%d)" % self.a.shape


def mat_exp_float(m: FloatMatrix, tol: float = 1e-14) -> FloatMatrix:
    """Matrix exponential by scaling-and-squaring with a Taylor series.

    Series terms are added until they drop below tol * ||result||; accuracy
    target for the operator norms arising here (<= ~10) is 1e-10 or better.
    """
    a = m.a
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite entries")
    n = a.shape[0]
    norm = np.linalg.norm(a, 1) if n else 0.0
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    b = a / (2 ** squarings)
    out = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, 80):
        term = term @ b / k
        out = out + term
        if np.max(np.abs(term)) <= tol * max(1.0, np.max(np.abs(out))):
            break
    else:
        raise ValueError("matrix exponential series did not converge")
    for _ in range(squarings):
        out = out @ out
    return FloatMatrix(out)
