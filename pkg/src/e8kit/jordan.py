"""The 27-dimensional exceptional Jordan algebra over Q(i), its two commuting
involutions, the 52-dimensional derivation algebra, infinitesimal triality,
and the 78-dimensional algebra of determinant-preserving operators.

Coordinates on a Jordan element (xi1, xi2, xi3, x1, x2, x3) are ordered
[xi1, xi2, xi3] + x1[0..7] + x2[0..7] + x3[0..7]  (27 total).
"""

from __future__ import annotations

from .linalg import Echelon, Matrix, SpanSolver, Subspace, solve_linear, vec_sparse
from .octonion import Octonion
from .rationals import ONE, ZERO, Scalar, sc

HALF = sc(1, 2)
THIRD = sc(1, 3)

DIM = 27


class JordanElement:
    """Hermitian 3x3 octonion matrix: three diagonal scalars + three octonions."""

    __slots__ = ("xi", "x")

    def __init__(self, xi1, xi2, xi3, x1: Octonion, x2: Octonion, x3: Octonion):
        self.xi = (xi1 if type(xi1) is Scalar else Scalar(xi1),
                   xi2 if type(xi2) is Scalar else Scalar(xi2),
                   xi3 if type(xi3) is Scalar else Scalar(xi3))
        self.x = (x1, x2, x3)

    @staticmethod
    def zero() -> "JordanElement":
        o = Octonion.zero()
        return JordanElement(ZERO, ZERO, ZERO, o, o, o)

    @staticmethod
    def diag(a, b, c) -> "JordanElement":
        o = Octonion.zero()
        return JordanElement(a, b, c, o, o, o)

    def __add__(self, o: "JordanElement") -> "JordanElement":
        return JordanElement(self.xi[0] + o.xi[0], self.xi[1] + o.xi[1],
                             self.xi[2] + o.xi[2],
                             self.x[0] + o.x[0], self.x[1] + o.x[1], self.x[2] + o.x[2])

    def __sub__(self, o: "JordanElement") -> "JordanElement":
        return JordanElement(self.xi[0] - o.xi[0], self.xi[1] - o.xi[1],
                             self.xi[2] - o.xi[2],
                             self.x[0] - o.x[0], self.x[1] - o.x[1], self.x[2] - o.x[2])

    def __neg__(self) -> "JordanElement":
        return JordanElement(-self.xi[0], -self.xi[1], -self.xi[2],
                             -self.x[0], -self.x[1], -self.x[2])

    def scale(self, s: Scalar) -> "JordanElement":
        if type(s) is not Scalar:
            s = Scalar(s)
        return JordanElement(s * self.xi[0], s * self.xi[1], s * self.xi[2],
                             self.x[0].scale(s), self.x[1].scale(s), self.x[2].scale(s))

    def is_zero(self) -> bool:
        return (not any(v.re or v.im for v in self.xi)
                and all(o.is_zero() for o in self.x))

    def __eq__(self, o):
        if not isinstance(o, JordanElement):
            return NotImplemented
        return self.xi == o.xi and self.x == o.x

    def __hash__(self):
        return hash((self.xi, self.x))

    def __repr__(self):
        return "JordanElement(%s; %r, %r, %r)" % (
            ",".join(v.to_str() for v in self.xi), *self.x)

    # -- coordinates --------------------------------------------------------
    def to_vec(self) -> dict:
        v = {}
        for k in range(3):
            if self.xi[k].re or self.xi[k].im:
                v[k] = self.xi[k]
        for slot in range(3):
            base = 3 + 8 * slot
            for t, c in enumerate(self.x[slot].c):
                if c.re or c.im:
                    v[base + t] = c
        return v

    def to_list(self) -> list:
        out = [ZERO] * DIM
        for j, v in self.to_vec().items():
            out[j] = v
        return out

    @staticmethod
    def from_vec(v: dict) -> "JordanElement":
        xi = [v.get(0, ZERO), v.get(1, ZERO), v.get(2, ZERO)]
        xs = []
        for slot in range(3):
            base = 3 + 8 * slot
            xs.append(Octonion([v.get(base + t, ZERO) for t in range(8)]))
        return JordanElement(xi[0], xi[1], xi[2], xs[0], xs[1], xs[2])

    def to_json(self):
        return {"xi": [v.to_str() for v in self.xi],
                "x": [o.to_json() for o in self.x]}

    @staticmethod
    def from_json(data) -> "JordanElement":
        xi = [Scalar.from_str(s) for s in data["xi"]]
        xs = [Octonion.from_json(o) for o in data["x"]]
        return JordanElement(xi[0], xi[1], xi[2], xs[0], xs[1], xs[2])


E1 = JordanElement.diag(ONE, ZERO, ZERO)
E2 = JordanElement.diag(ZERO, ONE, ZERO)
E3 = JordanElement.diag(ZERO, ZERO, ONE)
E_UNIT = JordanElement.diag(ONE, ONE, ONE)


def f_slot(k: int, a: Octonion) -> JordanElement:
    """Element with octonion a in off-diagonal slot k (1-based), zero elsewhere."""
    o = Octonion.zero()
    xs = [o, o, o]
    xs[k - 1] = a
    return JordanElement(ZERO, ZERO, ZERO, *xs)


def jordan_basis() -> list:
    """The 27 coordinate basis elements, in coordinate order."""
    out = [E1, E2, E3]
    for slot in range(1, 4):
        for t in range(8):
            out.append(f_slot(slot, Octonion.basis(t)))
    return out


# ---------------------------------------------------------------------------
# products


def jordan_mul(X: JordanElement, Y: JordanElement) -> JordanElement:
    """Symmetrized hermitian matrix product (XY + YX)/2, componentwise."""
    xi, x = X.xi, X.x
    eta, y = Y.xi, Y.x
    dxi = []
    for k in range(3):
        a, b = (k + 1) % 3, (k + 2) % 3
        dxi.append(xi[k] * eta[k] + x[a].inner(y[a]) + x[b].inner(y[b]))
    xs = []
    for k in range(3):
        a, b = (k + 1) % 3, (k + 2) % 3
        cross = (y[a] * x[b] + x[a] * y[b]).conj().scale(HALF)
        xs.append(cross
                  + x[k].scale(HALF * (eta[a] + eta[b]))
                  + y[k].scale(HALF * (xi[a] + xi[b])))
    return JordanElement(dxi[0], dxi[1], dxi[2], xs[0], xs[1], xs[2])


def jordan_trace(X: JordanElement) -> Scalar:
    return X.xi[0] + X.xi[1] + X.xi[2]


def jordan_inner(X: JordanElement, Y: JordanElement) -> Scalar:
    """(X, Y) = tr(X o Y)."""
    t = X.xi[0] * Y.xi[0] + X.xi[1] * Y.xi[1] + X.xi[2] * Y.xi[2]
    two = sc(2)
    for k in range(3):
        t = t + two * X.x[k].inner(Y.x[k])
    return t


def jordan_cross(X: JordanElement, Y: JordanElement) -> JordanElement:
    """X x Y = (2 X o Y - tr(X) Y - tr(Y) X + (tr(X)tr(Y) - (X,Y)) E) / 2."""
    tX, tY = jordan_trace(X), jordan_trace(Y)
    t = jordan_mul(X, Y).scale(sc(2)) - Y.scale(tX) - X.scale(tY)
    t = t + E_UNIT.scale(tX * tY - jordan_inner(X, Y))
    return t.scale(HALF)


def jordan_det(X: JordanElement) -> Scalar:
    """det X = (X x X, X) / 3."""
    return THIRD * jordan_inner(jordan_cross(X, X), X)


# ---------------------------------------------------------------------------
# involutions

# sign of each coordinate under sigma (negates slots 2, 3) and sigma'
# (negates slots 1, 2)
SIGMA_SIGNS = tuple([1] * 3 + [1] * 8 + [-1] * 8 + [-1] * 8)
SIGMA_PRIME_SIGNS = tuple([1] * 3 + [-1] * 8 + [-1] * 8 + [1] * 8)


def apply_sigma(X: JordanElement) -> JordanElement:
    return JordanElement(*X.xi, X.x[0], -X.x[1], -X.x[2])


def apply_sigma_prime(X: JordanElement) -> JordanElement:
    return JordanElement(*X.xi, -X.x[0], -X.x[1], X.x[2])


def _diag_matrix(signs) -> Matrix:
    m = Matrix.zeros(DIM, DIM)
    for j, s in enumerate(signs):
        m.set_(j, j, ONE if s > 0 else -ONE)
    return m


def sigma_op() -> Matrix:
    return _diag_matrix(SIGMA_SIGNS)


def sigma_prime_op() -> Matrix:
    return _diag_matrix(SIGMA_PRIME_SIGNS)


# ---------------------------------------------------------------------------
# multiplication operators and the determinant-derivation algebra

_BASIS = jordan_basis()


def l_op(X: JordanElement) -> Matrix:
    """Multiplication operator Z -> X o Z as a 27x27 matrix."""
    m = Matrix.zeros(DIM, DIM)
    for j, b in enumerate(_BASIS):
        col = jordan_mul(X, b).to_vec()
        if col:
            m._cols[j] = col
    return m


# Gram matrix of (.,.) on coordinates is diag(1,1,1, 2 x 24); adjoints divide
# and multiply by these weights.
_GRAM_W = [1, 1, 1] + [2] * 24


def jordan_adjoint(op: Matrix) -> Matrix:
    """Adjoint of a 27x27 operator with respect to (.,.):
    adj[j][i] = op[i][j] * g_i / g_j."""
    out = Matrix.zeros(DIM, DIM)
    for j, col in op._cols.items():
        for i, v in col.items():
            w = v * sc(_GRAM_W[i], _GRAM_W[j])
            out.set_(j, i, out.get(j, i) + w)
    return out


def vee(X: JordanElement, W: JordanElement) -> Matrix:
    """X v W = [L_X, L_W] + L_(X o W - (X,W)/3 E)."""
    lx, lw = l_op(X), l_op(W)
    t = jordan_mul(X, W) - E_UNIT.scale(THIRD * jordan_inner(X, W))
    return lx.commutator(lw) + l_op(t)


# structure constants of the Jordan product over the 27 basis elements
_S_TABLE: list | None = None
_R_TABLE: list | None = None


def _structure_tables():
    global _S_TABLE, _R_TABLE
    if _S_TABLE is None:
        S = [[None] * DIM for _ in range(DIM)]
        for a in range(DIM):
            for b in range(a, DIM):
                v = jordan_mul(_BASIS[a], _BASIS[b]).to_vec()
                S[a][b] = v
                S[b][a] = v
        R = [[{} for _ in range(DIM)] for _ in range(DIM)]  # R[b][l][k] = S[k][b][l]
        for k in range(DIM):
            for b in range(DIM):
                for l, c in S[k][b].items():
                    R[b][l][k] = c
        _S_TABLE, _R_TABLE = S, R
    return _S_TABLE, _R_TABLE


def is_derivation(op: Matrix) -> bool:
    """Exact check of the derivation law on all basis pairs."""
    S, _ = _structure_tables()
    for a in range(DIM):
        va = op.column(a)
        for b in range(a, DIM):
            lhs = op.apply(S[a][b])
            rhs = {}
            for k, c in va.items():
                for l, w in S[k][b].items():
                    t = rhs.get(l, ZERO) + c * w
                    rhs[l] = t
            for k, c in op.column(b).items():
                for l, w in S[k][a].items():
                    t = rhs.get(l, ZERO) + c * w
                    rhs[l] = t
            for l in set(lhs) | set(rhs):
                if lhs.get(l, ZERO) != rhs.get(l, ZERO):
                    return False
    return True


_DERIVATIONS: Subspace | None = None


def solve_f4_derivations() -> Subspace:
    """Exact kernel of the linear system imposing the derivation law on all
    basis pairs; a 52-dimensional subspace of the 729 operator coordinates
    (row-major: entry (i,j) at 27*i + j)."""
    global _DERIVATIONS
    if _DERIVATIONS is not None:
        return _DERIVATIONS
    S, R = _structure_tables()
    ech = Echelon(DIM * DIM)
    for a in range(DIM):
        for b in range(a, DIM):
            sab = S[a][b]
            for l in range(DIM):
                row: dict = {}
                for m, c in sab.items():
                    row[DIM * l + m] = c
                for k, c in R[b][l].items():
                    u = DIM * k + a
                    t = row.get(u, ZERO) - c
                    if t.re or t.im:
                        row[u] = t
                    elif u in row:
                        del row[u]
                for k, c in R[a][l].items():
                    u = DIM * k + b
                    t = row.get(u, ZERO) - c
                    if t.re or t.im:
                        row[u] = t
                    elif u in row:
                        del row[u]
                if row:
                    ech.insert(row)
    _DERIVATIONS = Subspace.from_vectors(DIM * DIM, ech.kernel_basis())
    return _DERIVATIONS


def op_to_vec(op: Matrix) -> dict:
    v = {}
    for j, col in op._cols.items():
        for i, c in col.items():
            v[DIM * i + j] = c
    return v


def vec_to_op(v: dict) -> Matrix:
    m = Matrix.zeros(DIM, DIM)
    for u, c in v.items():
        m.set_(u // DIM, u % DIM, c)
    return m


_COMMUTANT: Subspace | None = None


def f4_commutant_basis() -> Subspace:
    """Derivations commuting with both involutions (canonical basis, dim 28).

    Conjugation by a diagonal sign operator fixes entry (i,j) exactly when the
    signs agree, so the commutation conditions zero out a coordinate set.
    """
    global _COMMUTANT
    if _COMMUTANT is not None:
        return _COMMUTANT
    der = solve_f4_derivations()
    bad = []
    for i in range(DIM):
        for j in range(DIM):
            if (SIGMA_SIGNS[i] * SIGMA_SIGNS[j] == -1
                    or SIGMA_PRIME_SIGNS[i] * SIGMA_PRIME_SIGNS[j] == -1):
                bad.append(DIM * i + j)
    bad_set = set(bad)

    def restrict(vec: dict) -> dict:
        return {u: c for u, c in vec.items() if u in bad_set}

    _COMMUTANT = der.solve_constraints([restrict])
    return _COMMUTANT


# ---------------------------------------------------------------------------
# triality


class TrialityTriple:
    """Triple of skew 8x8 matrices related by the triality identity
    D1(x) y + x D2(y) = conj(D3(conj(xy)))."""

    __slots__ = ("d1", "d2", "d3")

    def __init__(self, d1: Matrix, d2: Matrix, d3: Matrix):
        for d in (d1, d2, d3):
            if (d.rows, d.cols) != (8, 8):
                raise ValueError("triality components must be 8x8")
            if not (d + d.transpose()).is_zero():
                raise ValueError("triality components must be skew-symmetric")
        self.d1, self.d2, self.d3 = d1, d2, d3

    def components(self):
        return (self.d1, self.d2, self.d3)

    def to_json(self):
        return [self.d1.to_json(), self.d2.to_json(), self.d3.to_json()]

    @staticmethod
    def from_json(data) -> "TrialityTriple":
        return TrialityTriple(*[Matrix.from_json(d) for d in data])


def _oct_apply(m: Matrix, a: Octonion) -> Octonion:
    out = [ZERO] * 8
    for i, v in m.apply(vec_sparse(a.c)).items():
        out[i] = v
    return Octonion(out)


def skew_basis_8():
    """Elementary skew generators E_pq - E_qp, p < q, lex order."""
    out = []
    for p in range(8):
        for q in range(p + 1, 8):
            m = Matrix.zeros(8, 8)
            m.set_(p, q, ONE)
            m.set_(q, p, -ONE)
            out.append(((p, q), m))
    return out


_SKEW8 = skew_basis_8()


def triality_completion(d1: Matrix) -> TrialityTriple:
    """The unique (D2, D3) completing a skew D1 to a triality triple.

    Solves the 512 linear conditions from the 64 basis pairs for the 56 skew
    coordinates of D2 and D3; a singular system signals an inconsistent
    multiplication convention and is raised as an error.
    """
    if (d1.rows, d1.cols) != (8, 8) or not (d1 + d1.transpose()).is_zero():
        raise ValueError("D1 must be a skew 8x8 matrix")
    cols = []  # 56 columns, each over equation index (i*8+j)*8+coord
    for slot in (2, 3):
        for (p, q), m in _SKEW8:
            col = {}
            for i in range(8):
                ei = Octonion.basis(i)
                for j in range(8):
                    ej = Octonion.basis(j)
                    if slot == 2:
                        term = ei * _oct_apply(m, ej)
                    else:
                        term = -(_oct_apply(m, (ei * ej).conj()).conj())
                    for t, c in enumerate(term.c):
                        if c.re or c.im:
                            col[(i * 8 + j) * 8 + t] = c
            cols.append(col)
    rhs_rows: dict[int, Scalar] = {}
    for i in range(8):
        ei = Octonion.basis(i)
        d1ei = _oct_apply(d1, ei)
        for j in range(8):
            term = d1ei * Octonion.basis(j)
            for t, c in enumerate(term.c):
                if c.re or c.im:
                    rhs_rows[(i * 8 + j) * 8 + t] = c
    # assemble rows of [A | b]: A[e][u] = cols[u][e], b[e] = -rhs[e]
    eqs = set(rhs_rows)
    for col in cols:
        eqs.update(col)
    rows, bvals = [], []
    for e in sorted(eqs):
        row = {}
        for u, col in enumerate(cols):
            c = col.get(e)
            if c is not None:
                row[u] = c
        rows.append(row)
        bvals.append(-rhs_rows.get(e, ZERO))
    try:
        sol = solve_linear(rows, bvals, 56)
    except ValueError as exc:
        raise ValueError("triality completion failed: %s" % exc) from exc
    d2 = Matrix.zeros(8, 8)
    d3 = Matrix.zeros(8, 8)
    for u, c in sol.items():
        (p, q), _ = _SKEW8[u % 28]
        target = d2 if u < 28 else d3
        target.set_(p, q, target.get(p, q) + c)
        target.set_(q, p, target.get(q, p) - c)
    return TrialityTriple(d1.copy(), d2, d3)


def triple_to_operator(triple: TrialityTriple) -> Matrix:
    """Jordan operator with zero diagonal action and D_k on off-diagonal slot k."""
    m = Matrix.zeros(DIM, DIM)
    for slot, d in enumerate(triple.components()):
        base = 3 + 8 * slot
        for j, col in d._cols.items():
            for i, v in col.items():
                m.set_(base + i, base + j, v)
    return m


def _det8(m: Matrix) -> Scalar:
    rows = [list(r) for r in m.to_rows()]
    n = m.rows
    det = ONE
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c].re or rows[r][c].im:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = ONE / rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] * inv
            if f.re or f.im:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return det


class CompatibilityError(ValueError):
    """Raised when (a1, a2, a3) fails the multiplicativity relation."""

    def __init__(self, i: int, j: int):
        super().__init__("triple incompatible at basis pair (e%d, e%d)" % (i, j))
        self.pair = (i, j)


def spin8_group_element(a1: Matrix, a2: Matrix, a3: Matrix) -> Matrix:
    """Jordan operator of a compatible orthogonal triple: slotwise x_k -> a_k x_k.

    Requires each a_k in SO(8) and (a1 x)(a2 y) = conj(a3 conj(xy)) on all 64
    basis pairs; violations are rejected with the offending pair.
    """
    eye = Matrix.identity(8)
    for k, a in enumerate((a1, a2, a3), start=1):
        if (a.rows, a.cols) != (8, 8):
            raise ValueError("component %d is not 8x8" % k)
        if a.transpose() @ a != eye:
            raise ValueError("component %d is not orthogonal" % k)
        if _det8(a) != ONE:
            raise ValueError("component %d has determinant != 1" % k)
    for i in range(8):
        u = _oct_apply(a1, Octonion.basis(i))
        for j in range(8):
            ej = Octonion.basis(j)
            lhs = u * _oct_apply(a2, ej)
            rhs = _oct_apply(a3, (Octonion.basis(i) * ej).conj()).conj()
            if lhs != rhs:
                raise CompatibilityError(i, j)
    m = Matrix.zeros(DIM, DIM)
    for k in range(3):
        m.set_(k, k, ONE)
    for slot, a in enumerate((a1, a2, a3)):
        base = 3 + 8 * slot
        for j, col in a._cols.items():
            for i, v in col.items():
                m.set_(base + i, base + j, v)
    return m


# ---------------------------------------------------------------------------
# the 78-dimensional determinant-derivation algebra

_E6_STRUCTURED: list | None = None
_E6_SOLVER: SpanSolver | None = None


def _ltype_derivation(k: int, t: int) -> Matrix:
    """[L_{F_k(e_t)}, L_{E_{k+1}} - L_{E_{k+2}}]: a derivation since the two
    arguments multiply to zero."""
    a = f_slot(k, Octonion.basis(t))
    kp1 = (k % 3) + 1
    kp2 = ((k + 1) % 3) + 1
    b = [E1, E2, E3][kp1 - 1] - [E1, E2, E3][kp2 - 1]
    return l_op(a).commutator(l_op(b))


def e6_structured_basis() -> list:
    """Deterministic basis of the 78-dim operator algebra: 28 triality
    derivations, 24 off-diagonal derivations, 26 traceless multiplications."""
    global _E6_STRUCTURED
    if _E6_STRUCTURED is not None:
        return _E6_STRUCTURED
    ops = []
    for (p, q), m in _SKEW8:
        ops.append(triple_to_operator(triality_completion(m)))
    for k in (1, 2, 3):
        for t in range(8):
            ops.append(_ltype_derivation(k, t))
    ops.append(l_op(E1 - E2))
    ops.append(l_op(E2 - E3))
    for k in (1, 2, 3):
        for t in range(8):
            ops.append(l_op(f_slot(k, Octonion.basis(t))))
    _E6_STRUCTURED = ops
    return ops


def e6_solver() -> SpanSolver:
    global _E6_SOLVER
    if _E6_SOLVER is not None:
        return _E6_SOLVER
    solver = SpanSolver(DIM * DIM)
    for op in e6_structured_basis():
        solver.add(op_to_vec(op))
    if solver.rank != 78:
        raise AssertionError("structured basis is degenerate: rank %d" % solver.rank)
    _E6_SOLVER = solver
    return solver


def e6_basis() -> Subspace:
    """Canonical subspace of the 78-dim algebra inside operator coordinates."""
    return Subspace.from_vectors(DIM * DIM,
                                 [op_to_vec(op) for op in e6_structured_basis()])


def e6_coordinates(op: Matrix):
    """Coordinates of an operator in the structured basis, or None."""
    return e6_solver().express(op_to_vec(op))


def e6_from_coordinates(coords: dict) -> Matrix:
    ops = e6_structured_basis()
    m = Matrix.zeros(DIM, DIM)
    for k, c in coords.items():
        m = m + ops[k].scale(c)
    return m


def is_e6_member(op: Matrix) -> bool:
    return e6_coordinates(op) is not None


def det_derivation_residual(op: Matrix, X: JordanElement) -> Scalar:
    """(op X, X x X); zero for every X exactly when op preserves det."""
    img = JordanElement.from_vec(op.apply(X.to_vec()))
    return jordan_inner(img, jordan_cross(X, X))
