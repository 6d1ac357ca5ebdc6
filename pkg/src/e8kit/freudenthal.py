"""The 56-dimensional symplectic representation space, its cross operation and
pairing, the 133-dimensional operator algebra acting on it, the distinguished
elements kappa and mu, and the three SL(2) block embeddings.

Coordinates on the 56-dim space: X-part 0..26, Y-part 27..53, xi 54, eta 55.
Coordinates on the 133-dim algebra: 78 determinant-derivation operators
(triality 0..27, off-diagonal derivations 28..51, traceless multiplications
52..77), then 27 A-slots, 27 B-slots, then nu.
"""

from __future__ import annotations

from .jordan import (DIM, E1, SIGMA_PRIME_SIGNS, SIGMA_SIGNS, JordanElement,
                     e6_coordinates, e6_from_coordinates, e6_structured_basis,
                     jordan_adjoint, jordan_basis, jordan_cross, jordan_inner,
                     vee)
from .linalg import Matrix, vec_sparse
from .rationals import ONE, ZERO, Scalar, sc

PDIM = 56
E7DIM = 133

_J_BASIS = jordan_basis()
_THIRD = sc(1, 3)
_HALF = sc(1, 2)
_QUARter = sc(1, 4)


class PElement:
    """Element (X, Y, xi, eta) of the 56-dimensional space."""

    __slots__ = ("X", "Y", "xi", "eta")

    def __init__(self, X: JordanElement, Y: JordanElement, xi, eta):
        self.X = X
        self.Y = Y
        self.xi = xi if type(xi) is Scalar else Scalar(xi)
        self.eta = eta if type(eta) is Scalar else Scalar(eta)

    @staticmethod
    def zero() -> "PElement":
        return PElement(JordanElement.zero(), JordanElement.zero(), ZERO, ZERO)

    def __add__(self, o: "PElement") -> "PElement":
        return PElement(self.X + o.X, self.Y + o.Y, self.xi + o.xi, self.eta + o.eta)

    def __sub__(self, o: "PElement") -> "PElement":
        return PElement(self.X - o.X, self.Y - o.Y, self.xi - o.xi, self.eta - o.eta)

    def __neg__(self) -> "PElement":
        return PElement(-self.X, -self.Y, -self.xi, -self.eta)

    def scale(self, s: Scalar) -> "PElement":
        if type(s) is not Scalar:
            s = Scalar(s)
        return PElement(self.X.scale(s), self.Y.scale(s), s * self.xi, s * self.eta)

    def is_zero(self) -> bool:
        return (self.X.is_zero() and self.Y.is_zero()
                and not (self.xi.re or self.xi.im) and not (self.eta.re or self.eta.im))

    def __eq__(self, o):
        if not isinstance(o, PElement):
            return NotImplemented
        return (self.X, self.Y, self.xi, self.eta) == (o.X, o.Y, o.xi, o.eta)

    def __hash__(self):
        return hash((self.X, self.Y, self.xi, self.eta))

    def __repr__(self):
        return "PElement(%r, %r, %s, %s)" % (self.X, self.Y, self.xi.to_str(),
                                             self.eta.to_str())

    def to_vec(self) -> dict:
        v = dict(self.X.to_vec())
        for j, c in self.Y.to_vec().items():
            v[27 + j] = c
        if self.xi.re or self.xi.im:
            v[54] = self.xi
        if self.eta.re or self.eta.im:
            v[55] = self.eta
        return v

    @staticmethod
    def from_vec(v: dict) -> "PElement":
        X = JordanElement.from_vec({j: c for j, c in v.items() if j < 27})
        Y = JordanElement.from_vec({j - 27: c for j, c in v.items() if 27 <= j < 54})
        return PElement(X, Y, v.get(54, ZERO), v.get(55, ZERO))

    def to_json(self):
        return {"X": self.X.to_json(), "Y": self.Y.to_json(),
                "xi": self.xi.to_str(), "eta": self.eta.to_str()}

    @staticmethod
    def from_json(data) -> "PElement":
        return PElement(JordanElement.from_json(data["X"]),
                        JordanElement.from_json(data["Y"]),
                        Scalar.from_str(data["xi"]), Scalar.from_str(data["eta"]))


def p_basis() -> list:
    out = [PElement(b, JordanElement.zero(), ZERO, ZERO) for b in _J_BASIS]
    out += [PElement(JordanElement.zero(), b, ZERO, ZERO) for b in _J_BASIS]
    out.append(PElement(JordanElement.zero(), JordanElement.zero(), ONE, ZERO))
    out.append(PElement(JordanElement.zero(), JordanElement.zero(), ZERO, ONE))
    return out


# coordinates of the diagonal subspace (X, Y diagonal)
P_DIAGONAL_COORDS = (0, 1, 2, 27, 28, 29, 54, 55)


def skew_pairing(P: PElement, Q: PElement) -> Scalar:
    """{P, Q} = (X, W) - (Y, Z) + xi*omega - eta*zeta."""
    return (jordan_inner(P.X, Q.Y) - jordan_inner(P.Y, Q.X)
            + P.xi * Q.eta - P.eta * Q.xi)


class DecompositionError(ValueError):
    """An operator claimed to have (phi, A, B, nu) form failed the block reads."""


class E7Element:
    """Element Phi(phi, A, B, nu): phi a 27x27 operator in the 78-dim span,
    A, B Jordan elements, nu a scalar."""

    __slots__ = ("phi", "A", "B", "nu", "_phi_coords", "_op", "_phi_t")

    def __init__(self, phi: Matrix, A: JordanElement, B: JordanElement, nu,
                 phi_coords=None):
        self.phi = phi
        self.A = A
        self.B = B
        self.nu = nu if type(nu) is Scalar else Scalar(nu)
        if phi_coords is None:
            phi_coords = e6_coordinates(phi)
            if phi_coords is None:
                raise ValueError("phi lies outside the 78-dim operator algebra")
        self._phi_coords = phi_coords
        self._op = None
        self._phi_t = None

    @staticmethod
    def zero() -> "E7Element":
        return E7Element(Matrix.zeros(DIM, DIM), JordanElement.zero(),
                         JordanElement.zero(), ZERO, phi_coords={})

    def phi_coords(self) -> dict:
        return self._phi_coords

    def phi_adjoint(self) -> Matrix:
        if self._phi_t is None:
            self._phi_t = jordan_adjoint(self.phi)
        return self._phi_t

    def __add__(self, o: "E7Element") -> "E7Element":
        coords = dict(self._phi_coords)
        for k, c in o._phi_coords.items():
            t = coords.get(k, ZERO) + c
            if t.re or t.im:
                coords[k] = t
            elif k in coords:
                del coords[k]
        return E7Element(self.phi + o.phi, self.A + o.A, self.B + o.B,
                         self.nu + o.nu, phi_coords=coords)

    def __sub__(self, o: "E7Element") -> "E7Element":
        return self + o.scale(sc(-1))

    def __neg__(self) -> "E7Element":
        return self.scale(sc(-1))

    def scale(self, s: Scalar) -> "E7Element":
        if type(s) is not Scalar:
            s = Scalar(s)
        if not (s.re or s.im):
            return E7Element.zero()
        return E7Element(self.phi.scale(s), self.A.scale(s), self.B.scale(s),
                         s * self.nu,
                         phi_coords={k: s * c for k, c in self._phi_coords.items()})

    def is_zero(self) -> bool:
        return (not self._phi_coords and self.A.is_zero() and self.B.is_zero()
                and not (self.nu.re or self.nu.im))

    def __eq__(self, o):
        if not isinstance(o, E7Element):
            return NotImplemented
        return (self - o).is_zero()

    def __repr__(self):
        return "E7Element(phi nnz=%d, A=%r, B=%r, nu=%s)" % (
            self.phi.nnz(), self.A, self.B, self.nu.to_str())

    # -- the defining linear action ----------------------------------------
    def apply(self, P: PElement) -> PElement:
        """(phi X - nu X/3 + 2 B x Y + eta A,
            2 A x X - phi^t Y + nu Y/3 + xi B,
            (A, Y) + nu xi,
            (B, X) - nu eta).

        The minus on the adjoint term is forced by symplectic invariance of
        the pairing ({Phi P, Q} + {P, Phi Q} = 0); with it, the operator
        commutator of two such actions decomposes back into this form.
        """
        X, Y, xi, eta = P.X, P.Y, P.xi, P.eta
        phiX = JordanElement.from_vec(self.phi.apply(X.to_vec()))
        phitY = JordanElement.from_vec(self.phi_adjoint().apply(Y.to_vec()))
        third_nu = _THIRD * self.nu
        Xp = phiX - X.scale(third_nu) + jordan_cross(self.B, Y).scale(sc(2)) \
            + self.A.scale(eta)
        Yp = jordan_cross(self.A, X).scale(sc(2)) - phitY + Y.scale(third_nu) \
            + self.B.scale(xi)
        xip = jordan_inner(self.A, Y) + self.nu * xi
        etap = jordan_inner(self.B, X) - self.nu * eta
        return PElement(Xp, Yp, xip, etap)

    def operator(self) -> Matrix:
        """The 56x56 matrix of the action (cached)."""
        if self._op is None:
            m = Matrix.zeros(PDIM, PDIM)
            for j, P in enumerate(_P_BASIS):
                col = self.apply(P).to_vec()
                if col:
                    m._cols[j] = col
            self._op = m
        return self._op

    # -- coordinates --------------------------------------------------------
    def to_coords(self) -> dict:
        v = dict(self._phi_coords)
        for j, c in self.A.to_vec().items():
            v[78 + j] = c
        for j, c in self.B.to_vec().items():
            v[105 + j] = c
        if self.nu.re or self.nu.im:
            v[132] = self.nu
        return v

    @staticmethod
    def from_coords(v: dict) -> "E7Element":
        phi_coords = {k: c for k, c in v.items() if k < 78}
        A = JordanElement.from_vec({k - 78: c for k, c in v.items() if 78 <= k < 105})
        B = JordanElement.from_vec({k - 105: c for k, c in v.items() if 105 <= k < 132})
        return E7Element(e6_from_coordinates(phi_coords), A, B, v.get(132, ZERO),
                         phi_coords=phi_coords)

    def to_json(self):
        return {"phi": self.phi.to_json(), "A": self.A.to_json(),
                "B": self.B.to_json(), "nu": self.nu.to_str()}

    @staticmethod
    def from_json(data) -> "E7Element":
        return E7Element(Matrix.from_json(data["phi"]),
                         JordanElement.from_json(data["A"]),
                         JordanElement.from_json(data["B"]),
                         Scalar.from_str(data["nu"]))


_P_BASIS = p_basis()


def freudenthal_cross(P: PElement, Q: PElement) -> E7Element:
    """The cross operation:
       phi = -(X v W + Z v Y)/2
       A   = -(2 Y x W - xi Z - zeta X)/4
       B   =  (2 X x Z - eta W - omega Y)/4
       nu  =  ((X, W) + (Z, Y) - 3(xi omega + zeta eta))/8."""
    X, Y, xi, eta = P.X, P.Y, P.xi, P.eta
    Z, W, zeta, omega = Q.X, Q.Y, Q.xi, Q.eta
    phi = (vee(X, W) + vee(Z, Y)).scale(sc(-1, 2))
    A = (jordan_cross(Y, W).scale(sc(2)) - Z.scale(xi) - X.scale(zeta)).scale(sc(-1, 4))
    B = (jordan_cross(X, Z).scale(sc(2)) - W.scale(eta) - Y.scale(omega)).scale(sc(1, 4))
    nu = (jordan_inner(X, W) + jordan_inner(Z, Y)
          - sc(3) * (xi * omega + zeta * eta)) * sc(1, 8)
    return E7Element(phi, A, B, nu)


def e7_apply(Phi: E7Element, P: PElement) -> PElement:
    return Phi.apply(P)


def decompose_operator(m: Matrix) -> E7Element:
    """Read (phi, A, B, nu) off an operator matrix and certify the result.

    Columns of the unit xi / eta vectors reveal (B, nu) and (A, -nu); the
    X-block columns reveal phi.  A nonzero residual on the remaining block
    means the operator does not have the required form.
    """
    col_xi = m.column(54)
    col_eta = m.column(55)
    B = JordanElement.from_vec({j - 27: c for j, c in col_xi.items() if 27 <= j < 54})
    nu = col_xi.get(54, ZERO)
    A = JordanElement.from_vec({j: c for j, c in col_eta.items() if j < 27})
    # certify the read of the scalar columns
    ok_xi = all(27 <= j < 54 or j == 54 for j in col_xi)
    ok_eta = all(j < 27 or j == 55 for j in col_eta)
    if not ok_xi or not ok_eta or col_eta.get(55, ZERO) != -nu:
        raise DecompositionError("scalar columns have unexpected support")
    phi = Matrix.zeros(DIM, DIM)
    third_nu = _THIRD * nu
    for j in range(DIM):
        col = m.column(j)
        ej = _J_BASIS[j]
        for i, c in col.items():
            if i < 27:
                phi.set_(i, j, c)
        # add back nu X / 3
        for i, c in ej.to_vec().items():
            phi.set_(i, j, phi.get(i, j) + third_nu * c)
    cand = E7Element(phi, A, B, nu)
    if operator_from_coords(cand.to_coords()) != m:
        raise DecompositionError("operator is not of (phi, A, B, nu) form")
    return cand


def e7_bracket(Phi1: E7Element, Phi2: E7Element) -> E7Element:
    """Commutator of the actions, re-decomposed into (phi, A, B, nu) form."""
    m = Phi1.operator().commutator(Phi2.operator())
    return decompose_operator(m)


# ---------------------------------------------------------------------------
# distinguished elements and operators


def kappa() -> E7Element:
    return E7Element(vee(E1, E1).scale(sc(-2)), JordanElement.zero(),
                     JordanElement.zero(), sc(-1))


def mu() -> E7Element:
    return E7Element(Matrix.zeros(DIM, DIM), E1, E1, ZERO, phi_coords={})


def lambda_op() -> Matrix:
    """(X, Y, xi, eta) -> (Y, -X, eta, -xi)."""
    m = Matrix.zeros(PDIM, PDIM)
    for j in range(27):
        m.set_(j, 27 + j, ONE)
        m.set_(27 + j, j, -ONE)
    m.set_(54, 55, ONE)
    m.set_(55, 54, -ONE)
    return m


def sigma_p_op() -> Matrix:
    signs = list(SIGMA_SIGNS) + list(SIGMA_SIGNS) + [1, 1]
    m = Matrix.zeros(PDIM, PDIM)
    for j, s in enumerate(signs):
        m.set_(j, j, ONE if s > 0 else -ONE)
    return m


def sigma_prime_p_op() -> Matrix:
    signs = list(SIGMA_PRIME_SIGNS) + list(SIGMA_PRIME_SIGNS) + [1, 1]
    m = Matrix.zeros(PDIM, PDIM)
    for j, s in enumerate(signs):
        m.set_(j, j, ONE if s > 0 else -ONE)
    return m


def phi_k(A: Matrix, k: int) -> Matrix:
    """SL(2) block embedding number k: the four displayed scalar pairings are
    transformed by A, the (x_k, y_k) octonion pair by transpose(A)^{-1}, and
    the remaining octonion pairs are fixed."""
    if (A.rows, A.cols) != (2, 2):
        raise ValueError("A must be 2x2")
    a, b = A.get(0, 0), A.get(0, 1)
    c, d = A.get(1, 0), A.get(1, 1)
    if a * d - b * c != ONE:
        raise ValueError("A must have determinant 1")
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    m1 = (k % 3) + 1        # k+1 mod 3 in 1..3
    m2 = ((k + 1) % 3) + 1  # k+2 mod 3
    m = Matrix.identity(PDIM)

    def mix(i1: int, i2: int, t11, t12, t21, t22):
        m.set_(i1, i1, t11)
        m.set_(i1, i2, t12)
        m.set_(i2, i1, t21)
        m.set_(i2, i2, t22)

    # (xi_k, eta), (xi, eta_k), (eta_{k+1}, xi_{k+2}), (eta_{k+2}, xi_{k+1}) by A
    mix(k - 1, 55, a, b, c, d)
    mix(54, 27 + k - 1, a, b, c, d)
    mix(27 + m1 - 1, m2 - 1, a, b, c, d)
    mix(27 + m2 - 1, m1 - 1, a, b, c, d)
    # (x_k, y_k) by transpose(A)^{-1} = [[d, -c], [-b, a]]
    for t in range(8):
        i1 = 3 + 8 * (k - 1) + t
        i2 = 30 + 8 * (k - 1) + t
        mix(i1, i2, d, -c, -b, a)
    return m


# ---------------------------------------------------------------------------
# basis, structure table, Killing form


_E7_BASIS: list | None = None
_E7_OPS: list | None = None


def e7_basis() -> list:
    """The 133 basis elements in coordinate order."""
    global _E7_BASIS
    if _E7_BASIS is None:
        zero_j = JordanElement.zero()
        out = []
        for op in e6_structured_basis():
            out.append(E7Element(op, zero_j, zero_j, ZERO))
        for bj in _J_BASIS:
            out.append(E7Element(Matrix.zeros(DIM, DIM), bj, zero_j, ZERO,
                                 phi_coords={}))
        for bj in _J_BASIS:
            out.append(E7Element(Matrix.zeros(DIM, DIM), zero_j, bj, ZERO,
                                 phi_coords={}))
        out.append(E7Element(Matrix.zeros(DIM, DIM), zero_j, zero_j, ONE,
                             phi_coords={}))
        _E7_BASIS = out
    return _E7_BASIS


def e7_basis_operators() -> list:
    global _E7_OPS
    if _E7_OPS is None:
        _E7_OPS = [e.operator() for e in e7_basis()]
    return _E7_OPS


def operator_from_coords(v: dict) -> Matrix:
    ops = e7_basis_operators()
    cols: dict[int, dict] = {}
    for k, c in v.items():
        for j, col in ops[k]._cols.items():
            dst = cols.setdefault(j, {})
            for i, w in col.items():
                t = dst.get(i)
                t = c * w if t is None else t + c * w
                dst[i] = t
    cols = {j: {i: w for i, w in col.items() if w.re or w.im}
            for j, col in cols.items()}
    return Matrix(PDIM, PDIM, {j: col for j, col in cols.items() if col})


_E7_TABLE: dict | None = None


def e7_table() -> dict:
    """Structure constants: (i, j) with i < j maps to sparse coords of
    [e_i, e_j]."""
    global _E7_TABLE
    if _E7_TABLE is None:
        from .cache import load_cached, store_cached
        cached = load_cached("e7_table")
        if cached is not None:
            _E7_TABLE = cached
        else:
            ops = e7_basis_operators()
            tab = {}
            for i in range(E7DIM):
                for j in range(i + 1, E7DIM):
                    m = ops[i].commutator(ops[j])
                    if m.is_zero():
                        continue
                    tab[(i, j)] = decompose_operator(m).to_coords()
            _E7_TABLE = tab
            store_cached("e7_table", tab)
    return _E7_TABLE


def bracket_coords7(u: dict, v: dict) -> dict:
    tab = e7_table()
    acc: dict = {}
    for i, ci in u.items():
        for j, cj in v.items():
            if i == j:
                continue
            ent = tab.get((i, j)) if i < j else tab.get((j, i))
            if not ent:
                continue
            f = ci * cj if i < j else -(ci * cj)
            for k, w in ent.items():
                t = acc.get(k)
                t = f * w if t is None else t + f * w
                acc[k] = t
    return {k: w for k, w in acc.items() if w.re or w.im}


_E7_AD: list | None = None


def e7_ad_columns(i: int) -> dict:
    """ad(e_i) on coordinates: {j -> sparse image of [e_i, e_j]}."""
    global _E7_AD
    if _E7_AD is None:
        _E7_AD = [None] * E7DIM
    if _E7_AD[i] is None:
        tab = e7_table()
        cols = {}
        for j in range(E7DIM):
            if i == j:
                continue
            ent = tab.get((i, j)) if i < j else tab.get((j, i))
            if not ent:
                continue
            cols[j] = ent if i < j else {k: -w for k, w in ent.items()}
        _E7_AD[i] = cols
    return _E7_AD[i]


def ad7_apply(u: dict, v: dict) -> dict:
    return bracket_coords7(u, v)


_B7_GRAM: Matrix | None = None


def b7_gram() -> Matrix:
    """Exact Killing form Gram matrix on the 133 basis coordinates."""
    global _B7_GRAM
    if _B7_GRAM is None:
        from .cache import load_cached_matrix, store_cached_matrix
        cached = load_cached_matrix("b7_gram", E7DIM, E7DIM)
        if cached is not None:
            _B7_GRAM = cached
        else:
            g = Matrix.zeros(E7DIM, E7DIM)
            ads = [e7_ad_columns(i) for i in range(E7DIM)]
            for i in range(E7DIM):
                adi = ads[i]
                for j in range(i, E7DIM):
                    adj = ads[j]
                    t = ZERO
                    for k, img in adi.items():
                        back = adj
                        for mth, c in img.items():
                            col = back.get(mth)
                            if col:
                                w = col.get(k)
                                if w is not None:
                                    t = t + c * w
                    if t.re or t.im:
                        g.set_(i, j, t)
                        g.set_(j, i, t)
            _B7_GRAM = g
            store_cached_matrix("b7_gram", g)
    return _B7_GRAM


def killing_b7(Phi1: E7Element, Phi2: E7Element) -> Scalar:
    return killing_b7_coords(Phi1.to_coords(), Phi2.to_coords())


def killing_b7_coords(u: dict, v: dict) -> Scalar:
    g = b7_gram()
    t = ZERO
    for i, ci in u.items():
        col = g.column(i)
        for j, cj in v.items():
            w = col.get(j)
            if w is not None:
                t = t + ci * cj * w
    return t


# ---------------------------------------------------------------------------
# cross-operation table and group-element certification

_CROSS_TABLE: list | None = None


def cross_table() -> list:
    """cross(P_i, P_j) in 133-coords for all basis pairs (symmetric)."""
    global _CROSS_TABLE
    if _CROSS_TABLE is None:
        from .cache import load_cached, store_cached
        cached = load_cached("cross_table")
        if cached is not None:
            _CROSS_TABLE = cached
        else:
            tab = [[None] * PDIM for _ in range(PDIM)]
            for i in range(PDIM):
                for j in range(i, PDIM):
                    v = freudenthal_cross(_P_BASIS[i], _P_BASIS[j]).to_coords()
                    tab[i][j] = v
                    tab[j][i] = v
            _CROSS_TABLE = tab
            store_cached("cross_table", tab)
    return _CROSS_TABLE


def cross_coords(u: dict, v: dict) -> dict:
    """Coordinates of cross(u, v) for sparse 56-vectors u, v."""
    tab = cross_table()
    acc: dict = {}
    for i, ci in u.items():
        row = tab[i]
        for j, cj in v.items():
            ent = row[j]
            if not ent:
                continue
            f = ci * cj
            for k, w in ent.items():
                t = acc.get(k)
                t = f * w if t is None else t + f * w
                acc[k] = t
    return {k: w for k, w in acc.items() if w.re or w.im}


def pairing_coords(u: dict, v: dict) -> Scalar:
    """{u, v} on sparse 56-vectors: (X,W) - (Y,Z) + xi omega - eta zeta,
    with the coordinate Gram diag(1,1,1,2x24) on each Jordan block."""
    t = ZERO
    for i, ci in u.items():
        if i < 27:
            w = v.get(27 + i)
            if w is not None:
                t = t + ci * w * (_GRAM56[i])
        elif i < 54:
            w = v.get(i - 27)
            if w is not None:
                t = t - ci * w * (_GRAM56[i - 27])
        elif i == 54:
            w = v.get(55)
            if w is not None:
                t = t + ci * w
        else:
            w = v.get(54)
            if w is not None:
                t = t - ci * w
    return t


_GRAM56 = [sc(1)] * 3 + [sc(2)] * 24


def e7_operator_is_group_element(alpha: Matrix, fail_fast: bool = True) -> bool:
    """Exact cross-operation equivariance on all basis pairs:
    alpha (P x Q) = ((alpha P) x (alpha Q)) alpha as matrices."""
    if (alpha.rows, alpha.cols) != (PDIM, PDIM):
        raise ValueError("operator must be 56x56")
    tab = cross_table()
    for i in range(PDIM):
        ai = alpha.column(i)
        for j in range(i, PDIM):
            lhs = alpha @ operator_from_coords(tab[i][j])
            rhs = operator_from_coords(cross_coords(ai, alpha.column(j))) @ alpha
            if lhs != rhs:
                if fail_fast:
                    return False
                return False
    return True


# ---------------------------------------------------------------------------
# fixed subalgebras


def _conj_map_56(s_op: Matrix) -> list:
    """Coordinates of s_op . e_k . s_op^{-1} for each basis operator, where
    s_op is an involutive diagonal-sign operator on the 56-dim space."""
    signs = [1 if (s_op.get(j, j) == ONE) else -1 for j in range(PDIM)]
    cols = []
    for op in e7_basis_operators():
        m = Matrix.zeros(PDIM, PDIM)
        for j, col in op._cols.items():
            sj = signs[j]
            for i, v in col.items():
                m.set_(i, j, v if signs[i] * sj > 0 else -v)
        cols.append(decompose_operator(m).to_coords())
    return cols


_CONJ_CACHE: dict = {}


def involution_conj_columns(name: str) -> list:
    """Conjugation action on 133-coords for 'sigma' or 'sigma_prime'."""
    if name not in _CONJ_CACHE:
        op = sigma_p_op() if name == "sigma" else sigma_prime_p_op()
        _CONJ_CACHE[name] = _conj_map_56(op)
    return _CONJ_CACHE[name]


def e7_fixed_subalgebra(involutions=(), centralize_so8: bool = False,
                        extras=()) -> "Subspace":
    """Exact solution space in the 133 coordinates of the requested
    commutation conditions: conjugation-invariance under the listed
    involutions, vanishing bracket with the 28 triality generators, and
    vanishing bracket with the listed extra elements ('kappa' / 'mu')."""
    from .linalg import Subspace, full_space
    maps = []
    for name in involutions:
        cols = involution_conj_columns(name)

        def conj_minus_id(v, cols=cols):
            acc: dict = {}
            for k, c in v.items():
                for kk, w in cols[k].items():
                    t = acc.get(kk, ZERO) + c * w
                    acc[kk] = t
            for k, c in v.items():
                t = acc.get(k, ZERO) - c
                acc[k] = t
            return {k: c for k, c in acc.items() if c.re or c.im}

        maps.append(conj_minus_id)
    if centralize_so8:
        for g in range(28):
            def ad_g(v, g=g):
                return bracket_coords7({g: ONE}, v)
            maps.append(ad_g)
    for name in extras:
        w = (kappa() if name == "kappa" else mu()).to_coords()

        def ad_w(v, w=w):
            return bracket_coords7(w, v)

        maps.append(ad_w)
    return full_space(E7DIM).solve_constraints(maps)
