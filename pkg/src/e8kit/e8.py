"""The 248-dimensional Lie algebra: bracket, adjoint operators, Killing forms,
the real compact form, the square-zero variety with its thirteen membership
conditions, nilpotent-orbit formulas, fixed-point subalgebras, ideal
splitting, and simple-type classification.

Coordinates: operator part 0..132, first 56-dim slot 133..188, second 56-dim
slot 189..244, then the three scalars r, s, t at 245..247.
"""

from __future__ import annotations

import math
import random

import numpy as np

from .freudenthal import (E7DIM, PDIM, E7Element, PElement, bracket_coords7,
                          cross_coords, e7_basis_operators, e7_table,
                          involution_conj_columns, killing_b7_coords,
                          lambda_op, pairing_coords, sigma_p_op,
                          sigma_prime_p_op, decompose_operator)
from .jordan import SIGMA_PRIME_SIGNS, SIGMA_SIGNS
from .linalg import (Echelon, FloatMatrix, Matrix, SpanSolver, Subspace,
                     full_space, signature, vec_add, vec_axpy, vec_clean,
                     vec_scale)
from .rationals import ONE, ZERO, Rat, Scalar, sc

DIM8 = 248
OFF_P = 133
OFF_Q = 189
IDX_R = 245
IDX_S = 246
IDX_T = 247

_EIGHTH = sc(1, 8)
_QUARTER = sc(1, 4)
_TWO = sc(2)


class E8Element:
    """(Phi, P, Q, r, s, t): an operator-part element, two 56-dim vectors and
    three scalars."""

    __slots__ = ("Phi", "P", "Q", "r", "s", "t")

    def __init__(self, Phi: E7Element, P: PElement, Q: PElement, r, s, t):
        self.Phi = Phi
        self.P = P
        self.Q = Q
        self.r = r if type(r) is Scalar else Scalar(r)
        self.s = s if type(s) is Scalar else Scalar(s)
        self.t = t if type(t) is Scalar else Scalar(t)

    @staticmethod
    def zero() -> "E8Element":
        return E8Element(E7Element.zero(), PElement.zero(), PElement.zero(),
                         ZERO, ZERO, ZERO)

    @staticmethod
    def from_parts(Phi=None, P=None, Q=None, r=ZERO, s=ZERO, t=ZERO) -> "E8Element":
        return E8Element(Phi if Phi is not None else E7Element.zero(),
                         P if P is not None else PElement.zero(),
                         Q if Q is not None else PElement.zero(), r, s, t)

    def __add__(self, o: "E8Element") -> "E8Element":
        return E8Element(self.Phi + o.Phi, self.P + o.P, self.Q + o.Q,
                         self.r + o.r, self.s + o.s, self.t + o.t)

    def __sub__(self, o: "E8Element") -> "E8Element":
        return E8Element(self.Phi - o.Phi, self.P - o.P, self.Q - o.Q,
                         self.r - o.r, self.s - o.s, self.t - o.t)

    def __neg__(self) -> "E8Element":
        return self.scale(sc(-1))

    def scale(self, c: Scalar) -> "E8Element":
        if type(c) is not Scalar:
            c = Scalar(c)
        return E8Element(self.Phi.scale(c), self.P.scale(c), self.Q.scale(c),
                         c * self.r, c * self.s, c * self.t)

    def is_zero(self) -> bool:
        return (self.Phi.is_zero() and self.P.is_zero() and self.Q.is_zero()
                and not (self.r.re or self.r.im) and not (self.s.re or self.s.im)
                and not (self.t.re or self.t.im))

    def __eq__(self, o):
        if not isinstance(o, E8Element):
            return NotImplemented
        return (self - o).is_zero()

    def __repr__(self):
        return "E8Element(coords=%r)" % ({k: v.to_str() for k, v in
                                          sorted(self.to_coords().items())},)

    def to_coords(self) -> dict:
        v = dict(self.Phi.to_coords())
        for j, c in self.P.to_vec().items():
            v[OFF_P + j] = c
        for j, c in self.Q.to_vec().items():
            v[OFF_Q + j] = c
        if self.r.re or self.r.im:
            v[IDX_R] = self.r
        if self.s.re or self.s.im:
            v[IDX_S] = self.s
        if self.t.re or self.t.im:
            v[IDX_T] = self.t
        return v

    @staticmethod
    def from_coords(v: dict) -> "E8Element":
        phi = {k: c for k, c in v.items() if k < OFF_P}
        p = {k - OFF_P: c for k, c in v.items() if OFF_P <= k < OFF_Q}
        q = {k - OFF_Q: c for k, c in v.items() if OFF_Q <= k < IDX_R}
        return E8Element(E7Element.from_coords(phi), PElement.from_vec(p),
                         PElement.from_vec(q), v.get(IDX_R, ZERO),
                         v.get(IDX_S, ZERO), v.get(IDX_T, ZERO))

    def to_json(self):
        return {"Phi": self.Phi.to_json(), "P": self.P.to_json(),
                "Q": self.Q.to_json(), "r": self.r.to_str(),
                "s": self.s.to_str(), "t": self.t.to_str()}

    @staticmethod
    def from_json(data) -> "E8Element":
        return E8Element(E7Element.from_json(data["Phi"]),
                         PElement.from_json(data["P"]),
                         PElement.from_json(data["Q"]),
                         Scalar.from_str(data["r"]), Scalar.from_str(data["s"]),
                         Scalar.from_str(data["t"]))


def unit(idx: int) -> dict:
    return {idx: ONE}


ONE_TILDE = unit(IDX_R)   # (0,0,0,1,0,0)
ONE_UPPER = unit(IDX_S)   # (0,0,0,0,1,0)
ONE_LOWER = unit(IDX_T)   # (0,0,0,0,0,1)


# ---------------------------------------------------------------------------
# the bracket on coordinates


def _split(v: dict):
    phi = {}
    p = {}
    q = {}
    r = s = t = None
    for k, c in v.items():
        if k < OFF_P:
            phi[k] = c
        elif k < OFF_Q:
            p[k - OFF_P] = c
        elif k < IDX_R:
            q[k - OFF_Q] = c
        elif k == IDX_R:
            r = c
        elif k == IDX_S:
            s = c
        else:
            t = c
    return phi, p, q, (r or ZERO), (s or ZERO), (t or ZERO)


def act7(phi: dict, w: dict) -> dict:
    """Action of an operator-part coordinate vector on a 56-dim vector."""
    if not phi or not w:
        return {}
    ops = e7_basis_operators()
    acc: dict = {}
    for k, c in phi.items():
        op = ops[k]
        for j, x in w.items():
            col = op._cols.get(j)
            if not col:
                continue
            f = c * x
            for i, y in col.items():
                u = acc.get(i)
                u = f * y if u is None else u + f * y
                acc[i] = u
    return {i: y for i, y in acc.items() if y.re or y.im}


def _addmul(dst: dict, src: dict, c: Scalar, off: int = 0) -> None:
    if not (c.re or c.im):
        return
    for k, v in src.items():
        kk = k + off
        w = dst.get(kk)
        w = c * v if w is None else w + c * v
        if w.re or w.im:
            dst[kk] = w
        elif kk in dst:
            del dst[kk]


def bracket8_coords(u: dict, v: dict) -> dict:
    """[u, v] componentwise:
       op  = [Phi1, Phi2] + P1 x Q2 - P2 x Q1
       P   = Phi1 P2 - Phi2 P1 + r1 P2 - r2 P1 + s1 Q2 - s2 Q1
       Q   = Phi1 Q2 - Phi2 Q1 - r1 Q2 + r2 Q1 + t1 P2 - t2 P1
       r   = -{P1,Q2}/8 + {P2,Q1}/8 + s1 t2 - s2 t1
       s   =  {P1,P2}/4 + 2 r1 s2 - 2 r2 s1
       t   = -{Q1,Q2}/4 - 2 r1 t2 + 2 r2 t1."""
    f1, p1, q1, r1, s1, t1 = _split(u)
    f2, p2, q2, r2, s2, t2 = _split(v)
    out: dict = {}
    # operator part
    if f1 and f2:
        _addmul(out, bracket_coords7(f1, f2), ONE)
    if p1 and q2:
        _addmul(out, cross_coords(p1, q2), ONE)
    if p2 and q1:
        _addmul(out, cross_coords(p2, q1), -ONE)
    # first 56-dim slot
    pout: dict = {}
    if f1 and p2:
        _addmul(pout, act7(f1, p2), ONE)
    if f2 and p1:
        _addmul(pout, act7(f2, p1), -ONE)
    _addmul(pout, p2, r1)
    _addmul(pout, p1, -r2)
    _addmul(pout, q2, s1)
    _addmul(pout, q1, -s2)
    _addmul(out, pout, ONE, OFF_P)
    # second 56-dim slot
    qout: dict = {}
    if f1 and q2:
        _addmul(qout, act7(f1, q2), ONE)
    if f2 and q1:
        _addmul(qout, act7(f2, q1), -ONE)
    _addmul(qout, q2, -r1)
    _addmul(qout, q1, r2)
    _addmul(qout, p2, t1)
    _addmul(qout, p1, -t2)
    _addmul(out, qout, ONE, OFF_Q)
    # scalars
    rr = s1 * t2 - s2 * t1
    if p1 and q2:
        rr = rr - _EIGHTH * pairing_coords(p1, q2)
    if p2 and q1:
        rr = rr + _EIGHTH * pairing_coords(p2, q1)
    if rr.re or rr.im:
        out[IDX_R] = rr
    ss = _TWO * (r1 * s2 - r2 * s1)
    if p1 and p2:
        ss = ss + _QUARTER * pairing_coords(p1, p2)
    if ss.re or ss.im:
        out[IDX_S] = ss
    tt = -_TWO * (r1 * t2 - r2 * t1)
    if q1 and q2:
        tt = tt - _QUARTER * pairing_coords(q1, q2)
    if tt.re or tt.im:
        out[IDX_T] = tt
    return out


def e8_bracket(R1: E8Element, R2: E8Element) -> E8Element:
    return E8Element.from_coords(bracket8_coords(R1.to_coords(), R2.to_coords()))


_E8_TABLE: dict | None = None


def e8_table() -> dict:
    """Structure constants on the 248 basis: (i, j), i < j -> sparse coords."""
    global _E8_TABLE
    if _E8_TABLE is None:
        from .cache import load_cached, store_cached
        cached = load_cached("e8_table")
        if cached is not None:
            _E8_TABLE = cached
        else:
            tab = {}
            for i in range(DIM8):
                ui = unit(i)
                for j in range(i + 1, DIM8):
                    w = bracket8_coords(ui, unit(j))
                    if w:
                        tab[(i, j)] = w
            _E8_TABLE = tab
            store_cached("e8_table", tab)
    return _E8_TABLE


def bracket8_table(u: dict, v: dict) -> dict:
    """Table-driven bracket; agrees with bracket8_coords by construction."""
    tab = e8_table()
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


_AD_COLUMNS: list | None = None


def _ad_columns(i: int) -> dict:
    """ad(e_i) column map {j -> sparse [e_i, e_j]}."""
    global _AD_COLUMNS
    if _AD_COLUMNS is None:
        _AD_COLUMNS = [None] * DIM8
    if _AD_COLUMNS[i] is None:
        tab = e8_table()
        cols = {}
        for j in range(DIM8):
            if j == i:
                continue
            ent = tab.get((i, j)) if i < j else tab.get((j, i))
            if not ent:
                continue
            cols[j] = ent if i < j else {k: -w for k, w in ent.items()}
        _AD_COLUMNS[i] = cols
    return _AD_COLUMNS[i]


def theta(R: E8Element) -> Matrix:
    """ad(R) as a sparse 248x248 matrix."""
    return theta_coords(R.to_coords())


def theta_coords(u: dict) -> Matrix:
    cols: dict[int, dict] = {}
    for i, ci in u.items():
        for j, img in _ad_columns(i).items():
            dst = cols.setdefault(j, {})
            for k, w in img.items():
                t = dst.get(k)
                t = ci * w if t is None else t + ci * w
                dst[k] = t
    cols = {j: {k: w for k, w in col.items() if w.re or w.im}
            for j, col in cols.items()}
    return Matrix(DIM8, DIM8, {j: col for j, col in cols.items() if col})


# ---------------------------------------------------------------------------
# Killing forms

_B8_GRAM: Matrix | None = None

def _block(i: int) -> int:
    if i < OFF_P:
        return 0
    if i < OFF_Q:
        return 1
    if i < IDX_R:
        return 2
    return {IDX_R: 3, IDX_S: 4, IDX_T: 5}[i]


_PAIRED_BLOCKS = {(0, 0), (1, 2), (2, 1), (3, 3), (4, 5), (5, 4)}


def b8_gram() -> Matrix:
    """Exact Killing Gram matrix tr(ad e_i ad e_j) on the 248 basis.

    The bracket grades the six blocks, so the trace form pairs operator
    with operator, slot one with slot two, r with r, and s with t; all other
    block pairs vanish (spot-checked in the tests by direct traces).
    """
    global _B8_GRAM
    if _B8_GRAM is None:
        from .cache import load_cached_matrix, store_cached_matrix
        cached = load_cached_matrix("b8_gram", DIM8, DIM8)
        if cached is not None:
            _B8_GRAM = cached
        else:
            g = Matrix.zeros(DIM8, DIM8)
            for i in range(DIM8):
                adi = _ad_columns(i)
                bi = _block(i)
                for j in range(i, DIM8):
                    if (bi, _block(j)) not in _PAIRED_BLOCKS:
                        continue
                    adj = _ad_columns(j)
                    t = ZERO
                    for k, img in adi.items():
                        for m, c in img.items():
                            col = adj.get(m)
                            if col:
                                w = col.get(k)
                                if w is not None:
                                    t = t + c * w
                    if t.re or t.im:
                        g.set_(i, j, t)
                        g.set_(j, i, t)
            _B8_GRAM = g
            store_cached_matrix("b8_gram", g)
    return _B8_GRAM


def killing_b8_coords(u: dict, v: dict) -> Scalar:
    g = b8_gram()
    t = ZERO
    for i, ci in u.items():
        col = g.column(i)
        for j, cj in v.items():
            w = col.get(j)
            if w is not None:
                t = t + ci * cj * w
    return t


def killing_b8(R1: E8Element, R2: E8Element) -> Scalar:
    return killing_b8_coords(R1.to_coords(), R2.to_coords())


def killing_b7(Phi1: E7Element, Phi2: E7Element) -> Scalar:
    return killing_b7_coords(Phi1.to_coords(), Phi2.to_coords())


# ---------------------------------------------------------------------------
# tau, lambda-tilde, sigma on coordinates


def tau_coords(v: dict) -> dict:
    return {k: c.conj() for k, c in v.items()}


def tau(R: E8Element) -> E8Element:
    return E8Element.from_coords(tau_coords(R.to_coords()))


_LAMBDA_CONJ: list | None = None


def _lambda_conj_columns() -> list:
    """Coordinates of lambda . e_k . lambda^{-1} for the 133 operator basis."""
    global _LAMBDA_CONJ
    if _LAMBDA_CONJ is None:
        lam = lambda_op()
        lam_inv = lam.scale(sc(-1))  # lambda^2 = -1
        cols = []
        for op in e7_basis_operators():
            cols.append(decompose_operator(lam @ op @ lam_inv).to_coords())
        _LAMBDA_CONJ = cols
    return _LAMBDA_CONJ


_LAMBDA_TILDE: Matrix | None = None


def lambda_tilde_matrix() -> Matrix:
    """(Phi, P, Q, r, s, t) -> (lam Phi lam^{-1}, lam Q, -lam P, -r, -t, -s)."""
    global _LAMBDA_TILDE
    if _LAMBDA_TILDE is None:
        m = Matrix.zeros(DIM8, DIM8)
        for k, img in enumerate(_lambda_conj_columns()):
            for kk, c in img.items():
                m.set_(kk, k, c)
        lam = lambda_op()
        for j in range(PDIM):
            for i, c in lam.column(j).items():
                m.set_(OFF_P + i, OFF_Q + j, c)    # new P = lam (old Q)
                m.set_(OFF_Q + i, OFF_P + j, -c)   # new Q = -lam (old P)
        m.set_(IDX_R, IDX_R, -ONE)
        m.set_(IDX_S, IDX_T, -ONE)
        m.set_(IDX_T, IDX_S, -ONE)
        _LAMBDA_TILDE = m
    return _LAMBDA_TILDE


def lambda_tilde(R: E8Element) -> E8Element:
    v = lambda_tilde_matrix().apply(R.to_coords())
    return E8Element.from_coords(v)


_SIGMA8: dict = {}


def sigma8_matrix(name: str) -> Matrix:
    """sigma / sigma_prime on the 248 coordinates:
    (conjugated operator part, transformed slots, fixed scalars)."""
    if name not in _SIGMA8:
        conj_cols = involution_conj_columns(name)
        signs = SIGMA_SIGNS if name == "sigma" else SIGMA_PRIME_SIGNS
        psigns = list(signs) + list(signs) + [1, 1]
        m = Matrix.zeros(DIM8, DIM8)
        for k, img in enumerate(conj_cols):
            for kk, c in img.items():
                m.set_(kk, k, c)
        for j, s in enumerate(psigns):
            v = ONE if s > 0 else -ONE
            m.set_(OFF_P + j, OFF_P + j, v)
            m.set_(OFF_Q + j, OFF_Q + j, v)
        for k in (IDX_R, IDX_S, IDX_T):
            m.set_(k, k, ONE)
        _SIGMA8[name] = m
    return _SIGMA8[name]


def is_bracket_automorphism(m: Matrix, seed: int = 0, samples: int = 40) -> bool:
    """Randomized exact battery: m[x,y] = [mx, my] on seeded sparse pairs."""
    rng = random.Random(seed)
    for _ in range(samples):
        x = _random_sparse(rng, 5)
        y = _random_sparse(rng, 5)
        lhs = m.apply(bracket8_table(x, y))
        rhs = bracket8_table(m.apply(x), m.apply(y))
        if vec_clean(vec_add(lhs, vec_scale(rhs, -ONE))):
            return False
    return True


def _random_sparse(rng, n: int, complex_parts: bool = True) -> dict:
    v = {}
    for _ in range(n):
        k = rng.randrange(DIM8)
        re = Rat(rng.randint(-4, 4), rng.randint(1, 3))
        im = Rat(rng.randint(-2, 2), rng.randint(1, 2)) if (complex_parts and rng.random() < 0.3) else Rat(0)
        if re or im:
            v[k] = Scalar(re, im)
    return vec_clean(v)


# ---------------------------------------------------------------------------
# compact real form


def compact_form_basis() -> Subspace:
    """Real 248-dim fixed-point set of the conjugate-linear involution
    (conjugation composed with the lambda-tilde flip), inside the 496 real
    coordinates (real parts 0..247, imaginary parts 248..495).

    With L the exact flip matrix, fixed points are a + i b with L a = a and
    L b = -b, so the basis comes from two exact kernels.
    """
    L = lambda_tilde_matrix()
    eye = Matrix.identity(DIM8)
    plus = _real_kernel(L - eye)
    minus = _real_kernel(L + eye)
    vecs = [dict(v) for v in plus]
    vecs += [{k + DIM8: c for k, c in v.items()} for v in minus]
    return Subspace.from_vectors(2 * DIM8, vecs)


def _real_kernel(m: Matrix) -> list:
    ech = Echelon(m.cols)
    for row in m.row_vectors():
        ech.insert(row)
    return ech.kernel_basis()


def real496_bracket(u: dict, v: dict) -> dict:
    """Bracket on the 496 real coordinates of the complex algebra:
    (a + ib, c + id) -> ([a,c] - [b,d]) + i([a,d] + [b,c])."""
    a = {k: c for k, c in u.items() if k < DIM8}
    b = {k - DIM8: c for k, c in u.items() if k >= DIM8}
    c = {k: w for k, w in v.items() if k < DIM8}
    d = {k - DIM8: w for k, w in v.items() if k >= DIM8}
    re = vec_add(bracket8_table(a, c), vec_scale(bracket8_table(b, d), -ONE))
    im = vec_add(bracket8_table(a, d), bracket8_table(b, c))
    out = vec_clean(re)
    for k, w in vec_clean(im).items():
        out[k + DIM8] = w
    return out


def real496_killing(u: dict, v: dict) -> Scalar:
    a = {k: c for k, c in u.items() if k < DIM8}
    b = {k - DIM8: c for k, c in u.items() if k >= DIM8}
    c = {k: w for k, w in v.items() if k < DIM8}
    d = {k - DIM8: w for k, w in v.items() if k >= DIM8}
    re = killing_b8_coords(a, c) - killing_b8_coords(b, d)
    im = killing_b8_coords(a, d) + killing_b8_coords(b, c)
    if im.re or im.im:
        raise AssertionError("Killing value not real on real-form vectors")
    return re


def killing_gram_of(vectors, form) -> Matrix:
    n = len(vectors)
    g = Matrix.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            t = form(vectors[i], vectors[j])
            if t.re or t.im:
                g.set_(i, j, t)
                g.set_(j, i, t)
    return g


# ---------------------------------------------------------------------------
# the square-zero variety


def r_cross_coords(u: dict, w: dict) -> dict:
    """(R x R) R1 = [R, [R, R1]] + B8(R, R1) R / 30."""
    out = bracket8_table(u, bracket8_table(u, w))
    _addmul(out, u, killing_b8_coords(u, w) * sc(1, 30))
    return vec_clean(out)


def r_cross(R: E8Element, R1: E8Element) -> E8Element:
    return E8Element.from_coords(r_cross_coords(R.to_coords(), R1.to_coords()))


W_CONDITION_NOTES = {
    9: "final terms read 5{P,Q1}Q - 2{Q,Q1}P, matching the printed list",
    10: "derived final terms are 5{Q,P1}P - 2{P,P1}Q; the printed list has "
        "{P,Q1} and a trailing Q where P1 and P are required",
    11: "the printed line drops an opening parenthesis; the factor 18 "
        "multiplies all three terms (ad Phi)^2 Phi1 + Q x Phi1 P - P x Phi1 Q",
}


class WConditionReport:
    """Outcome of the thirteen membership conditions and the direct test."""

    __slots__ = ("conditions", "witnesses", "direct_ok", "hypothesis", "notes")

    def __init__(self, conditions, witnesses, direct_ok, hypothesis):
        self.conditions = conditions
        self.witnesses = witnesses
        self.direct_ok = direct_ok
        self.hypothesis = hypothesis
        self.notes = W_CONDITION_NOTES

    def all_pass(self) -> bool:
        return all(self.conditions.values())

    def failing(self) -> list:
        return sorted(k for k, ok in self.conditions.items() if not ok)

    def to_json(self):
        data = {"condition_%d" % k: bool(v) for k, v in sorted(self.conditions.items())}
        data["direct_square_zero"] = self.direct_ok
        data["hypothesis"] = self.hypothesis
        data["residuals"] = {str(k): w for k, w in sorted(self.witnesses.items())}
        data["notes"] = {str(k): v for k, v in sorted(self.notes.items())}
        return data


def w_condition_check_scalar_part(coords: dict) -> list:
    """Failing indices among the six unquantified conditions (fast path)."""
    phi, p, q, r, s, t = _split(coords)
    fails = []
    c1 = vec_scale(phi, _TWO * s)
    vec_axpy(c1, cross_coords(p, p), ONE)
    if vec_clean(c1):
        fails.append(1)
    c2 = vec_scale(phi, _TWO * t)
    vec_axpy(c2, cross_coords(q, q), -ONE)
    if vec_clean(c2):
        fails.append(2)
    c3 = vec_scale(phi, _TWO * r)
    vec_axpy(c3, cross_coords(p, q), -ONE)
    if vec_clean(c3):
        fails.append(3)
    c4 = act7(phi, p)
    _addmul(c4, p, sc(-3) * r)
    _addmul(c4, q, sc(-3) * s)
    if vec_clean(c4):
        fails.append(4)
    c5 = act7(phi, q)
    _addmul(c5, q, sc(3) * r)
    _addmul(c5, p, sc(-3) * t)
    if vec_clean(c5):
        fails.append(5)
    c6 = pairing_coords(p, q) - sc(16) * (s * t + r * r)
    if c6.re or c6.im:
        fails.append(6)
    return fails


def w_condition_check(R: E8Element) -> WConditionReport:
    """Evaluate the derived conditions (1)..(13) exactly, plus the direct
    square-zero test over all 248 basis directions.

    The conditions were regenerated by expanding (R x R) R1 = 0 against R1
    in each coordinate block; see W_CONDITION_NOTES for where the regenerated
    forms differ from the printed list.
    """
    u = R.to_coords()
    phi, p, q, r, s, t = _split(u)
    conditions: dict[int, bool] = {}
    witnesses: dict[int, str] = {}

    def vanish(idx: int, vec_or_scalar, what: str):
        if isinstance(vec_or_scalar, dict):
            bad = vec_clean(vec_or_scalar)
            if bad:
                conditions[idx] = conditions.get(idx, True) and False
                witnesses.setdefault(idx, "%s: residual at %s" %
                                     (what, sorted(bad)[0]))
            else:
                conditions.setdefault(idx, True)
        else:
            v = vec_or_scalar
            if v.re or v.im:
                conditions[idx] = conditions.get(idx, True) and False
                witnesses.setdefault(idx, "%s: residual %s" % (what, v.to_str()))
            else:
                conditions.setdefault(idx, True)

    pp = cross_coords(p, p)
    qq = cross_coords(q, q)
    pq = cross_coords(p, q)
    phi_p = act7(phi, p)
    phi_q = act7(phi, q)
    # (1) 2s Phi - P x P      (2) 2t Phi + Q x Q      (3) 2r Phi + P x Q
    c1 = vec_scale(phi, _TWO * s)
    vec_axpy(c1, pp, ONE)
    vanish(1, c1, "2s*op - PxP")
    c2 = vec_scale(phi, _TWO * t)
    vec_axpy(c2, qq, -ONE)
    vanish(2, c2, "2t*op + QxQ")
    c3 = vec_scale(phi, _TWO * r)
    vec_axpy(c3, pq, -ONE)
    vanish(3, c3, "2r*op + PxQ")
    # (4) Phi P - 3r P - 3s Q     (5) Phi Q + 3r Q - 3t P
    c4 = dict(phi_p)
    _addmul(c4, p, sc(-3) * r)
    _addmul(c4, q, sc(-3) * s)
    vanish(4, c4, "op P - 3rP - 3sQ")
    c5 = dict(phi_q)
    _addmul(c5, q, sc(3) * r)
    _addmul(c5, p, sc(-3) * t)
    vanish(5, c5, "op Q + 3rQ - 3tP")
    # (6) {P,Q} - 16(st + r^2)
    vanish(6, pairing_coords(p, q) - sc(16) * (s * t + r * r), "{P,Q} - 16(st+r^2)")
    # (7), (9) quantified over the second-slot basis directions
    st_rr = s * t + r * r
    for j in range(PDIM):
        q1 = {j: ONE}
        cr_pq1 = cross_coords(p, q1)
        pair_pq1 = pairing_coords(p, q1)
        # (7) 2(op P x Q1 + 2 P x op Q1 - r P x Q1 - s Q x Q1) - {P,Q1} op
        c7 = cross_coords(phi_p, q1)
        vec_axpy(c7, cross_coords(p, act7(phi, q1)), -_TWO)
        vec_axpy(c7, cr_pq1, r)
        vec_axpy(c7, cross_coords(q, q1), s)
        c7 = vec_scale(c7, _TWO)
        vec_axpy(c7, phi, pair_pq1)
        vanish(7, c7, "condition (7) at Q1=%d" % j)
        # (9) 8((PxQ1)Q - st Q1 - r^2 Q1 - op^2 Q1 + 2r op Q1) + 5{P,Q1}Q - 2{Q,Q1}P
        c9 = act7(cr_pq1, q)
        _addmul(c9, q1, -st_rr)
        vec_axpy(c9, act7(phi, act7(phi, q1)), ONE)
        _addmul(c9, act7(phi, q1), _TWO * r)
        c9 = vec_scale(c9, sc(8))
        _addmul(c9, q, sc(5) * pair_pq1)
        _addmul(c9, p, sc(-2) * pairing_coords(q, q1))
        vanish(9, c9, "condition (9) at Q1=%d" % j)
    # (8), (10) quantified over the first-slot basis directions
    for j in range(PDIM):
        p1 = {j: ONE}
        cr_qp1 = cross_coords(q, p1)
        pair_qp1 = pairing_coords(q, p1)
        # (8) 2(op Q x P1 + 2 Q x op P1 + r Q x P1 - t P x P1) - {Q,P1} op
        c8 = cross_coords(phi_q, p1)
        vec_axpy(c8, cross_coords(q, act7(phi, p1)), -_TWO)
        vec_axpy(c8, cr_qp1, -r)
        vec_axpy(c8, cross_coords(p, p1), t)
        c8 = vec_scale(c8, _TWO)
        vec_axpy(c8, phi, pair_qp1)
        vanish(8, c8, "condition (8) at P1=%d" % j)
        # (10) 8((QxP1)P + st P1 + r^2 P1 + op^2 P1 + 2r op P1) + 5{Q,P1}P - 2{P,P1}Q
        c10 = act7(cr_qp1, p)
        _addmul(c10, p1, st_rr)
        _addmul(c10, act7(phi, act7(phi, p1)), ONE)
        _addmul(c10, act7(phi, p1), _TWO * r)
        c10 = vec_scale(c10, sc(8))
        _addmul(c10, p, sc(5) * pair_qp1)
        _addmul(c10, q, sc(-2) * pairing_coords(p, p1))
        vanish(10, c10, "condition (10) at P1=%d" % j)
    # (11)-(13) quantified over the operator basis directions
    for j in range(E7DIM):
        f1 = {j: ONE}
        b7 = killing_b7_coords(phi, f1)
        f1p = act7(f1, p)
        f1q = act7(f1, q)
        # (11) 18((ad op)^2 op1 + Q x op1 P - P x op1 Q) + B7(op, op1) op
        c11 = bracket_coords7(phi, bracket_coords7(phi, f1))
        vec_axpy(c11, cross_coords(q, f1p), -ONE)
        vec_axpy(c11, cross_coords(p, f1q), ONE)
        c11 = vec_scale(c11, sc(18))
        _addmul(c11, phi, b7)
        vanish(11, c11, "condition (11) at op1=%d" % j)
        # (12) 18(op1 op P - 2 op op1 P - r op1 P - s op1 Q) + B7 P
        c12 = act7(f1, phi_p)
        vec_axpy(c12, act7(phi, f1p), _TWO)
        _addmul(c12, f1p, -r)
        _addmul(c12, f1q, -s)
        c12 = vec_scale(c12, sc(18))
        _addmul(c12, p, b7)
        vanish(12, c12, "condition (12) at op1=%d" % j)
        # (13) 18(op1 op Q - 2 op op1 Q + r op1 Q - t op1 P) + B7 Q
        c13 = act7(f1, phi_q)
        vec_axpy(c13, act7(phi, f1q), _TWO)
        _addmul(c13, f1q, r)
        _addmul(c13, f1p, -t)
        c13 = vec_scale(c13, sc(18))
        _addmul(c13, q, b7)
        vanish(13, c13, "condition (13) at op1=%d" % j)
    direct_ok = all(not r_cross_coords(u, unit(k)) for k in range(DIM8))
    sig = sigma8_matrix("sigma")
    sigp = sigma8_matrix("sigma_prime")
    hyp = {
        "nonzero": bool(vec_clean(u)),
        "sigma_fixed": not vec_clean(vec_add(sig.apply(u), vec_scale(u, -ONE))),
        "sigma_prime_fixed": not vec_clean(vec_add(sigp.apply(u), vec_scale(u, -ONE))),
        "so8_centralizing": all(not bracket8_table(unit(d), u) for d in range(28)),
    }
    return WConditionReport(conditions, witnesses, direct_ok, hyp)


# ---------------------------------------------------------------------------
# exponentials and orbit formulas


class E8GroupOperator:
    """248x248 operator with provenance; exact ones certify as bracket
    automorphisms on a seeded battery."""

    __slots__ = ("matrix", "provenance")

    def __init__(self, matrix: Matrix, provenance: str):
        self.matrix = matrix
        self.provenance = provenance

    def apply(self, R: E8Element) -> E8Element:
        return E8Element.from_coords(self.matrix.apply(R.to_coords()))

    def apply_coords(self, v: dict) -> dict:
        return self.matrix.apply(v)

    def certify(self, seed: int = 0, samples: int = 40) -> bool:
        return is_bracket_automorphism(self.matrix, seed=seed, samples=samples)


class NotNilpotentError(ValueError):
    def __init__(self, power: int):
        super().__init__("adjoint operator still nonzero at power %d" % power)
        self.power = power


def exp_nilpotent_ad(R: E8Element, max_power: int = DIM8) -> E8GroupOperator:
    """Exact finite exponential series of a nilpotent adjoint operator."""
    th = theta(R)
    out = Matrix.identity(DIM8)
    term = Matrix.identity(DIM8)
    k = 0
    while True:
        k += 1
        if k > max_power:
            raise NotNilpotentError(k)
        term = (th @ term).scale(sc(1, k))
        if term.is_zero():
            break
        out = out + term
    return E8GroupOperator(out, "exp-nilpotent")


def theta_power_orbit(P1: PElement, r1: Scalar, s1: Scalar, n: int) -> E8Element:
    """Theta^n applied to the lowest scalar unit, by iterated exact bracket,
    for Theta = ad(0, P1, 0, r1, s1, 0)."""
    gen = E8Element.from_parts(P=P1, r=r1, s=s1).to_coords()
    v = dict(ONE_LOWER)
    for _ in range(n):
        v = bracket8_table(gen, v)
    return E8Element.from_coords(v)


def theta_orbit_closed_form(P1: PElement, r1: Scalar, s1: Scalar, n: int) -> E8Element:
    """Closed form of Theta^n applied to the lowest unit, n >= 1.

    Coefficients follow the displayed formula, with one correction forced by
    the recursion (and consistent with the exponential's closed form): the
    quartic term in the s-component carries (2^(n-2) + (-2)^(n-2) - 1 - (-1)^n)/24,
    not (2^(n-2) + (-2)^(n-2) - (-1)^(n-1))/24 as printed.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return E8Element.from_coords(dict(ONE_LOWER))
    two = Rat(2)
    m2 = Rat(-2)
    one = Rat(1)

    def pw(base, k):
        # base**k as an exact rational, valid for negative k
        if k >= 0:
            return base ** k
        return (one / base) ** (-k)

    sign = one if n % 2 == 0 else -one
    r1q = r1
    s1q = s1
    pp = cross_coords(P1.to_vec(), P1.to_vec())
    ppp = act7(pp, P1.to_vec())
    quart = pairing_coords(P1.to_vec(), ppp)

    def times(coeff_rat, k):
        """coeff * r1^k as Scalar, treating 0 * r1^negative as 0."""
        if not coeff_rat:
            return ZERO
        base = Scalar(coeff_rat)
        if k >= 0:
            return base * _pow_scalar(r1q, k)
        inv = ONE / r1q
        return base * _pow_scalar(inv, -k)

    c_phi = times(pw(m2, n - 1) + sign, n - 2)
    c_p_s = times(pw(m2, n - 1) - (one + (-sign)) / 2, n - 2) * s1q
    c_p_t = times((one - pw(m2, n)) / 6 + sign / 2, n - 3)
    c_q = times(pw(m2, n) - sign, n - 1)
    c_r = times(pw(m2, n - 1), n - 1) * s1q
    c_s2 = times(-(pw(m2, n - 2) + pw(two, n - 2)), n - 2) * s1q * s1q
    c_s4 = times((pw(two, n - 2) + pw(m2, n - 2) - one - sign) / 24, n - 4)
    c_t = times(pw(m2, n), n)

    out: dict = {}
    _addmul(out, pp, c_phi)
    pv = P1.to_vec()
    pslot: dict = {}
    _addmul(pslot, pv, c_p_s)
    _addmul(pslot, ppp, c_p_t)
    _addmul(out, pslot, ONE, OFF_P)
    qslot: dict = {}
    _addmul(qslot, pv, c_q)
    _addmul(out, qslot, ONE, OFF_Q)
    if c_r.re or c_r.im:
        out[IDX_R] = c_r
    c_s = c_s2 + c_s4 * quart
    if c_s.re or c_s.im:
        out[IDX_S] = c_s
    if c_t.re or c_t.im:
        out[IDX_T] = c_t
    return E8Element.from_coords(vec_clean(out))


def _pow_scalar(x: Scalar, k: int) -> Scalar:
    out = ONE
    for _ in range(k):
        out = out * x
    return out


def exp_orbit_float(P1: PElement, r1: float, s1: float, tol: float = 1e-12):
    """Float image of the lowest unit under the exponential (truncated series)
    and the displayed closed form; returns (series, closed_form) as numpy
    vectors over the 248 coordinates."""
    gen = E8Element.from_parts(P=P1).to_coords()
    th_p = FloatMatrix.mirror(theta_coords(gen)).a
    rgen = theta_coords({IDX_R: ONE})
    sgen = theta_coords({IDX_S: ONE})
    th = th_p + r1 * FloatMatrix.mirror(rgen).a + s1 * FloatMatrix.mirror(sgen).a
    v = np.zeros(DIM8, dtype=np.complex128)
    v[IDX_T] = 1.0
    out = v.copy()
    term = v.copy()
    for k in range(1, 400):
        term = th @ term / k
        out = out + term
        if np.max(np.abs(term)) < tol:
            break
    closed = _exp_orbit_closed_float(P1, r1, s1)
    return out, closed


def _exp_orbit_closed_float(P1: PElement, r1: float, s1: float):
    """The displayed exponential closed form, with the r1 -> 0 limits.

    Near r1 = 0 the coefficients are quotients of nearly-cancelling
    exponentials over high powers of r1, so they are evaluated in 50-digit
    arithmetic before rounding to float."""
    pv = P1.to_vec()
    pp = cross_coords(pv, pv)
    ppp = act7(pp, pv)
    quart = complex(pairing_coords(pv, ppp))

    if r1 == 0.0:
        c_phi, c_p_s, c_p_t = -0.5, -float(s1), 1.0 / 6.0
        c_q, c_r = -1.0, float(s1)
        c_s2, c_s4, c_t = -float(s1) ** 2, 1.0 / 96.0, 1.0
    else:
        import mpmath
        with mpmath.workdps(50):
            r = mpmath.mpf(r1)
            sv = mpmath.mpf(s1)
            e1 = mpmath.exp(-r)
            e2 = mpmath.exp(-2 * r)
            ep1 = mpmath.exp(r)
            ep2 = mpmath.exp(2 * r)
            c_phi = float(-(e2 - 2 * e1 + 1) / (2 * r ** 2))
            c_p_s = float(sv * (-e2 - ep1 + e1 + 1) / (2 * r ** 2))
            c_p_t = float((-e2 + ep1 + 3 * e1 - 3) / (6 * r ** 3))
            c_q = float((e2 - e1) / r)
            c_r = float(sv * (1 - e2) / (2 * r))
            c_s2 = float(-sv ** 2 * (e2 + ep2 - 2) / (4 * r ** 2))
            c_s4 = float((ep2 + e2 - 4 * ep1 - 4 * e1 + 6) / (96 * r ** 4))
            c_t = float(e2)

    out = np.zeros(DIM8, dtype=np.complex128)
    for k, c in pp.items():
        out[k] += c_phi * complex(c)
    for k, c in pv.items():
        out[OFF_P + k] += c_p_s * complex(c)
        out[OFF_Q + k] += c_q * complex(c)
    for k, c in ppp.items():
        out[OFF_P + k] += c_p_t * complex(c)
    out[IDX_R] = c_r
    out[IDX_S] = c_s2 + c_s4 * quart
    out[IDX_T] = c_t
    return out


# ---------------------------------------------------------------------------
# orbit-reduction helpers (forward formulas of the six transitivity cases)

# deterministic probe order: the eight diagonal coordinates of each slot
_DIAG_P = tuple(OFF_P + k for k in (0, 1, 2, 27, 28, 29, 54, 55))
_DIAG_Q = tuple(OFF_Q + k for k in (0, 1, 2, 27, 28, 29, 54, 55))


def orbit_case2_float(R: E8Element):
    """Float image under exp(ad(0,0,0,0,pi/2,-pi/2)): maps (op,P,Q,r,s,t) to
    approximately (op, Q, -P, -r, -t, -s)."""
    th = (FloatMatrix.mirror(theta_coords({IDX_S: ONE})).a
          - FloatMatrix.mirror(theta_coords({IDX_T: ONE})).a) * (math.pi / 2)
    from .linalg import mat_exp_float
    op = mat_exp_float(FloatMatrix(th))
    v = np.zeros(DIM8, dtype=np.complex128)
    for k, c in R.to_coords().items():
        v[k] = complex(c)
    return op.a @ v


def orbit_case3(R: E8Element) -> E8Element:
    """exp(ad of the second slot placed in the first slot) applied to R;
    equals (op, P + 2rQ, Q, r, -4r^2, 0) when the second slot squares to
    zero under the cross, op Q = -3rQ, {P,Q} = 16 r^2 and s = t = 0."""
    gen = E8Element.from_parts(P=R.Q)
    return E8GroupOperator(exp_nilpotent_ad(gen).matrix, "case3").apply(R)


def _first_probe(pred, probes):
    for idx in probes:
        if pred(idx):
            return idx
    return None


def orbit_case4(R: E8Element):
    """First diagonal probe P1 with {P1, Q} != 0; returns (probe index,
    image under exp(ad P1)) whose r-component is -{P1,Q}/8 != 0."""
    u = R.to_coords()
    q = {k - OFF_Q: c for k, c in u.items() if OFF_Q <= k < IDX_R}
    idx = _first_probe(
        lambda k: bool(pairing_coords({k - OFF_P: ONE}, q)), _DIAG_P)
    if idx is None:
        return None, None
    alpha = exp_nilpotent_ad(E8Element.from_coords({idx: ONE}))
    return idx, E8Element.from_coords(alpha.apply_coords(u))


def orbit_case5(R: E8Element):
    """First diagonal probe Q1 with {P, Q1} != 0; the image under
    exp(ad Q1) has r-component {P,Q1}/8 != 0."""
    u = R.to_coords()
    p = {k - OFF_P: c for k, c in u.items() if OFF_P <= k < OFF_Q}
    idx = _first_probe(
        lambda k: bool(pairing_coords(p, {k - OFF_Q: ONE})), _DIAG_Q)
    if idx is None:
        return None, None
    alpha = exp_nilpotent_ad(E8Element.from_coords({idx: ONE}))
    return idx, E8Element.from_coords(alpha.apply_coords(u))


def orbit_case6(R: E8Element):
    """Operator-only R with square-zero operator part: first diagonal probe
    P1 with op P1 != 0 gives exp(ad P1) R = (op, -op P1, 0, 0, {op P1, P1}/8, 0)."""
    u = R.to_coords()
    phi = {k: c for k, c in u.items() if k < OFF_P}
    idx = _first_probe(lambda k: bool(act7(phi, {k - OFF_P: ONE})), _DIAG_P)
    if idx is None:
        return None, None
    alpha = exp_nilpotent_ad(E8Element.from_coords({idx: ONE}))
    return idx, E8Element.from_coords(alpha.apply_coords(u))


# ---------------------------------------------------------------------------
# compact fixed part


def sigma496_matrix(name: str) -> Matrix:
    """The involution acting blockwise on the 496 real coordinates."""
    s = sigma8_matrix(name)
    m = Matrix.zeros(2 * DIM8, 2 * DIM8)
    for j, col in s._cols.items():
        for i, v in col.items():
            m.set_(i, j, v)
            m.set_(i + DIM8, j + DIM8, v)
    return m


def compact_fixed_56() -> Subspace:
    """The involution-fixed part of the compact real form (real 56-dim)."""
    cb = compact_form_basis()
    maps = []
    for name in ("sigma", "sigma_prime"):
        m = sigma496_matrix(name)

        def fixed(v, m=m):
            return vec_clean(vec_add(m.apply(v), vec_scale(v, -ONE)))

        maps.append(fixed)
    return cb.solve_constraints(maps)


# ---------------------------------------------------------------------------
# fixed subalgebras


def e8_fixed_subalgebra(involutions=(), centralize_so8: bool = False,
                        stabilize_1minus: bool = False) -> Subspace:
    """Exact solution space over the 248 coordinates of the requested
    conditions: invariance under the listed involutions, vanishing bracket
    with the 28 embedded triality generators, vanishing bracket with the
    lowest scalar unit."""
    maps = []
    for name in involutions:
        m = sigma8_matrix(name)

        def fixed(v, m=m):
            return vec_clean(vec_add(m.apply(v), vec_scale(v, -ONE)))

        maps.append(fixed)
    if centralize_so8:
        for d in range(28):
            def ad_d(v, d=d):
                return bracket8_table(unit(d), v)
            maps.append(ad_d)
    if stabilize_1minus:
        def stab(v):
            return bracket8_table(v, dict(ONE_LOWER))
        maps.append(stab)
    return full_space(DIM8).solve_constraints(maps)


# ---------------------------------------------------------------------------
# ideal splitting and type classification


class NotClosedError(ValueError):
    def __init__(self, i: int, j: int):
        super().__init__("subspace not closed under bracket at basis pair "
                         "(%d, %d)" % (i, j))
        self.pair = (i, j)


def _restricted_structure(h: Subspace, bracket):
    """Structure constants of h in its canonical basis; raises NotClosedError
    with a witness pair when h is not bracket-closed."""
    basis = h.basis_sparse()
    k = len(basis)
    tab = {}
    for i in range(k):
        for j in range(i + 1, k):
            w = bracket(basis[i], basis[j])
            if not w:
                continue
            coeffs = h.coordinates_of(w)
            if coeffs is None:
                raise NotClosedError(i, j)
            tab[(i, j)] = coeffs
    return tab


def _ad_matrices(k: int, tab: dict) -> list:
    ads = []
    for i in range(k):
        m = Matrix.zeros(k, k)
        for j in range(k):
            if i == j:
                continue
            ent = tab.get((i, j)) if i < j else tab.get((j, i))
            if not ent:
                continue
            for l, c in ent.items():
                m.set_(l, j, c if i < j else -c)
        ads.append(m)
    return ads


def split_commuting_ideals(h: Subspace, bracket=None) -> list:
    """Decompose a bracket-closed subspace into minimal ideals.

    The center splits into canonical coordinate lines; the derived part
    splits through the idempotents of its centroid (the commutant of the
    adjoint representation), computed exactly.
    """
    if bracket is None:
        bracket = bracket8_table
    tab = _restricted_structure(h, bracket)
    k = h.dim
    ads = _ad_matrices(k, tab)
    # center: joint kernel of all ad matrices
    ech = Echelon(k)
    for m in ads:
        for row in m.row_vectors():
            ech.insert(row)
    center_coeffs = ech.kernel_basis()
    basis = h.basis_sparse()

    def to_ambient(coeff_vecs):
        out = []
        for cf in coeff_vecs:
            acc: dict = {}
            for a, c in cf.items():
                vec_axpy(acc, basis[a], -c)
            out.append(acc)
        return out

    ideals = []
    for cf in center_coeffs:
        ideals.append(Subspace.from_vectors(h.ambient_dim, to_ambient([cf])))
    # derived subalgebra in coefficient space
    dech = Echelon(k)
    for ent in tab.values():
        dech.insert(dict(ent))
    derived_dim = dech.rank
    if derived_dim == 0:
        return sorted(ideals, key=lambda s: s.pivot_columns)
    if derived_dim + len(center_coeffs) != k:
        raise ValueError("subspace is neither semisimple-plus-center nor abelian")
    derived_coeffs = dech.basis_rows()
    # restrict the adjoint action to the derived part and split via centroid
    dspace = Subspace.from_vectors(k, [dict(r) for r in derived_coeffs])
    dbasis = dspace.basis_sparse()
    dk = len(dbasis)
    dtab = {}
    for i in range(dk):
        for j in range(i + 1, dk):
            w = _bracket_coeffs(tab, dbasis[i], dbasis[j])
            if w:
                cf = dspace.coordinates_of(w)
                if cf is None:
                    raise ValueError("derived part not closed")
                dtab[(i, j)] = cf
    dads = _ad_matrices(dk, dtab)
    for block in _centroid_split(dk, dads):
        amb = to_ambient([_compose_coeffs(dbasis, cf) for cf in block])
        ideals.append(Subspace.from_vectors(h.ambient_dim, amb))
    return sorted(ideals, key=lambda s: s.pivot_columns)


def _compose_coeffs(dbasis, cf):
    acc: dict = {}
    for a, c in cf.items():
        vec_axpy(acc, dbasis[a], -c)
    return acc


def _bracket_coeffs(tab, u: dict, v: dict) -> dict:
    acc: dict = {}
    for i, ci in u.items():
        for j, cj in v.items():
            if i == j:
                continue
            ent = tab.get((i, j)) if i < j else tab.get((j, i))
            if not ent:
                continue
            f = ci * cj if i < j else -(ci * cj)
            for l, w in ent.items():
                t = acc.get(l)
                t = f * w if t is None else t + f * w
                acc[l] = t
    return vec_clean(acc)


def _centroid_split(k: int, ads: list) -> list:
    """Split a semisimple algebra into minimal ideals via exact centroid
    idempotents; returns lists of coefficient vectors."""
    ech = Echelon(k * k)
    for m in ads:
        # T ad - ad T = 0: rows indexed by entry (a, b)
        rows_m = m.row_vectors()
        cols_m = [m.column(j) for j in range(k)]
        for a in range(k):
            for b in range(k):
                row: dict = {}
                # (T M)[a,b] = sum_c T[a,c] M[c,b]
                for c, w in cols_m[b].items():
                    row[a * k + c] = row.get(a * k + c, ZERO) + w
                # -(M T)[a,b] = -sum_c M[a,c] T[c,b]
                for c, w in rows_m[a].items():
                    row[c * k + b] = row.get(c * k + b, ZERO) - w
                row = vec_clean(row)
                if row:
                    ech.insert(row)
    cent = ech.kernel_basis()
    m = len(cent)
    if m == 1:
        return [[{a: ONE} for a in range(k)]]
    # generic centroid element with deterministic small coefficients
    rng = random.Random(7)
    for _ in range(24):
        coeffs = [Rat(rng.randint(-3, 3)) for _ in cent]
        T = Matrix.zeros(k, k)
        for cf, c in zip(cent, coeffs):
            if not c:
                continue
            cs = Scalar(c)
            for u, w in cf.items():
                T.set_(u // k, u % k, T.get(u // k, u % k) + cs * w)
        eigs = _rational_eigenvalues(T, m)
        if eigs is not None and len(eigs) == m:
            break
    else:
        raise ValueError("could not split centroid with rational spectra")
    blocks = []
    eye = Matrix.identity(k)
    for lam in eigs:
        # projection onto the lam-eigenspace: product of (T - mu I)/(lam - mu)
        proj = eye
        for mu in eigs:
            if mu == lam:
                continue
            factor = (T - eye.scale(Scalar(mu))).scale(ONE / Scalar(lam - mu))
            proj = proj @ factor
        block = []
        for a in range(k):
            col = proj.column(a)
            if col:
                block.append(dict(col))
        blocks.append(block)
    return blocks


def _rational_eigenvalues(T: Matrix, expect: int):
    """Distinct rational eigenvalues of a matrix whose minimal polynomial
    splits with integer roots after clearing denominators; None on failure.

    The minimal polynomial of a denominator-cleared (integer) matrix is monic
    with integer coefficients, so its rational roots are integer divisors of
    the constant term."""
    k = T.rows
    den = 1
    for col in T._cols.values():
        for v in col.values():
            if v.im:
                return None
            d = int(v.re.denominator)
            den = den * d // math.gcd(den, d)
    Ti = T.scale(Scalar(den))
    # Krylov relation on a deterministic probe vector
    probe = {a: Scalar(1 + (a * 7) % 5) for a in range(k)}
    powers = [dict(probe)]
    cur = dict(probe)
    for _ in range(expect + 1):
        cur = Ti.apply(cur)
        powers.append(dict(cur))
    span = SpanSolver(k)
    d = None
    for idx, w in enumerate(powers):
        if not span.add(w):
            d = idx
            break
    if d is None:
        return None
    rel = span.express(powers[d])
    if rel is None or any(c.im for c in rel.values()):
        return None
    ints = []
    for i in range(d):
        c = rel.get(i, ZERO)
        if c.re.denominator != 1:
            return None
        ints.append(int(c.re))
    # ascending coefficients of x^d - ints[d-1] x^(d-1) - ... - ints[0]
    poly = [-v for v in ints] + [1]

    def peval(x: int) -> int:
        acc = 0
        for c in reversed(poly):
            acc = acc * x + c
        return acc

    roots = set()
    trimmed = list(poly)
    if trimmed[0] == 0:
        roots.add(0)
        while trimmed[0] == 0:
            trimmed = trimmed[1:]
    for cand in _divisors(abs(trimmed[0])):
        for x in (cand, -cand):
            if peval(x) == 0:
                roots.add(x)
    if len(roots) < d:
        return None
    return sorted(Rat(r, den) for r in roots)


def _divisors(n: int):
    if n == 0:
        return []
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def classify_simple_type(h: Subspace, bracket=None, seed: int = 0):
    """(rank, root count, label) of a simple or semisimple-summand input.

    A seeded generic element provides a Cartan subalgebra as the exact kernel
    of its adjoint; roots are counted from the float spectrum and verified
    to be simple; root lengths (via the exact Killing form on the Cartan)
    decide simply-lacedness.  D4 is the unique rank-4 system with 24 roots.
    """
    if bracket is None:
        bracket = bracket8_table
    tab = _restricted_structure(h, bracket)
    k = h.dim
    ads = _ad_matrices(k, tab)
    # Killing form of the restricted adjoint, for degeneracy check and norms
    gram = Matrix.zeros(k, k)
    for i in range(k):
        for j in range(i, k):
            t = ZERO
            for a in range(k):
                col = ads[j].column(a)
                rowi = ads[i]
                for b, c in col.items():
                    w = rowi.get(a, b)
                    if w.re or w.im:
                        t = t + w * c
            if t.re or t.im:
                gram.set_(i, j, t)
                gram.set_(j, i, t)
    ech = Echelon(k)
    for row in gram.row_vectors():
        ech.insert(row)
    if ech.rank != k:
        raise ValueError("Killing form degenerate: input is not semisimple")
    rng = random.Random(seed)
    best = None
    for _ in range(12):
        coeffs = {a: Scalar(Rat(rng.randint(-5, 5))) for a in range(k)}
        z = vec_clean(coeffs)
        adz = Matrix.zeros(k, k)
        for a, c in z.items():
            for j in range(k):
                col = ads[a].column(j)
                for b, w in col.items():
                    adz.set_(b, j, adz.get(b, j) + c * w)
        kech = Echelon(k)
        for row in adz.row_vectors():
            kech.insert(row)
        kern = kech.kernel_basis()
        if best is None or len(kern) < len(best[0]):
            best = (kern, adz, z)
        if best and len(best[0]) <= 1:
            break
    cartan, adz, z = best
    rank = len(cartan)
    # cartan must be abelian
    for i in range(rank):
        for j in range(i + 1, rank):
            if _bracket_coeffs(tab, cartan[i], cartan[j]):
                raise ValueError("generic-element centralizer not abelian; "
                                 "retry with another seed")
    # float spectrum of ad(z): count simple nonzero eigenvalues
    a = FloatMatrix.mirror(adz).a
    eigvals, eigvecs = np.linalg.eig(a)
    zero_like = [abs(ev) < 1e-8 for ev in eigvals]
    nzero = sum(zero_like)
    if nzero != rank:
        raise ValueError("float spectrum zero-count %d disagrees with exact "
                         "rank %d" % (nzero, rank))
    nonzero = sorted((ev for ev in eigvals if abs(ev) >= 1e-8),
                     key=lambda c: (c.real, c.imag))
    for i in range(len(nonzero) - 1):
        if abs(nonzero[i] - nonzero[i + 1]) < 1e-7:
            raise ValueError("generic element has repeated nonzero eigenvalues")
    root_count = len(nonzero)
    # root vectors relative to the cartan basis; norms via the exact gram
    cart_gram = np.zeros((rank, rank))
    cart_dense = []
    for cf in cartan:
        acc = np.zeros(k, dtype=np.complex128)
        for a_, c in cf.items():
            acc[a_] = complex(c)
        cart_dense.append(acc)
    for i in range(rank):
        for j in range(rank):
            t = ZERO
            for a_, ci in cartan[i].items():
                for b_, cj in cartan[j].items():
                    w = gram.get(a_, b_)
                    if w.re or w.im:
                        t = t + ci * cj * w
            cart_gram[i, j] = float(t.re)
    cart_gram_inv = np.linalg.inv(cart_gram)
    ad_cart = []
    for cf in cartan:
        m = np.zeros((k, k), dtype=np.complex128)
        for a_, c in cf.items():
            m += complex(c) * FloatMatrix.mirror(ads[a_]).a
        ad_cart.append(m)
    norms = []
    for idx, ev in enumerate(eigvals):
        if abs(ev) < 1e-8:
            continue
        v = eigvecs[:, idx]
        pivot = int(np.argmax(np.abs(v)))
        alpha = np.array([(m @ v)[pivot] / v[pivot] for m in ad_cart])
        for m, al in zip(ad_cart, alpha):
            if np.max(np.abs(m @ v - al * v)) > 1e-6 * max(1.0, np.max(np.abs(v))):
                raise ValueError("joint eigenvector verification failed")
        # squared length under the complex-bilinear dual Killing form
        norms.append(complex(alpha @ cart_gram_inv @ alpha))
    scale = max(abs(z) for z in norms)
    simply_laced = all(abs(z - norms[0]) < 1e-6 * max(scale, 1.0) for z in norms)
    label = "unknown"
    if rank == 4 and root_count == 24 and simply_laced:
        label = "D4"
    elif rank == 1 and root_count == 2:
        label = "A1"
    elif rank == 2 and root_count == 6 and simply_laced:
        label = "A2"
    return rank, root_count, label
