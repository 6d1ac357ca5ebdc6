"""Named verification suites, the dimension ledger, and structure-constant
emission.

Reports are deterministic for a fixed seed and version: checks are listed in
definition order, thread count never affects content, and the per-check
runtime field is fixed at 0.0 in the serialized output (wall-clock timing is
a console-only concern).
"""

from __future__ import annotations

import itertools
import json
import math
import random
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import e8 as m8
from . import freudenthal as m7
from . import jordan as mj
from . import octonion as mo
from .cache import fingerprint
from .linalg import (FloatMatrix, Matrix, SpanSolver, Subspace, mat_exp_float,
                     signature, vec_add, vec_clean, vec_scale)
from .rationals import ONE, ZERO, Rat, Scalar, sc

VERSION = "0.1.0"

SUITE_NAMES = ("axioms", "jacobi", "ledger", "triality", "kappa-mu",
               "phi-generators", "w-variety", "orbits", "compact",
               "decomposition", "all")


class CheckResult:
    __slots__ = ("id", "status", "expected", "got")

    def __init__(self, id_, status, expected, got):
        self.id = id_
        self.status = status
        self.expected = expected
        self.got = got

    def to_json(self):
        return {"id": self.id, "status": self.status, "expected": self.expected,
                "got": self.got, "runtime_ms": 0.0}


class SuiteReport:
    __slots__ = ("suite", "seed", "checks", "overall")

    def __init__(self, suite, seed, checks):
        self.suite = suite
        self.seed = seed
        self.checks = checks
        self.overall = "pass" if all(c.status == "pass" for c in checks) else "fail"

    def to_json(self):
        return {"suite": self.suite, "version": VERSION,
                "fingerprint": fingerprint(), "seed": self.seed,
                "overall": self.overall,
                "checks": [c.to_json() for c in self.checks]}


class LedgerEntry:
    __slots__ = ("claim_id", "locus", "expected", "computed")

    def __init__(self, claim_id, locus, expected, computed):
        self.claim_id = claim_id
        self.locus = locus
        self.expected = expected
        self.computed = computed

    def to_json(self):
        return {"claim_id": self.claim_id, "locus": self.locus,
                "expected": self.expected, "computed": self.computed}


# ---------------------------------------------------------------------------
# small helpers


def _eq(id_, got, expected):
    ok = got == expected
    return CheckResult(id_, "pass" if ok else "fail", repr(expected), repr(got))


def _true(id_, ok, note="holds"):
    return CheckResult(id_, "pass" if ok else "fail", note,
                       note if ok else "violated")


def _rand_sparse56(rng, n=4):
    return {rng.randrange(56): sc(rng.randint(-3, 3), rng.randint(1, 3))
            for _ in range(n)}


def _rand_p(rng, n=4):
    return m7.PElement.from_vec(_rand_sparse56(rng, n))


def _rand_sl2(rng):
    # det-1 integer matrix: [[1, a], [0, 1]] @ [[1, 0], [b, 1]] variants
    a, b = rng.randint(-3, 3), rng.randint(-3, 3)
    return Matrix.from_rows([[sc(1 + a * b), sc(a)], [sc(b), ONE]])


def _diag_p(rng):
    return m7.PElement(
        mj.JordanElement.diag(sc(rng.randint(-3, 3), rng.randint(1, 2)),
                              sc(rng.randint(-3, 3)), sc(rng.randint(-2, 2))),
        mj.JordanElement.diag(sc(rng.randint(-3, 3)),
                              sc(rng.randint(-2, 2), rng.randint(1, 3)),
                              sc(rng.randint(-3, 3))),
        sc(rng.randint(-3, 3)), sc(rng.randint(-2, 2)))


# ---------------------------------------------------------------------------
# suite bodies (each yields CheckResult objects)


def _suite_axioms(seed):
    rng = random.Random(seed)
    # frozen multiplication table vs the recursive doubling oracle
    ok = True
    for i in range(8):
        for j in range(8):
            got = mo.Octonion.basis(i) * mo.Octonion.basis(j)
            want = mo.cayley_dickson_product(
                [1 if k == i else 0 for k in range(8)],
                [1 if k == j else 0 for k in range(8)])
            ok = ok and [int(v.re) for v in got.c] == want
    yield _true("octonion-table-vs-doubling-oracle", ok)

    def rnd_oct():
        return mo.Octonion([sc(rng.randint(-3, 3), rng.randint(1, 2))
                            for _ in range(8)])

    ok_alt = ok_norm = ok_conj = ok_lin = True
    for _ in range(40):
        x, y = rnd_oct(), rnd_oct()
        ok_alt = ok_alt and x * (x * y) == (x * x) * y and (y * x) * x == y * (x * x)
        ok_norm = ok_norm and (x * y).norm() == x.norm() * y.norm()
        ok_conj = ok_conj and (x * y).conj() == y.conj() * x.conj()
        ok_lin = ok_lin and (x.conj() * y + y.conj() * x
                             == mo.Octonion.one().scale(sc(2) * x.inner(y)))
    yield _true("octonion-alternativity", ok_alt)
    yield _true("octonion-norm-composition", ok_norm)
    yield _true("octonion-conj-antiautomorphism", ok_conj)
    yield _true("octonion-polarized-inner", ok_lin)

    def rnd_j():
        return mj.JordanElement.from_vec(
            {rng.randrange(27): sc(rng.randint(-3, 3), rng.randint(1, 2))
             for _ in range(5)})

    ok_comm = ok_unit = ok_auto = ok_autop = True
    for _ in range(30):
        X, Y = rnd_j(), rnd_j()
        ok_comm = ok_comm and mj.jordan_mul(X, Y) == mj.jordan_mul(Y, X)
        ok_unit = ok_unit and mj.jordan_mul(mj.E_UNIT, X) == X
        ok_auto = ok_auto and (mj.apply_sigma(mj.jordan_mul(X, Y))
                               == mj.jordan_mul(mj.apply_sigma(X), mj.apply_sigma(Y)))
        ok_autop = ok_autop and (mj.apply_sigma_prime(mj.jordan_mul(X, Y))
                                 == mj.jordan_mul(mj.apply_sigma_prime(X),
                                                  mj.apply_sigma_prime(Y)))
    yield _true("jordan-commutative", ok_comm)
    yield _true("jordan-unit", ok_unit)
    yield _true("sigma-jordan-automorphism", ok_auto)
    yield _true("sigma-prime-jordan-automorphism", ok_autop)
    ok_pair = all(mj.apply_sigma(mj.apply_sigma_prime(b))
                  == mj.apply_sigma_prime(mj.apply_sigma(b))
                  for b in mj.jordan_basis())
    yield _true("sigma-sigma-prime-commute", ok_pair)


def _jacobi_probe_set():
    probes = [m8.unit(k) for k in
              (0, 5, 17, 28, 40, 52, 60, 70, 78, 80, 100, 105, 120, 132,
               133, 136, 150, 160, 180, 188, 189, 200, 215, 230, 244,
               245, 246, 247)]
    probes.append(m7.kappa().to_coords())
    probes.append(m7.mu().to_coords())
    return probes


def _jacobi_sum(x, y, z):
    j = m8.bracket8_table(m8.bracket8_table(x, y), z)
    j = vec_add(j, m8.bracket8_table(m8.bracket8_table(y, z), x))
    j = vec_add(j, m8.bracket8_table(m8.bracket8_table(z, x), y))
    return vec_clean(j)


def _suite_jacobi(seed):
    probes = _jacobi_probe_set()
    bad = 0
    for a, b, c in itertools.combinations(range(len(probes)), 3):
        if _jacobi_sum(probes[a], probes[b], probes[c]):
            bad += 1
    yield _eq("jacobi-probe-set-triples", bad, 0)
    rng = random.Random(seed)
    bad = 0
    for _ in range(500):
        x, y, z = (_rand_sparse248(rng) for _ in range(3))
        if _jacobi_sum(x, y, z):
            bad += 1
    yield _eq("jacobi-500-random-rational-triples", bad, 0)
    # ad-invariance of the trace form
    ok = True
    for _ in range(30):
        x, y, z = (_rand_sparse248(rng) for _ in range(3))
        v = (m8.killing_b8_coords(m8.bracket8_table(x, y), z)
             + m8.killing_b8_coords(y, m8.bracket8_table(x, z)))
        ok = ok and not (v.re or v.im)
    yield _true("killing-ad-invariance", ok)
    # sl2 bracket values
    yield _eq("bracket-scalar-triple-t",
              m8.bracket8_coords(dict(m8.ONE_TILDE), dict(m8.ONE_LOWER)),
              {m8.IDX_T: sc(-2)})
    yield _eq("bracket-scalar-triple-r",
              m8.bracket8_coords(dict(m8.ONE_UPPER), dict(m8.ONE_LOWER)),
              {m8.IDX_R: ONE})
    yield _eq("bracket-scalar-triple-s",
              m8.bracket8_coords(dict(m8.ONE_TILDE), dict(m8.ONE_UPPER)),
              {m8.IDX_S: sc(2)})


def _rand_sparse248(rng, n=5):
    v = {}
    for _ in range(n):
        v[rng.randrange(248)] = sc(rng.randint(-4, 4), rng.randint(1, 3))
    return vec_clean(v)


def ledger_entries():
    """Every verified dimension claim, as exact integers."""
    ent = []
    ent.append(LedgerEntry("lemma-2.1-dim28",
                           "triality commutant inside the derivation algebra",
                           28, mj.f4_commutant_basis().dim))
    ent.append(LedgerEntry("prop-3.3-dim69",
                           "fixed algebra of the first involution, 133-dim ambient",
                           69, m7.e7_fixed_subalgebra(("sigma",)).dim))
    ent.append(LedgerEntry("prop-3.3-dim66",
                           "centralizer of kappa and mu, 133-dim ambient",
                           66, m7.e7_fixed_subalgebra((), extras=("kappa", "mu")).dim))
    ent.append(LedgerEntry("lemma-3.1-dim9",
                           "two-involution fixed part centralizing the triality generators",
                           9, m7.e7_fixed_subalgebra(("sigma", "sigma_prime"),
                                                     centralize_so8=True).dim))
    ent.append(LedgerEntry("lemma-3.4-dim34",
                           "kappa-mu centralizer fixed by the second involution",
                           34, m7.e7_fixed_subalgebra(("sigma_prime",),
                                                      extras=("kappa", "mu")).dim))
    ent.append(LedgerEntry("lemma-4.1-dim18",
                           "lowest-unit stabilizer in the centralizing fixed algebra",
                           18, m8.e8_fixed_subalgebra(("sigma", "sigma_prime"),
                                                      centralize_so8=True,
                                                      stabilize_1minus=True).dim))
    ent.append(LedgerEntry("prop-5.1-dim28",
                           "centralizing fixed algebra of the 248-dim algebra",
                           28, m8.e8_fixed_subalgebra(("sigma", "sigma_prime"),
                                                      centralize_so8=True).dim))
    ent.append(LedgerEntry("lemma-6.1-dim56",
                           "two-involution fixed algebra of the 248-dim algebra",
                           56, m8.e8_fixed_subalgebra(("sigma", "sigma_prime")).dim))
    return ent


def _suite_ledger(seed):
    for e in ledger_entries():
        yield _eq(e.claim_id, e.computed, e.expected)
    # supporting counts
    yield _eq("derivation-algebra-dim52", mj.solve_f4_derivations().dim, 52)
    yield _eq("det-derivation-algebra-dim78", mj.e6_basis().dim, 78)
    yield _eq("e6-fixed-dim30", _e6_fixed_dim(), 30)


def _e6_fixed_dim():
    sub = mj.e6_basis()
    s27 = mj.sigma_op()
    sp27 = mj.sigma_prime_op()

    def conj_sigma(v):
        op = mj.vec_to_op(v)
        return vec_clean(mj.op_to_vec(s27 @ op @ s27 - op))

    def conj_sigma_p(v):
        op = mj.vec_to_op(v)
        return vec_clean(mj.op_to_vec(sp27 @ op @ sp27 - op))

    return sub.solve_constraints([conj_sigma, conj_sigma_p]).dim


def _suite_triality(seed):
    rng = random.Random(seed)
    zero8 = Matrix.zeros(8, 8)
    tri0 = mj.triality_completion(zero8)
    yield _true("completion-of-zero",
                tri0.d2.is_zero() and tri0.d3.is_zero())

    def rnd_skew():
        m = Matrix.zeros(8, 8)
        for _ in range(5):
            p, q = rng.randrange(8), rng.randrange(8)
            if p == q:
                continue
            c = sc(rng.randint(-3, 3), rng.randint(1, 2))
            m.set_(p, q, m.get(p, q) + c)
            m.set_(q, p, m.get(q, p) - c)
        return m

    ok = True
    for _ in range(5):
        a, b = rnd_skew(), rnd_skew()
        ca, cb = sc(rng.randint(-3, 3)), sc(rng.randint(-2, 2))
        lhs = mj.triality_completion(a.scale(ca) + b.scale(cb))
        ra = mj.triality_completion(a)
        rb = mj.triality_completion(b)
        ok = ok and lhs.d2 == ra.d2.scale(ca) + rb.d2.scale(cb)
        ok = ok and lhs.d3 == ra.d3.scale(ca) + rb.d3.scale(cb)
    yield _true("completion-linearity", ok)

    comm = mj.f4_commutant_basis()
    ok = True
    for (p, q), m in mj.skew_basis_8():
        op = mj.triple_to_operator(mj.triality_completion(m))
        ok = ok and comm.contains(mj.op_to_vec(op))
    yield _true("elementary-completions-in-commutant", ok)

    ok = all(not mj.vec_to_op(v).apply(E.to_vec())
             for v in comm.basis_sparse() for E in (mj.E1, mj.E2, mj.E3))
    yield _true("commutant-kills-diagonal", ok)

    ok = True
    for idx in range(0, 28, 7):
        op = mj.vec_to_op(comm.basis_sparse()[idx])
        ok = ok and mj.is_derivation(op)
    yield _true("commutant-derivation-law", ok)

    ok = True
    basis_vecs = comm.basis_sparse()
    for i in range(0, 28, 5):
        for j in range(i + 1, 28, 5):
            c = mj.vec_to_op(basis_vecs[i]).commutator(mj.vec_to_op(basis_vecs[j]))
            ok = ok and comm.contains(mj.op_to_vec(c))
    yield _true("commutant-bracket-closure", ok)

    eye8 = Matrix.identity(8)
    yield _eq("spin8-identity-triple",
              mj.spin8_group_element(eye8, eye8, eye8), Matrix.identity(27))
    neg = eye8.scale(sc(-1))
    yield _eq("spin8-sign-triple-is-involution",
              mj.spin8_group_element(neg, neg, eye8), mj.sigma_prime_op())

    # float: exponential of a triality triple is an approximately compatible
    # triple whose slotwise operator matches the exponential of the induced map
    tri = mj.triality_completion(mj.skew_basis_8()[3][1])
    t = 0.25
    a1 = mat_exp_float(FloatMatrix.mirror(tri.d1).scale(t)).a
    a2 = mat_exp_float(FloatMatrix.mirror(tri.d2).scale(t)).a
    a3 = mat_exp_float(FloatMatrix.mirror(tri.d3).scale(t)).a
    errs = []
    for i in range(8):
        for j in range(8):
            x = np.zeros(8); x[i] = 1.0
            y = np.zeros(8); y[j] = 1.0
            lhs = _oct_mul_float(a1 @ x, a2 @ y)
            rhs = _oct_conj_float(a3 @ _oct_conj_float(
                _oct_mul_float(x.astype(complex), y.astype(complex))))
            errs.append(float(np.max(np.abs(lhs - rhs))))
    yield _true("float-exponential-compatibility", max(errs) < 1e-9,
                "max err < 1e-9")
    big = mat_exp_float(FloatMatrix.mirror(
        mj.triple_to_operator(tri)).scale(t)).a
    assembled = np.eye(27, dtype=complex)
    assembled[3:11, 3:11] = a1
    assembled[11:19, 11:19] = a2
    assembled[19:27, 19:27] = a3
    yield _true("float-exponential-induced-operator",
                float(np.max(np.abs(big - assembled))) < 1e-9,
                "max err < 1e-9")


def _oct_mul_float(x, y):
    out = np.zeros(8, dtype=complex)
    for i in range(8):
        if x[i] == 0:
            continue
        for j in range(8):
            if y[j] == 0:
                continue
            sign, k = mo.TABLE[i][j]
            out[k] += sign * x[i] * y[j]
    return out


def _oct_conj_float(x):
    out = -x.astype(complex)
    out[0] = x[0]
    return out


def _suite_kappa_mu(seed):
    jz = mj.JordanElement.zero()
    one_dot = m7.PElement(jz, jz, ONE, ZERO)
    k, mu_ = m7.kappa(), m7.mu()
    yield _eq("kappa-on-unit", k.apply(one_dot),
              m7.PElement(jz, jz, sc(-1), ZERO))
    yield _eq("mu-on-unit", mu_.apply(one_dot),
              m7.PElement(jz, mj.E1, ZERO, ZERO))
    km = mat_exp_float(FloatMatrix.mirror(k.operator()).scale(complex(0, math.pi)))
    err = km.max_abs_diff(FloatMatrix.mirror(m7.sigma_p_op().scale(sc(-1))))
    yield _true("exp-pi-i-kappa-equals-minus-sigma", err < 1e-9,
                "max entry err < 1e-9")
    # centralizing kappa makes the first involution condition redundant
    d_km = m7.e7_fixed_subalgebra((), extras=("kappa", "mu")).dim
    d_km_s = m7.e7_fixed_subalgebra(("sigma",), extras=("kappa", "mu")).dim
    yield _eq("kappa-centralizer-implies-sigma-fixed", d_km_s, d_km)
    yield _eq("kappa-mu-centralizer-dim66", d_km, 66)
    yield _eq("kappa-mu-sigma-prime-dim34",
              m7.e7_fixed_subalgebra(("sigma_prime",), extras=("kappa", "mu")).dim,
              34)
    # bracket both ways
    br = m7.e7_bracket(k, mu_)
    yield _eq("kappa-mu-bracket-residual", br.operator(),
              k.operator().commutator(mu_.operator()))


def _suite_phi_generators(seed):
    rng = random.Random(seed)
    eye2 = Matrix.identity(2)
    neg2 = eye2.scale(sc(-1))
    ok = all(m7.phi_k(eye2, k) == Matrix.identity(56) for k in (1, 2, 3))
    yield _true("phi-k-identity", ok)
    sig = m7.phi_k(eye2, 1) @ m7.phi_k(neg2, 2) @ m7.phi_k(neg2, 3)
    yield _eq("sigma-generator-identity", sig, m7.sigma_p_op())
    sigp = m7.phi_k(neg2, 1) @ m7.phi_k(neg2, 2) @ m7.phi_k(eye2, 3)
    yield _eq("sigma-prime-generator-identity", sigp, m7.sigma_prime_p_op())
    ok = True
    for _ in range(4):
        A, B = _rand_sl2(rng), _rand_sl2(rng)
        for k in (1, 2, 3):
            ok = ok and m7.phi_k(A, k) @ m7.phi_k(B, k) == m7.phi_k(A @ B, k)
    yield _true("phi-k-homomorphism", ok)
    ok = True
    for _ in range(3):
        A, B = _rand_sl2(rng), _rand_sl2(rng)
        for k in (1, 2, 3):
            for l in (1, 2, 3):
                if k == l:
                    continue
                ok = ok and (m7.phi_k(A, k) @ m7.phi_k(B, l)
                             == m7.phi_k(B, l) @ m7.phi_k(A, k))
    yield _true("phi-k-images-pairwise-commute", ok)
    A = _rand_sl2(rng)
    ok = True
    for k in (1, 2, 3):
        pk = m7.phi_k(A, k)
        ok = ok and pk @ m7.sigma_p_op() == m7.sigma_p_op() @ pk
        ok = ok and pk @ m7.sigma_prime_p_op() == m7.sigma_prime_p_op() @ pk
        for d in range(0, 28, 9):
            dop = m7.e7_basis_operators()[d]
            ok = ok and pk @ dop == dop @ pk
    yield _true("phi-k-commutes-with-involutions-and-triality", ok)
    for k in (1, 2, 3):
        yield _true("phi-%d-cross-equivariance" % k,
                    m7.e7_operator_is_group_element(m7.phi_k(A, k)))
    yield _true("lambda-cross-equivariance",
                m7.e7_operator_is_group_element(m7.lambda_op()))
    bad = Matrix.identity(56)
    bad.set_(0, 1, sc(7))
    yield _true("non-symplectic-rejected",
                not m7.e7_operator_is_group_element(bad))
    try:
        m7.phi_k(Matrix.from_rows([[sc(2), ZERO], [ZERO, sc(2)]]), 1)
        ok = False
    except ValueError:
        ok = True
    yield _true("phi-k-rejects-det-not-1", ok)


def _suite_w_variety(seed):
    rng = random.Random(seed)
    one_lower = m8.E8Element.from_coords(dict(m8.ONE_LOWER))
    rep = m8.w_condition_check(one_lower)
    yield _true("lowest-unit-all-conditions", rep.all_pass() and rep.direct_ok)
    both = m8.E8Element.from_coords({m8.IDX_S: ONE, m8.IDX_T: ONE})
    rep2 = m8.w_condition_check(both)
    yield _eq("mixed-unit-fails-at-pairing-condition", rep2.failing(), [6, 9, 10])
    yield _true("mixed-unit-direct-test-fails", not rep2.direct_ok)
    yield _true("mixed-unit-residual-minus-16",
                "-16/1" in rep2.witnesses.get(6, ""))
    # twenty seeded exact exponential images
    bad_direct = 0
    bad_scalar = 0
    images = []
    for _ in range(20):
        Q = _diag_p(rng)
        tq = sc(rng.randint(-3, 3), rng.randint(1, 2))
        al = m8.exp_nilpotent_ad(m8.E8Element.from_parts(Q=Q, t=tq))
        img = al.apply_coords(dict(m8.ONE_LOWER))
        images.append(img)
        if any(m8.r_cross_coords(img, m8.unit(k)) for k in range(248)):
            bad_direct += 1
        r6 = m8.w_condition_check_scalar_part(img)
        if r6:
            bad_scalar += 1
    yield _eq("orbit-images-direct-square-zero", bad_direct, 0)
    yield _eq("orbit-images-scalar-conditions", bad_scalar, 0)
    ok = True
    for img in images[:3]:
        r = m8.w_condition_check(m8.E8Element.from_coords(img))
        ok = ok and r.all_pass() and r.direct_ok
    yield _true("orbit-images-full-thirteen-conditions", ok)
    # equivalence spot-check on a non-member with generic support
    generic = m8.E8Element.from_coords(_rand_sparse248(rng, 6))
    r = m8.w_condition_check(generic)
    yield _eq("generic-element-direct-iff-conditions",
              r.direct_ok, r.all_pass())


def _suite_orbits(seed):
    rng = random.Random(seed)
    P1 = m7.PElement(mj.E1 - mj.E2,
                     mj.JordanElement.diag(sc(1), sc(0), sc(-1)), sc(2), sc(-1, 2))
    r1, s1 = sc(2, 3), sc(-1, 5)
    ok = all(m8.theta_power_orbit(P1, r1, s1, n)
             == m8.theta_orbit_closed_form(P1, r1, s1, n) for n in range(7))
    yield _true("theta-power-closed-form-n0-6", ok)
    ok = True
    for _ in range(10):
        Q = _diag_p(rng)
        tq = sc(rng.randint(-4, 4), rng.randint(1, 3))
        a1 = m8.exp_nilpotent_ad(m8.E8Element.from_parts(t=tq * sc(1, 2)))
        a2 = m8.exp_nilpotent_ad(m8.E8Element.from_parts(Q=Q))
        img = m8.E8Element.from_coords(
            a1.apply_coords(a2.apply_coords(dict(m8.ONE_UPPER))))
        qq = m7.freudenthal_cross(Q, Q)
        qqq = m7.e7_apply(qq, Q)
        quart = m7.skew_pairing(Q, qqq)
        want = m8.E8Element(qq.scale(sc(1, 2)), -Q,
                            Q.scale(-tq * sc(1, 2)) - qqq.scale(sc(1, 6)),
                            -tq * sc(1, 2), ONE,
                            -(tq * tq) * sc(1, 4) + quart * sc(1, 96))
        ok = ok and img == want
        ok = ok and a1.apply_coords(a2.apply_coords(dict(m8.ONE_LOWER))) == dict(m8.ONE_LOWER)
    yield _true("upper-unit-column-10-random", ok)
    Q = _diag_p(rng)
    tq = sc(5, 3)
    lhs = m8.exp_nilpotent_ad(m8.E8Element.from_parts(Q=Q, t=tq)).matrix
    rhs = (m8.exp_nilpotent_ad(m8.E8Element.from_parts(Q=Q)).matrix
           @ m8.exp_nilpotent_ad(m8.E8Element.from_parts(t=tq)).matrix)
    yield _eq("commuting-exponential-factorization", lhs, rhs)
    P1f = m7.PElement(mj.E1 - mj.E3,
                      mj.JordanElement.diag(sc(1, 2), sc(-1, 3), sc(0)),
                      sc(1), sc(1, 4))
    errs = []
    for (rv, sv) in ((0.3, -0.2), (1e-6, 0.7), (0.0, 0.4)):
        series, closed = m8.exp_orbit_float(P1f, rv, sv)
        errs.append(float(np.max(np.abs(series - closed))))
    yield _true("float-exponential-closed-form", max(errs) < 1e-9,
                "max err < 1e-9")
    # case helpers
    jz = mj.JordanElement.zero()
    Phi3 = m7.E7Element(Matrix.zeros(27, 27), jz, jz, sc(-9), phi_coords={})
    R3 = m8.E8Element(Phi3, m7.PElement(mj.E1.scale(sc(16)), jz, ZERO, ZERO),
                      m7.PElement(jz, mj.E1, ZERO, ZERO), sc(1), ZERO, ZERO)
    want3 = m8.E8Element(Phi3, R3.P + R3.Q.scale(sc(2)), R3.Q, sc(1), sc(-4), ZERO)
    yield _eq("case-3-forward-formula", m8.orbit_case3(R3), want3)
    Phi6 = m7.E7Element(Matrix.zeros(27, 27), mj.E1, jz, ZERO, phi_coords={})
    R6 = m8.E8Element.from_parts(Phi=Phi6)
    idx, img6 = m8.orbit_case6(R6)
    p1 = m7.PElement.from_vec({idx - m8.OFF_P: ONE})
    want6 = m8.E8Element(Phi6, -m7.e7_apply(Phi6, p1), m7.PElement.zero(), ZERO,
                         m7.skew_pairing(m7.e7_apply(Phi6, p1), p1) * sc(1, 8),
                         ZERO)
    yield _eq("case-6-forward-formula", img6, want6)
    idx4, img4 = m8.orbit_case4(m8.E8Element.from_parts(Q=m7.PElement(jz, mj.E2, ZERO, ZERO)))
    yield _true("case-4-selection-gives-nonzero-r",
                img4 is not None and bool(img4.r.re or img4.r.im))
    idx5, img5 = m8.orbit_case5(m8.E8Element.from_parts(P=m7.PElement(mj.E3, jz, ZERO, ZERO)))
    yield _true("case-5-selection-gives-nonzero-r",
                img5 is not None and bool(img5.r.re or img5.r.im))
    R2 = m8.E8Element.from_parts(P=p1, r=sc(3), s=sc(2))
    out = m8.orbit_case2_float(R2)
    v = np.zeros(248, dtype=complex)
    for k, c in m8.E8Element.from_parts(Q=-p1, r=sc(-3), t=sc(-2)).to_coords().items():
        v[k] = complex(c)
    yield _true("case-2-float-quarter-turn",
                float(np.max(np.abs(out - v))) < 1e-9, "max err < 1e-9")


def _suite_compact(seed):
    L = m8.lambda_tilde_matrix()
    yield _eq("flip-is-involution", L @ L, Matrix.identity(248))
    yield _true("flip-is-automorphism", m8.is_bracket_automorphism(L, seed=seed))
    tl = m8.tau(m8.lambda_tilde(m8.E8Element.from_coords(dict(m8.ONE_UPPER))))
    yield _eq("conjugate-flip-sends-upper-to-minus-lower",
              tl, m8.E8Element.from_coords({m8.IDX_T: -ONE}))
    cb = m8.compact_form_basis()
    yield _eq("compact-form-real-dimension", cb.dim, 248)
    rng = random.Random(seed)
    vecs = cb.basis_sparse()
    ok = True
    for _ in range(40):
        u = vecs[rng.randrange(len(vecs))]
        v = vecs[rng.randrange(len(vecs))]
        ok = ok and cb.contains(m8.real496_bracket(u, v))
    yield _true("compact-form-bracket-closure-sample", ok)
    gram = m8.killing_gram_of(vecs, m8.real496_killing)
    a = np.zeros((248, 248))
    for j, col in gram._cols.items():
        for i, val in col.items():
            a[i, j] = float(val.re)
    ev = np.linalg.eigvalsh(a)
    yield _true("compact-killing-float-precheck", float(ev.max()) < -1e-6,
                "all float eigenvalues negative")
    yield _eq("compact-killing-exact-signature", signature(gram), (0, 248, 0))
    f56 = m8.compact_fixed_56()
    yield _eq("compact-fixed-part-dim", f56.dim, 56)
    parts = m8.split_commuting_ideals(f56, bracket=m8.real496_bracket)
    yield _eq("compact-fixed-part-ideal-dims", sorted(p.dim for p in parts),
              [28, 28])
    sigs = [signature(m8.killing_gram_of(p.basis_sparse(), m8.real496_killing))
            for p in parts]
    yield _eq("compact-fixed-ideals-negative-definite", sigs,
              [(0, 28, 0), (0, 28, 0)])
    types = sorted(m8.classify_simple_type(p, bracket=m8.real496_bracket)[2]
                   for p in parts)
    yield _eq("compact-fixed-ideals-type", types, ["D4", "D4"])


def _suite_decomposition(seed):
    s56 = m8.e8_fixed_subalgebra(("sigma", "sigma_prime"))
    yield _eq("fixed-algebra-dim", s56.dim, 56)
    ideals = m8.split_commuting_ideals(s56)
    yield _eq("ideal-dims", sorted(i.dim for i in ideals), [28, 28])
    i1, i2 = ideals
    ok = all(not m8.bracket8_table(u, v)
             for u in i1.basis_sparse() for v in i2.basis_sparse())
    yield _true("cross-ideal-brackets-vanish", ok)
    rd_span = Subspace.from_vectors(248, [m8.unit(d) for d in range(28)])
    yield _true("one-ideal-is-triality-span", i1 == rd_span or i2 == rd_span)
    other = i2 if i1 == rd_span else i1
    yield _eq("centralizer-copy-matches-fixed-centralizer", other,
              m8.e8_fixed_subalgebra(("sigma", "sigma_prime"), centralize_so8=True))
    yield _eq("ideal-type-1", m8.classify_simple_type(i1), (4, 24, "D4"))
    yield _eq("ideal-type-2", m8.classify_simple_type(i2), (4, 24, "D4"))
    s9 = m7.e7_fixed_subalgebra(("sigma", "sigma_prime"), centralize_so8=True)
    emb = Subspace.from_vectors(248, s9.basis_sparse())
    parts = m8.split_commuting_ideals(emb)
    yield _eq("nine-dim-splits-into-three", sorted(p.dim for p in parts),
              [3, 3, 3])
    types = sorted(m8.classify_simple_type(p)[2] for p in parts)
    yield _eq("nine-dim-ideal-types", types, ["A1", "A1", "A1"])
    # the centralizer of the three scalar units is exactly the operator slot
    maps = []
    for uvec in (m8.ONE_TILDE, m8.ONE_UPPER, m8.ONE_LOWER):
        def admap(v, u=uvec):
            return m8.bracket8_table(v, dict(u))
        maps.append(admap)
    from .linalg import full_space
    cent = full_space(248).solve_constraints(maps)
    phi_slot = Subspace.from_vectors(248, [m8.unit(k) for k in range(133)])
    yield _eq("scalar-triple-centralizer-is-operator-slot", cent, phi_slot)


_SUITES = {
    "axioms": _suite_axioms,
    "jacobi": _suite_jacobi,
    "ledger": _suite_ledger,
    "triality": _suite_triality,
    "kappa-mu": _suite_kappa_mu,
    "phi-generators": _suite_phi_generators,
    "w-variety": _suite_w_variety,
    "orbits": _suite_orbits,
    "compact": _suite_compact,
    "decomposition": _suite_decomposition,
}


def run_suite(name: str, seed: int = 0, threads: int = 1,
              out_path=None) -> SuiteReport:
    """Run a named suite; thread count parallelizes independent checks but
    never changes report content."""
    if name == "all":
        names = [n for n in SUITE_NAMES if n != "all"]
    elif name in _SUITES:
        names = [name]
    else:
        raise KeyError("unknown suite %r (choose from %s)"
                       % (name, ", ".join(SUITE_NAMES)))
    if threads > 1 and len(names) > 1:
        # parallel across suite bodies; results are collected in definition
        # order so content never depends on the thread count
        with ThreadPoolExecutor(max_workers=threads) as pool:
            bodies = list(pool.map(lambda n: list(_SUITES[n](seed)), names))
    else:
        bodies = [list(_SUITES[n](seed)) for n in names]
    checks = [c for body in bodies for c in body]
    report = SuiteReport(name, seed, checks)
    if out_path:
        write_json(out_path, report.to_json())
    return report


def write_json(path, payload) -> None:
    text = json.dumps(payload, indent=1, sort_keys=False)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


# ---------------------------------------------------------------------------
# structure-constant emission

EMIT_SELECTORS = ("e7", "e8", "fixed-56", "spin8-centralizer", "f4-commutant",
                  "compact-e8")


def _constants_from_table(dim, tab):
    out = []
    for (i, j), vec in sorted(tab.items()):
        for k, c in sorted(vec.items()):
            out.append([i, j, k, c.to_str()])
    return out


def _constants_from_subspace(sub: Subspace, bracket):
    basis = sub.basis_sparse()
    out = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            w = bracket(basis[i], basis[j])
            if not w:
                continue
            coeffs = sub.coordinates_of(w)
            if coeffs is None:
                raise ValueError("selector basis not closed under bracket")
            for k, c in sorted(coeffs.items()):
                out.append([i, j, k, c.to_str()])
    return out, [[v.to_str() for v in row] for row in sub.basis]


def _constants_in_listed_basis(vectors, ambient, bracket):
    solver = SpanSolver(ambient)
    for v in vectors:
        solver.add(v)
    out = []
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            w = bracket(vectors[i], vectors[j])
            if not w:
                continue
            coeffs = solver.express(w)
            if coeffs is None:
                raise ValueError("listed basis not closed under bracket")
            for k, c in sorted(coeffs.items()):
                out.append([i, j, k, c.to_str()])
    return out


def emit_structure_constants(selector: str, out_path) -> dict:
    """Sparse structure constants over the canonical basis of a selector,
    written as JSON and returned."""
    if selector == "e7":
        payload = {"selector": selector, "dim": 133, "ambient": 133,
                   "basis": "coordinate",
                   "constants": _constants_from_table(133, m7.e7_table())}
    elif selector == "e8":
        payload = {"selector": selector, "dim": 248, "ambient": 248,
                   "basis": "coordinate",
                   "constants": _constants_from_table(248, m8.e8_table())}
    elif selector == "fixed-56":
        s56 = m8.e8_fixed_subalgebra(("sigma", "sigma_prime"))
        ideals = m8.split_commuting_ideals(s56)
        vectors = [v for part in ideals for v in part.basis_sparse()]
        constants = _constants_in_listed_basis(vectors, 248, m8.bracket8_table)
        basis = [[c.to_str() for c in _dense(v, 248)] for v in vectors]
        payload = {"selector": selector, "dim": 56, "ambient": 248,
                   "ideal_dims": [p.dim for p in ideals],
                   "basis": basis, "constants": constants}
    elif selector == "spin8-centralizer":
        sub = m8.e8_fixed_subalgebra(("sigma", "sigma_prime"), centralize_so8=True)
        constants, basis = _constants_from_subspace(sub, m8.bracket8_table)
        payload = {"selector": selector, "dim": sub.dim, "ambient": 248,
                   "basis": basis, "constants": constants}
    elif selector == "f4-commutant":
        sub = mj.f4_commutant_basis()

        def op_bracket(u, v):
            return vec_clean(mj.op_to_vec(
                mj.vec_to_op(u).commutator(mj.vec_to_op(v))))

        constants, basis = _constants_from_subspace(sub, op_bracket)
        payload = {"selector": selector, "dim": sub.dim, "ambient": 729,
                   "basis": basis, "constants": constants}
    elif selector == "compact-e8":
        sub = m8.compact_form_basis()
        constants, basis = _constants_from_subspace(sub, m8.real496_bracket)
        payload = {"selector": selector, "dim": sub.dim, "ambient": 496,
                   "basis": basis, "constants": constants}
    else:
        raise KeyError("unknown selector %r (choose from %s)"
                       % (selector, ", ".join(EMIT_SELECTORS)))
    if out_path:
        write_json(out_path, payload)
    return payload


def _dense(v: dict, n: int):
    out = [ZERO] * n
    for k, c in v.items():
        out[k] = c
    return out


def write_ledger(out_path) -> dict:
    entries = ledger_entries()
    payload = {"version": VERSION, "fingerprint": fingerprint(),
               "entries": [e.to_json() for e in entries],
               "overall": "pass" if all(e.expected == e.computed
                                        for e in entries) else "fail"}
    if out_path:
        write_json(out_path, payload)
    return payload
