"""Sigma-model layer: WZNW density and background fields, the Wess-Zumino
three-form, the coset splits with their structure equations and c_n
constants, the variational-calculus checks, and the one-dimensional
quantum-plane model with its series-checked classical solution.

Space-time derivative factors are mutually opaque letters; coordinates are
normal-ordered to their left using the differential-calculus rules with
d -> partial.  Minkowski conventions: eta = diag(+1, -1),
epsilon^{01} = +1 = -epsilon_{01}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import NCPoly, nc_mul, substitute
from .expr_io import format_poly, parse
from .matrices import (
    QMatrix,
    d_matrix,
    ext_d,
    mat_mul,
    maurer_cartan,
    tr_q_sl,
)
from .presets import preset
from .scalars import ONE, Q, QINV, QScalar, qnum, qpow

HALF = QScalar((1,), (2,))


# ---------------------------------------------------------------------------
# derivations (variations, time derivative)


def apply_derivation(p: NCPoly, images: dict, graded=False) -> NCPoly:
    """Extend a generator->polynomial map to a (graded) derivation.

    images maps generator names to expression strings or polynomials;
    letters not in the map are annihilated.
    """
    pr = p.preset
    imgs = {}
    for k, v in images.items():
        imgs[pr.gen(k)] = parse(v, pr) if isinstance(v, str) else v
    out = NCPoly.zero(pr)

    def d_pow(g, e):
        img = imgs[g]
        name = pr.generators[g].name
        if e == 1:
            return img
        if e > 1:
            letter = NCPoly.generator(pr, name)
            prev = d_pow(g, e - 1)
            return nc_mul(prev, letter) + nc_mul(
                NCPoly.generator(pr, name, e - 1), img
            )
        inv = NCPoly.generator(pr, name, -1)
        if e == -1:
            return -nc_mul(nc_mul(inv, img), inv)
        prev = d_pow(g, e + 1)
        return nc_mul(prev, inv) + nc_mul(
            NCPoly.generator(pr, name, e + 1), d_pow(g, -1)
        )

    for w, c in p.terms.items():
        prefix_deg = 0
        for i, (g, e) in enumerate(w):
            gen = pr.generators[g]
            if g in imgs:
                left = NCPoly(pr, {w[:i]: c}, True)
                right = NCPoly(pr, {w[i + 1 :]: pr.one}, True)
                term = nc_mul(nc_mul(left, d_pow(g, e)), right)
                if graded and prefix_deg % 2:
                    term = -term
                out = out + term
            prefix_deg += gen.degree * abs(e)
    return out


def time_derivative(p: NCPoly) -> NCPoly:
    """D_t with the preset's dotted-letter map, plain Leibniz."""
    pr = p.preset
    images = {pr.generators[g].name: NCPoly.generator(pr, pr.generators[v].name)
              if isinstance(v, int) else v
              for g, v in pr.dot_map.items()}
    named = {}
    for g, v in pr.dot_map.items():
        named[pr.generators[g].name] = v
    return apply_derivation(p, named, graded=False)


# ---------------------------------------------------------------------------
# WZNW model


def gauss_matrix(p) -> QMatrix:
    return QMatrix.build(
        p,
        (
            ("rho + fm*fp*rho", "fm*rho^-1"),
            ("fp*rho", "rho^-1"),
        ),
    )


def _omega_wznw(mu: int) -> QMatrix:
    """Eq. 45's Maurer-Cartan matrix with d -> partial_mu over WZNW."""
    P = preset("WZNW")
    dr, dm, dp = f"p{mu}_rho", f"p{mu}_fm", f"p{mu}_fp"
    w1 = f"rho^-1*{dr} + fp*{dm}"
    return QMatrix.build(
        P,
        (
            (w1, f"q*rho^-2*{dm}"),
            (f"q^-1*rho^2*{dp} - q^5*fp^2*rho^2*{dm}", f"-q^2*({w1})"),
        ),
    )


def wznw_density() -> NCPoly:
    """Tr_q(omega_mu omega^mu) over the Gauss coordinates, eta = (+, -)."""
    o0 = _omega_wznw(0)
    o1 = _omega_wznw(1)
    mm = mat_mul(o0, o0) - mat_mul(o1, o1)
    return tr_q_sl(mm)


def _deriv_info(p, name):
    """(mu, base) for a derivative letter p{mu}_{base}."""
    if name.startswith("p0_") or name.startswith("p1_"):
        return int(name[1]), name[3:]
    return None


@dataclass
class Background:
    G: dict  # (A, B) -> prefix polynomial (written-order coefficient)
    B: dict  # (A, B) -> prefix polynomial from the epsilon sector
    flags: list


FIELDS = ("rho", "fm", "fp")


def _read_sectors(L: NCPoly, mu_pair):
    """Split a density into {(A, B): prefix poly} for words ending with
    the derivative pair (partial_mu X^A, partial_nu X^B)."""
    p = L.preset
    out: dict = {}
    residue = []
    for w, c in L.terms.items():
        # expect exactly two derivative letters at the end of the word
        derivs = [(i, _deriv_info(p, p.generators[g].name), g, e)
                  for i, (g, e) in enumerate(w)
                  if _deriv_info(p, p.generators[g].name)]
        units = []
        for i, info, g, e in derivs:
            units.extend([info] * e)
        if len(units) != 2:
            residue.append((w, c))
            continue
        (mu1, a), (mu2, b) = units
        if (mu1, mu2) != mu_pair:
            continue
        cut = derivs[0][0]
        prefix = NCPoly(p, {w[:cut]: c})
        key = (a, b)
        out[key] = out.get(key, NCPoly.zero(p)) + prefix
    return out, residue


def extract_background(L: NCPoly = None) -> Background:
    """G_AB as the written-order coefficient of partial_mu X^A partial^mu X^B,
    B_AB from the epsilon-contracted surface term of the WZ three-form."""
    if L is None:
        L = wznw_density()
    p = L.preset
    flags = []
    g00, res0 = _read_sectors(L, (0, 0))
    g11, _ = _read_sectors(L, (1, 1))
    if res0:
        flags.append("density words outside the two-derivative sectors")
    G = {}
    for key, val in g00.items():
        G[key] = val
        anti = g11.get(key)
        if anti is None or not (val + anti).is_zero():
            flags.append(f"G sector {key}: mu=0 and mu=1 parts inconsistent")
    # epsilon sector: coefficient of the two-form in Eq. 53, epsilon^{01} = +1
    c = Q * qnum(2) * qnum(3) / QScalar((6,))
    t01 = parse("rho^-1*p0_rho*p1_fm*fp", p) * c
    t10 = parse("rho^-1*p1_rho*p0_fm*fp", p) * (-c)
    b01, _ = _read_sectors(t01 + t10, (0, 1))
    b10, _ = _read_sectors(t01 + t10, (1, 0))
    B = {}
    for key in set(b01) | set(b10):
        v01 = b01.get(key, NCPoly.zero(p))
        v10 = b10.get(key, NCPoly.zero(p))
        B[key] = v01
        if not (v01 + v10).is_zero():
            flags.append(f"B sector {key}: not epsilon-antisymmetric")
    return Background(G, B, flags)


def expected_G():
    """Eq. 55 entries over the WZNW preset."""
    p = preset("WZNW")
    two = qnum(2)
    return {
        ("rho", "rho"): parse("rho^-2", p) * (qpow(5) * two),
        ("rho", "fm"): parse("rho^-1*fp", p) * (qpow(4) * two),
        ("fm", "rho"): parse("rho^-1*fp", p) * (qpow(5) * two),
        ("fm", "fm"): parse("fp^2", p) * (-qpow(2) * (qpow(4) - ONE)),
        ("fm", "fp"): NCPoly.one(p),
        ("fp", "fm"): NCPoly.scalar(p, qpow(2)),
    }


def expected_B():
    """Eq. 56 entries (the antisymmetric convention of the paper)."""
    p = preset("WZNW")
    c = qpow(3) * qnum(2) * qnum(3) / QScalar((6,))
    fp_rho = parse("fp*rho^-1", p)
    return {
        ("rho", "fm"): fp_rho * c,
        ("fm", "rho"): fp_rho * (-c),
    }


def background_report():
    """Entry-wise comparison of the derived background with Eqs. 55/56.

    Returns [(name, status, detail)]; genuine q-deformation residues and
    ordered-versus-antisymmetrized reading differences are 'flagged'.
    """
    bg = extract_background()
    entries = []
    expG = expected_G()
    for key in sorted(set(bg.G) | set(expG)):
        got = bg.G.get(key, NCPoly.zero(preset("WZNW")))
        want = expG.get(key, NCPoly.zero(preset("WZNW")))
        ok = (got - want).is_zero()
        entries.append((f"G[{key[0]},{key[1]}]", "pass" if ok else "fail",
                        "" if ok else f"derived {format_poly(got)}"))
    expB = expected_B()
    for key in sorted(set(bg.B) | set(expB)):
        got = bg.B.get(key, NCPoly.zero(preset("WZNW")))
        want = expB.get(key, NCPoly.zero(preset("WZNW")))
        if (got - want).is_zero():
            entries.append((f"B[{key[0]},{key[1]}]", "pass", ""))
        elif key == ("fm", "rho") and got.is_zero():
            entries.append((
                f"B[{key[0]},{key[1]}]", "flagged",
                "Eq. 56 antisymmetrizes over (A,B); with opaque ordered "
                "derivative factors the term lives entirely in the "
                "(rho, fm) slot"))
        elif key == ("fm", "fm"):
            entries.append((
                f"B[{key[0]},{key[1]}]", "flagged",
                f"nonzero q-deformation residue {format_poly(got)}; "
                "vanishes at q = 1"))
        else:
            entries.append((f"B[{key[0]},{key[1]}]", "fail",
                            f"derived {format_poly(got)}"))
    for f in bg.flags:
        if "B sector ('fm', 'fm')" in f:
            continue
        entries.append((f"sector consistency: {f}", "fail", ""))
    return entries


def wz_threeform_check():
    """Tr_q(omega ^ omega ^ omega) against the exterior derivative of the
    Eq. 53 two-form.  The form-language ratio is q [2] [3]; the displayed
    q [2] [3] / 6 corresponds to the ordered volume element (a 3! factor)."""
    P = preset("SLq2R_gauss")
    g = gauss_matrix(P)
    om = maurer_cartan(g)
    tr3 = tr_q_sl(mat_mul(mat_mul(om, om), om))
    two_form = parse("rho^-1*d_rho*d_fm*fp", P)
    coeff = Q * qnum(2) * qnum(3)
    resid = tr3 - ext_d(two_form) * coeff
    entries = [
        ("Tr_q(w^3) - q[2][3] d(rho^-1 drho dphi- phi+)",
         "pass" if resid.is_zero() else "fail",
         "" if resid.is_zero() else format_poly(resid)),
        ("epsilon-measure normalization", "flagged",
         "the displayed coefficient q[2][3]/6 refers to the ordered "
         "d^3z measure; the form-language ratio carries the 3! = 6"),
    ]
    return entries


# ---------------------------------------------------------------------------
# coset splits


@dataclass
class CosetSplit:
    n: int
    omega: QMatrix       # d-basis (Coset_forms preset)
    theta: QMatrix
    omega_d: dict        # per-mu derivative versions over Coset
    c_n: QScalar
    lagrangian: NCPoly   # kinetic-normalized density
    flags: list


_COSET_W11 = {
    1: "(q^2 - 1)*fp*{dm}",
    2: "0",
    3: "((q^4 - 1)/q^2)*fp*{dm}",
}
_COSET_THETA = {
    1: ("fp*{dm}", "-fp*{dm}"),
    2: ("q^2*fp*{dm}", "-fp*{dm}"),
    3: ("(1/q^2)*fp*{dm}", "-q^2*(1/q^2)*fp*{dm}"),
}
C_N_ENGINE = {
    1: (2 * qpow(4) - qpow(2) + ONE) / QScalar((2,)),
    2: (qpow(6) + ONE) / QScalar((2,)),
    3: (2 * qpow(4) + qpow(2) - ONE) / (2 * qpow(2)),
}
C_N_PRINTED = {
    1: (2 * qpow(4) - qpow(2) + ONE) / QScalar((2,)),
    2: (qpow(6) + ONE) / QScalar((4,)),
    3: (2 * qpow(4) - qpow(2) + ONE) / (2 * qpow(2)),
}


def _coset_omega(n, p, dm, dp):
    w11 = _COSET_W11[n].format(dm=dm)
    return QMatrix.build(
        p, ((w11, dm), (f"{dp} - q^2*fp^2*{dm}", "0"))
    )


def _coset_theta(n, p, dm):
    t11, t22 = (t.format(dm=dm) for t in _COSET_THETA[n])
    return QMatrix.build(p, ((t11, "0"), ("0", t22)))


def coset_split(n: int) -> CosetSplit:
    """Coset/subgroup split of k^-1 dk for the three U(1) embeddings.

    The n = 3 coset form's (1,1) entry is (q^4-1)/q^2 phi+ dphi-; the
    printed (q^2-1)/q^2 does not sum to Eq. 57 and is flagged.  c_n is the
    phi+^2-coefficient after normalizing the kinetic sector by q^-2.
    """
    pf = preset("Coset_forms")
    pc = preset("Coset")
    om = _coset_omega(n, pf, "d_fm", "d_fp")
    th = _coset_theta(n, pf, "d_fm")
    kdk = QMatrix.build(
        pf,
        (("q^2*fp*d_fm", "d_fm"), ("d_fp - q^2*fp^2*d_fm", "-fp*d_fm")),
    )
    flags = []
    if not (om + th - kdk).is_zero():
        flags.append("omega + theta != k^-1 dk")
    if n == 3:
        flags.append(
            "printed omega_11 = (q^2-1)/q^2 phi+ dphi- does not satisfy "
            "Eq. 57; the engine uses (q^4-1)/q^2 (flagged typo)")
    om_d = {mu: _coset_omega(n, pc, f"p{mu}_fm", f"p{mu}_fp") for mu in (0, 1)}
    mm = mat_mul(om_d[0], om_d[0]) - mat_mul(om_d[1], om_d[1])
    L = tr_q_sl(mm) * (HALF * qpow(-2))
    key_word = None
    c_n = None
    fp2 = parse("fp^2*p0_fm^2", pc)
    [(w_t, _)] = fp2.terms.items()
    for w, c in L.terms.items():
        if w == w_t:
            c_n = -c
    if c_n is None:
        flags.append("phi+^2 sector missing from the Lagrangian")
    return CosetSplit(n, om, th, om_d, c_n, L, flags)


def coset_structure_check(n: int):
    """The displayed d(theta), d(omega) and theta-omega exchange relations."""
    pf = preset("Coset_forms")
    sp = coset_split(n)
    om, th = sp.omega, sp.theta
    z = NCPoly.zero(pf)
    dth = d_matrix(th)
    dom = d_matrix(om)
    omom = mat_mul(om, om)
    omth = mat_mul(om, th)
    thom = mat_mul(th, om)

    def diag_scale(m, c11, c22):
        return QMatrix(pf, ((m[1, 1] * c11, m[1, 2] * c11),
                            (m[2, 1] * c22, m[2, 2] * c22)))

    entries = []
    exchange = {1: 4, 2: 2, 3: 6}[n]
    r = mat_mul(th, om) - mat_mul(om, th).map(lambda e: e * qpow(exchange))
    entries.append((f"theta omega = q^{exchange} omega theta",
                    "pass" if r.is_zero() else "fail", ""))
    if n == 1:
        r1 = dth + diag_scale(omom, qpow(-2), ONE) - omth.map(
            lambda e: e * (qpow(2) - ONE))
        r2 = dom + diag_scale(omom, (qpow(2) - ONE) / qpow(2), QScalar(())) \
            + omth.map(lambda e: e * (qpow(3) * qnum(2)))
        entries.append(("dtheta = -diag(q^-2,1) ww + (q^2-1) wt",
                        "pass" if r1.is_zero() else "fail", ""))
        entries.append(("domega = -diag((q^2-1)/q^2,0) ww - q^3[2] wt",
                        "pass" if r2.is_zero() else "fail", ""))
    elif n == 2:
        r1 = dth + omom
        r2 = dom + omth + thom
        entries.append(("dtheta = -ww", "pass" if r1.is_zero() else "fail", ""))
        entries.append(("domega = -wt - tw", "pass" if r2.is_zero() else "fail", ""))
    else:
        r1 = dth + diag_scale(omom, qpow(-4), ONE) - omth.map(
            lambda e: e * (qpow(4) - ONE))
        r2 = dom + diag_scale(omom, (qpow(4) - ONE) / qpow(4), QScalar(())) \
            + omth.map(lambda e: e * (qpow(5) * qnum(2)))
        entries.append(("dtheta = -diag(q^-4,1) ww + (q^4-1) wt",
                        "pass" if r1.is_zero() else "fail", ""))
        entries.append((
            "domega = -diag((q^4-1)/q^4,0) ww - q^5[2] wt",
            "pass" if r2.is_zero() else "fail",
            "with the repaired omega_11 the printed q^4[2] becomes q^5[2] "
            "(flagged)"))
    # Eq. 60: the common coset-form relations, consequences of the calculus
    for name, expr in [
        ("w1 w3 + q^4 w3 w1 = 0",
         None if n == 2 else "W11*W21 + q^4*W21*W11"),
        ("w2 w3 + q^2 w3 w2 = 0", "W12*W21 + q^2*W21*W12"),
    ]:
        if expr is None:
            continue
        e = expr.replace("W11", f"({format_poly(om[1, 1])})")
        e = e.replace("W21", f"({format_poly(om[2, 1])})")
        e = e.replace("W12", f"({format_poly(om[1, 2])})")
        r = parse(e, pf)
        entries.append((f"Eq. 60: {name}", "pass" if r.is_zero() else "fail", ""))
    return entries


def coset_q1_coincide():
    """All three kinetic-normalized Lagrangians agree at q = 1."""
    from .reductions import classical_limit

    splits = [coset_split(n) for n in (1, 2, 3)]
    base = classical_limit(splits[0].lagrangian)
    return all(classical_limit(s.lagrangian) == base for s in splits[1:])


# ---------------------------------------------------------------------------
# variational calculus


VAR_TABLE = {
    "rho": "rho*R1 - fp*rho^3*R2",
    "fm": "q^-1*rho^2*R2",
    "fp": "q*fp^2*rho^2*R2 + q*rho^-2*R3",
}
VAR_COMPONENTS = {
    "R1": {"rho": "rho*R1", "fm": "0", "fp": "0"},
    "R2": {"rho": "-fp*rho^3*R2", "fm": "q^-1*rho^2*R2",
           "fp": "q*fp^2*rho^2*R2"},
    "R3": {"rho": "0", "fm": "0", "fp": "q*rho^-2*R3"},
}


def _delta_component(p, rn, param_images=None):
    imgs = VAR_COMPONENTS[rn] if param_images is None else param_images
    return {k: parse(v, p) for k, v in imgs.items()}


def variational_suite():
    """The §IV.4 checks:

    (i)   [X_A, sum_n nabla_n R^n] reproduces the transformation table;
    (ii)  handled by the relation suite (variational C.R. entries);
    (iii) the consistency commutators of the postulated algebra;
    (iv)  dg = g delta-g0 reproduces the variations entry-wise.
    """
    entries = []
    Pn = preset("SLq2R_var_nabla")
    T = parse("N1h*R1 + N2*R2 + N3*R3", Pn)
    for x, expr in VAR_TABLE.items():
        X = parse(x, Pn)
        resid = nc_mul(X, T) - nc_mul(T, X) - parse(expr, Pn)
        entries.append((f"requirement [{x}, nabla_n R^n] = {x} delta",
                        "pass" if resid.is_zero() else "fail",
                        "" if resid.is_zero() else format_poly(resid)))

    def paper_comm(X, Y):
        return nc_mul(Y, X) - nc_mul(X, Y)

    T1, T2, T3 = (parse(t, Pn) for t in ("N1h*R1", "N2*R2", "N3*R3"))
    c12 = paper_comm(T1, T2) - parse("(q^2 + 1)*N2*R1*R2", Pn)
    entries.append(("postulate [N1 R1, N2 R2] = (q^2+1) N2 R1 R2",
                    "pass" if c12.is_zero() else "fail",
                    "" if c12.is_zero() else format_poly(c12)))
    c31 = paper_comm(T3, T1) - parse("(q^2 + 1)*q^-4*N3*R3*R1", Pn)
    entries.append((
        "postulate [N3 R3, N1 R1] = (q^2+1) N3 R1 R3",
        "pass" if c31.is_zero() else "flagged",
        "engine value has the normal-ordered product R1 R3 = q^-4 R3 R1; "
        "the printed R3 R1 ordering differs by q^4"))
    c23 = paper_comm(T2, T3)
    target23 = parse("N1h*R2*R3", Pn)
    ok23 = (c23 - target23).is_zero()
    entries.append((
        "postulate [N2 R2, N3 R3] = N1 R2 R3",
        "pass" if ok23 else "flagged",
        "" if ok23 else "engine value "
        f"{format_poly(c23)}; the Eq. 72 R-nabla sector does not close "
        "(critical pair R2 rho N1; see the preset note)"))

    # (iii) applied to the parameters: nested table-variations,
    # right-action composition ([dA, dB] acts as B-then-A minus A-then-B)
    Pv = preset("SLq2R_var")
    comps = {rn: _delta_component(Pv, rn) for rn in ("R1", "R2", "R3")}

    def act(rn, x):
        return apply_derivation(x, comps[rn], graded=False)

    composite = {
        ("R1", "R2"): ("R2", "R1*R2", Q * Q + ONE),
        ("R3", "R1"): ("R3", "R3*R1", Q * Q + ONE),
        ("R2", "R3"): ("R1", "R2*R3", ONE),
    }
    for (ra, rb), (slot, rr, coeff) in composite.items():
        for x in ("rho", "fm", "fp"):
            X = parse(x, Pv)
            lhs = act(ra, act(rb, X)) - act(rb, act(ra, X))
            # composite delta: the slot's table entry with R^slot replaced
            # by the product rr
            imgs = {}
            for k, v in VAR_COMPONENTS[slot].items():
                imgs[k] = v.replace(slot, f"({rr})") if v != "0" else "0"
            rhs = apply_derivation(X, _delta_component(Pv, slot, imgs),
                                   graded=False) * coeff
            resid = lhs - rhs
            if resid.is_zero():
                entries.append((f"Eq. 79 [{ra},{rb}] on {x}", "pass", ""))
            else:
                scaled = lhs - rhs * qpow(-2)
                if scaled.is_zero():
                    entries.append((
                        f"Eq. 79 [{ra},{rb}] on {x}", "flagged",
                        "holds with coefficient q^-2 (q^2+1) = (q^-2+1); "
                        "the table-Leibniz composition carries q^-2 against "
                        "the printed (q^2+1)"))
                else:
                    entries.append((f"Eq. 79 [{ra},{rb}] on {x}", "fail",
                                    format_poly(resid)))

    # (iv) dg = g delta-g0 entry-wise
    g = gauss_matrix(Pv)
    dg0 = QMatrix.build(Pv, (("R1", "R2"), ("R3", "-q^2*R1")))
    rhs_m = mat_mul(g, dg0)
    var_imgs = {k: parse(v, Pv) for k, v in VAR_TABLE.items()}
    lhs_m = g.map(lambda e: apply_derivation(e, var_imgs, graded=False))
    ok = (lhs_m - rhs_m).is_zero()
    entries.append(("dg = g delta-g0 (Gauss parametrization)",
                    "pass" if ok else "fail", ""))
    return entries


# ---------------------------------------------------------------------------
# C_q(2|0) model


def cq_model_eom():
    """Lagrangian coefficient, equation of motion, and the flagged
    second-term power of the printed EOM."""
    P = preset("Cq_rho")
    g = QMatrix.build(P, (("rho", "0"), ("fp*rho", "rho^-1")))
    om = maurer_cartan(g)
    entries = []
    e_om = QMatrix.build(P, (("rho^-1*d_rho", "0"),
                             ("q^-1*rho^2*d_fp", "-q^2*rho^-1*d_rho")))
    entries.append(("omega matrix matches §IV.6",
                    "pass" if (om - e_om).is_zero() else "fail", ""))
    # 1-d model: d -> time derivative, L = 1/2 Tr_q(omega_t omega_t)
    om_t = om.map(lambda e: substitute(
        e, {"d_rho": "rho_dot", "d_fp": "fp_dot"}, P))
    L = tr_q_sl(mat_mul(om_t, om_t)) * HALF
    expect = parse("rho^-2*rho_dot^2", P) * (qpow(4) * (qpow(2) + ONE) * HALF)
    entries.append(("L = q^4 (q^2+1)/2 rho^-2 rho_dot^2",
                    "pass" if (L - expect).is_zero() else "fail",
                    format_poly(L)))
    from .reductions import classical_limit

    lim = classical_limit(L)
    entries.append(("classical limit of L is rho^-2 rho_dot^2",
                    "pass" if list(lim.values()) == [Fraction(1)] else "fail",
                    str(lim)))
    # EOM: d/dt (rho^-1 rho_dot)
    w1dot = time_derivative(parse("rho^-1*rho_dot", P))
    derived = parse("rho^-1*rho_ddot - q^2*rho^-2*rho_dot^2", P)
    entries.append(("omega^1-dot = rho^-1 rho_dd - q^2 rho^-2 rho_dot^2",
                    "pass" if (w1dot - derived).is_zero() else "fail",
                    format_poly(w1dot)))
    printed = parse("rho^-1*rho_ddot - q^2*rho^-1*rho_dot^2", P)
    entries.append((
        "printed EOM (second term rho^-1)", "flagged",
        "the engine derivation carries rho^-2 on the second term; the "
        "printed rho^-1 looks like a dropped power (recorded verbatim)"
        if not (w1dot - printed).is_zero() else ""))
    return entries


# ---------------------------------------------------------------------------
# series check for the classical solution


class SeriesPoly:
    """Polynomial in commuting t, t' truncated at total order N, with
    coefficients over the alpha/beta algebra."""

    def __init__(self, preset, order, terms=None):
        self.preset = preset
        self.order = order
        self.terms = terms or {}  # (i, j) -> NCPoly

    @staticmethod
    def constant(preset, order, poly):
        return SeriesPoly(preset, order, {(0, 0): poly})

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, NCPoly.zero(self.preset)) + v
        return SeriesPoly(self.preset, self.order,
                          {k: v for k, v in t.items() if not v.is_zero()})

    def __mul__(self, other):
        t = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                i, j = i1 + i2, j1 + j2
                if i + j > self.order:
                    continue
                k = (i, j)
                prod = nc_mul(v1, v2)
                t[k] = t.get(k, NCPoly.zero(self.preset)) + prod
        return SeriesPoly(self.preset, self.order,
                          {k: v for k, v in t.items() if not v.is_zero()})

    def __sub__(self, other):
        return self + SeriesPoly(self.preset, other.order,
                                 {k: -v for k, v in other.terms.items()})

    def is_zero(self):
        return not self.terms

    def scale_t(self, c_t, c_tp):
        """t -> c_t t, t' -> c_tp t'."""
        t = {}
        for (i, j), v in self.terms.items():
            t[(i, j)] = v * (c_t ** i) * (c_tp ** j)
        return SeriesPoly(self.preset, self.order, t)


def _exp_series(preset, order, factor, slot):
    """exp(factor * t_slot) with noncommutative factor powers kept ordered."""
    out = {}
    acc = NCPoly.one(preset)
    fact = Fraction(1)
    for k in range(order + 1):
        if k:
            acc = nc_mul(acc, factor)
            fact *= k
        key = (k, 0) if slot == 0 else (0, k)
        out[key] = acc * QScalar.from_fraction(Fraction(1, 1) / fact)
    return SeriesPoly(preset, order, out)


def cq_series_check(N: int = 6):
    """Both different-time identities for rho(t) = alpha exp(beta t).

    Identity 1: rho(t) rho(t') = rho(q^2 t') rho(q^-2 t).
    Identity 2: rho(t) rho(t') = exp[q^2(q^2-1) beta (t'-t)] rho(t') rho(t);
    the printed argument (t - t') fails at first order and is flagged.
    """
    P = preset("AlphaBeta")
    al = NCPoly.generator(P, "alpha")
    be = NCPoly.generator(P, "beta")
    alS = SeriesPoly.constant(P, N, al)

    def rho(slot):
        return alS * _exp_series(P, N, be, slot)

    rt = rho(0)      # rho(t)
    rtp = rho(1)     # rho(t')
    lhs = rt * rtp

    entries = []
    # identity 1: scale arguments
    r1 = rho(1).scale_t(ONE, qpow(2)) * rho(0).scale_t(qpow(-2), ONE)
    entries.append(("rho(t) rho(t') = rho(q^2 t') rho(q^-2 t) to order "
                    f"{N}", "pass" if (lhs - r1).is_zero() else "fail", ""))
    # identity 2 with the engine-consistent sign
    c = qpow(2) * (qpow(2) - ONE)
    expf = _exp_series(P, N, be * c, 1) * _exp_series(P, N, be * (-c), 0)
    r2 = expf * (rtp * rt)
    ok = (lhs - r2).is_zero()
    entries.append((
        f"rho(t) rho(t') = exp[q^2(q^2-1) beta (t'-t)] rho(t') rho(t) to "
        f"order {N}", "pass" if ok else "fail", ""))
    # the printed sign
    expf_p = _exp_series(P, N, be * c, 0) * _exp_series(P, N, be * (-c), 1)
    r2p = expf_p * (rtp * rt)
    entries.append((
        "printed argument (t - t')", "flagged",
        "fails at first order; the engine-consistent argument is (t' - t)"
        if not (lhs - r2p).is_zero() else ""))
    return entries
