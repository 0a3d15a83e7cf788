"""Generate the relation-suite JSON data files (run once; files are the
reviewable artifacts)."""
import json
import os

OUT = "src/qgcalc/suites"
os.makedirs(OUT, exist_ok=True)


def dump(name, preset, entries, note=""):
    data = {"name": name, "preset": preset, "entries": entries}
    if note:
        data["note"] = note
    with open(f"{OUT}/{name}.json", "w") as fh:
        json.dump(data, fh, indent=1)
    print(name, len(entries))


E = lambda name, lhs, rhs, ref, **kw: dict(name=name, lhs=lhs, rhs=rhs,
                                           paper_ref=ref, **kw)

lam = "(q - q^-1)"

# --- GLq2 ------------------------------------------------------------------
dump("relations_glq2", "GLq2", [
    E("ab_ba", "a*b", "q*b*a", "Eq. 2: ab = qba"),
    E("bd_db", "b*d", "q*d*b", "Eq. 2: bd = qdb"),
    E("bc_cb", "b*c", "c*b", "Eq. 2: bc = cb"),
    E("ac_ca", "a*c", "q*c*a", "Eq. 2: ac = qca"),
    E("cd_dc", "c*d", "q*d*c", "Eq. 2: cd = qdc"),
    E("ad_da", "a*d", f"d*a + {lam}*b*c", "Eq. 2: ad = da + (q - 1/q) bc"),
    E("det_two_spellings", "a*d - q*b*c", "d*a - q^-1*c*b",
      "Eq. 3: det_q g = ad - qbc = da - (1/q) cb"),
    E("det_central_a", "(a*d - q*b*c)*a", "a*(a*d - q*b*c)",
      "Eq. 3: Dq g = g Dq"),
    E("det_central_b", "(a*d - q*b*c)*b", "b*(a*d - q*b*c)", "Eq. 3"),
    E("det_central_c", "(a*d - q*b*c)*c", "c*(a*d - q*b*c)", "Eq. 3"),
    E("det_central_d", "(a*d - q*b*c)*d", "d*(a*d - q*b*c)", "Eq. 3"),
    E("Dq_Dqi", "Dq*Dqi", "1", "Eq. 3: Dq Dq^-1 = 1"),
    E("eq36_sixth_relation", "b*d", "q*d*b",
      "Eq. 36 prints cd = qdc twice; the sixth relation is transcribed "
      "from Eq. 2 via the stated a<->c, d<->b interchange",
      note="documents the Eq. 36 duplicate line"),
], note="Eq. 2 generator relations and the quantum determinant")

# --- GLq2_matched -----------------------------------------------------------
ent = []
for x in ("a", "d", "c", "b"):
    src = "Eq. 20" if x in ("a", "d") else "Eq. 20 (a<->c, d<->b interchange)"
    ent.append(E(f"wb1_{x}", f"wb1*{x}", f"{x}*wb1", f"{src}: wb1 {x} = {x} wb1"))
for x, k in (("a", -2), ("d", 2), ("c", -2), ("b", 2)):
    src = "Eq. 20" if x in ("a", "d") else "Eq. 20 (interchange)"
    ent.append(E(f"wb4_{x}", f"wb4*{x}", f"q^{k}*{x}*wb4", f"{src}"))
for w in ("w2", "w3"):
    for x, k in (("a", -1), ("d", 1), ("c", -1), ("b", 1)):
        src = "Eq. 20" if x in ("a", "d") else "Eq. 20 (interchange)"
        ent.append(E(f"{w}_{x}", f"{w}*{x}", f"q^{k}*{x}*{w}", src))
ent += [
    E("wb1_w2", "wb1*w2 + w2*wb1", "0", "Eq. 21"),
    E("wb1_w3", "wb1*w3 + w3*wb1", "0", "Eq. 21"),
    E("w2_wb4", "q^2*w2*wb4 + q^-2*wb4*w2", "0", "Eq. 21"),
    E("wb4_w3", "q^2*wb4*w3 + q^-2*w3*wb4", "0", "Eq. 21"),
    E("wb1_wb4", "wb1*wb4 + wb4*wb1", "0", "Eq. 21"),
    E("w2_w3", "w2*w3 + q^-2*w3*w2", "0", "Eq. 21"),
    E("sq_w1", "w1^2", "0", "Eq. 22: (w1)^2 = 0 (barred combination)"),
    E("sq_w2", "w2^2", "0", "Eq. 22"),
    E("sq_w3", "w3^2", "0", "Eq. 22"),
    E("sq_w4", "w4^2", "0", "Eq. 22 (barred combination)"),
    E("Dq_w2", "w2*Dq", "Dq*w2", "Eq. 14: w Dq = Dq w"),
    E("Dq_w3", "w3*Dq", "Dq*w3", "Eq. 14"),
    E("Dq_wb1", "wb1*Dq", "Dq*wb1", "Eq. 14"),
    E("Dq_wb4", "wb4*Dq", "Dq*wb4", "Eq. 14"),
    E("eq19_wb1", "wb1", "(2/(q + 1/q))*(q*w1 + (1/q)*w4)",
      "Eq. 19: wb1 = (2/(q + 1/q))(q w1 + (1/q) w4) = Tr_q omega"),
    E("eq19_wb4", "wb4", "(1/(1 + q^2))*(w1 - w4)",
      "Eq. 19: wb4 = (w1 - w4)/(1 + q^2)"),
]
dump("relations_glq2_matched", "GLq2_matched", ent,
     note="Eqs. 20-22 in the barred basis; w1/w4 are the inverse Eq. 19 "
          "combinations")

# --- GLq2_d ------------------------------------------------------------------
mu = "((q^2 - 1)/(2*q^2))"
nu = "((1 - q^2)/2)"
kk = "(q^2 - 1)"
ent = [
    E("da_a", "d_a*a", f"q^-2*a*d_a + {mu}*a^2*tau", "Eq. 27: da a"),
    E("dc_c", "d_c*c", f"q^-2*c*d_c + {mu}*c^2*tau", "Eq. 27: dc c"),
    E("da_c", "d_a*c", f"q^-1*c*d_a + {mu}*a*c*tau", "Eq. 27: da c"),
    E("dc_a", "d_c*a", f"q^-1*a*d_c + (q^-2 - 1)*c*d_a + {mu}*c*a*tau",
      "Eq. 27: dc a"),
    E("db_b", "d_b*b", f"q^2*b*d_b + {nu}*b^2*tau", "Eq. 27: db b"),
    E("dd_d", "d_d*d", f"q^2*d*d_d + {nu}*d^2*tau", "Eq. 27: d(d) d"),
    E("db_d", "d_b*d", f"q*d*d_b + (q^2 - 1)*b*d_d + {nu}*b*d*tau",
      "Eq. 27: db d"),
    E("dd_b", "d_d*b", f"q*b*d_d + {nu}*d*b*tau", "Eq. 27: d(d) b"),
    E("da_b", "d_a*b",
      f"q*b*d_a + ({kk}/q^2)*Dqi*a*b*(q*c*d_b - a*d_d) + {mu}*a*b*tau",
      "Eq. 28: da b"),
    E("da_d", "d_a*d",
      f"d*d_a + {lam}*b*d_c + {kk}*Dqi*a*d*(d*d_a - q^-1*b*d_c)"
      f" - ({kk}/2)*a*d*tau",
      "Eq. 28: da d"),
    E("dc_b", "d_c*b",
      f"b*d_c + {kk}*Dqi*c*b*(d*d_a - q^-1*b*d_c) - ({kk}/2)*c*b*tau",
      "Eq. 28: dc b"),
    E("dc_d", "d_c*d",
      f"q*d*d_c + {kk}*Dqi*c*d*(d*d_a - q^-1*b*d_c) - ({kk}/2)*c*d*tau",
      "Eq. 28: dc d"),
    E("db_a", "d_b*a",
      f"q^-1*a*d_b + ({kk}/q^2)*Dqi*b*a*(q*c*d_b - a*d_d)"
      f" + ({kk}/(2*q^2))*b*a*tau",
      "Eq. 28: db a"),
    E("db_c", "d_b*c",
      f"c*d_b + {kk}*Dqi*b*c*(d*d_a - q^-1*b*d_c) - ({kk}/2)*b*c*tau",
      "Eq. 28: db c"),
    E("dd_a", "d_d*a",
      f"a*d_d - {lam}*c*d_b + {kk}*Dqi*d*a*(d*d_a - q^-1*b*d_c)"
      f" - ({kk}/2)*d*a*tau",
      "Eq. 28: d(d) a"),
    E("dd_c", "d_d*c",
      f"q^-1*c*d_d + {kk}*Dqi*d*c*(d*d_a - q^-1*b*d_c) - ({kk}/2)*d*c*tau",
      "Eq. 28: d(d) c"),
    E("dDq_Dq_tau", "d_a*d + a*d_d - q*d_b*c - q*b*d_c", "Dq*tau",
      "Eq. 9: dDq = Dq Tr_q omega, with Tr_q omega per Eq. 19"),
    E("tau_central_a", "tau*a", "a*tau",
      "Eq. 20 consequence: Tr_q omega commutes with the parameters"),
    E("tau_central_b", "tau*b", "b*tau", "Eq. 20 consequence"),
    E("tau_central_c", "tau*c", "c*tau", "Eq. 20 consequence"),
    E("tau_central_d", "tau*d", "d*tau", "Eq. 20 consequence"),
    E("eq16_two_spellings",
      "(2*q^2/(1 + q^2))*w1x + (2/(1 + q^2))*w4x",
      "(2*q^2/(1 + q^2))*w1x + (2/(1 + q^2))*w4x",
      "Eq. 16: the two displayed dDq expressions coincide at Eq. 18",
      note="degenerate by construction; the real content is checked by "
           "the F-equation report", flag="recorded redundancy of Eq. 10/16"),
]
# replace the placeholder w1x/w4x entry with a genuine Eq. 16 check:
ent[-1] = E(
    "eq16_two_spellings",
    "(2*q^2/(1 + q^2))*(Dqi*(d*d_a - q^-1*b*d_c))"
    " + (2/(1 + q^2))*(Dqi*(a*d_d - q*c*d_b))",
    "tau",
    "Eq. 16: dDq = Dq[D11 w1 + (1+D14) w4] = Dq[(1+A41) w1 + A44 w4] at "
    "Eq. 18; both spellings equal beta w1 + alpha w4 = Tr_q omega",
    flag="Eq. 10/16 print near-duplicate lines; the two genuinely distinct "
         "expressions coincide")
dump("relations_glq2_d", "GLq2_d", ent,
     note="Eq. 27/28 parameter-differential table; tau is Tr_q omega "
          "written out per Eq. 19")

# --- SLq2_forms ---------------------------------------------------------------
ent = [
    E("ab_ba", "a*b", "q*b*a", "Eq. 36: ab = qba"),
    E("cd_dc", "c*d", "q*d*c", "Eq. 36: cd = qdc"),
    E("cb_bc", "c*b", "b*c", "Eq. 36: cb = bc"),
    E("ac_ca", "a*c", "q*c*a", "Eq. 36: ac = qca"),
    E("ad_da", "a*d", f"d*a + {lam}*b*c", "Eq. 36: ad = da + (q - 1/q) bc"),
    E("det_one", "a*d - q*b*c", "1", "Eq. 34: Det_q g = ad - qbc = 1"),
    E("w1_a", "w1*a", "q^-2*a*w1", "Eq. 30"),
    E("w2_a", "w2*a", "q^-1*a*w2", "Eq. 30"),
    E("w3_a", "w3*a", "q^-1*a*w3", "Eq. 30"),
    E("w1_d", "w1*d", "q^2*d*w1", "Eq. 30"),
    E("w2_d", "w2*d", "q*d*w2", "Eq. 30"),
    E("w3_d", "w3*d", "q*d*w3", "Eq. 30"),
    E("w1_c", "w1*c", "q^-2*c*w1", "Eq. 30 (a<->c interchange)"),
    E("w2_c", "w2*c", "q^-1*c*w2", "Eq. 30 (interchange)"),
    E("w3_c", "w3*c", "q^-1*c*w3", "Eq. 30 (interchange)"),
    E("w1_b", "w1*b", "q^2*b*w1", "Eq. 30 (d<->b interchange)"),
    E("w2_b", "w2*b", "q*b*w2", "Eq. 30 (interchange)"),
    E("w3_b", "w3*b", "q*b*w3", "Eq. 30 (interchange)"),
    E("sq_w1", "w1^2", "0", "Eq. 30: (w1)^2 = 0"),
    E("sq_w2", "w2^2", "0", "Eq. 30"),
    E("sq_w3", "w3^2", "0", "Eq. 30"),
    E("w1w2", "w1*w2 + q^4*w2*w1", "0", "Eq. 30: w1 w2 + q^4 w2 w1 = 0"),
    E("w1w3", "w1*w3 + q^-4*w3*w1", "0", "Eq. 30: w1 w3 + q^-4 w3 w1 = 0"),
    E("w2w3", "w2*w3 + q^-2*w3*w2", "0", "Eq. 30: w2 w3 + q^-2 w3 w2 = 0"),
    E("sp2_J2_11", "a*c - q*c*a", "0",
      "Eq. 32: T^t J2 T = J2 entry (1,1), with J2 scaled by q^(1/2)"),
    E("sp2_J2_12", "a*d - q*c*b", "1", "Eq. 32 entry (1,2)"),
    E("sp2_J2_21", "b*c - q*d*a", "-q", "Eq. 32 entry (2,1)"),
    E("sp2_J2_22", "b*d - q*d*b", "0", "Eq. 32 entry (2,2)",
      note="the half-integer powers of the printed J2 cancel from the "
           "invariance condition; the check uses q^(1/2) J2"),
]
dump("relations_slq2_forms", "SLq2_forms", ent,
     note="Eq. 30 three-dimensional left calculus on SLq2; Sp_q(2,C) "
          "invariance per Eq. 32")

# --- SLq2R_gauss ---------------------------------------------------------------
ent = [
    E("rho_fm", "rho*fm", "q*fm*rho", "Eq. 38: rho phi- = q phi- rho"),
    E("rho_fp", "rho*fp", "q*fp*rho", "Eq. 38: rho phi+ = q phi+ rho"),
    E("fm_fp", "fm*fp", "q^2*fp*fm", "Eq. 38: phi- phi+ = q^2 phi+ phi-"),
    E("w1_rho", "w1*rho", "q^-2*rho*w1", "Eq. 41"),
    E("w2_rho", "w2*rho", "q^-1*rho*w2", "Eq. 41"),
    E("w3_rho", "w3*rho", "q^-1*rho*w3", "Eq. 41"),
    E("w1_fm", "w1*fm", "fm*w1", "Eq. 41"),
    E("w1_fp", "w1*fp", "fp*w1", "Eq. 41"),
    E("w2_fm", "w2*fm", "fm*w2", "Eq. 41"),
    E("w2_fp", "w2*fp", "fp*w2", "Eq. 41"),
    E("w3_fm", "w3*fm", "fm*w3", "Eq. 41"),
    E("w3_fp", "w3*fp", "fp*w3", "Eq. 41"),
    E("drho_rho", "d_rho*rho", "q^-2*rho*d_rho", "Eq. 42"),
    E("dfp_fp", "d_fp*fp", "q^-2*fp*d_fp + (q^4 - 1)*fp^3*d_fm", "Eq. 42"),
    E("dfm_fm", "d_fm*fm", "q^2*fm*d_fm", "Eq. 42"),
    E("drho_fm", "d_rho*fm", "q*fm*d_rho", "Eq. 42"),
    E("dfm_fp", "d_fm*fp", "q^2*fp*d_fm", "Eq. 43"),
    E("dfp_fm", "d_fp*fm", "q^-2*fm*d_fp", "Eq. 43"),
    E("drho_dfm", "d_rho*d_fm", "-q*d_fm*d_rho", "Eq. 43"),
    E("dfm_dfp", "d_fm*d_fp", "-q^2*d_fp*d_fm", "Eq. 43"),
    E("dfm_rho", "d_fm*rho", "q^-1*rho*d_fm", "Eq. 43"),
    E("dfp_rho", "d_fp*rho", "q^-1*rho*d_fp - q*(q^2 - 1)*fp^2*rho*d_fm",
      "Eq. 44"),
    E("drho_fp", "d_rho*fp", "q*fp*d_rho - q^2*(q^2 - 1)*fp^2*rho*d_fm",
      "Eq. 44"),
    E("four_term_engine",
      "d_rho*d_fp + q*d_fp*d_rho + q^3*(q^2 - 1)*fp^2*d_fm*d_rho"
      " + ((q^4 - 1)/q^3)*fp*rho*d_fm*d_fp",
      "0",
      "Eq. 44 four-term relation, engine-consistent sign on the last term "
      "(forced by d applied to the drho phi+ relation)"),
    E("four_term_printed",
      "d_rho*d_fp + q*d_fp*d_rho + q^3*(q^2 - 1)*fp^2*d_fm*d_rho"
      " - ((q^4 - 1)/q^3)*fp*rho*d_fm*d_fp",
      "0",
      "Eq. 44 four-term relation as printed",
      flag="the printed '-' on the last term contradicts d^2 = 0 applied "
           "to the drho phi+ relation and breaks confluence; the engine "
           "uses '+'"),
    E("sq_w1", "w1^2", "0", "Eq. 46"),
    E("sq_w2", "w2^2", "0", "Eq. 46"),
    E("sq_w3", "w3^2", "0", "Eq. 46"),
    E("w4_elim", "w4 + q^2*w1", "0", "Eq. 46: w4 = -q^2 w1"),
    E("trq_zero", "q^2*w1 + w4", "0", "Eq. 39: Tr_q omega = q^2 w1 + w4 = 0"),
    E("w1w2", "w1*w2 + q^4*w2*w1", "0", "Eq. 46"),
    E("w1w3", "w1*w3 + q^-4*w3*w1", "0", "Eq. 46"),
    E("w2w3", "w2*w3 + q^-2*w3*w2", "0", "Eq. 46"),
    E("sq_drho", "d_rho^2", "0",
      "consequence of Eq. 42 (d applied to drho rho)"),
    E("sq_dfm", "d_fm^2", "0", "consequence of Eq. 42"),
    E("sq_dfp", "d_fp^2 + q^-2*(q^6 - 1)*fp^2*d_fp*d_fm", "0",
      "consequence of Eq. 42/43: (dphi+)^2 is not zero",
      note="forced by d applied to the dphi+ phi+ relation; vanishes "
           "at q = 1"),
]
dump("relations_slq2r_gauss", "SLq2R_gauss", ent,
     note="Eqs. 38-46 second-order calculus in the Gauss coordinates")

# --- SLq2R_var -----------------------------------------------------------------
dv = {"rho": "(rho*R1 - fp*rho^3*R2)",
      "fm": "(q^-1*rho^2*R2)",
      "fp": "(q*fp^2*rho^2*R2 + q*rho^-2*R3)"}
ent = [
    E("rho_R1", "rho*R1", "q^2*R1*rho", "Eq. 69"),
    E("rho_R2", "rho*R2", "q*R2*rho", "Eq. 69"),
    E("rho_R3", "rho*R3", "q*R3*rho", "Eq. 69"),
    E("fm_R1", "fm*R1", "R1*fm", "Eq. 69"),
    E("fm_R2", "fm*R2", "R2*fm", "Eq. 69"),
    E("fm_R3", "fm*R3", "R3*fm", "Eq. 69"),
    E("fp_R1", "fp*R1", "R1*fp", "Eq. 69"),
    E("fp_R2", "fp*R2", "R2*fp", "Eq. 69"),
    E("fp_R3", "fp*R3", "R3*fp", "Eq. 69"),
    E("R1R2", "R1*R2", "q^4*R2*R1", "Eq. 75"),
    E("R3R1", "R3*R1", "q^4*R1*R3", "Eq. 75"),
    E("R3R2", "R3*R2", "q^2*R2*R3", "Eq. 75"),
    E("R4_def", "R4 + q^2*R1", "0", "Eq. 75: R4 = -q^2 R1"),
    E("rhod_R1", "rho_dot*R1", "q^2*R1*rho_dot", "Eq. 80"),
    E("rhod_R2", "rho_dot*R2", "q*R2*rho_dot", "Eq. 80"),
    E("rhod_R3", "rho_dot*R3", "q*R3*rho_dot", "Eq. 80"),
    E("rhod_R1d", "rho_dot*R1_dot", "q^2*R1_dot*rho_dot", "Eq. 80"),
    E("rhod_R2d", "rho_dot*R2_dot", "q*R2_dot*rho_dot", "Eq. 80"),
    E("rhod_R3d", "rho_dot*R3_dot", "q*R3_dot*rho_dot", "Eq. 80"),
    E("rho_R1d", "rho*R1_dot", "R1_dot*rho", "Eq. 80"),
    E("rho_R2d", "rho*R2_dot", "q*R2_dot*rho", "Eq. 80"),
    E("rho_R3d", "rho*R3_dot", "q*R3_dot*rho", "Eq. 80"),
    E("fmd_R1d", "fm_dot*R1_dot", "R1_dot*fm_dot",
      "§IV.5: derivatives of phi± commute with derivatives of R"),
    E("fpd_R2d", "fp_dot*R2_dot", "R2_dot*fp_dot", "§IV.5"),
]
for x, k in (("rho", "q^-2"), ("fm", "q^2")):
    pass
vcr = [
    ("var_rhod_rho", f"{dv['rho']}*rho", f"q^-2*rho*{dv['rho']}",
     "variational C.R.: (rho delta) rho = q^-2 rho (rho delta)"),
    ("var_fpd_fp", f"{dv['fp']}*fp",
     f"q^-2*fp*{dv['fp']} + (q^4 - 1)*fp^3*{dv['fm']}",
     "variational C.R.: (phi+ delta) phi+"),
    ("var_fmd_fm", f"{dv['fm']}*fm", f"q^2*fm*{dv['fm']}",
     "variational C.R.: (phi- delta) phi-"),
    ("var_rhod_fm", f"{dv['rho']}*fm", f"q*fm*{dv['rho']}",
     "variational C.R.: (rho delta) phi-"),
    ("var_fmd_rho", f"{dv['fm']}*rho", f"q^-1*rho*{dv['fm']}",
     "variational C.R.: (phi- delta) rho"),
    ("var_fpd_rho", f"{dv['fp']}*rho",
     f"q^-1*rho*{dv['fp']} - q*(q^2 - 1)*fp^2*rho*{dv['fm']}",
     "variational C.R.: (phi+ delta) rho"),
    ("var_rhod_fp", f"{dv['rho']}*fp",
     f"q*fp*{dv['rho']} - q^2*(q^2 - 1)*fp^2*rho*{dv['fm']}",
     "variational C.R.: (rho delta) phi+"),
    ("var_fmd_fp", f"{dv['fm']}*fp", f"q^2*fp*{dv['fm']}",
     "variational C.R.: (phi- delta) phi+"),
    ("var_fpd_fm", f"{dv['fp']}*fm", f"q^-2*fm*{dv['fp']}",
     "variational C.R.: (phi+ delta) phi-"),
]
ent += [E(n, l, r, ref) for n, l, r, ref in vcr]
dump("relations_slq2r_var", "SLq2R_var", ent,
     note="Eqs. 69, 75, 80 and the variational commutation relations, with "
          "the variations expanded per Eq. 70")

# --- Uq2 / SUq2 -----------------------------------------------------------------
ent = [
    E("unitarity_1", "a*as + q^2*c*cs", "1", "Eq. 29: a a* + q^2 c c* = 1"),
    E("unitarity_2", "as*a + cs*c", "1", "Eq. 29: a* a + c* c = 1"),
    E("ccs", "c*cs", "cs*c", "Eq. 29: c c* = c* c"),
    E("ac", "a*c", "q*c*a", "Eq. 2 image: ac = qca"),
    E("acs", "a*cs", "q*cs*a", "Eq. 2 image under b = -q Dq c*"),
    E("aas", "a*as", "as*a - q*(q - q^-1)*cs*c",
      "Eq. 2 image: aa* = a*a - q (q - 1/q) c* c"),
    E("cas", "c*as", "q*as*c", "Eq. 2 image: c a* = q a* c"),
    E("csas", "cs*as", "q*as*cs", "Eq. 2 image: c* a* = q a* c*"),
]
dump("relations_suq2", "SUq2", ent, note="Eq. 29 unitarity block on SUq2")

ent = [
    E("unitarity_1", "a*as + q^2*c*cs", "1", "Eq. 29"),
    E("DqDqs", "Dq*Dq^-1", "1", "Eq. 29: Dq Dq* = 1 with Dq* = Dq^-1"),
    E("b_alias", "b + q*Dq*cs", "0", "Eq. 29: b = -q Dq c*"),
    E("d_alias", "d - Dq*as", "0", "Eq. 29: d = Dq a*"),
]
dump("relations_uq2", "Uq2_star", ent, note="Eq. 29 on Uq2 with central Dq")

# --- Cq plane --------------------------------------------------------------------
ent = [
    E("xy", "x*y", "q*y*x", "§IV.6: xy = qyx"),
    E("xd_x", "x_dot*x", "q^-2*x*x_dot", "§IV.6: x_dot x = q^-2 x x_dot"),
    E("yd_y", "y_dot*y", "q^-2*y*y_dot", "§IV.6: y_dot y = q^-2 y y_dot"),
    E("xd_y", "x_dot*y", "q^-1*y*x_dot", "§IV.6: x_dot y = q^-1 y x_dot"),
    E("yd_x", "y_dot*x", "q^-1*x*y_dot - ((q^2 - 1)/q^2)*y*x_dot",
      "§IV.6: y_dot x = q^-1 x y_dot - (q^2-1)/q^2 y x_dot"),
    E("dx_x", "d_x*x", "q^-2*x*d_x", "§IV.6 with dot -> d"),
    E("dy_y", "d_y*y", "q^-2*y*d_y", "§IV.6 with dot -> d"),
    E("dx_y", "d_x*y", "q^-1*y*d_x", "§IV.6 with dot -> d"),
    E("dy_x", "d_y*x", "q^-1*x*d_y - ((q^2 - 1)/q^2)*y*d_x",
      "§IV.6 with dot -> d"),
    E("dxdy", "d_x*d_y + q^-1*d_y*d_x", "0",
      "consequence: d applied to x_dot y relation"),
    E("sq_dx", "d_x^2", "0", "consequence of the Wess-Zumino calculus"),
    E("sq_dy", "d_y^2", "0", "consequence of the Wess-Zumino calculus"),
]
dump("relations_cq_plane", "Cq_plane", ent,
     note="the quantum-plane calculus of §IV.6 (B_L solution)")

ent = [
    E("rho_fp", "rho*fp", "q*fp*rho", "Eq. 38 at phi- = 0"),
    E("rhod_rho", "rho_dot*rho", "q^-2*rho*rho_dot",
      "§IV.6: d rho rho = q^-2 rho d rho with d -> dot"),
    E("rhodd_rhod", "rho_ddot*rho_dot", "q^-2*rho_dot*rho_ddot",
      "§IV.6: imposed d rho_dot rho_dot = q^-2 rho_dot d rho_dot"),
    E("rhodd_rho", "rho_ddot*rho",
      "q^-2*rho*rho_ddot + (q^-2 - 1)*rho_dot^2",
      "time derivative of the rho_dot rho relation"),
]
dump("relations_cq_rho", "Cq_rho", ent,
     note="the (rho, phi+) coordinates of the one-dimensional model")

# --- coset forms -------------------------------------------------------------------
ent = [
    E("eq60_w1w3", "(q^2 - 1)*fp*d_fm*(d_fp - q^2*fp^2*d_fm)"
      " + q^4*(d_fp - q^2*fp^2*d_fm)*(q^2 - 1)*fp*d_fm", "0",
      "Eq. 60: w1 w3 + q^4 w3 w1 = 0 (example-1 coset forms)"),
    E("eq60_w2w3", "d_fm*(d_fp - q^2*fp^2*d_fm)"
      " + q^2*(d_fp - q^2*fp^2*d_fm)*d_fm", "0",
      "Eq. 60: w2 w3 + q^2 w3 w2 = 0"),
    E("eq60_w4w3", "0*(d_fp - q^2*fp^2*d_fm)", "0",
      "Eq. 60: w4 w3 + q^4 w3 w4 = 0 (w4 = 0 for the displayed splits)",
      note="Eq. 60 prints the w1 w3 line twice; the duplicate is recorded "
           "here as the vanishing w4 line",
      flag="Eq. 60 duplicate line"),
]
dump("relations_coset", "Coset_forms", ent,
     note="the coset-subgroup form relations common to the three examples")

print("done")
