"""Dev: derive the GLq2 parameter-differential table from the F-matrix
definition (correct index dictionary) and compare with the printed table."""
from qgcalc.algebra import NCPoly, nc_mul
from qgcalc.presets import PresetBuilder, _glq2_param_rules, _central
from qgcalc.scalars import ONE, Q, QINV, QScalar, qpow
from qgcalc.expr_io import parse, format_poly

b = PresetBuilder("raw").gens("a", "b", "c", "d", "Dq!",
                              "d_a'", "d_b'", "d_c'", "d_d'")
_glq2_param_rules(b)
_central(b, "Dq", ["a", "b", "c", "d"], "")
P = b.done()

g = lambda n: NCPoly.generator(P, n)
T = {(1, 1): g("a"), (1, 2): g("b"), (2, 1): g("c"), (2, 2): g("d")}
dT = {(1, 1): g("d_a"), (1, 2): g("d_b"), (2, 1): g("d_c"), (2, 2): g("d_d")}
Dqi = NCPoly.generator(P, "Dq", -1)
ginv = {(1, 1): Dqi * g("d"), (1, 2): Dqi * g("b") * (-QINV),
        (2, 1): Dqi * g("c") * (-Q), (2, 2): Dqi * g("a")}

alpha = QScalar((2,)) / (ONE + qpow(2))
beta = (2 * qpow(2)) / (ONE + qpow(2))
z = QScalar((0,))
one = ONE

A = [[one - alpha + alpha / beta, z, z, (one - alpha) * alpha / beta],
     [z, QINV, z, z],
     [z, z, QINV, z],
     [beta - one, z, z, alpha]]
D = [[beta, z, z, alpha - one],
     [z, Q, z, z],
     [z, z, Q, z],
     [(one - beta) * beta / alpha, z, z, one - beta + beta / alpha]]
Z4 = [[z] * 4 for _ in range(4)]
F = {(1, 1): A, (1, 2): Z4, (2, 1): Z4, (2, 2): D}

omega = {}
for dd in (1, 2):
    for gg in (1, 2):
        acc = NCPoly.zero(P)
        for p in (1, 2):
            acc = acc + nc_mul(ginv[(dd, p)], dT[(p, gg)])
        omega[(dd, gg)] = acc

tau = (QScalar((2,)) / (Q + QINV)) * (Q * omega[(1, 1)] + QINV * omega[(2, 2)])


def candidate(i, k, j, l):
    """dT^i_k T^j_l = sum_m T^i_m (omega^m_k T^j_l), with
    omega^{(m,k)} T^j_l = T^j_n F[(n,l)][(m,k)][(delta,gamma)] omega^{(d,g)}."""
    acc = NCPoly.zero(P)
    for m in (1, 2):
        for n in (1, 2):
            blk = F[(n, l)]
            I = 2 * (m - 1) + (k - 1)
            for delta in (1, 2):
                for gamma in (1, 2):
                    J = 2 * (delta - 1) + (gamma - 1)
                    co = blk[I][J]
                    if not co:
                        continue
                    acc = acc + nc_mul(nc_mul(T[(i, m)], T[(j, n)]),
                                       omega[(delta, gamma)]) * co
    return acc


names = {(1, 1): "a", (1, 2): "b", (2, 1): "c", (2, 2): "d"}
dnames = {(1, 1): "da", (1, 2): "db", (2, 1): "dc", (2, 2): "dd"}

mu = "((q^2 - 1)/(2*q^2))"
nu = "((1 - q^2)/2)"
kk = "(q^2 - 1)"
printed = {
    ("da", "a"): f"q^-2*a*d_a + {mu}*a^2*TAU",
    ("dc", "c"): f"q^-2*c*d_c + {mu}*c^2*TAU",
    ("da", "c"): f"q^-1*c*d_a + {mu}*a*c*TAU",
    ("dc", "a"): f"q^-1*a*d_c + (q^-2 - 1)*c*d_a + {mu}*c*a*TAU",
    ("db", "b"): f"q^2*b*d_b + {nu}*b^2*TAU",
    ("dd", "d"): f"q^2*d*d_d + {nu}*d^2*TAU",
    ("db", "d"): f"q*d*d_b + (q^2 - 1)*b*d_d + {nu}*b*d*TAU",
    ("dd", "b"): f"q*b*d_d + {nu}*d*b*TAU",
    ("da", "b"): f"q*b*d_a + ({kk}/q^2)*Dq^-1*a*b*(q*c*d_b - a*d_d) + {mu}*a*b*TAU",
    ("da", "d"): f"d*d_a + (q - q^-1)*b*d_c + {kk}*Dq^-1*a*d*(d*d_a - q^-1*b*d_c) - ({kk}/2)*a*d*TAU",
    ("dc", "b"): f"b*d_c + {kk}*Dq^-1*c*b*(d*d_a - q^-1*b*d_c) - ({kk}/2)*c*b*TAU",
    ("dc", "d"): f"q*d*d_c + {kk}*Dq^-1*c*d*(d*d_a - q^-1*b*d_c) - ({kk}/2)*c*d*TAU",
    ("db", "a"): f"q^-1*a*d_b + ({kk}/q^2)*Dq^-1*b*a*(q*c*d_b - a*d_d) + ({kk}/(2*q^2))*b*a*TAU",
    ("db", "c"): f"c*d_b + {kk}*Dq^-1*b*c*(d*d_a - q^-1*b*d_c) - ({kk}/2)*b*c*TAU",
    ("dd", "a"): f"a*d_d - (q - q^-1)*c*d_b + {kk}*Dq^-1*d*a*(d*d_a - q^-1*b*d_c) - ({kk}/2)*d*a*TAU",
    ("dd", "c"): f"q^-1*c*d_d + {kk}*Dq^-1*d*c*(d*d_a - q^-1*b*d_c) - ({kk}/2)*d*c*TAU",
}


def parse_printed(expr):
    with_one = parse(expr.replace("TAU", "1"), P)
    with_zero = parse(expr.replace("TAU", "0"), P)
    coeff_part = with_one - with_zero
    return with_zero + nc_mul(coeff_part, tau)


# compare after multiplying by Dq on the left and eliminating Dq = ad - qbc
from qgcalc.algebra import substitute
b2 = PresetBuilder("raw2").gens("a", "b", "c", "d",
                                "d_a'", "d_b'", "d_c'", "d_d'")
_glq2_param_rules(b2)
P2 = b2.done()
Dq = NCPoly.generator(P, "Dq")


def det_normal(x):
    return substitute(nc_mul(Dq, x), {"Dq": "a*d - q*b*c"}, P2)


nok = 0
for (ik, jl) in printed:
    ikk = [k for k, v in dnames.items() if v == ik][0]
    jll = [k for k, v in names.items() if v == jl][0]
    cand = det_normal(candidate(ikk[0], ikk[1], jll[0], jll[1]))
    pr = det_normal(parse_printed(printed[(ik, jl)]))
    diff = cand - pr
    if diff.is_zero():
        nok += 1
        print(f"{ik} {jl}: MATCH")
    else:
        print(f"{ik} {jl}: MISMATCH   diff = {format_poly(diff)}")
print(f"total {nok}/16")
