"""Find the composite-index convention that makes Eq. 6 reproduce Eq. 20."""
from qgcalc.algebra import NCPoly, nc_mul
from qgcalc.presets import preset
from qgcalc.scalars import ONE, Q, QINV, QScalar, qpow
from qgcalc.expr_io import parse

P = preset("GLq2_matched")

w = {(1, 1): parse("w1", P), (1, 2): parse("w2", P),
     (2, 1): parse("w3", P), (2, 2): parse("w4", P)}
T = {(1, 1): parse("a", P), (1, 2): parse("b", P),
     (2, 1): parse("c", P), (2, 2): parse("d", P)}

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


def check(rowmode, colmode):
    bad = []
    for al in (1, 2):
        for be in (1, 2):
            for i in (1, 2):
                for k in (1, 2):
                    lhs = nc_mul(w[(al, be)], T[(i, k)])
                    rhs = NCPoly.zero(P)
                    for m in (1, 2):
                        blk = F[(m, k)]
                        for gamma in (1, 2):
                            for delta in (1, 2):
                                if rowmode == 0:
                                    I = 2 * (al - 1) + (gamma - 1)
                                else:
                                    I = 2 * (gamma - 1) + (al - 1)
                                if colmode == 0:
                                    J = 2 * (delta - 1) + (be - 1)
                                else:
                                    J = 2 * (be - 1) + (delta - 1)
                                co = blk[I][J]
                                if not co:
                                    continue
                                rhs = rhs + nc_mul(T[(i, m)], w[(delta, gamma)]) * co
                    if not (lhs - rhs).is_zero():
                        bad.append((al, be, i, k))
    return bad


for rm in (0, 1):
    for cm in (0, 1):
        bad = check(rm, cm)
        print(f"rowmode={rm} colmode={cm}: {16 - len(bad)}/16; bad={bad}")
