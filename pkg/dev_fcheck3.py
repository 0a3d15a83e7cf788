"""Extract the F-matrix entries implied by the Eq. 20 rules."""
from qgcalc.algebra import NCPoly, nc_mul
from qgcalc.presets import preset
from qgcalc.expr_io import parse, format_scalar

P = preset("GLq2_matched")

w = {(1, 1): parse("w1", P), (1, 2): parse("w2", P),
     (2, 1): parse("w3", P), (2, 2): parse("w4", P)}
T = {(1, 1): parse("a", P), (1, 2): parse("b", P),
     (2, 1): parse("c", P), (2, 2): parse("d", P)}
tname = {"a": (1, 1), "b": (1, 2), "c": (2, 1), "d": (2, 2)}
wname = {"w1": (1, 1), "w2": (1, 2), "w3": (2, 1), "w4": (2, 2)}

# invert barred -> unbarred for reading words
# wb1 = 2/(q+1/q) (q w1 + 1/q w4), wb4 = (w1 - w4)/(1+q^2)
unbar = {"wb1": parse("w1 + w4*0", P), }  # placeholder, we read barred directly

# We express the normalized product in the barred letter basis and convert
# each barred form back to the unbarred combination symbolically.
bar_to_unbar = {
    "wb1": {"w1": parse("(2*q/(q + 1/q))*1", P).terms[()],
            "w4": parse("(2/(q*(q + 1/q)))*1", P).terms[()]},
    "w2": {"w2": P.one},
    "w3": {"w3": P.one},
    "wb4": {"w1": parse("(1/(1 + q^2))*1", P).terms[()],
            "w4": parse("(-1/(1 + q^2))*1", P).terms[()]},
}

for (i, k) in [(1, 1), (1, 2), (2, 1), (2, 2)]:
    print(f"=== T^{i}_{k} ===")
    for (al, be) in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        lhs = nc_mul(w[(al, be)], T[(i, k)])
        # each word: one parameter letter then one barred form letter
        entries = {}
        for word, c in lhs.terms.items():
            assert len(word) == 2, (word, c)
            (g1, e1), (g2, e2) = word
            pn = P.generators[g1].name
            fn = P.generators[g2].name
            m = tname[pn][1]
            assert tname[pn][0] == i
            for un, cc in bar_to_unbar[fn].items():
                dg = wname[un]
                key = (m, dg)
                entries[key] = entries.get(key, P.zero) + c * cc
        for (m, (delta, gamma)), c in sorted(entries.items()):
            if c:
                print(f"  (F^{m}_{k})^({al}{gamma})_({delta}{be}) = {format_scalar(c)}")
