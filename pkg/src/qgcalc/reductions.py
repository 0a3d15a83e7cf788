"""Surjections onto subgroup calculi, star structures, classical limit.

The catalogue below transcribes the reduction list of the paper's
subgroup section: Borel subgroups, the SL reduction (unit determinant and
vanishing trace form), the unitary forms, diagonal subgroups, the
centralizing cosets, and the quantum-plane calculi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AlgebraError, NCPoly, Preset, _make_word, nc_mul, substitute
from .expr_io import parse
from .presets import preset
from .scalars import ONE, QScalar


@dataclass
class SurjectionMap:
    name: str
    source: str
    target: str
    images: dict  # source generator name -> target expression string
    paper_ref: str = ""
    note: str = ""
    # target letters deliberately outside the image (e.g. time-derivative
    # letters that belong to the sigma-model layer, not to the source algebra)
    expect_unreached: tuple = ()

    def apply(self, p: NCPoly) -> NCPoly:
        return substitute(p, self.images, preset(self.target))


@dataclass
class StarStructure:
    name: str
    preset: str
    images: dict  # generator name -> image expression string
    q_mode: str = "real"  # "real" (q* = q) or "unit" (q* = 1/q)
    paper_ref: str = ""


# ---------------------------------------------------------------------------
# catalogue


SURJECTIONS = [
    SurjectionMap(
        "GLq2->BL2", "GLq2", "BL2", {"b": "0"},
        "§III: pi(b) = 0 onto the lower-triangular Borel subgroup"),
    SurjectionMap(
        "GLq2->BU2", "GLq2", "BU2", {"c": "0"},
        "§III: pi(c) = 0 onto the upper-triangular Borel subgroup"),
    SurjectionMap(
        "GLq2_matched->BL2_matched", "GLq2_matched", "BL2_matched",
        {"b": "0", "w2": "0", "wb1": "wb1", "wb4": "wb4", "w3": "w3"},
        "§III: pi(b) = 0, pi(omega^2) = 0 in the matched calculus"),
    SurjectionMap(
        "GLq2_matched->BU2_matched", "GLq2_matched", "BU2_matched",
        {"c": "0", "w3": "0", "wb1": "wb1", "wb4": "wb4", "w2": "w2"},
        "§III: pi(c) = 0, pi(omega^3) = 0"),
    SurjectionMap(
        "GLq2_d->BL2_d", "GLq2_d", "BL2_d", {"b": "0", "d_b": "0"},
        "§III: pi(b) = 0 applied to the Eq. 27/28 differential table"),
    SurjectionMap(
        "GLq2_d->BU2_d", "GLq2_d", "BU2_d", {"c": "0", "d_c": "0"},
        "§III: pi(c) = 0 applied to the Eq. 27/28 differential table"),
    SurjectionMap(
        "GLq2_matched->SLq2_forms", "GLq2_matched", "SLq2_forms",
        {"Dq": "1", "wb1": "0", "wb4": "w1", "w2": "w2", "w3": "w3"},
        "§III: Dq = 1 and Tr_q omega = 0 reproduce the Eq. 30 table"),
    SurjectionMap(
        "GLq2_d->SLq2_d", "GLq2_d", "SLq2_d", {"Dq": "1"},
        "§III: Dq = 1, dDq = 0 on the differential table"),
    SurjectionMap(
        "SLq2_forms->SUq2", "SLq2_forms", "SUq2",
        {"d": "as", "b": "-q*cs", "w1": "0", "w2": "0", "w3": "0"},
        "§III: pi(d) = a*, pi(b) = -q c* onto SUq2",
        note="forms are dropped; only the parameter algebra is carried over"),
    SurjectionMap(
        "Uq2_star->SUq2", "Uq2_star", "SUq2", {"Dq": "1"},
        "§III: SUq2 = SLq2 ∩ Uq2"),
    SurjectionMap(
        "GLq2->Tq2", "GLq2", "Tq2", {"b": "0", "c": "0"},
        "§III: pi(b) = pi(c) = 0 onto the diagonal subgroup"),
    SurjectionMap(
        "Uq2_star->Tq2_star", "Uq2_star", "Uq1_star",
        {"c": "0", "cs": "0", "Dq": "1"},
        "§III: diagonal subgroup of Uq2 (c -> 0)"),
    SurjectionMap(
        "SLq2_forms->Uq1", "SLq2_forms", "Uq1",
        {"b": "0", "c": "0", "d": "a^-1", "w1": "0", "w2": "0", "w3": "0"},
        "§III: diagonal subgroup of SLq2"),
    SurjectionMap(
        "SLq2->Cq_plane", "SLq2_forms", "Cq_plane",
        {"a": "x", "c": "y", "d": "x^-1", "b": "0",
         "w1": "0", "w2": "0", "w3": "0"},
        "§IV.6: pi(b) = 0, a = x, c = y, d = x^-1 onto the quantum plane",
        expect_unreached=("d_x", "d_y", "x_dot", "y_dot")),
    SurjectionMap(
        "SLq2_d->Cq_plane_BL", "SLq2_d", "Cq_plane",
        {"a": "x", "c": "y", "d": "x^-1", "b": "0",
         "d_a": "d_x", "d_c": "d_y", "d_d": "-q^2*x^-2*d_x", "d_b": "0"},
        "§IV.6: the B_L Wess-Zumino calculus on Cq(2|0)",
        expect_unreached=("x_dot", "y_dot")),
    SurjectionMap(
        "SLq2_d->Cq_plane_BU", "SLq2_d", "Cq_plane",
        {"a": "x^-1", "b": "y", "d": "x", "c": "0",
         "d_a": "-q^2*x^-2*d_x", "d_b": "d_y", "d_d": "d_x", "d_c": "0"},
        "§IV.6: the B_U Wess-Zumino calculus (second solution)",
        expect_unreached=("x_dot", "y_dot")),
    SurjectionMap(
        "SLq2R_gauss->Cq_rho", "SLq2R_gauss", "Cq_rho",
        {"fm": "0", "d_fm": "0", "w1": "0", "w2": "0", "w3": "0"},
        "§IV.6: phi- = 0 embeds the one-dimensional model's calculus",
        expect_unreached=("rho_dot", "fp_dot", "rho_ddot")),
]


STARS = [
    StarStructure(
        "SUq2_star", "SUq2",
        {"a": "as", "as": "a", "c": "cs", "cs": "c"},
        q_mode="real",
        paper_ref="Eq. 29: g+ = g^-1 with q* = q"),
    StarStructure(
        "Uq2_star", "Uq2_star",
        {"a": "as", "as": "a", "c": "cs", "cs": "c", "Dq": "Dq^-1"},
        q_mode="real",
        paper_ref="Eq. 29: Dq Dq* = 1"),
    StarStructure(
        "GLq2R_star", "GLq2",
        {"a": "a", "b": "b", "c": "c", "d": "d", "Dq": "Dq"},
        q_mode="unit",
        paper_ref="§III/§IV.1: hermitian generators with |q| = 1"),
    StarStructure(
        "SLq2R_gauss_star", "SLq2R_gauss",
        {"rho": "rho", "fm": "fm", "fp": "fp",
         "d_rho": "d_rho", "d_fm": "d_fm", "d_fp": "d_fp",
         "w1": "-w1", "w2": "-w2", "w3": "-w3"},
        q_mode="unit",
        paper_ref="§IV.1: hermitian parameters, antihermitian forms, |q| = 1"),
]


def surjection(name: str) -> SurjectionMap:
    for s in SURJECTIONS:
        if s.name == name:
            return s
    raise KeyError(f"unknown surjection {name!r}")


def star(name: str) -> StarStructure:
    for s in STARS:
        if s.name == name:
            return s
    raise KeyError(f"unknown star structure {name!r}")


# ---------------------------------------------------------------------------
# operations


def apply_surjection(m: SurjectionMap, p: NCPoly) -> NCPoly:
    return m.apply(p)


def _rule_relations(p: Preset):
    """Each rewrite rule as the polynomial lhs - rhs (normalizes to zero)."""
    rels = []
    for rule in p.rules.values():
        lhs_w = _make_word(p, [(rule.g, rule.sg), (rule.h, rule.sh)])
        lhs = NCPoly(p, {lhs_w: p.one}, True)
        rhs = NCPoly(p, dict(rule.rhs), True)
        rels.append((p.pretty_key(rule), lhs - rhs, rule))
    return rels


def check_surjection(m: SurjectionMap):
    """All source relations must map to zero; every target rule must be the
    image of a source rule on the preimages of its pair.  Returns a list of
    (check-name, ok, detail) entries."""
    src = preset(m.source)
    tgt = preset(m.target)
    out = []
    for key, rel, rule in _rule_relations(src):
        try:
            img = m.apply(rel)
            ok = img.is_zero()
            detail = "" if ok else f"image {img!r}"
        except AlgebraError as e:
            ok, detail = False, str(e)
        out.append((f"rule {key} maps to zero", ok, detail))
    # reachability: every target generator is an image generator
    reached = set()
    for name in src.by_name:
        expr = m.images.get(name, name)
        try:
            img = parse(expr, tgt) if isinstance(expr, str) else expr
        except Exception:
            continue
        for w, _ in img.terms.items():
            for g, _e in w:
                reached.add(g)
    missing = [
        g.name
        for g in tgt.generators
        if g.index not in reached and g.name not in m.expect_unreached
    ]
    out.append((
        "target generators reached",
        not missing,
        f"unreached: {missing}" if missing else "",
    ))
    return out


def apply_star(p: NCPoly, s: StarStructure) -> NCPoly:
    """Antimultiplicative involution: words reversed, letters starred,
    coefficients conjugated per the q-mode."""
    pr = p.preset
    images = {k: parse(v, pr) for k, v in s.images.items()}
    out = NCPoly.zero(pr)
    for w, c in p.terms.items():
        if s.q_mode == "unit" and isinstance(c, QScalar):
            c = c.subs_q_inverse()
        acc = NCPoly.scalar(pr, c)
        for g, e in reversed(w):
            name = pr.generators[g].name
            img = images.get(name)
            if img is None:
                raise AlgebraError(f"star undefined on generator {name}")
            if e != 1:
                from .algebra import _invert_monomial

                base = img if e > 0 else _invert_monomial(img)
                for _ in range(abs(e)):
                    acc = nc_mul(acc, base)
            else:
                acc = nc_mul(acc, img)
        out = out + acc
    return out


# ---------------------------------------------------------------------------
# classical limit


def _classical_word_sort(preset: Preset, w):
    """Sort a word under commutative/anticommutative classical rules.

    Returns (sign, sorted word) or None when an odd letter squares."""
    units = []
    for g, e in w:
        s = 1 if e > 0 else -1
        units.extend([(g, s)] * abs(e))
    sign = 1
    # insertion sort counting degree-1 transpositions
    for i in range(1, len(units)):
        j = i
        while j > 0 and units[j - 1][0] > units[j][0]:
            a, b = units[j - 1], units[j]
            if preset.generators[a[0]].degree == 1 and \
               preset.generators[b[0]].degree == 1:
                sign = -sign
            units[j - 1], units[j] = b, a
            j -= 1
    for i in range(1, len(units)):
        if units[i][0] == units[i - 1][0] and \
           preset.generators[units[i][0]].degree == 1:
            return None
    merged = []
    for g, s in units:
        if merged and merged[-1][0] == g:
            merged[-1] = (g, merged[-1][1] + s)
        else:
            merged.append((g, s))
    return sign, tuple((g, e) for g, e in merged if e)


def classical_limit(p: NCPoly) -> "dict":
    """Coefficients at q = 1 and words re-sorted under the classical
    (anti)commutative rules.  Returns a plain {word: Fraction} map over the
    preset's letters (the q-preset's normal order no longer applies)."""
    preset = p.preset
    out: dict = {}
    for w, c in p.terms.items():
        lim = c.limit_q1() if isinstance(c, QScalar) else Fraction(c)
        if not lim:
            continue
        sorted_ = _classical_word_sort(preset, w)
        if sorted_ is None:
            continue
        sign, sw = sorted_
        val = out.get(sw, Fraction(0)) + sign * lim
        if val:
            out[sw] = val
        elif sw in out:
            del out[sw]
    return out


def classical_rules_report(p: Preset):
    """Classify every rule's classical limit; used by the reduction suite."""
    from .presets import _is_collapse

    entries = []
    for rule in p.rules.values():
        if rule.key() in p.classical_exempt:
            entries.append((p.pretty_key(rule), "exempt", ""))
            continue
        if rule.g == rule.h:
            ok = all(
                (c.limit_q1() if isinstance(c, QScalar) else c) == 0
                for c in rule.rhs.values()
            )
            entries.append((p.pretty_key(rule) + " (square)",
                            "pass" if ok else "fail", ""))
            continue
        gdeg = p.generators[rule.g].degree
        hdeg = p.generators[rule.h].degree
        mirror = _make_word(p, [(rule.h, rule.sh), (rule.g, rule.sg)])
        expected = -1 if (gdeg == 1 and hdeg == 1) else 1
        if mirror not in rule.rhs:
            entries.append((p.pretty_key(rule), "constraint",
                            "survives classically as a relation"))
            continue
        ok = True
        for w, c in rule.rhs.items():
            lim = c.limit_q1() if isinstance(c, QScalar) else c
            if w == mirror:
                ok = ok and lim == expected
            else:
                ok = ok and lim == 0
        entries.append((p.pretty_key(rule), "pass" if ok else "fail", ""))
    return entries
