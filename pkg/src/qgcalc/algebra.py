"""Graded noncommutative polynomials and the normal-ordering engine.

Words are run-length encoded tuples ``((gen_index, exponent), ...)``.
A preset fixes the generator list in *normal-form order*: a word is normal
when its letters appear with strictly ascending positions except where no
rewrite rule relates them (opaque pairs keep their written order).
Degree-1 generators (differentials and Maurer-Cartan forms) are nilpotent:
any square collapses to zero during word construction.

Rewrite rules are keyed on adjacent single-letter pairs ``g^s · h^t`` with
s, t in {+1, -1}.  Single-term "q-commutation" rules are stored once for
the (+1, +1) pair; the engine derives all sign variants (g^e h^f =
c^(e*f) h^f g^e).  Multi-term rules need every sign variant they can meet
spelled out in the preset table; a missing variant is a rule-table gap and
raises ``RuleGapError``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .scalars import ONE, ZERO, QScalar

Word = tuple  # ((gen_index, exp), ...)
EMPTY_WORD: Word = ()


class AlgebraError(Exception):
    pass


class RuleGapError(AlgebraError):
    """An adjacent out-of-order generator pair has no covering rule."""


class NonTerminationError(AlgebraError):
    """Rewrite step budget exhausted; the rule table is suspect."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int = 0
    invertible: bool = False
    index: int = -1
    nilpotent: bool = False  # squares collapse to zero (most degree-1 letters)

    def __repr__(self):
        return self.name


@dataclass
class RewriteRule:
    """lhs  g^sg · h^sh  ->  rhs (terms over normal words), with citation."""

    g: int
    sg: int
    h: int
    sh: int
    rhs: dict  # Word -> coeff
    ref: str = ""
    swap_coeff: object = None  # set when rhs is exactly c * (h^sh g^sg)

    def key(self):
        return (self.g, self.sg, self.h, self.sh)


@dataclass
class ProbeSector:
    """Sampling alphabet for the confluence probe."""

    gens: tuple
    max_degree1: Optional[int] = None


class Preset:
    """A named algebra: generators in normal-form order plus a rule table."""

    def __init__(self, name: str, coeff_one=ONE, coeff_zero=ZERO):
        self.name = name
        self.generators: list[Generator] = []
        self.by_name: dict[str, int] = {}
        self.rules: dict[tuple, RewriteRule] = {}
        self.opaque_pairs: set[frozenset] = set()
        self.probe_sectors: list[ProbeSector] = []
        self.diff_map: dict[int, object] = {}  # gen index -> NCPoly image of d(gen)
        self.notes: list[str] = []
        self.one = coeff_one
        self.zero = coeff_zero
        self._nf_cache: dict = {}
        self.guard_limit = 500_000

    # -- construction ---------------------------------------------------

    def add_generator(self, name, degree=0, invertible=False, nilpotent=None) -> Generator:
        if name in self.by_name:
            raise AlgebraError(f"duplicate generator {name!r} in {self.name}")
        if nilpotent is None:
            nilpotent = degree == 1
        g = Generator(name, degree, invertible, len(self.generators), nilpotent)
        self.generators.append(g)
        self.by_name[name] = g.index
        return g

    def set_nilpotent(self, name, value: bool):
        i = self.gen(name)
        old = self.generators[i]
        self.generators[i] = Generator(
            old.name, old.degree, old.invertible, old.index, value
        )
        self._nf_cache.clear()

    def gen(self, name: str) -> int:
        try:
            return self.by_name[name]
        except KeyError:
            raise AlgebraError(f"unknown generator {name!r} in preset {self.name}")

    def add_rule(self, rule: RewriteRule, check=True):
        if rule.key() in self.rules:
            raise AlgebraError(f"{self.name}: duplicate rule for {rule.key()}")
        if check:
            self._check_rule(rule)
        self.rules[rule.key()] = rule
        self._nf_cache.clear()

    def set_opaque(self, name_a, name_b):
        self.opaque_pairs.add(frozenset((self.gen(name_a), self.gen(name_b))))

    # -- rule sanity ------------------------------------------------------

    def word_degree(self, w: Word) -> int:
        gens = self.generators
        return sum(gens[g].degree * abs(e) for g, e in w)

    def _unit_seq(self, w: Word):
        out = []
        for g, e in w:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def measure(self, w: Word):
        units = self._unit_seq(w)
        pos = [g for g, _ in units]
        inv = 0
        for i in range(len(pos)):
            for j in range(i + 1, len(pos)):
                if pos[i] > pos[j]:
                    if frozenset((pos[i], pos[j])) not in self.opaque_pairs:
                        inv += 1
                elif pos[i] == pos[j] and self.generators[pos[i]].degree == 1:
                    # reducible square of a non-nilpotent degree-1 letter
                    inv += 1
        return (inv, len(units), tuple(pos))

    def _check_rule(self, rule: RewriteRule):
        lhs_word = _make_word(self, [(rule.g, rule.sg), (rule.h, rule.sh)])
        if lhs_word is None:
            raise AlgebraError(f"{self.name}: degenerate rule lhs {rule.key()}")
        ldeg = self.word_degree(lhs_word)
        lmeas = self.measure(lhs_word)
        for w in rule.rhs:
            if self.word_degree(w) != ldeg:
                raise AlgebraError(
                    f"{self.name}: rule {rule.key()} does not conserve form-degree"
                )
            if not self.measure(w) < lmeas:
                raise AlgebraError(
                    f"{self.name}: ill-oriented rule {self.pretty_key(rule)}: "
                    f"rhs word {self.word_str(w)} does not decrease the measure"
                )

    def pretty_key(self, rule: RewriteRule):
        def u(g, s):
            n = self.generators[g].name
            return n if s > 0 else n + "^-1"

        return f"{u(rule.g, rule.sg)}*{u(rule.h, rule.sh)}"

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        for g, e in w:
            n = self.generators[g].name
            parts.append(n if e == 1 else f"{n}^{e}")
        return "*".join(parts)

    # -- specialization ----------------------------------------------------

    def specialize(self, q0) -> "Preset":
        """Identical rule table with coefficients evaluated at q = q0.

        Used for the numeric cross-check: normalization over plain
        Fractions must agree with the symbolic verdict.
        """
        q0 = Fraction(q0)
        p = Preset(f"{self.name}@q={q0}", coeff_one=Fraction(1), coeff_zero=Fraction(0))
        for g in self.generators:
            p.add_generator(g.name, g.degree, g.invertible)
        p.opaque_pairs = set(self.opaque_pairs)
        p.probe_sectors = list(self.probe_sectors)
        for rule in self.rules.values():
            rhs = {}
            for w, c in rule.rhs.items():
                v = c.eval_at(q0)
                if v:
                    rhs[w] = v
            sw = rule.swap_coeff.eval_at(q0) if rule.swap_coeff is not None else None
            p.add_rule(
                RewriteRule(rule.g, rule.sg, rule.h, rule.sh, rhs, rule.ref, sw),
                check=False,
            )
        return p

    def clear_cache(self):
        self._nf_cache.clear()


# ---------------------------------------------------------------------------
# word construction


def _make_word(preset: Preset, units: Iterable[tuple]) -> Optional[Word]:
    """RLE-merge a unit/entry sequence; None encodes the zero word.

    Accepts (gen, exp) pairs with any nonzero exponents and merges equal
    neighbours; a degree-1 generator reaching |exp| > 1 collapses to zero.
    """
    out = []
    for g, e in units:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e2 = out[-1][1] + e
            if e2 == 0:
                out.pop()
                continue
            out[-1] = (g, e2)
        else:
            out.append((g, e))
        ge, ee = out[-1]
        gen = preset.generators[ge]
        if gen.degree == 1 and abs(ee) > 1 and gen.nilpotent:
            return None
        if ee < 0 and not gen.invertible:
            raise AlgebraError(
                f"negative exponent on non-invertible generator {gen.name}"
            )
    return tuple(out)


def _word_units(w: Word):
    out = []
    for g, e in w:
        s = 1 if e > 0 else -1
        out.extend([(g, s)] * abs(e))
    return out


# ---------------------------------------------------------------------------
# the normal-ordering core


def _find_redexes(preset: Preset, w: Word):
    """Redex positions in w: ("pair", i) for a rewritable adjacency,
    ("sq", i) for a reducible square of a non-nilpotent degree-1 letter."""
    rules = preset.rules
    gens = preset.generators
    opaque = preset.opaque_pairs
    hits = []
    for i, (g, e) in enumerate(w):
        gen = gens[g]
        if gen.degree == 1 and abs(e) > 1:
            if (g, 1, g, 1) in rules:
                hits.append(("sq", i))
            else:
                raise RuleGapError(
                    f"preset {preset.name}: no square rule for non-nilpotent "
                    f"{gen.name}^2"
                )
        if i + 1 < len(w):
            h, f = w[i + 1]
            sg = 1 if e > 0 else -1
            sh = 1 if f > 0 else -1
            if (g, sg, h, sh) in rules:
                hits.append(("pair", i))
            elif g > h and frozenset((g, h)) not in opaque:
                raise RuleGapError(
                    f"preset {preset.name}: no rule for adjacent pair "
                    f"{gens[g].name}{'^-1' if sg < 0 else ''} * "
                    f"{gens[h].name}{'^-1' if sh < 0 else ''}"
                )
    return hits


def _apply_at(preset: Preset, w: Word, redex):
    """Rewrite one redex; yields (coeff, word-or-None) alternatives."""
    kind, i = redex
    if kind == "sq":
        g, e = w[i]
        rule = preset.rules[(g, 1, g, 1)]
        head = list(w[:i]) + ([(g, e - 2)] if e > 2 else [])
        tail = list(w[i + 1 :])
        return [
            (c, _make_word(preset, head + list(rw) + tail))
            for rw, c in rule.rhs.items()
        ]
    (g, e), (h, f) = w[i], w[i + 1]
    sg = 1 if e > 0 else -1
    sh = 1 if f > 0 else -1
    rule = preset.rules[(g, sg, h, sh)]
    pre = list(w[:i])
    post = list(w[i + 2 :])
    if rule.swap_coeff is not None:
        # whole-entry swap: g^e h^f -> c^(e*f) h^f g^e
        coeff = rule.swap_coeff ** (e * f)
        nw = _make_word(preset, pre + [(h, f), (g, e)] + post)
        return [(coeff, nw)]
    out = []
    head = pre + ([(g, e - sg)] if e != sg else [])
    tail = ([(h, f - sh)] if f != sh else []) + post
    for rw, c in rule.rhs.items():
        nw = _make_word(preset, head + list(rw) + tail)
        out.append((c, nw))
    return out


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left <= 0:
            raise NonTerminationError("rewrite step budget exceeded")


def _normal_word(preset: Preset, w0: Word, strategy, rng, budget, memo):
    """Iterative DAG evaluation: every word's normal form is memoized, so
    shared reducts are normalized once."""
    if w0 is None:
        return {}
    if w0 in memo:
        return memo[w0]
    children: dict = {}
    stack = [w0]
    iters = 0
    while stack:
        iters += 1
        if iters > 40_000_000:
            raise NonTerminationError("normalization did not settle (cycle?)")
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        if cur not in children:
            hits = _find_redexes(preset, cur)
            if not hits:
                memo[cur] = {cur: preset.one}
                stack.pop()
                continue
            budget.spend()
            if strategy == "leftmost":
                redex = hits[0]
            elif strategy == "rightmost":
                redex = hits[-1]
            else:
                redex = rng.choice(hits)
            children[cur] = [
                (c, nw) for c, nw in _apply_at(preset, cur, redex) if nw is not None
            ]
        pending = [nw for _, nw in children[cur] if nw not in memo]
        if pending:
            stack.extend(pending)
            continue
        done: dict = {}
        for c, nw in children[cur]:
            for fw, k in memo[nw].items():
                _acc(done, fw, c * k)
        memo[cur] = done
        del children[cur]
        stack.pop()
    return memo[w0]


def _acc(d: dict, k, v):
    if k in d:
        v = d[k] + v
        if v:
            d[k] = v
        else:
            del d[k]
    elif v:
        d[k] = v


def normal_word(preset: Preset, w: Word, strategy="leftmost", rng=None):
    """Normal form of a single word as a {word: coeff} map."""
    if strategy in ("leftmost", "rightmost"):
        memo = preset._nf_cache.setdefault(strategy, {})
        if len(memo) > 2_000_000:
            memo.clear()
    else:
        memo = {}
    budget = _Budget(preset.guard_limit)
    return _normal_word(preset, w, strategy, rng, budget, memo)


# ---------------------------------------------------------------------------
# polynomials


class NCPoly:
    """Finite QScalar-weighted sum of normal-ordered words over a preset."""

    __slots__ = ("preset", "terms")

    def __init__(self, preset: Preset, terms=None, normalize=False):
        self.preset = preset
        if terms is None:
            terms = {}
        if normalize:
            nt: dict = {}
            for w, c in terms.items():
                if not c:
                    continue
                for nw, k in normal_word(preset, w).items():
                    _acc(nt, nw, c * k)
            terms = nt
        self.terms = terms

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(preset) -> "NCPoly":
        return NCPoly(preset, {})

    @staticmethod
    def one(preset) -> "NCPoly":
        return NCPoly(preset, {EMPTY_WORD: preset.one})

    @staticmethod
    def scalar(preset, c) -> "NCPoly":
        return NCPoly(preset, {EMPTY_WORD: c} if c else {})

    @staticmethod
    def generator(preset, name, exp=1) -> "NCPoly":
        w = _make_word(preset, [(preset.gen(name), exp)])
        return NCPoly(preset, {w: preset.one} if w is not None else {})

    @staticmethod
    def from_units(preset, units, coeff=None) -> "NCPoly":
        w = _make_word(preset, [(preset.gen(n), e) for n, e in units])
        if w is None:
            return NCPoly.zero(preset)
        return NCPoly(preset, {w: coeff if coeff is not None else preset.one}, True)

    # -- basic protocol ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.preset is other.preset and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.preset), frozenset(self.terms.items())))

    def __repr__(self):
        from .expr_io import format_poly

        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------

    def _assert_same(self, other):
        if self.preset is not other.preset:
            raise AlgebraError(
                f"preset mismatch: {self.preset.name} vs {other.preset.name}"
            )

    def __add__(self, other):
        if isinstance(other, (int, QScalar)):
            other = NCPoly.scalar(self.preset, _as_coeff(self.preset, other))
        self._assert_same(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            _acc(t, w, c)
        return NCPoly(self.preset, t)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return NCPoly(self.preset, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, QScalar)):
            other = NCPoly.scalar(self.preset, _as_coeff(self.preset, other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QScalar, Fraction)):
            c = _as_coeff(self.preset, other)
            return NCPoly(
                self.preset, {w: k * c for w, k in self.terms.items() if k * c}
            )
        self._assert_same(other)
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, QScalar, Fraction)):
            return self * other
        return NotImplemented

    def scale(self, c) -> "NCPoly":
        return self * c

    # -- structure -----------------------------------------------------------

    def degree_parts(self) -> dict:
        parts: dict = {}
        for w, c in self.terms.items():
            parts.setdefault(self.preset.word_degree(w), {})[w] = c
        return {d: NCPoly(self.preset, t) for d, t in sorted(parts.items())}


def _as_coeff(preset, x):
    if isinstance(x, int):
        return preset.one * x if x != 1 else preset.one
    return x


def nc_mul(p: NCPoly, r: NCPoly, preset: Preset = None) -> NCPoly:
    """Normal-ordered product."""
    preset = preset or p.preset
    out: dict = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in r.terms.items():
            w = _make_word(preset, list(w1) + list(w2))
            if w is None:
                continue
            c = c1 * c2
            for nw, k in normal_word(preset, w).items():
                _acc(out, nw, c * k)
    return NCPoly(preset, out)


def normal_order(p: NCPoly, preset: Preset = None) -> NCPoly:
    """Idempotent canonicalization (polynomials are kept normal anyway)."""
    preset = preset or p.preset
    return NCPoly(preset, dict(p.terms), normalize=True)


def commutator(p: NCPoly, r: NCPoly, preset: Preset = None) -> NCPoly:
    return nc_mul(p, r, preset) - nc_mul(r, p, preset)


def substitute(p: NCPoly, images: dict, target: Preset) -> NCPoly:
    """Homomorphic image; ``images`` maps source generator names to target
    polynomials (or strings parsed over the target).  Generators absent
    from the map are required to exist in the target under the same name.
    """
    from .expr_io import parse

    cache: dict[int, NCPoly] = {}

    def image_of(idx: int) -> NCPoly:
        if idx in cache:
            return cache[idx]
        name = p.preset.generators[idx].name
        if name in images:
            img = images[name]
            if isinstance(img, str):
                img = parse(img, target)
        else:
            img = NCPoly.generator(target, name)
        cache[idx] = img
        return img

    out = NCPoly.zero(target)
    for w, c in p.terms.items():
        acc = NCPoly.scalar(target, c)
        for g, e in w:
            img = image_of(g)
            if e < 0:
                img = _invert_monomial(img)
                e = -e
            for _ in range(e):
                if not acc:
                    break
                acc = nc_mul(acc, img)
        out = out + acc
    return out


def _invert_monomial(p: NCPoly) -> NCPoly:
    if len(p.terms) != 1:
        raise AlgebraError("cannot invert a non-monomial image")
    [(w, c)] = p.terms.items()
    for g, _ in w:
        if not p.preset.generators[g].invertible:
            raise AlgebraError(
                f"cannot invert image containing {p.preset.generators[g].name}"
            )
    iw = tuple((g, -e) for g, e in reversed(w))
    return NCPoly(p.preset, {iw: ONE / c if isinstance(c, QScalar) else 1 / c}, True)


def grade_split(p: NCPoly):
    """Homogeneous decomposition [(degree, part), ...]; sum of parts == p."""
    return [(d, part) for d, part in p.degree_parts().items()]


# ---------------------------------------------------------------------------
# confluence probe


def random_word(preset: Preset, sector: ProbeSector, rng: random.Random, max_len: int):
    """Random word with at most max_len single-letter factors."""
    gens = [preset.gen(n) for n in sector.gens]
    target = rng.randint(1, max_len)
    units = []
    used = 0
    deg1_used = 0
    while used < target:
        g = rng.choice(gens)
        gen = preset.generators[g]
        if gen.degree == 1:
            if sector.max_degree1 is not None and deg1_used >= sector.max_degree1:
                used += 1
                continue
            deg1_used += 1
            used += 1
            units.append((g, 1))
        else:
            e = rng.choice([-2, -1, 1, 2] if gen.invertible else [1, 2])
            if abs(e) > target - used:
                e = 1 if e > 0 else -1
            used += abs(e)
            units.append((g, e))
    return _make_word(preset, units)


def confluence_probe(preset: Preset, trials=500, max_len=6, seed=0):
    """Normalize random words along different reduction orders.

    Every word is reduced leftmost-innermost and rightmost-innermost; short
    words additionally get a pseudorandom reduction order (the heavy presets
    make fully random orders on long words prohibitively expensive, and two
    orders already decide agreement).  Returns a list of counterexample
    dicts, empty when the rule table is confluent on the sample.
    """
    rng = random.Random(seed)
    sectors = preset.probe_sectors or [
        ProbeSector(tuple(g.name for g in preset.generators))
    ]
    bad = []
    # one memo for the whole probe: each word's random redex choice is frozen
    # on first contact, so the third strategy is a fixed (pseudorandom)
    # reduction order shared across trials
    random_memo: dict = {}
    for t in range(trials):
        sector = sectors[t % len(sectors)]
        w = random_word(preset, sector, rng, max_len)
        if w is None or not w:
            continue
        a = normal_word(preset, w, "leftmost")
        b = normal_word(preset, w, "rightmost")
        results = [a, b]
        if sum(abs(e) for _, e in w) <= 4:
            budget = _Budget(preset.guard_limit)
            results.append(_normal_word(preset, w, "random", rng, budget, random_memo))
        if any(r != results[0] for r in results[1:]):
            bad.append({"word": preset.word_str(w), "sector": sector.gens})
    return bad
