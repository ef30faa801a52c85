"""The four duality constructions and their adjunctions.

From a dg Lie algebra: the completed symmetric cochain algebra on the
shifted dual (`ce`).  From a local commutative Artinian algebra: the free
dg Lie algebra on the shifted dual of its maximal ideal (`harrison`).
The associative analogues `bar` (completed tensor) and `cobar` (free
tensor).  All four produce quadratic-linear presentations that can be
materialized as finite-dimensional dg algebras by weight truncation, and
the three-way adjunction correspondences are implemented constructively
at element level.

Sign conventions (fixed once, see docs/conventions.md): writing s_u for
the generator dual to a basis element u, with |s_u| = 1 - |u|,

    d_lin(s_k)  =  sum_i (-1)^|u_i| D_ki s_i
    d_quad(s_k) = -sum_{i,j} (-1)^(|u_i| (1 + |u_j|)) M^k_ij  s_i s_j

where d(u_i) = sum_k D_ki u_k and u_i u_j = sum_k M^k_ij u_k.  These are
exactly the signs making a generator assignment a chain map if and only
if the corresponding tensor element is Maurer-Cartan; the symmetric
flavor carries an extra 1/2 matching the Lie-side master equation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .assoc import (DgAlgebra, GaugeElement, augmentation_ideal, check_axioms,
                    is_commutative, mc_check, nilpotency_index, tensor_algebra)
from .freelie import FreeLieBasis, WORD_SEP, split_word, word_label
from .graded import (GradedMap, GradedSpace, Vec, split_tensor_label,
                     tensor_label)
from .lie import DgLieAlgebra, check_lie_axioms, mc_check_lie, tensor_lie

GEN_MARK = "'"
UNIT_WORD = "1"

SYMMETRIC = "symmetric"
TENSOR = "tensor"
LIE = "lie"


# ---------------------------------------------------------------------------
# local Artinian algebras and ideal data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalArtinianAlgebra:
    """A finite-dimensional augmented dg algebra whose augmentation ideal
    is spanned by basis labels and nilpotent."""
    algebra: DgAlgebra
    ideal_labels: tuple[str, ...]
    nilpotency: int

    @property
    def commutative(self) -> bool:
        return is_commutative(self.algebra)


def local_artinian(alg: DgAlgebra) -> LocalArtinianAlgebra:
    if alg.augmentation is None or alg.unit is None:
        raise ValueError("a local algebra needs a unit and an augmentation")
    ideal = augmentation_ideal(alg)  # validates label-spanned kernel
    n = nilpotency_index(ideal)
    return LocalArtinianAlgebra(alg, tuple(ideal.space.labels()), n)


@dataclass(frozen=True)
class IdealData:
    """The multiplication and differential of a finite-dimensional
    non-unital algebra or Lie algebra, the common input shape for the
    four duality constructions."""
    space: GradedSpace
    d: dict[str, Vec]
    mul: dict[tuple[str, str], Vec]


def ideal_data_of_artinian(a: LocalArtinianAlgebra) -> IdealData:
    ideal = augmentation_ideal(a.algebra)
    return IdealData(ideal.space, dict(ideal.differential.entries), dict(ideal.products))


def ideal_data_of_augmented(alg: DgAlgebra) -> IdealData:
    ideal = augmentation_ideal(alg)
    return IdealData(ideal.space, dict(ideal.differential.entries), dict(ideal.products))


def ideal_data_of_lie(g: DgLieAlgebra) -> IdealData:
    return IdealData(g.space, dict(g.differential.entries), dict(g.brackets))


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

def generator_label(ideal_label: str) -> str:
    return ideal_label + GEN_MARK


def base_label(gen_label: str) -> str:
    if not gen_label.endswith(GEN_MARK):
        raise ValueError(f"{gen_label!r} is not a generator label")
    return gen_label[:-len(GEN_MARK)]


class Presentation:
    """A quadratic-linear presentation of a (completed) free algebra.

    flavor is one of 'symmetric', 'tensor', 'lie'; `completed` records
    whether the intended ambient algebra is completed (d data is the
    same either way; truncations coincide).  d_linear maps generators to
    generator Vecs, d_quadratic to Vecs over two-letter words; for the
    symmetric flavor the words are canonically sorted, for tensor and
    lie flavors they are plain tensor words (lie quadratic parts lie in
    the image of the bracket, which `harrison` validates).
    """

    def __init__(self, flavor: str, completed: bool, generators: GradedSpace,
                 d_linear: dict[str, Vec], d_quadratic: dict[str, Vec]):
        if flavor not in (SYMMETRIC, TENSOR, LIE):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.flavor = flavor
        self.completed = completed
        self.generators = generators
        self.d_linear = {k: v for k, v in d_linear.items() if v}
        self.d_quadratic = {k: v for k, v in d_quadratic.items() if v}
        for k, v in self.d_linear.items():
            want = generators.degree_of(k) + 1
            if generators.degree_of_vec(v) != want:
                raise ValueError(f"linear differential of {k} has wrong degree")
        for k, v in self.d_quadratic.items():
            want = generators.degree_of(k) + 1
            for w in v.labels():
                if self.word_degree(w) != want:
                    raise ValueError(f"quadratic differential of {k} has wrong degree")

    def word_degree(self, word: str) -> int:
        return sum(self.generators.degree_of(l) for l in split_word(word))

    def d_of_generator(self, gen: str) -> Vec:
        return self.d_linear.get(gen, Vec()) + self.d_quadratic.get(gen, Vec())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Presentation)
                and self.flavor == other.flavor
                and self.completed == other.completed
                and self.generators == other.generators
                and self.d_linear == other.d_linear
                and self.d_quadratic == other.d_quadratic)

    def __repr__(self) -> str:
        kind = f"{self.flavor}{' (completed)' if self.completed else ''}"
        return f"Presentation[{kind}] on {self.generators.total_dim()} generators"


def symmetric_canonical(word: tuple[str, ...], gens: GradedSpace) -> tuple[tuple[str, ...] | None, int]:
    """Sort a word into generator order with the Koszul sign; repeated
    odd letters make it zero (returned as (None, 0))."""
    pos = {l: i for i, l in enumerate(gens.labels())}
    letters = list(word)
    sign = 1
    for i in range(1, len(letters)):
        j = i
        while j > 0 and pos[letters[j - 1]] > pos[letters[j]]:
            if gens.degree_of(letters[j - 1]) % 2 and gens.degree_of(letters[j]) % 2:
                sign = -sign
            letters[j - 1], letters[j] = letters[j], letters[j - 1]
            j -= 1
    for i in range(1, len(letters)):
        if letters[i] == letters[i - 1] and gens.degree_of(letters[i]) % 2:
            return None, 0
    return tuple(letters), sign


def symmetrize_words(v: Vec, gens: GradedSpace) -> Vec:
    out = Vec()
    for w, c in v.items():
        canon, sign = symmetric_canonical(split_word(w), gens)
        if canon is not None:
            out = out + Vec({word_label(canon): sign * c})
    return out


def _presentation_data(ideal: IdealData) -> tuple[GradedSpace, dict[str, Vec], dict[str, Vec]]:
    """Generators and raw (tensor-word) differential data from ideal data."""
    degrees: dict[int, list[str]] = {}
    for deg in sorted(ideal.space.degrees):
        for u in ideal.space.degrees[deg]:
            degrees.setdefault(1 - deg, []).append(generator_label(u))
    gens = GradedSpace(degrees)

    lin: dict[str, Vec] = {}
    for u_i in ideal.space.labels():
        du = ideal.d.get(u_i)
        if not du:
            continue
        sign = -1 if ideal.space.degree_of(u_i) % 2 else 1
        for u_k, c in du.items():
            sk = generator_label(u_k)
            lin[sk] = lin.get(sk, Vec()) + Vec({generator_label(u_i): sign * c})

    quad: dict[str, Vec] = {}
    for (u_i, u_j), prod in ideal.mul.items():
        di = ideal.space.degree_of(u_i)
        dj = ideal.space.degree_of(u_j)
        sign = -1 if (di % 2) * (1 + dj) % 2 else 1
        word = word_label((generator_label(u_i), generator_label(u_j)))
        for u_k, c in prod.items():
            sk = generator_label(u_k)
            quad[sk] = quad.get(sk, Vec()) + Vec({word: -sign * c})
    return gens, lin, quad


def cobar(a: LocalArtinianAlgebra) -> Presentation:
    """The free tensor algebra on the shifted dual of the maximal ideal,
    with the quadratic-linear differential dual to (d, product)."""
    gens, lin, quad = _presentation_data(ideal_data_of_artinian(a))
    return Presentation(TENSOR, False, gens, lin, quad)


def bar(g: DgAlgebra) -> Presentation:
    """The completed tensor algebra on the shifted dual of the
    augmentation ideal of an augmented dg algebra."""
    if g.augmentation is None:
        raise ValueError("bar input must be augmented")
    gens, lin, quad = _presentation_data(ideal_data_of_augmented(g))
    return Presentation(TENSOR, True, gens, lin, quad)


def harrison(a: LocalArtinianAlgebra) -> Presentation:
    """The free dg Lie algebra on the shifted dual of the maximal ideal
    of a commutative local algebra; rejects non-commutative input and
    validates that the quadratic part lies in the free-Lie subspace."""
    if not a.commutative:
        raise ValueError("harrison input must be graded-commutative")
    gens, lin, quad = _presentation_data(ideal_data_of_artinian(a))
    basis = FreeLieBasis(gens, 2)
    for k, v in quad.items():
        if basis.rewrite(v, 2) is None:
            raise AssertionError(
                f"quadratic differential of {k} is outside the Lie subspace")
    return Presentation(LIE, False, gens, lin, quad)


def ce(g: DgLieAlgebra) -> Presentation:
    """The completed symmetric algebra on the shifted dual of a
    finite-dimensional dg Lie algebra; the Lie-side master equation puts
    a 1/2 on the quadratic part."""
    gens, lin, quad = _presentation_data(ideal_data_of_lie(g))
    sym_quad = {k: symmetrize_words(v, gens).scale(Fraction(1, 2))
                for k, v in quad.items()}
    return Presentation(SYMMETRIC, True, gens, lin, sym_quad)


# ---------------------------------------------------------------------------
# the induced derivation and d**2 on generators
# ---------------------------------------------------------------------------

def _derivation_on_word(p: Presentation, word: tuple[str, ...]) -> Vec:
    """d of a word, as a derivation, valued in tensor words (canonical
    words for the symmetric flavor)."""
    out = Vec()
    sign = 1
    for j, letter in enumerate(word):
        img = p.d_of_generator(letter)
        for w, c in img.items():
            new_word = word[:j] + split_word(w) + word[j + 1:]
            if p.flavor == SYMMETRIC:
                canon, s2 = symmetric_canonical(new_word, p.generators)
                if canon is not None:
                    out = out + Vec({word_label(canon): sign * s2 * c})
            else:
                out = out + Vec({word_label(new_word): sign * c})
        if p.generators.degree_of(letter) % 2:
            sign = -sign
    return out


def d_squared_on_generators(p: Presentation) -> dict[str, Vec]:
    """d(d(s)) for each generator, expanded through weight 3; all values
    must vanish for a valid presentation."""
    out = {}
    for gen in p.generators.labels():
        ds = p.d_of_generator(gen)
        if p.flavor == SYMMETRIC:
            ds = symmetrize_words(ds, p.generators)
        total = Vec()
        for w, c in ds.items():
            total = total + _derivation_on_word(p, split_word(w)).scale(c)
        out[gen] = total
    return out


def presentation_d_squared_ok(p: Presentation) -> bool:
    return all(not v for v in d_squared_on_generators(p).values())


def stable_degrees(p: Presentation, weight: int) -> int | None:
    """Largest cohomological degree d with every degree <= d unaffected
    by the weight-W truncation, or None when generators in degrees <= 0
    make every degree unstable.

    With all generators in degrees >= 1 a degree-(d+1) word has weight
    at most d+1, so cohomology through degree W-1 is exact; when the
    symmetric algebra is globally finite (all generators odd) and the
    bound covers it, everything is stable."""
    degs = p.generators.degree_list()
    if not degs:
        return 10 ** 9
    if min(degs) <= 0:
        return None
    if p.flavor == SYMMETRIC and all(d % 2 for d in degs) \
            and weight >= p.generators.total_dim():
        return 10 ** 9
    return weight - 1


# ---------------------------------------------------------------------------
# weight truncation
# ---------------------------------------------------------------------------

def _tensor_words(gens: GradedSpace, weight: int) -> list[tuple[str, ...]]:
    out: list[tuple[str, ...]] = [()]
    labels = gens.labels()
    frontier: list[tuple[str, ...]] = [()]
    for _ in range(weight):
        nxt = [w + (l,) for w in frontier for l in labels]
        out.extend(nxt)
        frontier = nxt
    return out


def _symmetric_words(gens: GradedSpace, weight: int) -> list[tuple[str, ...]]:
    out: list[tuple[str, ...]] = [()]
    labels = gens.labels()
    pos = {l: i for i, l in enumerate(labels)}
    frontier: list[tuple[str, ...]] = [()]
    for _ in range(weight):
        nxt = []
        for w in frontier:
            start = pos[w[-1]] if w else 0
            for l in labels[start:]:
                if w and w[-1] == l and gens.degree_of(l) % 2:
                    continue
                nxt.append(w + (l,))
        out.extend(nxt)
        frontier = nxt
    return out


def truncate(p: Presentation, weight: int):
    """Materialize the weight <= W quotient.

    Tensor and symmetric flavors give a unital augmented DgAlgebra (the
    quotient by words of weight > W); the lie flavor gives a DgLieAlgebra
    on the bracketed-Lyndon basis.  The result always passes its axiom
    checker: the dropped span is weight-homogeneous, hence an ideal.
    """
    if weight < 1:
        raise ValueError("weight bound must be >= 1")
    if p.flavor == LIE:
        return _truncate_lie(p, weight)

    words = _tensor_words(p.generators, weight) if p.flavor == TENSOR \
        else _symmetric_words(p.generators, weight)

    def label_of(word: tuple[str, ...]) -> str:
        return UNIT_WORD if not word else word_label(word)

    degrees: dict[int, list[str]] = {}
    for word in words:
        deg = sum(p.generators.degree_of(l) for l in word)
        degrees.setdefault(deg, []).append(label_of(word))
    space = GradedSpace(degrees)

    def mul_words(wa: tuple[str, ...], wb: tuple[str, ...]) -> Vec:
        merged = wa + wb
        if len(merged) > weight:
            return Vec()
        if p.flavor == SYMMETRIC:
            canon, sign = symmetric_canonical(merged, p.generators)
            if canon is None:
                return Vec()
            return Vec({label_of(canon): sign})
        return Vec({label_of(merged): 1})

    products: dict[tuple[str, str], Vec] = {}
    for wa in words:
        for wb in words:
            prod = mul_words(wa, wb)
            if prod:
                products[(label_of(wa), label_of(wb))] = prod

    entries: dict[str, Vec] = {}
    for word in words:
        img = _derivation_on_word(p, word)
        img = Vec((label_of(split_word(w)), c) for w, c in img.items()
                  if len(split_word(w)) <= weight)
        if img:
            entries[label_of(word)] = img
    diff = GradedMap(space, space, 1, entries)
    augmentation = {label_of(()): Fraction(1)}
    return DgAlgebra(space, diff, products, unit=Vec.basis(UNIT_WORD),
                     augmentation=augmentation)


def _truncate_lie(p: Presentation, weight: int) -> DgLieAlgebra:
    basis = FreeLieBasis(p.generators, weight)
    elements = basis.up_to_weight(weight)
    degrees: dict[int, list[str]] = {}
    for e in elements:
        degrees.setdefault(e.degree, []).append(e.label)
    space = GradedSpace(degrees)
    by_label = {e.label: e for e in elements}

    def to_basis(v: Vec, w: int) -> Vec:
        if w > weight or not v:
            return Vec()
        coords = basis.rewrite(v, w)
        if coords is None:
            raise AssertionError("element left the free-Lie subspace")
        return coords

    def tensor_bracket(x: Vec, y: Vec, dx: int, dy: int) -> Vec:
        out = Vec()
        for wx, cx in x.items():
            for wy, cy in y.items():
                tx, ty = split_word(wx), split_word(wy)
                out = out + Vec({word_label(tx + ty): cx * cy})
                sign = -1 if (dx % 2 and dy % 2) else 1
                out = out + Vec({word_label(ty + tx): -sign * cx * cy})
        return out

    brackets: dict[tuple[str, str], Vec] = {}
    for e1 in elements:
        for e2 in elements:
            w = e1.weight + e2.weight
            if w > weight:
                continue
            br = tensor_bracket(e1.expansion, e2.expansion, e1.degree, e2.degree)
            val = to_basis(br, w)
            if val:
                brackets[(e1.label, e2.label)] = val

    entries: dict[str, Vec] = {}
    for e in elements:
        img = Vec()
        for w, c in e.expansion.items():
            img = img + _derivation_on_word(p, split_word(w)).scale(c)
        # split by weight: the derivation may raise weight by one
        per_weight: dict[int, Vec] = {}
        for w, c in img.items():
            per_weight.setdefault(len(split_word(w)), Vec())
            per_weight[len(split_word(w))] = per_weight[len(split_word(w))] + Vec({w: c})
        total = Vec()
        for w_amount, part in sorted(per_weight.items()):
            if w_amount <= weight:
                total = total + to_basis(part, w_amount)
        if total:
            entries[e.label] = total
    diff = GradedMap(space, space, 1, entries)
    return DgLieAlgebra(space, diff, brackets)


# ---------------------------------------------------------------------------
# comparison functors
# ---------------------------------------------------------------------------

def lie_functor(g: DgAlgebra) -> DgLieAlgebra:
    """The commutator dg Lie algebra of the augmentation ideal of an
    augmented dg algebra."""
    ideal = augmentation_ideal(g)
    space = ideal.space
    brackets: dict[tuple[str, str], Vec] = {}
    for a in space.labels():
        for b in space.labels():
            sign = -1 if (space.degree_of(a) % 2 and space.degree_of(b) % 2) else 1
            val = ideal.mul(Vec.basis(a), Vec.basis(b)) - \
                ideal.mul(Vec.basis(b), Vec.basis(a)).scale(sign)
            if val:
                brackets[(a, b)] = val
    return DgLieAlgebra(space, ideal.differential, brackets)


def abelianize(p: Presentation) -> Presentation:
    """Quotient a tensor-flavor presentation by commutators: the same
    generators with the quadratic data pushed into symmetric words."""
    if p.flavor != TENSOR:
        raise ValueError("abelianize expects a tensor-flavor presentation")
    quad = {k: symmetrize_words(v, p.generators) for k, v in p.d_quadratic.items()}
    return Presentation(SYMMETRIC, p.completed, p.generators, dict(p.d_linear), quad)


def forget_commutative(p: Presentation) -> Presentation:
    """Embed a symmetric-flavor presentation into tensor words by
    symmetrization, (1/2)(uv + (-1)^(|u||v|) vu).

    This is a data-level embedding (a coalgebra-style splitting of the
    abelianization); abelianize(forget_commutative(p)) == p.
    """
    if p.flavor != SYMMETRIC:
        raise ValueError("forget expects a symmetric-flavor presentation")
    quad = {}
    for k, v in p.d_quadratic.items():
        out = Vec()
        for w, c in v.items():
            u1, u2 = split_word(w)
            s = -1 if (p.generators.degree_of(u1) % 2 and p.generators.degree_of(u2) % 2) else 1
            half = Fraction(c, 2)
            out = out + Vec({word_label((u1, u2)): half})
            out = out + Vec({word_label((u2, u1)): half * s})
        quad[k] = out
    return Presentation(TENSOR, p.completed, p.generators, dict(p.d_linear), quad)


def enveloping_of_presentation(p: Presentation) -> Presentation:
    """U of a free Lie presentation: the free tensor algebra on the same
    generators with the same differential data."""
    if p.flavor != LIE:
        raise ValueError("expected a free-Lie presentation")
    return Presentation(TENSOR, p.completed, p.generators,
                        dict(p.d_linear), dict(p.d_quadratic))


def as_associative(a: LocalArtinianAlgebra) -> LocalArtinianAlgebra:
    """Forget commutativity of the coefficients (data is unchanged)."""
    if not a.commutative:
        raise ValueError("expected a commutative algebra")
    return a


@dataclass
class ComparisonReport:
    checks: list[tuple[str, bool, str]]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(n, w) for n, ok, w in self.checks if not ok]


def _compare_presentations(lhs: Presentation, rhs: Presentation,
                           weight: int, checks: list, tag: str) -> None:
    checks.append((f"{tag}: generator spaces", lhs.generators == rhs.generators, ""))
    same_lin = lhs.d_linear == rhs.d_linear
    same_quad = lhs.d_quadratic == rhs.d_quadratic
    witness = ""
    if not (same_lin and same_quad):
        for k in lhs.generators.labels():
            if lhs.d_linear.get(k, Vec()) != rhs.d_linear.get(k, Vec()) or \
                    lhs.d_quadratic.get(k, Vec()) != rhs.d_quadratic.get(k, Vec()):
                witness = f"differential of {k}"
                break
    checks.append((f"{tag}: differential data", same_lin and same_quad, witness))
    if lhs.generators != rhs.generators:
        return
    ta, tb = truncate(lhs, weight), truncate(rhs, weight)
    same = (ta.space == tb.space and ta.products == tb.products
            and ta.differential.entries == tb.differential.entries)
    witness = ""
    if not same:
        for key in sorted(set(ta.products) | set(tb.products)):
            if ta.products.get(key) != tb.products.get(key):
                witness = f"product {key}"
                break
        else:
            witness = "differential"
    checks.append((f"{tag}: weight-{weight} truncations", same, witness))


# ---------------------------------------------------------------------------
# functoriality: induced maps of presentations
# ---------------------------------------------------------------------------

def is_algebra_map(f: dict[str, Vec], dom: DgAlgebra, cod: DgAlgebra) -> bool:
    """f given by basis-label images: multiplicative, unital where both
    sides are, augmentation-compatible, and a chain map."""
    def image(v: Vec) -> Vec:
        out = Vec()
        for l, c in v.items():
            out = out + f.get(l, Vec()).scale(c)
        return out

    for a in dom.space.labels():
        img = image(Vec.basis(a))
        if img and cod.space.degree_of_vec(img) != dom.space.degree_of(a):
            return False
        if image(dom.d(Vec.basis(a))) != cod.d(img):
            return False
        for b in dom.space.labels():
            lhs = image(dom.mul(Vec.basis(a), Vec.basis(b)))
            rhs = cod.mul(image(Vec.basis(a)), image(Vec.basis(b)))
            if lhs != rhs:
                return False
    if dom.unit is not None and cod.unit is not None:
        if image(dom.unit) != cod.unit:
            return False
    if dom.augmentation is not None and cod.augmentation is not None:
        for a in dom.space.labels():
            if dom.aug(Vec.basis(a)) != cod.aug(image(Vec.basis(a))):
                return False
    return True


def induced_harrison_map(f: dict[str, Vec], src: LocalArtinianAlgebra,
                         tgt: LocalArtinianAlgebra) -> dict[str, Vec]:
    """The contravariant generator map Harr(tgt) -> Harr(src) induced by
    an algebra map f: src -> tgt, s_(u') -> sum_u <u'*, f(u)> s_u."""
    out: dict[str, Vec] = {}
    for u in src.ideal_labels:
        img = f.get(u, Vec())
        for u_prime, c in img.items():
            key = generator_label(u_prime)
            out[key] = out.get(key, Vec()) + Vec({generator_label(u): c})
    return out


def apply_generator_map(gmap: dict[str, Vec], v: Vec) -> Vec:
    """Extend a generator map multiplicatively over tensor words (the
    maps in question preserve degree, so no signs arise)."""
    from .freelie import split_word, word_label
    out = Vec()
    for w, c in v.items():
        letters = split_word(w)
        terms = [(tuple(), c)]
        for letter in letters:
            img = gmap.get(letter, Vec())
            terms = [(word + split_word(t), coeff * ci)
                     for word, coeff in terms for t, ci in img.items()]
        for word, coeff in terms:
            out = out + Vec({word_label(word): coeff})
    return out


def presentation_map_commutes(gmap: dict[str, Vec], src: Presentation,
                              tgt: Presentation) -> bool:
    """Check d_tgt(gmap(s)) = gmap(d_src(s)) on every generator of src."""
    for gen in src.generators.labels():
        lhs = Vec()
        for l, c in gmap.get(gen, Vec()).items():
            lhs = lhs + tgt.d_of_generator(l).scale(c)
        rhs = apply_generator_map(gmap, src.d_of_generator(gen))
        if lhs != rhs:
            return False
    return True


def comass_check(arg, weight: int = 3) -> ComparisonReport:
    """Instance check of the two commuting comparison squares.

    For a commutative local Artinian algebra: U(Harr(A)) against
    Cobar(As(A)).  For an augmented dg algebra: CE(Lie(g)) against
    Ab(Bar(g)).  Structure constants are compared through the stated
    weight.
    """
    checks: list[tuple[str, bool, str]] = []
    if isinstance(arg, LocalArtinianAlgebra):
        lhs = enveloping_of_presentation(harrison(arg))
        rhs = cobar(as_associative(arg))
        _compare_presentations(lhs, rhs, weight, checks, "U(Harr) vs Cobar(As)")
    elif isinstance(arg, DgAlgebra):
        lhs = ce(lie_functor(arg))
        rhs = abelianize(bar(arg))
        _compare_presentations(lhs, rhs, weight, checks, "CE(Lie) vs Ab(Bar)")
    else:
        raise TypeError("expected a LocalArtinianAlgebra or an augmented DgAlgebra")
    return ComparisonReport(checks)
