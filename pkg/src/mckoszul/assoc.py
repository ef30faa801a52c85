"""Associative dg algebras from structure constants.

Covers unital/augmented and non-unital algebras, Maurer-Cartan elements
(d(x) + x² = 0), the gauge group 1 + nilpotent, the three-dimensional
interval algebra, and the explicit correspondence between gauge
equivalence and homotopy through the interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graded import (GradedMap, GradedSpace, CochainComplex, Vec, _frac,
                     split_tensor_label, tensor, tensor_label)
from . import linalg


class DgAlgebra:
    """A dg algebra presented by structure constants.

    `products[(a, b)]` is the Vec value of the product of basis elements
    a and b (missing pairs are zero).  `unit` is an optional basis
    expression; `augmentation` an optional linear functional given by its
    values on basis labels.  Algebras without a unit model non-unital
    algebras; the same class covers both.
    """

    __slots__ = ("space", "differential", "products", "unit", "augmentation", "_cache")

    def __init__(self, space: GradedSpace, differential: GradedMap,
                 products: dict[tuple[str, str], Vec],
                 unit: Vec | None = None,
                 augmentation: dict[str, Fraction] | None = None):
        if differential.shift != 1 or differential.source != space:
            raise ValueError("differential must be a shift +1 endomorphism")
        self.space = space
        self.differential = differential
        self.products = {k: v for k, v in products.items() if v}
        self.unit = unit
        if augmentation is not None:
            augmentation = {l: _frac(c) for l, c in augmentation.items() if c != 0}
        self.augmentation = augmentation
        self._cache: dict = {}

    # -- arithmetic --------------------------------------------------------

    def d(self, v: Vec) -> Vec:
        return self.differential.apply(v)

    def mul(self, x: Vec, y: Vec) -> Vec:
        out = Vec()
        for a, ca in x.items():
            for b, cb in y.items():
                prod = self.products.get((a, b))
                if prod is not None:
                    out = out + prod.scale(ca * cb)
        return out

    def power(self, x: Vec, n: int) -> Vec:
        if n < 1:
            raise ValueError("power expects n >= 1")
        out = x
        for _ in range(n - 1):
            out = self.mul(out, x)
        return out

    def aug(self, v: Vec) -> Fraction:
        if self.augmentation is None:
            raise ValueError("algebra has no augmentation")
        return sum((c * self.augmentation.get(label, Fraction(0))
                    for label, c in v.items()), Fraction(0))

    def complex(self) -> CochainComplex:
        return CochainComplex(self.space, self.differential)

    def degree_of(self, v: Vec) -> int | None:
        return self.space.degree_of_vec(v)


@dataclass
class AxiomReport:
    """Outcome of the axiom checker; `failures` pairs a check name with a
    witness description."""
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def record(self, name: str, ok: bool, witness: str = "") -> None:
        self.checks.append((name, ok, witness))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(name, w) for name, ok, w in self.checks if not ok]


def check_axioms(alg: DgAlgebra) -> AxiomReport:
    """Degree additivity, associativity, Leibniz, d²=0, unit and
    augmentation laws, each reported with the first failing witness."""
    report = AxiomReport()
    space = alg.space
    labels = space.labels()

    ok, witness = True, ""
    for (a, b), prod in sorted(alg.products.items()):
        want = space.degree_of(a) + space.degree_of(b)
        if space.degree_of_vec(prod) != want:
            ok, witness = False, f"({a},{b}) -> {prod}"
            break
    report.record("degree-additive", ok, witness)

    ok, witness = True, ""
    for a in labels:
        for b in labels:
            for c in labels:
                va, vb, vc = Vec.basis(a), Vec.basis(b), Vec.basis(c)
                lhs = alg.mul(alg.mul(va, vb), vc)
                rhs = alg.mul(va, alg.mul(vb, vc))
                if lhs != rhs:
                    ok, witness = False, f"({a},{b},{c}): {lhs} vs {rhs}"
                    break
            if not ok:
                break
        if not ok:
            break
    report.record("associative", ok, witness)

    ok, witness = True, ""
    for a in labels:
        for b in labels:
            va, vb = Vec.basis(a), Vec.basis(b)
            sign = -1 if space.degree_of(a) % 2 else 1
            lhs = alg.d(alg.mul(va, vb))
            rhs = alg.mul(alg.d(va), vb) + alg.mul(va, alg.d(vb)).scale(sign)
            if lhs != rhs:
                ok, witness = False, f"({a},{b}): d(ab)={lhs}, Leibniz={rhs}"
                break
        if not ok:
            break
    report.record("leibniz", ok, witness)

    bad = alg.complex().square_zero_failure()
    report.record("d-squared", bad is None, "" if bad is None else f"degree {bad}")

    if alg.unit is not None:
        ok, witness = True, ""
        for a in labels:
            va = Vec.basis(a)
            if alg.mul(alg.unit, va) != va or alg.mul(va, alg.unit) != va:
                ok, witness = False, a
                break
        if alg.d(alg.unit):
            ok, witness = False, "d(1) != 0"
        report.record("unit", ok, witness)

    if alg.augmentation is not None:
        ok, witness = True, ""
        if alg.unit is not None and alg.aug(alg.unit) != 1:
            ok, witness = False, "aug(1) != 1"
        for a in labels:
            if alg.aug(alg.d(Vec.basis(a))) != 0:
                ok, witness = False, f"aug(d({a})) != 0"
                break
            for b in labels:
                va, vb = Vec.basis(a), Vec.basis(b)
                if alg.aug(alg.mul(va, vb)) != alg.aug(va) * alg.aug(vb):
                    ok, witness = False, f"aug({a}{b}) != aug({a})aug({b})"
                    break
            if not ok:
                break
        report.record("augmentation", ok, witness)

    return report


def is_commutative(alg: DgAlgebra) -> bool:
    space = alg.space
    for a in space.labels():
        for b in space.labels():
            sign = -1 if (space.degree_of(a) % 2 and space.degree_of(b) % 2) else 1
            if alg.mul(Vec.basis(a), Vec.basis(b)) != \
                    alg.mul(Vec.basis(b), Vec.basis(a)).scale(sign):
                return False
    return True


# ---------------------------------------------------------------------------
# unit adjunction and augmentation ideals
# ---------------------------------------------------------------------------

UNIT_LABEL = "1"


def adjoin_unit(alg: DgAlgebra) -> DgAlgebra:
    """g -> g + k.1 with the augmentation killing g."""
    if alg.space.has_label(UNIT_LABEL):
        raise ValueError("algebra already has a basis label '1'")
    degrees = {deg: list(labels) for deg, labels in alg.space.degrees.items()}
    degrees.setdefault(0, [])
    degrees[0] = [UNIT_LABEL] + degrees[0]
    space = GradedSpace(degrees)
    diff = GradedMap(space, space, 1, dict(alg.differential.entries))
    products = dict(alg.products)
    products[(UNIT_LABEL, UNIT_LABEL)] = Vec.basis(UNIT_LABEL)
    for label in alg.space.labels():
        products[(UNIT_LABEL, label)] = Vec.basis(label)
        products[(label, UNIT_LABEL)] = Vec.basis(label)
    augmentation = {UNIT_LABEL: Fraction(1)}
    return DgAlgebra(space, diff, products, unit=Vec.basis(UNIT_LABEL),
                     augmentation=augmentation)


def augmentation_ideal(alg: DgAlgebra) -> DgAlgebra:
    """The kernel of the augmentation as a non-unital dg algebra.

    Requires the kernel to be spanned by basis labels (true for every
    built-in fixture and every adjoin_unit output).
    """
    if alg.augmentation is None:
        raise ValueError("algebra has no augmentation")
    kernel = [l for l in alg.space.labels() if alg.augmentation.get(l, Fraction(0)) == 0]
    outside = [l for l in alg.space.labels() if l not in kernel]
    if len(outside) != 1:
        raise ValueError("augmentation kernel is not spanned by basis labels")
    keep = set(kernel)
    for l in kernel:
        img = alg.d(Vec.basis(l))
        if any(t not in keep for t in img.labels()):
            raise ValueError("augmentation kernel not closed under d on labels")
    degrees = {deg: [l for l in labels if l in keep]
               for deg, labels in alg.space.degrees.items()}
    space = GradedSpace(degrees)
    diff = GradedMap(space, space, 1,
                     {l: alg.differential.entries[l]
                      for l in kernel if l in alg.differential.entries})
    products = {}
    for a in kernel:
        for b in kernel:
            prod = alg.mul(Vec.basis(a), Vec.basis(b))
            ideal_part = Vec({l: c for l, c in prod.items() if l in keep})
            if ideal_part != prod:
                raise ValueError(f"ideal not closed under products at ({a},{b})")
            if ideal_part:
                products[(a, b)] = ideal_part
    return DgAlgebra(space, diff, products)


# ---------------------------------------------------------------------------
# the interval algebra
# ---------------------------------------------------------------------------

def interval_algebra() -> DgAlgebra:
    """The cochain algebra of the cellular interval: a, b in degree 0 and
    c in degree 1 with d(a) = c, d(b) = -c, unit a + b, and augmentation
    the evaluation at the a-endpoint."""
    space = GradedSpace({0: ("a", "b"), 1: ("c",)})
    diff = GradedMap(space, space, 1, {"a": Vec.basis("c"), "b": Vec.basis("c").scale(-1)})
    products = {
        ("a", "a"): Vec.basis("a"),
        ("b", "b"): Vec.basis("b"),
        ("c", "a"): Vec.basis("c"),
        ("b", "c"): Vec.basis("c"),
        # ab = ba = c**2 = 0; ac = cb = 0 forced by 1 = a + b
    }
    unit = Vec.basis("a") + Vec.basis("b")
    augmentation = {"a": Fraction(1), "b": Fraction(0), "c": Fraction(0)}
    return DgAlgebra(space, diff, products, unit=unit, augmentation=augmentation)


def interval_evaluations() -> tuple[dict[str, Fraction], dict[str, Fraction]]:
    """The two endpoint evaluations (at a and at b) as linear functionals."""
    p1 = {"a": Fraction(1), "b": Fraction(0), "c": Fraction(0)}
    p2 = {"a": Fraction(0), "b": Fraction(1), "c": Fraction(0)}
    return p1, p2


# ---------------------------------------------------------------------------
# Maurer-Cartan elements and the gauge group
# ---------------------------------------------------------------------------

def mc_check(alg: DgAlgebra, x: Vec) -> bool:
    """d(x) + x² = 0 for a degree-1 element."""
    if x and alg.space.degree_of_vec(x) != 1:
        raise ValueError("MC candidates must be homogeneous of degree 1")
    return not (alg.d(x) + alg.mul(x, x))


def nilpotency_index(alg: DgAlgebra) -> int:
    """Smallest N with every product of N basis elements zero.

    Raises ValueError when the algebra (viewed non-unitally; unital
    algebras are rejected) is not nilpotent.  The certificate is cached
    on the algebra.
    """
    if "nilpotency" in alg._cache:
        return alg._cache["nilpotency"]
    if alg.unit is not None:
        raise ValueError("nilpotency certificate applies to non-unital algebras")
    labels = alg.space.labels()
    if not labels:
        return 1
    index = {l: i for i, l in enumerate(labels)}

    def span_rows(vecs: list[Vec]) -> list[list[Fraction]]:
        rows = []
        for v in vecs:
            row = [Fraction(0)] * len(labels)
            for l, c in v.items():
                row[index[l]] = c
            rows.append(row)
        return linalg.row_space_basis(rows)

    current = [Vec.basis(l) for l in labels]
    current_rows = span_rows(current)
    n = 1
    while current_rows:
        nxt = []
        for v in current:
            for l in labels:
                prod = alg.mul(v, Vec.basis(l))
                if prod:
                    nxt.append(prod)
        nxt_rows = span_rows(nxt)
        if nxt_rows == current_rows:
            raise ValueError("algebra is not nilpotent")
        current = [Vec(zip(labels, row)) for row in nxt_rows]
        current_rows = nxt_rows
        n += 1
        if n > len(labels) + 1:
            raise ValueError("algebra is not nilpotent")
    alg._cache["nilpotency"] = n
    return n


@dataclass(frozen=True)
class GaugeElement:
    """A degree-0 group element 1 + i with i in the nilpotent ideal.

    Only the ideal part is stored; the unit is implicit, so the same
    representation works in non-unital algebras.
    """
    algebra: DgAlgebra
    ideal_part: Vec

    def __post_init__(self):
        if self.ideal_part and self.algebra.space.degree_of_vec(self.ideal_part) != 0:
            raise ValueError("gauge elements have degree-0 ideal part")

    def inverse_ideal_part(self) -> Vec:
        """j with (1+i)(1+j) = 1: the finite geometric series
        sum_{k>=1} (-i)^k, terminating by nilpotency."""
        alg = self.algebra
        n = nilpotency_index(alg)
        out = Vec()
        power = self.ideal_part.scale(-1)
        for _ in range(n):
            if not power:
                break
            out = out + power
            power = alg.mul(power, self.ideal_part.scale(-1))
        return out

    def mul(self, other: "GaugeElement") -> "GaugeElement":
        """(1+i)(1+j) = 1 + (i + j + ij)."""
        alg = self.algebra
        i, j = self.ideal_part, other.ideal_part
        return GaugeElement(alg, i + j + alg.mul(i, j))

    def act(self, x: Vec) -> Vec:
        """g.x = g x g^{-1} - d(g) g^{-1} computed inside the ideal."""
        alg = self.algebra
        i = self.ideal_part
        j = self.inverse_ideal_part()
        gx = x + alg.mul(i, x)                      # (1+i)x
        gxg = gx + alg.mul(gx, j)                   # (1+i)x(1+j)
        dg = alg.d(i)                               # d(1+i) = d(i)
        dgg = dg + alg.mul(dg, j)                   # d(g)(1+j)
        return gxg - dgg


def gauge_act(alg: DgAlgebra, g: GaugeElement, x: Vec) -> Vec:
    """Apply a gauge transformation to an MC element; the result is
    asserted to satisfy MC again."""
    if g.algebra is not alg and g.algebra != alg:
        raise ValueError("gauge element belongs to a different algebra")
    if not mc_check(alg, x):
        raise ValueError("input is not Maurer-Cartan")
    out = g.act(x)
    if not mc_check(alg, out):
        raise AssertionError("gauge action failed to preserve MC")
    return out


# ---------------------------------------------------------------------------
# tensor products of algebras
# ---------------------------------------------------------------------------

def tensor_algebra(left: DgAlgebra, right: DgAlgebra) -> DgAlgebra:
    """Tensor product with the Koszul-signed product
    (x (x) a)(y (x) b) = (-1)^(|a||y|) xy (x) ab."""
    space = tensor(left.space, right.space)
    entries: dict[str, Vec] = {}
    for xl in left.space.labels():
        for al in right.space.labels():
            lbl = tensor_label(xl, al)
            img = Vec()
            dx = left.d(Vec.basis(xl))
            for t, c in dx.items():
                img = img + Vec({tensor_label(t, al): c})
            sign = -1 if left.space.degree_of(xl) % 2 else 1
            da = right.d(Vec.basis(al))
            for t, c in da.items():
                img = img + Vec({tensor_label(xl, t): sign * c})
            if img:
                entries[lbl] = img
    diff = GradedMap(space, space, 1, entries)
    products: dict[tuple[str, str], Vec] = {}
    for xl in left.space.labels():
        for al in right.space.labels():
            for yl in left.space.labels():
                for bl in right.space.labels():
                    sign = -1 if (right.space.degree_of(al) % 2
                                  and left.space.degree_of(yl) % 2) else 1
                    xy = left.mul(Vec.basis(xl), Vec.basis(yl))
                    ab = right.mul(Vec.basis(al), Vec.basis(bl))
                    if not xy or not ab:
                        continue
                    out = Vec()
                    for t1, c1 in xy.items():
                        for t2, c2 in ab.items():
                            out = out + Vec({tensor_label(t1, t2): sign * c1 * c2})
                    products[(tensor_label(xl, al), tensor_label(yl, bl))] = out
    unit = None
    if left.unit is not None and right.unit is not None:
        unit = Vec()
        for t1, c1 in left.unit.items():
            for t2, c2 in right.unit.items():
                unit = unit + Vec({tensor_label(t1, t2): c1 * c2})
    augmentation = None
    if left.augmentation is not None and right.augmentation is not None:
        augmentation = {}
        for t1 in left.space.labels():
            for t2 in right.space.labels():
                augmentation[tensor_label(t1, t2)] = \
                    left.augmentation.get(t1, Fraction(0)) * \
                    right.augmentation.get(t2, Fraction(0))
    return DgAlgebra(space, diff, products, unit=unit, augmentation=augmentation)


# ---------------------------------------------------------------------------
# homotopy through the interval  <->  gauge equivalence
# ---------------------------------------------------------------------------

def homotopy_decompose(z: Vec) -> tuple[Vec, Vec, Vec]:
    """Split z in g (x) Int along the interval basis: z = z1 (x) a +
    z2 (x) b + h (x) c, returning (z1, z2, h) as elements of g."""
    z1, z2, h = Vec(), Vec(), Vec()
    for label, c in z.items():
        g_label, int_label = split_tensor_label(label)
        if int_label == "a":
            z1 = z1 + Vec({g_label: c})
        elif int_label == "b":
            z2 = z2 + Vec({g_label: c})
        elif int_label == "c":
            h = h + Vec({g_label: c})
        else:
            raise ValueError(f"{label!r} is not a g(x)Int basis label")
    return z1, z2, h


def homotopy_identity_holds(alg: DgAlgebra, z1: Vec, z2: Vec, h: Vec) -> bool:
    """The degreewise identity d(h) = (1+h) z1 - z2 (1+h) inside the
    unitalization, written in ideal terms."""
    lhs = alg.d(h)
    rhs = z1 + alg.mul(h, z1) - z2 - alg.mul(z2, h)
    return lhs == rhs


def homotopy_to_gauge(alg: DgAlgebra, tensor_alg: DgAlgebra, z: Vec) -> tuple[GaugeElement, Vec, Vec]:
    """From an MC element of g (x) Int produce the gauge element 1 + h
    with (1+h) . z1 = z2.  Returns (gauge, z1, z2)."""
    if not mc_check(tensor_alg, z):
        raise ValueError("input is not MC in g(x)Int")
    z1, z2, h = homotopy_decompose(z)
    g = GaugeElement(alg, h)
    if gauge_act(alg, g, z1) != z2:
        raise AssertionError("homotopy decomposition failed to produce a gauge witness")
    return g, z1, z2


def gauge_to_homotopy(alg: DgAlgebra, tensor_alg: DgAlgebra, x: Vec, g: GaugeElement) -> Vec:
    """The explicit homotopy z = x (x) a + (g.x) (x) b + i (x) c joining
    x to its gauge transform; the MC property of z is verified."""
    gx = gauge_act(alg, g, x)
    z = Vec()
    for l, c in x.items():
        z = z + Vec({tensor_label(l, "a"): c})
    for l, c in gx.items():
        z = z + Vec({tensor_label(l, "b"): c})
    for l, c in g.ideal_part.items():
        z = z + Vec({tensor_label(l, "c"): c})
    if not mc_check(tensor_alg, z):
        raise AssertionError("constructed homotopy is not MC")
    return z


def evaluate_interval_factor(z: Vec, point: dict[str, Fraction]) -> Vec:
    """Apply id (x) p to an element of g (x) Int, where p is an
    evaluation functional on Int."""
    out = Vec()
    for label, c in z.items():
        g_label, int_label = split_tensor_label(label)
        out = out + Vec({g_label: c * point.get(int_label, Fraction(0))})
    return out


@dataclass(frozen=True)
class MCWitness:
    """An MC element with optional certificates relating it to another."""
    element: Vec
    other: Vec | None = None
    gauge: GaugeElement | None = None
    homotopy: Vec | None = None
