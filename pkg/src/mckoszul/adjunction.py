"""Element-level adjunction correspondences.

For a dg Lie algebra g and a commutative local Artinian A, the three
sets

    dg Lie maps  Harr(A) -> g
    MC elements of g (x) I(A)
    continuous algebra maps  CE(g) -> A

carry explicit pairwise bijections, implemented here as conversions
between generator assignments and tensor elements, each with its own
independent validity check.  The associative triple (Cobar, MC, Bar) is
analogous.  Randomized MC elements are produced by lifting along the
powers of the maximal ideal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .assoc import (DgAlgebra, GaugeElement, augmentation_ideal, mc_check,
                    tensor_algebra)
from .duality import (LocalArtinianAlgebra, Presentation, bar, ce, cobar,
                      base_label, generator_label, harrison)
from .freelie import FreeLieBasis, split_word
from .graded import GradedSpace, Vec, split_tensor_label, tensor_label
from .lie import DgLieAlgebra, mc_check_lie, tensor_lie


# ---------------------------------------------------------------------------
# ideal filtration layers
# ---------------------------------------------------------------------------

def ideal_power_layers(a: LocalArtinianAlgebra) -> list[list[str]]:
    """Partition the ideal labels into layers I^k \\ I^(k+1).

    Requires every power of the maximal ideal to be spanned by basis
    labels, true for all shipped fixtures."""
    alg = a.algebra
    labels = list(a.ideal_labels)
    current = set(labels)
    layers: list[list[str]] = []
    k = 1
    while current:
        # labels supporting products of k+1 ideal elements
        products: set[str] = set()
        for x in current:
            for y in labels:
                prod = alg.mul(Vec.basis(x), Vec.basis(y))
                products |= set(prod.labels())
        for x in labels:
            for y in current:
                prod = alg.mul(Vec.basis(x), Vec.basis(y))
                products |= set(prod.labels())
        nxt = products & set(labels)
        layer = sorted(current - nxt, key=labels.index)
        if not layer and nxt == current:
            raise ValueError("ideal filtration does not descend (non-nilpotent?)")
        layers.append(layer)
        current = nxt
        k += 1
        if k > len(labels) + 2:
            raise ValueError("ideal power layers are not label-adapted")
    return layers


# ---------------------------------------------------------------------------
# the Lie-side adjunction
# ---------------------------------------------------------------------------

@dataclass
class LieAdjunction:
    """Conversion hub for (Harr(A) -> g) = MC(g (x) I(A)) = (CE(g) -> A)."""
    coeff: LocalArtinianAlgebra
    lie: DgLieAlgebra
    tensor: DgLieAlgebra              # g (x) I(A)
    harr: Presentation
    ce_pres: Presentation

    @classmethod
    def build(cls, coeff: LocalArtinianAlgebra, g: DgLieAlgebra) -> "LieAdjunction":
        if not coeff.commutative:
            raise ValueError("Lie-side adjunction needs commutative coefficients")
        ideal_alg = augmentation_ideal(coeff.algebra)
        return cls(coeff, g, tensor_lie(g, ideal_alg), harrison(coeff), ce(g))

    # -- conversions --------------------------------------------------------

    def mc_to_lie_map(self, x: Vec) -> dict[str, Vec]:
        """Split x = sum phi(s_u) (x) u along the ideal basis."""
        out: dict[str, Vec] = {generator_label(u): Vec() for u in self.coeff.ideal_labels}
        for label, c in x.items():
            gl, al = split_tensor_label(label)
            key = generator_label(al)
            out[key] = out[key] + Vec({gl: c})
        return {k: v for k, v in out.items() if v}

    def lie_map_to_mc(self, phi: dict[str, Vec]) -> Vec:
        x = Vec()
        for gen, val in phi.items():
            u = base_label(gen)
            for gl, c in val.items():
                x = x + Vec({tensor_label(gl, u): c})
        return x

    def mc_to_ce_map(self, x: Vec) -> dict[str, Vec]:
        """Split x = sum w (x) psi(s_w) along the g basis."""
        out: dict[str, Vec] = {generator_label(w): Vec() for w in self.lie.space.labels()}
        for label, c in x.items():
            gl, al = split_tensor_label(label)
            key = generator_label(gl)
            out[key] = out[key] + Vec({al: c})
        return {k: v for k, v in out.items() if v}

    def ce_map_to_mc(self, psi: dict[str, Vec]) -> Vec:
        x = Vec()
        for gen, val in psi.items():
            w = base_label(gen)
            for al, c in val.items():
                x = x + Vec({tensor_label(w, al): c})
        return x

    # -- validations ---------------------------------------------------------

    def mc_valid(self, x: Vec) -> bool:
        return mc_check_lie(self.tensor, x)

    def lie_map_valid(self, phi: dict[str, Vec]) -> bool:
        """phi extends to a dg Lie map iff it intertwines d on generators.

        The quadratic part of the Harrison differential is rewritten in
        the bracketed-Lyndon weight-2 basis and evaluated through the
        bracket of g."""
        gens = self.harr.generators
        basis = FreeLieBasis(gens, 2)

        def value(gen: str) -> Vec:
            return phi.get(gen, Vec())

        for gen in gens.labels():
            img = value(gen)
            if img and self.lie.space.degree_of_vec(img) != gens.degree_of(gen):
                return False
        for gen in gens.labels():
            lhs = self.lie.d(value(gen))
            rhs = Vec()
            for l, c in self.harr.d_linear.get(gen, Vec()).items():
                rhs = rhs + value(l).scale(c)
            quad = self.harr.d_quadratic.get(gen, Vec())
            if quad:
                coords = basis.rewrite(quad, 2)
                if coords is None:
                    raise AssertionError("harrison quadratic part left the Lie span")
                for bracket_label, c in coords.items():
                    e = next(e for e in basis.weight_block(2) if e.label == bracket_label)
                    val = Vec()
                    for w, cw in e.expansion.items():
                        a, b = split_word(w)
                        val = val + self.lie.bracket(value(a), value(b)).scale(cw)
                    rhs = rhs + val.scale(c)
            if lhs != rhs:
                return False
        return True

    def ce_map_valid(self, psi: dict[str, Vec]) -> bool:
        """psi extends to a continuous algebra map iff it intertwines d
        on generators; generators must land in the maximal ideal."""
        gens = self.ce_pres.generators
        alg = self.coeff.algebra
        ideal = set(self.coeff.ideal_labels)

        def value(gen: str) -> Vec:
            return psi.get(gen, Vec())

        for gen in gens.labels():
            img = value(gen)
            if any(l not in ideal for l in img.labels()):
                return False
            if img and alg.space.degree_of_vec(img) != gens.degree_of(gen):
                return False
        for gen in gens.labels():
            lhs = alg.d(value(gen))
            rhs = Vec()
            for l, c in self.ce_pres.d_linear.get(gen, Vec()).items():
                rhs = rhs + value(l).scale(c)
            for w, c in self.ce_pres.d_quadratic.get(gen, Vec()).items():
                a, b = split_word(w)
                rhs = rhs + alg.mul(value(a), value(b)).scale(c)
            if lhs != rhs:
                return False
        return True

    # -- round trips ----------------------------------------------------------

    def roundtrip_identities(self, x: Vec) -> bool:
        phi = self.mc_to_lie_map(x)
        psi = self.mc_to_ce_map(x)
        return (self.lie_map_to_mc(phi) == x
                and self.ce_map_to_mc(psi) == x
                and self.mc_to_ce_map(self.lie_map_to_mc(phi)) == psi
                and self.mc_to_lie_map(self.ce_map_to_mc(psi)) == phi)

    def correspondence_valid(self, x: Vec) -> bool:
        if not self.mc_valid(x):
            return False
        return (self.lie_map_valid(self.mc_to_lie_map(x))
                and self.ce_map_valid(self.mc_to_ce_map(x))
                and self.roundtrip_identities(x))


# ---------------------------------------------------------------------------
# the associative-side adjunction
# ---------------------------------------------------------------------------

@dataclass
class AssocAdjunction:
    """Conversion hub for (Cobar(A) -> g) = MC(I(g) (x) I(A)) = (Bar(g) -> A)."""
    coeff: LocalArtinianAlgebra
    alg: DgAlgebra                    # augmented
    ideal: DgAlgebra                  # I(g) as a non-unital algebra
    tensor: DgAlgebra                 # I(g) (x) I(A)
    cobar_pres: Presentation
    bar_pres: Presentation

    @classmethod
    def build(cls, coeff: LocalArtinianAlgebra, g: DgAlgebra) -> "AssocAdjunction":
        ideal = augmentation_ideal(g)
        coeff_ideal = augmentation_ideal(coeff.algebra)
        return cls(coeff, g, ideal, tensor_algebra(ideal, coeff_ideal),
                   cobar(coeff), bar(g))

    def mc_to_cobar_map(self, x: Vec) -> dict[str, Vec]:
        out: dict[str, Vec] = {generator_label(u): Vec() for u in self.coeff.ideal_labels}
        for label, c in x.items():
            gl, al = split_tensor_label(label)
            key = generator_label(al)
            out[key] = out[key] + Vec({gl: c})
        return {k: v for k, v in out.items() if v}

    def cobar_map_to_mc(self, phi: dict[str, Vec]) -> Vec:
        x = Vec()
        for gen, val in phi.items():
            u = base_label(gen)
            for gl, c in val.items():
                x = x + Vec({tensor_label(gl, u): c})
        return x

    def mc_to_bar_map(self, x: Vec) -> dict[str, Vec]:
        out: dict[str, Vec] = {generator_label(w): Vec() for w in self.ideal.space.labels()}
        for label, c in x.items():
            gl, al = split_tensor_label(label)
            key = generator_label(gl)
            out[key] = out[key] + Vec({al: c})
        return {k: v for k, v in out.items() if v}

    def bar_map_to_mc(self, psi: dict[str, Vec]) -> Vec:
        x = Vec()
        for gen, val in psi.items():
            w = base_label(gen)
            for al, c in val.items():
                x = x + Vec({tensor_label(w, al): c})
        return x

    def mc_valid(self, x: Vec) -> bool:
        return mc_check(self.tensor, x)

    def _map_valid(self, pres: Presentation, target: DgAlgebra,
                   values: dict[str, Vec], ideal_only: set[str] | None) -> bool:
        gens = pres.generators

        def value(gen: str) -> Vec:
            return values.get(gen, Vec())

        for gen in gens.labels():
            img = value(gen)
            if ideal_only is not None and any(l not in ideal_only for l in img.labels()):
                return False
            if img and target.space.degree_of_vec(img) != gens.degree_of(gen):
                return False
        for gen in gens.labels():
            lhs = target.d(value(gen))
            rhs = Vec()
            for l, c in pres.d_linear.get(gen, Vec()).items():
                rhs = rhs + value(l).scale(c)
            for w, c in pres.d_quadratic.get(gen, Vec()).items():
                a, b = split_word(w)
                rhs = rhs + target.mul(value(a), value(b)).scale(c)
            if lhs != rhs:
                return False
        return True

    def cobar_map_valid(self, phi: dict[str, Vec]) -> bool:
        return self._map_valid(self.cobar_pres, self.ideal, phi, None)

    def bar_map_valid(self, psi: dict[str, Vec]) -> bool:
        return self._map_valid(self.bar_pres, self.coeff.algebra, psi,
                               set(self.coeff.ideal_labels))

    def roundtrip_identities(self, x: Vec) -> bool:
        phi = self.mc_to_cobar_map(x)
        psi = self.mc_to_bar_map(x)
        return (self.cobar_map_to_mc(phi) == x
                and self.bar_map_to_mc(psi) == x
                and self.mc_to_bar_map(self.cobar_map_to_mc(phi)) == psi
                and self.mc_to_cobar_map(self.bar_map_to_mc(psi)) == phi)

    def correspondence_valid(self, x: Vec) -> bool:
        if not self.mc_valid(x):
            return False
        return (self.cobar_map_valid(self.mc_to_cobar_map(x))
                and self.bar_map_valid(self.mc_to_bar_map(x))
                and self.roundtrip_identities(x))


# ---------------------------------------------------------------------------
# randomized MC elements by obstruction lifting
# ---------------------------------------------------------------------------

_COEFF_POOL = [Fraction(n, d) for n in (-2, -1, 1, 2) for d in (1, 2)] + [Fraction(0)]


def _curvature_lie(t: DgLieAlgebra, x: Vec) -> Vec:
    return t.d(x) + t.bracket(x, x).scale(Fraction(1, 2))


def _curvature_assoc(t: DgAlgebra, x: Vec) -> Vec:
    return t.d(x) + t.mul(x, x)


def sample_mc(tensor_obj, layers: list[list[str]], rng: random.Random,
              attempts: int = 60) -> Vec | None:
    """A random MC element of g (x) I(A), built layer by layer along the
    ideal filtration: each stage solves the linear obstruction equation
    and adds a random kernel element.

    `tensor_obj` is the tensor dg Lie algebra or tensor dg algebra; the
    flavor is detected from the object.  Returns None if no element is
    found within the attempt budget."""
    is_lie = isinstance(tensor_obj, DgLieAlgebra)
    curvature = _curvature_lie if is_lie else _curvature_assoc
    space = tensor_obj.space

    layer_of: dict[str, int] = {}
    for k, layer in enumerate(layers, start=1):
        for al in layer:
            layer_of[al] = k

    def labels_in(deg: int, k: int) -> list[str]:
        return [l for l in space.basis_in_degree(deg)
                if layer_of[split_tensor_label(l)[1]] == k]

    for _ in range(attempts):
        x = Vec()
        ok = True
        for k in range(1, len(layers) + 1):
            unknowns = labels_in(1, k)
            targets = labels_in(2, k)
            cur = curvature(tensor_obj, x)
            c_k = [cur.get(t) for t in targets]
            rows = []
            for t in targets:
                row = []
                for u in unknowns:
                    img = tensor_obj.d(Vec.basis(u))
                    row.append(img.get(t))
                rows.append(row)
            if not unknowns:
                if any(c != 0 for c in c_k):
                    ok = False
                    break
                continue
            if rows:
                sol = linalg.solve(rows, [-c for c in c_k])
                kernel = linalg.nullspace(rows)
            else:
                # no constraints in this layer: everything is free
                sol = [Fraction(0)] * len(unknowns)
                kernel = [[Fraction(1) if i == j else Fraction(0)
                           for j in range(len(unknowns))]
                          for i in range(len(unknowns))]
            if sol is None:
                ok = False
                break
            xk = Vec(zip(unknowns, sol))
            for vec in kernel:
                coeff = rng.choice(_COEFF_POOL)
                if coeff:
                    xk = xk + Vec(zip(unknowns, vec)).scale(coeff)
            x = x + xk
        if not ok:
            continue
        flavor_check = mc_check_lie if is_lie else mc_check
        if flavor_check(tensor_obj, x):
            return x
    return None


def random_gauge_parameter(tensor_obj, rng: random.Random) -> Vec:
    """A random degree-0 element (Lie) or degree-0 ideal part (assoc)."""
    labels = tensor_obj.space.basis_in_degree(0)
    return Vec((l, rng.choice(_COEFF_POOL)) for l in labels)


def push_coefficients(f: dict[str, Vec], x: Vec) -> Vec:
    """Apply 1 (x) f to an element of g (x) I(A), for an algebra map f
    given on coefficient basis labels."""
    out = Vec()
    for label, c in x.items():
        gl, al = split_tensor_label(label)
        for al2, c2 in f.get(al, Vec()).items():
            out = out + Vec({tensor_label(gl, al2): c * c2})
    return out


def naturality_square_commutes(adj_src: "LieAdjunction | AssocAdjunction",
                               adj_tgt: "LieAdjunction | AssocAdjunction",
                               f: dict[str, Vec], x: Vec) -> bool:
    """For an algebra map f: A -> A' and an MC element x of g (x) I(A),
    converting the pushed element agrees with pushing the conversions."""
    x2 = push_coefficients(f, x)
    if isinstance(adj_src, LieAdjunction):
        psi, psi2 = adj_src.mc_to_ce_map(x), adj_tgt.mc_to_ce_map(x2)
    else:
        psi, psi2 = adj_src.mc_to_bar_map(x), adj_tgt.mc_to_bar_map(x2)
    for gen in set(psi) | set(psi2):
        pushed = Vec()
        for al, c in psi.get(gen, Vec()).items():
            pushed = pushed + f.get(al, Vec()).scale(c)
        if pushed != psi2.get(gen, Vec()):
            return False
    return True
