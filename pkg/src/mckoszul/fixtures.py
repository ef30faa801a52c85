"""Built-in algebra fixtures.

Every named example from the theory is one lookup away: the interval
algebra, sl2, Heisenberg, dual numbers, k x k, the exterior algebra on a
degree-3 generator, truncated polynomial rings, the spheres k + Sigma^n k,
and a few nilpotent dg (Lie) algebras with interesting Maurer-Cartan
sets used by the property suites.  Names of the form ce-sl2, bar-k-cross-k,
cobar-dual-numbers, harr-lambda-x resolve to presentations derived from
the base fixture.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .assoc import DgAlgebra, interval_algebra
from .duality import (LocalArtinianAlgebra, Presentation, bar, ce, cobar,
                      harrison, local_artinian)
from .graded import GradedMap, GradedSpace, Vec
from .lie import DgLieAlgebra


def _unital(degrees, products, diffs=None, augmentation=None) -> DgAlgebra:
    space = GradedSpace(degrees)
    diff = GradedMap(space, space, 1, diffs or {})
    prods = dict(products)
    unit = Vec.basis("1")
    for l in space.labels():
        prods.setdefault(("1", l), Vec.basis(l))
        prods.setdefault((l, "1"), Vec.basis(l))
    aug = {"1": Fraction(1)}
    if augmentation:
        aug.update(augmentation)
    return DgAlgebra(space, diff, prods, unit=unit, augmentation=aug)


def ground_field() -> DgAlgebra:
    return _unital({0: ("1",)}, {})


def dual_numbers() -> DgAlgebra:
    """k[eps]/eps^2 with eps in degree 0."""
    return _unital({0: ("1", "eps")}, {})


def k_eps_3() -> DgAlgebra:
    """k[eps]/eps^3."""
    return _unital({0: ("1", "eps", "eps2")},
                   {("eps", "eps"): Vec.basis("eps2")})


def lambda_x() -> DgAlgebra:
    """The exterior algebra on one generator in degree 3."""
    return _unital({0: ("1",), 3: ("x",)}, {})


def k_cross_k() -> DgAlgebra:
    """k x k, two orthogonal idempotents, augmented onto the first."""
    space = GradedSpace({0: ("u", "v")})
    diff = GradedMap.zero(space, space, 1)
    products = {("u", "u"): Vec.basis("u"), ("v", "v"): Vec.basis("v")}
    return DgAlgebra(space, diff, products, unit=Vec.basis("u") + Vec.basis("v"),
                     augmentation={"u": Fraction(1), "v": Fraction(0)})


def sphere(n: int) -> DgAlgebra:
    """k + Sigma^n k with zero multiplication on the shifted line; the
    generator sits in degree -n under the cohomological shift."""
    return _unital({0: ("1",), -n: ("x",)}, {})


def int_dual() -> DgAlgebra:
    """A 4-dimensional local algebra whose cobar presentation has
    generators in degrees 1, 1, 2 with both linear and quadratic
    differential terms: p, q in degree 0 with p^2 = q, r in degree -1
    with d(r) = q."""
    return _unital({0: ("1", "p", "q"), -1: ("r",)},
                   {("p", "p"): Vec.basis("q")},
                   diffs={"r": Vec.basis("q")})


def assoc4() -> DgAlgebra:
    """Non-unital nilpotent: p (deg 0), z, w (deg 1), m (deg 2) with
    pz = w, z^2 = m, d(p) = w and d(z) = -m.  The MC set is the
    nonlinear family {a z + b w : a in {0, 1}} and the gauge element
    1 + c p sends it to a z + (b + ca - c) w."""
    space = GradedSpace({0: ("p",), 1: ("z", "w"), 2: ("m",)})
    diff = GradedMap(space, space, 1, {"p": Vec.basis("w"), "z": Vec({"m": -1})})
    products = {("p", "z"): Vec.basis("w"), ("z", "z"): Vec.basis("m")}
    return DgAlgebra(space, diff, products)


def ut3(with_differential: bool = False) -> DgAlgebra:
    """Strictly upper-triangular 3x3 matrices with e12 e23 = e13 the only
    nonzero product.  Without a differential the grading is e12 in
    degree 0, e23 and e13 in degree 1; the differential variant regrades
    to e23 in degree 0, e12 and e13 in degree 1, with d(e23) = e13."""
    if with_differential:
        space = GradedSpace({0: ("e23",), 1: ("e12", "e13")})
        diff = GradedMap(space, space, 1, {"e23": Vec.basis("e13")})
    else:
        space = GradedSpace({0: ("e12",), 1: ("e23", "e13")})
        diff = GradedMap(space, space, 1, {})
    products = {("e12", "e23"): Vec.basis("e13")}
    return DgAlgebra(space, diff, products)


def sl2() -> DgLieAlgebra:
    space = GradedSpace({0: ("e", "f", "h")})
    brackets = {("h", "e"): Vec({"e": 2}),
                ("h", "f"): Vec({"f": -2}),
                ("e", "f"): Vec({"h": 1})}
    return DgLieAlgebra.from_half_table(space, GradedMap.zero(space, space, 1), brackets)


def heisenberg() -> DgLieAlgebra:
    space = GradedSpace({0: ("x", "y", "z")})
    return DgLieAlgebra.from_half_table(
        space, GradedMap.zero(space, space, 1), {("x", "y"): Vec.basis("z")})


def abelian(n: int, degrees: list[int] | None = None) -> DgLieAlgebra:
    degs = degrees if degrees is not None else [0] * n
    if len(degs) != n:
        raise ValueError("need one degree per generator")
    by_degree: dict[int, list[str]] = {}
    for i, d in enumerate(degs):
        by_degree.setdefault(d, []).append(f"a{i + 1}")
    space = GradedSpace(by_degree)
    return DgLieAlgebra(space, GradedMap.zero(space, space, 1), {})


def g2dim() -> DgLieAlgebra:
    """x in degree 1 with [x,x] = 2y and d(x) = -y; x is Maurer-Cartan."""
    space = GradedSpace({1: ("x",), 2: ("y",)})
    diff = GradedMap(space, space, 1, {"x": Vec({"y": -1})})
    return DgLieAlgebra(space, diff, {("x", "x"): Vec({"y": 2})})


def nil3() -> DgLieAlgebra:
    """The commutator Lie algebra of graded strictly upper-triangular
    matrices: [e12, e23] = e13 with e12 in degree 0."""
    space = GradedSpace({0: ("e12",), 1: ("e23", "e13")})
    return DgLieAlgebra.from_half_table(
        space, GradedMap.zero(space, space, 1),
        {("e12", "e23"): Vec.basis("e13")})


def nil4() -> DgLieAlgebra:
    """w (deg 0), x1, x2 (deg 1), y (deg 2): [w,x1] = x2, [x1,x1] = 2y,
    d(x1) = -y.  MC set {a x1 + b x2 : a in {0,1}}."""
    space = GradedSpace({0: ("w",), 1: ("x1", "x2"), 2: ("y",)})
    diff = GradedMap(space, space, 1, {"x1": Vec({"y": -1})})
    return DgLieAlgebra.from_half_table(
        space, diff,
        {("w", "x1"): Vec.basis("x2"), ("x1", "x1"): Vec({"y": 2})})


def nil4b() -> DgLieAlgebra:
    """The nil4 bracket table with d(w) = x2 as well, so gauge
    transformations see a nonzero d on the gauge parameter."""
    space = GradedSpace({0: ("w",), 1: ("x1", "x2"), 2: ("y",)})
    diff = GradedMap(space, space, 1, {"w": Vec.basis("x2"), "x1": Vec({"y": -1})})
    return DgLieAlgebra.from_half_table(
        space, diff,
        {("w", "x1"): Vec.basis("x2"), ("x1", "x1"): Vec({"y": 2})})


_SIMPLE = {
    "k": ground_field,
    "interval": interval_algebra,
    "dual-numbers": dual_numbers,
    "k-eps-3": k_eps_3,
    "lambda-x": lambda_x,
    "k-cross-k": k_cross_k,
    "int-dual": int_dual,
    "assoc4": assoc4,
    "ut3": lambda: ut3(False),
    "ut3-d": lambda: ut3(True),
    "sl2": sl2,
    "heisenberg": heisenberg,
    "g2dim": g2dim,
    "nil3": nil3,
    "nil4": nil4,
    "nil4b": nil4b,
    "x1": lambda: sphere(1),
    "x2": lambda: sphere(2),
    "x3": lambda: sphere(3),
    "x4": lambda: sphere(4),
}

_DERIVED_PREFIXES = ("ce-", "bar-", "cobar-", "harr-")

_ABELIAN_RE = re.compile(r"^abelian\((\d+)(?:,([\-\d,]+))?\)$")


def fixture_names() -> list[str]:
    return sorted(_SIMPLE) + ["abelian(n[,d1,...])"] + \
        [p + "<fixture>" for p in _DERIVED_PREFIXES]


def describe(name: str) -> str:
    descriptions = {
        "k": "the ground field as a dg algebra",
        "interval": "cochains on the cellular interval (a, b deg 0; c deg 1)",
        "dual-numbers": "k[eps]/eps^2",
        "k-eps-3": "k[eps]/eps^3",
        "lambda-x": "exterior algebra on one degree-3 generator",
        "k-cross-k": "k x k, augmented onto the first factor",
        "int-dual": "4-dim local algebra; cobar generators in degrees 1,1,2",
        "assoc4": "non-unital nilpotent algebra with a nonlinear MC set",
        "ut3": "strictly upper-triangular 3x3, graded, d = 0",
        "ut3-d": "strictly upper-triangular 3x3 with d(e23) = e13",
        "sl2": "the simple Lie algebra sl2",
        "heisenberg": "the Heisenberg Lie algebra [x,y] = z",
        "g2dim": "2-dim dg Lie algebra with an MC generator",
        "nil3": "graded Heisenberg-type: [e12,e23] = e13",
        "nil4": "4-dim nilpotent dg Lie algebra, d(x1) = -y",
        "nil4b": "nil4 with d(w) = x2",
        "x1": "sphere algebra k + S^1 k",
        "x2": "sphere algebra k + S^2 k",
        "x3": "sphere algebra k + S^3 k",
        "x4": "sphere algebra k + S^4 k",
    }
    return descriptions.get(name, "")


class UnknownFixture(KeyError):
    pass


def load(name: str):
    """Resolve a fixture name to a DgAlgebra, DgLieAlgebra, or (for the
    ce-/bar-/cobar-/harr- prefixes) a Presentation."""
    if name in _SIMPLE:
        return _SIMPLE[name]()
    m = _ABELIAN_RE.match(name)
    if m:
        n = int(m.group(1))
        degs = [int(s) for s in m.group(2).split(",")] if m.group(2) else None
        return abelian(n, degs)
    for prefix in _DERIVED_PREFIXES:
        if name.startswith(prefix):
            base = load(name[len(prefix):])
            if prefix == "ce-":
                if not isinstance(base, DgLieAlgebra):
                    raise UnknownFixture(f"{name}: ce- needs a Lie fixture")
                return ce(base)
            if prefix == "bar-":
                if not isinstance(base, DgAlgebra) or base.augmentation is None:
                    raise UnknownFixture(f"{name}: bar- needs an augmented algebra")
                return bar(base)
            artinian = local_artinian(base)
            if prefix == "cobar-":
                return cobar(artinian)
            return harrison(artinian)
    raise UnknownFixture(name)


def load_artinian(name: str) -> LocalArtinianAlgebra:
    base = load(name)
    if not isinstance(base, DgAlgebra):
        raise UnknownFixture(f"{name} is not an associative algebra fixture")
    return local_artinian(base)
