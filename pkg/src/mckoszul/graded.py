"""Graded vector spaces over exact rationals: duals, suspensions, tensor
products with Koszul signs, and cohomology of cochain complexes.

Grading is cohomological throughout: differentials raise degree by one.
All values are immutable after construction; every operation is a pure
function.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg

TENSOR_SEP = "⊗"  # the symbol used in tensor-product basis labels


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Vec:
    """A finite linear combination of named basis elements.

    Coefficients are exact rationals; zero coefficients are dropped, so
    equality is literal dict equality.  Vec does not know which space it
    lives in; degree bookkeeping belongs to GradedSpace/GradedMap.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[str, Fraction] | Iterable[tuple[str, Fraction]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d: dict[str, Fraction] = {}
        for label, c in items:
            c = _frac(c)
            if c == 0:
                continue
            acc = d.get(label, Fraction(0)) + c
            if acc == 0:
                d.pop(label, None)
            else:
                d[label] = acc
        self.coeffs = d

    @classmethod
    def basis(cls, label: str) -> "Vec":
        return cls({label: Fraction(1)})

    @classmethod
    def zero(cls) -> "Vec":
        return cls()

    def items(self):
        return self.coeffs.items()

    def labels(self):
        return self.coeffs.keys()

    def get(self, label: str) -> Fraction:
        return self.coeffs.get(label, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vec) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "Vec") -> "Vec":
        d = dict(self.coeffs)
        for label, c in other.coeffs.items():
            acc = d.get(label, Fraction(0)) + c
            if acc == 0:
                d.pop(label, None)
            else:
                d[label] = acc
        out = Vec.__new__(Vec)
        out.coeffs = d
        return out

    def __sub__(self, other: "Vec") -> "Vec":
        return self + (-other)

    def __neg__(self) -> "Vec":
        return self.scale(Fraction(-1))

    def scale(self, c) -> "Vec":
        c = _frac(c)
        if c == 0:
            return Vec()
        out = Vec.__new__(Vec)
        out.coeffs = {label: c * v for label, v in self.coeffs.items()}
        return out

    def __rmul__(self, c) -> "Vec":
        return self.scale(c)

    def __mul__(self, c) -> "Vec":
        return self.scale(c)

    def map_labels(self, f) -> "Vec":
        return Vec((f(label), c) for label, c in self.coeffs.items())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for label in sorted(self.coeffs):
            c = self.coeffs[label]
            if c == 1:
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{c}*{label}")
        return " + ".join(parts).replace("+ -", "- ")


class GradedSpace:
    """A finite-type graded vector space with a named, ordered basis.

    `degrees` maps an integer degree to the tuple of basis labels sitting
    in that degree.  Labels are unique across the whole space.
    """

    __slots__ = ("degrees", "_degree_of", "_index_of")

    def __init__(self, degrees: Mapping[int, Iterable[str]]):
        clean: dict[int, tuple[str, ...]] = {}
        for deg in sorted(degrees):
            labels = tuple(degrees[deg])
            if labels:
                clean[deg] = labels
        self.degrees = clean
        self._degree_of: dict[str, int] = {}
        self._index_of: dict[str, int] = {}
        for deg, labels in clean.items():
            for i, label in enumerate(labels):
                if label in self._degree_of:
                    raise ValueError(f"duplicate basis label {label!r}")
                self._degree_of[label] = deg
                self._index_of[label] = i

    def degree_of(self, label: str) -> int:
        return self._degree_of[label]

    def has_label(self, label: str) -> bool:
        return label in self._degree_of

    def labels(self) -> list[str]:
        out = []
        for deg in sorted(self.degrees):
            out.extend(self.degrees[deg])
        return out

    def basis_in_degree(self, deg: int) -> tuple[str, ...]:
        return self.degrees.get(deg, ())

    def dim(self, deg: int) -> int:
        return len(self.degrees.get(deg, ()))

    def total_dim(self) -> int:
        return sum(len(v) for v in self.degrees.values())

    def degree_list(self) -> list[int]:
        return sorted(self.degrees)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedSpace) and self.degrees == other.degrees

    def __hash__(self):
        return hash(tuple(sorted((d, v) for d, v in self.degrees.items())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}: [{', '.join(v)}]" for d, v in sorted(self.degrees.items()))
        return "GradedSpace({" + inner + "})"

    def degree_of_vec(self, v: Vec) -> int | None:
        """Degree of a homogeneous vector; None for 0 or mixed vectors."""
        degs = {self._degree_of[label] for label in v.labels()}
        if len(degs) == 1:
            return degs.pop()
        return None

    def check_element(self, v: Vec) -> None:
        for label in v.labels():
            if label not in self._degree_of:
                raise ValueError(f"label {label!r} is not a basis label of this space")

    def to_coordinates(self, v: Vec, deg: int) -> list[Fraction]:
        labels = self.basis_in_degree(deg)
        return [v.get(label) for label in labels]

    def from_coordinates(self, coords: list[Fraction], deg: int) -> Vec:
        labels = self.basis_in_degree(deg)
        return Vec(zip(labels, coords))


class GradedMap:
    """A degree-homogeneous linear map between graded spaces.

    Stored column-wise: `entries[source_label]` is the image Vec in the
    target space.  A map of shift s sends degree i to degree i + s.
    """

    __slots__ = ("source", "target", "shift", "entries")

    def __init__(self, source: GradedSpace, target: GradedSpace, shift: int,
                 entries: Mapping[str, Vec]):
        self.source = source
        self.target = target
        self.shift = shift
        clean: dict[str, Vec] = {}
        for label, v in entries.items():
            if not source.has_label(label):
                raise ValueError(f"source label {label!r} not in source space")
            if not v:
                continue
            target.check_element(v)
            want = source.degree_of(label) + shift
            got = target.degree_of_vec(v)
            if got != want:
                raise ValueError(
                    f"image of {label!r} must be homogeneous of degree {want}, got {got}")
            clean[label] = v
        self.entries = clean

    @classmethod
    def zero(cls, source: GradedSpace, target: GradedSpace, shift: int = 0) -> "GradedMap":
        return cls(source, target, shift, {})

    @classmethod
    def identity(cls, space: GradedSpace) -> "GradedMap":
        return cls(space, space, 0, {l: Vec.basis(l) for l in space.labels()})

    def apply(self, v: Vec) -> Vec:
        out = Vec()
        for label, c in v.items():
            img = self.entries.get(label)
            if img is not None:
                out = out + img.scale(c)
        return out

    def __call__(self, v: Vec) -> Vec:
        return self.apply(v)

    def compose(self, inner: "GradedMap") -> "GradedMap":
        """self after inner."""
        if inner.target != self.source:
            raise ValueError("composition mismatch: inner.target != self.source")
        entries = {l: self.apply(inner.apply(Vec.basis(l))) for l in inner.source.labels()}
        return GradedMap(inner.source, self.target, self.shift + inner.shift, entries)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedMap) and self.source == other.source
                and self.target == other.target and self.shift == other.shift
                and self.entries == other.entries)

    def add(self, other: "GradedMap") -> "GradedMap":
        if (self.source, self.target, self.shift) != (other.source, other.target, other.shift):
            raise ValueError("maps not addable")
        entries = {}
        for l in set(self.entries) | set(other.entries):
            entries[l] = self.entries.get(l, Vec()) + other.entries.get(l, Vec())
        return GradedMap(self.source, self.target, self.shift, entries)

    def scale(self, c) -> "GradedMap":
        return GradedMap(self.source, self.target, self.shift,
                         {l: v.scale(c) for l, v in self.entries.items()})

    def block(self, deg: int) -> linalg.Matrix:
        """Matrix of the map V^deg -> W^(deg+shift); rows index target basis."""
        src = self.source.basis_in_degree(deg)
        tgt = self.target.basis_in_degree(deg + self.shift)
        m = linalg.zeros(len(tgt), len(src))
        for j, s in enumerate(src):
            img = self.entries.get(s)
            if img is None:
                continue
            for i, t in enumerate(tgt):
                m[i][j] = img.get(t)
        return m

    def __repr__(self) -> str:
        body = ", ".join(f"{l} -> {v}" for l, v in sorted(self.entries.items()))
        return f"GradedMap(shift={self.shift}, {body})"


# ---------------------------------------------------------------------------
# basic constructions
# ---------------------------------------------------------------------------

def suspend(space: GradedSpace, n: int) -> GradedSpace:
    """Shift W with W^i = V^(i+n); labels carry over verbatim."""
    return GradedSpace({deg - n: labels for deg, labels in space.degrees.items()})


def suspend_map(f: GradedMap, n: int) -> GradedMap:
    """The same matrix data between suspended source and target."""
    return GradedMap(suspend(f.source, n), suspend(f.target, n), f.shift, f.entries)


def dual_label(label: str) -> str:
    return label + "*"


def dual(space: GradedSpace) -> GradedSpace:
    """(V*)^i is the dual of V^(-i); labels acquire a trailing star."""
    return GradedSpace({-deg: tuple(dual_label(l) for l in labels)
                        for deg, labels in space.degrees.items()})


def dual_map(f: GradedMap) -> GradedMap:
    """Transpose with the Koszul sign (-1)^(|f|(|phi|+1)).

    For odd maps this is phi -> -(-1)^|phi| phi.f, the convention used for
    dual differentials; for even maps it is the plain transpose.
    """
    src = dual(f.target)
    tgt = dual(f.source)
    entries: dict[str, Vec] = {}
    for s_label, img in f.entries.items():
        for t_label, c in img.items():
            phi = dual_label(t_label)
            phi_deg = -f.target.degree_of(t_label)
            sign = -1 if (f.shift % 2 and (phi_deg + 1) % 2) else 1
            prev = entries.get(phi, Vec())
            entries[phi] = prev + Vec({dual_label(s_label): sign * c})
    return GradedMap(src, tgt, f.shift, entries)


def double_dual_iso(space: GradedSpace) -> GradedMap:
    """The canonical iso V -> V**, v -> (-1)^|v| ev_v.

    With this identification dual_map(dual_map(f)) agrees with f for maps
    of either parity; the unsigned relabelling only works for even maps.
    """
    entries = {}
    for deg, labels in space.degrees.items():
        sign = -1 if deg % 2 else 1
        for l in labels:
            entries[l] = Vec({dual_label(dual_label(l)): sign})
    return GradedMap(space, dual(dual(space)), 0, entries)


def tensor_label(a: str, b: str) -> str:
    return a + TENSOR_SEP + b


def split_tensor_label(label: str) -> tuple[str, str]:
    left, sep, right = label.partition(TENSOR_SEP)
    if not sep:
        raise ValueError(f"{label!r} is not a tensor basis label")
    return left, right


def tensor(v_space: GradedSpace, w_space: GradedSpace) -> GradedSpace:
    """(V (x) W)^n = sum of V^i (x) W^j over i + j = n, lex-ordered."""
    degrees: dict[int, list[str]] = {}
    for i in sorted(v_space.degrees):
        for j in sorted(w_space.degrees):
            bucket = degrees.setdefault(i + j, [])
            for a in v_space.degrees[i]:
                for b in w_space.degrees[j]:
                    bucket.append(tensor_label(a, b))
    return GradedSpace(degrees)


def koszul_swap(v_space: GradedSpace, w_space: GradedSpace) -> GradedMap:
    """v (x) w -> (-1)^(|v||w|) w (x) v."""
    src = tensor(v_space, w_space)
    tgt = tensor(w_space, v_space)
    entries = {}
    for label in src.labels():
        a, b = split_tensor_label(label)
        sign = -1 if (v_space.degree_of(a) % 2 and w_space.degree_of(b) % 2) else 1
        entries[label] = Vec({tensor_label(b, a): sign})
    return GradedMap(src, tgt, 0, entries)


# ---------------------------------------------------------------------------
# complexes and cohomology
# ---------------------------------------------------------------------------

class CochainComplex:
    """A graded space with a degree +1 differential."""

    __slots__ = ("space", "differential")

    def __init__(self, space: GradedSpace, differential: GradedMap):
        if differential.shift != 1:
            raise ValueError("differential must have shift +1")
        if differential.source != space or differential.target != space:
            raise ValueError("differential must be an endomorphism of the space")
        self.space = space
        self.differential = differential

    def d(self, v: Vec) -> Vec:
        return self.differential.apply(v)

    def square_zero_failure(self) -> int | None:
        """The lowest degree whose basis witnesses d(d(x)) != 0, else None."""
        for deg in self.space.degree_list():
            for label in self.space.basis_in_degree(deg):
                if self.d(self.d(Vec.basis(label))):
                    return deg
        return None


class DSquareError(ValueError):
    def __init__(self, degree: int):
        super().__init__(f"d² ≠ 0 starting in degree {degree}")
        self.degree = degree


def cohomology(complex_: CochainComplex) -> dict[int, tuple[int, list[Vec]]]:
    """Per degree: (dim H^i, representative cocycles).

    Representatives are cocycles spanning a complement of the coboundaries
    inside the cocycles.  Raises DSquareError if the differential does not
    square to zero.
    """
    bad = complex_.square_zero_failure()
    if bad is not None:
        raise DSquareError(bad)
    space, d = complex_.space, complex_.differential
    out: dict[int, tuple[int, list[Vec]]] = {}
    for deg in space.degree_list():
        labels = space.basis_in_degree(deg)
        n = len(labels)
        # cocycles: kernel of the block in this degree
        kernel = linalg.nullspace(d.block(deg)) if n else []
        if not space.dim(deg + 1):
            kernel = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
                      for i in range(n)]
        # coboundaries: images of the previous block
        prev = space.basis_in_degree(deg - 1)
        boundaries = []
        for p in prev:
            img = d.apply(Vec.basis(p))
            boundaries.append(space.to_coordinates(img, deg))
        b_basis = linalg.row_space_basis(boundaries)
        reps_coords = linalg.extend_to_basis(b_basis, kernel)
        h_dim = len(linalg.row_space_basis(kernel)) - len(b_basis)
        reps = [space.from_coordinates(rc, deg) for rc in reps_coords]
        if len(reps) != h_dim:
            raise AssertionError("representative count does not match Betti number")
        out[deg] = (h_dim, reps)
    return out


def cohomology_dims(complex_: CochainComplex) -> dict[int, int]:
    return {deg: dim for deg, (dim, _) in cohomology(complex_).items() if dim}


def is_chain_map(dom: CochainComplex, cod: CochainComplex, f: GradedMap) -> bool:
    if f.shift != 0 or f.source != dom.space or f.target != cod.space:
        return False
    for label in dom.space.labels():
        v = Vec.basis(label)
        if cod.d(f.apply(v)) != f.apply(dom.d(v)):
            return False
    return True


def quasi_iso_check(dom: CochainComplex, cod: CochainComplex, f: GradedMap) -> bool:
    """True iff the chain map f induces an isomorphism on all cohomology.

    Raises ValueError when f is not a chain map.
    """
    if not is_chain_map(dom, cod, f):
        raise ValueError("not a chain map")
    h_dom = cohomology(dom)
    h_cod = cohomology(cod)
    degrees = set(h_dom) | set(h_cod)
    for deg in degrees:
        dim_d, reps_d = h_dom.get(deg, (0, []))
        dim_c, reps_c = h_cod.get(deg, (0, []))
        if dim_d != dim_c:
            return False
        if dim_d == 0:
            continue
        # coordinates of f(rep) against [target reps | coboundaries]
        tgt_labels = cod.space.basis_in_degree(deg)
        boundary_rows = []
        for p in cod.space.basis_in_degree(deg - 1):
            boundary_rows.append(cod.space.to_coordinates(cod.d(Vec.basis(p)), deg))
        boundary_rows = linalg.row_space_basis(boundary_rows)
        rep_rows = [cod.space.to_coordinates(r, deg) for r in reps_c]
        induced = []
        for r in reps_d:
            img = cod.space.to_coordinates(f.apply(r), deg)
            coords = linalg.coordinates_in_span(rep_rows + boundary_rows, img)
            if coords is None:
                raise AssertionError("image of a cocycle is not a cocycle")
            induced.append(coords[:len(rep_rows)])
        if linalg.rank(induced) != dim_d:
            return False
    return True


def euler_characteristic(space: GradedSpace) -> int:
    return sum((-1) ** (deg % 2) * space.dim(deg) for deg in space.degree_list())
