import random
from fractions import Fraction

import pytest

from mckoszul import fixtures
from mckoszul.assoc import check_axioms
from mckoszul.graded import GradedMap, GradedSpace, Vec
from mckoszul.lie import (DgLieAlgebra, PathElement, PolynomialPathAlgebra,
                          adjoin_differential, adjoint_series_gauge,
                          check_lie_axioms, enveloping_truncated, exp_gauge,
                          gauge_to_sullivan, lower_central, mc_check_lie,
                          nilpotency_index_lie, pbw_dims, sullivan_path,
                          sullivan_to_gauge, symmetric_power_dims,
                          tilde_square_check)

POOL = [Fraction(n, d) for n in (-2, -1, 0, 1, 2) for d in (1, 2)]


def _rand_vec(space, degree, rng):
    return Vec((l, rng.choice(POOL)) for l in space.basis_in_degree(degree))


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def test_sl2_axioms_pass():
    report = check_lie_axioms(fixtures.sl2())
    assert report.ok, report.failures()


def test_sl2_with_broken_bracket_fails_jacobi():
    space = GradedSpace({0: ("e", "f", "h")})
    brackets = {("h", "e"): Vec({"e": 2}), ("h", "f"): Vec({"f": -2}),
                ("e", "f"): Vec({"e": 1})}  # [e,f] = e breaks Jacobi
    g = DgLieAlgebra.from_half_table(space, GradedMap.zero(space, space, 1), brackets)
    report = check_lie_axioms(g)
    failed = [n for n, ok, _ in report.checks if not ok]
    assert "jacobi" in failed


def test_abelian_passes():
    assert check_lie_axioms(fixtures.abelian(1)).ok
    assert check_lie_axioms(fixtures.abelian(3, [0, 1, 2])).ok


def test_all_lie_fixtures_pass_axioms():
    for name in ("sl2", "heisenberg", "g2dim", "nil3", "nil4", "nil4b"):
        assert check_lie_axioms(fixtures.load(name)).ok, name


# ---------------------------------------------------------------------------
# the master equation
# ---------------------------------------------------------------------------

def test_mc_check_lie_examples():
    g = fixtures.g2dim()
    assert mc_check_lie(g, Vec())
    assert mc_check_lie(g, Vec.basis("x"))  # -y + (1/2)(2y) = 0
    # with zero differential the same element fails
    g0 = DgLieAlgebra(g.space, GradedMap.zero(g.space, g.space, 1), g.brackets)
    assert not mc_check_lie(g0, Vec.basis("x"))


def test_mc_check_lie_rejects_wrong_degree():
    g = fixtures.nil4()
    with pytest.raises(ValueError):
        mc_check_lie(g, Vec.basis("w"))


def test_nil4_mc_family():
    g = fixtures.nil4()
    for a in (Fraction(0), Fraction(1)):
        for b in (Fraction(-2), Fraction(0), Fraction(5, 3)):
            assert mc_check_lie(g, Vec({"x1": a, "x2": b}))
    assert not mc_check_lie(g, Vec({"x1": Fraction(1, 2)}))


# ---------------------------------------------------------------------------
# lower central series
# ---------------------------------------------------------------------------

def test_lower_central_abelian():
    tower = lower_central(fixtures.abelian(2))
    assert tower.index == 2
    assert len(tower.layers) == 1


def test_lower_central_sl2_not_nilpotent():
    tower = lower_central(fixtures.sl2())
    assert not tower.nilpotent
    # the bracket span equals the whole algebra after one step
    assert len(tower.layers[-1]) == 3


def test_lower_central_strictly_upper_triangular():
    tower = lower_central(fixtures.nil3())
    assert tower.index == 3
    assert [len(layer) for layer in tower.layers] == [3, 1]


def test_lower_central_terms_are_dg_ideals():
    for name in ("nil3", "nil4", "nil4b", "heisenberg"):
        g = fixtures.load(name)
        tower = lower_central(g)
        labels = g.space.labels()
        for layer in tower.layers:
            span_rows = [[v.get(l) for l in labels] for v in layer]
            from mckoszul import linalg
            for v in layer:
                dv = g.d(v)
                if dv:
                    assert linalg.in_span(span_rows, [dv.get(l) for l in labels])
                for b in labels:
                    br = g.bracket(Vec.basis(b), v)
                    if br:
                        assert linalg.in_span(span_rows, [br.get(l) for l in labels])


# ---------------------------------------------------------------------------
# enveloping algebra
# ---------------------------------------------------------------------------

def test_enveloping_abelian_one_generator():
    g = fixtures.abelian(1)
    env = enveloping_truncated(g, 3)
    assert env.dims_per_weight() == [1, 1, 1, 1]


def test_pbw_dims_sl2():
    assert pbw_dims(fixtures.sl2(), 2) == [1, 3, 6]
    assert pbw_dims(fixtures.sl2(), 3) == [1, 3, 6, 10]


def test_odd_generator_square_rewrites():
    # one odd generator with [x,x] = 0 forces x*x = 0 in the envelope
    space = GradedSpace({1: ("x",)})
    g = DgLieAlgebra(space, GradedMap.zero(space, space, 1), {})
    env = enveloping_truncated(g, 3)
    assert env.dims_per_weight() == [1, 1, 0, 0]
    assert not env.algebra.mul(Vec.basis("x"), Vec.basis("x"))


def test_pbw_dimension_law():
    for name in ("heisenberg", "g2dim", "nil3", "nil4", "nil4b"):
        g = fixtures.load(name)
        for w in (1, 2, 3, 4):
            assert pbw_dims(g, w) == symmetric_power_dims(g.space, w), (name, w)


def test_envelope_materializations_pass_axioms():
    for name in ("heisenberg", "g2dim", "nil4", "nil4b"):
        g = fixtures.load(name)
        env = enveloping_truncated(g, 3)
        assert check_axioms(env.algebra).ok, name


def test_envelope_rejects_non_nilpotent_weight_quotients():
    with pytest.raises(ValueError):
        enveloping_truncated(fixtures.sl2(), 2)


def test_group_like_exponentials():
    rng = random.Random(101)
    for name in ("heisenberg", "nil4", "nil4b"):
        g = fixtures.load(name)
        env = enveloping_truncated(g, nilpotency_index_lie(g))
        for _ in range(10):
            xi = _rand_vec(g.space, 0, rng)
            e = env.exp(xi)
            assert env.is_group_like(e)
            assert env.primitive_part(env.log(e)) == Vec(xi.items())
            assert env.algebra.mul(e, env.inverse(e)) == Vec.basis("1")


# ---------------------------------------------------------------------------
# gauge action
# ---------------------------------------------------------------------------

def _mc_sample(name, rng):
    if name in ("nil4", "nil4b"):
        a = rng.choice([Fraction(0), Fraction(1)])
        b = rng.choice(POOL)
        return Vec({"x1": a, "x2": b})
    if name == "nil3":
        a = rng.choice(POOL)
        b = rng.choice(POOL)
        return Vec({"e23": a, "e13": b})
    if name == "g2dim":
        return rng.choice([Vec(), Vec.basis("x")])
    raise AssertionError(name)


def test_exp_gauge_identity_parameter():
    g = fixtures.nil4b()
    x = Vec.basis("x1")
    assert exp_gauge(g, Vec(), x) == x


def test_exp_gauge_abelian_formula():
    space = GradedSpace({0: ("u",), 1: ("v",)})
    d = GradedMap(space, space, 1, {"u": Vec.basis("v")})
    g = DgLieAlgebra(space, d, {})
    xi = Vec({"u": Fraction(5, 7)})
    x = Vec({"v": Fraction(2)})
    assert exp_gauge(g, xi, x) == x - d.apply(xi)


def test_exp_gauge_preserves_mc_and_matches_adjoint_series():
    rng = random.Random(57)
    for name in ("nil3", "nil4", "nil4b"):
        g = fixtures.load(name)
        for _ in range(20):
            x = _mc_sample(name, rng)
            assert mc_check_lie(g, x)
            xi = _rand_vec(g.space, 0, rng)
            out = exp_gauge(g, xi, x)
            assert mc_check_lie(g, out)
            assert out == adjoint_series_gauge(g, xi, x)


def test_gauge_action_compatible_with_group_product():
    rng = random.Random(58)
    for name in ("nil3", "nil4", "nil4b"):
        g = fixtures.load(name)
        env = enveloping_truncated(g, max(nilpotency_index_lie(g), 2))
        for _ in range(20):
            x = _mc_sample(name, rng)
            xi = _rand_vec(g.space, 0, rng)
            eta = _rand_vec(g.space, 0, rng)
            lhs = exp_gauge(g, xi, exp_gauge(g, eta, x))
            product = env.algebra.mul(env.exp(xi), env.exp(eta))
            assert env.is_group_like(product)
            rhs = env.act(product, x)
            assert lhs == rhs


# ---------------------------------------------------------------------------
# the tilde trick
# ---------------------------------------------------------------------------

def test_tilde_algebra_satisfies_lie_axioms():
    for name in ("g2dim", "nil4", "nil4b", "heisenberg"):
        extended, _ = adjoin_differential(fixtures.load(name))
        assert check_lie_axioms(extended).ok, name


def test_tilde_square_matches_mc():
    rng = random.Random(77)
    for name in ("g2dim", "nil4", "nil4b"):
        g = fixtures.load(name)
        assert tilde_square_check(g, Vec()) == mc_check_lie(g, Vec())
        for _ in range(20):
            x = _rand_vec(g.space, 1, rng)
            assert tilde_square_check(g, x) == mc_check_lie(g, x)


def test_tilde_square_on_known_witness():
    g = fixtures.g2dim()
    assert tilde_square_check(g, Vec.basis("x"))
    assert not tilde_square_check(g, Vec({"x": 2}))
    assert not mc_check_lie(g, Vec({"x": 2}))


# ---------------------------------------------------------------------------
# polynomial paths
# ---------------------------------------------------------------------------

def test_path_evaluations():
    g = fixtures.nil4()
    path = sullivan_path(g, 3)
    x = Vec.basis("x1")
    y = Vec.basis("x2")
    # t (x) x + dt (x) y vanishes at t = 0
    z = PathElement.make([Vec(), x], [y])
    assert not path.eval0(z)
    # t^2 (x) x evaluates to x at t = 1
    z2 = PathElement.make([Vec(), Vec(), x], [])
    assert path.eval1(z2) == x
    assert path.evaluate(z2, Fraction(1, 2)) == x.scale(Fraction(1, 4))


def test_path_differential_leibniz_in_t():
    # d(x (x) t) = dx (x) t + (-1)^|x| x (x) dt
    g = fixtures.nil4()
    path = sullivan_path(g, 3)
    x = Vec.basis("x1")  # degree 1, d(x1) = -y
    z = PathElement.make([Vec(), x], [])
    dz = path.d(z)
    assert dz.poly_coeff(1) == g.d(x)
    assert dz.dt_coeff(0) == x.scale(-1)  # Koszul sign past an odd element
    xi = Vec.basis("w")  # degree 0
    z2 = PathElement.make([Vec(), xi], [])
    dz2 = path.d(z2)
    assert dz2.dt_coeff(0) == xi  # even element, no sign


def test_path_evaluations_are_dg_lie_maps():
    rng = random.Random(91)
    g = fixtures.nil4b()
    path = sullivan_path(g, 2)

    def rand_path():
        poly = [_rand_vec(g.space, 1, rng) for _ in range(3)]
        dtp = [_rand_vec(g.space, 0, rng) for _ in range(3)]
        return PathElement.make(poly, dtp)

    for t in (Fraction(0), Fraction(1), Fraction(1, 3)):
        for _ in range(10):
            z, w = rand_path(), rand_path()
            ev = lambda e: path.evaluate(e, t)
            assert ev(path.bracket(z, w)) == g.bracket(ev(z), ev(w))
            assert ev(path.d(z)) == g.d(ev(z))


def test_gauge_to_sullivan_constant_path():
    g = fixtures.nil4()
    x = Vec({"x1": 1, "x2": Fraction(1, 2)})
    path, z = gauge_to_sullivan(g, x, Vec())
    assert z == PathElement.make([x], [Vec()])  # dt part is -0
    assert path.eval0(z) == x and path.eval1(z) == x


def test_gauge_to_sullivan_abelian_oracle():
    # abelian: Z = (x - t d(xi)) - xi (x) dt is MC and fixes the sign
    space = GradedSpace({0: ("u",), 1: ("v",)})
    d = GradedMap(space, space, 1, {"u": Vec.basis("v")})
    g = DgLieAlgebra(space, d, {})
    xi = Vec({"u": Fraction(3)})
    x = Vec({"v": Fraction(-2)})
    path, z = gauge_to_sullivan(g, x, xi)
    assert z.poly_coeff(0) == x
    assert z.poly_coeff(1) == d.apply(xi).scale(-1)
    assert z.dt_coeff(0) == xi.scale(-1)
    assert path.mc_check(z)


def test_sullivan_round_trip():
    rng = random.Random(121)
    for name in ("nil3", "nil4", "nil4b"):
        g = fixtures.load(name)
        for _ in range(20):
            x = _mc_sample(name, rng)
            xi = _rand_vec(g.space, 0, rng)
            path, z = gauge_to_sullivan(g, x, xi)
            assert path.mc_check(z)
            assert path.eval0(z) == x
            endpoint = exp_gauge(g, xi, x)
            assert path.eval1(z) == endpoint
            xi2 = sullivan_to_gauge(g, path, z)
            assert exp_gauge(g, xi2, x) == endpoint


def test_sullivan_to_gauge_constant_path():
    g = fixtures.nil4()
    x = Vec.basis("x1")
    path = sullivan_path(g, 2)
    z = PathElement.make([x], [])
    assert sullivan_to_gauge(g, path, z) == Vec()


def test_sullivan_to_gauge_abelian_translation():
    space = GradedSpace({0: ("u",), 1: ("v",)})
    d = GradedMap(space, space, 1, {"u": Vec.basis("v")})
    g = DgLieAlgebra(space, d, {})
    eta = Vec({"u": Fraction(4, 3)})
    x = Vec({"v": Fraction(1)})
    path = sullivan_path(g, 2)
    z = PathElement.make([x, d.apply(eta).scale(-1)], [eta.scale(-1)])
    assert path.mc_check(z)
    xi = sullivan_to_gauge(g, path, z)
    assert exp_gauge(g, xi, x) == x - d.apply(eta)


def test_sullivan_to_gauge_rejects_non_mc():
    g = fixtures.nil4()
    path = sullivan_path(g, 2)
    z = PathElement.make([Vec.basis("x1"), Vec.basis("x2")], [])
    assert not path.mc_check(z)
    with pytest.raises(ValueError):
        sullivan_to_gauge(g, path, z)


def test_exp_gauge_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        exp_gauge(fixtures.sl2(), Vec.basis("h"), Vec())
