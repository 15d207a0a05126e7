from __future__ import annotations

import pytest
from hypothesis import given

import configs as cf
import suites
from euclid import congruence as cg
from euclid import quantities as q
from euclid.cfield import sqrt
from euclid.errors import PreconditionViolated
from euclid.model import Point, Ray, opposite_ray, rays_coincide
from euclid.quantities import Rotation

P = Point.of
E = P(0, 0)
rngs = cf.rngs()


def T(*pts) -> cg.Triangle:
    return cg.Triangle(*pts)


def test_triangle_rejects_collinear_vertices():
    with pytest.raises(PreconditionViolated):
        T(P(0, 0), P(1, 1), P(2, 2))


def test_congruent_examples():
    t = T(P(0, 0), P(3, 0), P(1, 2))
    assert cg.congruent(t, t)
    assert cg.congruent(t, T(P(5, 5), P(8, 5), P(6, 7)))
    assert not cg.congruent(t, T(P(0, 0), P(3, 0), P(1, 3)))


def test_superpose_examples():
    A, B, C, D, F = P(0, 0), P(2, 0), P(0, 1), P(5, 0), P(7, 0)
    assert cg.superpose(A, B, C, D, F, P(0, 1)) == P(5, 1)
    assert cg.superpose(A, B, C, D, F, P(0, -1)) == P(5, -1)
    with pytest.raises(PreconditionViolated):
        cg.superpose(A, B, C, D, P(8, 0), P(0, 1))


def test_transfer_angle_examples():
    r45 = Rotation(sqrt(2) / 2, sqrt(2) / 2)
    O2, A2 = P(3, 0), P(4, 0)
    Q = cg.transfer_angle(P(1, 0), E, P(1, 1), O2, A2, P(0, 5))
    assert q.measure_of(Ray(O2, A2), Ray(O2, Q)) == r45
    Q = cg.transfer_angle(P(1, 0), E, P(0, 1), O2, A2, P(0, 5))
    assert q.measure_of(Ray(O2, A2), Ray(O2, Q)) == q.RIGHT_ANGLE
    Q = cg.transfer_angle(P(1, 0), E, P(1, 1), O2, A2, P(0, -5))
    assert q.measure_of(Ray(O2, A2), Ray(O2, Q)) == r45.conjugate()
    assert q.nonoriented_measure(A2, O2, Q) == r45


def test_transfer_angle_ray_wraps_the_witness():
    r = cg.transfer_angle_ray(P(1, 0), E, P(1, 1), Ray(P(3, 0), P(4, 0)), P(0, 5))
    assert q.nonoriented_measure(P(4, 0), P(3, 0), r.director) == Rotation(sqrt(2) / 2, sqrt(2) / 2)


def test_draw_angle_oriented_examples():
    a = Ray(E, P(1, 0))
    assert rays_coincide(cg.draw_angle_oriented(a, q.RIGHT_ANGLE), Ray(E, P(0, 1)))
    assert rays_coincide(cg.draw_angle_oriented(a, q.NULL_ANGLE), a)
    assert rays_coincide(cg.draw_angle_oriented(a, q.STRAIGHT_ANGLE), opposite_ray(a))


@given(rng=rngs)
def test_congruence_is_an_equivalence(rng):
    A, B, C = cf.triangle(rng, cf.rpoint)
    t1 = T(A, B, C)
    t2 = T(*cf.rigid(rng, [A, B, C]))
    t3 = T(*cf.rigid(rng, [t2.a, t2.b, t2.c]))
    assert cg.congruent(t1, t1)
    assert cg.congruent(t1, t2) and cg.congruent(t2, t1)
    assert cg.congruent(t2, t3) and cg.congruent(t1, t3)


@pytest.mark.parametrize("name", ["sas", "asa", "sss", "triangle_inequality", "circle_ordering"])
@given(rng=rngs)
def test_congruence_theorems(name, rng):
    suites.THEOREMS[name](rng)


@pytest.mark.parametrize("name", ["triangle_superposition", "triangle_congruence_bis"])
@given(rng=rngs)
def test_congruence_axioms(name, rng):
    suites.AXIOMS[name](rng)


@pytest.mark.parametrize("name", ["congruent", "superpose", "transfer_angle", "transfer_angle_ray",
                                  "draw_angle_oriented"])
def test_postconditions(name):
    suites.run(suites.CONSTRUCTIONS[name], 40, name)
