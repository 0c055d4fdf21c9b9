from fractions import Fraction
import random

import pytest

from polargroup.scalars import Qi, ONE, I
from polargroup.poly import Poly, Laurent, RatFunc, as_ratfunc
from polargroup import polar, contexts
from polargroup.polar import (PolarClass, class_of, polar_factorize,
                              delta_membership, delta_T_membership,
                              localization_map, localization_section,
                              projective_include, subalgebra_embed,
                              reciprocal_sum_check, prime_reduction,
                              orbit_normalize, TRIVIAL_CLASS)

from conftest import rand_element, rand_trivial_multiplier

line = contexts.affine_line()
line_i = contexts.affine_line([I, -I])
circle = contexts.circle_form()
icircle = contexts.imaginary_circle_form()


def test_class_basic_fold():
    f = Poly([ONE, Qi(0), ONE]) * Poly([-I, 1])  # (x-i)^2 (x+i)
    c = class_of(f, line)
    assert c.free_table() == {I: 1}
    assert class_of(Poly([ONE, Qi(0), ONE]), line).is_identity()
    assert c.inverse().free_table() == {I: -1}
    assert (c * c.inverse()).is_identity()
    assert (c ** 3).free_table() == {I: 3}
    assert c.order() == float("inf")


def test_circle_classes():
    zeta = Qi(Fraction(3, 5), Fraction(4, 5))
    c = class_of(Poly([-zeta, 1]), circle)
    assert c.order() == 2 and c.torsion_parity == 1
    # both boundary points give the same torsion class
    assert c == class_of(Poly([-I, 1]), circle)
    # an outside point folds to its inverse-conjugate inside the disk
    c2 = class_of(Poly([-Qi(0, 2), 1]), circle)
    assert c2.free_table() == {Qi(0, Fraction(1, 2)): -1}
    assert class_of(Laurent.t(5), circle).is_identity()


def test_icircle_classes():
    # outside points fold through z -> -conj(z)^-1, so 2i pairs with -i/2
    c = class_of(Poly([-Qi(0, 2), 1]), icircle)
    assert c.free_table() == {Qi(0, Fraction(-1, 2)): -1}
    b = class_of(Poly([ONE, 1]), icircle)       # t + 1 = t - (-1), boundary
    assert b.free_table() == {ONE: -1}
    assert class_of(Laurent.t(3), icircle).is_identity()


def test_conic_classes_and_include():
    co = contexts.projective_conic()
    z = Qi(0, Fraction(1, 2))
    c = class_of(Poly([-z, 1]), co)
    assert c.free_table() == {z: 1} and c.t0 == 0
    # the outside partner 2i folds to -i/2 and picks up the class of t
    c2 = class_of(Poly([-Qi(0, 2), 1]), co)
    assert c2.free_table() == {-z: -1} and c2.t0 == 1
    inc = projective_include(c2)
    assert inc.ctx == icircle and inc.free_table() == {-z: -1} and inc.t0 == 0
    pl = contexts.projective_line()
    f = RatFunc(Poly([-I, 1]), Poly([-ONE, 1]))
    assert projective_include(class_of(f, pl)).free_table() == {I: 1}
    with pytest.raises(ValueError):
        projective_include(class_of(Poly([-I, 1]), line))


def test_polar_factorize_line_example():
    f = Poly([ONE, Qi(0), ONE]) * Poly([-I, 1])
    fac = polar_factorize(f, line)
    assert as_ratfunc(fac.real_part) == as_ratfunc(Poly([ONE, Qi(0), ONE]))
    assert as_ratfunc(fac.delta_part) == as_ratfunc(Poly([-I, 1]))
    assert delta_membership(fac.delta_part, line)
    assert not delta_membership(f, line)


def test_circle_delta():
    zeta = Qi(Fraction(3, 5), Fraction(4, 5))
    assert delta_membership(Poly([-zeta, 1]), circle)
    # two boundary roots span a real chord
    assert not delta_membership(Poly.from_roots([zeta, zeta.conj()]), circle)
    assert not delta_membership(Poly.from_roots([zeta, I]), circle)
    # an inside root with its outside partner is a real divisor too
    z = Qi(0, Fraction(1, 2))
    assert not delta_membership(Poly.from_roots([z, z.conj().inverse()]), circle)
    assert delta_membership(Poly.from_roots([z, z]), circle)


def test_localizations():
    a = PolarClass(line, {I: 2, Qi(1, 1): 1})
    img = localization_map(a, line_i)
    assert img.free_table() == {Qi(1, 1): 1}
    back = localization_section(img, line)
    assert localization_map(back, line_i) == img
    with pytest.raises(ValueError):
        localization_map(img, line)  # wrong nesting direction


def test_master_property_localized_line():
    # oracle agreement for the context with nontrivial units x^2 + 1 inverted
    rng = random.Random(41)
    for k in range(200):
        f = rand_element(rng, line_i)
        g = f * rand_trivial_multiplier(rng, line_i) if k % 2 \
            else rand_element(rng, line_i)
        same = class_of(f, line_i) == class_of(g, line_i)
        assert same == line_i.triviality_oracle(f / g)


def test_prime_local():
    pl = contexts.prime_local(I)
    f = RatFunc(Poly([-I, 1]) ** 2 * Poly([-Qi(3), 1]), Poly([I, 1]))
    c = class_of(f, pl)
    assert c.t0 == 3
    assert class_of(Poly([-Qi(2, 1), 1]), pl).is_identity()


def test_cusp():
    cusp = contexts.cusp_cubic()
    f = Poly([Qi(0, -2), Qi(0), ONE])
    assert delta_T_membership(f)
    assert not delta_T_membership(Poly([ONE, Qi(0), ONE]))
    c = subalgebra_embed(f, cusp)
    assert c.free_table() == {Qi(1, 1): 1, Qi(-1, 1): -1}
    assert reciprocal_sum_check(f)
    with pytest.raises(ValueError):
        reciprocal_sum_check(Poly([Qi(0), ONE]))  # f(0) = 0


def test_prime_reduction():
    p = Poly([ONE, Qi(0), ONE])  # x^2 + 1
    assert prime_reduction(Poly.var(), p) == TRIVIAL_CLASS
    with pytest.raises(contexts.DomainError):
        prime_reduction(p, p)
    with pytest.raises(ValueError):
        prime_reduction(Poly.var(), Poly([-ONE, Qi(0), ONE]))  # reducible


def test_orbit_normalize():
    f = Laurent(3, Poly([-Qi(0, 2), 1])) * Qi(0, 2)   # 2i t^3 (t - 2i)
    rep = orbit_normalize(f, circle)
    assert rep.root == Qi(0, Fraction(1, 2)) and rep.inverted
    rep2 = orbit_normalize(Poly([Qi(1, -1), 1]), line)  # root -1+i... conj handling
    assert rep2.root == Qi(-1, 1) and not rep2.inverted
    rep3 = orbit_normalize(Poly([Qi(1, 1), 1]), line)   # root -1-i
    assert rep3.root == Qi(-1, 1) and rep3.inverted
    with pytest.raises(ValueError):
        orbit_normalize(Poly([ONE, Qi(0), ONE]), line)


def test_class_json():
    c = class_of(Poly([-I, 1]), circle)
    assert c.to_json() == {"ctx": "circle", "free": [], "torsion": ["1"]}
    d = class_of(Poly([-Qi(1, 2), 1]), line)
    assert d.to_json() == {"ctx": "line", "free": [{"z": "(1+2*i)", "e": 1}]}
