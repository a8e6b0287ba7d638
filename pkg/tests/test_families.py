import math
from fractions import Fraction

import pytest

from fanopoly import (
    FanoError,
    barycenter,
    canonical_form,
    cone_singularity,
    dual,
    is_kahler_einstein,
    ke_triangle_types,
    make_fano_polygon,
    make_ke_triangle,
    make_smn,
    recognize_ke_triangle,
    smn_dual_closed_form,
    surface_invariants,
    types_isomorphic,
)


class TestSmn:
    def test_s00_is_the_unit_cross(self):
        assert make_smn(0, 0) == make_fano_polygon([(1, 0), (0, 1), (-1, 0), (0, -1)])

    def test_s10_vertices_and_content(self):
        P = make_smn(1, 0)
        assert set(P.vertices) == {(2, -1), (-1, 2), (-1, 0), (0, -1)}
        inv = surface_invariants(P)
        assert inv.singular_content() == "2A_1 + A_2"
        assert inv.picard == 2
        assert inv.index == 1

    def test_s11_index_three(self):
        assert surface_invariants(make_smn(1, 1)).index == 3

    def test_always_four_vertices(self):
        for m in range(4):
            for n in range(4):
                assert make_smn(m, n).vertex_count == 4

    def test_negative_rejected(self):
        with pytest.raises(FanoError):
            make_smn(-1, 0)

    def test_closed_form_matches_computation_up_to_20(self):
        for m in range(21):
            for n in range(21):
                poly, bary = smn_dual_closed_form(m, n)
                d = dual(make_smn(m, n))
                assert d.vertices == poly.vertices, (m, n)
                assert barycenter(d) == bary, (m, n)

    def test_closed_form_examples(self):
        poly, bary = smn_dual_closed_form(1, 0)
        assert set(poly.vertices) == {
            (Fraction(-1), Fraction(-1)),
            (Fraction(1), Fraction(0)),
            (Fraction(1), Fraction(1)),
            (Fraction(0), Fraction(1)),
        }
        assert bary == (Fraction(1, 6), Fraction(1, 6))
        assert smn_dual_closed_form(0, 1)[1] == (Fraction(-1, 6), Fraction(-1, 6))
        assert smn_dual_closed_form(4, 4)[1] == (0, 0)

    def test_ke_iff_diagonal_up_to_20(self):
        for m in range(21):
            for n in range(21):
                assert is_kahler_einstein(make_smn(m, n)) == (m == n), (m, n)

    def test_cone_content_up_to_types_isomorphic(self):
        for m, n in [(0, 0), (1, 0), (2, 1), (3, 3), (4, 1)]:
            got = [
                (t.n, t.k) for t in surface_invariants(make_smn(m, n)).singularities
            ]
            expected = [
                (2 * m + 1, 2 * m if m else 1),
                (m + n + 1, 1),
                (2 * n + 1, 2 * n if n else 1),
                (m + n + 1, 1),
            ]
            assert sorted(got) == sorted(
                (a, b if b <= a else b % a) for a, b in expected
            )


class TestKeTriangle:
    def test_example_1_6_vertices(self):
        P = make_ke_triangle(11, 3)
        assert set(P.vertices) == {(11, -3), (0, 1), (-11, 2)}

    def test_a1_b1_is_plane(self):
        assert canonical_form(make_ke_triangle(1, 1)) == canonical_form(
            make_fano_polygon([(1, 0), (0, 1), (-1, -1)])
        )

    def test_gcd_violations(self):
        with pytest.raises(FanoError) as exc:
            make_ke_triangle(4, 2)
        assert exc.value.code == "gcd_violation"
        with pytest.raises(FanoError) as exc:
            make_ke_triangle(3, 4)  # gcd(3, 3) = 3
        assert exc.value.code == "gcd_violation"
        with pytest.raises(FanoError) as exc:
            make_ke_triangle(2, 1)  # b=1 forces a=1
        assert exc.value.code == "gcd_violation"

    def test_all_members_are_ke_with_odd_index_up_to_99(self):
        count = 0
        for a in range(1, 100):
            for b in range(1, a + 1):
                if math.gcd(a, b) != 1 or math.gcd(a, b - 1) != 1:
                    continue
                P = make_ke_triangle(a, b)
                assert is_kahler_einstein(P), (a, b)
                index = surface_invariants(P).index
                # the local indices all divide a (odd), e.g. (3,2) is the
                # reflexive triple-A_2 triangle of index 1
                assert a % index == 0, (a, b)
                assert index % 2 == 1, (a, b)
                count += 1
        assert count > 1000  # the family is large; the loop really ran

    def test_types_example_11_3(self):
        types = ke_triangle_types(11, 3)
        assert [(t.n, t.k) for t in types] == [(11, 3), (11, 9), (11, 8)]

    def test_types_smooth_for_a_1(self):
        assert all(t.is_smooth for t in ke_triangle_types(1, 1))

    def test_types_match_cones(self):
        for a, b in [(3, 2), (5, 2), (5, 3), (7, 3), (11, 3), (9, 5), (13, 8)]:
            v1, v2, v3 = (a, -b), (0, 1), (-a, b - 1)
            cones = [
                cone_singularity(v1, v2),
                cone_singularity(v2, v3),
                cone_singularity(v3, v1),
            ]
            for emitted, from_cone in zip(ke_triangle_types(a, b), cones):
                assert types_isomorphic(emitted, from_cone), (a, b)

    def test_alternative_representations(self):
        # second representations via the two auxiliary congruences
        for a, b in [(11, 3), (7, 3), (13, 5), (9, 5)]:
            y1 = (-pow(b, -1, a)) % a
            y2 = (-pow(b - 1, -1, a)) % a
            t1, t2, t3 = ke_triangle_types(a, b)
            assert types_isomorphic(t1, SingType(a, (a - y1) % a))
            assert types_isomorphic(t2, SingType(a, y2))
            assert types_isomorphic(t3, SingType(a, (a - y2 + 1) % a))

    def test_remark_cross_check_11_3(self):
        # 1/11(1,3) ~ 1/11(1,4) because 3*4 = 1 mod 11
        t1 = ke_triangle_types(11, 3)[0]
        assert types_isomorphic(t1, SingType(11, 4))
        assert (3 * 4) % 11 == 1


class TestRecognizeKeTriangle:
    def test_round_trip(self):
        for a, b in [(1, 1), (5, 2), (11, 3), (13, 8)]:
            got = recognize_ke_triangle(make_ke_triangle(a, b))
            assert got is not None
            ga, gb = got
            assert ga == a
            assert canonical_form(make_ke_triangle(ga, gb)) == canonical_form(
                make_ke_triangle(a, b)
            )

    def test_non_member(self):
        # not KE, so not in the family
        P = make_fano_polygon([(1, 0), (0, 1), (-2, -3)])
        assert not is_kahler_einstein(P)
        assert recognize_ke_triangle(P) is None

    def test_quadrilateral_none(self):
        assert recognize_ke_triangle(make_smn(1, 1)) is None


from fanopoly import SingularityType as SingType  # noqa: E402  (test-local alias)
