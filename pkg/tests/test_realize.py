import json
from fractions import Fraction

import pytest

from configs import (
    FIVE_SQUARES_10,
    FORCED_FIFTH_OSS,
    FORCED_FIFTH_SET,
    FOUR_SQUARES_10,
    FOUR_SQUARES_10_POINTS,
    THREE_SQUARES_9,
    THREE_SQUARES_9_POINTS,
    TWO_SQUARES_7,
)
from squarespan.geometry import PointSet, count_squares
from squarespan.realize import (
    OrientedSquareSet,
    build_system,
    degenerate_pairs,
    forced_squares,
    grid_embed,
    is_realizable,
    oss_from_pointset,
    parse_oss,
    rationalize,
    render_oss,
    solve_gauged,
    solve_space,
    strict_witness,
    verify_realization,
)


class TestOrientedSquareSet:
    def test_validation(self):
        with pytest.raises(ValueError):
            OrientedSquareSet(order=4, squares=((1, 2, 3, 5),))  # label > order
        with pytest.raises(ValueError):
            OrientedSquareSet(order=4, squares=((1, 2, 2, 3),))  # repeat
        with pytest.raises(ValueError):
            OrientedSquareSet(order=4, squares=((2, 1, 3, 4),))  # not min-first
        with pytest.raises(ValueError):
            OrientedSquareSet(
                order=4, squares=((1, 2, 3, 4), (1, 2, 3, 4)))  # duplicate

    def test_from_pointset_unit_square(self):
        oss = oss_from_pointset(PointSet.of([(0, 0), (1, 0), (0, 1), (1, 1)]))
        assert oss.order == 4
        assert len(oss.squares) == 1
        a, b, c, d = oss.squares[0]
        assert a == 1  # min label first

    def test_from_pointset_forced_fifth(self):
        # Lex point order relabels, but the square count carries over.
        oss = oss_from_pointset(FORCED_FIFTH_SET)
        assert oss.order == 10
        assert len(oss.squares) == 5

    def test_custom_labeling_must_be_a_bijection(self):
        ps = PointSet.of([(0, 0), (1, 0), (0, 1), (1, 1)])
        with pytest.raises(ValueError):
            oss_from_pointset(ps, labeling=[(0, 0), (1, 0), (0, 1)])

    def test_parse_render_round_trip(self):
        text = render_oss(FOUR_SQUARES_10)
        assert parse_oss(text) == FOUR_SQUARES_10

    def test_parse_rejects_malformed(self):
        with pytest.raises(ValueError):
            parse_oss("5\n1 2 3 4\n")  # missing n= header
        with pytest.raises(ValueError):
            parse_oss("n=5\n1 2 3\n")  # wrong arity


class TestLinearSystem:
    def test_four_rows_per_square(self):
        system = build_system(FOUR_SQUARES_10)
        assert system.n_vars == 20
        assert len(system.rows) == 16
        assert all(r == 0 for r in system.rhs)

    def test_row_structure_single_square(self):
        oss = OrientedSquareSet(order=4, squares=((1, 2, 3, 4),))
        rows = build_system(oss).rows
        # closing condition on real parts: x1 - x2 + x3 - x4 = 0
        assert rows[0] == (1, 0, -1, 0, 1, 0, -1, 0)
        # and on imaginary parts: y1 - y2 + y3 - y4 = 0
        assert rows[1] == (0, 1, 0, -1, 0, 1, 0, -1)
        # quarter-turn conditions tie the fourth vertex to the second
        assert rows[2] == (-1, -1, 0, 1, 0, 0, 1, 0)
        assert rows[3] == (1, -1, -1, 0, 0, 0, 0, 1)

    def test_unconstrained_space_contains_translations(self):
        space = solve_space(FOUR_SQUARES_10)
        assert space.dimension >= 2


class TestSolutionDimensions:
    def test_two_squares_seven_labels_gauged_plane(self):
        assert solve_gauged(TWO_SQUARES_7).dimension == 2

    def test_extension_chain_dimensions(self):
        assert solve_space(THREE_SQUARES_9).dimension == 6
        assert solve_space(FOUR_SQUARES_10).dimension == 4
        assert solve_space(FIVE_SQUARES_10).dimension == 2

    def test_gauge_choice_does_not_change_dimension(self):
        base = solve_gauged(FOUR_SQUARES_10, gauge=(1, 3)).dimension
        # feeding the same squares in a different listed order
        reordered = OrientedSquareSet(
            order=10,
            squares=tuple(reversed(FOUR_SQUARES_10.squares)))
        assert solve_gauged(reordered, gauge=(1, 3)).dimension == base

    def test_gauge_on_collapsing_pair_rejected(self):
        # In the five-square system all labels coincide, so no pair can
        # be pinned apart.
        with pytest.raises(ValueError):
            solve_gauged(FIVE_SQUARES_10)

    def test_space_evaluation(self):
        space = solve_gauged(TWO_SQUARES_7)
        pts = space.points_at((1, 2))
        assert len(pts) == 7
        assert pts[0] == (Fraction(0), Fraction(0))
        # the gauge pins the first square's first two labels, here 1 and 4
        assert pts[3] == (Fraction(0), Fraction(1))


class TestCertificates:
    def test_realizable_chain(self):
        report = is_realizable(FOUR_SQUARES_10)
        assert report.realizable
        assert report.dimension == 4
        assert report.degenerate_pairs == ()
        assert report.witness is not None

    def test_non_realizable_certificate(self):
        report = is_realizable(FIVE_SQUARES_10)
        assert not report.realizable
        assert report.dimension == 2
        assert report.witness is None
        # every pair of labels collapses, a certificate of non-realizability
        assert len(report.degenerate_pairs) == 45

    def test_degenerate_pairs_machine_checkable(self):
        space = solve_space(FIVE_SQUARES_10)
        j, k = is_realizable(FIVE_SQUARES_10).degenerate_pairs[0]
        cols = lambda lbl: (2 * (lbl - 1), 2 * (lbl - 1) + 1)
        for axis in (0, 1):
            cj, ck = cols(j)[axis], cols(k)[axis]
            for vec in (space.particular, *space.basis):
                assert vec[cj] - vec[ck] == 0

    def test_forced_square(self):
        report = is_realizable(FORCED_FIFTH_OSS)
        assert report.realizable
        assert report.forced_squares == ((3, 9, 4, 6),)

    def test_no_forced_squares_in_four_square_chain(self):
        assert forced_squares(FOUR_SQUARES_10) == ()

    def test_report_json(self):
        data = json.loads(is_realizable(FIVE_SQUARES_10).to_json())
        assert data["realizable"] is False
        assert data["dimension"] == 2
        assert len(data["degenerate_pairs"]) == 45

    def test_degenerate_pairs_empty_for_realizable(self):
        assert degenerate_pairs(THREE_SQUARES_9) == ()


class TestWitnesses:
    def test_witness_verifies(self):
        report = is_realizable(FOUR_SQUARES_10)
        assert verify_realization(FOUR_SQUARES_10, report.witness)

    def test_published_integer_realization(self):
        assert verify_realization(FOUR_SQUARES_10, FOUR_SQUARES_10_POINTS)
        assert verify_realization(THREE_SQUARES_9, THREE_SQUARES_9_POINTS)

    def test_verify_rejects_wrong_data(self):
        pts = list(FOUR_SQUARES_10_POINTS)
        assert not verify_realization(FOUR_SQUARES_10, pts[:9])  # too short
        swapped = pts.copy()
        swapped[0], swapped[1] = swapped[1], swapped[0]
        assert not verify_realization(FOUR_SQUARES_10, swapped)
        collapsed = pts.copy()
        collapsed[1] = collapsed[0]
        assert not verify_realization(FOUR_SQUARES_10, collapsed)

    def test_verify_rejects_reversed_orientation(self):
        oss = OrientedSquareSet(order=4, squares=((1, 2, 3, 4),))
        ccw = [(0, 0), (1, 0), (1, 1), (0, 1)]
        cw = [(0, 0), (0, 1), (1, 1), (1, 0)]
        assert verify_realization(oss, ccw)
        assert not verify_realization(oss, cw)

    def test_strict_witness_spans_no_extra_squares(self):
        pts = strict_witness(FOUR_SQUARES_10)
        scale = 1
        for p in pts:
            for c in p:
                scale = scale * c.denominator // __import__("math").gcd(
                    scale, c.denominator)
        cleared = PointSet.of(
            (int(x * scale), int(y * scale)) for x, y in pts)
        assert count_squares(cleared) == 4

    def test_strict_witness_keeps_forced_squares(self):
        pts = strict_witness(FORCED_FIFTH_OSS)
        scale = 1
        for p in pts:
            for c in p:
                scale = scale * c.denominator // __import__("math").gcd(
                    scale, c.denominator)
        cleared = PointSet.of(
            (int(x * scale), int(y * scale)) for x, y in pts)
        assert count_squares(cleared) == 5  # four prescribed plus one forced

    def test_strict_witness_requires_realizability(self):
        with pytest.raises(ValueError):
            strict_witness(FIVE_SQUARES_10)


class TestRationalize:
    def test_single_form(self):
        space = solve_gauged(TWO_SQUARES_7)
        dim = space.dimension
        form = (Fraction(0), tuple(
            Fraction(1) if i == 0 else Fraction(0) for i in range(dim)))
        assert rationalize(space, [[form]]) == (1,) + (0,) * (dim - 1)

    def test_vee_groups(self):
        space = solve_gauged(TWO_SQUARES_7)
        z = Fraction(0)
        one = Fraction(1)
        f1 = (z, (one, z))
        f2 = (z, (z, one))
        f3 = (z, (one, -one))
        assert rationalize(space, [[f1], [f2], [f3]]) == (1, 2)

    def test_identically_zero_group_rejected(self):
        space = solve_gauged(TWO_SQUARES_7)
        zero_form = (Fraction(0), (Fraction(0), Fraction(0)))
        with pytest.raises(ValueError):
            rationalize(space, [[zero_form]])


class TestGridEmbedding:
    def test_single_square(self):
        oss = OrientedSquareSet(order=4, squares=((1, 2, 3, 4),))
        emb = grid_embed(oss)
        assert len(emb.points) == 4
        assert count_squares(emb.points) == 1
        assert not emb.exceeds_heuristic_bound

    def test_four_square_chain(self):
        emb = grid_embed(FOUR_SQUARES_10)
        assert len(emb.points) == 10
        assert count_squares(emb.points) >= 4
        assert emb.box_side >= 1
        assert not emb.exceeds_heuristic_bound

    def test_round_trip_from_point_set(self):
        oss = oss_from_pointset(FORCED_FIFTH_SET)
        emb = grid_embed(oss)
        assert count_squares(emb.points) >= count_squares(FORCED_FIFTH_SET)
