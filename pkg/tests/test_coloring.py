import random

import pytest

from schedflow.coloring import (
    COLORING_TO_SCHEDULE,
    SCHEDULE_TO_COLORING,
    Coloring,
    coloring_instance_to_csp,
    dsatur,
    exact_chromatic_number,
    exact_coloring,
    is_schedulable,
    translate_certificate,
    validate_coloring,
    welsh_powell,
)
from schedflow.errors import GuardError
from schedflow.graphs import ConflictGraph

from oracles import brute_force_chromatic_number


def cycle(n):
    return ConflictGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return ConflictGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return ConflictGraph(10, outer + spokes + inner)


def random_graph(rng, max_n=10):
    n = rng.randint(0, max_n)
    g = ConflictGraph(n)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < rng.choice((0.2, 0.5, 0.8)):
                g.add_conflict(i, j)
    return g


class TestWelshPowell:
    def test_edgeless(self):
        assert welsh_powell(ConflictGraph(5)).num_colors == 1

    def test_complete_graph(self):
        assert welsh_powell(complete_graph(4)).num_colors == 4

    def test_five_cycle_with_tie_break(self):
        # equal degrees, so processing order is 0..4; hand trace gives
        # colors (0, 1, 0, 1, 2)
        c = welsh_powell(cycle(5))
        assert c.color_of == {0: 0, 1: 1, 2: 0, 3: 1, 4: 2}
        assert c.num_colors == 3

    def test_empty_graph(self):
        c = welsh_powell(ConflictGraph(0))
        assert c.num_colors == 0
        assert validate_coloring(ConflictGraph(0), c).ok


class TestDsatur:
    def test_edgeless(self):
        assert dsatur(ConflictGraph(5)).num_colors == 1

    def test_six_cycle_exactly_two_colors(self):
        c = dsatur(cycle(6))
        assert c.num_colors == 2
        assert validate_coloring(cycle(6), c).ok

    def test_bipartite_graphs_get_two_colors(self):
        # even cycles and random trees are connected bipartite
        for n in (4, 8, 12):
            assert dsatur(cycle(n)).num_colors == 2
        rng = random.Random(5)
        for _ in range(10):
            n = rng.randint(2, 12)
            tree = ConflictGraph(n, [(rng.randrange(v), v) for v in range(1, n)])
            assert dsatur(tree).num_colors == 2

    def test_complete_graph(self):
        assert dsatur(complete_graph(4)).num_colors == 4


class TestValidateColoring:
    def test_edgeless_all_same_color_ok(self):
        g = ConflictGraph(3)
        assert validate_coloring(g, Coloring.from_colors({0: 0, 1: 0, 2: 0})).ok

    def test_monochromatic_edge(self):
        g = ConflictGraph(2, [(0, 1)])
        report = validate_coloring(g, Coloring.from_colors({0: 0, 1: 0}))
        assert not report.ok
        assert any("(0, 1)" in v for v in report.violations)

    def test_partial_coloring_is_violation(self):
        g = ConflictGraph(3, [(0, 1)])
        report = validate_coloring(g, Coloring.from_colors({0: 0}))
        assert not report.ok
        assert any("uncolored" in v for v in report.violations)

    def test_solver_outputs_validate(self):
        rng = random.Random(11)
        for _ in range(30):
            g = random_graph(rng)
            assert validate_coloring(g, welsh_powell(g)).ok
            assert validate_coloring(g, dsatur(g)).ok


class TestExactChromaticNumber:
    def test_triangle(self):
        assert exact_chromatic_number(complete_graph(3)) == 3

    def test_edgeless(self):
        assert exact_chromatic_number(ConflictGraph(4)) == 1

    def test_empty(self):
        assert exact_chromatic_number(ConflictGraph(0)) == 0

    def test_petersen(self):
        g = petersen()
        assert exact_chromatic_number(g) == 3
        # cross-checks: a concrete witness validates, and the odd outer
        # cycle rules out 2 colors
        witness = exact_coloring(g)
        assert witness.num_colors == 3
        assert validate_coloring(g, witness).ok
        assert not is_schedulable(coloring_instance_to_csp(g, 2))

    def test_guard(self):
        with pytest.raises(GuardError):
            exact_chromatic_number(ConflictGraph(13))

    @pytest.mark.parametrize("seed", range(25))
    def test_matches_enumeration_oracle(self, seed):
        g = random_graph(random.Random(seed), max_n=7)
        expected = brute_force_chromatic_number(g.num_courses, g.conflicts())
        assert exact_chromatic_number(g) == expected

    @pytest.mark.parametrize("seed", range(10))
    def test_adding_edge_never_decreases(self, seed):
        rng = random.Random(300 + seed)
        g = random_graph(rng, max_n=8)
        missing = [
            (i, j)
            for i in range(g.num_courses)
            for j in range(i + 1, g.num_courses)
            if not g.has_conflict(i, j)
        ]
        if not missing:
            return
        before = exact_chromatic_number(g)
        bigger = ConflictGraph(g.num_courses, g.conflicts() + [rng.choice(missing)])
        assert exact_chromatic_number(bigger) >= before


class TestGreedyBounds:
    @pytest.mark.parametrize("seed", range(30))
    def test_exact_at_most_greedy_and_delta_bound(self, seed):
        g = random_graph(random.Random(7000 + seed))
        chi = exact_chromatic_number(g)
        bound = g.max_degree() + 1 if g.num_courses else 0
        for solver in (welsh_powell, dsatur):
            c = solver(g)
            assert chi <= c.num_colors
            assert c.num_colors <= max(bound, chi)

    def test_determinism(self):
        g = random_graph(random.Random(77))
        assert welsh_powell(g).color_of == welsh_powell(g).color_of
        assert dsatur(g).color_of == dsatur(g).color_of


class TestReduction:
    def test_k3_schedulable_in_three_not_two(self):
        g = complete_graph(3)
        inst = coloring_instance_to_csp(g, 3)
        assert inst.courses.num_courses == 3
        assert inst.courses.num_conflicts == 3
        assert is_schedulable(inst)
        assert not is_schedulable(coloring_instance_to_csp(g, 2))

    def test_c5_threshold(self):
        g = cycle(5)
        assert not is_schedulable(coloring_instance_to_csp(g, 2))
        assert is_schedulable(coloring_instance_to_csp(g, 3))

    def test_translation_is_identity_shaped(self):
        g = cycle(5)
        inst = coloring_instance_to_csp(g, 2)
        assert inst.courses.conflicts() == g.conflicts()

    @pytest.mark.parametrize("seed", range(20))
    def test_schedulable_iff_chromatic_at_most_k(self, seed):
        g = random_graph(random.Random(400 + seed), max_n=8)
        if g.num_courses == 0:
            return
        chi = exact_chromatic_number(g)
        for k in range(1, g.max_degree() + 2):
            assert is_schedulable(coloring_instance_to_csp(g, k)) == (chi <= k)


class TestCertificateTranslation:
    def test_valid_coloring_becomes_valid_schedule(self):
        g = cycle(5)
        witness = exact_coloring(g)
        schedule = translate_certificate(COLORING_TO_SCHEDULE, witness)
        assert validate_coloring(coloring_instance_to_csp(g, 3).courses, schedule).ok

    def test_invalid_witness_stays_invalid(self):
        g = ConflictGraph(2, [(0, 1)])
        bad = Coloring.from_colors({0: 0, 1: 0})
        translated = translate_certificate(COLORING_TO_SCHEDULE, bad)
        assert not validate_coloring(g, translated).ok

    def test_round_trip_is_involution(self):
        witness = Coloring.from_colors({0: 0, 1: 1, 2: 0})
        back = translate_certificate(
            SCHEDULE_TO_COLORING,
            translate_certificate(COLORING_TO_SCHEDULE, witness),
        )
        assert back.color_of == witness.color_of
        assert back.num_colors == witness.num_colors

    def test_partial_witness_rejected(self):
        with pytest.raises(ValueError):
            translate_certificate(COLORING_TO_SCHEDULE, Coloring.from_colors({0: 0, 2: 1}))

    def test_unknown_direction_rejected(self):
        with pytest.raises(ValueError):
            translate_certificate("sideways", Coloring.from_colors({0: 0}))
