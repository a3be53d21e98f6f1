import random
from fractions import Fraction

import pytest

from simplex_grid_opt import (
    Graph,
    alpha_lower_bound,
    evaluate,
    exact_alpha,
    greedy_stable_set,
    grid_minimize,
    motzkin_straus_form,
    parse_graph_text,
)
from strats import petersen


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 4)])
    g = Graph.from_edges(3, [(2, 1), (1, 2)])
    assert g.edges == frozenset({(1, 2)})


def test_parse_edge_list_with_dimacs_noise():
    text = """
    c a comment line
    p edge 5 3
    1 2
    e 2 3
    4 5
    """
    g = parse_graph_text(text)
    assert g.n == 5
    assert g.edges == frozenset({(1, 2), (2, 3), (4, 5)})


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_graph_text("1 2 3")
    with pytest.raises(ValueError):
        parse_graph_text("a b")
    with pytest.raises(ValueError):
        parse_graph_text("c only comments")


def test_motzkin_straus_form_examples():
    empty = Graph.from_edges(3, [])
    f = motzkin_straus_form(empty)
    assert f.coeffs == {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}

    edge = motzkin_straus_form(Graph.from_edges(2, [(1, 2)]))
    assert edge.coeffs == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    # (x1 + x2)^2 is 1 everywhere on the simplex
    assert grid_minimize(edge, 5).value == 1

    k3 = motzkin_straus_form(complete_graph(3))
    assert grid_minimize(k3, 4).value == 1


def test_alpha_lower_bound_examples():
    empty = Graph.from_edges(4, [])
    bound = alpha_lower_bound(empty, 4)
    assert bound.grid_value == Fraction(1, 4)
    assert bound.alpha_lb == 4

    for n in (3, 5):
        bound = alpha_lower_bound(complete_graph(n), 3)
        assert bound.grid_value == 1
        assert bound.alpha_lb == 1


def test_petersen_bound_matches_exact_alpha():
    g = petersen()
    bound = alpha_lower_bound(g, 4)
    assert bound.grid_value == Fraction(1, 4)
    assert bound.alpha_lb == 4
    assert bound.evaluations == 715
    assert exact_alpha(g) == 4


def test_exact_alpha_small_cases():
    assert exact_alpha(Graph.from_edges(1, [])) == 1
    assert exact_alpha(complete_graph(5)) == 1
    assert exact_alpha(Graph.from_edges(4, [])) == 4
    path = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
    assert exact_alpha(path) == 3
    cycle5 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert exact_alpha(cycle5) == 2


def test_exact_alpha_refuses_large_graphs():
    with pytest.raises(ValueError):
        exact_alpha(Graph.from_edges(30, []), max_vertices=25)


def test_greedy_stable_set_is_stable_and_bounds_grid_value():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 9)
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < 0.4
        ]
        g = Graph.from_edges(n, edges)
        chosen = greedy_stable_set(g)
        assert chosen
        assert all((min(u, v), max(u, v)) not in g.edges for u in chosen for v in chosen if u != v)
        # the uniform point on the stable set is a grid point at r = |S|
        s = len(chosen)
        assert grid_minimize(motzkin_straus_form(g), s).value <= Fraction(1, s)


def test_alpha_lower_bound_never_exceeds_truth():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(2, 10)
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < 0.35
        ]
        g = Graph.from_edges(n, edges)
        truth = exact_alpha(g)
        for r in (1, 2, 3, 4):
            assert alpha_lower_bound(g, r).alpha_lb <= truth


def test_alpha_lower_bound_improves_on_r_multiples():
    g = petersen()
    for r, mult in [(1, 2), (2, 2), (2, 3), (4, 2)]:
        low = alpha_lower_bound(g, r).alpha_lb
        high = alpha_lower_bound(g, r * mult).alpha_lb
        assert high >= low


def test_uniform_point_on_stable_set_certifies_value():
    g = petersen()
    f = motzkin_straus_form(g)
    stable = (1, 3, 9, 10)  # pairwise non-adjacent in this labeling
    x = tuple(Fraction(1, 4) if v in stable else Fraction(0) for v in range(1, 11))
    assert evaluate(f, x) == Fraction(1, 4)
