import random
from fractions import Fraction

import pytest

from antilabel import (
    Graph,
    anti_l21_lower_bound,
    anti_l21_number,
    complete_multipartite,
    cycle,
    distance_two_pairs,
    lambda_bracket,
    lambda_number,
    path,
    union,
)
from helpers import (
    anti_l21_by_enumeration,
    lambda_by_enumeration,
    random_edged_graph,
    random_graph,
)

K3 = complete_multipartite(1, 1, 1)


def test_distance_two_pairs():
    assert distance_two_pairs(path(4)) == ((0, 2), (1, 3))
    assert distance_two_pairs(K3) == ()
    assert distance_two_pairs(Graph(3)) == ()
    assert distance_two_pairs(cycle(5)) == ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))


def test_lambda_examples():
    assert lambda_number(K3) == 4
    assert lambda_number(path(4)) == 3
    assert lambda_by_enumeration(path(4)) == 3
    assert lambda_number(Graph(5)) == 0
    assert lambda_number(path(2)) == 2
    assert lambda_number(cycle(5)) == 4


def test_lambda_matches_enumeration_oracle():
    rng = random.Random(19)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 5), rng.choice([0.3, 0.6]))
        assert lambda_number(g) == lambda_by_enumeration(g)


def test_lambda_scaling_in_d():
    rng = random.Random(23)
    for _ in range(15):
        g = random_edged_graph(rng, rng.randint(2, 6), 0.5)
        base = lambda_number(g, 1)
        for d in (2, 3):
            assert lambda_number(g, d) == d * base


def test_lambda_degree_cap():
    rng = random.Random(37)
    for _ in range(30):
        g = random_edged_graph(rng, rng.randint(3, 7), rng.choice([0.4, 0.6, 0.9]))
        delta = g.max_degree
        if delta >= 2:
            assert lambda_number(g) <= delta * delta + delta - 2


def test_lower_bound_examples():
    assert anti_l21_lower_bound(cycle(5), 9, with_lambda=False).generic == 4
    assert anti_l21_lower_bound(cycle(5), 1).best == 0
    bound = anti_l21_lower_bound(K3, 9)
    assert bound.via_lambda == 4 and bound.generic == 4 and bound.best == 4


def test_lower_bound_degenerate_degree():
    bound = anti_l21_lower_bound(path(2), 5)
    assert bound.generic is None
    assert bound.via_lambda == 4  # lambda of a single edge is 2
    with pytest.raises(ValueError):
        anti_l21_lower_bound(Graph(3), 5)


def test_bracket_examples():
    assert lambda_bracket(9, 4) == (Fraction(8, 3), Fraction(4))
    assert lambda_bracket(2, 2) == (Fraction(1, 2), Fraction(1))
    lo, hi = lambda_bracket(9, 4)
    assert lo < lambda_number(K3) <= hi
    with pytest.raises(ValueError):
        lambda_bracket(9, 0)
    with pytest.raises(ValueError):
        lambda_bracket(9, 3)


def test_anti_number_examples():
    assert anti_l21_number(path(2), 5) == 4
    assert anti_l21_number(path(3), 7) == 4
    assert anti_l21_by_enumeration(path(3), 7) == 4
    assert anti_l21_number(Graph(4), 9) is None
    assert anti_l21_number(K3, 4) == 0


def test_anti_number_matches_enumeration_oracle():
    rng = random.Random(43)
    for _ in range(20):
        g = random_edged_graph(rng, rng.randint(2, 4), 0.6)
        k = rng.randint(2, 7)
        assert anti_l21_number(g, k) == anti_l21_by_enumeration(g, k)


def test_anti_number_soundness_and_bracket():
    rng = random.Random(47)
    for _ in range(25):
        g = random_edged_graph(rng, rng.randint(2, 7), rng.choice([0.3, 0.5]))
        k = rng.randint(3, 12)
        exact = anti_l21_number(g, k)
        assert exact >= anti_l21_lower_bound(g, k).best
        if exact > 0:
            lo, hi = lambda_bracket(k, exact)
            assert lo < lambda_number(g) <= hi


def test_subgraph_and_union_laws():
    rng = random.Random(59)
    for _ in range(20):
        g = random_edged_graph(rng, rng.randint(3, 6), 0.5)
        k = rng.randint(4, 10)
        sub = Graph(g.n, [e for e in g.edges if rng.random() < 0.7])
        if sub.m:
            assert anti_l21_number(sub, k) >= anti_l21_number(g, k)
        other = random_edged_graph(rng, rng.randint(2, 4), 0.6)
        assert anti_l21_number(union(g, other), k) == min(
            anti_l21_number(g, k), anti_l21_number(other, k)
        )
