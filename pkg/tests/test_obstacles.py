import json
import random
from itertools import combinations

import pytest

from chromaconf.chromatic import chromatic_polynomial
from chromaconf.errors import InputError
from chromaconf.graph import Graph, box_product, make_complete
from chromaconf.obstacles import (
    ObstacleSpec,
    build_gamma,
    full_avoidance_closed_form,
    gamma_poincare,
    is_relatively_complete,
    obstacle_poincare,
    summary,
)
from chromaconf.polynomial import IntPolynomial, falling_factorial


def lambda_route(spec):
    """Divide chi_Gamma by lambda^(r) in lambda, then apply the reciprocity substitution.

    The quotient counts colourings of the movers once the r obstacles are coloured;
    its unsigned coefficients read top-down give the fibre's Betti numbers.
    """
    q = chromatic_polynomial(build_gamma(spec)).exact_div(falling_factorial(spec.r))
    n = spec.n
    return IntPolynomial([(-1) ** j * q.coeff(n - j) for j in range(n + 1)])


def random_spec(rng, total):
    r = rng.randint(1, total - 1)
    n = total - r
    collide = frozenset(p for p in combinations(range(1, n + 1), 2) if rng.random() < 0.5)
    avoid = frozenset((k, s) for k in range(1, n + 1) for s in range(1, r + 1) if rng.random() < 0.5)
    return ObstacleSpec(n, r, collide, avoid)


def test_fixtures():
    assert obstacle_poincare(ObstacleSpec.diagonal(2), 2).base == IntPolynomial([1, 3, 3])
    assert obstacle_poincare(ObstacleSpec.diagonal(3), 2).base == IntPolynomial([1, 6, 14, 13])
    assert gamma_poincare(ObstacleSpec.diagonal(3), 2).base == IntPolynomial([1, 9, 34, 67, 67, 26])


def test_diagonal_three_is_the_prism():
    assert build_gamma(ObstacleSpec.diagonal(3)) == box_product(make_complete(2), make_complete(3))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("r", range(1, 4))
def test_full_avoidance_product(n, r):
    assert obstacle_poincare(ObstacleSpec.full_avoidance(n, r), 3).base == full_avoidance_closed_form(n, r)


def test_closed_form_values():
    assert full_avoidance_closed_form(2, 2) == IntPolynomial([1, 5, 6])
    assert full_avoidance_closed_form(1, 1) == IntPolynomial([1, 1])


def test_random_specs_match_lambda_route():
    rng = random.Random(12)
    for _ in range(40):
        spec = random_spec(rng, rng.randint(2, 6))
        assert obstacle_poincare(spec, 2).base == lambda_route(spec)


def test_free_movers_multiply_back():
    # mover 2 touches nothing, so it contributes a factor 1
    spec = ObstacleSpec(2, 1, frozenset(), frozenset({(1, 1)}))
    assert obstacle_poincare(spec, 2).base == IntPolynomial([1, 1])
    assert lambda_route(spec) == IntPolynomial([1, 1])


def test_relative_completeness():
    g = Graph(3, frozenset({(1, 2), (1, 3)}))
    assert not is_relatively_complete(g, {2, 3})
    assert is_relatively_complete(g, {1, 2})
    with pytest.raises(InputError):
        is_relatively_complete(g, {4})


@pytest.mark.parametrize("kwargs", [
    dict(n=0, r=1), dict(n=1, r=0),
    dict(n=2, r=1, collide=frozenset({(1, 1)})),
    dict(n=2, r=1, collide=frozenset({(1, 3)})),
    dict(n=2, r=1, avoid=frozenset({(1, 2)})),
])
def test_spec_validation(kwargs):
    with pytest.raises(InputError):
        ObstacleSpec(**kwargs)


def test_spec_json_and_load(tmp_path):
    spec = ObstacleSpec.diagonal(3)
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec.to_json()))
    assert ObstacleSpec.load(path) == spec
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(InputError):
        ObstacleSpec.load(tmp_path / "bad.json")
    with pytest.raises(InputError):
        ObstacleSpec.from_json({"n": 2})
    with pytest.raises(InputError):
        ObstacleSpec.load(tmp_path / "missing.json")


def test_summary_text():
    spec = ObstacleSpec.diagonal(2)
    assert summary(spec, obstacle_poincare(spec, 3)) == "2 movers, 2 obstacles, Betti: b_0=1, b_2=3, b_4=3"
