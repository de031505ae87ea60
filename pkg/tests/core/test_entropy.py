import math
from fractions import Fraction
from random import Random

import pytest

from pdsets.entropy import (
    JointDistribution,
    Variable,
    conditional_entropy_bits,
    coords,
    entropy_bits,
    entropy_of_pmf,
    format_pmf,
    fvar,
    is_functionally_determined,
    joint_law,
    mutual_information_bits,
    point_mass,
    product_distribution,
    pushforward,
    random_joint_distribution,
    random_marginal,
    uniform_on,
    uniformizing_joint,
)
from pdsets.errors import YNotInImage
from pdsets.pdfunc import GroundFamily, GroupElem, builtin_sum

HALF = Fraction(1, 2)

COPY = JointDistribution(supports=((0, 1), (0, 1)), pmf={(0, 0): HALF, (1, 1): HALF})


def test_uniform_and_point_mass():
    assert uniform_on([0, 1, 1]) == {0: HALF, 1: HALF}
    assert point_mass(3) == {3: Fraction(1)}
    with pytest.raises(ValueError):
        uniform_on([])


def test_entropy_of_pmf():
    assert entropy_of_pmf(uniform_on(range(4))) == pytest.approx(2.0)
    assert entropy_of_pmf(point_mass(0)) == 0.0
    pmf = {0: Fraction(1, 4), 1: Fraction(3, 4)}
    expected = -(0.25 * math.log2(0.25) + 0.75 * math.log2(0.75))
    assert entropy_of_pmf(pmf) == pytest.approx(expected)


def test_joint_distribution_validation():
    with pytest.raises(ValueError):
        JointDistribution(supports=((0, 1),), pmf={(0,): HALF})
    with pytest.raises(ValueError):
        JointDistribution(supports=((0, 1),), pmf={(2,): Fraction(1)})
    with pytest.raises(ValueError):
        JointDistribution(supports=((0, 1),), pmf={(0, 1): Fraction(1)})
    with pytest.raises(ValueError):
        JointDistribution(supports=((0, 1),), pmf={(0,): 0.5, (1,): 0.5})


def test_product_distribution():
    dist = product_distribution([uniform_on([0, 1]), point_mass(3)])
    assert dist.k == 2
    assert dict(dist.pmf) == {(0, 3): HALF, (1, 3): HALF}
    assert dist.supports == ((0, 1), (3,))


def test_entropies_of_coordinates():
    dist = product_distribution([uniform_on([0, 1]), uniform_on([0, 1, 2])])
    assert entropy_bits(dist, [coords(1)]) == pytest.approx(1.0)
    assert entropy_bits(dist, [coords(1, 2)]) == pytest.approx(math.log2(6))
    assert entropy_bits(dist, [coords(1), coords(2)]) == pytest.approx(math.log2(6))
    assert mutual_information_bits(dist, [coords(1)], [coords(2)]) == pytest.approx(0.0)
    with pytest.raises(ValueError):
        entropy_bits(dist, [])


def test_copied_coordinate():
    assert conditional_entropy_bits(COPY, [coords(1)], [coords(2)]) == pytest.approx(0.0)
    assert mutual_information_bits(COPY, [coords(1)], [coords(2)]) == pytest.approx(1.0)
    assert is_functionally_determined(COPY, [coords(1)], [coords(2)])
    independent = product_distribution([uniform_on([0, 1]), uniform_on([0, 1])])
    assert not is_functionally_determined(independent, [coords(1)], [coords(2)])


def test_pushforward_of_sum(z5):
    f = builtin_sum(z5, GroundFamily.of([0, 1], [0, 1]))
    dist = product_distribution([uniform_on([0, 1]), uniform_on([0, 1])])
    law = pushforward(dist, f, 0b11)
    assert law == {
        GroupElem(0): Fraction(1, 4),
        GroupElem(1): HALF,
        GroupElem(2): Fraction(1, 4),
    }
    assert entropy_bits(dist, [fvar(f, 0b11)]) == pytest.approx(1.5)
    assert joint_law(dist, [Variable(0b01, f)]) == {(GroupElem(0),): HALF, (GroupElem(1),): HALF}


def test_uniformizing_joint(z5):
    f = builtin_sum(z5, GroundFamily.of([0, 1], [0, 1]))
    dist = uniformizing_joint(f)
    assert dist.pmf[(0, 1)] == Fraction(1, 6)
    assert dist.pmf[(0, 0)] == Fraction(1, 3)
    assert set(pushforward(dist, f, 0b11).values()) == {Fraction(1, 3)}

    restricted = uniformizing_joint(f, [GroupElem(1)])
    assert dict(restricted.pmf) == {(0, 1): HALF, (1, 0): HALF}
    with pytest.raises(YNotInImage):
        uniformizing_joint(f, [GroupElem(4)])


def test_random_laws(rng):
    marginal = random_marginal(rng, [0, 1, 2])
    assert sorted(marginal) == [0, 1, 2]
    assert sum(marginal.values()) == 1

    dist = random_joint_distribution(Random(3), [[0, 1], [0, 1, 2]], sparsity=0.99)
    assert len(dist.pmf) >= 1
    assert sum(dist.pmf.values()) == 1


def test_random_laws_depend_on_the_seed_only():
    first = random_joint_distribution(Random(7), [[0, 1], [0, 1]], sparsity=0.3)
    second = random_joint_distribution(Random(7), [[0, 1], [0, 1]], sparsity=0.3)
    assert first == second


def test_format_pmf():
    assert format_pmf({0: HALF, (1, 2): Fraction(1)}) == {"0": "1/2", "(1, 2)": "1"}
