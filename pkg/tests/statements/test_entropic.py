import math
from fractions import Fraction

import pytest

from pdsets.entropy import JointDistribution, product_distribution, uniform_on
from pdsets.errors import InvalidChain, NotStronglyPD
from pdsets.hypergraph import FractionalCovering, singletons
from pdsets.inequalities.entropic import (
    check_data_processing,
    check_entropy_counterexample_4sets,
    check_entropy_submodularity,
    check_entropy_upper_bound,
    check_mutual_information_identity,
    check_pairwise_conditional,
    check_uniformizing,
    entropy_counterexample_distribution,
)
from pdsets.pdfunc import GroundFamily, GroupElem, builtin_sum
from pdsets.statement import Context
from pdsets.statements import (
    CompressionEntropy,
    Entropy4Sets,
    EntropyQuadruple,
    EntropySubmodularity,
    EntropyUpperBound,
    MutualInformation,
    PairwiseConditional,
    UniformizingJoint,
)

BITS = [[0, 1], [0, 1], [0, 1]]
H_SUM_OF_3_BITS = -2 * (1 / 8 * math.log2(1 / 8) + 3 / 8 * math.log2(3 / 8))


@pytest.fixture
def sum_of_bits(z5):
    return builtin_sum(z5, GroundFamily.of(*BITS))


def uniform_bits(k):
    return [uniform_on([0, 1])] * k


def test_entropy_submodularity(sum_of_bits):
    v = check_entropy_submodularity(sum_of_bits, uniform_bits(3), 0b011, 0b110)
    assert v.holds
    assert v.lhs == pytest.approx(H_SUM_OF_3_BITS + 1)
    assert v.rhs == pytest.approx(3.0)
    assert v.witness["H(f_s)"] == pytest.approx(1.5)


def test_entropy_submodularity_needs_strongly_pd(d3):
    ctx = Context(structure=d3)
    statement = EntropySubmodularity(
        ground=[["e", "F"], ["R"], ["e", "F"]], s="{1,2}", t="{2,3}", function="ordered-sum"
    )
    with pytest.raises(NotStronglyPD):
        statement.check(ctx)

    unchecked = EntropySubmodularity(
        ground=[["e", "F"], ["R"], ["e", "F"]],
        s="{1,2}",
        t="{2,3}",
        function="ordered-sum",
        check_hypothesis=False,
    )
    assert unchecked.check(ctx).status in ("holds", "violated", "inconclusive")


def test_entropy_submodularity_statement(z5):
    v = EntropySubmodularity(ground=BITS, s="{1,2}", t="{2,3}").check(Context(structure=z5))
    assert v.holds
    assert v.witness["marginals"][0] == {"0": "1/2", "1": "1/2"}


def test_weighted_marginals(z5):
    statement = EntropySubmodularity(
        ground=[[0, 1], [0, 1]],
        s="{1}",
        t="{2}",
        marginals=[{0: "1/4", 1: "3/4"}, {0: 1, 1: 0}],
    )
    v = statement.check(Context(structure=z5))
    assert v.witness["H(f_t)"] == pytest.approx(0.0)
    assert v.witness["marginals"][1] == {"0": "1"}


def test_entropy_upper_bound(z5):
    f = builtin_sum(z5, GroundFamily.of([0, 1], [0, 1]))
    v = check_entropy_upper_bound(f, uniform_bits(2), FractionalCovering.of(singletons(2), [1, 1]))
    assert v.holds
    assert (v.lhs, v.rhs) == (pytest.approx(1.5), pytest.approx(2.0))

    statement = EntropyUpperBound(ground=[[0, 1], [0, 1]], covering="singletons")
    assert statement.check(Context(structure=z5)).lhs == pytest.approx(1.5)


def test_compression_entropy(z5):
    v = CompressionEntropy(ground=BITS, family="{1,2} {2,3}").check(Context(structure=z5))
    assert v.holds
    assert v.lhs == pytest.approx(1 + H_SUM_OF_3_BITS)
    assert v.rhs == pytest.approx(3.0)
    assert len(v.witness["steps"]) == 1
    assert v.witness["B"] == "{2} {1,2,3}"


def test_compression_entropy_needs_a_chain(z5):
    statement = CompressionEntropy(ground=BITS, family="{1,2} {2,3}", target="{1,2,3}")
    with pytest.raises(InvalidChain):
        statement.check(Context(structure=z5))


def test_entropy_4sets():
    v = check_entropy_counterexample_4sets()
    assert v.violated
    assert v.lhs == pytest.approx(1.0)
    assert v.rhs == pytest.approx(2 / 3)
    assert v.margin == pytest.approx(-1 / 3)

    v = Entropy4Sets(m=4).check(Context())
    assert (v.lhs, v.rhs) == (pytest.approx(2.0), pytest.approx(4 / 3))

    assert Entropy4Sets(degenerate=True).check(Context()).holds


def test_entropy_quadruple_statement():
    statement = EntropyQuadruple(distribution={"0 0 0 0": "1/2", "0 1 1 0": "1/2"})
    v = statement.check(Context())
    assert v.violated
    assert v.rhs == pytest.approx(2 / 3)
    assert v.note == "entropy analogue of the four-set problem"


def test_counterexample_distribution():
    dist = entropy_counterexample_distribution(3)
    assert dist.supports == ((0,), (0, 1, 2), (0, 1, 2), (0,))
    assert dist.pmf[(0, 1, 1, 0)] == Fraction(1, 3)
    with pytest.raises(ValueError):
        entropy_counterexample_distribution(0)


def test_pairwise_conditional():
    v = check_pairwise_conditional(product_distribution(uniform_bits(3)))
    assert v.holds
    assert v.lhs == pytest.approx(6.0)
    assert v.witness["terms"]["H(Z1,Z3|Z(1,3))"] == pytest.approx(2.0)

    copies = PairwiseConditional(distribution={"0 0 0": "1/2", "1 1 1": "1/2"})
    v = copies.check(Context())
    assert v.holds
    assert (v.lhs, v.rhs) == (pytest.approx(2.0), pytest.approx(2.0))


def test_mutual_information(sum_of_bits):
    v = check_mutual_information_identity(sum_of_bits, uniform_bits(3), 0b001, 0b010)
    assert v.holds
    assert v.note == "equality"
    assert v.witness["strongly_pd"] is True
    with pytest.raises(ValueError):
        check_mutual_information_identity(sum_of_bits, uniform_bits(3), 0b011, 0b010)


def test_mutual_information_statement(z5):
    v = MutualInformation(ground=BITS, s="{1}", t="{2,3}").check(Context(structure=z5))
    assert v.holds


def test_data_processing(z5):
    joint = JointDistribution(
        supports=((0, 1), (0, 1)), pmf={(0, 0): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    )
    f = builtin_sum(z5, joint.ground())
    v = check_data_processing(joint, f, 0b01, 0b10)
    assert v.holds
    assert v.witness["I(Z_A;Z_B)"] == pytest.approx(1.0)


def test_uniformizing(z5):
    f = builtin_sum(z5, GroundFamily.of([0, 1], [0, 1]))
    v = check_uniformizing(f)
    assert v.holds
    assert v.lhs == 0
    assert v.witness["H(f)"] == pytest.approx(math.log2(3))

    restricted = check_uniformizing(f, [GroupElem(0), GroupElem(2)])
    assert restricted.holds
    assert restricted.witness["Y_size"] == 2


def test_uniformizing_statement(z5):
    statement = UniformizingJoint(ground=[[0, 1, 2], [0, 1]], Y=[1, 3])
    assert statement.check(Context(structure=z5)).holds
