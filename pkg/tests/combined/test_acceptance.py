"""
Seeded suites over many random instances. Everything here is a theorem, so a single
violation is a bug.
"""

from itertools import combinations_with_replacement

import pytest

from pdsets import Scenario
from pdsets.algebra import cyclic_group, direct_product
from pdsets.entropy import uniform_on
from pdsets.find_scenario import find_scenario
from pdsets.hypergraph import (
    SubsetFamily,
    all_subsets_of_size,
    compression_weight,
    dominates,
    minimal_multiset,
    replay,
)
from pdsets.inequalities.entropic import check_compression_entropy, check_uniformizing
from pdsets.masks import all_masks
from pdsets.output import SavingOutput
from pdsets.pdfunc import GroundFamily, builtin_sum, compound_image
from pdsets.probes import (
    EntropySubmodularityProbe,
    GmrLeaveOneOutProbe,
    GmrSingletonsProbe,
    PairwiseConditionalProbe,
    SetMainProbe,
    SumOfSquaresProbe,
)
from pdsets.probes.common import random_subset
from pdsets.repro import run_repro
from pdsets.representatives import (
    check_representative_entropy,
    lex_min_representatives,
    verify_section_injectivity,
)
from pdsets.search import run_search, trial_rng
from pdsets.statement import Context

SEED = 2024
GROUPS = [cyclic_group(5), cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(2))]


def assert_clean(report, trials):
    assert report.instances == trials
    assert not report.violated, report.violations[0]
    assert report.unconfirmed == 0


def test_entropy_submodularity_suite():
    probe = EntropySubmodularityProbe(structures=["Z5", "Z6", "Z2xZ2"], trials=200)
    assert_clean(run_search(probe, Context(seed=SEED)), 200)


def test_set_main_suite():
    probe = SetMainProbe(max_order=12, max_k=4, max_size=5, trials=500)
    assert_clean(run_search(probe, Context(seed=SEED)), 500)


@pytest.mark.parametrize("probe_class", [GmrSingletonsProbe, GmrLeaveOneOutProbe])
def test_gmr_suites(probe_class):
    probe = probe_class(structures=["Z11", "Z2xZ6"], trials=200)
    assert_clean(run_search(probe, Context(seed=SEED)), 200)


def test_pairwise_conditional_suite():
    probe = PairwiseConditionalProbe(min_k=3, max_k=4, trials=200)
    assert_clean(run_search(probe, Context(seed=SEED)), 200)


def test_sum_of_squares_suite():
    probe = SumOfSquaresProbe(structures=["ZZ13", "ZZ12"], max_size=4, trials=100)
    report = run_search(probe, Context(seed=SEED))
    assert_clean(report, 100)
    assert report.skipped == 0


def _random_sum(index: int):
    rng = trial_rng(SEED, index)
    G = rng.choice(GROUPS)
    k = rng.randint(2, 3)
    sets = [random_subset(rng, G.elements, 3) for _ in range(k)]
    return builtin_sum(G, GroundFamily.of(*sets))


def test_representatives_suite():
    for index in range(100):
        f = _random_sum(index)
        family = [m for m in all_masks(f.k) if m != (1 << f.k) - 1]
        reps = lex_min_representatives(f, compound_image(f, (1 << f.k) - 1))
        assert len(reps) == len(reps.Y)
        assert verify_section_injectivity(f, family, reps).holds
        v = check_representative_entropy(f, family, reps)
        assert v.holds
        assert v.witness["failing"] == []


def test_uniformizing_suite():
    for index in range(100):
        assert check_uniformizing(_random_sum(index)).holds


def _multisets(k: int, max_members: int):
    masks = list(all_masks(k))
    for size in range(1, max_members + 1):
        for members in combinations_with_replacement(masks, size):
            yield SubsetFamily(k, members)


def test_compressions_reach_the_minimal_multiset():
    f = builtin_sum(cyclic_group(5), GroundFamily.of(*[[0, 1]] * 4))
    marginals = [uniform_on([0, 1])] * 4
    for A in _multisets(4, 4):
        B = minimal_multiset(A)
        result = dominates(A, B)
        assert result.status == "yes", str(A)
        weights = [compression_weight(F) for F in replay(A, result.steps)]
        assert weights == sorted(set(weights))
        assert not check_compression_entropy(f, marginals, A, B, result.steps).violated


def test_pairs_need_compressions():
    A = all_subsets_of_size(4, 2)
    assert len(dominates(A, minimal_multiset(A)).steps) > 0


@pytest.mark.parametrize(
    "name, exit_code", [("projection", 2), ("dihedral", 2), ("sumsets", None)]
)
def test_builtin_searches_are_reproducible(name, exit_code):
    scenario = Scenario.from_path(find_scenario(name))
    first = scenario.execute(section="search", output=SavingOutput())
    second = scenario.execute(section="search", output=SavingOutput(), threads=2)
    assert [r.model_dump_stable() for r in first.reports] == [
        r.model_dump_stable() for r in second.reports
    ]
    if exit_code is not None:
        assert first.exit_code == exit_code


def test_dihedral_triple_runs_both_middle_forms():
    testoutput = SavingOutput()
    result = run_repro("dihedral-triple", output=testoutput)
    assert result.exit_code == 0
    by_name = {v.statement: v for v in result.verdicts}
    assert list(by_name) == ["naive-pairwise", "nonabelian", "ruzsa-triple"]
    assert by_name["naive-pairwise"].violated
    triple = by_name["ruzsa-triple"]
    assert triple.holds
    assert (triple.lhs, triple.rhs) == (16, 16)
    assert triple.witness["max|S+t+U|"] == 4
