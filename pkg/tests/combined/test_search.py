import pytest

from pdsets.probes import EntropyQuadrupleProbe, NaivePairwiseProbe, NonabelianProbe
from pdsets.search import group_catalog, run_search, trial_rng
from pdsets.statement import Context


def test_group_catalog():
    assert [G.name for G in group_catalog(4)] == ["Z1", "Z2", "Z3", "Z2xZ2", "Z4"]
    assert "D3" in [G.name for G in group_catalog(6)]
    with pytest.raises(ValueError):
        group_catalog(0)


def test_trial_rng_is_reproducible():
    assert trial_rng(3, 7).random() == trial_rng(3, 7).random()
    assert trial_rng(3, 7).random() != trial_rng(3, 8).random()


def test_exhaustive_naive_pairwise_in_d3():
    report = run_search(NaivePairwiseProbe(exhaustive=True), Context(seed=0))
    assert report.exhaustive
    assert report.instances == 21**3
    assert report.violated
    assert report.unconfirmed == 0
    assert report.min_margin is not None
    assert report.min_margin.margin < 0


def test_exhaustive_entropy_quadruple():
    report = run_search(EntropyQuadrupleProbe(exhaustive=True), Context(seed=0))
    assert report.instances == 16 + 120 + 560 + 1820
    assert report.violated
    assert all(not v.exact for v in report.violations)


def test_probe_without_exhaustive_mode():
    with pytest.raises(ValueError):
        run_search(NonabelianProbe(exhaustive=True), Context(seed=0))


def test_nonabelian_bound_survives_random_search():
    probe = NonabelianProbe(structures=["D3", "D4", "Q8"], trials=200)
    report = run_search(probe, Context(seed=11))
    assert report.instances == 200
    assert not report.violated
    assert report.errors == 0


@pytest.mark.parametrize("max_workers", [2, 4])
def test_search_does_not_depend_on_thread_count(max_workers):
    probe = NonabelianProbe(structures=["D3", "Z6"], abelian=None, trials=100)
    ctx = Context(seed=42)
    single = run_search(probe, ctx, max_workers=1)
    threaded = run_search(probe, ctx, max_workers=max_workers)
    assert single.model_dump_stable() == threaded.model_dump_stable()
