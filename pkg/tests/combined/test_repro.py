import pytest

from pdsets.errors import UnknownItem
from pdsets import settings
from pdsets.repro import ITEMS, SUMMARIES, expect_close, run_repro


def test_every_item_matches(testoutput):
    result = run_repro("all", output=testoutput, seed=1)
    assert result.exit_code == 0
    assert result.summary.holds == len(ITEMS)
    assert len(testoutput.messages) == len(ITEMS)
    assert all(msg.endswith(", matches") for msg in testoutput.messages)
    assert all(v.seed == 1 for v in result.verdicts)


def test_single_item(testoutput):
    result = run_repro("dihedral-triple", output=testoutput)
    assert result.source == "dihedral-triple"
    assert testoutput.messages == [f"dihedral-triple: {SUMMARIES['dihedral-triple']}, matches"]
    assert any(v.violated for v in result.verdicts)


def test_unknown_item():
    with pytest.raises(UnknownItem):
        run_repro("no-such-item")


def test_expect_close_uses_the_entropy_tolerance():
    bad = []
    expect_close(bad, "margin", settings.ENTROPY_TOLERANCE / 2, 0.0)
    assert bad == []
    expect_close(bad, "margin", 2 * settings.ENTROPY_TOLERANCE, 0.0)
    assert len(bad) == 1
    assert bad[0].startswith("margin: got")
