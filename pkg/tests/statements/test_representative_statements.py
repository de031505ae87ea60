from pdsets.statement import Context
from pdsets.statements import RepresentativeEntropy, SectionInjectivity


def test_section_injectivity(z5):
    v = SectionInjectivity(ground=[[0, 1, 2], [0, 1]]).check(Context(structure=z5))
    assert v.holds
    assert v.witness["R_size"] == 4
    assert v.witness["family"] == ["{1}", "{2}"]


def test_section_injectivity_with_orders(z5):
    statement = SectionInjectivity(
        ground=[[0, 1, 2], [0, 1]], Y=[1, 2], orders=[[2, 1, 0], [1, 0]]
    )
    v = statement.check(Context(structure=z5))
    assert v.holds
    assert v.witness["Y_size"] == 2


def test_collapsing_has_colliding_sections():
    statement = SectionInjectivity(ground=[[0, 1], [0, 1]], function="collapsing", family=[[1]])
    v = statement.check(Context())
    assert v.violated
    assert v.witness["collision"]["smaller"] in ("C<B", "D<A")


def test_representative_entropy(z5):
    assert RepresentativeEntropy(ground=[[0, 1], [0, 1]]).check(Context(structure=z5)).holds
    collapsing = RepresentativeEntropy(
        ground=[[0, 1], [0, 1]], function="collapsing", family="{1}"
    )
    v = collapsing.check(Context())
    assert v.violated
    assert v.witness["failing"] == ["{1}"]
