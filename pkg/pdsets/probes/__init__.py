from .compound import (
    ProjectionSubmodularityProbe,
    SetMainProbe,
    SumsetLogSubmodularityProbe,
)
from .entropic import (
    EntropyQuadrupleProbe,
    EntropySubmodularityProbe,
    PairwiseConditionalProbe,
)
from .rings import SumOfSquaresProbe
from .sumsets import (
    AbelianSumsetProbe,
    GmrLeaveOneOutProbe,
    GmrSingletonsProbe,
    NaivePairwiseProbe,
    NonabelianProbe,
    RuzsaQuadrupleProbe,
    WeightedNonabelianProbe,
)

ALL = (
    ProjectionSubmodularityProbe,
    SetMainProbe,
    SumsetLogSubmodularityProbe,
    EntropySubmodularityProbe,
    EntropyQuadrupleProbe,
    PairwiseConditionalProbe,
    SumOfSquaresProbe,
    NaivePairwiseProbe,
    NonabelianProbe,
    RuzsaQuadrupleProbe,
    AbelianSumsetProbe,
    GmrSingletonsProbe,
    GmrLeaveOneOutProbe,
    WeightedNonabelianProbe,
)

__all__ = [cls.__name__ for cls in ALL]
