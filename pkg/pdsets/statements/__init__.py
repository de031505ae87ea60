from .compound import (
    FullCompound,
    LogSubmodularity,
    ProjectionBound,
    ProjectionSubmodularity,
    SetMain,
    SumsetLogSubmodularity,
)
from .entropic import (
    CompressionEntropy,
    DataProcessing,
    Entropy4Sets,
    EntropyQuadruple,
    EntropySubmodularity,
    EntropyUpperBound,
    MutualInformation,
    PairwiseConditional,
    UniformizingJoint,
)
from .representatives import RepresentativeEntropy, SectionInjectivity
from .rings import Factorized, PolynomialCompound, SumOfSquares
from .sumsets import (
    AbelianSumset,
    GmrLeaveOneOut,
    GmrSingletons,
    NaivePairwise,
    Nonabelian,
    RegularAbelian,
    RuzsaQuadruple,
    RuzsaTriple,
    WeightedNonabelian,
)

ALL = (
    AbelianSumset,
    CompressionEntropy,
    DataProcessing,
    Entropy4Sets,
    EntropyQuadruple,
    EntropySubmodularity,
    EntropyUpperBound,
    Factorized,
    FullCompound,
    GmrLeaveOneOut,
    GmrSingletons,
    LogSubmodularity,
    MutualInformation,
    NaivePairwise,
    Nonabelian,
    PairwiseConditional,
    PolynomialCompound,
    ProjectionBound,
    ProjectionSubmodularity,
    RegularAbelian,
    RepresentativeEntropy,
    RuzsaQuadruple,
    RuzsaTriple,
    SectionInjectivity,
    SetMain,
    SumOfSquares,
    SumsetLogSubmodularity,
    UniformizingJoint,
    WeightedNonabelian,
)
