"""Exception taxonomy shared across the package."""


class QHSeriesError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(QHSeriesError):
    """Quiver file (or other textual input) is syntactically invalid."""


class CycleError(QHSeriesError):
    """The directed graph contains a directed cycle."""


class DisconnectedError(QHSeriesError):
    """The underlying undirected graph is not connected."""


class DuplicateArrowName(QHSeriesError):
    """Two arrows share a name."""


class NotDynkin(QHSeriesError):
    """Operation requires a Dynkin quiver."""


class SizeMismatch(QHSeriesError):
    """Matrix or series operands have incompatible sizes."""


class NonInvertibleConstantTerm(QHSeriesError):
    """Series inversion needs a constant coefficient invertible over the integers."""


class AdamsDegreeNotPositive(QHSeriesError):
    """Generator summands must sit in Adams degree >= 1."""


class NonzeroConstantTerm(QHSeriesError):
    """Tensor-algebra series needs a generator series with zero constant term."""


class NotRegular(QHSeriesError):
    """Weight vector pairs to zero with some positive root."""


class NotSincere(QHSeriesError):
    """Weight vector has a zero entry where a nonzero one is required."""


class MissingWeight(QHSeriesError):
    """Operation needs a weight vector and none was supplied."""


class InhomogeneousRelation(QHSeriesError):
    """Relation terms do not share a common Adams degree."""


class DegreeOverflow(QHSeriesError):
    """Monomial count in some degree exceeds the configured cap."""


class NotAPermutationResidue(QHSeriesError):
    """Series residue is not of the form 1 + P*t^h with P a permutation matrix."""
