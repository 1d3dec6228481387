"""Exception types shared across the toolkit."""


class LhpartsError(ValueError):
    """Base class for all toolkit errors."""


class IncreasingInput(LhpartsError):
    """Input sequence is not nonincreasing after zero-stripping."""


class BadModulus(LhpartsError):
    """Modulus must be at least 2."""


class BadIndex(LhpartsError):
    """Statistic component index out of range."""


class BadBlock(LhpartsError):
    """Block index out of range for fb/lb."""


class NotInDm(LhpartsError):
    """Partition has a nonzero part repeated m or more times."""


class BadSpec(LhpartsError):
    """Invalid class specification parameters."""


class NotFlat(LhpartsError):
    """Partition is not m-flat."""


class NotMultiple(LhpartsError):
    """Inserted part is not a positive multiple of m."""


class NoValidIndex(LhpartsError):
    """No raise index makes the insertion result m-flat (caller bug)."""


class NotMRegular(LhpartsError):
    """Partition has a part divisible by m."""


class NotFound(LhpartsError):
    """Search oracle found no preimage."""


class NotUnique(LhpartsError):
    """Search oracle found more than one preimage."""


class OutOfRange(LhpartsError):
    """Inserted part exceeds the order bound."""


class EmptyInput(LhpartsError):
    """Operation requires a nonempty partition."""


class NotInClass(LhpartsError):
    """Partition is not a member of the required class."""


class HasMultipleOfM(LhpartsError):
    """Relabeling requires every part to have a nonzero residue."""


class CountMismatch(LhpartsError):
    """Residue vector total does not match the number of parts."""


class BoundMismatch(LhpartsError):
    """Series operands have different truncation bounds or variable counts."""


class NonPositiveDegree(LhpartsError):
    """Geometric expansion requires a monomial of positive q-degree."""
