"""Exception types shared across the package."""


class NotParkingFunction(ValueError):
    """The word fails the parking process (some car cannot park)."""


class NotUnitInterval(ValueError):
    """The word is not a unit interval parking function (some displacement > 1)."""


class NotTwoInterval(ValueError):
    """The word is not a 2-interval parking function (some displacement > 2)."""


class InvolutionFixedPoint(ValueError):
    """The displacement involution is undefined on the decreasing permutation."""
