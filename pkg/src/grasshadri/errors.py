"""Exception hierarchy shared by the engine and the CLI."""


class GrasshadriError(Exception):
    """Base class for every error raised by this package."""


class InvalidBundle(GrasshadriError, ValueError):
    pass


class SemistableInput(InvalidBundle):
    """Only one slope is present, so there is no Harder-Narasimhan level to pick."""


class RankNotAligned(GrasshadriError, ValueError):
    """The requested quotient rank is not the rank of an HN tail E/E_{m-1}."""


class RhoOutOfRange(GrasshadriError, ValueError):
    pass


class NotNormalized(GrasshadriError, ValueError):
    pass


class ZetaUnavailable(GrasshadriError):
    """No HN head E_c has rank r, so the pseudo-effective cone is not determined."""


class BelowThetaBound(GrasshadriError, ValueError):
    pass


class NotAmple(GrasshadriError, ValueError):
    pass


class HypothesisUnavailable(GrasshadriError):
    """Neither Seshadri theorem applies to the given bundle and level."""
