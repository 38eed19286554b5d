"""Exception and warning types shared across the package."""


class NonSymmetric(ValueError):
    """Operation requires the symmetric configuration (g1=g2, v1=v2, kappa1=kappa2)."""


class ConfigInvalid(ValueError):
    """Integrator or scenario configuration is unusable (e.g. non-positive dt)."""


class DegenerateBlock(ValueError):
    """A mode block is defective (p = 0) and has no eigenbasis."""


class GridInvalid(ValueError):
    """Frequency grid is empty or not strictly increasing."""


class DivergentIntegral(ValueError):
    """Requested frequency integral does not converge (eta_j + eta_k <= 0)."""


class LabelAmbiguous(UserWarning):
    """Two eigenvalues coincide; quasi-mode labels cannot be assigned."""


class RegimeWarning(UserWarning):
    """Parameters are outside the regime where a perturbative result is accurate."""
