"""Chevalley-Eilenberg symplectic models and their periodic cyclic homology."""

from .hodge import *  # noqa: F401,F403
from .hodge import __all__ as _hodge_all
from .models import *  # noqa: F401,F403
from .models import __all__ as _models_all
from .poisson import *  # noqa: F401,F403
from .poisson import __all__ as _poisson_all

__all__ = list(_models_all) + list(_hodge_all) + list(_poisson_all)
