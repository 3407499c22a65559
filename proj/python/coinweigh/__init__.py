"""Balance-scale weighings that confirm coin-bag labels in one weighing."""

from ._coinweigh import *  # noqa: F401,F403
from ._coinweigh import __doc__  # noqa: F401
