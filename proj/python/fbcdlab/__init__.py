from ._fbcd import *  # noqa: F401,F403
from ._fbcd import __doc__  # noqa: F401
