from ._hqt import *  # noqa: F401,F403
from ._hqt import __doc__  # noqa: F401
