from ._cfgwc import *  # noqa: F401,F403
from ._cfgwc import __version__  # noqa: F401
