"""Binomial thinning, ultra-log-concave pmfs and discrete entropy power."""

from thinlab._thinlab import *  # noqa: F401,F403
from thinlab._thinlab import __doc__  # noqa: F401

__version__ = "0.1.0"
