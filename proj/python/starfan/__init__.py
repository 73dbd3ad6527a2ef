"""Binary classification by star-shaped polyhedral sets on a fixed fan."""

from starfan._core import *  # noqa: F401,F403
from starfan._core import __doc__  # noqa: F401

__version__ = "0.1.0"
