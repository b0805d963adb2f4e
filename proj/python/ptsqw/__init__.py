"""Spectra of exactly solvable PT-symmetric square-well models."""

try:
    from ._ptsqw import *  # noqa: F401,F403
    from ._ptsqw import __version__  # noqa: F401
except ImportError:  # running from the build tree
    from _ptsqw import *  # noqa: F401,F403
    from _ptsqw import __version__  # noqa: F401
