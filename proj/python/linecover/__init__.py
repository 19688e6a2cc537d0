"""Covers of line graphs: equivalence/chordal covers, elbow orientations, order families."""

try:
    from ._core import *  # noqa: F401,F403  (wheel layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # build-tree layout: _core sits on sys.path next to the package
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
