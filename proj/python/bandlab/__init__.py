"""Traveling-band chemotaxis toolkit.

Thin wrapper over the compiled core: closed-form band profiles, the
finite-difference solver, the jump-kernel integrator, and the
verification suites.
"""

from ._bandlab import *  # noqa: F401,F403
from ._bandlab import __doc__ as _core_doc  # noqa: F401
