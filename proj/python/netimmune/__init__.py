"""Cost-vs-benefit Pareto fronts for node immunization in networks."""

try:
    from ._netimmune import *  # noqa: F401,F403
    from ._netimmune import __version__  # noqa: F401
except ImportError:
    from _netimmune import *  # noqa: F401,F403
    from _netimmune import __version__  # noqa: F401
