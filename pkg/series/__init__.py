"""
Exact truncated bivariate EGF arithmetic.
"""
from .bivariate import (  # noqa: F401
    BivarSeries,
    add,
    mul,
    power,
    scale,
    shift_down,
    shift_up,
    sub,
)
from .calculus import (  # noqa: F401
    PowerCache,
    compose_x,
    compose_y,
    deriv_x,
    deriv_y,
    divide,
    exp,
    integrate_y,
)
