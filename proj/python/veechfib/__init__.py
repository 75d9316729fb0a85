"""Python access to the veechfib C++ library.

Family functions return dicts shaped like the CLI's JSON output. Exact values
stay strings ("116", "-3/10"); use ``exact`` to turn one into a Fraction.
"""

import json
from fractions import Fraction

from . import _core

VeechfibError = _core.VeechfibError


def exact(value):
    """Fraction from an exact string such as "-72" or "-35/9"."""
    return Fraction(value)


def error_kind(err):
    """Machine-readable kind of a VeechfibError, e.g. "inadmissible-prime"."""
    return err.kind


def polygon(n, p, closure=False):
    return json.loads(_core.polygon(n, p, closure))


def sporadic(which, p, closure=False):
    return json.loads(_core.sporadic(which, p, closure))


def weierstrass(D, p, data="", zeta=False, closure=False):
    return json.loads(_core.weierstrass(D, p, data, zeta, closure))


def elliptic(m):
    return json.loads(_core.elliptic(m))


def prototypes(D):
    return json.loads(_core.prototypes(D))


def tv_build(family):
    return json.loads(_core.tv_build(family))


def admissible_primes(family, bound):
    """List of (p, exceptional) pairs for a family tag such as "polygon-7"."""
    return _core.admissible_primes(family, bound)


def group_order(p, modulus, lam=""):
    """Order of the group generated by [[1, lam], [0, 1]] and its transpose over F_p[x]/(modulus)."""
    return _core.group_order(p, modulus, lam)


def zeta_curve_euler_characteristic(D):
    return Fraction(_core.zeta_curve_euler_characteristic(D))


__all__ = [
    "VeechfibError", "exact", "error_kind", "polygon", "sporadic", "weierstrass", "elliptic",
    "prototypes", "tv_build", "admissible_primes", "group_order", "zeta_curve_euler_characteristic",
]
