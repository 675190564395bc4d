"""Exact h-Sidon (B_h) set verification and perturbation over the rationals.

Rationals are accepted as ``int``, ``fractions.Fraction`` or ``"p/q"`` strings and
returned as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _core
from ._core import SidonError, run_cli

__all__ = [
    "SidonError",
    "abs_value",
    "exact_grid_density",
    "forbidden_set",
    "h_fold_sumset",
    "is_sidon",
    "perturb",
    "r_s_sum_difference",
    "run_cli",
    "shifted_sumset",
    "sidon_density",
    "small_nonzero_element",
    "verify",
    "weight_vectors",
]


def _text(x):
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, Fraction or a 'p/q' string")
    return str(x)


def _texts(xs):
    return [_text(x) for x in xs]


def _fractions(xs):
    return [Fraction(x) for x in xs]


def verify(points, h, method="bruteforce"):
    """Verdict dict: is_sidon, h, witness, weight, collision_sum."""
    return _core.verify(_texts(points), h, method)


def is_sidon(points, h):
    return verify(points, h)["is_sidon"]


def perturb(alpha, epsilons, h, abs="archimedean", p=None, allow_duplicates=False):
    """Returns (beta, trace). A single epsilon applies to every index."""
    if not isinstance(epsilons, (list, tuple)):
        epsilons = [epsilons]
    result = _core.perturb(_texts(alpha), _texts(epsilons), h, abs, p, allow_duplicates)
    return _fractions(result["beta"]), result["trace"]


def forbidden_set(a, a_star, h):
    return _fractions(_core.forbidden_set(_texts(a), _text(a_star), h))


def weight_vectors(k, h, canonical=False):
    return _core.weight_vectors(k, h, canonical)


def h_fold_sumset(a, h):
    return _fractions(_core.h_fold_sumset(_texts(a), h))


def r_s_sum_difference(a, r, s):
    return _fractions(_core.r_s_sum_difference(_texts(a), r, s))


def shifted_sumset(a, b, r, h):
    return _fractions(_core.shifted_sumset(_texts(a), _text(b), r, h))


def abs_value(x, abs="archimedean", p=None):
    return Fraction(_core.abs_value(_text(x), abs, p))


def small_nonzero_element(bound, abs="archimedean", p=None):
    return Fraction(_core.small_nonzero_element(_text(bound), abs, p))


def sidon_density(k, h, trials, sampler, seed=0):
    return _core.sidon_density(k, h, trials, sampler, seed)


def exact_grid_density(n, k, h):
    return _core.exact_grid_density(n, k, h)
