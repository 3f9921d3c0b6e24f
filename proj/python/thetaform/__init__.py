"""Exact q-series identities for powers of theta2, with numeric checks."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Error,
    QSeries,
    branch_unavailable,
    convergence_too_slow,
    cutoff_too_small,
    equal_to_order,
    eta_quotient,
    eval_eta,
    eval_theta,
    insufficient_order,
    invalid_argument,
    lambert_even,
    lambert_odd,
    odd_c,
    psi_multiplier,
    render_decomposition,
    residual_nonzero,
    series_from_json,
    sigma_series,
    theta_power,
    unsupported_power,
)

__all__ = [
    "Error",
    "QSeries",
    "catalog",
    "cli",
    "decompose",
    "dedekind_eta_check",
    "eisenstein_constant",
    "equal_to_order",
    "eta_quotient",
    "eval_eta",
    "eval_theta",
    "lambert_even",
    "lambert_odd",
    "lattice_sum_check",
    "palin_P",
    "palin_p",
    "psi_multiplier",
    "render_decomposition",
    "series_from_json",
    "sigma_series",
    "theta_power",
    "transform_check",
    "verify",
    "wp_recurrence_poly",
]


def _fractionize(obj):
    """Turn "num/den" strings under coefficient keys into Fractions."""
    if isinstance(obj, dict):
        out = {}
        for key, value in obj.items():
            if key in ("coeff", "constant", "sigma_constant", "lhs", "rhs") and isinstance(value, str):
                out[key] = Fraction(value)
            else:
                out[key] = _fractionize(value)
        return out
    if isinstance(obj, list):
        return [_fractionize(v) for v in obj]
    return obj


def eisenstein_constant(two_k):
    return _core.eisenstein_constant(two_k)


def decompose(two_k, order=400):
    """Certificate for theta2^two_k as Eisenstein part plus eta quotients."""
    return _fractionize(json.loads(_core.decompose_json(two_k, order)))


def catalog():
    """(id, group, statement, note) for every corpus identity."""
    return [tuple(e) for e in _core.catalog()]


def verify(ids=None, order=400, jobs=1):
    """Certificates for the given identity ids (default: all), in catalog order."""
    return _fractionize(json.loads(_core.verify_json(list(ids or []), order, jobs)))


def palin_p(n):
    d = json.loads(_core.palin_p(n))
    return [int(c) for c in d["coeffs"]]


def palin_P(n):
    d = json.loads(_core.palin_P(n))
    return [int(c) for c in d["coeffs"]]


def wp_recurrence_poly(two_k):
    """{(deg_x, deg_y): coefficient} for P_two_k."""
    d = json.loads(_core.wp_recurrence_poly(two_k))
    return {(dx, dy): Fraction(c) for dx, dy, c in d["terms"]}


def transform_check(sigma, tau, power=2, tol=1e-9):
    return json.loads(_core.transform_check(tuple(sigma), complex(tau), power, tol))


def dedekind_eta_check(sigma, tau, tol=1e-9):
    return json.loads(_core.dedekind_eta_check(tuple(sigma), complex(tau), tol))


def lattice_sum_check(family, k, tau, cutoff=400, tol=1e-6):
    return json.loads(_core.lattice_sum_check(family, k, complex(tau), cutoff, tol))


def cli(*args):
    """Run the command-line front end; returns (exit_code, stdout, stderr)."""
    return tuple(_core.run_cli([str(a) for a in args]))
