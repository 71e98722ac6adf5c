"""Exact eigenvalue counting and spectral densities for random 2x2 matrices.

The compiled core exposes three groups of operations:

* exact counting of integer matrices with a prescribed integer eigenvalue
  (``brute_force_count_lambda``, ``fast_count_lambda``, ``count_integer_spectrum``),
* the closed-form densities and their integrals (``v_density``, ``w_density``,
  ``integrate_density``, ``f_w_minus``, ``constants``),
* seeded Monte Carlo experiments over matrices with uniform [-1, 1] entries
  (``run_experiment``, ``compare_to_density``, ``product_experiment``).
"""

from ._core import (  # noqa: F401
    EmpiricalSummary,
    antiderivatives_nu,
    argmax_w,
    asymptotic_count_lambda,
    brute_force_count_lambda,
    cd_factors,
    cd_partial_sum,
    char_invariants,
    char_invariants_int,
    classify_spectrum,
    compare_to_density,
    constants,
    count_integer_spectrum,
    count_repeated_eigenvalue,
    count_repeated_integer,
    density_table,
    f_bc,
    f_w_minus,
    fast_count_all,
    fast_count_lambda,
    g_function,
    gershgorin_bound,
    integrate_density,
    mobius_sieve,
    n_k_lambda,
    nu,
    product_experiment,
    run_experiment,
    singular_representation,
    v_density,
    w_density,
)
from ._core import __version__  # noqa: F401
