"""Verblunsky coefficients, Fourier coefficients of ``log w`` and sum rules."""

from .asymptotics import (RatioProbe, default_grid, g_limit, limit_gap, mate_nevai,
                          mate_nevai_subseq, omega_nm, omega_nm_rel, probe, ratio_grid,
                          ratio_value)
from .combinatorics import (Collection, beta, beta_n, canonicalize, count_divisions,
                            enumerate_M0, find_cuts, has_cut, is_linear, lerch_check, n_weight,
                            term_table)
from .core import (Polynomial, VerblunskySequence, alpha_at, alpha_window, finite, geometric,
                   in_lp, make_sequence, periodic, power, rho_at, shifted, to_json, truncated)
from .diagnostics import DiagnosticSeries, Thresholds, classify
from .errors import (AliasError, DivergenceError, DomainError, EmptyError, KindError,
                     ModulusError, OpucError, RangeError, ResourceError, SchemaError)
from .fourier import (TruncatedValue, d_m, delta_wm, lambda_combinatorial, w0, wm_bernstein,
                      wm_explicit, wm_l4_decomposition, wm_truncated)
from .quadrature import Grid, fourier_log_w, zq_quadrature
from .recursion import (lambda_recursive, lambda_table, log_bernstein_weight,
                        log_phi_star_taylor, phi_pair)
from .sumrules import (QWeight, l4_equivalence_report, make_qweight, qshift_partials,
                       step_residual, zq_bernstein, zq_partials)

__version__ = "0.1.0"
