"""
Registry of named checks and the suite runner.

Every check takes a parameter map with CLI names (family, n, rmatrix,
level-cutoff, sites, k, l, which) and returns a Report. Parameter grids for
the quick and full suites live in src/config/constants.py.
"""
from functools import lru_cache
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..config.constants import (DEFAULT_FAMILY, DEFAULT_LEVEL_CUTOFF, DEFAULT_N,
                                DEFAULT_RANK_TERMS, DEFAULT_SITES, FULL_SUITE,
                                QUICK_SUITE, RANDOM_PRODUCT_SAMPLES, RANDOM_SEED,
                                SELF_CHECK_DEGREE)
from ..utils.timing import format_duration, start_timer
from .data_parser import load_rmatrix
from .errors import BudgetExceededError, UnknownCheckError
from .gaudin import (EvaluationData, check_evaluate_sites, check_qh_commute,
                     check_qh_naturality, check_trig_algebra, check_trig_limit,
                     classical_poisson, parse_sites, tau_leading_order)
from .ncalg import (classical_dimension_failures, enveloping_gl, ideal_self_check_failures,
                    pbw_self_check_failures)
from .projectors import (BiRank, bi_rank, check_skew_trace_reduction, check_tower)
from .realgebra import (REContext, affine_cocycle_check, braided_jacobi_check, capelli_check,
                        check_cayley_hamilton, check_centrality, check_char_poly_forms,
                        check_modified_char_poly, check_overline_form, check_shift_isomorphism,
                        check_sl_projection, elementary_symmetric, power_sum, re_algebra,
                        representation_check)
from .reports import Report
from .rmatrix import (Braiding, build_braiding, check_braiding, check_current_ybe,
                      check_trace_identities)
from .yangian import (YangianContext, braided_yangian, check_bethe_commute, check_chn,
                      check_chn_newton_trace, check_evaluation, check_newton,
                      check_qdet_central, check_rtt_yang)

Params = Dict[str, Any]
CheckFunc = Callable[[Params], Report]

CHECKS: Dict[str, CheckFunc] = {}


def register(name: str):
    def decorator(func: CheckFunc) -> CheckFunc:
        CHECKS[name] = func
        return func
    return decorator


def check_names() -> List[str]:
    return sorted(CHECKS)


# --- Parameter handling ---
def _int(params: Params, key: str, default: int) -> int:
    value = params.get(key, default)
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValueError(f"parameter '{key}' must be an integer, got {value!r}.") from None


def _cutoff(params: Params) -> int:
    return _int(params, "level-cutoff", DEFAULT_LEVEL_CUTOFF)


@lru_cache(maxsize=None)
def _builtin(family: str, n: int) -> Braiding:
    return build_braiding(family, n)


@lru_cache(maxsize=None)
def _from_file(path: str) -> Braiding:
    return load_rmatrix(path)


def braiding_from(params: Params) -> Braiding:
    """The braiding named by 'rmatrix' if given, else by 'family' and 'n'."""
    if params.get("rmatrix"):
        return _from_file(str(params["rmatrix"]))
    return _builtin(str(params.get("family", DEFAULT_FAMILY)), _int(params, "n", DEFAULT_N))


def _expected_bi_rank(params: Params, braiding: Braiding) -> Optional[BiRank]:
    """Known bi-ranks of the built-in families."""
    if params.get("rmatrix"):
        return None
    family = params.get("family", DEFAULT_FAMILY)
    if family == "superflip":
        odd = braiding.dim // 2
        return BiRank(braiding.dim - odd, odd)
    return BiRank(braiding.dim, 0)


@lru_cache(maxsize=None)
def _bi_rank_of(braiding: Braiding) -> BiRank:
    return bi_rank(braiding, DEFAULT_RANK_TERMS)


@lru_cache(maxsize=None)
def _re_context(braiding: Braiding, modified: bool, side: str = "left") -> REContext:
    return re_algebra(braiding, modified, side, bi_rank=_bi_rank_of(braiding))


@lru_cache(maxsize=None)
def _yangian_context(braiding: Braiding, cutoff: int) -> YangianContext:
    return braided_yangian(braiding, cutoff, bi_rank=_bi_rank_of(braiding))


@lru_cache(maxsize=None)
def _evaluation(n: int, sites: str) -> EvaluationData:
    return EvaluationData(n, parse_sites(sites))


def _sites(params: Params) -> EvaluationData:
    return _evaluation(_int(params, "n", DEFAULT_N), str(params.get("sites", DEFAULT_SITES)))


# --- Braidings and projectors ---
@register("braiding")
def _check_braiding(params: Params) -> Report:
    return check_braiding(braiding_from(params), params)


@register("trace-identities")
def _check_trace_identities(params: Params) -> Report:
    braiding = braiding_from(params)
    return check_trace_identities(braiding, tuple(_bi_rank_of(braiding)), params)


@register("current-ybe")
def _check_current_ybe(params: Params) -> Report:
    return check_current_ybe(braiding_from(params), params)


@register("skew-trace-reduction")
def _check_skew_trace_reduction(params: Params) -> Report:
    n = _int(params, "n", DEFAULT_N)
    braiding = _builtin(str(params.get("family", DEFAULT_FAMILY)), n)
    return check_skew_trace_reduction(braiding, n, _int(params, "k", 0), params)


@register("skew-symmetrizers")
def _check_skew_symmetrizers(params: Params) -> Report:
    braiding = braiding_from(params)
    return check_tower(braiding, _int(params, "k", braiding.dim + 1), params)


@register("bi-rank")
def _check_bi_rank(params: Params) -> Report:
    started = start_timer()
    braiding = braiding_from(params)
    found = _bi_rank_of(braiding)
    expected = _expected_bi_rank(params, braiding)
    failures = []
    if expected is not None and found != expected:
        failures.append(f"bi-rank {found}, expected {expected}")
    return Report.outcome("bi-rank", dict(params, biRank=str(found)), failures, started)


# --- Engine self-checks ---
@register("ideal-self-check")
def _check_ideal(params: Params) -> Report:
    """Relations and random word*relation*word products of the RE and modified RE algebras."""
    started = start_timer()
    braiding = braiding_from(params)
    failures = []
    for modified in (False, True):
        algebra = _re_context(braiding, modified).algebra
        failures.extend(ideal_self_check_failures(algebra, RANDOM_PRODUCT_SAMPLES, RANDOM_SEED,
                                                  SELF_CHECK_DEGREE))
    if not params.get("rmatrix") and params.get("family", DEFAULT_FAMILY) in ("flip", "dj"):
        failures.extend(classical_dimension_failures(_re_context(braiding, False).algebra,
                                                     SELF_CHECK_DEGREE))
    return Report.outcome("ideal-self-check", params, failures, started)


@register("pbw-self-check")
def _check_pbw(params: Params) -> Report:
    started = start_timer()
    algebra = enveloping_gl(_int(params, "n", DEFAULT_N))
    return Report.outcome("pbw-self-check", params,
                          pbw_self_check_failures(algebra, SELF_CHECK_DEGREE), started)


# --- Reflection equation algebras ---
@register("re-overline-form")
def _check_overline(params: Params) -> Report:
    return check_overline_form(_re_context(braiding_from(params), False), params)


@register("centrality")
def _check_centrality(params: Params) -> Report:
    """e_k (default) or p_k, given by 'element', is central in the RE algebra."""
    ctx = _re_context(braiding_from(params), bool(params.get("modified", False)))
    k = _int(params, "k", 1)
    kind = params.get("element", "e")
    if kind == "e":
        element = elementary_symmetric(ctx, k)
    elif kind == "p":
        element = power_sum(ctx, k)
    else:
        raise ValueError(f"element must be 'e' or 'p', got '{kind}'.")
    return check_centrality(ctx, element, f"{kind}_{k}", params)


@register("cayley-hamilton")
def _check_cayley_hamilton(params: Params) -> Report:
    return check_cayley_hamilton(_re_context(braiding_from(params), False), params)


@register("char-poly-forms")
def _check_char_poly_forms(params: Params) -> Report:
    return check_char_poly_forms(_re_context(braiding_from(params), False), params)


@register("modified-char-poly")
def _check_modified_char_poly(params: Params) -> Report:
    side = str(params.get("side", "left"))
    return check_modified_char_poly(_re_context(braiding_from(params), True, side), params)


@register("capelli")
def _check_capelli(params: Params) -> Report:
    return capelli_check(_int(params, "n", DEFAULT_N), params)


@register("shift-isomorphism")
def _check_shift(params: Params) -> Report:
    return check_shift_isomorphism(braiding_from(params), params=params)


@register("representation")
def _check_representation(params: Params) -> Report:
    return representation_check(braiding_from(params), str(params.get("which", "vector")), params)


@register("braided-jacobi")
def _check_jacobi(params: Params) -> Report:
    return braided_jacobi_check(braiding_from(params), params)


@register("affine-cocycle")
def _check_cocycle(params: Params) -> Report:
    return affine_cocycle_check(braiding_from(params), params=params)


@register("sl-projection")
def _check_sl_projection(params: Params) -> Report:
    return check_sl_projection(_re_context(braiding_from(params), False), params)


# --- Braided Yangians ---
def _yangian(params: Params) -> YangianContext:
    return _yangian_context(braiding_from(params), _cutoff(params))


@register("yangian-chn")
def _check_chn(params: Params) -> Report:
    return check_chn(_yangian(params), _int(params, "k", 1), params)


@register("yangian-newton")
def _check_newton(params: Params) -> Report:
    return check_newton(_yangian(params), _int(params, "k", 1), params)


@register("chn-newton-trace")
def _check_chn_newton_trace(params: Params) -> Report:
    return check_chn_newton_trace(_yangian(params), params)


@register("bethe-commute")
def _check_bethe(params: Params) -> Report:
    return check_bethe_commute(_yangian(params), _int(params, "k", 1), _int(params, "l", 1), params)


@register("qdet-central")
def _check_qdet(params: Params) -> Report:
    return check_qdet_central(_yangian(params), params)


@register("evaluation")
def _check_evaluation(params: Params) -> Report:
    return check_evaluation(braiding_from(params), params)


@register("rtt-yangian")
def _check_rtt(params: Params) -> Report:
    return check_rtt_yang(braiding_from(params), params)


# --- The q = 1 limit and Gaudin models ---
@register("trig-algebra")
def _check_trig_algebra(params: Params) -> Report:
    return check_trig_algebra(_int(params, "n", DEFAULT_N), _cutoff(params), params)


@register("trig-limit")
def _check_trig_limit(params: Params) -> Report:
    return check_trig_limit(braiding_from(params), _cutoff(params), params)


@register("tau-leading-order")
def _check_tau(params: Params) -> Report:
    return tau_leading_order(_yangian(params), _int(params, "k", 1), params=params)


@register("evaluate-sites")
def _check_evaluate_sites(params: Params) -> Report:
    return check_evaluate_sites(_sites(params), params)


@register("qh-naturality")
def _check_qh_naturality(params: Params) -> Report:
    return check_qh_naturality(_sites(params), _int(params, "k", 1), _cutoff(params), params)


@register("qh-commute")
def _check_qh_commute(params: Params) -> Report:
    return check_qh_commute(_sites(params), _int(params, "k", 1), _int(params, "l", 1), params)


@register("classical-poisson")
def _check_poisson(params: Params) -> Report:
    return classical_poisson(_sites(params), _int(params, "k", 1), _int(params, "l", 1), params)


# --- Running ---
def run_check(name: str, params: Optional[Params] = None, log_func=None) -> Report:
    """
    Run one named check.

    Args:
        name (str): A registered check name, see check_names().
        params (dict): Check parameters with CLI names.
        log_func (callable): Optional logging function for progress output.

    Returns:
        Report: The outcome. Invalid parameters, failed validations and
            exceeded budgets become failing reports with the reason as witness.

    Raises:
        UnknownCheckError: If no check is registered under `name`.
    """
    def log(message):
        if log_func:
            log_func(message)

    if name not in CHECKS:
        raise UnknownCheckError(f"unknown check '{name}'; known checks: {', '.join(check_names())}.")
    params = dict(params or {})
    started = start_timer()
    log(f"{name} {params} ...")
    try:
        report = CHECKS[name](params)
    except BudgetExceededError as exc:
        report = Report.outcome(name, params, [f"budget exceeded: {exc}"], started)
    except (ValueError, FileNotFoundError) as exc:
        report = Report.outcome(name, params, [f"{type(exc).__name__}: {exc}"], started)
    log(f"{name}: {report.status} in {format_duration(report.elapsed_millis)}")
    return report


SuiteEntry = Tuple[str, Params]


def suite_entries(level: Union[str, Sequence[SuiteEntry]]) -> List[SuiteEntry]:
    """
    The (check, params) grid of a suite level, or the given entries.

    Raises:
        ValueError: On an unknown level name.
    """
    if isinstance(level, str):
        if level == "quick":
            return list(QUICK_SUITE)
        elif level == "full":
            return list(FULL_SUITE)
        raise ValueError(f"suite level must be 'quick' or 'full', got '{level}'.")
    return list(level)


def run_suite(level: Union[str, Iterable[SuiteEntry]],
              overrides: Optional[Params] = None, log_func=None) -> List[Report]:
    """
    Run every entry of a suite in order.

    Args:
        level: 'quick', 'full' or an explicit list of (check, params) pairs.
        overrides (dict): Parameters applied on top of every entry, e.g. a
            --level-cutoff given on the command line.
        log_func (callable): Optional logging function for progress output.

    Returns:
        list: One Report per entry, in suite order.
    """
    def log(message):
        if log_func:
            log_func(message)

    entries = suite_entries(level if isinstance(level, str) else list(level))
    reports = []
    for number, (name, params) in enumerate(entries, start=1):
        log(f"[{number}/{len(entries)}] {name}")
        reports.append(run_check(name, dict(params, **(overrides or {})), log_func))
    failed = sum(not r.passed for r in reports)
    log(f"suite finished: {len(reports) - failed} passed, {failed} failed")
    return reports
