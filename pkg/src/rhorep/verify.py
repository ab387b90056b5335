"""
Sweep runner for verify-all.

Every check is registered in CHECKS under a name and takes a parameter cell (a dict). A
check returns (passed, detail); the runner wraps it into a CheckResult and turns
exceptions into failed results carrying the exception text.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable

from .algebra import RepMatrix, make_field
from .errors import RhorepError
from .reps import generic, hecke
from .reps.braid import check_braid_relations, sigma_matrix, v_action
from .reps.dominant import (
    check_action_b,
    check_action_bprime,
    decompose_CSR,
    full_twist_check,
    lin_sys_check,
    n_space,
    quotient_action_check,
    restriction_check,
)
from .reps.lawrence import (
    braid_on_W,
    f2_vacuum_closed_form,
    lkb_closed_form,
    reduced_burau_cbar,
    w_action,
    w_basis,
)
from .reps.oracle import max_deviation, sigma_float
from .reps.reports import CheckResult, VerifyReport
from .reps.weightspace import d_nl, enumerate_basis, kappa, op_E, op_F, op_F_power, vacuum

logger = logging.getLogger(__name__)

FLOAT_TOLERANCE = 1e-9

Check = Callable[[dict], tuple[bool, dict[str, Any]]]


def check_dims(cell: dict) -> tuple[bool, dict]:
    n, l, r = cell["n"], cell["l"], cell["r"]
    dim_v = enumerate_basis(n, l, r).dim
    dim_ker_e = len(op_E(n, l, r).nullspace())
    detail = {"dim_V": dim_v, "kappa": kappa(l, r, n), "dim_ker_E": dim_ker_e, "d": d_nl(n, l)}
    return dim_v == detail["kappa"] and dim_ker_e == detail["d"] and w_basis(n, l, r).dim == detail["d"], detail


def check_braid(cell: dict) -> tuple[bool, dict]:
    """Braid relations on V_{n,l} and commutation with E and F."""
    n, l, r = cell["n"], cell["l"], cell["r"]
    defects = v_action(n, l, r).relation_defects()
    commute_E = commute_F = True
    for i in range(1, n):
        if l >= 1:
            commute_E &= sigma_matrix(n, l - 1, r, i) @ op_E(n, l, r) == op_E(n, l, r) @ sigma_matrix(n, l, r, i)
        if enumerate_basis(n, l + 1, r).dim:
            commute_F &= sigma_matrix(n, l + 1, r, i) @ op_F(n, l, r) == op_F(n, l, r) @ sigma_matrix(n, l, r, i)
    return not defects and commute_E and commute_F, {"defects": defects, "commute_E": commute_E, "commute_F": commute_F}


def check_float_oracle(cell: dict) -> tuple[bool, dict]:
    n, l, r = cell["n"], cell["l"], cell["r"]
    worst = max((max_deviation(sigma_matrix(n, l, r, i), sigma_float(n, l, r, i)) for i in range(1, n)), default=0.0)
    return worst <= FLOAT_TOLERANCE, {"max_deviation": worst}


def check_lkb(cell: dict) -> tuple[bool, dict]:
    n, r = cell["n"], cell["r"]
    f = make_field(r)
    closed = lkb_closed_form(n, f.q, f.s, f)
    agree = [braid_on_W(n, 2, r, i) == closed[i - 1] for i in range(1, n)]
    return all(agree), {"agree": agree}


def check_burau(cell: dict) -> tuple[bool, dict]:
    n, r = cell["n"], cell["r"]
    f = make_field(r)
    closed = reduced_burau_cbar(n, f.s, f)
    agree = [braid_on_W(n, 1, r, i) == closed[i - 1] for i in range(1, n)]
    dim_N = n_space(n, 1, r).dim
    expected = n if n % r == 0 else n - 1
    return all(agree) and dim_N == expected, {"agree": agree, "dim_N": dim_N, "expected_dim_N": expected}


def check_twist(cell: dict) -> tuple[bool, dict]:
    report = full_twist_check(cell["n"], cell["l"], cell["r"])
    ok = report["matches_formula"] and report["scalar_on_W"] and report["power_r_identity_on_W"]
    if report["lprime"] is not None:
        ok = ok and report["nilpotent_nonzero"] and report["nilpotent_square_zero"]
    return ok, dict(report)


def check_csr(cell: dict) -> tuple[bool, dict]:
    report = decompose_CSR(cell["n"], cell["l"], cell["r"])
    ok = report["matches_case"] and report["s_action_matches"] is not False
    return ok, {k: v for k, v in report.items() if k != "s_basis"}


def check_quotient(cell: dict) -> tuple[bool, dict]:
    return quotient_action_check(cell["n"], cell["l"], cell["r"]), {}


def check_split_N20(cell: dict) -> tuple[bool, dict]:
    n, r = cell["n"], cell["r"]
    report = generic.specialize_and_compare(n, r, "N20")
    expected_split = (n + 1) % r != 0
    ok = report["split"] == expected_split and report["matches_tensor_space"] is not False
    if expected_split:
        ok = ok and report["lambdas_match"] is True
    else:
        ok = ok and report["lambda_singular"]
    return ok, report


def check_explicit_l2(cell: dict) -> tuple[bool, dict]:
    n, r = cell["n"], cell["r"]
    failures = check_action_b(n, r)
    if (n + 2) % r == 0 and n >= 3:
        failures += check_action_bprime(n, r)
    lin_sys = lin_sys_check(n, r)
    return not failures and lin_sys, {"failures": failures, "lin_sys": lin_sys}


def check_generic_braid(cell: dict) -> tuple[bool, dict]:
    n = cell["n"]
    defects = {rep: check_braid_relations(generic.generic_generators(rep, n)) for rep in generic.REPS if rep == "N20" or n >= 3}
    inverses_ok = all(
        (g @ generic.generic_inverse(g)).is_identity() for rep in defects for g in generic.generic_generators(rep, n)
    )
    return not any(defects.values()) and inverses_ok, {"defects": defects, "inverses": inverses_ok}


def check_generic_split(cell: dict) -> tuple[bool, dict]:
    report = generic.split_generic_N20(cell["n"])
    ok = report["fixed"] and report["recursion"] and report["inverse_on_b"] and report["s_squared_one"]["matches"]
    return ok, {k: v for k, v in report.items() if k != "lambdas"}


def check_sq1(cell: dict) -> tuple[bool, dict]:
    n = cell["n"]
    matches = {k: generic.sq1_delta_powers(n, k)["matches"] for k in range(-3, 4)}
    kernel = generic.sq1_kernel_check(n)
    return all(matches.values()) and kernel, {"delta_powers": matches, "kernel": kernel}


def check_minpol(cell: dict) -> tuple[bool, dict]:
    n, r, rep = cell["n"], cell["r"], cell["rep"]
    poly = hecke.min_pol_check(n, r, rep)
    eig = hecke.eigenvalue_report(n, r, rep)
    ok = poly["annihilates"] and eig["order_found"] and eig["order_divides_2r"] and (r % 2 or eig["order_divides_r"])
    return bool(ok), {**poly, **eig}


def check_restriction(cell: dict) -> tuple[bool, dict]:
    report = restriction_check(cell["n"], cell["r"])
    return report["equivariant"] and report["restricted_split"], report


def check_fixture_w32(cell: dict) -> tuple[bool, dict]:
    """The W_{3,2} matrices at r = 4 in the basis w_{1,2}, w_{1,3}, w_{2,3}, and F^2 u_0^3."""
    f = make_field(4)
    q = f.q
    s1 = RepMatrix(f, [[q**6, q**3 - q, 0], [0, 1 - q**2, q**5], [0, q**5, 0]], 3)
    s2 = RepMatrix(f, [[1 - q**2, q**5, 0], [q**5, 0, 0], [q**2 - 1, 0, q**6]], 3)
    generators = w_action(3, 2, 4).generators
    csr = decompose_CSR(3, 2, 4)
    f2u = [-(q + q**3) * c for c in (f.one, q**5, q**2)]
    s_ok = len(csr["s_basis"]) == 1 and _proportional(csr["s_basis"][0], f2u)
    return generators[0] == s1 and generators[1] == s2 and s_ok, {"sigma_1": generators[0] == s1, "sigma_2": generators[1] == s2, "F2u0": s_ok}


def _proportional(u: list, v: list) -> bool:
    pivot = next(k for k, x in enumerate(v) if x)
    if not u[pivot]:
        return False
    ratio = u[pivot] / v[pivot]
    return all(a == ratio * b for a, b in zip(u, v))


def check_fixture_f2u(cell: dict) -> tuple[bool, dict]:
    """
    F^2 u_0^3 equals -(q + q^3)(w_{1,2} + q^5 w_{1,3} + q^2 w_{2,3}) exactly.

    The display -(q + q^3)(q^6 w_{1,2} + q^3 w_{1,3} + w_{2,3}) is q^-2 times it; that form
    is checked as a scalar multiple.
    """
    f = make_field(4)
    q = f.q
    image = op_F_power(3, 0, 4, 2).apply(vacuum(3, 4).dense())
    coords = w_basis(3, 2, 4).coordinates(image)
    expected = [-(q + q**3) * c for c in (f.one, q**5, q**2)]
    displayed = [-(q + q**3) * c for c in (q**6, q**3, f.one)]
    exact = coords == expected and coords == f2_vacuum_closed_form(3, 4)
    rescaled = coords == [q**2 * c for c in displayed]
    return exact and rescaled, {"coordinates": coords, "exact": exact, "display_times_q2": rescaled}


def check_cubic(cell: dict) -> tuple[bool, dict]:
    quotient = hecke.cubic_quotient_42()
    action = hecke.f_cbar_action_check(4, 3)
    symbolic = hecke.CubicParams(generic.q, generic.s, generic.t)
    relation = all(m.is_zero() for m in hecke.cubic_relation(symbolic))
    braid = not hecke.cubic_braid_defects(symbolic)
    ok = quotient["matches"] and action["closed_form"] and action["action_is_reduced_burau"] and relation and braid
    return ok, {"quotient": quotient["matches"], **action, "cubic_relation": relation, "cubic_braid": braid}


CHECKS: dict[str, Check] = {
    "dims": check_dims,
    "braid": check_braid,
    "float_oracle": check_float_oracle,
    "lkb": check_lkb,
    "burau": check_burau,
    "twist": check_twist,
    "csr": check_csr,
    "quotient": check_quotient,
    "split_N20": check_split_N20,
    "explicit_l2": check_explicit_l2,
    "generic_braid": check_generic_braid,
    "generic_split": check_generic_split,
    "sq1": check_sq1,
    "minpol": check_minpol,
    "restriction": check_restriction,
    "fixture_w32": check_fixture_w32,
    "fixture_f2u": check_fixture_f2u,
    "cubic": check_cubic,
}


# Cells named by the acceptance grids; swept whatever max_n and max_r are.
ACCEPTANCE_CELLS: tuple[tuple[str, dict], ...] = (
    *(
        (name, {"n": n, "l": l, "r": r})
        for r in (3, 4, 5)
        for n in range(2, 6)
        for l in range(0, min(3, r - 1) + 1)
        for name in ("dims", "braid", "float_oracle")
    ),
    *(("split_N20", {"n": n, "r": r}) for r in (3, 4, 5) for n in range(2, 7)),
    *(("twist", {"n": n, "l": l, "r": r}) for n, l, r in ((3, 2, 4), (4, 2, 3), (3, 1, 3), (4, 2, 5))),
    *(("explicit_l2", {"n": n, "r": r}) for n, r in ((3, 4), (4, 5), (4, 3), (3, 5))),
    *(("burau", {"n": n, "r": r}) for n, r in ((3, 3), (4, 4))),
    *(("generic_braid", {"n": n}) for n in range(2, 6)),
    *(("generic_split", {"n": n}) for n in range(2, 6)),
    *(("sq1", {"n": n}) for n in (3, 4)),
    ("minpol", {"n": 4, "r": 5, "rep": "N20"}),
    ("minpol", {"n": 5, "r": 6, "rep": "N20"}),
    ("minpol", {"n": 4, "r": 6, "rep": "N21"}),
    ("fixture_w32", {}),
    ("fixture_f2u", {}),
    ("cubic", {}),
)


def build_cells(max_n: int, max_r: int) -> list[tuple[str, dict]]:
    """(check name, parameters) pairs for the whole sweep, in a fixed order, without repeats."""
    jobs: list[tuple[str, dict]] = []
    for r in range(3, max_r + 1):
        for n in range(2, max_n + 1):
            for l in range(0, min(3, r - 1) + 1):
                cell = {"n": n, "l": l, "r": r}
                for name in ("dims", "braid", "float_oracle", "twist", "csr", "quotient"):
                    jobs.append((name, cell))
            jobs.append(("lkb", {"n": n, "r": r}))
            jobs.append(("burau", {"n": n, "r": r}))
            jobs.append(("split_N20", {"n": n, "r": r}))
            jobs.append(("explicit_l2", {"n": n, "r": r}))
            if n >= 3 and (n + 1) % r == 0:
                jobs.append(("restriction", {"n": n, "r": r}))
    for n in range(2, min(max_n, 5) + 1):
        jobs.append(("generic_braid", {"n": n}))
        jobs.append(("generic_split", {"n": n}))
    jobs.extend(ACCEPTANCE_CELLS)

    seen: set[tuple[str, tuple]] = set()
    unique = []
    for name, cell in jobs:
        key = (name, tuple(sorted(cell.items())))
        if key not in seen:
            seen.add(key)
            unique.append((name, cell))
    return unique


def run_check(name: str, cell: dict) -> CheckResult:
    try:
        passed, detail = CHECKS[name](cell)
    except Exception as exc:
        detail = getattr(exc, "detail", None) if isinstance(exc, RhorepError) else None
        passed, detail = False, {"error": type(exc).__name__, "message": str(exc), **(detail or {})}
    logger.debug("%s %s: %s", name, cell, "ok" if passed else "FAILED")
    return CheckResult(check=name, params=dict(cell), passed=bool(passed), detail=detail)


def run_verify_all(max_n: int = 4, max_r: int = 5, threads: int = 1) -> VerifyReport:
    jobs = build_cells(max_n, max_r)
    logger.info("verify-all: %d checks on %d threads", len(jobs), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda job: run_check(*job), jobs))
    results.sort(key=lambda res: (res["check"], sorted(res["params"].items())))
    failed = sum(1 for res in results if not res["passed"])
    return VerifyReport(passed=failed == 0, total=len(results), failed=failed, results=results)
