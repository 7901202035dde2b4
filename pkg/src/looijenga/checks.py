"""Correspondence sweeps.  Each returns a list of :class:`CaseResult`, one per case,
sorted by (family, a, b, class) irrespective of how the work was scheduled."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .bps import IntegralityViolation, kp_genus0, omega_q, omega_q_via_open
from .geometry import Family, Kind, boundary_degrees, classes_up_to, coprime_pairs, is_zero_region, winding_of
from .localgw import local_closed, local_oracle, local_psi
from .loggw import log_poly, log_psi
from .opengw import loc_open_factor, log_open_rhs, open_closed, open_genus0, open_oracle
from .qkernel import eval_at_one, sign
from .quiverdt import SymQuiver, check_kpdt, dt_numerical, quiver_search, two_vertex_quivers
from .reference import CONIFOLD_GRID, conifold_kp, p1ab_kp


@dataclass(frozen=True)
class SweepConfig:
    """Which (family, a, b, class) cases a sweep visits."""

    kinds: tuple = (Kind.P1AB, Kind.Y2, Kind.Y3)
    ab_max: int = 5
    dmax: int = 4
    a_max: Optional[int] = None
    b_max: Optional[int] = None
    all_orders: bool = False
    jobs: int = 1

    def pairs(self) -> list[tuple[int, int]]:
        if self.a_max is not None or self.b_max is not None:
            a_max = self.a_max or self.ab_max
            b_max = self.b_max or self.ab_max
            return [(a, b) for a, b in coprime_pairs(max(a_max, b_max), ordered=False) if a <= a_max and b <= b_max]
        return coprime_pairs(self.ab_max, ordered=not self.all_orders)

    def cases(self, include_zero_region: bool = False) -> list[tuple[Family, tuple]]:
        out = []
        for kind in self.kinds:
            for a, b in self.pairs():
                fam = Family(kind, a, b)
                for d in classes_up_to(fam, self.dmax, include_zero_region):
                    out.append((fam, d.degrees))
        return out


@dataclass(frozen=True)
class CaseResult:
    check: str
    case: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.check} {self.case}" + (f" : {self.detail}" if self.detail else "")


def _label(fam: Family, d) -> str:
    return f"{fam} d={','.join(map(str, d))}"


def _run(check: str, fn: Callable, cases: list, jobs: int) -> list[CaseResult]:
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_guarded, [(check, fn, c) for c in cases], chunksize=4))
    else:
        results = [_guarded((check, fn, c)) for c in cases]
    return results


def _guarded(args) -> CaseResult:
    check, fn, (fam, d) = args
    try:
        ok, detail = fn(fam, d)
    except (ArithmeticError, ValueError) as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CaseResult(check, _label(fam, d), ok, detail)


# -- individual cases ------------------------------------------------------------------


def case_log_local(fam: Family, d):
    pref = Fraction(1)
    for x in boundary_degrees(fam, d):
        pref *= Fraction(sign(x - 1), x)
    lhs = local_closed(fam, d)
    rhs = pref * eval_at_one(log_poly(fam, d))
    ok = lhs == rhs
    if ok and fam.kind is Kind.Y3:
        ok = local_psi(fam, d) == pref * log_psi(fam, d)
    return ok, "" if ok else f"local {lhs} != {rhs}"


def case_log_open(fam: Family, d):
    lhs = open_closed(fam, winding_of(fam, d))
    rhs = log_open_rhs(fam, d)
    return lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}"


def case_loc_open(fam: Family, d):
    if is_zero_region(fam, d):
        return True, "zero class"
    lhs = open_genus0(fam, winding_of(fam, d))
    rhs = loc_open_factor(fam, d) * local_closed(fam, d)
    return lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}"


def case_local_oracle(fam: Family, d):
    lhs, rhs = local_oracle(fam, d), local_closed(fam, d)
    return lhs == rhs, "" if lhs == rhs else f"oracle {lhs} != closed {rhs}"


def case_open_oracle(fam: Family, d):
    w = winding_of(fam, d)
    lhs, rhs = open_oracle(fam, w), open_closed(fam, w)
    return lhs == rhs, "" if lhs == rhs else f"oracle {lhs} != closed {rhs}"


def case_bps(fam: Family, d):
    om = omega_q(fam, d)
    if om != omega_q_via_open(fam, d):
        return False, "open-side Omega differs"
    if not om.is_symmetric():
        return False, "Omega not symmetric under q -> 1/q"
    kp = kp_genus0(fam, d)
    if eval_at_one(om) != kp:
        return False, f"Omega(1) = {eval_at_one(om)} but KP = {kp}"
    return True, f"Omega(1) = {kp}"


CHECKS = {
    "log-local": case_log_local,
    "log-open": case_log_open,
    "loc-open": case_loc_open,
    "bps-integrality": case_bps,
}


def run_sweep(check: str, cfg: SweepConfig) -> list[CaseResult]:
    zero = check in ("log-open", "bps-integrality")
    return _run(check, CHECKS[check], cfg.cases(include_zero_region=zero), cfg.jobs)


def run_oracle_equivalence(cfg: SweepConfig, open_dmax: int = 3) -> list[CaseResult]:
    local = _run("local-oracle", case_local_oracle, cfg.cases(), cfg.jobs)
    open_cfg = SweepConfig(cfg.kinds, cfg.ab_max, min(cfg.dmax, open_dmax), cfg.a_max, cfg.b_max, cfg.all_orders, cfg.jobs)
    return local + _run("open-oracle", case_open_oracle, open_cfg.cases(), cfg.jobs)


# -- reference tables and quivers ----------------------------------------------------------


def run_table1(bs: Iterable[int] = range(1, 6)) -> list[CaseResult]:
    out = []
    for b in bs:
        fam = Family(Kind.Y2, 1, b)
        for d0, d1 in CONIFOLD_GRID:
            got, want = kp_genus0(fam, (d0, d1)), conifold_kp(b, d0, d1)
            out.append(CaseResult("table1", _label(fam, (d0, d1)), got == want, f"{got} vs {want}"))
    return out


def run_kp_sequence(bs: Iterable[int] = range(1, 5), dmax: int = 5) -> list[CaseResult]:
    out = []
    for b in bs:
        fam = Family(Kind.P1AB, 1, b)
        for d in range(1, dmax + 1):
            got, want = kp_genus0(fam, d), p1ab_kp(b, d)
            out.append(CaseResult("kp-sequence", _label(fam, (d,)), got == want, f"{got} vs {want}"))
    return out


def conifold_omega(b: int) -> Callable[[tuple], int]:
    """BPS invariant of Y2(1,b) at ``d0 f + d1 E``; zero where ``d0 = 0`` (outside the class domain)."""
    fam = Family(Kind.Y2, 1, b)

    def omega(d):
        d0, d1 = d
        if d0 == 0:
            return 0
        return kp_genus0(fam, (d0, d1))

    return omega


def conifold_target(b: int, cap_lo: int, cap_hi: int) -> dict:
    """Omega values for ``cap_lo <= d0 + d1 <= cap_hi``, read from the reference conifold table wherever it has an entry."""
    omega = conifold_omega(b)
    out = {}
    for d0 in range(cap_hi + 1):
        for d1 in range(cap_hi + 1 - d0):
            if not cap_lo <= d0 + d1 <= cap_hi:
                continue
            if d0 >= 1 and (d0, d1) in CONIFOLD_GRID:
                out[(d0, d1)] = int(conifold_kp(b, d0, d1))
            else:
                out[(d0, d1)] = omega((d0, d1))
    return out


def run_loop_quiver(bs: Iterable[int] = range(1, 5), dmax: int = 5) -> list[CaseResult]:
    out = []
    for b in bs:
        fam = Family(Kind.P1AB, 1, b)
        Q = SymQuiver.loops(b + 1)
        rep = check_kpdt(Q, lambda d: kp_genus0(fam, d[0]), (0,), [(d,) for d in range(1, dmax + 1)])
        for d, got, want, ok in rep.rows:
            out.append(CaseResult("quiver-dt", f"{fam} {b + 1}-loop d={d[0]}", ok, f"DT {got} vs |KP| {want}"))
    return out


def run_conifold_search(b: int, fit_cap: int = 4, heldout_cap: int = 5) -> tuple[list[CaseResult], Optional[SymQuiver]]:
    res = quiver_search(
        two_vertex_quivers(b + 2),
        conifold_target(b, 1, fit_cap),
        (0, 1),
        conifold_target(b, heldout_cap, heldout_cap),
    )
    Q = res.unique
    label = f"y2(1,{b})"
    if Q is None:
        detail = f"{len(res.fits)} fitting, {len(res.validated)} validated"
        return [CaseResult("quiver-search", label, False, detail)], None
    return [CaseResult("quiver-search", label, True, f"unique quiver {Q}")], Q


def run_conifold_dt(b: int, dmax: int = 5) -> list[CaseResult]:
    """Search the quiver, then compare against every ``d0 + d1 <= dmax``."""
    results, Q = run_conifold_search(b, min(4, dmax - 1) if dmax > 1 else 1, dmax)
    if Q is None:
        return results
    sweep = [d for d in conifold_target(b, 1, dmax)]
    rep = check_kpdt(Q, conifold_omega(b), (0, 1), sweep, dt_numerical(Q, dmax, total=dmax))
    for d, got, want, ok in rep.rows:
        results.append(CaseResult("quiver-dt", f"y2(1,{b}) d={d[0]},{d[1]}", ok, f"DT {got} vs {want}"))
    return results


def summarize(results: list[CaseResult]) -> str:
    failed = sum(not r.ok for r in results)
    return f"{len(results) - failed}/{len(results)} passed" + (f", {failed} FAILED" if failed else "")
