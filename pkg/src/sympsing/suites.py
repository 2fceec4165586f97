"""Check suites and their negative controls, keyed by the names the CLI uses."""

from __future__ import annotations

import signal
from contextlib import contextmanager
from dataclasses import replace

from . import dihedral, hilbert, quiver, sl2rep, slodowy, varieties
from .config import RunConfig
from .exactcore import BudgetExceeded
from .report import SKIPPED, CheckResult, VerificationReport, check

SUITES = ("identities", "invariance", "psi", "smoothness", "completion", "sl2rep", "hilbert", "quiver",
          "slodowy")


@contextmanager
def time_limit(seconds: float):
    """Raise BudgetExceeded after ``seconds`` of wall time (main thread, POSIX only)."""
    if not hasattr(signal, "setitimer"):
        yield
        return

    def handler(signum, frame):
        raise BudgetExceeded("time budget (s)", int(seconds))

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _guarded(rep: VerificationReport, check_id: str, params: dict, cfg: RunConfig, fn) -> None:
    try:
        with time_limit(cfg.time_budget):
            rep.extend(fn())
    except BudgetExceeded as exc:
        rep.add(CheckResult(check_id, params, SKIPPED, details={"reason": str(exc)}))


def run_identities(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    for d in cfg.d_values("identities"):
        def one(d=d):
            r = varieties.all_identities(d)
            B = dihedral.invariant_bundle(d)
            res = B.delta ** 2 - (B.e ** 2 - B.q * B.Q * 4)
            r.add(check("identity.delta_squared", {"d": d}, res.is_zero(), witness=res))
            r.extend(varieties.verify_orbit_representatives(d))
            r.extend(varieties.verify_fiber_identity(d))
            r.extend(varieties.verify_phi_immersion(d))
            return r
        _guarded(rep, "identities", {"d": d}, cfg, one)
    return rep


def run_invariance(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    for d in cfg.d_values("invariance"):
        _guarded(rep, "invariance", {"d": d}, cfg, lambda d=d: _invariance(d))
    return rep


def _invariance(d: int) -> VerificationReport:
    r = dihedral.verify_group(d)
    r.extend(dihedral.verify_invariance(d))
    return r


def run_psi(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    _guarded(rep, "psi", {"N": cfg.psi_N}, cfg, lambda: dihedral.verify_psi(cfg.psi_N))
    return rep


def run_smoothness(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    for d in cfg.d_values("smoothness"):
        for r in range(1, d):
            _guarded(rep, "chart.Yr.smooth", {"d": d, "r": r}, cfg,
                     lambda d=d, r=r: varieties.verify_chart_Yr_smooth(d, r, cfg.budget))
    return rep


def run_completion(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    for d in cfg.d_values("completion"):
        _guarded(rep, "completion", {"d": d, "N": cfg.completion_N}, cfg,
                 lambda d=d: varieties.verify_completion_substitution(d, cfg.completion_N))
    return rep


def run_sl2rep(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    for d in cfg.d_values("sl2rep"):
        _guarded(rep, "sl2rep", {"d": d}, cfg,
                 lambda d=d: sl2rep.verify_module_structure(d, cfg.trials, cfg.seed))
    rep.extend(sl2rep.sl3_embedding_check())
    rep.extend(sl2rep.sosp_check())
    return rep


def run_hilbert(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    for d in cfg.d_values("hilbert"):
        N = max(2 * d, cfg.series_N)
        _guarded(rep, "hilbert", {"d": d, "N": N}, cfg,
                 lambda d=d, N=N: hilbert.verify_hilbert(d, N, budget=cfg.budget))
    for d in cfg.d_values("fiber"):
        _guarded(rep, "fiber", {"d": d}, cfg, lambda d=d: hilbert.verify_fiber_algebra(d))
    return rep


def run_quiver(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    for d in cfg.d_values("quiver"):
        _guarded(rep, "quiver", {"d": d}, cfg, lambda d=d: quiver.quiver_suite(d))
    return rep


def run_slodowy(cfg: RunConfig) -> VerificationReport:
    rep = VerificationReport()
    for d in cfg.d_values("slodowy"):
        _guarded(rep, "slodowy", {"d": d}, cfg, lambda d=d: slodowy.verify_slice_geometry(d, cfg.trials))
    return rep


RUNNERS = {
    "identities": run_identities,
    "invariance": run_invariance,
    "psi": run_psi,
    "smoothness": run_smoothness,
    "completion": run_completion,
    "sl2rep": run_sl2rep,
    "hilbert": run_hilbert,
    "quiver": run_quiver,
    "slodowy": run_slodowy,
}

# which config ranges a --d flag narrows for each suite
RANGE_KEYS = {
    "identities": ("identities",),
    "invariance": ("invariance",),
    "psi": (),
    "smoothness": ("smoothness",),
    "completion": ("completion",),
    "sl2rep": ("sl2rep",),
    "hilbert": ("hilbert", "fiber"),
    "quiver": ("quiver",),
    "slodowy": ("slodowy",),
}


# ---- negative controls


def _corrupt_bundle(d: int):
    B = dihedral.invariant_bundle(d, cyclotomic=True)
    x = B.ring.var("x")
    return replace(B, a=(x ** d,) + tuple(B.a[1:]))


def _singular_yr(d: int):
    R = varieties.yr_ring()
    q, Q, ar, Bm, Br, Bp = R.gens()
    return [q * Bp - Q * Bm + ar * Br, Bm * Bp]


def _shifted_series(d: int, N: int):
    s = hilbert.series_coefficients(d, N)
    return s[:2] + [s[2] + 1] + s[3:]


def _wrong_sigma(d: int):
    return quiver.expected_sigma(d)[1:]


def _control_reports(suite: str):
    """(label, corrupted report) pairs; each report must contain a failure."""
    if suite == "identities":
        yield "flipped_Y_rhs", varieties.verify_presentation_on_invariants("Y", 5, corrupt="quad1,1")
        yield "flipped_chart_delta", varieties.verify_chart_Y0(5, corrupt="a2")
    elif suite == "invariance":
        yield "non_invariant_a0", dihedral.verify_invariance(5, bundle=_corrupt_bundle(5))
    elif suite == "psi":
        yield "perturbed_psi", dihedral.verify_psi(12, corrupt=7)
    elif suite == "smoothness":
        yield "nodal_chart", varieties.verify_chart_Yr_smooth(5, 2, relations=_singular_yr(5))
    elif suite == "completion":
        yield "wrong_constant", varieties.verify_completion_substitution(5, 8, constant=16)
    elif suite == "sl2rep":
        yield "flipped_table_sign", sl2rep.sl3_embedding_check(sl2rep.corrupted_sl3_table())
    elif suite == "hilbert":
        yield "shifted_series", hilbert.verify_hilbert(4, 8, series=_shifted_series(4, 8))
        E, Bs = hilbert.fiber_matrices(5)
        yield "swapped_fiber_matrix", hilbert.verify_fiber_algebra(5, matrices=(E, [Bs[1], Bs[0]] + Bs[2:]))
    elif suite == "quiver":
        yield "truncated_sigma", quiver.verify_sigma(5, expected=_wrong_sigma(5))
    elif suite == "slodowy":
        yield "regular_block", slodowy.verify_slice_geometry(5, blocks=(5,))
    else:
        raise KeyError(suite)


def _has_witness(r: CheckResult) -> bool:
    w = r.witness
    if w is None:
        return False
    if hasattr(w, "is_zero"):
        return not w.is_zero()
    return w not in ([], {}, "", 0)


def negative_controls(suite: str) -> VerificationReport:
    """A control passes when its corrupted input produced a failure with a witness."""
    rep = VerificationReport()
    for label, corrupted in _control_reports(suite):
        fails = corrupted.failures
        ok = bool(fails) and all(_has_witness(f) for f in fails)
        rep.add(check(f"control.{suite}", {"control": label}, ok,
                      witness={"failures": len(fails)},
                      failed_checks=sorted({f.check_id for f in fails})))
    return rep


def run_suites(names, cfg: RunConfig, controls: bool = False) -> VerificationReport:
    rep = VerificationReport()
    for name in names:
        rep.extend(RUNNERS[name](cfg))
        if controls:
            rep.extend(negative_controls(name))
    return rep
