"""The eleven acceptance criteria, each run exactly as stated.

Every test records a one-line verdict; conftest prints them after the run, and
``python3 tests/test_acceptance.py`` prints them directly.
"""

import subprocess
import sys
import time

import pytest

from sympsing import hilbert, quiver, slodowy
from sympsing.config import RunConfig
from sympsing.suites import SUITES, negative_controls, run_suites

VERDICTS: dict[int, str] = {}


def _cfg(key, lo, hi, **kw):
    base = RunConfig(**kw)
    return base.with_range((key,), (lo, hi))


def _record(n, title, ok, detail, started):
    VERDICTS[n] = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail} ({time.time() - started:.1f}s)"
    print(VERDICTS[n])
    return ok


def _present(rep, *ids):
    seen = {r.check_id for r in rep.results}
    return [i for i in ids if i not in seen]


def criterion_1():
    t = time.time()
    rep = run_suites(["identities"], _cfg("identities", 4, 10))
    missing = _present(rep, "identity.Q.relation", "identity.Y.relation", "identity.blowup", "chart.Y0.identity",
                       "identity.delta_squared", "singular.square")
    ok = rep.all_passed and not missing and time.time() - t < 120
    return _record(1, "identity suite d=4..10", ok, f"{rep.summary()} missing={missing}", t)


def criterion_2():
    t = time.time()
    rep = run_suites(["invariance"], _cfg("invariance", 4, 10))
    return _record(2, "invariance over Q(zeta_d) d=4..10", rep.all_passed, rep.summary(), t)


def criterion_3():
    t = time.time()
    rep = run_suites(["psi"], RunConfig(psi_N=50))
    missing = _present(rep, "psi.recurrence", "psi.specializations", "psi.generating_series")
    return _record(3, "Psi suite N=50", rep.all_passed and not missing, rep.summary(), t)


def criterion_4():
    t = time.time()
    rep = run_suites(["smoothness"], _cfg("smoothness", 4, 8))
    certs = [r for r in rep.results if r.check_id == "chart.Yr.smooth"]
    ok = rep.all_passed and len(certs) == sum(d - 1 for d in range(4, 9)) and time.time() - t < 300
    return _record(4, "Y_r smoothness certificates d=4..8", ok, f"{len(certs)} certificates {rep.summary()}", t)


def criterion_5():
    t = time.time()
    rep = run_suites(["completion"], _cfg("completion", 4, 6, completion_N=8))
    return _record(5, "completion substitution d=4,5,6 N=8", rep.all_passed, rep.summary(), t)


def criterion_6():
    t = time.time()
    rep = run_suites(["sl2rep"], RunConfig())
    sl3 = [r for r in rep.results if r.check_id.startswith("sl3.")]
    eq = [r for r in sl3 if r.check_id == "sl3.equivariance"]
    ok = bool(sl3) and all(r.passed for r in sl3) and len(eq) == 24
    return _record(6, "sl3 embedding", ok, f"{len(sl3)} checks, {len(eq)} equivariance", t)


def criterion_7():
    t = time.time()
    rep = run_suites(["hilbert"], RunConfig().with_range(("hilbert",), (4, 7)).with_range(("fiber",), (4, 10)))
    head = hilbert.series_coefficients(4, 8)[:5]
    ok = rep.all_passed and head == [1, 0, 8, 0, 27] and time.time() - t < 600
    return _record(7, "Hilbert series d=4..7, fiber d=4..10", ok, f"{rep.summary()} d=4 head={head}", t)


def criterion_8():
    t = time.time()
    rep = run_suites(["quiver"], _cfg("quiver", 4, 8))
    dims = {d: sorted(x["dimension"] for x in quiver.representation_types(d)) for d in range(4, 9)}
    local = {d: quiver.local_quiver(d)["dimension"] for d in range(5, 9)}
    ok = (rep.all_passed and all(v == [0, 2, 4] for v in dims.values()) and set(local.values()) == {4}
          and all(len(quiver.sigma_lambda(d)) == d + 2 for d in range(4, 9)) and time.time() - t < 120)
    return _record(8, "quiver d=4..8", ok, f"{rep.summary()} leaves={dims[4]} local={local}", t)


def criterion_9():
    t = time.time()
    rep = run_suites(["slodowy"], _cfg("slodowy", 4, 9))
    found = [r for r in rep.results if r.check_id == "slodowy.smooth_regular_point"]
    ok = not rep.failures and len(found) == 6 and time.time() - t < 120
    dims = [len(slodowy.slice_equations(d).basis) for d in range(4, 10)]
    return _record(9, "Slodowy slice d=4..9", ok and dims == [d + 3 for d in range(4, 10)],
                   f"{rep.summary()} slice dims={dims}", t)


def criterion_10(tmp_dir):
    t = time.time()
    outs = []
    for i in range(2):
        path = tmp_dir / f"all{i}.json"
        r = subprocess.run([sys.executable, "-m", "sympsing", "all", "--out", str(path)], capture_output=True)
        outs.append((r.returncode, path.read_bytes()))
    ok = outs[0][0] == outs[1][0] == 0 and outs[0][1] == outs[1][1]
    return _record(10, "two `all` runs byte-identical", ok, f"{len(outs[0][1])} bytes", t)


def criterion_11():
    t = time.time()
    reps = {s: negative_controls(s) for s in SUITES}
    ok = all(r.results and r.all_passed for r in reps.values())
    return _record(11, "negative controls in every suite", ok,
                   f"{sum(len(r.results) for r in reps.values())} controls over {len(reps)} suites", t)


@pytest.mark.parametrize("n", range(1, 12))
def test_criterion(n, tmp_path):
    fn = globals()[f"criterion_{n}"]
    assert fn(tmp_path) if n == 10 else fn()


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as d:
        results = [criterion_10(Path(d)) if n == 10 else globals()[f"criterion_{n}"]() for n in range(1, 12)]
    sys.exit(0 if all(results) else 1)
