#!/usr/bin/env python3
"""Smoke test for the multicurve_py extension module.

Builds the cdylib with cargo, loads it, and checks a handful of known
values. Run from anywhere: `python3 python/smoke_test.py`.
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_and_import():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "multicurve-py"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libmulticurve_py.so"
    stage = Path(tempfile.mkdtemp(prefix="multicurve_py_"))
    shutil.copy(built, stage / "multicurve_py.so")
    sys.path.insert(0, str(stage))
    import multicurve_py

    return multicurve_py


def main():
    mc = build_and_import()

    ctx = mc.CurveContext(2, 2, -3)
    assert (ctx.n, ctx.g, ctx.deg_l) == (2, 2, -3)

    s = mc.RigidSheaf(ctx, 1, 1, 0, 1)
    inv = s.invariants()
    assert (inv.r, inv.deg) == (3, -2)
    assert inv.slope() == (-2, 3)
    assert s.e() == (2, 0) and s.f() == (1, 1) and s.v() == (2, 3)
    assert s.first_graded() == [(2, 0), (1, -2)]
    assert sum(d for _, d in s.second_graded()) == inv.deg
    assert s.certify("stable", "stable", "stable") == "stable"
    assert s.certify("unknown", "stable", "stable") == "unknown"

    # duality is an involution and preserves rank
    dual = mc.dual_invariants(inv, 0, ctx)
    assert dual.r == inv.r
    assert mc.dual_invariants(dual, 0, ctx) == inv

    sl = mc.FiltrationSlice(ctx, mc.Invariants(2, 0), mc.Invariants(1, -1), 1)
    assert sl.cor2_check()
    first, second, first_strict, second_strict = sl.eqx()
    assert first and second and first_strict and second_strict

    rd = mc.moduli_rd(ctx, 1, 1, 0, 1)
    assert (rd.r, rd.deg) == (3, -2)
    assert mc.moduli_dim(mc.CurveContext(2, 2, -1), 1, 1) == 8
    assert mc.moduli_nonempty(ctx, 1, 1, 0, 1)
    assert mc.lemma_violations(2, 3) == 0

    # domain errors surface as ValueError, not crashes
    try:
        mc.CurveContext(1, 2, -1)
    except ValueError:
        pass
    else:
        raise AssertionError("n = 1 should be rejected")

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
