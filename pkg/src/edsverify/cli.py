"""Batch front-end: run verification suites, emit human-readable and JSON
reports.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 EDS parse
failure.  JSON output is deterministic for a fixed seed (timings appear only
on stdout).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import cases, derive, numeric
from .equations import EQ36
from .structure import (
    EdsParseError,
    curvature_forms,
    expected_curvature,
    load_system,
    torsion_equations,
    verify_covariant_derivatives,
    verify_parallel_g_J,
)

SUITES = (
    "structure",
    "nel",
    "sol",
    "equations36",
    "combos",
    "symmetry",
    "case-const-lambda",
    "case-ii",
    "case-iii",
    "numeric",
    "all",
)


def _check(checks: list, check_id: str, label: str, ok: bool, detail: str = "") -> None:
    checks.append(
        {"id": check_id, "label": label, "status": "pass" if ok else "fail", "detail": detail}
    )


def run_structure(sys_, args) -> list:
    checks = []
    grid_report = verify_parallel_g_J(sys_.connection())
    _check(checks, "connection-pattern", "mtx", grid_report["ok"],
           f"free 1-forms: {grid_report['free_count']}")
    for k, resid in enumerate(torsion_equations(sys_), start=1):
        _check(checks, f"torsion-{k}", f"de^{k}", resid.is_zero(),
               "0" if resid.is_zero() else str(resid))
    R = curvature_forms(sys_)
    X = expected_curvature(sys_)
    bad = [(k + 1, l + 1) for k in range(4) for l in range(4) if not (R[k][l] - X[k][l]).is_zero()]
    _check(checks, "curvature-table", "R_k^l", not bad, f"mismatches: {bad}" if bad else "0")
    cov = verify_covariant_derivatives(sys_)
    _check(checks, "covariant-derivatives", "lmn", cov["ok"], "; ".join(cov["failures"][:4]))
    from .forms import RuleSystem, ext_d, wedge, DForm

    rules = RuleSystem(sys_.basis, sys_.ctx, sys_.d_rules)
    for name in ("A", "B", "C", "D"):
        dd = ext_d(sys_.d_rule(name), rules)
        _check(checks, f"d2-{name}", f"d^2 {name}", dd.is_zero())
    A, B, C, D = (DForm.one_form(sys_.basis, n) for n in "ABCD")
    omega = wedge(A, B) + wedge(C, D)
    _check(checks, "kahler-closed", "d omega", ext_d(omega, rules).is_zero())
    return checks


def run_nel(sys_, args) -> list:
    checks = []
    _, report = derive.derive_nel(sys_)
    for label in sorted(report):
        entry = report[label]
        _check(checks, label, label, entry.get("matched", False),
               entry.get("multiplier", entry.get("residual", "")))
    return checks


def run_sol(sys_, args) -> list:
    from .equations import SOL

    checks = []
    nel_set, _ = derive.derive_nel(sys_)
    try:
        assignment = derive.solve_sol(nel_set)
    except Exception as exc:  # noqa: BLE001 - reported, not raised
        _check(checks, "solve", "sol", False, str(exc))
        return checks
    _check(checks, "solve", "sol", True, "12x12 solve, residual 0")
    for name in sorted(SOL):
        ok = (assignment[name] - SOL[name]).is_zero()
        _check(checks, f"component-{name}", name, ok, str(assignment[name]))
    for idx, ok in enumerate(derive.verify_inp(assignment), start=1):
        _check(checks, f"inp-{idx}", f"inp-{idx}", ok)
    return checks


def run_equations36(sys_, args) -> list:
    checks = []
    eqset, report = derive.derive_36(sys_)
    for label in EQ36:
        entry = report[label]
        _check(checks, f"eq-{label}", label, entry["matched"],
               f"{entry['source']}; multiplier {entry.get('multiplier', '?')}")
        # derivation trace: label -> {source identity, multiplier, matched, residual}
        checks[-1]["trace"] = {
            "source": entry["source"],
            "multiplier": entry.get("multiplier"),
            "matched": entry["matched"],
            "residual": entry["residual"],
        }
    vm = derive.verify_multipliers(eqset)
    _check(checks, "multipliers", "stated clearing factors",
           all(v["ok"] for v in vm.values()),
           "; ".join(f"{k}:{v['recovered']}" for k, v in sorted(vm.items()) if not v["ok"]))
    sv = derive.verify_symmetry_variants(sys_, eqset)
    _check(checks, "variants", "rpl images", all(v["ok"] for v in sv.values()))
    integ = derive.integrability_criterion(sys_)
    _check(checks, "integrability", "inp", integ["ok"],
           f"span(e1,e2): {integ['span12_coefficients']}")
    probe = derive.rank_probe(seed=args.seed)
    _check(checks, "rank-probe", "informational", True, json.dumps(probe["trials"]))
    return checks


def run_combos(sys_, args) -> list:
    checks = []
    for name, entry in derive.verify_dependence_relations().items():
        _check(checks, f"combo-{name}", name, entry["ok"], entry["residual"])
    return checks


def run_symmetry(sys_, args) -> list:
    checks = []
    _, grp = derive.symmetry_group()
    _check(checks, "order", "group order", grp["order"] == 32, str(grp["order"]))
    _check(checks, "conjugation", "cng", grp["cng_conjugation"])
    _check(checks, "composition", "cng", grp["cng_composition"])
    closure = derive.verify_group_closure(sys_)
    _check(checks, "closure", "orbit of the 36", closure["closure_ok"],
           str(closure["failures"]) if closure["failures"] else "")
    invariance = derive.verify_system_invariance(sys_)
    _check(checks, "system-invariance", "swp", invariance["ok"],
           str(invariance["failures"]) if invariance["failures"] else "")
    rot = derive.rotation_invariance()
    _check(checks, "rotation", "rce", rot["ok"],
           "R(c e1 + s e2, ...) = (c^2+s^2)^2 sigma")
    return checks


def _pipeline_checks(report) -> list:
    checks = []
    _check(checks, "assumptions", "declared nonzero/vanishing data", True,
           "; ".join(report.assumptions))
    for step in report.steps:
        _check(checks, step.tag, step.description, step.ok, step.detail)
    _check(checks, "conclusion", report.final.get("identity", report.final.get("forced", "")),
           bool(report.final.get("ok")), report.final.get("contradiction", ""))
    return checks


def run_case_const_lambda(sys_, args) -> list:
    return _pipeline_checks(cases.run_const_lambda(sys_))


def run_case_ii(sys_, args) -> list:
    report = cases.run_case_ii(sys_)
    checks = _pipeline_checks(report)
    _check(checks, "sos", "positivity certificate",
           report.final.get("sos_ok", False), report.final.get("sos_certificate") or "")
    return checks


def run_case_iii(sys_, args) -> list:
    return _pipeline_checks(cases.run_case_iii(sys_))


def run_numeric(sys_, args) -> list:
    checks = []
    sw = numeric.sweep(points=args.points, seed=args.seed, tol=args.tol)
    for name, value in sorted(sw["worst"].items()):
        _check(checks, f"sweep-{name}", name, value < args.tol, f"{value:.3e}")
    pt = numeric.build_curvature(1.25, -0.75)
    orbit = numeric.symmetry_orbit_check(pt, seed=args.seed)
    _check(checks, "orbit-group", "32 elements",
           orbit["group_residual"] < args.tol, f"{orbit['group_residual']:.3e}")
    _check(checks, "orbit-rotations", "16 angles",
           orbit["rotation_residual"] < args.tol, f"{orbit['rotation_residual']:.3e}")
    return checks


RUNNERS = {
    "structure": run_structure,
    "nel": run_nel,
    "sol": run_sol,
    "equations36": run_equations36,
    "combos": run_combos,
    "symmetry": run_symmetry,
    "case-const-lambda": run_case_const_lambda,
    "case-ii": run_case_ii,
    "case-iii": run_case_iii,
    "numeric": run_numeric,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edsverify",
        description="Exact verification suites for the weakly-Einstein exterior system",
    )
    parser.add_argument("suite", choices=SUITES, help="verification suite to run")
    parser.add_argument("--eds", default=None, help="EDS file (default: shipped system)")
    parser.add_argument("--json", dest="json_path", default=None, help="write the JSON report here")
    parser.add_argument("--seed", type=int, default=0, help="seed for random sweeps")
    parser.add_argument("--tol", type=float, default=1e-12, help="numeric tolerance gate")
    parser.add_argument("--points", type=int, default=100, help="numeric sweep size")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        sys_ = load_system(args.eds)
    except EdsParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"cannot read {args.eds}: {exc}", file=sys.stderr)
        return 2
    names = [s for s in SUITES if s != "all"] if args.suite == "all" else [args.suite]
    suites = []
    overall_ok = True
    for name in names:
        t0 = time.perf_counter()
        try:
            checks = RUNNERS[name](sys_, args)
        except Exception as exc:  # a non-shipped --eds system may break a suite
            checks = []
            _check(checks, "suite-error", name, False, f"{type(exc).__name__}: {exc}")
        elapsed_ms = (time.perf_counter() - t0) * 1000.0
        ok = all(c["status"] == "pass" for c in checks)
        overall_ok = overall_ok and ok
        suites.append({"suite": name, "checks": checks, "overall": "pass" if ok else "fail"})
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {len(checks)} checks, {elapsed_ms:.0f} ms")
        for c in checks:
            if c["status"] != "pass":
                print(f"    FAIL {c['id']} ({c['label']}): {c['detail']}")
            elif c["id"] in ("conclusion", "sos") and c["detail"]:
                print(f"    {c['id']}: {c['label']} -- {c['detail']}")
    report = suites[0] if len(suites) == 1 else {
        "suite": "all",
        "suites": suites,
        "overall": "pass" if overall_ok else "fail",
    }
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if overall_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
