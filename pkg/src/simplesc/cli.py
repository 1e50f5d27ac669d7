"""Command line entry point: ``simplesc {info,classify,verify,lparams}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from . import chevalley, inventory, lparam, orbit_oracle
from .errors import BudgetExceeded, SimpleSCError
from .gf import field_of_order, make_field
from .root_data import SUPPORTED_TYPES, build_root_datum, exponents_via_heights, omega_group

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_FAILED = 0, 2, 3, 4


# -- output -----------------------------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_cell(x) for x in v) + ")"
    return str(v)


def render(rows: list[dict] | dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    if isinstance(rows, dict):
        rows = [{"key": k, "value": v} for k, v in rows.items()]
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r[c]) for c in cols])
        return buf.getvalue()
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for r in rows:
        lines.append("| " + " | ".join(_cell(r[c]) for c in cols) + " |")
    return "\n".join(lines) + "\n"


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------------

def cmd_info(args) -> int:
    rd = build_root_datum(args.type, args.rank)
    om = omega_group(rd)
    report = {
        "type": rd.name,
        "rank": rd.rank,
        "marks": list(rd.marks),
        "coxeter_number": rd.coxeter_number,
        "exponents": list(rd.exponents),
        "omega_order": len(om),
        "det_cartan": rd.det_cartan,
        "dim_g": rd.dim_g,
        "omega_elements": [list(p) for p in om.elements],
    }
    emit(render(report, args.format), args.out)
    return EXIT_OK


def classify_rows(family: str, rank: int, p: int, n: int) -> list[dict]:
    rd = build_root_datum(family, rank)
    F = make_field(p, n)
    deg = inventory.formal_degree_ep(rd, F.q)
    reps = {inventory.pair_class(rd, r): r for r in inventory.class_representatives(rd, F)}
    rows = []
    for lab in inventory.enumerate_representations(rd, F):
        rows.append({
            "delta_class": list(lab.delta_class.coeffs),
            "psi": lab.psi,
            "lambda": [list(a.coeffs) for a in reps[lab.delta_class].lam.coeffs],
            "formal_degree_numerator": deg.numerator,
            "formal_degree_denominator": deg.denominator,
        })
    return rows


def cmd_classify(args) -> int:
    emit(render(classify_rows(args.type, args.rank, args.p, args.n), args.format), args.out)
    return EXIT_OK


def lparams_report(family: str, rank: int) -> dict:
    rd = build_root_datum(family, rank)
    inv = lparam.ssc_parameter_invariants(rd)
    deg = inventory.formal_degree_ep(rd)
    gamma = lparam.gamma_principal(rd)
    return {
        "type": rd.name,
        "rank": rd.rank,
        "q": "symbolic",
        "alpha": inv["alpha"],
        "swan": inv["swan"],
        "l_function": "1" if inv["L_trivial"] else "nontrivial",
        "packet_size": inv["packet_size"],
        "inertia_fixed_dim": inv["inertia_fixed_dim"],
        "center_order": inv["center_order"],
        "formal_degree": deg.to_json(),
        "gamma_magnitude": gamma.magnitude_str(),
        "gamma_sign": gamma.sign,
        "conditional_on": inv["conditional_on"],
    }


def cmd_lparams(args) -> int:
    emit(render(lparams_report(args.type, args.rank), args.format), args.out)
    return EXIT_OK


# -- verification suites ------------------------------------------------------------

def _check(suite: str, name: str, statement: str, passed: bool, **detail) -> dict:
    return {"suite": suite, "name": name, "statement": statement, "passed": bool(passed), "detail": detail}


def suite_signs(q_max, budget) -> list[dict]:
    out = []
    for fam, r in SUPPORTED_TYPES:
        rd = build_root_datum(fam, r)
        table = chevalley.structure_constants(rd)
        om = omega_group(rd)
        ok = all(chevalley.verify_sign_product(table, s) for s in om.elements)
        out.append(_check("signs", rd.name, "prod_j eps_{w,beta_j}^{c_j} = 1 for every w in Omega",
                          ok, omega_order=len(om)))
    return out


def suite_orbits(q_max, budget) -> list[dict]:
    out = []
    for fam, r, q in orbit_oracle.default_matrix(q_max):
        rd = build_root_datum(fam, r)
        F = field_of_order(q)
        rep = orbit_oracle.check_delta_classification(rd, chevalley.structure_constants(rd), F, budget)
        out.append(_check("orbits", f"{rd.name} q={q}",
                          "H_x-orbits on stable vectors are the Delta-fibers, q-1 of them",
                          rep["match"], **{k: v for k, v in rep.items() if k not in ("type", "q")}))
    return out


def suite_kostant(q_max, budget) -> list[dict]:
    out = []
    for fam, r in SUPPORTED_TYPES:
        rd = build_root_datum(fam, r)
        lratio = lparam.adjoint_l_ratio(lparam.principal_parameter(rd))
        kost = lparam.kostant_product(rd)
        out.append(_check("kostant", rd.name, "L(phi_pr,1)/L(phi_pr,0) = q^l prod (q^m-1)/(q^(m+1)-1)",
                          lratio == kost, value=str(lratio)))
        square = inventory.formal_degree_ep(rd) * len(omega_group(rd)) * lparam.mu_jx(rd).value
        out.append(_check("kostant", f"{rd.name} consistency", "deg pi * |Omega| * mu(J_x) = 1",
                          square == 1, value=str(square)))
        out.append(_check("kostant", f"{rd.name} exponents", "Coxeter exponents = height partition",
                          rd.exponents == exponents_via_heights(rd), exponents=list(rd.exponents)))
    return out


def suite_fdc(q_max, budget) -> list[dict]:
    out = []
    for fam, r in SUPPORTED_TYPES:
        rd = build_root_datum(fam, r)
        v = lparam.derive_from_fdc(rd, lparam.Candidate.unknowns())
        ok = (v.consistent and v.alpha_forced == rd.dim_g + rd.rank and v.pn_all_constant
              and v.C_forced == 1)
        out.append(_check("fdc", rd.name, "alpha = dim g + l, P_n = 1, C = 1", ok, alpha=v.alpha_forced))
        bad = [c.label for c in lparam.perturbed_candidates(rd) if lparam.derive_from_fdc(rd, c).consistent]
        out.append(_check("fdc", f"{rd.name} perturbed", "every perturbed candidate is inconsistent",
                          not bad, accepted=bad))
        inv = lparam.ssc_parameter_invariants(rd)
        out.append(_check("fdc", f"{rd.name} swan", "swan conductor = l", inv["swan"] == rd.rank,
                          swan=inv["swan"]))
    return out


SUITES: dict[str, Callable] = {
    "signs": suite_signs,
    "orbits": suite_orbits,
    "kostant": suite_kostant,
    "fdc": suite_fdc,
}


def run_verify(suite: str, q_max: int | None, budget: int) -> tuple[dict, int]:
    names = list(SUITES) if suite == "all" else [suite]
    checks: list[dict] = []
    code = EXIT_OK
    error = None
    for name in names:
        try:
            checks += SUITES[name](q_max, budget)
        except BudgetExceeded as exc:
            error = str(exc)
            code = EXIT_BUDGET
            break
    passed = all(c["passed"] for c in checks) and error is None
    if code == EXIT_OK and not passed:
        code = EXIT_FAILED
    report = {"suite": suite, "q_max": q_max, "budget": budget, "passed": passed,
              "checks": checks, "error": error, "conditional_on": lparam.CONDITIONAL_ON}
    return report, code


def cmd_verify(args) -> int:
    suite = "all" if args.seed_sweep else args.suite
    q_max = None if args.seed_sweep else args.q_max
    report, code = run_verify(suite, q_max, args.budget)
    if args.format == "json":
        text = render(report, "json")
    else:
        rows = [{"suite": c["suite"], "name": c["name"], "passed": c["passed"]} for c in report["checks"]]
        text = render(rows, args.format)
    emit(text, args.out)
    return code


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="json")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="simplesc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="root datum summary")
    p.add_argument("type")
    p.add_argument("rank", type=int)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify", parents=[common], help="labels of simple supercuspidals over GF(p^n)")
    p.add_argument("type")
    p.add_argument("rank", type=int)
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=("orbits", "signs", "kostant", "fdc", "all"))
    p.add_argument("--q-max", type=int, default=None)
    p.add_argument("--budget", type=int, default=orbit_oracle.DEFAULT_BUDGET)
    p.add_argument("--seed-sweep", action="store_true", help="full default matrix, all suites")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lparams", parents=[common], help="parameter numerology of simple supercuspidals")
    p.add_argument("type")
    p.add_argument("rank", type=int)
    p.set_defaults(func=cmd_lparams)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SimpleSCError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
