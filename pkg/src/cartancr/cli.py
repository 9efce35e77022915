"""Command line interface: verification suites and artifact emission.

Every check is exact; the report is deterministic (no timestamps, sorted
check ids) so repeated runs are byte identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cohomology, liealg, linalg, model, structeq
from .numfield import AlgNum, ZERO, I

SCHEMA = 1

SUITES = ("algebra", "killing", "kernels", "torsion",
          "structure-equations", "iz-comparison", "model", "all")
EMITS = ("structure-equations", "constraints", "bases", "killing-matrix")


def _default_fixtures() -> Path:
    here = Path(__file__).resolve()
    for base in (here.parents[2], Path.cwd()):
        cand = base / "fixtures"
        if cand.is_dir():
            return cand
    return Path("fixtures")


# ---------------------------------------------------------------------------
# suites: each yields (check id, passed, detail)

def _suite_algebra():
    for kind in ("standard", "cr", "f"):
        basis = liealg.build_basis(kind)
        ok = all(liealg.membership_so32(e) for e in basis.elements)
        yield (f"algebra.membership.{kind}", ok, "all 10 matrices satisfy the form identity")
    grading = liealg.grading_decomposition()
    yield ("algebra.grading.dims", grading["dims"] == {-2: 1, -1: 2, 0: 4, 1: 2, 2: 1},
           f"dims {grading['dims']}")
    f = liealg.build_basis("f")
    ok = True
    for i in range(10):
        for j in range(10):
            want = liealg.DEGREES[i] + liealg.DEGREES[j]
            br = liealg.commutator(f.elements[i], f.elements[j])
            coords = f.expand(br)
            for k, c in enumerate(coords):
                if not c.is_zero() and liealg.DEGREES[k] != want:
                    ok = False
    yield ("algebra.grading.pairs", ok, "brackets respect the degree grading")
    ok = True
    els = f.elements
    for a in range(10):
        for b in range(a + 1, 10):
            for c in range(b + 1, 10):
                j = liealg.mat_add(
                    liealg.commutator(liealg.commutator(els[a], els[b]), els[c]),
                    liealg.mat_add(
                        liealg.commutator(liealg.commutator(els[b], els[c]), els[a]),
                        liealg.commutator(liealg.commutator(els[c], els[a]), els[b])))
                if not all(x.is_zero() for row in j for x in row):
                    ok = False
    yield ("algebra.jacobi", ok, "Jacobi identity over all 120 basis triples")
    cr = liealg.build_basis("cr")
    ok = all(linalg.mat_eq(liealg.mat_conj(cr.elements[i]),
                           cr.elements[liealg.CR_CONJ[i]]) for i in range(10))
    yield ("algebra.reality", ok, "conjugation permutes the cr basis as expected")
    h = set(range(5, 10))
    ok = True
    for i in range(5, 10):
        for j in range(i + 1, 10):
            coords = cr.expand(liealg.commutator(cr.elements[i], cr.elements[j]))
            if any(not c.is_zero() for k, c in enumerate(coords) if k not in h):
                ok = False
    yield ("algebra.subalgebra", ok, "the non-negative part closes under brackets")


def _suite_killing():
    f = liealg.build_basis("f")
    km = liealg.killing_matrix(f)
    signed = {(0, 9): 1, (1, 7): 1, (2, 8): 1, (3, 3): 1, (4, 4): 1,
              (5, 5): 1, (6, 6): -1}
    ok = True
    for i in range(10):
        for j in range(10):
            want = signed.get((i, j), signed.get((j, i), 0))
            if km[i][j] != AlgNum.of(want):
                ok = False
    yield ("killing.matrix", ok, "all 100 entries match the signed permutation form")
    ok = True
    for i in range(10):
        for j in range(i, 10):
            prod = linalg.mat_mul(f.elements[i], f.elements[j])
            tr = sum((prod[k][k] for k in range(5)), ZERO)
            if km[i][j] != AlgNum.of(3) * tr:
                ok = False
    yield ("killing.trace-identity", ok, "K(x, y) = 3 tr(xy) on all basis pairs")
    sigma, eps = cohomology.SIGMA, cohomology.EPS
    ok = True
    for a in range(10):
        for b in range(10):
            want = AlgNum.of(1 if a == b else 0)
            if AlgNum.of(eps[a]) * km[sigma[a]][b] != want:
                ok = False
    yield ("killing.hat-pairing", ok, "eps_a K(hat f_a, f_b) = delta_ab")


def _suite_kernels():
    dims = {d: cohomology.codifferential_kernel(d)["dim"] for d in (1, 2, 3)}
    yield ("kernels.dims", dims == {1: 0, 2: 1, 3: 6},
           f"computed kernel dimensions by shifting degree: {dims}")
    yield ("kernels.degree1.columns", cohomology.degree1_columns_check(),
           "pairing columns match the displayed closed forms")
    chk = cohomology.degree2_system_check()
    yield ("kernels.degree2.printed-system", chk["match"],
           "assembled rows reproduce the displayed 8x8 system exactly")
    res3 = cohomology.codifferential_kernel(3)
    ok = all(all(r.is_zero() for r in cohomology.degree3_reduced_residuals(v))
             for v in res3["kernel"])
    yield ("kernels.degree3.reduced-relations", ok,
           "all kernel vectors satisfy the four reduced relations")
    ok = all(cohomology.kernel_to_cr_components(v).relations_hold()
             for v in res3["kernel"])
    yield ("kernels.degree3.component-relations", ok,
           "converted components satisfy both linear relations and conjugates")


def _suite_torsion():
    tc = cohomology.torsion_complement()
    yield ("torsion.rank", tc["rank"] == 4,
           f"boundary images span rank {tc['rank']} of 4")
    yield ("torsion.complement", tc["complement_dim"] == 0,
           "orthogonal complement of the image is zero")
    w = tc["witnesses"]
    from fractions import Fraction
    want = {
        "c1_of_B3": AlgNum.of(-1),
        "c1_of_B4": -I,
        "c2_of_B1": AlgNum.i(Fraction(-1, 2)),
        "c3_of_B2": AlgNum.of(Fraction(-1, 2)),
    }
    ok = all(w[k] == v for k, v in want.items())
    yield ("torsion.witnesses", ok,
           "tracked boundary components take their closed-form values")


def _suite_structure_equations(fixtures: Path):
    table = structeq.load_constraints((fixtures / "constraints.json").read_text())
    want = structeq.equations_from_json(
        (fixtures / "structure_equations.json").read_text(), derive_conjugates=True)
    got = structeq.generate_structure_equations(table)
    diff = structeq.equations_diff(got, want)
    yield ("structeq.fixture-match", not diff,
           "empty symbolic diff against the stored system" if not diff
           else "; ".join(diff[:4]))
    counts = [len(e.rhs) for e in sorted(got, key=lambda e: e.generator)]
    yield ("structeq.term-counts", counts == [0, 2, 2, 6, 6, 7, 7, 10, 10, 10],
           f"curvature terms per equation: {counts}")
    undetected = []
    for slot in table.primal_slots():
        weak = table.without(slot)
        if not structeq.equations_diff(structeq.generate_structure_equations(weak), want):
            undetected.append(slot)
    yield ("structeq.negative-control", not undetected,
           f"removal of any of the {len(table.primal_slots())} primal constraints "
           "changes the system")
    by_gen = {e.generator: e for e in got}
    ok = all(not structeq.equations_diff([by_gen[g].conjugate()],
                                         [by_gen[structeq.CONJ_GEN[g]]])
             for g in range(10))
    yield ("structeq.reality-involution", ok,
           "conjugating any equation yields the equation of the conjugate generator")
    back = structeq.equations_from_json(structeq.equations_to_json(got))
    yield ("structeq.json-roundtrip", not structeq.equations_diff(back, got),
           "serialization round trip is exact")


def _suite_iz_comparison():
    res = structeq.verify_iz_change_of_frame(include_torsion=True)
    yield ("iz.residual-11", res["residual_11"].is_zero(),
           "first identity residual vanishes")
    yield ("iz.residual-12", res["residual_12"].is_zero(),
           "second identity residual vanishes")
    ctrl = structeq.verify_iz_change_of_frame(include_torsion=False)
    expected = {(0, 3): -structeq.PolyCoeff.symbol(structeq.T_SYMBOL),
                (0, 4): -structeq.PolyCoeff.symbol(structeq.S_SYMBOL)}
    ok = (not ctrl["residual_12"].is_zero()
          and ctrl["residual_12"].terms == expected
          and ctrl["residual_11"].is_zero())
    yield ("iz.negative-control", ok,
           "dropping the torsion terms leaves exactly those terms as residual")


def _suite_model():
    one = AlgNum.of(1)
    verdicts = [
        ((one, I, ZERO, one, -I), True),
        ((one, ZERO, ZERO, ZERO, ZERO), False),
        ((one, I, ZERO, one, I), False),
    ]
    ok = all(model.membership_model(p)["member"] is v for p, v in verdicts)
    yield ("model.membership", ok, "three projective verdicts are exact")
    chk = model.levi_kernel_distribution_check()
    ok = all(r["kernel_dim"] == 1 and r["kernel_is_radial"] for r in chk.values())
    yield ("model.levi-kernel", ok,
           "Levi kernel is the radial complex line at every sample point")
    std = liealg.build_basis("standard")
    members = [(one, I, ZERO, one, -I), (one, -I, ZERO, one, -I),
               (ZERO, one, I, one, -I)]
    zeros = 0
    for x in std.elements:
        for p in members:
            d1, d2 = model.tangency_defects(x, p)
            if d1.is_zero() and d2.is_zero():
                zeros += 2
    yield ("model.tangency", zeros == 60,
           f"{zeros} of 60 flow derivatives vanish exactly")


def run_suite(name: str, fixtures: Path) -> dict:
    gens = {
        "algebra": _suite_algebra,
        "killing": _suite_killing,
        "kernels": _suite_kernels,
        "torsion": _suite_torsion,
        "structure-equations": lambda: _suite_structure_equations(fixtures),
        "iz-comparison": _suite_iz_comparison,
        "model": _suite_model,
    }
    names = list(gens) if name == "all" else [name]
    checks = []
    for n in names:
        for cid, passed, detail in gens[n]():
            checks.append({"id": cid, "passed": bool(passed), "detail": detail})
    checks.sort(key=lambda c: c["id"])
    return {
        "schema": SCHEMA,
        "suite": name,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
        "counts": {
            "total": len(checks),
            "failed": sum(1 for c in checks if not c["passed"]),
        },
    }


# ---------------------------------------------------------------------------
# emission

def _matrix_latex(m) -> str:
    rows = [" & ".join(structeq.algnum_latex(x) for x in row) for row in m]
    return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}\n"


def _matrix_json(m):
    return [[x.serialize() for x in row] for row in m]


def emit_artifacts(kind: str, fmt: str, fixtures: Path) -> str:
    if kind == "structure-equations":
        table = structeq.load_constraints((fixtures / "constraints.json").read_text())
        eqs = structeq.generate_structure_equations(table)
        return (structeq.equations_to_latex(eqs) if fmt == "latex"
                else structeq.equations_to_json(eqs))
    if kind == "constraints":
        table = structeq.load_constraints((fixtures / "constraints.json").read_text())
        return (structeq.constraints_to_latex(table) if fmt == "latex"
                else structeq.constraints_to_json(table))
    if kind == "bases":
        data = {kind_: [_matrix_json(e) for e in liealg.build_basis(kind_).elements]
                for kind_ in ("standard", "cr", "f")}
        if fmt == "json":
            return json.dumps(data, indent=2)
        blocks = []
        for kind_ in ("standard", "cr", "f"):
            basis = liealg.build_basis(kind_)
            for name, el in zip(basis.names, basis.elements):
                blocks.append(f"% {kind_}: {name}\n" + _matrix_latex(el))
        return "\n".join(blocks)
    if kind == "killing-matrix":
        km = liealg.killing_matrix(liealg.build_basis("f"))
        return (_matrix_latex(km) if fmt == "latex"
                else json.dumps(_matrix_json(km), indent=2))
    raise ValueError(f"unknown emit kind {kind!r}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cartancr",
        description="exact verification suites for the girdled CR model algebra")
    parser.add_argument("--suite", choices=SUITES,
                        help="run a verification suite (default: all)")
    parser.add_argument("--emit", choices=EMITS, help="emit an artifact instead")
    parser.add_argument("--format", choices=("latex", "json"), default="latex",
                        help="artifact format for --emit")
    parser.add_argument("--out", type=Path, help="write output to a file")
    parser.add_argument("--json", action="store_true",
                        help="machine readable report")
    parser.add_argument("--fixtures", type=Path, default=None,
                        help="fixture directory override")
    args = parser.parse_args(argv)

    fixtures = args.fixtures or _default_fixtures()

    try:
        if args.emit:
            text = emit_artifacts(args.emit, args.format, fixtures)
            if args.out:
                args.out.write_text(text)
            else:
                sys.stdout.write(text)
            return 0
        report = run_suite(args.suite or "all", fixtures)
    except FileNotFoundError as exc:
        # installed CLI run outside the repository: fixtures must be pointed at
        print(f"cartancr: fixture file not found: {exc.filename}\n"
              "pass --fixtures <dir> with the repository fixtures directory",
              file=sys.stderr)
        return 2
    if args.json:
        out = json.dumps(report, indent=2, sort_keys=True)
    else:
        lines = [f"suite: {report['suite']}"]
        for c in report["checks"]:
            mark = "pass" if c["passed"] else "FAIL"
            lines.append(f"  [{mark}] {c['id']}: {c['detail']}")
        lines.append(f"{report['counts']['total'] - report['counts']['failed']}"
                     f"/{report['counts']['total']} checks passed")
        out = "\n".join(lines) + "\n"
    if args.out:
        args.out.write_text(out)
    else:
        sys.stdout.write(out)
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
