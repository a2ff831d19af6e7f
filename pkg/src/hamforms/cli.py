"""Command-line front end for reproducible runs over pair and form files.

Subcommands:

  compose     pair file -> structure three-form file
  decompose   structure three-form file -> pair file
  verify      compatibility identities of a pair, symbolic or sampled
  congruence  congruence table, rank, certificate, annihilation check
  classify    invariants and canonical system of a structure form
  transform   projective / x-t exchange / reciprocal transformation
  audit       dimension bookkeeping and stabilizer checks

Shared flags: --symbolic or --sample <n> (sampling applies to verify,
congruence, and transform image checks; everything else is inherently
symbolic), --seed <s>, --format text|json|csv, --output <path>.

Exit codes: 0 all checks pass, 1 a verification check fails, 2 input or
usage error.  Output is deterministic for fixed inputs and seed: JSON
is emitted with sorted keys, reports carry no timestamps, and every
check records whether it ran symbolically or on sampled points along
with the seed.  compose and decompose write the produced file format
itself in JSON mode so runs can be chained; transform reports carry the
transformed pair under the "pair" key.
"""

import argparse
import csv
import io
import sys
from fractions import Fraction

from .errors import HamformsError, ValidationError
from .linalg import Matrix
from .pairs import check_compat
from .bridge import form_from_pair, pair_from_form, dimension_audit
from .congruence import (pair_columns, plucker_coords, congruence_matrix,
                         congruence_rank, annihilation_check, grassmann_check)
from .classify import classify_n2, classify_n4, stabilizer_audit, format_system
from .transforms import (ProjectiveMap, ReciprocalMap, apply_projective,
                         apply_xt_exchange, apply_reciprocal)
from .sampling import Lcg, sample_point
from .serialize import (rational_to_str, rational_from_str, load_json,
                        dump_json, pair_from_dict, pair_to_dict,
                        omega_from_dict, omega_to_dict)

__all__ = ["main"]

_DEFAULT_SAMPLES = 20


# -- shared plumbing ---------------------------------------------------

def _scalar_str(v) -> str:
    if isinstance(v, (int, Fraction)):
        return rational_to_str(Fraction(v))
    return v.format()


def _mode_of(args) -> dict:
    if args.sample is not None:
        if args.sample < 1:
            raise ValidationError("--sample count must be at least 1")
        return {"kind": "sampled", "samples": args.sample, "seed": args.seed}
    return {"kind": "symbolic", "samples": None, "seed": args.seed}


def _check(name, ok, provenance, residuals=None) -> dict:
    return {
        "name": name,
        "status": "pass" if ok else "fail",
        "provenance": provenance,
        "residuals": residuals if residuals is not None else {},
    }


def _report(command, inputs, mode, checks, **payload) -> dict:
    out = {
        "command": command,
        "inputs": inputs,
        "mode": mode,
        "checks": checks,
        "ok": all(c["status"] == "pass" for c in checks),
    }
    out.update(payload)
    return out


def _emit(args, payload, text_lines, csv_rows) -> None:
    if args.format == "json":
        body = dump_json(payload)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows:
            writer.writerow(row)
        body = buf.getvalue()
    else:
        body = "\n".join(text_lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fp:
            fp.write(body)
    else:
        sys.stdout.write(body)


def _checks_csv(checks) -> list:
    rows = [["check", "status", "provenance"]]
    for c in checks:
        rows.append([c["name"], c["status"], c["provenance"]])
    return rows


def _pair_text(pair) -> list:
    lines = ["N = %d" % pair.N]
    cubic = pair.mcubic.sorted_items()
    lines.append("T: %s" % (pair.mcubic.format() if cubic else "0"))
    lines.append("g0: %s" % _skew_text(pair.mconst))
    lines.append("A: %s" % _skew_text(pair.wskew))
    lines.append("B: (%s)" % ", ".join(_scalar_str(b) for b in pair.wconst))
    return lines


def _skew_text(s) -> str:
    parts = ["[%d,%d] %s" % (i, j, _scalar_str(v))
             for (i, j), v in sorted(s.upper.items()) if v]
    return "; ".join(parts) if parts else "0"


def _omega_text(sf) -> list:
    lines = ["N = %d (form on %d coordinates)" % (sf.N, sf.N + 2)]
    for idx, c in sf.form.sorted_items():
        lines.append("du%s: %s" % ("^du".join(str(i) for i in idx),
                                   _scalar_str(c)))
    return lines


def _pair_points(pair, samples, seed) -> list:
    """Sample points of the field space where the metric stays invertible."""
    rng = Lcg(seed)
    pf = pair.pf()
    points = []
    while len(points) < samples:
        x = sample_point(rng, pair.nvars)
        if pf.eval(x):
            points.append(x)
    return points


# -- subcommands -------------------------------------------------------

def cmd_compose(args) -> int:
    pair = pair_from_dict(load_json(args.pair), where=args.pair)
    sf = form_from_pair(pair)
    back = pair_from_form(sf)
    ok = (back.mcubic == pair.mcubic and back.mconst == pair.mconst
          and back.wskew == pair.wskew
          and tuple(back.wconst) == tuple(pair.wconst))
    payload = omega_to_dict(sf)
    lines = _omega_text(sf)
    lines.append("round trip through the block decomposition: %s"
                 % ("ok" if ok else "FAILED"))
    rows = [["idx", "coeff"]]
    for t in payload["terms"]:
        rows.append([" ".join(str(i) for i in t["idx"]), t["coeff"]])
    _emit(args, payload, lines, rows)
    return 0 if ok else 1


def cmd_decompose(args) -> int:
    sf = omega_from_dict(load_json(args.omega), where=args.omega)
    pair = pair_from_form(sf)
    ok = form_from_pair(pair).form == sf.form
    payload = pair_to_dict(pair)
    lines = _pair_text(pair)
    lines.append("round trip through the reassembled form: %s"
                 % ("ok" if ok else "FAILED"))
    rows = [["block", "entry", "value"]]
    for t in payload["T"]["terms"]:
        rows.append(["T", " ".join(str(i) for i in t["idx"]), t["coeff"]])
    for key in ("g0", "A"):
        for t in payload[key]["terms"]:
            rows.append([key, " ".join(str(i) for i in t["idx"]), t["coeff"]])
    for k, b in enumerate(payload["B"], start=1):
        rows.append(["B", str(k), b])
    _emit(args, payload, lines, rows)
    return 0 if ok else 1


def _residual_json(res, mode) -> dict:
    out = {}
    for key, val in sorted(res.items(), key=lambda kv: str(kv[0])):
        name = ",".join(str(k) for k in key) if isinstance(key, tuple) else str(key)
        if isinstance(val, dict):
            out[name] = {"point": [_scalar_str(x) for x in val["point"]],
                         "value": _scalar_str(val["value"])}
        else:
            out[name] = _scalar_str(val)
    return out


def cmd_verify(args) -> int:
    pair = pair_from_dict(load_json(args.pair), where=args.pair)
    mode = _mode_of(args)
    rep = check_compat(pair, mode=mode["kind"],
                       samples=mode["samples"] or _DEFAULT_SAMPLES,
                       seed=mode["seed"])
    n1, n2 = rep["checked"]
    checks = [
        _check("first-order compatibility (%d combinations)" % n1,
               not rep["first_order"], rep["mode"],
               _residual_json(rep["first_order"], rep["mode"])),
        _check("second-order compatibility (%d combinations)" % n2,
               not rep["second_order"], rep["mode"],
               _residual_json(rep["second_order"], rep["mode"])),
    ]
    payload = _report("verify", {"pair": args.pair}, mode, checks)
    lines = ["verify %s" % args.pair, "mode: %s (seed %d)"
             % (mode["kind"], mode["seed"])]
    for c in checks:
        lines.append("%s: %s" % (c["name"], c["status"]))
        for key, val in c["residuals"].items():
            lines.append("  residual at (%s): %s" % (key, val))
    _emit(args, payload, lines, _checks_csv(checks))
    return 0 if payload["ok"] else 1


def _column_label(j, k, dim) -> str:
    if dim <= 9:
        return "p%d%d" % (j, k)
    return "p%d_%d" % (j, k)


def _equation_strings(m, dim) -> list:
    cols = pair_columns(dim)
    out = []
    for i in range(m.nrows):
        parts = []
        for c, (j, k) in enumerate(cols):
            v = m[i, c]
            if not v:
                continue
            s = _scalar_str(v)
            label = _column_label(j, k, dim)
            if s == "1":
                parts.append(label)
            elif s == "-1":
                parts.append("-%s" % label)
            elif " " in s:
                parts.append("(%s)*%s" % (s, label))
            else:
                parts.append("%s*%s" % (s, label))
        eq = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        out.append("du%d: %s = 0" % (i + 1, eq))
    return out


def cmd_congruence(args) -> int:
    pair = pair_from_dict(load_json(args.pair), where=args.pair)
    sf = form_from_pair(pair)
    dim = pair.N + 2
    m = congruence_matrix(sf)
    rank_info = congruence_rank(sf)
    mode = _mode_of(args)

    checks = []
    if mode["kind"] == "symbolic":
        p = plucker_coords(pair)
        ann = annihilation_check(sf, p)
        gr = grassmann_check(p, dim)
        checks.append(_check("annihilation of the line coordinates",
                             ann["ok"], "symbolic",
                             _residual_json(ann["residuals"], "symbolic")))
        checks.append(_check("quadric relations of the line coordinates",
                             gr["ok"], "symbolic",
                             _residual_json(gr["residuals"], "symbolic")))
    else:
        points = _pair_points(pair, mode["samples"], mode["seed"])
        bad_ann, bad_gr = {}, {}
        for t, x in enumerate(points):
            p = plucker_coords(pair, x)
            ann = annihilation_check(sf, p)
            gr = grassmann_check(p, dim)
            for key, v in ann["residuals"].items():
                bad_ann["point%d,%s" % (t, key)] = v
            for key, v in gr["residuals"].items():
                bad_gr["point%d,%s" % (t, ",".join(map(str, key)))] = v
        checks.append(_check("annihilation of the line coordinates "
                             "(%d points)" % len(points),
                             not bad_ann, "sampled",
                             _residual_json(bad_ann, "sampled")))
        checks.append(_check("quadric relations of the line coordinates "
                             "(%d points)" % len(points),
                             not bad_gr, "sampled",
                             _residual_json(bad_gr, "sampled")))

    cols = pair_columns(dim)
    table = {
        "rows": ["du%d" % i for i in range(1, dim + 1)],
        "columns": [_column_label(j, k, dim) for (j, k) in cols],
        "entries": [[_scalar_str(m[i, c]) for c in range(m.ncols)]
                    for i in range(m.nrows)],
    }
    rank_payload = {
        "rank": rank_info["rank"],
        "rows": rank_info["rows"],
        "dependent": rank_info["dependent"],
        "certificate": ([_scalar_str(v) for v in rank_info["certificate"]]
                        if rank_info["certificate"] is not None else None),
    }
    payload = _report("congruence", {"pair": args.pair}, mode, checks,
                      table=table, rank=rank_payload)
    equations = _equation_strings(m, dim)
    if args.table:
        payload["equations"] = equations

    lines = ["congruence %s" % args.pair]
    lines.extend(equations)
    lines.append("rank: %d of %d rows (%s)"
                 % (rank_payload["rank"], rank_payload["rows"],
                    "dependent" if rank_payload["dependent"]
                    else "independent"))
    if rank_payload["certificate"] is not None:
        lines.append("certificate: (%s)"
                     % ", ".join(rank_payload["certificate"]))
    for c in checks:
        lines.append("%s: %s" % (c["name"], c["status"]))

    rows = [["row"] + table["columns"]]
    for name, entries in zip(table["rows"], table["entries"]):
        rows.append([name] + entries)
    _emit(args, payload, lines, rows)
    return 0 if payload["ok"] else 1


def cmd_classify(args) -> int:
    sf = omega_from_dict(load_json(args.omega), where=args.omega)
    if sf.N == 2:
        result = classify_n2(sf)
        invariants = {}
    elif sf.N == 4:
        result = classify_n4(sf)
        invariants = {"theta_eta": _scalar_str(result.invariants[0]),
                      "q": _scalar_str(result.invariants[1])}
    else:
        raise ValidationError("classification is implemented for N=2 and "
                              "N=4, got N=%d" % sf.N)
    system = format_system(result.canonical_pair)
    log = {}
    for k, v in sorted(result.log.items()):
        if isinstance(v, (bool, int, str)):
            log[k] = v
        elif isinstance(v, Fraction):
            log[k] = _scalar_str(v)
    mode = _mode_of(args)
    checks = [_check("normalization verified by pullback", True, "symbolic")]
    payload = _report("classify", {"omega": args.omega}, mode, checks,
                      N=sf.N, invariants=invariants,
                      canonical=omega_to_dict(result.canonical_form),
                      system=system, log=log)
    lines = ["classify %s" % args.omega, "N = %d" % sf.N]
    for k, v in sorted(invariants.items()):
        lines.append("%s = %s" % (k, v))
    lines.append("canonical system:")
    lines.extend("  " + eq for eq in system)
    lines.append("canonical form:")
    lines.extend("  " + l for l in _omega_text(result.canonical_form)[1:])
    rows = [["key", "value"]]
    rows.extend([k, v] for k, v in sorted(invariants.items()))
    rows.extend([["equation", eq] for eq in system])
    _emit(args, payload, lines, rows)
    return 0 if payload["ok"] else 1


def _parse_matrix_file(path) -> Matrix:
    d = load_json(path)
    if not isinstance(d, dict) or set(d) != {"matrix"}:
        raise ValidationError("%s: expected an object with a single "
                              "\"matrix\" key" % path)
    rows = d["matrix"]
    if (not isinstance(rows, list) or not rows
            or not all(isinstance(r, list) for r in rows)):
        raise ValidationError("%s: matrix must be a list of rows" % path)
    parsed = [[rational_from_str(v, "%s.matrix[%d][%d]" % (path, i, j))
               for j, v in enumerate(r)] for i, r in enumerate(rows)]
    return Matrix(parsed)


def _parse_reciprocal_file(path, n) -> ReciprocalMap:
    d = load_json(path)
    keys = {"ax", "ax0", "bt", "bx", "cx", "dt0"}
    if not isinstance(d, dict) or set(d) != keys:
        raise ValidationError("%s: expected exactly the keys %s"
                              % (path, sorted(keys)))
    for key in ("ax", "bx"):
        if not isinstance(d[key], list) or len(d[key]) != n:
            raise ValidationError("%s.%s: expected a list of %d rationals"
                                  % (path, key, n))
    ax = [rational_from_str(v, "%s.ax[%d]" % (path, k))
          for k, v in enumerate(d["ax"])]
    bx = [rational_from_str(v, "%s.bx[%d]" % (path, k))
          for k, v in enumerate(d["bx"])]
    scal = {key: rational_from_str(d[key], "%s.%s" % (path, key))
            for key in ("ax0", "bt", "cx", "dt0")}
    return ReciprocalMap(n, ax, scal["ax0"], scal["bt"], bx, scal["cx"],
                         scal["dt0"])


def cmd_transform(args) -> int:
    pair = pair_from_dict(load_json(args.pair), where=args.pair)
    mode = _mode_of(args)
    inputs = {"pair": args.pair}
    checks = []

    if args.projective:
        inputs["projective"] = args.projective
        phi = ProjectiveMap(_parse_matrix_file(args.projective))
        new_pair, rep = apply_projective(pair, phi)
        checks.append(_check("metric conformal law under the point map",
                             rep["conformal_ok"], "symbolic"))
        checks.append(_check("covector block keeps its affine shape",
                             rep["affine_shape_ok"], "symbolic"))
        extra = {"kind": "projective",
                 "denominator": _scalar_str(rep["denominator"])}
    elif args.xt:
        new_pair = apply_xt_exchange(pair)
        twice = apply_xt_exchange(new_pair)
        ok = (twice.mcubic == pair.mcubic and twice.mconst == pair.mconst
              and twice.wskew == pair.wskew
              and tuple(twice.wconst) == tuple(pair.wconst))
        checks.append(_check("applying the exchange twice returns the "
                             "original pair", ok, "symbolic"))
        extra = {"kind": "xt"}
    else:
        inputs["reciprocal"] = args.reciprocal
        r = _parse_reciprocal_file(args.reciprocal, pair.N)
        new_pair = apply_reciprocal(pair, r)
        rep = check_compat(new_pair,
                           mode=("sampled" if mode["kind"] == "sampled"
                                 else "auto"),
                           samples=mode["samples"] or _DEFAULT_SAMPLES,
                           seed=mode["seed"])
        checks.append(_check("transformed pair satisfies the "
                             "compatibility identities",
                             rep["all_zero"], rep["mode"]))
        extra = {"kind": "reciprocal"}

    payload = _report("transform", inputs, mode, checks,
                      pair=pair_to_dict(new_pair), **extra)
    ok = payload["ok"]
    lines = ["transform (%s) %s" % (extra["kind"], args.pair)]
    lines.extend(_pair_text(new_pair))
    for c in checks:
        lines.append("%s: %s" % (c["name"], c["status"]))
    _emit(args, payload, lines, _checks_csv(checks))
    return 0 if ok else 1


def cmd_audit(args) -> int:
    try:
        dims = sorted({int(v) for v in args.dims.split(",") if v.strip()})
    except ValueError:
        raise ValidationError("--dims expects comma-separated integers")
    if not dims:
        raise ValidationError("--dims must name at least one field count")
    mode = _mode_of(args)
    checks = []
    dim_reports = []
    for n in dims:
        rep = dimension_audit(n)
        dim_reports.append(rep)
        checks.append(_check("block dimensions add up at N=%d "
                             "(%d coefficients)" % (n, rep["total"]),
                             rep["ok"], "symbolic"))
    stab = stabilizer_audit()
    checks.append(_check("all %d stabilizer directions preserve the "
                         "standard block" % stab["dimension"],
                         all(g["first_order_ok"] for g in stab["generators"]),
                         "symbolic"))
    checks.append(_check("representative group elements preserve it exactly",
                         all(stab["exact"].values()), "symbolic"))
    checks.append(_check("non-symplectic control direction breaks it",
                         not stab["negative_control_preserved"], "symbolic"))
    payload = _report("audit", {"dims": dims}, mode, checks,
                      dimension=dim_reports, stabilizer=stab)
    lines = ["audit"]
    for rep in dim_reports:
        blocks = ", ".join("%s %d" % (k, v["count"])
                           for k, v in sorted(rep["blocks"].items()))
        lines.append("N=%d: %d total = %s (%s)"
                     % (rep["N"], rep["total"], blocks,
                        "ok" if rep["ok"] else "FAILED"))
    for c in checks:
        lines.append("%s: %s" % (c["name"], c["status"]))
    _emit(args, payload, lines, _checks_csv(checks))
    return 0 if payload["ok"] else 1


# -- argument parsing --------------------------------------------------

def _add_common(sp) -> None:
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--symbolic", action="store_true",
                       help="prove checks as exact identities (default)")
    group.add_argument("--sample", type=int, metavar="N", default=None,
                       help="evaluate checks at N random rational points")
    sp.add_argument("--seed", type=int, default=1, metavar="S",
                    help="seed of the documented linear congruential "
                         "generator (default 1)")
    sp.add_argument("--format", choices=("text", "json", "csv"),
                    default="text", help="output format (default text)")
    sp.add_argument("--output", metavar="PATH", default=None,
                    help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamforms",
        description="Exact correspondence between alternating three-forms, "
                    "second-order homogeneous Hamiltonian operators, and "
                    "hydrodynamic conservation laws.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compose", help="pair file to structure-form file")
    sp.add_argument("--pair", required=True, metavar="FILE")
    _add_common(sp)
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("decompose", help="structure-form file to pair file")
    sp.add_argument("--omega", required=True, metavar="FILE")
    _add_common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("verify", help="compatibility identities of a pair")
    sp.add_argument("--pair", required=True, metavar="FILE")
    _add_common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("congruence",
                        help="congruence table, rank, and line checks")
    sp.add_argument("--pair", required=True, metavar="FILE")
    sp.add_argument("--table", action="store_true",
                    help="include rendered equations in structured output")
    _add_common(sp)
    sp.set_defaults(func=cmd_congruence)

    sp = sub.add_parser("classify",
                        help="invariants and canonical form of a "
                             "structure form")
    sp.add_argument("--omega", required=True, metavar="FILE")
    _add_common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("transform", help="transform a pair")
    sp.add_argument("--pair", required=True, metavar="FILE")
    kind = sp.add_mutually_exclusive_group(required=True)
    kind.add_argument("--projective", metavar="FILE",
                      help="JSON file {\"matrix\": [[...]]} of size N+1")
    kind.add_argument("--xt", action="store_true",
                      help="swap the two independent variables")
    kind.add_argument("--reciprocal", metavar="FILE",
                      help="JSON file with keys ax, ax0, bt, bx, cx, dt0")
    _add_common(sp)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("audit",
                        help="dimension bookkeeping and stabilizer checks")
    sp.add_argument("--dims", default="2,4,6,8", metavar="LIST",
                    help="comma-separated field counts (default 2,4,6,8)")
    _add_common(sp)
    sp.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HamformsError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
