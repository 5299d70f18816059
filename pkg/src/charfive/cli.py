"""Command-line front door.

Verbs:
    lattice table1        the 13-row isotropy table
    lattice classify      the nine orbit representatives
    lattice verify        re-check a classification payload (file or stdin)
    curve check           full pipeline for one sextic
    curve sing            singular points only
    curve wall            the degree product report only
    curve ns              the rank-22 sublattice model as lattice JSON
    curve random          seeded admissible sextics

JSON output is canonical (sorted keys, fixed separators); identical
command and seed give byte-identical stdout.  Timing diagnostics go to
stderr only.  Exit codes: 0 success, 1 verification failure, 2 usage.
"""

import argparse
import json
import sys
import time

from . import __version__
from . import curvecheck, discform
from .ffpoly import GF, SplittingFieldError, format_poly_literal, parse_poly_literal


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_field(text):
    text = text.strip()
    if text == "5":
        return GF(1)
    if text.startswith("5^"):
        return GF(int(text[2:]))
    raise _UsageError(f"unsupported field {text!r} (use 5 or 5^k)")


def _canonical_json(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _md_table(headers, rows):
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(cells):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
    lines = [fmt(headers), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    lines += [fmt(row) for row in rows]
    return "\n".join(lines) + "\n"


def _emit(text, args, stdout):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _wrap(args, results, seed=None):
    payload = {
        "command": args.command_echo,
        "version": __version__,
        "results": results,
    }
    if seed is not None:
        payload["seed"] = seed
    return payload


def build_parser():
    parser = _ArgumentParser(prog="charfive", description=__doc__)
    sub = parser.add_subparsers(dest="domain", required=True)

    lat = sub.add_parser("lattice", help="overlattice classification")
    lat_sub = lat.add_subparsers(dest="verb", required=True)
    for verb in ("table1", "classify"):
        p = lat_sub.add_parser(verb)
        p.add_argument("--format", choices=("json", "md"), default="json")
        p.add_argument("--out", default=None)
        p.add_argument("--jobs", type=int, default=1)
    pv = lat_sub.add_parser("verify")
    pv.add_argument("--in", dest="infile", default=None,
                    help="classification JSON (defaults to stdin)")
    pv.add_argument("--out", default=None)

    cur = sub.add_parser("curve", help="sextic curve checks")
    cur_sub = cur.add_subparsers(dest="verb", required=True)
    for verb in ("check", "sing", "wall", "ns"):
        p = cur_sub.add_parser(verb)
        p.add_argument("--poly", required=True)
        p.add_argument("--max-ext", type=int, default=8)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "md"), default="json")
        p.add_argument("--out", default=None)
    pr = cur_sub.add_parser("random")
    pr.add_argument("--field", default="5")
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--count", type=int, default=1)
    pr.add_argument("--check", action="store_true",
                    help="run the full pipeline on each sample")
    pr.add_argument("--max-ext", type=int, default=8)
    pr.add_argument("--format", choices=("json", "md"), default="json")
    pr.add_argument("--out", default=None)
    return parser


# ---------------------------------------------------------------------------
# lattice verbs
# ---------------------------------------------------------------------------

def _cmd_table1(args, stdout):
    rows = discform.isotropic_table(jobs=args.jobs)
    if args.format == "md":
        body = _md_table(
            ["(a,b,y)-type", "roots orthogonal to h", "the set E", "star"],
            [[r.type_label, r.root_type, "empty" if r.e_empty else "nonempty",
              "*" if r.starred else ""] for r in rows])
        _emit(body, args, stdout)
    else:
        payload = _wrap(args, [r.to_json_dict() for r in rows])
        _emit(_canonical_json(payload), args, stdout)
    return 0


def _cmd_classify(args, stdout):
    records = discform.classify_isotropic_subgroups(jobs=args.jobs)
    if args.format == "md":
        body = _md_table(
            ["label", "gens", "disc", "sigma", "root type", "E empty"],
            [[r.label,
              " ".join("[" + ",".join(map(str, g)) + "]" for g in r.gens) or "0",
              f"-5^{r.disc_exp}", str(r.sigma), r.root_type, str(r.e_empty)]
             for r in records])
        _emit(body, args, stdout)
    else:
        payload = _wrap(args, [r.to_json_dict() for r in records])
        _emit(_canonical_json(payload), args, stdout)
    return 0


def _cmd_verify(args, stdout, stderr):
    if args.infile:
        with open(args.infile) as fh:
            data = json.load(fh)
    else:
        data = json.load(sys.stdin)
    entries = data["results"] if isinstance(data, dict) else data
    checks = []

    def check(name, ok, detail=""):
        checks.append({"name": name, "passed": bool(ok), "detail": detail})
        if not ok:
            stderr.write(f"FAIL {name}: {detail}\n")

    qrep = discform.verify_q_consistency()
    check("q_consistency", qrep.passed,
          f"{qrep.n_checked} elements, {len(qrep.mismatches)} mismatches")
    check("dimension_bound", discform.max_isotropic_dimension() == 2)
    check("entry_count", len(entries) == 9, f"{len(entries)} entries")

    keys = set()
    reference_keys = {}
    for label, gens in discform.REFERENCE_SUBGROUPS.items():
        sub = discform.IsotropicSubgroup(gens=gens)
        reference_keys[discform.canonical_key(sub)] = label
    for entry in entries:
        label = entry.get("label", "?")
        try:
            sub = discform.IsotropicSubgroup(
                gens=tuple(tuple(g) for g in entry["gens"]))
        except ValueError as exc:
            check(f"{label}:isotropic", False, str(exc))
            continue
        check(f"{label}:condition_II", discform.condition_II(sub))
        key = discform.canonical_key(sub)
        check(f"{label}:distinct_orbit", key not in keys)
        keys.add(key)
        check(f"{label}:matches_reference", reference_keys.get(key) == label,
              f"orbit is {reference_keys.get(key)}")
        _s, rt, e_empty, disc_exp = discform._subgroup_invariants(sub)
        check(f"{label}:disc", disc_exp == entry["disc_exp"],
              f"computed -5^{disc_exp}")
        check(f"{label}:sigma", disc_exp // 2 == entry["sigma"])
        check(f"{label}:root_type", rt == entry["root_type"], f"computed {rt}")
        check(f"{label}:E_empty", e_empty == entry["E_empty"])

    passed = all(c["passed"] for c in checks)
    payload = {"checks": checks, "passed": passed}
    _emit(_canonical_json(payload), args, stdout)
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# curve verbs
# ---------------------------------------------------------------------------

def _load_model(args):
    try:
        f = parse_poly_literal(args.poly)
    except (ValueError, SyntaxError) as exc:
        raise _UsageError(f"bad polynomial literal: {exc}") from exc
    if f.degree != 6:
        raise _UsageError("polynomial must have degree 6")
    return curvecheck.SexticModel(field=f.field, f=f)


def _curve_payload(model, args, with_points=True, with_wall=True):
    out = {"poly": format_poly_literal(model.f),
           "in_U": curvecheck.is_in_U(model.f)}
    if not out["in_U"]:
        return out
    if with_points or with_wall:
        points = curvecheck.singular_points(
            model, max_ext=args.max_ext, seed=args.seed)
        if with_points:
            out["points"] = [p.to_json_dict() for p in points]
        if with_wall:
            wall = curvecheck.wall_invariant(
                model, max_ext=args.max_ext, seed=args.seed)
            out["wall"] = wall.to_json_dict()
    return out


def _cmd_curve(args, stdout, verb):
    model = _load_model(args)
    if verb == "ns":
        if not curvecheck.is_in_U(model.f):
            raise _UsageError("polynomial is outside the admissible open set")
        lat = curvecheck.ns_gram_model(model, max_ext=args.max_ext)
        _emit(_canonical_json(lat.to_json_dict()), args, stdout)
        return 0
    if verb == "check":
        results = _curve_payload(model, args)
    elif verb == "sing":
        results = _curve_payload(model, args, with_wall=False)
    else:
        results = _curve_payload(model, args, with_points=False)
    payload = _wrap(args, results, seed=args.seed)
    _emit(_canonical_json(payload), args, stdout)
    return 0


def _cmd_random(args, stdout):
    field = _parse_field(args.field)
    results = []
    for i in range(args.count):
        model = curvecheck.random_in_U(field, args.seed + i)
        entry = {"poly": format_poly_literal(model.f), "seed": args.seed + i,
                 "in_U": True}
        if args.check:
            points = curvecheck.singular_points(
                model, max_ext=args.max_ext, seed=args.seed + i)
            wall = curvecheck.wall_invariant(
                model, max_ext=args.max_ext, seed=args.seed + i)
            entry["n_points"] = len(points)
            entry["all_A4"] = all(p.is_A4 for p in points)
            entry["wall_product"] = wall.product
        results.append(entry)
    payload = _wrap(args, results, seed=args.seed)
    _emit(_canonical_json(payload), args, stdout)
    return 0


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

def run(argv, stdout=None, stderr=None):
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.command_echo = list(argv)
        started = time.monotonic()
        if args.domain == "lattice":
            if args.verb == "table1":
                code = _cmd_table1(args, stdout)
            elif args.verb == "classify":
                code = _cmd_classify(args, stdout)
            else:
                code = _cmd_verify(args, stdout, stderr)
        else:
            if args.verb == "random":
                code = _cmd_random(args, stdout)
            else:
                code = _cmd_curve(args, stdout, args.verb)
        stderr.write(f"# elapsed {time.monotonic() - started:.2f}s\n")
        return code
    except _UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except SplittingFieldError as exc:
        stderr.write(f"splitting field too large: {exc}\n")
        return 1
    except (ValueError, RuntimeError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
