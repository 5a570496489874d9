"""Command line interface: ``sumsets {sumset,construct,range,atlas,verify}``."""

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__, atlas
from .constructions import (
    InvalidSpecError,
    ProgressionOfIntervalsSpec,
    TwoIntervalSpec,
    build_progression_of_intervals,
    build_two_interval,
    family_members,
    predicted_size_progression,
    predicted_size_two_interval,
)
from .core import CapacityError, IntegerSet, hfold_sumset, sumset_size
from .oracle import sumset_by_definition
from .rangeset import (
    CheckpointMismatchError,
    InconsistencyError,
    SearchConfig,
    closed_form_range,
    completeness_bound,
    merge,
    sample_range,
    search_range,
    verify_structure,
)

log = logging.getLogger("sumsets")

DEFAULT_BOUND = 64


class CliError(Exception):
    pass


def cache_dir(args):
    d = getattr(args, "cache_dir", None) or os.environ.get("SUMSETS_CACHE_DIR")
    if d is None:
        d = Path.home() / ".cache" / "sumsets"
    d = Path(d)
    d.mkdir(parents=True, exist_ok=True)
    return d


def _cached_search(config, args):
    """Search with an on-disk result cache keyed by (h, k, N, code version)."""
    if getattr(args, "no_cache", False):
        return search_range(config)
    d = cache_dir(args)
    stem = f"h{config.h}-k{config.k}-N{config.N}"
    path = d / f"result-{stem}.json"
    ckpt = d / f"checkpoint-{stem}.json"
    if path.exists():
        doc = json.loads(path.read_text())
        if doc.get("code_version") == __version__:
            res = atlas.result_from_entry(doc["entry"]).validate()
            log.info("cache hit %s", path)
            return res
        print(f"warning: cached {path.name} is from version {doc.get('code_version')}, "
              f"not {__version__}; recomputing", file=sys.stderr)
    if ckpt.exists() and not getattr(args, "resume", False):
        ckpt.unlink()
    res = search_range(config, checkpoint=ckpt)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps({"code_version": __version__, "entry": atlas.entry_from_result(res)},
                              sort_keys=True))
    os.replace(tmp, path)
    ckpt.unlink(missing_ok=True)
    return res


def compute_range(h, k, args):
    """Closed form, search and family members for one (h, k), merged and checked."""
    closed = closed_form_range(h, k)
    if args.complete:
        N = completeness_bound(h, k)
    elif args.bound is not None:
        N = args.bound
    elif closed is None and not args.sample:
        N = DEFAULT_BOUND
    else:
        N = None
    searched = None
    if args.sample:
        searched = sample_range(h, k, N if N is not None else DEFAULT_BOUND, args.sample, args.seed)
    elif N is not None:
        config = SearchConfig(h, k, max(N, k - 1), jobs=args.jobs,
                              progress_interval=args.progress)
        searched = _cached_search(config, args)
    members = family_members(h, k) if h >= 1 and k >= 1 else []
    result = merge(closed, searched, members)
    return result, verify_structure(result)


def _print_range(result, report, out=None):
    out = out or sys.stdout
    parts = [atlas.format_sizes(result.sizes)]
    if report.missing:
        parts.append("missing: " + ", ".join(map(str, report.missing)))
    parts.append("complete" if result.complete else "verified members (lower bound set)")
    print("; ".join(parts), file=out)
    for c in report.checks:
        print(f"  check {c.name:<14} {c.status:<5} {c.detail}", file=out)
    for t, w in sorted(result.witnesses.items()):
        print(f"  {t:>8}  {w}", file=out)


def cmd_sumset(args):
    A = IntegerSet.parse(args.set)
    if args.h < 0:
        raise CliError("h must be nonnegative")
    base = A.translate(-A.min)
    value = hfold_sumset(base, args.h)
    shift = args.h * A.min
    intervals = " ".join(f"[{u + shift},{v + shift}]" for u, v in value.intervals)
    line = f"size {value.cardinality}; intervals {intervals}"
    if args.oracle:
        ref = sumset_by_definition(base, args.h)
        if ref.bits != value.bits:
            print(line)
            raise CliError("oracle disagrees with the bit-vector kernel")
        line = f"size {value.cardinality}; oracle agrees"
        if args.intervals:
            line += f"; intervals {intervals}"
    print(line)
    return 0


def _parse_params(tokens):
    params = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep:
            raise CliError(f"expected key=value, got {tok!r}")
        try:
            params[key.strip()] = int(val)
        except ValueError:
            raise CliError(f"{key} must be an integer, got {val!r}") from None
    return params


def _take(params, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise CliError("missing parameter(s): " + ", ".join(missing))
    return [params.pop(n) for n in names]


def cmd_construct(args):
    params = _parse_params(args.params)
    (h,) = _take(params, "h")
    if args.family == "progression":
        if "ell" in params:
            params["l"] = params.pop("ell")
        a, ell, b = _take(params, "a", "l", "b")
        spec = ProgressionOfIntervalsSpec(a, ell, b)
        A = build_progression_of_intervals(spec)
        predicted = predicted_size_progression(spec, h)
    else:
        a, b, c = _take(params, "a", "b", "c")
        spec = TwoIntervalSpec(a, b, c)
        A = build_two_interval(spec)
        predicted = predicted_size_two_interval(spec, h)
    if params:
        raise CliError("unknown parameter(s): " + ", ".join(params))
    actual = sumset_size(A, h)
    ok = actual == predicted
    print(f"witness {A}")
    print(f"k {len(A)}; h {h}")
    print(f"predicted size {predicted}; kernel size {actual}; {'verified' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def cmd_range(args):
    if args.h < 1 or args.k < 1:
        raise CliError("h and k must be positive")
    result, report = compute_range(args.h, args.k, args)
    _print_range(result, report)
    if args.out:
        atlas.write_atlas(args.out, [atlas.entry_from_result(result, report)])
    return 0 if report.ok else 1


def _parse_span(text):
    lo, sep, hi = text.partition("-")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise CliError(f"bad range {text!r}; use N or LO-HI") from None
    if hi < lo:
        raise CliError("empty range")
    return range(lo, hi + 1)


def cmd_atlas(args):
    hs, ks = _parse_span(args.h), _parse_span(args.k)
    entries, failed = [], 0
    for h in hs:
        for k in ks:
            try:
                result, report = compute_range(h, k, args)
            except (CliError, ValueError, OverflowError, InconsistencyError) as exc:
                print(f"h={h} k={k}: error: {exc}", file=sys.stderr)
                failed += 1
                continue
            if not report.ok:
                failed += 1
            entries.append(atlas.entry_from_result(result, report))
    if args.out:
        atlas.write_atlas(args.out, entries)
    if args.format == "json":
        sys.stdout.write(atlas.dumps(entries))
    elif args.format == "csv":
        sys.stdout.write(atlas.to_csv(entries))
    else:
        sys.stdout.write(atlas.to_text(entries))
    return 1 if failed else 0


def cmd_verify(args):
    from .verify import run_checks

    results = run_checks(quick=not args.full)
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    bad = sum(not ok for _, ok, _ in results)
    print(f"{len(results) - bad}/{len(results)} checks passed")
    return 1 if bad else 0


def _add_search_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--bound", type=int, help="search sets inside [0, N]")
    g.add_argument("--complete", action="store_true",
                   help="search up to the proven completeness bound")
    p.add_argument("--sample", type=int, default=0, metavar="COUNT",
                   help="random sets instead of exhaustive search")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--progress", type=int, default=0, metavar="SETS",
                   help="log progress every SETS sets examined")
    p.add_argument("--resume", action="store_true", help="continue a checkpointed search")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--cache-dir")
    p.add_argument("--out", help="write an atlas file")


def build_parser():
    parser = argparse.ArgumentParser(prog="sumsets", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="JSON file of option defaults ($SUMSETS_CONFIG)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sumset", help="compute hA for one set")
    p.add_argument("set", help="set literal such as {0,1,3}")
    p.add_argument("h", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check with the composition oracle")
    p.add_argument("--intervals", action="store_true", help="also list intervals with --oracle")
    p.set_defaults(func=cmd_sumset)

    p = sub.add_parser("construct", help="build a family member and verify its size")
    p.add_argument("family", choices=["progression", "two-interval"])
    p.add_argument("params", nargs="+", help="key=value: a l b h | a b c h")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("range", help="compute R(h, k)")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    _add_search_flags(p)
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("atlas", help="R(h, k) over a grid")
    p.add_argument("--h", required=True, help="N or LO-HI")
    p.add_argument("--k", required=True, help="N or LO-HI")
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")
    _add_search_flags(p)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def _load_config(parser, argv):
    pre, _ = parser.parse_known_args(argv)
    path = pre.config or os.environ.get("SUMSETS_CONFIG")
    if not path:
        return
    cfg = json.loads(Path(path).read_text())
    for action in parser._subparsers._group_actions:
        for sp in action.choices.values():
            known = {a.dest for a in sp._actions}
            sp.set_defaults(**{k.replace("-", "_"): v for k, v in cfg.items()
                               if k.replace("-", "_") in known})


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    _load_config(parser, argv)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (CliError, InvalidSpecError, CapacityError, OverflowError, InconsistencyError,
            CheckpointMismatchError, atlas.AtlasFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
