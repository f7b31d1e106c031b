"""Command line entry point: ``oneone {check,hfk,braid,search,render}``.

Exit codes: 0 on success, 1 on invalid input, 2 when an internal cross-check fails.
"""
import argparse
import json
import sys

from . import braid as br
from . import diagram as dg
from . import floer
from .errors import InternalInconsistency, OneOneError
from .lattice import ProjectiveSlope
from .render import render_svg


def _emit(payload, fmt, text_lines=None):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines if text_lines is not None else _text(payload):
            print(line)


def _text(payload):
    for k, v in payload.items():
        yield f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}"


def _load(path):
    try:
        return dg.load(path)
    except OSError as e:
        raise OneOneError(f"cannot read {path}: {e.strerror}") from None


def _reduced(D):
    if dg.is_reduced(D):
        return D, True
    print("note: diagram was not reduced; reducing first", file=sys.stderr)
    return dg.reduce(D), False


def cmd_check(args):
    D, was = _reduced(_load(args.path))
    classes = [{"class_id": c, "size": len(dg.class_points(D, c)), "graphic_sign": dg.graphic_sign(D, c)}
               for c in sorted(dg._classes(D))]
    coh = dg.coherence(D)
    if dg.coherence_from_graphic(D) != coh:
        raise InternalInconsistency("bigon and graphic coherence verdicts disagree")
    out = {"reduced": was, "coherence": coh, "lspace": floer.lspace_verdict(D), "classes": classes}
    lines = [f"reduced: {str(was).lower()}", f"coherence: {coh}", f"lspace: {out['lspace']}"]
    lines += [f"class {c['class_id']}: size {c['size']}, graphic {c['graphic_sign']}" for c in classes]
    _emit(out, args.format, lines)


def cmd_hfk(args):
    D, _ = _reduced(_load(args.path))
    classes = []
    for c in sorted(dg._classes(D)):
        C = floer.chain_summand(D, c)
        classes.append({
            "class_id": c,
            "generators": C.size,
            "v_edges": [list(e) for e in C.v_edges],
            "h_edges": [list(e) for e in C.h_edges],
            "alexander": [C.rel_alexander[i] for i in range(C.size)],
        })
    out = {"classes": classes}
    lines = [f"class {c['class_id']}: {c['generators']} generators, A = {c['alexander']}, "
             f"v = {c['v_edges']}, h = {c['h_edges']}" for c in classes]
    if args.alexander:
        P = floer.alexander_polynomial(D)
        out["alexander_polynomial"] = P.to_json()
        out["alexander_string"] = str(P)
        lines = [str(P)]
    _emit(out, args.format, lines)


def _interval_json(I):
    return [str(I.start), str(I.end)]


def cmd_braid(args):
    K = br.braid_validate(args.omega, args.b, args.m)
    if args.action == "interval":
        I = br.slope_interval(K)
        kind = str(br.classify_type(K))
        g = br.geodesic(K)
        out = {"braid": str(K), "interval": _interval_json(I), "class": kind,
               "t": str(g.t), "slope": str(g.slope)}
        _emit(out, args.format, [json.dumps(_interval_json(I)) + f", {json.dumps(kind)}"])
        return
    if args.filling is None:
        raise OneOneError(f"braid {args.action} needs --filling")
    f = ProjectiveSlope.parse(args.filling)
    if args.action == "classify":
        v = br.classify_inclusion(K, f)
        D = br.inclusion_diagram(K, f)
        verdict = floer.lspace_verdict(D)
        want_pos = verdict in (floer.POSITIVE_LSPACE, floer.BOTH)
        want_neg = verdict in (floer.NEGATIVE_LSPACE, floer.BOTH)
        if (v.positive, v.negative, v.simple) != (want_pos, want_neg, verdict == floer.BOTH):
            raise InternalInconsistency(f"interval verdict {v} but diagram says {verdict}")
        out = {"braid": str(K), "filling": str(f), "positive": v.positive, "negative": v.negative,
               "simple": v.simple, "diagram_verdict": verdict}
        _emit(out, args.format, [f"{k}={json.dumps(out[k])}" for k in
                                 ("positive", "negative", "simple", "diagram_verdict")])
        return
    D = br.inclusion_diagram(K, f)
    if args.output:
        dg.save(D, args.output)
        print(f"wrote {args.output}: {D.size} vertices, {len(dg.intersections(D))} intersections",
              file=sys.stderr)
    else:
        sys.stdout.write(D.to_json())


def cmd_search(args):
    if args.max_winding < 2:
        raise OneOneError("--max-winding must be at least 2")
    three, two = br.berge_search(args.max_winding)
    _, rejected = br.all_braids(args.max_winding)
    rows = sorted(three + two, key=lambda r: (r[0].omega, r[0].b, r[0].m))
    docs = [{"omega": K.omega, "b": K.b, "m": K.m, "interval": _interval_json(br.slope_interval(K)),
             "fillings": [str(s) for s in f]} for K, f in rows]
    if args.format == "json":
        print(json.dumps({"max_winding": args.max_winding, "rows": docs,
                          "triple": sum(len(d["fillings"]) >= 3 for d in docs),
                          "rejected_links": rejected}, sort_keys=True))
    else:
        for d in docs:
            print(json.dumps(d))
        print(f"{len(docs)} rows, {len(three)} with three fillings, {rejected} link closures rejected",
              file=sys.stderr)


def cmd_render(args):
    svg = render_svg(_load(args.path))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)


def build_parser():
    ap = argparse.ArgumentParser(prog="oneone", description="(1,1) diagrams and 1-bridge braids")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="coherence and L-space verdict of a diagram file")
    p.add_argument("path")
    fmt(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hfk", help="per-class chain data")
    p.add_argument("path")
    p.add_argument("--alexander", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_hfk)

    p = sub.add_parser("braid", help="slope interval, inclusion verdicts and diagrams")
    p.add_argument("action", choices=("interval", "classify", "diagram"))
    p.add_argument("omega", type=int)
    p.add_argument("b", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--filling")
    p.add_argument("-o", "--output")
    fmt(p)
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("search", help="strict braids with several solid torus fillings")
    p.add_argument("--max-winding", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="SVG of a diagram and its lifted strips")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors; the contract reserves 2 for internal failures
        return 0 if e.code == 0 else 1
    try:
        args.func(args)
    except InternalInconsistency as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 2
    except (OneOneError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
