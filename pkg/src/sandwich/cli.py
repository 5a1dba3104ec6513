"""Command-line front end: inspect one case, classify everything, audit the table."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from .carving import NotExtremityError
from .classify import (ClassificationReport, EntryResult, classify_all, render_structure,
                       run_case, verify_paper)
from .exactvec import HalfVec, format_linear
from .rootsys import SimpleType, UnsupportedType

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NOT_EXTREMITY = 3

MAX_RANK_ENV = "SANDWICH_MAX_RANK"


@dataclass
class CliConfig:
    command: str
    type: Optional[str] = None
    rank: Optional[int] = None
    node: Optional[int] = None
    max_rank: int = 8
    format: str = "text"
    output: Optional[str] = None


class UsageError(Exception):
    pass


def _x2(v: HalfVec) -> List[int]:
    return list(v.coords_x2)


def report_to_dict(rep: ClassificationReport, detail: bool = False) -> Dict[str, Any]:
    c, an = rep.carving, rep.analysis
    d: Dict[str, Any] = {
        "family": rep.type.family,
        "rank": rep.type.rank,
        "node": rep.node,
        "alias_of": rep.alias_of,
        "g_type": str(c.g_type),
        "h_star_x2": _x2(c.h_star),
        "h_star_coeffs": list(c.h_star_coeffs),
        "r_minus_count": len(c.Rminus),
        "sandwich": an.sandwich,
        "property3": rep.property3,
        "hat_class_sizes": [len(h.members) for h in rep.hat_classes],
        "closed": an.closed,
        "ideal": an.ideal,
        "fact_4_2": rep.fact_4_2,
        "highest_root_mark": rep.mark,
        "grading_agrees": rep.grading_agrees,
        "descriptor": None,
        "verdict": rep.verdict,
        "discrepancies": [{"field": x.field, "computed": x.computed, "claimed": x.claimed}
                          for x in rep.discrepancies],
        "notes": list(rep.notes),
    }
    if an.descriptor is not None:
        d["descriptor"] = {
            "abelian_dim": an.descriptor.abelian_dim,
            "heisenbergs": [{"zeta_x2": _x2(z), "multiplicity": m}
                            for z, m in an.descriptor.heisenbergs],
        }
    if an.witness is not None:
        d["witness"] = [_x2(v) for v in an.witness]
    if rep.paper is not None:
        e, n = rep.paper, rep.type.rank
        a, ms = e.claimed_structure(n)
        d["paper_entry"] = {
            "label": e.label,
            "claimed_g": str(e.claimed_g(n)),
            "claimed_h_star_x2": list(e.claimed_hstar_x2(n)),
            "claimed_h_star_coeffs": list(e.claimed_hstar_coeffs(n)),
            "claimed_r_minus_count": e.claimed_r_minus(n),
            "claimed_structure": {"abelian_dim": a, "multiplicities": list(ms)},
            "claimed_relations": e.claimed_relations,
            "printed_h_star": e.printed_hstar,
            "printed_structure": e.printed_structure,
        }
    if detail:
        rs = c.parent
        d["simple_roots_x2"] = [_x2(v) for v in rs.simple_roots]
        d["coweight_basis_x2"] = [_x2(v) for v in rs.coweight_basis]
        d["cartan"] = rs.cartan.to_lists()
        d["r_minus_x2"] = [_x2(v) for v in c.Rminus]
        d["hat_classes"] = [{"values": [str(x) for x in h.representative_functional],
                             "members_x2": [_x2(v) for v in h.members]}
                            for h in rep.hat_classes]
        d["pair_sets"] = [{"zeta_x2": _x2(z), "pairs_x2": [[_x2(a), _x2(b)] for a, b in ps]}
                          for z, ps in an.pair_sets.items()]
    return d


def entry_results_to_dict(results: List[EntryResult]) -> Dict[str, Any]:
    entries = [{"label": r.entry.label, "verdict": r.verdict,
                "ranks": [rep.type.rank for rep in r.reports]} for r in results]
    bad = [r.entry.label for r in results if r.verdict != "match"]
    return {
        "cases": [report_to_dict(rep) for r in results for rep in r.reports],
        "entries": entries,
        "summary": {"entries": len(results), "matches": len(results) - len(bad),
                    "discrepancies": bad},
    }


# ---------------------------------------------------------------- text

def _root(x2: List[int]) -> str:
    return format_linear(HalfVec(tuple(x2)).coords, "eps")


def _cow(x2: List[int]) -> str:
    return format_linear(HalfVec(tuple(x2)).coords, "e")


def _structure_of(d: Dict[str, Any]) -> str:
    desc = d["descriptor"]
    if desc is None:
        return render_structure(None)
    ms = sorted((h["multiplicity"] for h in desc["heisenbergs"]), reverse=True)
    return render_structure((desc["abelian_dim"], tuple(ms)))


def _coeff_form(coeffs: List[int]) -> str:
    return format_linear(coeffs, "h")


def render_case_text(d: Dict[str, Any]) -> str:
    lines = [f"case {d['family']}{d['rank']} node {d['node']}"
             + (f" (alias of node {d['alias_of']})" if d["alias_of"] else "")]
    if "simple_roots_x2" in d:
        for i, v in enumerate(d["simple_roots_x2"], 1):
            lines.append(f"  a{i} = {_root(v)}")
        for i, v in enumerate(d["coweight_basis_x2"], 1):
            lines.append(f"  h{i} = {_cow(v)}")
        lines.append("  Cartan matrix a_i(h_j):")
        for row in d["cartan"]:
            lines.append("    " + " ".join(f"{x:3d}" for x in row))
    lines.append(f"  retained type: {d['g_type']}")
    lines.append(f"  h* = {_coeff_form(d['h_star_coeffs'])} = {_cow(d['h_star_x2'])}")
    lines.append(f"  |R-| = {d['r_minus_count']}")
    if "r_minus_x2" in d:
        for v in d["r_minus_x2"]:
            lines.append(f"    {_root(v)}")
        lines.append(f"  hat classes ({len(d['hat_classes'])}):")
        for h in d["hat_classes"]:
            members = ", ".join(_root(v) for v in h["members_x2"])
            lines.append(f"    ({', '.join(h['values'])}): {members}")
        lines.append("  additive relations:" + ("" if d["pair_sets"] else " none"))
        for p in d["pair_sets"]:
            for a, b in p["pairs_x2"]:
                lines.append(f"    ({_root(a)}) + ({_root(b)}) = {_root(p['zeta_x2'])}")
    checks = (f"closed={d['closed']} ideal={d['ideal']} fact_4_2={d['fact_4_2']} "
              f"mark={d['highest_root_mark']} grading_agrees={d['grading_agrees']}")
    lines.append(f"  checks: {checks}")
    sizes = d["hat_class_sizes"]
    hats = (f"all {len(sizes)} hat classes are singletons" if d["property3"]
            else f"hat class sizes {sizes}")
    lines.append(f"  sandwich: {d['sandwich']}  property3: {d['property3']} ({hats})")
    if "witness" in d:
        a, b, g = (_root(v) for v in d["witness"])
        lines.append(f"  witness: (({a}) + ({b})) + ({g}) is a root")
    lines.append(f"  nilradical structure: {_structure_of(d)}")
    if d["descriptor"]:
        for h in d["descriptor"]["heisenbergs"]:
            lines.append(f"    zeta = {_root(h['zeta_x2'])}: m = {h['multiplicity']}")
    if "paper_entry" in d:
        p = d["paper_entry"]
        lines.append(f"  paper entry {p['label']}:")
        lines.append(f"    printed h*: {p['printed_h_star']}")
        lines.append(f"    printed structure: {p['printed_structure']}")
    lines.append(f"  verdict: {d['verdict']}")
    for x in d["discrepancies"]:
        lines.append(f"    {x['field']}: computed {x['computed']} | claimed {x['claimed']}")
    for n in d["notes"]:
        lines.append(f"    note: {n}")
    return "\n".join(lines)


def render_summary_line(d: Dict[str, Any]) -> str:
    label = d["paper_entry"]["label"] if "paper_entry" in d else "-"
    alias = f" alias-of-{d['alias_of']}" if d["alias_of"] else ""
    return (f"{d['family']}{d['rank']:<2} node {d['node']:<2} [{label:>3}] g={d['g_type']:<3} "
            f"h*={_cow(d['h_star_x2'])}  |R-|={d['r_minus_count']}  "
            f"structure: {_structure_of(d)}  -> {d['verdict']}{alias}")


def render_cases_text(cases: List[Dict[str, Any]]) -> str:
    out = []
    for d in cases:
        out.append(render_summary_line(d))
        for x in d["discrepancies"]:
            out.append(f"    {x['field']}: computed {x['computed']} | claimed {x['claimed']}")
        if "paper_entry" in d and d["discrepancies"]:
            out.append(f"    printed structure: {d['paper_entry']['printed_structure']}")
    return "\n".join(out)


def render_verify_text(doc: Dict[str, Any]) -> str:
    out = [render_cases_text(doc["cases"]), ""]
    for e in doc["entries"]:
        out.append(f"entry {e['label']:>3}: {e['verdict']} (ranks {e['ranks']})")
    s = doc["summary"]
    out.append(f"{s['matches']} of {s['entries']} entries match; "
               f"discrepancies: {', '.join(s['discrepancies']) or 'none'}")
    return "\n".join(out)


# ---------------------------------------------------------------- driver

def build_parser() -> argparse.ArgumentParser:
    env_rank = os.environ.get(MAX_RANK_ENV)
    default_rank = int(env_rank) if env_rank and env_rank.isdigit() else 8
    p = argparse.ArgumentParser(prog="sandwich",
                                description="Very special sandwich algebras from extremity deletions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_rank: bool):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output", "-o", default=None, help="write here instead of stdout")
        if with_rank:
            sp.add_argument("--max-rank", type=int, default=default_rank)

    ins = sub.add_parser("inspect", help="analyse one (type, rank, node) case")
    ins.add_argument("type", help="family letter, optionally with rank, e.g. E or E8")
    ins.add_argument("rank", type=int)
    ins.add_argument("node", type=int)
    common(ins, False)
    common(sub.add_parser("classify", help="run every extremity up to a rank bound"), True)
    common(sub.add_parser("verify-paper", help="compare the embedded table with computation"), True)
    return p


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(command=ns.command, format=ns.format, output=ns.output)
    if ns.command == "inspect":
        cfg.type, cfg.rank, cfg.node = ns.type, ns.rank, ns.node
    else:
        cfg.max_rank = ns.max_rank
        if cfg.max_rank < 4:
            raise UsageError("--max-rank must be at least 4")
    return cfg


def execute(cfg: CliConfig) -> str:
    if cfg.command == "inspect":
        try:
            t = SimpleType.parse(cfg.type, cfg.rank)
        except UnsupportedType as exc:
            raise UsageError(str(exc))
        if not 1 <= cfg.node <= t.rank:
            raise UsageError(f"node {cfg.node} out of range 1..{t.rank} for {t}")
        d = report_to_dict(run_case(t, cfg.node), detail=True)
        return _dump(d) if cfg.format == "json" else render_case_text(d)
    if cfg.command == "classify":
        doc = {"cases": [report_to_dict(r) for r in classify_all(cfg.max_rank)]}
        return _dump(doc) if cfg.format == "json" else render_cases_text(doc["cases"])
    doc = entry_results_to_dict(verify_paper(cfg.max_rank))
    return _dump(doc) if cfg.format == "json" else render_verify_text(doc)


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        text = execute(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotExtremityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_EXTREMITY
    try:
        if cfg.output:
            with open(cfg.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            sys.stdout.write(text + "\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
