"""Command-line entry point: ``qzv compute|verify|probe|census``."""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .graph_series import census, graph_series
from .graphs import Graph, hilbert_series, parse_graph
from .modular import (ct, j1, j_tilde, p_function, q_block, qm_generators, recognize,
                      weierstrass, weierstrass_prime)
from .qmzv import (RootSystem, symmetrized_sum, type_A, zeta_g, zeta_g_s, zq_standard, zq_star,
                   zq_strict)
from .series import QSeries
from .vertexchar import PROBES, arakawa_char, conjecture_probe, fm_recognize, sch_u
from .verify import SUITES


@dataclass(frozen=True)
class RunConfig:
    order: int = 40
    margin: int = 10
    format: str = "json"
    threads: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("--order must be >= 1")
        if self.margin < 0:
            raise ValueError("--margin must be >= 0")
        if self.threads < 1:
            raise ValueError("--threads must be >= 1")


class UsageError(Exception):
    pass


def int_list(text: str) -> list:
    """Comma-separated integers; errors name the offending position."""
    out = []
    pos = 0
    for tok in text.split(","):
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"expected an integer at position {pos} of {text!r}, got {tok!r}") from None
        pos += len(tok) + 1
    return out


# ---------------------------------------------------------------- output

def emit(obj, cfg: RunConfig, out=None):
    out = out or sys.stdout
    if cfg.format == "json":
        out.write(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(plain(obj) + "\n")


def plain(obj) -> str:
    if isinstance(obj, dict) and "coeffs" in obj and "offset" in obj:
        s = QSeries.from_json_obj(obj)
        rows = [(str(e), str(c)) for e, c in s.terms()]
        w = max((len(e) for e, _ in rows), default=1)
        lines = [f"q^{e.ljust(w)}  {c}" for e, c in rows]
        lines.append(f"O(q^{s.prec})")
        return "\n".join(lines)
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)):
                sub = plain(v).replace("\n", "\n  ")
                lines.append(f"{k}:\n  {sub}")
            else:
                lines.append(f"{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return ", ".join(str(x) for x in obj)
        return "\n".join(plain(x) for x in obj)
    return str(obj)


# ---------------------------------------------------------------- compute

def load_graph(text: str) -> Graph:
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    return parse_graph(text)


def roots_for(typ: str, rank: int) -> RootSystem:
    if typ.upper() != "A":
        raise UsageError(f"only type A root systems are supported, got {typ!r}")
    return type_A(rank)


def compute_graph_series(a, cfg):
    g = load_graph(a.graph)
    framing = int_list(a.framing) if a.framing else None
    s = graph_series(g, cfg.order, framing)
    return {"graph": g.to_json_obj(), "hilbert": str(hilbert_series(g)) if g.n <= 32 else None,
            "series": s.to_json_obj()}


def compute_qmzv(a, cfg):
    fn = {"star": zq_star, "strict": zq_strict, "standard": zq_standard}[a.model]
    comp = int_list(a.a)
    return {"model": a.model, "a": comp, "series": fn(comp, cfg.order).to_json_obj()}


def compute_lie(a, cfg):
    roots = roots_for(a.type, a.rank)
    ks = int_list(a.k)
    if a.s is not None:
        if len(set(ks)) != 1:
            raise UsageError("--s needs a single common root exponent in --k")
        s = zeta_g_s(roots, a.s, ks[0], cfg.order)
    else:
        if len(ks) == 1:
            ks = ks * len(roots.roots)
        s = zeta_g(roots, ks, cfg.order)
    return {"type": f"{a.type.upper()}{a.rank}", "k": ks, "s": a.s, "series": s.to_json_obj()}


def factor(name: str, N: int):
    """``wp``, ``wp'``, ``j1``, ``P<k>``, ``block<k>``, ``Jt<l>``."""
    if name == "wp":
        return weierstrass(N)
    if name in ("wp'", "wpp"):
        return weierstrass_prime(N)
    if name == "j1":
        return j1(N)
    for prefix, fn in (("P", p_function), ("block", q_block), ("Jt", j_tilde)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return fn(int(name[len(prefix):]), N)
    raise UsageError(f"unknown factor {name!r} (use wp, wp', j1, P<k>, block<k>, Jt<l>)")


def compute_ct(a, cfg):
    names = [x.strip() for x in a.factors.split(",") if x.strip()]
    if not names:
        raise UsageError("--factors is empty")
    s = ct([factor(n, cfg.order) for n in names], cfg.order)
    return {"factors": names, "series": s.to_json_obj()}


def load_target(text: str, N: int) -> QSeries:
    """A QSeries JSON file or ``builtin:zq:<k>``, ``builtin:lie:<rank>:<s>:<k>``,
    ``builtin:sym:<rank>:<k1>,<k2>,..``."""
    if not text.startswith("builtin:"):
        with open(text, encoding="utf-8") as fh:
            obj = json.load(fh)
        return QSeries.from_json_obj(obj.get("series", obj))
    parts = text.split(":")[1:]
    try:
        if parts[0] == "zq":
            return zq_star((int(parts[1]),), N)
        if parts[0] == "lie":
            return zeta_g_s(type_A(int(parts[1])), int(parts[2]), int(parts[3]), N)
        if parts[0] == "sym":
            return symmetrized_sum(type_A(int(parts[1])), int_list(parts[2]), N)
    except (IndexError, ValueError) as exc:
        raise UsageError(f"bad builtin target {text!r}: {exc}") from None
    raise UsageError(f"unknown builtin target {text!r}")


def compute_recognize(a, cfg):
    target = load_target(a.target, cfg.order)
    rec = recognize(target, qm_generators(a.level, cfg.order), a.wmin, a.wmax, cfg.margin)
    return rec.to_json_obj()


def compute_char(a, cfg):
    if a.kind == "arakawa":
        roots_for(a.type, a.rank)
        res = arakawa_char(a.rank, a.k, cfg.order)
    else:
        res = sch_u(a.m, cfg.order)
        if a.recognize:
            res.recognition = fm_recognize(a.m, cfg.order, cfg.margin)
    return res.to_json_obj()


OBJECTS = {
    "graph-series": compute_graph_series,
    "qmzv": compute_qmzv,
    "lie-qzeta": compute_lie,
    "ct": compute_ct,
    "recognize": compute_recognize,
    "char": compute_char,
}


def add_object_args(sub, name):
    if name == "graph-series":
        sub.add_argument("--graph", required=True, help="pt, cycle:n, path:n, star:n, gamma:k, T:k, Z:a,b, A+B, JSON or a file")
        sub.add_argument("--framing", help="comma-separated positive integers")
    elif name == "qmzv":
        sub.add_argument("--model", choices=("star", "strict", "standard"), default="star")
        sub.add_argument("--a", required=True, help="composition, e.g. 2,1,1")
    elif name == "lie-qzeta":
        sub.add_argument("--type", default="A")
        sub.add_argument("--rank", type=int, required=True)
        sub.add_argument("--k", required=True, help="one exponent per positive root, or one for all")
        sub.add_argument("--s", type=int)
    elif name == "ct":
        sub.add_argument("--factors", required=True, help="e.g. wp,wp")
    elif name == "recognize":
        sub.add_argument("--target", required=True)
        sub.add_argument("--level", type=int, default=1)
        sub.add_argument("--wmin", type=int, default=0)
        sub.add_argument("--wmax", type=int, default=12)
    elif name == "char":
        sub.add_argument("kind", choices=("arakawa", "sch-u"))
        sub.add_argument("--type", default="A")
        sub.add_argument("--rank", type=int, default=1)
        sub.add_argument("--k", type=int, default=4)
        sub.add_argument("--m", type=int, default=3)
        sub.add_argument("--recognize", action="store_true")


# ---------------------------------------------------------------- other commands

def cmd_verify(a, cfg) -> int:
    names = list(SUITES) if a.suite == "all" else [a.suite]
    report = {"suites": {}, "passed": True}
    for name in names:
        t = time.perf_counter()
        if name == "section2":
            checks = SUITES[name](cfg.order if a.order_given else 25, a.kmax)
        elif name == "section3":
            checks = SUITES[name](cfg.order)
        else:
            checks = SUITES[name](min(cfg.order, 20) if a.order_given else 20)
        ok = all(c.passed for c in checks)
        report["suites"][name] = {"passed": ok, "checks": [c.to_json_obj() for c in checks],
                                  "seconds": round(time.perf_counter() - t, 2) if a.timing else None}
        report["passed"] = report["passed"] and ok
    emit(report, cfg)
    return 0 if report["passed"] else 1


def cmd_probe(a, cfg) -> int:
    params = {"rank": a.rank}
    if a.k is not None:
        params["k"] = a.k
    if a.kvals is not None:
        params["kvals"] = tuple(int_list(a.kvals))
    emit(conjecture_probe(a.name, params, cfg.order, cfg.margin), cfg)
    return 0


def cmd_census(a, cfg) -> int:
    counts = census(a.nmax, cfg.order, cfg.threads)
    emit({"order": cfg.order, "counts": counts}, cfg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=argparse.SUPPRESS)
    common.add_argument("--margin", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "plain"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="qzv", parents=[common],
                                description="Exact q-series: graph series, q-zeta values, constant terms, characters.")
    sub = p.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", parents=[common], help="compute one object")
    objs = comp.add_subparsers(dest="object", required=True)
    for name in OBJECTS:
        add_object_args(objs.add_parser(name, parents=[common]), name)
        add_object_args(sub.add_parser(name, parents=[common], help=f"alias of compute {name}"), name)

    v = sub.add_parser("verify", parents=[common], help="run identity suites")
    v.add_argument("suite", choices=tuple(SUITES) + ("all",))
    v.add_argument("--kmax", type=int, default=4)
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds (non-deterministic)")

    pr = sub.add_parser("probe", parents=[common], help="conjecture probe (never fails)")
    pr.add_argument("name", choices=PROBES)
    pr.add_argument("--rank", type=int, default=2)
    pr.add_argument("--k", type=int)
    pr.add_argument("--kvals")

    c = sub.add_parser("census", parents=[common], help="distinct graph series per vertex count")
    c.add_argument("--nmax", type=int, default=6)
    return p


def main(argv=None) -> int:
    p = build_parser()
    a = p.parse_args(argv)
    given = vars(a)
    a.order_given = "order" in given
    defaults = {"order": 40, "margin": 10, "format": "json", "threads": 1}
    if a.command == "census":
        defaults["order"] = 16
    try:
        cfg = RunConfig(**{k: given.get(k, v) for k, v in defaults.items()})
        if a.command == "verify":
            return cmd_verify(a, cfg)
        if a.command == "probe":
            return cmd_probe(a, cfg)
        if a.command == "census":
            return cmd_census(a, cfg)
        name = a.object if a.command == "compute" else a.command
        emit(OBJECTS[name](a, cfg), cfg)
        return 0
    except (UsageError, ValueError, KeyError, OSError, json.JSONDecodeError, ArithmeticError) as exc:
        print(f"qzv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
