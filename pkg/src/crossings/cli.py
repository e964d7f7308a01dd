"""Command line entry point: ``crossings <command> [graph source] [options]``.

Exit codes: 0 success, 2 usage error, 3 validation error, 4 capability
error (enumeration cap exceeded, bound undefined or inapplicable).

Environment: ``CROSSINGS_CAP`` overrides the default enumeration cap and
``CROSSINGS_THREADS`` the default worker count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction

import numpy as np

from . import __version__
from .census import census
from .coupling import (
    conditional_diff_variance,
    exact_size_bias_check,
    lemma_variance_bound,
    max_increment,
    sample_coupled_batch,
)
from .embedding import GENERATOR_ID, default_cap, exact_distribution, sample_crossings, write_samples
from .errors import CapabilityError, CrossingsError, ValidationError
from .graph import FAMILIES, FamilyId, family_graph, read_graph
from .moments import family_reference, kite_law, kite_limit_cdf, kolmogorov_bound, moments_from_census
from .stats import ecdf_gap, ecdf_table, empirical_report, standardize

SCHEMA_VERSION = 1
COMMANDS = ("census", "moments", "bound", "enumerate", "simulate", "coupling", "kite")


@dataclass
class RunConfig:
    command: str
    graph: str | None = None
    family: str | None = None
    size: int | None = None
    samples: int = 10_000
    seed: int = 0
    format: str = "json"
    out: str | None = None
    cap: int | None = None
    threads: int = 1
    check: str = "identity"
    reduce: str = "none"
    mode: str = "pmf"
    dump: str | None = None

    def graph_descriptor(self) -> str:
        return f"file:{self.graph}" if self.graph else f"{self.family}:{self.size}"

    def load(self):
        if self.graph:
            return read_graph(self.graph)
        return family_graph(FamilyId(self.family, self.size))

    def as_dict(self) -> dict:
        d = {k: v for k, v in self.__dict__.items() if k not in ("out", "threads", "dump")}
        return d


def rational(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator), "decimal": float(q)}


def _census_json(c) -> dict:
    return {k: str(v) for k, v in c.as_dict().items()}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossings", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    env_threads = int(os.environ.get("CROSSINGS_THREADS", 1))
    for name in COMMANDS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--graph", metavar="FILE", help="edge-list file")
        src.add_argument("--family", choices=FAMILIES)
        p.add_argument("--size", type=int)
        p.add_argument("--samples", type=int, default=10_000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--cap", type=int)
        p.add_argument("--threads", type=int, default=env_threads)
        if name == "coupling":
            p.add_argument("--check", choices=("identity", "bound", "variance"), default="identity")
        if name == "enumerate":
            p.add_argument("--reduce", choices=("none", "fix-first"), default="none")
        if name == "kite":
            p.add_argument("--mode", choices=("pmf", "limit"), default="pmf")
        if name == "simulate":
            p.add_argument("--dump", metavar="PATH", help="write raw counts, one per line")
    return parser


def parse_config(argv, parser=None) -> RunConfig:
    parser = parser or build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "kite":
        if ns.size is None:
            parser.error("kite needs --size")
        if ns.graph is not None or ns.family not in (None, "kite"):
            parser.error("kite takes only --size")
        ns.family = "kite"
    elif ns.graph is None and ns.family is None:
        parser.error("a graph source is required: --graph FILE or --family NAME --size K")
    if ns.family is not None and ns.size is None:
        parser.error("--family needs --size")
    if ns.graph is not None and ns.size is not None:
        parser.error("--size only applies to --family")
    if ns.samples < 1:
        parser.error("--samples must be >= 1")
    if ns.threads < 1:
        parser.error("--threads must be >= 1")
    return RunConfig(**{k: v for k, v in vars(ns).items()})


def _cmd_census(cfg, g):
    c = census(g)
    return {"census": _census_json(c)}, [("field", "value")] + [(k, v) for k, v in c.as_dict().items()]


def _moment_result(g):
    rep = moments_from_census(census(g))
    result = {
        "census": _census_json(rep.census),
        "mean": rational(rep.mean),
        "second_moment": rational(rep.second_moment),
        "variance": rational(rep.variance),
        "sigma": rep.sigma,
    }
    rows = [("quantity", "num", "den", "decimal")] + [
        (k, Fraction(v).numerator, Fraction(v).denominator, float(v))
        for k, v in (("mean", rep.mean), ("second_moment", rep.second_moment), ("variance", rep.variance))
    ] + [("sigma", "", "", rep.sigma)]
    return rep, result, rows


def _cmd_moments(cfg, g):
    _, result, rows = _moment_result(g)
    if cfg.family:
        ref = family_reference(FamilyId(cfg.family, cfg.size))
        result["family_reference"] = {"mean": rational(ref.mean), "variance": rational(ref.variance)}
    return result, rows


def _cmd_bound(cfg, g):
    rep, result, _ = _moment_result(g)
    value = kolmogorov_bound(rep.census, rep.sigma)
    result["kolmogorov_bound"] = value
    rows = [("quantity", "value"), ("kolmogorov_bound", value), ("sigma", rep.sigma)]
    if cfg.family:
        ref = family_reference(FamilyId(cfg.family, cfg.size))
        result["family_reference"] = {
            "dk_constant": ref.dk_constant,
            "dk_reference": ref.dk_reference,
            "guaranteed": ref.guaranteed,
            "note": ref.note,
        }
        rows.append(("dk_reference", ref.dk_reference))
    return result, rows


def _pmf_output(pmf):
    result = {"pmf": pmf.to_json(), "mean": rational(pmf.mean), "variance": rational(pmf.variance)}
    rows = [("k", "numerator", "denominator", "decimal")] + [
        (k, p.numerator, p.denominator, float(p)) for k, p in zip(pmf.support, pmf.probability)]
    return result, rows


def _cmd_enumerate(cfg, g):
    return _pmf_output(exact_distribution(g, cfg.reduce, cfg.cap))


def _cmd_simulate(cfg, g):
    rep = moments_from_census(census(g))
    counts = sample_crossings(g, cfg.samples, cfg.seed, threads=cfg.threads)
    if cfg.dump:
        write_samples(cfg.dump, counts)
    emp = empirical_report(counts, float(rep.mean), rep.sigma, cfg.seed, cfg.graph_descriptor())
    result = {"empirical": emp.as_dict(), "mean": rational(rep.mean), "variance": rational(rep.variance)}
    w = np.sort(standardize(counts, float(rep.mean), rep.sigma))
    rows = [("w", "ecdf", "phi")] + [tuple(r) for r in ecdf_table(w).tolist()]
    return result, rows


def _cmd_coupling(cfg, g):
    c = census(g)
    record = {"lhs": None, "rhs": None, "bound": None, "actual_variance": None,
              "max_abs_diff": None, "samples": None, "seed": None}
    if cfg.check == "identity":
        checks = {}
        for f in ("identity", "square", "indicator(0)"):
            lhs, rhs = exact_size_bias_check(g, f, cfg.cap)
            checks[f] = {"lhs": rational(lhs), "rhs": rational(rhs), "equal": lhs == rhs}
        record["lhs"] = checks["identity"]["lhs"]
        record["rhs"] = checks["identity"]["rhs"]
        record["checks"] = checks
    elif cfg.check == "bound":
        batch = sample_coupled_batch(g, cfg.samples, cfg.seed)
        diff = np.abs(batch.x_s - batch.x)
        record.update(max_abs_diff=int(diff.max()), samples=cfg.samples, seed=cfg.seed,
                      bound=max_increment(c),
                      violations=int((diff > max_increment(c)).sum() + (batch.x_s < 1).sum()))
    else:
        record.update(actual_variance=rational(conditional_diff_variance(g, cfg.cap)),
                      bound=rational(lemma_variance_bound(c)))
    rows = [("key", "value")] + [(k, json.dumps(v, sort_keys=True)) for k, v in record.items()]
    return {"coupling": record}, rows


def _cmd_kite(cfg, g):
    n = cfg.size
    if cfg.mode == "pmf":
        return _pmf_output(kite_law(n))
    counts = sample_crossings(g, cfg.samples, cfg.seed, threads=cfg.threads)
    y = np.sort(counts / n)
    sup = ecdf_gap(y, lambda v: 2 * v - v * v)
    rep = moments_from_census(census(g))
    emp = empirical_report(counts, float(rep.mean), rep.sigma, cfg.seed, cfg.graph_descriptor())
    result = {"limit_sup_distance": sup, "empirical": emp.as_dict()}
    grid = np.linspace(0.0, 1.0, 101)
    rows = [("x", "limit_cdf", "ecdf")] + [
        (float(x), kite_limit_cdf(float(x)), float(np.searchsorted(y, x, side="right") / len(y)))
        for x in grid]
    return result, rows


HANDLERS = {
    "census": _cmd_census,
    "moments": _cmd_moments,
    "bound": _cmd_bound,
    "enumerate": _cmd_enumerate,
    "simulate": _cmd_simulate,
    "coupling": _cmd_coupling,
    "kite": _cmd_kite,
}


def render(cfg: RunConfig, result: dict, rows: list, timestamp: str | None = None) -> str:
    meta = {
        "command": cfg.command,
        "config": cfg.as_dict(),
        "seed": cfg.seed,
        "generator": GENERATOR_ID,
        "version": __version__,
        "schema_version": SCHEMA_VERSION,
        "timestamp": timestamp or datetime.now(timezone.utc).isoformat(),
    }
    if cfg.format == "json":
        return json.dumps({**meta, "result": result}, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    for k in ("command", "seed", "generator", "version", "timestamp"):
        buf.write(f"# {k}: {meta[k]}\n")
    buf.write(f"# config: {json.dumps(meta['config'], sort_keys=True)}\n")
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if cfg.cap is None:
        cfg.cap = default_cap()
    try:
        g = cfg.load()
        result, rows = HANDLERS[cfg.command](cfg, g)
    except ValidationError as exc:
        print(f"crossings {cfg.command}: validation error: {exc}", file=sys.stderr)
        return 3
    except CapabilityError as exc:
        print(f"crossings {cfg.command}: {exc}", file=sys.stderr)
        return 4
    except CrossingsError as exc:
        print(f"crossings {cfg.command}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"crossings {cfg.command}: {exc}", file=sys.stderr)
        return 3
    text = render(cfg, result, rows)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
