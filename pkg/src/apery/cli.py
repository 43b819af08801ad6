"""Command-line surface: inspect semigroups, run identity suites, list roots.

Three subcommands:

  info    constructions and first-order invariants for one semigroup
  verify  seeded identity suites over random or fixed instances
  roots   root-system data and the height/exponent identities

Reports are plain text or canonical JSON.  Exact rationals serialize as
"num/den" strings so no precision is lost; the same seed always produces
byte-identical output, and the exit status is 0 exactly when every
verification passed.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import identities as ident
from . import qbernoulli as qb
from . import roots as rootsys
from .semigroup import NumericalSemigroup, from_generators, from_gaps, \
    apery_set, height_partition
from .treepath import canonical_path, telescoping_sum, telescoping_product, \
    determinant_relation
from .symfunc import Poly
from .partitions import conjugate_partition

SUITE_ALIASES = {
    "prop1": "products",
    "prop2": "inverse-products",
    "prop3": "elementary",
    "prop4": "complete",
    "prop5": "divided-differences",
    "prop6": "power-sum-products",
}

SEMIGROUP_SUITES = (
    "gassert-shor", "products", "inverse-products", "elementary", "complete",
    "divided-differences", "power-sum-products", "general", "structure",
    "telescoping", "q-bernoulli",
)

ALL_SUITES = SEMIGROUP_SUITES + ("roots",)


@dataclass
class RunConfig:
    command: str
    gens: list[int] | None = None
    gaps: list[int] | None = None
    m: int | None = None
    suites: list[str] = field(default_factory=list)
    p: int | None = None
    k: int | None = None
    w_degree: int | None = None
    seed: int = 0
    instances: int = 10
    fmt: str = "text"
    qb_tol: float = 1e-8
    qb_truncation_tol: float = 1e-14
    non_injective_f: bool = False
    rank: int | None = None
    type_label: str | None = None

    def __post_init__(self):
        if self.gens is not None and self.gaps is not None:
            raise ValueError("supply exactly one of --gens or --gaps, not both")

    def semigroup(self) -> NumericalSemigroup | None:
        if self.gens is not None:
            return from_generators(self.gens)
        if self.gaps is not None:
            return from_gaps(self.gaps) if self.gaps else from_generators([1])
        return None


# ---------------------------------------------------------------------------
# Random instances (suite driver)


def random_semigroup(rng: random.Random) -> NumericalSemigroup:
    """2-4 generators uniform in [2, 20]; gcd 1 and Frobenius <= 60 enforced
    by rejection.  Keeps subset enumeration desk-scale while varying
    structure."""
    while True:
        gens = [rng.randint(2, 20) for _ in range(rng.randint(2, 4))]
        if math.gcd(*gens) != 1:
            continue
        s = from_generators(gens)
        if s.gaps and (s.frobenius or 0) <= 60:
            return s


def random_member_instance(rng: random.Random,
                           max_m: int = 12) -> tuple[NumericalSemigroup, int]:
    """A random semigroup together with a random nonzero member m <= max_m."""
    while True:
        s = random_semigroup(rng)
        members = [x for x in range(2, max_m + 1) if s.contains(x)]
        if members:
            return s, rng.choice(members)


# ---------------------------------------------------------------------------
# Serialization


def _value_json(v):
    if isinstance(v, Poly):
        return [_value_json(c) for c in v.coeffs]
    if isinstance(v, (tuple, list)):
        return [_value_json(c) for c in v]
    if isinstance(v, bool):
        return v
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return f"{v}/1"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _params_json(params: dict) -> dict:
    out = {}
    for key, v in params.items():
        if isinstance(v, Fraction):
            out[key] = f"{v.numerator}/{v.denominator}"
        elif isinstance(v, (list, tuple)):
            out[key] = list(v)
        else:
            out[key] = v
    return out


def report_entry(rep: ident.IdentityReport,
                 s: NumericalSemigroup | None, m: int | None) -> dict:
    return {
        "semigroup": {"gaps": list(s.gaps)} if s is not None else None,
        "m": m,
        "identity": rep.identity,
        "params": _params_json(rep.params),
        "lhs": _value_json(rep.lhs),
        "rhs": _value_json(rep.rhs),
        "equal": rep.equal,
        "residual": rep.residual,
        "witness": rep.witness,
    }


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Suite runners


def _admissible_p(m: int, cfg: RunConfig) -> list[int]:
    if cfg.p is not None:
        return [cfg.p]
    return [p for p in range(1, m + 1) if math.comb(m, p) <= 10_000]


def _k_range(cfg: RunConfig, hi: int) -> list[int]:
    if cfg.k is not None:
        return [cfg.k]
    return list(range(1, hi + 1))


def run_semigroup_suite(suite: str, s: NumericalSemigroup, m: int,
                        rng: random.Random, cfg: RunConfig) -> list[ident.IdentityReport]:
    frob = s.frobenius or 0
    f = ident.random_function_table(rng, frob + 2 * m,
                                    injective=not cfg.non_injective_f)
    path = canonical_path(s, m)
    reports: list[ident.IdentityReport] = []

    if suite == "gassert-shor":
        reports.append(ident.verify_gassert_shor(s, m, f))
    elif suite == "products":
        for p in _admissible_p(m, cfg):
            reports.append(ident.verify_products(s, m, f, p, path=path))
    elif suite == "inverse-products":
        for p in _admissible_p(m, cfg):
            bound = ident.inverse_product_degree_bound(s, m, f, p)
            zs = ident.generic_z_samples(bound + 1, set(f.values))
            reports.append(ident.verify_inverse_products(s, m, f, p, zs, path=path))
    elif suite == "elementary":
        for p in _admissible_p(m, cfg):
            for k in _k_range(cfg, min(p, 4)):
                reports.append(ident.verify_elementary(s, m, f, p, k, path=path))
    elif suite == "complete":
        for p in _admissible_p(m, cfg):
            for k in _k_range(cfg, 4):
                reports.append(ident.verify_complete(s, m, f, p, k, path=path))
    elif suite == "divided-differences":
        for p in _admissible_p(m, cfg):
            degrees = ([cfg.w_degree] if cfg.w_degree is not None
                       else [p - 1 + j for j in range(4)])
            for deg in degrees:
                w = Poly.monomial(deg)
                reports.append(
                    ident.verify_divided_differences(s, m, f, p, w, path=path))
    elif suite == "power-sum-products":
        ps = [p for p in {1, 2, m - 1} if 1 <= p < m]
        if cfg.p is not None:
            ps = [cfg.p]
        for p in sorted(ps):
            for k in _k_range(cfg, 4):
                reports.append(
                    ident.verify_power_sum_products(s, m, k, p, path=path))
    elif suite == "general":
        specs = [ident.SymmetricSpec(kind="elementary", p=1, k=1)]
        if m >= 2:
            specs.append(ident.SymmetricSpec(kind="elementary", p=2, k=2))
            specs.append(ident.SymmetricSpec(kind="power_sum", p=2, k=2))
        for spec in specs:
            reports.append(ident.verify_general(s, m, f, spec, path=path))
    elif suite == "structure":
        reports.extend(ident.structural_reports(s, m))
    elif suite == "telescoping":
        h = [Fraction(rng.randint(-1000, 1000), rng.randint(1, 30))
             for _ in range(len(path))]
        lhs, rhs = telescoping_sum(h, path)
        reports.append(ident.IdentityReport(
            identity="telescoping-sum", params={"m": m},
            lhs=lhs, rhs=rhs, equal=lhs == rhs))
        for p in range(1, min(4, path.n) + 1):
            rows = [[Fraction(rng.randint(-9, 9)) for _ in range(p)]
                    for _ in range(p - 1)]
            lhs, rhs = determinant_relation(h, path, p, rows)
            reports.append(ident.IdentityReport(
                identity="determinant-relation", params={"m": m, "p": p},
                lhs=lhs, rhs=rhs, equal=lhs == rhs))
        hnz = [v if v != 0 else Fraction(1) for v in h]
        lhs, rhs = telescoping_product(hnz, path)
        reports.append(ident.IdentityReport(
            identity="telescoping-product", params={"m": m},
            lhs=lhs, rhs=rhs, equal=lhs == rhs))
    elif suite == "q-bernoulli":
        params = qb.QBernoulliParams(q=0.5, l=1, y=0.0, alpha=1, lam=0.25,
                                     truncation_tol=cfg.qb_truncation_tol)
        res = qb.difference_relation_residual(2, 0.0, params)
        reports.append(ident.IdentityReport(
            identity="qbernoulli-difference-relation",
            params={"n": 2, "t": 0.0, "q": 0.5, "l": 1, "y": 0.0,
                    "alpha": 1, "lam": 0.25, "tol": cfg.qb_tol},
            lhs=0.0, rhs=0.0, equal=res < cfg.qb_tol, residual=res))
        reports.append(ident.verify_gassert_shor_qbernoulli(
            s, m, params, n=2, x=0.0, tol=cfg.qb_tol))
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return reports


def run_roots_suite(rng: random.Random, cfg: RunConfig) -> list[dict]:
    entries = []
    for rs in rootsys.all_root_systems():
        rep = rootsys.verify_poincare_products(rs)
        entries.append(report_entry(rep, None, None))
        f = ident.random_function_table(rng, max(rs.exponents) + 1)
        rep = rootsys.verify_height_exponent(rs, f)
        entries.append(report_entry(rep, None, None))
    f = ident.random_function_table(rng, 2 * 24)
    for k in range(1, 25):
        rep = rootsys.verify_floor_doubling(rootsys.FloorIdentityInstance(k=k, f=f))
        entries.append(report_entry(rep, None, None))
        rep = rootsys.verify_divisor_identity(k, f)
        entries.append(report_entry(rep, None, None))
    params = qb.QBernoulliParams(q=0.5, l=1, y=0.0, alpha=1, lam=0.25,
                                 truncation_tol=cfg.qb_truncation_tol)
    for name in ("A2", "G2"):
        rep = rootsys.verify_height_exponent_qbernoulli(
            rootsys.build_root_system(name), params, n=2, tol=cfg.qb_tol)
        entries.append(report_entry(rep, None, None))
    return entries


def run_verify(cfg: RunConfig) -> tuple[dict, int]:
    rng = random.Random(cfg.seed)
    suites = []
    for name in cfg.suites:
        name = SUITE_ALIASES.get(name, name)
        if name == "all":
            suites = list(ALL_SUITES)
            break
        if name not in ALL_SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from "
                             f"{', '.join(ALL_SUITES + ('all',))}")
        suites.append(name)

    fixed = cfg.semigroup()
    if fixed is not None and cfg.m is None:
        raise ValueError("--m is required when the semigroup is fixed")

    entries: list[dict] = []
    sg_suites = [x for x in suites if x != "roots"]
    if sg_suites:
        for _ in range(cfg.instances):
            if fixed is not None:
                s, m = fixed, cfg.m
            else:
                s, m = random_member_instance(rng)
            for suite in sg_suites:
                for rep in run_semigroup_suite(suite, s, m, rng, cfg):
                    entries.append(report_entry(rep, s, m))
    if "roots" in suites:
        entries.extend(run_roots_suite(rng, cfg))

    ok = all(e["equal"] for e in entries)
    report = {
        "suite": ",".join(cfg.suites),
        "seed": cfg.seed,
        "instances": entries,
        "pass": ok,
    }
    return report, 0 if ok else 1


# ---------------------------------------------------------------------------
# info / roots commands


def run_info(cfg: RunConfig) -> dict:
    s = cfg.semigroup()
    if s is None:
        raise ValueError("info needs --gens or --gaps")
    m = cfg.m if cfg.m is not None else s.multiplicity
    aset = apery_set(s, m)
    hp = height_partition(s, m)
    path = canonical_path(s, m)
    a_parts = sorted((c for c in aset.counts if c), reverse=True)
    conj_ok = conjugate_partition(a_parts) == hp.b
    return {
        "gaps": list(s.gaps),
        "frobenius": s.frobenius,
        "genus": s.genus,
        "multiplicity": s.multiplicity,
        "minimal_generators": list(s.minimal_generators),
        "m": m,
        "apery_values": list(aset.values),
        "apery_counts": list(aset.counts),
        "height_partition": list(hp.b),
        "conjugacy": "ok" if conj_ok else "FAILED",
        "canonical_path": [
            {"i": i, "c": step.frobenius_added, "t_set": list(step.t_set)}
            for i, step in enumerate(path.steps, start=1)
        ],
    }


def run_roots_cmd(cfg: RunConfig) -> tuple[dict, int]:
    label = cfg.type_label
    if label is None:
        raise ValueError("roots needs --type")
    rs = (rootsys.build_root_system(label, cfg.rank)
          if cfg.rank is not None or len(label) > 1
          else rootsys.build_root_system(label))
    rng = random.Random(cfg.seed)
    f = ident.random_function_table(rng, max(rs.exponents) + 1)
    poincare = rootsys.verify_poincare_products(rs)
    height_exp = rootsys.verify_height_exponent(rs, f)
    b = rs.height_counts()
    out = {
        "system": rs.name,
        "rank": rs.rank,
        "positive_roots": len(rs.positive_roots),
        "exponents": list(rs.exponents),
        "height_counts": list(b),
        "conjugacy": "ok",
        "poincare": [_value_json(c) for c in poincare.lhs.coeffs],
        "poincare_equal": poincare.equal,
        "height_exponent": report_entry(height_exp, None, None),
        "seed": cfg.seed,
    }
    ok = poincare.equal and height_exp.equal
    return out, 0 if ok else 1


# ---------------------------------------------------------------------------
# Text rendering


def _text_verify(report: dict) -> str:
    lines = [f"suite: {report['suite']}   seed: {report['seed']}"]
    for e in report["instances"]:
        tag = "ok " if e["equal"] else "FAIL"
        where = ""
        if e["semigroup"] is not None:
            where = f" gaps={e['semigroup']['gaps']} m={e['m']}"
        res = "" if e["residual"] is None else f" residual={e['residual']:.3e}"
        wit = "" if e["witness"] is None else f" [{e['witness']}]"
        lines.append(f"{tag} {e['identity']}{where} {e['params']}{res}{wit}")
    lines.append("PASS" if report["pass"] else "FAIL")
    return "\n".join(lines) + "\n"


def _text_info(info: dict) -> str:
    lines = [
        f"gaps: {info['gaps']}",
        f"frobenius: {info['frobenius']}   genus: {info['genus']}   "
        f"multiplicity: {info['multiplicity']}",
        f"minimal generators: {info['minimal_generators']}",
        f"apery set (m={info['m']}): {info['apery_values']}   "
        f"counts: {info['apery_counts']}",
        f"height partition: {info['height_partition']}   "
        f"conjugacy: {info['conjugacy']}",
        "canonical path:",
    ]
    for step in info["canonical_path"]:
        lines.append(f"  step {step['i']}: c={step['c']} T={step['t_set']}")
    return "\n".join(lines) + "\n"


def _text_roots(out: dict) -> str:
    he = out["height_exponent"]
    lines = [
        f"system: {out['system']}   positive roots: {out['positive_roots']}",
        f"exponents: {out['exponents']}",
        f"height counts: {out['height_counts']}   conjugacy: {out['conjugacy']}",
        f"poincare coefficients: {out['poincare']}",
        f"poincare product forms equal: {out['poincare_equal']}",
        f"height/exponent identity: {'ok' if he['equal'] else 'FAIL'} "
        f"(lhs={he['lhs']}, rhs={he['rhs']}, seed={out['seed']})",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Argument parsing


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apery",
        description="Numerical semigroups, Apery sets, and exact identity "
                    "verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--gens", type=_int_list, default=None,
                        help="comma-separated generators, e.g. 3,5")
        sp.add_argument("--gaps", type=_int_list, default=None,
                        help="comma-separated gap set, e.g. 1,2,4,7")
        sp.add_argument("--m", type=int, default=None,
                        help="fixed nonzero member for Apery data")
        sp.add_argument("--format", dest="fmt", choices=("text", "json"),
                        default="text")

    sp = sub.add_parser("info", help="inspect one semigroup")
    common(sp)

    sp = sub.add_parser("verify", help="run identity suites")
    common(sp)
    sp.add_argument("--suite", default="all",
                    help="comma-separated suites (or 'all'); prop1..prop6 "
                         "are accepted aliases")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--instances", type=int, default=10)
    sp.add_argument("--p", type=int, default=None, help="restrict subset size")
    sp.add_argument("--k", type=int, default=None, help="restrict order k")
    sp.add_argument("--w-degree", type=int, default=None,
                    help="restrict divided-difference weight to one monomial")
    sp.add_argument("--qb-tol", type=float, default=1e-8,
                    help="residual threshold for q-Bernoulli identities")
    sp.add_argument("--qb-truncation-tol", type=float, default=1e-14,
                    help="series truncation tolerance")
    sp.add_argument("--non-injective-f", action="store_true",
                    help="plant a collision in the random test function")

    sp = sub.add_parser("roots", help="root-system data and identities")
    sp.add_argument("--type", dest="type_label", required=True,
                    help="A..G, combined forms like G2 accepted")
    sp.add_argument("--rank", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", dest="fmt", choices=("text", "json"),
                    default="text")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("gens", "gaps", "m", "p", "k", "w_degree", "seed",
                 "instances", "fmt", "qb_tol", "qb_truncation_tol",
                 "non_injective_f", "rank", "type_label"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if args.command == "verify":
        cfg.suites = [x.strip() for x in args.suite.split(",") if x.strip()]
    cfg.__post_init__()
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if cfg.command == "info":
            info = run_info(cfg)
            sys.stdout.write(dump_json(info) if cfg.fmt == "json"
                             else _text_info(info))
            return 0
        if cfg.command == "verify":
            report, status = run_verify(cfg)
            sys.stdout.write(dump_json(report) if cfg.fmt == "json"
                             else _text_verify(report))
            return status
        report, status = run_roots_cmd(cfg)
        sys.stdout.write(dump_json(report) if cfg.fmt == "json"
                         else _text_roots(report))
        return status
    except (ValueError, ZeroDivisionError, qb.ConvergenceError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
