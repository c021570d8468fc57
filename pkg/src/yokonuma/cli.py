"""Command-line front end: ``yokonuma <command> --r R --n N [options]``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from math import factorial, lcm
from pathlib import Path

from . import cache, combinat
from .modules import gram
from .scalars import GENERIC, Specialization
from .schur import hecke_decomposition, weyl_multiplicities
from .verify import REGISTRY, Context, check_names, reports_to_json, run_check

DEFAULT_LIMIT = 5000


class UsageError(ValueError):
    pass


class LimitExceeded(UsageError):
    pass


class UnknownCheck(UsageError):
    pass


@dataclass
class SessionConfig:
    r: int
    n: int
    ambient_order: int | None = None
    specializations: list[Specialization] = field(default_factory=lambda: [GENERIC])
    cache_dir: Path | None = None
    output: str = "json"
    limit: int = DEFAULT_LIMIT

    def __post_init__(self):
        if self.r < 1 or self.n < 0:
            raise UsageError("need r >= 1 and n >= 0")
        size = self.r**self.n * factorial(self.n)
        if size > self.limit:
            raise LimitExceeded(f"r^n n! = {size} exceeds the safety limit {self.limit} (raise it with --limit)")
        orders = [s.order for s in self.specializations if not s.is_generic]
        M = lcm(self.r, *orders) if orders else self.r
        if self.ambient_order is not None:
            if self.ambient_order % M:
                raise UsageError(f"--ambient-order {self.ambient_order} must be divisible by r and every specialization order")
            M = self.ambient_order
        self.ambient_order = M
        self.specializations = [s if s.is_generic else Specialization(s.order, M) for s in self.specializations]

    def context(self) -> Context:
        return Context(self.r, self.n, self.ambient_order)


def parse_spec(text: str) -> Specialization:
    if text == "generic":
        return GENERIC
    try:
        order = int(text)
    except ValueError:
        raise UsageError(f"--spec expects an integer order or 'generic', got {text!r}") from None
    if order < 1:
        raise UsageError("specialization order must be positive")
    return Specialization(order)


def parse_shape(text: str, r: int, n: int):
    try:
        shape = combinat.shape_from_json(json.loads(text))
    except (json.JSONDecodeError, TypeError) as exc:
        raise UsageError(f"--shape expects JSON such as '[[2],[]]': {exc}") from None
    if len(shape) != r or combinat.size(shape) != n or not combinat.is_multipartition(shape):
        raise UsageError(f"{text} is not an {r}-multipartition of {n}")
    return shape


def _shape_text(lam) -> str:
    return combinat.render(lam)


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(x) for x in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells)


def _emit(cfg: SessionConfig, data, text: str) -> str:
    return json.dumps(data, indent=2, sort_keys=True) if cfg.output == "json" else text


# -- commands --------------------------------------------------------------
def cmd_dim(cfg: SessionConfig, args) -> tuple[int, str]:
    ctx = cfg.context()
    A = ctx.schur
    f = ctx.factory
    perm = {_shape_text(mu): len(f.perm(mu).reps) for mu in ctx.compositions}
    specht = {_shape_text(lam): len(ctx.cm.std[lam]) for lam in ctx.shapes}
    weyl = {_shape_text(lam): len(combinat.t0plus_all(lam)) for lam in ctx.shapes}
    ext = sum((len(combinat.t0plus_all(l)) + len(combinat.standard_tableaux(l))) ** 2 for l in ctx.shapes)
    data = {
        "r": cfg.r,
        "n": cfg.n,
        "Y": ctx.Y.dim,
        "YS": A.dim,
        "extended_YS": ext,
        "permutation_modules": perm,
        "specht_modules": specht,
        "weyl_modules": weyl,
    }
    lines = [f"dim Y = {ctx.Y.dim}", f"dim YS = {A.dim}", f"dim extended YS = {ext}"]
    lines.append(_table(["M^mu", "dim"], [[k, v] for k, v in perm.items()]))
    lines.append(_table(["lam", "dim S", "dim W"], [[k, specht[k], weyl[k]] for k in specht]))
    return 0, _emit(cfg, data, "\n".join(lines))


def cmd_verify(cfg: SessionConfig, args) -> tuple[int, str]:
    names = args.checks or check_names()
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise UnknownCheck(f"unknown check(s): {', '.join(unknown)}; see 'yokonuma checks'")
    ctx = cfg.context()
    reports = [run_check(name, ctx, spec) for spec in cfg.specializations for name in names]
    code = 0 if all(r.passed for r in reports) else 1
    if cfg.output == "json":
        return code, reports_to_json(reports, timing=args.timing)
    return code, "\n".join(r.to_text() for r in sorted(reports, key=lambda r: (r.name, r.spec)))


def cmd_checks(cfg: SessionConfig | None, args) -> tuple[int, str]:
    return 0, "\n".join(f"{name}: {REGISTRY[name][1]}" for name in check_names())


def cmd_gram(cfg: SessionConfig, args) -> tuple[int, str]:
    if not args.shape:
        raise UsageError("gram needs --shape")
    ctx = cfg.context()
    lam = parse_shape(args.shape, cfg.r, cfg.n)
    out, texts = [], []
    for spec in cfg.specializations:
        G = gram(ctx.factory, lam, spec)
        d = G.to_json()
        d.update(rank=G.rank, radical_dim=G.radical_dim)
        out.append(d)
        texts.append(f"# {_shape_text(lam)} {spec} rank {G.rank}\n{G.to_text()}")
    return 0, _emit(cfg, out, "\n".join(texts))


def cmd_decomp(cfg: SessionConfig, args) -> tuple[int, str]:
    ctx = cfg.context()
    shapes = list(ctx.shapes)
    out, texts = [], []
    for spec in cfg.specializations:
        d = ctx.weyl.decomposition_matrix(spec)
        entry = {
            "specialization": str(spec),
            "e": spec.e,
            "shapes": [combinat.shape_to_json(l) for l in shapes],
            "schur_side": [[d[(l, m)] for m in shapes] for l in shapes],
        }
        if not spec.is_generic:
            dh, K = hecke_decomposition(ctx.factory, spec)
            entry["hecke_simples"] = [combinat.shape_to_json(m) for m in K]
            entry["hecke_side"] = [[dh[(l, m)] for m in K] for l in shapes]
        out.append(entry)
        names = [_shape_text(l) for l in shapes]
        texts.append(f"# [W^lam : L^mu], {spec}\n" + _table(["lam \\ mu"] + names, [[names[i]] + row for i, row in enumerate(entry["schur_side"])]))
    return 0, _emit(cfg, out, "\n".join(texts))


def cmd_schur(cfg: SessionConfig, args) -> tuple[int, str]:
    ctx = cfg.context()
    A = ctx.schur
    hit = cache.load_or_compute(A, cfg.cache_dir)
    table = A.constants_to_json()
    data = {"r": cfg.r, "n": cfg.n, "M": cfg.ambient_order, "cache_hit": hit, "constants": table}
    nonzero = len(table["products"])
    text = f"dim YS = {A.dim}; {nonzero} nonzero basis products; cache {'hit' if hit else 'miss'}"
    return 0, _emit(cfg, data, text)


def cmd_tilting(cfg: SessionConfig, args) -> tuple[int, str]:
    ctx = cfg.context()
    A = ctx.schur
    rows = []
    for nu, T in ctx.tilting.items():
        P = T.pairing_matrix()
        mult = weyl_multiplicities(A, T.module)
        rows.append(
            {
                "nu": combinat.shape_to_json(nu),
                "dim": T.dim,
                "theta_basis": T.basis_spans(T.theta_basis()),
                "theta_prime_basis": T.basis_spans(T.theta_prime_basis()),
                "pairing_size": [len(P), len(P[0]) if P else 0],
                "weyl_multiplicities": [[combinat.shape_to_json(l), m] for l, m in mult.items() if m],
            }
        )
    text = _table(
        ["nu", "dim", "theta", "theta'", "pairing"],
        [[_shape_text(combinat.canonical(r_["nu"])), r_["dim"], r_["theta_basis"], r_["theta_prime_basis"], "x".join(map(str, r_["pairing_size"]))] for r_ in rows],
    )
    return 0, _emit(cfg, rows, text)


COMMANDS = {
    "dim": (cmd_dim, "dimensions of Y, YS, the extended algebra and the standard modules"),
    "verify": (cmd_verify, "run named verification checks (default: all)"),
    "checks": (cmd_checks, "list the verification checks"),
    "gram": (cmd_gram, "Gram matrix of a Specht module"),
    "decomp": (cmd_decomp, "decomposition matrices"),
    "schur": (cmd_schur, "Schur algebra structure constants (cached)"),
    "tilting": (cmd_tilting, "tilting module report"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="yokonuma", description="Exact computations with Yokonuma-Hecke and Yokonuma-Schur algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        s = sub.add_parser(name, help=help_)
        if name == "checks":
            continue
        s.add_argument("--r", type=int, required=True)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--ambient-order", type=int, default=None, help="M with Q(zeta_M) the coefficient field")
        s.add_argument("--spec", action="append", default=None, help="'generic' or an order m (q -> zeta_m); repeatable")
        s.add_argument("--cache-dir", default=None, help=f"cache directory (default ${cache.ENV_VAR} or ~/.cache/yokonuma)")
        s.add_argument("--no-cache", action="store_true")
        s.add_argument("--format", choices=["json", "text"], default="json")
        s.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="safety limit on r^n n!")
        s.add_argument("--out", default=None, help="write the report to a file instead of stdout")
        if name == "verify":
            s.add_argument("checks", nargs="*")
            s.add_argument("--timing", action="store_true", help="include elapsed seconds (breaks byte determinism)")
        if name == "gram":
            s.add_argument("--shape", default=None, help="JSON multipartition, e.g. '[[2],[]]'")
    return p


def _config(args) -> SessionConfig:
    specs = [parse_spec(s) for s in (args.spec or ["generic"])]
    cache_dir = None if args.no_cache else Path(args.cache_dir) if args.cache_dir else cache.default_dir()
    return SessionConfig(args.r, args.n, args.ambient_order, specs, cache_dir, args.format, args.limit)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    fn, _ = COMMANDS[args.command]
    try:
        cfg = None if args.command == "checks" else _config(args)
        code, text = fn(cfg, args)
    except UsageError as exc:
        print(f"yokonuma: error: {exc}", file=sys.stderr)
        return 2
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
