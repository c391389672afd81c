"""``solab``: run any computation from the shell and emit a report.

Every run is described by a :class:`RunConfig`.  A report is a JSON
document with ``result``, ``checks`` and a ``provenance`` block; the
``provenance.runtime`` part (workers, wall time, timestamp) is the only
part allowed to differ between replays.

Config files hold ``key = value`` lines (``#`` starts a comment).  Keys are
the long flag names without dashes (``samples = 10000``, ``delta1 = 0.6``)
plus ``command``, ``seed``, ``output``, ``level`` and ``workers``.  Flags
given on the command line override the file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from math import factorial

from . import __version__
from .combinatorics import (
    admissible_lengths,
    common_fixed_points,
    lambda_fraction_exact,
    lambda_rate,
    nontransitivity_bound,
    nontransitivity_exact,
    nontransitivity_rate,
)
from .constructions import WreathElement, conjugacy_class_representative, construct, integer_partitions
from .fields import fpagl_row, prime_powers
from .insolubility import (
    COLVA_BOUND,
    alt_coset,
    eta_exact,
    pins_exact,
    pins_montecarlo,
    random_wreath_pairs,
    two_coset_generation_check,
    wreath_pins_montecarlo,
)
from .numtheory import b_empirical, erdos_comparison, totient_ratio_count
from .perm import Permutation
from .solubilizer import crucial_bound_check, solubilizer_set
from .verify import (
    verify_fact1,
    verify_fact2,
    verify_facile,
    verify_factorial_identity,
    verify_iota,
    verify_kappa,
)


@dataclass(frozen=True)
class Level:
    degree: int
    coset_ceiling: int


LEVELS = {
    "smoke": Level(6, 10**3),
    "desk": Level(8, 10**5),
    "deep": Level(9, 5 * 10**5),
}

GLOBAL_KEYS = ("seed", "output", "level", "workers")


class UsageError(Exception):
    """Invalid parameters; ``remedy`` is a one-line hint for the user."""

    def __init__(self, message: str, remedy: str):
        super().__init__(message)
        self.remedy = remedy


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    output: str = "json"
    level: str = "desk"
    workers: int = 1

    def echo(self) -> dict:
        """Everything that determines the report body (not workers or output)."""
        return {"command": self.command, "seed": self.seed, "level": self.level, "params": dict(self.params)}

    @classmethod
    def from_echo(cls, echo: dict, **runtime) -> RunConfig:
        return cls(echo["command"], dict(echo["params"]), echo["seed"], level=echo["level"], **runtime)

    def to_text(self) -> str:
        lines = [f"command = {self.command}"]
        lines += [f"{k} = {getattr(self, k)}" for k in GLOBAL_KEYS]
        for key, value in self.params.items():
            if value is None or value is False:
                continue
            lines.append(f"{key.replace('_', '-')} = {'true' if value is True else value}")
        return "\n".join(lines) + "\n"


# -- small parsers -------------------------------------------------------------


def _perm(text: str, degree: int, what: str) -> Permutation:
    try:
        return Permutation.parse(text, degree)
    except ValueError as exc:
        raise UsageError(f"bad {what}: {exc}", f'write {what} in 1-indexed cycle notation, e.g. "(1 2)(3 4)"')


def _int_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}", "use a single integer or lo..hi, e.g. 5..7")


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _class_label(partition) -> str:
    return "".join(str(p) if p < 10 else f"[{p}]" for p in partition)


def _eta_value(spec: str, level: Level) -> Fraction:
    if spec.startswith("from-eta-exact:"):
        n = int(spec.split(":", 1)[1])
        _degree_ok(n, level)
        return eta_exact(n).value
    try:
        return Fraction(spec)
    except ValueError:
        raise UsageError(f"bad eta {spec!r}", "use a rational such as 2/5 or from-eta-exact:<n>")


def _degree_ok(n: int, level: Level) -> None:
    if n > level.degree:
        raise UsageError(
            f"degree {n} exceeds the exhaustive ceiling {level.degree} of this level",
            "pass --level deep, or use a Monte Carlo command with --samples",
        )


def _construction(name: str):
    try:
        return construct(name)
    except ValueError as exc:
        raise UsageError(str(exc), "use a recipe such as alt5, sym4, alt5^2:swap or alt5wrC3")


def _element(spec: str, c) -> Permutation:
    if spec in c.named_elements:
        return c.named_elements[spec]
    return _perm(spec, c.group.degree, "--g")


# -- commands --------------------------------------------------------------------
# Each returns (result, checks, rows); checks are (name, passed) pairs and
# rows feed CSV output.


def cmd_pins(p, cfg: RunConfig, level: Level):
    n = p.n
    if n < 5:
        raise UsageError("need n >= 5", "choose --n 5 or larger")
    a = _perm(p.a, n, "--a")
    coset = alt_coset(n, p.coset)
    checks = []
    if p.samples is None or p.exact:
        order = factorial(n) // 2
        if order > level.coset_ceiling:
            raise UsageError(
                f"|Alt({n})| = {order} exceeds the {cfg.level} coset ceiling {level.coset_ceiling}",
                "use --samples K for a Monte Carlo estimate, or a higher --level",
            )
        report = pins_exact(a, coset, ceiling=level.coset_ceiling)
        checks.append(("q_positive", report.q_value > 0))
        checks.append(("p_ins_at_least_q", report.p_ins >= report.q_value))
    else:
        report = pins_montecarlo(a, coset, p.samples, cfg.seed, p.confidence, cfg.workers)
    result = report.to_json()
    row = {"class": _class_label(a.cycle_type()), "a": result["a"], "coset": result["coset"]}
    if report.kind == "exact":
        row.update(p_ins=result["p_ins"], q_value=result["q_value"])
    else:
        row.update(p_ins=result["p_ins"]["estimate"], half_width=result["p_ins"]["half_width"],
                   q_value=result["q_value"]["estimate"])
    return result, checks, [row]


def cmd_eta(p, cfg: RunConfig, level: Level):
    results, checks, rows = [], [], []
    for n in _int_range(p.n):
        if n < 5:
            raise UsageError("eta needs n >= 5", "use --n 5 or a range such as 5..7")
        _degree_ok(n, level)
        res = eta_exact(n, ceiling=level.degree)
        results.append(res.to_json())
        checks.append((f"eta_positive n={n}", res.value > 0))
        for row in res.rows:
            pins, q = Fraction(row["p_ins"]), Fraction(row["q_value"])
            checks.append((f"p_ins_at_least_q_positive n={n} class={row['class']} coset={row['coset']}",
                           pins >= q > 0))
            rows.append({"n": n, **row})
    return {"eta": results}, checks, rows


def cmd_wreath(p, cfg: RunConfig, level: Level):
    c = _construction(p.s)
    if c.series.length != 1:
        raise UsageError(f"{p.s} is not simple", "use --s alt<n> with n >= 5")
    s = c.group
    d, m = s.degree, p.m
    if p.a is not None:
        a = WreathElement.from_permutation(_perm(p.a, d * m, "--a"), d)
        b = WreathElement.from_permutation(_perm(p.b or "()", d * m, "--b"), d)
        pairs = [(a, b, cfg.seed)]
    else:
        pairs = random_wreath_pairs(d, m, p.pairs, cfg.seed)
    eta_tilde = min(_eta_value(p.eta, level), COLVA_BOUND) if p.eta else None
    rows, checks = [], []
    for i, (a, b, sample_seed) in enumerate(pairs):
        rep = wreath_pins_montecarlo(a, b, s, m, p.samples, sample_seed, p.confidence, cfg.workers)
        est = rep.p_ins
        rows.append({
            "pair": i,
            "a": a.to_permutation().cycle_string(),
            "b": b.to_permutation().cycle_string(),
            "sample_seed": sample_seed,
            "estimate": est.estimate,
            "half_width": est.half_width,
            "low": est.low,
            "high": est.high,
        })
        if eta_tilde is not None:
            checks.append((f"pair {i}: estimate + 3 half-width >= eta_tilde",
                           est.estimate + 3 * est.half_width >= eta_tilde))
    result = {"s": p.s, "m": m, "samples": p.samples, "pairs": rows}
    if eta_tilde is not None:
        result["eta_tilde"] = _frac(eta_tilde)
    return result, checks, rows


def cmd_two_coset(p, cfg: RunConfig, level: Level):
    n = p.n
    if not 5 <= n <= 7:
        raise UsageError("two-coset needs 5 <= n <= 7", "use --n 5, 6 or 7")
    _degree_ok(n, level)
    classes = [conjugacy_class_representative(part) for part in integer_partitions(n)]
    # only the cosets x*Alt(n) matter, so one value per parity pair
    by_parity: dict[tuple[bool, bool], Fraction] = {}
    rows, checks = [], []
    for x1 in classes:
        for x2 in classes:
            key = (x1.is_even(), x2.is_even())
            if key not in by_parity:
                by_parity[key] = two_coset_generation_check(x1, x2, n)
            value = by_parity[key]
            rows.append({"x1": x1.cycle_string(), "x2": x2.cycle_string(), "probability": _frac(value),
                         "at_least_53_90": value >= COLVA_BOUND})
            checks.append((f"x1={x1.cycle_string()} x2={x2.cycle_string()}", value >= COLVA_BOUND))
    return {"n": n, "bound": _frac(COLVA_BOUND), "pairs": rows}, checks, rows


VERIFY_CHECKS = ("factorial-identity", "iota", "kappa", "facile", "fact1", "fact2")


def cmd_verify(p, cfg: RunConfig, level: Level):
    which = VERIFY_CHECKS if p.check == "all" else (p.check,)
    deg = level.degree
    results = []
    for name in which:
        if name == "factorial-identity":
            results.append(verify_factorial_identity(p.n_max or 30))
        elif name == "iota":
            results += verify_iota(p.omega_max or min(deg, 8))
        elif name == "kappa":
            results += verify_kappa(p.omega_max or min(deg, 7))
        elif name == "facile":
            results += verify_facile(p.n_max or deg)
        elif name == "fact1":
            results.append(verify_fact1(p.omega_max or min(deg, 7)))
        else:
            results.append(verify_fact2(p.instances, p.degree, cfg.seed))
    checks = [(r.name, r.passed) for r in results]
    rows = [{"check": r.name, "checked": r.checked, "failed": len(r.failures), "passed": r.passed} for r in results]
    return {"checks": [r.to_json() for r in results]}, checks, rows


def cmd_lambda_rate(p, cfg: RunConfig, level: Level):
    est = lambda_rate(p.n, p.delta1, p.delta2, p.samples, cfg.seed, p.confidence, cfg.workers)
    exact = lambda_fraction_exact(p.n, p.delta1, p.delta2)
    ks = admissible_lengths(p.n, p.delta1, p.delta2)
    c = Fraction(len(ks), p.n)
    lower = Fraction(str(p.delta2)) * c / (1 + Fraction(2, p.n))
    result = {
        "n": p.n,
        "estimate": est.to_json(),
        "exact_fraction": _frac(exact),
        "admissible_lengths": ks,
        "lower_bound": _frac(lower),
    }
    checks = [("exact_fraction_at_least_lower_bound", exact >= lower)]
    row = {"n": p.n, "estimate": est.estimate, "half_width": est.half_width,
           "exact": float(exact), "lower_bound": float(lower)}
    return result, checks, [row]


def cmd_nontransitivity(p, cfg: RunConfig, level: Level):
    n = p.n
    g = _perm(p.g, n, "--g")
    if g.is_identity():
        raise UsageError("G must be nontrivial", 'pass a non-identity generator, e.g. --g "(1 2)"')
    rho = Permutation.identity(n) if p.rho == "even" else Permutation.parse("(1 2)", n)
    f = common_fixed_points([g])
    bound = nontransitivity_bound(n, f)
    if p.samples is None:
        _degree_ok(n, level)
        rate = nontransitivity_exact([g], rho)
        value, result = rate, {"exact": _frac(rate)}
    else:
        est = nontransitivity_rate([g], rho, p.samples, cfg.seed, p.confidence, cfg.workers)
        value, result = Fraction(est.successes, est.trials), {"estimate": est.to_json()}
    result.update(n=n, fixed_points=f, bound=_frac(bound))
    row = {"n": n, "fixed_points": f, "rate": float(value), "bound": float(bound)}
    return result, [("rate_at_most_bound", value <= bound)], [row]


def cmd_totient_count(p, cfg: RunConfig, level: Level):
    count = totient_ratio_count(p.n, p.delta1, p.delta2)
    row = {"n": p.n, "delta1": p.delta1, "delta2": p.delta2, "count": count, "ratio": count / p.n}
    return row, [], [row]


def cmd_bt(p, cfg: RunConfig, level: Level):
    try:
        ts = sorted(float(x) for x in str(p.t).split(","))
    except ValueError:
        raise UsageError(f"bad --t {p.t!r}", "give one value or a comma-separated list, e.g. 1.1,1.5,2")
    rows = []
    for t in ts:
        b = b_empirical(t, p.limit)
        row = {"t": t, "b": _frac(b), "b_float": float(b)}
        if 1 < t < 2:
            row["erdos"] = erdos_comparison(Fraction(str(t)) - 1, p.limit)
        rows.append(row)
    values = [Fraction(r["b"]) for r in rows]
    monotone = all(x >= y for x, y in zip(values, values[1:]))
    csv_rows = [{"t": r["t"], "b": r["b"], "b_float": r["b_float"]} for r in rows]
    return {"limit": p.limit, "rows": rows}, [("non_increasing_in_t", monotone)], csv_rows


def cmd_fpagl(p, cfg: RunConfig, level: Level):
    rows = []
    for q in prime_powers(p.q_max):
        r = fpagl_row(q)
        rows.append({"q": q, "max_fix": r.max_fix, "sqrt_q": round(r.sqrt_q, 6), "pass": r.passed})
    checks = [(f"q={r['q']}", r["pass"]) for r in rows]
    return {"rows": rows}, checks, rows


def cmd_solubilizer(p, cfg: RunConfig, level: Level):
    c = _construction(p.group)
    g = _element(p.g, c)
    report = solubilizer_set(c.group, g)
    result = report.to_json()
    ok = 0 < report.solubilizer_size <= report.group_order
    return result, [("size_in_range", ok)], [result]


def cmd_crucial(p, cfg: RunConfig, level: Level):
    c = _construction(p.construction)
    g = _element(p.g, c)
    eta = _eta_value(p.eta, level)
    res = crucial_bound_check(c.group, g, c.series, eta)
    result = res.to_json()
    row = {k: v for k, v in result.items() if k != "solubilizer"}
    return result, [("ratio_at_most_bound", res.holds)], [row]


COMMANDS = {
    "pins": cmd_pins,
    "eta": cmd_eta,
    "wreath": cmd_wreath,
    "two-coset": cmd_two_coset,
    "verify": cmd_verify,
    "lambda-rate": cmd_lambda_rate,
    "nontransitivity": cmd_nontransitivity,
    "totient-count": cmd_totient_count,
    "bt": cmd_bt,
    "fpagl": cmd_fpagl,
    "solubilizer": cmd_solubilizer,
    "crucial": cmd_crucial,
}


# -- running and reporting ---------------------------------------------------------


def run(config: RunConfig) -> dict:
    """Execute ``config`` and return the report document."""
    if config.command not in COMMANDS:
        raise UsageError(f"unknown command {config.command!r}", f"choose one of: {', '.join(COMMANDS)}")
    if config.level not in LEVELS:
        raise UsageError(f"unknown level {config.level!r}", "use --level smoke, desk or deep")
    if config.workers < 1:
        raise UsageError("workers must be at least 1", "pass --workers 1 or more")
    started = time.perf_counter()
    params = argparse.Namespace(**config.params)
    try:
        result, checks, rows = COMMANDS[config.command](params, config, LEVELS[config.level])
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc), f"check the parameters listed by `solab {config.command} --help`")
    failures = [name for name, ok in checks if not ok]
    return {
        "command": config.command,
        "result": result,
        "rows": rows,
        "checks": [{"name": name, "passed": bool(ok)} for name, ok in checks],
        "passed": not failures,
        "failures": failures,
        "provenance": {
            "version": __version__,
            "config": config.echo(),
            "runtime": {
                "workers": config.workers,
                "wall_time_s": round(time.perf_counter() - started, 6),
                "timestamp": datetime.now(timezone.utc).isoformat(),
            },
        },
    }


def report_body(doc: dict) -> dict:
    """The report without ``provenance.runtime``; equal across replays."""
    body = dict(doc)
    body["provenance"] = {k: v for k, v in doc["provenance"].items() if k != "runtime"}
    return body


def _json(obj) -> str:
    return json.dumps(obj, indent=2, default=str)


def render(doc: dict, output: str) -> str:
    if output == "json":
        return _json(doc) + "\n"
    if output == "csv":
        rows = doc["rows"]
        buf = io.StringIO()
        if rows:
            fields = list(rows[0])
            writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in row.items()})
        return buf.getvalue()
    lines = [f"solab {doc['command']}"]
    rows = doc["rows"]
    if rows:
        fields = list(rows[0])
        cells = [[str(r.get(f, "")) for f in fields] for r in rows]
        widths = [max(len(f), *(len(c[i]) for c in cells)) for i, f in enumerate(fields)]
        lines.append("  ".join(f.ljust(w) for f, w in zip(fields, widths)))
        lines += ["  ".join(c.ljust(w) for c, w in zip(cell, widths)) for cell in cells]
    for check in doc["checks"]:
        lines.append(f"{'PASS' if check['passed'] else 'FAIL'}  {check['name']}")
    lines.append("all checks passed" if doc["passed"] else f"{len(doc['failures'])} check(s) failed")
    return "\n".join(lines) + "\n"


def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--seed", type=int, default=default(0), help="64-bit seed for all random draws")
    parser.add_argument("--output", choices=("json", "csv", "pretty"), default=default("json"))
    parser.add_argument("--csv", dest="output", action="store_const", const="csv", default=argparse.SUPPRESS,
                        help="same as --output csv")
    parser.add_argument("--level", choices=tuple(LEVELS), default=default("desk"),
                        help="exhaustive ceilings: smoke (degree 6), desk (8), deep (9)")
    parser.add_argument("--workers", type=int, default=default(1), help="processes for Monte Carlo chunks")
    parser.add_argument("--config", default=argparse.SUPPRESS, help="key = value file supplying defaults")
    parser.add_argument("--save-config", default=argparse.SUPPRESS, help="write the resolved config here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="solab", description=__doc__.split("\n")[0], allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"solab {__version__}")
    _global_flags(parser, lambda v: argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text, allow_abbrev=False)
        _global_flags(p, lambda v: argparse.SUPPRESS)
        return p

    def mc(p, samples_default=None):
        p.add_argument("--samples", type=int, default=samples_default)
        p.add_argument("--confidence", type=float, default=0.95)

    p = command("pins", "P_ins and Q for Alt(n) in one coset of Sym(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True, help='automorphism, e.g. "(1 2)(3 4)"')
    p.add_argument("--coset", choices=("even", "odd"), default="even")
    p.add_argument("--exact", action="store_true")
    mc(p)

    p = command("eta", "exact eta(n) as the minimum P_ins over classes and cosets")
    p.add_argument("--n", required=True, help="degree or range, e.g. 5..7")
    p.add_argument("--exact", action="store_true", help="accepted for symmetry; eta is always exact")

    p = command("wreath", "Monte Carlo P_ins(S^m, a, b) in Sym(d) wr Sym(m)")
    p.add_argument("--s", default="alt5")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--a", help="fix a instead of drawing pairs (cycles on m*d points)")
    p.add_argument("--b", help="coset representative when --a is given")
    p.add_argument("--pairs", type=int, default=20, help="number of seeded (a, b) pairs")
    p.add_argument("--eta", help="compare with min(eta, 53/90): rational or from-eta-exact:<n>")
    mc(p, 10_000)

    p = command("two-coset", "exact probability that two coset elements generate Alt(n)")
    p.add_argument("--n", type=int, default=5)

    p = command("verify", "exhaustive counting-lemma checks")
    p.add_argument("check", choices=VERIFY_CHECKS + ("all",))
    p.add_argument("--n-max", type=int)
    p.add_argument("--omega-max", type=int)
    p.add_argument("--instances", type=int, default=200)
    p.add_argument("--degree", type=int, default=7)

    p = command("lambda-rate", "proportion of Sym(n) in the set Lambda")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta1", type=float, required=True)
    p.add_argument("--delta2", type=float, required=True)
    mc(p, 10_000)

    p = command("nontransitivity", "rate of intransitive <G, sigma> over a coset of Alt(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", default="(1 2)", help="generator of G")
    p.add_argument("--rho", choices=("even", "odd"), default="even")
    mc(p)

    p = command("totient-count", "count m in [delta1*n, n] with phi(m) >= delta2*m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta1", type=float, required=True)
    p.add_argument("--delta2", type=float, required=True)

    p = command("bt", "empirical B(t), the density of n/phi(n) >= t")
    p.add_argument("--t", required=True, help="value or comma-separated list")
    p.add_argument("--limit", type=int, default=10**6)

    p = command("fpagl", "largest fixed-point count in AGammaL(1, q)")
    p.add_argument("--q-max", type=int, default=81)

    p = command("solubilizer", "exact |S_G(g)| / |G|")
    p.add_argument("--group", required=True, help="recipe: alt<n>, sym<n>, alt<n>^m:swap, alt<n>wrC<m>")
    p.add_argument("--g", required=True, help="cycles or a named element such as swap")

    p = command("crucial", "compare |S_G(g)|/|G| with (1 - min(eta, 53/90))^t")
    p.add_argument("--construction", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--eta", default="from-eta-exact:5")

    p = sub.add_parser("replay", help="re-run the config recorded in a JSON report", allow_abbrev=False)
    p.add_argument("report")
    p.add_argument("--check", action="store_true", help="exit 1 unless the new body matches")
    _global_flags(p, lambda v: argparse.SUPPRESS)
    return parser


def _read_config(path: str) -> dict:
    values = {}
    with open(path) as fh:
        for number, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{number}: expected key = value", "see the config format in the README")
            key, value = (s.strip() for s in line.split("=", 1))
            values[key.replace("_", "-")] = value
    return values


def _config_argv(values: dict, parser: argparse.ArgumentParser) -> list[str]:
    """Turn config entries into argv, placed before the command-line flags."""
    values = dict(values)
    command = values.pop("command", None)
    if command is None:
        raise UsageError("config file has no command", "add a line such as: command = pins")
    sub = parser._subparsers._group_actions[0].choices.get(command)
    if sub is None:
        raise UsageError(f"unknown command {command!r} in config", f"choose one of: {', '.join(COMMANDS)}")
    flags = {a.option_strings[-1].lstrip("-"): a for a in sub._actions if a.option_strings}
    positional = [a.dest for a in sub._actions if not a.option_strings and a.dest != "help"]
    argv = [command]
    for key, value in values.items():
        if key in positional:
            argv.insert(1, value)
            continue
        action = flags.get(key)
        if action is None:
            raise UsageError(f"unknown config key {key!r}", f"see `solab {command} --help` for valid keys")
        if action.nargs == 0:
            if value.lower() in ("1", "true", "yes"):
                argv.append(f"--{key}")
        else:
            argv += [f"--{key}", value]
    return argv


def _resolve(argv: list[str], parser: argparse.ArgumentParser) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if known.config:
        base = _config_argv(_read_config(known.config), parser)
        if rest and rest[0] in COMMANDS:
            if rest[0] != base[0]:
                raise UsageError(f"command {rest[0]!r} conflicts with the config file's {base[0]!r}",
                                 "drop the command name or use a matching config")
            rest = rest[1:]
        argv = base + rest
    return parser.parse_args(argv)


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    values = vars(args).copy()
    command = values.pop("command")
    for key in ("config", "save_config"):
        values.pop(key, None)
    glob = {k: values.pop(k) for k in GLOBAL_KEYS if k in values}
    return RunConfig(command, values, **glob)


def _load_report(path: str) -> dict:
    try:
        with open(path) as fh:
            saved = json.load(fh)
        saved["provenance"]["config"]
    except (json.JSONDecodeError, KeyError, TypeError):
        raise UsageError(f"{path} is not a solab JSON report", "replay a report written with --output json")
    return saved


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = _resolve(argv, parser)
        if args.command is None:
            parser.print_help()
            return 2
        if args.command == "replay":
            saved = _load_report(args.report)
            config = RunConfig.from_echo(
                saved["provenance"]["config"],
                output=getattr(args, "output", "json"),
                workers=getattr(args, "workers", 1),
            )
            doc = run(config)
            sys.stdout.write(render(doc, config.output))
            if args.check and _json(report_body(doc)) != _json(report_body(saved)):
                print("replay: report body differs from the saved report", file=sys.stderr)
                return 1
            return 0 if doc["passed"] else 1
        config = _config_from_args(args)
        if getattr(args, "save_config", None):
            with open(args.save_config, "w") as fh:
                fh.write(config.to_text())
        doc = run(config)
    except UsageError as exc:
        print(f"solab: error: {exc}", file=sys.stderr)
        print(f"solab: remedy: {exc.remedy}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"solab: error: {exc}", file=sys.stderr)
        print("solab: remedy: check that the file exists and is readable", file=sys.stderr)
        return 2
    sys.stdout.write(render(doc, config.output))
    if not doc["passed"]:
        print("solab: failed checks: " + json.dumps(doc["failures"]), file=sys.stderr)
    return 0 if doc["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
