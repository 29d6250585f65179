#!/usr/bin/env python3
"""
powersum-cert - Command-Line Interface

Polynomial printing, lemma sweeps, finiteness certificates and bounded
Diophantine search from one entry point.

Exit codes: 0 on completion (including FAIL verdicts), 2 on usage errors.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import json
import sys
from dataclasses import dataclass
from functools import wraps
from typing import Any, Callable, List, Optional

import click
import psutil
from tabulate import tabulate

from ..analytics.dioph_search import solve
from ..analytics.reduction import (
    certify as certify_instance,
    contradiction_probe_S,
    contradiction_probe_T,
    family_for_theorem,
    theorem_for,
)
from ..analytics.root_structure import (
    check_lemma3,
    check_lemma4,
    check_lemma5_rational,
    check_lemma6,
    default_shifts,
)
from ..core.classical_polys import (
    bernoulli_number,
    bernoulli_poly,
    configure_tables,
    euler_number_at_zero,
    euler_poly,
)
from ..core.constants import (
    EXIT_USAGE_ERROR,
    LEMMA4_EXCLUDED_K,
    LEMMA4_MIN_K,
    LEMMA5_MIN_K,
    LOG_LEVELS,
)
from ..core.data_structures import (
    RHS,
    PowerRHS,
    PowerSumFamily,
    ProgressionParams,
    QuadraticRHS,
    SearchBox,
)
from ..core.engine_config import EngineConfig
from ..core.exceptions import PowerSumCertError, USAGE_ERRORS
from ..core.polynomial import format_poly
from ..core.power_sums import build_family, direct_alt_power_sum, direct_power_sum
from ..core.rational import format_rational, parse_rational
from ..utils.logger import CertLogger, configure_global_logger
from .config import config as config_group

FAMILY_CHOICES = ["S", "T+", "T-"]


class CliUsageError(click.ClickException):
    """Usage error reported with exit code 2"""

    exit_code = EXIT_USAGE_ERROR


@dataclass
class CliContext:
    """State shared by every subcommand"""

    config: EngineConfig
    json_output: bool
    workers: int
    logger: CertLogger

    def emit(self, payload: Any, render_text: Callable[[], str]):
        if self.json_output:
            click.echo(json.dumps(payload, indent=2))
        else:
            click.echo(render_text())


def reports_errors(func: Callable) -> Callable:
    """Map package errors to click exceptions with the documented exit codes"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except USAGE_ERRORS as e:
            raise CliUsageError(str(e))
        except PowerSumCertError as e:
            raise click.ClickException(str(e))

    return wrapper


def _parse_rational_list(text: str, name: str) -> List:
    try:
        return [parse_rational(part) for part in text.split(",") if part.strip()]
    except PowerSumCertError as e:
        raise CliUsageError(f"--{name}: {e.message}")


def _parse_ell(text: Optional[str]) -> Optional[int]:
    if text is None or text.strip().lower() == "unknown":
        return None
    try:
        return int(text)
    except ValueError:
        raise CliUsageError(f"exponent must be an integer or 'unknown', got {text!r}")


def _parse_rhs_quad(text: str) -> QuadraticRHS:
    parts = _parse_rational_list(text, "rhs-quad")
    if len(parts) != 3:
        raise CliUsageError("--rhs-quad expects A,B,C")
    return QuadraticRHS(*parts)


def _parse_rhs_power(text: str) -> PowerRHS:
    pieces = [piece.strip() for piece in text.split(",")]
    if len(pieces) != 3:
        raise CliUsageError("--rhs-power expects c,d,l (l may be 'unknown')")
    c, d = _parse_rational_list(",".join(pieces[:2]), "rhs-power")
    return PowerRHS(c, d, _parse_ell(pieces[2]))


def _worker_count(threads: Optional[int], config: EngineConfig, logger: CertLogger) -> int:
    if threads is None:
        return config.effective_workers
    if threads < 1:
        raise CliUsageError("--threads must be at least 1")
    available = psutil.cpu_count() or 1
    if threads > available:
        logger.warning("Capping worker count at available CPUs", requested=threads,
                       available=available)
        return available
    return threads


@click.group()
@click.option("--json", "json_output", is_flag=True, help="Emit JSON instead of text")
@click.option("--threads", type=int, default=None, help="Cap on parallel worker processes")
@click.option("--config", "config_file", type=click.Path(), default=None,
              help="Configuration file (YAML or JSON)")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help="Logging level (default from configuration)")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
@click.version_option(package_name="powersum-cert", message="%(prog)s %(version)s")
@click.pass_context
def main(ctx: click.Context, json_output: bool, threads: Optional[int], config_file: Optional[str],
         log_level: Optional[str], verbose: bool):
    """
    powersum-cert - exact power sums of arithmetic progressions

    Build Bernoulli, Euler and power-sum polynomials, check root-structure
    lemmas, issue finiteness certificates and search bounded boxes for
    integer solutions.

    Examples:
        powersum-cert bernoulli --k 4
        powersum-cert --json solve --family S --a 1 --b 0 --k 2 --rhs-power 1,0,2 --xmin 0 --xmax 50
        powersum-cert lemma-check --lemma 6 --kmax 40
    """
    try:
        config = EngineConfig.from_file(config_file) if config_file else EngineConfig.from_environment()
    except PowerSumCertError as e:
        raise CliUsageError(str(e))

    level = "DEBUG" if verbose else (log_level or config.log_level)
    logger = configure_global_logger(level=level, log_file=config.log_file,
                                     format_type=config.log_format, stream=sys.stderr)
    workers = _worker_count(threads, config, logger)
    ctx.obj = CliContext(config=config, json_output=json_output, workers=workers, logger=logger)

    if ctx.invoked_subcommand != "config":
        configure_tables(config.max_k)
    logger.debug("CLI started", command=ctx.invoked_subcommand, workers=workers)


main.add_command(config_group, name="config")


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

@main.command()
@click.option("--k", "k", type=click.IntRange(min=0), required=True, help="Index k >= 0")
@click.pass_obj
@reports_errors
def bernoulli(obj: CliContext, k: int):
    """Print the Bernoulli polynomial B_k(x)"""
    poly = bernoulli_poly(k)
    obj.emit(
        {"k": k, "poly": format_poly(poly), "number": format_rational(bernoulli_number(k))},
        lambda: format_poly(poly),
    )


@main.command()
@click.option("--k", "k", type=click.IntRange(min=0), required=True, help="Index k >= 0")
@click.pass_obj
@reports_errors
def euler(obj: CliContext, k: int):
    """Print the Euler polynomial E_k(x)"""
    poly = euler_poly(k)
    obj.emit(
        {"k": k, "poly": format_poly(poly),
         "value_at_zero": format_rational(euler_number_at_zero(k))},
        lambda: format_poly(poly),
    )


def _progression_options(func: Callable) -> Callable:
    func = click.option("--k", "k", type=int, required=True, help="Exponent k")(func)
    func = click.option("--b", "b", type=int, required=True, help="Offset b, coprime to a")(func)
    func = click.option("--a", "a", type=int, required=True, help="Nonzero step a")(func)
    return func


@main.command()
@click.option("--family", type=click.Choice(FAMILY_CHOICES, case_sensitive=False), required=True)
@_progression_options
@click.option("--eval", "eval_at", type=click.IntRange(min=1), default=None,
              help="Also evaluate at n and compare with literal summation")
@click.pass_obj
@reports_errors
def powersum(obj: CliContext, family: str, a: int, b: int, k: int, eval_at: Optional[int]):
    """Print S, T+ or T- for the progression a*i + b"""
    fam = PowerSumFamily.from_label(family)
    params = ProgressionParams(a, b, k)
    poly = build_family(fam, params)
    payload = {"family": fam.value, "params": params.to_dict(), "poly": format_poly(poly)}
    lines = [format_poly(poly)]

    if eval_at is not None:
        value = poly.eval(eval_at)
        if fam is PowerSumFamily.S:
            oracle, applies = direct_power_sum(params, eval_at), True
        else:
            oracle = direct_alt_power_sum(params, eval_at)
            applies = (eval_at % 2 == 1) == (fam is PowerSumFamily.T_PLUS)
        payload["eval"] = {
            "n": eval_at,
            "value": format_rational(value),
            "oracle": format_rational(oracle),
            "oracle_applies": applies,
            "matches": value == oracle,
        }
        lines.append(f"value({eval_at}) = {format_rational(value)}")
        suffix = "" if applies else "  (parity of n does not match this family)"
        lines.append(f"oracle({eval_at}) = {format_rational(oracle)}{suffix}")

    obj.emit(payload, lambda: "\n".join(lines))


# ---------------------------------------------------------------------------
# Lemma sweeps
# ---------------------------------------------------------------------------

def _lemma_table(records) -> str:
    rows = []
    for record in records:
        data = record.to_dict()
        counts = ", ".join(f"{key}={value}" for key, value in data["counts"].items())
        rows.append([data["k"], data.get("s", ""), counts, data["verdict"],
                     data["multiple_factor"] or "1"])
    return tabulate(rows, headers=["k", "s", "counts", "verdict", "multiple_factor"])


@main.command("lemma-check")
@click.option("--lemma", type=click.Choice(["3", "4", "5", "6"]), required=True)
@click.option("--kmax", type=int, default=None, help="Largest k of the sweep")
@click.option("--k", "k", type=int, default=None, help="Single k (lemmas 4 and 5)")
@click.option("--shifts", default=None, help="Comma-separated rational shifts s1,s2,...")
@click.pass_obj
@reports_errors
def lemma_check(obj: CliContext, lemma: str, kmax: Optional[int], k: Optional[int],
                shifts: Optional[str]):
    """Check the root structure of Bernoulli and Euler polynomials"""
    if lemma in ("3", "6"):
        if kmax is None:
            raise CliUsageError(f"--lemma {lemma} needs --kmax")
        sweep = check_lemma3 if lemma == "3" else check_lemma6
        records = sweep(kmax, workers=obj.workers)
    else:
        if k is None and kmax is None:
            raise CliUsageError(f"--lemma {lemma} needs --k or --kmax")
        family = "bernoulli" if lemma == "4" else "euler"
        check = check_lemma4 if lemma == "4" else check_lemma5_rational
        if k is not None:
            ks = [k]
        elif lemma == "4":
            ks = [j for j in range(LEMMA4_MIN_K, kmax + 1) if j not in LEMMA4_EXCLUDED_K]
        else:
            ks = list(range(LEMMA5_MIN_K, kmax + 1))
        explicit = _parse_rational_list(shifts, "shifts") if shifts else None
        records = []
        for j in ks:
            values = explicit if explicit is not None else default_shifts(
                family, j, obj.config.shift_values(), obj.config.critical_values()
            )
            records.extend(check(j, values, workers=obj.workers))

    obj.emit([record.to_dict() for record in records], lambda: _lemma_table(records))


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

def _certificate_text(certificate) -> str:
    data = certificate.to_dict()
    header = [
        ["theorem", data["theorem_id"]],
        ["family", data["family"]],
        ["(a, b, k)", f"({certificate.params.a}, {certificate.params.b}, {certificate.params.k})"],
        ["reduced polynomial", data["reduced_poly"]],
        ["degree / height", f"{data['degree']} / {data['naive_height']}"],
    ]
    for name, value in data["shift_constants"].items():
        if value is not None:
            header.append([name, value])
    header.append(["verdict", data["verdict"]])
    checks = [
        [check["lemma_id"], check["claim"],
         ", ".join(f"{key}={value}" for key, value in check["witness"].items()), check["verdict"]]
        for check in data["hypothesis_checks"]
    ]
    text = tabulate(header, tablefmt="plain")
    if checks:
        text += "\n\n" + tabulate(checks, headers=["lemma", "claim", "witness", "verdict"])
    for note in data["notes"]:
        text += f"\nnote: {note}"
    return text


def _certify_rhs(quadratic: bool, coef_a, coef_b, coef_c, c, d, ell) -> RHS:
    if quadratic:
        return QuadraticRHS(
            parse_rational(coef_a) if coef_a is not None else 1,
            parse_rational(coef_b) if coef_b is not None else 0,
            parse_rational(coef_c) if coef_c is not None else 0,
        )
    return PowerRHS(
        parse_rational(c) if c is not None else 1,
        parse_rational(d) if d is not None else 0,
        _parse_ell(ell),
    )


@main.command()
@click.option("--theorem", type=click.IntRange(1, 6), default=None, help="Theorem id 1..6")
@click.option("--family", type=click.Choice(FAMILY_CHOICES, case_sensitive=False), default=None,
              help="Family, with the right-hand side kind read from the flags")
@_progression_options
@click.option("--A", "coef_a", default=None, help="Quadratic coefficient A (p/q)")
@click.option("--B", "coef_b", default=None, help="Quadratic coefficient B (p/q)")
@click.option("--C", "coef_c", default=None, help="Quadratic coefficient C (p/q)")
@click.option("--c", "c", default=None, help="Power coefficient c (p/q)")
@click.option("--d", "d", default=None, help="Power constant d (p/q)")
@click.option("--l", "ell", default=None, help="Exponent ell >= 2 or 'unknown'")
@click.pass_obj
@reports_errors
def certify(obj: CliContext, theorem: Optional[int], family: Optional[str], a: int, b: int, k: int,
            coef_a, coef_b, coef_c, c, d, ell):
    """Issue a finiteness certificate for one instance"""
    quad_given = any(v is not None for v in (coef_a, coef_b, coef_c))
    power_given = any(v is not None for v in (c, d, ell))
    if quad_given and power_given:
        raise CliUsageError("quadratic (--A/--B/--C) and power (--c/--d/--l) flags are exclusive")
    if (theorem is None) == (family is None):
        raise CliUsageError("give exactly one of --theorem or --family")

    if theorem is not None:
        _, quadratic = family_for_theorem(theorem)
        if (quadratic and power_given) or (not quadratic and quad_given):
            raise CliUsageError(f"theorem {theorem} does not take those right-hand side flags")
    else:
        if not (quad_given or power_given):
            raise CliUsageError("--family needs quadratic (--A/--B/--C) or power (--c/--d/--l) flags")
        quadratic = quad_given

    params = ProgressionParams(a, b, k)
    rhs = _certify_rhs(quadratic, coef_a, coef_b, coef_c, c, d, ell)
    theorem_id = theorem if theorem is not None else theorem_for(PowerSumFamily.from_label(family), rhs)
    certificate = certify_instance(theorem_id, params, rhs, obj.config.primes)
    obj.emit(certificate.to_dict(), lambda: _certificate_text(certificate))


@main.command()
@click.option("--family", type=click.Choice(FAMILY_CHOICES, case_sensitive=False), required=True)
@_progression_options
@click.option("--d", "d", default="0", help="Constant d (p/q)")
@click.pass_obj
@reports_errors
def probe(obj: CliContext, family: str, a: int, b: int, k: int, d: str):
    """Rule out the degenerate perfect-power shape via the derivative"""
    fam = PowerSumFamily.from_label(family)
    params = ProgressionParams(a, b, k)
    value = parse_rational(d)
    if fam is PowerSumFamily.S:
        report = contradiction_probe_S(params, value)
    else:
        report = contradiction_probe_T(params, value, fam)
    data = report.to_dict()

    def render() -> str:
        roots = ", ".join(f"{r['root']} (x{r['multiplicity']})" for r in data["rational_roots"]) or "none"
        rows = [
            ["derivative", data["derivative"]],
            ["rational roots", roots],
            ["forbidden multiplicity", data["forbidden_multiplicity"]],
            ["multiple factor", data["multiple_factor"] or "1"],
            ["distinct roots of target", data["target_distinct_roots"]],
            ["verdict", data["verdict"]],
        ]
        return tabulate(rows, tablefmt="plain")

    obj.emit(data, render)


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

def _solutions_table(solutions) -> str:
    if not solutions:
        return "no solutions in box"
    rows = []
    for solution in solutions:
        data = solution.to_dict()
        rows.append([data["x"], data["y"], data.get("ell", ""), data["lhs_value"],
                     data.get("schaffer_n", "")])
    return tabulate(rows, headers=["x", "y", "ell", "lhs_value", "schaffer_n"])


@main.command("solve")
@click.option("--family", type=click.Choice(FAMILY_CHOICES, case_sensitive=False), required=True)
@_progression_options
@click.option("--rhs-quad", default=None, help="Quadratic right-hand side A,B,C")
@click.option("--rhs-power", default=None, help="Power right-hand side c,d,l (l may be 'unknown')")
@click.option("--xmin", type=int, required=True, help="First x of the box")
@click.option("--xmax", type=int, required=True, help="Last x of the box (inclusive)")
@click.option("--ellmax", type=int, default=None, help="Exponent cap when l is unknown")
@click.option("--allow-small-y", is_flag=True, help="Keep solutions with |y| <= 1")
@click.option("--require-large-y", is_flag=True, help="Keep only |y| > 1 (quadratic right-hand side)")
@click.pass_obj
@reports_errors
def solve_command(obj: CliContext, family: str, a: int, b: int, k: int, rhs_quad: Optional[str],
                  rhs_power: Optional[str], xmin: int, xmax: int, ellmax: Optional[int],
                  allow_small_y: bool, require_large_y: bool):
    """Enumerate integer solutions in a bounded box"""
    if (rhs_quad is None) == (rhs_power is None):
        raise CliUsageError("give exactly one of --rhs-quad or --rhs-power")
    if allow_small_y and require_large_y:
        raise CliUsageError("--allow-small-y and --require-large-y are exclusive")

    rhs = _parse_rhs_quad(rhs_quad) if rhs_quad is not None else _parse_rhs_power(rhs_power)
    require: Optional[bool] = None
    if allow_small_y:
        require = False
    elif require_large_y:
        require = True
    box = SearchBox(xmin, xmax, ellmax if ellmax is not None else obj.config.ell_max, require)
    params = ProgressionParams(a, b, k)

    solutions = solve(PowerSumFamily.from_label(family), params, rhs, box,
                      workers=obj.workers, chunk_size=obj.config.chunk_size)
    obj.logger.info("Search complete", solutions=len(solutions), x_min=xmin, x_max=xmax)
    obj.emit([solution.to_dict() for solution in solutions], lambda: _solutions_table(solutions))


if __name__ == "__main__":
    main()
