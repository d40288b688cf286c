"""Command-line entry point.

Exit status: 0 for an ordinary result, 2 when a run *finds* something (a
counterexample candidate, an illegal rewrite, a search violation), 1 for
errors of any kind, including usage errors.
"""

from __future__ import annotations

import json
import sys

import click

from . import rewrite, semantics
from .bealcore import BealClaim, Classification, Policy, PowerTooLarge, adjudicate
from .search import SearchBounds, TableTooLarge, search_solutions
from .szval import RoundingMode, parse_value

EXIT_OK, EXIT_ERROR, EXIT_FOUND = 0, 1, 2

FORMATS = click.Choice(["text", "json"])
ROUNDING = click.Choice([m.value for m in RoundingMode])
POLICIES = click.Choice([p.value for p in Policy])


class InputError(click.ClickException):
    exit_code = EXIT_ERROR


class _Group(click.Group):
    """Maps every click error onto exit status 1; 2 is reserved for findings."""

    def main(self, args=None, prog_name=None, complete_var=None,
             standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.ClickException as exc:
            exc.show()
            rv = EXIT_ERROR
        except click.Abort:
            click.echo("Aborted!", err=True)
            rv = EXIT_ERROR
        if not standalone_mode:
            return rv
        sys.exit(rv or 0)


@click.group(cls=_Group)
def cli():
    """Signed-zero float semantics and Beal-equation adjudication."""


# --- adjudicate -----------------------------------------------------------

CLAIM_FIELDS = ("A", "B", "C", "x", "y", "z")


def _claim_from_record(rec: dict, where: str) -> tuple[BealClaim, Policy | None]:
    missing = [f for f in CLAIM_FIELDS if f not in rec]
    if missing:
        raise InputError(f"{where}: missing field {missing[0]!r}")
    unknown = sorted(set(rec) - set(CLAIM_FIELDS) - {"policy"})
    if unknown:
        raise InputError(f"{where}: unknown field {unknown[0]!r}")
    values = {}
    for f in CLAIM_FIELDS:
        raw = rec[f]
        try:
            if f in "ABC":
                values[f] = raw
                BealClaim.of(raw, 1, 1, 1, 1, 1)
            else:
                if isinstance(raw, bool) or not str(raw).strip().isdecimal():
                    raise ValueError(f"not a natural number: {raw!r}")
                values[f] = int(raw)
                if values[f] < 1:
                    raise ValueError(f"exponent must be >= 1, got {raw!r}")
        except (ValueError, TypeError) as exc:
            raise InputError(f"{where}: field {f!r}: {exc}") from None
    policy = None
    if rec.get("policy") is not None:
        try:
            policy = Policy.parse(str(rec["policy"]))
        except ValueError:
            raise InputError(f"{where}: field 'policy': unknown policy {rec['policy']!r}") from None
    return BealClaim.of(*(values[f] for f in CLAIM_FIELDS)), policy


def read_claims(stream, name: str) -> list[tuple[BealClaim, Policy | None]]:
    """JSON Lines: one object per line; blank lines and ``#`` comments skipped."""
    claims = []
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        where = f"{name}: record at line {lineno}"
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"{where}: invalid JSON ({exc.msg})") from None
        if not isinstance(rec, dict):
            raise InputError(f"{where}: expected an object")
        claims.append(_claim_from_record(rec, where))
    return claims


def _inline_claim(text: str, index: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (6, 7):
        raise InputError(f"--claim #{index}: expected A,B,C,x,y,z[,policy], got {text!r}")
    rec = dict(zip(CLAIM_FIELDS, parts))
    if len(parts) == 7:
        rec["policy"] = parts[6]
    return _claim_from_record(rec, f"--claim #{index}")


def _render_report(report, index: int) -> str:
    c = report.claim

    def base(v):
        return f"({v})" if str(v)[0] in "+-" else str(v)

    lhs_text = f"{base(c.A)}^{c.x} + {base(c.B)}^{c.y} = {report.lhs}"
    return "\n".join([
        f"claim {index}: {c} [policy {report.policy.value}]",
        f"  exponents > 2: {'yes' if report.exponents_valid else 'no'}",
        "  admissible: " + " ".join(f"{k}={'yes' if v else 'no'}"
                                    for k, v in report.base_admissible.items()),
        f"  equation: {lhs_text}, {base(c.C)}^{c.z} = {report.rhs}, "
        f"{'holds' if report.equation_holds else 'fails'}",
        "  common prime factor: " + (str(report.common_prime_factor)
                                     if report.common_prime_factor is not None else
                                     "none (all bases zero)" if report.all_bases_zero else "none"),
        f"  verdict: {report.summary()}",
    ])


@cli.command("adjudicate")
@click.argument("claims_file", type=click.File("r"), required=False)
@click.option("--claim", "inline", multiple=True, metavar="A,B,C,x,y,z[,POLICY]",
              help="Inline claim; repeatable.")
@click.option("--policy", type=POLICIES, default=Policy.STRICT.value, show_default=True,
              help="Positive-integer policy for records that name none.")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def adjudicate_cmd(claims_file, inline, policy, fmt):
    """Adjudicate claims read from CLAIMS_FILE (JSON Lines, '-' for stdin) and/or --claim."""
    claims = []
    if claims_file is not None:
        claims += read_claims(claims_file, claims_file.name)
    claims += [_inline_claim(text, i) for i, text in enumerate(inline, 1)]
    if not claims:
        raise click.UsageError("no claims given (pass a file, '-' or --claim)")
    default_policy = Policy(policy)
    found = False
    for i, (claim, own_policy) in enumerate(claims, 1):
        try:
            report = adjudicate(claim, own_policy or default_policy)
        except PowerTooLarge as exc:
            raise InputError(f"claim {i}: {exc}") from None
        found |= report.classification is Classification.COUNTEREXAMPLE_CANDIDATE
        if fmt == "json":
            click.echo(json.dumps(report.to_record(), sort_keys=True))
        else:
            click.echo(_render_report(report, i))
    return EXIT_FOUND if found else EXIT_OK


# --- search ---------------------------------------------------------------

@cli.command("search")
@click.option("--max-base", type=int, required=True, help="Largest base N (>= 1).")
@click.option("--max-exp", type=int, required=True, help="Largest exponent K (>= 3).")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def search_cmd(max_base, max_exp, workers, fmt):
    """Exhaustively search A^x + B^y = C^z with bases <= N and 3 <= exponents <= K."""
    try:
        bounds = SearchBounds(max_base, max_exp)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    try:
        result = search_solutions(bounds, workers=workers)
    except TableTooLarge as exc:
        raise InputError(str(exc)) from None
    if fmt == "json":
        click.echo(json.dumps(result.to_record(), sort_keys=True))
    else:
        click.echo(f"search N={max_base} K={max_exp}")
        if not result.solutions:
            click.echo("no solutions")
        for s in result.solutions:
            cp = "NONE" if s.common_prime is None else s.common_prime
            click.echo(f"  {s}  common prime {cp}")
        click.echo(f"{len(result.solutions)} solutions, {len(result.violations)} violations")
    return EXIT_FOUND if result.violations else EXIT_OK


# --- semantics-table ------------------------------------------------------

@cli.command("semantics-table")
@click.option("--rounding", type=ROUNDING, default=RoundingMode.TO_NEAREST.value,
              show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def semantics_cmd(rounding, fmt):
    """Print every signed-zero rule with model and host results."""
    rm = RoundingMode(rounding)
    rows = semantics.semantics_table(rm)
    if fmt == "json":
        for row in rows:
            click.echo(json.dumps(row.to_record(), sort_keys=True))
    else:
        click.echo(f"# x = {semantics.X}, rounding = {rm.value}")
        for row in rows:
            click.echo(str(row))
        click.echo(f"# {sum(r.ok for r in rows)}/{len(rows)} rules OK")
    return EXIT_OK if all(r.ok for r in rows) else EXIT_ERROR


# --- check-rewrite --------------------------------------------------------

# a rule may begin with "-"; anything that is not a real option is the rule
# itself and still has to parse
@cli.command("check-rewrite", context_settings={"ignore_unknown_options": True})
@click.argument("rule")
@click.option("--rounding", type=ROUNDING, default=RoundingMode.TO_NEAREST.value,
              show_default=True)
@click.option("--domain", default=None, metavar="V1,V2,...",
              help="Test values (default: 1,-1,2.5,-2.5,+0,-0,+inf,-inf,nan).")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def check_rewrite_cmd(rule, rounding, domain, fmt):
    """Decide whether RULE ('LHS => RHS') preserves bit-exact results."""
    if rule.startswith("--") and "=>" not in rule:
        raise click.NoSuchOption(rule.split("=")[0])
    try:
        parsed = rewrite.parse_rule(rule)
    except rewrite.RewriteParseError as exc:
        raise InputError(f"cannot parse rule: {exc}") from None
    values = rewrite.DEFAULT_DOMAIN
    if domain is not None:
        try:
            values = tuple(parse_value(v) for v in domain.split(","))
        except ValueError as exc:
            raise InputError(f"--domain: {exc}") from None
    try:
        verdict = rewrite.check_rewrite(parsed, values, RoundingMode(rounding))
    except rewrite.TooManyAssignments as exc:
        raise InputError(str(exc)) from None
    if fmt == "json":
        click.echo(json.dumps({"rule": str(parsed), **verdict.to_record()}, sort_keys=True))
    else:
        click.echo(str(verdict))
    return EXIT_OK if verdict.legal else EXIT_FOUND


def main(argv=None):
    cli.main(argv, prog_name="szbeal")


if __name__ == "__main__":
    main()
