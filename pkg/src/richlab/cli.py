"""Command-line front end.

Three commands: ``run`` executes a registered experiment and exits nonzero
if any of its checks fail; ``analyze`` computes the counting profile of an
arbitrary word expression under a symmetry group; ``gen`` materializes a
prefix.  Reports render as text, JSON, or a directory of CSV files, with
figures written next to the CSV output unless plotting is disabled.
"""

from __future__ import annotations

from pathlib import Path

import click

from .experiments import experiment_names, run_experiment
from .exprs import parse_group, parse_word
from .report import Report, Series, render_csv, render_json, render_text
from .richness import RELIABLE_RATIO, analyze_profile


def _emit(report: Report, fmt: str, out: str | None, plot: bool) -> None:
    if fmt == "csv":
        if out is None:
            raise click.UsageError("--format csv needs --out DIRECTORY")
        for p in render_csv(report, Path(out)):
            click.echo(f"wrote {p}")
    else:
        rendered = render_text(report) if fmt == "text" else render_json(report)
        if out is None:
            click.echo(rendered, nl=False)
        else:
            path = Path(out)
            if path.parent != Path(""):
                path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(rendered)
            click.echo(f"wrote {path}")
    if plot and out is not None:
        from .figures import render_figures

        directory = Path(out) if fmt == "csv" else Path(out).parent
        for p in render_figures(report, directory):
            click.echo(f"wrote {p}")


@click.group()
def main() -> None:
    """Constructions and audits for palindrome-rich words."""


@main.command()
@click.argument("experiment")
@click.option(
    "--param",
    "params",
    multiple=True,
    metavar="K=V",
    help="Override an experiment parameter; repeatable.",
)
@click.option("--horizon", type=int, default=None, help="Prefix length to materialize.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
@click.option("--out", type=click.Path(), default=None, help="Output file (text/json) or directory (csv).")
@click.option("--plot/--no-plot", default=True, help="Render PNG figures next to --out.")
def run(experiment: str, params: tuple[str, ...], horizon: int | None, fmt: str, out: str | None, plot: bool) -> None:
    """Run a registered experiment and exit nonzero on any failed check.

    Known experiments: use an invalid name to get the full catalog.
    """
    parsed: dict[str, str] = {}
    for item in params:
        if "=" not in item:
            raise click.UsageError(f"--param expects K=V, got {item!r}")
        key, value = item.split("=", 1)
        parsed[key.strip()] = value.strip()
    try:
        report = run_experiment(experiment, parsed, horizon)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    _emit(report, fmt, out, plot)
    if not report.passed:
        raise SystemExit(1)


@main.command()
@click.option("--word", "word_expr", required=True, metavar="EXPR")
@click.option("--group", "group_expr", required=True, metavar="GEXPR")
@click.option("--horizon", type=int, default=100_000, show_default=True)
@click.option("--n-max", type=int, default=None, help="Largest factor length; defaults to horizon/100 capped at 100.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
@click.option("--out", type=click.Path(), default=None)
@click.option("--plot/--no-plot", default=True)
def analyze(word_expr: str, group_expr: str, horizon: int, n_max: int | None, fmt: str, out: str | None, plot: bool) -> None:
    """Complexity, palindrome and slack profile of a word under a group."""
    if n_max is None:
        n_max = max(1, min(100, horizon // RELIABLE_RATIO))
    try:
        source = parse_word(word_expr)
        group = parse_group(group_expr, source.modulus)
        prof = analyze_profile(source, group, n_max, horizon)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    report = Report(
        "analyze",
        params={"word": prof.word_expr, "group": prof.group_label, "horizon": prof.horizon},
    )
    report.add_fact("letters seen", "".join(map(str, prof.letters)))
    for n, frac in prof.closure.items():
        report.add_fact(f"closure at n={n}", frac)
    zero = prof.zero_slack_through()
    report.add_fact("zero slack through n_max", zero)
    if not zero:
        report.add_fact("first nonzero slack (n, value)", str(prof.first_nonzero_slack()))
    ns = list(range(1, n_max + 1))
    report.add_series(Series("C", list(range(n_max + 2)), prof.complexity, horizon=prof.horizon))
    report.add_series(Series("dC", ns, prof.delta_complexity[:n_max], horizon=prof.horizon))
    for shift, counts in prof.pal.items():
        report.add_series(
            Series(f"P[psi_{shift}]", list(range(n_max + 2)), counts, horizon=prof.horizon)
        )
    report.add_series(
        Series(
            "slack",
            ns,
            prof.slack,
            horizon=prof.horizon,
            reliable=n_max * RELIABLE_RATIO <= prof.horizon,
        )
    )
    report.check("slack is nonnegative at every length", all(s >= 0 for s in prof.slack))
    _emit(report, fmt, out, plot)
    if not report.passed:
        raise SystemExit(1)


@main.command()
@click.option("--word", "word_expr", required=True, metavar="EXPR")
@click.option("--length", type=int, required=True)
@click.option("--out", type=click.Path(), default=None)
def gen(word_expr: str, length: int, out: str | None) -> None:
    """Materialize a prefix of a word expression."""
    try:
        source = parse_word(word_expr)
        word = source.prefix(length)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    text = str(word) if word.modulus <= 10 else " ".join(str(a) for a in word)
    if out is None:
        click.echo(text)
    else:
        Path(out).write_text(text + "\n")
        click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
