"""``qfla`` command line: run or check workspace files.

Exit status: 0 when every task passes, 1 when any task fails, 2 for
unreadable input or bad usage.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .errors import WorkspaceError
from .frobenius import SYMBOLIC_MAX_DIM
from .tasks import RunOptions, UsageProblem, render_report, run_document
from .workspace import COMMANDS, Step, Task, parse_workspace

EXIT_USAGE = 2


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as err:
        click.echo(f"error: cannot read {path}: {err}", err=True)
        sys.exit(EXIT_USAGE)
    try:
        return parse_workspace(text)
    except WorkspaceError as err:
        click.echo(f"{path}: {err.kind} error: {err}", err=True)
        sys.exit(EXIT_USAGE)


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Exact checks for quasi-Frobenius Lie algebras, Lie bialgebras and doubles."""


@main.command()
@click.argument("workspace", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for the Frobenius functional search.")
@click.option("--machine", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Also write one JSON record per task to this file.")
@click.option("--max-dim", type=click.IntRange(min=0), default=SYMBOLIC_MAX_DIM,
              show_default=True, help="Largest dimension for the symbolic determinant.")
@click.option("--command", "-c", "commands", multiple=True, metavar="'CMD NAME...'",
              help="Run this command instead of the file's tasks (repeatable).")
def run(workspace: str, seed: int, machine: str | None, max_dim: int, commands) -> None:
    """Execute the tasks in WORKSPACE and report one line per task."""
    doc = _load(workspace)
    tasks = None
    if commands:
        tasks = []
        for text in commands:
            words = text.split()
            if not words or words[0] not in COMMANDS:
                raise click.UsageError(f"unknown command {text!r}; choose from {', '.join(COMMANDS)}")
            missing = [w for w in words[1:] if w not in doc.symbols]
            if missing:
                raise click.UsageError(f"no section named {missing[0]!r}")
            tasks.append(Task(text, (Step(words[0], tuple(words[1:])),)))
    try:
        report = run_document(doc, RunOptions(seed=seed, max_dim=max_dim), tasks)
    except UsageProblem as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(render_report(report), nl=False)
    if machine:
        Path(machine).write_text(render_report(report, machine=True), encoding="utf-8")
    sys.exit(report.exit_code)


@main.command()
@click.argument("workspace", type=click.Path(exists=True, dir_okay=False))
def check(workspace: str) -> None:
    """Parse WORKSPACE and list its sections without running anything."""
    doc = _load(workspace)
    for s in doc.sections:
        refs = "".join(f" {k} {n}" for k, n in s.refs)
        click.echo(f"{s.kind} {s.name}{refs}")
    click.echo(f"OK: {len(doc.sections)} section(s)")


if __name__ == "__main__":  # pragma: no cover
    main()
