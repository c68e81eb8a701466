"""Terminal summaries for filter runs and the fixture listing."""

import logging
from typing import Optional, Sequence

from rich import box
from rich.console import Console
from rich.table import Table

from ..criteria.verdict import CRITERIA
from ..report import RunStats

logger = logging.getLogger(__name__)


class RunSummary:
    """Render run statistics as rich tables on stderr, keeping stdout for JSONL."""

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console(stderr=True)

    def display_stats(self, stats: RunStats) -> None:
        table = Table(title="Filter run", show_header=False, box=box.ROUNDED, border_style="cyan")
        table.add_column("Key", style="bold", width=16)
        table.add_column("Value", justify="right")
        table.add_row("Graphs read", str(stats.graphs_read))
        table.add_row("Excluded", f"[red]{stats.excluded_count}[/red]")
        table.add_row("Survivors", f"[green]{stats.survivor_count}[/green]")
        table.add_row("Errors", f"[yellow]{stats.error_count}[/yellow]")
        table.add_row("Wall time", f"{stats.wall_time_s:.2f} s")
        table.add_row("Throughput", f"{stats.throughput:.1f} graphs/s")
        self.console.print(table)

        if stats.first_rejections or stats.decisive_rejections:
            criteria = Table(show_header=True, box=box.SIMPLE, border_style="yellow")
            criteria.add_column("Criterion", style="bold magenta")
            criteria.add_column("First rejections", justify="right")
            criteria.add_column("Decisive", justify="right")
            for name in CRITERIA:
                criteria.add_row(
                    name,
                    str(stats.first_rejections.get(name, 0)),
                    str(stats.decisive_rejections.get(name, 0)),
                )
            self.console.print(criteria)

    def display_fixtures(self, rows: Sequence[tuple]) -> None:
        """List fixtures as (name, vertices, edges, faces) rows."""
        table = Table(title="Built-in fixtures", box=box.SIMPLE)
        table.add_column("Name", style="cyan")
        table.add_column("n", justify="right")
        table.add_column("|E|", justify="right")
        table.add_column("|F|", justify="right")
        for row in rows:
            table.add_row(*(str(cell) for cell in row))
        self.console.print(table)
