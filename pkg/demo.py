#!/usr/bin/env python3
"""
Demo Script - Phi Bounds Demonstration

This script walks through the headline numbers: the error of every bound
at a few abscissae, the maximum error of the proposed bound and its
location, the crossover against Polya and the approximation ratio.
"""

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from analysis import crossover_report, error_at, error_ratio_report, h_prime_root
from bounds import BoundKind, default_registry
from config import configure_logging

console = Console()

DEMO_ABSCISSAE = (0.5, 1.5, 2.9, 4.7, 6.5)


def show_error_table() -> None:
    """Signed errors of every registered bound."""
    table = Table(title="h_U(x) = Phi_U(x) - Phi(x)")
    table.add_column("bound", style="bold")
    for x in DEMO_ABSCISSAE:
        table.add_column(f"x={x}", justify="right")

    for name in default_registry.list_bounds():
        cells = []
        for x in DEMO_ABSCISSAE:
            row = error_at(name, x)
            style = "red" if row.error < 0 else "green"
            marker = "*" if row.out_of_validity else ""
            cells.append(f"[{style}]{row.error:.3e}{marker}[/{style}]")
        table.add_row(name, *cells)
    console.print(table)
    console.print("[dim]* outside the validity interval[/dim]")


def run_demo() -> None:
    """Run demonstration of the bound analysis."""
    configure_logging()
    console.print(Panel(Text("Upper bounds of the standard normal CDF", style="bold blue"), title="Demo", border_style="blue"))

    show_error_table()

    console.print("\n[yellow]Locating the maximum error of the proposed bound...[/yellow]")
    ratio = error_ratio_report()
    peak = ratio.numerator
    console.print(f"  max |h_EI| = {abs(peak.value):.4e} at x = {peak.location:.5f}")
    root = h_prime_root((2.0, 4.0))
    console.print(f"  root of h'  = {root.location:.5f} ({root.iterations} Brent iterations)")
    console.print(f"  max |h*_EI| = {abs(ratio.denominator.value):.4e}, ratio {ratio.ratio:.3f}")

    crossover = crossover_report()
    console.print("\n[yellow]Crossover against Polya[/yellow]")
    console.print(f"  exact   {crossover.exact:.5f} (sign flip at {crossover.flip_location:.5f})")
    status = "[green]consistent[/green]" if crossover.printed_consistent else "[red]inconsistent[/red]"
    console.print(f"  printed {crossover.printed:.5f} {status}")

    bercu = BoundKind.BERCU.validity_interval
    console.print(f"\n[dim]Bercu is only claimed on [{bercu.lower}, {bercu.upper}].[/dim]")
    console.print("\n[bold green]Demo completed![/bold green]")
    console.print("\nTo reproduce everything:")
    console.print("  python main.py claims")
    console.print("  python main.py table --compare --format markdown")


if __name__ == "__main__":
    run_demo()
