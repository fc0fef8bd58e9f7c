from congmonoid.cli import solution_row
from congmonoid.monoid import indecomposables
from congmonoid.plotting import plot_degree_profile, plot_summary
from congmonoid.verify import summary_table


def test_summary_figure(tmp_path):
    path = plot_summary(summary_table(8), tmp_path / "f.png")
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_degree_profile_figure(tmp_path):
    rows = [solution_row(a) for a in indecomposables(6)]
    path = plot_degree_profile(rows, 6, tmp_path / "p.svg")
    assert b"<svg" in path.read_bytes()[:500]
