"""
Scanning families for the positivity conjectures
================================================

Run the non-negativity and log-concavity checks over every connected simple
graph on at most 6 vertices and over a uniform grid, then save the report.
"""

import tempfile
from pathlib import Path

from matkls.lab import ScanReport, generate_family, scan

checks = ("nonneg", "logconcave", "internal_zeros", "constant_term")

graphic = scan(generate_family("graphic", max_vertices=6, min_vertices=2), checks, workers=2)
print("graphic:", graphic.summary["records"], "matroids", graphic.summary["counts"])

uniform = scan(generate_family("uniform", max_md=8), checks)
print("uniform:", uniform.summary["records"], "matroids", uniform.summary["counts"])

# reports are JSON lines and can be re-checked from the stored coefficients alone
path = Path(tempfile.mkdtemp()) / "graphic.jsonl"
path.write_text(graphic.to_jsonl())
again = ScanReport.from_jsonl(path.read_text())
print("reloaded report self-consistent:", again.self_consistent())
