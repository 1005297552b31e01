"""
Running the whole catalogue
===========================

Every law is checked exhaustively over a finite universe of words.  A
failed law carries the first counterexample found.
"""
from collections import Counter

from shuffle_quadri import InstanceSpec, run_suite

reports = run_suite(InstanceSpec(alphabet_size=2, max_total_length=5))
print(Counter(r.passed for r in reports))

slowest = max(reports, key=lambda r: r.elapsed)
print(f"slowest: {slowest.law} ({slowest.elapsed * 1000:.0f} ms, {slowest.instances_checked} instances)")

for r in reports:
    for note in r.notes:
        print(f"{r.law}: {note}")
