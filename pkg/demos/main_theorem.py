"""
Quadri products against concatenation
=====================================

A quadri product with a concatenated right factor expands as a sum over the
cuts of the left factor.  Below is ``u ↗ (vw) = Σ (u¹ ↘ v)(u² ∧ w)`` on one
triple, then the four identity families on every small triple.
"""
from shuffle_quadri import InstanceSpec, check_law, ne, se, sweedler_sum, wedge, word_of_string
from shuffle_quadri.laws import GROUPS

u, v, w = (word_of_string(x) for x in ("ab", "c", "d"))
print("u ↗ (vw)        =", ne(u, v + w))
print("Σ (u¹↘v)(u²∧w)  =", sweedler_sum(se, wedge, u, v, w))

spec = InstanceSpec(alphabet_size=2, max_total_length=6)
for name in GROUPS["thm_main"]:
    report = check_law(name, spec)
    print(f"{name}: passed={report.passed} on {report.instances_checked} triples")
