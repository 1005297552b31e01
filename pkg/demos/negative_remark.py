"""
Where the shuffle is not a module-algebra
=========================================

Replacing the dendriform products by the full shuffle on both sides of the
split sum breaks the identity already on three letters.
"""
from shuffle_quadri import DEFAULT_ALPHABET, InstanceSpec, check_law, sh, sweedler_sum, word_of_string

a, b, c = (word_of_string(x) for x in "abc")
split = sweedler_sum(sh, sh, a, b, c)
direct = sh(a, b + c)
print("Σ (u¹⧢v)(u²⧢w) =", split)
print("u ⧢ (vw)       =", direct)
print("difference     =", split - direct)

report = check_law("shuffle_module_algebra_negative", InstanceSpec(3, 3))
# enumeration reaches unit slots first: a with two empty words already fails
witness = ", ".join(DEFAULT_ALPHABET.format_word(x) for x in report.witness.inputs)
print(f"first witness in enumeration order: ({witness})")
print("  lhs =", report.witness.lhs, "  rhs =", report.witness.rhs)
