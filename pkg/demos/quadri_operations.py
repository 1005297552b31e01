"""
The four quadri products
========================

Each product keeps the shuffles whose first and last letters come from a
prescribed factor.  Their sum is the whole shuffle.
"""
from shuffle_quadri import Combination, QuadriOp, quadri_oracle, sh, word_of_string
from shuffle_quadri.quadri import quadri

u, v = word_of_string("ab"), word_of_string("cd")

total = Combination.zero()
for tag in QuadriOp:
    value = quadri(tag, u, v)
    total = total + value
    print(f"ab {tag.symbol} cd = {value}")
    assert value == quadri_oracle(tag, u, v)

print("sum          =", total)
print("ab ⧢ cd      =", sh(u, v))

# the unit: 1 ↘ v and v ↖ 1 give v back, every other unit product is zero
one = ()
for tag in QuadriOp:
    print(f"1 {tag.symbol} cd = {quadri(tag, one, v)}    cd {tag.symbol} 1 = {quadri(tag, v, one)}")
