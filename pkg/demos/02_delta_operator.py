"""Cup products, brackets and Delta on the generators of HH*(R).

Run: python3 demos/02_delta_operator.py
"""

from hhbv.bv import cup, delta, gerstenhaber_bracket, is_coboundary
from hhbv.catalog import delta_row, generator, reduce_class

q1, q2, e = generator("q1"), generator("q2"), generator("e")

print("Delta(q1) =", reduce_class(delta(q1))[0])
print("Delta(q2) =", reduce_class(delta(q2))[0])

qq = cup(q1, q2)
print("\nq1 q2 representative:", qq, "-- coboundary:", bool(is_coboundary(qq)))

for v in ("q1", "q2", "w1"):
    b = gerstenhaber_bracket(generator(v), e)
    print(f"[{v}, e] = {reduce_class(b)[0]}   (raw {b})")

b = gerstenhaber_bracket(q1, e)
res = is_coboundary(b)
print("\n[q1, e] coboundary over GF(2)[d]?", bool(res), "| at d = 0:",
      bool(is_coboundary(b.substitute(0), subst=0)))

# table rows name the class by the reference value when it matches
for m in (("p1", "q1"), ("q2", "w1"), ("q1", "w2"), ("q1", "w1"), ("q2", "e"), ("e",)):
    row = delta_row(m)
    flag = "" if row["match"] else f"   <- reference: {row['reference']}"
    print(f"Delta({row['input']}) = {row['delta']}{flag}")
