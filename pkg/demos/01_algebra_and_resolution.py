"""The algebra R(2,0,d), its symmetrizing form and the periodic resolution.

Run: python3 demos/01_algebra_and_resolution.py
"""

from hhbv.algebra import WORDS, AlgElem, dual, normal_form
from hhbv.bimodule import compose
from hhbv.resolution import casimir, minimal_diff
from hhbv.verify import homotopy_identity

print("basis:", ", ".join(WORDS))
for w in ("xx", "yy", "yxyx", "xyxyx"):
    print(f"  {w:6} = {normal_form(w)}")

print("\ndual basis of the socle form:")
for i, w in enumerate(WORDS):
    print(f"  {w:5}* = {dual(i)}")

print("\nCasimir element (image of the degree-3 differential):")
print(" ", casimir())

print("\nd_n . d_(n+1) = 0:", all(compose(minimal_diff(n), minimal_diff(n + 1)).is_zero() for n in range(8)))
r = homotopy_identity(8)
print(f"t d + d t = id on {r['checked']} basis elements:", r["passed"])
