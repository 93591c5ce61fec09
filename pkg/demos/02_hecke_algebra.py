"""
Elements of the Hecke algebra H_n and how they multiply.

The basis consists of positive permutation braids w_p, one per permutation:
the braid in which strings i and p(i) cross positively and each pair of
strings crosses at most once.  The generator g_i is the single crossing of
strands i, i+1, and satisfies g_i^2 = z g_i + 1 with z = s - s^-1.

    python demos/02_hecke_algebra.py
"""

import json

from qyoung.hecke import HeckeElement, Z, extract_scalar
from qyoung.laurent import S

g1 = HeckeElement.generator(3, 1)
g2 = HeckeElement.generator(3, 2)

# The quadratic relation, visible in the basis expansion of g1*g1.
print("g1^2           =", g1 * g1)
print("z g1 + 1       =", HeckeElement.unit(3) + g1.scale(Z))

# Braid relation: both sides are the positive braid of the longest element.
print("g1 g2 g1       =", g1 * g2 * g1)
print("g2 g1 g2       =", g2 * g1 * g2)

# Inverses come from the quadratic relation: g^-1 = g - z.
print("g1 g1^-1       =", g1.mul_generator(1, sign=-1))

# When crossing numbers add, products of basis braids are basis braids.
w = HeckeElement.basis_element(3, (2, 3, 1))
print("w[2,3,1] * g2  =", w * g2)

# Elements embed into bigger algebras on a shifted block of strands ...
print("g1 in H_4 at offset 2:", g1.shift_embed(1, 4))

# ... and conjugating by a permutation braid moves strand roles around.
print("g1 conjugated by the braid of (1,3,2):", g1.conjugate_by_braid((1, 3, 2)))

# Proportionality tests are exact, with the scalar recovered by division.
x = (g1 * g2).scale(S**3 - S)
report = extract_scalar(g1 * g2, x)
print("extracted scalar:", report.scalar, "| proportional:", report.proportional)

# Every element serializes to a JSON-friendly machine format and back.
blob = json.dumps((g1 * g2).to_machine())
print("machine format:", blob)
print("round-trips:", HeckeElement.from_machine(json.loads(blob)) == g1 * g2)
