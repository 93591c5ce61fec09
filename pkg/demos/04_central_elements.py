"""
Central elements: the full twist and its eigenvalue on each symmetrizer.

The half twist is the positive braid of the order-reversing permutation;
its square is central.  It factors as a product of nested bands (strand j
swung around strands 1..j-1), and it multiplies each symmetrizer by a
monomial whose exponent is twice the sum of the cell contents.

    python demos/04_central_elements.py
"""

from qyoung.central import full_twist, half_twist, murphy, twist_eigenvalue, twist_exponent
from qyoung.hecke import HeckeElement
from qyoung.partitions import all_partitions

# Half and full twist on three strands.
print("half twist on 3 strands:", half_twist(3))
delta2 = full_twist(3)
print("full twist on 3 strands:", delta2)

# Centrality, checked against a generator.
g1 = HeckeElement.generator(3, 1)
print("commutes with g_1:", delta2 * g1 == g1 * delta2)

# The nested bands multiply out to the full twist.
product = HeckeElement.unit(4)
for j in range(2, 5):
    product = product * murphy(4, j)
print("band product equals full twist on 4 strands:", product == full_twist(4))

# Twist eigenvalues for all diagrams with up to 4 cells.  The eigenvalue is
# extracted from a genuine multiplication, the exponent column is the
# closed form; they agree in every row.
print("\ndiagram      eigenvalue     2*sum(contents)")
for k in range(1, 5):
    for lam in all_partitions(k):
        tau = twist_eigenvalue(lam)
        print(f"{str(lam):12s} {str(tau):14s} {twist_exponent(lam)}")
