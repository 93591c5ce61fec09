"""
Central elements of H_n and their eigenvalues on the symmetrizers.

The half twist is the basis braid of the order-reversing permutation; its
square, the full twist, is central.  The nested band elements
m_j = g_{j-1}..g_1 g_1..g_{j-1} (strand j swung around strands 1..j-1)
commute with one another and multiply out to the full twist, which gives a
cheap factored route to it.

The full twist acts on every symmetrizer by a monomial.  The exponent has
the closed form 2 * (sum of cell contents), but ``twist_eigenvalue`` never
asserts that: it multiplies out the action and extracts the scalar, keeping
the closed form as a cross-check for callers.
"""

from __future__ import annotations

from . import permutations as perms
from .errors import NotEigenvector
from .hecke import HeckeElement, extract_scalar
from .laurent import LaurentPoly
from .partitions import Partition
from .symmetrizers import DEFAULT_MAX_CELLS, e_lambda


def half_twist(n: int) -> HeckeElement:
    """The positive braid of the order-reversing permutation."""
    return HeckeElement.basis_element(n, perms.longest_element(n))


def full_twist(n: int) -> HeckeElement:
    """Square of the half twist; commutes with everything in H_n."""
    ht = half_twist(n)
    return ht * ht


def murphy(n: int, j: int) -> HeckeElement:
    """
    The j-th nested band element g_{j-1} ... g_1 g_1 ... g_{j-1} on n
    strands, for 2 <= j <= n.
    """
    if not 2 <= j <= n:
        raise IndexError(f"band index {j} out of range for {n} strands")
    out = HeckeElement.unit(n)
    for i in range(j - 1, 0, -1):
        out = out.mul_generator(i)
    for i in range(1, j):
        out = out.mul_generator(i)
    return out


def twist_eigenvalue(lam: Partition, max_cells: int = DEFAULT_MAX_CELLS) -> LaurentPoly:
    """
    The scalar by which the full twist multiplies the symmetrizer of the
    given diagram, obtained by full multiplication and exact extraction.
    """
    e = e_lambda(lam, max_cells)
    product = full_twist(lam.n) * e
    report = extract_scalar(e, product)
    if not report.proportional:
        raise NotEigenvector(
            f"full twist does not act on the {lam} symmetrizer by a scalar "
            f"(first mismatch at {report.witness})"
        )
    return report.scalar


def twist_exponent(lam: Partition) -> int:
    """
    Closed-form candidate for the twist eigenvalue's exponent of s: twice
    the sum of the cell contents.  Compare with twist_eigenvalue; do not
    substitute for it.
    """
    return 2 * sum(lam.contents())
