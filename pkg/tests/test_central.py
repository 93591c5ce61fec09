"""Half twist, full twist, nested bands, and twist eigenvalues."""

import pytest

from qyoung.central import full_twist, half_twist, murphy, twist_eigenvalue, twist_exponent
from qyoung.hecke import HeckeElement, Z
from qyoung.laurent import LaurentPoly
from qyoung.partitions import Partition, all_partitions


class TestHalfTwist:
    def test_one_strand(self):
        assert half_twist(1) == HeckeElement.unit(1)

    def test_two_strands(self):
        assert half_twist(2) == HeckeElement.generator(2, 1)

    def test_three_strands_is_braid_word(self):
        g1, g2 = HeckeElement.generator(3, 1), HeckeElement.generator(3, 2)
        assert half_twist(3) == g1 * g2 * g1
        assert half_twist(3) == HeckeElement.basis_element(3, (3, 2, 1))


class TestFullTwist:
    def test_one_strand(self):
        assert full_twist(1) == HeckeElement.unit(1)

    def test_two_strands(self):
        g1 = HeckeElement.generator(2, 1)
        assert full_twist(2) == HeckeElement.unit(2) + g1.scale(Z)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_central(self, n):
        ft = full_twist(n)
        for i in range(1, n):
            g = HeckeElement.generator(n, i)
            assert ft * g == g * ft


class TestMurphyElements:
    def test_first_band(self):
        g1 = HeckeElement.generator(2, 1)
        assert murphy(2, 2) == g1 * g1

    def test_index_bounds(self):
        with pytest.raises(IndexError):
            murphy(3, 1)
        with pytest.raises(IndexError):
            murphy(3, 4)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_product_is_full_twist(self, n):
        product = HeckeElement.unit(n)
        for j in range(2, n + 1):
            product = product * murphy(n, j)
        assert product == full_twist(n)

    @pytest.mark.parametrize("n", range(2, 5))
    def test_bands_commute(self, n):
        bands = [murphy(n, j) for j in range(2, n + 1)]
        for a in bands:
            for b in bands:
                assert a * b == b * a


class TestTwistEigenvalue:
    def test_row_and_column_pairs(self):
        assert twist_eigenvalue(Partition((2,))) == LaurentPoly.monomial(2)
        assert twist_eigenvalue(Partition((1, 1))) == LaurentPoly.monomial(-2)
        assert twist_eigenvalue(Partition((3,))) == LaurentPoly.monomial(6)

    def test_trivial_diagram(self):
        assert twist_eigenvalue(Partition((1,))) == LaurentPoly.one()

    @pytest.mark.parametrize("k", range(1, 6))
    def test_monomial_matching_content_sum(self, k):
        for lam in all_partitions(k):
            tau = twist_eigenvalue(lam)
            assert tau.is_monomial()
            assert tau == LaurentPoly.monomial(twist_exponent(lam))

    @pytest.mark.parametrize("k", range(1, 6))
    def test_conjugate_diagram_inverts(self, k):
        for lam in all_partitions(k):
            assert twist_eigenvalue(lam.conjugate()) == twist_eigenvalue(
                lam
            ).invert_variable()

    @pytest.mark.parametrize("k", range(1, 6))
    def test_classical_limit_is_trivial(self, k):
        for lam in all_partitions(k):
            assert twist_eigenvalue(lam).eval_at_one() == 1
