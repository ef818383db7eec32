"""Quotients, products, matrix structures, homomorphisms, subrings and the
fundamental ordinary-ring quotient."""

import pytest

from hyperrings.bitsets import elements_of, is_subset, mask_of, singleton
from hyperrings.core import CapExceeded
from hyperrings.corpus import ordinary_ring
from hyperrings.construct import (
    NotAdditive,
    NotClosed,
    NotMultiplicative,
    OrdinaryRing,
    UnionFind,
    check_good_homomorphism,
    classical_n_ideal,
    direct_product,
    enumerate_good_homomorphisms,
    fundamental_ring,
    matrix_hyperring,
    matrix_ideal_mask,
    product_factor_sizes,
    product_subset_mask,
    quotient,
    subhyperring_masks,
    subhyperring_restrict,
    verify_ordinary_ring,
)
from hyperrings.ideals import hyperideal_masks, is_hyperideal


class TestQuotient:
    def test_z4_by_even_ideal_is_z2(self, z4):
        q = quotient(z4, mask_of([0, 2]))
        assert q.ring.size == 2
        assert q.ring.add == ((0, 1), (1, 0))
        assert q.ring.hmul == ((1, 1), (1, 2))
        assert q.projection == (0, 1, 0, 1)

    def test_quotient_by_zero_is_isomorphic_copy(self, z6):
        q = quotient(z6, mask_of([0]))
        assert q.ring.add == z6.add
        assert q.ring.hmul == z6.hmul

    def test_quotient_by_full_ring_is_zero_ring(self, z4):
        q = quotient(z4, z4.carrier_mask)
        assert q.ring.size == 1

    def test_hyper_quotient(self, z6a):
        q = quotient(z6a, mask_of([0, 3]))
        assert q.ring.size == 3
        # class products stay multi-valued: [1] o [1] covers both odd cosets
        assert q.ring.hmul[1][1] == mask_of([1, 2])

    def test_preimages_of_ideals_contain_the_ideal(self, z6a):
        j = mask_of([0, 2, 4])
        q = quotient(z6a, j)
        for m in hyperideal_masks(q.ring):
            pre = q.preimage_mask(m)
            assert is_subset(j, pre)
            assert is_hyperideal(z6a, pre)

    def test_requires_hyperideal(self, z4):
        with pytest.raises(ValueError):
            quotient(z4, mask_of([0, 1]))


class TestDirectProduct:
    def test_component_zeroes_multiply_to_zero(self, z2):
        p = direct_product(z2, z2)
        i10 = 1 * 2 + 0
        i01 = 0 * 2 + 1
        assert p.hmul[i10][i01] == singleton(0)

    def test_product_with_zero_ring_keeps_tables(self, z4):
        one = ordinary_ring(1, name="zero-ring")
        p = direct_product(z4, one)
        assert p.add == z4.add
        assert p.hmul == z4.hmul

    def test_factor_sizes_recoverable(self, z2, z6):
        p = direct_product(z2, z6)
        assert product_factor_sizes(p) == (2, 6)
        assert product_factor_sizes(z6) is None

    def test_subset_embedding(self):
        assert product_subset_mask(3, mask_of([0, 1]), mask_of([2])) == \
            mask_of([2, 5])


class TestMatrix:
    def test_dimension_one_is_the_ring_itself(self, z4):
        m1 = matrix_hyperring(z4, 1)
        assert m1.add == z4.add
        assert m1.hmul == z4.hmul

    def test_m2_z2_is_the_classical_matrix_ring(self, z2):
        m2 = matrix_hyperring(z2, 2)
        assert m2.size == 16
        assert not m2.commutative
        assert m2.scalar_identity
        # identity matrix is (1,0,0,1) encoded row-major base 2
        assert m2.identity == 0b1001
        # E12 * E12 = 0 and E12 * E21 = E11 (indices 2, 4, 1 row-major)
        e12, e21, e11 = 0b0010, 0b0100, 0b0001
        assert m2.hmul[e12][e12] == singleton(0)
        assert m2.hmul[e12][e21] == singleton(e11)
        assert m2.hmul[e21][e12] != m2.hmul[e12][e21]

    def test_matrix_ideal_embedding(self, z2):
        full = matrix_ideal_mask(z2, 2, z2.carrier_mask)
        assert full == (1 << 16) - 1
        zero_only = matrix_ideal_mask(z2, 2, mask_of([0]))
        assert zero_only == singleton(0)

    def test_cap_enforced(self, z6):
        with pytest.raises(CapExceeded):
            matrix_hyperring(z6, 2, cap=16)

    def test_requires_scalar_identity(self, z13a):
        with pytest.raises(ValueError):
            matrix_hyperring(z13a, 2, cap=10 ** 6)


class TestGoodHomomorphisms:
    def test_identity_map(self, z4):
        hom = check_good_homomorphism([0, 1, 2, 3], z4, z4)
        assert hom.kernel == mask_of([0])
        assert hom.injective and hom.surjective

    def test_mod_two_reduction(self, z4, z2):
        hom = check_good_homomorphism([0, 1, 0, 1], z4, z2)
        assert hom.kernel == mask_of([0, 2])
        assert hom.surjective and not hom.injective

    def test_constant_zero_map_is_checked_not_assumed(self, z4):
        hom = check_good_homomorphism([0, 0, 0, 0], z4, z4)
        assert hom.kernel == z4.carrier_mask

    def test_not_additive(self, z4):
        with pytest.raises(NotAdditive):
            check_good_homomorphism([0, 1, 1, 1], z4, z4)

    def test_not_multiplicative(self, z4, z2):
        # additive but 1 -> 0 kills products of units: phi(1 o 1) = {0}
        # while phi(1) o phi(1) = {0}; need a genuinely bad one:
        with pytest.raises((NotAdditive, NotMultiplicative)):
            check_good_homomorphism([0, 1, 2, 0], z4, z4)

    def test_enumeration_finds_all(self, z4, z2):
        homs = enumerate_good_homomorphisms(z4, z2)
        assert [h.mapping for h in homs] == [(0, 0, 0, 0), (0, 1, 0, 1)]

    def test_image_and_preimage(self, z4, z2):
        hom = check_good_homomorphism([0, 1, 0, 1], z4, z2)
        assert hom.image_mask(mask_of([0, 2])) == mask_of([0])
        assert hom.preimage_mask(mask_of([0])) == mask_of([0, 2])
        assert hom.preimage_mask(z2.carrier_mask) == z4.carrier_mask


class TestSubrings:
    def test_full_restriction(self, z4):
        sub = subhyperring_restrict(z4, z4.carrier_mask)
        assert sub.ring.add == z4.add

    def test_z6_even_part_is_a_unital_ring(self, z6):
        sub = subhyperring_restrict(z6, mask_of([0, 2, 4]))
        assert sub.ring.size == 3
        # 4 acts as a scalar identity on {0, 2, 4}
        assert sub.ring.identity == 2
        assert sub.ring.scalar_identity
        assert sub.embedding == (0, 2, 4)

    def test_not_closed(self, z6):
        with pytest.raises(NotClosed):
            subhyperring_restrict(z6, mask_of([0, 2]))

    def test_enumeration(self, z4):
        assert subhyperring_masks(z4) == [mask_of([0]), mask_of([0, 2]),
                                          z4.carrier_mask]


class TestUnionFind:
    def test_smallest_representative_wins(self):
        uf = UnionFind(5)
        uf.union(3, 4)
        uf.union(0, 4)
        assert uf.find(3) == uf.find(0) == 0
        assert uf.find(1) == 1


class TestFundamentalRing:
    def test_ordinary_rings_are_unchanged(self, z4):
        fund = fundamental_ring(z4)
        assert fund.ring.size == 4
        assert all(c.bit_count() == 1 for c in fund.classes)

    def test_zero_ring_collapses_to_a_point(self):
        fund = fundamental_ring(ordinary_ring(1, name="zero"))
        assert fund.ring.size == 1

    def test_z6_a_set_collapses_to_parity(self, z6a):
        fund = fundamental_ring(z6a)
        assert [elements_of(c) for c in fund.classes] == [[0, 2, 4], [1, 3, 5]]
        assert fund.ring.size == 2
        assert fund.ring.mul[1][1] == 1

    def test_cap(self, z12):
        with pytest.raises(CapExceeded):
            fundamental_ring(z12, gamma_cap=10)

    def test_image_mask(self, z6a):
        fund = fundamental_ring(z6a)
        assert fund.image_mask(mask_of([0, 2, 4])) == mask_of([0])
        assert fund.image_mask(mask_of([1])) == mask_of([1])


class TestClassicalNIdeal:
    def ordinary(self, n):
        r = ordinary_ring(n)
        return OrdinaryRing(name=f"Z{n}", size=n,
                            add=tuple(tuple((a + b) % n for b in range(n))
                                      for a in range(n)),
                            mul=tuple(tuple((a * b) % n for b in range(n))
                                      for a in range(n)))

    def test_verify_accepts_ordinary(self):
        verify_ordinary_ring(self.ordinary(6))

    def test_z4_n_ideals(self):
        ring = self.ordinary(4)
        assert classical_n_ideal(ring, mask_of([0]))
        assert classical_n_ideal(ring, mask_of([0, 2]))
        assert not classical_n_ideal(ring, (1 << 4) - 1)

    def test_non_ideal_rejected(self):
        ring = self.ordinary(6)
        assert not classical_n_ideal(ring, mask_of([0, 2]))

    def test_nilradical(self):
        assert self.ordinary(12).nilradical_mask() == mask_of([0, 6])
