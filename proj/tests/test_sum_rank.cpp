#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace lrs;
using namespace fx;

TEST(SumRank, Examples) {
    const Extension ext = ext_z9_m2();
    const LengthPartition part({2});
    EXPECT_EQ(sum_rank_weight(ext, Vector(2), part), 0);
    EXPECT_EQ(sum_rank_weight(ext, Vector{ext.one(), xi(ext)}, part), 2);
    const Vector v = {ext.from_int(3), ext.scale_int(xi(ext), 3)};
    EXPECT_EQ(sum_rank_weight(ext, v, part), 2);
    const auto ranks = rank_and_free_rank(ext.base(), matrix_representation(ext, v, power_basis(ext)));
    EXPECT_EQ(ranks.free_rank, 0);
}

TEST(SumRank, PartitionMismatch) {
    const Extension ext = ext_z9_m2();
    try {
        sum_rank_weight(ext, Vector(3), LengthPartition({2}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PartitionMismatch);
    }
}

TEST(SumRank, BlockwiseExample) {
    const Extension ext = ext_z9_m2();
    // (1, 2) spans a rank-1 module; (xi, 0) too
    const Vector v = {ext.one(), ext.from_int(2), xi(ext), ext.zero()};
    EXPECT_EQ(sum_rank_weight(ext, v, LengthPartition({2, 2})), 2);
    EXPECT_EQ(sum_rank_weight(ext, v, LengthPartition({4})), 2);
    EXPECT_EQ(sum_rank_weight(ext, v, LengthPartition({1, 1, 1, 1})), 3);
}

TEST(SumRank, DistanceProperties) {
    const Extension ext = ext_z9_m2();
    const LengthPartition part({2, 2});
    Rng rng(17);
    for (int t = 0; t < 10000; ++t) {
        const Vector u = random_vector(ext, 4, rng), v = random_vector(ext, 4, rng), w = random_vector(ext, 4, rng);
        const int duv = sum_rank_distance(ext, u, v, part);
        ASSERT_EQ(sum_rank_distance(ext, u, u, part), 0);
        ASSERT_EQ(duv, sum_rank_distance(ext, v, u, part));
        ASSERT_LE(duv, sum_rank_distance(ext, u, w, part) + sum_rank_distance(ext, w, v, part));
        if (t < 100) { ASSERT_EQ(sum_rank_distance(ext, u, Vector(4), part), sum_rank_weight(ext, u, part)); }
    }
}

TEST(SumRank, BoundedByHammingAndDimensions) {
    const Extension ext = ext_z4_m2();
    const LengthPartition part({3, 1});
    Rng rng(18);
    for (int t = 0; t < 2000; ++t) {
        Vector v = random_vector(ext, 4, rng);
        if (rng.below(2)) v[rng.below(4)] = ext.zero();
        const int w = sum_rank_weight(ext, v, part);
        ASSERT_LE(w, hamming_weight(v));
        ASSERT_LE(w, 2 + 1);
    }
}

TEST(SumRank, BasisIndependence) {
    const Extension ext = ext_z9_m2();
    const LengthPartition part({2, 1});
    const Vector other = {s_elem(ext, 1, 1), s_elem(ext, 2, 1)};
    const BasisChange change(ext, other);
    Rng rng(19);
    for (int t = 0; t < 1000; ++t) {
        Vector v = random_vector(ext, 3, rng);
        if (rng.below(2)) v[0] = ext.scale_int(v[0], 3);
        ASSERT_EQ(sum_rank_weight(ext, v, part), sum_rank_weight(ext, v, part, change));
    }
}

TEST(SumRank, InvariantUnderBlockDiagonalGL) {
    const Extension ext = ext_z9_m2();
    const ChainRing& r = ext.base();
    const LengthPartition part({2, 2});
    Rng rng(20);
    auto random_invertible = [&](std::size_t n) {
        for (;;) {
            Matrix m = random_matrix(r, n, n, rng);
            if (is_invertible(r, m)) return m;
        }
    };
    for (int t = 0; t < 1000; ++t) {
        const Vector v = random_vector(ext, 4, rng);
        const std::vector<Matrix> blocks = {random_invertible(2), random_invertible(2)};
        const Vector w = multiply(ext, std::span<const Elem>(v), block_diagonal(blocks));
        ASSERT_EQ(sum_rank_weight(ext, v, part), sum_rank_weight(ext, w, part));
    }
}

TEST(HammingOracle, Examples) {
    const Extension ext = ext_z4_m2();
    EXPECT_EQ(hamming_min_oracle(ext, Vector(2), LengthPartition({1, 1})), 0);
    EXPECT_EQ(hamming_min_oracle(ext, Vector{ext.from_int(2)}, LengthPartition({1})), 1);
    const Extension e9 = ext_z9_m2();
    EXPECT_EQ(enumerate_gl(e9.base(), 2).size(), 3888u);
    EXPECT_EQ(gl_order(e9.base(), 2), 3888u);
    EXPECT_EQ(hamming_min_oracle(e9, Vector{e9.one(), xi(e9)}, LengthPartition({2})), 2);
}

TEST(HammingOracle, AgreesExhaustivelyOnSmallExtension) {
    const Extension ext = ext_z4_m2();
    const LengthPartition part({1, 1});
    for (std::uint64_t i = 0; i < ext.size(); ++i)
        for (std::uint64_t j = 0; j < ext.size(); ++j) {
            const Vector v = {ext.element(i), ext.element(j)};
            ASSERT_EQ(sum_rank_weight(ext, v, part), hamming_min_oracle(ext, v, part));
        }
}

TEST(HammingOracle, AgreesOnRandomRankTwoBlocks) {
    const Extension ext = ext_z9_m2();
    const LengthPartition part({2});
    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
        Vector v = random_vector(ext, 2, rng);
        if (t % 3 == 1) v[1] = ext.scale_int(v[0], 2);
        if (t % 3 == 2) v[0] = ext.scale_int(v[0], 3);
        ASSERT_EQ(sum_rank_weight(ext, v, part), hamming_min_oracle(ext, v, part));
    }
}

TEST(HammingOracle, GuardTrips) {
    const Extension ext = ext_z9_m4();
    try {
        hamming_min_oracle(ext, Vector(3), LengthPartition({3}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLargeToEnumerate);
    }
}

TEST(MinDistance, IdentityGenerator) {
    const Extension ext = ext_z4_m2();
    EXPECT_EQ(min_distance_bruteforce(ext, Matrix::identity(2), LengthPartition({1, 1})), 1);
}

TEST(MinDistance, GuardTrips) {
    const Extension ext = ext_z9_m2();
    try {
        min_distance_bruteforce(ext, Matrix(4, 4), LengthPartition({2, 2}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLargeToEnumerate);
    }
}
