#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"

using namespace lrs;
using namespace fx;

namespace {

Vector add(const Extension& ext, const Vector& u, const Vector& v) {
    Vector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = ext.add(u[i], v[i]);
    return out;
}

std::vector<Vector> all_codewords(const LrsCode& code) {
    const Extension& ext = code.ext();
    std::vector<Vector> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.k(); ++i) total *= ext.size();
    Vector msg(code.k());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (auto& e : msg) {
            e = ext.element(rest % ext.size());
            rest /= ext.size();
        }
        out.push_back(encode(code, msg));
    }
    return out;
}

// decoding succeeds iff some codeword lies within t, and then returns it
void check_against_nearest(const LrsCode& code, int trials, std::uint64_t seed) {
    const Extension& ext = code.ext();
    const auto words = all_codewords(code);
    const int t = static_cast<int>(code.correction_radius());
    Rng rng(seed);
    int successes = 0, failures = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Vector y = words[rng.below(words.size())];
        // mix uniformly random words with planted errors of weight t and t + 1
        const std::size_t mode = rng.below(3);
        if (mode == 0) {
            y = random_vector(ext, code.n(), rng);
        } else {
            const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(t) + mode - 1, code.n());
            y = add(ext, y, sample_error(ext, code.partition(), w, rng));
        }
        int best = 1 << 20;
        const Vector* nearest = nullptr;
        for (const auto& c : words) {
            const int d = sum_rank_distance(ext, y, c, code.partition());
            if (d < best) {
                best = d;
                nearest = &c;
            }
        }
        const DecodeResult res = wb_decode(code, y);
        if (best <= t) {
            ASSERT_TRUE(res.ok()) << "trial " << trial;
            ASSERT_EQ(res.codeword, *nearest);
            ASSERT_EQ(res.error_weight, best);
            ++successes;
        } else {
            ASSERT_FALSE(res.ok()) << "trial " << trial;
            ++failures;
        }
    }
    EXPECT_GT(successes, 0);
    EXPECT_GT(failures, 0);
}

}  // namespace

TEST(WbDecode, CodewordDecodesToItself) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 2);
    Rng rng(50);
    for (int t = 0; t < 50; ++t) {
        const Vector msg = random_vector(ext, 2, rng);
        const Vector c = encode(code, msg);
        const DecodeResult res = wb_decode(code, c);
        ASSERT_TRUE(res.ok());
        ASSERT_EQ(res.message, msg);
        ASSERT_EQ(res.codeword, c);
        ASSERT_EQ(res.error_weight, 0);
    }
}

TEST(WbDecode, RunningCodeSingleErrors) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 2);
    Rng rng(51);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vector msg = random_vector(ext, 2, rng);
        const Vector c = encode(code, msg);
        const std::size_t w = rng.below(2);
        const Vector e = sample_error(ext, code.partition(), w, rng);
        const DecodeResult res = wb_decode(code, add(ext, c, e));
        ASSERT_TRUE(res.ok()) << "trial " << trial;
        ASSERT_EQ(res.message, msg);
        ASSERT_EQ(res.error_weight, static_cast<int>(w));
    }
}

TEST(WbDecode, UnitErrorAtOnePosition) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 2);
    Rng rng(52);
    for (int trial = 0; trial < 300; ++trial) {
        const Vector msg = random_vector(ext, 2, rng);
        Vector y = encode(code, msg);
        const std::size_t pos = rng.below(4);
        y[pos] = ext.add(y[pos], ext.random_unit(rng));
        const DecodeResult res = wb_decode(code, y);
        ASSERT_TRUE(res.ok());
        ASSERT_EQ(res.message, msg);
    }
}

TEST(WbDecode, NearestCodewordOracleGR42) {
    const Extension ext = ext_gr42_m2();
    const LrsCode code(ext, gen_points_primitive(ext, LengthPartition({2, 1})), 1);
    ASSERT_EQ(code.correction_radius(), 1u);
    check_against_nearest(code, 1500, 53);
}

TEST(WbDecode, NearestCodewordOracleRankMetric) {
    const Extension ext = ext_z4_m4();
    const LrsCode code(ext, gen_points_primitive(ext, LengthPartition({3})), 1);
    check_against_nearest(code, 1500, 54);
}

TEST(WbDecode, NearestCodewordOracleRunningCode) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 2);
    check_against_nearest(code, 100, 55);
}

TEST(WbDecode, LargerCodes) {
    const Extension ext = ext_z9_m4();
    Rng rng(56);
    for (const auto& sizes : {std::vector<std::size_t>{4, 3}, std::vector<std::size_t>{2, 2}}) {
        const LengthPartition part(sizes);
        for (std::size_t k = 1; k < part.length(); ++k) {
            const LrsCode code(ext, gen_points_primitive(ext, part), k);
            for (int trial = 0; trial < 30; ++trial) {
                const Vector msg = random_vector(ext, k, rng);
                const Vector e = sample_error(ext, part, code.correction_radius(), rng);
                const DecodeResult res = wb_decode(code, add(ext, encode(code, msg), e));
                ASSERT_TRUE(res.ok());
                ASSERT_EQ(res.message, msg);
            }
        }
    }
}

TEST(WbDecode, NonFreeErrors) {
    // errors inside the maximal ideal still count with their full rank
    const Extension ext = ext_z9_m4();
    const LrsCode code(ext, gen_points_primitive(ext, LengthPartition({3, 3})), 2);
    Rng rng(57);
    for (int trial = 0; trial < 100; ++trial) {
        const Vector msg = random_vector(ext, 2, rng);
        Vector e = sample_error(ext, code.partition(), 2, rng);
        for (auto& x : e) x = ext.scale_int(x, 3);
        const DecodeResult res = wb_decode(code, add(ext, encode(code, msg), e));
        ASSERT_TRUE(res.ok());
        ASSERT_EQ(res.message, msg);
    }
}

TEST(WbDecode, KeySystemHasMonicSolution) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 2);
    Rng rng(58);
    for (int trial = 0; trial < 200; ++trial) {
        const Vector c = encode(code, random_vector(ext, 2, rng));
        const Vector y = add(ext, c, sample_error(ext, code.partition(), 1, rng));
        const auto r = interpolate(ext, code.lagrange(), y);
        const auto sys = build_key_system(ext, r, decoding_points(code), 1, 2);
        const auto x = solve_with(ext, smith_normal_form(ext, sys.coefficients), sys.rhs);
        ASSERT_TRUE(x.has_value());
        ASSERT_EQ(multiply(ext, sys.coefficients, std::span<const Elem>(*x)), sys.rhs);
    }
}

TEST(WbDecode, RejectsWrongLength) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 2);
    EXPECT_THROW(wb_decode(code, Vector(3)), Error);
}

TEST(WbDecode, OperationCountGrowth) {
    // smoke check of the cubic cost: ext_mul / n^3 stays within a small band
    const Extension ext = ext_z9_m4();
    Rng rng(59);
    std::vector<double> ratios;
    for (std::size_t half : {2, 3, 4}) {
        const LengthPartition part({half, half});
        const LrsCode code(ext, gen_points_primitive(ext, part), half);
        const Vector y = add(ext, encode(code, random_vector(ext, half, rng)),
                             sample_error(ext, part, code.correction_radius(), rng));
        op_counter::ext_mul = 0;
        ASSERT_TRUE(wb_decode(code, y).ok());
        const double n = static_cast<double>(part.length());
        ratios.push_back(static_cast<double>(op_counter::ext_mul) / (n * n * n));
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    EXPECT_LT(*hi / *lo, 4.0) << ratios[0] << " " << ratios[1] << " " << ratios[2];
    std::printf("ext_mul / n^3: %.1f %.1f %.1f\n", ratios[0], ratios[1], ratios[2]);
}

TEST(ErasureDecode, SquareInvertibleTransfer) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 2);
    const ChainRing& r = ext.base();
    Rng rng(60);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Matrix> blocks;
        while (blocks.size() < 2) {
            Matrix a = random_matrix(r, 2, 2, rng);
            if (is_invertible(r, a)) blocks.push_back(std::move(a));
        }
        const Vector msg = random_vector(ext, 2, rng);
        Vector y = apply_transfer(ext, encode(code, msg), code.partition(), blocks);
        y = add(ext, y, sample_error(ext, code.partition(), 1, rng));
        const DecodeResult res = erasure_decode(code, y, blocks);
        ASSERT_TRUE(res.ok());
        ASSERT_EQ(res.message, msg);
        ASSERT_EQ(res.error_weight, 1);
    }
}

TEST(ErasureDecode, ErrorsAndErasures) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 1);
    Rng rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        const auto blocks = sample_transfer(ext.base(), code.partition(), {2, 2}, 1, rng);
        ASSERT_EQ(transfer_free_rank(ext.base(), blocks), 3);
        const Vector msg = random_vector(ext, 1, rng);
        Vector y = apply_transfer(ext, encode(code, msg), code.partition(), blocks);
        y = add(ext, y, sample_error(ext, code.partition(), 1, rng));
        const DecodeResult res = erasure_decode(code, y, blocks);
        ASSERT_TRUE(res.ok()) << "trial " << trial;
        ASSERT_EQ(res.message, msg);
    }
}

TEST(ErasureDecode, WiderOutputs) {
    const Extension ext = ext_z9_m4();
    const LrsCode code(ext, gen_points_primitive(ext, LengthPartition({3, 2})), 1);
    Rng rng(62);
    for (int trial = 0; trial < 100; ++trial) {
        const auto blocks = sample_transfer(ext.base(), code.partition(), {4, 3}, 2, rng);
        const Vector msg = random_vector(ext, 1, rng);
        Vector y = apply_transfer(ext, encode(code, msg), code.partition(), blocks);
        y = add(ext, y, sample_error(ext, output_partition(blocks), 1, rng));
        const DecodeResult res = erasure_decode(code, y, blocks);
        ASSERT_TRUE(res.ok());
        ASSERT_EQ(res.message, msg);
    }
}

TEST(ErasureDecode, InsufficientFreeRank) {
    const Extension ext = ext_z9_m2();
    const LrsCode code(ext, running_points(ext), 2);
    const ChainRing& r = ext.base();
    std::vector<Matrix> blocks = {Matrix(2, 2), Matrix(2, 2)};
    blocks[0](0, 0) = r.one();
    blocks[1](0, 0) = r.from_int(3);
    try {
        erasure_decode(code, Vector(4), blocks);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InsufficientFreeRank);
    }
}
