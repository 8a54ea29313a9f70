#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace lrs;
using namespace fx;

namespace {

// roots of h in S lying over xi^q, by exhaustive search
std::vector<Elem> frobenius_lifts(const Extension& ext) {
    const Extension field = ext.residue_field();
    const Elem target = field.pow(xi(field), ext.residue_size());
    std::vector<Elem> out;
    for (std::uint64_t i = 0; i < ext.size(); ++i) {
        const Elem x = ext.element(i);
        if (ext.eval_h(x).is_zero() && ext.project(x) == target) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST(ChainRing, ConstructsIntegerRings) {
    const ChainRing r = z9();
    EXPECT_EQ(r.residue_size(), 3u);
    EXPECT_EQ(r.size(), 9u);
    EXPECT_EQ(z4().residue_size(), 2u);
    const ChainRing g = gr4_2();
    EXPECT_EQ(g.residue_size(), 4u);
    EXPECT_EQ(g.size(), 16u);
}

TEST(ChainRing, RejectsBadSpecs) {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    EXPECT_EQ(code_of([] { ChainRing(4, 2, {0, 1}); }), ErrorCode::NotPrime);
    EXPECT_EQ(code_of([] { ChainRing(2, 2, {1, 1, 2}); }), ErrorCode::NotMonic);
    // y^2 + 1 = (y + 1)^2 mod 2
    EXPECT_EQ(code_of([] { ChainRing(2, 2, {1, 0, 1}); }), ErrorCode::ReducibleModP);
    // z^2 + 1 over Z_4 has the root 1 mod 2
    EXPECT_EQ(code_of([] { Extension(z4(), int_poly(z4(), {1, 0, 1})); }), ErrorCode::ReducibleModIdeal);
    EXPECT_EQ(code_of([] { Extension(z4(), int_poly(z4(), {1, 1, 2})); }), ErrorCode::NotMonic);
}

TEST(Extension, SigmaImageZ4) {
    const Extension ext = ext_z4_m2();
    const auto lifts = frobenius_lifts(ext);
    ASSERT_EQ(lifts.size(), 1u);
    EXPECT_EQ(ext.sigma_image(), lifts[0]);
    EXPECT_EQ(ext.sigma_image(), s_elem(ext, 3, 3));
}

TEST(Extension, SigmaImageZ9) {
    const Extension ext = ext_z9_m2();
    const auto lifts = frobenius_lifts(ext);
    ASSERT_EQ(lifts.size(), 1u);
    EXPECT_EQ(ext.sigma_image(), lifts[0]);
    EXPECT_EQ(ext.sigma_image(), s_elem(ext, 0, 8));
}

TEST(Extension, SigmaImageTrivialRank) {
    const Extension ext = ext_z25_m1();
    EXPECT_EQ(ext.sigma_image(), ext.one());
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const Elem x = ext.random(rng);
        EXPECT_EQ(ext.sigma(x), x);
    }
}

TEST(Extension, SigmaImageIsExactRoot) {
    for (const Extension& ext : {ext_z4_m2(), ext_z9_m2(), ext_gr42_m2(), ext_z4_m4(), ext_z9_m4()}) {
        EXPECT_TRUE(ext.eval_h(ext.sigma_image()).is_zero());
        const Extension field = ext.residue_field();
        EXPECT_EQ(ext.project(ext.sigma_image()), field.pow(xi(field), ext.residue_size()));
    }
}

TEST(Extension, MultiplicationExamples) {
    const Extension ext = ext_z9_m2();
    EXPECT_EQ(ext.mul(xi(ext), xi(ext)), ext.from_int(8));
    Rng rng(1);
    const Elem x = ext.random(rng);
    EXPECT_EQ(ext.mul(x, ext.one()), x);
    const ChainRing r = z4();
    EXPECT_TRUE(r.mul(r.from_int(2), r.from_int(2)).is_zero());
}

TEST(Extension, Valuation) {
    const ChainRing r = z4();
    EXPECT_EQ(r.valuation(r.from_int(2)), 1);
    EXPECT_EQ(r.valuation(r.zero()), 2);
    const Extension ext = ext_z9_m2();
    EXPECT_EQ(ext.valuation(s_elem(ext, 3, 3)), 1);
    EXPECT_EQ(ext.valuation(s_elem(ext, 1, 3)), 0);
}

TEST(Extension, Inverse) {
    const ChainRing r = z9();
    EXPECT_EQ(r.inverse(r.from_int(2)), r.from_int(5));
    const Extension ext = ext_z9_m2();
    EXPECT_EQ(ext.inverse(xi(ext)), s_elem(ext, 0, 8));
    EXPECT_THROW(z4().inverse(z4().from_int(2)), Error);
    try {
        ext_z4_m2().inverse(ext_z4_m2().from_int(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnit);
    }
}

TEST(Extension, InverseExhaustive) {
    for (const Extension& ext : {ext_z4_m2(), ext_z9_m2(), ext_gr42_m2()}) {
        for (std::uint64_t i = 0; i < ext.size(); ++i) {
            const Elem x = ext.element(i);
            if (!ext.is_unit(x)) continue;
            EXPECT_EQ(ext.mul(x, ext.inverse(x)), ext.one());
        }
    }
}

TEST(Extension, FrobeniusExamples) {
    const Extension ext = ext_z9_m2();
    EXPECT_EQ(ext.frobenius(xi(ext), 1), s_elem(ext, 0, 8));
    EXPECT_EQ(ext.frobenius(ext.from_int(2), 1), ext.from_int(2));
    Rng rng(11);
    for (const Extension& e : {ext_z4_m2(), ext_z9_m2(), ext_gr42_m2(), ext_z4_m4()}) {
        for (int i = 0; i < 200; ++i) {
            const Elem x = e.random(rng);
            EXPECT_EQ(e.frobenius(x, static_cast<long long>(e.rank())), x);
            EXPECT_EQ(e.frobenius(e.frobenius(x, 1), -1), x);
        }
    }
}

TEST(Extension, FrobeniusComposition) {
    const Extension ext = ext_z4_m4();
    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        const Elem x = ext.random(rng);
        const long long i = static_cast<long long>(rng.below(4));
        const long long j = static_cast<long long>(rng.below(4));
        EXPECT_EQ(ext.frobenius(ext.frobenius(x, j), i), ext.frobenius(x, i + j));
    }
}

TEST(Extension, SigmaHasExactOrder) {
    for (const Extension& ext : {ext_z4_m2(), ext_z9_m2(), ext_gr42_m2(), ext_z4_m4(), ext_z9_m4()}) {
        for (std::size_t j = 0; j < ext.rank(); ++j)
            EXPECT_EQ(ext.frobenius(ext.xi_power(j), static_cast<long long>(ext.rank())), ext.xi_power(j));
        for (std::size_t i = 1; i < ext.rank(); ++i) EXPECT_NE(ext.frobenius(xi(ext), static_cast<long long>(i)), xi(ext));
    }
}

TEST(Extension, Projection) {
    const ChainRing r = z9();
    EXPECT_TRUE(r.project(r.from_int(3)).is_zero());
    const Extension ext = ext_z9_m2();
    EXPECT_EQ(ext.project(s_elem(ext, 0, 8)), s_elem(ext.residue_field(), 0, 2));
    const Extension field = ext.residue_field();
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Elem x = ext.random(rng), y = ext.random(rng);
        EXPECT_EQ(ext.project(ext.mul(x, y)), field.mul(ext.project(x), ext.project(y)));
        EXPECT_EQ(ext.project(ext.sigma(x)), field.pow(ext.project(x), ext.residue_size()));
    }
}

TEST(Extension, RingAxioms) {
    Rng rng(99);
    for (const Extension& ext : {ext_z4_m2(), ext_z9_m2(), ext_gr42_m2(), ext_z25_m1()}) {
        for (int i = 0; i < 10000; ++i) {
            const Elem a = ext.random(rng), b = ext.random(rng), c = ext.random(rng);
            ASSERT_EQ(ext.mul(ext.mul(a, b), c), ext.mul(a, ext.mul(b, c)));
            ASSERT_EQ(ext.mul(a, ext.add(b, c)), ext.add(ext.mul(a, b), ext.mul(a, c)));
            ASSERT_EQ(ext.mul(a, b), ext.mul(b, a));
            ASSERT_EQ(ext.sigma(ext.mul(a, b)), ext.mul(ext.sigma(a), ext.sigma(b)));
            ASSERT_EQ(ext.sigma(ext.add(a, b)), ext.add(ext.sigma(a), ext.sigma(b)));
        }
    }
}

TEST(Extension, SigmaFixesBase) {
    const Extension ext = ext_gr42_m2();
    for (std::uint64_t i = 0; i < ext.base().size(); ++i) {
        const Elem a = ext.base().element(i);
        EXPECT_EQ(ext.sigma(a), a);
    }
}

TEST(Extension, UnitCriteriaExhaustive) {
    const Extension ext = ext_z4_m2();
    ASSERT_EQ(ext.size(), 16u);
    const Extension big = ext_gr42_m2();
    ASSERT_EQ(big.size(), 256u);
    for (const Extension& e : {ext, big}) {
        std::uint64_t units = 0;
        for (std::uint64_t i = 0; i < e.size(); ++i) {
            const Elem x = e.element(i);
            const bool unit = e.valuation(x) == 0;
            EXPECT_EQ(unit, !e.project(x).is_zero());
            EXPECT_EQ(unit, e.is_unit(x));
            units += unit ? 1 : 0;
        }
        const std::uint64_t qm = e.residue_size() * e.residue_size();
        EXPECT_EQ(units, e.size() - e.size() / qm);
        EXPECT_EQ(units, e.unit_count());
    }
}

TEST(Extension, ElementIndexingIsBijective) {
    const Extension ext = ext_z4_m2();
    std::set<Elem> seen;
    for (std::uint64_t i = 0; i < ext.size(); ++i) seen.insert(ext.element(i));
    EXPECT_EQ(seen.size(), ext.size());
}
