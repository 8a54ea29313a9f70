#pragma once

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrs/netcode.hpp"

// Oracle and property suites shared by `lrs_cli selftest` and the acceptance
// binary. Every check is seeded, so a rerun reproduces the same cases.

namespace lrs::selftest {

enum class Level { Quick, Full };
enum class Status { Pass, Fail, Deviation };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Deviation: return "DEVIATION";
    }
    return "FAIL";
}

struct Outcome {
    Status status = Status::Pass;
    std::string detail;
};

struct Check {
    std::string name;
    std::string title;
    double time_limit = 0.0;  // seconds; 0 means none
    std::function<Outcome()> run;
};

struct Report {
    std::string name;
    std::string title;
    Status status = Status::Pass;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

inline Outcome pass(std::string detail) { return {Status::Pass, std::move(detail)}; }
inline Outcome failed(std::string detail) { return {Status::Fail, std::move(detail)}; }

inline Elem y_elem() {
    Elem y;
    y.c[1] = 1;
    return y;
}

inline Poly int_poly(const ChainRing& base, std::initializer_list<Int> coeffs) {
    Poly out;
    for (auto c : coeffs) out.push_back(base.from_int(c));
    return out;
}

struct Config {
    std::string name;
    Extension ext;
    std::vector<std::size_t> sizes;
};

// Z_4[z]/(z^2+z+1), Z_9[z]/(z^2+1), GR(4,2)[z]/(z^2+z+y)
inline std::vector<Config> identity_configs() {
    const ChainRing z4 = ChainRing::integers_mod(2, 2);
    const ChainRing z9 = ChainRing::integers_mod(3, 2);
    const ChainRing gr = ChainRing(2, 2, {1, 1, 1});
    return {{"Z4", Extension(z4, int_poly(z4, {1, 1, 1})), {2}},
            {"Z9", Extension(z9, int_poly(z9, {1, 0, 1})), {2, 2}},
            {"GR42", Extension(gr, Poly{y_elem(), gr.one(), gr.one()}), {2, 1, 2}}};
}

inline Extension gr9_2() {
    const ChainRing z9 = ChainRing::integers_mod(3, 2);
    return Extension(z9, int_poly(z9, {1, 0, 1}));
}

inline Vector random_vector(const Extension& ext, std::size_t n, Rng& rng) {
    Vector v(n);
    for (auto& x : v) x = ext.random(rng);
    return v;
}

inline SkewPolynomial random_poly(const Extension& ext, std::size_t len, Rng& rng) {
    return SkewPolynomial(random_vector(ext, len, rng));
}

inline SkewPolynomial linear(const Extension& ext, const Elem& a) {
    return SkewPolynomial(Vector{ext.neg(a), ext.one()});
}

inline PointSystem random_points(const Extension& ext, const std::vector<std::size_t>& sizes, Rng& rng) {
    for (int attempt = 0; attempt < 100 * kSamplingAttempts; ++attempt) {
        PointSystem pts;
        for (auto ni : sizes) {
            pts.a.push_back(ext.random_unit(rng));
            pts.beta.push_back(random_vector(ext, ni, rng));
        }
        if (has_msrd_property(ext, pts)) return pts;
    }
    fail(ErrorCode::SamplingExhausted, "no valid point system found for the requested shape");
}

// cases split over the configurations so the total is at least `total`
inline std::size_t per_config(std::size_t total, std::size_t configs) { return (total + configs - 1) / configs; }

inline std::string counted(std::size_t cases, const char* what = "cases") {
    return std::to_string(cases) + " " + what + ", 0 violations";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Property suites.

/// sigma has order exactly m, is a ring automorphism, and fixes exactly R.
inline Outcome sigma_order(std::size_t total, std::uint64_t seed) {
    Rng rng(seed);
    const auto configs = detail::identity_configs();
    std::size_t cases = 0;
    for (const auto& cfg : configs) {
        const Extension& ext = cfg.ext;
        const Elem xi = ext.xi_power(1);
        for (std::size_t i = 1; i < ext.rank(); ++i)
            if (ext.frobenius(xi, static_cast<long long>(i)) == xi)
                return detail::failed(cfg.name + ": sigma^" + std::to_string(i) + " fixes xi");
        if (ext.frobenius(xi, static_cast<long long>(ext.rank())) != xi)
            return detail::failed(cfg.name + ": sigma^m does not fix xi");
        for (std::size_t t = 0; t < detail::per_config(total, configs.size()); ++t, ++cases) {
            const Elem x = ext.random(rng), y = ext.random(rng);
            if (ext.frobenius(x, static_cast<long long>(ext.rank())) != x)
                return detail::failed(cfg.name + ": sigma^m(x) != x");
            if (ext.sigma(ext.mul(x, y)) != ext.mul(ext.sigma(x), ext.sigma(y)) ||
                ext.sigma(ext.add(x, y)) != ext.add(ext.sigma(x), ext.sigma(y)))
                return detail::failed(cfg.name + ": sigma is not a ring homomorphism");
            if (ext.frobenius(ext.sigma(x), -1) != x) return detail::failed(cfg.name + ": sigma^-1 sigma != id");
        }
        // fixed ring, exhaustively
        std::uint64_t fixed = 0;
        for (std::uint64_t idx = 0; idx < ext.size(); ++idx) {
            const Elem x = ext.element(idx);
            const bool is_fixed = ext.sigma(x) == x;
            if (is_fixed != ext.in_base(x)) return detail::failed(cfg.name + ": fixed ring of sigma differs from R");
            fixed += is_fixed;
        }
        if (fixed != ext.base().size()) return detail::failed(cfg.name + ": wrong number of fixed elements");
    }
    return detail::pass(detail::counted(cases) + "; fixed rings equal R");
}

/// (f g)(a) = f(a^{g(a)}) g(a) when g(a) is a unit, and 0 when g(a) = 0.
inline Outcome product_rule(std::size_t total, std::uint64_t seed) {
    Rng rng(seed);
    const auto configs = detail::identity_configs();
    std::size_t cases = 0;
    for (const auto& cfg : configs) {
        const Extension& ext = cfg.ext;
        std::size_t done = 0;
        while (done < detail::per_config(total, configs.size())) {
            const auto f = detail::random_poly(ext, 1 + rng.below(4), rng);
            const Elem a = ext.random(rng);
            SkewPolynomial g = detail::random_poly(ext, 1 + rng.below(3), rng);
            if (done % 2 == 0) g = skew::mul(ext, g, detail::linear(ext, a));
            const Elem ga = remainder_eval(ext, g, a);
            const Elem fga = remainder_eval(ext, skew::mul(ext, f, g), a);
            if (ga.is_zero()) {
                if (!fga.is_zero()) return detail::failed(cfg.name + ": g(a) = 0 but (fg)(a) != 0");
            } else if (ext.is_unit(ga)) {
                if (fga != ext.mul(remainder_eval(ext, f, conjugate(ext, a, ga)), ga))
                    return detail::failed(cfg.name + ": (fg)(a) != f(a^g(a)) g(a)");
            } else {
                continue;  // rule says nothing here
            }
            ++done;
        }
        cases += done;
    }
    return detail::pass(detail::counted(cases));
}

/// f_a(beta) = f(a^beta) beta for units beta.
inline Outcome evaluation_connection(std::size_t total, std::uint64_t seed) {
    Rng rng(seed);
    const auto configs = detail::identity_configs();
    std::size_t cases = 0;
    for (const auto& cfg : configs) {
        const Extension& ext = cfg.ext;
        for (std::size_t t = 0; t < detail::per_config(total, configs.size()); ++t, ++cases) {
            const auto f = detail::random_poly(ext, 1 + rng.below(6), rng);
            const Elem a = ext.random(rng), beta = ext.random_unit(rng);
            if (operator_eval(ext, f, a, beta) != ext.mul(remainder_eval(ext, f, conjugate(ext, a, beta)), beta))
                return detail::failed(cfg.name + ": operator and remainder evaluation disagree");
        }
    }
    return detail::pass(detail::counted(cases));
}

/// f = Q g + r and f = g Q' + r' with deg r, deg r' < deg g.
inline Outcome division_reconstruction(std::size_t total, std::uint64_t seed) {
    Rng rng(seed);
    const auto configs = detail::identity_configs();
    std::size_t cases = 0;
    for (const auto& cfg : configs) {
        const Extension& ext = cfg.ext;
        for (std::size_t t = 0; t < detail::per_config(total, configs.size()); ++t, ++cases) {
            const auto f = detail::random_poly(ext, 1 + rng.below(6), rng);
            Vector gc = detail::random_vector(ext, 1 + rng.below(3), rng);
            gc.back() = ext.random_unit(rng);
            const SkewPolynomial g(gc);
            const auto r = skew::right_divmod(ext, f, g);
            if (skew::add(ext, skew::mul(ext, r.quotient, g), r.remainder) != f || r.remainder.degree() >= g.degree())
                return detail::failed(cfg.name + ": right division does not reconstruct");
            const auto l = skew::left_divmod(ext, f, g);
            if (skew::add(ext, skew::mul(ext, g, l.quotient), l.remainder) != f || l.remainder.degree() >= g.degree())
                return detail::failed(cfg.name + ": left division does not reconstruct");
        }
    }
    return detail::pass(detail::counted(cases));
}

/// Row i of M_n^{-1} is the coefficient vector of the i-th Lagrange polynomial.
inline Outcome moore_inverse_is_lagrange(std::size_t total, std::uint64_t seed) {
    Rng rng(seed);
    const auto configs = detail::identity_configs();
    std::size_t cases = 0;
    for (const auto& cfg : configs) {
        const Extension& ext = cfg.ext;
        for (std::size_t t = 0; t < detail::per_config(total, configs.size()); ++t, ++cases) {
            const PointSystem pts = detail::random_points(ext, cfg.sizes, rng);
            const std::size_t n = pts.length();
            const Matrix inv = invert_matrix(ext, moore_matrix(ext, pts, n));
            const auto basis = lagrange_basis(ext, pts);
            for (std::size_t row = 0; row < n; ++row)
                for (std::size_t u = 0; u < n; ++u)
                    if (inv(row, u) != basis[row][u]) return detail::failed(cfg.name + ": Moore inverse row differs from Lagrange");
        }
    }
    return detail::pass(detail::counted(cases));
}

/// evaluate -> interpolate and interpolate -> evaluate are exact.
inline Outcome interpolation_roundtrip(std::size_t per_cfg, std::uint64_t seed) {
    Rng rng(seed);
    const auto configs = detail::identity_configs();
    std::size_t cases = 0;
    for (const auto& cfg : configs) {
        const Extension& ext = cfg.ext;
        for (std::size_t t = 0; t < per_cfg; ++t, ++cases) {
            const PointSystem pts = detail::random_points(ext, cfg.sizes, rng);
            const auto flat = pts.flatten();
            const auto basis = lagrange_basis(ext, pts);
            const auto f = detail::random_poly(ext, flat.size(), rng);
            Vector values;
            for (const auto& pt : flat) values.push_back(operator_eval(ext, f, pt.a, pt.beta));
            if (interpolate(ext, basis, values) != f) return detail::failed(cfg.name + ": evaluate -> interpolate");
            const Vector target = detail::random_vector(ext, flat.size(), rng);
            const auto g = interpolate(ext, basis, target);
            if (g.degree() >= static_cast<int>(flat.size())) return detail::failed(cfg.name + ": interpolant degree");
            for (std::size_t k = 0; k < flat.size(); ++k)
                if (operator_eval(ext, g, flat[k].a, flat[k].beta) != target[k])
                    return detail::failed(cfg.name + ": interpolate -> evaluate");
        }
    }
    return detail::pass(std::to_string(per_cfg) + " roundtrips per configuration (" + std::to_string(cases) + " total), exact");
}

/// Square Moore matrices of valid point systems are invertible.
inline Outcome moore_invertible(std::size_t total, std::uint64_t seed) {
    Rng rng(seed);
    auto configs = detail::identity_configs();
    const ChainRing z4 = ChainRing::integers_mod(2, 2);
    // GR(4,4): q = 2 leaves one conjugacy class, so one block
    configs.push_back({"Z4m4", Extension(z4, detail::int_poly(z4, {1, 1, 0, 0, 1})), {4}});
    std::size_t cases = 0;
    for (const auto& cfg : configs) {
        const Extension& ext = cfg.ext;
        for (std::size_t t = 0; t < detail::per_config(total, configs.size()); ++t, ++cases) {
            const PointSystem pts = detail::random_points(ext, cfg.sizes, rng);
            const std::size_t n = pts.length();
            const Matrix m = moore_matrix(ext, pts, n);
            try {
                if (multiply(ext, m, invert_matrix(ext, m)) != Matrix::identity(n))
                    return detail::failed(cfg.name + ": M_n times its inverse is not the identity");
            } catch (const Error& e) {
                return detail::failed(cfg.name + ": " + e.what());
            }
        }
    }
    return detail::pass(std::to_string(cases) + " point systems inverted");
}

/// Ring axioms and inverses on random elements.
inline Outcome ring_axioms(std::size_t total, std::uint64_t seed) {
    Rng rng(seed);
    const auto configs = detail::identity_configs();
    std::size_t cases = 0;
    for (const auto& cfg : configs) {
        const Extension& ext = cfg.ext;
        for (std::size_t t = 0; t < detail::per_config(total, configs.size()); ++t, ++cases) {
            const Elem a = ext.random(rng), b = ext.random(rng), c = ext.random(rng);
            if (ext.mul(ext.mul(a, b), c) != ext.mul(a, ext.mul(b, c)) || ext.mul(a, b) != ext.mul(b, a) ||
                ext.mul(a, ext.add(b, c)) != ext.add(ext.mul(a, b), ext.mul(a, c)) || ext.sub(ext.add(a, b), b) != a)
                return detail::failed(cfg.name + ": ring axiom violated");
            const Elem u = ext.random_unit(rng);
            if (ext.mul(u, ext.inverse(u)) != ext.one()) return detail::failed(cfg.name + ": inverse");
        }
    }
    return detail::pass(detail::counted(cases));
}

/// Oracle: sum-rank weight equals the min Hamming weight over
/// block-diagonal GL transforms.
inline Outcome hamming_oracle(std::size_t random_cases, std::uint64_t seed) {
    const ChainRing z4 = ChainRing::integers_mod(2, 2);
    const Extension small(z4, detail::int_poly(z4, {1, 1, 1}));
    const LengthPartition pair({1, 1});
    std::size_t exhaustive = 0;
    for (std::uint64_t i = 0; i < small.size(); ++i)
        for (std::uint64_t j = 0; j < small.size(); ++j, ++exhaustive) {
            const Vector v = {small.element(i), small.element(j)};
            if (sum_rank_weight(small, v, pair) != hamming_min_oracle(small, v, pair))
                return detail::failed("GR(4,2) (1,1): disagreement");
        }
    const Extension ext = detail::gr9_2();
    const LengthPartition block({2});
    Rng rng(seed);
    for (std::size_t t = 0; t < random_cases; ++t) {
        Vector v = detail::random_vector(ext, 2, rng);
        // mix in low-rank and non-free vectors, which random draws rarely hit
        if (t % 3 == 1) v[1] = ext.scale_int(v[0], static_cast<Int>(rng.below(9)));
        if (t % 3 == 2) v[0] = ext.scale_int(v[0], 3);
        if (sum_rank_weight(ext, v, block) != hamming_min_oracle(ext, v, block))
            return detail::failed("GR(9,2) (2): disagreement");
    }
    const auto gl = gl_order(ext.base(), 2);
    if (gl != 3888) return detail::failed("|GL_2(Z_9)| = " + std::to_string(gl));
    return detail::pass(std::to_string(exhaustive) + " exhaustive + " + std::to_string(random_cases) +
                        " random vectors agree; |GL_2(Z_9)| = 3888");
}

/// Both encoders agree and the generator is the Moore matrix.
inline Outcome encode_paths(std::size_t total, std::uint64_t seed) {
    const Extension ext = detail::gr9_2();
    const LrsCode code(ext, gen_points_primitive(ext, LengthPartition({2, 2})), 3);
    Rng rng(seed);
    for (std::size_t t = 0; t < total; ++t) {
        const Vector msg = detail::random_vector(ext, 3, rng);
        if (encode(code, msg) != encode_by_evaluation(code, msg)) return detail::failed("encoders disagree");
    }
    return detail::pass(detail::counted(total, "messages"));
}

// ---------------------------------------------------------------------------
// Code-level checks.

/// Literal point system a = (1, 2) versus the corrected a = (1, 1 + xi).
inline Outcome running_example_certification() {
    const Extension ext = detail::gr9_2();
    const LengthPartition part({2, 2});
    const Elem xi = ext.xi_power(1);
    PointSystem literal;
    literal.a = {ext.one(), ext.from_int(2)};
    literal.beta = {{ext.one(), xi}, {ext.one(), xi}};
    const int d1 = min_distance_bruteforce(ext, moore_matrix(ext, literal, 1), part);
    const int d2 = min_distance_bruteforce(ext, moore_matrix(ext, literal, 2), part);
    if (d1 == 4 && d2 == 3) return detail::pass("a=(1,2): d=4 (k=1), d=3 (k=2)");

    // witness for d = 2: message (3 xi, 3 xi) gives (6 xi, 0, 0, 3)
    const Vector msg = {ext.scale_int(xi, 3), ext.scale_int(xi, 3)};
    const Vector c = multiply(ext, std::span<const Elem>(msg), moore_matrix(ext, literal, 2));
    const Vector expect = {ext.scale_int(xi, 6), ext.zero(), ext.zero(), ext.from_int(3)};
    const bool witness = c == expect && sum_rank_weight(ext, c, part) == 2;

    const PointSystem fixed = gen_points_primitive(ext, part);
    const int f1 = certify_msrd(LrsCode(ext, fixed, 1));
    const int f2 = certify_msrd(LrsCode(ext, fixed, 2));
    std::ostringstream os;
    os << "a=(1,2): d=" << d1 << " (k=1, expect 4), d=" << d2 << " (k=2, expect 3)";
    if (witness) os << ", witness (3xi,3xi) -> (6xi,0,0,3) of weight 2";
    os << "; 1^xi = 8 = 2 mod 3 so a=(1,2) is not a valid point system; a=(1,1+xi): d=" << f1 << ", " << f2;
    if (d1 == 4 && d2 == 2 && witness && f1 == 4 && f2 == 3) return {Status::Deviation, os.str()};
    return detail::failed(os.str());
}

/// Brute-force minimum distance equals n - k + 1.
inline Outcome certify(const LrsCode& code, int expected, const std::string& label) {
    const int d = certify_msrd(code);
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < code.k(); ++i) words *= code.ext().size();
    std::string msg = label + ": d=" + std::to_string(d) + " over " + std::to_string(words) + " codewords";
    return d == expected ? detail::pass(msg) : detail::failed(msg + ", expected " + std::to_string(expected));
}

inline Outcome rank_metric_specialization() {
    const ChainRing z4 = ChainRing::integers_mod(2, 2);
    const Extension ext(z4, detail::int_poly(z4, {1, 1, 0, 0, 1}));
    return certify(LrsCode(ext, gen_points_primitive(ext, LengthPartition({4})), 2), 3, "GR(4,4) n=m=4 k=2");
}

inline Outcome hamming_specialization() {
    const ChainRing z25 = ChainRing::integers_mod(5, 2);
    const Extension ext(z25, detail::int_poly(z25, {-1, 1}));
    return certify(LrsCode(ext, gen_points_coprime(ext, LengthPartition({1, 1, 1, 1})), 2), 3, "Z_25 (1,1,1,1) k=2");
}

/// Codeword plus random error of weight <= t decodes to the sent message.
inline Outcome wb_guarantee(std::size_t trials, std::uint64_t seed) {
    const Extension ext = detail::gr9_2();
    const LrsCode code(ext, gen_points_primitive(ext, LengthPartition({2, 2})), 2);
    std::size_t recovered = 0, miscorrected = 0, failed = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng = Rng::for_stream(seed, i);
        const Vector msg = detail::random_vector(ext, 2, rng);
        Vector y = encode(code, msg);
        const Vector e = sample_error(ext, code.partition(), rng.below(code.correction_radius() + 1), rng);
        for (std::size_t j = 0; j < y.size(); ++j) y[j] = ext.add(y[j], e[j]);
        const DecodeResult res = wb_decode(code, y);
        if (!res.ok())
            ++failed;
        else if (res.message == msg)
            ++recovered;
        else
            ++miscorrected;
    }
    std::string msg = std::to_string(recovered) + "/" + std::to_string(trials) + " recovered, " +
                      std::to_string(miscorrected) + " miscorrections, " + std::to_string(failed) + " failures";
    return recovered == trials ? detail::pass(msg) : detail::failed(msg);
}

inline Outcome error_erasure(std::size_t trials, std::uint64_t seed) {
    const Extension ext = detail::gr9_2();
    const LrsCode code(ext, gen_points_primitive(ext, LengthPartition({2, 2})), 1);
    ChannelConfig cfg;
    cfg.t = 1;
    cfg.rho = 1;
    cfg.trials = trials;
    cfg.seed = seed;
    const TrialStats stats = run_trials(code, cfg);
    std::ostringstream os;
    os << stats.successes << "/" << trials << " successes, rate " << stats.rate;
    return stats.successes == trials && stats.rate == 0.25 ? detail::pass(os.str()) : detail::failed(os.str());
}

// ---------------------------------------------------------------------------
// Suites.

/// The nine acceptance items, with their runtime budgets.
inline std::vector<Check> acceptance_checks() {
    return {
        {"msrd_certification", "MSRD certification, GR(9,2) partition (2,2), k=1,2", 30,
         [] { return running_example_certification(); }},
        {"rank_metric", "rank-metric specialization, GR(4,4) k=2, d=3", 60, [] { return rank_metric_specialization(); }},
        {"hamming_metric", "Hamming specialization, Z_25 (1,1,1,1) k=2, d=3", 10, [] { return hamming_specialization(); }},
        {"hamming_oracle", "sum-rank weight equals min Hamming weight under GL", 120, [] { return hamming_oracle(100, 404); }},
        {"wb_guarantee", "Welch-Berlekamp decoding, t=1, 1000 trials", 30, [] { return wb_guarantee(1000, 505); }},
        {"error_erasure", "error and erasure correction, t=1 rho=1, 500 trials", 60, [] { return error_erasure(500, 42); }},
        {"skew_identities", "skew identities incl. sigma order, 1e4 cases each", 120,
         [] {
             const std::vector<std::pair<const char*, Outcome>> parts = {
                 {"sigma_order", sigma_order(10000, 701)},
                 {"product_rule", product_rule(10000, 702)},
                 {"evaluation_connection", evaluation_connection(10000, 703)},
                 {"division", division_reconstruction(10000, 704)},
                 {"moore_lagrange", moore_inverse_is_lagrange(10000, 705)},
             };
             std::string summary;
             for (const auto& [name, out] : parts) {
                 if (out.status != Status::Pass) return detail::failed(std::string(name) + ": " + out.detail);
                 summary += (summary.empty() ? "" : "; ") + std::string(name) + " " + out.detail;
             }
             return detail::pass(summary);
         }},
        {"interpolation", "interpolation roundtrips, 1e3 per configuration", 30,
         [] { return interpolation_roundtrip(1000, 808); }},
        {"moore_invertible", "Moore invertibility, 100 random point systems", 60, [] { return moore_invertible(100, 909); }},
    };
}

/// Fast random property suites; each names the property it covers.
inline std::vector<Check> quick_checks() {
    return {
        {"ring_axioms", "ring axioms and inverses", 0, [] { return ring_axioms(3000, 11); }},
        {"sigma_order", "sigma has order m and fixes exactly R", 0, [] { return sigma_order(3000, 12); }},
        {"product_rule", "product rule for remainder evaluation", 0, [] { return product_rule(1500, 13); }},
        {"evaluation_connection", "operator vs remainder evaluation", 0, [] { return evaluation_connection(1500, 14); }},
        {"division", "left and right division reconstruct", 0, [] { return division_reconstruction(1500, 15); }},
        {"moore_lagrange", "Moore inverse rows are Lagrange coefficients", 0, [] { return moore_inverse_is_lagrange(300, 16); }},
        {"interpolation", "interpolation roundtrips", 0, [] { return interpolation_roundtrip(100, 17); }},
        {"moore_invertible", "square Moore matrices invert", 0, [] { return moore_invertible(40, 18); }},
        {"hamming_oracle", "sum-rank weight vs Hamming oracle", 0, [] { return hamming_oracle(20, 19); }},
        {"encode_paths", "generator and evaluation encoders agree", 0, [] { return encode_paths(1000, 20); }},
        {"wb_guarantee", "Welch-Berlekamp decoding within radius", 0, [] { return wb_guarantee(200, 21); }},
        {"error_erasure", "error and erasure decoding within guarantee", 0, [] { return error_erasure(100, 22); }},
    };
}

inline Report run_check(const Check& check) {
    Report rep{check.name, check.title, Status::Pass, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = check.run();
    } catch (const std::exception& e) {
        out = detail::failed(std::string("exception: ") + e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.status = out.status;
    rep.detail = out.detail;
    if (check.time_limit > 0 && rep.seconds > check.time_limit && rep.status != Status::Fail) {
        rep.status = Status::Fail;
        rep.detail += " (took longer than " + std::to_string(static_cast<int>(check.time_limit)) + " s)";
    }
    return rep;
}

}  // namespace lrs::selftest
