#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lrs/decoder.hpp"

namespace lrs {

using json = nlohmann::json;

inline constexpr int kCodeSpecFormat = 1;

// ---------------------------------------------------------------------------
// Polynomial expressions such as "y^2+y+1" or "z^2 + 3*y*z - 1".

/// Integer coefficients keyed by (deg_y, deg_z).
using BivariateTerms = std::map<std::pair<int, int>, Int>;

inline BivariateTerms parse_polynomial_expression(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");
    BivariateTerms terms;
    std::size_t pos = 0;
    auto read_int = [&](Int& out) {
        const std::size_t begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (begin == pos) return false;
        out = std::stoll(s.substr(begin, pos - begin));
        return true;
    };
    while (pos < s.size()) {
        Int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail(ErrorCode::ParseError, "expected '+' or '-' in \"" + s + "\"");
        }
        Int coeff = 1;
        int dy = 0, dz = 0;
        bool any = false;
        for (;;) {
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                Int v = 0;
                read_int(v);
                coeff *= v;
                any = true;
            } else if (pos < s.size() && (s[pos] == 'y' || s[pos] == 'z')) {
                const char var = s[pos++];
                Int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    if (!read_int(e)) fail(ErrorCode::ParseError, "missing exponent in \"" + s + "\"");
                }
                (var == 'y' ? dy : dz) += static_cast<int>(e);
                any = true;
            } else {
                break;
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == 'y' || s[pos] == 'z'))
                continue;
            break;
        }
        if (!any) fail(ErrorCode::ParseError, "malformed term in \"" + s + "\"");
        terms[{dy, dz}] += sign * coeff;
    }
    return terms;
}

/// Ascending integer coefficients of a polynomial in y alone.
inline std::vector<Int> parse_base_modulus(std::string_view text) {
    std::vector<Int> out;
    for (const auto& [deg, c] : parse_polynomial_expression(text)) {
        if (deg.second != 0) fail(ErrorCode::ParseError, "g must be a polynomial in y");
        if (out.size() <= static_cast<std::size_t>(deg.first)) out.resize(static_cast<std::size_t>(deg.first) + 1, 0);
        out[static_cast<std::size_t>(deg.first)] += c;
    }
    return out;
}

/// Polynomial in z with coefficients in R (written in y), ascending in z.
inline Poly parse_extension_modulus(const ChainRing& base, std::string_view text) {
    Poly out;
    for (const auto& [deg, c] : parse_polynomial_expression(text)) {
        const auto [dy, dz] = deg;
        if (out.size() <= static_cast<std::size_t>(dz)) out.resize(static_cast<std::size_t>(dz) + 1);
        // y^dy reduced into R
        Elem y_power = base.one();
        Elem y;
        if (base.degree() > 1) {
            y.c[1] = 1;
        } else {
            y = base.reduce(base.from_int(-base.g()[0]));
        }
        for (int i = 0; i < dy; ++i) y_power = base.mul(y_power, y);
        out[static_cast<std::size_t>(dz)] = base.add(out[static_cast<std::size_t>(dz)], base.scale_int(y_power, c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elements: an element of S is an array of m arrays of s integers; an element
// of R is an array of s integers. Parsing also accepts a bare integer (a
// constant) and a flat integer array (xi-coordinates that are constants).

inline json ring_elem_to_json(const ChainRing& ring, const Elem& x) {
    json out = json::array();
    for (std::size_t i = 0; i < ring.degree(); ++i) out.push_back(x.c[i]);
    return out;
}

inline Elem ring_elem_from_json(const ChainRing& ring, const json& j) {
    if (j.is_number_integer()) return ring.from_int(j.get<Int>());
    if (!j.is_array() || j.size() > ring.degree()) fail(ErrorCode::ParseError, "R-element must be an array of at most s integers");
    Elem out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) fail(ErrorCode::ParseError, "R-element coordinates must be integers");
        out.c[i] = j[i].get<Int>();
    }
    return ring.reduce(out);
}

inline json elem_to_json(const Extension& ext, const Elem& x) {
    json out = json::array();
    for (std::size_t j = 0; j < ext.rank(); ++j) out.push_back(ring_elem_to_json(ext.base(), ext.coord(x, j)));
    return out;
}

inline Elem elem_from_json(const Extension& ext, const json& j) {
    if (j.is_number_integer()) return ext.from_int(j.get<Int>());
    if (!j.is_array() || j.size() > ext.rank()) fail(ErrorCode::ParseError, "S-element must be an array of at most m coordinates");
    Elem out;
    for (std::size_t k = 0; k < j.size(); ++k) ext.set_coord(out, k, ring_elem_from_json(ext.base(), j[k]));
    return out;
}

inline json vector_to_json(const Extension& ext, std::span<const Elem> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(elem_to_json(ext, x));
    return out;
}

inline Vector vector_from_json(const Extension& ext, const json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "vector must be a JSON array");
    Vector out;
    for (const auto& x : j) out.push_back(elem_from_json(ext, x));
    return out;
}

inline json ring_matrix_to_json(const ChainRing& ring, const Matrix& a) {
    json out = json::array();
    for (std::size_t i = 0; i < a.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols; ++j) row.push_back(ring_elem_to_json(ring, a(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline json skew_to_json(const Extension& ext, const SkewPolynomial& f) { return vector_to_json(ext, f.coeffs); }

inline SkewPolynomial skew_from_json(const Extension& ext, const json& j) { return SkewPolynomial(vector_from_json(ext, j)); }

// ---------------------------------------------------------------------------
// Ring and extension specs: {p, r, g: [int...]} and {p, r, g, h: [[int...]...]}.

inline json ring_to_json(const ChainRing& ring) {
    return json{{"p", ring.p()}, {"r", ring.r()}, {"g", ring.g()}};
}

inline ChainRing ring_from_json(const json& j) {
    try {
        return ChainRing(j.at("p").get<Int>(), j.at("r").get<int>(), j.at("g").get<std::vector<Int>>());
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("ring spec: ") + e.what());
    }
}

inline json extension_to_json(const Extension& ext) {
    json out = ring_to_json(ext.base());
    json h = json::array();
    for (const auto& c : ext.h()) h.push_back(ring_elem_to_json(ext.base(), c));
    out["h"] = std::move(h);
    return out;
}

inline Extension extension_from_json(const ChainRing& base, const json& j) {
    if (!j.contains("h") || !j["h"].is_array()) fail(ErrorCode::ParseError, "extension spec needs an array \"h\"");
    Poly h;
    for (const auto& c : j["h"]) h.push_back(ring_elem_from_json(base, c));
    return Extension(base, std::move(h));
}

inline Extension extension_from_json(const json& j) { return extension_from_json(ring_from_json(j), j); }

// ---------------------------------------------------------------------------
// Code spec file.

/// {format: 1, ring, extension, partition, k, points: {a, beta} | {auto}}.
struct CodeSpec {
    Extension ext;
    PointSystem points;
    std::size_t k = 0;

    LrsCode build() const { return LrsCode(ext, points, k); }
};

inline json code_spec_to_json(const CodeSpec& spec) {
    json a = json::array();
    for (const auto& x : spec.points.a) a.push_back(elem_to_json(spec.ext, x));
    json beta = json::array();
    for (const auto& block : spec.points.beta) beta.push_back(vector_to_json(spec.ext, block));
    json h = json::array();
    for (const auto& c : spec.ext.h()) h.push_back(ring_elem_to_json(spec.ext.base(), c));
    return json{{"format", kCodeSpecFormat},
                {"ring", ring_to_json(spec.ext.base())},
                {"extension", json{{"h", std::move(h)}}},
                {"partition", spec.points.partition().sizes()},
                {"k", spec.k},
                {"points", json{{"a", std::move(a)}, {"beta", std::move(beta)}}}};
}

inline CodeSpec code_spec_from_json(const json& j) {
    try {
        if (j.contains("format") && j.at("format").get<int>() != kCodeSpecFormat)
            fail(ErrorCode::ParseError, "unsupported code spec format");
        const ChainRing base = ring_from_json(j.at("ring"));
        Extension ext = extension_from_json(base, j.at("extension"));
        const LengthPartition partition(j.at("partition").get<std::vector<std::size_t>>());
        const auto k = j.at("k").get<std::size_t>();
        const json& pts = j.at("points");
        PointSystem points;
        if (pts.contains("auto")) {
            const auto kind = pts.at("auto").get<std::string>();
            if (kind == "primitive") {
                points = gen_points_primitive(ext, partition);
            } else if (kind == "coprime") {
                points = gen_points_coprime(ext, partition);
            } else {
                fail(ErrorCode::ParseError, "unknown point generator \"" + kind + "\"");
            }
        } else {
            for (const auto& x : pts.at("a")) points.a.push_back(elem_from_json(ext, x));
            for (const auto& block : pts.at("beta")) points.beta.push_back(vector_from_json(ext, block));
            if (points.beta.size() != points.a.size() || points.partition() != partition)
                fail(ErrorCode::PartitionMismatch, "points do not match the partition");
        }
        return CodeSpec{std::move(ext), std::move(points), k};
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("code spec: ") + e.what());
    }
}

inline json decode_result_to_json(const Extension& ext, const DecodeResult& res) {
    json out{{"status", res.ok() ? "success" : "failure"}};
    out["message"] = res.ok() ? vector_to_json(ext, res.message) : json::array();
    out["codeword"] = res.ok() ? vector_to_json(ext, res.codeword) : json::array();
    out["error_weight"] = res.ok() ? json(res.error_weight) : json(nullptr);
    return out;
}

inline json trial_stats_to_json(const TrialStats& stats) {
    return json{{"trials", stats.trials},     {"successes", stats.successes},
                {"failures", stats.failures}, {"miscorrections", stats.miscorrections},
                {"rate", stats.rate},         {"seconds", stats.seconds}};
}

}  // namespace lrs
