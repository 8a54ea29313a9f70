#pragma once

#include <vector>

#include "lrs/lrs.hpp"

namespace fx {

using namespace lrs;

inline ChainRing z4() { return ChainRing::integers_mod(2, 2); }
inline ChainRing z9() { return ChainRing::integers_mod(3, 2); }
inline ChainRing z25() { return ChainRing::integers_mod(5, 2); }
// GR(4,2) = Z_4[y]/(y^2+y+1)
inline ChainRing gr4_2() { return ChainRing(2, 2, {1, 1, 1}); }

inline Elem r_elem(std::vector<Int> c) {
    Elem out;
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] = c[i];
    return out;
}

/// Polynomial in z over a base ring with integer-constant coefficients.
inline Poly int_poly(const ChainRing& base, std::vector<Int> coeffs) {
    Poly out;
    for (auto c : coeffs) out.push_back(base.from_int(c));
    return out;
}

// Z_4[z]/(z^2+z+1) = GR(4,2)
inline Extension ext_z4_m2() { return Extension(z4(), int_poly(z4(), {1, 1, 1})); }
// Z_9[z]/(z^2+1) = GR(9,2)
inline Extension ext_z9_m2() { return Extension(z9(), int_poly(z9(), {1, 0, 1})); }
// GR(4,2)[z]/(z^2+z+y), residue F_16 over F_4
inline Extension ext_gr42_m2() {
    const ChainRing b = gr4_2();
    return Extension(b, Poly{r_elem({0, 1}), b.one(), b.one()});
}
// Z_4[z]/(z^4+z+1) = GR(4,4)
inline Extension ext_z4_m4() { return Extension(z4(), int_poly(z4(), {1, 1, 0, 0, 1})); }
// Z_9[z]/(z^4+z^3+2) = GR(9,4); z^4+z^3+2 is irreducible over F_3
inline Extension ext_z9_m4() { return Extension(z9(), int_poly(z9(), {2, 0, 0, 1, 1})); }
// m = 1 over Z_25
inline Extension ext_z25_m1() { return Extension(z25(), int_poly(z25(), {-1, 1})); }

inline Elem xi(const Extension& ext) { return ext.xi_power(1); }

/// c0 + c1 xi with integer coordinates.
inline Elem s_elem(const Extension& ext, Int c0, Int c1) {
    return ext.add(ext.from_int(c0), ext.scale_int(xi(ext), c1));
}

/// a = (1, 1 + xi), beta = ((1, xi), (1, xi)) over GR(9,2); 1 + xi is the
/// first primitive element of F_9 in index order.
inline PointSystem running_points(const Extension& ext) {
    PointSystem pts;
    pts.a = {ext.from_int(1), s_elem(ext, 1, 1)};
    pts.beta = {{ext.one(), xi(ext)}, {ext.one(), xi(ext)}};
    return pts;
}

/// a = (1, 2) with the same beta. Not a valid point system: 1^xi = 8 = 2 mod 3.
inline PointSystem conjugate_points(const Extension& ext) {
    PointSystem pts = running_points(ext);
    pts.a[1] = ext.from_int(2);
    return pts;
}

inline Vector random_vector(const Extension& ext, std::size_t n, Rng& rng) {
    Vector v(n);
    for (auto& x : v) x = ext.random(rng);
    return v;
}

inline SkewPolynomial random_poly(const Extension& ext, std::size_t len, Rng& rng) {
    return SkewPolynomial(random_vector(ext, len, rng));
}

inline SkewPolynomial random_monic(const Extension& ext, std::size_t deg, Rng& rng) {
    Vector c = random_vector(ext, deg + 1, rng);
    c[deg] = ext.one();
    return SkewPolynomial(std::move(c));
}

/// Random point system with the MSRD property for the given block sizes.
inline PointSystem random_points(const Extension& ext, const std::vector<std::size_t>& sizes, Rng& rng) {
    for (;;) {
        PointSystem pts;
        for (auto ni : sizes) {
            pts.a.push_back(ext.random_unit(rng));
            Vector block(ni);
            for (auto& b : block) b = ext.random(rng);
            pts.beta.push_back(std::move(block));
        }
        if (has_msrd_property(ext, pts)) return pts;
    }
}

}  // namespace fx
