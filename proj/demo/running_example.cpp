// Walk through the GR(9,2) code: build it, encode, corrupt, decode, then push
// a codeword through a rank-deficient block transfer and recover it.
#include <cstdio>
#include <string>

#include "lrs/lrs.hpp"

namespace {

std::string show(const lrs::Extension& ext, const lrs::Vector& v) { return lrs::vector_to_json(ext, v).dump(); }

}  // namespace

int main() {
    using namespace lrs;

    // S = Z_9[z]/(z^2+1) = GR(9,2), sigma(xi) = xi^3 = -xi
    const ChainRing z9 = ChainRing::integers_mod(3, 2);
    const Extension ext(z9, parse_extension_modulus(z9, "z^2+1"));
    std::printf("S = GR(9,2): |S| = %llu, |S*| = %llu, sigma(xi) = %s\n", static_cast<unsigned long long>(ext.size()),
                static_cast<unsigned long long>(ext.unit_count()), elem_to_json(ext, ext.sigma_image()).dump().c_str());

    const LengthPartition part({2, 2});
    const PointSystem pts = gen_points_primitive(ext, part);
    std::printf("points a = %s, beta_i = %s\n", show(ext, pts.a).c_str(), show(ext, pts.beta[0]).c_str());

    // 2 and 1 are conjugate: 1^xi = sigma(xi) xi^{-1} = -1 = 8 = 2 mod 3
    PointSystem naive = pts;
    naive.a[1] = ext.from_int(2);
    std::printf("a = (1, 2) valid? %s\n", has_msrd_property(ext, naive) ? "yes" : "no");

    const LrsCode code(ext, pts, 2);
    std::printf("code: n=%zu k=%zu d=%zu, corrects t=%zu\n", code.n(), code.k(), code.designed_distance(),
                code.correction_radius());
    std::printf("brute-force minimum distance: %d\n", certify_msrd(code));

    Rng rng(2024);
    const Vector msg = {ext.one(), ext.xi_power(1)};
    const Vector c = encode(code, msg);
    const Vector e = sample_error(ext, part, 1, rng);
    Vector y = c;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = ext.add(y[j], e[j]);
    std::printf("\nmessage  %s\ncodeword %s\nerror    %s (sum-rank weight %d)\n", show(ext, msg).c_str(),
                show(ext, c).c_str(), show(ext, e).c_str(), sum_rank_weight(ext, e, part));
    const DecodeResult res = wb_decode(code, y);
    std::printf("decoded  %s, status %s, error weight %d\n", show(ext, res.message).c_str(),
                res.ok() ? "success" : "failure", res.error_weight);

    // Error and erasure: n - k + 1 = 4 >= 2t + rho + 1 with t = rho = 1.
    const LrsCode low(ext, pts, 1);
    const auto blocks = sample_transfer(z9, part, {2, 2}, 1, rng);
    const Vector sent = encode(low, Vector{ext.xi_power(1)});
    Vector received = apply_transfer(ext, sent, part, blocks);
    const Vector e2 = sample_error(ext, part, 1, rng);
    for (std::size_t j = 0; j < received.size(); ++j) received[j] = ext.add(received[j], e2[j]);
    const DecodeResult er = erasure_decode(low, received, blocks);
    std::printf("\nk=1 over a transfer of free rank %d with one error: %s, message %s\n", transfer_free_rank(z9, blocks),
                er.ok() ? "success" : "failure", show(ext, er.message).c_str());
    return res.ok() && er.ok() ? 0 : 1;
}
