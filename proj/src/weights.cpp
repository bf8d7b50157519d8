#include "cml/weights.hpp"

#include <numeric>
#include <stdexcept>

namespace cml {

long long AlphaWeight::height() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), 0ll);
}

bool AlphaWeight::in_positive_cone() const {
    for (long long c : coeffs)
        if (c < 0) return false;
    return true;
}

std::string AlphaWeight::str() const {
    std::string out = std::to_string(k) + "L0+L" + std::to_string(s) + " - [";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs[i]);
    }
    out += ']';
    return out;
}

AlphaWeight highest_weight(int p, int k, int s) {
    if (p < 2 || s < 0 || s >= p || k < 0)
        throw std::invalid_argument("highest weight needs p >= 2, 0 <= s < p, k >= 0");
    return AlphaWeight{p, k, s, std::vector<long long>(static_cast<std::size_t>(p), 0)};
}

std::vector<long long> omega_coeffs(const std::vector<long long>& coeffs) {
    const int p = static_cast<int>(coeffs.size());
    std::vector<long long> out(coeffs.size(), 0);
    for (int i = 0; i < p; ++i) out[(p - i) % p] = coeffs[i];
    return out;
}

AlphaWeight omega_weight(const AlphaWeight& w) {
    return AlphaWeight{w.p, w.k, w.s == 0 ? 0 : w.p - w.s, omega_coeffs(w.coeffs)};
}

std::vector<long long> lambda_weight_coeffs(int p, int ell, int t) {
    if (p < 2 || ell < 1 || t < 0 || !(ell + t < p - ell + 1))
        throw std::invalid_argument("lambda^p_{l,t} needs l >= 1, t >= 0, l+t < p-l+1");
    std::vector<long long> c(static_cast<std::size_t>(p), 0);
    c[0] = ell;
    for (int j = 1; j <= t; ++j) c[j] = ell;
    for (int d = 1; d < ell; ++d) c[t + d] = ell - d;
    for (int d = 1; d < ell; ++d) c[p - d] = ell - d;
    return c;
}

std::vector<long long> mu_weight_coeffs(int p, int ell, int u) {
    if (p < 2 || ell < 1 || u > p || !(ell < u - ell + 1))
        throw std::invalid_argument("mu^p_{l,u} needs l >= 1, u <= p, l < u-l+1");
    std::vector<long long> c(static_cast<std::size_t>(p), 0);
    c[0] = ell;
    for (int d = 1; d < ell; ++d) c[d] = ell - d;
    for (int j = 1; j < ell; ++j) c[u - ell + j] += j;
    for (int j = u; j < p; ++j) c[j] = ell;
    return c;
}

}  // namespace cml
