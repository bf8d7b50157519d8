#include "cml/mullineux.hpp"

#include <algorithm>
#include <stdexcept>

#include "cml/crystal.hpp"
#include "cml/weights.hpp"

namespace cml {

std::string OrbitWeight::str() const {
    std::string out = std::to_string(level) + "L0^ - [";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs[i]);
    }
    out += "] type=";
    out += type_a2 ? "A2" : "D2";
    return out;
}

Partition mullineux(const Partition& lambda, int p) {
    if (!is_p_restricted(lambda, p))
        throw std::invalid_argument("mullineux input must be p-restricted");
    // Strip to the empty partition by any maximal raising string.
    std::vector<int> residues;
    Partition cur = lambda;
    while (!cur.empty()) {
        bool moved = false;
        for (int i = 0; i < p && !moved; ++i) {
            if (auto up = apply_crystal_operator(cur, i, Dir::raise_, 0, p)) {
                residues.push_back(i);
                cur = std::move(*up);
                moved = true;
            }
        }
        if (!moved) throw std::logic_error("p-restricted partition with no raising operator");
    }
    // Rebuild with negated residues, innermost step first.
    Partition out;
    for (auto it = residues.rbegin(); it != residues.rend(); ++it) {
        auto down = apply_crystal_operator(out, (p - *it) % p, Dir::lower, 0, p);
        if (!down) throw std::logic_error("mullineux rebuild stalled");
        out = std::move(*down);
    }
    return out;
}

std::vector<long long> orbit_delta_coeffs(int p) {
    if (p < 2) throw std::invalid_argument("orbit_delta_coeffs needs p >= 2");
    if (p % 2 == 1) {
        std::vector<long long> d(static_cast<std::size_t>((p - 1) / 2 + 1), 2);
        d.back() = 1;
        return d;
    }
    return std::vector<long long>(static_cast<std::size_t>(p / 2 + 1), 1);
}

namespace {

int orbit_size(int i, int p) { return (2 * i) % p == 0 ? 1 : 2; }

}  // namespace

std::vector<std::vector<long long>> orbit_cartan(int p) {
    const int checked = p % 2 == 1 ? (p - 1) / 2 + 1 : p / 2 + 1;
    // Entries of A^(1)_{p-1}; p = 2 ([[2,-2],[-2,2]]) is special-cased below.
    auto a = [&](int i, int j) -> long long {
        int d = ((i - j) % p + p) % p;
        if (d == 0) return 2;
        if (d == 1 || d == p - 1) return -1;
        return 0;
    };
    std::vector<std::vector<long long>> c(static_cast<std::size_t>(checked),
                                          std::vector<long long>(static_cast<std::size_t>(checked), 0));
    for (int i = 0; i < checked; ++i)
        for (int j = 0; j < checked; ++j) {
            long long sum = 0;
            int nj = orbit_size(j, p);
            for (int r = 0; r < nj; ++r) {
                int col = r == 0 ? j : ((p - j) % p);
                if (p == 2)
                    sum += i == col ? 2 : -2;
                else
                    sum += a(i, col);
            }
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sum;
        }
    return c;
}

long long fixed_points_Z(int p, int k, int ell) {
    if (ell < 1 || ell > p / 2)
        throw std::invalid_argument("fixed_points_Z needs 1 <= l <= p/2");
    long long by_mullineux = 0, by_transpose = 0;
    for (const auto& tuple : enumerate_Z(p, k, 0, ell)) {
        bool fixed_m = true, fixed_t = true;
        for (const Partition& lam : tuple) {
            if (mullineux(lam, p) != lam) fixed_m = false;
            if (transpose(lam) != lam) fixed_t = false;
        }
        by_mullineux += fixed_m;
        by_transpose += fixed_t;
    }
    if (by_mullineux != by_transpose)
        throw std::logic_error("Mullineux and transpose fixed-point counts disagree on p-cores");
    return by_mullineux;
}

std::pair<long long, OrbitWeight> orbit_multiplicity(int p, int k, int ell) {
    if (k < 1) throw std::invalid_argument("orbit_multiplicity needs k >= 1");
    long long mult = fixed_points_Z(p, k, ell);
    const bool odd = p % 2 == 1;
    const int checked = odd ? (p - 1) / 2 + 1 : p / 2 + 1;
    OrbitWeight gamma{p, odd, k + 1, std::vector<long long>(static_cast<std::size_t>(checked), 0)};
    for (int i = 0; i < ell; ++i) gamma.coeffs[static_cast<std::size_t>(i)] = ell - i;

    // Transfer check: folding gamma back along the full omega-orbits
    // must reproduce lambda^p_{l,0}.
    auto cartan = orbit_cartan(p);
    std::vector<long long> folded(static_cast<std::size_t>(p), 0);
    for (int i = 0; i < checked; ++i) {
        long long cii = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        long long m = gamma.coeffs[static_cast<std::size_t>(i)];
        if ((2 * m) % cii != 0) throw std::logic_error("orbit transfer is not integral");
        for (int r = 0; r < orbit_size(i, p); ++r)
            folded[static_cast<std::size_t>(r == 0 ? i : (p - i) % p)] += 2 * m / cii;
    }
    if (folded != lambda_weight_coeffs(p, ell, 0))
        throw std::logic_error("orbit weight transfer does not match lambda^p_{l,0}");
    return {mult, gamma};
}

bool gamma_is_maximal(int p, int k, int ell) {
    auto [mult, gamma] = orbit_multiplicity(p, k, ell);
    if (mult == 0) return false;
    std::vector<long long> delta = orbit_delta_coeffs(p);
    // gamma + delta-check lies outside wt iff some alpha-check
    // coefficient of Lambda-check - (gamma + delta-check) is negative.
    for (std::size_t i = 0; i < delta.size(); ++i)
        if (gamma.coeffs[i] - delta[i] < 0) return true;
    return false;
}

}  // namespace cml
