#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cml/crystal.hpp"
#include "cml/mullineux.hpp"
#include "cml/weights.hpp"
#include "util.hpp"

using namespace cml;

namespace {

// Alternative Mullineux route: strip with the highest residue first
// instead of the lowest; the result must not depend on the path.
Partition mullineux_high_first(const Partition& lambda, int p) {
    std::vector<int> residues;
    Partition cur = lambda;
    while (!cur.empty()) {
        for (int i = p - 1; i >= 0; --i) {
            if (auto up = apply_crystal_operator(cur, i, Dir::raise_, 0, p)) {
                residues.push_back(i);
                cur = std::move(*up);
                break;
            }
        }
    }
    Partition out;
    for (auto it = residues.rbegin(); it != residues.rend(); ++it)
        out = *apply_crystal_operator(out, (p - *it) % p, Dir::lower, 0, p);
    return out;
}

}  // namespace

TEST_CASE("mullineux examples") {
    CHECK(mullineux(Partition(), 3) == Partition());
    CHECK(mullineux(Partition({2}), 3) == Partition({1, 1}));
    CHECK(mullineux(Partition({2, 1, 1}), 3) == Partition({3, 1}));
    CHECK_THROWS_AS(mullineux(Partition({4}), 3), std::invalid_argument);
}

TEST_CASE("mullineux involution, weight twist, path independence") {
    for (int p = 2; p <= 5; ++p)
        for (const Partition& lam : testutil::partitions_up_to(10)) {
            if (!is_p_restricted(lam, p)) continue;
            Partition mu = mullineux(lam, p);
            CHECK(is_p_restricted(mu, p));
            CHECK(mullineux(mu, p) == lam);
            CHECK(mu == mullineux_high_first(lam, p));
            CHECK(wt_partition(mu, 0, p).coeffs ==
                  omega_coeffs(wt_partition(lam, 0, p).coeffs));
        }
}

TEST_CASE("mullineux is transpose on p-cores") {
    for (int p = 2; p <= 7; ++p)
        for (const Partition& lam : testutil::partitions_up_to(12)) {
            if (!is_p_core(lam, p)) continue;
            // every p-core is p-restricted: row differences >= p force a
            // removable p-hook
            CHECK(is_p_restricted(lam, p));
            CHECK(mullineux(lam, p) == transpose(lam));
        }
}

TEST_CASE("omega") {
    AlphaWeight w = highest_weight(5, 0, 0);
    w.coeffs[1] = 1;
    CHECK(omega_weight(w).coeffs == std::vector<long long>{0, 0, 0, 0, 1});
    CHECK(omega_weight(omega_weight(w)) == w);
    // omega(lambda^p_{l,t}) = mu^p_{l,p-t}
    for (int p = 2; p <= 9; ++p)
        for (int ell = 1; 2 * ell <= p; ++ell)
            for (int t = 0; 2 * ell + t <= p; ++t)
                CHECK(omega_coeffs(lambda_weight_coeffs(p, ell, t)) ==
                      mu_weight_coeffs(p, ell, p - t));
}

TEST_CASE("fixed points of Z") {
    CHECK(fixed_points_Z(5, 1, 2) == 2);
    CHECK(fixed_points_Z(7, 1, 3) == 3);
    for (int p = 2; p <= 7; ++p)
        for (int k = 1; k <= 2; ++k) CHECK(fixed_points_Z(p, k, 1) == 1);
    CHECK_THROWS_AS(fixed_points_Z(5, 1, 3), std::invalid_argument);
}

TEST_CASE("orbit algebra data") {
    CHECK(orbit_delta_coeffs(5) == std::vector<long long>{2, 2, 1});
    CHECK(orbit_delta_coeffs(6) == std::vector<long long>{1, 1, 1, 1});

    for (int p = 2; p <= 9; ++p) {
        auto c = orbit_cartan(p);
        const int checked = static_cast<int>(c.size());
        CHECK(checked == (p % 2 ? (p - 1) / 2 : p / 2) + 1);
        for (int i = 0; i < checked; ++i) {
            long long diag = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
            if (p % 2 == 1 && i == (p - 1) / 2)
                CHECK(diag == 1);  // long node of A^(2)_{p-1}
            else
                CHECK(diag == 2);
        }
    }
}

TEST_CASE("orbit multiplicity and maximality") {
    auto [mult, gamma] = orbit_multiplicity(5, 1, 2);
    CHECK(mult == 2);
    CHECK(gamma.type_a2);
    CHECK(gamma.level == 2);
    CHECK(gamma.coeffs == std::vector<long long>{2, 1, 0});
    CHECK(gamma.str() == "2L0^ - [2,1,0] type=A2");

    auto [mult6, gamma6] = orbit_multiplicity(6, 1, 2);
    CHECK_FALSE(gamma6.type_a2);  // D^(2)_4
    CHECK(gamma6.coeffs.size() == 4);
    CHECK(mult6 == fixed_points_Z(6, 1, 2));

    CHECK(orbit_multiplicity(3, 2, 1).first == 1);
    CHECK(gamma_is_maximal(5, 1, 2));
}
