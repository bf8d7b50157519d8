#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cml/crystal.hpp"
#include "cml/plane.hpp"
#include "cml/words.hpp"
#include "util.hpp"

using namespace cml;

namespace {

// All CSPP fillings of shape lambda with entries in 1..maxval.
void cspp_fill(const Partition& shape, int maxval, Tableau& cur, int i, int j,
               std::vector<Tableau>& out) {
    if (i > shape.length()) {
        out.push_back(cur);
        return;
    }
    if (j > shape.part(i)) {
        cspp_fill(shape, maxval, cur, i + 1, 1, out);
        return;
    }
    int hi = maxval;
    if (j > 1) hi = std::min(hi, cur.entry(i, j - 1));
    if (i > 1) hi = std::min(hi, cur.entry(i - 1, j) - 1);
    for (int v = hi; v >= 1; --v) {
        cur.rows[static_cast<std::size_t>(i - 1)].push_back(v);
        cspp_fill(shape, maxval, cur, i, j + 1, out);
        cur.rows[static_cast<std::size_t>(i - 1)].pop_back();
    }
}

std::vector<Tableau> all_cspp(const Partition& shape, int maxval) {
    Tableau cur{{}, TableauKind::cspp};
    cur.rows.assign(static_cast<std::size_t>(shape.length()), {});
    std::vector<Tableau> out;
    cspp_fill(shape, maxval, cur, 1, 1, out);
    return out;
}

// All plane partitions with total size <= budget, as column chains.
void pp_chains(const std::vector<Partition>& pool, int budget, std::vector<Partition>& cols,
               std::vector<PlanePartition>& out) {
    out.emplace_back(cols);
    for (const Partition& next : pool) {
        if (next.empty() || next.size() > budget) continue;
        if (!cols.empty() && !contains(cols.back(), next)) continue;
        cols.push_back(next);
        pp_chains(pool, budget - next.size(), cols, out);
        cols.pop_back();
    }
}

std::vector<PlanePartition> all_plane_partitions(int budget) {
    auto pool = testutil::partitions_up_to(budget);
    std::vector<Partition> cols;
    std::vector<PlanePartition> out;
    pp_chains(pool, budget, cols, out);
    return out;
}

}  // namespace

TEST_CASE("beta weights") {
    BetaWeight w = beta_weight_partition(Partition({2, 1}), 0);
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(1) == 1);
    CHECK(w.coeff(-1) == 1);
    CHECK(w.total() == 3);
    CHECK(BetaWeight().str() == "0");

    CHECK(beta_transfer(BetaWeight(), 5) == std::vector<long long>(5, 0));
    BetaWeight bm1;
    bm1.add(-1, 1);
    CHECK(beta_transfer(bm1, 5) == std::vector<long long>{0, 0, 0, 0, 1});
    BetaWeight b03;
    b03.add(0, 1);
    b03.add(3, 1);
    CHECK(beta_transfer(b03, 3) == std::vector<long long>{2, 0, 0});
}

TEST_CASE("lambda hat") {
    BetaWeight b0;
    b0.add(0, 1);
    CHECK(lambda_hat(1, 0) == b0);

    BetaWeight tent2;
    tent2.add(-1, 1);
    tent2.add(0, 2);
    tent2.add(1, 1);
    CHECK(lambda_hat(2, 0) == tent2);

    BetaWeight step;
    step.add(0, 1);
    step.add(1, 1);
    CHECK(lambda_hat(1, 1) == step);

    // lambda_hat = full-box tent minus the (s^(l+s)) rectangle tent
    for (int ell = 1; ell <= 5; ++ell)
        for (int s = 0; s <= 5; ++s) {
            Partition rect(std::vector<int>(static_cast<std::size_t>(ell + s), s));
            CHECK(lambda_hat(ell, s) ==
                  beta_square_tent(ell + s) - beta_weight_partition(rect, 0));
        }

    // T_p folds the tent onto lambda^p_{l,s}
    CHECK(beta_transfer(lambda_hat(2, 0), 5) == lambda_weight_coeffs(5, 2, 0));
    for (int p = 2; p <= 9; ++p)
        for (int s = 0; s < p; ++s)
            for (int ell = 1; ell <= (p - s) / 2; ++ell)
                CHECK(beta_transfer(lambda_hat(ell, s), p) == lambda_weight_coeffs(p, ell, s));
}

TEST_CASE("transfer matches the alpha census") {
    for (const Partition& lam : testutil::partitions_up_to(8))
        for (int p = 2; p <= 5; ++p) {
            if (!is_p_restricted(lam, p)) continue;
            CHECK(beta_transfer(beta_weight_partition(lam, 0), p) ==
                  wt_partition(lam, 0, p).coeffs);
        }
}

TEST_CASE("Frobenius coordinates") {
    CHECK(frobenius_partition({1}, {1}) == Partition({1}));
    CHECK(frobenius_partition({3}, {1}) == Partition({3}));
    CHECK(frobenius_partition({2, 1}, {3, 1}) == Partition({2, 2, 1}));
    CHECK(frobenius_partition({}, {}) == Partition());
    CHECK_THROWS_AS(frobenius_partition({1, 1}, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_partition({2}, {2, 1}), std::invalid_argument);
}

TEST_CASE("plane partition basics") {
    PlanePartition pi({Partition({2, 1}), Partition({1})});
    CHECK(pi.entry(1, 1) == 2);
    CHECK(pi.entry(1, 2) == 1);
    CHECK(pi.entry(2, 1) == 1);
    CHECK(pi.total() == 4);
    CHECK(pi.str() == "[[2,1],[1]]");
    CHECK_THROWS_AS(PlanePartition({Partition({1}), Partition({2})}), std::invalid_argument);

    BetaWeight expect;
    expect.add(0, 2);
    expect.add(1, 1);
    expect.add(-1, 1);
    CHECK(beta_weight_pp(pi) == expect);
    CHECK(beta_weight_pp(PlanePartition()) == BetaWeight());
}

TEST_CASE("pi map worked examples") {
    Tableau one{{{1}}, TableauKind::cspp};
    CHECK(pi_map(one, one) == PlanePartition({Partition({1})}));

    Tableau row21{{{2, 1}}, TableauKind::cspp};
    CHECK(pi_map(row21, row21) == PlanePartition({Partition({2, 1}), Partition({1})}));
}

TEST_CASE("pi bijection, Lemma 2.7 and Lemma 2.9") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& shape : testutil::partitions_of(n)) {
            auto fillings = all_cspp(shape, 4);
            for (const Tableau& P : fillings)
                for (const Tableau& Q : fillings) {
                    PlanePartition pi = pi_map(P, Q);
                    auto [backP, backQ] = pi_inverse(pi);
                    CHECK(backP == P);
                    CHECK(backQ == Q);

                    // Lemma 2.7: number of nonempty columns is lambda_1
                    CHECK(pi.num_columns() == shape.part(1));
                    BetaWeight expect;
                    for (int i = 0;; ++i) {
                        long long count = 0;
                        for (const auto& row : P.rows)
                            count += std::count_if(row.begin(), row.end(),
                                                   [&](int x) { return x > i; });
                        if (count == 0) break;
                        expect.add(i, count);
                    }
                    for (int i = 1;; ++i) {
                        long long count = 0;
                        for (const auto& row : Q.rows)
                            count += std::count_if(row.begin(), row.end(),
                                                   [&](int x) { return x > i; });
                        if (count == 0) break;
                        expect.add(-i, count);
                    }
                    CHECK(beta_weight_pp(pi) == expect);

                    // Lemma 2.9: swapping P and Q transposes every column
                    PlanePartition swapped = pi_map(Q, P);
                    REQUIRE(swapped.num_columns() == pi.num_columns());
                    for (int a = 1; a <= pi.num_columns(); ++a)
                        CHECK(swapped.column(a) == transpose(pi.column(a)));
                }
        }

    for (const PlanePartition& pi : all_plane_partitions(8)) {
        auto [P, Q] = pi_inverse(pi);
        CHECK(P.valid());
        CHECK(Q.valid());
        CHECK(pi_map(P, Q) == pi);
    }
}

TEST_CASE("phi and psi") {
    PlanePartition pi({Partition({2, 1}), Partition({1})});
    auto tuple = phi_map(pi, 5, 1, 0, 2);
    CHECK(tuple == std::vector<Partition>{Partition({2, 1}), Partition({1})});
    CHECK(psi_map(tuple, 5, 1, 0, 2) == pi);

    // worked V3 set for (p,k,s,l) = (3,1,1,1)
    auto v3 = enumerate_V3(1, 1, 1);
    REQUIRE(v3.size() == 2);
    PlanePartition a({Partition({2, 1}), Partition({1})});
    PlanePartition b({Partition({2, 2})});
    CHECK(std::count(v3.begin(), v3.end(), a) == 1);
    CHECK(std::count(v3.begin(), v3.end(), b) == 1);
    CHECK(phi_map(a, 3, 1, 1, 1) == std::vector<Partition>{Partition({1}), Partition({1})});
    CHECK(phi_map(b, 3, 1, 1, 1) == std::vector<Partition>{Partition({1, 1}), Partition()});
    for (const PlanePartition& pi31 : v3) CHECK(psi_map(phi_map(pi31, 3, 1, 1, 1), 3, 1, 1, 1) == pi31);

    // violations are reported by clause
    CHECK_THROWS_WITH_AS(phi_map(PlanePartition({Partition({1})}), 3, 1, 1, 1),
                         doctest::Contains("first column"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(psi_map({Partition({3}), Partition()}, 3, 1, 1, 1),
                         doctest::Contains("box"), std::invalid_argument);
}

TEST_CASE("V2 = V3 = Z chain counts and weight bookkeeping") {
    for (int p : {5, 7})
        for (int k = 1; k <= 2; ++k)
            for (int s = 0; s < p; ++s)
                for (int ell = 1; ell <= (p - s) / 2; ++ell) {
                    auto v3 = enumerate_V3(k, s, ell);
                    auto z = enumerate_Z(p, k, s, ell);
                    CHECK(static_cast<long long>(v3.size()) ==
                          static_cast<long long>(z.size()));
                    CHECK(static_cast<long long>(v3.size()) ==
                          count_avoiding_shuffles(s, ell, k));
                    for (const PlanePartition& pi : v3) {
                        auto tuple = phi_map(pi, p, k, s, ell);
                        CHECK(psi_map(tuple, p, k, s, ell) == pi);
                        CHECK(std::count(z.begin(), z.end(), tuple) == 1);
                        // section 2.5: the alpha-weight of the tuple is
                        // Lambda - lambda^p_{l,s}
                        std::vector<long long> total(static_cast<std::size_t>(p), 0);
                        for (std::size_t t = 0; t < tuple.size(); ++t) {
                            auto part = wt_partition(tuple[t], t == 0 ? s : 0, p).coeffs;
                            for (int i = 0; i < p; ++i)
                                total[static_cast<std::size_t>(i)] +=
                                    part[static_cast<std::size_t>(i)];
                        }
                        CHECK(total == lambda_weight_coeffs(p, ell, s));
                    }
                }
}
