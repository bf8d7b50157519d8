#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cml/partition.hpp"
#include "util.hpp"

using namespace cml;

TEST_CASE("construction and text format") {
    CHECK(Partition({3, 1}).str() == "[3,1]");
    CHECK(Partition().str() == "[]");
    CHECK(Partition({2, 0, 0}) == Partition({2}));  // trailing zeros dropped
    CHECK(Partition::parse("[3,1]") == Partition({3, 1}));
    CHECK(Partition::parse("[]") == Partition());
    CHECK(Partition::parse("[4,4,2]").size() == 10);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[3,x]"), std::invalid_argument);
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(transpose(Partition()) == Partition());
    CHECK(transpose(Partition({2, 2})) == Partition({2, 2}));
    for (int n = 0; n <= 20; ++n)
        for (const Partition& lam : testutil::partitions_of(n))
            CHECK(transpose(transpose(lam)) == lam);
    CHECK(transpose(Partition({5, 2})).length() == 5);
}

TEST_CASE("containment with shift") {
    CHECK(contains_with_shift(Partition({2, 1}), 0, Partition({1, 1})));
    CHECK(contains_with_shift(Partition(), 1, Partition({1, 1, 1, 1})));
    CHECK_FALSE(contains_with_shift(Partition({1}), 1, Partition({2, 2})));
    CHECK(contains(Partition({3, 2}), Partition({3, 2})));
    CHECK_FALSE(contains(Partition({3}), Partition({1, 1})));
}

TEST_CASE("p-restricted predicate") {
    CHECK(is_p_restricted(Partition({3, 1}), 3));
    CHECK_FALSE(is_p_restricted(Partition({4, 1}), 3));
    CHECK(is_p_restricted(Partition(), 2));
    CHECK_FALSE(is_p_restricted(Partition({2}), 2));  // last part counts
    CHECK_THROWS_AS(is_p_restricted(Partition(), 1), std::invalid_argument);
}

TEST_CASE("p-core predicate") {
    CHECK(is_p_core(Partition({2, 1, 1}), 3));
    CHECK_FALSE(is_p_core(Partition({3}), 3));
    CHECK_FALSE(is_p_core(Partition({1, 1}), 2));
    CHECK(is_p_core(Partition(), 2));
    CHECK_THROWS_AS(is_p_core(Partition(), 0), std::invalid_argument);
}

TEST_CASE("hook lengths") {
    CHECK(hook_lengths(Partition({2, 1})) == std::vector<int>{3, 1, 1});
    CHECK(hook_lengths(Partition({2, 1, 1})) == std::vector<int>{4, 1, 2, 1});
    CHECK(hook_lengths(Partition()).empty());
}

TEST_CASE("boxed enumerations") {
    CHECK(p_cores_in_box(2, 2, 2) ==
          std::vector<Partition>{Partition(), Partition({1}), Partition({2, 1})});
    CHECK(p_cores_in_box(3, 2, 2) ==
          std::vector<Partition>{Partition(), Partition({1}), Partition({1, 1}), Partition({2})});
    CHECK(p_cores_in_box(2, 0, 0) == std::vector<Partition>{Partition()});
    CHECK(partitions_in_box(2, 2).size() == 6);

    // p_cores_in_box must equal the box enumeration filtered by is_p_core
    for (int p = 2; p <= 5; ++p) {
        std::vector<Partition> filtered;
        for (const Partition& lam : partitions_in_box(4, 4))
            if (is_p_core(lam, p)) filtered.push_back(lam);
        CHECK(p_cores_in_box(p, 4, 4) == filtered);
    }
}

namespace {

// Independent tau route: rowwise min of SHIFT_{(p-m)%p}(lambda) and
// (inf^m, lambda), materialized over enough explicit rows.
Partition tau_naive(const Partition& lam, int m, int p) {
    const int shift = (p - m) % p;
    const int nrows = lam.length() + m + p;
    const int inf = 1 << 20;
    std::vector<int> rows;
    for (int i = 1; i <= nrows; ++i) {
        int shifted = lam.part(i) + shift;
        int tail = i <= m ? inf : lam.part(i - m);
        rows.push_back(std::min(shifted, tail));
    }
    return Partition(std::move(rows));
}

}  // namespace

TEST_CASE("tau_m") {
    CHECK(tau_m(Partition({2}), 1, 3) == Partition({4, 2}));
    CHECK(tau_m(Partition(), 1, 3) == Partition({2}));
    CHECK_THROWS_AS(tau_m(Partition({3}), 1, 3), std::invalid_argument);  // not a 3-core

    for (int p = 2; p <= 7; ++p)
        for (const Partition& lam : testutil::partitions_up_to(12)) {
            if (!is_p_core(lam, p)) continue;
            CHECK(tau_m(lam, 0, p) == lam);
            for (int m = 0; m < p; ++m) {
                Partition nu = tau_m(lam, m, p);
                CHECK(nu == tau_naive(lam, m, p));
                CHECK(is_p_core(nu, p));
            }
        }
}
