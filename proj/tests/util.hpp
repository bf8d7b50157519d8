#ifndef CML_TESTS_UTIL_HPP
#define CML_TESTS_UTIL_HPP

#include <vector>

#include "cml/partition.hpp"

namespace testutil {

inline void gen(int n, int max_part, std::vector<int>& cur, std::vector<cml::Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen(n - part, part, cur, out);
        cur.pop_back();
    }
}

// All partitions of exactly n.
inline std::vector<cml::Partition> partitions_of(int n) {
    std::vector<cml::Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    return out;
}

// All partitions of size 0..n.
inline std::vector<cml::Partition> partitions_up_to(int n) {
    std::vector<cml::Partition> out;
    for (int m = 0; m <= n; ++m) {
        auto v = partitions_of(m);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace testutil

#endif
