#include "cml/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cml {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("partition text must look like [3,1]");
    text.remove_prefix(1);
    text.remove_suffix(1);
    std::vector<int> parts;
    while (!text.empty()) {
        std::size_t comma = text.find(',');
        std::string_view tok = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad partition part: " + std::string(tok));
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

Partition transpose(const Partition& lambda) {
    std::vector<int> cols(lambda.empty() ? 0 : lambda.part(1), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) ++cols[j];
    return Partition(std::move(cols));
}

bool contains_with_shift(const Partition& mu, int t, const Partition& lambda) {
    for (int i = 1; i <= lambda.length(); ++i)
        if (mu.part(i) + t < lambda.part(i)) return false;
    return true;
}

bool contains(const Partition& outer, const Partition& inner) {
    return contains_with_shift(outer, 0, inner);
}

bool is_p_restricted(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) - lambda.part(i + 1) >= p) return false;
    return true;
}

std::vector<int> hook_lengths(const Partition& lambda) {
    Partition t = transpose(lambda);
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            hooks.push_back(lambda.part(i) - j + t.part(j) - i + 1);
    return hooks;
}

bool is_p_core(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    // First-column hook lengths are lambda_i + l - i; lambda is a p-core
    // iff no two of them differ by a multiple of p with a gap, which is
    // equivalent to no cell hook being divisible by p. The direct hook
    // scan is cheap at the sizes we handle.
    for (int h : hook_lengths(lambda))
        if (h % p == 0) return false;
    return true;
}

namespace {

void boxed_rec(int rows, int cols, int max_part, std::vector<int>& cur,
               std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int part = 1; part <= std::min(cols, max_part); ++part) {
        cur.push_back(part);
        boxed_rec(rows, cols, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (rows < 0 || cols < 0) return out;
    boxed_rec(rows, cols, cols, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    return out;
}

std::vector<Partition> p_cores_in_box(int p, int rows, int cols) {
    std::vector<Partition> out;
    for (Partition& lambda : partitions_in_box(rows, cols))
        if (is_p_core(lambda, p)) out.push_back(std::move(lambda));
    return out;
}

Partition tau_m(const Partition& lambda, int m, int p) {
    if (p < 2 || m < 0 || m >= p) throw std::invalid_argument("tau_m needs 0 <= m < p, p >= 2");
    if (!is_p_core(lambda, p)) throw std::invalid_argument("tau_m input must be a p-core");
    const int shift = (p - m) % p;
    const int n = lambda.length() + m;
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int shifted = lambda.part(i) + shift;
        rows.push_back(i <= m ? shifted : std::min(shifted, lambda.part(i - m)));
    }
    return Partition(std::move(rows));
}

}  // namespace cml
