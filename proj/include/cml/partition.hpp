#ifndef CML_PARTITION_HPP
#define CML_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cml {

/* A partition is a weakly decreasing sequence of positive integers.
 * Trailing zeros are never stored, so equality and hashing are plain
 * sequence comparison and the empty partition is the empty sequence.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text format: "[3,1]", "[]" for the empty partition.
    static Partition parse(std::string_view text);
    std::string str() const;

    int size() const { return size_; }                 // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access; rows past the last part are 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct Box {
    int row = 0;
    int col = 0;
    bool operator==(const Box&) const = default;
};

Partition transpose(const Partition& lambda);

// True iff SHIFT_t(mu) contains lambda, i.e. mu_i + t >= lambda_i for all i.
bool contains_with_shift(const Partition& mu, int t, const Partition& lambda);

// Plain Young-diagram containment outer >= inner.
bool contains(const Partition& outer, const Partition& inner);

bool is_p_restricted(const Partition& lambda, int p);
bool is_p_core(const Partition& lambda, int p);

// All partitions fitting in a rows x cols box, lexicographic on part
// sequences.
std::vector<Partition> partitions_in_box(int rows, int cols);

// All p-cores fitting in a rows x cols box, same order.
std::vector<Partition> p_cores_in_box(int p, int rows, int cols);

// The hook lengths of all cells, row by row.
std::vector<int> hook_lengths(const Partition& lambda);

/* tau_m on p-cores: row i of the result is
 *   min(lambda_i + (p-m)%p, lambda_{i-m})
 * with lambda_{i-m} read as infinity for i <= m; equivalently
 * SHIFT_{(p-m)%p}(lambda) meet (inf^m, lambda), computed rowwise.
 */
Partition tau_m(const Partition& lambda, int m, int p);

}  // namespace cml

template <>
struct std::hash<cml::Partition> {
    std::size_t operator()(const cml::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

#endif
