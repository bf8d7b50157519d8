#ifndef CML_CRYSTAL_HPP
#define CML_CRYSTAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cml/partition.hpp"
#include "cml/weights.hpp"

namespace cml {

// Thrown when a weight census would exceed its state budget.
class census_overflow : public std::runtime_error {
public:
    explicit census_overflow(const std::string& what) : std::runtime_error(what) {}
};

enum class Dir { raise_, lower };

/* Box ordering for the signature rule. The default lists i-boxes by
 * decreasing row index; the mirror lists them by increasing row index.
 * Both give isomorphic crystals; the default is the one that keeps the
 * vertex set inside the p-restricted partitions (pinned by tests).
 */
enum class SignatureOrder { by_decreasing_row, by_increasing_row };

struct Signature {
    int eps = 0;
    int phi = 0;
    std::optional<Box> good_add;
    std::optional<Box> good_remove;
};

// Residue of the box (row, col) in a charge-s diagram: (s - row + col) mod p.
int residue(int row, int col, int s, int p);

// Weight of a p-restricted partition as an element of Lambda_s - Q_+.
AlphaWeight wt_partition(const Partition& lambda, int s, int p);

Signature signature(const Partition& lambda, int i, int s, int p,
                    SignatureOrder order = SignatureOrder::by_decreasing_row);

std::optional<Partition> apply_crystal_operator(
    const Partition& lambda, int i, Dir dir, int s, int p,
    SignatureOrder order = SignatureOrder::by_decreasing_row);

/* A vertex of B(Lambda_s) (x) B(Lambda_0)^(x) k: factor 0 carries charge
 * s, the rest charge 0.
 */
struct CrystalNode {
    std::vector<Partition> factors;
    bool operator==(const CrystalNode&) const = default;
    auto operator<=>(const CrystalNode&) const = default;
};

std::optional<CrystalNode> tensor_apply_f(
    const CrystalNode& node, int i, int s, int p,
    SignatureOrder order = SignatureOrder::by_decreasing_row);

std::optional<CrystalNode> tensor_apply_e(
    const CrystalNode& node, int i, int s, int p,
    SignatureOrder order = SignatureOrder::by_decreasing_row);

// Sum of the factor weights against Lambda = kL0 + Ls.
AlphaWeight node_weight(const CrystalNode& node, int s, int p);

constexpr std::int64_t kDefaultMaxStates = 5'000'000;

/* BFS over the connected component of the all-empty node, closed under
 * every lowering operator, out to the given height. Returns the number
 * of vertices at each weight, keyed by coefficient vector. k = 0 walks
 * B(Lambda_s) alone. reversed_frontier only changes traversal order and
 * must not change the result.
 */
std::map<std::vector<long long>, long long> component_weight_census(
    int p, int k, int s, int max_depth,
    std::int64_t max_states = kDefaultMaxStates,
    bool reversed_frontier = false);

// dim V(kL0+Ls)_{Lambda - sum target_i alpha_i}; zero if any entry is negative.
long long weight_multiplicity(int p, int k, int s,
                              const std::vector<long long>& target,
                              std::int64_t max_states = kDefaultMaxStates);

/* The set Z'' of (k+1)-tuples of boxed p-cores with the shift-chain
 * condition and beta-weight equal to the tent for (l, s).
 */
std::vector<std::vector<Partition>> enumerate_Z(int p, int k, int s, int ell);

// True iff target is a weight of V(kL0+Ls) but target + delta is not.
bool dominant_maximal_check(int p, int k, int s,
                            const std::vector<long long>& target,
                            std::int64_t max_states = kDefaultMaxStates);

}  // namespace cml

#endif
