#include "cml/crystal.hpp"

#include <algorithm>
#include <set>

#include "cml/plane.hpp"

namespace cml {

int residue(int row, int col, int s, int p) {
    int r = (s - row + col) % p;
    return r < 0 ? r + p : r;
}

AlphaWeight wt_partition(const Partition& lambda, int s, int p) {
    if (!is_p_restricted(lambda, p))
        throw std::invalid_argument("wt_partition input must be p-restricted");
    AlphaWeight w = highest_weight(p, 0, s);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            ++w.coeffs[static_cast<std::size_t>(residue(i, j, s, p))];
    return w;
}

namespace {

struct SignedBox {
    Box box;
    bool addable = false;
};

/* i-boxes on the boundary of lambda, at most one per row. The default
 * order is bottom row first.
 */
std::vector<SignedBox> boundary_boxes(const Partition& lambda, int i, int s, int p,
                                      SignatureOrder order) {
    std::vector<SignedBox> word;
    for (int row = lambda.length() + 1; row >= 1; --row) {
        const int len = lambda.part(row);
        if ((row == 1 || len < lambda.part(row - 1)) && residue(row, len + 1, s, p) == i)
            word.push_back({Box{row, len + 1}, true});
        else if (len > 0 && len > lambda.part(row + 1) && residue(row, len, s, p) == i)
            word.push_back({Box{row, len}, false});
    }
    if (order == SignatureOrder::by_increasing_row)
        std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace

Signature signature(const Partition& lambda, int i, int s, int p, SignatureOrder order) {
    if (!is_p_restricted(lambda, p))
        throw std::invalid_argument("signature input must be p-restricted");
    // Cancel every removable that follows an addable ("+-" pairs); the
    // reduced word is -...-+...+.
    std::vector<SignedBox> stack;
    for (const SignedBox& sb : boundary_boxes(lambda, i, s, p, order)) {
        if (!sb.addable && !stack.empty() && stack.back().addable)
            stack.pop_back();
        else
            stack.push_back(sb);
    }
    Signature sig;
    for (const SignedBox& sb : stack) {
        if (sb.addable) {
            if (sig.phi == 0) sig.good_add = sb.box;  // leftmost surviving "+"
            ++sig.phi;
        } else {
            sig.good_remove = sb.box;  // last surviving "-"
            ++sig.eps;
        }
    }
    return sig;
}

std::optional<Partition> apply_crystal_operator(const Partition& lambda, int i, Dir dir,
                                                int s, int p, SignatureOrder order) {
    Signature sig = signature(lambda, i, s, p, order);
    std::vector<int> parts = lambda.parts();
    if (dir == Dir::lower) {
        if (!sig.good_add) return std::nullopt;
        const int row = sig.good_add->row;
        if (row == lambda.length() + 1)
            parts.push_back(1);
        else
            ++parts[static_cast<std::size_t>(row - 1)];
    } else {
        if (!sig.good_remove) return std::nullopt;
        --parts[static_cast<std::size_t>(sig.good_remove->row - 1)];
    }
    return Partition(std::move(parts));
}

namespace {

int factor_charge(std::size_t index, int s) { return index == 0 ? s : 0; }

// Position of the factor acted on by f_i (or e_i), by the signature
// rule on the per-factor (eps, phi) word.
std::optional<std::size_t> tensor_position(const CrystalNode& node, int i, int s, int p,
                                           Dir dir, SignatureOrder order) {
    struct Entry {
        std::size_t factor;
        bool plus;
    };
    std::vector<Entry> stack;
    for (std::size_t t = 0; t < node.factors.size(); ++t) {
        Signature sig = signature(node.factors[t], i, factor_charge(t, s), p, order);
        for (int a = 0; a < sig.eps; ++a) {
            if (!stack.empty() && stack.back().plus)
                stack.pop_back();
            else
                stack.push_back({t, false});
        }
        for (int a = 0; a < sig.phi; ++a) stack.push_back({t, true});
    }
    if (dir == Dir::lower) {
        for (const Entry& e : stack)
            if (e.plus) return e.factor;
    } else {
        for (auto it = stack.rbegin(); it != stack.rend(); ++it)
            if (!it->plus) return it->factor;
    }
    return std::nullopt;
}

std::optional<CrystalNode> tensor_apply(const CrystalNode& node, int i, int s, int p,
                                        Dir dir, SignatureOrder order) {
    auto pos = tensor_position(node, i, s, p, dir, order);
    if (!pos) return std::nullopt;
    auto next = apply_crystal_operator(node.factors[*pos], i, dir,
                                       factor_charge(*pos, s), p, order);
    if (!next) return std::nullopt;  // not reachable when pos is set
    CrystalNode out = node;
    out.factors[*pos] = std::move(*next);
    return out;
}

}  // namespace

std::optional<CrystalNode> tensor_apply_f(const CrystalNode& node, int i, int s, int p,
                                          SignatureOrder order) {
    return tensor_apply(node, i, s, p, Dir::lower, order);
}

std::optional<CrystalNode> tensor_apply_e(const CrystalNode& node, int i, int s, int p,
                                          SignatureOrder order) {
    return tensor_apply(node, i, s, p, Dir::raise_, order);
}

AlphaWeight node_weight(const CrystalNode& node, int s, int p) {
    AlphaWeight w = highest_weight(p, static_cast<int>(node.factors.size()) - 1, s);
    for (std::size_t t = 0; t < node.factors.size(); ++t) {
        AlphaWeight part = wt_partition(node.factors[t], factor_charge(t, s), p);
        for (int i = 0; i < p; ++i) w.coeffs[static_cast<std::size_t>(i)] += part.coeffs[static_cast<std::size_t>(i)];
    }
    return w;
}

std::map<std::vector<long long>, long long> component_weight_census(
    int p, int k, int s, int max_depth, std::int64_t max_states, bool reversed_frontier) {
    if (p < 2 || k < 0 || s < 0 || s >= p || max_depth < 0)
        throw std::invalid_argument("census needs p >= 2, k >= 0, 0 <= s < p");
    std::map<std::vector<long long>, long long> census;
    CrystalNode start{std::vector<Partition>(static_cast<std::size_t>(k + 1))};
    std::vector<CrystalNode> frontier{start};
    std::int64_t states = 1;
    for (int depth = 0; depth <= max_depth; ++depth) {
        for (const CrystalNode& node : frontier)
            ++census[node_weight(node, s, p).coeffs];
        if (depth == max_depth) break;
        std::set<CrystalNode> next;
        auto expand = [&](const CrystalNode& node) {
            for (int i = 0; i < p; ++i)
                if (auto child = tensor_apply_f(node, i, s, p)) next.insert(std::move(*child));
        };
        if (reversed_frontier)
            for (auto it = frontier.rbegin(); it != frontier.rend(); ++it) expand(*it);
        else
            for (const CrystalNode& node : frontier) expand(node);
        states += static_cast<std::int64_t>(next.size());
        if (states > max_states)
            throw census_overflow("weight census exceeded the state budget of " +
                                  std::to_string(max_states) + " nodes");
        frontier.assign(next.begin(), next.end());
    }
    return census;
}

long long weight_multiplicity(int p, int k, int s, const std::vector<long long>& target,
                              std::int64_t max_states) {
    if (static_cast<int>(target.size()) != p)
        throw std::invalid_argument("target must have one coefficient per residue");
    long long depth = 0;
    for (long long c : target) {
        if (c < 0) return 0;
        depth += c;
    }
    auto census = component_weight_census(p, k, s, static_cast<int>(depth), max_states);
    auto it = census.find(target);
    return it == census.end() ? 0 : it->second;
}

std::vector<std::vector<Partition>> enumerate_Z(int p, int k, int s, int ell) {
    if (p < 2 || k < 1 || s < 0 || s >= p || ell < 1 || ell > (p - s) / 2)
        throw std::invalid_argument("enumerate_Z needs 0 <= s < p and 1 <= l <= (p-s)/2");
    const BetaWeight target = lambda_hat(ell, s);
    std::vector<Partition> mus = p_cores_in_box(p, ell + s, ell);
    std::vector<Partition> lams = p_cores_in_box(p, ell, ell + s);
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> tuple(static_cast<std::size_t>(k + 1));

    auto rec = [&](auto&& self, int a, const BetaWeight& acc) -> void {
        if (a == k + 1) {
            if (acc == target) out.push_back(tuple);
            return;
        }
        for (const Partition& lam : lams) {
            const Partition& prev = tuple[static_cast<std::size_t>(a - 1)];
            bool chained = (a == 1) ? contains_with_shift(prev, s, lam) : contains(prev, lam);
            if (!chained) continue;
            tuple[static_cast<std::size_t>(a)] = lam;
            self(self, a + 1, acc + beta_weight_partition(lam, 0));
        }
    };

    for (const Partition& mu : mus) {
        tuple[0] = mu;
        rec(rec, 1, beta_weight_partition(mu, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool dominant_maximal_check(int p, int k, int s, const std::vector<long long>& target,
                            std::int64_t max_states) {
    if (weight_multiplicity(p, k, s, target, max_states) == 0) return false;
    std::vector<long long> plus_delta = target;
    for (long long& c : plus_delta) --c;  // weight + delta
    return weight_multiplicity(p, k, s, plus_delta, max_states) == 0;
}

}  // namespace cml
