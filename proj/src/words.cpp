#include "cml/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cml {

std::string word_str(const Word& w) {
    bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::vector<Word> enumerate_shuffles(int s, int ell) {
    if (s < 0 || ell < 1) throw std::invalid_argument("enumerate_shuffles needs s >= 0, l >= 1");
    Word letters(static_cast<std::size_t>(s), 0);
    for (int x = 1; x <= ell; ++x) letters.push_back(x);
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

int lds_length(const Word& w) {
    if (w.empty()) throw std::invalid_argument("lds_length needs a nonempty word");
    // best[i] = longest strictly decreasing subsequence ending at i
    std::vector<int> best(w.size(), 1);
    int answer = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (w[j] > w[i]) best[i] = std::max(best[i], best[j] + 1);
        answer = std::max(answer, best[i]);
    }
    return answer;
}

long long count_avoiding_shuffles(int s, int ell, int k) {
    if (k < 1) throw std::invalid_argument("count_avoiding_shuffles needs k >= 1");
    long long count = 0;
    for (const Word& w : enumerate_shuffles(s, ell))
        if (lds_length(w) <= k + 1) ++count;
    return count;
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

std::vector<int> Tableau::column(int j) const {
    std::vector<int> col;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) < j) break;
        col.push_back(row[static_cast<std::size_t>(j - 1)]);
    }
    return col;
}

std::vector<int> Tableau::content() const {
    std::vector<int> all;
    for (const auto& row : rows) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool Tableau::valid() const {
    const bool decreasing =
        kind == TableauKind::cspp || kind == TableauKind::reverse_standard;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 < rows.size() && rows[i].size() < rows[i + 1].size()) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j + 1 < rows[i].size()) {
                int a = rows[i][j], b = rows[i][j + 1];
                if (decreasing ? a < b : a > b) return false;
            }
            if (i + 1 < rows.size() && j < rows[i + 1].size()) {
                int a = rows[i][j], b = rows[i + 1][j];
                if (decreasing ? a <= b : a >= b) return false;
            }
        }
    }
    if (kind == TableauKind::standard || kind == TableauKind::reverse_standard) {
        std::vector<int> c = content();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Tableau complement(const Tableau& t, int m) {
    Tableau out = t;
    for (auto& row : out.rows)
        for (int& x : row) x = m + 1 - x;
    switch (t.kind) {
        case TableauKind::sst: out.kind = TableauKind::cspp; break;
        case TableauKind::cspp: out.kind = TableauKind::sst; break;
        case TableauKind::standard: out.kind = TableauKind::reverse_standard; break;
        case TableauKind::reverse_standard: out.kind = TableauKind::standard; break;
    }
    return out;
}

std::pair<Tableau, Tableau> rsk_insert(const Word& w) {
    Tableau P{{}, TableauKind::sst};
    Tableau Q{{}, TableauKind::standard};
    for (std::size_t step = 0; step < w.size(); ++step) {
        int x = w[step];
        std::size_t row = 0;
        // bump the smallest entry strictly greater than x
        for (;; ++row) {
            if (row == P.rows.size()) {
                P.rows.emplace_back();
                Q.rows.emplace_back();
            }
            auto& prow = P.rows[row];
            auto it = std::upper_bound(prow.begin(), prow.end(), x);
            if (it == prow.end()) {
                prow.push_back(x);
                Q.rows[row].push_back(static_cast<int>(step) + 1);
                break;
            }
            std::swap(*it, x);
        }
    }
    return {P, Q};
}

Word rsk_inverse(const Tableau& P, const Tableau& Q) {
    if (P.shape() != Q.shape()) throw std::invalid_argument("rsk_inverse needs equal shapes");
    Tableau work = P;
    const int n = P.shape().size();
    Word w(static_cast<std::size_t>(n));
    for (int step = n; step >= 1; --step) {
        // locate step in Q, remove that box, reverse-bump upwards
        std::size_t row = 0, col = 0;
        bool found = false;
        for (std::size_t i = 0; i < Q.rows.size() && !found; ++i)
            for (std::size_t j = 0; j < Q.rows[i].size() && !found; ++j)
                if (Q.rows[i][j] == step) {
                    row = i;
                    col = j;
                    found = true;
                }
        if (!found || col + 1 != work.rows[row].size())
            throw std::invalid_argument("Q is not a recording tableau for P");
        int x = work.rows[row].back();
        work.rows[row].pop_back();
        for (std::size_t r = row; r-- > 0;) {
            auto& prow = work.rows[r];
            auto it = std::lower_bound(prow.begin(), prow.end(), x);
            // the entry bumped from row r is the largest one < x
            if (it == prow.begin()) throw std::invalid_argument("broken reverse bumping path");
            --it;
            std::swap(*it, x);
        }
        w[static_cast<std::size_t>(step - 1)] = x;
        while (!work.rows.empty() && work.rows.back().empty()) work.rows.pop_back();
    }
    return w;
}

long long syt_count(const Partition& lambda) {
    // n! / prod(hooks); exact in 64 bits up to |lambda| = 20
    if (lambda.size() > 20) throw std::invalid_argument("syt_count is limited to |lambda| <= 20");
    long long factorial = 1;
    for (int n = 1; n <= lambda.size(); ++n) factorial *= n;
    long long hook_product = 1;
    for (int h : hook_lengths(lambda)) hook_product *= h;
    return factorial / hook_product;
}

std::vector<Tableau> enumerate_standard_tableaux(const Partition& lambda) {
    std::vector<Tableau> out;
    Tableau cur{{}, TableauKind::standard};
    cur.rows.assign(static_cast<std::size_t>(lambda.length()), {});
    const int n = lambda.size();

    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            Tableau done = cur;
            while (!done.rows.empty() && done.rows.back().empty()) done.rows.pop_back();
            out.push_back(std::move(done));
            return;
        }
        for (std::size_t i = 0; i < cur.rows.size(); ++i) {
            const std::size_t len = cur.rows[i].size();
            if (static_cast<int>(len) >= lambda.part(static_cast<int>(i) + 1)) continue;
            if (i > 0 && cur.rows[i - 1].size() <= len) continue;
            cur.rows[i].push_back(next);
            self(self, next + 1);
            cur.rows[i].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

namespace {

long long involutions_by_syt(int ell, int k) {
    long long total = 0;
    for (const Partition& lambda : partitions_in_box(k + 1, ell))
        if (lambda.size() == ell) total += syt_count(lambda);
    return total;
}

}  // namespace

long long count_avoiding_involutions(int ell, int k) {
    if (ell < 1 || k < 1) throw std::invalid_argument("count_avoiding_involutions needs l, k >= 1");
    long long by_formula = involutions_by_syt(ell, k);
    if (ell > 10)
        throw std::invalid_argument("brute-force involution route is limited to l <= 10");
    Word perm(static_cast<std::size_t>(ell));
    std::iota(perm.begin(), perm.end(), 1);
    long long brute = 0;
    do {
        bool involution = true;
        for (int i = 1; i <= ell && involution; ++i)
            involution = perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)] - 1)] == i;
        if (involution && lds_length(perm) <= k + 1) ++brute;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (brute != by_formula)
        throw std::logic_error("involution count mismatch between brute force and SYT sum");
    return brute;
}

long long count_avoiding_permutations(int ell, int k) {
    if (ell < 1 || k < 1) throw std::invalid_argument("count_avoiding_permutations needs l, k >= 1");
    Word perm(static_cast<std::size_t>(ell));
    std::iota(perm.begin(), perm.end(), 1);
    long long count = 0;
    do {
        if (lds_length(perm) <= k + 1) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace cml
