#include "cml/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace cml {

void BetaWeight::add(int b, long long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(b, 0);
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

long long BetaWeight::coeff(int b) const {
    auto it = coeffs_.find(b);
    return it == coeffs_.end() ? 0 : it->second;
}

long long BetaWeight::total() const {
    long long t = 0;
    for (const auto& [b, c] : coeffs_) t += c;
    return t;
}

BetaWeight& BetaWeight::operator+=(const BetaWeight& o) {
    for (const auto& [b, c] : o.coeffs_) add(b, c);
    return *this;
}

BetaWeight& BetaWeight::operator-=(const BetaWeight& o) {
    for (const auto& [b, c] : o.coeffs_) add(b, -c);
    return *this;
}

std::string BetaWeight::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += "b[" + std::to_string(b) + "]";
    }
    return out;
}

BetaWeight beta_weight_partition(const Partition& lambda, int charge) {
    BetaWeight w;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) w.add(charge - i + j, 1);
    return w;
}

PlanePartition::PlanePartition(std::vector<Partition> columns) : columns_(std::move(columns)) {
    while (!columns_.empty() && columns_.back().empty()) columns_.pop_back();
    for (std::size_t j = 0; j + 1 < columns_.size(); ++j)
        if (!contains(columns_[j], columns_[j + 1]))
            throw std::invalid_argument("plane partition columns must weakly decrease");
}

const Partition& PlanePartition::column(int j) const {
    static const Partition empty;
    return (j >= 1 && j <= num_columns()) ? columns_[static_cast<std::size_t>(j - 1)] : empty;
}

int PlanePartition::entry(int i, int j) const { return column(j).part(i); }

long long PlanePartition::total() const {
    long long t = 0;
    for (const Partition& col : columns_) t += col.size();
    return t;
}

std::string PlanePartition::str() const {
    int nrows = 0;
    for (const Partition& col : columns_) nrows = std::max(nrows, col.length());
    std::string out = "[";
    for (int i = 1; i <= nrows; ++i) {
        if (i > 1) out += ',';
        out += '[';
        int width = 0;
        for (int j = 1; j <= num_columns(); ++j)
            if (entry(i, j) > 0) width = j;
        for (int j = 1; j <= width; ++j) {
            if (j > 1) out += ',';
            out += std::to_string(entry(i, j));
        }
        out += ']';
    }
    out += ']';
    return out;
}

Partition frobenius_partition(const std::vector<int>& pcol, const std::vector<int>& qcol) {
    if (pcol.size() != qcol.size())
        throw std::invalid_argument("Frobenius legs must have equal length");
    auto strictly_decreasing_positive = [](const std::vector<int>& v) {
        for (std::size_t d = 0; d < v.size(); ++d) {
            if (v[d] <= 0) return false;
            if (d + 1 < v.size() && v[d] <= v[d + 1]) return false;
        }
        return true;
    };
    if (!strictly_decreasing_positive(pcol) || !strictly_decreasing_positive(qcol))
        throw std::invalid_argument("Frobenius legs must strictly decrease");
    const int diag = static_cast<int>(pcol.size());
    // arms: lambda_d = (pcol_d - 1) + d; legs fix the transpose rows
    std::vector<int> tcols(static_cast<std::size_t>(diag), 0);
    for (int d = 1; d <= diag; ++d)
        tcols[static_cast<std::size_t>(d - 1)] = qcol[static_cast<std::size_t>(d - 1)] - 1 + d;
    Partition tpart(std::move(tcols));
    Partition legs_rows = transpose(tpart);
    std::vector<int> rows;
    for (int i = 1; i <= std::max(diag, legs_rows.length()); ++i) {
        int row = i <= diag ? pcol[static_cast<std::size_t>(i - 1)] - 1 + i
                            : legs_rows.part(i);
        rows.push_back(row);
    }
    return Partition(std::move(rows));
}

namespace {

// Frobenius legs of a partition: down the main diagonal, arm and leg
// lengths plus one.
std::pair<std::vector<int>, std::vector<int>> frobenius_legs(const Partition& lambda) {
    Partition t = transpose(lambda);
    std::vector<int> pcol, qcol;
    for (int d = 1; lambda.part(d) >= d; ++d) {
        pcol.push_back(lambda.part(d) - d + 1);
        qcol.push_back(t.part(d) - d + 1);
    }
    return {pcol, qcol};
}

}  // namespace

PlanePartition pi_map(const Tableau& P, const Tableau& Q) {
    if (P.shape() != Q.shape()) throw std::invalid_argument("pi_map needs equal shapes");
    if (P.kind != TableauKind::cspp && P.kind != TableauKind::reverse_standard)
        throw std::invalid_argument("pi_map operates on CSPP fillings");
    if (!P.valid() || !Q.valid()) throw std::invalid_argument("pi_map needs valid CSPP");
    const int ncols = P.shape().empty() ? 0 : P.shape().part(1);
    std::vector<Partition> columns;
    for (int a = 1; a <= ncols; ++a)
        columns.push_back(frobenius_partition(P.column(a), Q.column(a)));
    return PlanePartition(std::move(columns));
}

std::pair<Tableau, Tableau> pi_inverse(const PlanePartition& pi) {
    std::vector<std::vector<int>> pcols, qcols;
    for (int a = 1; a <= pi.num_columns(); ++a) {
        auto [pcol, qcol] = frobenius_legs(pi.column(a));
        pcols.push_back(std::move(pcol));
        qcols.push_back(std::move(qcol));
    }
    auto assemble = [&](const std::vector<std::vector<int>>& cols) {
        Tableau t;
        t.kind = TableauKind::cspp;
        for (std::size_t a = 0; a < cols.size(); ++a)
            for (std::size_t i = 0; i < cols[a].size(); ++i) {
                if (t.rows.size() <= i) t.rows.emplace_back();
                if (t.rows[i].size() != a)
                    throw std::invalid_argument("diagonal lengths do not assemble to a shape");
                t.rows[i].push_back(cols[a][i]);
            }
        return t;
    };
    Tableau P = assemble(pcols), Q = assemble(qcols);
    if (P.shape() != Q.shape() || !P.valid() || !Q.valid())
        throw std::invalid_argument("plane partition is not in the image of pi_map");
    return {P, Q};
}

BetaWeight beta_weight_pp(const PlanePartition& pi) {
    BetaWeight w;
    for (const Partition& col : pi.columns()) w += beta_weight_partition(col, 0);
    return w;
}

std::vector<long long> beta_transfer(const BetaWeight& w, int p) {
    if (p < 2) throw std::invalid_argument("beta_transfer needs p >= 2");
    std::vector<long long> out(static_cast<std::size_t>(p), 0);
    for (const auto& [b, c] : w.coeffs()) out[static_cast<std::size_t>(((b % p) + p) % p)] += c;
    return out;
}

BetaWeight lambda_hat(int ell, int s) {
    if (ell < 1 || s < 0) throw std::invalid_argument("lambda_hat needs l >= 1, s >= 0");
    BetaWeight w;
    for (int b = -ell + 1; b < 0; ++b) w.add(b, ell + b);
    for (int b = 0; b <= s; ++b) w.add(b, ell);
    for (int b = s + 1; b <= ell + s - 1; ++b) w.add(b, ell + s - b);
    return w;
}

BetaWeight beta_square_tent(int side) {
    BetaWeight w;
    for (int i = 1; i <= side; ++i)
        for (int j = 1; j <= side; ++j) w.add(j - i, 1);
    return w;
}

namespace {

void check_v3_membership(const PlanePartition& pi, int k, int s, int ell) {
    std::vector<int> floor_rows(static_cast<std::size_t>(ell + s), s);
    if (s > 0 && !contains(pi.column(1), Partition(std::move(floor_rows))))
        throw std::invalid_argument("V3 violation: first column does not contain (s^(l+s))");
    if (beta_weight_pp(pi) != beta_square_tent(ell + s))
        throw std::invalid_argument("V3 violation: beta-weight differs from the box tent");
    if (!pi.column(k + 2).empty())
        throw std::invalid_argument("V3 violation: column k+2 is nonempty");
}

}  // namespace

std::vector<Partition> phi_map(const PlanePartition& pi, int p, int k, int s, int ell) {
    (void)p;
    check_v3_membership(pi, k, s, ell);
    const Partition& first = pi.column(1);
    std::vector<int> mu_rows;
    for (int i = 1; i <= ell + s; ++i) mu_rows.push_back(first.part(i) - s);
    std::vector<Partition> out{Partition(std::move(mu_rows))};
    for (int a = 1; a <= k; ++a) out.push_back(pi.column(a + 1));
    return out;
}

PlanePartition psi_map(const std::vector<Partition>& tuple, int p, int k, int s, int ell) {
    (void)p;
    if (static_cast<int>(tuple.size()) != k + 1)
        throw std::invalid_argument("Z violation: tuple must have k+1 entries");
    const Partition& mu = tuple[0];
    if (mu.length() > ell + s || mu.part(1) > ell)
        throw std::invalid_argument("Z violation: first entry exceeds the (l x l+s) box");
    std::vector<int> first;
    for (int i = 1; i <= ell + s; ++i) first.push_back(mu.part(i) + s);
    std::vector<Partition> columns{Partition(std::move(first))};
    for (int a = 1; a <= k; ++a) columns.push_back(tuple[static_cast<std::size_t>(a)]);
    PlanePartition pi(std::move(columns));
    check_v3_membership(pi, k, s, ell);
    return pi;
}

std::vector<PlanePartition> enumerate_V3(int k, int s, int ell) {
    const BetaWeight target = beta_square_tent(ell + s);
    const int side = ell + s;
    std::vector<Partition> box = partitions_in_box(side, side);
    Partition floor;
    if (s > 0) {
        std::vector<int> rows(static_cast<std::size_t>(side), s);
        floor = Partition(std::move(rows));
    }
    std::vector<PlanePartition> out;
    std::vector<Partition> columns;

    const long long total = static_cast<long long>(side) * side;
    auto rec = [&](auto&& self, int a, long long used) -> void {
        if (used == total) {
            PlanePartition pi(columns);
            if (beta_weight_pp(pi) == target) out.push_back(std::move(pi));
            return;
        }
        if (a > k + 1) return;
        for (const Partition& col : box) {
            if (col.empty()) continue;
            if (a == 1 && !contains(col, floor)) continue;
            if (a > 1 && !contains(columns.back(), col)) continue;
            // even maximal later columns cannot reach the target size
            if (used + static_cast<long long>(k + 2 - a) * col.size() < total) continue;
            if (used + col.size() > total) continue;
            columns.push_back(col);
            self(self, a + 1, used + col.size());
            columns.pop_back();
        }
    };
    if (side == 0) return out;
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cml
