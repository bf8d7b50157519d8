#include "cml/qcount.hpp"

#include <numeric>
#include <stdexcept>

#include "cml/partition.hpp"

namespace cml {

QPoly::QPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(int power, long long c) {
    std::vector<long long> v(static_cast<std::size_t>(power) + 1, 0);
    v.back() = c;
    return QPoly(std::move(v));
}

int QPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

long long QPoly::coeff(int power) const {
    return (power >= 0 && power < static_cast<int>(c_.size()))
               ? c_[static_cast<std::size_t>(power)]
               : 0;
}

long long QPoly::eval_at_one() const {
    return std::accumulate(c_.begin(), c_.end(), 0ll);
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<long long> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(out));
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        long long c = c_[i];
        if (c == 0) continue;
        if (!out.empty())
            out += c > 0 ? " + " : " - ";
        else if (c < 0)
            out += "-";
        long long mag = c > 0 ? c : -c;
        if (i == 0)
            out += std::to_string(mag);
        else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += i == 1 ? "q" : "q^" + std::to_string(i);
        }
    }
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;  // exact at every step
    }
    return result;
}

long long ballot_count(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("ballot_count needs n, m >= 0");
    // paths[x][y]: paths to (x, y) staying under y <= x - ... the path
    // runs to (n+m, n) and never exceeds the diagonal y = x.
    std::vector<std::vector<long long>> paths(
        static_cast<std::size_t>(n + m + 1), std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
    paths[0][0] = 1;
    for (int x = 0; x <= n + m; ++x)
        for (int y = 0; y <= n && y <= x; ++y) {
            if (x == 0 && y == 0) continue;
            long long total = 0;
            if (x > 0) total += paths[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
            if (y > 0 && y - 1 <= x) total += paths[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
            paths[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = total;
        }
    long long dp = paths[static_cast<std::size_t>(n + m)][static_cast<std::size_t>(n)];
    // closed form (m+1)/(n+m+1) * C(2n+m, n); multiply first to stay exact
    long long closed = binomial(2 * n + m, n) * static_cast<long long>(m + 1);
    if (closed % (n + m + 1) != 0) throw std::logic_error("ballot closed form is not integral");
    closed /= n + m + 1;
    if (dp != closed) throw std::logic_error("ballot DP and closed form disagree");
    return dp;
}

namespace {

// Exact division, remainder must vanish.
QPoly poly_div_exact(const QPoly& num, const QPoly& den) {
    std::vector<long long> rem(num.coeffs());
    std::vector<long long> quot(rem.size(), 0);
    const int dd = den.degree();
    const long long lead = den.coeff(dd);
    for (int d = static_cast<int>(rem.size()) - 1; d >= dd; --d) {
        long long c = rem[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (c % lead != 0) throw std::logic_error("polynomial division is not exact");
        long long f = c / lead;
        quot[static_cast<std::size_t>(d - dd)] = f;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(d - dd + i)] -= f * den.coeff(i);
    }
    for (long long c : rem)
        if (c != 0) throw std::logic_error("polynomial division left a remainder");
    return QPoly(std::move(quot));
}

}  // namespace

QPoly qbinom(int a, int b) {
    if (b < 0 || b > a) throw std::invalid_argument("qbinom needs 0 <= b <= a");
    // route 1: Pascal recurrence [n j] = [n-1 j-1] + q^j [n-1 j]
    std::vector<QPoly> row{QPoly::one()};
    for (int n = 1; n <= a; ++n) {
        std::vector<QPoly> next(static_cast<std::size_t>(n) + 1);
        next.front() = QPoly::one();
        next.back() = QPoly::one();
        for (int j = 1; j < n; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                QPoly::monomial(j) * row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    const QPoly& by_pascal = row[static_cast<std::size_t>(b)];

    // route 2: [a]!/([b]![a-b]!), dividing after every factor so each
    // intermediate is the polynomial [a-b+i choose i]
    auto qint = [](int n) { return QPoly(std::vector<long long>(static_cast<std::size_t>(n), 1)); };
    QPoly quotient = QPoly::one();
    for (int i = 1; i <= b; ++i) quotient = poly_div_exact(quotient * qint(a - b + i), qint(i));

    if (by_pascal != quotient)
        throw std::logic_error("qbinom Pascal and factorial routes disagree");
    return quotient;
}

QPoly cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic needs d >= 1");
    // (q^d - 1) divided by Phi_e for every proper divisor e of d
    std::vector<long long> qd(static_cast<std::size_t>(d) + 1, 0);
    qd[0] = -1;
    qd.back() = 1;
    QPoly result(std::move(qd));
    for (int e = 1; e < d; ++e)
        if (d % e == 0) result = poly_div_exact(result, cyclotomic(e));
    return result;
}

QPoly cyclotomic_eval(const QPoly& f, int d) {
    const QPoly phi = cyclotomic(d);
    std::vector<long long> rem(f.coeffs());
    const int dd = phi.degree();
    for (int deg = static_cast<int>(rem.size()) - 1; deg >= dd; --deg) {
        long long c = rem[static_cast<std::size_t>(deg)];
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(deg - dd + i)] -= c * phi.coeff(i);  // Phi_d is monic
    }
    if (static_cast<int>(rem.size()) > dd) rem.resize(static_cast<std::size_t>(dd));
    return QPoly(std::move(rem));
}

bool q_lucas_verify(int n, int j, int d) {
    if (j > n) throw std::invalid_argument("q_lucas_verify needs j <= n");
    if (d < 1) throw std::invalid_argument("q_lucas_verify needs d >= 1");
    QPoly lhs = cyclotomic_eval(qbinom(n, j), d);
    // [n%d j%d] is the zero polynomial when j%d exceeds n%d
    QPoly rhs = j % d > n % d ? QPoly() : cyclotomic_eval(qbinom(n % d, j % d), d);
    long long factor = binomial(n / d, j / d);
    std::vector<long long> scaled(rhs.coeffs());
    for (long long& c : scaled) c *= factor;
    return lhs == QPoly(std::move(scaled));
}

std::vector<SEntry> enumerate_S(int p, int s, int k) {
    if (p < 2 || k < 1 || s < 0 || s >= p)
        throw std::invalid_argument("enumerate_S needs p >= 2, k >= 1, 0 <= s < p");
    const int edge_budget = s == 0 ? k : k - 1;  // bound on x_1 + x_{p-1}
    std::vector<SEntry> out;
    if (edge_budget < 0) return out;

    /* Work with differences d_i = x_i - x_{i-1}, i = 1..p. The row
     * inequalities say d_{i+1} <= d_i + [i == s]; the edge bound says
     * d_1 - d_p <= budget; the endpoints force sum d_i = 0. The
     * solutions have d_1 >= 0 and every d_i >= d_1 - budget - 1, which
     * keeps the DFS tiny.
     */
    std::vector<int> d(static_cast<std::size_t>(p) + 1, 0);

    auto emit = [&]() {
        SEntry entry;
        entry.x.assign(static_cast<std::size_t>(p) + 1, 0);
        int peak = 0;
        for (int i = 1; i <= p; ++i) {
            entry.x[static_cast<std::size_t>(i)] =
                entry.x[static_cast<std::size_t>(i - 1)] + d[static_cast<std::size_t>(i)];
            if (i < p) peak = std::max(peak, entry.x[static_cast<std::size_t>(i)]);
        }
        const int q0 = -peak;
        AlphaWeight w = highest_weight(p, k, s);
        for (int t = 0; t < p; ++t)
            w.coeffs[static_cast<std::size_t>(t)] = -(entry.x[static_cast<std::size_t>(t)] + q0);
        entry.weight = std::move(w);
        out.push_back(std::move(entry));
    };

    auto rec = [&](auto&& self, int i, int partial_sum) -> void {
        if (i == p + 1) {
            if (partial_sum == 0 && d[1] - d[static_cast<std::size_t>(p)] <= edge_budget) emit();
            return;
        }
        const int lo = d[1] - edge_budget - (i == p ? 0 : 1);
        const int hi = d[static_cast<std::size_t>(i - 1)] + (i - 1 == s ? 1 : 0);
        for (int v = lo; v <= hi; ++v) {
            // remaining entries are bounded by v + 1 above and lo below
            const int left = p - i;
            const long long need = -(partial_sum + v);
            if (need > static_cast<long long>(left) * (v + 1)) continue;
            if (need < static_cast<long long>(left) * (d[1] - edge_budget - 1)) continue;
            d[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, partial_sum + v);
        }
    };

    for (int first = 0; first <= edge_budget; ++first) {
        d[1] = first;
        rec(rec, 2, first);
    }
    std::sort(out.begin(), out.end(), [](const SEntry& a, const SEntry& b) { return a.x < b.x; });
    return out;
}

long long count_U(int p, int k) {
    if (p < 2 || k < 1) throw std::invalid_argument("count_U needs p >= 2, k >= 1");
    long long count = 0;
    for (const Partition& lambda : partitions_in_box(p - 1, k))
        if (lambda.size() % p == 0) ++count;
    return count;
}

long long totient_count(int p, int k) {
    if (p < 2 || k < 1) throw std::invalid_argument("totient_count needs p >= 2, k >= 1");
    auto phi = [](int d) {
        int result = d;
        for (int f = 2; f * f <= d; ++f)
            if (d % f == 0) {
                while (d % f == 0) d /= f;
                result -= result / f;
            }
        if (d > 1) result -= result / d;
        return result;
    };
    const int g = std::gcd(p, k);
    long long sum = 0;
    for (int d = 1; d <= g; ++d)
        if (g % d == 0) sum += static_cast<long long>(phi(d)) * binomial((p + k) / d, k / d);
    if (sum % (p + k) != 0) throw std::logic_error("totient sum is not divisible by p+k");
    return sum / (p + k);
}

}  // namespace cml
