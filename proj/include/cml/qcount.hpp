#ifndef CML_QCOUNT_HPP
#define CML_QCOUNT_HPP

#include <string>
#include <vector>

#include "cml/weights.hpp"

namespace cml {

/* Integer-coefficient polynomial in q; index = power. All arithmetic is
 * exact, no floating point.
 */
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<long long> coeffs);
    static QPoly one() { return QPoly({1}); }
    static QPoly monomial(int power, long long c = 1);

    int degree() const;  // -1 for the zero polynomial
    long long coeff(int power) const;
    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    long long eval_at_one() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    bool operator==(const QPoly&) const = default;

    // "1 + q + 2*q^2 + q^3"
    std::string str() const;

private:
    std::vector<long long> c_;  // no trailing zeros
};

long long binomial(int n, int k);

// Lattice paths (0,0) -> (n+m,n) staying under the diagonal, by DP;
// checked against (m+1)/(n+m+1) * C(2n+m, n).
long long ballot_count(int n, int m);

/* Gaussian binomial [a b]: the generating function of partitions in a
 * b x (a-b) box, built by the Pascal recurrence and cross-checked
 * against the factorial quotient [a]!/([b]![a-b]!).
 */
QPoly qbinom(int a, int b);

// d-th cyclotomic polynomial.
QPoly cyclotomic(int d);

// f reduced modulo Phi_d, exact integer coefficients.
QPoly cyclotomic_eval(const QPoly& f, int d);

// q-Lucas: [n j] = C(n/d, j/d) * [n%d j%d] in Z[q]/Phi_d.
bool q_lucas_verify(int n, int j, int d);

/* Integer vectors (x_0..x_p) solving the concavity system; each maps to
 * a dominant maximal weight Lambda + sum (x_i + q0) alpha_i. For s = 0
 * the system describes max(k L0), for s > 0 max(k L0 + L_s).
 */
struct SEntry {
    std::vector<int> x;
    AlphaWeight weight;
};

std::vector<SEntry> enumerate_S(int p, int s, int k);

// Partitions with at most p-1 parts, each at most k, size divisible by p.
long long count_U(int p, int k);

// (1/(p+k)) sum over d | gcd(p,k) of phi(d) * C((p+k)/d, k/d).
long long totient_count(int p, int k);

}  // namespace cml

#endif
