#ifndef CML_PLANE_HPP
#define CML_PLANE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cml/partition.hpp"
#include "cml/words.hpp"

namespace cml {

/* Finitely supported integer combination of the formal symbols beta_b,
 * b in Z.
 */
class BetaWeight {
public:
    BetaWeight() = default;

    void add(int b, long long c);
    long long coeff(int b) const;
    const std::map<int, long long>& coeffs() const { return coeffs_; }
    long long total() const;  // sum of all coefficients

    BetaWeight& operator+=(const BetaWeight& o);
    BetaWeight& operator-=(const BetaWeight& o);
    friend BetaWeight operator+(BetaWeight a, const BetaWeight& b) { return a += b; }
    friend BetaWeight operator-(BetaWeight a, const BetaWeight& b) { return a -= b; }
    bool operator==(const BetaWeight&) const = default;
    auto operator<=>(const BetaWeight&) const = default;

    std::string str() const;

private:
    std::map<int, long long> coeffs_;  // zero entries are erased
};

// sum over boxes (i,j) of lambda of beta_{charge - i + j}
BetaWeight beta_weight_partition(const Partition& lambda, int charge);

/* A plane partition stored as its columns: column j read downwards is a
 * partition, and columns weakly decrease entrywise left to right.
 */
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<Partition> columns);

    const std::vector<Partition>& columns() const { return columns_; }
    const Partition& column(int j) const;        // 1-based; empty past the end
    int entry(int i, int j) const;               // pi_{ij}, 1-based
    int num_columns() const { return static_cast<int>(columns_.size()); }
    long long total() const;                     // sum of all entries

    // Rows as bracketed integer lists, row-major: "[[2,1],[1]]".
    std::string str() const;

    bool operator==(const PlanePartition&) const = default;
    auto operator<=>(const PlanePartition&) const = default;

private:
    std::vector<Partition> columns_;
};

/* The partition with Frobenius coordinates (pcol_d - 1 | qcol_d - 1).
 * Both inputs must be strictly decreasing positive sequences of equal
 * length.
 */
Partition frobenius_partition(const std::vector<int>& pcol, const std::vector<int>& qcol);

// Columnwise Frobenius bijection between same-shape CSPP pairs and
// plane partitions, with its inverse.
PlanePartition pi_map(const Tableau& P, const Tableau& Q);
std::pair<Tableau, Tableau> pi_inverse(const PlanePartition& pi);

// wt(pi) = sum over columns a and boxes (i,j) of column a of beta_{j-i}.
BetaWeight beta_weight_pp(const PlanePartition& pi);

// T_p: fold beta_b onto alpha_{b mod p}; returns a length-p vector.
std::vector<long long> beta_transfer(const BetaWeight& w, int p);

// The tent-shaped combination Lambda-hat^{l,s}.
BetaWeight lambda_hat(int ell, int s);

// The full-box tent: sum of beta_{j-i} over the (l+s) x (l+s) square.
BetaWeight beta_square_tent(int side);

/* Phi strips s from every row of the first column and keeps columns
 * 2..k+1; Psi prepends the shifted first column. Membership in V3 or Z
 * is revalidated and violations are reported by clause.
 */
std::vector<Partition> phi_map(const PlanePartition& pi, int p, int k, int s, int ell);
PlanePartition psi_map(const std::vector<Partition>& tuple, int p, int k, int s, int ell);

// Exhaustive V3 = {pi : pi_{*,1} contains (s^{l+s}), wt(pi) = box tent,
// pi_{*,k+2} empty}, enumerated by brute force over column chains.
std::vector<PlanePartition> enumerate_V3(int k, int s, int ell);

}  // namespace cml

#endif
