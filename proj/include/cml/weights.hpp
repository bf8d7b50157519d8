#ifndef CML_WEIGHTS_HPP
#define CML_WEIGHTS_HPP

#include <string>
#include <vector>

namespace cml {

/* A weight of the form k*L0 + Ls - sum_i c_i alpha_i over Z/pZ.
 * The highest weight is recorded as the pair (k, s); the coefficient
 * vector has length p and is indexed by residues 0..p-1.
 */
struct AlphaWeight {
    int p = 2;
    int k = 0;  // highest weight is k*Lambda_0 + Lambda_s
    int s = 0;
    std::vector<long long> coeffs;

    long long height() const;
    bool in_positive_cone() const;  // all coeffs >= 0

    // "kL0+Ls - [c0,c1,...]"
    std::string str() const;

    bool operator==(const AlphaWeight&) const = default;
};

AlphaWeight highest_weight(int p, int k, int s);

// omega: alpha_i -> alpha_{-i}; fixes the highest weight kL0+L0.
AlphaWeight omega_weight(const AlphaWeight& w);
std::vector<long long> omega_coeffs(const std::vector<long long>& coeffs);

/* Coefficient vectors of the root-lattice elements lambda^p_{l,t} and
 * mu^p_{l,u}. Parameter constraints: l >= 1, t >= 0, l+t < p-l+1 for
 * lambda; u <= p, l < u-l+1 for mu.
 */
std::vector<long long> lambda_weight_coeffs(int p, int ell, int t);
std::vector<long long> mu_weight_coeffs(int p, int ell, int u);

}  // namespace cml

#endif
