#ifndef CML_MULLINEUX_HPP
#define CML_MULLINEUX_HPP

#include <string>
#include <utility>
#include <vector>

#include "cml/partition.hpp"

namespace cml {

/* Weight (k+1)*L0^ - sum m_i alpha^_i of the orbit Lie algebra obtained
 * by folding along i -> -i: type A2 (A^(2)_{p-1}) for odd p, D2
 * (D^(2)_{1+p/2}) for even p. Indices run over 0..(p-1)/2 resp. 0..p/2.
 */
struct OrbitWeight {
    int p = 2;
    bool type_a2 = false;  // false: D2 (p even), true: A2 (p odd)
    int level = 0;
    std::vector<long long> coeffs;

    // "nL0^ - [m0,...,mr] type=A2|D2"
    std::string str() const;

    bool operator==(const OrbitWeight&) const = default;
};

/* Mullineux involution: strip lambda to the empty partition along any
 * maximal raising string, then rebuild with the negated residues.
 */
Partition mullineux(const Partition& lambda, int p);

// delta-check coefficients of the orbit algebra, per parity of p.
std::vector<long long> orbit_delta_coeffs(int p);

// c_{ij} = sum over the omega-orbit of j of a_{i, w^k(j)}, on checked indices.
std::vector<std::vector<long long>> orbit_cartan(int p);

/* Number of tuples in Z(p, k, s=0, l) fixed by entrywise Mullineux.
 * Since all entries are p-cores this equals entrywise transpose; both
 * routes are computed and must agree.
 */
long long fixed_points_Z(int p, int k, int ell);

/* Fixed-point count together with gamma_l = (k+1)L0^ - l a^_0 -
 * (l-1) a^_1 - ... - a^_{l-1}. The weight-transfer identity back to
 * (k+1)L0 - lambda^p_{l,0} is asserted internally.
 */
std::pair<long long, OrbitWeight> orbit_multiplicity(int p, int k, int ell);

// Dominance criterion: multiplicity positive and gamma_l + delta-check
// falls outside the positive cone.
bool gamma_is_maximal(int p, int k, int ell);

}  // namespace cml

#endif
