#ifndef CML_WORDS_HPP
#define CML_WORDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cml/partition.hpp"

namespace cml {

using Word = std::vector<int>;

// Digits joined when every letter is < 10, comma-separated otherwise.
std::string word_str(const Word& w);

// All distinct arrangements of the multiset {0^s, 1, ..., l} in
// lexicographic order; (l+s)!/s! of them.
std::vector<Word> enumerate_shuffles(int s, int ell);

// Length of the longest strictly decreasing subsequence.
int lds_length(const Word& w);

// Shuffles of {0^s, 1..l} with no strictly decreasing subsequence of
// length k+2.
long long count_avoiding_shuffles(int s, int ell, int k);

enum class TableauKind { sst, cspp, standard, reverse_standard };

/* Row filling of a Young diagram. SST rows weakly increase and columns
 * strictly increase; CSPP rows weakly decrease and columns strictly
 * decrease. Standard / reverse-standard additionally have content
 * exactly {1..n}.
 */
struct Tableau {
    std::vector<std::vector<int>> rows;
    TableauKind kind = TableauKind::sst;

    Partition shape() const;
    std::vector<int> column(int j) const;  // 1-based, top to bottom
    std::vector<int> content() const;      // sorted multiset
    bool valid() const;                    // monotonicity + content check
    int entry(int i, int j) const { return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

    bool operator==(const Tableau&) const = default;
};

// Entry complement m+1-x, turning SST/ST into CSPP/RST and back.
Tableau complement(const Tableau& t, int m);

// RSK row insertion: P semistandard, Q standard, equal shapes.
std::pair<Tableau, Tableau> rsk_insert(const Word& w);

// Inverse of rsk_insert.
Word rsk_inverse(const Tableau& P, const Tableau& Q);

// Hook length formula; agrees with brute-force enumeration in tests.
long long syt_count(const Partition& lambda);

// All standard tableaux of the given shape.
std::vector<Tableau> enumerate_standard_tableaux(const Partition& lambda);

/* Involutions of S_l whose word has no strictly decreasing subsequence
 * of length k+2, counted both by brute force (l <= 10) and as
 * sum of f^lambda over lambda |- l with at most k+1 rows; the two
 * routes must agree.
 */
long long count_avoiding_involutions(int ell, int k);

// Brute-force count of (k+2,...,2,1)-avoiding permutations of l.
long long count_avoiding_permutations(int ell, int k);

}  // namespace cml

#endif
