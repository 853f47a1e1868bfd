#ifndef BWC_BWT_HPP
#define BWC_BWT_HPP

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "bwc/words.hpp"

namespace bwc {

// Witness that bwt(w, order) has the run form
//   (pi a_1)^{n_{pi a_1}} ... (pi a_r)^{n_{pi a_r}}
// for the order a_1 < ... < a_r.
struct ClusteringCertificate {
    OrderedAlphabet order;
    LetterPermutation permutation;
    Word transform;
    // (pi a_i, n_{pi a_i}) in order sequence; absent letters carry count 0.
    std::vector<std::pair<Letter, std::size_t>> run_decomposition;

    bool is_perfect() const { return permutation == LetterPermutation::symmetric(order); }

    friend bool operator==(const ClusteringCertificate&, const ClusteringCertificate&) = default;
};

struct ClusterOptions {
    // Report pi = Id as well. The definition of clustering excludes it.
    bool allow_identity = false;
};

// Last column of the sorted (non necessarily distinct) rotations of w.
Word bwt(std::string_view w, const OrderedAlphabet& order);

// All permutations pi (!= Id unless allowed) for which w clusters under
// `order`. Empty when w does not cluster for this order.
std::vector<ClusteringCertificate> clustering_certificates(std::string_view w,
                                                           const OrderedAlphabet& order,
                                                           ClusterOptions options = {});

struct PerfectOptions {
    // Decide on the symmetric permutation of the sub-alphabet of letters
    // occurring in w rather than of the full alphabet.
    bool restrict_to_present = false;
};

bool is_perfectly_clustering(std::string_view w, const OrderedAlphabet& order,
                             PerfectOptions options = {});

// Certificates across every order of `alphabet` (at most 8 letters), orders
// taken in lexicographic order of their letter sequences.
std::vector<ClusteringCertificate> clusters_any(std::string_view w, const OrderedAlphabet& alphabet,
                                                ClusterOptions options = {});

// Same, over the letters occurring in w.
std::vector<ClusteringCertificate> clusters_any(std::string_view w, ClusterOptions options = {});

// The pi-order: x <_pi y iff pi^{-1}x < pi^{-1}y. Its letter sequence is
// pi(a_1), ..., pi(a_r).
OrderedAlphabet pi_order(const OrderedAlphabet& order, const LetterPermutation& pi);

}  // namespace bwc

#endif  // BWC_BWT_HPP
