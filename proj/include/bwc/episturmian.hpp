#ifndef BWC_EPISTURMIAN_HPP
#define BWC_EPISTURMIAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bwc/directive.hpp"
#include "bwc/words.hpp"

namespace bwc {

enum class ClusteringSupply { FinitelyMany, InfinitelyMany };

std::string to_string(ClusteringSupply s);

// Three-letter episturmian directive words (every rule used at least once).
// After (Rabc) normalization the language has infinitely many clustering
// words iff D = D'.D'' with D' over {a,b} and D'' over {a,c} or {b,c}.
struct EpiResult {
    ClusteringSupply verdict = ClusteringSupply::FinitelyMany;
    // InfinitelyMany only: D' = the first `split` rules, D'' over tail_letters
    // (caller's letters, sorted).
    std::size_t split = 0;
    std::string tail_letters;

    friend bool operator==(const EpiResult&, const EpiResult&) = default;
};

EpiResult thepi_check(const DirectiveWord& d);

// w_p.Z_p is in the language iff rule z is used at or after stage p.
bool ebs_check(const DirectiveWord& d, std::size_t p, Letter z);

// |w_{lambda2}| + max{|Z_{mu_y+1}| : w_{mu_y+1}.Z_{mu_y+1} in the language} + 1.
// Throws PreconditionError("no finite bound applies") when thepi_check
// reports InfinitelyMany.
std::size_t epi_bound(const DirectiveWord& d);

struct EpiWitness {
    Word word;
    std::size_t stage = 0;
    Letter letter{};  // caller's letter of the standard word
    std::size_t power = 1;

    friend bool operator==(const EpiWitness&, const EpiWitness&) = default;
};

// For InfinitelyMany: standard words Z_p (p >= lambda2, z used at or after
// p) with Z_p.Z_p in the language, in strictly increasing length. When the
// period uses a single rule z, the family is Z_p^n instead. Throws
// PreconditionError for FinitelyMany.
std::vector<EpiWitness> epi_witnesses(const DirectiveWord& d, std::size_t count);

// Two-letter rule evolution (A_k, B_k, w_k). The directive must use both
// rules infinitely often.
ARState sturmian_words(const DirectiveWord& d, std::size_t k);

// Whether v over {a,b} is conjugate to a power of a standard Sturmian word,
// decided by two-letter de-substitution of its primitive root. Agrees with
// clustering over the order a < b.
bool tstu_check(std::string_view v);

// Rule evolution on r >= 2 letters; requires every rule in the period.
ARState multi_ar_evolve(const DirectiveWord& d, std::size_t k);

// Landmarks of an r-letter directive word, computed on the first three rules
// by order of appearance. Stage indices, x and y in normalized letters.
struct MultiLandmarks {
    std::size_t lambda1 = 0, lambda2 = 0, lambda_a = 0, lambda_b = 0;
    std::size_t mu_a = 0, mu_b = 0;
    Letter x = 'a', y = 'b';
    LetterPermutation normalization = LetterPermutation::identity("abc");

    std::size_t mu_y() const { return y == 'a' ? mu_a : mu_b; }
    std::size_t lambda_y() const { return y == 'a' ? lambda_a : lambda_b; }

    friend bool operator==(const MultiLandmarks&, const MultiLandmarks&) = default;
};

MultiLandmarks multi_landmarks(const DirectiveWord& d);

struct MultiBound {
    // |w_{lambda2}| + max_i |A^(i)_{mu_y+1}| + 1
    std::size_t general = 0;
    // same with |w_{lambda_y}|
    std::size_t refined = 0;

    friend bool operator==(const MultiBound&, const MultiBound&) = default;
};

MultiBound multi_arc_bound(const DirectiveWord& d);

// One block D^(j) of the chain: rules from stage `begin` up to `end`
// (exclusive; none for the infinite last block) over a two-letter alphabet.
struct ChainBlock {
    std::string letters;
    std::size_t begin = 0;
    std::optional<std::size_t> end;

    friend bool operator==(const ChainBlock&, const ChainBlock&) = default;
};

struct MultiEpiResult {
    ClusteringSupply verdict = ClusteringSupply::FinitelyMany;
    std::vector<ChainBlock> chain;  // r-1 blocks when InfinitelyMany

    friend bool operator==(const MultiEpiResult&, const MultiEpiResult&) = default;
};

// Chain condition for r-letter episturmian directive words: D splits into
// blocks over S_1, ..., S_{r-1}, S_1 any pair, S_{j+1} = {new letter, one
// letter of S_j}, the last block infinite. Blocks may be empty.
MultiEpiResult multi_thepi_check(const DirectiveWord& d);

}  // namespace bwc

#endif  // BWC_EPISTURMIAN_HPP
