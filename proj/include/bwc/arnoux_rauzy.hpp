#ifndef BWC_ARNOUX_RAUZY_HPP
#define BWC_ARNOUX_RAUZY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bwc/bwt.hpp"
#include "bwc/directive.hpp"
#include "bwc/words.hpp"

namespace bwc {

// Relabeling so that the first three distinct rules, in order of
// appearance, are named a, b, c. Remaining letters keep their relative order.
struct Normalization {
    DirectiveWord directive;
    // original letter -> normalized letter
    LetterPermutation to_normal;
};

Normalization normalize_rabc(const DirectiveWord& d);

enum class LmsRole { S, M, L };

char to_char(LmsRole role);

// Stage-k words renamed by length, with the role of the word appended to
// the bispecial at stage k (w_{k+1} = w_k.S_k, w_k.M_k or w_k.L_k).
struct LMSTriple {
    std::size_t stage = 0;
    Word s, m, l;
    Letter s_letter{}, m_letter{}, l_letter{};
    LmsRole step = LmsRole::S;

    friend bool operator==(const LMSTriple&, const LMSTriple&) = default;
};

// Words and letters in the caller's alphabet. Three-letter AR directive only.
LMSTriple lms_rename(const DirectiveWord& d, std::size_t k);

// Stage indices of a three-letter directive word, read after normalization:
// lambda1 / lambda2 first rules (b) / (c); lambda_a, lambda_b last (a), (b)
// before lambda2; mu_a, mu_b first (a), (b) after lambda2; mu_x < mu_y; mu
// the start of the run of equal rules ending at mu_y - 1. Letters x and y
// are reported in the caller's alphabet.
struct Landmarks {
    std::size_t lambda1 = 0, lambda2 = 0, lambda_a = 0, lambda_b = 0;
    std::size_t mu_a = 0, mu_b = 0;
    Letter x = 'a', y = 'b';
    std::size_t mu = 0;
    LetterPermutation normalization = LetterPermutation::identity("abc");

    std::size_t mu_x() const { return normalization(x) == 'a' ? mu_a : mu_b; }
    std::size_t mu_y() const { return normalization(y) == 'a' ? mu_a : mu_b; }
    std::size_t lambda_x() const { return normalization(x) == 'a' ? lambda_a : lambda_b; }
    std::size_t lambda_y() const { return normalization(y) == 'a' ? lambda_a : lambda_b; }

    friend bool operator==(const Landmarks&, const Landmarks&) = default;
};

Landmarks landmarks(const DirectiveWord& d);

// |w_{lambda_y}| + max(|C_{mu_y+1}|, |X_{mu_y+1}|) + 1: no longer word of the
// language clusters.
std::size_t arc_bound(const DirectiveWord& d);

// Whether the stage-p word of rule z clusters, from the landmark thresholds:
// Y_p iff p <= mu_x, C_p and X_p iff p <= mu_y.
bool standard_clusters(const DirectiveWord& d, Letter z, std::size_t p);

struct ClistResult {
    bool clusters = false;
    // Letters z' for which neither z'.u.v nor z'.v.u is a subsequence of D_p.z.
    std::string middle_letters;
    // The orders with some z' in the middle; the word clusters perfectly for
    // exactly these.
    std::vector<OrderedAlphabet> perfect_orders;

    friend bool operator==(const ClistResult&, const ClistResult&) = default;
};

ClistResult clist_criterion(const DirectiveWord& d, Letter z, std::size_t p);

// S_{mu_y}^{mu_y - mu + 1} M_{mu_y}: a long primitive perfectly clustering
// word of the language, conjugate to a standard word.
Word long_word(const DirectiveWord& d);

// The four words x.w_{lambda2}.y with (x, y) in {(c,a), (c,b), (b,c), (a,c)}
// (normalized letters). True iff at least three of them occur in w.w, which
// rules out clustering for w.
bool caro_obstructed(std::string_view w, const DirectiveWord& d);

// w = chain[0](chain[1](...chain[k-1](letter))).
struct Desubstitution {
    std::vector<Morphism> chain;
    Letter letter{};

    friend bool operator==(const Desubstitution&, const Desubstitution&) = default;
};

// Shortest chain of inverse sigma_x / tau_x steps from w down to a single
// letter, if any. Inverse tau_x applies when every other letter is directly
// preceded by x, inverse sigma_x when it is directly followed by x; the x is
// deleted. Candidates are tried as tau_a, tau_b, ..., sigma_a, sigma_b, ...
std::optional<Desubstitution> desubstitute(std::string_view w);

// Throws PreconditionError for non-primitive v (pass its primitive root).
bool is_conjugate_to_standard(std::string_view v);

// Whether w is a factor of some three-letter AR language over {a,b,c}.
bool is_ar_word(std::string_view w);

// Inserts a b in the middle of every aa and ab.
Word psi_insert(std::string_view u);

// b.psi(tau_v(b)) with its final b removed, for v over {a,c} containing
// both. If v starts with c the roles of a and c are exchanged.
Word ptb1_construct(std::string_view v);

// tau_u(w) for u over {a,c}.
Word ptb2_construct(std::string_view u, std::string_view w);

struct CensusEntry {
    Word word;
    std::vector<ClusteringCertificate> certificates;

    friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

// Every factor of length <= max_len with a clustering certificate for some
// order of the directive alphabet, sorted by (length, lex).
std::vector<CensusEntry> clustering_census(const DirectiveWord& d, std::size_t max_len);

}  // namespace bwc

#endif  // BWC_ARNOUX_RAUZY_HPP
