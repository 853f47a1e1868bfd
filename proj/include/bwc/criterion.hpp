#ifndef BWC_CRITERION_HPP
#define BWC_CRITERION_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "bwc/language.hpp"
#include "bwc/words.hpp"

namespace bwc {

// A pair of extensions x.v.y and x'.v.y' of a bispecial v on which the
// orders disagree: pi^{-1}x < pi^{-1}x' but y > y', or the converse.
struct OrderViolation {
    Word bispecial;
    Letter x{};
    Letter x_prime{};
    Letter y{};
    Letter y_prime{};
    // Number of violating (unordered) pairs for this bispecial.
    std::size_t count = 0;

    friend bool operator==(const OrderViolation&, const OrderViolation&) = default;
};

struct OrderConditionReport {
    Word word;
    OrderedAlphabet order;
    LetterPermutation permutation;
    // First witness per failing bispecial, in (length, lex) order.
    std::vector<OrderViolation> violations;
    bool verdict = true;

    friend bool operator==(const OrderConditionReport&, const OrderConditionReport&) = default;
};

// Checks the order condition at one bispecial. Throws std::invalid_argument
// if v is not bispecial in lang. Returns the violation if there is one.
std::optional<OrderViolation> order_violation(const Language& lang, std::string_view v,
                                              const OrderedAlphabet& order,
                                              const LetterPermutation& pi);

bool satisfies_order_condition(const Language& lang, std::string_view v,
                               const OrderedAlphabet& order, const LetterPermutation& pi);

// Extension graphs of every bispecial of Lambda_w, in (length, lex) order,
// for checking many (order, pi) pairs against the same word.
std::vector<ExtensionGraph> bispecial_graphs(std::string_view w);

bool order_condition_holds(const std::vector<ExtensionGraph>& graphs, const OrderedAlphabet& order,
                           const LetterPermutation& pi);

// Clustering of w for (order, pi) decided from the bispecials of Lambda_w.
// Non-primitive words are handled through their primitive root.
OrderConditionReport clustering_by_criterion(std::string_view w, const OrderedAlphabet& order,
                                             const LetterPermutation& pi);

// Draws right extensions on a top line in `top` order and left extensions
// on a bottom line in `bottom` order. True iff no two edges cross; edges
// sharing an endpoint do not count.
bool crossing_free(const ExtensionGraph& g, const OrderedAlphabet& top,
                   const OrderedAlphabet& bottom);

// For every conjugate uv of w with u != reverse(u) and v != reverse(v):
// u < reverse(u) iff v < reverse(v). Throws PreconditionError if Lambda_w is
// not closed under reversal.
bool rev_condition3(std::string_view w, const OrderedAlphabet& order);

}  // namespace bwc

#endif  // BWC_CRITERION_HPP
