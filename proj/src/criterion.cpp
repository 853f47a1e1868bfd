#include "bwc/criterion.hpp"

#include <stdexcept>

#include "bwc/bwt.hpp"

namespace bwc {

namespace {

std::optional<OrderViolation> violation_in(const ExtensionGraph& g, const OrderedAlphabet& order,
                                           const LetterPermutation& inverse) {
    std::optional<OrderViolation> first;
    std::size_t count = 0;
    for (auto it = g.pairs.begin(); it != g.pairs.end(); ++it) {
        for (auto jt = std::next(it); jt != g.pairs.end(); ++jt) {
            const auto [x, y] = *it;
            const auto [xp, yp] = *jt;
            if (x == xp || y == yp) continue;
            const bool left = order.less(inverse(x), inverse(xp));
            const bool right = order.less(y, yp);
            if (left == right) continue;
            ++count;
            if (!first) first = OrderViolation{g.center, x, xp, y, yp, 0};
        }
    }
    if (first) first->count = count;
    return first;
}

}  // namespace

std::optional<OrderViolation> order_violation(const Language& lang, std::string_view v,
                                              const OrderedAlphabet& order,
                                              const LetterPermutation& pi) {
    if (!is_bispecial(lang, v)) throw std::invalid_argument("'" + Word(v) + "' is not bispecial");
    return violation_in(extension_graph(lang, v), order, pi.inverse());
}

std::vector<ExtensionGraph> bispecial_graphs(std::string_view w) {
    const CircularLanguage lang{Word(w)};
    std::vector<ExtensionGraph> out;
    for (const auto& v : bispecials(lang)) out.push_back(extension_graph(lang, v));
    return out;
}

bool order_condition_holds(const std::vector<ExtensionGraph>& graphs, const OrderedAlphabet& order,
                           const LetterPermutation& pi) {
    const auto inverse = pi.inverse();
    for (const auto& g : graphs) {
        if (violation_in(g, order, inverse)) return false;
    }
    return true;
}

bool satisfies_order_condition(const Language& lang, std::string_view v,
                               const OrderedAlphabet& order, const LetterPermutation& pi) {
    return !order_violation(lang, v, order, pi).has_value();
}

OrderConditionReport clustering_by_criterion(std::string_view w, const OrderedAlphabet& order,
                                             const LetterPermutation& pi) {
    if (!order.contains_all(w)) throw std::invalid_argument("word uses letters outside the order");
    OrderConditionReport report{Word(w), order, pi, {}, true};
    const CircularLanguage lang{Word(w)};
    for (const auto& v : bispecials(lang)) {
        if (auto violation = order_violation(lang, v, order, pi)) {
            report.violations.push_back(std::move(*violation));
        }
    }
    report.verdict = report.violations.empty();
    return report;
}

bool crossing_free(const ExtensionGraph& g, const OrderedAlphabet& top,
                   const OrderedAlphabet& bottom) {
    for (auto it = g.pairs.begin(); it != g.pairs.end(); ++it) {
        for (auto jt = std::next(it); jt != g.pairs.end(); ++jt) {
            const auto [x, y] = *it;
            const auto [xp, yp] = *jt;
            if (x == xp || y == yp) continue;
            if (bottom.less(x, xp) != top.less(y, yp)) return false;
        }
    }
    return true;
}

bool rev_condition3(std::string_view w, const OrderedAlphabet& order) {
    if (!order.contains_all(w)) throw std::invalid_argument("word uses letters outside the order");
    if (!is_closed_under_reversal(CircularLanguage{Word(w)})) {
        throw PreconditionError("language of the word is not closed under reversal");
    }
    for (const auto& c : conjugates(w)) {
        for (std::size_t i = 1; i < c.size(); ++i) {
            const Word u = c.substr(0, i);
            const Word v = c.substr(i);
            const Word ru = reverse(u);
            const Word rv = reverse(v);
            if (u == ru || v == rv) continue;
            if ((lex_compare(u, ru, order) == Ordering::Less) !=
                (lex_compare(v, rv, order) == Ordering::Less)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace bwc
