// Independent reference implementations used only by the tests.
#ifndef BWC_TESTS_ORACLES_HPP
#define BWC_TESTS_ORACLES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "bwc/words.hpp"

namespace oracle {

// Every word of length n over `letters`, in lexicographic order of positions.
inline std::vector<std::string> all_words(const std::string& letters, std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            for (char x : letters) next.push_back(w + x);
        }
        out = std::move(next);
    }
    return out;
}

inline std::vector<std::string> all_words_upto(const std::string& letters, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) {
        auto ws = all_words(letters, k);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

// Rotation sort on materialized strings, re-encoded so that plain string
// comparison follows the order.
inline std::string bwt(const std::string& w, const std::string& order) {
    std::string code = w;
    for (char& c : code) c = static_cast<char>('A' + order.find(c));
    std::vector<std::pair<std::string, char>> rows;
    for (std::size_t i = 0; i < w.size(); ++i) {
        rows.emplace_back(code.substr(i) + code.substr(0, i), w[(i + w.size() - 1) % w.size()]);
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& r : rows) out += r.second;
    return out;
}

// w clusters for pi (images[i] = pi(order[i])) iff its transform is
// pi(a_1)^{n_1} ... pi(a_r)^{n_r}.
inline bool clusters(const std::string& w, const std::string& order, const std::string& images) {
    std::string expected;
    for (char x : images) expected += std::string(std::count(w.begin(), w.end(), x), x);
    return bwt(w, order) == expected;
}

// Comparison of two distinct conjugates by their last differing position,
// read through pi^{-1}; must match the lexicographic comparison for every
// pair exactly when w clusters for pi.
inline bool modified_order_condition(const std::string& w, const std::string& order,
                                     const std::string& images) {
    const std::size_t n = w.size();
    auto inv_rank = [&](char x) { return images.find(x); };
    auto rank = [&](char x) { return order.find(x); };
    std::vector<std::string> rots;
    for (std::size_t i = 0; i < n; ++i) rots.push_back(w.substr(i) + w.substr(0, i));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& z = rots[i];
            const auto& zp = rots[j];
            if (z == zp) continue;
            std::size_t first = 0;
            while (z[first] == zp[first]) ++first;
            std::size_t last = n - 1;
            while (z[last] == zp[last]) --last;
            const bool lex_less = rank(z[first]) < rank(zp[first]);
            const bool tail_less = inv_rank(z[last]) < inv_rank(zp[last]);
            if (lex_less != tail_less) return false;
        }
    }
    return true;
}

}  // namespace oracle

#endif  // BWC_TESTS_ORACLES_HPP
