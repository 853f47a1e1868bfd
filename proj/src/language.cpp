#include "bwc/language.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace bwc {

namespace {

bool length_lex_less(const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

bool Language::contains(std::string_view w) const {
    const auto fs = factors(w.size());
    return std::binary_search(fs.begin(), fs.end(), Word(w));
}

std::string Language::letters() const {
    std::string out;
    for (const auto& f : factors(1)) out += f;
    return out;
}

CircularLanguage::CircularLanguage(Word base) : base_(std::move(base)) {
    if (base_.empty()) throw std::invalid_argument("empty input");
    root_ = primitive_root(base_).root;
}

Word CircularLanguage::unrolled(std::size_t n) const {
    return power(root_, n / root_.size() + 2);
}

std::vector<Word> CircularLanguage::factors(std::size_t n) const {
    const Word text = unrolled(n);
    std::set<Word> found;
    for (std::size_t i = 0; i < root_.size(); ++i) found.insert(text.substr(i, n));
    return {found.begin(), found.end()};
}

bool CircularLanguage::contains(std::string_view w) const {
    return unrolled(w.size()).find(w) != Word::npos;
}

std::string ExtensionGraph::left_letters() const {
    std::set<Letter> s;
    for (auto [x, y] : pairs) s.insert(x);
    return {s.begin(), s.end()};
}

std::string ExtensionGraph::right_letters() const {
    std::set<Letter> s;
    for (auto [x, y] : pairs) s.insert(y);
    return {s.begin(), s.end()};
}

std::size_t RauzyGraph::in_degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [v](const Edge& e) { return e.to == v; }));
}

std::size_t RauzyGraph::out_degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [v](const Edge& e) { return e.from == v; }));
}

std::vector<Word> factors(const Language& lang, std::size_t n) { return lang.factors(n); }

std::size_t complexity(const Language& lang, std::size_t n) { return lang.factors(n).size(); }

ExtensionGraph extension_graph(const Language& lang, std::string_view v) {
    if (!lang.contains(v)) throw std::invalid_argument("'" + Word(v) + "' is not a factor");
    ExtensionGraph g{Word(v), {}};
    for (const auto& f : lang.factors(v.size() + 2)) {
        if (f.compare(1, v.size(), v) == 0) g.pairs.emplace(f.front(), f.back());
    }
    return g;
}

std::string left_extensions(const Language& lang, std::string_view v) {
    std::set<Letter> s;
    for (const auto& f : lang.factors(v.size() + 1)) {
        if (f.compare(1, v.size(), v) == 0) s.insert(f.front());
    }
    return {s.begin(), s.end()};
}

std::string right_extensions(const Language& lang, std::string_view v) {
    std::set<Letter> s;
    for (const auto& f : lang.factors(v.size() + 1)) {
        if (f.compare(0, v.size(), v) == 0) s.insert(f.back());
    }
    return {s.begin(), s.end()};
}

bool is_bispecial(const Language& lang, std::string_view v) {
    return left_extensions(lang, v).size() >= 2 && right_extensions(lang, v).size() >= 2;
}

namespace {

// One pass per length over the length-(n+1) factors.
std::vector<Word> bispecials_by_length(const Language& lang, std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t n = 0; n <= max_length; ++n) {
        std::map<Word, std::set<Letter>> left, right;
        for (const auto& f : lang.factors(n + 1)) {
            left[f.substr(1)].insert(f.front());
            right[f.substr(0, n)].insert(f.back());
        }
        for (const auto& [v, xs] : left) {
            auto it = right.find(v);
            if (xs.size() >= 2 && it != right.end() && it->second.size() >= 2) out.push_back(v);
        }
    }
    std::stable_sort(out.begin(), out.end(), length_lex_less);
    return out;
}

}  // namespace

std::vector<Word> bispecials(const CircularLanguage& lang) {
    const std::size_t p = lang.root().size();
    if (p < 2) return {};
    return bispecials_by_length(lang, p - 2);
}

std::vector<Word> bispecials(const Language& lang, std::size_t max_length) {
    return bispecials_by_length(lang, max_length);
}

bool is_closed_under_reversal(const CircularLanguage& lang) {
    const Word& root = lang.root();
    return are_conjugate(root, reverse(root));
}

bool is_closed_under_reversal_upto(const Language& lang, std::size_t depth) {
    for (std::size_t n = 1; n <= depth; ++n) {
        const auto fs = lang.factors(n);
        for (const auto& f : fs) {
            if (!std::binary_search(fs.begin(), fs.end(), reverse(f))) return false;
        }
    }
    return true;
}

RauzyGraph rauzy_graph(const Language& lang, std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rauzy graph length must be at least 1");
    RauzyGraph g;
    g.length = n;
    g.vertices = lang.factors(n);
    auto index_of = [&g](const Word& v) {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), v);
        if (it == g.vertices.end() || *it != v) throw std::logic_error("language is not factorial");
        return static_cast<std::size_t>(it - g.vertices.begin());
    };
    for (const auto& f : lang.factors(n + 1)) {
        g.edges.push_back({index_of(f.substr(0, n)), index_of(f.substr(1)), f.back()});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    return g;
}

std::vector<Word> elementary_circuits(const RauzyGraph& graph) {
    const std::size_t n = graph.vertices.size();
    std::vector<std::vector<const RauzyGraph::Edge*>> out_edges(n);
    for (const auto& e : graph.edges) out_edges[e.from].push_back(&e);

    std::vector<Word> circuits;
    std::vector<bool> on_path(n, false);
    Word label;
    // Enumerate each simple cycle once, from its smallest vertex.
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t v) {
        for (const auto* e : out_edges[v]) {
            if (e->to < start) continue;
            label.push_back(e->label);
            if (e->to == start) {
                circuits.push_back(label);
            } else if (!on_path[e->to]) {
                on_path[e->to] = true;
                walk(start, e->to);
                on_path[e->to] = false;
            }
            label.pop_back();
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        on_path[s] = true;
        walk(s, s);
        on_path[s] = false;
    }
    return circuits;
}

std::vector<Word> singular_words(const Language& lang, std::size_t up_to_length) {
    std::vector<Word> out;
    for (std::size_t m = 2; m <= up_to_length; ++m) {
        const auto fs = lang.factors(m);
        for (const auto& f : fs) {
            bool other_left = false, other_right = false;
            for (const auto& g : fs) {
                if (g.compare(1, m - 2, f, 1, m - 2) != 0) continue;
                if (g.back() == f.back() && g.front() != f.front()) other_left = true;
                if (g.front() == f.front() && g.back() != f.back()) other_right = true;
            }
            if (other_left && other_right) out.push_back(f);
        }
    }
    return out;
}

std::size_t max_return_time(std::string_view v, std::string_view sample) {
    if (v.empty()) throw std::invalid_argument("empty input");
    std::vector<std::size_t> occurrences;
    for (auto pos = sample.find(v); pos != std::string_view::npos; pos = sample.find(v, pos + 1)) {
        occurrences.push_back(pos);
    }
    if (occurrences.size() < 3) throw std::invalid_argument("insufficient sample");
    std::size_t best = 0;
    for (std::size_t i = 1; i < occurrences.size(); ++i) {
        best = std::max(best, occurrences[i] - occurrences[i - 1]);
    }
    return best;
}

}  // namespace bwc
