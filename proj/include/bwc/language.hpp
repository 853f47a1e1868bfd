#ifndef BWC_LANGUAGE_HPP
#define BWC_LANGUAGE_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwc/words.hpp"

namespace bwc {

// A factorial extendable language, queried one length at a time.
class Language {
public:
    virtual ~Language() = default;

    // Distinct factors of length n, sorted by char value.
    virtual std::vector<Word> factors(std::size_t n) const = 0;

    virtual bool contains(std::string_view w) const;

    // Letters that occur in the language, sorted.
    virtual std::string letters() const;
};

// Lambda_w: the factors of w^omega.
class CircularLanguage final : public Language {
public:
    explicit CircularLanguage(Word base);

    const Word& base() const noexcept { return base_; }
    const Word& root() const noexcept { return root_; }

    std::vector<Word> factors(std::size_t n) const override;
    bool contains(std::string_view w) const override;

private:
    // root^k long enough to contain every factor of length n
    Word unrolled(std::size_t n) const;

    Word base_;
    Word root_;
};

struct ExtensionGraph {
    Word center;
    // (left, right) with left.center.right in the language, sorted
    std::set<std::pair<Letter, Letter>> pairs;

    std::string left_letters() const;
    std::string right_letters() const;

    friend bool operator==(const ExtensionGraph&, const ExtensionGraph&) = default;
};

struct RauzyGraph {
    struct Edge {
        std::size_t from;
        std::size_t to;
        Letter label;
    };

    std::size_t length = 0;
    std::vector<Word> vertices;  // lexicographic
    std::vector<Edge> edges;     // ordered by (from, to)

    std::size_t in_degree(std::size_t v) const;
    std::size_t out_degree(std::size_t v) const;
};

std::vector<Word> factors(const Language& lang, std::size_t n);

std::size_t complexity(const Language& lang, std::size_t n);

// Throws std::invalid_argument if v is not a factor.
ExtensionGraph extension_graph(const Language& lang, std::string_view v);

std::string left_extensions(const Language& lang, std::string_view v);
std::string right_extensions(const Language& lang, std::string_view v);

bool is_bispecial(const Language& lang, std::string_view v);

// Every bispecial of Lambda_w. They are factors of root.root of length at
// most |root| - 2, so the search stops there. Sorted by (length, lex).
std::vector<Word> bispecials(const CircularLanguage& lang);

// Bispecials of length <= max_length of an arbitrary language.
std::vector<Word> bispecials(const Language& lang, std::size_t max_length);

// Lambda_w is closed under reversal iff the reverse of every conjugate of the
// root is again a conjugate: longer factors are factors of powers of
// conjugates, and shorter ones are factors of conjugates.
bool is_closed_under_reversal(const CircularLanguage& lang);

// Direct check of w in L <=> reverse(w) in L for all lengths <= depth.
bool is_closed_under_reversal_upto(const Language& lang, std::size_t depth);

RauzyGraph rauzy_graph(const Language& lang, std::size_t n);

// Labels of the elementary circuits (simple cycles). Each label is read
// starting from the circuit's lexicographically smallest vertex.
std::vector<Word> elementary_circuits(const RauzyGraph& graph);

// Words xvy with some x'vy (x' != x) and some xvy' (y' != y) in the language,
// of length <= up_to_length. Sorted by (length, lex).
std::vector<Word> singular_words(const Language& lang, std::size_t up_to_length);

// Largest gap between consecutive occurrences of v in sample. Requires at
// least three occurrences, else throws std::invalid_argument("insufficient sample").
std::size_t max_return_time(std::string_view v, std::string_view sample);

}  // namespace bwc

#endif  // BWC_LANGUAGE_HPP
