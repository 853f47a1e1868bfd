#include "bwc/directive.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bwc {

namespace {

void check_length(std::size_t n) {
    if (n > kMaxGeneratedLength) throw std::length_error("generated word exceeds the length limit");
}

}  // namespace

DirectiveWord::DirectiveWord(Word prefix, Word period, std::size_t letter_count)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("directive period must be nonempty");
    char top = 'a';
    for (Letter x : prefix_ + period_) {
        if (x < 'a' || x > 'z') throw std::invalid_argument(std::string("invalid rule letter '") + x + "'");
        top = std::max(top, x);
    }
    const std::size_t used = static_cast<std::size_t>(top - 'a') + 1;
    if (letter_count == 0) letter_count = std::max<std::size_t>(used, 2);
    if (letter_count < used || letter_count > 26) {
        throw std::invalid_argument("rule letters exceed the alphabet size");
    }
    for (std::size_t i = 0; i < letter_count; ++i) letters_ += static_cast<char>('a' + i);
}

DirectiveWord DirectiveWord::parse(std::string_view spec, std::size_t letter_count) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos || spec.find(':', colon + 1) != std::string_view::npos) {
        throw std::invalid_argument("directive must have the form PREFIX:PERIOD");
    }
    return DirectiveWord(Word(spec.substr(0, colon)), Word(spec.substr(colon + 1)), letter_count);
}

Word DirectiveWord::head(std::size_t k) const {
    Word out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out += (*this)[i];
    return out;
}

bool DirectiveWord::ar_valid() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [&](Letter x) { return period_.find(x) != Word::npos; });
}

bool DirectiveWord::epi_valid() const {
    return std::all_of(letters_.begin(), letters_.end(), [&](Letter x) {
        return prefix_.find(x) != Word::npos || period_.find(x) != Word::npos;
    });
}

std::optional<std::size_t> DirectiveWord::next_stage(Letter z, std::size_t from) const {
    const std::size_t end = std::max(from, prefix_.size()) + period_.size();
    for (std::size_t k = from; k < end; ++k) {
        if ((*this)[k] == z) return k;
    }
    return std::nullopt;
}

DirectiveWord DirectiveWord::relabel(const LetterPermutation& pi) const {
    return DirectiveWord(pi.apply(prefix_), pi.apply(period_), letters_.size());
}

const Word& ARState::word(Letter x) const {
    const auto pos = letters.find(x);
    if (pos == std::string::npos) throw std::invalid_argument(std::string("unknown letter '") + x + "'");
    return words[pos];
}

ARState ar_initial(std::string_view letters) {
    ARState s;
    s.letters = Word(letters);
    for (Letter x : letters) s.words.emplace_back(1, x);
    return s;
}

void ar_step(ARState& state, Letter rule) {
    const auto pos = state.letters.find(rule);
    if (pos == std::string::npos) throw std::invalid_argument(std::string("unknown rule '") + rule + "'");
    const Word applied = state.words[pos];
    std::size_t longest = 0;
    for (std::size_t i = 0; i < state.words.size(); ++i) {
        if (i != pos) state.words[i] += applied;
        longest = std::max(longest, state.words[i].size());
    }
    state.bispecial += applied;
    check_length(std::max(longest, state.bispecial.size()));
    ++state.stage;
}

ARState ar_evolve(const DirectiveWord& d, std::size_t k) {
    ARState s = ar_initial(d.letters());
    for (std::size_t i = 0; i < k; ++i) ar_step(s, d[i]);
    return s;
}

Word Morphism::operator()(std::string_view w) const {
    Word out;
    out.reserve(2 * w.size());
    for (Letter y : w) {
        if (y == letter) {
            out += y;
        } else if (kind == MorphismKind::Sigma) {
            out += y;
            out += letter;
        } else {
            out += letter;
            out += y;
        }
    }
    return out;
}

std::string Morphism::to_string() const {
    return std::string(kind == MorphismKind::Sigma ? "sigma_" : "tau_") + letter;
}

namespace {

Word compose_image(MorphismKind kind, std::string_view rules, std::string_view w) {
    Word out(w);
    for (auto it = rules.rbegin(); it != rules.rend(); ++it) {
        out = Morphism{kind, *it}(out);
        check_length(out.size());
    }
    return out;
}

}  // namespace

Word sigma_image(std::string_view rules, std::string_view w) {
    return compose_image(MorphismKind::Sigma, rules, w);
}

Word tau_image(std::string_view rules, std::string_view w) {
    return compose_image(MorphismKind::Tau, rules, w);
}

DirectiveLanguage::DirectiveLanguage(DirectiveWord d) : directive_(std::move(d)) {
    if (!directive_.epi_valid()) throw PreconditionError("every rule must be used at least once");
}

std::vector<Word> DirectiveLanguage::covering_words(std::size_t n) const {
    ARState s = ar_initial(directive_.letters());
    while (s.bispecial.size() + 1 < n) ar_step(s, directive_[s.stage]);
    std::vector<Word> out;
    for (std::size_t i = 0; i < s.letters.size(); ++i) {
        if (directive_.occurs_from(s.letters[i], s.stage)) out.push_back(s.bispecial + s.words[i]);
    }
    return out;
}

std::vector<Word> DirectiveLanguage::factors(std::size_t n) const {
    std::set<Word> found;
    for (const auto& u : covering_words(n)) {
        for (std::size_t i = 0; i + n <= u.size(); ++i) found.insert(u.substr(i, n));
    }
    return {found.begin(), found.end()};
}

bool is_ar_factor(std::string_view w, const DirectiveWord& d) {
    return DirectiveLanguage(d).contains(w);
}

}  // namespace bwc
