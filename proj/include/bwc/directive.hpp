#ifndef BWC_DIRECTIVE_HPP
#define BWC_DIRECTIVE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bwc/language.hpp"
#include "bwc/words.hpp"

namespace bwc {

// Generated words longer than this abort with std::length_error.
inline constexpr std::size_t kMaxGeneratedLength = std::size_t{1} << 25;

// An eventually periodic directive word prefix.period^omega. Rules are
// named by letters; the alphabet is the first r lowercase letters, r given
// explicitly or inferred from the largest letter used.
class DirectiveWord {
public:
    DirectiveWord(Word prefix, Word period, std::size_t letter_count = 0);

    // "PREFIX:PERIOD", prefix possibly empty.
    static DirectiveWord parse(std::string_view spec, std::size_t letter_count = 0);

    const Word& prefix() const noexcept { return prefix_; }
    const Word& period() const noexcept { return period_; }
    const std::string& letters() const noexcept { return letters_; }

    // Rule at stage k.
    Letter operator[](std::size_t k) const noexcept {
        return k < prefix_.size() ? prefix_[k] : period_[(k - prefix_.size()) % period_.size()];
    }

    // D_k, the first k rules.
    Word head(std::size_t k) const;

    // Every rule is used infinitely often.
    bool ar_valid() const;
    // Every rule is used at least once.
    bool epi_valid() const;

    // First stage >= from whose rule is z.
    std::optional<std::size_t> next_stage(Letter z, std::size_t from) const;
    bool occurs_from(Letter z, std::size_t from) const { return next_stage(z, from).has_value(); }

    // Renames every rule through pi (a permutation of letters()).
    DirectiveWord relabel(const LetterPermutation& pi) const;

    std::string to_string() const { return prefix_ + ":" + period_; }

    friend bool operator==(const DirectiveWord& a, const DirectiveWord& b) noexcept {
        return a.prefix_ == b.prefix_ && a.period_ == b.period_ && a.letters_ == b.letters_;
    }

private:
    Word prefix_;
    Word period_;
    std::string letters_;
};

// Stage-k words of the rule evolution: one word per letter, plus the
// bispecial w_k. Rule (x) keeps X and right-multiplies every other word by X.
struct ARState {
    std::size_t stage = 0;
    std::string letters;
    std::vector<Word> words;
    Word bispecial;

    const Word& word(Letter x) const;

    friend bool operator==(const ARState&, const ARState&) = default;
};

ARState ar_initial(std::string_view letters);

// Applies the rule x: w <- w.X, Y <- Y.X for Y != X.
void ar_step(ARState& state, Letter rule);

ARState ar_evolve(const DirectiveWord& d, std::size_t k);

enum class MorphismKind { Sigma, Tau };

// sigma_x: x -> x, y -> yx. tau_x: x -> x, y -> xy.
struct Morphism {
    MorphismKind kind;
    Letter letter;

    Word operator()(std::string_view w) const;
    // "sigma_a", "tau_b"
    std::string to_string() const;

    friend bool operator==(const Morphism& a, const Morphism& b) noexcept {
        return a.kind == b.kind && a.letter == b.letter;
    }
};

// sigma_{x_0} o sigma_{x_1} o ... o sigma_{x_{k-1}} applied to w, for rules
// x_0 ... x_{k-1}. With rules = D_k and w a letter this is the stage-k word.
Word sigma_image(std::string_view rules, std::string_view w);
Word tau_image(std::string_view rules, std::string_view w);

// The language generated by a directive word whose rules are each used at
// least once. Factors of length n are read off w_K.Z_K, for K the first
// stage with |w_K| >= n-1 and z ranging over rules used at or after K.
class DirectiveLanguage final : public Language {
public:
    explicit DirectiveLanguage(DirectiveWord d);

    const DirectiveWord& directive() const noexcept { return directive_; }

    std::vector<Word> factors(std::size_t n) const override;
    std::string letters() const override { return directive_.letters(); }

    // The words w_K.Z_K whose length-n factors are the language's.
    std::vector<Word> covering_words(std::size_t n) const;

private:
    DirectiveWord directive_;
};

// Exact membership of w in the language of d.
bool is_ar_factor(std::string_view w, const DirectiveWord& d);

}  // namespace bwc

#endif  // BWC_DIRECTIVE_HPP
