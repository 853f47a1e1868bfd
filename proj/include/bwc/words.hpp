#ifndef BWC_WORDS_HPP
#define BWC_WORDS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bwc {

// Words are plain byte strings; each char is one letter. Operations that
// depend on a letter order take an OrderedAlphabet explicitly.
using Word = std::string;
using Letter = char;

// Raised when an operation's documented precondition on its arguments fails
// (as opposed to malformed input, which raises std::invalid_argument).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Ordering { Less, Equal, Greater };

// A set of distinct letters together with a total order: the position of a
// letter in `letters()` is its rank.
class OrderedAlphabet {
public:
    static constexpr std::size_t kMaxEnumerable = 8;

    explicit OrderedAlphabet(std::string_view letters);

    // Distinct letters of `w`, sorted by char value.
    static OrderedAlphabet of_word(std::string_view w);

    const std::string& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    Letter at(std::size_t i) const { return letters_.at(i); }

    bool contains(Letter x) const noexcept { return rank_[index(x)] >= 0; }
    bool contains_all(std::string_view w) const noexcept;

    // Rank of `x`; throws std::invalid_argument for letters outside the alphabet.
    std::size_t rank(Letter x) const;

    bool less(Letter x, Letter y) const { return rank(x) < rank(y); }

    // Same letter set, regardless of order.
    bool same_letters(const OrderedAlphabet& other) const noexcept;

    OrderedAlphabet reversed() const;

    // Every order on the same letter set, in lexicographic order of the letter
    // sequences. Requires size() <= kMaxEnumerable.
    std::vector<OrderedAlphabet> all_orders() const;

    // "a<c<b"
    std::string to_string() const;

    friend bool operator==(const OrderedAlphabet& a, const OrderedAlphabet& b) noexcept {
        return a.letters_ == b.letters_;
    }

private:
    static std::size_t index(Letter x) noexcept { return static_cast<unsigned char>(x); }

    std::string letters_;
    std::array<signed char, 256> rank_{};
};

// A bijection on a finite letter set. The domain is stored sorted by char
// value, so "cab" over {a,b,c} means a->c, b->a, c->b.
class LetterPermutation {
public:
    static LetterPermutation identity(std::string_view letters);

    // `images[i]` is the image of the i-th smallest letter of `letters`.
    static LetterPermutation from_images(std::string_view letters, std::string_view images);

    // Explicit pairs (x -> y); the pairs must form a bijection.
    static LetterPermutation from_pairs(const std::vector<std::pair<Letter, Letter>>& pairs);

    // pi(a_i) = a_{r+1-i} for the order's sequence a_1 < ... < a_r.
    static LetterPermutation symmetric(const OrderedAlphabet& order);

    const std::string& domain() const noexcept { return domain_; }
    const std::string& images() const noexcept { return images_; }

    Letter operator()(Letter x) const;
    Word apply(std::string_view w) const;

    LetterPermutation inverse() const;
    // (this o other)(x) = this(other(x))
    LetterPermutation compose(const LetterPermutation& other) const;

    bool is_identity() const noexcept { return domain_ == images_; }

    // "a->c,b->a,c->b"
    std::string to_string() const;

    friend bool operator==(const LetterPermutation& a, const LetterPermutation& b) noexcept {
        return a.domain_ == b.domain_ && a.images_ == b.images_;
    }
    friend bool operator<(const LetterPermutation& a, const LetterPermutation& b) noexcept {
        return std::pair(a.domain_, a.images_) < std::pair(b.domain_, b.images_);
    }

private:
    LetterPermutation(std::string domain, std::string images);

    std::string domain_;
    std::string images_;
};

// All |w| rotations, starting with w itself; duplicates kept.
std::vector<Word> conjugates(std::string_view w);

Word rotate(std::string_view w, std::size_t shift);

bool is_primitive(std::string_view w);

struct PrimitiveRoot {
    Word root;
    std::size_t multiplicity;
};

PrimitiveRoot primitive_root(std::string_view w);

Word reverse(std::string_view w);

bool is_palindrome(std::string_view w);

bool are_conjugate(std::string_view u, std::string_view v);

Word power(std::string_view w, std::size_t n);

// Lexicographic comparison; a proper prefix compares Less.
Ordering lex_compare(std::string_view u, std::string_view v, const OrderedAlphabet& order);

// The unique letter x such that every other letter is preceded (unless
// first) and followed (unless last) by x. For a power of one letter the
// condition is vacuous and that letter is returned.
std::optional<Letter> separating_letter(std::string_view w);

// True iff `pattern` occurs as a (not necessarily contiguous) subsequence.
bool has_subsequence(std::string_view w, std::string_view pattern);

std::size_t count_occurrences(std::string_view w, std::string_view pattern);

}  // namespace bwc

#endif  // BWC_WORDS_HPP
