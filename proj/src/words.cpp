#include "bwc/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bwc {

namespace {

void require_nonempty(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("empty input");
}

}  // namespace

OrderedAlphabet::OrderedAlphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) throw std::invalid_argument("alphabet must contain at least one letter");
    rank_.fill(-1);
    if (letters_.size() > 127) throw std::invalid_argument("alphabet too large");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        auto& slot = rank_[index(letters_[i])];
        if (slot >= 0) {
            throw std::invalid_argument(std::string("repeated letter '") + letters_[i] +
                                        "' in alphabet");
        }
        slot = static_cast<signed char>(i);
    }
}

OrderedAlphabet OrderedAlphabet::of_word(std::string_view w) {
    require_nonempty(w);
    std::set<Letter> seen(w.begin(), w.end());
    return OrderedAlphabet(std::string(seen.begin(), seen.end()));
}

bool OrderedAlphabet::contains_all(std::string_view w) const noexcept {
    return std::all_of(w.begin(), w.end(), [this](Letter x) { return contains(x); });
}

std::size_t OrderedAlphabet::rank(Letter x) const {
    const auto r = rank_[index(x)];
    if (r < 0) {
        throw std::invalid_argument(std::string("letter '") + x + "' not in alphabet " +
                                    to_string());
    }
    return static_cast<std::size_t>(r);
}

bool OrderedAlphabet::same_letters(const OrderedAlphabet& other) const noexcept {
    if (size() != other.size()) return false;
    return other.contains_all(letters_);
}

OrderedAlphabet OrderedAlphabet::reversed() const {
    return OrderedAlphabet(std::string(letters_.rbegin(), letters_.rend()));
}

std::vector<OrderedAlphabet> OrderedAlphabet::all_orders() const {
    if (size() > kMaxEnumerable) {
        throw std::invalid_argument("alphabet too large to enumerate orders (max 8 letters)");
    }
    std::string seq = letters_;
    std::sort(seq.begin(), seq.end());
    std::vector<OrderedAlphabet> out;
    do {
        out.emplace_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

std::string OrderedAlphabet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += '<';
        s += letters_[i];
    }
    return s;
}

LetterPermutation::LetterPermutation(std::string domain, std::string images)
    : domain_(std::move(domain)), images_(std::move(images)) {}

LetterPermutation LetterPermutation::identity(std::string_view letters) {
    std::string d(letters);
    std::sort(d.begin(), d.end());
    return from_images(d, d);
}

LetterPermutation LetterPermutation::from_images(std::string_view letters, std::string_view images) {
    std::string d(letters);
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end()) {
        throw std::invalid_argument("permutation domain has repeated letters");
    }
    if (images.size() != d.size()) {
        throw std::invalid_argument("permutation needs exactly one image per letter");
    }
    std::string sorted_images(images);
    std::sort(sorted_images.begin(), sorted_images.end());
    if (sorted_images != d) {
        throw std::invalid_argument("permutation images must be a rearrangement of the letters");
    }
    return LetterPermutation(std::move(d), std::string(images));
}

LetterPermutation LetterPermutation::from_pairs(const std::vector<std::pair<Letter, Letter>>& pairs) {
    std::vector<std::pair<Letter, Letter>> sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    std::string d, im;
    for (auto [x, y] : sorted) {
        d += x;
        im += y;
    }
    return from_images(d, im);
}

LetterPermutation LetterPermutation::symmetric(const OrderedAlphabet& order) {
    const auto& seq = order.letters();
    std::vector<std::pair<Letter, Letter>> pairs;
    for (std::size_t i = 0; i < seq.size(); ++i) pairs.emplace_back(seq[i], seq[seq.size() - 1 - i]);
    return from_pairs(pairs);
}

Letter LetterPermutation::operator()(Letter x) const {
    const auto pos = domain_.find(x);
    if (pos == std::string::npos) {
        throw std::invalid_argument(std::string("letter '") + x + "' outside permutation domain");
    }
    return images_[pos];
}

Word LetterPermutation::apply(std::string_view w) const {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) out += (*this)(x);
    return out;
}

LetterPermutation LetterPermutation::inverse() const {
    std::vector<std::pair<Letter, Letter>> pairs;
    for (std::size_t i = 0; i < domain_.size(); ++i) pairs.emplace_back(images_[i], domain_[i]);
    return from_pairs(pairs);
}

LetterPermutation LetterPermutation::compose(const LetterPermutation& other) const {
    if (domain_ != other.domain_) throw std::invalid_argument("composing permutations on different letters");
    std::string im;
    for (Letter x : domain_) im += (*this)(other(x));
    return LetterPermutation(domain_, std::move(im));
}

std::string LetterPermutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        if (i) s += ',';
        s += domain_[i];
        s += "->";
        s += images_[i];
    }
    return s;
}

Word rotate(std::string_view w, std::size_t shift) {
    if (w.empty()) return {};
    shift %= w.size();
    Word out(w.substr(shift));
    out.append(w.substr(0, shift));
    return out;
}

std::vector<Word> conjugates(std::string_view w) {
    require_nonempty(w);
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(rotate(w, i));
    return out;
}

PrimitiveRoot primitive_root(std::string_view w) {
    require_nonempty(w);
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
        if (periodic) return {Word(w.substr(0, d)), n / d};
    }
    return {Word(w), 1};
}

bool is_primitive(std::string_view w) { return primitive_root(w).multiplicity == 1; }

Word reverse(std::string_view w) { return Word(w.rbegin(), w.rend()); }

bool is_palindrome(std::string_view w) { return std::equal(w.begin(), w.end(), w.rbegin()); }

bool are_conjugate(std::string_view u, std::string_view v) {
    if (u.size() != v.size()) return false;
    const Word uu = Word(u) + Word(u);
    return uu.find(v) != Word::npos;
}

Word power(std::string_view w, std::size_t n) {
    Word out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) out.append(w);
    return out;
}

Ordering lex_compare(std::string_view u, std::string_view v, const OrderedAlphabet& order) {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto ru = order.rank(u[i]);
        const auto rv = order.rank(v[i]);
        if (ru != rv) return ru < rv ? Ordering::Less : Ordering::Greater;
    }
    // Validate the tail so that an alphabet mismatch is never silently accepted.
    for (std::size_t i = n; i < u.size(); ++i) (void)order.rank(u[i]);
    for (std::size_t i = n; i < v.size(); ++i) (void)order.rank(v[i]);
    if (u.size() == v.size()) return Ordering::Equal;
    return u.size() < v.size() ? Ordering::Less : Ordering::Greater;
}

std::optional<Letter> separating_letter(std::string_view w) {
    require_nonempty(w);
    std::set<Letter> letters(w.begin(), w.end());
    if (letters.size() == 1) return w.front();
    std::optional<Letter> found;
    for (Letter x : letters) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i) {
            if (w[i] == x) continue;
            if (i > 0 && w[i - 1] != x) ok = false;
            if (i + 1 < w.size() && w[i + 1] != x) ok = false;
        }
        if (ok) {
            // The letter must be the only one with the property ("ab", "aba").
            if (found) return std::nullopt;
            found = x;
        }
    }
    return found;
}

bool has_subsequence(std::string_view w, std::string_view pattern) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < w.size() && j < pattern.size(); ++i) {
        if (w[i] == pattern[j]) ++j;
    }
    return j == pattern.size();
}

std::size_t count_occurrences(std::string_view w, std::string_view pattern) {
    if (pattern.empty() || pattern.size() > w.size()) return pattern.empty() ? w.size() + 1 : 0;
    std::size_t count = 0;
    for (std::size_t pos = w.find(pattern); pos != std::string_view::npos; pos = w.find(pattern, pos + 1)) {
        ++count;
    }
    return count;
}

}  // namespace bwc
