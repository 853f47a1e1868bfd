#include "doctest.h"

#include "bwc/words.hpp"

using namespace bwc;

TEST_CASE("ordered alphabet validates and ranks letters") {
    const OrderedAlphabet acb("acb");
    CHECK(acb.rank('a') == 0);
    CHECK(acb.rank('c') == 1);
    CHECK(acb.rank('b') == 2);
    CHECK(acb.less('c', 'b'));
    CHECK(acb.to_string() == "a<c<b");
    CHECK(acb.reversed().letters() == "bca");
    CHECK_THROWS_AS(OrderedAlphabet("aba"), std::invalid_argument);
    CHECK_THROWS_AS(OrderedAlphabet(""), std::invalid_argument);
    CHECK_THROWS_AS(acb.rank('d'), std::invalid_argument);
    CHECK(OrderedAlphabet::of_word("cabbac").letters() == "abc");
}

TEST_CASE("all orders are listed lexicographically") {
    const auto orders = OrderedAlphabet("abc").all_orders();
    REQUIRE(orders.size() == 6);
    CHECK(orders.front().letters() == "abc");
    CHECK(orders[1].letters() == "acb");
    CHECK(orders.back().letters() == "cba");
    CHECK_THROWS(OrderedAlphabet("abcdefghi").all_orders());
}

TEST_CASE("letter permutations") {
    const auto pi = LetterPermutation::from_images("abc", "cab");
    CHECK(pi('a') == 'c');
    CHECK(pi('b') == 'a');
    CHECK(pi('c') == 'b');
    CHECK(pi.apply("abc") == "cab");
    CHECK(pi.inverse()('c') == 'a');
    CHECK(pi.compose(pi.inverse()).is_identity());
    CHECK(pi.to_string() == "a->c,b->a,c->b");
    CHECK(LetterPermutation::symmetric(OrderedAlphabet("acb")).apply("acb") == "bca");
    CHECK(LetterPermutation::symmetric(OrderedAlphabet("a")).is_identity());
    CHECK_THROWS(LetterPermutation::from_images("abc", "aab"));
    // (pi o sigma)(a) = pi(sigma(a))
    const auto sigma = LetterPermutation::from_images("abc", "bca");
    CHECK(pi.compose(sigma)('a') == pi('b'));
}

TEST_CASE("conjugates keep duplicates") {
    CHECK(conjugates("aab") == std::vector<Word>{"aab", "aba", "baa"});
    CHECK(conjugates("a") == std::vector<Word>{"a"});
    CHECK(conjugates("abab") == std::vector<Word>{"abab", "baba", "abab", "baba"});
    CHECK_THROWS_WITH(conjugates(""), "empty input");
}

TEST_CASE("primitivity and roots") {
    CHECK_FALSE(is_primitive("abab"));
    CHECK(is_primitive("abaab"));
    CHECK(is_primitive("a"));
    CHECK(primitive_root("abab").root == "ab");
    CHECK(primitive_root("abab").multiplicity == 2);
    CHECK(primitive_root("aaa").root == "a");
    CHECK(primitive_root("aaa").multiplicity == 3);
    CHECK(primitive_root("abaab").multiplicity == 1);
    CHECK_THROWS(is_primitive(""));
}

TEST_CASE("reversal and palindromes") {
    CHECK(reverse("abc") == "cba");
    CHECK(reverse("aba") == "aba");
    CHECK(reverse("bacab") == "bacab");
    CHECK(is_palindrome("bacab"));
    CHECK_FALSE(is_palindrome("ab"));
    CHECK(are_conjugate("abaca", "acaab"));
    CHECK_FALSE(are_conjugate("abc", "acb"));
    CHECK(power("ab", 3) == "ababab");
}

TEST_CASE("lexicographic comparison") {
    const OrderedAlphabet ab("ab");
    const OrderedAlphabet ba("ba");
    CHECK(lex_compare("ab", "ba", ab) == Ordering::Less);
    CHECK(lex_compare("ab", "ba", ba) == Ordering::Greater);
    CHECK(lex_compare("ab", "aba", ab) == Ordering::Less);
    CHECK(lex_compare("aba", "aba", ab) == Ordering::Equal);
    CHECK_THROWS(lex_compare("ac", "ab", ab));
}

TEST_CASE("separating letter") {
    CHECK(separating_letter("abaca") == 'a');
    CHECK(separating_letter("aaa") == 'a');
    CHECK(separating_letter("abacaba") == 'a');
    CHECK(separating_letter("abaab") == 'a');
    // b qualifies as well as a
    CHECK_FALSE(separating_letter("bab").has_value());
    // a is first and followed by b, c is last and preceded by b
    CHECK(separating_letter("abc") == 'b');
    CHECK_FALSE(separating_letter("ab").has_value());
    CHECK_FALSE(separating_letter("aba").has_value());
    CHECK_FALSE(separating_letter("abcabc").has_value());
}

TEST_CASE("subsequences and occurrences") {
    CHECK(has_subsequence("abcac", "aac"));
    CHECK_FALSE(has_subsequence("abcab", "cba"));
    CHECK(has_subsequence("abc", ""));
    CHECK(count_occurrences("aaaa", "aa") == 3);
    CHECK(count_occurrences("abacaba", "aba") == 2);
}
