#include "doctest.h"

#include "bwc/json_io.hpp"

using namespace bwc;
using nlohmann::json;

namespace {

// Serialize, print, re-parse and rebuild; the result must equal the input
// and print identically.
template <typename T>
T round_trip(const T& value) {
    const std::string text = json(value).dump();
    const T back = json::parse(text).get<T>();
    CHECK(json(back).dump() == text);
    return back;
}

}  // namespace

TEST_CASE("orders, permutations and directive words") {
    CHECK(round_trip(OrderedAlphabet("acb")) == OrderedAlphabet("acb"));
    const auto pi = LetterPermutation::from_images("abc", "cab");
    CHECK(json(pi) == "cab");
    CHECK(round_trip(pi) == pi);
    const auto d = DirectiveWord::parse("abacba:abc");
    CHECK(round_trip(d) == d);
    const DirectiveWord wide("ab", "ab", 4);
    CHECK(round_trip(wide) == wide);
}

TEST_CASE("clustering reports") {
    for (const auto& c : clusters_any("abaca")) CHECK(round_trip(c) == c);
    const auto report = clustering_by_criterion("baab", OrderedAlphabet("ab"), LetterPermutation::from_images("ab", "ba"));
    REQUIRE_FALSE(report.verdict);
    CHECK(round_trip(report) == report);
    const auto g = extension_graph(CircularLanguage("abaca"), "a");
    CHECK(round_trip(g) == g);
}

TEST_CASE("AR reports") {
    const auto trib = DirectiveWord::parse(":abc");
    const auto s = ar_evolve(trib, 5);
    CHECK(round_trip(s) == s);
    const auto t = lms_rename(trib, 4);
    CHECK(round_trip(t) == t);
    const auto lm = landmarks(DirectiveWord::parse("bca:bca"));
    CHECK(round_trip(lm) == lm);
    const auto c = clist_criterion(trib, 'c', 4);
    CHECK(round_trip(c) == c);
    const auto desub = *desubstitute("abac");
    CHECK(round_trip(desub) == desub);
    for (const auto& e : clustering_census(trib, 4)) CHECK(round_trip(e) == e);
}

TEST_CASE("episturmian reports") {
    const auto inf = thepi_check(DirectiveWord::parse("ab:ac"));
    CHECK(round_trip(inf) == inf);
    const auto fin = thepi_check(DirectiveWord::parse("abc:ab"));
    CHECK(round_trip(fin) == fin);
    for (const auto& w : epi_witnesses(DirectiveWord::parse("ab:ac"), 3)) CHECK(round_trip(w) == w);
    const auto b = multi_arc_bound(DirectiveWord::parse(":abcd"));
    CHECK(round_trip(b) == b);
    const auto lm = multi_landmarks(DirectiveWord::parse(":abcd"));
    CHECK(round_trip(lm) == lm);
    const auto chain = multi_thepi_check(DirectiveWord::parse("abacbc:dc"));
    CHECK(round_trip(chain) == chain);
    CHECK(json(chain)["chain"].back()["end"].is_null());
}

TEST_CASE("suite reports") {
    const auto r = run_suite("thepi", {2, "abc"});
    CHECK(r.passed());
    CHECK(round_trip(r) == r);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS(json::parse(R"({"chain": ["rho_a"], "letter": "a"})").get<Desubstitution>());
    CHECK_THROWS(json::parse(R"({"verdict": "Some"})").get<EpiResult>());
    CHECK_THROWS(json::parse(R"("ab")").get<OrderViolation>());
}
