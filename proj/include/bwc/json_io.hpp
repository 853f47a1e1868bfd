#ifndef BWC_JSON_IO_HPP
#define BWC_JSON_IO_HPP

// nlohmann::json conversions for every report type. Letters are one-char
// strings, orders their letter sequence, permutations their image string
// over the sorted domain, directive words {"prefix", "period", "rules"}.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bwc/arnoux_rauzy.hpp"
#include "bwc/bwt.hpp"
#include "bwc/criterion.hpp"
#include "bwc/directive.hpp"
#include "bwc/episturmian.hpp"
#include "bwc/language.hpp"
#include "bwc/verify.hpp"
#include "bwc/words.hpp"

namespace bwc::json_detail {

inline std::string letter(Letter x) { return std::string(1, x); }

inline Letter letter(const nlohmann::json& j) {
    const auto s = j.get<std::string>();
    if (s.size() != 1) throw std::invalid_argument("expected a single letter, got '" + s + "'");
    return s[0];
}

inline nlohmann::json optional_index(const std::optional<std::size_t>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline std::optional<std::size_t> optional_index(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::size_t>();
}

}  // namespace bwc::json_detail

namespace bwc {

inline void to_json(nlohmann::json& j, const OrderViolation& v) {
    using json_detail::letter;
    j = {{"bispecial", v.bispecial}, {"x", letter(v.x)},         {"x_prime", letter(v.x_prime)},
         {"y", letter(v.y)},         {"y_prime", letter(v.y_prime)}, {"count", v.count}};
}

inline void from_json(const nlohmann::json& j, OrderViolation& v) {
    using json_detail::letter;
    v.bispecial = j.at("bispecial").get<std::string>();
    v.x = letter(j.at("x"));
    v.x_prime = letter(j.at("x_prime"));
    v.y = letter(j.at("y"));
    v.y_prime = letter(j.at("y_prime"));
    v.count = j.at("count").get<std::size_t>();
}

}  // namespace bwc

namespace nlohmann {

template <>
struct adl_serializer<bwc::OrderedAlphabet> {
    static void to_json(json& j, const bwc::OrderedAlphabet& o) { j = o.letters(); }
    static bwc::OrderedAlphabet from_json(const json& j) { return bwc::OrderedAlphabet(j.get<std::string>()); }
};

template <>
struct adl_serializer<bwc::LetterPermutation> {
    static void to_json(json& j, const bwc::LetterPermutation& p) { j = p.images(); }
    static bwc::LetterPermutation from_json(const json& j) {
        const auto images = j.get<std::string>();
        return bwc::LetterPermutation::from_images(bwc::OrderedAlphabet::of_word(images).letters(), images);
    }
};

template <>
struct adl_serializer<bwc::DirectiveWord> {
    static void to_json(json& j, const bwc::DirectiveWord& d) {
        j = {{"prefix", d.prefix()}, {"period", d.period()}, {"rules", d.letters().size()}};
    }
    static bwc::DirectiveWord from_json(const json& j) {
        return {j.at("prefix").get<std::string>(), j.at("period").get<std::string>(),
                j.at("rules").get<std::size_t>()};
    }
};

template <>
struct adl_serializer<bwc::ClusteringCertificate> {
    static void to_json(json& j, const bwc::ClusteringCertificate& c) {
        json runs = json::array();
        for (const auto& [x, n] : c.run_decomposition) runs.push_back({bwc::json_detail::letter(x), n});
        j = {{"order", c.order},
             {"permutation", c.permutation},
             {"transform", c.transform},
             {"runs", runs},
             {"perfect", c.is_perfect()}};
    }
    static bwc::ClusteringCertificate from_json(const json& j) {
        std::vector<std::pair<bwc::Letter, std::size_t>> runs;
        for (const auto& r : j.at("runs")) runs.emplace_back(bwc::json_detail::letter(r.at(0)), r.at(1).get<std::size_t>());
        return {j.at("order").get<bwc::OrderedAlphabet>(), j.at("permutation").get<bwc::LetterPermutation>(),
                j.at("transform").get<std::string>(), std::move(runs)};
    }
};

template <>
struct adl_serializer<bwc::OrderConditionReport> {
    static void to_json(json& j, const bwc::OrderConditionReport& r) {
        j = {{"word", r.word},
             {"order", r.order},
             {"permutation", r.permutation},
             {"violations", r.violations},
             {"verdict", r.verdict}};
    }
    static bwc::OrderConditionReport from_json(const json& j) {
        return {j.at("word").get<std::string>(), j.at("order").get<bwc::OrderedAlphabet>(),
                j.at("permutation").get<bwc::LetterPermutation>(),
                j.at("violations").get<std::vector<bwc::OrderViolation>>(), j.at("verdict").get<bool>()};
    }
};

}  // namespace nlohmann

namespace bwc {

inline void to_json(nlohmann::json& j, const ExtensionGraph& g) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [x, y] : g.pairs) pairs.push_back(std::string{x, y});
    j = {{"center", g.center}, {"extensions", pairs}};
}

inline void from_json(const nlohmann::json& j, ExtensionGraph& g) {
    g.center = j.at("center").get<std::string>();
    g.pairs.clear();
    for (const auto& p : j.at("extensions")) {
        const auto s = p.get<std::string>();
        if (s.size() != 2) throw std::invalid_argument("extension must be two letters");
        g.pairs.emplace(s[0], s[1]);
    }
}

inline void to_json(nlohmann::json& j, const ARState& s) {
    nlohmann::json words = nlohmann::json::object();
    for (std::size_t i = 0; i < s.letters.size(); ++i) words[json_detail::letter(s.letters[i])] = s.words[i];
    j = {{"stage", s.stage}, {"words", words}, {"bispecial", s.bispecial}};
}

inline void from_json(const nlohmann::json& j, ARState& s) {
    s.stage = j.at("stage").get<std::size_t>();
    s.letters.clear();
    s.words.clear();
    for (const auto& [key, value] : j.at("words").items()) {
        s.letters += json_detail::letter(nlohmann::json(key));
        s.words.push_back(value.get<std::string>());
    }
    s.bispecial = j.at("bispecial").get<std::string>();
}

inline void to_json(nlohmann::json& j, const LMSTriple& t) {
    using json_detail::letter;
    j = {{"stage", t.stage},
         {"S", {{"letter", letter(t.s_letter)}, {"word", t.s}}},
         {"M", {{"letter", letter(t.m_letter)}, {"word", t.m}}},
         {"L", {{"letter", letter(t.l_letter)}, {"word", t.l}}},
         {"step", std::string(1, to_char(t.step))}};
}

inline void from_json(const nlohmann::json& j, LMSTriple& t) {
    using json_detail::letter;
    t.stage = j.at("stage").get<std::size_t>();
    t.s_letter = letter(j.at("S").at("letter"));
    t.m_letter = letter(j.at("M").at("letter"));
    t.l_letter = letter(j.at("L").at("letter"));
    t.s = j.at("S").at("word").get<std::string>();
    t.m = j.at("M").at("word").get<std::string>();
    t.l = j.at("L").at("word").get<std::string>();
    const Letter step = letter(j.at("step"));
    if (step != 'S' && step != 'M' && step != 'L') throw std::invalid_argument("step must be S, M or L");
    t.step = step == 'S' ? LmsRole::S : step == 'M' ? LmsRole::M : LmsRole::L;
}

inline void to_json(nlohmann::json& j, const Landmarks& lm) {
    using json_detail::letter;
    j = {{"lambda1", lm.lambda1}, {"lambda2", lm.lambda2}, {"lambda_a", lm.lambda_a},
         {"lambda_b", lm.lambda_b}, {"mu_a", lm.mu_a},       {"mu_b", lm.mu_b},
         {"x", letter(lm.x)},       {"y", letter(lm.y)},     {"mu", lm.mu},
         {"normalization", lm.normalization}};
}

inline void from_json(const nlohmann::json& j, Landmarks& lm) {
    using json_detail::letter;
    lm.lambda1 = j.at("lambda1").get<std::size_t>();
    lm.lambda2 = j.at("lambda2").get<std::size_t>();
    lm.lambda_a = j.at("lambda_a").get<std::size_t>();
    lm.lambda_b = j.at("lambda_b").get<std::size_t>();
    lm.mu_a = j.at("mu_a").get<std::size_t>();
    lm.mu_b = j.at("mu_b").get<std::size_t>();
    lm.x = letter(j.at("x"));
    lm.y = letter(j.at("y"));
    lm.mu = j.at("mu").get<std::size_t>();
    lm.normalization = j.at("normalization").get<LetterPermutation>();
}

inline void to_json(nlohmann::json& j, const ClistResult& r) {
    j = {{"clusters", r.clusters}, {"middle_letters", r.middle_letters}, {"perfect_orders", r.perfect_orders}};
}

inline void from_json(const nlohmann::json& j, ClistResult& r) {
    r.clusters = j.at("clusters").get<bool>();
    r.middle_letters = j.at("middle_letters").get<std::string>();
    r.perfect_orders.clear();
    for (const auto& o : j.at("perfect_orders")) r.perfect_orders.push_back(o.get<OrderedAlphabet>());
}

inline void to_json(nlohmann::json& j, const Desubstitution& d) {
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& m : d.chain) chain.push_back(m.to_string());
    j = {{"chain", chain}, {"letter", json_detail::letter(d.letter)}};
}

inline void from_json(const nlohmann::json& j, Desubstitution& d) {
    d.chain.clear();
    for (const auto& m : j.at("chain")) {
        const auto s = m.get<std::string>();
        const auto us = s.find('_');
        if (us == std::string::npos || us + 2 != s.size() || (s.substr(0, us) != "sigma" && s.substr(0, us) != "tau")) {
            throw std::invalid_argument("malformed morphism '" + s + "'");
        }
        d.chain.push_back({s[0] == 's' ? MorphismKind::Sigma : MorphismKind::Tau, s.back()});
    }
    d.letter = json_detail::letter(j.at("letter"));
}

inline void to_json(nlohmann::json& j, const CensusEntry& e) {
    j = {{"word", e.word}, {"certificates", e.certificates}};
}

inline void from_json(const nlohmann::json& j, CensusEntry& e) {
    e.word = j.at("word").get<std::string>();
    e.certificates.clear();
    for (const auto& c : j.at("certificates")) e.certificates.push_back(c.get<ClusteringCertificate>());
}

inline void to_json(nlohmann::json& j, const EpiResult& r) {
    j = {{"verdict", to_string(r.verdict)}};
    if (r.verdict == ClusteringSupply::InfinitelyMany) {
        j["split"] = r.split;
        j["tail_letters"] = r.tail_letters;
    }
}

inline ClusteringSupply supply_from_json(const nlohmann::json& j) {
    const auto s = j.get<std::string>();
    if (s == "FinitelyMany") return ClusteringSupply::FinitelyMany;
    if (s == "InfinitelyMany") return ClusteringSupply::InfinitelyMany;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

inline void from_json(const nlohmann::json& j, EpiResult& r) {
    r = {};
    r.verdict = supply_from_json(j.at("verdict"));
    if (r.verdict == ClusteringSupply::InfinitelyMany) {
        r.split = j.at("split").get<std::size_t>();
        r.tail_letters = j.at("tail_letters").get<std::string>();
    }
}

inline void to_json(nlohmann::json& j, const EpiWitness& w) {
    j = {{"word", w.word}, {"stage", w.stage}, {"letter", json_detail::letter(w.letter)}, {"power", w.power}};
}

inline void from_json(const nlohmann::json& j, EpiWitness& w) {
    w.word = j.at("word").get<std::string>();
    w.stage = j.at("stage").get<std::size_t>();
    w.letter = json_detail::letter(j.at("letter"));
    w.power = j.at("power").get<std::size_t>();
}

inline void to_json(nlohmann::json& j, const MultiBound& b) { j = {{"general", b.general}, {"refined", b.refined}}; }

inline void from_json(const nlohmann::json& j, MultiBound& b) {
    b.general = j.at("general").get<std::size_t>();
    b.refined = j.at("refined").get<std::size_t>();
}

inline void to_json(nlohmann::json& j, const MultiLandmarks& lm) {
    using json_detail::letter;
    j = {{"lambda1", lm.lambda1}, {"lambda2", lm.lambda2}, {"lambda_a", lm.lambda_a},
         {"lambda_b", lm.lambda_b}, {"mu_a", lm.mu_a},       {"mu_b", lm.mu_b},
         {"x", letter(lm.x)},       {"y", letter(lm.y)},     {"normalization", lm.normalization}};
}

inline void from_json(const nlohmann::json& j, MultiLandmarks& lm) {
    using json_detail::letter;
    lm.lambda1 = j.at("lambda1").get<std::size_t>();
    lm.lambda2 = j.at("lambda2").get<std::size_t>();
    lm.lambda_a = j.at("lambda_a").get<std::size_t>();
    lm.lambda_b = j.at("lambda_b").get<std::size_t>();
    lm.mu_a = j.at("mu_a").get<std::size_t>();
    lm.mu_b = j.at("mu_b").get<std::size_t>();
    lm.x = letter(j.at("x"));
    lm.y = letter(j.at("y"));
    lm.normalization = j.at("normalization").get<LetterPermutation>();
}

inline void to_json(nlohmann::json& j, const ChainBlock& b) {
    j = {{"letters", b.letters}, {"begin", b.begin}, {"end", json_detail::optional_index(b.end)}};
}

inline void from_json(const nlohmann::json& j, ChainBlock& b) {
    b.letters = j.at("letters").get<std::string>();
    b.begin = j.at("begin").get<std::size_t>();
    b.end = json_detail::optional_index(j.at("end"));
}

inline void to_json(nlohmann::json& j, const MultiEpiResult& r) {
    j = {{"verdict", to_string(r.verdict)}, {"chain", r.chain}};
}

inline void from_json(const nlohmann::json& j, MultiEpiResult& r) {
    r.verdict = supply_from_json(j.at("verdict"));
    r.chain = j.at("chain").get<std::vector<ChainBlock>>();
}

inline void to_json(nlohmann::json& j, const SuiteReport& r) {
    j = {{"suite", r.suite},   {"max", r.max},
         {"letters", r.letters}, {"cases", r.cases},
         {"failure_count", r.failure_count}, {"failures", r.failures},
         {"passed", r.passed()}};
}

inline void from_json(const nlohmann::json& j, SuiteReport& r) {
    r.suite = j.at("suite").get<std::string>();
    r.max = j.at("max").get<std::size_t>();
    r.letters = j.at("letters").get<std::string>();
    r.cases = j.at("cases").get<std::size_t>();
    r.failure_count = j.at("failure_count").get<std::size_t>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
}

}  // namespace bwc

#endif  // BWC_JSON_IO_HPP
