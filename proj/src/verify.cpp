#include "bwc/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "bwc/arnoux_rauzy.hpp"
#include "bwc/bwt.hpp"
#include "bwc/criterion.hpp"
#include "bwc/episturmian.hpp"

namespace bwc {

namespace {

constexpr std::size_t kKeptFailures = 20;

class Recorder {
public:
    Recorder(std::string_view suite, const SuiteOptions& options, std::size_t max) {
        report_.suite = std::string(suite);
        report_.max = max;
        report_.letters = suite == "car" || suite == "rev" ? options.letters : "abc";
    }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++report_.cases;
        if (ok) return;
        ++report_.failure_count;
        if (report_.failures.size() < kKeptFailures) report_.failures.push_back(describe());
    }

    SuiteReport finish() { return std::move(report_); }

private:
    SuiteReport report_;
};

// Every word over `letters` of each length from `from` to `to`, shortest
// first, each length in lexicographic order.
void for_each_word(const std::string& letters, std::size_t from, std::size_t to,
                   const std::function<void(const Word&)>& visit) {
    for (std::size_t n = from; n <= to; ++n) {
        std::vector<std::size_t> digits(n, 0);
        Word w(n, letters.empty() ? 'a' : letters[0]);
        while (true) {
            visit(w);
            std::size_t i = n;
            while (i > 0 && digits[i - 1] + 1 == letters.size()) {
                digits[i - 1] = 0;
                w[i - 1] = letters[0];
                --i;
            }
            if (i == 0) break;
            w[i - 1] = letters[++digits[i - 1]];
        }
    }
}

std::vector<LetterPermutation> all_permutations(const std::string& letters) {
    std::vector<LetterPermutation> out;
    for (const auto& images : OrderedAlphabet(letters).all_orders()) {
        out.push_back(LetterPermutation::from_images(letters, images.letters()));
    }
    return out;
}

std::vector<DirectiveWord> ar_prefixes(std::size_t max) {
    std::vector<DirectiveWord> out;
    for_each_word("abc", 0, max, [&](const Word& p) { out.emplace_back(p, "abc"); });
    return out;
}

std::vector<DirectiveWord> epi_directives(std::size_t max_prefix, std::size_t max_period) {
    std::vector<DirectiveWord> out;
    for_each_word("abc", 0, max_prefix, [&](const Word& p) {
        for_each_word("abc", 1, max_period, [&](const Word& c) {
            DirectiveWord d(p, c, 3);
            if (d.epi_valid()) out.push_back(std::move(d));
        });
    });
    return out;
}

void suite_car(Recorder& rec, const SuiteOptions& options, std::size_t max) {
    const auto perms = all_permutations(options.letters);
    const auto orders = OrderedAlphabet(options.letters).all_orders();
    for_each_word(options.letters, 1, max, [&](const Word& w) {
        if (!is_primitive(w)) return;
        const auto graphs = bispecial_graphs(w);
        for (const auto& order : orders) {
            std::set<LetterPermutation> certified;
            for (const auto& c : clustering_certificates(w, order)) certified.insert(c.permutation);
            for (const auto& pi : perms) {
                if (pi.is_identity()) continue;
                const bool by_criterion = order_condition_holds(graphs, order, pi);
                const bool by_transform = certified.count(pi) == 1;
                rec.check(by_criterion == by_transform, [&] {
                    return w + " order " + order.letters() + " pi " + pi.images() + ": criterion " +
                           (by_criterion ? "true" : "false") + ", transform " + (by_transform ? "true" : "false");
                });
            }
        }
    });
}

void suite_rel(Recorder& rec, std::size_t max) {
    for (const auto& d : ar_prefixes(max)) {
        const auto n = normalize_rabc(d).directive;
        const auto lm = landmarks(n);
        ARState s = ar_initial("abc");
        for (std::size_t k = 0; k <= 12; ++k) {
            const std::size_t threshold[3] = {1, lm.lambda1 + 1, lm.lambda2 + 1};
            for (std::size_t i = 0; i < 3; ++i) {
                const Word& z = s.words[i];
                const bool fits = z.size() <= s.bispecial.size();
                const bool suffix = fits && s.bispecial.compare(s.bispecial.size() - z.size(), z.size(), z) == 0;
                rec.check(suffix == fits && suffix == (k >= threshold[i]), [&] {
                    return d.to_string() + " stage " + std::to_string(k) + ": suffix relation of " +
                           std::string(1, s.letters[i]);
                });
            }
            if (k > 0) {
                const auto t = lms_rename(n, k);
                const auto next = lms_rename(n, k + 1);
                rec.check(t.m.size() + t.s.size() > t.l.size() && t.l.size() < next.m.size(), [&] {
                    return d.to_string() + " stage " + std::to_string(k) + ": length inequalities";
                });
            }
            ar_step(s, n[k]);
        }
    }
}

void suite_sq(Recorder& rec, std::size_t max) {
    for (const auto& d : ar_prefixes(3)) {
        const auto norm = normalize_rabc(d);
        const auto back = norm.to_normal.inverse();
        const auto lm = landmarks(d);
        const DirectiveLanguage lang(d);
        std::set<Word> listed;
        ARState s = ar_initial("abc");
        auto shortest = [&] {
            return std::min({s.words[0].size(), s.words[1].size(), s.words[2].size()});
        };
        for (std::size_t p = 0; shortest() <= 2 * max || p <= lm.lambda2; ++p) {
            for (Letter z : Word("abc")) {
                const bool in_range = z == 'a' || (z == 'b' && p >= lm.lambda1) || (z == 'c' && p >= lm.lambda2);
                const Word zp = back.apply(s.word(z));
                if (!in_range || zp.size() > 2 * max) continue;
                rec.check(is_ar_factor(zp + zp, d), [&] {
                    return d.to_string() + ": square of the stage-" + std::to_string(p) + " word " + zp + " missing";
                });
                for (const auto& c : conjugates(zp)) listed.insert(c);
            }
            ar_step(s, norm.directive[p]);
        }
        for (std::size_t len = 1; len <= max; ++len) {
            for (const auto& v : lang.factors(len)) {
                if (!is_primitive(v) || !lang.contains(v + v)) continue;
                rec.check(listed.count(v) == 1,
                          [&] { return d.to_string() + ": square of " + v + " is not a listed square"; });
            }
        }
    }
    for_each_word("abc", 1, std::min<std::size_t>(max, 8), [&](const Word& v) {
        if (!is_primitive(v)) return;
        rec.check(is_conjugate_to_standard(v) == is_ar_word(v + v),
                  [&] { return v + ": de-substitution disagrees with AR-ness of the square"; });
    });
}

void suite_list_clist(Recorder& rec, std::size_t max) {
    const OrderedAlphabet abc("abc");
    for (const auto& d : ar_prefixes(max)) {
        for (std::size_t p = 0; p <= 10; ++p) {
            const auto s = ar_evolve(d, p);
            for (Letter z : Word("abc")) {
                const bool by_landmarks = standard_clusters(d, z, p);
                const auto clist = clist_criterion(d, z, p);
                const Word& zp = s.word(z);
                bool ok = by_landmarks == clist.clusters;
                if (zp.size() <= 100) ok = ok && (!clusters_any(zp, abc).empty()) == by_landmarks;
                rec.check(ok, [&] {
                    return d.to_string() + " stage " + std::to_string(p) + " word " + std::string(1, z) +
                           ": verdicts disagree";
                });
            }
        }
    }
}

void suite_rev(Recorder& rec, const SuiteOptions& options, std::size_t max) {
    for_each_word(options.letters, 1, max, [&](const Word& w) {
        const OrderedAlphabet present = OrderedAlphabet::of_word(w);
        for (const auto& order : OrderedAlphabet(options.letters).all_orders()) {
            for (const auto& c : clustering_certificates(w, order)) {
                const auto dual = pi_order(order, c.permutation);
                const auto inverse = c.permutation.inverse();
                const auto rc = clustering_certificates(reverse(w), dual);
                const bool found = std::any_of(rc.begin(), rc.end(),
                                               [&](const auto& r) { return r.permutation == inverse; });
                rec.check(found, [&] {
                    return w + " order " + order.letters() + " pi " + c.permutation.images() +
                           ": reverse lacks the dual certificate";
                });
            }
        }
        // one letter: only the identity permutes it
        if (present.size() < 2) return;
        const CircularLanguage lang(w);
        const bool closed = is_closed_under_reversal(lang);
        for (const auto& order : present.all_orders()) {
            const bool perfect = is_perfectly_clustering(w, order);
            if (perfect) {
                rec.check(closed, [&] { return w + ": perfectly clustering but not closed under reversal"; });
            }
            if (!closed) continue;
            const bool clusters = !clustering_certificates(w, order).empty();
            const bool splits = rev_condition3(w, order);
            rec.check(clusters == perfect && perfect == splits, [&] {
                return w + " order " + order.letters() + ": clustering, perfect clustering and splits disagree";
            });
        }
    });
}

bool has_literal_split(const DirectiveWord& d) {
    const auto dn = normalize_rabc(d).directive;
    const std::size_t horizon = dn.prefix().size() + 2 * dn.period().size();
    for (std::size_t s = 0; s <= horizon; ++s) {
        if (s > 0 && dn[s - 1] == 'c') break;
        std::set<Letter> tail;
        for (std::size_t k = s; k < horizon; ++k) tail.insert(dn[k]);
        if (!(tail.count('a') && tail.count('b'))) return true;
    }
    return false;
}

void suite_thepi(Recorder& rec, std::size_t max) {
    const OrderedAlphabet abc("abc");
    for (const auto& d : epi_directives(max, 2)) {
        const auto verdict = thepi_check(d).verdict;
        const bool infinite = verdict == ClusteringSupply::InfinitelyMany;
        rec.check(infinite == has_literal_split(d) && multi_thepi_check(d).verdict == verdict,
                  [&] { return d.to_string() + ": split decisions disagree"; });
        if (!infinite) {
            const std::size_t n = epi_bound(d);
            if (n > 40) continue;
            for (const auto& f : DirectiveLanguage(d).factors(n)) {
                rec.check(clusters_any(f, abc).empty(),
                          [&] { return d.to_string() + ": " + f + " clusters at the bound"; });
            }
            continue;
        }
        const auto back = normalize_rabc(d).to_normal.inverse();
        const OrderedAlphabet acb(back.apply("acb"));
        const DirectiveLanguage lang(d);
        std::size_t last = 0;
        for (const auto& e : epi_witnesses(d, 5)) {
            bool ok = e.word.size() > last && lang.contains(e.word + e.word);
            if (e.word.size() <= 200) ok = ok && is_perfectly_clustering(e.word, acb);
            last = e.word.size();
            rec.check(ok, [&] { return d.to_string() + ": witness " + e.word + " fails"; });
        }
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"car", "rel", "sq", "list-clist", "rev", "thepi"};
    return names;
}

std::size_t default_suite_max(std::string_view suite) {
    if (suite == "car") return 8;
    if (suite == "rel") return 8;
    if (suite == "sq") return 20;
    if (suite == "list-clist") return 6;
    if (suite == "rev") return 8;
    if (suite == "thepi") return 4;
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

SuiteReport run_suite(std::string_view suite, const SuiteOptions& options) {
    const std::size_t max = options.max == 0 ? default_suite_max(suite) : options.max;
    if (options.letters.size() < 2 || !OrderedAlphabet(options.letters).contains_all(options.letters)) {
        throw std::invalid_argument("suite letters must be at least two distinct letters");
    }
    Recorder rec(suite, options, max);
    if (suite == "car") {
        suite_car(rec, options, max);
    } else if (suite == "rel") {
        suite_rel(rec, max);
    } else if (suite == "sq") {
        suite_sq(rec, max);
    } else if (suite == "list-clist") {
        suite_list_clist(rec, max);
    } else if (suite == "rev") {
        suite_rev(rec, options, max);
    } else if (suite == "thepi") {
        suite_thepi(rec, max);
    }
    return rec.finish();
}

}  // namespace bwc
