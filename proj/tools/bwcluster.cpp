#include <cctype>
#include <cstddef>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bwc/json_io.hpp"

using namespace bwc;
using nlohmann::json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    bool as_json = false;

    void emit(const json& j, const std::string& text) const {
        if (as_json) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
        }
    }
};

Word checked_word(const std::string& w, const char* what = "word") {
    if (w.empty()) throw InputError(std::string(what) + " must be nonempty");
    for (char c : w) {
        if (c < 'a' || c > 'z') throw InputError(std::string(what) + " must use letters a-z: '" + w + "'");
    }
    return w;
}

OrderedAlphabet checked_order(const std::string& spec) {
    checked_word(spec, "order");
    return OrderedAlphabet(spec);
}

// Letters of w in increasing char order, unless an order is given.
OrderedAlphabet order_for(const Word& w, const std::string& spec) {
    if (spec.empty()) return OrderedAlphabet::of_word(w);
    auto order = checked_order(spec);
    if (!order.contains_all(w)) throw InputError("order '" + spec + "' misses letters of '" + w + "'");
    return order;
}

DirectiveWord checked_directive(const std::string& spec, std::size_t letters = 0) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("directive must read PREFIX:PERIOD, got '" + spec + "'");
    if (colon > 0) checked_word(spec.substr(0, colon), "directive prefix");
    checked_word(spec.substr(colon + 1), "directive period");
    return DirectiveWord::parse(spec, letters);
}

std::string show(const Word& w) { return w.empty() ? "ε" : w; }

std::string order_text(const OrderedAlphabet& o) {
    std::string s;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += '<';
        s += o.at(i);
    }
    return s;
}

std::string certificate_text(const ClusteringCertificate& c) {
    std::ostringstream out;
    out << order_text(c.order) << "  pi " << c.permutation.images() << "  bwt " << c.transform << "  runs";
    for (const auto& [x, n] : c.run_decomposition) out << ' ' << x << n;
    if (c.is_perfect()) out << "  perfect";
    return out.str();
}

std::string state_text(const ARState& s) {
    std::ostringstream out;
    out << "stage " << s.stage << '\n';
    for (std::size_t i = 0; i < s.letters.size(); ++i) {
        out << static_cast<char>(std::toupper(s.letters[i])) << ' ' << show(s.words[i]) << '\n';
    }
    out << "w " << show(s.bispecial) << '\n';
    return out.str();
}

std::string desub_text(const Desubstitution& d) {
    std::string s;
    for (const auto& m : d.chain) s += m.to_string() + ' ';
    return s + d.letter;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burrows-Wheeler clustering of words and Arnoux-Rauzy languages", "bwcluster"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string word, order, pi, directive, suite;
    std::size_t stage = 0, max = 0, letters = 0, witnesses = 0;
    bool perfect = false, lms = false;
    std::string verify_letters = "abc";

    auto* bwt_cmd = app.add_subcommand("bwt", "Burrows-Wheeler transform of a word");
    bwt_cmd->add_option("word", word)->required();
    bwt_cmd->add_option("--order", order, "Letter order, e.g. acb for a<c<b");

    auto* cluster_cmd = app.add_subcommand("cluster", "Clustering certificates of a word");
    cluster_cmd->add_option("word", word)->required();
    cluster_cmd->add_option("--order", order, "Restrict to one order");
    cluster_cmd->add_flag("--perfect", perfect, "Decide perfect clustering for the order");

    auto* bisp_cmd = app.add_subcommand("bispecials", "Bispecial factors of the circular language");
    bisp_cmd->add_option("word", word)->required();

    auto* crit_cmd = app.add_subcommand("criterion", "Order condition over the bispecials");
    crit_cmd->add_option("word", word)->required();
    crit_cmd->add_option("--order", order)->required();
    crit_cmd->add_option("--pi", pi, "Images of the sorted letters, e.g. cab")->required();

    auto* ar_cmd = app.add_subcommand("ar", "Three-letter Arnoux-Rauzy languages");
    ar_cmd->require_subcommand(1);
    auto add_directive = [&](CLI::App* cmd) { cmd->add_option("--directive", directive, "PREFIX:PERIOD")->required(); };
    auto* ar_gen = ar_cmd->add_subcommand("gen", "Standard words at a stage");
    add_directive(ar_gen);
    ar_gen->add_option("--stage", stage)->required();
    ar_gen->add_flag("--lms", lms, "Rename the words by length");
    auto* ar_landmarks = ar_cmd->add_subcommand("landmarks", "Landmark stages");
    add_directive(ar_landmarks);
    auto* ar_bound = ar_cmd->add_subcommand("bound", "Length above which nothing clusters");
    add_directive(ar_bound);
    auto* ar_long = ar_cmd->add_subcommand("longword", "Long perfectly clustering word");
    add_directive(ar_long);
    auto* ar_census = ar_cmd->add_subcommand("census", "Clustering factors up to a length");
    add_directive(ar_census);
    ar_census->add_option("--max", max, "Longest length (default: the bound)");
    auto* ar_member = ar_cmd->add_subcommand("member", "Whether a word is a factor");
    add_directive(ar_member);
    ar_member->add_option("word", word)->required();

    auto* desub_cmd = app.add_subcommand("desub", "Inverse sigma/tau chain down to a letter");
    desub_cmd->add_option("word", word)->required();

    auto* epi_cmd = app.add_subcommand("epi", "Episturmian languages");
    epi_cmd->require_subcommand(1);
    auto* epi_check = epi_cmd->add_subcommand("check", "Finitely or infinitely many clustering words");
    add_directive(epi_check);
    epi_check->add_option("--witnesses", witnesses, "Print this many clustering witnesses");
    auto* epi_bound_cmd = epi_cmd->add_subcommand("bound", "Length above which nothing clusters");
    add_directive(epi_bound_cmd);

    auto* multi_cmd = app.add_subcommand("multi", "Arnoux-Rauzy languages on r letters");
    multi_cmd->require_subcommand(1);
    auto* multi_bound = multi_cmd->add_subcommand("bound", "General and refined bounds");
    add_directive(multi_bound);
    multi_bound->add_option("--letters", letters, "Number of rules r")->check(CLI::Range(3, 26));

    auto* cx_cmd = app.add_subcommand("complexity", "Factor complexity of a directive language");
    add_directive(cx_cmd);
    cx_cmd->add_option("--max", max)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive cross-check");
    verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--max", max, "Size cap (default per suite)");
    verify_cmd->add_option("--letters", verify_letters, "Alphabet of the car suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const Output out{format == "json"};
    try {
        if (*bwt_cmd) {
            const auto w = checked_word(word);
            const auto o = order_for(w, order);
            const auto t = bwt(w, o);
            out.emit({{"word", w}, {"order", o}, {"bwt", t}}, t);
            return kTrue;
        }
        if (*cluster_cmd) {
            const auto w = checked_word(word);
            if (perfect) {
                const auto o = order_for(w, order);
                const bool p = is_perfectly_clustering(w, o);
                out.emit({{"word", w}, {"order", o}, {"perfect", p}}, p ? "true" : "false");
                return p ? kTrue : kFalse;
            }
            const auto certs = order.empty() ? clusters_any(w) : clustering_certificates(w, order_for(w, order));
            std::string text;
            for (const auto& c : certs) text += certificate_text(c) + '\n';
            out.emit({{"word", w}, {"clusters", !certs.empty()}, {"certificates", certs}},
                     certs.empty() ? "does not cluster" : text);
            return certs.empty() ? kFalse : kTrue;
        }
        if (*bisp_cmd) {
            const auto graphs = bispecial_graphs(checked_word(word));
            std::string text;
            for (const auto& g : graphs) {
                text += show(g.center) + " ";
                for (const auto& [x, y] : g.pairs) text += std::string{' ', x, y};
                text += '\n';
            }
            out.emit(graphs, text);
            return kTrue;
        }
        if (*crit_cmd) {
            const auto w = checked_word(word);
            const auto o = order_for(w, order);
            const auto p = LetterPermutation::from_images(OrderedAlphabet::of_word(o.letters()).letters(),
                                                          checked_word(pi, "permutation"));
            const auto report = clustering_by_criterion(w, o, p);
            std::ostringstream text;
            text << (report.verdict ? "clusters" : "does not cluster") << '\n';
            for (const auto& v : report.violations) {
                text << "violation at " << show(v.bispecial) << ": " << v.x << v.y << " and " << v.x_prime
                     << v.y_prime << '\n';
            }
            out.emit(report, text.str());
            return report.verdict ? kTrue : kFalse;
        }
        if (*ar_cmd) {
            const auto d = checked_directive(directive);
            if (*ar_gen) {
                if (lms) {
                    const auto t = lms_rename(d, stage);
                    std::ostringstream text;
                    text << "stage " << t.stage << "\nS " << t.s_letter << ' ' << show(t.s) << "\nM " << t.m_letter
                         << ' ' << show(t.m) << "\nL " << t.l_letter << ' ' << show(t.l) << "\nstep "
                         << to_char(t.step) << '\n';
                    out.emit(t, text.str());
                } else {
                    const auto s = ar_evolve(d, stage);
                    out.emit(s, state_text(s));
                }
                return kTrue;
            }
            if (*ar_landmarks) {
                const auto lm = landmarks(d);
                std::ostringstream text;
                text << "lambda1 " << lm.lambda1 << "\nlambda2 " << lm.lambda2 << "\nlambda_a " << lm.lambda_a
                     << "\nlambda_b " << lm.lambda_b << "\nmu_a " << lm.mu_a << "\nmu_b " << lm.mu_b << "\nx " << lm.x
                     << "\ny " << lm.y << "\nmu " << lm.mu << '\n';
                out.emit(lm, text.str());
                return kTrue;
            }
            if (*ar_bound) {
                const auto b = arc_bound(d);
                out.emit({{"directive", d}, {"bound", b}}, std::to_string(b));
                return kTrue;
            }
            if (*ar_long) {
                const auto w = long_word(d);
                out.emit({{"directive", d}, {"word", w}, {"length", w.size()}}, w);
                return kTrue;
            }
            if (*ar_census) {
                const auto entries = clustering_census(d, max ? max : arc_bound(d));
                std::string text;
                for (const auto& e : entries) text += std::to_string(e.word.size()) + ' ' + e.word + '\n';
                out.emit(entries, text);
                return kTrue;
            }
            if (*ar_member) {
                const bool in = is_ar_factor(checked_word(word), d);
                out.emit({{"word", word}, {"directive", d}, {"member", in}}, in ? "true" : "false");
                return in ? kTrue : kFalse;
            }
        }
        if (*desub_cmd) {
            const auto r = desubstitute(checked_word(word));
            out.emit(r ? json(*r) : json(nullptr), r ? desub_text(*r) : "fails");
            return r ? kTrue : kFalse;
        }
        if (*epi_cmd) {
            const auto d = checked_directive(directive);
            if (*epi_check) {
                json j;
                std::ostringstream text;
                if (d.letters().size() == 3) {
                    const auto r = thepi_check(d);
                    j = r;
                    text << to_string(r.verdict) << '\n';
                    if (r.verdict == ClusteringSupply::InfinitelyMany) {
                        text << "split " << r.split << " tail " << r.tail_letters << '\n';
                    }
                } else {
                    const auto r = multi_thepi_check(d);
                    j = r;
                    text << to_string(r.verdict) << '\n';
                    for (const auto& b : r.chain) {
                        text << b.letters << " from " << b.begin << " to "
                             << (b.end ? std::to_string(*b.end) : std::string("infinity")) << '\n';
                    }
                }
                if (witnesses > 0 && j.at("verdict") == "InfinitelyMany") {
                    if (d.letters().size() != 3) throw InputError("witnesses need a three-letter directive");
                    const auto ws = epi_witnesses(d, witnesses);
                    j["witnesses"] = ws;
                    for (const auto& w : ws) text << "witness " << w.word << '\n';
                }
                out.emit(j, text.str());
                return kTrue;
            }
            if (*epi_bound_cmd) {
                const auto b = epi_bound(d);
                out.emit({{"directive", d}, {"bound", b}}, std::to_string(b));
                return kTrue;
            }
        }
        if (*multi_cmd) {
            const auto d = checked_directive(directive, letters);
            const auto b = multi_arc_bound(d);
            out.emit(b, "general " + std::to_string(b.general) + "\nrefined " + std::to_string(b.refined));
            return kTrue;
        }
        if (*cx_cmd) {
            const DirectiveLanguage lang(checked_directive(directive));
            json values = json::array();
            std::string text;
            for (std::size_t n = 1; n <= max; ++n) {
                const auto p = complexity(lang, n);
                values.push_back(p);
                text += std::to_string(n) + ' ' + std::to_string(p) + '\n';
            }
            out.emit({{"directive", lang.directive()}, {"complexity", values}}, text);
            return kTrue;
        }
        if (*verify_cmd) {
            const auto r = run_suite(suite, {max, checked_word(verify_letters, "letters")});
            std::ostringstream text;
            text << r.suite << " max " << r.max << ": " << r.cases << " cases, " << r.failure_count << " failures\n";
            for (const auto& f : r.failures) text << "  " << f << '\n';
            out.emit(r, text.str());
            return r.passed() ? kTrue : kFalse;
        }
    } catch (const std::exception& e) {
        std::cerr << "bwcluster: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
