#include "bwc/episturmian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "bwc/arnoux_rauzy.hpp"

namespace bwc {

namespace {

void require_epi(const DirectiveWord& d, std::size_t letters) {
    if (d.letters().size() != letters) {
        throw PreconditionError("directive must use exactly " + std::to_string(letters) + " rules");
    }
    if (!d.epi_valid()) throw PreconditionError("every rule must be used at least once");
}

std::size_t last_stage_before(const DirectiveWord& d, Letter z, std::size_t end) {
    for (std::size_t k = end; k-- > 0;) {
        if (d[k] == z) return k;
    }
    throw std::logic_error("rule does not occur before the given stage");
}

// Whether the rules from stage `from` on avoid z.
bool avoids_from(const DirectiveWord& dn, Letter z, std::size_t from) { return !dn.occurs_from(z, from); }

std::string sorted_letters(std::string s) {
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

std::string to_string(ClusteringSupply s) {
    return s == ClusteringSupply::FinitelyMany ? "FinitelyMany" : "InfinitelyMany";
}

EpiResult thepi_check(const DirectiveWord& d) {
    require_epi(d, 3);
    const auto norm = normalize_rabc(d);
    const auto& dn = norm.directive;
    // D' over {a,b} cannot extend past the first (c), and a longer D' only
    // shrinks D'', so the split at lambda2 decides.
    const std::size_t lambda2 = *dn.next_stage('c', 0);
    const auto back = norm.to_normal.inverse();
    EpiResult r;
    for (Letter avoided : {'b', 'a'}) {
        if (!avoids_from(dn, avoided, lambda2)) continue;
        r.verdict = ClusteringSupply::InfinitelyMany;
        r.split = lambda2;
        r.tail_letters = sorted_letters({back(avoided == 'a' ? 'b' : 'a'), back('c')});
        return r;
    }
    return r;
}

bool ebs_check(const DirectiveWord& d, std::size_t p, Letter z) {
    if (d.letters().find(z) == std::string::npos) throw std::invalid_argument(std::string("unknown rule '") + z + "'");
    return d.occurs_from(z, p);
}

std::size_t epi_bound(const DirectiveWord& d) {
    if (thepi_check(d).verdict == ClusteringSupply::InfinitelyMany) {
        throw PreconditionError("no finite bound applies");
    }
    const auto dn = normalize_rabc(d).directive;
    const std::size_t lambda2 = *dn.next_stage('c', 0);
    // FinitelyMany: both (a) and (b) recur after the first (c).
    const std::size_t mu_a = *dn.next_stage('a', lambda2 + 1);
    const std::size_t mu_b = *dn.next_stage('b', lambda2 + 1);
    const std::size_t mu_y = std::max(mu_a, mu_b);
    const auto s = ar_evolve(dn, mu_y + 1);
    std::size_t longest = 0;
    for (Letter z : Word("abc")) {
        if (ebs_check(dn, mu_y + 1, z)) longest = std::max(longest, s.word(z).size());
    }
    return ar_evolve(dn, lambda2).bispecial.size() + longest + 1;
}

std::vector<EpiWitness> epi_witnesses(const DirectiveWord& d, std::size_t count) {
    if (thepi_check(d).verdict == ClusteringSupply::FinitelyMany) {
        throw PreconditionError("the language has finitely many clustering words");
    }
    const auto norm = normalize_rabc(d);
    const auto& dn = norm.directive;
    const auto back = norm.to_normal.inverse();
    const DirectiveLanguage lang(dn);
    const std::size_t lambda2 = *dn.next_stage('c', 0);

    std::vector<EpiWitness> out;
    const std::set<Letter> recurring(dn.period().begin(), dn.period().end());
    if (recurring.size() == 1) {
        // A single recurring rule z freezes Z from its last change on.
        const Letter z = *recurring.begin();
        const std::size_t p = std::max(lambda2, dn.prefix().size());
        const Word root = ar_evolve(dn, p).word(z);
        for (std::size_t n = 1; n <= count; ++n) out.push_back({back.apply(power(root, n)), p, back(z), n});
        return out;
    }

    ARState s = ar_evolve(dn, lambda2);
    std::size_t last_length = 0;
    for (std::size_t p = lambda2; out.size() < count; ++p) {
        std::vector<std::pair<std::size_t, Letter>> found;
        for (Letter z : Word("abc")) {
            if (!ebs_check(dn, p, z)) continue;
            const Word& zp = s.word(z);
            if (zp.size() > last_length && is_primitive(zp) && lang.contains(zp + zp)) {
                found.emplace_back(zp.size(), z);
            }
        }
        std::sort(found.begin(), found.end());
        for (const auto& [len, z] : found) {
            if (len <= last_length || out.size() == count) continue;
            out.push_back({back.apply(s.word(z)), p, back(z), 1});
            last_length = len;
        }
        ar_step(s, dn[p]);
    }
    return out;
}

ARState sturmian_words(const DirectiveWord& d, std::size_t k) {
    if (d.letters() != "ab") throw PreconditionError("directive must use the two rules a and b");
    if (!d.ar_valid()) throw PreconditionError("both rules must occur in the period");
    return ar_evolve(d, k);
}

bool tstu_check(std::string_view v) {
    if (v.empty() || !OrderedAlphabet("ab").contains_all(v)) {
        throw PreconditionError("expected a nonempty word over {a,b}");
    }
    return desubstitute(primitive_root(v).root).has_value();
}

ARState multi_ar_evolve(const DirectiveWord& d, std::size_t k) {
    if (d.letters().size() < 2) throw PreconditionError("at least two rules are required");
    if (!d.ar_valid()) throw PreconditionError("every rule must occur in the period");
    return ar_evolve(d, k);
}

MultiLandmarks multi_landmarks(const DirectiveWord& d) {
    if (d.letters().size() < 3) throw PreconditionError("at least three rules are required");
    if (!d.ar_valid()) throw PreconditionError("every rule must occur in the period");
    const auto norm = normalize_rabc(d);
    const auto& dn = norm.directive;
    MultiLandmarks lm;
    lm.lambda1 = *dn.next_stage('b', 0);
    lm.lambda2 = *dn.next_stage('c', 0);
    lm.lambda_a = last_stage_before(dn, 'a', lm.lambda2);
    lm.lambda_b = last_stage_before(dn, 'b', lm.lambda2);
    lm.mu_a = *dn.next_stage('a', lm.lambda2 + 1);
    lm.mu_b = *dn.next_stage('b', lm.lambda2 + 1);
    lm.x = lm.mu_a < lm.mu_b ? 'a' : 'b';
    lm.y = lm.mu_a < lm.mu_b ? 'b' : 'a';
    lm.normalization = norm.to_normal;
    return lm;
}

MultiBound multi_arc_bound(const DirectiveWord& d) {
    const auto lm = multi_landmarks(d);
    const auto dn = d.relabel(lm.normalization);
    const auto s = ar_evolve(dn, lm.mu_y() + 1);
    std::size_t longest = 0;
    for (const auto& z : s.words) longest = std::max(longest, z.size());
    return {ar_evolve(dn, lm.lambda2).bispecial.size() + longest + 1,
            ar_evolve(dn, lm.lambda_y()).bispecial.size() + longest + 1};
}

MultiEpiResult multi_thepi_check(const DirectiveWord& d) {
    const std::string& letters = d.letters();
    const std::size_t r = letters.size();
    require_epi(d, r);
    if (r > 16) throw PreconditionError("at most 16 rules are supported");

    Word f = d.prefix();
    for (std::size_t i = 0; i <= r; ++i) f += d.period();
    const std::size_t n = f.size();

    // State: (letters used by the blocks so far, current block pair).
    using Mask = unsigned;
    using State = std::pair<Mask, Mask>;
    auto bit = [&](Letter x) { return Mask{1} << letters.find(x); };
    // (position, state) -> predecessor; a block switch stays at the same
    // position, a read moves one position on.
    std::map<std::pair<std::size_t, State>, std::pair<std::size_t, State>> parent;
    std::vector<std::set<State>> at(n + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const Mask pair = (Mask{1} << i) | (Mask{1} << j);
            at[0].insert({pair, pair});
        }
    }
    for (std::size_t pos = 0; pos <= n; ++pos) {
        // Block switches: S' = {new letter, one letter of S}.
        std::vector<State> work(at[pos].begin(), at[pos].end());
        while (!work.empty()) {
            const State st = work.back();
            work.pop_back();
            const auto [used, pair] = st;
            for (std::size_t keep = 0; keep < r; ++keep) {
                if (!(pair >> keep & 1)) continue;
                for (std::size_t fresh = 0; fresh < r; ++fresh) {
                    if (used >> fresh & 1) continue;
                    const State next{used | (Mask{1} << fresh), (Mask{1} << keep) | (Mask{1} << fresh)};
                    if (at[pos].insert(next).second) {
                        parent.emplace(std::pair{pos, next}, std::pair{pos, st});
                        work.push_back(next);
                    }
                }
            }
        }
        if (pos == n) break;
        for (const State& st : at[pos]) {
            if (!(st.second & bit(f[pos]))) continue;
            if (at[pos + 1].insert(st).second) parent.emplace(std::pair{pos + 1, st}, std::pair{pos, st});
        }
    }

    Mask period_mask = 0;
    for (Letter x : d.period()) period_mask |= bit(x);
    const Mask all = (Mask{1} << r) - 1;
    MultiEpiResult result;
    for (const State& st : at[n]) {
        if (st.first != all || (period_mask & ~st.second) != 0) continue;
        result.verdict = ClusteringSupply::InfinitelyMany;
        // Walk back, recording where each block starts.
        std::vector<std::pair<std::size_t, Mask>> starts;
        std::size_t pos = n;
        State cur = st;
        while (true) {
            const auto it = parent.find({pos, cur});
            if (it == parent.end()) {
                starts.emplace_back(pos, cur.second);
                break;
            }
            const auto [ppos, prev] = it->second;
            if (ppos == pos) starts.emplace_back(pos, cur.second);
            pos = ppos;
            cur = prev;
        }
        std::reverse(starts.begin(), starts.end());
        for (std::size_t i = 0; i < starts.size(); ++i) {
            ChainBlock b;
            for (std::size_t j = 0; j < r; ++j) {
                if (starts[i].second >> j & 1) b.letters += letters[j];
            }
            b.begin = starts[i].first;
            if (i + 1 < starts.size()) b.end = starts[i + 1].first;
            result.chain.push_back(std::move(b));
        }
        return result;
    }
    return result;
}

}  // namespace bwc
