#include "bwc/arnoux_rauzy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace bwc {

namespace {

void require_three_letter_ar(const DirectiveWord& d) {
    if (d.letters().size() != 3) throw PreconditionError("directive must use exactly three rules");
    if (!d.ar_valid()) throw PreconditionError("every rule must occur in the period");
}

std::size_t last_stage_before(const DirectiveWord& d, Letter z, std::size_t end) {
    for (std::size_t k = end; k-- > 0;) {
        if (d[k] == z) return k;
    }
    throw std::logic_error("rule does not occur before the given stage");
}

// Landmarks on an already normalized three-letter AR directive word.
Landmarks normalized_landmarks(const DirectiveWord& dn) {
    Landmarks lm;
    lm.lambda1 = *dn.next_stage('b', 0);
    lm.lambda2 = *dn.next_stage('c', 0);
    lm.lambda_a = last_stage_before(dn, 'a', lm.lambda2);
    lm.lambda_b = last_stage_before(dn, 'b', lm.lambda2);
    lm.mu_a = *dn.next_stage('a', lm.lambda2 + 1);
    lm.mu_b = *dn.next_stage('b', lm.lambda2 + 1);
    lm.x = lm.mu_a < lm.mu_b ? 'a' : 'b';
    lm.y = lm.mu_a < lm.mu_b ? 'b' : 'a';
    const std::size_t mu_y = std::max(lm.mu_a, lm.mu_b);
    const Letter z = dn[mu_y - 1];
    lm.mu = mu_y - 1;
    while (lm.mu > 0 && dn[lm.mu - 1] == z) --lm.mu;
    return lm;
}

struct Prepared {
    Normalization norm;
    Landmarks lm;  // normalized letters
};

Prepared prepare(const DirectiveWord& d) {
    require_three_letter_ar(d);
    auto norm = normalize_rabc(d);
    auto lm = normalized_landmarks(norm.directive);
    return {std::move(norm), lm};
}

// Words of a normalized state sorted into S, M, L per the stage conventions.
LMSTriple lms_of(const ARState& s, std::size_t lambda1, Letter rule) {
    std::string roles;  // letters in S, M, L order
    if (s.stage == 0) {
        roles = "cba";
    } else if (s.stage <= lambda1) {
        roles = "acb";
    } else {
        roles = "abc";
        std::sort(roles.begin(), roles.end(),
                  [&](Letter p, Letter q) { return s.word(p).size() < s.word(q).size(); });
    }
    LMSTriple t;
    t.stage = s.stage;
    t.s_letter = roles[0];
    t.m_letter = roles[1];
    t.l_letter = roles[2];
    t.s = s.word(roles[0]);
    t.m = s.word(roles[1]);
    t.l = s.word(roles[2]);
    t.step = rule == roles[0] ? LmsRole::S : rule == roles[1] ? LmsRole::M : LmsRole::L;
    return t;
}

}  // namespace

Normalization normalize_rabc(const DirectiveWord& d) {
    std::string order;  // original letters in their normalized order
    for (std::size_t k = 0; order.size() < 3 && k < d.prefix().size() + d.period().size(); ++k) {
        if (order.find(d[k]) == std::string::npos) order += d[k];
    }
    for (Letter x : d.letters()) {
        if (order.find(x) == std::string::npos) order += x;
    }
    std::vector<std::pair<Letter, Letter>> pairs;
    for (std::size_t i = 0; i < order.size(); ++i) pairs.emplace_back(order[i], d.letters()[i]);
    auto pi = LetterPermutation::from_pairs(pairs);
    return {d.relabel(pi), std::move(pi)};
}

char to_char(LmsRole role) {
    switch (role) {
        case LmsRole::S: return 'S';
        case LmsRole::M: return 'M';
        case LmsRole::L: return 'L';
    }
    return '?';
}

LMSTriple lms_rename(const DirectiveWord& d, std::size_t k) {
    const auto [norm, lm] = prepare(d);
    const auto s = ar_evolve(norm.directive, k);
    LMSTriple t = lms_of(s, lm.lambda1, norm.directive[k]);
    const auto back = norm.to_normal.inverse();
    t.s = back.apply(t.s);
    t.m = back.apply(t.m);
    t.l = back.apply(t.l);
    t.s_letter = back(t.s_letter);
    t.m_letter = back(t.m_letter);
    t.l_letter = back(t.l_letter);
    return t;
}

Landmarks landmarks(const DirectiveWord& d) {
    auto [norm, lm] = prepare(d);
    const auto back = norm.to_normal.inverse();
    lm.x = back(lm.x);
    lm.y = back(lm.y);
    lm.normalization = norm.to_normal;
    return lm;
}

std::size_t arc_bound(const DirectiveWord& d) {
    const auto [norm, lm] = prepare(d);
    const std::size_t mu_y = lm.mu_y();
    const std::size_t w_len = ar_evolve(norm.directive, lm.lambda_y()).bispecial.size();
    const auto s = ar_evolve(norm.directive, mu_y + 1);
    return w_len + std::max(s.word('c').size(), s.word(lm.x).size()) + 1;
}

bool standard_clusters(const DirectiveWord& d, Letter z, std::size_t p) {
    const auto [norm, lm] = prepare(d);
    const Letter zn = norm.to_normal(z);
    return zn == lm.y ? p <= lm.mu_x() : p <= lm.mu_y();
}

ClistResult clist_criterion(const DirectiveWord& d, Letter z, std::size_t p) {
    if (d.letters().size() != 3) throw PreconditionError("directive must use exactly three rules");
    const Word word = d.head(p) + z;
    const std::string& letters = d.letters();
    ClistResult r;
    std::set<std::string> orders;
    for (Letter zp : letters) {
        std::string others;
        for (Letter x : letters) {
            if (x != zp) others += x;
        }
        const std::string p1{zp, others[0], others[1]};
        const std::string p2{zp, others[1], others[0]};
        if (has_subsequence(word, p1) || has_subsequence(word, p2)) continue;
        r.middle_letters += zp;
        orders.insert({others[0], zp, others[1]});
        orders.insert({others[1], zp, others[0]});
    }
    r.clusters = !r.middle_letters.empty();
    for (const auto& o : orders) r.perfect_orders.emplace_back(o);
    return r;
}

Word long_word(const DirectiveWord& d) {
    const auto [norm, lm] = prepare(d);
    const std::size_t mu_y = lm.mu_y();
    const auto s = ar_evolve(norm.directive, mu_y);
    const auto t = lms_of(s, lm.lambda1, norm.directive[mu_y]);
    return norm.to_normal.inverse().apply(power(t.s, mu_y - lm.mu + 1) + t.m);
}

bool caro_obstructed(std::string_view w, const DirectiveWord& d) {
    const auto [norm, lm] = prepare(d);
    if (!is_ar_factor(w, d)) throw PreconditionError("word is not in the language");
    const Word center = ar_evolve(norm.directive, lm.lambda2).bispecial;
    const auto back = norm.to_normal.inverse();
    const CircularLanguage circ{Word(w)};
    std::size_t found = 0;
    for (const auto& [x, y] : {std::pair{'c', 'a'}, {'c', 'b'}, {'b', 'c'}, {'a', 'c'}}) {
        if (circ.contains(back.apply(x + center + y))) ++found;
    }
    return found >= 3;
}

namespace {

std::optional<Word> inverse_step(const Word& u, const Morphism& m) {
    const Letter x = m.letter;
    Word out;
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m.kind == MorphismKind::Sigma) {
            out += u[i];
            if (u[i] == x) continue;
            if (i + 1 >= n || u[i + 1] != x) return std::nullopt;
            ++i;
        } else {
            if (u[i] != x) return std::nullopt;
            if (i + 1 < n && u[i + 1] != x) {
                out += u[i + 1];
                ++i;
            } else {
                out += x;
            }
        }
    }
    if (out.size() == u.size()) return std::nullopt;
    return out;
}

}  // namespace

std::optional<Desubstitution> desubstitute(std::string_view w) {
    if (w.empty()) return std::nullopt;
    const Word start(w);
    std::map<Word, std::pair<Word, Morphism>> parent;
    std::deque<Word> queue{start};
    std::set<Word> seen{start};
    while (!queue.empty()) {
        const Word u = queue.front();
        queue.pop_front();
        if (u.size() == 1) {
            Desubstitution out{{}, u[0]};
            for (Word cur = u; cur != start;) {
                const auto& [prev, m] = parent.at(cur);
                out.chain.push_back(m);
                cur = prev;
            }
            std::reverse(out.chain.begin(), out.chain.end());
            return out;
        }
        const auto letters = OrderedAlphabet::of_word(u).letters();
        for (auto kind : {MorphismKind::Tau, MorphismKind::Sigma}) {
            for (Letter x : letters) {
                const Morphism m{kind, x};
                auto v = inverse_step(u, m);
                if (!v || !seen.insert(*v).second) continue;
                parent.emplace(*v, std::pair{u, m});
                queue.push_back(std::move(*v));
            }
        }
    }
    return std::nullopt;
}

bool is_conjugate_to_standard(std::string_view v) {
    if (!is_primitive(v)) throw PreconditionError("word is not primitive; pass its primitive root");
    return desubstitute(v).has_value();
}

namespace {

// Depth-first search over rule prefixes. Once |w_k| + 1 >= |w|, membership
// is decided by the words w_k.Z_k; before that, the factors of w of length
// |w_k| + 1 must already be factors of these words.
bool ar_word_search(const ARState& s, std::string_view w) {
    std::vector<Word> covers;
    for (const auto& z : s.words) covers.push_back(s.bispecial + z);
    auto covered = [&](std::string_view f) {
        return std::any_of(covers.begin(), covers.end(),
                           [&](const Word& c) { return c.find(f) != Word::npos; });
    };
    const std::size_t m = s.bispecial.size() + 1;
    if (m >= w.size()) return covered(w);
    for (std::size_t i = 0; i + m <= w.size(); ++i) {
        if (!covered(w.substr(i, m))) return false;
    }
    for (Letter z : s.letters) {
        ARState next = s;
        ar_step(next, z);
        if (ar_word_search(next, w)) return true;
    }
    return false;
}

}  // namespace

bool is_ar_word(std::string_view w) {
    if (!OrderedAlphabet("abc").contains_all(w)) return false;
    return ar_word_search(ar_initial("abc"), w);
}

Word psi_insert(std::string_view u) {
    Word out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        out += u[i];
        if (u[i] == 'a' && i + 1 < u.size() && (u[i + 1] == 'a' || u[i + 1] == 'b')) out += 'b';
    }
    return out;
}

Word ptb1_construct(std::string_view v) {
    if (!OrderedAlphabet("ac").contains_all(v)) throw std::invalid_argument("v must be a word over {a,c}");
    if (v.find('a') == std::string_view::npos || v.find('c') == std::string_view::npos) {
        throw std::invalid_argument("v must contain both a and c");
    }
    const auto swap = LetterPermutation::from_images("abc", "cba");
    const bool swapped = v.front() == 'c';
    const Word base = swapped ? swap.apply(v) : Word(v);
    Word w = "b" + psi_insert(tau_image(base, "b"));
    w.pop_back();
    return swapped ? swap.apply(w) : w;
}

Word ptb2_construct(std::string_view u, std::string_view w) {
    if (!OrderedAlphabet("ac").contains_all(u)) throw std::invalid_argument("u must be a word over {a,c}");
    return tau_image(u, w);
}

std::vector<CensusEntry> clustering_census(const DirectiveWord& d, std::size_t max_len) {
    const DirectiveLanguage lang(d);
    const OrderedAlphabet alphabet(d.letters());
    std::vector<CensusEntry> out;
    for (std::size_t n = 1; n <= max_len; ++n) {
        for (auto& f : lang.factors(n)) {
            auto certs = clusters_any(f, alphabet);
            if (!certs.empty()) out.push_back({std::move(f), std::move(certs)});
        }
    }
    return out;
}

}  // namespace bwc
