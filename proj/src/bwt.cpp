#include "bwc/bwt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bwc {

namespace {

void require_letters(std::string_view w, const OrderedAlphabet& order) {
    if (w.empty()) throw std::invalid_argument("empty input");
    for (Letter x : w) (void)order.rank(x);
}

// Letter sequences (pi a_1, ..., pi a_r) whose restriction to the letters
// present in w equals `runs`. Absent letters may sit anywhere.
void interleave(const std::string& runs, const std::string& absent, std::string& current,
                std::size_t next_run, std::vector<bool>& used, std::vector<std::string>& out) {
    const std::size_t total = runs.size() + absent.size();
    if (current.size() == total) {
        out.push_back(current);
        return;
    }
    if (next_run < runs.size()) {
        current.push_back(runs[next_run]);
        interleave(runs, absent, current, next_run + 1, used, out);
        current.pop_back();
    }
    for (std::size_t i = 0; i < absent.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        current.push_back(absent[i]);
        interleave(runs, absent, current, next_run, used, out);
        current.pop_back();
        used[i] = false;
    }
}

}  // namespace

Word bwt(std::string_view w, const OrderedAlphabet& order) {
    require_letters(w, order);
    const std::size_t n = w.size();
    std::vector<std::size_t> ranked(n);
    for (std::size_t i = 0; i < n; ++i) ranked[i] = order.rank(w[i]);

    std::vector<std::size_t> starts(n);
    std::iota(starts.begin(), starts.end(), std::size_t{0});
    // Equal rotations (non-primitive w) compare equal; their last letters
    // coincide, so the tie order does not matter.
    std::sort(starts.begin(), starts.end(), [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto a = ranked[(i + k) % n];
            const auto b = ranked[(j + k) % n];
            if (a != b) return a < b;
        }
        return false;
    });

    Word out;
    out.reserve(n);
    for (std::size_t s : starts) out += w[(s + n - 1) % n];
    return out;
}

std::vector<ClusteringCertificate> clustering_certificates(std::string_view w,
                                                           const OrderedAlphabet& order,
                                                           ClusterOptions options) {
    const Word transform = bwt(w, order);

    std::string runs;
    for (std::size_t i = 0; i < transform.size(); ++i) {
        if (i == 0 || transform[i] != transform[i - 1]) runs += transform[i];
    }
    {
        std::string sorted = runs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
    }

    std::string absent;
    for (Letter x : order.letters()) {
        if (runs.find(x) == std::string::npos) absent += x;
    }

    std::vector<std::string> sequences;
    std::string current;
    std::vector<bool> used(absent.size(), false);
    interleave(runs, absent, current, 0, used, sequences);
    std::sort(sequences.begin(), sequences.end());

    std::vector<ClusteringCertificate> out;
    for (const auto& seq : sequences) {
        std::vector<std::pair<Letter, Letter>> pairs;
        std::vector<std::pair<Letter, std::size_t>> decomposition;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            pairs.emplace_back(order.at(i), seq[i]);
            decomposition.emplace_back(
                seq[i], static_cast<std::size_t>(std::count(w.begin(), w.end(), seq[i])));
        }
        auto pi = LetterPermutation::from_pairs(pairs);
        if (pi.is_identity() && !options.allow_identity) continue;
        out.push_back({order, std::move(pi), transform, std::move(decomposition)});
    }
    return out;
}

bool is_perfectly_clustering(std::string_view w, const OrderedAlphabet& order, PerfectOptions options) {
    require_letters(w, order);
    OrderedAlphabet effective = order;
    if (options.restrict_to_present) {
        std::string present;
        for (Letter x : order.letters()) {
            if (w.find(x) != std::string_view::npos) present += x;
        }
        effective = OrderedAlphabet(present);
    }
    const auto symmetric = LetterPermutation::symmetric(effective);
    if (symmetric.is_identity()) return false;
    for (const auto& cert : clustering_certificates(w, effective)) {
        if (cert.permutation == symmetric) return true;
    }
    return false;
}

std::vector<ClusteringCertificate> clusters_any(std::string_view w, const OrderedAlphabet& alphabet,
                                                ClusterOptions options) {
    std::vector<ClusteringCertificate> out;
    for (const auto& order : alphabet.all_orders()) {
        auto certs = clustering_certificates(w, order, options);
        std::move(certs.begin(), certs.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<ClusteringCertificate> clusters_any(std::string_view w, ClusterOptions options) {
    return clusters_any(w, OrderedAlphabet::of_word(w), options);
}

OrderedAlphabet pi_order(const OrderedAlphabet& order, const LetterPermutation& pi) {
    std::string seq;
    for (Letter x : order.letters()) seq += pi(x);
    return OrderedAlphabet(seq);
}

}  // namespace bwc
