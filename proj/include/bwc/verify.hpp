#ifndef BWC_VERIFY_HPP
#define BWC_VERIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bwc {

// Exhaustive cross-checks between independent computations, runnable at a
// chosen size cap.
//   car         criterion verdict vs. transform, every primitive word over
//               `letters` of length <= max, every order, every pi != Id
//   rel         length/suffix relations of the standard words, directive
//               prefixes of length <= max, stages <= 12
//   sq          squares in the language vs. the standard-word list, |v| <= max;
//               de-substitution vs. AR-ness of vv
//   list-clist  landmark thresholds vs. subsequence criterion vs. transform,
//               directive prefixes of length <= max
//   rev         reversal-closed languages: clustering, perfect clustering and
//               conjugate splits agree; reversal duality of certificates
//   thepi       split decision vs. literal search vs. chain condition;
//               bounds and witnesses checked by the transform
struct SuiteOptions {
    std::size_t max = 0;  // 0 selects the suite default
    std::string letters = "abc";
};

struct SuiteReport {
    std::string suite;
    std::size_t max = 0;
    std::string letters;
    std::size_t cases = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;  // the first few, described

    bool passed() const noexcept { return failure_count == 0; }

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

const std::vector<std::string>& suite_names();

std::size_t default_suite_max(std::string_view suite);

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view suite, const SuiteOptions& options = {});

}  // namespace bwc

#endif  // BWC_VERIFY_HPP
