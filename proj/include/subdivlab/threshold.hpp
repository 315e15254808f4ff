#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace subdiv {

// Per-length admissible-count cutoffs f(1..max_len) used by the path
// classifier. Three builders:
//   paper:      f(l) = L^(5^l), integer L >= 2
//   pigeonhole: minimal f with f(1) = 1 and
//               f(l) >= (l-1)^2 * L * f(i) * f(l-i) for all 1 <= i <= l-1
//   custom:     caller-supplied positive values
class ThresholdFamily {
public:
    enum class Kind { paper, pigeonhole_minimal, custom };

    static ThresholdFamily paper(const mpz_class& L, int max_len);
    static ThresholdFamily pigeonhole_minimal(const mpq_class& L, int max_len);
    static ThresholdFamily custom(const mpq_class& L, std::vector<mpz_class> values);

    Kind kind() const { return kind_; }
    const mpq_class& L() const { return L_; }
    int max_len() const { return static_cast<int>(values_.size()); }
    const mpz_class& f(int len) const;  // 1-based, len in [1, max_len]

    // True iff f(1) >= 1 and the recursion inequality above holds for every
    // l in [2, max_len].
    bool satisfies_pigeonhole() const;

    std::string kind_name() const;

private:
    ThresholdFamily(Kind kind, mpq_class L, std::vector<mpz_class> values);

    Kind kind_;
    mpq_class L_;
    std::vector<mpz_class> values_;  // values_[l-1] = f(l)
};

}  // namespace subdiv
