#include "subdivlab/threshold.hpp"

#include <stdexcept>

#include "subdivlab/numeric.hpp"

namespace subdiv {

ThresholdFamily::ThresholdFamily(Kind kind, mpq_class L, std::vector<mpz_class> values)
    : kind_(kind), L_(std::move(L)), values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("ThresholdFamily: max_len must be >= 1");
    if (values_[0] < 1) throw std::invalid_argument("ThresholdFamily: f(1) must be >= 1");
    for (const auto& v : values_)
        if (v < 1) throw std::invalid_argument("ThresholdFamily: all f values must be >= 1");
}

ThresholdFamily ThresholdFamily::paper(const mpz_class& L, int max_len) {
    if (L < 2) throw std::invalid_argument("paper family requires integer L >= 2");
    std::vector<mpz_class> values;
    values.reserve(max_len);
    unsigned long five_pow = 1;
    for (int len = 1; len <= max_len; ++len) {
        five_pow *= 5;
        values.push_back(pow_integer(L, five_pow));
    }
    return ThresholdFamily(Kind::paper, mpq_class(L), std::move(values));
}

ThresholdFamily ThresholdFamily::pigeonhole_minimal(const mpq_class& L, int max_len) {
    if (L <= 1) throw std::invalid_argument("pigeonhole family requires L > 1");
    std::vector<mpz_class> values{mpz_class(1)};
    for (int len = 2; len <= max_len; ++len) {
        mpq_class best = 0;
        for (int i = 1; i <= len - 1; ++i) {
            mpq_class cand = mpq_class((len - 1) * (len - 1)) * L *
                             mpq_class(values[i - 1] * values[len - i - 1]);
            if (cand > best) best = cand;
        }
        mpz_class f;
        mpz_cdiv_q(f.get_mpz_t(), best.get_num().get_mpz_t(), best.get_den().get_mpz_t());
        values.push_back(f);
    }
    return ThresholdFamily(Kind::pigeonhole_minimal, L, std::move(values));
}

ThresholdFamily ThresholdFamily::custom(const mpq_class& L, std::vector<mpz_class> values) {
    return ThresholdFamily(Kind::custom, L, std::move(values));
}

const mpz_class& ThresholdFamily::f(int len) const {
    if (len < 1 || len > max_len())
        throw std::out_of_range("ThresholdFamily::f: length " + std::to_string(len) +
                                " outside [1," + std::to_string(max_len()) + "]");
    return values_[len - 1];
}

bool ThresholdFamily::satisfies_pigeonhole() const {
    if (values_[0] < 1) return false;
    for (int len = 2; len <= max_len(); ++len)
        for (int i = 1; i <= len - 1; ++i) {
            mpq_class needed = mpq_class((len - 1) * (len - 1)) * L_ *
                               mpq_class(values_[i - 1] * values_[len - i - 1]);
            if (mpq_class(values_[len - 1]) < needed) return false;
        }
    return true;
}

std::string ThresholdFamily::kind_name() const {
    switch (kind_) {
        case Kind::paper: return "paper";
        case Kind::pigeonhole_minimal: return "pigeonhole-minimal";
        case Kind::custom: return "custom";
    }
    return "?";
}

}  // namespace subdiv
