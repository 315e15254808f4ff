#include "subdivlab/numeric.hpp"

#include <cstdlib>
#include <stdexcept>

namespace subdiv {

mpz_class pow_integer(const mpz_class& base, unsigned long exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

mpq_class pow_rational(const mpq_class& base, long exp) {
    if (exp == 0) return mpq_class(1);
    if (base == 0 && exp < 0) throw std::domain_error("pow_rational: 0 to a negative power");
    unsigned long mag = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_class num = pow_integer(base.get_num(), mag);
    mpz_class den = pow_integer(base.get_den(), mag);
    mpq_class out = exp > 0 ? mpq_class(num, den) : mpq_class(den, num);
    out.canonicalize();
    return out;
}

bool leq_half_power(const mpz_class& count, const mpq_class& delta, long half_exp) {
    if (count < 0) throw std::domain_error("leq_half_power: negative count");
    if (delta < 0) throw std::domain_error("leq_half_power: negative delta");
    if (count == 0) {
        // threshold is >= 0 always, except 0^negative which we treat as infinite
        return true;
    }
    if (delta == 0) return half_exp < 0;  // 0^positive = 0 < count; 0^negative -> infinite
    // count <= delta^(half_exp/2)  <=>  count^2 <= delta^half_exp  (both sides > 0)
    return mpq_class(count * count) <= pow_rational(delta, half_exp);
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    mpq_class q(num, pow_integer(10, static_cast<unsigned long>(frac_len)));
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    mpq_class canon = q;
    canon.canonicalize();
    if (canon.get_den() == 1) return canon.get_num().get_str();
    return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

std::string rational_to_decimal(const mpq_class& q, int digits) {
    if (digits < 0) throw std::invalid_argument("rational_to_decimal: negative digits");
    bool negative = q < 0;
    mpq_class a = negative ? mpq_class(-q) : q;
    mpz_class scale = pow_integer(10, static_cast<unsigned long>(digits));
    // round(|q| * 10^digits), half away from zero
    mpz_class num = a.get_num() * scale;
    mpz_class den = a.get_den();
    mpz_class quotient, remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (remainder * 2 >= den) quotient += 1;
    std::string body = quotient.get_str();
    if (digits > 0) {
        if (static_cast<int>(body.size()) <= digits)
            body.insert(0, static_cast<size_t>(digits) - body.size() + 1, '0');
        body.insert(body.size() - static_cast<size_t>(digits), ".");
    }
    return negative && quotient != 0 ? "-" + body : body;
}

}  // namespace subdiv
