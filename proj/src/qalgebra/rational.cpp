#include "sepvar/rational.hpp"

#include <ostream>

namespace sepvar {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
    if (value_.get_den() == 0) throw DivisionByZero();
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    mpz_class num;
    mpz_class den = 1;
    try {
        if (slash == std::string::npos) {
            if (num.set_str(s, 10) != 0) throw ParseError("invalid rational '" + s + "'");
        } else {
            if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
                throw ParseError("invalid rational '" + s + "'");
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational '" + s + "'");
    }
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned e) const {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw InternalError("unknown arithmetic op");
}

mpz_class factorial(unsigned k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

mpz_class binomial(long top, long k) {
    if (k < 0) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), mpz_class(top).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace sepvar
