#include "sepvar/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace sepvar {
namespace {

// Merge of two strictly decreasing term lists: a + sign * b.
std::vector<Term> merge_terms(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const int c = ring.compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
            ++j;
        } else {
            Rational s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
    return out;
}

}  // namespace

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(*a.ring(), *b.ring()))
        throw RingMismatch("ring mismatch: [" + a.ring()->describe() + "] vs [" + b.ring()->describe() + "]");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
    const std::size_t i = ring->index(name);
    return variable(std::move(ring), i);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw PreconditionError("variable index out of range");
    return monomial(std::move(ring), Monomial::variable(index));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const Ring& r = *p.ring_;
    std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return terms_.front();
}

unsigned Polynomial::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
    return d;
}

std::uint32_t Polynomial::support() const noexcept {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.mono.support();
    return s;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(*this, o);
    terms_ = merge_terms(*ring_, terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ring(*this, o);
    terms_ = merge_terms(*ring_, terms_, o.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.size() == 1) return a.scaled(b.terms_[0].coeff, b.terms_[0].mono);
    if (a.size() == 1) return b.scaled(a.terms_[0].coeff, a.terms_[0].mono);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c, Monomial{}); }

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(*a.ring_, *b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse(), Monomial{});
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order of terms.
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
    if (same_ring(*ring_, *target)) {
        Polynomial p = *this;
        p.ring_ = target;
        return p;
    }
    std::vector<std::size_t> map(ring_->size(), 0);
    const std::uint32_t used = support();
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        if (used >> i & 1u) map[i] = target->index(ring_->name(i));
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < ring_->size(); ++i)
            if (t.mono.exponent(i)) m.set_exponent(map[i], t.mono.exponent(i));
        terms.push_back({m, t.coeff});
    }
    return from_terms(target, std::move(terms));
}

std::string format_monomial(const Monomial& m, const Ring& ring) {
    std::string s;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const unsigned e = m.exponent(i);
        if (!e) continue;
        if (!s.empty()) s += '*';
        s += ring.name(i);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff.sign() < 0;
        if (first) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        const Rational mag = t.coeff.abs();
        const std::string mono = format_monomial(t.mono, *ring_);
        if (mono.empty()) {
            s += mag.to_string();
        } else {
            if (!mag.is_one()) s += mag.to_string() + '*';
            s += mono;
        }
        first = false;
    }
    return s;
}

Polynomial differentiate(const Polynomial& f, std::string_view var) { return differentiate(f, f.ring()->index(var)); }

Polynomial differentiate(const Polynomial& f, std::size_t var) {
    if (var >= f.ring()->size()) throw PreconditionError("differentiate: variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        const unsigned e = t.mono.exponent(var);
        if (!e) continue;
        Monomial m = t.mono;
        m.set_exponent(var, e - 1);
        terms.push_back({m, t.coeff * Rational(static_cast<long>(e))});
    }
    return Polynomial::from_terms(f.ring(), std::move(terms));
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
    if (point.size() != f.ring()->size())
        throw PreconditionError("evaluate: point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                std::to_string(f.ring()->size()) + " variables");
    Rational sum;
    for (const auto& t : f.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size() && !v.is_zero(); ++i)
            if (const unsigned e = t.mono.exponent(i)) v *= point[i].pow(e);
        sum += v;
    }
    return sum;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings, const RingPtr& target) {
    const Ring& src = *f.ring();
    for (const auto& [name, value] : bindings) {
        if (!src.contains(name)) throw PreconditionError("substitute: unknown variable '" + name + "'");
        if (!same_ring(*value.ring(), *target)) throw RingMismatch("substitute: binding for '" + name + "' is not in the target ring");
    }
    std::vector<Polynomial> images;
    images.reserve(src.size());
    const std::uint32_t used = f.support();
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (auto it = bindings.find(src.name(i)); it != bindings.end()) {
            images.push_back(it->second);
        } else if (used >> i & 1u) {
            images.push_back(Polynomial::variable(target, src.name(i)));
        } else {
            images.push_back(Polynomial(target));
        }
    }
    Polynomial result(target);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < src.size(); ++i)
            if (const unsigned e = t.mono.exponent(i)) term = term * images[i].pow(e);
        result += term;
    }
    return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    if (g.is_zero()) throw DivisionByZero();
    Polynomial rem = f;
    std::vector<Term> quotient;
    const Term& lg = g.leading_term();
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        // Single-divisor division: the lead of the remainder must be divisible.
        if (!lg.mono.divides(lt.mono)) return std::nullopt;
        Term q{lt.mono / lg.mono, lt.coeff / lg.coeff};
        rem -= g.scaled(q.coeff, q.mono);
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(f.ring(), std::move(quotient));
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        Polynomial result(ring_);
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = next() == '-';
        }
        result = parse_term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = next();
            if (c != '+' && c != '-') throw ParseError(error_at("expected '+' or '-'"));
            result += parse_term(c == '-');
        }
        return result;
    }

private:
    Polynomial parse_term(bool negative) {
        Rational coeff = negative ? -1 : 1;
        Monomial mono;
        parse_factor(coeff, mono);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            next();
            parse_factor(coeff, mono);
        }
        return Polynomial::monomial(ring_, mono, coeff);
    }

    void parse_factor(Rational& coeff, Monomial& mono) {
        skip_ws();
        if (at_end()) throw ParseError(error_at("unexpected end of input"));
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
            skip_ws();
            if (!at_end() && peek() == '/') {
                next();
                skip_ws();
                std::string den = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
                if (den.empty()) throw ParseError(error_at("expected denominator"));
                num += '/' + den;
            }
            coeff *= Rational::parse(num);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            const std::string name =
                read_while([](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; });
            if (!ring_->contains(name)) throw ParseError(error_at("unknown variable '" + name + "'"));
            unsigned e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                next();
                skip_ws();
                const std::string digits = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
                if (digits.empty()) throw ParseError(error_at("expected exponent"));
                e = static_cast<unsigned>(std::stoul(digits));
            }
            const std::size_t i = ring_->index(name);
            mono.set_exponent(i, mono.exponent(i) + e);
            return;
        }
        throw ParseError(error_at(std::string("unexpected character '") + peek() + "'"));
    }

    template <class Pred>
    std::string read_while(Pred pred) {
        std::string out;
        while (!at_end() && pred(peek())) out += next();
        return out;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char next() { return text_[pos_++]; }
    std::string error_at(const std::string& msg) const { return msg + " at column " + std::to_string(pos_ + 1); }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

}  // namespace sepvar
