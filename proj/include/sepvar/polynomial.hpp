#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepvar/rational.hpp"
#include "sepvar/ring.hpp"

namespace sepvar {

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse polynomial over Q. Terms are kept sorted strictly decreasing under
/// the ring's order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
    /// Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    /// Terms already strictly decreasing with nonzero coefficients.
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Leading term under the ring order; requires nonzero.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    unsigned total_degree() const noexcept;
    unsigned degree_in(std::size_t var) const noexcept;
    /// Bit i set iff variable i occurs in some term.
    std::uint32_t support() const noexcept;
    /// Coefficient of m (zero when absent).
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial monic() const;
    Polynomial pow(unsigned e) const;
    /// c * m * this.
    Polynomial scaled(const Rational& c, const Monomial& m) const;

    /// The same polynomial viewed in another ring; variables are matched by
    /// name and every occurring variable must exist in `target`.
    Polynomial in_ring(const RingPtr& target) const;

    /// Polynomial text format: `2*x0^2*x1 - 1/2*x2`.
    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Throws RingMismatch unless both operands share a ring.
void require_same_ring(const Polynomial& a, const Polynomial& b);

Polynomial differentiate(const Polynomial& f, std::string_view var);
Polynomial differentiate(const Polynomial& f, std::size_t var);

/// Exact value at a point with one coordinate per ring variable.
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

/// Replaces variables by polynomials of `target`. Unbound variables are
/// mapped to the same-named variable of `target`.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings, const RingPtr& target);

/// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Parses the polynomial text format. Whitespace is insignificant.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string format_monomial(const Monomial& m, const Ring& ring);

}  // namespace sepvar
