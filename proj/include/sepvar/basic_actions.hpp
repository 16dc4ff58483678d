#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepvar/derivation.hpp"
#include "sepvar/qmatrix.hpp"

namespace sepvar {

/// The basic representation V_n with D_n = x_0 d/dx_1 + ... + x_{n-1} d/dx_n.
struct BasicAction {
    int n = 0;
    int m = 0;        // floor(n/2)
    int m_prime = 0;  // floor((n-1)/2)
    int delta = 0;    // m - m_prime
    Derivation derivation;
};

/// Throws PreconditionError for n < 1.
BasicAction weitzenbock(int n);

/// Ring x0..xn.
RingPtr basic_ring(int n);
/// Names x_i, y_i and parameter t.
ProductNames basic_product_names(int n);
RingPtr basic_product_ring(int n);

/// f_m = sum_{k<m} (-1)^k x_k x_{2m-k} + (-1)^m/2 x_m^2, f_0 = x_0.
Polynomial invariant_f(int n, int m);

/// s_m with D_n s_m = f_m from an exact linear solve over the degree-2
/// monomials (degree 1 for m = 0). Columns run in decreasing grevlex order and
/// free coordinates are zero.
LocalSlice slice_s(int n, int m);

/// I_n = (x_0, ..., x_{m'}).
Ideal ideal_I(int n);

struct RadicalIdentityCheck {
    bool holds = false;
    /// x_j in sqrt(f_0, ..., f_{m'}).
    std::vector<RadicalCertificate> variables_in_radical;
    /// Normal form of f_j modulo I_n, expected "0".
    std::vector<std::string> invariants_in_I;
};

Outcome<RadicalIdentityCheck> check_ideal_I(int n, const Budget& budget = Budget::unlimited());

struct Candidate {
    std::string label;
    /// nullopt marks the graph-closure placeholder.
    std::optional<Ideal> ideal;
};

/// Candidate list for the separating variety of V_n in the product ring.
std::vector<Candidate> sep_presentation(int n);

/// M_{n,i}: (x_0..x_{m-1}, y_0..y_{m-1}, y_m - (-1)^i x_m) for n = 2m.
Ideal m_set_ideal(int n, int i);

struct ContainmentCertificate {
    std::string label;
    Ideal candidate;
    bool decided = false;
    bool contained = false;
    /// Normal form of each graph-ideal generator modulo the candidate.
    std::vector<std::string> normal_forms;
    /// First generator with a nonzero normal form.
    std::optional<std::string> offending;
};

struct NonContainmentEvidence {
    enum class Path { Algebraic, Fallback } path = Path::Algebraic;
    bool established = false;
    /// Only set on the fallback path.
    bool conditional = false;
    std::string note;
    Point witness_a;
    Point witness_b;
    /// Algebraic path: a graph-ideal element that does not vanish at the witness.
    std::optional<std::string> nonvanishing_generator;
    Rational value;
    bool from_partial_basis = false;
    /// Fallback path data.
    std::optional<OrbitMembership> orbit;
    std::optional<Rational> m1_value;
};

struct ComponentReport {
    enum class Status { GraphClosure, Genuine };
    std::string label;
    Ideal ideal;
    std::optional<int> dimension;
    std::vector<std::string> independent_set;
    Status status = Status::GraphClosure;
};

struct DecomposeOptions {
    Budget budget = Budget::seconds(900);
    unsigned threads = 1;
    /// Skip the graph ideal evaluation and use the orbit-membership argument.
    bool force_fallback = false;
};

struct Decomposition {
    int n = 0;
    Ideal graph_ideal;
    bool graph_complete = false;
    GbStats graph_stats;
    std::vector<ComponentReport> components;
    std::vector<ContainmentCertificate> containments;
    std::optional<NonContainmentEvidence> non_containment;
    /// All claims for this n are certified.
    bool resolved = false;
    /// False when a certified fact contradicts the expected structure.
    bool consistent = true;
    std::optional<std::string> corollary;
    std::map<std::string, double> timings;
};

Decomposition decompose(int n, const DecomposeOptions& options = {});

/// V(candidate) inside V(graph generators): each generator has zero normal form modulo
/// the (prime, linear) candidate ideal.
ContainmentCertificate certify_linear_containment(const std::string& label, const Ideal& candidate,
                                                  const std::vector<Polynomial>& graph_generators);

/// M_{m,n} = (1/(n-i-j)!)_{i,j=0..m}; requires 2m <= n. Throws InternalError if singular.
QMatrix matrix_M(int m, int n);

struct LemmaB {
    int m = 0;
    Rational value;
    Rational expected;
    bool holds = false;
};

/// v^T A^{-1} v with A = M_{m-1,2m} and v = (1/m!, ..., 1/1!).
LemmaB lemma_b_value(int m);

struct BinomialSum {
    Rational lhs;
    Rational rhs;
};

/// lhs = sum_j (-1)^j C(r,j) C(p-j,q), rhs = C(p-r, p-q) with generalized binomials.
BinomialSum binomial_sum(int p, int q, int r);

/// Laurent polynomial in u.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly monomial(const Rational& c, int exponent);

    const std::map<int, Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Smallest exponent; 0 for the zero polynomial.
    int min_exponent() const noexcept;
    bool is_polynomial() const noexcept { return min_exponent() >= 0; }
    Rational coefficient(int e) const;
    /// Value at u = 0; requires is_polynomial().
    Rational at_zero() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    LaurentPoly shifted(int k) const;

    /// Text format in the variable u, e.g. `-2*u + 1`, `u^-1`.
    std::string to_string() const;

private:
    void set(int e, Rational c);
    std::map<int, Rational> coeffs_;
};

struct Curve {
    int n = 0;
    Point a;
    Point b;
    QMatrix A;
    /// p_j and q_j = u^j p_j for j = delta..m.
    std::vector<LaurentPoly> p;
    std::vector<LaurentPoly> q;
    std::vector<LaurentPoly> x;
    std::vector<LaurentPoly> y;
};

/// Throws PreconditionError naming the violated zero pattern when (a, b) has the wrong shape.
void check_curve_shape(int n, const Point& a, const Point& b);

Curve curve_construct(int n, const Point& a, const Point& b);

struct CurveCheck {
    bool polynomial = false;
    bool endpoints = false;
    bool group_identity = false;
    std::vector<std::string> mismatches;

    bool ok() const noexcept { return polynomial && endpoints && group_identity; }
};

/// (1) no negative powers, (2) x(0) = a and y(0) = b, (3) u^k y_k - sum_i u^i/(k-i)! x_i = 0.
CurveCheck curve_verify(const Curve& c, const BasicAction& action);

}  // namespace sepvar
