#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepvar/groebner.hpp"
#include "sepvar/polynomial.hpp"

namespace sepvar {

using Point = std::vector<Rational>;

/// Parses `1,-2/3,0`.
Point parse_point(std::string_view text);
std::string format_point(const Point& p);

struct NilpotencyReport {
    bool verified = false;
    unsigned bound = 0;
    /// steps[i]: least k with D^k(v_i) = 0 (filled for every generator that died).
    std::vector<unsigned> steps;
    /// Generator still alive after `bound` applications.
    std::optional<std::string> surviving;
};

/// Derivation of a polynomial ring, given by the images of the variables.
class Derivation {
public:
    /// images[i] = D(v_i); all in `ring`.
    Derivation(RingPtr ring, std::vector<Polynomial> images);

    const RingPtr& ring() const noexcept { return ring_; }
    const Polynomial& image(std::size_t i) const { return images_.at(i); }
    const std::vector<Polynomial>& images() const noexcept { return images_; }
    bool is_zero() const noexcept;

    /// (ambient dimension + 1) * (max degree of an image), at least 1.
    unsigned default_bound() const noexcept;

    bool is_verified() const noexcept { return witness_.has_value(); }
    const std::optional<NilpotencyReport>& witness() const noexcept { return witness_; }

    /// Iterates D on every generator; stores the witness on success.
    const NilpotencyReport& verify(std::optional<unsigned> bound = std::nullopt);

    /// D^k(v_i) for k = 0.. until zero (requires a verified derivation).
    const std::vector<Polynomial>& orbit_terms(std::size_t i) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> images_;
    std::optional<NilpotencyReport> witness_;
    NilpotencyReport last_;
    std::vector<std::vector<Polynomial>> orbit_terms_;
};

/// Derivation file: `ring: v1,...` then lines `D(v) = <polynomial>`; unlisted generators map to 0.
Derivation parse_derivation(std::string_view text);

Polynomial apply(const Derivation& d, const Polynomial& f);
Polynomial apply_power(const Derivation& d, Polynomial f, unsigned k);

NilpotencyReport verify_locally_nilpotent(Derivation& d, std::optional<unsigned> bound = std::nullopt);

/// exp(tD) f = sum t^k/k! D^k f in the ring extended by `parameter`.
/// Throws PreconditionError unless d is verified or the name is taken.
Polynomial exp_action(const Derivation& d, const Polynomial& f, const std::string& parameter = "t");

/// t * p, with coordinates (exp(tD) v_i)(p).
Point act_on_point(const Derivation& d, const Rational& t, const Point& p);

struct LocalSlice {
    Polynomial s;
    Polynomial ds;
};

/// Validates Ds != 0 and D(Ds) = 0.
LocalSlice make_local_slice(const Derivation& d, const Polynomial& s);

struct Localized {
    Polynomial numerator;
    unsigned power = 0;
};

/// exp(tD) f at t = -s/Ds, written as numerator / (Ds)^power with the power minimal.
/// The numerator is re-checked to lie in the kernel of D.
Localized slice_localize(const Derivation& d, const LocalSlice& slice, const Polynomial& f);

struct OrbitDecision {
    enum class Kind { SameOrbit, Separated, Undecided } kind = Kind::Undecided;
    /// SameOrbit: t with t * p = q.
    std::optional<Rational> t;
    /// Separated: an invariant with distinct values at p and q.
    std::optional<Polynomial> witness;
    /// Power of Ds dividing the witness (the invariant is witness / Ds^power).
    unsigned witness_power = 0;
    Rational value_p;
    Rational value_q;
};

OrbitDecision orbit_decide(const Derivation& d, const LocalSlice& slice, const Point& p, const Point& q);

/// Variable names for X x X and the group parameter.
struct ProductNames {
    std::vector<std::string> left;
    std::vector<std::string> right;
    std::string parameter;
};

/// v -> v_a, v_b; parameter `lambda` (with underscores appended on clashes).
ProductNames default_product_names(const Ring& ring);

/// Positive weights under which D lowers degree by exactly one, or all ones
/// when no such grading exists. Layout: left, right, parameter.
std::vector<unsigned> graph_weights(const Derivation& d);

struct GraphIdeal {
    /// In k[left, right] (grevlex). When incomplete it holds only the
    /// parameter-free elements found before the budget ran out.
    Ideal ideal;
    bool complete = false;
    ProductNames names;
    GbStats stats;
};

/// Ideal of the closure of {(x, t*x)}: eliminates the parameter from
/// (y_i - exp(tD) x_i). Relations without the parameter are split off first.
GraphIdeal graph_ideal(const Derivation& d, const ProductNames& names, const Budget& budget = Budget::unlimited(),
                       unsigned threads = 1);
GraphIdeal graph_ideal(const Derivation& d, const Budget& budget = Budget::unlimited(), unsigned threads = 1);

/// delta(f) = f(left) - f(right) in the product ring.
Polynomial delta(const Polynomial& f, const ProductNames& names, const RingPtr& product);
RingPtr product_ring(const ProductNames& names);

struct OrbitMembership {
    bool in_orbit = false;
    /// Rational parameter with t * a = b when one exists.
    std::optional<Rational> t;
    /// gcd over Q of the coordinate equations (c_k(t) - b_k), lowest degree first.
    std::vector<Rational> gcd;
    /// Each c_k(t) - b_k in the text format (parameter `t`).
    std::vector<std::string> equations;
};

/// Exact decision of b in Ga * a via univariate gcd over Q; a common root over
/// the algebraic closure exists iff the gcd has positive degree.
OrbitMembership orbit_membership_exact(const Derivation& d, const Point& a, const Point& b);

}  // namespace sepvar
