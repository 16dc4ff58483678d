#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sepvar/polynomial.hpp"

namespace sepvar {

/// Wall-clock and step limits for Gröbner computations.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    static Budget unlimited() { return Budget{}; }
    static Budget seconds(double s);
    static Budget steps(std::uint64_t max_reductions);

    bool expired(std::uint64_t steps_done) const noexcept;
    std::optional<Clock::time_point> deadline() const noexcept { return deadline_; }

private:
    std::optional<Clock::time_point> deadline_;
    std::optional<std::uint64_t> max_steps_;
};

struct GbOptions {
    /// Worker threads for reducing a batch of S-polynomials; the result does
    /// not depend on this value.
    unsigned threads = 1;
    /// Positive integer weight per variable used for sugar degrees. Empty
    /// means all ones. Pass a grading under which the input is homogeneous
    /// to get degree-by-degree behaviour.
    std::vector<unsigned> sugar_weights;
};

struct GbStats {
    std::uint64_t pairs_created = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t reduction_steps = 0;
    std::uint64_t basis_size = 0;
    unsigned max_sugar = 0;
    double seconds = 0.0;
};

class GroebnerBasis;

/// Finitely generated ideal. Zero generators are dropped; the zero ideal has
/// no generators. Completed Gröbner bases are cached per term order and
/// shared between copies.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }

    std::optional<GroebnerBasis> cached_basis(const MonomialOrder& order) const;
    void remember(const GroebnerBasis& gb) const;

    std::string to_string() const;

private:
    struct Cache;
    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

/// Reduced Gröbner basis: monic, sorted by increasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

    /// Ring carrying the term order of the basis.
    const RingPtr& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return ring_->order(); }
    const std::vector<Polynomial>& elements() const noexcept { return basis_; }
    std::size_t size() const noexcept { return basis_.size(); }
    bool is_unit() const noexcept { return basis_.size() == 1 && basis_[0].is_constant(); }

private:
    RingPtr ring_;
    std::vector<Polynomial> basis_;
};

enum class GbStatus { Complete, Timeout };

struct GroebnerResult {
    GbStatus status = GbStatus::Complete;
    std::optional<GroebnerBasis> basis;
    /// On timeout: the monic elements accumulated so far. They all lie in the
    /// ideal but do not form a Gröbner basis.
    std::vector<Polynomial> partial;
    GbStats stats;

    bool complete() const noexcept { return status == GbStatus::Complete; }
};

/// Value of a budgeted computation; empty on timeout.
template <class T>
struct Outcome {
    std::optional<T> value;
    GbStats stats;

    bool complete() const noexcept { return value.has_value(); }
};

/// Buchberger's algorithm with sugar selection and Gebauer-Möller pair
/// pruning. The reduced basis is returned in `order`.
GroebnerResult buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget = Budget::unlimited(),
                          const GbOptions& options = {});

/// Cached variant of buchberger(); completed bases are stored on the ideal.
GroebnerResult groebner(const Ideal& ideal, const MonomialOrder& order, const Budget& budget = Budget::unlimited(),
                        const GbOptions& options = {});

/// Remainder of full multivariate division; returned in f's ring.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

/// True iff every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);
/// Monic, and no term of an element is divisible by the leading term of another.
bool is_reduced(const GroebnerBasis& gb);

/// When enabled, every completed basis is re-checked with
/// satisfies_buchberger_criterion() and is_reduced() before being returned.
void set_verify_bases(bool on);
bool verify_bases();
/// Number of bases that passed the re-check since start-up.
std::uint64_t verified_basis_count();

struct RadicalCertificate {
    enum class Method { NormalForm, Rabinowitsch } method = Method::NormalForm;
    bool member = false;
    /// Text of the normal form of f modulo I (always recorded).
    std::string normal_form;
    /// Name of the fresh variable used for the Rabinowitsch test, if any.
    std::string extra_variable;
};

/// f ∈ √I, decided by a normal form first and then 1 ∈ I + (1 - z f).
Outcome<RadicalCertificate> radical_member(const Polynomial& f, const Ideal& ideal,
                                           const Budget& budget = Budget::unlimited(), const GbOptions& options = {});

struct ContainmentResult {
    bool contained = false;
    /// A generator of J that is not in √I when containment fails.
    std::optional<Polynomial> offending;
    std::vector<RadicalCertificate> certificates;
};

/// V(I) ⊆ V(J): every generator of J lies in √I.
Outcome<ContainmentResult> variety_contained(const Ideal& i, const Ideal& j, const Budget& budget = Budget::unlimited(),
                                             const GbOptions& options = {});

struct EliminationResult {
    /// Lives in the ring without the dropped variables (inner order). When
    /// incomplete it holds only the elements found so far.
    Ideal ideal;
    bool complete = false;
    GbStats stats;
};

/// I ∩ Q[remaining variables] via a block elimination order.
EliminationResult eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                            const Budget& budget = Budget::unlimited(), const GbOptions& options = {});

struct DimensionResult {
    int dimension = 0;
    /// A maximal set of variables independent modulo the leading-term ideal.
    std::vector<std::string> independent_set;
    std::size_t leading_monomials = 0;
};

/// Krull dimension of V(I). Throws EmptyVariety when 1 ∈ I.
Outcome<DimensionResult> dimension(const Ideal& ideal, const Budget& budget = Budget::unlimited(),
                                   const GbOptions& options = {});

/// Krull dimension read off a completed basis.
DimensionResult dimension_from_basis(const GroebnerBasis& gb);

/// Ideal file format: `ring: v1,v2,...` header, one generator per line, `#` comments.
Ideal parse_ideal(std::string_view text);
std::string format_ideal(const RingPtr& ring, const std::vector<Polynomial>& generators);

}  // namespace sepvar
