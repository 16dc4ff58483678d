#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sepvar/errors.hpp"

namespace sepvar {

/// Upper bound on the number of variables of a ring. The largest rings used
/// here are the product rings of V_8 plus a group parameter and a
/// Rabinowitsch variable (20 variables).
inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector. Slots past the ring's variable count are always zero.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::size_t index, unsigned exponent = 1);

    unsigned exponent(std::size_t i) const noexcept { return exps_[i]; }
    void set_exponent(std::size_t i, unsigned e);
    unsigned degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    /// Bit i set iff variable i occurs.
    std::uint32_t support() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

    const std::array<std::uint8_t, kMaxVars>& exponents() const noexcept { return exps_; }

private:
    std::array<std::uint8_t, kMaxVars> exps_{};
    std::uint16_t degree_ = 0;
};

/// Monomial order: lex, grevlex, or a block order that first compares the
/// eliminated variables (grevlex on that block) and breaks ties with an
/// inner lex/grevlex order on the remaining variables.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0, Kind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0, Kind::Grevlex); }
    /// `elim_mask` bit i marks variable i as eliminated.
    static MonomialOrder block(std::uint32_t elim_mask, Kind inner = Kind::Grevlex);

    Kind kind() const noexcept { return kind_; }
    Kind inner() const noexcept { return inner_; }
    std::uint32_t elim_mask() const noexcept { return elim_mask_; }

    /// Three-way comparison of a and b over the first `nvars` variables.
    int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept;

    /// Same order restricted to the variables kept after dropping `elim_mask`.
    MonomialOrder inner_order() const;

    std::string name() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind kind, std::uint32_t mask, Kind inner) : kind_(kind), elim_mask_(mask), inner_(inner) {}

    Kind kind_;
    std::uint32_t elim_mask_;
    Kind inner_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring Q[v_1, ..., v_k] with named variables and a fixed term order.
class Ring {
public:
    static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex());

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const MonomialOrder& order() const noexcept { return order_; }

    /// Throws PreconditionError for unknown names.
    std::size_t index(std::string_view name) const;
    bool contains(std::string_view name) const noexcept;

    int compare(const Monomial& a, const Monomial& b) const noexcept { return order_.compare(a, b, names_.size()); }

    RingPtr with_order(MonomialOrder order) const;
    /// Ring with extra variables appended after the existing ones.
    RingPtr extended(const std::vector<std::string>& extra, MonomialOrder order = MonomialOrder::grevlex()) const;
    /// Ring obtained by deleting the variables flagged in `mask`, keeping relative order.
    RingPtr without(std::uint32_t mask, MonomialOrder order = MonomialOrder::grevlex()) const;

    /// Bit mask of the named variables.
    std::uint32_t mask_of(const std::vector<std::string>& names) const;

    std::string describe() const;

    friend bool same_ring(const Ring& a, const Ring& b) noexcept {
        return &a == &b || (a.order_ == b.order_ && a.names_ == b.names_);
    }

private:
    Ring(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(order) {}

    std::vector<std::string> names_;
    MonomialOrder order_;
};

}  // namespace sepvar
