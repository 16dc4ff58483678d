#include "sepvar/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace sepvar {
namespace {

void check_exponent(unsigned e) {
    if (e > 255) throw PreconditionError("monomial exponent exceeds 255");
}

int compare_lex(const Monomial& a, const Monomial& b, std::size_t nvars, std::uint32_t skip) noexcept {
    for (std::size_t i = 0; i < nvars; ++i) {
        if (skip >> i & 1u) continue;
        const unsigned x = a.exponent(i);
        const unsigned y = b.exponent(i);
        if (x != y) return x > y ? 1 : -1;
    }
    return 0;
}

// Grevlex on the variables whose bit in `keep` is set.
int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t nvars, std::uint32_t keep) noexcept {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (!(keep >> i & 1u)) continue;
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = nvars; i-- > 0;) {
        if (!(keep >> i & 1u)) continue;
        const unsigned x = a.exponent(i);
        const unsigned y = b.exponent(i);
        if (x != y) return x < y ? 1 : -1;
    }
    return 0;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
    Monomial m;
    m.set_exponent(index, exponent);
    return m;
}

void Monomial::set_exponent(std::size_t i, unsigned e) {
    check_exponent(e);
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
    exps_[i] = static_cast<std::uint8_t>(e);
}

std::uint32_t Monomial::support() const noexcept {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exps_[i]) s |= 1u << i;
    return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exps_[i] && other.exps_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
        check_exponent(e);
        r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (b.exps_[i] > a.exps_[i]) throw PreconditionError("monomial quotient: divisor does not divide");
        r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        d += r.exps_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    return r;
}

MonomialOrder MonomialOrder::block(std::uint32_t elim_mask, Kind inner) {
    if (inner == Kind::Block) throw PreconditionError("block order: inner order must be lex or grevlex");
    return MonomialOrder(Kind::Block, elim_mask, inner);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
    const std::uint32_t all = nvars >= 32 ? ~0u : ((1u << nvars) - 1u);
    switch (kind_) {
        case Kind::Lex: return compare_lex(a, b, nvars, 0);
        case Kind::Grevlex: return compare_grevlex(a, b, nvars, all);
        case Kind::Block: {
            if (const int c = compare_grevlex(a, b, nvars, elim_mask_ & all)) return c;
            return inner_ == Kind::Lex ? compare_lex(a, b, nvars, elim_mask_)
                                       : compare_grevlex(a, b, nvars, all & ~elim_mask_);
        }
    }
    return 0;
}

MonomialOrder MonomialOrder::inner_order() const {
    if (kind_ != Kind::Block) return *this;
    return inner_ == Kind::Lex ? lex() : grevlex();
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::Grevlex: return "grevlex";
        case Kind::Block: return std::string("block(") + (inner_ == Kind::Lex ? "lex" : "grevlex") + ")";
    }
    return "?";
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
    if (names.size() > kMaxVars) throw PreconditionError("too many variables (max " + std::to_string(kMaxVars) + ")");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n)) throw PreconditionError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
    }
    return RingPtr(new Ring(std::move(names), order));
}

std::size_t Ring::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw PreconditionError("unknown variable '" + std::string(name) + "'");
}

bool Ring::contains(std::string_view name) const noexcept {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, order); }

RingPtr Ring::extended(const std::vector<std::string>& extra, MonomialOrder order) const {
    auto names = names_;
    names.insert(names.end(), extra.begin(), extra.end());
    return make(std::move(names), order);
}

RingPtr Ring::without(std::uint32_t mask, MonomialOrder order) const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!(mask >> i & 1u)) names.push_back(names_[i]);
    return make(std::move(names), order);
}

std::uint32_t Ring::mask_of(const std::vector<std::string>& names) const {
    std::uint32_t m = 0;
    for (const auto& n : names) m |= 1u << index(n);
    return m;
}

std::string Ring::describe() const {
    std::string s;
    for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
    return s;
}

}  // namespace sepvar
