#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepvar/derivation.hpp"

namespace sepvar {

/// An imported fact the report relies on but does not compute.
struct AssumedFact {
    std::string label;
    std::string statement;
};

struct KernelCheck {
    std::string label;
    Polynomial f;
    /// D(f); zero when f is an invariant.
    Polynomial image;
    bool in_kernel() const { return image.is_zero(); }
};

struct PlinthFact {
    Polynomial slice;
    Polynomial image;
    Polynomial expected;
    bool image_matches = false;
    bool image_invariant = false;
};

struct CaseComponent {
    std::string label;
    Ideal ideal;
    bool linear = false;
    /// ambient - rank of the linear forms (linear components only).
    std::optional<int> linear_dimension;
    std::optional<int> dimension;
    std::vector<std::string> independent_set;
};

/// V(inner) not inside V(outer), shown by a point of V(inner) where an element of outer does not vanish.
struct NonContainment {
    std::string inner;
    std::string outer;
    bool established = false;
    Point witness;
    std::optional<std::string> element;
    Rational value;
};

struct CaseReport {
    std::string name;
    Derivation derivation;
    ProductNames names;
    std::vector<KernelCheck> kernel;
    std::vector<PlinthFact> plinth;
    std::vector<AssumedFact> assumptions;
    bool graph_complete = false;
    GbStats graph_stats;
    std::vector<CaseComponent> components;
    std::vector<NonContainment> non_containments;
    std::vector<std::string> observations;
    /// Every stated fact certified.
    bool resolved = false;
    /// False when a certified fact contradicts the expected value.
    bool consistent = true;
    std::map<std::string, double> timings;
};

struct CaseOptions {
    Budget budget = Budget::seconds(900);
    unsigned threads = 1;
    /// Seed for the witness points.
    std::uint64_t seed = 1;
};

/// x^3 d/ds + s d/dt + t d/du + x^2 d/dv on k[x,s,t,u,v].
Derivation df5_derivation();
/// x^3 d/ds + y^3 s d/dt + y^3 t d/du + x^2 y^2 d/dv on k[x,y,s,t,u,v].
Derivation f6_derivation();

/// Generators f_1..f_6 of the separating algebra for df5.
std::vector<Polynomial> df5_separating_generators();

CaseReport df5_verify(const CaseOptions& options = {});
CaseReport f6_verify(const CaseOptions& options = {});

/// Random point of V(I) for a linear ideal I.
Point linear_variety_point(const Ideal& linear, std::uint64_t seed);

/// Number of variables minus the rank of the coefficient matrix of the linear forms.
int linear_dimension(const Ideal& linear);

}  // namespace sepvar
