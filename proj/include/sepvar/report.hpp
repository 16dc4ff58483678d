#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "sepvar/basic_actions.hpp"
#include "sepvar/case_studies.hpp"

namespace sepvar {

using Json = nlohmann::ordered_json;

Json ideal_json(const Ideal& ideal);
Json stats_json(const GbStats& stats);

/// Decomposition plus the invariants f_m and slices s_m of V_n.
Json basic_json(const Decomposition& d);
Json case_json(const CaseReport& r);

struct LemmaTable {
    std::vector<LemmaB> rows;
    int sweep_max = 12;
    /// Triples with p <= sweep_max, q <= p, r <= sweep_max.
    int checked = 0;
    /// Failures with r <= p, the range the lemma's proof draws on.
    std::vector<std::array<int, 3>> failures_used;
    /// Failures anywhere in the stated range.
    std::vector<std::array<int, 3>> failures_stated;

    bool rows_hold() const;
};

LemmaTable lemma_table(int max_m, int sweep_max = 12);
Json lemma_json(const LemmaTable& t);

Json curve_json(const Curve& c, const CurveCheck& check);

std::string basic_text(const Decomposition& d);
std::string case_text(const CaseReport& r);
std::string lemma_text(const LemmaTable& t);
std::string curve_text(const Curve& c, const CurveCheck& check);

}  // namespace sepvar
