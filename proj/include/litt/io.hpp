// io.hpp -- machine-readable renderings (JSON, TSV, CSV) of library results

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "litt/asymptotics.hpp"
#include "litt/engine.hpp"
#include "litt/occurrences.hpp"
#include "litt/verify.hpp"

namespace litt::io {

using nlohmann::json;

/// {"num": "<decimal>", "den_pow2": e}
json dyadic_json(const Dyadic& x);
Dyadic dyadic_from_json(const json& j);

/// dyadic_json plus a display-only "decimal".
json probability_json(const Dyadic& x);

json correlation_json(const WordPair& pair);
json outcome_json(const GameOutcome& outcome);
json simulation_json(const WordPair& pair, const SimulationResult& result);
json asymptotic_json(const AsymptoticEstimate& estimate);

/// {"fillers": [...], "chains": [...], "chain_words": [...]}; chains in chain text.
json decomposition_json(const WordPair& pair, const Decomposition& d);
/// Reads "fillers" and "chains"; other keys are ignored.
Decomposition decomposition_from_json(const json& j);

/// Header "a\tb\tcount", rows sorted by (a, b).
std::string joint_tsv(const JointDistribution& dist);
std::string joint_csv(const JointDistribution& dist);
json joint_json(const JointDistribution& dist);
/// Header "d\tcount", rows sorted by d.
std::string diff_tsv(const DiffDistribution& dist);
std::string diff_csv(const DiffDistribution& dist);
json diff_json(const DiffDistribution& dist);

/// Header "n,exact_gap,est_gap,ratio_gap,exact_tie,est_tie,ratio_tie".
std::string comparison_csv(const std::vector<ComparisonRow>& rows);
json comparison_json(const std::vector<ComparisonRow>& rows);

json symmetry_json(const SymmetryReport& report);
json lemma1_json(const Lemma1Report& report);
json conjecture_json(const ConjectureReport& report, bool with_cells);

/// Shortest round-trip rendering of a double ("nan", "inf" for non-finite).
std::string format_double(double x);

}  // namespace litt::io
