#pragma once

#include "monolab/harness.hpp"

#include "json.hpp"

namespace monolab {

// All rationals travel as exact "p/q" strings (plain integers allowed).

PolyOperator operator_from_json(const nlohmann::json& j);
PolyOperator load_operator(const std::string& path);

PwFunction1D function_from_json(const nlohmann::json& j);
PwFunction1D load_function(const std::string& path);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json predicate_vector_to_json(const PredicateVector& v);
nlohmann::json corpus_report_to_json(const std::vector<CaseResult>& results);

// Loss-free vertex/ray listing of a piecewise set, one row per generator:
// piece,kind,coordinates...
std::string union_to_csv(const PolyUnion& u);

}  // namespace monolab
