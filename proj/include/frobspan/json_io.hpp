#pragma once

#include <nlohmann/json_fwd.hpp>

#include "frobspan/constructions.hpp"
#include "frobspan/linearize.hpp"
#include "frobspan/relation.hpp"
#include "frobspan/tqft.hpp"

namespace frobspan {

using json = nlohmann::json;

// Readers throw ParseError with context on malformed input.
FiniteSet finite_set_from_json(const json& j);
SetMap set_map_from_json(const json& j, const FiniteSet& dom, const FiniteSet& cod);
Span span_from_json(const json& j);
Relation relation_from_json(const json& j);
RelationWord relation_word_from_json(const json& j);
TruncatedSS2 tss2_from_json(const json& j);
FrobeniusDatum frobenius_from_json(const json& j);
Group group_from_json(const json& j);
Groupoid groupoid_from_json(const json& j);
GeneratorWord generator_word_from_json(const json& j);

json finite_set_to_json(const FiniteSet& s);
json set_map_to_json(const SetMap& m);
json span_to_json(const Span& s);
json relation_to_json(const Relation& r);
json relation_word_to_json(const RelationWord& w);
json tss2_to_json(const TruncatedSS2& t);
json frobenius_to_json(const FrobeniusDatum& f);
/// {"src": [...], "dst": [...], "counts": row-major decimal strings}
json matrix_to_json(const MultiplicityMatrix& m);
json algebra_to_json(const FrobeniusAlgebraPresentation& p);

}  // namespace frobspan
