#pragma once

#include <nlohmann/json.hpp>

#include "sextic/census.hpp"
#include "sextic/families.hpp"
#include "sextic/fibration.hpp"
#include "sextic/s6.hpp"

namespace sextic {

// Rationals and big integers are written as decimal strings, never numbers.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const BigInt& n);
nlohmann::json to_json(const UniPoly& p);  // coefficient strings, lowest degree first
nlohmann::json to_json(const CurveModel& e);
nlohmann::json to_json(const S6Point& p);
nlohmann::json to_json(const CubicElement& e);
nlohmann::json to_json(const SexticElement& e);  // [[a0, a1, a2], [b0, b1, b2]] for a + b sqrt(delta)
nlohmann::json to_json(const ConductorEstimate& c);
nlohmann::json to_json(const OrbitClassification& c);
nlohmann::json to_json(const PipelineCertificates& c);
nlohmann::json to_json(const InfiniteOrderCertificate& c);
nlohmann::json to_json(const SexticConstruction& c);
nlohmann::json to_json(const Degenerate& d);
nlohmann::json to_json(const PipelineResult& r);
nlohmann::json to_json(const ConductorData& c);
nlohmann::json to_json(const FamilyRecord& r);
nlohmann::json to_json(const ProofRecord& r);
nlohmann::json to_json(const FiberProfile& f);
nlohmann::json to_json(const IsogenyCheck& c);
// with_values adds every counted value with its witness.
nlohmann::json to_json(const CensusReport& r, bool with_values = false);

template <class E>
nlohmann::json to_json(const Point<E>& p) {
  if (p.is_infinity()) return {{"infinity", true}};
  return {{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

// Inverse of to_json(Rational); throws on anything but a string.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace sextic
