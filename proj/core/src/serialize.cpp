#include "sextic/serialize.hpp"

#include <stdexcept>

namespace sextic {

using nlohmann::json;

json to_json(const Rational& q) { return q.str(); }
json to_json(const BigInt& n) { return n.get_str(); }

json to_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

json to_json(const CurveModel& e) {
  return {{"c", to_json(e.c)}, {"a2", to_json(e.a2)}, {"a1", to_json(e.a1)}, {"a0", to_json(e.a0)},
          {"equation", e.str()}};
}

json to_json(const S6Point& p) { return {{"U", to_json(p.U)}, {"D", to_json(p.D)}, {"T", to_json(p.T)}}; }

json to_json(const CubicElement& e) {
  json out = json::array();
  for (const auto& c : e.coefficients()) out.push_back(c.str());
  return out;
}

json to_json(const SexticElement& e) { return json::array({to_json(e.a()), to_json(e.b())}); }

json to_json(const ConductorEstimate& c) {
  json amb = json::array();
  for (const auto& p : c.ambiguous) amb.push_back(to_json(p));
  return {{"determined", to_json(c.determined)}, {"ambiguous_support", amb}};
}

json to_json(const OrbitClassification& c) {
  return {{"case", to_string(c.kind)}, {"rho_power", c.rho_power}, {"generator_power", c.generator_power}};
}

json to_json(const PipelineCertificates& c) {
  return {{"cubic_irreducible", c.cubic_irreducible},
          {"disc_square", c.disc_square},
          {"on_curve", c.on_curve},
          {"trace_zero", c.trace_zero},
          {"infinite_order_heuristic", c.infinite_order_heuristic},
          {"rho_order_six", c.rho_order_six},
          {"half_turn_negates", c.half_turn_negates},
          {"alternate_sum_zero", c.alternate_sum_zero},
          {"orbit_distinct", c.orbit_distinct},
          {"all", c.all()}};
}

json to_json(const InfiniteOrderCertificate& c) {
  return {{"result", c.result},
          {"torsion_bound", c.torsion_bound},
          {"vanishing_multiple", c.vanishing_multiple},
          {"height_bits_P", c.height_p},
          {"height_bits_4P", c.height_4p},
          {"heuristic", c.heuristic}};
}

json to_json(const SexticConstruction& c) {
  json icubic = json::array();
  for (const auto& v : c.integer_cubic) icubic.push_back(to_json(v));
  json orbit = json::array();
  for (const auto& p : c.orbit) orbit.push_back(to_json(p));
  return {{"status", "ok"},
          {"curve", to_json(c.curve)},
          {"input_point", to_json(c.input)},
          {"cubic", {{"intersection", to_json(c.intersection)}, {"integer", icubic}, {"scale", to_json(c.scale)}}},
          {"k3",
           {{"f", to_json(c.cubic)},
            {"disc", to_json(c.k3.disc())},
            {"conductor_determined", to_json(c.conductor.determined)},
            {"conductor_ambiguous_support", to_json(c.conductor)["ambiguous_support"]}}},
          {"delta", to_json(c.delta)},
          {"slope", to_json(c.slope)},
          {"point", to_json(c.P)},
          {"partner", to_json(c.Q)},
          {"orbit", orbit},
          {"certificates", to_json(c.certificates)},
          {"infinite_order", to_json(c.infinite_order)},
          {"orbit_case", to_json(c.orbit_case)}};
}

json to_json(const Degenerate& d) {
  json out{{"status", "degenerate"}, {"kind", to_string(d.kind)}, {"detail", d.detail}};
  if (d.kind == DegeneracyKind::not_on_surface) out["residual"] = to_json(d.residual);
  if (!d.rational_roots.empty()) {
    json roots = json::array();
    for (const auto& r : d.rational_roots) roots.push_back(to_json(r));
    out["rational_roots"] = roots;
  }
  if (d.orbit_case) out["orbit_case"] = to_string(*d.orbit_case);
  if (d.cubic_case) {
    out["cubic_case"] = {{"f", to_json(d.cubic_case->k3.polynomial())},
                         {"point", to_json(d.cubic_case->P)},
                         {"partner", to_json(d.cubic_case->Q)},
                         {"classification", to_json(d.cubic_case->orbit_case)}};
  }
  return out;
}

json to_json(const PipelineResult& r) {
  return std::visit([](const auto& v) { return to_json(v); }, r);
}

json to_json(const ConductorData& c) {
  json amb = json::array();
  for (const auto& p : c.ambiguous_support) amb.push_back(to_json(p));
  return {{"cubic_conductor", to_json(c.cubic_conductor)},
          {"quad_disc", to_json(c.quad_disc)},
          {"product", to_json(c.product)},
          {"squarefree", c.squarefree},
          {"ambiguous_support", amb}};
}

json to_json(const FamilyRecord& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = to_json(v);
  return {{"family", to_string(r.family)},
          {"parameters", params},
          {"curve", to_json(r.curve)},
          {"s6point", to_json(r.point)},
          {"construction", to_json(r.construction)},
          {"conductor", to_json(r.conductor)}};
}

json to_json(const ProofRecord& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}});
  return {{"A", to_json(r.A)}, {"B", to_json(r.B)}, {"checks", checks}, {"all", r.all()}};
}

json to_json(const FiberProfile& f) {
  json loci = json::array();
  for (const auto& l : f.loci) loci.push_back({{"locus", to_json(l.locus)}, {"multiplicity", l.multiplicity}});
  return {{"discriminant", to_json(f.discriminant)},
          {"loci", loci},
          {"finite_degree", f.finite_degree},
          {"infinity_order", f.infinity_order},
          {"standard_pattern", f.standard_pattern}};
}

json to_json(const IsogenyCheck& c) {
  json primes = json::array();
  for (const auto& p : c.primes) {
    json e{{"prime", p.prime}, {"skipped", p.skipped}};
    if (p.skipped) {
      e["note"] = p.note;
    } else {
      e["count_E"] = p.count_e;
      e["count_isogenous"] = p.count_isogenous;
    }
    primes.push_back(e);
  }
  return {{"T0", to_json(c.T0)}, {"primes", primes}, {"counts_agree", c.counts_agree}};
}

json to_json(const CensusReport& r, bool with_values) {
  json counts = json::array();
  for (const auto& p : r.counts) counts.push_back({{"X", p.limit}, {"count", p.count}});
  json out{{"a", r.a},
           {"b", r.b},
           {"counts", counts},
           {"slope", r.slope ? json(*r.slope) : json(nullptr)},
           {"bound_max_mn", r.bound_m},
           {"pairs_scanned", r.pairs_scanned},
           {"workers", r.workers},
           {"wall_seconds", r.wall_seconds},
           {"caveat",
            "counts distinct square-free values of (9bm^2 + (4a + 27b)n^2)(m^2 + 3n^2); conductors agree with "
            "these values only up to factors at 2, 3 and the primes of ab"}};
  if (with_values) {
    json vals = json::array();
    for (const auto& [v, w] : r.values) vals.push_back({{"value", v}, {"m", w.m}, {"n", w.n}});
    out["values"] = vals;
  }
  return out;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational_from_json: expected a string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace sextic
