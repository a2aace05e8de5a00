#include "report.hpp"

#include "cache.hpp"

namespace fillprobe::report {

json rational(const Rational& q) { return to_fraction_string(q); }

json group_info(const GroupPresentation& p, const RewritingSystem& rws, bool completion_required) {
  json relators = json::array();
  for (const auto& r : p.relators) relators.push_back(format_word(r, p.generators));
  json rules = json::array();
  for (const auto& r : rws.rules)
    rules.push_back(format_word(r.lhs, p.generators) + " -> " + format_word(r.rhs, p.generators));
  return {{"id", presentation_id(p)},
          {"generators", p.generators},
          {"relators", relators},
          {"max_relator_length", p.max_relator_length()},
          {"rewriting", {{"status", rws.confluent() ? "Confluent" : "Incomplete"}, {"rules", rules}}},
          {"completion_required", completion_required},
          {"warnings", p.warnings}};
}

json catalog_listing() {
  json out = json::array();
  for (const auto& e : catalog())
    out.push_back({{"name", e.name},
                   {"description", e.description},
                   {"presentation", e.source},
                   {"rules", e.rules.size()},
                   {"completion_required", e.completion_required}});
  return out;
}

json certificate(const FillingCertificate& cert, const TwoComplex& x, const GroupPresentation& p) {
  json witness = json::array();
  for (const auto& [c, q] : cert.witness.entries()) {
    const Cell& cell = x.cells.at(c);
    witness.push_back({{"cell", c},
                       {"base", format_word(x.ball.vertices.at(cell.base), p.generators)},
                       {"relator", cell.relator},
                       {"coefficient", rational(q)}});
  }
  json history = json::array();
  for (const auto& [r, v] : cert.history) history.push_back({{"radius", r}, {"value", rational(v)}});
  return {{"ring", cert.ring == Ring::kRational ? "Q" : "Z"},
          {"value", rational(cert.value)},
          {"radius", cert.radius},
          {"status", cert.status == FillStatus::kExactWithinBall ? "ExactWithinBall" : "UpperBound"},
          {"stabilized", cert.stabilized},
          {"history", history},
          {"cells_used", cert.cells_used},
          {"witness", witness}};
}

json growth_fit(const GrowthFit& fit) {
  return {{"class", to_string(fit.growth)},
          {"K", rational(fit.K)},
          {"residual", rational(fit.residual)},
          {"rows_used", fit.rows_used},
          {"drift_tolerance", rational(fit.drift_tolerance)}};
}

json fv_estimate(const FVEstimate& est, const GroupPresentation& p) {
  json rows = json::array();
  for (const auto& row : est.table)
    rows.push_back({{"k", row.k},
                    {"value", rational(row.value)},
                    {"witness", row.value == 0 ? json(nullptr) : json(format_word(row.witness, p.generators))},
                    {"witness_length", rational(row.witness_length)},
                    {"radius", row.radius},
                    {"status", row.value == 0 ? "none" : (row.stabilized ? "stabilized" : "upper-bound")}});
  return {{"presentation_id", est.presentation_id},
          {"mode", to_string(est.mode)},
          {"M", est.max_relator_length},
          {"boundaries", est.boundaries},
          {"unfilled", est.unfilled},
          {"enumeration_radius", est.enumeration_radius},
          {"complex_radius", est.complex_radius},
          {"capped", est.capped},
          {"cap_reason", est.cap_reason},
          {"table", rows}};
}

json hyperbolicity(const HyperbolicityReport& r, const GroupPresentation& p) {
  json out = {{"verdict", to_string(r.verdict)},
              {"note", r.note},
              {"fit", growth_fit(r.fit)},
              {"estimate", fv_estimate(r.estimate, p)}};
  if (r.witness) {
    out["witness"] = {{"k", r.witness->k},
                      {"word", format_word(r.witness->witness, p.generators)},
                      {"length", rational(r.witness->witness_length)},
                      {"value", rational(r.witness->value)},
                      {"ratio", rational(r.witness->value / r.witness->witness_length)}};
  }
  return out;
}

json amenability(const AmenabilityProbe& probe) {
  json rows = json::array();
  for (const auto& row : probe.table) {
    json entry = {{"R", row.radius},
                  {"status", row.solved ? "solved" : "failed"},
                  {"interior_vertices", row.interior_vertices},
                  {"edges", row.edges}};
    entry["value"] = row.solved ? rational(row.t) : json(nullptr);
    if (!row.error.empty()) entry["error"] = row.error;
    rows.push_back(entry);
  }
  return {{"verdict", to_string(probe.verdict)}, {"note", probe.note}, {"table", rows}};
}

}  // namespace fillprobe::report
