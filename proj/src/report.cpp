#include "widthlab/report.hpp"

#include <cstdlib>
#include <string>

namespace widthlab::report {

Json real(double v) { return format_real(v); }

Json reals(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(real(x));
  return out;
}

Json matrix(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(real(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

namespace {

template <class T>
Json optional_real(const std::optional<T>& v) {
  return v ? real(static_cast<double>(*v)) : Json(nullptr);
}

template <class T>
Json optional_count(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

double number(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size()) return v;
  }
  throw InputError(std::string("rigid spec: ") + what + " must be a number");
}

std::vector<double> numbers(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("rigid spec: ") + what + " must be an array");
  std::vector<double> out;
  for (const Json& x : j) out.push_back(number(x, what));
  return out;
}

}  // namespace

Json to_json(const spectra::SingularSpectrum& s) { return {{"values", reals(s.values)}, {"rank", s.rank}}; }

Json to_json(const spectra::WidthSequence& w) { return {{"values", reals(w.values)}}; }

Json to_json(const seqlab::LacunarityVerdict& v) {
  return {{"lacunary", v.lacunary},
          {"witness_ratio", real(v.witness_ratio)},
          {"exact", v.exact},
          {"window", v.window},
          {"threshold", real(v.threshold)}};
}

Json to_json(const seqlab::MajorizationVerdict& v) {
  return {{"holds", v.holds}, {"constant", optional_real(v.constant)}, {"window", v.window}, {"exact", v.exact}};
}

Json to_json(const seqlab::ShiftClassification& s) {
  return {{"k", optional_count(s.k)}, {"exhausted_at", s.exhausted_at}};
}

Json to_json(const covering::CoverCertificate& c) {
  return {{"holds", c.holds},
          {"psd_margin", real(c.psd_margin)},
          {"witness", c.witness ? matrix(*c.witness) : Json(nullptr)},
          {"norm", optional_real(c.norm)}};
}

Json to_json(const covering::ClassificationVerdict& v) {
  Json out = {{"tag", covering::tag_name(v.tag)},
              {"label", covering::verdict_label(v)},
              {"k", v.tag == covering::VerdictTag::KDim ? Json(v.k) : Json(nullptr)},
              {"exact", v.exact},
              {"note", v.note}};
  out["shifts"] = v.shifts ? to_json(*v.shifts) : Json(nullptr);
  return out;
}

Json to_json(const covering::DichotomyReport& r) {
  return {{"dims", r.dims},
          {"rho", reals(r.rho)},
          {"constraint_residuals", reals(r.constraint_residuals)},
          {"model_lacunary", r.model_lacunary}};
}

Json to_json(const covering::RangeEquivalence& r) {
  return {{"same_range", r.same_range}, {"c", optional_real(r.c)}, {"C", optional_real(r.C)}};
}

Json to_json(const covering::WeakFullness& w) {
  return {{"weakly_full", w.weakly_full}, {"case", covering::case_name(w.which)}, {"lacunarity", to_json(w.evidence)}};
}

Json to_json(const equations::SolvabilityVerdict& v) {
  return {{"solvable", v.solvable},
          {"rank_A", v.rank_A},
          {"rank_B", v.rank_B},
          {"asymptotic", v.asymptotic ? to_json(*v.asymptotic) : Json(nullptr)}};
}

Json to_json(const equations::InvertibleMatch& m) {
  return {{"condition", real(m.condition)},
          {"min_singular_value", real(m.min_singular_value)},
          {"x_residuals", reals(m.x_residuals)},
          {"y_residuals", reals(m.y_residuals)}};
}

Json to_json(const expanding::ExpandVerdict& v) { return {{"expanding", v.expanding}, {"margin", real(v.margin)}}; }

Json to_json(const expanding::DualCheck& d) {
  return {{"agree", d.agree},
          {"expanding", d.expanding},
          {"transposed_cover", d.transposed_cover},
          {"expand_margin", real(d.expand_margin)},
          {"cover_margin", real(d.cover_margin)},
          {"in_band", d.in_band}};
}

Json to_json(const rigid::CoverSearchReport& r) {
  return {{"identity_only", r.identity_only},
          {"admissible_maps", r.admissible_maps},
          {"norm_bound", real(r.norm_bound)},
          {"max_norm_bound", real(r.max_norm_bound)},
          {"ratio_threshold", real(r.ratio_threshold)},
          {"edge_graph_stats", {{"out_degree_min", optional_count(r.out_degree_min)}, {"in_degree_max", r.in_degree_max}}},
          {"search",
           {{"nodes_visited", r.nodes_visited},
            {"complete_maps", r.complete_maps},
            {"pruned_in_degree", r.pruned_in_degree},
            {"pruned_collinear", r.pruned_collinear},
            {"pruned_out_degree", r.pruned_out_degree}}}};
}

rigid::RigidCompactSpec rigid_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("rigid spec: expected a JSON object");
  for (const char* key : {"n", "alphas", "betas"})
    if (!j.contains(key)) throw InputError(std::string("rigid spec: missing field \"") + key + "\"");
  rigid::RigidCompactSpec spec;
  const double n = number(j.at("n"), "n");
  if (!(n >= 0.0) || n != static_cast<double>(static_cast<std::size_t>(n)))
    throw InputError("rigid spec: n must be a nonnegative integer");
  spec.n = static_cast<std::size_t>(n);
  spec.alphas = numbers(j.at("alphas"), "alphas");
  spec.betas = numbers(j.at("betas"), "betas");
  return spec;
}

}  // namespace widthlab::report
