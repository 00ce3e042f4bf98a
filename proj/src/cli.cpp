#include "widthlab/cli.hpp"

#include "widthlab/covering.hpp"
#include "widthlab/equations.hpp"
#include "widthlab/expanding.hpp"
#include "widthlab/report.hpp"
#include "widthlab/rigid.hpp"
#include "widthlab/seqlab.hpp"
#include "widthlab/spectra.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace widthlab::cli {

namespace {

using report::Json;

struct Options {
  bool json = false;
  std::string file, y_file, t_file, e1_file, e2_file, e_file, n_file;
  std::string a_file, b_file, a1_file, a2_file;
  std::string x0_file, y0_file, tests_file;
  std::string xs_file, xs_target_file, ys_file, ys_target_file;
  std::string out_x, out_y, out_d, out_v;
  std::string model, a_model, b_model, codim = "inf", spec_file;
  double tol = 1e-9;
  double rank_cutoff = spectra::kRankCutoff;
  double tau = seqlab::kRatioThreshold;
  std::size_t window = seqlab::kDefaultWindow;
  std::size_t k_max = 16;
  std::size_t m = 1;
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  double eps = 1e-3;
  double norm_bound = 10.0;
  bool kernel_trivial = false;
  bool dual = false;
  bool csv = false;
};

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_real(v[i]);
  return s;
}

std::string yes(bool b) { return b ? "true" : "false"; }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
  return out;
}

void write_or_print(std::ostream& out, const std::string& path, const char* label, const Matrix& m) {
  if (!path.empty()) {
    write_matrix_file(path, m);
    return;
  }
  out << label << ":\n";
  write_matrix(out, m);
}

seqlab::SequenceModel model_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing required model ") + flag);
  return seqlab::parse_model(text);
}

std::optional<std::size_t> codim_arg(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::nullopt;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-')
    throw InputError("--codim must be a nonnegative integer or 'inf' (got '" + text + "')");
  return static_cast<std::size_t>(v);
}

// --- subcommand bodies ----------------------------------------------------

void cmd_widths(const Options& o, std::ostream& out) {
  const spectra::Ellipsoid e(read_matrix_file(o.file), o.rank_cutoff);
  const spectra::WidthSequence w = spectra::kolmogorov_widths(e);
  if (o.json) {
    emit_json(out, {{"spectrum", report::to_json(e.spectrum())}, {"widths", report::to_json(w)}});
    return;
  }
  out << "rank: " << e.rank() << '\n';
  out << "s-numbers: " << join(e.spectrum().values) << '\n';
  out << "widths: " << join(w.values) << '\n';
  if (e.rank() > 0) {
    const std::vector<double> positive(w.values.begin(), w.values.begin() + static_cast<std::ptrdiff_t>(e.rank()));
    out << "model: " << seqlab::SequenceModel::samples(positive).to_string() << '\n';
  }
}

void cmd_section(const Options& o, std::ostream& out) {
  const spectra::Ellipsoid e(read_matrix_file(o.file), o.rank_cutoff);
  const spectra::SingularSpectrum s = spectra::section_spectrum(e, read_matrix_file(o.y_file));
  if (o.json) {
    emit_json(out, {{"section_spectrum", report::to_json(s)}});
    return;
  }
  out << "rank: " << s.rank << '\n' << "s-numbers: " << join(s.values) << '\n';
}

void cmd_classify_seq(const Options& o, std::ostream& out) {
  const seqlab::LacunarityVerdict v = seqlab::is_lacunary(model_arg(o.model, "--model"), o.tau, o.window);
  if (o.json) {
    emit_json(out, report::to_json(v));
    return;
  }
  out << (v.lacunary ? "lacunary" : "not lacunary") << '\n';
  out << "witness ratio: " << format_real(v.witness_ratio) << '\n';
  out << "exact: " << yes(v.exact);
  if (!v.exact) out << " (window " << v.window << ", threshold " << format_real(v.threshold) << ")";
  out << '\n';
}

void cmd_cover_test(const Options& o, std::ostream& out) {
  const spectra::Ellipsoid e1(read_matrix_file(o.e1_file));
  const spectra::Ellipsoid e2(read_matrix_file(o.e2_file));
  const covering::CoverCertificate c = covering::covers(read_matrix_file(o.t_file), e1, e2, o.tol);
  if (o.json) {
    emit_json(out, report::to_json(c));
    return;
  }
  out << "holds: " << yes(c.holds) << '\n' << "psd_margin: " << format_real(c.psd_margin) << '\n';
}

void cmd_cover_make(const Options& o, std::ostream& out) {
  if (!o.y_file.empty() || !o.n_file.empty()) {
    if (o.e_file.empty() || o.y_file.empty() || o.n_file.empty())
      throw InputError("cover-make: a prescribed cover needs --e, --y and --n");
    const spectra::Ellipsoid e(read_matrix_file(o.e_file));
    const covering::PrescribedCover pc =
        covering::prescribed_cover(e, read_matrix_file(o.y_file), read_matrix_file(o.n_file));
    if (!o.out_d.empty()) write_matrix_file(o.out_d, pc.D);
    if (o.json) {
      emit_json(out, {{"rho", report::real(pc.rho)},
                      {"constraint_residual", report::real(pc.constraint_residual)},
                      {"certificate", report::to_json(pc.certificate)}});
      return;
    }
    out << "rho: " << format_real(pc.rho) << '\n';
    out << "constraint_residual: " << format_real(pc.constraint_residual) << '\n';
    out << "covers: " << yes(pc.certificate.holds) << '\n';
    if (o.out_d.empty()) write_or_print(out, "", "D", pc.D);
    return;
  }
  if (o.e1_file.empty() || o.e2_file.empty()) throw InputError("cover-make: need --e1 and --e2 (or --e, --y, --n)");
  const spectra::Ellipsoid e1(read_matrix_file(o.e1_file));
  const spectra::Ellipsoid e2(read_matrix_file(o.e2_file));
  const covering::SchmidtCover sc = covering::schmidt_cover(e1, e2);
  if (!o.out_d.empty()) write_matrix_file(o.out_d, sc.D);
  if (o.json) {
    emit_json(out, {{"C", report::real(sc.C)}, {"D", report::matrix(sc.D)}});
    return;
  }
  out << "C: " << format_real(sc.C) << '\n';
  if (o.out_d.empty()) write_or_print(out, "", "D", sc.D);
}

void cmd_classify(const Options& o, std::ostream& out, bool strict) {
  const seqlab::SequenceModel a = model_arg(o.a_model, "--a");
  const seqlab::SequenceModel b = model_arg(o.b_model, "--b");
  const covering::ClassificationVerdict v = strict ? covering::classify_WCG(a, b, o.k_max)
                                                   : covering::classify_WG(a, b, o.k_max);
  if (o.json) {
    emit_json(out, report::to_json(v));
    return;
  }
  out << covering::verdict_label(v) << '\n';
}

void cmd_range_equiv(const Options& o, std::ostream& out) {
  const covering::RangeEquivalence r = covering::range_equiv(read_matrix_file(o.a1_file), read_matrix_file(o.a2_file));
  if (o.json) {
    emit_json(out, report::to_json(r));
    return;
  }
  out << "same_range: " << yes(r.same_range) << '\n';
  if (r.same_range) out << "c: " << format_real(*r.c) << '\n' << "C: " << format_real(*r.C) << '\n';
}

void cmd_weakly_full(const Options& o, std::ostream& out) {
  const covering::WeakFullness w = covering::is_weakly_full(model_arg(o.model, "--model"), codim_arg(o.codim));
  if (o.json) {
    emit_json(out, report::to_json(w));
    return;
  }
  out << (w.weakly_full ? "weakly full" : "not weakly full") << " (case " << covering::case_name(w.which) << ")\n";
}

void cmd_dichotomy(const Options& o, std::ostream& out) {
  if (o.dims.empty()) throw InputError("dichotomy: --dims is required");
  const covering::DichotomyReport r =
      covering::wot_density_experiment(model_arg(o.model, "--model"), o.m, o.dims, o.seed);
  if (o.json) {
    emit_json(out, report::to_json(r));
    return;
  }
  const char* sep = o.csv ? "," : " ";
  out << "d" << sep << "rho" << sep << "constraint_residual\n";
  for (std::size_t i = 0; i < r.dims.size(); ++i)
    out << r.dims[i] << sep << format_real(r.rho[i]) << sep << format_real(r.constraint_residuals[i]) << '\n';
  if (!o.csv) out << "model_lacunary: " << yes(r.model_lacunary) << '\n';
}

void cmd_solve_xay(const Options& o, std::ostream& out) {
  const Matrix a = read_matrix_file(o.a_file);
  const Matrix b = read_matrix_file(o.b_file);
  std::optional<seqlab::SequenceModel> am, bm;
  if (!o.a_model.empty()) am = seqlab::parse_model(o.a_model);
  if (!o.b_model.empty()) bm = seqlab::parse_model(o.b_model);
  const equations::SolvabilityVerdict v = equations::xay_solvable(a, b, am, bm);
  std::optional<equations::SolutionPair> sol;
  if (v.solvable) sol = equations::solve_xay(a, b);
  if (sol) {
    if (!o.out_x.empty()) write_matrix_file(o.out_x, sol->X);
    if (!o.out_y.empty()) write_matrix_file(o.out_y, sol->Y);
  }
  if (o.json) {
    emit_json(out, {{"verdict", report::to_json(v)}, {"residual", sol ? report::real(sol->residual) : Json(nullptr)}});
    return;
  }
  out << "solvable: " << yes(v.solvable) << " (rank A = " << v.rank_A << ", rank B = " << v.rank_B << ")\n";
  if (v.asymptotic) out << "asymptotic: " << (v.asymptotic->holds ? "s_n(B) = O(s_n(A))" : "s_n(B) != O(s_n(A))") << '\n';
  if (!sol) return;
  out << "residual: " << format_real(sol->residual) << '\n';
  if (o.out_x.empty()) write_or_print(out, "", "X", sol->X);
  if (o.out_y.empty()) write_or_print(out, "", "Y", sol->Y);
}

void cmd_factor(const Options& o, std::ostream& out) {
  const Matrix b = read_matrix_file(o.b_file);
  const bool approx = !o.x0_file.empty() || !o.y0_file.empty() || !o.tests_file.empty();
  equations::SolutionPair pair;
  Json extra = Json::object();
  if (approx) {
    if (o.x0_file.empty() || o.y0_file.empty() || o.tests_file.empty())
      throw InputError("factor: approximation needs --x0, --y0 and --tests");
    const equations::ApproxFactorization af =
        equations::approx_factorization(b, read_matrix_file(o.x0_file), read_matrix_file(o.y0_file),
                                        columns(read_matrix_file(o.tests_file)), o.eps, o.seed);
    pair = af.pair;
    extra = {{"x_residual", report::real(af.x_residual)}, {"y_residual", report::real(af.y_residual)}};
  } else {
    pair = equations::factor_pair(b);
  }
  if (!o.out_x.empty()) write_matrix_file(o.out_x, pair.X);
  if (!o.out_y.empty()) write_matrix_file(o.out_y, pair.Y);
  if (o.json) {
    Json j = {{"residual", report::real(pair.residual)}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit_json(out, j);
    return;
  }
  out << "residual: " << format_real(pair.residual) << '\n';
  for (auto& [k, v] : extra.items()) out << k << ": " << v.get<std::string>() << '\n';
  if (o.out_x.empty()) write_or_print(out, "", "X", pair.X);
  if (o.out_y.empty()) write_or_print(out, "", "Y", pair.Y);
}

void cmd_match_inv(const Options& o, std::ostream& out) {
  const equations::InvertibleMatch m = equations::match_invertible(
      columns(read_matrix_file(o.xs_file)), columns(read_matrix_file(o.xs_target_file)),
      columns(read_matrix_file(o.ys_file)), columns(read_matrix_file(o.ys_target_file)), o.eps, o.seed);
  if (!o.out_v.empty()) write_matrix_file(o.out_v, m.V);
  if (o.json) {
    emit_json(out, report::to_json(m));
    return;
  }
  out << "condition: " << format_real(m.condition) << '\n';
  out << "min_singular_value: " << format_real(m.min_singular_value) << '\n';
  out << "x_residuals: " << join(m.x_residuals) << '\n';
  out << "y_residuals: " << join(m.y_residuals) << '\n';
  if (o.out_v.empty()) write_or_print(out, "", "V", m.V);
}

void cmd_expanding(const Options& o, std::ostream& out) {
  const Matrix t = read_matrix_file(o.t_file);
  const Matrix a = read_matrix_file(o.a_file);
  if (o.dual) {
    const expanding::DualCheck d = expanding::expanding_dual_check(t, a);
    if (o.json) {
      emit_json(out, report::to_json(d));
      return;
    }
    out << "agree: " << yes(d.agree) << '\n' << "expanding: " << yes(d.expanding) << '\n'
        << "transposed_cover: " << yes(d.transposed_cover) << '\n';
    return;
  }
  const expanding::ExpandVerdict v = expanding::is_expanding(t, a, o.tol);
  if (o.json) {
    emit_json(out, report::to_json(v));
    return;
  }
  out << "expanding: " << yes(v.expanding) << '\n' << "margin: " << format_real(v.margin) << '\n';
}

void cmd_classify_we(const Options& o, std::ostream& out) {
  const covering::ClassificationVerdict v = expanding::classify_WE(model_arg(o.model, "--model"), o.kernel_trivial);
  if (o.json) {
    emit_json(out, report::to_json(v));
    return;
  }
  out << covering::verdict_label(v) << '\n';
}

void cmd_rigid(const Options& o, std::ostream& out) {
  std::ifstream in(o.spec_file);
  if (!in) throw InputError(o.spec_file + ": cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(o.spec_file + ": byte " + std::to_string(e.byte) + ": invalid JSON");
  }
  const rigid::CoverSearchReport r = rigid::rigid_cover_search(report::rigid_spec_from_json(j), o.norm_bound);
  if (o.json) {
    emit_json(out, report::to_json(r));
    return;
  }
  out << "identity_only: " << yes(r.identity_only) << '\n';
  out << "admissible_maps: " << r.admissible_maps << '\n';
  out << "max_norm_bound: " << format_real(r.max_norm_bound) << '\n';
  out << "ratio_threshold: " << format_real(r.ratio_threshold) << '\n';
  out << "out_degree_min: " << (r.out_degree_min ? std::to_string(*r.out_degree_min) : "none (M empty)") << '\n';
  out << "in_degree_max: " << r.in_degree_max << '\n';
  out << "nodes_visited: " << r.nodes_visited << '\n';
}

// --- wiring ---------------------------------------------------------------

CLI::App* file_opt(CLI::App* sub, const std::string& name, std::string& target, const std::string& help, bool required) {
  auto* opt = sub->add_option(name, target, help);
  if (required) opt->required();
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"widthlab: widths, coverings and operator equations on finite-dimensional truncations", "widthlab"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::map<CLI::App*, std::function<void(std::ostream&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, std::function<void(std::ostream&)> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Emit JSON instead of text");
    handlers[sub] = std::move(body);
    return sub;
  };

  auto* widths = add("widths", "s-numbers and Kolmogorov widths of A(B)", [&](std::ostream& s) { cmd_widths(o, s); });
  widths->add_option("file", o.file, "Matrix file A")->required();
  widths->add_option("--rank-cutoff", o.rank_cutoff, "Relative rank cutoff")->capture_default_str();

  auto* section = add("section", "s-numbers of the section A(B) ∩ Y⊥", [&](std::ostream& s) { cmd_section(o, s); });
  section->add_option("file", o.file, "Matrix file A")->required();
  file_opt(section, "--y", o.y_file, "Matrix file with orthonormal columns Y", true);
  section->add_option("--rank-cutoff", o.rank_cutoff, "Relative rank cutoff")->capture_default_str();

  auto* cseq = add("classify-seq", "Lacunarity of a sequence model", [&](std::ostream& s) { cmd_classify_seq(o, s); });
  cseq->add_option("--model", o.model, "Sequence model expression")->required();
  cseq->add_option("--tau", o.tau, "Ratio threshold for sampled models")->capture_default_str();
  cseq->add_option("--window", o.window, "Terms scanned for sampled models")->capture_default_str();

  auto* ctest = add("cover-test", "Does T A1(B) contain A2(B)?", [&](std::ostream& s) { cmd_cover_test(o, s); });
  file_opt(ctest, "--t", o.t_file, "Matrix file T", true);
  file_opt(ctest, "--e1", o.e1_file, "Matrix file A1", true);
  file_opt(ctest, "--e2", o.e2_file, "Matrix file A2", true);
  ctest->add_option("--tol", o.tol, "PSD tolerance")->capture_default_str();

  auto* cmake = add("cover-make", "Minimal-norm cover of A2(B) by A1(B), or a prescribed cover",
                    [&](std::ostream& s) { cmd_cover_make(o, s); });
  file_opt(cmake, "--e1", o.e1_file, "Matrix file A1 (Schmidt cover)", false);
  file_opt(cmake, "--e2", o.e2_file, "Matrix file A2 (Schmidt cover)", false);
  file_opt(cmake, "--e", o.e_file, "Matrix file A (prescribed cover)", false);
  file_opt(cmake, "--y", o.y_file, "Orthonormal columns Y (prescribed cover)", false);
  file_opt(cmake, "--n", o.n_file, "Prescribed values N (prescribed cover)", false);
  file_opt(cmake, "--out", o.out_d, "Write D to this matrix file", false);

  auto* wg = add("classify-wg", "Closure class of G(K1, K2) from width models", [&](std::ostream& s) { cmd_classify(o, s, false); });
  auto* wcg = add("classify-wcg", "Closure class of compact covers from width models",
                  [&](std::ostream& s) { cmd_classify(o, s, true); });
  for (auto* sub : {wg, wcg}) {
    sub->add_option("--a", o.a_model, "Width model of K1")->required();
    sub->add_option("--b", o.b_model, "Width model of K2")->required();
    sub->add_option("--k-max", o.k_max, "Shift budget for sampled models")->capture_default_str();
  }

  auto* req = add("range-equiv", "Compare the operator ranges of A1 and A2", [&](std::ostream& s) { cmd_range_equiv(o, s); });
  file_opt(req, "--a1", o.a1_file, "Matrix file A1", true);
  file_opt(req, "--a2", o.a2_file, "Matrix file A2", true);

  auto* wf = add("weakly-full", "Weak fullness from a width model and closure codimension",
                 [&](std::ostream& s) { cmd_weakly_full(o, s); });
  wf->add_option("--model", o.model, "Sequence model expression")->required();
  wf->add_option("--codim", o.codim, "Codimension of the closure: integer or 'inf'")->capture_default_str();

  auto* dich = add("dichotomy", "Covering fraction rho(d) across a dimension tower", [&](std::ostream& s) { cmd_dichotomy(o, s); });
  dich->add_option("--model", o.model, "Sequence model expression")->required();
  dich->add_option("--m", o.m, "Number of prescribed directions")->capture_default_str();
  dich->add_option("--dims", o.dims, "Comma-separated dimensions")->delimiter(',')->required();
  dich->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  dich->add_flag("--csv", o.csv, "Emit CSV rows (d,rho,constraint_residual)");

  auto* sxay = add("solve-xay", "Solve X A Y = B", [&](std::ostream& s) { cmd_solve_xay(o, s); });
  file_opt(sxay, "--a", o.a_file, "Matrix file A", true);
  file_opt(sxay, "--b", o.b_file, "Matrix file B", true);
  sxay->add_option("--a-model", o.a_model, "s-number model of A");
  sxay->add_option("--b-model", o.b_model, "s-number model of B");
  file_opt(sxay, "--out-x", o.out_x, "Write X to this matrix file", false);
  file_opt(sxay, "--out-y", o.out_y, "Write Y to this matrix file", false);

  auto* fac = add("factor", "Factor B = X Y through a doubled space", [&](std::ostream& s) { cmd_factor(o, s); });
  file_opt(fac, "--b", o.b_file, "Matrix file B", true);
  file_opt(fac, "--x0", o.x0_file, "Target for X (approximation mode)", false);
  file_opt(fac, "--y0", o.y0_file, "Target for Y (approximation mode)", false);
  file_opt(fac, "--tests", o.tests_file, "Matrix whose columns are the test vectors", false);
  fac->add_option("--eps", o.eps, "Accuracy on the test vectors")->capture_default_str();
  fac->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  file_opt(fac, "--out-x", o.out_x, "Write X to this matrix file", false);
  file_opt(fac, "--out-y", o.out_y, "Write Y to this matrix file", false);

  auto* minv = add("match-inv", "Invertible V with V x_i ≈ x_i' and V^-1 y_j ≈ y_j'",
                   [&](std::ostream& s) { cmd_match_inv(o, s); });
  file_opt(minv, "--xs", o.xs_file, "Columns x_i", true);
  file_opt(minv, "--xs-target", o.xs_target_file, "Columns x_i'", true);
  file_opt(minv, "--ys", o.ys_file, "Columns y_j", true);
  file_opt(minv, "--ys-target", o.ys_target_file, "Columns y_j'", true);
  minv->add_option("--eps", o.eps, "Accuracy")->capture_default_str();
  minv->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  file_opt(minv, "--out", o.out_v, "Write V to this matrix file", false);

  auto* expd = add("expanding", "Is T A-expanding?", [&](std::ostream& s) { cmd_expanding(o, s); });
  file_opt(expd, "--t", o.t_file, "Matrix file T", true);
  file_opt(expd, "--a", o.a_file, "Matrix file A", true);
  expd->add_option("--tol", o.tol, "PSD tolerance")->capture_default_str();
  expd->add_flag("--dual", o.dual, "Cross-check against the transposed covering test");

  auto* cwe = add("classify-we", "Closure class of E(A) from the s-number model", [&](std::ostream& s) { cmd_classify_we(o, s); });
  cwe->add_option("--model", o.model, "s-number model of A")->required();
  cwe->add_flag("--kernel-trivial", o.kernel_trivial, "ker A = {0}");

  auto* rig = add("rigid", "Exhaustive cover search for the rigid point compact", [&](std::ostream& s) { cmd_rigid(o, s); });
  file_opt(rig, "--spec", o.spec_file, "JSON spec {n, alphas, betas}", true);
  rig->add_option("--norm-bound", o.norm_bound, "Bound on ||D||")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "widthlab: " << e.what() << '\n';
    return 1;
  }

  try {
    for (auto& [sub, body] : handlers)
      if (sub->parsed()) body(out);
    return 0;
  } catch (const InputError& e) {
    err << "widthlab: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "widthlab: internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace widthlab::cli
