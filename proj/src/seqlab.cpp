#include "widthlab/seqlab.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <type_traits>
#include <utility>

namespace widthlab::seqlab {

namespace {

enum class Kind { Samples, Geometric, Power, SuperGeometric };

// Every model reduces to c * f(n + shift) for one family f, or to a list of
// already shifted and scaled samples.
struct Canonical {
  Kind kind = Kind::Samples;
  double param = 0.0;
  std::size_t shift = 0;
  double log_scale = 0.0;
  std::vector<double> values;
};

Canonical canonical(const SequenceModel& m) {
  return std::visit(
      [](const auto& node) -> Canonical {
        using T = std::decay_t<decltype(node)>;
        Canonical c;
        if constexpr (std::is_same_v<T, SequenceModel::Samples>) {
          c.values = node.values;
        } else if constexpr (std::is_same_v<T, SequenceModel::Geometric>) {
          c.kind = Kind::Geometric;
          c.param = node.q;
        } else if constexpr (std::is_same_v<T, SequenceModel::Power>) {
          c.kind = Kind::Power;
          c.param = node.p;
        } else if constexpr (std::is_same_v<T, SequenceModel::SuperGeometric>) {
          c.kind = Kind::SuperGeometric;
          c.param = node.b;
        } else if constexpr (std::is_same_v<T, SequenceModel::Shifted>) {
          c = canonical(*node.inner);
          if (c.kind == Kind::Samples) {
            const std::size_t drop = std::min(node.k, c.values.size());
            c.values.erase(c.values.begin(), c.values.begin() + static_cast<std::ptrdiff_t>(drop));
          } else {
            c.shift += node.k;
          }
        } else {
          c = canonical(*node.inner);
          if (c.kind == Kind::Samples) {
            for (double& v : c.values) v *= node.c;
          } else {
            c.log_scale += std::log(node.c);
          }
        }
        return c;
      },
      m.node());
}

// log a_n for a parametric canonical form.
double log_term(const Canonical& c, double n) {
  const double m = n + static_cast<double>(c.shift);
  switch (c.kind) {
    case Kind::Geometric: return c.log_scale + m * std::log(c.param);
    case Kind::Power: return c.log_scale - c.param * std::log(m + 1.0);
    case Kind::SuperGeometric: return c.log_scale - std::log(c.param) * m * m;
    case Kind::Samples: break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool usable(double v) { return std::isfinite(v) && v >= kUnderflowFloor; }

std::size_t available(const Canonical& c, std::size_t limit) {
  std::size_t n = 0;
  if (c.kind == Kind::Samples) {
    while (n < limit && n < c.values.size() && usable(c.values[n])) ++n;
    return n;
  }
  while (n < limit && usable(std::exp(log_term(c, static_cast<double>(n))))) ++n;
  return n;
}

std::vector<double> terms(const Canonical& c, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(c.kind == Kind::Samples ? c.values[i] : std::exp(log_term(c, static_cast<double>(i))));
  return out;
}

// log-ratio g(n) = log b_n - log a_n = Q n^2 + L n + Gb ln(n + Ob) - Ga ln(n + Oa) + const
struct Coefficients {
  double quad = 0.0;
  double lin = 0.0;
  double logc = 0.0;
  double logoff = 1.0;
};

Coefficients coefficients(const Canonical& c) {
  Coefficients k;
  const double s = static_cast<double>(c.shift);
  switch (c.kind) {
    case Kind::Geometric: k.lin = std::log(c.param); break;
    case Kind::Power:
      k.logc = -c.param;
      k.logoff = s + 1.0;
      break;
    case Kind::SuperGeometric:
      k.quad = -std::log(c.param);
      k.lin = -2.0 * s * std::log(c.param);
      break;
    case Kind::Samples: break;
  }
  return k;
}

enum class Trend { ToZero, ToFinite, ToInfinity };

struct RatioAnalysis {
  Trend trend = Trend::ToInfinity;
  double log_sup = std::numeric_limits<double>::infinity();
};

int sign(double x) { return (x > 0.0) - (x < 0.0); }

std::vector<double> real_roots(const std::vector<double>& coeffs_high_to_low) {
  std::vector<double> c = coeffs_high_to_low;
  while (!c.empty() && c.front() == 0.0) c.erase(c.begin());
  const Eigen::Index deg = static_cast<Eigen::Index>(c.size()) - 1;
  if (deg < 1) return {};
  if (deg == 1) return {-c[1] / c[0]};
  Matrix companion = Matrix::Zero(deg, deg);
  for (Eigen::Index j = 0; j < deg; ++j) companion(0, j) = -c[static_cast<std::size_t>(j) + 1] / c[0];
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Matrix> es(companion, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < deg; ++i) {
    const auto z = es.eigenvalues()(i);
    if (std::abs(z.imag()) <= 1e-6 * (1.0 + std::abs(z.real()))) out.push_back(z.real());
  }
  return out;
}

RatioAnalysis analyse_ratio(const Canonical& a, const Canonical& b) {
  const Coefficients ka = coefficients(a);
  const Coefficients kb = coefficients(b);
  const double q = kb.quad - ka.quad;
  const double l = kb.lin - ka.lin;
  const double g = kb.logc - ka.logc;

  RatioAnalysis out;
  int leading = sign(q);
  if (leading == 0) leading = sign(l);
  if (leading == 0) leading = sign(g);
  if (leading > 0) return out;
  out.trend = leading < 0 ? Trend::ToZero : Trend::ToFinite;

  auto lg = [&](double n) { return log_term(b, n) - log_term(a, n); };

  // Between real roots of g' the ratio is monotone; the integer maximum sits
  // next to a root, at n = 0, or in the limit.
  const double oa = ka.logoff;
  const double ob = kb.logoff;
  const std::vector<double> poly = {
      2.0 * q,
      2.0 * q * (oa + ob) + l,
      2.0 * q * oa * ob + l * (oa + ob) + kb.logc - ka.logc,
      l * oa * ob + kb.logc * oa - ka.logc * ob,
  };
  double best = lg(0.0);
  for (double root : real_roots(poly)) {
    if (!(root > 0.0)) continue;
    const double x = std::min(root, 1e15);
    for (double n = std::max(0.0, std::floor(x) - 1.0); n <= std::ceil(x) + 1.0; n += 1.0)
      best = std::max(best, lg(n));
  }
  if (out.trend == Trend::ToFinite) {
    // Log terms cancel asymptotically (equal exponents); only constants remain.
    const double limit = lg(0.0) - (kb.logc * std::log(ob) - ka.logc * std::log(oa));
    best = std::max(best, limit);
  }
  out.log_sup = best;
  return out;
}

std::vector<double> window_ratios(const Canonical& a, const Canonical& b, std::size_t window) {
  const std::size_t w = std::min(available(a, window), available(b, window));
  if (w == 0) throw InputError("majorization: the two models share no usable terms");
  const std::vector<double> ta = terms(a, w);
  const std::vector<double> tb = terms(b, w);
  std::vector<double> r(w);
  for (std::size_t n = 0; n < w; ++n) r[n] = tb[n] / ta[n];
  return r;
}

void check_window(double tau, std::size_t window) {
  if (!(tau > 0.0 && tau < 1.0)) throw InputError("ratio threshold must lie in (0, 1)");
  if (window == 0) throw InputError("window must be at least 1");
}

MajorizationVerdict majorization(const SequenceModel& a, const SequenceModel& b, bool strict,
                                 double tau, std::size_t window) {
  check_window(tau, window);
  const Canonical ca = canonical(a);
  const Canonical cb = canonical(b);
  MajorizationVerdict v;
  if (ca.kind != Kind::Samples && cb.kind != Kind::Samples) {
    const RatioAnalysis r = analyse_ratio(ca, cb);
    v.exact = true;
    v.holds = strict ? r.trend == Trend::ToZero : r.trend != Trend::ToInfinity;
    if (r.trend != Trend::ToInfinity) v.constant = std::exp(r.log_sup);
    return v;
  }
  const std::vector<double> r = window_ratios(ca, cb, window);
  const double peak = *std::max_element(r.begin(), r.end());
  v.window = r.size();
  v.constant = peak;
  v.holds = strict ? r.back() <= tau * peak : peak <= r.front() / tau;
  return v;
}

ShiftClassification max_shift(const SequenceModel& a, const SequenceModel& b, std::size_t k_max,
                              bool strict) {
  if (!majorization(a, b, strict, kRatioThreshold, kDefaultWindow).holds)
    throw InputError(std::string("not even k=0: ") + a.to_string() +
                     (strict ? " does not strictly majorize " : " does not majorize ") + b.to_string());
  const bool sampled = !a.is_parametric() || !b.is_parametric();
  ShiftClassification out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const SequenceModel shifted = SequenceModel::shifted(k, a);
    if (sampled && available(canonical(shifted), kDefaultWindow) == 0) {
      out.exhausted_at = k - 1;
      return out;
    }
    if (!majorization(shifted, b, strict, kRatioThreshold, kDefaultWindow).holds) {
      out.k = k - 1;
      out.exhausted_at = k;
      return out;
    }
  }
  out.exhausted_at = k_max;
  return out;
}

std::optional<bool> all_shifts(const SequenceModel& a, const SequenceModel& b, bool strict) {
  const Canonical ca = canonical(a);
  const Canonical cb = canonical(b);
  if (ca.kind == Kind::Samples || cb.kind == Kind::Samples) return std::nullopt;
  // A shift changes only the linear and constant parts of log a_n; the linear
  // part moves only for super-geometric a, where it eventually wins.
  const double qa = coefficients(ca).quad;
  const double q = coefficients(cb).quad - qa;
  if (q < 0.0) return true;
  if (qa != 0.0) return false;
  return majorization(a, b, strict, kRatioThreshold, kDefaultWindow).holds;
}

std::string format_short(double x) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

void require_param(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace

SequenceModel SequenceModel::samples(std::vector<double> values) {
  require_param(!values.empty(), "samples: need at least one value");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require_param(std::isfinite(values[i]) && values[i] > 0.0,
                  "samples: value " + std::to_string(i) + " is not a finite positive number");
    require_param(values[i] >= kUnderflowFloor,
                  "samples: value " + std::to_string(i) + " underflows below 1e-300");
    require_param(i == 0 || values[i] <= values[i - 1],
                  "samples: values must be nonincreasing (index " + std::to_string(i) + ")");
  }
  return SequenceModel(Samples{std::move(values)});
}

SequenceModel SequenceModel::geometric(double q) {
  require_param(q > 0.0 && q < 1.0, "geom: q must lie in (0, 1)");
  return SequenceModel(Geometric{q});
}

SequenceModel SequenceModel::power(double p) {
  require_param(p > 0.0 && std::isfinite(p), "pow: p must be finite and > 0");
  return SequenceModel(Power{p});
}

SequenceModel SequenceModel::super_geometric(double b) {
  require_param(b > 1.0 && std::isfinite(b), "supergeom: b must be finite and > 1");
  return SequenceModel(SuperGeometric{b});
}

SequenceModel SequenceModel::shifted(std::size_t k, SequenceModel inner) {
  return SequenceModel(Shifted{k, std::make_shared<const SequenceModel>(std::move(inner))});
}

SequenceModel SequenceModel::scaled(double c, SequenceModel inner) {
  require_param(c > 0.0 && std::isfinite(c), "scale: c must be finite and > 0");
  return SequenceModel(Scaled{c, std::make_shared<const SequenceModel>(std::move(inner))});
}

bool SequenceModel::is_parametric() const { return canonical(*this).kind != Kind::Samples; }

std::string SequenceModel::to_string() const {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Samples>) {
          std::string s = "samples(";
          for (std::size_t i = 0; i < node.values.size(); ++i)
            s += (i ? ", " : "") + format_short(node.values[i]);
          return s + ")";
        } else if constexpr (std::is_same_v<T, Geometric>) {
          return "geom(" + format_short(node.q) + ")";
        } else if constexpr (std::is_same_v<T, Power>) {
          return "pow(" + format_short(node.p) + ")";
        } else if constexpr (std::is_same_v<T, SuperGeometric>) {
          return "supergeom(" + format_short(node.b) + ")";
        } else if constexpr (std::is_same_v<T, Shifted>) {
          return "shift(" + std::to_string(node.k) + ", " + node.inner->to_string() + ")";
        } else {
          return "scale(" + format_short(node.c) + ", " + node.inner->to_string() + ")";
        }
      },
      node_);
}

bool operator==(const SequenceModel& a, const SequenceModel& b) {
  const Canonical ca = canonical(a);
  const Canonical cb = canonical(b);
  if (ca.kind != cb.kind) return false;
  if (ca.kind == Kind::Samples) return ca.values == cb.values;
  return ca.param == cb.param && ca.shift == cb.shift && ca.log_scale == cb.log_scale;
}

std::vector<double> sample(const SequenceModel& model, std::size_t n) {
  if (n == 0) throw InputError("sample: n must be at least 1");
  const Canonical c = canonical(model);
  const std::size_t have = available(c, n);
  if (have < n) {
    if (c.kind == Kind::Samples && have == c.values.size())
      throw InputError("sample: " + model.to_string() + " has only " + std::to_string(have) +
                       " terms, " + std::to_string(n) + " requested");
    throw InputError("sample: term a_" + std::to_string(have) + " of " + model.to_string() +
                     " is outside [1e-300, inf)");
  }
  return terms(c, n);
}

std::size_t available_terms(const SequenceModel& model, std::size_t limit) {
  return available(canonical(model), limit);
}

LacunarityVerdict is_lacunary(const SequenceModel& model, double tau, std::size_t window) {
  check_window(tau, window);
  const Canonical c = canonical(model);
  LacunarityVerdict v;
  v.threshold = tau;
  switch (c.kind) {
    case Kind::Geometric:
      v.exact = true;
      v.witness_ratio = c.param;
      return v;
    case Kind::Power:
      v.exact = true;
      v.witness_ratio = std::pow((static_cast<double>(c.shift) + 1.0) / (static_cast<double>(c.shift) + 2.0), c.param);
      return v;
    case Kind::SuperGeometric:
      v.exact = true;
      v.lacunary = true;
      v.witness_ratio = 0.0;
      return v;
    case Kind::Samples: break;
  }
  const std::size_t w = available(c, window);
  v.window = w;
  for (std::size_t n = 0; n + 1 < w; ++n) v.witness_ratio = std::min(v.witness_ratio, c.values[n + 1] / c.values[n]);
  v.lacunary = v.witness_ratio < tau;
  return v;
}

MajorizationVerdict majorizes(const SequenceModel& a, const SequenceModel& b, double tau,
                              std::size_t window) {
  return majorization(a, b, false, tau, window);
}

MajorizationVerdict strictly_majorizes(const SequenceModel& a, const SequenceModel& b, double tau,
                                       std::size_t window) {
  return majorization(a, b, true, tau, window);
}

ShiftClassification max_majorizing_shift(const SequenceModel& a, const SequenceModel& b,
                                         std::size_t k_max) {
  return max_shift(a, b, k_max, false);
}

ShiftClassification max_strictly_majorizing_shift(const SequenceModel& a, const SequenceModel& b,
                                                  std::size_t k_max) {
  return max_shift(a, b, k_max, true);
}

std::optional<bool> all_shifts_majorize(const SequenceModel& a, const SequenceModel& b) {
  return all_shifts(a, b, false);
}

std::optional<bool> all_shifts_strictly_majorize(const SequenceModel& a, const SequenceModel& b) {
  return all_shifts(a, b, true);
}

bool equivalent(const SequenceModel& a, const SequenceModel& b) {
  return majorizes(a, b).holds && majorizes(b, a).holds;
}

}  // namespace widthlab::seqlab
