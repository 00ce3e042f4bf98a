#pragma once

#include "widthlab/matrix.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace widthlab::seqlab {

/// Ratio threshold τ of the windowed surrogates (lacunarity, growth, decay).
inline constexpr double kRatioThreshold = 1e-3;
/// Terms examined by the windowed surrogates.
inline constexpr std::size_t kDefaultWindow = 64;
/// Terms below this are refused rather than flushed to zero.
inline constexpr double kUnderflowFloor = 1e-300;

/// A positive nonincreasing sequence a_0, a_1, ...: either a finite sample or
/// a parametric family, possibly left-shifted and scaled.
class SequenceModel {
 public:
  struct Samples { std::vector<double> values; };
  struct Geometric { double q; };       // q^n, 0 < q < 1
  struct Power { double p; };           // (n+1)^-p, p > 0
  struct SuperGeometric { double b; };  // b^(-n^2), b > 1
  struct Shifted { std::size_t k; std::shared_ptr<const SequenceModel> inner; };
  struct Scaled { double c; std::shared_ptr<const SequenceModel> inner; };
  using Node = std::variant<Samples, Geometric, Power, SuperGeometric, Shifted, Scaled>;

  static SequenceModel samples(std::vector<double> values);
  static SequenceModel geometric(double q);
  static SequenceModel power(double p);
  static SequenceModel super_geometric(double b);
  static SequenceModel shifted(std::size_t k, SequenceModel inner);
  static SequenceModel scaled(double c, SequenceModel inner);

  const Node& node() const { return node_; }

  /// True when no Samples node occurs; such models get exact verdicts.
  bool is_parametric() const;

  /// Rendering in the model grammar, e.g. `shift(1, supergeom(2))`.
  std::string to_string() const;

  /// Structural equality after normalizing shifts and scales.
  friend bool operator==(const SequenceModel& a, const SequenceModel& b);

 private:
  explicit SequenceModel(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// First n terms a_0..a_{n-1}. Throws InputError if a Samples model is too
/// short or a term falls below kUnderflowFloor.
std::vector<double> sample(const SequenceModel& model, std::size_t n);

/// Number of leading terms (at most `limit`) that can be sampled.
std::size_t available_terms(const SequenceModel& model, std::size_t limit);

struct LacunarityVerdict {
  bool lacunary = false;
  double witness_ratio = 1.0;  // inf of a_{n+1}/a_n (derived or observed)
  bool exact = false;
  std::size_t window = 0;      // terms scanned; 0 for exact verdicts
  double threshold = kRatioThreshold;
};

struct MajorizationVerdict {
  bool holds = false;
  std::optional<double> constant;  // sup b_n / a_n when finite
  std::size_t window = 0;
  bool exact = false;
};

struct ShiftClassification {
  std::optional<std::size_t> k;  // largest majorizing shift; empty when exhausted
  std::size_t exhausted_at = 0;  // largest shift tested
};

LacunarityVerdict is_lacunary(const SequenceModel& model, double tau = kRatioThreshold,
                              std::size_t window = kDefaultWindow);

/// Does `a` majorize `b` (b_n <= C a_n for all n)?
///
/// Exact when both models are parametric: the log-ratio is a closed-form
/// combination of quadratic, linear and logarithmic terms and C is its
/// supremum over n >= 0. With sampled data the verdict is a windowed
/// surrogate: the ratio may grow by at most a factor 1/τ over the window.
MajorizationVerdict majorizes(const SequenceModel& a, const SequenceModel& b,
                              double tau = kRatioThreshold, std::size_t window = kDefaultWindow);

/// Does b_n / a_n -> 0? The windowed surrogate asks for the last ratio to sit
/// a factor τ below the window maximum.
MajorizationVerdict strictly_majorizes(const SequenceModel& a, const SequenceModel& b,
                                       double tau = kRatioThreshold,
                                       std::size_t window = kDefaultWindow);

/// Largest k <= k_max such that shift(k, a) majorizes b. Throws InputError
/// ("not even k=0") when a does not majorize b at all.
ShiftClassification max_majorizing_shift(const SequenceModel& a, const SequenceModel& b,
                                         std::size_t k_max);

/// As max_majorizing_shift with strict majorization.
ShiftClassification max_strictly_majorizing_shift(const SequenceModel& a, const SequenceModel& b,
                                                  std::size_t k_max);

/// Exact test (parametric a and b only) that every left shift of a
/// majorizes b; std::nullopt when either model is sampled.
std::optional<bool> all_shifts_majorize(const SequenceModel& a, const SequenceModel& b);
std::optional<bool> all_shifts_strictly_majorize(const SequenceModel& a, const SequenceModel& b);

/// Each of a, b majorizes the other.
bool equivalent(const SequenceModel& a, const SequenceModel& b);

// ---------------------------------------------------------------------------
// Grammar: geom(q) pow(p) supergeom(b) shift(k, M) scale(c, M)
//          samples(v1, v2, ...) spectrum(file.mat)

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a model expression; whitespace-insensitive. `spectrum(path)` loads a
/// matrix file and uses its nonzero singular values as Samples.
SequenceModel parse_model(std::string_view text);

}  // namespace widthlab::seqlab
