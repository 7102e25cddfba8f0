#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oht/complex.hpp"

namespace oht {

/// Complex evaluator for an oscilland on the closed first quadrant.
using Evaluator = std::function<Complex(Complex)>;
/// Extended-precision counterpart, used only by precision studies.
using EvaluatorL = std::function<ComplexL(ComplexL)>;

struct OscillandOptions {
  /// z^alpha f(z) evaluated without forming z^{-alpha}; optional.
  Evaluator f_alpha;
  /// Long-double z^alpha f(z); optional.
  EvaluatorL f_alpha_ext;
  /// Exponential growth rate d in |f(z)| <= M |z|^delta e^{d Im z}.
  std::optional<double> growth_d;
  std::string x_domain_note;
};

/// The function f in H+(f e^{i w t})(x), with its algebraic behaviour at the
/// origin: f(t) ~ sum_j a_j t^{j - alpha} as t -> 0+.
///
/// Immutable after construction.
class OscillandSpec {
 public:
  OscillandSpec(std::string label, double alpha, std::vector<double> series,
                Evaluator f, OscillandOptions options = {});

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] const std::vector<double>& series() const noexcept { return series_; }
  [[nodiscard]] std::optional<double> growth_d() const noexcept { return growth_d_; }
  [[nodiscard]] const std::string& x_domain_note() const noexcept { return note_; }

  /// f(z). For alpha > 0 the caller must not pass z = 0.
  [[nodiscard]] Complex f(Complex z) const;
  /// f_alpha(z) = z^alpha f(z) (principal branch); equals a_0 at z = 0.
  [[nodiscard]] Complex f_alpha(Complex z) const;

  [[nodiscard]] bool has_extended() const noexcept { return static_cast<bool>(f_alpha_ext_); }
  [[nodiscard]] ComplexL f_alpha_ext(ComplexL z) const;
  [[nodiscard]] ComplexL f_ext(ComplexL z) const;

 private:
  std::string label_;
  double alpha_;
  std::vector<double> series_;
  Evaluator f_;
  Evaluator f_alpha_;
  EvaluatorL f_alpha_ext_;
  std::optional<double> growth_d_;
  std::string note_;
};

/// Number of origin-series coefficients carried by the built-in oscillands.
inline constexpr int kDefaultSeriesLength = 20;

/// Built-in oscillands: "one", "exp:<c>", "sqrt_over_1p", "cos_over_cbrt".
[[nodiscard]] OscillandSpec registry_get(std::string_view label);
[[nodiscard]] std::vector<std::string> registry_labels();

enum class Regime { Away, Near, Origin };

[[nodiscard]] std::string_view to_string(Regime r) noexcept;

inline constexpr double kDefaultXSplit = 0.5;

/// Origin for x = 0, Near for 0 < x < x_split, Away otherwise.
[[nodiscard]] Regime classify(double x, double x_split = kDefaultXSplit);

struct ResultParams {
  int n = 0;
  int N = 0;
  double a = 0.0;
  double x_split = kDefaultXSplit;
  int N1 = 0;
};

struct HilbertResult {
  Complex value;
  Regime regime = Regime::Away;
  ResultParams params;
  double err_estimate = 0.0;
  std::vector<std::string> notes;
};

/// Outcome of the numeric series-consistency check of an oscilland.
struct SeriesConsistency {
  bool leading_ok = false;  // t^alpha f(t) -> a_0 monotonically
  bool slopes_ok = false;   // partial-sum residuals shrink at least like t^{J+1}
  std::vector<double> slopes;
  [[nodiscard]] bool ok() const noexcept { return leading_ok && slopes_ok; }
};

[[nodiscard]] SeriesConsistency check_series_consistency(const OscillandSpec& spec);

}  // namespace oht
