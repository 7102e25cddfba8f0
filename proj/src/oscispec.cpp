#include "oht/oscispec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "oht/error.hpp"

namespace oht {

OscillandSpec::OscillandSpec(std::string label, double alpha, std::vector<double> series,
                             Evaluator f, OscillandOptions options)
    : label_(std::move(label)),
      alpha_(alpha),
      series_(std::move(series)),
      f_(std::move(f)),
      f_alpha_(std::move(options.f_alpha)),
      f_alpha_ext_(std::move(options.f_alpha_ext)),
      growth_d_(options.growth_d),
      note_(std::move(options.x_domain_note)) {
  if (!(alpha_ >= 0.0 && alpha_ < 1.0)) {
    throw DomainError("oscilland '" + label_ + "': alpha must lie in [0,1)");
  }
  if (!f_) throw ParamError("oscilland '" + label_ + "': missing evaluator");
  if (growth_d_ && !(*growth_d_ >= 0.0)) {
    throw DomainError("oscilland '" + label_ + "': growth constant d must be >= 0");
  }
}

Complex OscillandSpec::f(Complex z) const {
  if (alpha_ > 0.0 && z == Complex{}) {
    throw DomainError("oscilland '" + label_ + "': f(0) undefined for alpha > 0");
  }
  return f_(z);
}

Complex OscillandSpec::f_alpha(Complex z) const {
  if (z == Complex{}) return series_.empty() ? f_(z) : Complex{series_.front()};
  if (f_alpha_) return f_alpha_(z);
  if (alpha_ == 0.0) return f_(z);
  return std::pow(z, alpha_) * f_(z);
}

ComplexL OscillandSpec::f_alpha_ext(ComplexL z) const {
  if (!f_alpha_ext_) throw ParamError("oscilland '" + label_ + "' has no extended evaluator");
  return f_alpha_ext_(z);
}

ComplexL OscillandSpec::f_ext(ComplexL z) const {
  const ComplexL fa = f_alpha_ext(z);
  if (alpha_ == 0.0) return fa;
  return fa * std::pow(z, -static_cast<long double>(alpha_));
}

namespace {

std::vector<double> exp_series(double c) {
  std::vector<double> a(kDefaultSeriesLength);
  double term = 1.0;
  for (int j = 0; j < kDefaultSeriesLength; ++j) {
    a[j] = term;
    term *= -c / (j + 1);
  }
  return a;
}

OscillandSpec make_one() {
  std::vector<double> a(kDefaultSeriesLength, 0.0);
  a[0] = 1.0;
  OscillandOptions opt;
  opt.f_alpha_ext = [](ComplexL) { return ComplexL{1.0L}; };
  opt.growth_d = 0.0;
  opt.x_domain_note = "entire; any x >= 0";
  return {"one", 0.0, std::move(a), [](Complex) { return Complex{1.0}; }, std::move(opt)};
}

OscillandSpec make_exp(double c, std::string label) {
  OscillandOptions opt;
  opt.f_alpha_ext = [c](ComplexL z) { return std::exp(-static_cast<long double>(c) * z); };
  opt.growth_d = 0.0;
  opt.x_domain_note = "entire; |f| = 1 on the imaginary axis";
  return {std::move(label), 0.0, exp_series(c), [c](Complex z) { return std::exp(-c * z); },
          std::move(opt)};
}

OscillandSpec make_sqrt_over_1p() {
  std::vector<double> a(kDefaultSeriesLength);
  a[0] = 0.0;
  for (int j = 1; j < kDefaultSeriesLength; ++j) a[j] = (j % 2 == 1) ? 1.0 : -1.0;
  OscillandOptions opt;
  opt.f_alpha = [](Complex z) { return z / (1.0 + z); };
  opt.f_alpha_ext = [](ComplexL z) { return z / (1.0L + z); };
  opt.growth_d = 0.0;
  opt.x_domain_note = "branch point at 0, pole at -1";
  return {"sqrt_over_1p", 0.5, std::move(a),
          [](Complex z) { return std::sqrt(z) / (1.0 + z); }, std::move(opt)};
}

OscillandSpec make_cos_over_cbrt() {
  std::vector<double> a(kDefaultSeriesLength, 0.0);
  double term = 1.0;
  for (int j = 0; j < kDefaultSeriesLength; j += 2) {
    a[j] = term;
    term *= -1.0 / ((j + 1.0) * (j + 2.0));
  }
  OscillandOptions opt;
  opt.f_alpha = [](Complex z) { return std::cos(z); };
  opt.f_alpha_ext = [](ComplexL z) { return std::cos(z); };
  opt.growth_d = 1.0;
  opt.x_domain_note = "grows like e^{Im z}; requires omega > 1";
  return {"cos_over_cbrt", 1.0 / 3.0, std::move(a),
          [](Complex z) { return std::cos(z) * std::pow(z, -1.0 / 3.0); }, std::move(opt)};
}

}  // namespace

OscillandSpec registry_get(std::string_view label) {
  if (label == "one") return make_one();
  if (label == "sqrt_over_1p") return make_sqrt_over_1p();
  if (label == "cos_over_cbrt") return make_cos_over_cbrt();
  if (label.starts_with("exp:")) {
    const std::string_view num = label.substr(4);
    double c = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), c);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty()) {
      throw NotRegistered("unknown oscilland '" + std::string(label) + "'");
    }
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw DomainError("exp:<c> requires a finite c >= 0");
    }
    return make_exp(c, std::string(label));
  }
  throw NotRegistered("unknown oscilland '" + std::string(label) + "'");
}

std::vector<std::string> registry_labels() {
  return {"one", "exp:1", "sqrt_over_1p", "cos_over_cbrt"};
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Away: return "away";
    case Regime::Near: return "near";
    case Regime::Origin: return "origin";
  }
  return "?";
}

Regime classify(double x, double x_split) {
  if (!(x >= 0.0)) throw DomainError("classify: x must be >= 0");
  if (!(x_split > 0.0)) throw DomainError("classify: x_split must be > 0");
  if (x == 0.0) return Regime::Origin;
  if (x < x_split) return Regime::Near;
  return Regime::Away;
}

SeriesConsistency check_series_consistency(const OscillandSpec& spec) {
  SeriesConsistency out;
  const auto& a = spec.series();
  if (a.empty()) return out;

  // t^alpha f(t) through the plain evaluator, so the check exercises f itself.
  auto scaled = [&](double t) {
    return std::pow(t, spec.alpha()) * spec.f(Complex{t}).real();
  };

  const double scale = std::max(1.0, std::abs(a[0]));
  double prev = INFINITY;
  out.leading_ok = true;
  for (double t : {1e-3, 1e-4, 1e-5}) {
    const double d = std::abs(scaled(t) - a[0]);
    if (d > 1e-3 * scale || d > prev + 1e-15) out.leading_ok = false;
    prev = d;
  }

  out.slopes_ok = true;
  const std::size_t jmax = std::min<std::size_t>(3, a.size());
  for (std::size_t J = 0; J < jmax; ++J) {
    auto residual = [&](double t) {
      double s = 0.0;
      double tp = 1.0;
      for (std::size_t j = 0; j <= J; ++j) {
        s += a[j] * tp;
        tp *= t;
      }
      return std::abs(scaled(t) - s);
    };
    const double r1 = residual(0.1);
    const double r2 = residual(0.05);
    if (r1 < 1e-12) {
      out.slopes.push_back(INFINITY);
      continue;
    }
    const double slope = std::log(r1 / r2) / std::log(2.0);
    out.slopes.push_back(slope);
    if (slope < static_cast<double>(J + 1) - 0.25) out.slopes_ok = false;
  }
  return out;
}

}  // namespace oht
