#include "oht/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <functional>
#include <limits>

#include "oht/error.hpp"
#include "oht/specfun.hpp"

namespace oht {

namespace {

using Fn = std::function<Complex(double)>;

constexpr Complex kI{0.0, 1.0};
constexpr double kTol = 1e-13;
constexpr unsigned kDepth = 12;
constexpr int kTailBlocks = 48;

struct Piece {
  Complex value;
  double err = 0.0;
};

template <unsigned Points = 31>
Piece gk(const Fn& f, double a, double b) {
  Piece p;
  p.value = boost::math::quadrature::gauss_kronrod<double, Points>::integrate(f, a, b, kDepth, kTol,
                                                                              &p.err);
  if (!is_finite(p.value)) throw OracleError("oracle: non-finite quadrature value");
  return p;
}

void check_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be > 0");
}

void check_converged(const OracleValue& v, const char* who) {
  if (!(v.est_err <= 1e-8 * std::max(1.0, std::abs(v.value)))) {
    throw OracleError(std::string(who) + ": no convergence (est_err " + std::to_string(v.est_err) + ")");
  }
}

/// int_0^b h(t) dt for h ~ t^{-alpha} (possibly times log t) at 0, via t = b u^q.
Piece singular_start(const Fn& h, double b, double alpha) {
  const double q = 2.0 / (1.0 - alpha);
  return gk([&](double u) {
    if (u <= 0.0) return Complex{};
    return h(b * std::pow(u, q)) * (b * q * std::pow(u, q - 1.0));
  }, 0.0, 1.0);
}

/// int_{t0}^inf h(t) dt in blocks of length `block`, Wynn-accelerated.
OracleValue block_tail(const Fn& h, double t0, double block) {
  std::vector<Complex> sums;
  sums.reserve(kTailBlocks);
  CompensatedSum<Complex> acc;
  double quad_err = 0.0;
  for (int k = 0; k < kTailBlocks; ++k) {
    const Piece p = gk(h, t0 + k * block, t0 + (k + 1) * block);
    acc.add(p.value);
    quad_err += p.err;
    sums.push_back(acc.value());
  }
  OracleValue v = wynn_epsilon(sums);
  v.est_err += quad_err;
  return v;
}

/// Principal value of int_0^inf g(t) / (t - x) dt.
OracleValue cpv_generic(const Fn& g, double x, double omega, double alpha) {
  const Piece head = singular_start([&](double t) { return g(t) / (t - x); }, 0.5 * x, alpha);

  const double log_hi = std::log(0.5 * x);
  auto middle = [&](double eps) {
    return gk([&](double u) {
      const double r = std::exp(u);
      return g(x + r) - g(x - r);
    }, std::log(eps), log_hi);
  };
  const double s = std::min({1.0, x, 1.0 / omega});
  const Piece m1 = middle(1e-2 * s);
  const Piece m2 = middle(1e-3 * s);
  const Piece m3 = middle(1e-4 * s);
  // The excised piece is 2 g'(x) eps + g'''(x) eps^3 / 9 + O(eps^5).
  const Complex r1a = (10.0 * m2.value - m1.value) / 9.0;
  const Complex r1b = (10.0 * m3.value - m2.value) / 9.0;
  const Complex r2 = (1000.0 * r1b - r1a) / 999.0;

  const OracleValue tail = block_tail([&](double t) { return g(t) / (t - x); }, 1.5 * x, kPi / omega);

  OracleValue v;
  v.method = OracleMethod::DirectCPV;
  v.value = head.value + r2 + tail.value;
  v.est_err = head.err + std::abs(r2 - r1b) + m1.err + m2.err + m3.err + tail.est_err;
  return v;
}

}  // namespace

OracleValue wynn_epsilon(const std::vector<Complex>& s) {
  if (s.empty()) throw OracleError("wynn_epsilon: empty sequence");
  OracleValue best;
  best.method = OracleMethod::DirectCPV;
  best.value = s.back();
  best.est_err = s.size() > 1 ? std::abs(s.back() - s[s.size() - 2]) : 0.0;
  if (best.est_err == 0.0) return best;

  std::vector<Complex> prev(s.size() + 1, Complex{});  // column -1
  std::vector<Complex> cur(s.begin(), s.end());       // column 0
  for (int col = 1; cur.size() > 1; ++col) {
    std::vector<Complex> next(cur.size() - 1);
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      const Complex d = cur[k + 1] - cur[k];
      if (std::abs(d) == 0.0) return best;
      next[k] = prev[k + 1] + 1.0 / d;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0 && cur.size() >= 2) {
      const double diff = std::abs(cur.back() - cur[cur.size() - 2]);
      if (diff < best.est_err) {
        best.value = cur.back();
        best.est_err = diff;
      }
    }
  }
  return best;
}

OracleValue oracle_rotated(const OscillandSpec& spec, double omega, double x) {
  check_omega(omega);
  if (!(x > 0.0)) throw DomainError("oracle_rotated: x must be > 0");
  const double d = spec.growth_d().value_or(0.0);
  if (!(omega > d)) throw OracleError("oracle_rotated: omega must exceed the growth rate d");
  const double alpha = spec.alpha();
  const double w_eff = omega - d;
  const Complex phase = expi(-0.5 * kPi * alpha);

  const Complex pole = kI * kPi * expi(omega * x) * spec.f(Complex{x});
  auto integrand = [&](double p) {
    return std::exp(-omega * p) * phase * std::pow(p, -alpha) * spec.f_alpha(Complex(0.0, p)) /
           Complex(p, x);
  };

  const double p1 = std::min(x, 1.0 / w_eff);
  const double p_max = 45.0 / w_eff;
  // p = p1 u^{1/(1-alpha)} absorbs p^{-alpha} on the first panel.
  const double e = 1.0 / (1.0 - alpha);
  const double jac = std::pow(p1, 1.0 - alpha) * e;
  const Fn first = [&](double u) {
    const double p = p1 * std::pow(u, e);
    return std::exp(-omega * p) * phase * spec.f_alpha(Complex(0.0, p)) / Complex(p, x) * jac;
  };

  auto run = [&](auto tag) {
    constexpr unsigned pts = decltype(tag)::value;
    Piece total = gk<pts>(first, 0.0, 1.0);
    for (double lo = p1; lo < p_max; lo *= 2.0) {
      const Piece p = gk<pts>(integrand, lo, 2.0 * lo);
      total.value += p.value;
      total.err += p.err;
    }
    return total;
  };
  const Piece fine = run(std::integral_constant<unsigned, 61>{});
  const Piece coarse = run(std::integral_constant<unsigned, 31>{});

  double hi = p1;
  while (hi < p_max) hi *= 2.0;
  OracleValue v;
  v.method = OracleMethod::RotatedContour;
  v.value = pole + fine.value;
  v.est_err = fine.err + std::abs(fine.value - coarse.value) + std::abs(integrand(hi)) / w_eff;
  check_converged(v, "oracle_rotated");
  return v;
}

OracleValue oracle_cpv_direct(const OscillandSpec& spec, double omega, double x) {
  check_omega(omega);
  if (!(x > 0.0)) throw DomainError("oracle_cpv_direct: x must be > 0");
  if (omega > 50.0) throw ParamError("oracle_cpv_direct: omega must be <= 50");
  const Fn g = [&](double t) { return expi(omega * t) * spec.f(Complex{t}); };
  OracleValue v = cpv_generic(g, x, omega, spec.alpha());
  check_converged(v, "oracle_cpv_direct");
  return v;
}

OracleValue closed_form_exp(double c, double omega, double x) {
  check_omega(omega);
  if (!(x > 0.0)) throw DomainError("closed_form_exp: x must be > 0");
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("closed_form_exp: c must be >= 0");
  if (c * x > 30.0) throw ParamError("closed_form_exp: c x too large for the series");

  OracleValue v;
  v.method = OracleMethod::ClosedForm;
  const Complex wx(0.0, omega * x);
  if (c == 0.0) {
    v.value = expi(omega * x) * (kI * kPi + expint_e1(wx));
    return v;
  }

  using LD = long double;
  const LD C = c, W = omega, X = x;
  const LD phase = W * X;
  const LD half_pi = std::acos(LD(-1)) / 2;
  // S1 = sum_l c^{2l+1}/(2l+1)! sum_{k<=2l} k! C(2l,k) x^{2l-k} w^{-k-1} sin(wx + k pi/2)
  //    = sum_l c^{2l+1}/(2l+1) sum_k x^{2l-k} / ((2l-k)! w^{k+1}) sin(...);
  // S2 likewise with 2l+1, 2l+2 and cos.
  auto inner = [&](int m, bool use_sin) {
    // sum_{k=0}^{m} x^{m-k} / ((m-k)! w^{k+1}) trig(wx + k pi/2)
    LD sum = 0, mag = 0;
    LD xf = 1;  // x^{m-k}/(m-k)! for k = m
    for (int k = m; k >= 0; --k) {
      const LD t = xf / std::pow(W, LD(k + 1));
      const LD arg = phase + k * half_pi;
      sum += t * (use_sin ? std::sin(arg) : std::cos(arg));
      mag += t;
      xf *= X / LD(m - k + 1);
    }
    return std::pair<LD, LD>{sum, mag};
  };
  LD s1 = 0, s2 = 0;
  LD cp = C;  // c^{2l+1}
  for (int l = 0;; ++l) {
    const auto [a, amag] = inner(2 * l, true);
    const auto [b, bmag] = inner(2 * l + 1, false);
    const LD t1 = cp / (2 * l + 1) * a;
    const LD t2 = cp * C / (2 * l + 2) * b;
    s1 += t1;
    s2 += t2;
    const LD bound = cp / (2 * l + 1) * amag + cp * C / (2 * l + 2) * bmag;
    if (bound < 1e-18L * (1 + std::abs(s1) + std::abs(s2)) && l > 0) break;
    if (l > 400) throw ParamError("closed_form_exp: series did not converge");
    cp *= C * C;
  }
  const Complex e1 = expint_e1(Complex(c * x, -omega * x));
  const SiCi sc = sine_cosine_integrals(omega * x);
  const Complex bracket = e1 - 2.0 * static_cast<double>(s1) +
                          kI * (2.0 * sc.si - 2.0 * static_cast<double>(s2));
  v.value = std::exp(Complex(-c * x, omega * x)) * bracket;
  v.est_err = 1e-15 * std::abs(bracket);
  return v;
}

OracleValue oracle_hadamard(const OscillandSpec& spec, double omega) {
  check_omega(omega);
  const auto& a = spec.series();
  if (a.empty()) throw ParamError("oracle_hadamard: spec has no series coefficients");
  const double alpha = spec.alpha();

  OracleValue v;
  v.method = OracleMethod::Hadamard;
  // Finite part of int_0^inf t^{-alpha-1} e^{iwt} dt.
  Complex lead;
  if (alpha == 0.0) {
    lead = Complex(-kEulerGamma - std::log(omega), 0.5 * kPi);
  } else {
    lead = boost::math::tgamma(-alpha) * std::pow(Complex(0.0, -omega), alpha);
  }
  lead *= a[0];

  const double t0 = std::min(0.1, kPi / omega);
  // (f(t) - a_0 t^{-alpha}) / t from the series near 0 and from f beyond.
  const Fn near = [&](double t) {
    Complex s{};
    double tp = std::pow(t, -alpha);
    for (std::size_t j = 1; j < a.size(); ++j) {
      s += a[j] * tp;
      tp *= t;
    }
    return expi(omega * t) * s;
  };
  const Fn far = [&](double t) {
    return expi(omega * t) * (spec.f(Complex{t}) - a[0] * std::pow(t, -alpha)) / t;
  };
  const Piece head = singular_start(near, t0, alpha);
  const OracleValue tail = block_tail(far, t0, kPi / omega);

  v.value = lead + head.value + tail.value;
  const double trunc = std::abs(a.back()) * std::pow(t0, static_cast<double>(a.size()) - 1.0 - alpha) * t0;
  v.est_err = head.err + tail.est_err + trunc;
  check_converged(v, "oracle_hadamard");
  return v;
}

OracleValue oracle_bessel_cpv(const OscillandSpec& spec, double omega, double x, BesselKind bk) {
  check_omega(omega);
  if (!(x > 0.0)) throw DomainError("oracle_bessel_cpv: x must be > 0");
  if (bk.nu != 0 && bk.nu != 1) throw ParamError("oracle_bessel_cpv: nu must be 0 or 1");
  const double a0 = spec.series().empty() ? 1.0 : spec.series().front();
  if (bk.kind == BesselType::Y && bk.nu == 1 && a0 != 0.0) {
    throw OracleError("oracle_bessel_cpv: Y_1 kernel is not integrable at 0 for this oscilland");
  }
  const Fn g = [&](double t) {
    const BesselJYK b = bessel_jyk(bk.nu, omega * t);
    return spec.f(Complex{t}) * (bk.kind == BesselType::J ? b.j : b.y);
  };
  OracleValue v = cpv_generic(g, x, omega, spec.alpha());
  check_converged(v, "oracle_bessel_cpv");
  return v;
}

}  // namespace oht
