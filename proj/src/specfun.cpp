#include "haarhankel/specfun.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>

#include "haarhankel/errors.hpp"
#include "haarhankel/quadrature.hpp"

// The J0/J1 rational approximations and the Hankel-asymptotic P/Q rationals
// are the minimax sets of Boost.Math (Xiaogang Zhang, 2006; Boost Software
// License 1.0), after Hart, "Computer Approximations" (1968).

namespace haarhankel::specfun {
namespace {

constexpr double kPi = std::numbers::pi;

// Coefficients in ascending powers.
template <std::size_t N>
double evaluate_rational(const double (&num)[N], const double (&den)[N], double y) {
  double p = num[N - 1];
  double q = den[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) {
    p = p * y + num[i];
    q = q * y + den[i];
  }
  return p / q;
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(name) + ": argument must be finite");
  }
}

void require_nonnegative(double x, const char* name) {
  if (std::isnan(x) || x < 0.0 || std::isinf(x)) {
    throw DomainError(std::string(name) + ": argument must be finite and >= 0, got " +
                      std::to_string(x));
  }
}

namespace j0c {
constexpr double P1[] = {-4.1298668500990866786e+11, 2.7282507878605942706e+10,
                         -6.2140700423540120665e+08, 6.6302997904833794242e+06,
                         -3.6629814655107086448e+04, 1.0344222815443188943e+02,
                         -1.2117036164593528341e-01};
constexpr double Q1[] = {2.3883787996332290397e+12, 2.6328198300859648632e+10,
                         1.3985097372263433271e+08, 4.5612696224219938200e+05,
                         9.3614022392337710626e+02, 1.0, 0.0};
constexpr double P2[] = {-1.8319397969392084011e+03, -1.2254078161378989535e+04,
                         -7.2879702464464618998e+03, 1.0341910641583726701e+04,
                         1.1725046279757103576e+04, 4.4176707025325087628e+03,
                         7.4321196680624245801e+02, 4.8591703355916499363e+01};
constexpr double Q2[] = {-3.5783478026152301072e+05, 2.4599102262586308984e+05,
                         -8.4055062591169562211e+04, 1.8680990008359188352e+04,
                         -2.9458766545509337327e+03, 3.3307310774649071172e+02,
                         -2.5258076240801555057e+01, 1.0};
constexpr double PC[] = {2.2779090197304684302e+04, 4.1345386639580765797e+04,
                         2.1170523380864944322e+04, 3.4806486443249270347e+03,
                         1.5376201909008354296e+02, 8.8961548424210455236e-01};
constexpr double QC[] = {2.2779090197304684318e+04, 4.1370412495510416640e+04,
                         2.1215350561880115730e+04, 3.5028735138235608207e+03,
                         1.5711159858080893649e+02, 1.0};
constexpr double PS[] = {-8.9226600200800094098e+01, -1.8591953644342993800e+02,
                         -1.1183429920482737611e+02, -2.2300261666214198472e+01,
                         -1.2441026745835638459e+00, -8.8033303048680751817e-03};
constexpr double QS[] = {5.7105024128512061905e+03, 1.1951131543434613647e+04,
                         7.2642780169211018836e+03, 1.4887231232283756582e+03,
                         9.0593769594993125859e+01, 1.0};
constexpr double x1 = 2.4048255576957727686e+00;
constexpr double x2 = 5.5200781102863106496e+00;
constexpr double x11 = 6.160e+02;
constexpr double x12 = -1.42444230422723137837e-03;
constexpr double x21 = 1.4130e+03;
constexpr double x22 = 5.46860286310649596604e-04;
}  // namespace j0c

namespace j1c {
constexpr double P1[] = {-1.4258509801366645672e+11, 6.6781041261492395835e+09,
                         -1.1548696764841276794e+08, 9.8062904098958257677e+05,
                         -4.4615792982775076130e+03, 1.0650724020080236441e+01,
                         -1.0767857011487300348e-02};
constexpr double Q1[] = {4.1868604460820175290e+12, 4.2091902282580133541e+10,
                         2.0228375140097033958e+08, 5.9117614494174794095e+05,
                         1.0742272239517380498e+03, 1.0, 0.0};
constexpr double P2[] = {-1.7527881995806511112e+16, 1.6608531731299018674e+15,
                         -3.6658018905416665164e+13, 3.5580665670910619166e+11,
                         -1.8113931269860667829e+09, 5.0793266148011179143e+06,
                         -7.5023342220781607561e+03, 4.6179191852758252278e+00};
constexpr double Q2[] = {1.7253905888447681194e+18, 1.7128800897135812012e+16,
                         8.4899346165481429307e+13, 2.7622777286244082666e+11,
                         6.4872502899596389593e+08, 1.1267125065029138050e+06,
                         1.3886978985861357615e+03, 1.0};
constexpr double PC[] = {-4.4357578167941278571e+06, -9.9422465050776411957e+06,
                         -6.6033732483649391093e+06, -1.5235293511811373833e+06,
                         -1.0982405543459346727e+05, -1.6116166443246101165e+03, 0.0};
constexpr double QC[] = {-4.4357578167941278568e+06, -9.9341243899345856590e+06,
                         -6.5853394797230870728e+06, -1.5118095066341608816e+06,
                         -1.0726385991103820119e+05, -1.4550094401904961825e+03, 1.0};
constexpr double PS[] = {3.3220913409857223519e+04, 8.5145160675335701966e+04,
                         6.6178836581270835179e+04, 1.8494262873223866797e+04,
                         1.7063754290207680021e+03, 3.5265133846636032186e+01, 0.0};
constexpr double QS[] = {7.0871281941028743574e+05, 1.8194580422439972989e+06,
                         1.4194606696037208929e+06, 4.0029443582266975117e+05,
                         3.7890229745772202641e+04, 8.6383677696049909675e+02, 1.0};
constexpr double x1 = 3.8317059702075123156e+00;
constexpr double x2 = 7.0155866698156187535e+00;
constexpr double x11 = 9.810e+02;
constexpr double x12 = -3.2527979248768438556e-04;
constexpr double x21 = 1.7960e+03;
constexpr double x22 = -3.8330184381246462950e-05;
}  // namespace j1c

// Amplitude/phase pieces of the Hankel expansion for w > 8:
//   J0 = f (rc (cos w + sin w) - y rs (sin w - cos w))
//   Y0 = f (rc (sin w - cos w) + y rs (cos w + sin w)),  f = 1/sqrt(pi w), y = 8/w
struct HankelParts {
  double factor;
  double rc;
  double yrs;
  double s;
  double c;
};

HankelParts hankel_parts_order0(double w) {
  const double y = 8.0 / w;
  const double y2 = y * y;
  return {1.0 / std::sqrt(kPi * w), evaluate_rational(j0c::PC, j0c::QC, y2),
          y * evaluate_rational(j0c::PS, j0c::QS, y2), std::sin(w), std::cos(w)};
}

HankelParts hankel_parts_order1(double w) {
  const double y = 8.0 / w;
  const double y2 = y * y;
  return {1.0 / std::sqrt(kPi * w), evaluate_rational(j1c::PC, j1c::QC, y2),
          y * evaluate_rational(j1c::PS, j1c::QS, y2), std::sin(w), std::cos(w)};
}

constexpr double kStruveSeriesLimit = 8.0;
constexpr double kStruveAsymptoticStart = 35.0;
constexpr std::size_t kStruveQuadratureNodes = 64;

}  // namespace

namespace detail {

double bessel_y0_large(double w) {
  const auto h = hankel_parts_order0(w);
  return h.factor * (h.rc * (h.s - h.c) + h.yrs * (h.c + h.s));
}

double bessel_y1_large(double w) {
  const auto h = hankel_parts_order1(w);
  return h.factor * (-h.rc * (h.s + h.c) + h.yrs * (h.s - h.c));
}

// H0 = sum_k (-1)^k (x/2)^(2k+1) / Gamma(k+3/2)^2
double struve_h0_series(double x) {
  const double z = 0.5 * x;
  const double z2 = z * z;
  double term = z / (0.25 * kPi);  // Gamma(3/2)^2 = pi/4
  double sum = term;
  for (int k = 0; k < 200; ++k) {
    const double a = k + 1.5;
    term *= -z2 / (a * a);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

// H1 = sum_k (-1)^k (x/2)^(2k+2) / (Gamma(k+3/2) Gamma(k+5/2))
double struve_h1_series(double x) {
  const double z = 0.5 * x;
  const double z2 = z * z;
  double term = z2 / (0.375 * kPi);  // Gamma(3/2) Gamma(5/2) = 3 pi / 8
  double sum = term;
  for (int k = 0; k < 200; ++k) {
    term *= -z2 / ((k + 1.5) * (k + 2.5));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

// int_0^{pi/2} sin(x cos t) sin(t)^(2 nu) dt by Gauss-Legendre.
double struve_integral(double x, int nu) {
  const auto rule = quadrature::gauss_legendre(kStruveQuadratureNodes);
  const double half = 0.25 * kPi;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = half + half * rule.nodes[i];
    double v = std::sin(x * std::cos(t));
    if (nu == 1) {
      const double s = std::sin(t);
      v *= s * s;
    }
    sum += rule.weights[i] * v;
  }
  return half * sum;
}

// H_nu - Y_nu ~ (1/pi) sum_k Gamma(k+1/2) (x/2)^(nu-2k-1) / Gamma(nu+1/2-k)
double struve_minus_neumann_asymptotic(double x, int nu) {
  const double q = 4.0 / (x * x);
  // k = 0 term: Gamma(1/2) (x/2)^(nu-1) / Gamma(nu+1/2) / pi
  double term = nu == 0 ? 2.0 / (kPi * x) : 2.0 / kPi;
  double sum = term;
  double previous = std::abs(term);
  for (int k = 0; k < 100; ++k) {
    const double next = term * (k + 0.5) * (nu - 0.5 - k) * q;
    if (std::abs(next) >= previous) {
      break;  // divergent tail
    }
    term = next;
    sum += term;
    previous = std::abs(term);
    if (previous <= 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

}  // namespace detail

double bessel_j0(double x) {
  require_finite(x, "bessel_j0");
  const double w = std::abs(x);
  if (w == 0.0) {
    return 1.0;
  }
  using namespace j0c;
  if (w <= 4.0) {
    const double r = evaluate_rational(P1, Q1, w * w);
    return (w + x1) * ((w - x11 / 256) - x12) * r;
  }
  if (w <= 8.0) {
    const double r = evaluate_rational(P2, Q2, 1.0 - (w * w) / 64.0);
    return (w + x2) * ((w - x21 / 256) - x22) * r;
  }
  const auto h = hankel_parts_order0(w);
  return h.factor * (h.rc * (h.c + h.s) - h.yrs * (h.s - h.c));
}

double bessel_j1(double x) {
  require_finite(x, "bessel_j1");
  const double w = std::abs(x);
  if (w == 0.0) {
    return 0.0;
  }
  using namespace j1c;
  double value;
  if (w <= 4.0) {
    const double r = evaluate_rational(P1, Q1, w * w);
    value = w * (w + x1) * ((w - x11 / 256) - x12) * r;
  } else if (w <= 8.0) {
    const double r = evaluate_rational(P2, Q2, w * w);
    value = w * (w + x2) * ((w - x21 / 256) - x22) * r;
  } else {
    const auto h = hankel_parts_order1(w);
    value = h.factor * (h.rc * (h.s - h.c) + h.yrs * (h.s + h.c));
  }
  return x < 0.0 ? -value : value;
}

double struve_h0(double x) {
  require_nonnegative(x, "struve_h0");
  if (x <= kStruveSeriesLimit) {
    return detail::struve_h0_series(x);
  }
  if (x <= kStruveAsymptoticStart) {
    return (2.0 / kPi) * detail::struve_integral(x, 0);
  }
  return detail::bessel_y0_large(x) + detail::struve_minus_neumann_asymptotic(x, 0);
}

double struve_h1(double x) {
  require_nonnegative(x, "struve_h1");
  if (x <= kStruveSeriesLimit) {
    return detail::struve_h1_series(x);
  }
  if (x <= kStruveAsymptoticStart) {
    return (2.0 * x / kPi) * detail::struve_integral(x, 1);
  }
  return detail::bessel_y1_large(x) + detail::struve_minus_neumann_asymptotic(x, 1);
}

double struve_d(double x) {
  require_nonnegative(x, "struve_d");
  return struve_h0(x) * bessel_j1(x) - struve_h1(x) * bessel_j0(x);
}

double j0_primitive(double x) {
  require_nonnegative(x, "j0_primitive");
  if (x == 0.0) {
    return 0.0;
  }
  return x * bessel_j0(x) + 0.5 * kPi * x * struve_d(x);
}

double erf(double x) {
  if (std::isnan(x)) {
    throw DomainError("erf: argument is NaN");
  }
  return std::erf(x);
}

double erfc(double x) {
  if (std::isnan(x)) {
    throw DomainError("erfc: argument is NaN");
  }
  return std::erfc(x);
}

}  // namespace haarhankel::specfun
