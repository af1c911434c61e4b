#include "clt/frechet.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "clt/rng.hpp"

namespace clt {

namespace {

// int h1 h2 |x|^e dmu with the |0|^0 = 1 convention (so e = 0 degenerates
// to the plain inner product, as needed at p = 2)
double integ_abs2(const LpVector& h1, const LpVector& h2, const LpVector& x,
                  double e) {
  const auto& w = x.measure()->weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    acc += w[i] * h1[i] * h2[i] * abs_pow(x[i], e);
  return acc;
}

// int h x|x|^{p-2} dmu = int h sgn(x)|x|^{p-1} dmu
double integ_signed1(const LpVector& h, const LpVector& x, double p) {
  const auto& w = x.measure()->weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    acc += w[i] * h[i] * signed_pow(x[i], p - 1.0);
  return acc;
}

[[noreturn]] void singular(const char* what) {
  throw std::domain_error(std::string("psi derivative singular at x = 0: ") +
                          what);
}

}  // namespace

PsiFunctional::PsiFunctional(double p_, double q_) : p(p_), q(q_) {
  if (!(p >= 2.0)) throw std::invalid_argument("PsiFunctional: p must be >= 2");
  if (!(q > 0.0)) throw std::invalid_argument("PsiFunctional: q must be > 0");
}

double psi_eval(const PsiFunctional& f, const LpVector& x) {
  return std::pow(lp_norm(x, f.p), f.q);
}

double psi_d1(const PsiFunctional& f, const LpVector& x, const LpVector& h) {
  const double nx = lp_norm(x, f.p);
  if (nx < kSingularNormGuard) {
    if (f.q > 1.0) return 0.0;
    singular("order 1 requires q > 1 at the origin");
  }
  return f.q * std::pow(nx, f.q - f.p) * integ_signed1(h, x, f.p);
}

double psi_d2(const PsiFunctional& f, const LpVector& x, const LpVector& h1,
              const LpVector& h2) {
  const double p = f.p, q = f.q;
  const double nx = lp_norm(x, p);
  if (nx < kSingularNormGuard) {
    if (q > 2.0) return 0.0;
    if (q == 2.0 && p == 2.0) return 2.0 * integ_abs2(h1, h2, x, 0.0);
    singular("order 2 requires q > 2 at the origin");
  }
  const double t1 =
      q * (p - 1.0) * std::pow(nx, q - p) * integ_abs2(h1, h2, x, p - 2.0);
  if (q == p) return t1;  // the (q-p) term vanishes identically
  const double a1 = integ_signed1(h1, x, p);
  const double a2 = integ_signed1(h2, x, p);
  return t1 + q * (q - p) * std::pow(nx, q - 2.0 * p) * a1 * a2;
}

double psi_d3(const PsiFunctional& f, const LpVector& x, const LpVector& h1,
              const LpVector& h2, const LpVector& h3) {
  const double p = f.p, q = f.q;
  if (!(p >= 3.0)) throw std::invalid_argument("psi_d3: requires p >= 3");
  const double nx = lp_norm(x, p);
  if (nx < kSingularNormGuard) singular("order 3");

  const auto& w = x.measure()->weights();
  double core = 0.0;  // int h1 h2 h3 x|x|^{p-4} dmu
  for (std::size_t i = 0; i < x.size(); ++i)
    core += w[i] * h1[i] * h2[i] * h3[i] * signed_pow(x[i], p - 3.0);

  double out = q * (p - 1.0) * (p - 2.0) * std::pow(nx, q - p) * core;
  if (q != p) {
    const double a1 = integ_signed1(h1, x, p);
    const double a2 = integ_signed1(h2, x, p);
    const double a3 = integ_signed1(h3, x, p);
    const double b12 = integ_abs2(h1, h2, x, p - 2.0);
    const double b13 = integ_abs2(h1, h3, x, p - 2.0);
    const double b23 = integ_abs2(h2, h3, x, p - 2.0);
    out += q * (p - 1.0) * (q - p) * std::pow(nx, q - 2.0 * p) *
           (a1 * b23 + a2 * b13 + a3 * b12);
    out += q * (q - p) * (q - 2.0 * p) * std::pow(nx, q - 3.0 * p) * a1 * a2 * a3;
  }
  return out;
}

double fd_derivative(const PsiFunctional& f, const LpVector& x,
                     const std::vector<LpVector>& directions, int order,
                     double step) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("fd_derivative: order must be 1, 2 or 3");
  if (static_cast<int>(directions.size()) != order)
    throw std::invalid_argument("fd_derivative: need one direction per order");
  if (step <= 0.0) {
    const double eps = std::numeric_limits<double>::epsilon();
    step = std::pow(eps, 1.0 / (order + 2.0)) * (1.0 + lp_norm(x, f.p));
  }

  if (order == 1) {
    LpVector xp = x, xm = x;
    xp += step * directions[0];
    xm -= step * directions[0];
    return (psi_eval(f, xp) - psi_eval(f, xm)) / (2.0 * step);
  }

  const int corners = 1 << order;
  double acc = 0.0;
  for (int c = 0; c < corners; ++c) {
    LpVector pt = x;
    int sign = 1;
    for (int d = 0; d < order; ++d) {
      const int s = (c >> d) & 1 ? 1 : -1;
      pt += (s * step) * directions[d];
      sign *= s;
    }
    acc += sign * psi_eval(f, pt);
  }
  return acc / std::pow(2.0 * step, order);
}

double holder_constant(double p) {
  if (!(p >= 3.0)) throw std::invalid_argument("holder_constant: requires p >= 3");
  return 6.0 * (2.0 * p * p - 8.0 * p + 7.0);
}

SmoothTestFunction SmoothTestFunction::psi_power(double p, double q,
                                                 double scale) {
  PsiFunctional check(p, q);  // validates the range
  (void)check;
  SmoothTestFunction f;
  f.kind_ = Kind::PsiPower;
  f.p_ = p;
  f.q_ = q;
  f.scale_ = scale;
  f.name_ = "psi:p=" + std::to_string(p) + ",q=" + std::to_string(q);
  return f;
}

SmoothTestFunction SmoothTestFunction::scalar_abs_power(double r,
                                                        double scale) {
  if (!(r >= 2.0))
    throw std::invalid_argument("scalar_abs_power: requires r >= 2");
  SmoothTestFunction f;
  f.kind_ = Kind::ScalarAbsPower;
  f.r_ = r;
  f.scale_ = scale;
  f.name_ = "abspow:r=" + std::to_string(r);
  return f;
}

SmoothTestFunction SmoothTestFunction::scalar_polynomial(
    std::vector<double> coeffs, double scale) {
  SmoothTestFunction f;
  f.kind_ = Kind::ScalarPolynomial;
  f.coeffs_ = std::move(coeffs);
  f.scale_ = scale;
  f.name_ = "poly:deg=" + std::to_string(f.coeffs_.empty() ? 0 : f.coeffs_.size() - 1);
  return f;
}

double SmoothTestFunction::eval_scalar(double x) const {
  switch (kind_) {
    case Kind::PsiPower:
      return scale_ * std::pow(std::fabs(x), q_);
    case Kind::ScalarAbsPower:
      return scale_ * std::pow(std::fabs(x), r_);
    case Kind::ScalarPolynomial: {
      double acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
      return scale_ * acc;
    }
  }
  return 0.0;
}

double SmoothTestFunction::eval_vector(const LpVector& x) const {
  if (kind_ != Kind::PsiPower)
    throw std::invalid_argument("eval_vector: scalar-only test function");
  return scale_ * psi_eval(PsiFunctional(p_, q_), x);
}

double SmoothTestFunction::d2_scalar(double x, double u, double v) const {
  switch (kind_) {
    case Kind::PsiPower: {
      // one-atom measure reduces psi_p^q to |x|^q regardless of p
      if (x == 0.0) {
        if (q_ > 2.0) return 0.0;
        if (q_ == 2.0) return 2.0 * scale_ * u * v;
        singular("scalar order 2");
      }
      return scale_ * q_ * (q_ - 1.0) * abs_pow(x, q_ - 2.0) * u * v;
    }
    case Kind::ScalarAbsPower: {
      if (x == 0.0 && r_ > 2.0) return 0.0;
      return scale_ * r_ * (r_ - 1.0) * abs_pow(x, r_ - 2.0) * u * v;
    }
    case Kind::ScalarPolynomial: {
      double acc = 0.0;
      for (std::size_t k = coeffs_.size(); k-- > 2;)
        acc = acc * x + static_cast<double>(k) * static_cast<double>(k - 1) * coeffs_[k];
      return scale_ * acc * u * v;
    }
  }
  return 0.0;
}

double SmoothTestFunction::d2_vector(const LpVector& x, const LpVector& u,
                                     const LpVector& v) const {
  if (kind_ != Kind::PsiPower)
    throw std::invalid_argument("d2_vector: scalar-only test function");
  return scale_ * psi_d2(PsiFunctional(p_, q_), x, u, v);
}

std::optional<double> SmoothTestFunction::d2_at_zero_norm() const {
  switch (kind_) {
    case Kind::PsiPower:
      if (q_ > 2.0) return 0.0;
      if (q_ == 2.0 && p_ == 2.0) return 2.0 * std::fabs(scale_);
      return std::nullopt;
    case Kind::ScalarAbsPower:
      if (r_ > 2.0) return 0.0;
      return 2.0 * std::fabs(scale_);  // r_ == 2
    case Kind::ScalarPolynomial: {
      const double c2 = coeffs_.size() > 2 ? coeffs_[2] : 0.0;
      return 2.0 * std::fabs(scale_ * c2);
    }
  }
  return std::nullopt;
}

bool SmoothTestFunction::vanishes_at_zero_to_order2() const {
  switch (kind_) {
    case Kind::PsiPower:
      return q_ > 2.0;
    case Kind::ScalarAbsPower:
      return r_ > 2.0;
    case Kind::ScalarPolynomial:
      for (std::size_t k = 0; k < coeffs_.size() && k < 3; ++k)
        if (coeffs_[k] != 0.0) return false;
      return true;
  }
  return false;
}

LambdaClassReport lambda_class_check(const SmoothTestFunction& f, double delta,
                                     double M, int trials, std::uint64_t seed,
                                     int probes) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::invalid_argument("lambda_class_check: delta in (0,1]");
  LambdaClassReport rep;
  rep.trials = trials;
  RngStream rng(seed);

  if (f.scalar_only()) {
    rep.probes = 1;
    for (int t = 0; t < trials; ++t) {
      const double x = rng.uniform(-3.0, 3.0);
      const double y = rng.uniform(-3.0, 3.0);
      const double dxy = std::fabs(x - y);
      if (dxy < 1e-8) continue;
      const double num = std::fabs(f.d2_scalar(x, 1.0, 1.0) - f.d2_scalar(y, 1.0, 1.0));
      rep.max_ratio = std::max(rep.max_ratio, num / std::pow(dxy, delta));
    }
  } else {
    // ratios are probe lower bounds for the L^p operator norm of the
    // second-derivative increment, with p the functional's own exponent
    rep.probes = probes;
    const double p = f.psi_p();
    const auto mu = DiscreteMeasure::lebesgue(0.0, 1.0, 5);
    auto sample = [&](double lo, double hi) {
      std::vector<double> v(mu->size());
      for (double& c : v) c = rng.uniform(lo, hi);
      return LpVector(mu, std::move(v));
    };
    for (int t = 0; t < trials; ++t) {
      LpVector x = sample(-2.0, 2.0);
      LpVector y = sample(-2.0, 2.0);
      if (lp_norm(x, p) < 1e-6 || lp_norm(y, p) < 1e-6) continue;
      const double dxy = lp_norm(x - y, p);
      if (dxy < 1e-8) continue;
      for (int j = 0; j < probes; ++j) {
        LpVector u = sample(-1.0, 1.0);
        LpVector v = sample(-1.0, 1.0);
        const double nu = lp_norm(u, p), nv = lp_norm(v, p);
        if (nu < 1e-12 || nv < 1e-12) continue;
        u *= 1.0 / nu;
        v *= 1.0 / nv;
        const double num = std::fabs(f.d2_vector(x, u, v) - f.d2_vector(y, u, v));
        rep.max_ratio = std::max(rep.max_ratio, num / std::pow(dxy, delta));
      }
    }
  }

  const auto z = f.d2_at_zero_norm();
  if (!z.has_value()) {
    rep.pass = false;
    rep.d2_zero_norm = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  rep.d2_zero_norm = *z;
  rep.pass = rep.max_ratio <= 1.0 + 1e-9 && rep.d2_zero_norm <= M + 1e-12;
  return rep;
}

}  // namespace clt
