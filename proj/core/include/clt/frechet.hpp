#pragma once

// The norm-power functionals psi_p^q(x) = ||x||_{L^p(mu)}^q: closed-form
// evaluation of the Frechet derivatives up to order 3, a central finite
// difference oracle that is independent of the closed forms, and the
// machinery that certifies test functions as members of the Holder class
// Lambda_{2+delta}(B, M).
//
// Derivatives are evaluation-only (applied to given directions); the order-3
// tensor on an m-point grid would be O(m^3) while evaluation is O(m).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clt/measure.hpp"

namespace clt {

// evaluation rejects negative powers of ||x|| below this threshold
inline constexpr double kSingularNormGuard = 1e-12;

struct PsiFunctional {
  double p;  // norm exponent, >= 2 (order 3 additionally requires p >= 3)
  double q;  // power, > 0

  PsiFunctional(double p_, double q_);
};

// ||x||_p^q
double psi_eval(const PsiFunctional& f, const LpVector& x);

// q||x||^{q-p} int h x|x|^{p-2} dmu;  0 at x = 0 when q > 1
double psi_d1(const PsiFunctional& f, const LpVector& x, const LpVector& h);

// q(p-1)||x||^{q-p} int h1 h2 |x|^{p-2} dmu
//   + q(q-p)||x||^{q-2p} int h1 x|x|^{p-2} dmu int h2 x|x|^{p-2} dmu;
// 0 at x = 0 when q > 2
double psi_d2(const PsiFunctional& f, const LpVector& x, const LpVector& h1,
              const LpVector& h2);

// full trilinear form of Lemma-style order 3; requires p >= 3 and x != 0
double psi_d3(const PsiFunctional& f, const LpVector& x, const LpVector& h1,
              const LpVector& h2, const LpVector& h3);

// Central-difference directional derivative of psi along the given
// directions, built on psi evaluations only. step <= 0 selects a per-order
// default of pow(eps, 1/(order+2)) * (1 + ||x||_p).
double fd_derivative(const PsiFunctional& f, const LpVector& x,
                     const std::vector<LpVector>& directions, int order,
                     double step = 0.0);

// Lipschitz constant 6(2p^2 - 8p + 7) for the second derivative of psi_p^3;
// rejects p < 3.
double holder_constant(double p);

// Scalar or L^p-functional test function, with the closed-form second
// derivative needed for class certification. `scale` multiplies the raw
// function; dictionary members are scaled so the Holder constant is <= 1.
class SmoothTestFunction {
 public:
  enum class Kind { PsiPower, ScalarAbsPower, ScalarPolynomial };

  static SmoothTestFunction psi_power(double p, double q, double scale = 1.0);
  static SmoothTestFunction scalar_abs_power(double r, double scale = 1.0);
  static SmoothTestFunction scalar_polynomial(std::vector<double> coeffs,
                                              double scale = 1.0);

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  const std::string& name() const { return name_; }
  bool scalar_only() const { return kind_ != Kind::PsiPower; }
  double psi_p() const { return p_; }
  double psi_q() const { return q_; }

  double eval_scalar(double x) const;
  double eval_vector(const LpVector& x) const;

  // second derivative applied to directions (u,v); scalar inputs treat the
  // direction pair as (1,1) scaled
  double d2_scalar(double x, double u, double v) const;
  double d2_vector(const LpVector& x, const LpVector& u,
                   const LpVector& v) const;

  // operator norm of f''(0) when defined in closed form
  std::optional<double> d2_at_zero_norm() const;

  // true when f(0) = f'(0) = f''(0) = 0 (the Zolotarev class Lambda^0)
  bool vanishes_at_zero_to_order2() const;

 private:
  SmoothTestFunction() = default;
  Kind kind_ = Kind::ScalarAbsPower;
  double p_ = 2.0, q_ = 2.0;          // PsiPower
  double r_ = 3.0;                    // ScalarAbsPower
  std::vector<double> coeffs_;        // ScalarPolynomial
  double scale_ = 1.0;
  std::string name_;
};

struct LambdaClassReport {
  double max_ratio = 0.0;      // sup ||f''(x)-f''(y)|| / ||x-y||^delta found
  double d2_zero_norm = 0.0;   // ||f''(0)|| (0 when undefined but limits to 0)
  bool pass = false;
  int trials = 0;
  int probes = 0;
};

// Monte Carlo certification that f lies in Lambda_{2+delta}(B, M): samples
// random pairs (x, y), lower-bounds the operator norm of the second
// derivative increment by random rank-one probes of unit norm, and passes
// iff the largest ratio is <= 1 and ||f''(0)|| <= M. Reported values are
// probe lower bounds; exact bilinear-form norms are not attempted.
LambdaClassReport lambda_class_check(const SmoothTestFunction& f, double delta,
                                     double M, int trials, std::uint64_t seed,
                                     int probes = 64);

}  // namespace clt
