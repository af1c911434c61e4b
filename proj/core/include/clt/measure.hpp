#pragma once

// Discretized L^p(mu) for a sigma-finite real measure mu: point-mass grids,
// norms, pairings and the exact duality maximizer. Integrals are exact sums
// over atoms, so every identity downstream (duality, derivatives) holds to
// roundoff rather than to quadrature error.

#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace clt {

// sgn(v)*|v|^r with the convention sgn(0)*|0|^r := 0 for every r >= 0
// (covers a.e.-defined integrands such as sign(x) at x = 0).
double signed_pow(double v, double r);

// |v|^r with |0|^0 := 1 (plain power kernel; distinct from signed_pow so
// that |x|^{p-2} degenerates to the constant 1 when p = 2).
double abs_pow(double v, double r);

class DiscreteMeasure {
 public:
  // points strictly increasing, weights >= 0, at least one weight > 0;
  // total mass may exceed 1 (sigma-finite, not necessarily probability).
  DiscreteMeasure(std::vector<double> points, std::vector<double> weights,
                  bool truncated = false);

  std::size_t size() const { return points_.size(); }
  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  double total_mass() const { return total_mass_; }

  // true when this grid is a truncation of a measure with unbounded support;
  // carried as metadata so downstream reports can flag it.
  bool truncated() const { return truncated_; }

  // Lebesgue measure on [a,b] discretized as m midpoint cells.
  static std::shared_ptr<const DiscreteMeasure> lebesgue(double a, double b,
                                                         std::size_t m,
                                                         bool truncated = false);

 private:
  std::vector<double> points_;
  std::vector<double> weights_;
  double total_mass_ = 0.0;
  bool truncated_ = false;
};

using MeasurePtr = std::shared_ptr<const DiscreteMeasure>;

bool same_measure(const MeasurePtr& a, const MeasurePtr& b);

// A grid function in L^p(mu): values at the atoms of a DiscreteMeasure.
class LpVector {
 public:
  LpVector(MeasurePtr measure, std::vector<double> values);

  // all-zero function on the given grid
  static LpVector zero(MeasurePtr measure);

  const MeasurePtr& measure() const { return measure_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  LpVector& operator+=(const LpVector& o);
  LpVector& operator-=(const LpVector& o);
  LpVector& operator*=(double c);
  friend LpVector operator+(LpVector a, const LpVector& b) { return a += b; }
  friend LpVector operator-(LpVector a, const LpVector& b) { return a -= b; }
  friend LpVector operator*(double c, LpVector a) { return a *= c; }

  LpVector abs() const;

 private:
  MeasurePtr measure_;
  std::vector<double> values_;
};

// conjugate exponent pair 1/p + 1/q = 1; q = inf when p = 1
struct DualExponent {
  double p;
  double q;

  explicit DualExponent(double p_);
  static constexpr double kInfinite = std::numeric_limits<double>::infinity();
};

// (sum_i w_i |v_i|^p)^{1/p}; rejects p < 1
double lp_norm(const LpVector& x, double p);

// integral of (prod_j factors_j) * sgn(base) * |base|^{kernel_exponent + 1}
// against mu; the signed-power zero convention applies at base = 0.
double integrate_product(const std::vector<LpVector>& factors,
                         double kernel_exponent, const LpVector& base);

// plain pairing integral of g against d
double pairing(const LpVector& g, const LpVector& d);

// 2||x||_p^2 + 2(p-1)||y||_p^2 - ||x+y||_p^2 - ||x-y||_p^2.
// Nonnegative for p >= 2 since L^p(mu) is (2, sqrt(p-1))-smooth.
double two_smooth_slack(const LpVector& x, const LpVector& y, double p);

// g with ||g||_q = 1 and  integral(g*d) = ||d||_p, for p > 1, d != 0:
// g_i = sgn(d_i)|d_i|^{p-1} / ||d||_p^{p-1}
LpVector dual_maximizer(const LpVector& d, double p);

// CSV interchange: columns point,weight,value. Metadata lines start with '#'.
void write_csv(std::ostream& os, const LpVector& x,
               const std::string& comment = "");
LpVector read_csv(std::istream& is);

}  // namespace clt
