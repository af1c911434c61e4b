#include "clt/measure.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "clt/csvio.hpp"

namespace clt {

double signed_pow(double v, double r) {
  if (v == 0.0) return 0.0;
  const double mag = std::pow(std::fabs(v), r);
  return v > 0.0 ? mag : -mag;
}

double abs_pow(double v, double r) {
  if (r == 0.0) return 1.0;
  if (v == 0.0) return 0.0;
  return std::pow(std::fabs(v), r);
}

DiscreteMeasure::DiscreteMeasure(std::vector<double> points,
                                 std::vector<double> weights, bool truncated)
    : points_(std::move(points)),
      weights_(std::move(weights)),
      truncated_(truncated) {
  if (points_.empty() || points_.size() != weights_.size())
    throw std::invalid_argument("DiscreteMeasure: points/weights size mismatch");
  for (std::size_t i = 0; i + 1 < points_.size(); ++i)
    if (!(points_[i] < points_[i + 1]))
      throw std::invalid_argument("DiscreteMeasure: points must be strictly increasing");
  for (double w : weights_) {
    if (!(w >= 0.0))
      throw std::invalid_argument("DiscreteMeasure: negative weight");
    total_mass_ += w;
  }
  if (!(total_mass_ > 0.0))
    throw std::invalid_argument("DiscreteMeasure: total mass must be positive");
}

MeasurePtr DiscreteMeasure::lebesgue(double a, double b, std::size_t m,
                                     bool truncated) {
  if (!(b > a) || m == 0)
    throw std::invalid_argument("DiscreteMeasure::lebesgue: bad interval");
  std::vector<double> pts(m), w(m, (b - a) / static_cast<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    pts[i] = a + (b - a) * (static_cast<double>(i) + 0.5) / static_cast<double>(m);
  return std::make_shared<DiscreteMeasure>(std::move(pts), std::move(w), truncated);
}

bool same_measure(const MeasurePtr& a, const MeasurePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->points() == b->points() && a->weights() == b->weights();
}

LpVector::LpVector(MeasurePtr measure, std::vector<double> values)
    : measure_(std::move(measure)), values_(std::move(values)) {
  if (!measure_) throw std::invalid_argument("LpVector: null measure");
  if (values_.size() != measure_->size())
    throw std::invalid_argument("LpVector: values length mismatch with grid");
}

LpVector LpVector::zero(MeasurePtr measure) {
  std::vector<double> v(measure->size(), 0.0);
  return LpVector(std::move(measure), std::move(v));
}

LpVector& LpVector::operator+=(const LpVector& o) {
  if (!same_measure(measure_, o.measure_))
    throw std::invalid_argument("LpVector: measure mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

LpVector& LpVector::operator-=(const LpVector& o) {
  if (!same_measure(measure_, o.measure_))
    throw std::invalid_argument("LpVector: measure mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

LpVector& LpVector::operator*=(double c) {
  for (double& v : values_) v *= c;
  return *this;
}

LpVector LpVector::abs() const {
  std::vector<double> v(values_);
  for (double& x : v) x = std::fabs(x);
  return LpVector(measure_, std::move(v));
}

DualExponent::DualExponent(double p_) : p(p_) {
  if (!(p >= 1.0)) throw std::invalid_argument("DualExponent: p must be >= 1");
  q = (p == 1.0) ? kInfinite : p / (p - 1.0);
}

double lp_norm(const LpVector& x, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const auto& w = x.measure()->weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    acc += w[i] * std::pow(std::fabs(x[i]), p);
  return std::pow(acc, 1.0 / p);
}

double integrate_product(const std::vector<LpVector>& factors,
                         double kernel_exponent, const LpVector& base) {
  for (const auto& f : factors)
    if (!same_measure(f.measure(), base.measure()))
      throw std::invalid_argument("integrate_product: measure mismatch");
  const auto& w = base.measure()->weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    double term = signed_pow(base[i], kernel_exponent + 1.0);
    if (term == 0.0) continue;
    for (const auto& f : factors) term *= f[i];
    acc += w[i] * term;
  }
  return acc;
}

double pairing(const LpVector& g, const LpVector& d) {
  if (!same_measure(g.measure(), d.measure()))
    throw std::invalid_argument("pairing: measure mismatch");
  const auto& w = g.measure()->weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += w[i] * g[i] * d[i];
  return acc;
}

double two_smooth_slack(const LpVector& x, const LpVector& y, double p) {
  if (!(p >= 2.0)) throw std::invalid_argument("two_smooth_slack: p must be >= 2");
  if (!same_measure(x.measure(), y.measure()))
    throw std::invalid_argument("two_smooth_slack: measure mismatch");
  const double nx = lp_norm(x, p), ny = lp_norm(y, p);
  const double ns = lp_norm(x + y, p), nd = lp_norm(x - y, p);
  return 2.0 * nx * nx + 2.0 * (p - 1.0) * ny * ny - ns * ns - nd * nd;
}

LpVector dual_maximizer(const LpVector& d, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("dual_maximizer: requires p > 1");
  const double nd = lp_norm(d, p);
  if (nd == 0.0) throw std::invalid_argument("dual_maximizer: zero input vector");
  const double scale = std::pow(nd, p - 1.0);
  std::vector<double> g(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    g[i] = signed_pow(d[i], p - 1.0) / scale;
  return LpVector(d.measure(), std::move(g));
}

void write_csv(std::ostream& os, const LpVector& x, const std::string& comment) {
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "point,weight,value\n";
  const auto& pts = x.measure()->points();
  const auto& w = x.measure()->weights();
  for (std::size_t i = 0; i < x.size(); ++i)
    os << fmt17(pts[i]) << ',' << fmt17(w[i]) << ',' << fmt17(x[i]) << "\n";
}

LpVector read_csv(std::istream& is) {
  std::string line;
  std::vector<double> pts, w, vals;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // header row
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    std::string cell;
    double row[3];
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(ss, cell, ','))
        throw std::runtime_error("LpVector CSV: short row");
      row[c] = std::stod(cell);
    }
    pts.push_back(row[0]);
    w.push_back(row[1]);
    vals.push_back(row[2]);
  }
  auto mu = std::make_shared<DiscreteMeasure>(std::move(pts), std::move(w));
  return LpVector(std::move(mu), std::move(vals));
}

}  // namespace clt
