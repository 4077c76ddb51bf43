#include "copos/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace copos {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0.0);
  for (double v : c_)
    if (!std::isfinite(v)) throw std::invalid_argument("polynomial coefficient not finite");
}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : Polynomial(std::vector<double>(coeffs)) {}

Polynomial Polynomial::zero() { return Polynomial({0.0}); }
Polynomial Polynomial::constant(double c) { return Polynomial({c}); }

Polynomial Polynomial::from_roots(std::span<const double> roots, double leading) {
  std::vector<double> c{leading};
  for (double r : roots) {
    c.push_back(0.0);
    for (int i = static_cast<int>(c.size()) - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] *= -r;
  }
  // from_roots builds highest-first; flip to lowest-first storage
  std::reverse(c.begin(), c.end());
  return Polynomial(std::move(c));
}

double Polynomial::scale() const {
  double s = 0.0;
  for (double v : c_) s = std::max(s, std::abs(v));
  return s;
}

int Polynomial::degree() const {
  const double thr = kCoeffZero * scale();
  for (int i = static_cast<int>(c_.size()) - 1; i > 0; --i)
    if (std::abs(c_[i]) > thr) return i;
  return 0;
}

bool Polynomial::is_zero() const { return scale() == 0.0; }

double Polynomial::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0.0;
}

double Polynomial::operator()(double x) const {
  double v = 0.0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) v = v * x + c_[i];
  return v;
}

void Polynomial::eval_with_derivative(double x, double& value, double& slope) const {
  value = 0.0;
  slope = 0.0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    slope = slope * x + value;
    value = value * x + c_[i];
  }
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<double> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(double s) const {
  // Ruffini-Horner Taylor shift: q(x) = p(x + s)
  std::vector<double> c = c_;
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] += s * c[j + 1];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled_arg(double k) const {
  std::vector<double> c = c_;
  double f = 1.0;
  for (size_t i = 1; i < c.size(); ++i) {
    f *= k;
    c[i] *= f;
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed() const {
  std::vector<double> c(c_.rbegin(), c_.rend());
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

int RootSet::total_multiplicity() const {
  int m = 0;
  for (const auto& r : roots) m += r.multiplicity;
  return m;
}

std::vector<double> RootSet::values() const {
  std::vector<double> v;
  v.reserve(roots.size());
  for (const auto& r : roots) v.push_back(r.value);
  return v;
}

namespace {

// Newton polish on the original polynomial; keeps the iterate with the
// smallest residual.
double polish_root(const Polynomial& p, double x0) {
  double best = x0;
  double best_abs = std::abs(p(x0));
  double x = x0;
  for (int it = 0; it < 40; ++it) {
    double v, dv;
    p.eval_with_derivative(x, v, dv);
    if (v == 0.0) return x;
    if (dv == 0.0) break;
    double step = v / dv;
    const double cap = 0.5 * std::max(1.0, std::abs(x));
    if (std::abs(step) > cap) step = std::copysign(cap, step);
    x -= step;
    if (!std::isfinite(x)) break;
    const double ax = std::abs(p(x));
    if (ax < best_abs) {
      best_abs = ax;
      best = x;
    } else if (it > 3) {
      break;
    }
  }
  return best;
}

// Sort, merge roots within the cluster tolerance (multiplicities add), and
// fill in the residual bound.
RootSet finalize(const Polynomial& p, std::vector<RootSet::Root> raw) {
  RootSet out;
  if (raw.empty()) return out;
  std::sort(raw.begin(), raw.end(),
            [](const RootSet::Root& a, const RootSet::Root& b) { return a.value < b.value; });
  for (const auto& r : raw) {
    if (!out.roots.empty()) {
      RootSet::Root& last = out.roots.back();
      const double ref = std::max(1.0, std::abs(r.value));
      if (r.value - last.value <= kRootCluster * ref) {
        // weighted merge keeps the cluster centroid
        const double w = static_cast<double>(last.multiplicity) + r.multiplicity;
        last.value = (last.value * last.multiplicity + r.value * r.multiplicity) / w;
        last.multiplicity += r.multiplicity;
        continue;
      }
    }
    out.roots.push_back(r);
  }
  const double s = p.scale();
  double worst = 0.0;
  for (auto& r : out.roots) {
    r.value = polish_root(p, r.value);
    worst = std::max(worst, std::abs(p(r.value)));
  }
  out.residual_bound = (s > 0.0) ? worst / s : 0.0;
  return out;
}

double cbrt_signed(double x) { return std::cbrt(x); }

}  // namespace

RootSet solve_quadratic(const Polynomial& p) {
  RootSet out;
  if (p.is_zero()) {
    out.all_reals = true;
    return out;
  }
  const int deg = p.degree();
  if (deg == 0) return out;  // nonzero constant: no roots
  if (deg == 1) {
    out = finalize(p, {{-p.coeff(0) / p.coeff(1), 1}});
    return out;
  }
  const double a = p.coeff(deg), b = p.coeff(deg - 1), c = p.coeff(deg - 2);
  const double disc = b * b - 4.0 * a * c;
  const double disc_scale = std::max(b * b, std::abs(4.0 * a * c));
  if (disc < -kCoeffZero * disc_scale) return out;
  if (disc <= kCoeffZero * disc_scale) {
    out = finalize(p, {{-b / (2.0 * a), 2}});
    return out;
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(sq, b == 0.0 ? 1.0 : b));
  std::vector<RootSet::Root> raw;
  raw.push_back({q / a, 1});
  raw.push_back({c / q, 1});
  return finalize(p, std::move(raw));
}

RootSet solve_cubic(const Polynomial& p) {
  if (p.is_zero() || p.degree() <= 2) return solve_quadratic(p);
  const double a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
  const double A = b / a, B = c / a, C = d / a;
  // depressed form z^3 + pz + q with x = z - A/3
  const double pp = B - A * A / 3.0;
  const double qq = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
  const double shift = -A / 3.0;
  const double disc = -4.0 * pp * pp * pp - 27.0 * qq * qq;
  const double disc_scale = std::max(std::abs(4.0 * pp * pp * pp), std::abs(27.0 * qq * qq));

  std::vector<RootSet::Root> raw;
  if (disc >= -kCoeffZero * disc_scale) {
    // three real roots; trigonometric form avoids complex cube roots
    if (pp >= -kCoeffZero * std::max(1.0, A * A + std::abs(B))) {
      raw.push_back({shift, 3});  // p ~ 0 forces q ~ 0 here (disc >= 0)
    } else {
      const double m = 2.0 * std::sqrt(-pp / 3.0);
      double arg = 3.0 * qq / (pp * m);
      arg = std::clamp(arg, -1.0, 1.0);
      const double theta = std::acos(arg);
      for (int k = 0; k < 3; ++k) {
        const double z = m * std::cos((theta - 2.0 * std::numbers::pi * k) / 3.0);
        raw.push_back({z + shift, 1});
      }
    }
  } else {
    const double s = std::sqrt(qq * qq / 4.0 + pp * pp * pp / 27.0);
    const double z = cbrt_signed(-qq / 2.0 + s) + cbrt_signed(-qq / 2.0 - s);
    raw.push_back({z + shift, 1});
  }
  return finalize(p, std::move(raw));
}

RootSet solve_quartic(const Polynomial& p) {
  if (p.is_zero() || p.degree() <= 3) return solve_cubic(p);
  const double a = p.coeff(4);
  const double A = p.coeff(3) / a;
  const double shift = -A / 4.0;
  // depress: q(z) = p_monic(z + shift) = z^4 + P z^2 + Q z + R
  std::vector<double> monic{p.coeff(0) / a, p.coeff(1) / a, p.coeff(2) / a, A, 1.0};
  const Polynomial dep = Polynomial(std::move(monic)).shifted(shift);
  const double P = dep.coeff(2), Q = dep.coeff(1), R = dep.coeff(0);
  const double dep_scale = std::max({1.0, std::abs(P), std::abs(Q), std::abs(R)});

  std::vector<RootSet::Root> raw;
  if (std::max({std::abs(P), std::abs(Q), std::abs(R)}) <= kCoeffZero * dep_scale) {
    raw.push_back({shift, 4});
    return finalize(p, std::move(raw));
  }

  const bool biquadratic = std::abs(Q) <= kCoeffZero * dep_scale;
  double U = 0.0;
  if (!biquadratic) {
    // resolvent cubic U^3 + 2P U^2 + (P^2 - 4R) U - Q^2
    const Polynomial res({-Q * Q, P * P - 4.0 * R, 2.0 * P, 1.0});
    const RootSet rs = solve_cubic(res);
    for (const auto& r : rs.roots)
      if (r.value > 0.0 && r.value > U) U = r.value;
  }
  if (!biquadratic && U > 0.0) {
    const double u = std::sqrt(U);
    const double t = 0.5 * (P + U + Q / u);
    const double v = 0.5 * (P + U - Q / u);
    for (const RootSet& half :
         {solve_quadratic(Polynomial({t, -u, 1.0})), solve_quadratic(Polynomial({v, u, 1.0}))})
      for (const auto& r : half.roots) raw.push_back({r.value + shift, r.multiplicity});
  } else {
    // Q ~ 0: biquadratic in z^2
    const RootSet ws = solve_quadratic(Polynomial({R, P, 1.0}));
    for (const auto& w : ws.roots) {
      const double wtol = kCoeffZero * dep_scale;
      if (w.value > wtol) {
        const double z = std::sqrt(w.value);
        raw.push_back({z + shift, w.multiplicity});
        raw.push_back({-z + shift, w.multiplicity});
      } else if (w.value >= -wtol) {
        raw.push_back({shift, 2 * w.multiplicity});
      }
    }
  }
  return finalize(p, std::move(raw));
}

RootSet real_roots_numeric(const Polynomial& p) {
  RootSet out;
  if (p.is_zero()) {
    out.all_reals = true;
    return out;
  }
  const int n = p.degree();
  if (n == 0) return out;

  // monic coefficients, then rescale the variable to keep roots near the
  // unit disk (Fujiwara-type bound)
  std::vector<double> m(n);
  for (int i = 0; i < n; ++i) m[i] = p.coeff(i) / p.coeff(n);
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    s = std::max(s, std::pow(std::abs(m[i]), 1.0 / static_cast<double>(n - i)));
  s = std::clamp(2.0 * s, 1e-8, 1e8);

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    // companion of p(s*x) / (lead * s^n): coefficient i scales by s^(i-n)
    comp(i, n - 1) = -m[i] / std::pow(s, n - i);
    if (i + 1 < n) comp(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  const auto& ev = es.eigenvalues();

  const double ps = p.scale();
  std::vector<RootSet::Root> raw;
  for (int i = 0; i < ev.size(); ++i) {
    const double re = ev[i].real(), im = ev[i].imag();
    if (std::abs(im) > 1e-6 * std::max(1.0, std::abs(re))) continue;
    const double x = polish_root(p, re * s);
    const double bound = kRootResidual * ps * std::pow(std::max(1.0, std::abs(x)), n);
    if (std::abs(p(x)) <= bound) raw.push_back({x, 1});
  }
  return finalize(p, std::move(raw));
}

RootSet real_roots(const Polynomial& p) {
  if (p.is_zero()) {
    RootSet out;
    out.all_reals = true;
    return out;
  }
  switch (p.degree()) {
    case 0:
    case 1:
    case 2:
      return solve_quadratic(p);
    case 3:
      return solve_cubic(p);
    case 4:
      return solve_quartic(p);
    default:
      return real_roots_numeric(p);
  }
}

RootSet restrict_positive(const RootSet& rs, double lower, double tol) {
  RootSet out;
  out.all_reals = rs.all_reals;
  out.residual_bound = rs.residual_bound;
  for (const auto& r : rs.roots)
    if (r.value > lower + tol) out.roots.push_back(r);
  return out;
}

}  // namespace copos
