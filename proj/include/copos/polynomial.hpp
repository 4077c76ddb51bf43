// Univariate real polynomials and real-root extraction.
//
// Degrees up to 4 are solved in closed form (quadratic formula, Cardano,
// Descartes' quartic factorization); higher degrees go through companion
// matrix eigenvalues with Newton polish.  Every returned root satisfies
// the residual bound |p(r)| <= kRootResidual * scale(p) * max(1,|r|)^deg.
#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace copos {

// Relative threshold below which a coefficient counts as zero.
inline constexpr double kCoeffZero = 1e-12;
// Residual acceptance bound for numerically obtained roots.
inline constexpr double kRootResidual = 1e-9;
// Roots closer than kRootCluster * max(1,|r|) merge into one multiple root.
inline constexpr double kRootCluster = 1e-7;
// Default half-width of the marginal reporting band for sign comparisons.
inline constexpr double kMarginBand = 1e-9;

class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);  // lowest degree first
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial zero();
  static Polynomial constant(double c);
  // monic * leading, with the given real roots
  static Polynomial from_roots(std::span<const double> roots, double leading = 1.0);

  // Index of the last coefficient above kCoeffZero * scale(); 0 for constants
  // and for the identically-zero polynomial (see is_zero()).
  int degree() const;
  bool is_zero() const;
  double scale() const;  // max |coefficient|

  double coeff(int i) const;  // 0 beyond the stored size
  const std::vector<double>& coeffs() const { return c_; }

  double operator()(double x) const;
  // value and derivative in one Horner pass
  void eval_with_derivative(double x, double& value, double& slope) const;

  Polynomial derivative() const;
  Polynomial shifted(double s) const;   // p(x + s)
  Polynomial scaled_arg(double k) const;  // p(k * x)
  Polynomial reversed() const;          // x^n p(1/x), n = stored size - 1

  Polynomial& operator*=(double s);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, Polynomial p) { return p *= s, p; }

private:
  std::vector<double> c_;
};

struct RootSet {
  struct Root {
    double value = 0.0;
    int multiplicity = 1;
  };
  std::vector<Root> roots;      // ascending by value
  double residual_bound = 0.0;  // max |p(r)| / scale(p) over returned roots
  bool all_reals = false;       // input was identically zero

  int total_multiplicity() const;
  std::vector<double> values() const;
  bool empty() const { return roots.empty(); }
};

// Real roots of a polynomial of degree <= 2 (degree 0: empty unless the
// polynomial is identically zero, which sets all_reals).
RootSet solve_quadratic(const Polynomial& p);

// Cardano / trigonometric cubic.  Degenerate leading coefficient delegates
// to solve_quadratic.  Depressed discriminant >= 0 yields three real roots
// counted with multiplicity, < 0 exactly one.
RootSet solve_cubic(const Polynomial& p);

// Descartes' factorization into two quadratics via the resolvent cubic.
// Degenerate leading coefficient delegates to solve_cubic.
RootSet solve_quartic(const Polynomial& p);

// All real roots, any degree: closed form up to 4, companion-matrix
// eigenvalues with Newton polish beyond.
RootSet real_roots(const Polynomial& p);

// Companion-matrix route regardless of degree (>= 1); used as the numeric
// cross-check for the closed-form solvers.
RootSet real_roots_numeric(const Polynomial& p);

// Subset of roots strictly greater than lower (by more than tol).
RootSet restrict_positive(const RootSet& rs, double lower = 0.0, double tol = 0.0);

}  // namespace copos
