// Sign comparisons with a marginality reporting band: verdicts use the exact
// floating-point sign, but any deciding quantity within the band of its
// threshold flips the marginal flag so boundary-region fragility is visible.
#pragma once

#include <algorithm>
#include <cmath>

namespace copos {

class MarginTracker {
public:
  explicit MarginTracker(double band) : band_(band) {}

  bool ge(double v, double thr = 0.0) { return note(v, thr), v >= thr; }
  bool gt(double v, double thr = 0.0) { return note(v, thr), v > thr; }
  bool le(double v, double thr = 0.0) { return note(v, thr), v <= thr; }
  bool lt(double v, double thr = 0.0) { return note(v, thr), v < thr; }

  void note(double v, double thr) {
    if (std::abs(v - thr) <= band_ * std::max({1.0, std::abs(v), std::abs(thr)}))
      marginal_ = true;
  }

  bool marginal() const { return marginal_; }
  double band() const { return band_; }

private:
  double band_;
  bool marginal_ = false;
};

}  // namespace copos
