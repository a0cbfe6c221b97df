#include "ferls/numerics.hpp"

#include <cmath>

namespace ferls {

bool all_finite(const Mat& m) { return m.allFinite(); }
bool all_finite(const Vec& v) { return v.allFinite(); }

Mat solve_spd(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols()) {
    throw ShapeMismatch("solve_spd: A must be square");
  }
  if (a.rows() != b.rows()) {
    throw ShapeMismatch("solve_spd: A and B row counts differ");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw NotPositiveDefinite("solve_spd: A is not symmetric");
  }
  Eigen::LLT<Mat> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("solve_spd: Cholesky pivot <= 0");
  }
  return llt.solve(b);
}

Vec solve_spd(const Mat& a, const Vec& b) {
  Mat bm = b;
  return Vec(solve_spd(a, bm));
}

Vec rk4_step(const VectorField& field, const Vec& x, double dt) {
  const Vec k1 = field(x);
  if (k1.size() != x.size()) {
    throw ShapeMismatch("rk4_step: field output size differs from state");
  }
  const Vec k2 = field(x + (0.5 * dt) * k1);
  const Vec k3 = field(x + (0.5 * dt) * k2);
  const Vec k4 = field(x + dt * k3);
  Vec out = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!all_finite(out)) {
    throw NonFiniteState("rk4_step: non-finite state");
  }
  return out;
}

Vec euler_step(const VectorField& field, const Vec& x, double dt) {
  const Vec f = field(x);
  if (f.size() != x.size()) {
    throw ShapeMismatch("euler_step: field output size differs from state");
  }
  Vec out = x + dt * f;
  if (!all_finite(out)) {
    throw NonFiniteState("euler_step: non-finite state");
  }
  return out;
}

}  // namespace ferls
