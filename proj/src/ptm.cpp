#include "rpe/ptm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rpe/errors.hpp"

namespace rpe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double kEigTol = 1e-10;  // degeneracy threshold on imaginary parts

}  // namespace

std::string to_string(GateLabel label) {
  return label == GateLabel::Gx ? "Gx" : "Gy";
}

GateLabel gate_label_from_string(const std::string& text) {
  if (text == "Gx") return GateLabel::Gx;
  if (text == "Gy") return GateLabel::Gy;
  throw std::invalid_argument("unknown gate label '" + text + "'");
}

std::string to_string(PhaseTarget target) {
  return target == PhaseTarget::Alpha ? "alpha" : "epsilon";
}

PhaseTarget phase_target_from_string(const std::string& text) {
  if (text == "alpha") return PhaseTarget::Alpha;
  if (text == "epsilon") return PhaseTarget::Epsilon;
  throw std::invalid_argument("unknown phase target '" + text + "'");
}

GateLabel target_germ(PhaseTarget target) {
  return target == PhaseTarget::Alpha ? GateLabel::Gx : GateLabel::Gy;
}

StateVec StateVec::zero_state() { return from_bloch({0.0, 0.0, 1.0}); }
StateVec StateVec::one_state() { return from_bloch({0.0, 0.0, -1.0}); }
StateVec StateVec::plus_state() { return from_bloch({1.0, 0.0, 0.0}); }

StateVec StateVec::from_bloch(const Eigen::Vector3d& bloch) {
  if (bloch.norm() > 1.0 + 1e-12) {
    throw std::invalid_argument("Bloch vector norm exceeds 1");
  }
  StateVec s;
  s.coords << 1.0, bloch(0), bloch(1), bloch(2);
  s.coords *= kInvSqrt2;
  return s;
}

EffectVec EffectVec::zero_effect() {
  EffectVec e;
  e.coords << kInvSqrt2, 0.0, 0.0, kInvSqrt2;
  return e;
}

EffectVec EffectVec::one_effect() {
  EffectVec e;
  e.coords << kInvSqrt2, 0.0, 0.0, -kInvSqrt2;
  return e;
}

EffectVec EffectVec::identity_effect() {
  EffectVec e;
  e.coords << 2.0 * kInvSqrt2, 0.0, 0.0, 0.0;
  return e;
}

double EffectVec::overlap(const StateVec& state) const {
  return coords.dot(state.coords);
}

Ptm Ptm::identity() { return Ptm(); }

Ptm Ptm::from_axis_angle(const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("rotation axis must be a unit vector");
  }
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix3d cross;
  cross << 0.0, -axis(2), axis(1),
           axis(2), 0.0, -axis(0),
           -axis(1), axis(0), 0.0;
  // Rodrigues form of the Bloch rotation induced by exp(-i (angle/2) n.sigma).
  Eigen::Matrix3d rot =
      c * Eigen::Matrix3d::Identity() + s * cross + (1.0 - c) * axis * axis.transpose();
  Ptm p;
  p.m_.setZero();
  p.m_(0, 0) = 1.0;
  p.m_.block<3, 3>(1, 1) = rot;
  return p;
}

Ptm Ptm::from_matrix(const Eigen::Matrix4d& matrix) {
  if (!matrix.allFinite()) {
    throw std::invalid_argument("PTM entries must be finite");
  }
  if (matrix(0, 0) != 1.0 || matrix(0, 1) != 0.0 || matrix(0, 2) != 0.0 ||
      matrix(0, 3) != 0.0) {
    throw std::invalid_argument("PTM first row must be (1, 0, 0, 0)");
  }
  Ptm p;
  p.m_ = matrix;
  return p;
}

GateParams GateParams::ideal() {
  return GateParams{kPi / 2.0, kPi / 2.0, 0.0, 1.0, 1.0};
}

void GateParams::validate() const {
  if (!std::isfinite(x_angle) || !std::isfinite(y_angle) || !std::isfinite(y_tilt)) {
    throw std::invalid_argument("gate angles must be finite");
  }
  if (!(depol_x >= 0.0 && depol_x <= 1.0) || !(depol_y >= 0.0 && depol_y <= 1.0)) {
    throw std::invalid_argument("depolarization survival must lie in [0, 1]");
  }
}

double GateParams::x_error() const { return x_angle - kPi / 2.0; }
double GateParams::y_error() const { return y_angle - kPi / 2.0; }

Ptm gate_ptm(const GateParams& params, GateLabel which) {
  params.validate();
  Eigen::Vector3d axis;
  double angle, survival;
  if (which == GateLabel::Gx) {
    axis << 1.0, 0.0, 0.0;
    angle = params.x_angle;
    survival = params.depol_x;
  } else {
    // Y axis tilted toward X: cos(tilt) sigma_Y + sin(tilt) sigma_X.
    axis << std::sin(params.y_tilt), std::cos(params.y_tilt), 0.0;
    angle = params.y_angle;
    survival = params.depol_y;
  }
  Ptm rot = Ptm::from_axis_angle(axis, angle);
  Eigen::Matrix4d m = rot.matrix();
  m.block<3, 4>(1, 0) *= survival;
  return Ptm::from_matrix(m);
}

Ptm compose(const Ptm& first, const Ptm& then) {
  return Ptm::from_matrix(then.matrix() * first.matrix());
}

Ptm ptm_power(const Ptm& map, long long k) {
  if (k < 0) throw std::invalid_argument("ptm_power exponent must be nonnegative");
  Eigen::Matrix4d acc = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d base = map.matrix();
  while (k > 0) {
    if (k & 1) acc = base * acc;
    base = base * base;
    k >>= 1;
  }
  return Ptm::from_matrix(acc);
}

double outcome_probability(const EffectVec& effect, std::span<const Ptm> circuit,
                           const StateVec& prep) {
  Eigen::Vector4d v = prep.coords;
  for (const Ptm& gate : circuit) v = gate.matrix() * v;
  double p = effect.coords.dot(v);
  if (p < -1e-9 || p > 1.0 + 1e-9) {
    throw std::invalid_argument("outcome probability out of range: " + std::to_string(p));
  }
  return std::clamp(p, 0.0, 1.0);
}

EigenFrame eigenframe(const Ptm& map) {
  Eigen::EigenSolver<Eigen::Matrix4d> solver(map.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const Eigen::Vector4cd values = solver.eigenvalues();
  const Eigen::Matrix4cd vectors = solver.eigenvectors();

  int plus = -1, minus = -1;
  std::vector<int> real_idx;
  for (int i = 0; i < 4; ++i) {
    const double im = values(i).imag();
    if (im > kEigTol) {
      if (plus >= 0) throw std::invalid_argument("PTM has more than one complex eigenvalue pair");
      plus = i;
    } else if (im < -kEigTol) {
      minus = i;
    } else {
      real_idx.push_back(i);
    }
  }
  if (plus < 0 || minus < 0) {
    throw DegenerateRealSpectrum("PTM spectrum is real; no rotation eigenphase");
  }

  // Of the two real eigenvalues, the one closer to 1 is the trace-preservation
  // eigenvalue; the other is d.
  const int unit_idx =
      std::abs(values(real_idx[0]).real() - 1.0) <= std::abs(values(real_idx[1]).real() - 1.0)
          ? real_idx[0]
          : real_idx[1];
  const int d_idx = unit_idx == real_idx[0] ? real_idx[1] : real_idx[0];

  EigenFrame frame;
  frame.r = std::abs(values(plus));
  frame.phi = std::arg(values(plus));
  frame.d = values(d_idx).real();
  frame.basis_change.col(0) = vectors.col(unit_idx);
  frame.basis_change.col(1) = vectors.col(plus);
  frame.basis_change.col(2) = vectors.col(minus);
  frame.basis_change.col(3) = vectors.col(d_idx);
  return frame;
}

double trace_distance(const StateVec& a, const StateVec& b) {
  // Coords store bloch/sqrt(2), so the Bloch distance is sqrt(2) times the
  // coordinate distance; trace distance is half the Bloch distance.
  const Eigen::Vector3d diff = a.coords.tail<3>() - b.coords.tail<3>();
  return diff.norm() * kInvSqrt2;
}

}  // namespace rpe
