#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "rpe/gate_label.hpp"

namespace rpe {

// Pauli-Liouville representation of single-qubit objects, Pauli basis order
// fixed as (I, X, Y, Z) with 1/sqrt(2) vector normalization, so that
// effect . map . state is a plain dot-product probability.

// State |rho>>: coords[i] = tr(rho P_i) / sqrt(2). coords[0] = 1/sqrt(2)
// for unit trace; the Bloch part has norm at most 1/sqrt(2).
struct StateVec {
  Eigen::Vector4d coords;

  static StateVec zero_state();   // |0><0|
  static StateVec one_state();    // |1><1|
  static StateVec plus_state();   // |+><+|
  // Bloch vector (bx, by, bz), |b| <= 1.
  static StateVec from_bloch(const Eigen::Vector3d& bloch);
};

// Effect <<M|: coords[i] = tr(M P_i) / sqrt(2) for a positive operator M
// with 0 <= M <= I.
struct EffectVec {
  Eigen::Vector4d coords;

  static EffectVec zero_effect();      // |0><0|
  static EffectVec one_effect();       // |1><1|
  static EffectVec identity_effect();  // I (unit outcome probability)

  double overlap(const StateVec& state) const;
};

// 4x4 real Pauli-Liouville matrix of a trace-preserving map. Entry (i, j) is
// tr(P_i E(P_j)) / 2: columns are input Paulis, rows output Paulis, which is
// the orientation that makes <<M| E |rho>> = tr(M E(rho)).
class Ptm {
 public:
  static Ptm identity();
  // Map of the unitary exp(-i (angle/2) axis.sigma); axis must be unit.
  static Ptm from_axis_angle(const Eigen::Vector3d& axis, double angle);
  // Wraps an explicit matrix; first row must be exactly (1, 0, 0, 0) and all
  // entries finite.
  static Ptm from_matrix(const Eigen::Matrix4d& matrix);

  const Eigen::Matrix4d& matrix() const { return m_; }

 private:
  Ptm() : m_(Eigen::Matrix4d::Identity()) {}
  Eigen::Matrix4d m_;
};

// Full rotation angles and error knobs of the two native gates. Ideal values
// are x_angle = y_angle = pi/2, y_tilt = 0, survivals 1. The X axis is the
// reference axis, so only the Y gate carries an off-axis tilt.
struct GateParams {
  double x_angle;
  double y_angle;
  double y_tilt;    // off-axis component of the Y rotation axis, radians
  double depol_x;   // per-application depolarization survival, [0, 1]
  double depol_y;

  static GateParams ideal();
  void validate() const;

  double x_error() const;  // x_angle - pi/2
  double y_error() const;  // y_angle - pi/2
};

// Eigenstructure of a map with one complex-conjugate eigenvalue pair:
// basis_change^-1 . PTM . basis_change = diag(1, r e^{i phi}, r e^{-i phi}, d).
// phi is the phase of the eigenvalue with positive imaginary part, in
// (-pi, pi].
struct EigenFrame {
  double r;
  double phi;
  double d;
  Eigen::Matrix4cd basis_change;
};

// Map of one native gate under the given parameters: rotation about the
// gate's axis composed with uniform Bloch contraction diag(1, p, p, p).
Ptm gate_ptm(const GateParams& params, GateLabel which);

// then . first, i.e. apply `first`, then `then`.
Ptm compose(const Ptm& first, const Ptm& then);

// k-fold self-composition; k = 0 gives the identity.
Ptm ptm_power(const Ptm& map, long long k);

// effect . (product of maps in operation order) . prep. Results within 1e-9
// outside [0, 1] are clamped; anything further out throws.
double outcome_probability(const EffectVec& effect, std::span<const Ptm> circuit,
                           const StateVec& prep);

// Extracts (r, phi, d, basis_change). Throws DegenerateRealSpectrum when the
// spectrum is real (imaginary parts all below 1e-10).
EigenFrame eigenframe(const Ptm& map);

// Half the trace norm of the density-matrix difference. Equals half the
// Euclidean distance between Bloch vectors: |0> vs |1> gives exactly 1.
double trace_distance(const StateVec& a, const StateVec& b);

}  // namespace rpe
