// Floating-point realization of the group flows: Pade-13 matrix exponential
// with scaling and squaring, one- and two-parameter trajectories, drift
// diagnostics, and orbit-closure classification by invariant-plane
// frequencies with continued-fraction commensurability detection.
#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "s6p/qlinalg.hpp"

namespace s6p {

using Mat7d = Eigen::Matrix<double, 7, 7>;
using Vec7d = Eigen::Matrix<double, 7, 1>;

Mat7d to_mat7d(const Mat7Q& a);
Vec7d to_vec7d(const Vec7Q& v);
// Binary doubles convert to rationals exactly.
Mat7Q rationalize(const Mat7d& a);
Vec7Q rationalize(const Vec7d& v);

double omega_d(const Vec7d& u, const Vec7d& v, const Vec7d& w);

// Max absolute value of the 35 infinitesimal stabilizer conditions.
double stabilizer_defect(const Mat7d& a);
// Max over basis triples of |omega(Au,Av,Aw) - omega(u,v,w)|.
double omega_invariance_defect(const Mat7d& a);

// Throws on non-finite input. Orthogonal to roundoff for skew input.
Mat7d matrix_exp(const Mat7d& a);

struct Trajectory {
  std::vector<double> t1;
  std::vector<double> t2;  // empty for one-parameter flows
  std::vector<Vec7d> points;
  Mat7d xi = Mat7d::Zero();
  std::optional<Mat7d> eta;
  Vec7d base = Vec7d::Zero();
  std::string generator;

  bool is_dim2() const { return eta.has_value(); }
};

// Samples exp(t xi) p on [t0, t1] with step dt. Requires xi in g2 to float
// tolerance 1e-10, dt > 0 and t1 >= t0.
Trajectory flow_dim1(const Mat7d& xi, const Vec7d& p, double t0, double t1,
                     double dt);

struct FlowGrid {
  double t1_max = 1.0;
  double t2_max = 1.0;
  double dt = 0.1;
};

// Samples exp(t2 eta) exp(t1 xi) p on [0,t1_max] x [0,t2_max]. Requires
// max|[xi,eta]| <= 1e-12.
Trajectory flow_dim2(const Mat7d& xi, const Mat7d& eta, const Vec7d& p,
                     const FlowGrid& grid);

enum class OrbitTag { point, circle, dense_line_in_2torus, torus2 };
enum class Dependence { rational, irrational, undetermined };

struct OrbitClass {
  OrbitTag tag = OrbitTag::point;
  std::vector<double> frequencies;  // retained plane frequencies
  Dependence dependence = Dependence::undetermined;
};

const char* to_string(OrbitTag t);
const char* to_string(Dependence d);

// A convergent p/q with q <= den_cap counts as rational when
// |r - p/q| <= tol / q^2 (the usual continued-fraction noise criterion).
bool detect_rational_ratio(double r, double tol, long den_cap = 1000000,
                           long* num = nullptr, long* den = nullptr);

// Invariant-plane decomposition of the skew matrix; planes where p projects
// to norm <= tol are discarded. The tag is point when none remain, circle
// when all retained frequency ratios test rational, dense_line_in_2torus
// otherwise. The dependence field reports undetermined when the verdict
// flips across a tenfold tolerance variation.
OrbitClass orbit_closure_classify(const Mat7d& xi, const Vec7d& p,
                                  double tol = 1e-6);

// Signed rotation rates of two commuting skew matrices on the common
// invariant planes of a generic combination. rates[j] = (rate of a,
// rate of b) on plane j against a fixed plane orientation; combinations
// x a + y b then rotate plane j at |x rates[j].first + y rates[j].second|,
// which lets tests dial in prescribed frequency ratios.
std::vector<std::pair<double, double>> cartan_rates(const Mat7d& a,
                                                    const Mat7d& b);

struct DriftReport {
  double max_norm_defect = 0.0;
  double max_omega_defect = 0.0;
  double max_residual_defect = 0.0;
};

// Recomputes, along the trajectory: the sphere-norm defect, the omega
// invariance defect of the transported group element, and the dynamical
// residual (i_velocity omega - dH at the sample, on a tangent frame) with
// the Hamiltonian rebuilt exactly from the rationalized generators.
DriftReport drift_report(const Trajectory& traj);

}  // namespace s6p
