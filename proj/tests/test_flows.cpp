#include <doctest.h>

#include <limits>
#include <random>
#include <sstream>

#include "s6p/flows.hpp"
#include "s6p/g2.hpp"
#include "s6p/serialize.hpp"

#include <json.hpp>

using namespace s6p;

namespace {

const G2Basis& g2() {
  static const G2Basis basis = compute_g2_basis();
  return basis;
}

Mat7d random_skew(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Mat7d a = Mat7d::Zero();
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      a(i, j) = u(rng);
      a(j, i) = -a(i, j);
    }
  return a;
}

}  // namespace

TEST_CASE("matrix exponential") {
  CHECK(matrix_exp(Mat7d::Zero()) == Mat7d::Identity());

  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const Mat7d a = random_skew(rng);
    const double n1 = a.cwiseAbs().colwise().sum().maxCoeff();
    const double t = u(rng) * 100.0 / n1;
    const Mat7d e = matrix_exp(t * a);
    worst = std::max(
        worst,
        (e.transpose() * e - Mat7d::Identity()).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 1e-12);

  // one-parameter group law
  for (int k = 0; k < 50; ++k) {
    const Mat7d a = to_mat7d(g2().elements[k % 14]);
    const double s = u(rng) * 10, t = u(rng) * 10;
    const Mat7d lhs = matrix_exp((s + t) * a);
    const Mat7d rhs = matrix_exp(s * a) * matrix_exp(t * a);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-11);
  }

  Mat7d bad = Mat7d::Zero();
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(matrix_exp(bad), std::invalid_argument);
}

TEST_CASE("one-parameter flows") {
  const Mat7d xi = to_mat7d(g2().elements[0]);

  // xi_0 kills e1: constant trajectory at a fixed point
  Vec7d north = Vec7d::Zero();
  north(0) = 1;
  REQUIRE((xi * north).norm() == 0.0);
  const Trajectory fixed = flow_dim1(xi, north, 0.0, 2.0, 0.5);
  CHECK(fixed.points.size() == 5);
  for (const auto& p : fixed.points) CHECK((p - north).norm() <= 1e-13);

  // drift contract over [0, 100]
  const Vec7d p = Vec7d::Ones().normalized();
  const Trajectory traj = flow_dim1(xi, p, 0.0, 100.0, 0.1);
  CHECK(traj.points.size() == 1001);
  const DriftReport rep = drift_report(traj);
  CHECK(rep.max_norm_defect <= 1e-10);
  CHECK(rep.max_omega_defect <= 1e-9);
  CHECK(rep.max_residual_defect <= 1e-8);

  // finite-difference velocity matches xi.psi to O(dt^2)
  for (double dt : {0.1, 0.05}) {
    const Trajectory t2 = flow_dim1(xi, p, 0.0, 1.0, dt);
    double worst = 0;
    for (std::size_t k = 1; k + 1 < t2.points.size(); ++k) {
      const Vec7d fd = (t2.points[k + 1] - t2.points[k - 1]) / (2 * dt);
      worst = std::max(worst, (fd - xi * t2.points[k]).norm());
    }
    CHECK(worst <= 2.0 * dt * dt * std::pow(xi.norm(), 3));
  }

  std::mt19937_64 rng(92);
  CHECK_THROWS_AS(flow_dim1(random_skew(rng), north, 0.0, 1.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(flow_dim1(xi, 2 * north, 0.0, 1.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(flow_dim1(xi, north, 0.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("two-parameter flows") {
  const CartanPair pair = cartan_subalgebra(g2(), 7);
  const Mat7d h1 = to_mat7d(pair.h1), h2 = to_mat7d(pair.h2);
  const Vec7d p = Vec7d::Ones().normalized();

  // eta = 0 reduces to the one-parameter flow in t1
  const Trajectory zero_eta =
      flow_dim2(h1, Mat7d::Zero(), p, {1.0, 0.0, 0.25});
  const Trajectory dim1 = flow_dim1(h1, p, 0.0, 1.0, 0.25);
  REQUIRE(zero_eta.points.size() == dim1.points.size());
  for (std::size_t k = 0; k < dim1.points.size(); ++k)
    CHECK((zero_eta.points[k] - dim1.points[k]).norm() <= 1e-14);

  // commuting factors swap
  const Mat7d e1m = matrix_exp(h1), e2m = matrix_exp(h2);
  CHECK((e1m * e2m - e2m * e1m).cwiseAbs().maxCoeff() <= 1e-11);

  // norm drift across a grid
  const Trajectory grid = flow_dim2(h1, h2, p, {5.0, 5.0, 0.25});
  const DriftReport rep = drift_report(grid);
  CHECK(rep.max_norm_defect <= 1e-10);
  CHECK(rep.max_residual_defect <= 1e-8);

  // non-commuting rejection
  const Mat7d x0 = to_mat7d(g2().elements[0]);
  const Mat7d x1 = to_mat7d(g2().elements[1]);
  REQUIRE((x0 * x1 - x1 * x0).cwiseAbs().maxCoeff() > 1e-6);
  CHECK_THROWS_AS(flow_dim2(x0, x1, p, {1.0, 1.0, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("rational ratio detection") {
  CHECK(detect_rational_ratio(2.0, 1e-6));
  CHECK(detect_rational_ratio(1.5 + 1e-13, 1e-6));
  long num = 0, den = 0;
  CHECK(detect_rational_ratio(2.0 / 3.0, 1e-6, 1000000, &num, &den));
  CHECK(num == 2);
  CHECK(den == 3);
  const double golden = 1.6180339887498949;
  CHECK_FALSE(detect_rational_ratio(golden, 1e-6));
  CHECK_FALSE(detect_rational_ratio(golden, 1e-5));
  CHECK_FALSE(detect_rational_ratio(golden, 1e-7));
  CHECK_FALSE(detect_rational_ratio(std::sqrt(2.0), 1e-6));
}

TEST_CASE("orbit closure classification") {
  const CartanPair pair = cartan_subalgebra(g2(), 7);
  const Mat7d h1 = to_mat7d(pair.h1), h2 = to_mat7d(pair.h2);

  // fixed point
  Eigen::SelfAdjointEigenSolver<Mat7d> es(h1.transpose() * h1);
  const Vec7d fixed = es.eigenvectors().col(0).normalized();
  const OrbitClass pt = orbit_closure_classify(h1, fixed);
  CHECK(pt.tag == OrbitTag::point);
  CHECK(pt.frequencies.empty());

  const auto rates = cartan_rates(h1, h2);
  REQUIRE(rates.size() == 3);
  auto combo = [&](double f0, double f1) {
    Eigen::Matrix2d m;
    m << rates[0].first, rates[0].second, rates[1].first, rates[1].second;
    const Eigen::Vector2d xy = m.partialPivLu().solve(Eigen::Vector2d(f0, f1));
    return (xy(0) * h1 + xy(1) * h2).eval();
  };
  std::mt19937_64 rng(93);
  std::normal_distribution<double> gauss;
  Vec7d p;
  for (int i = 0; i < 7; ++i) p(i) = gauss(rng);
  p.normalize();

  for (double tol : {1e-5, 1e-6, 1e-7}) {
    const OrbitClass circ = orbit_closure_classify(combo(1.0, 2.0), p, tol);
    CHECK(circ.tag == OrbitTag::circle);
    CHECK(circ.dependence == Dependence::rational);
    const OrbitClass dense =
        orbit_closure_classify(combo(1.0, 1.6180339887), p, tol);
    CHECK(dense.tag == OrbitTag::dense_line_in_2torus);
    CHECK(dense.dependence == Dependence::irrational);
  }

  // a single retained frequency closes up into a circle
  const OrbitClass single = orbit_closure_classify(
      to_mat7d(g2().elements[0]), Vec7d::Unit(1), 1e-6);
  CHECK(single.tag == OrbitTag::circle);
}

TEST_CASE("drift reports") {
  // zero generator: strictly constant trajectory, all defects zero
  Vec7d north = Vec7d::Zero();
  north(0) = 1;
  const Trajectory constant = flow_dim1(Mat7d::Zero(), north, 0.0, 1.0, 0.2);
  const DriftReport rep = drift_report(constant);
  CHECK(rep.max_norm_defect == 0.0);
  CHECK(rep.max_omega_defect == 0.0);
  CHECK(rep.max_residual_defect == 0.0);

  // a radially perturbed sample trips the norm defect
  Trajectory tampered = flow_dim1(to_mat7d(g2().elements[0]),
                                  Vec7d::Ones().normalized(), 0.0, 1.0, 0.1);
  tampered.points[5] *= 1.0 + 1e-6;
  CHECK(drift_report(tampered).max_norm_defect > 1e-7);
}

TEST_CASE("trajectory serialization") {
  const Trajectory traj = flow_dim1(to_mat7d(g2().elements[2]),
                                    Vec7d::Unit(3), 0.0, 0.5, 0.25);
  std::ostringstream os;
  trajectory_to_csv(traj, os);
  const std::string csv = os.str();
  CHECK(csv.rfind("t,x1,x2,x3,x4,x5,x6,x7\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows

  const auto j = nlohmann::json::parse(trajectory_to_json(traj));
  CHECK(j.at("meta").at("generator") == "exp(t xi) p");
  CHECK(j.at("meta").at("base_point").size() == 7);
  CHECK(j.at("meta").contains("grid"));
  CHECK(j.at("samples").size() == 3);

  const CartanPair pair = cartan_subalgebra(g2(), 7);
  const Trajectory t2 = flow_dim2(to_mat7d(pair.h1), to_mat7d(pair.h2),
                                  Vec7d::Unit(2), {0.5, 0.5, 0.25});
  std::ostringstream os2;
  trajectory_to_csv(t2, os2);
  CHECK(os2.str().rfind("t1,t2,x1,x2,x3,x4,x5,x6,x7\n", 0) == 0);
}
