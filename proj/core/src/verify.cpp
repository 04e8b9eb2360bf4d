#include "s6p/verify.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <sstream>

#include "s6p/flows.hpp"
#include "s6p/g2.hpp"
#include "s6p/hdw.hpp"
#include "s6p/linear_type.hpp"
#include "s6p/octonion.hpp"
#include "s6p/sphere.hpp"

namespace s6p {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

Octonion random_octonion(std::mt19937_64& rng) {
  Octonion o;
  for (auto& c : o.c) c = random_rational(rng, 9, 9);
  return o;
}

struct Battery {
  const VerifyOptions& opts;
  std::vector<CheckResult>& results;
  const G2Basis& g2;

  void run(const std::string& slug, const std::function<bool(std::string&)>& body) {
    CheckResult r;
    r.slug = slug;
    try {
      r.pass = body(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  if (opts.samples < 1) throw std::invalid_argument("samples must be >= 1");

  std::vector<CheckResult> results;
  const G2Basis g2 = compute_g2_basis();
  Battery b{opts, results, g2};
  const int n = opts.samples;

  b.run("octonion-composition-norm", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed);
    for (int k = 0; k < 10 * n; ++k) {
      const Octonion x = random_octonion(rng), y = random_octonion(rng);
      if (oct_multiply(x, y).norm2() != x.norm2() * y.norm2()) {
        d = "norm multiplicativity violated";
        return false;
      }
    }
    d = std::to_string(10 * n) + " exact instances";
    return true;
  });

  b.run("octonion-alternativity", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 1);
    for (int k = 0; k < 2 * n; ++k) {
      const Octonion x = random_octonion(rng), y = random_octonion(rng);
      const Octonion xx = oct_multiply(x, x);
      if (oct_multiply(x, oct_multiply(x, y)) != oct_multiply(xx, y)) return false;
      if (oct_multiply(oct_multiply(y, x), x) != oct_multiply(y, xx)) return false;
    }
    d = std::to_string(2 * n) + " exact instances";
    return true;
  });

  b.run("cross-product-consistency", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 2);
    for (int k = 0; k < 2 * n; ++k) {
      Vec7Q u, v;
      for (auto& x : u) x = random_rational(rng);
      for (auto& x : v) x = random_rational(rng);
      const Vec7Q c = cross(u, v);
      // epsilon expansion and orthogonality to both arguments
      Vec7Q viaeps{};
      for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
          for (int l = 1; l <= 7; ++l)
            if (int e = epsilon(i, j, l); e != 0)
              viaeps[l - 1] += rat(e) * u[i - 1] * v[j - 1];
      if (c != viaeps || sgn(dot(c, u)) != 0 || sgn(dot(c, v)) != 0)
        return false;
      // against the octonion product on an orthogonal pair
      if (sgn(norm2(u)) == 0) continue;
      const Vec7Q vperp = sub(v, scale(dot(u, v) / norm2(u), u));
      const Octonion prod = oct_multiply(Octonion::from_imaginary(u),
                                         Octonion::from_imaginary(vperp));
      if (cross(u, vperp) != prod.imaginary() || sgn(prod.c[0]) != 0)
        return false;
    }
    d = std::to_string(2 * n) + " exact instances";
    return true;
  });

  b.run("omega-tilde-antisymmetric", [&](std::string& d) {
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
          Vec7Q ei{}, ej{}, ek{};
          ei[i - 1] = 1;
          ej[j - 1] = 1;
          ek[k - 1] = 1;
          const std::array<Vec7Q, 3> v{ei, ej, ek};
          Vec7Q p{};
          if (evaluate(omega_tilde(), p, v) != rat(epsilon(i, j, k)))
            return false;
        }
    d = "all 343 basis triples match epsilon";
    return true;
  });

  b.run("two-plectic", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 3);
    std::array<Vec7Q, 7> full{};
    for (int i = 0; i < 7; ++i) full[i][i] = 1;
    for (int k = 0; k < 3; ++k) {
      Vec7Q p;
      for (auto& x : p) x = random_rational(rng);
      if (!is_two_plectic_at(omega_tilde(), p, full)) return false;
    }
    const SpherePointQ north = north_pole();
    const Subspace6 tn = Subspace6::tangent_at_north();
    if (!is_two_plectic_at(omega_tilde(), north.coords(), tn.basis))
      return false;
    PolyForm zero3(3);
    if (is_two_plectic_at(zero3, north.coords(), tn.basis)) return false;
    d = "R^7 and T_N S^6; zero form rejected";
    return true;
  });

  b.run("omega-north-expansion", [&](std::string& d) {
    PolyForm expected(3);
    expected.add_term(mask_of({2, 4, 6}), Poly7::constant(1));
    expected.add_term(mask_of({2, 5, 7}), Poly7::constant(-1));
    expected.add_term(mask_of({3, 4, 7}), Poly7::constant(-1));
    expected.add_term(mask_of({3, 5, 6}), Poly7::constant(-1));
    // omega_north lives in subspace labels 1..6 <-> ambient 2..7.
    PolyForm relabeled(3);
    for (const auto& [m, p] : expected.terms()) {
      Mask sm = 0;
      for (int i : mask_indices(m)) sm |= static_cast<Mask>(1u << (i - 2));
      relabeled.add_term(sm, p);
    }
    d = "coefficientwise match";
    return omega_north() == relabeled;
  });

  b.run("delta-omega-north-trivial", [&](std::string& d) {
    const auto coeffs = vw_wedge_coefficients(omega_north());
    auto expect_pair = [&](int r, int s, int v1, int v2) {
      Poly7 want = rat(-2) * (Poly7::var(v1) * Poly7::var(v1) +
                              Poly7::var(v2) * Poly7::var(v2));
      auto it = coeffs.find(mask_of({r, s}));
      return it != coeffs.end() && it->second == want;
    };
    if (!expect_pair(1, 2, 1, 2) || !expect_pair(3, 4, 3, 4) ||
        !expect_pair(5, 6, 5, 6))
      return false;
    if (delta_is_trivial(omega_north()) != DeltaVerdict::trivial) return false;
    // Negative controls from the other linear types.
    PolyForm product(3);
    product.add_term(mask_of({1, 2, 3}), Poly7::constant(1));
    product.add_term(mask_of({4, 5, 6}), Poly7::constant(1));
    if (delta_is_trivial(product) != DeltaVerdict::nontrivial) return false;
    if (delta_is_trivial(PolyForm(3)) != DeltaVerdict::nontrivial) return false;
    d = "three sum-of-squares pairs; product and zero forms non-trivial";
    return true;
  });

  b.run("complex-type-certificate", [&](std::string& d) {
    const Mat6Q j = j_north();
    Mat6Q minus_j = j;
    for (auto& row : minus_j)
      for (auto& x : row) x = -x;
    if (!certify_complex_type(omega_north(), j)) return false;
    if (!certify_complex_type(omega_north(), minus_j)) return false;
    // Incompatible: J with the rotation of one plane reversed is still
    // almost complex but differs from both J and -J, so it must fail.
    Mat6Q bad = j;
    for (int r = 0; r < 6; ++r) {
      bad[r][4] = -bad[r][4];
      bad[r][5] = -bad[r][5];
    }
    if (certify_complex_type(omega_north(), bad)) return false;
    d = "J and -J certified, incompatible J rejected";
    return true;
  });

  b.run("contraction-kernel", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 4);
    for (int k = 0; k < n; ++k) {
      const SpherePointQ p = random_rational_sphere_point(rng);
      Vec7Q u = random_rational_tangent(rng, p);
      if (is_zero(u)) continue;
      const auto basis = tangent_basis(p);
      const Subspace6 sub{basis};
      const PolyForm alpha = restrict_to_subspace(omega_tilde(), sub, p.coords());
      // coordinates of u in the tangent basis
      QMatrix bm(7, 6);
      for (int c = 0; c < 6; ++c)
        for (int r = 0; r < 7; ++r) bm.at(r, c) = basis[c][r];
      QVec rhs(u.begin(), u.end());
      auto coords = solve(bm, rhs);
      if (!coords) return false;
      Vec6Q v6;
      for (int i = 0; i < 6; ++i) v6[i] = (*coords)[i];
      const auto kernel = contraction_kernel(alpha, v6);
      if (kernel.size() != 2) return false;
      // span{u, p x u} in ambient coordinates
      QMatrix span(4, 7);
      for (int i = 0; i < 7; ++i) {
        span.at(0, i) = u[i];
        span.at(1, i) = cross(p.coords(), u)[i];
      }
      for (int kv = 0; kv < 2; ++kv) {
        Vec7Q amb{};
        for (int c = 0; c < 6; ++c)
          amb = add(amb, scale(kernel[kv][c], basis[c]));
        for (int i = 0; i < 7; ++i) span.at(2 + kv, i) = amb[i];
      }
      if (rank(span) != 2) return false;
    }
    d = std::to_string(n) + " random points: kernel = span{u, p x u}";
    return true;
  });

  b.run("g2-dimension", [&](std::string& d) {
    d = "dim = " + std::to_string(g2.elements.size());
    return g2.elements.size() == 14;
  });

  b.run("g2-inside-so7", [&](std::string& d) {
    for (const auto& m : g2.elements)
      if (!is_antisymmetric(m)) return false;
    d = "all 14 basis matrices antisymmetric";
    return true;
  });

  b.run("g2-bracket-closure", [&](std::string& d) {
    // structure constants exist by construction; check them against the
    // brackets and the antisymmetry c_ijk = -c_jik.
    for (int i = 0; i < 14; ++i)
      for (int j = 0; j < 14; ++j) {
        Mat7Q acc{};
        for (int k = 0; k < 14; ++k)
          acc = mat_add(acc, mat_scale(g2.structure[i][j][k], g2.elements[k]));
        if (!is_zero(mat_sub(acc, bracket(g2.elements[i], g2.elements[j]))))
          return false;
        for (int k = 0; k < 14; ++k)
          if (g2.structure[i][j][k] != -g2.structure[j][i][k]) return false;
      }
    d = "all 196 brackets reproduced exactly";
    return true;
  });

  b.run("g2-jacobi", [&](std::string& d) {
    d = "exact, all triples";
    return structure_constants_satisfy_jacobi(g2);
  });

  b.run("g2-killing-negative-definite", [&](std::string& d) {
    const QMatrix k = killing_form(g2);
    Eigen::MatrixXd kd(14, 14);
    for (int i = 0; i < 14; ++i)
      for (int j = 0; j < 14; ++j) kd(i, j) = to_double(k.at(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kd);
    const double maxev = es.eigenvalues().maxCoeff();
    d = "max eigenvalue " + fmt(maxev);
    return maxev < -1e-8;
  });

  b.run("g2-stabilizes-omega", [&](std::string& d) {
    for (const auto& m : g2.elements)
      if (!lie_derivative(PolyField::linear(m), omega_tilde()).is_zero())
        return false;
    d = "L_{X_xi} omega = 0 exactly, all basis elements";
    return true;
  });

  b.run("exp-preserves-omega", [&](std::string& d) {
    double worst = 0;
    for (const auto& m : g2.elements)
      for (double t : {0.1, 1.0, 5.0})
        worst = std::max(
            worst, omega_invariance_defect(matrix_exp(t * to_mat7d(m))));
    d = "max defect " + fmt(worst);
    return worst <= 1e-9;
  });

  b.run("nijenhuis-closed-vs-oracle", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 5);
    for (int k = 0; k < n; ++k) {
      const SpherePointQ p = random_rational_sphere_point(rng);
      Vec7Q u, v;
      for (auto& x : u) x = random_rational(rng, 3, 3);
      for (auto& x : v) x = random_rational(rng, 3, 3);
      const Vec7Q up = sub(u, scale(dot(u, p.coords()), p.coords()));
      const Vec7Q vp = sub(v, scale(dot(v, p.coords()), p.coords()));
      const TangentVectorQ closed =
          nijenhuis_closed(p, TangentVectorQ(p, up), TangentVectorQ(p, vp));
      if (nijenhuis_oracle(p, u, v).vec() != closed.vec()) return false;
    }
    d = std::to_string(n) + " random points, exact agreement";
    return true;
  });

  b.run("nijenhuis-north-value", [&](std::string& d) {
    const SpherePointQ north = north_pole();
    Vec7Q e3{}, e5{}, e7{};
    e3[2] = 1;
    e5[4] = 1;
    e7[6] = 1;
    const TangentVectorQ val =
        nijenhuis_closed(north, TangentVectorQ(north, e3), TangentVectorQ(north, e5));
    d = "N_J(d3, d5) = 4 d7 at N";
    return val.vec() == scale(rat(4), e7);
  });

  b.run("omega-metric-identity", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 6);
    for (int k = 0; k < 2 * n; ++k) {
      const SpherePointQ p = random_rational_sphere_point(rng);
      const TangentVectorQ u(p, random_rational_tangent(rng, p));
      const TangentVectorQ v(p, random_rational_tangent(rng, p));
      const TangentVectorQ w(p, random_rational_tangent(rng, p));
      if (sgn(omega_metric_residual(p, u, v, w)) != 0) return false;
    }
    d = std::to_string(2 * n) + " random triples, residual exactly 0";
    return true;
  });

  b.run("nijenhuis-rank", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 7);
    const int pts = std::min(n, 20);
    for (int k = 0; k < pts; ++k)
      if (nijenhuis_rank(random_rational_sphere_point(rng)) != 6) return false;
    d = "rank 6 at " + std::to_string(pts) + " random points";
    return true;
  });

  b.run("totally-real-fundamental-fields", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 8);
    std::vector<SpherePointQ> pts;
    for (int k = 0; k < 8; ++k) pts.push_back(random_rational_sphere_point(rng));
    const int trials = std::max(4, n / 10);
    for (int k = 0; k < trials; ++k) {
      Mat7Q xi = random_g2_element(g2, rng);
      if (is_zero(xi)) continue;
      if (totally_real_witness(g2, xi, pts).consistent) return false;
    }
    const TotallyRealWitness zero = totally_real_witness(g2, Mat7Q{}, pts);
    if (!zero.consistent) return false;
    d = std::to_string(trials) + " nonzero elements inconsistent; zero consistent";
    return true;
  });

  b.run("potential-d-theta", [&](std::string& d) {
    d = "d((1/3) i_E omega) = omega exactly";
    return (exterior_derivative(theta_tilde()) - omega_tilde()).is_zero();
  });

  b.run("theta-g2-invariant", [&](std::string& d) {
    for (const auto& m : g2.elements)
      if (!lie_derivative(PolyField::linear(m), theta_tilde()).is_zero())
        return false;
    d = "L_{X_xi} theta = 0 exactly, all basis elements";
    return true;
  });

  b.run("hdw-dim1-residual", [&](std::string& d) {
    for (const auto& m : g2.elements)
      if (!hdw_dim1(m).residual.is_zero()) return false;
    const HDW1Solution zero = hdw_dim1(Mat7Q{});
    if (!zero.hamiltonian.is_zero() || !zero.residual.is_zero()) return false;
    d = "zero polynomial residual, all 14 basis elements";
    return true;
  });

  b.run("hdw-dim1-gauge", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 9);
    for (int k = 0; k < 5; ++k) {
      Poly7 f;
      for (int i = 1; i <= 7; ++i)
        for (int j = i; j <= 7; ++j)
          f += random_rational(rng) * (Poly7::var(i) * Poly7::var(j));
      if (!complete_dim1_solution_set_check(g2.elements[k % 14], f))
        return false;
    }
    d = "5 random quadratic gauge functions, residual stays 0";
    return true;
  });

  b.run("hdw-dim2-residual", [&](std::string& d) {
    const CartanPair cartan = cartan_subalgebra(g2, opts.seed);
    const HDW2Solution sol = hdw_dim2(cartan.h1, cartan.h2);
    if (!sol.residual.is_zero()) return false;
    bool rejected = false;
    for (int i = 0; i < 14 && !rejected; ++i)
      for (int j = i + 1; j < 14 && !rejected; ++j) {
        const Mat7Q br = bracket(g2.elements[i], g2.elements[j]);
        if (is_zero(br)) continue;
        try {
          hdw_dim2(g2.elements[i], g2.elements[j]);
        } catch (const NonCommutingError& e) {
          rejected = is_zero(mat_sub(e.bracket_value, br));
        }
      }
    d = "Cartan pair residual 0; non-commuting pair rejected with its bracket";
    return rejected;
  });

  b.run("zero-hamiltonian-bivector", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 10);
    for (int k = 0; k < 2 * n; ++k) {
      const SpherePointQ p = random_rational_sphere_point(rng);
      Vec7Q v;
      for (auto& x : v) x = random_rational(rng, 3, 3);
      const TangentVectorQ w(p, random_rational_tangent(rng, p));
      if (sgn(zero_hamiltonian_residual(v, p, w)) != 0) return false;
    }
    // Documented off-sphere control: x = 2 e1, v = e2, w = e1 gives 2.
    Vec7Q x{}, v{}, w{};
    x[0] = 2;
    v[1] = 1;
    w[0] = 1;
    if (zero_hamiltonian_value(v, x, w) != rat(2)) return false;
    d = std::to_string(2 * n) + " on-sphere zeros; off-sphere control = 2";
    return true;
  });

  b.run("commutation-x-jx", [&](std::string& d) {
    std::mt19937_64 rng(opts.seed + 11);
    std::vector<SpherePointQ> pts;
    for (int k = 0; k < 20; ++k) pts.push_back(random_rational_sphere_point(rng));
    for (const auto& m : g2.elements)
      for (const auto& p : pts)
        if (!is_zero(bracket_x_jx_at(m, p))) return false;
    // Negative control: a random skew matrix outside g2.
    Mat7Q skew{};
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) {
        skew[i][j] = random_rational(rng);
        skew[j][i] = -skew[i][j];
      }
    if (annihilates_omega(skew)) return false;
    bool nonzero = false;
    for (const auto& p : pts)
      if (!is_zero(bracket_x_jx_unchecked(skew, p))) {
        nonzero = true;
        break;
      }
    d = "zero for all basis elements at 20 points; non-g2 control nonzero";
    return nonzero;
  });

  b.run("flow-drift", [&](std::string& d) {
    const Mat7d xi = to_mat7d(g2.elements[0]);
    Vec7d p = Vec7d::Ones().normalized();
    const Trajectory traj = flow_dim1(xi, p, 0.0, 10.0, 0.1);
    const DriftReport rep = drift_report(traj);
    d = "norm " + fmt(rep.max_norm_defect) + ", omega " +
        fmt(rep.max_omega_defect) + ", residual " +
        fmt(rep.max_residual_defect);
    return rep.max_norm_defect <= 1e-10 && rep.max_omega_defect <= 1e-9 &&
           rep.max_residual_defect <= 1e-8;
  });

  b.run("orbit-trichotomy", [&](std::string& d) {
    const CartanPair cartan = cartan_subalgebra(g2, opts.seed);
    const Mat7d h1 = to_mat7d(cartan.h1), h2 = to_mat7d(cartan.h2);
    const auto rates = cartan_rates(h1, h2);

    // Fixed point: the kernel direction of a nonzero combination.
    Eigen::SelfAdjointEigenSolver<Mat7d> es(h1.transpose() * h1);
    const Vec7d fixed = es.eigenvectors().col(0).normalized();
    if (orbit_closure_classify(h1, fixed).tag != OrbitTag::point) return false;

    // Solve for combinations with prescribed frequencies on planes 0 and 1.
    auto combo = [&](double f0, double f1) {
      Eigen::Matrix2d m;
      m << rates[0].first, rates[0].second, rates[1].first, rates[1].second;
      Eigen::Vector2d rhs(f0, f1);
      const Eigen::Vector2d xy = m.partialPivLu().solve(rhs);
      return (xy(0) * h1 + xy(1) * h2).eval();
    };
    std::mt19937_64 rng(opts.seed + 12);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec7d p;
    for (int i = 0; i < 7; ++i) p(i) = gauss(rng);
    p.normalize();

    const OrbitClass circ = orbit_closure_classify(combo(1.0, 2.0), p);
    if (circ.tag != OrbitTag::circle) return false;
    const OrbitClass dense =
        orbit_closure_classify(combo(1.0, 1.6180339887), p);
    if (dense.tag != OrbitTag::dense_line_in_2torus) return false;
    d = "point / circle / dense_line_in_2torus all reproduced";
    return true;
  });

  return results;
}

}  // namespace s6p
