#include "s6p/flows.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "s6p/hdw.hpp"
#include "s6p/octonion.hpp"

namespace s6p {

Mat7d to_mat7d(const Mat7Q& a) {
  Mat7d m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = to_double(a[i][j]);
  return m;
}

Vec7d to_vec7d(const Vec7Q& v) {
  Vec7d r;
  for (int i = 0; i < 7; ++i) r(i) = to_double(v[i]);
  return r;
}

Mat7Q rationalize(const Mat7d& a) {
  Mat7Q m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m[i][j] = rational_from_double(a(i, j));
  return m;
}

Vec7Q rationalize(const Vec7d& v) {
  Vec7Q r;
  for (int i = 0; i < 7; ++i) r[i] = rational_from_double(v(i));
  return r;
}

namespace {

// The 42 signed epsilon entries, flattened once.
struct EpsList {
  struct Entry {
    int i, j, k, sign;
  };
  std::vector<Entry> entries;
  EpsList() {
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
          const int e = epsilon(i, j, k);
          if (e != 0) entries.push_back({i - 1, j - 1, k - 1, e});
        }
  }
};

const EpsList& eps_list() {
  static const EpsList l;
  return l;
}

}  // namespace

double omega_d(const Vec7d& u, const Vec7d& v, const Vec7d& w) {
  double s = 0;
  for (const auto& e : eps_list().entries)
    s += e.sign * u(e.i) * v(e.j) * w(e.k);
  return s;
}

double stabilizer_defect(const Mat7d& a) {
  double worst = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) {
        double s = 0;
        for (int l = 1; l <= 7; ++l) {
          s += a(l - 1, i - 1) * epsilon(l, j, k);
          s += a(l - 1, j - 1) * epsilon(i, l, k);
          s += a(l - 1, k - 1) * epsilon(i, j, l);
        }
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

double omega_invariance_defect(const Mat7d& a) {
  double worst = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        const double v = omega_d(a.col(i), a.col(j), a.col(k)) -
                         epsilon(i + 1, j + 1, k + 1);
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

Mat7d matrix_exp(const Mat7d& a) {
  if (!a.allFinite())
    throw std::invalid_argument("matrix exponential of non-finite input");
  static const double b[14] = {
      64764752532480000., 32382376266240000., 7771770303897600.,
      1187353796428800.,  129060195264000.,   10559470521600.,
      670442572800.,      33522128640.,       1323241920.,
      40840800.,          960960.,            16380.,
      182.,               1.};
  constexpr double theta13 = 5.371920351148152;

  const double nrm = a.cwiseAbs().colwise().sum().maxCoeff();
  if (nrm == 0.0) return Mat7d::Identity();
  int s = 0;
  Mat7d x = a;
  if (nrm > theta13) {
    s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    x /= std::pow(2.0, s);
  }
  const Mat7d i7 = Mat7d::Identity();
  const Mat7d x2 = x * x;
  const Mat7d x4 = x2 * x2;
  const Mat7d x6 = x4 * x2;
  const Mat7d u =
      x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 +
           b[5] * x4 + b[3] * x2 + b[1] * i7);
  const Mat7d v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 +
                  b[4] * x4 + b[2] * x2 + b[0] * i7;
  Mat7d r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

Trajectory flow_dim1(const Mat7d& xi, const Vec7d& p, double t0, double t1,
                     double dt) {
  if (!(dt > 0) || t1 < t0) throw std::invalid_argument("bad time range");
  if (stabilizer_defect(xi) > 1e-10)
    throw std::invalid_argument("generator is not in g2 (float tolerance)");
  if (std::abs(p.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("base point is off the sphere");

  Trajectory traj;
  traj.xi = xi;
  traj.base = p;
  traj.generator = "exp(t xi) p";
  const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / dt + 1e-9));
  traj.t1.reserve(n + 1);
  traj.points.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = t0 + static_cast<double>(k) * dt;
    traj.t1.push_back(t);
    traj.points.push_back(matrix_exp(t * xi) * p);
  }
  return traj;
}

Trajectory flow_dim2(const Mat7d& xi, const Mat7d& eta, const Vec7d& p,
                     const FlowGrid& grid) {
  if (!(grid.dt > 0) || grid.t1_max < 0 || grid.t2_max < 0)
    throw std::invalid_argument("bad grid");
  const double comm = (xi * eta - eta * xi).cwiseAbs().maxCoeff();
  if (comm > 1e-12)
    throw std::invalid_argument("generators do not commute (float)");
  if (std::abs(p.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("base point is off the sphere");

  Trajectory traj;
  traj.xi = xi;
  traj.eta = eta;
  traj.base = p;
  traj.generator = "exp(t2 eta) exp(t1 xi) p";
  const auto n1 =
      static_cast<std::size_t>(std::floor(grid.t1_max / grid.dt + 1e-9));
  const auto n2 =
      static_cast<std::size_t>(std::floor(grid.t2_max / grid.dt + 1e-9));

  std::vector<Mat7d> exp1, exp2;
  exp1.reserve(n1 + 1);
  exp2.reserve(n2 + 1);
  for (std::size_t k = 0; k <= n1; ++k)
    exp1.push_back(matrix_exp(static_cast<double>(k) * grid.dt * xi));
  for (std::size_t k = 0; k <= n2; ++k)
    exp2.push_back(matrix_exp(static_cast<double>(k) * grid.dt * eta));

  for (std::size_t a = 0; a <= n1; ++a)
    for (std::size_t b = 0; b <= n2; ++b) {
      traj.t1.push_back(static_cast<double>(a) * grid.dt);
      traj.t2.push_back(static_cast<double>(b) * grid.dt);
      traj.points.push_back(exp2[b] * (exp1[a] * p));
    }
  return traj;
}

const char* to_string(OrbitTag t) {
  switch (t) {
    case OrbitTag::point: return "point";
    case OrbitTag::circle: return "circle";
    case OrbitTag::dense_line_in_2torus: return "dense_line_in_2torus";
    case OrbitTag::torus2: return "torus2";
  }
  return "?";
}

const char* to_string(Dependence d) {
  switch (d) {
    case Dependence::rational: return "rational";
    case Dependence::irrational: return "irrational";
    case Dependence::undetermined: return "undetermined";
  }
  return "?";
}

bool detect_rational_ratio(double r, double tol, long den_cap, long* num,
                           long* den) {
  if (!(r > 0) || !std::isfinite(r)) return false;
  // Continued-fraction convergents p/q of r.
  double x = r;
  long long p_prev = 1, q_prev = 0;
  long long p = static_cast<long long>(std::floor(x));
  long long q = 1;
  for (int iter = 0; iter < 64; ++iter) {
    const double approx = static_cast<double>(p) / static_cast<double>(q);
    const double qd = static_cast<double>(q);
    if (std::abs(r - approx) <= tol / (qd * qd)) {
      if (num) *num = static_cast<long>(p);
      if (den) *den = static_cast<long>(q);
      return true;
    }
    if (q > den_cap) return false;
    const double frac = x - std::floor(x);
    if (frac < 1e-18) return false;  // cannot refine further
    x = 1.0 / frac;
    const long long a = static_cast<long long>(std::floor(x));
    if (a > 1000000000000LL) return false;  // next denominator beyond any cap
    const long long pn = a * p + p_prev;
    const long long qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  return false;
}

namespace {

struct Plane {
  double freq = 0;
  Vec7d v = Vec7d::Zero(), w = Vec7d::Zero();
};

std::vector<Plane> invariant_planes(const Mat7d& xi, double tol) {
  const Mat7d s = xi.transpose() * xi;
  Eigen::SelfAdjointEigenSolver<Mat7d> es(s);
  // Eigenvalues of S carry O(eps |S|) noise; frequencies below that floor
  // are indistinguishable from fixed directions at any tolerance.
  const double noise =
      std::sqrt(1e3 * std::numeric_limits<double>::epsilon() *
                std::max(1.0, s.cwiseAbs().maxCoeff()));
  const double cutoff = std::max(tol, noise);
  std::vector<Vec7d> cols;
  for (int i = 0; i < 7; ++i) {
    const double theta = std::sqrt(std::max(0.0, es.eigenvalues()(i)));
    if (theta > cutoff) cols.push_back(es.eigenvectors().col(i));
  }
  std::vector<Plane> planes;
  while (!cols.empty()) {
    Plane pl;
    pl.v = cols.front().normalized();
    const Vec7d img = xi * pl.v;
    pl.freq = img.norm();
    pl.w = img / pl.freq;
    planes.push_back(pl);
    std::vector<Vec7d> rest;
    for (std::size_t i = 1; i < cols.size(); ++i) {
      Vec7d u = cols[i];
      u -= pl.v * pl.v.dot(u) + pl.w * pl.w.dot(u);
      for (const Vec7d& r : rest) u -= r * r.dot(u);
      if (u.norm() > 0.5) rest.push_back(u.normalized());
    }
    cols = std::move(rest);
  }
  return planes;
}

OrbitClass classify_once(const Mat7d& xi, const Vec7d& p, double tol) {
  OrbitClass oc;
  for (const Plane& pl : invariant_planes(xi, tol)) {
    const double proj = std::hypot(pl.v.dot(p), pl.w.dot(p));
    if (proj > tol) oc.frequencies.push_back(pl.freq);
  }
  if (oc.frequencies.empty()) {
    oc.tag = OrbitTag::point;
    return oc;
  }
  bool all_rational = true;
  for (std::size_t i = 0; i < oc.frequencies.size() && all_rational; ++i)
    for (std::size_t j = i + 1; j < oc.frequencies.size(); ++j)
      if (!detect_rational_ratio(oc.frequencies[i] / oc.frequencies[j], tol)) {
        all_rational = false;
        break;
      }
  oc.tag = all_rational ? OrbitTag::circle : OrbitTag::dense_line_in_2torus;
  return oc;
}

}  // namespace

OrbitClass orbit_closure_classify(const Mat7d& xi, const Vec7d& p,
                                  double tol) {
  if (!xi.allFinite() || !p.allFinite())
    throw std::invalid_argument("non-finite classification input");
  const double scale = std::max(1.0, xi.cwiseAbs().maxCoeff());
  if ((xi + xi.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("generator is not skew-symmetric");
  OrbitClass central = classify_once(xi, p, tol);
  const OrbitClass lo = classify_once(xi, p, tol / 10.0);
  const OrbitClass hi = classify_once(xi, p, tol * 10.0);
  if (lo.tag == central.tag && hi.tag == central.tag) {
    central.dependence = (central.tag == OrbitTag::dense_line_in_2torus)
                             ? Dependence::irrational
                             : Dependence::rational;
  } else {
    central.dependence = Dependence::undetermined;
  }
  return central;
}

std::vector<std::pair<double, double>> cartan_rates(const Mat7d& a,
                                                    const Mat7d& b) {
  if ((a * b - b * a).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("cartan_rates needs commuting generators");
  // A generic combination has simple invariant planes shared with a and b.
  for (double r : {0.318309886, 0.577215664, 1.414213562, 2.718281828}) {
    const Mat7d t = a + r * b;
    const auto planes = invariant_planes(t, 1e-6);
    if (planes.size() != 3) continue;
    std::vector<std::pair<double, double>> rates;
    bool ok = true;
    for (const Plane& pl : planes) {
      const Vec7d av = a * pl.v;
      const Vec7d bv = b * pl.v;
      const double ra = pl.w.dot(av);
      const double rb = pl.w.dot(bv);
      // Both must act inside the plane for the rates to mean anything.
      const double slack = 1e-8 * (1.0 + av.norm() + bv.norm());
      if ((av - ra * pl.w).norm() > slack || (bv - rb * pl.w).norm() > slack) {
        ok = false;
        break;
      }
      rates.emplace_back(ra, rb);
    }
    if (ok) return rates;
  }
  throw std::runtime_error("no generic combination found for cartan_rates");
}

namespace {

// Double-precision evaluator for a polynomial k-form with fixed exact
// coefficients; used to measure near-zero residual forms along samples.
struct FormEvaluator {
  struct PolyTerm {
    Exponents e;
    double c;
  };
  struct Term {
    Mask mask;
    std::vector<PolyTerm> poly;
  };
  int degree = 0;
  std::vector<Term> terms;

  static FormEvaluator from(const PolyForm& f) {
    FormEvaluator ev;
    ev.degree = f.degree();
    for (const auto& [m, p] : f.terms()) {
      Term t;
      t.mask = m;
      for (const auto& [e, c] : p.terms()) t.poly.push_back({e, to_double(c)});
      ev.terms.push_back(std::move(t));
    }
    return ev;
  }

  static double coeff_at(const Term& t, const Vec7d& x) {
    double s = 0;
    for (const auto& pt : t.poly) {
      double m = pt.c;
      for (int i = 0; i < 7; ++i)
        for (int k = 0; k < pt.e[i]; ++k) m *= x(i);
      s += m;
    }
    return s;
  }

  // Degree-1 evaluation.
  double eval1(const Vec7d& x, const Vec7d& u) const {
    double s = 0;
    for (const auto& t : terms) {
      const auto idx = mask_indices(t.mask);
      s += coeff_at(t, x) * u(idx[0] - 1);
    }
    return s;
  }

  // Degree-2 evaluation.
  double eval2(const Vec7d& x, const Vec7d& u, const Vec7d& v) const {
    double s = 0;
    for (const auto& t : terms) {
      const auto idx = mask_indices(t.mask);
      const int a = idx[0] - 1, b = idx[1] - 1;
      s += coeff_at(t, x) * (u(a) * v(b) - u(b) * v(a));
    }
    return s;
  }
};

std::array<Vec7d, 6> tangent_frame_d(const Vec7d& p) {
  int pivot = 0;
  for (int i = 0; i < 7; ++i)
    if (std::abs(p(i)) > std::abs(p(pivot))) pivot = i;
  std::array<Vec7d, 6> frame;
  int k = 0;
  for (int i = 0; i < 7; ++i) {
    if (i == pivot) continue;
    Vec7d e = Vec7d::Zero();
    e(i) = 1;
    Vec7d u = e - p(i) * p / p.squaredNorm();
    for (int j = 0; j < k; ++j) u -= frame[j] * frame[j].dot(u);
    frame[k++] = u.normalized();
  }
  return frame;
}

}  // namespace

DriftReport drift_report(const Trajectory& traj) {
  DriftReport rep;
  const bool dim2 = traj.is_dim2();

  FormEvaluator residual;
  if (dim2)
    residual = FormEvaluator::from(
        dim2_residual_form(rationalize(traj.xi), rationalize(*traj.eta)));
  else
    residual = FormEvaluator::from(dim1_residual_form(rationalize(traj.xi)));

  for (std::size_t k = 0; k < traj.points.size(); ++k) {
    const Vec7d& p = traj.points[k];
    rep.max_norm_defect =
        std::max(rep.max_norm_defect, std::abs(p.norm() - 1.0));

    Mat7d a = matrix_exp(traj.t1[k] * traj.xi);
    if (dim2) a = matrix_exp(traj.t2[k] * *traj.eta) * a;
    rep.max_omega_defect =
        std::max(rep.max_omega_defect, omega_invariance_defect(a));

    const auto frame = tangent_frame_d(p);
    double worst = 0;
    if (dim2) {
      for (const auto& u : frame)
        worst = std::max(worst, std::abs(residual.eval1(p, u)));
    } else {
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          worst = std::max(worst,
                           std::abs(residual.eval2(p, frame[i], frame[j])));
    }
    rep.max_residual_defect = std::max(rep.max_residual_defect, worst);
  }
  return rep;
}

}  // namespace s6p
