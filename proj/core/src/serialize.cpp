#include "s6p/serialize.hpp"

#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "s6p/octonion.hpp"

namespace s6p {

using ordered_json = nlohmann::ordered_json;

std::string form_to_json(const PolyForm& f) {
  ordered_json j;
  j["degree"] = f.degree();
  j["terms"] = ordered_json::array();
  for (const auto& [m, p] : f.terms()) {
    ordered_json term;
    term["indices"] = mask_indices(m);
    ordered_json coeff = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
      ordered_json mono;
      mono["exponents"] = std::vector<int>(e.begin(), e.end());
      mono["value"] = to_string(c);
      coeff.push_back(std::move(mono));
    }
    term["coeff"] = std::move(coeff);
    j["terms"].push_back(std::move(term));
  }
  return j.dump(2);
}

PolyForm form_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  PolyForm f(j.at("degree").get<int>());
  for (const auto& term : j.at("terms")) {
    Mask m = 0;
    for (int i : term.at("indices")) m |= static_cast<Mask>(1u << (i - 1));
    Poly7 p;
    for (const auto& mono : term.at("coeff")) {
      Exponents e{};
      const auto& ex = mono.at("exponents");
      for (int i = 0; i < 7; ++i) e[i] = static_cast<std::uint8_t>(ex.at(i).get<int>());
      p.add_term(e, rational_from_string(mono.at("value").get<std::string>()));
    }
    f.add_term(m, p);
  }
  return f;
}

std::string g2_basis_to_json(const G2Basis& g2) {
  ordered_json j;
  j["basis"] = ordered_json::array();
  for (std::size_t k = 0; k < g2.elements.size(); ++k) {
    ordered_json el;
    el["name"] = "xi_" + std::to_string(k);
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < 7; ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < 7; ++c) row.push_back(to_string(g2.elements[k][r][c]));
      rows.push_back(std::move(row));
    }
    el["matrix"] = std::move(rows);
    j["basis"].push_back(std::move(el));
  }
  ordered_json sc = ordered_json::array();
  const int n = static_cast<int>(g2.elements.size());
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        const Rational& c = g2.structure[i][jj][k];
        if (sgn(c) == 0) continue;
        sc.push_back(ordered_json::array({i, jj, k, to_string(c)}));
      }
  j["structure_constants"] = std::move(sc);
  return j.dump(2);
}

G2Basis g2_basis_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  G2Basis g2;
  for (const auto& el : j.at("basis")) {
    Mat7Q m{};
    const auto& rows = el.at("matrix");
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c)
        m[r][c] = rational_from_string(rows.at(r).at(c).get<std::string>());
    g2.elements.push_back(m);
  }
  const int n = static_cast<int>(g2.elements.size());
  g2.structure.assign(n, std::vector<QVec>(n, QVec(n, Rational(0))));
  if (j.contains("structure_constants"))
    for (const auto& t : j.at("structure_constants"))
      g2.structure[t.at(0).get<int>()][t.at(1).get<int>()]
                  [t.at(2).get<int>()] =
          rational_from_string(t.at(3).get<std::string>());
  return g2;
}

std::string multiplication_table_json() {
  auto label = [](const Octonion& o) -> std::string {
    for (int k = 0; k < 8; ++k) {
      if (sgn(o.c[k]) == 0) continue;
      std::string s = sgn(o.c[k]) < 0 ? "-" : "";
      return k == 0 ? s + "1" : s + "e" + std::to_string(k);
    }
    return "0";
  };
  ordered_json rows = ordered_json::array();
  for (int i = 1; i <= 7; ++i) {
    ordered_json row = ordered_json::array();
    for (int jj = 1; jj <= 7; ++jj)
      row.push_back(label(oct_multiply(Octonion::basis(i), Octonion::basis(jj))));
    rows.push_back(std::move(row));
  }
  ordered_json j;
  j["basis"] = {"e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  j["products"] = std::move(rows);
  return j.dump(2);
}

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void trajectory_to_csv(const Trajectory& traj, std::ostream& out) {
  const bool dim2 = traj.is_dim2();
  out << (dim2 ? "t1,t2" : "t");
  for (int i = 1; i <= 7; ++i) out << ",x" << i;
  out << "\n";
  for (std::size_t k = 0; k < traj.points.size(); ++k) {
    out << fmt17(traj.t1[k]);
    if (dim2) out << "," << fmt17(traj.t2[k]);
    for (int i = 0; i < 7; ++i) out << "," << fmt17(traj.points[k](i));
    out << "\n";
  }
}

std::string trajectory_to_json(const Trajectory& traj) {
  ordered_json meta;
  meta["generator"] = traj.generator;
  ordered_json xi = ordered_json::array();
  for (int r = 0; r < 7; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < 7; ++c) row.push_back(traj.xi(r, c));
    xi.push_back(std::move(row));
  }
  meta["xi"] = std::move(xi);
  if (traj.eta) {
    ordered_json eta = ordered_json::array();
    for (int r = 0; r < 7; ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < 7; ++c) row.push_back((*traj.eta)(r, c));
      eta.push_back(std::move(row));
    }
    meta["eta"] = std::move(eta);
  }
  ordered_json base = ordered_json::array();
  for (int i = 0; i < 7; ++i) base.push_back(traj.base(i));
  meta["base_point"] = std::move(base);
  ordered_json grid;
  grid["samples"] = traj.points.size();
  grid["parameters"] = traj.is_dim2() ? 2 : 1;
  meta["grid"] = std::move(grid);

  ordered_json samples = ordered_json::array();
  for (std::size_t k = 0; k < traj.points.size(); ++k) {
    ordered_json s;
    if (traj.is_dim2()) {
      s["t1"] = traj.t1[k];
      s["t2"] = traj.t2[k];
    } else {
      s["t"] = traj.t1[k];
    }
    ordered_json x = ordered_json::array();
    for (int i = 0; i < 7; ++i) x.push_back(traj.points[k](i));
    s["x"] = std::move(x);
    samples.push_back(std::move(s));
  }
  ordered_json j;
  j["meta"] = std::move(meta);
  j["samples"] = std::move(samples);
  return j.dump(2);
}

}  // namespace s6p
