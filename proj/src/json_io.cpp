#include "unitroot/json_io.hpp"

#include <sstream>

namespace unitroot {

Json expvec_to_json(const ExpVec& e, int d) {
  Json a = Json::array();
  for (int i = 0; i < d; ++i) a.push_back(e[i]);
  return a;
}

static ExpVec expvec_from_json(const Json& j, int d) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw ParseError("exponent vector length differs from the dimension", 0);
  ExpVec e;
  for (int i = 0; i < d; ++i) {
    int64_t x = j[static_cast<std::size_t>(i)].get<int64_t>();
    if (x < INT32_MIN || x > INT32_MAX) throw ParseError("exponent out of range", 0);
    e[i] = static_cast<int32_t>(x);
  }
  return e;
}

Json poly_to_json(const PolyZ& f) {
  Json j;
  j["d"] = f.dimension();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t = Json::array();
    t.push_back(c.get_str());
    t.push_back(expvec_to_json(e, f.dimension()));
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

PolyZ poly_from_json(const Json& j) {
  if (!j.contains("d") || !j.contains("terms"))
    throw ParseError("polynomial JSON needs \"d\" and \"terms\"", 0);
  int d = j["d"].get<int>();
  if (d < 1 || d > kMaxDim) throw ParseError("dimension out of range", 0);
  std::vector<PolyZ::Term> ts;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2)
      throw ParseError("each term must be [coeff, exponents]", 0);
    mpz_class c(t[0].get<std::string>(), 10);
    ts.emplace_back(expvec_from_json(t[1], d), c);
  }
  return PolyZ::from_terms(d, std::move(ts));
}

Json polytope_report_json(const NewtonPolytope& P) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : P.vertices) verts.push_back(expvec_to_json(v, P.d));
  j["dim"] = P.dim;
  j["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : P.facets) {
    Json fj;
    fj["normal"] = expvec_to_json(f.normal, P.d);
    fj["offset"] = f.offset;
    facets.push_back(std::move(fj));
  }
  j["facets"] = std::move(facets);
  if (P.full_dimensional()) {
    Json pts = Json::array();
    try {
      for (const auto& q : interior_lattice_points(P))
        pts.push_back(expvec_to_json(q, P.d));
    } catch (const HypothesisError&) {
    }
    j["interior_points"] = std::move(pts);
    j["N"] = j["interior_points"].size();
  } else {
    j["interior_points"] = Json::array();
    j["N"] = 0;
  }
  return j;
}

Json hypothesis_report_json(const HypothesisReport& r) {
  Json j;
  j["d"] = r.d;
  j["dim"] = r.dim;
  j["full_dimensional"] = r.full_dimensional;
  j["interior_nonempty"] = r.interior_nonempty;
  j["N"] = r.interior_count;
  j["ok"] = r.ok();
  return j;
}

Json matrix_to_json(const PadicMatrix& m) {
  Json j;
  j["p"] = m.p();
  j["precision"] = m.precision();
  Json labels = Json::array();
  for (const auto& l : m.labels()) labels.push_back(expvec_to_json(l, m.label_dim()));
  j["labels"] = std::move(labels);
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k)
      row.push_back(std::to_string(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

std::string beta_table_tsv(const BetaTable& t) {
  std::ostringstream out;
  out << "v\tw\tnu\tbeta\n";
  for (int nu = 1; nu <= t.max_nu(); ++nu)
    for (std::size_t vi = 0; vi < t.point_count(); ++vi)
      for (std::size_t wi = 0; wi < t.point_count(); ++wi)
        out << format_expvec(t.points()[vi], t.dimension()) << "\t"
            << format_expvec(t.points()[wi], t.dimension()) << "\t" << nu
            << "\t" << t.at(vi, wi, nu).get_str() << "\n";
  return out.str();
}

Json beta_table_json(const BetaTable& t) {
  Json rows = Json::array();
  for (int nu = 1; nu <= t.max_nu(); ++nu)
    for (std::size_t vi = 0; vi < t.point_count(); ++vi)
      for (std::size_t wi = 0; wi < t.point_count(); ++wi) {
        Json r;
        r["v"] = expvec_to_json(t.points()[vi], t.dimension());
        r["w"] = expvec_to_json(t.points()[wi], t.dimension());
        r["nu"] = nu;
        r["beta"] = t.at(vi, wi, nu).get_str();
        rows.push_back(std::move(r));
      }
  return rows;
}

Json log_series_json(const BetaTable& t, int D) {
  Json rows = Json::array();
  for (std::size_t vi = 0; vi < t.point_count(); ++vi)
    for (std::size_t wi = 0; wi < t.point_count(); ++wi)
      for (int nu = 1; nu <= D && nu <= t.max_nu(); ++nu) {
        const mpz_class& b = t.at(vi, wi, nu);
        if (sgn(b) == 0) continue;
        mpq_class q(b, nu);
        q.canonicalize();
        Json r;
        r["v"] = expvec_to_json(t.points()[vi], t.dimension());
        r["w"] = expvec_to_json(t.points()[wi], t.dimension());
        r["nu"] = nu;
        r["coeff"] = q.get_str();
        rows.push_back(std::move(r));
      }
  return rows;
}

Json group_law_json(const GroupLaw& F) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < F.comp.size(); ++i) {
    for (const auto& [m, c] : F.comp[i].terms()) {
      Json r;
      r["component"] = expvec_to_json(F.labels[i], F.label_dim);
      Json xs = Json::array(), ys = Json::array();
      for (int v = 0; v < F.N; ++v) xs.push_back(mono_get(m, v));
      for (int v = 0; v < F.N; ++v) ys.push_back(mono_get(m, F.N + v));
      r["monomial"] = Json{{"x", xs}, {"y", ys}};
      r["coeff"] = mpq_class(c).get_str();
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

Json integrality_report_json(const GroupLaw& F, const IntegralityReport& rep) {
  Json j;
  j["integral"] = rep.integral;
  j["degree"] = F.D;
  Json off = Json::array();
  for (const auto& o : rep.offenders) {
    Json r;
    r["component"] = expvec_to_json(F.labels[static_cast<std::size_t>(o.component)],
                                    F.label_dim);
    Json xs = Json::array(), ys = Json::array();
    for (int v = 0; v < F.N; ++v) xs.push_back(mono_get(o.monomial, v));
    for (int v = 0; v < F.N; ++v) ys.push_back(mono_get(o.monomial, F.N + v));
    r["monomial"] = Json{{"x", xs}, {"y", ys}};
    r["denominator"] = o.denominator.get_str();
    off.push_back(std::move(r));
  }
  j["offenders"] = std::move(off);
  return j;
}

Json operator_to_json(const EulerOperator& op) {
  Json rows = Json::array();
  for (const auto& [key, c] : op.terms()) {
    Json r;
    r["tau_pow"] = key.first;
    r["delta_pow"] = key.second;
    r["coeff"] = c.get_str();
    rows.push_back(std::move(r));
  }
  return rows;
}

Json series1d_json(const PowerSeries1D& g) {
  Json j;
  j["degree"] = g.degree;
  Json cs = Json::array();
  for (const auto& q : g.c) cs.push_back(mpq_class(q).get_str());
  j["coefficients"] = std::move(cs);
  return j;
}

Json crosscheck_report_json(const CrosscheckReport& r) {
  Json j;
  j["p"] = r.p;
  j["precision"] = r.precision;
  j["ordinary"] = r.ordinary;
  j["a_p"] = r.a_p;
  if (r.ordinary && r.ap_unit) {
    j["unit_root"] = std::to_string(r.unit_root_value);
    j["alpha"] = std::to_string(r.alpha_value);
  } else {
    j["unit_root"] = nullptr;
    j["alpha"] = nullptr;
  }
  j["match"] = r.match;
  return j;
}

Json limit_result_json(const LimitResult& r) {
  Json j;
  j["alpha"] = matrix_to_json(r.alpha);
  Json tr = Json::array();
  for (const auto& [s, lvl] : r.trace) {
    Json t;
    t["s"] = s;
    t["agreement"] = lvl;
    tr.push_back(std::move(t));
  }
  j["trace"] = std::move(tr);
  return j;
}

Json congruence1_json(const CongruenceReport1& r) {
  Json j;
  j["p"] = r.p;
  j["s_max"] = r.s_max;
  Json hs = Json::array();
  for (bool b : r.holds) hs.push_back(b);
  j["holds"] = std::move(hs);
  j["ok"] = r.ok();
  return j;
}

Json congruence2_json(const CongruenceReport2& r) {
  Json j;
  j["p"] = r.p;
  j["s_max"] = r.s_max;
  j["precision"] = r.precision;
  Json as = Json::array();
  for (int a : r.agreement) as.push_back(a);
  j["agreement"] = std::move(as);
  j["ok"] = r.ok();
  return j;
}

}  // namespace unitroot
