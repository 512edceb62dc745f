#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mcgl/class_analyzer.hpp"
#include "mcgl/error.hpp"
#include "mcgl/field.hpp"
#include "mcgl/mat.hpp"
#include "mcgl/normal_forms.hpp"
#include "mcgl/oracle.hpp"
#include "mcgl/poly.hpp"
#include "mcgl/stable.hpp"
#include "mcgl/witness.hpp"

namespace mcgl::io {

using Json = nlohmann::ordered_json;

// ---- matrices ----

/// {"field": "Q" | "F<p>", "entries": [["1", "-2/3"], ...]}
inline Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"field", m.field().name()}, {"entries", std::move(rows)}};
}

/// Entries may be strings in the scalar format or plain integers.
inline Mat matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("entries"))
    fail(Errc::ParseError, "matrix JSON needs \"field\" and \"entries\"");
  if (!j["field"].is_string()) fail(Errc::ParseError, "\"field\" must be a string");
  const FieldSpec f = FieldSpec::parse(j["field"].get<std::string>());
  const Json& rows = j["entries"];
  if (!rows.is_array() || rows.empty()) fail(Errc::ParseError, "\"entries\" must be a nonempty array of rows");
  const std::size_t n = rows.size();
  Mat m(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) fail(Errc::ParseError, "matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const Json& e = rows[i][k];
      if (e.is_string())
        m.at(i, k) = Scalar::parse(e.get<std::string>(), f);
      else if (e.is_number_integer())
        m.at(i, k) = Scalar(f, e.get<long>());
      else
        fail(Errc::ParseError, "entries must be strings or integers");
    }
  }
  return m;
}

inline Json polys(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline Json signs(const SignPattern& s) { return Json(s); }

// ---- class analyzer ----

inline Json to_json(const MReport& r) {
  Json j;
  j["verdict"] = r.exact() ? "Exact" : "Bounds";
  if (r.exact()) {
    j["m"] = r.m;
    j["pattern"] = signs(r.pattern);
  }
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  Json ex = Json::array();
  for (const auto& e : r.excluded) ex.push_back({{"pattern", signs(e.signs)}, {"reason", e.reason}});
  j["excluded"] = std::move(ex);
  j["irreducibility_unknown"] = r.irreducibility_unknown;
  j["case"] = r.case_tag;
  j["rationale"] = r.rationale;
  return j;
}

// ---- witnesses ----

inline Json to_json(const Witness& w) {
  Json conj = Json::array();
  for (const auto& f : w.factors) conj.push_back(to_json(f.conjugator));
  SignPattern s = w.signs();
  return Json{{"signs", signs(s)},
              {"conjugators", std::move(conj)},
              {"verified", verify_witness(w)},
              {"case", w.case_tag},
              {"construction", w.construction}};
}

/// Reads the witness factors for σ; "verified" in the file is ignored.
inline Witness witness_from_json(const Json& j, const Mat& sigma) {
  if (!j.is_object() || !j.contains("signs") || !j.contains("conjugators"))
    fail(Errc::ParseError, "witness JSON needs \"signs\" and \"conjugators\"");
  const Json &s = j["signs"], &c = j["conjugators"];
  if (!s.is_array() || !c.is_array() || s.size() != c.size())
    fail(Errc::ParseError, "\"signs\" and \"conjugators\" must be arrays of equal length");
  Witness w;
  w.sigma = sigma;
  if (j.contains("case") && j["case"].is_string()) w.case_tag = j["case"].get<std::string>();
  if (j.contains("construction") && j["construction"].is_string()) w.construction = j["construction"].get<std::string>();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!s[k].is_number_integer()) fail(Errc::ParseError, "signs must be integers");
    const Mat g = matrix_from_json(c[k]);
    require_same_field(g.field(), sigma.field());
    w.factors.push_back({s[k].get<int>(), g});
  }
  return w;
}

// ---- normal forms ----

inline Json analyze_report(const Mat& s) {
  require_square(s);
  const auto fr = frobenius_form(s);
  Poly chi = Poly::one(s.field());
  for (const auto& p : fr.invariant_factors) chi = chi * p;
  Json j;
  j["field"] = s.field().name();
  j["n"] = s.n();
  j["det"] = det(s).to_string();
  j["trace"] = s.trace().to_string();
  j["charpoly"] = chi.to_string();
  j["invariant_factors"] = polys(fr.invariant_factors);
  j["frobenius_form"] = to_json(fr.form);
  j["frobenius_transform"] = to_json(fr.transform);
  try {
    const auto jd = jordan_form(s);
    Json ed = Json::array();
    for (const auto& e : jd.elementary_divisors) ed.push_back({{"p", e.p.to_string()}, {"power", e.power}});
    j["elementary_divisors"] = std::move(ed);
    j["jordan_form"] = to_json(jd.form);
    j["jordan_transform"] = to_json(jd.transform);
  } catch (const Error& e) {
    if (e.code() != Errc::FactorizationUnavailable) throw;
    j["elementary_divisors"] = nullptr;
    j["jordan_form"] = nullptr;
    j["jordan_transform"] = nullptr;
    j["note"] = e.what();
  }
  j["is_transvection_class"] = s.n() >= 2 && is_transvection_factors(fr.invariant_factors, s.n(), s.field());
  return j;
}

// ---- stable layer ----

inline Json stable_report(const StableElement& x) {
  Json j;
  j["field"] = x.field().name();
  j["n_min"] = x.n_min();
  j["rep_min"] = x.n_min() ? to_json(x.rep_min()) : Json(nullptr);
  const auto sf = stable_frobenius(x);
  j["stable_invariant_factors"] = polys(sf.invariant_factors);
  j["stabilization_index"] = sf.stabilization_index;
  j["central"] = sf.central;
  if (sf.central) return j;
  const auto r = stable_m(x);
  j["report"] = to_json(r.report);
  j["dimension"] = r.dimension;
  j["representative"] = to_json(r.witness.sigma);
  j["witness"] = to_json(r.witness);
  return j;
}

// ---- oracle ----

struct OracleRow {
  Mat representative;
  std::string charpoly;
  std::string det;
  std::size_t class_size = 0;
  int m_min = 0;
  std::vector<SignPattern> patterns;
  MReport classifier;
  bool agrees = false;
};

inline OracleRow oracle_row(const oracle::ClassAtlas& atlas, std::int32_t id) {
  OracleRow row;
  row.representative = atlas.representative(id);
  row.charpoly = charpoly_minors(row.representative).to_string();
  row.det = det(row.representative).to_string();
  row.class_size = atlas.members(id).size();
  const auto v = oracle::minimal_m_search(atlas, id);
  row.m_min = v.m_min;
  row.patterns = v.realizing_patterns;
  row.classifier = classify_m(row.representative);
  row.agrees = row.classifier.exact() ? row.classifier.m == row.m_min
                                      : row.classifier.lower <= row.m_min && row.m_min <= row.classifier.upper;
  return row;
}

inline std::string compact(const Mat& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ";" : "";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m.at(i, j).to_string();
  }
  return out + "]";
}

inline std::string patterns_string(const std::vector<SignPattern>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? " " : "") + pattern_string(ps[i]);
  return out;
}

inline std::string verdict_string(const MReport& r) {
  if (r.exact()) return "Exact(" + std::to_string(r.m) + ")";
  return "Bounds(" + std::to_string(r.lower) + "," + std::to_string(r.upper) + ")";
}

inline Json to_json(const OracleRow& r) {
  Json pats = Json::array();
  for (const auto& p : r.patterns) pats.push_back(signs(p));
  return Json{{"representative", to_json(r.representative)},
              {"charpoly", r.charpoly},
              {"det", r.det},
              {"class_size", r.class_size},
              {"m_min", r.m_min},
              {"realizing_patterns", std::move(pats)},
              {"classifier", verdict_string(r.classifier)},
              {"case", r.classifier.case_tag},
              {"agrees", r.agrees}};
}

/// Rows whose classifier verdict is only a bound go under "observations".
inline Json oracle_table(const std::vector<OracleRow>& rows, FieldSpec f, std::size_t n) {
  Json table = Json::array(), obs = Json::array();
  for (const auto& r : rows) (r.classifier.exact() ? table : obs).push_back(to_json(r));
  return Json{{"field", f.name()}, {"n", n}, {"classes", std::move(table)}, {"observations", std::move(obs)}};
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

/// representative,charpoly,det,class_size,m_min,realizing_patterns,classifier,case,agrees
inline std::string oracle_csv(const std::vector<OracleRow>& rows) {
  std::string out = "representative,charpoly,det,class_size,m_min,realizing_patterns,classifier,case,agrees\n";
  for (const auto& r : rows)
    out += csv_quote(compact(r.representative)) + "," + csv_quote(r.charpoly) + "," + r.det + "," +
           std::to_string(r.class_size) + "," + std::to_string(r.m_min) + "," + csv_quote(patterns_string(r.patterns)) +
           "," + verdict_string(r.classifier) + "," + r.classifier.case_tag + "," + (r.agrees ? "true" : "false") + "\n";
  return out;
}

/// Indented key: value rendering of a JSON document.
inline void render_text(const Json& j, std::string& out, int indent = 0, const std::string& key = "") {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string label = key.empty() ? "" : key + ": ";
  if (j.is_object()) {
    if (!key.empty()) out += pad + key + ":\n";
    for (const auto& [k, v] : j.items()) render_text(v, out, key.empty() ? indent : indent + 1, k);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    out += pad + key + ":\n";
    std::size_t i = 0;
    for (const auto& v : j) render_text(v, out, indent + 1, "[" + std::to_string(i++) + "]");
  } else if (j.is_string()) {
    out += pad + label + j.get<std::string>() + "\n";
  } else {
    out += pad + label + j.dump() + "\n";
  }
}

inline std::string to_text(const Json& j) {
  std::string out;
  render_text(j, out);
  return out;
}

}  // namespace mcgl::io
