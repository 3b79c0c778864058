#include "gksl3/json_io.hpp"

#include <string>

namespace gksl3 {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string");
  return parse_rational(j.get<std::string>());
}

Json gaussian_to_json(const GaussianRational& z) {
  Json j;
  j["re"] = rational_to_json(z.re);
  j["im"] = rational_to_json(z.im);
  return j;
}

GaussianRational gaussian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw ParseError("gaussian rational must have re and im");
  }
  return GaussianRational(rational_from_json(j.at("re")),
                          rational_from_json(j.at("im")));
}

Json scalar_to_json(const Scalar& s) {
  Json terms = Json::array();
  // Leading term first: the term map is ordered ascending.
  const auto& map = s.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    Json term;
    Json exps = Json::object();
    for (int k = 0; k < kSymbolCount; ++k) {
      if (it->first[static_cast<std::size_t>(k)] != 0) {
        exps[symbol_name(static_cast<Symbol>(k))] =
            it->first[static_cast<std::size_t>(k)];
      }
    }
    term["exps"] = std::move(exps);
    term["re"] = rational_to_json(it->second.re);
    term["im"] = rational_to_json(it->second.im);
    terms.push_back(std::move(term));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw ParseError("scalar must have a terms array");
  }
  ScalarBuilder b;
  for (const auto& term : j.at("terms")) {
    Exponents e{};
    if (term.contains("exps")) {
      for (const auto& [name, value] : term.at("exps").items()) {
        const auto sym = symbol_from_name(name);
        if (!sym || !value.is_number_integer()) {
          throw ParseError("bad exponent entry '" + name + "'");
        }
        e[static_cast<std::size_t>(*sym)] = value.get<int>();
      }
    }
    b.add(e, GaussianRational(rational_from_json(term.at("re")),
                              rational_from_json(term.at("im"))));
  }
  return b.take();
}

Json series_to_json(const SeriesParams& sp) {
  Json j;
  j["series"] = to_string(sp.series);
  if (sp.series == Series::P0) {
    j["sigma"] = Json::array({sp.sigma1, sp.sigma2});
    j["nu01"] = scalar_to_json(sp.nu_a);
    j["nu02"] = scalar_to_json(sp.nu_b);
  } else {
    j["k"] = sp.k;
    j[sp.series == Series::P1 ? "nu1" : "nu2"] = scalar_to_json(sp.nu_a);
  }
  return j;
}

Json ktype_to_json(const KTypeInfo& info) {
  Json j;
  j["l"] = info.l;
  j["d"] = info.d;
  j["delta"] = info.delta;
  j["epsilon"] = info.epsilon ? Json(*info.epsilon) : Json(nullptr);
  j["p_list"] = info.p_list;
  return j;
}

Json gamma_to_json(const GammaMatrix& g) {
  Json j;
  j["series"] = series_to_json(g.params);
  j["l"] = g.l;
  j["m"] = g.m;
  j["rows"] = g.rows;
  j["cols"] = g.cols;
  j["n"] = g.n;
  j["delta"] = g.delta;
  Json rows = Json::array();
  for (int r = 0; r < g.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < g.cols; ++c) row.push_back(scalar_to_json(g.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json iota_to_json(const IotaMatrix& m) {
  Json j;
  j["l"] = m.l;
  j["m"] = m.m;
  j["i"] = m.i;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  Json entries = Json::array();
  for (const auto& [rc, v] : m.entries) {
    Json e;
    e["row"] = rc.first;
    e["col"] = rc.second;
    e["value"] = rational_to_json(v);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json report_to_json(const VerifyReport& r) {
  Json j;
  j["series"] = series_to_json(r.params);
  j["l_max"] = r.l_max;
  j["all_passed"] = r.all_passed;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["kind"] = c.kind;
    cj["label"] = c.label;
    cj["checked"] = c.checked;
    cj["passed"] = c.passed;
    if (!c.failure.empty()) cj["failure"] = c.failure;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json sl2_class_to_json(const SL2Class& c) {
  Json j;
  j["tag"] = to_string(c.tag);
  if (c.tag == SL2Tag::DiscreteEmbedding || c.tag == SL2Tag::FiniteQuotient) {
    j["k"] = c.k;
  }
  return j;
}

}  // namespace gksl3
