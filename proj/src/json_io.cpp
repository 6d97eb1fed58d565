#include "quadpre/json_io.hpp"

#include <stdexcept>

namespace quadpre {

namespace {

template <class T, class F>
Json array_of(const std::vector<T>& xs, F f) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

Json rationals(const std::vector<Rational>& xs) {
  return array_of(xs, [](const Rational& r) { return to_json(r); });
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const UniPoly& p) {
  Json out;
  out["variable"] = std::string(1, p.variable());
  out["content"] = to_json(p.content());
  out["coefficients"] = array_of(p.primitive(), [](const Integer& c) { return c.get_str(); });
  return out;
}

UniPoly poly_from_json(const Json& j) {
  try {
    const std::string var = j.at("variable").get<std::string>();
    if (var.size() != 1) throw std::invalid_argument("variable must be one character");
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
    return UniPoly::from_integers(coeffs, var[0]) * Rational::parse(j.at("content").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const Factorization& f) {
  Json out;
  out["unit"] = to_json(f.unit);
  out["factors"] = Json::array();
  for (const auto& [g, m] : f.factors) out["factors"].push_back({{"poly", to_json(g)}, {"multiplicity", m}});
  out["seed"] = f.seed;
  return out;
}

Json to_json(const BiPoly& p) {
  Json out;
  out["xdeg"] = p.xdeg();
  out["cdeg"] = p.cdeg();
  out["rows"] = array_of(p.rows(), rationals);
  return out;
}

Json to_json(const IdentityRecord& r) {
  Json out;
  out["identity"] = identity_name(r.which);
  bool zero = true;
  for (const auto& res : r.residuals) zero = zero && res.is_zero();
  out["residual"] = zero ? "0" : "nonzero";
  out["residuals"] = array_of(r.residuals, [](const UniPoly& p) { return p.to_string(); });
  out["witness_degrees"] = r.witness_degrees;
  out["holds"] = r.holds;
  return out;
}

Json to_json(const CriticalStratum& s) {
  Json out;
  out["level"] = s.level;
  out["critical_values"] = to_json(s.critical_values);
  out["exceptional"] = to_json(s.exceptional);
  out["degree"] = s.critical_values.degree();
  out["count"] = s.count;
  out["squarefree"] = s.squarefree;
  out["disjoint"] = s.disjoint;
  out["irreducible"] = s.irreducible;
  out["rational_roots"] = rationals(s.rational_roots);
  return out;
}

Json to_json(const NewtonPolygon& np) {
  Json out;
  out["prime"] = np.prime.get_str();
  out["valuations"] = Json::array();
  for (const auto& [v, m] : np.valuations) out["valuations"].push_back({{"valuation", to_json(v)}, {"multiplicity", m}});
  out["zero_roots"] = np.zero_roots;
  return out;
}

Json to_json(const GenusReport& g) {
  Json out;
  out["level"] = g.level;
  out["a"] = to_json(g.a);
  out["ramification"] = g.ramification;
  out["trace"] = g.trace;
  out["genus_recursion"] = g.genus_recursion;
  out["genus_formula"] = g.genus_formula;
  out["agree"] = g.agree;
  return out;
}

Json to_json(const QuarterGenera& q) {
  Json out;
  out["level"] = q.level;
  out["ramification"] = Json::array();
  for (const auto& [p, m] : q.ramification) out["ramification"].push_back({p, m});
  out["genera"] = {q.genera.first, q.genera.second};
  out["assumption"] = q.assumption;
  return out;
}

Json to_json(const HeightReport& h) {
  Json out;
  out["z"] = to_json(h.z);
  out["c"] = to_json(h.c);
  out["value"] = h.value;
  out["error_bound"] = h.error_bound;
  out["archimedean"] = {{"value", h.archimedean}, {"error", h.archimedean_error}, {"escape_iteration", h.escape_iteration}};
  out["finite"] = Json::array();
  for (const auto& f : h.finite) {
    out["finite"].push_back({{"prime", f.prime.get_str()},
                             {"log_coefficient", to_json(f.coefficient)},
                             {"escaped", f.escaped},
                             {"iterations", f.iterations},
                             {"error", f.error}});
  }
  out["flagged"] = h.flagged;
  return out;
}

Json to_json(const PreperiodicReport& p) {
  Json out;
  out["verdict"] = p.preperiodic;
  out["orbit"] = rationals(p.orbit);
  if (p.preperiodic) {
    out["repeat_index"] = p.repeat_index;
    out["repeat_of"] = p.repeat_of;
  } else {
    out["escape_index"] = p.escape_index;
  }
  return out;
}

Json to_json(const PreimageSet& s) {
  Json out;
  out["a"] = to_json(s.a);
  out["c"] = to_json(s.c);
  out["members"] = array_of(s.members, [](const PreimageMember& m) { return Json{{"value", to_json(m.value)}, {"level", m.level}}; });
  out["trace"] = array_of(s.trace, [](const PreimageStep& t) {
    return Json{{"level", t.level}, {"frontier", t.frontier}, {"discovered", t.discovered}};
  });
  return out;
}

Json to_json(const CurvePoint& p) {
  return {{"x", to_json(p.x)}, {"c", to_json(p.c)}, {"level", p.level}, {"a", to_json(p.a)}};
}

}  // namespace quadpre
