#include "monolab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace monolab {

using nlohmann::json;

namespace {

Rat rat_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational in " + where + ": " +
                                  j.get<std::string>());
    }
  }
  throw std::invalid_argument(where + " must be a \"p/q\" string or integer");
}

Vec vec_field(const json& j, size_t want, const std::string& where) {
  if (!j.is_array() || j.size() != want)
    throw std::invalid_argument(where + " must be an array of " +
                                std::to_string(want) + " rationals");
  Vec out;
  for (const auto& e : j) out.push_back(rat_field(e, where));
  return out;
}

}  // namespace

PolyOperator operator_from_json(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("operator: missing integer field n");
  size_t n = j["n"].get<size_t>();
  if (n == 0) throw std::invalid_argument("operator: n must be positive");
  std::string name = j.value("name", std::string("operator"));
  if (!j.contains("pieces") || !j["pieces"].is_array())
    throw std::invalid_argument("operator: missing pieces array");
  PolyUnion g(2 * n);
  for (const auto& pj : j["pieces"]) {
    std::string kind = pj.value("kind", std::string());
    if (kind == "segment") {
      g.add_piece(Polyhedron::segment(vec_field(pj.at("a"), 2 * n, "segment.a"),
                                      vec_field(pj.at("b"), 2 * n, "segment.b")));
    } else if (kind == "point") {
      g.add_piece(Polyhedron::point(vec_field(pj.at("at"), 2 * n, "point.at")));
    } else if (kind == "ray") {
      g.add_piece(Polyhedron::ray_from(vec_field(pj.at("from"), 2 * n, "ray.from"),
                                       vec_field(pj.at("dir"), 2 * n, "ray.dir")));
    } else if (kind == "hrep") {
      Polyhedron p(2 * n);
      for (const auto& c : pj.value("ineqs", json::array()))
        p.add_ineq(vec_field(c.at("a"), 2 * n, "hrep ineq.a"),
                   rat_field(c.at("b"), "hrep ineq.b"));
      for (const auto& c : pj.value("eqs", json::array()))
        p.add_eq(vec_field(c.at("a"), 2 * n, "hrep eq.a"),
                 rat_field(c.at("b"), "hrep eq.b"));
      g.add_piece(p);
    } else {
      throw std::invalid_argument("operator piece: unknown kind \"" + kind +
                                  "\"");
    }
  }
  return PolyOperator(n, g, name);
}

PolyOperator load_operator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return operator_from_json(j);
}

PwFunction1D function_from_json(const json& j) {
  if (!j.contains("pieces") || !j["pieces"].is_array())
    throw std::invalid_argument("function: missing pieces array");
  std::vector<FnPiece> pieces;
  for (const auto& pj : j["pieces"]) {
    const auto& iv = pj.at("interval");
    if (!iv.is_array() || iv.size() != 2)
      throw std::invalid_argument("function piece: interval must be [lo, hi]");
    FnPiece p;
    if (iv[0].is_null())
      p.lo_inf = true;
    else
      p.lo = rat_field(iv[0], "interval lo");
    if (iv[1].is_null())
      p.hi_inf = true;
    else
      p.hi = rat_field(iv[1], "interval hi");
    if (pj.contains("closed")) {
      const auto& cl = pj["closed"];
      if (!cl.is_array() || cl.size() != 2)
        throw std::invalid_argument("function piece: closed must be [bool, bool]");
      p.lo_closed = cl[0].get<bool>();
      p.hi_closed = cl[1].get<bool>();
    }
    const auto& co = pj.at("coeffs");
    if (!co.is_array() || co.size() != 3)
      throw std::invalid_argument("function piece: coeffs must be [a2, a1, a0]");
    p.a2 = rat_field(co[0], "coeffs a2");
    p.a1 = rat_field(co[1], "coeffs a1");
    p.a0 = rat_field(co[2], "coeffs a0");
    pieces.push_back(p);
  }
  std::map<Rat, Rat> pv;
  for (const auto& [key, val] : j.value("point_values", json::object()).items())
    pv[parse_rat(key)] = rat_field(val, "point_values");
  return PwFunction1D(std::move(pieces), std::move(pv),
                      j.value("name", std::string("f")));
}

PwFunction1D load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return function_from_json(j);
}

json verdict_to_json(const Verdict& v) {
  json out;
  out["holds"] = v.holds;
  out["supported"] = v.supported;
  out["certificate"] = v.note;
  return out;
}

json predicate_vector_to_json(const PredicateVector& v) {
  json out;
  out["case"] = v.case_name;
  out["kappa"] = rat_to_string(v.kappa);
  out["predicates"] = {{"a", verdict_to_json(v.a)},
                       {"b", verdict_to_json(v.b)},
                       {"c", verdict_to_json(v.c)},
                       {"d", verdict_to_json(v.d)}};
  out["agreement"] = v.agreement();
  return out;
}

json corpus_report_to_json(const std::vector<CaseResult>& results) {
  json cases = json::array();
  bool pass = true;
  for (const auto& r : results) {
    json c;
    c["case"] = r.case_name;
    c["predicate"] = r.predicate;
    c["expected"] = r.expected;
    c["actual"] = r.actual;
    c["pinned"] = r.pinned;
    if (r.expected != r.actual) pass = false;
    cases.push_back(c);
  }
  json out;
  out["cases"] = cases;
  out["pass"] = pass;
  return out;
}

std::string union_to_csv(const PolyUnion& u) {
  std::ostringstream os;
  os << "piece,kind";
  for (size_t d = 0; d < u.dim(); ++d) os << ",c" << d;
  os << "\n";
  auto row = [&](size_t i, const char* kind, const Vec& z) {
    os << i << "," << kind;
    for (const auto& c : z) os << "," << rat_to_string(c);
    os << "\n";
  };
  for (size_t i = 0; i < u.pieces().size(); ++i) {
    const VRep& vr = u.pieces()[i].vrep();
    for (const auto& v : vr.vertices) row(i, "vertex", v);
    for (const auto& r : vr.rays) row(i, "ray", r);
  }
  return os.str();
}

}  // namespace monolab
