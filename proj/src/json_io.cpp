#include "slink/json_io.hpp"

#include <limits>

namespace slink {

namespace {

constexpr std::int64_t kMaxSafeInt = std::numeric_limits<std::int64_t>::max();

Json int_coeff_to_json(const BigInt& c) {
  if (c >= -kMaxSafeInt && c <= kMaxSafeInt) {
    return Json(c.convert_to<std::int64_t>());
  }
  return Json(c.str());
}

BigInt int_coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("polynomial coefficient must be an integer or decimal string");
}

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  if (p.integer_mode()) {
    for (const auto& [e, c] : p.int_terms()) {
      terms.push_back(Json::array({e, int_coeff_to_json(c)}));
    }
  } else {
    for (const auto& [e, c] : p.cx_terms()) {
      terms.push_back(Json::array({e, c.real(), c.imag()}));
    }
  }
  return terms;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  LaurentPoly int_poly(LaurentPoly::Mode::Integer);
  LaurentPoly cx_poly(LaurentPoly::Mode::Complex);
  bool complex_mode = false, integer_mode = false;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() < 2 || t.size() > 3 || !t[0].is_number_integer()) {
      throw ParseError("polynomial term must be [exp, coeff] or [exp, re, im]");
    }
    const int e = t[0].get<int>();
    if (t.size() == 2) {
      integer_mode = true;
      int_poly = int_poly + LaurentPoly::monomial(e, int_coeff_from_json(t[1]));
    } else {
      complex_mode = true;
      cx_poly = cx_poly + LaurentPoly::cx_monomial(
                              e, Cx(t[1].get<double>(), t[2].get<double>()));
    }
  }
  if (integer_mode && complex_mode) {
    throw ParseError("polynomial mixes integer and complex terms");
  }
  return complex_mode ? cx_poly : int_poly;
}

Json dscaled_to_json(const DScaledPoly& p) {
  Json j;
  j["coeffs"] = poly_to_json(p.num());
  j["dpow"] = p.dpow();
  return j;
}

DScaledPoly dscaled_from_json(const Json& j) {
  if (!j.contains("coeffs") || !j.contains("dpow")) {
    throw ParseError("d-scaled polynomial needs 'coeffs' and 'dpow'");
  }
  return DScaledPoly(poly_from_json(j["coeffs"]).to_complex(), j["dpow"].get<int>());
}

Json braid_to_json(const BraidWord& w) {
  Json j;
  j["strands"] = w.strands();
  Json letters = Json::array();
  for (const BraidLetter& l : w.letters()) letters.push_back(l.sign * l.position);
  j["letters"] = letters;
  return j;
}

BraidWord braid_from_json(const Json& j) {
  if (!j.contains("letters") || !j["letters"].is_array()) {
    throw ParseError("braid word needs a 'letters' array");
  }
  std::vector<BraidLetter> letters;
  int max_pos = 0;
  for (const Json& t : j["letters"]) {
    if (!t.is_number_integer()) throw ParseError("braid letters must be signed integers");
    const int v = t.get<int>();
    if (v == 0) throw ParseError("braid letter 0 is not a generator");
    letters.push_back({std::abs(v), v > 0 ? 1 : -1});
    max_pos = std::max(max_pos, std::abs(v));
  }
  const int strands = j.contains("strands") ? j["strands"].get<int>()
                                            : std::max(max_pos + 1, 1);
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json superbraid_to_json(const SuperbraidWord& w) {
  Json j;
  j["qubits"] = w.qubits;
  if (w.kauffman.mu_parameterized()) j["mu"] = w.kauffman.mu;
  Json gates = Json::array();
  for (const SuperCrossing& c : w.crossings) {
    Json g;
    g["pos"] = c.pos;
    g["sign"] = c.sign;
    g["zeta"] = c.zeta;
    g["xi"] = c.xi;
    g["delta"] = c.delta;
    gates.push_back(g);
  }
  j["gates"] = gates;
  return j;
}

SuperbraidWord superbraid_from_json(const Json& j, int a_branch,
                                    const SuperbraidDefaults& defaults) {
  if (!j.is_object()) throw ParseError("superbraid must be a JSON object");
  for (const char* key : {"qubits", "gates"}) {
    if (!j.contains(key)) {
      throw ParseError(std::string("superbraid needs field '") + key + "'");
    }
  }
  if (!j.contains("mu") && !defaults.mu) {
    throw ParseError("superbraid needs field 'mu' (or a --mu default)");
  }
  SuperbraidWord w;
  w.qubits = j["qubits"].get<int>();
  const double mu = j.contains("mu") ? j["mu"].get<double>() : *defaults.mu;
  w.kauffman = KauffmanParams::from_mu(mu, a_branch);
  if (!j["gates"].is_array()) throw ParseError("'gates' must be an array");
  for (const Json& g : j["gates"]) {
    SuperCrossing c;
    if (!g.contains("pos")) throw ParseError("gate needs 'pos'");
    c.pos = g["pos"].get<int>();
    c.sign = g.value("sign", 1);
    c.zeta = g.value("zeta", defaults.zeta);
    c.xi = g.value("xi", defaults.xi);
    c.delta = g.value("delta", defaults.delta);
    w.crossings.push_back(c);
  }
  try {
    w.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return w;
}

SuperbraidWord parse_superbraid(const std::string& text, int a_branch,
                                const SuperbraidDefaults& defaults) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("superbraid JSON: ") + e.what());
  }
  return superbraid_from_json(j, a_branch, defaults);
}

Json invariant_to_json(const LinkInvariantResult& r) {
  Json j;
  j["bracket"] = poly_to_json(r.bracket);
  j["writhe"] = r.writhe;
  j["components"] = r.components;
  j["exact"] = r.exact;
  if (r.exact) j["jones"] = poly_to_json(r.jones);
  return j;
}

Json superposition_to_json(const BraidSuperposition& red) {
  Json j;
  j["in_state"] = red.in_state;
  Json terms = Json::array();
  for (const Trajectory& t : red.terms) {
    Json term;
    term["amplitude"] = dscaled_to_json(t.amplitude);
    term["braid"] = braid_to_json(t.braid);
    term["out_state"] = t.out_state;
    terms.push_back(term);
  }
  j["trajectories"] = terms;
  return j;
}

Json superlink_to_json(const SuperlinkInvariant& inv, Cx a_value) {
  Json j;
  j["normalized"] = inv.normalized;
  Json terms = Json::array();
  for (const SuperlinkTerm& t : inv.terms) {
    Json term;
    term["in_state"] = t.in_state;
    term["amplitude"] = dscaled_to_json(t.amplitude);
    const Cx v = t.amplitude.eval(a_value);
    term["amplitude_value"] = Json::array({v.real(), v.imag()});
    term["jones"] = poly_to_json(t.jones);
    term["components"] = t.components;
    terms.push_back(term);
  }
  j["terms"] = terms;
  j["combined"] = poly_to_json(inv.combined);
  return j;
}

Json report_to_json(const std::vector<RelationReport>& reports) {
  Json arr = Json::array();
  for (const RelationReport& r : reports) {
    Json j;
    j["relation"] = r.relation;
    Json params;
    params["qubits"] = r.params.qubits;
    params["mu"] = r.params.mu;
    params["zeta"] = r.params.zeta;
    params["xi"] = r.params.xi;
    params["delta"] = r.params.delta;
    j["params"] = params;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace slink
