#include "json_io.hpp"

#include <json.hpp>

namespace mqa {

using nlohmann::json;

std::string bool_system_to_json(const BooleanSystem& sys) {
  json j;
  j["variables"] = sys.variables();
  json polys = json::array();
  for (auto& p : sys.polynomials()) {
    json jp = json::array();
    for (auto& m : p.terms()) jp.push_back(m);
    polys.push_back(jp);
  }
  j["polynomials"] = polys;
  return j.dump();
}

BooleanSystem bool_system_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("bad JSON: ") + e.what());
  }
  try {
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    std::vector<BooleanPolynomial> polys;
    for (auto& jp : j.at("polynomials")) {
      std::vector<Monomial> monos;
      for (auto& jm : jp) {
        Monomial m = jm.get<Monomial>();
        std::sort(m.begin(), m.end());
        monos.push_back(std::move(m));
      }
      polys.emplace_back(std::move(monos));
    }
    return BooleanSystem(std::move(vars), std::move(polys));
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("bad Boolean system JSON: ") + e.what());
  }
}

static json coeff_to_json(const mpz_class& c) {
  if (c.fits_slong_p()) return json(static_cast<int64_t>(c.get_si()));
  return json(c.get_str());
}

static mpz_class coeff_from_json(const json& jc) {
  if (jc.is_number_integer()) return mpz_class(static_cast<long>(jc.get<int64_t>()));
  if (jc.is_string()) return mpz_class(jc.get<std::string>());
  fail(ErrorKind::parse, "coefficient must be an integer or decimal string");
}

std::string int_system_to_json(const IntSystem& sys) {
  json j;
  j["variables"] = sys.variables;
  json polys = json::array();
  for (auto& p : sys.polynomials) {
    json jp = json::array();
    for (auto& [e, c] : p.terms()) {
      json pairs = json::array();
      for (auto& [v, x] : e) pairs.push_back(json::array({v, x}));
      jp.push_back(json::array({coeff_to_json(c), pairs}));
    }
    polys.push_back(jp);
  }
  j["polynomials"] = polys;
  return j.dump();
}

IntSystem int_system_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("bad JSON: ") + e.what());
  }
  try {
    IntSystem sys;
    sys.variables = j.at("variables").get<std::vector<std::string>>();
    for (auto& jp : j.at("polynomials")) {
      IntPolynomial p;
      for (auto& jt : jp) {
        mpz_class c = coeff_from_json(jt.at(0));
        ExpVec e;
        for (auto& pr : jt.at(1)) e.emplace_back(pr.at(0).get<uint32_t>(), pr.at(1).get<uint32_t>());
        std::sort(e.begin(), e.end());
        p.add_term(e, c);
      }
      sys.polynomials.push_back(std::move(p));
    }
    return sys;
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("bad integer system JSON: ") + e.what());
  }
}

bool json_is_bool_system(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (...) {
    return false;
  }
  if (!j.contains("polynomials")) return false;
  for (auto& jp : j["polynomials"]) {
    for (auto& jm : jp) {
      if (!jm.is_array()) return false;
      for (auto& v : jm)
        if (!v.is_number_unsigned() && !v.is_number_integer()) return false;
      return true;  // first monomial decides
    }
  }
  return true;  // no terms anywhere: treat as Boolean
}

}  // namespace mqa
