#include "trop/problem_io.hpp"

#include <json.hpp>

namespace trop {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

IntVec to_intvec(const json& j, const std::string& where, int dim) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
  if (dim >= 0 && (int)j.size() != dim)
    throw ParseError(where + ": expected " + std::to_string(dim) + " coordinates");
  IntVec v;
  for (size_t k = 0; k < j.size(); ++k) {
    const auto& c = j[k];
    if (c.is_number_integer())
      v.push_back(Int(c.get<long long>()));
    else if (c.is_string())
      v.push_back(Int(c.get<std::string>()));
    else
      throw ParseError(where + "[" + std::to_string(k) + "]: expected an integer");
  }
  return v;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("top level: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("dim: required integer field");
  ProblemFile pf;
  pf.dim = j["dim"].get<int>();
  if (pf.dim < 1) throw ParseError("dim: must be positive");
  if (!j.contains("polynomials") || !j["polynomials"].is_array() || j["polynomials"].empty())
    throw ParseError("polynomials: required nonempty array");
  for (size_t i = 0; i < j["polynomials"].size(); ++i) {
    const auto& pj = j["polynomials"][i];
    std::string where = "polynomials[" + std::to_string(i) + "]";
    if (!pj.is_object()) throw ParseError(where + ": expected an object");
    if (!pj.contains("support") || !pj["support"].is_array() || pj["support"].empty())
      throw ParseError(where + ".support: required nonempty array");
    ProblemPolynomial pp;
    for (size_t k = 0; k < pj["support"].size(); ++k)
      pp.support.push_back(to_intvec(pj["support"][k],
                                     where + ".support[" + std::to_string(k) + "]", pf.dim));
    if (pj.contains("coefficients")) {
      const auto& cj = pj["coefficients"];
      if (!cj.is_array() || cj.size() != pp.support.size())
        throw ParseError(where + ".coefficients: must align with support");
      std::vector<Complex> cs;
      for (size_t k = 0; k < cj.size(); ++k) {
        const auto& c = cj[k];
        std::string cw = where + ".coefficients[" + std::to_string(k) + "]";
        if (c.is_number()) {
          cs.push_back(Complex(c.get<double>(), 0.0));
        } else if (c.is_object() && c.contains("re")) {
          double re = c["re"].get<double>();
          double im = c.contains("im") ? c["im"].get<double>() : 0.0;
          cs.push_back(Complex(re, im));
        } else {
          throw ParseError(cw + ": expected a number or {re, im}");
        }
      }
      pp.coefficients = std::move(cs);
    }
    pf.polynomials.push_back(std::move(pp));
  }
  return pf;
}

std::string serialize_problem(const ProblemFile& pf) {
  json j;
  j["dim"] = pf.dim;
  j["polynomials"] = json::array();
  for (const auto& pp : pf.polynomials) {
    json pj;
    pj["support"] = json::array();
    for (const auto& pt : pp.support) {
      json row = json::array();
      for (const auto& c : pt) row.push_back(c.convert_to<long long>());
      pj["support"].push_back(row);
    }
    if (pp.coefficients) {
      pj["coefficients"] = json::array();
      for (const auto& c : *pp.coefficients)
        pj["coefficients"].push_back({{"im", c.imag()}, {"re", c.real()}});
    }
    j["polynomials"].push_back(pj);
  }
  return j.dump(2);
}

SupportSystem to_support_system(const ProblemFile& pf) {
  std::vector<std::vector<IntVec>> supports;
  for (const auto& pp : pf.polynomials) supports.push_back(pp.support);
  return make_support_system(pf.dim, supports);
}

std::vector<LaurentPolynomial> to_laurent_system(const ProblemFile& pf) {
  std::vector<LaurentPolynomial> fs;
  for (size_t i = 0; i < pf.polynomials.size(); ++i) {
    const auto& pp = pf.polynomials[i];
    if (!pp.coefficients)
      throw std::invalid_argument("polynomial " + std::to_string(i + 1) + " has no coefficients");
    LaurentPolynomial f;
    f.dim = pf.dim;
    for (size_t k = 0; k < pp.support.size(); ++k)
      f.terms.push_back({pp.support[k], (*pp.coefficients)[k]});
    fs.push_back(std::move(f));
  }
  return fs;
}

std::string fnv1a_digest(const std::string& data) {
  unsigned long long h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", h);
  return std::string(buf);
}

}  // namespace trop
