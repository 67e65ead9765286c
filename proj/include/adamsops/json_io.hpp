#pragma once

// JSON serialization. Rationals are always canonical "p/q" strings and object
// keys are sorted, so documents are byte-stable for fixed input.

#include <adamsops/fgl.hpp>
#include <adamsops/hopfeval.hpp>
#include <adamsops/ivp.hpp>
#include <adamsops/opring.hpp>
#include <adamsops/rational.hpp>
#include <adamsops/split.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace adamsops {

using Json = nlohmann::json;

inline Json rational_array(const RationalVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline RationalVector parse_rational_array(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of integers or rational strings");
  RationalVector out;
  for (const auto& item : j) {
    if (item.is_string()) {
      out.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      out.emplace_back(item.get<long long>());
    } else {
      throw ParseError("sequence entries must be integers or rational strings, got " + item.dump());
    }
  }
  if (out.empty()) throw ParseError("empty sequence");
  return out;
}

inline RationalVector parse_rational_array(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_rational_array(j);
}

inline Json to_json(const CongruenceCert& cert) {
  Json j;
  j["truncation"] = cert.truncation;
  j["verdict"] = cert.verdict ? "pass" : "fail";
  j["flavor"] = cert.flavor;
  j["prime"] = cert.prime ? Json(*cert.prime) : Json(nullptr);
  auto ff = cert.first_failure();
  j["first_failure"] = ff ? Json(*ff) : Json(nullptr);
  Json recs = Json::array();
  for (const auto& r : cert.records) {
    Json jr;
    jr["n"] = r.n;
    jr["value"] = to_string(r.value);
    jr["pass"] = r.pass;
    if (cert.prime) jr["valuation"] = r.valuation ? Json(*r.valuation) : Json("inf");
    recs.push_back(std::move(jr));
  }
  j["records"] = std::move(recs);
  return j;
}

inline Json to_json(const GradedPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json t;
    t["exponents"] = Json(std::vector<int>(mono.begin(), mono.end()));
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

inline Json to_json(const KPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

inline Json to_json(const IvpPoly& f) {
  Json j;
  j["binomial_basis"] = rational_array(f.binom_coeffs());
  j["power_basis"] = rational_array(f.to_power_basis());
  j["integer_valued"] = is_integer_valued(f);
  return j;
}

inline Json to_json(const FormDecomposition& d) {
  Json arr = Json::array();
  for (std::size_t b = 0; b < d.basis.size(); ++b) {
    Json j;
    j["basis"] = d.basis[b];
    j["form"] = rational_array(d.forms[b]);
    j["display"] = format_form(d.forms[b]);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline Json to_json(const SolutionSetReport& r) {
  Json j;
  j["truncation"] = r.truncation;
  j["equal"] = r.equal;
  j["mu_within_clarke"] = r.mu_within_clarke;
  j["clarke_within_mu"] = r.clarke_within_mu;
  j["clarke_present"] = r.clarke_present;
  j["skipped"] = r.skipped;
  Json forms = Json::array();
  for (const auto& f : r.forms) {
    Json jf;
    jf["source"] = f.source;
    jf["basis"] = f.basis_element;
    jf["form"] = format_form(f.form);
    jf["clarke_combination"] = rational_array(f.clarke_combination);
    jf["integral"] = f.integral;
    forms.push_back(std::move(jf));
  }
  j["forms"] = std::move(forms);
  return j;
}

inline Json to_json(const BasisReport& r) {
  Json j;
  j["prime"] = r.prime;
  j["truncation"] = r.truncation;
  j["selected"] = r.selected;
  j["pivot_valuations"] = r.pivot_valuations;
  j["reproduces_all_rows"] = r.reproduces_all_rows;
  j["pivot_minor"] = to_string(r.pivot_minor);
  j["pivot_minor_valuation"] = r.pivot_minor_valuation ? Json(*r.pivot_minor_valuation) : Json("inf");
  j["lattice_index_valuation"] = r.lattice_index_valuation;
  j["dual_index_valuation"] = r.dual_index_valuation;
  j["note"] = r.basis_choice_note;
  Json cob = Json::array();
  for (const auto& row : r.change_of_basis) cob.push_back(rational_array(row));
  j["change_of_basis"] = std::move(cob);
  return j;
}

/// Series goldens: log, exp, the Adams orientation coefficients B_i(kappa)
/// and the law coefficients a_ij (i <= j) through the engine's order.
inline Json fgl_dump(const FglEngine& engine) {
  const std::size_t order = engine.config().order;
  Json j;
  j["order"] = order;
  j["degree_bound"] = engine.config().degree;
  Json log = Json::array(), exp = Json::array(), orient = Json::array();
  const auto ls = engine.log_series(order);
  const auto es = engine.exp_series(order);
  const auto os = engine.adams_orientation_series(order);
  for (std::size_t i = 1; i <= order; ++i) {
    log.push_back(to_json(ls[i]));
    exp.push_back(to_json(es[i]));
    orient.push_back(to_json(os[i]));
  }
  j["log"] = std::move(log);
  j["exp"] = std::move(exp);
  j["adams_orientation"] = std::move(orient);
  Json law = Json::object();
  const auto f = engine.fgl_series(order);
  for (std::size_t i = 1; i <= order; ++i) {
    for (std::size_t k = i; i + k <= order; ++k) {
      law["a" + std::to_string(i) + "_" + std::to_string(k)] =
          to_json(f.coeff({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(k)}));
    }
  }
  j["law"] = std::move(law);
  return j;
}

}  // namespace adamsops
