#pragma once

#include <json.hpp>

#include "closurelab/parse.hpp"
#include "closurelab/torsionless.hpp"

namespace closurelab {

inline constexpr int kSchemaVersion = 1;

/// Printing context for elements: base variables (semigroup rings print
/// over a formal t).
inline std::vector<std::string> print_vars(const RingDescriptor& ring) {
  if (ring.is_semigroup()) return {"t"};
  return ring.base_poly().vars;
}

inline PolyRing parse_base_ring(const RingDescriptor& ring) {
  if (ring.is_semigroup()) return PolyRing{ring.field(), {"t"}};
  return ring.base_poly();
}

inline nlohmann::json certificate_to_json(const IntegralityCertificate& cert) {
  nlohmann::json j;
  j["kind"] = "integrality-certificate";
  j["schema_version"] = kSchemaVersion;
  j["ring"] = cert.ring.str();
  j["rank"] = cert.rank;
  auto vars = print_vars(cert.ring);
  j["element"] = cert.element.str(vars);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : cert.generators) gens.push_back(g.str(vars));
  j["generators"] = std::move(gens);
  j["degree"] = cert.degree;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& dc : cert.coefficients) {
    nlohmann::json cj;
    cj["power"] = dc.power;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : dc.terms) {
      nlohmann::json tj;
      tj["generators"] = t.gen_indices;
      tj["coefficient"] = t.coeff.str(vars);
      terms.push_back(std::move(tj));
    }
    cj["terms"] = std::move(terms);
    coeffs.push_back(std::move(cj));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

inline IntegralityCertificate certificate_from_json(const nlohmann::json& j) {
  if (j.at("kind") != "integrality-certificate")
    throw std::invalid_argument("certificate_from_json: wrong kind");
  IntegralityCertificate cert;
  cert.ring = parse_ring(j.at("ring").get<std::string>());
  cert.rank = j.at("rank").get<int>();
  PolyRing base = parse_base_ring(cert.ring);
  cert.element = parse_vector(j.at("element").get<std::string>(), base, cert.rank);
  for (const auto& g : j.at("generators"))
    cert.generators.push_back(parse_vector(g.get<std::string>(), base, cert.rank));
  cert.degree = j.at("degree").get<int>();
  for (const auto& cj : j.at("coefficients")) {
    DegreeCoeff dc;
    dc.power = cj.at("power").get<int>();
    for (const auto& tj : cj.at("terms")) {
      CertTerm t;
      t.gen_indices = tj.at("generators").get<std::vector<int>>();
      t.coeff = parse_polynomial(tj.at("coefficient").get<std::string>(), base);
      dc.terms.push_back(std::move(t));
    }
    cert.coefficients.push_back(std::move(dc));
  }
  return cert;
}

inline nlohmann::json witness_to_json(const TorsionlessWitness& w) {
  nlohmann::json j;
  j["kind"] = "torsionless-witness";
  j["schema_version"] = kSchemaVersion;
  j["ring"] = RingDescriptor(w.ring).str();
  const auto& vars = w.ring.vars;
  nlohmann::json ideal = nlohmann::json::array();
  for (const auto& m : w.ideal)
    ideal.push_back(Polynomial::monomial(m, w.ring.field).str(vars));
  j["ideal"] = std::move(ideal);
  j["blocks"] = w.blocks;
  j["truncation"] = w.truncation;
  nlohmann::json L = nlohmann::json::array();
  for (const auto& g : w.L_gens) L.push_back(g.str(vars));
  j["L_generators"] = std::move(L);
  j["generator"] = w.generator.str(vars);
  j["certificate"] = certificate_to_json(w.certificate);
  nlohmann::json colon = nlohmann::json::array();
  for (const auto& p : w.colon_gens) colon.push_back(p.str(vars));
  j["colon_generators"] = std::move(colon);
  j["length"] = w.length;
  return j;
}

inline TorsionlessWitness witness_from_json(const nlohmann::json& j) {
  if (j.at("kind") != "torsionless-witness")
    throw std::invalid_argument("witness_from_json: wrong kind");
  TorsionlessWitness w;
  RingDescriptor rd = parse_ring(j.at("ring").get<std::string>());
  if (!rd.is_poly())
    throw std::invalid_argument("witness_from_json: expected a polynomial ring");
  w.ring = rd.poly();
  for (const auto& g : j.at("ideal")) {
    Polynomial p = parse_polynomial(g.get<std::string>(), w.ring);
    if (!p.is_monomial())
      throw std::invalid_argument("witness_from_json: non-monomial ideal generator");
    w.ideal.push_back(p.only_term().first);
  }
  w.blocks = j.at("blocks").get<int>();
  w.truncation = j.at("truncation").get<int>();
  const int rank = w.blocks * w.truncation;
  for (const auto& g : j.at("L_generators"))
    w.L_gens.push_back(parse_vector(g.get<std::string>(), w.ring, rank));
  w.generator = parse_vector(j.at("generator").get<std::string>(), w.ring, rank);
  w.certificate = certificate_from_json(j.at("certificate"));
  for (const auto& p : j.at("colon_generators"))
    w.colon_gens.push_back(parse_polynomial(p.get<std::string>(), w.ring));
  w.length = j.at("length").get<long>();
  return w;
}

}  // namespace closurelab
