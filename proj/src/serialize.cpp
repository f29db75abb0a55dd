#include "graphrel/serialize.hpp"

#include <stdexcept>

namespace graphrel {

namespace {

Json decimal_list(const std::vector<mpz_class>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

}  // namespace

Json to_json(const BivarPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.x, e.y, c.get_str()}));
  return out;
}

BivarPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of [a, b, \"c\"] triples");
  BivarPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_number_integer() ||
        !term[2].is_string()) {
      throw std::invalid_argument("malformed polynomial term " + term.dump());
    }
    mpz_class c;
    if (c.set_str(term[2].get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad coefficient " + term[2].dump());
    }
    p.add_term(term[0].get<int>(), term[1].get<int>(), c);
  }
  return p;
}

Json to_json(const NTable& t) {
  Json rows = Json::array();
  for (int i = 0; i <= t.edges(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= t.vertices(); ++j) row.push_back(t.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const OrderResult& r) {
  Json out;
  out["order"] = to_string(r.order);
  out["verdict"] = to_string(r.verdict);
  out["quotient"] = r.quotient ? to_json(*r.quotient) : Json(nullptr);
  out["quotient_text"] = r.quotient ? Json(r.quotient->to_string()) : Json(nullptr);
  if (r.witness) {
    out["witness"] = {{"kind", r.verdict == Verdict::NotDivisible ? "diagonal_start" : "negative_coefficient"},
                      {"exponent", Json::array({r.witness->x, r.witness->y})}};
    if (r.verdict == Verdict::NegativeQuotient) {
      out["witness"]["coefficient"] = r.quotient->coeff(r.witness->x, r.witness->y).get_str();
    }
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const ClassReport& r) {
  Json out;
  out["spec"] = {{"n", r.spec.n}, {"m", r.spec.m}};
  out["complete"] = r.complete;
  out["theorem2_check"] = r.theorem2_check;
  Json members = Json::array();
  for (const auto& mem : r.members) {
    Json m;
    m["graph6"] = mem.graph6;
    m["ntable_digest"] = mem.digest;
    m["t"] = decimal_list(mem.t);
    Json lambda = Json::array();
    for (const auto& l : mem.lambda) lambda.push_back(l ? Json(*l) : Json(nullptr));
    m["lambda"] = std::move(lambda);
    const auto& f = mem.flags;
    Json umrg = Json::array();
    for (bool b : f.k_umrg_by_domination) umrg.push_back(b);
    m["flags"] = {{"strong", f.strong},
                  {"zero_element", f.zero_element},
                  {"mu_lex_min", f.mu_lex_min},
                  {"whitney_max", f.whitney_max},
                  {"tutte_max", f.tutte_max},
                  {"t_optimal", f.t_optimal},
                  {"k_umrg_by_domination", std::move(umrg)}};
    if (mem.whitney_failures) m["whitney_failures"] = *mem.whitney_failures;
    if (mem.tutte_failures) m["tutte_failures"] = *mem.tutte_failures;
    members.push_back(std::move(m));
  }
  out["members"] = std::move(members);
  const auto& s = r.summary;
  out["summary"] = {{"members", s.members},
                    {"strong", s.strong},
                    {"zero_element", s.zero_element},
                    {"mu_lex_min", s.mu_lex_min},
                    {"whitney_max", s.whitney_max},
                    {"tutte_max", s.tutte_max},
                    {"t_optimal", s.t_optimal},
                    {"k_umrg_by_domination", s.k_umrg_by_domination}};
  return out;
}

Json to_json(const McEstimate& e) {
  return {{"mean", e.mean}, {"stderr", e.stderr_}, {"trials", e.trials}, {"successes", e.successes}, {"seed", e.seed}};
}

Json to_json(const Section4Result& r) {
  return {{"vacuous", r.vacuous}, {"passed", r.passed}, {"failures", r.failures}};
}

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  mpq_class q;
  const bool ok = !s.empty() && s.find_first_not_of("0123456789/-+") == std::string::npos &&
                  s.find('/') == s.rfind('/') && q.set_str(s, 10) == 0;
  if (!ok || q.get_den() == 0) throw std::invalid_argument("expected a rational \"a/b\", got \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace graphrel
