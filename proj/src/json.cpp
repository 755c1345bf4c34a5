#include "qinv/json.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qinv {

namespace {

constexpr std::array<const char*, 5> kExpKeys{"ex", "ey", "ez", "ep", "eq"};

Integer parse_coeff(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw std::invalid_argument("coefficient must be a decimal string or integer");
}

}  // namespace

nlohmann::json to_json(const MultiPoly& a) {
  std::vector<std::pair<Exponents, Integer>> terms(a.begin(), a.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    int dl = std::accumulate(l.first.begin(), l.first.end(), 0);
    int dr = std::accumulate(r.first.begin(), r.first.end(), 0);
    if (dl != dr) return dl > dr;
    return l.first > r.first;
  });
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : terms) {
    nlohmann::json t;
    t["coeff"] = c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) t[kExpKeys[i]] = e[i];
    out.push_back(std::move(t));
  }
  return out;
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  MultiPoly r;
  for (const auto& t : j) {
    Exponents e{};
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.value(kExpKeys[i], 0);
    r += monomial(e, parse_coeff(t.at("coeff")));
  }
  return r;
}

nlohmann::json to_json(const QLaurent& a) {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    out.push_back({{"coeff", it->second.get_str()}, {"eq", it->first}});
  }
  return out;
}

QLaurent qlaurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial JSON must be an array of terms");
  QLaurent r;
  for (const auto& t : j) r.add_term(t.at("eq").get<int>(), parse_coeff(t.at("coeff")));
  return r;
}

}  // namespace qinv
