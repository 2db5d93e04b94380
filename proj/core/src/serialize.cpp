#include "chigen/serialize.hpp"

#include <nlohmann/json.hpp>

namespace chigen {

using json = nlohmann::ordered_json;

std::string serialize_series(const MultiSeries& s) {
  json j;
  j["arity"] = s.arity();
  j["caps"] = s.caps();
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) {
    json t;
    t["e"] = e;
    t["num"] = numerator(c).str();
    t["den"] = denominator(c).str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

MultiSeries deserialize_series(const std::string& json_text) {
  json j = json::parse(json_text);
  std::vector<int> caps = j.at("caps").get<std::vector<int>>();
  if (j.at("arity").get<int>() != static_cast<int>(caps.size()))
    throw Error("serialized series: arity does not match caps");
  MultiSeries s(std::move(caps));
  for (const auto& t : j.at("terms")) {
    Exponents e = t.at("e").get<Exponents>();
    Int num(t.at("num").get<std::string>());
    Int den(t.at("den").get<std::string>());
    s.accumulate(e, Rat(num, den));
  }
  return s;
}

}  // namespace chigen
