#ifndef STCI_REPORT_HPP_
#define STCI_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stci/errors.hpp"

namespace stci {

enum class Verdict { True, False, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

// Structured outcome of a claim check.  Serialized schema "stci.report/1":
// {claim, verdict, field, order, per_generator: [{generator, result, power}],
//  stats: {spairs, max_degree, millis}}.
struct VerificationReport {
  std::string claim;
  Verdict verdict = Verdict::Inconclusive;
  std::string field;
  std::string order;

  struct Entry {
    std::string generator;
    std::string result;  // e.g. "in-ideal", "in-radical", "not-in-radical"
    std::optional<int> power;
  };
  std::vector<Entry> per_generator;
  ComputationStats stats;

  bool ok() const { return verdict == Verdict::True; }

  nlohmann::json to_json() const {
    nlohmann::json pg = nlohmann::json::array();
    for (const Entry& e : per_generator) {
      nlohmann::json j{{"generator", e.generator}, {"result", e.result}};
      if (e.power) j["power"] = *e.power;
      pg.push_back(std::move(j));
    }
    return nlohmann::json{
        {"schema", "stci.report/1"},
        {"claim", claim},
        {"verdict", to_string(verdict)},
        {"field", field},
        {"order", order},
        {"per_generator", std::move(pg)},
        {"stats",
         {{"spairs", stats.spairs},
          {"max_degree", stats.max_degree},
          {"millis", stats.millis}}}};
  }
};

}  // namespace stci

#endif
