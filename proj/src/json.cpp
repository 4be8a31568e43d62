#include "htg/json.hpp"

namespace htg {

  nlohmann::json to_json(LMatrix const& a) {
    auto entries = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto row = nlohmann::json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) {
        row.push_back(to_string(a.at(i, j)));
      }
      entries.push_back(std::move(row));
    }
    return {{"n", a.n()}, {"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
  }

  nlohmann::json to_json(Symbol const& s) {
    auto pairs = nlohmann::json::array();
    for (std::size_t t = 0; t < s.size(); ++t) {
      pairs.push_back({{"domain", to_string(s.domain()[t], s.n())},
                       {"range", to_string(s.range()[t], s.n())}});
    }
    return {{"n", s.n()}, {"r", s.r()}, {"pairs", pairs}};
  }

  nlohmann::json to_json(GeneratorSet const& g) {
    auto assignment = nlohmann::json::object();
    for (auto const& [slot, word] : g.assignment) {
      assignment["a[" + std::to_string(slot.matrix) + "," + std::to_string(slot.row) + "]"]
          = to_string(Monomial{{}, word});
    }
    auto x = nlohmann::json::array();
    for (auto const& m : g.X) {
      x.push_back(to_json(m));
    }
    return {{"n", g.n},
            {"d", g.d},
            {"base_d", g.base_d},
            {"q", g.q},
            {"rho", g.rho},
            {"generation",
             g.generation == GenerationStatus::verified ? "verified" : "unverified"},
            {"witness_length", g.witness_length},
            {"assignment", assignment},
            {"X", x}};
  }

  nlohmann::json to_json(CheckResult const& c) {
    return {{"name", c.name},
            {"cases", c.cases},
            {"failures", c.failures},
            {"passed", c.passed()},
            {"seconds", c.seconds},
            {"details", c.details}};
  }

}  // namespace htg
