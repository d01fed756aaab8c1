#ifndef UDAT_SYNTHETIC_HPP
#define UDAT_SYNTHETIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "udat/types.hpp"

namespace udat {

// Desk-scale substitute for the real corpora. Utterances are generated from
// per-act keyword templates so the acts are recoverable from surface text;
// domains get their own keyword variants so leave-one-domain-out runs see a
// real distribution shift, and `dialect` suffixes every keyword so two
// generated datasets can have disjoint surface grammars.
struct SynthSpec {
  int n_dialogues = 10;
  uint64_t seed = 1;
  double noise_rate = 0.0;          // P(corrupt a turn's label set)
  std::vector<std::string> domains = {"restaurant"};
  std::string dialect;              // "" = base grammar
  double domain_dialect_rate = 0.0; // P(turn keyword uses the domain variant)
  double filler_rate = 0.0;         // P(append distractor tokens)
  double extra_inform_rate = 0.35;  // P(attach inform() to affirm/reqalts/negate)
  int min_turns = 4;
  int max_turns = 8;
  Split split = Split::train;

  static SynthSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

Corpus generate_synthetic(const SynthSpec& spec);

// Analytic per-act marginal P(act present on a `side` turn) implied by the
// grammar's weights, valid for noise_rate 0.
double expected_act_fraction(const SynthSpec& spec, Agent side,
                             const std::string& act);

}  // namespace udat

#endif
