#include "udat/synthetic.hpp"

#include <array>
#include <cstdio>
#include <map>

#include "udat/rng.hpp"
#include "udat/text.hpp"

namespace udat {

using nlohmann::json;

namespace {

enum class Payload { none, slot, slot_value };

struct ActTemplate {
  const char* act;
  double weight;
  const char* keyword;
  Payload payload;
};

// Primary-act grammars. Weights sum to 100 per side; every act of the
// 20-act schema is reachable from one side or the other.
const std::array<ActTemplate, 13> kUserActs = {{
    {"inform", 24, "itell", Payload::slot_value},
    {"request", 16, "whatis", Payload::slot},
    {"affirm", 9, "yes", Payload::none},
    {"user-negate", 7, "nope", Payload::none},
    {"reqalts", 7, "another", Payload::none},
    {"thank-you", 6, "thanks", Payload::none},
    {"bye", 6, "goodbye", Payload::none},
    {"user-hi", 6, "hello", Payload::none},
    {"user-confirm", 6, "isit", Payload::slot_value},
    {"ack", 4, "okay", Payload::none},
    {"deny", 4, "wrong", Payload::none},
    {"repeat", 3, "pardon", Payload::none},
    {"restart", 2, "startover", Payload::none},
}};

const std::array<ActTemplate, 11> kSystemActs = {{
    {"inform", 22, "hereis", Payload::slot_value},
    {"request", 16, "tellme", Payload::slot},
    {"sys-offer", 18, "howabout", Payload::slot_value},
    {"sys-expl-confirm", 10, "confirming", Payload::slot_value},
    {"sys-impl-confirm", 8, "younoted", Payload::slot_value},
    {"sys-notify-success", 8, "booked", Payload::none},
    {"sys-notify-failure", 6, "nomatch", Payload::none},
    {"reqalts", 4, "anythingelse", Payload::none},
    {"sys-hi", 3, "welcome", Payload::none},
    {"sys-negate", 3, "notright", Payload::none},
    {"bye", 2, "goodday", Payload::none},
}};

// Acts that may drag an extra inform() along (the "yes, 7pm" pattern).
bool takes_extra_inform(const std::string& act) {
  return act == "affirm" || act == "reqalts" || act == "user-negate";
}

struct SlotTable {
  const char* slot;
  std::vector<const char*> values;
};

const std::map<std::string, std::vector<SlotTable>>& domain_slots() {
  static const std::map<std::string, std::vector<SlotTable>> kSlots = {
      {"restaurant",
       {{"food", {"thai", "pizza", "sushi", "tapas", "ramen"}},
        {"area", {"north", "south", "centre", "riverside"}},
        {"price", {"cheap", "moderate", "expensive"}}}},
      {"hotel",
       {{"stars", {"two", "three", "four", "five"}},
        {"parking", {"yes", "no"}},
        {"area", {"downtown", "suburb", "airport", "harbor"}}}},
      {"movie",
       {{"genre", {"comedy", "drama", "horror", "scifi"}},
        {"time", {"noon", "evening", "midnight"}},
        {"theatre", {"odeon", "vue", "grand"}}}},
      {"taxi",
       {{"dest", {"station", "museum", "stadium"}},
        {"time", {"five", "six", "seven"}}}},
      {"attraction",
       {{"kind", {"park", "gallery", "cinema", "pool"}},
        {"fee", {"free", "paid"}}}},
  };
  return kSlots;
}

const std::vector<const char*>& fillers() {
  static const std::vector<const char*> kFillers = {
      "please", "um", "kindly", "right", "now", "indeed", "folks", "cheers"};
  return kFillers;
}

const ActTemplate& pick_act(const auto& table, Rng& rng) {
  double total = 0;
  for (const auto& t : table) total += t.weight;
  double x = rng.uniform() * total;
  for (const auto& t : table) {
    if (x < t.weight) return t;
    x -= t.weight;
  }
  return table.back();
}

const std::vector<SlotTable>& slots_for(const std::string& domain) {
  auto it = domain_slots().find(domain);
  if (it == domain_slots().end())
    throw DataError("synthetic generator has no slot table for domain '" + domain + "'");
  return it->second;
}

std::string keyword_for(const ActTemplate& t, const SynthSpec& spec,
                        const std::string& domain, Rng& rng) {
  std::string kw = t.keyword;
  if (spec.domain_dialect_rate > 0 && rng.bernoulli(spec.domain_dialect_rate))
    kw += "_" + domain;
  if (!spec.dialect.empty()) kw += "_" + spec.dialect;
  return kw;
}

void realize(const ActTemplate& t, const SynthSpec& spec, const std::string& domain,
             Rng& rng, std::vector<std::string>& tokens, DialogueAct& act) {
  tokens.push_back(keyword_for(t, spec, domain, rng));
  if (t.payload == Payload::none) return;
  const auto& slots = slots_for(domain);
  const auto& st = slots[rng.below(slots.size())];
  tokens.push_back(st.slot);
  if (t.payload == Payload::slot) {
    act.args.push_back({st.slot, ""});
    return;
  }
  const char* value = st.values[rng.below(st.values.size())];
  tokens.push_back(value);
  act.args.push_back({st.slot, value});
}

Turn make_turn(Agent agent, const SynthSpec& spec, const std::string& domain,
               Rng& rng) {
  Turn turn;
  turn.agent = agent;
  turn.domain = domain;
  std::vector<std::string> tokens;

  auto add_act = [&](const ActTemplate& t) {
    DialogueAct act;
    act.name = t.act;
    act.ns = ActNamespace::universal;
    realize(t, spec, domain, rng, tokens, act);
    turn.acts.push_back(std::move(act));
  };

  if (agent == Agent::user) {
    const auto& primary = pick_act(kUserActs, rng);
    add_act(primary);
    if (takes_extra_inform(primary.act) && rng.bernoulli(spec.extra_inform_rate))
      add_act(kUserActs[0]);  // inform
  } else {
    add_act(pick_act(kSystemActs, rng));
  }

  if (spec.filler_rate > 0 && rng.bernoulli(spec.filler_rate)) {
    int n = rng.int_range(1, 2);
    for (int i = 0; i < n; ++i)
      tokens.push_back(fillers()[rng.below(fillers().size())]);
  }

  if (spec.noise_rate > 0 && rng.bernoulli(spec.noise_rate)) {
    // Corrupt the label set, leaving the surface text alone.
    const std::string original = turn.acts.front().name;
    turn.acts.clear();
    DialogueAct act;
    act.ns = ActNamespace::universal;
    if (agent == Agent::user) {
      do {
        act.name = kUserActs[rng.below(kUserActs.size())].act;
      } while (act.name == original);
    } else {
      do {
        act.name = kSystemActs[rng.below(kSystemActs.size())].act;
      } while (act.name == original);
    }
    turn.acts.push_back(std::move(act));
  }

  turn.utterance = join(tokens, " ");
  turn.tokens = std::move(tokens);
  return turn;
}

}  // namespace

Corpus generate_synthetic(const SynthSpec& spec) {
  if (spec.domains.empty()) throw DataError("synthetic spec needs at least one domain");
  if (spec.min_turns < 2 || spec.max_turns < spec.min_turns)
    throw DataError("synthetic spec has an invalid turn range");
  Rng rng(spec.seed);
  Corpus corpus;
  corpus.source = ActNamespace::universal;
  corpus.split = spec.split;
  for (int di = 0; di < spec.n_dialogues; ++di) {
    Dialogue d;
    const std::string domain = spec.domains[rng.below(spec.domains.size())];
    char id[96];
    snprintf(id, sizeof id, "syn%s%s-%s-%06d", spec.dialect.empty() ? "" : "-",
             spec.dialect.c_str(), domain.c_str(), di);
    d.id = id;
    d.domains = {domain};
    int n_turns = rng.int_range(spec.min_turns, spec.max_turns);
    if (n_turns % 2) ++n_turns;
    for (int t = 0; t < n_turns; ++t)
      d.turns.push_back(
          make_turn(t % 2 == 0 ? Agent::user : Agent::system, spec, domain, rng));
    corpus.dialogues.push_back(std::move(d));
  }
  return corpus;
}

double expected_act_fraction(const SynthSpec& spec, Agent side,
                             const std::string& act) {
  double total = 0, w = 0, extra_mass = 0;
  auto scan = [&](const auto& table) {
    for (const auto& t : table) {
      total += t.weight;
      if (act == t.act) w += t.weight;
      if (side == Agent::user && takes_extra_inform(t.act)) extra_mass += t.weight;
    }
  };
  if (side == Agent::user)
    scan(kUserActs);
  else
    scan(kSystemActs);
  double p = w / total;
  if (side == Agent::user && act == "inform")
    p += (extra_mass / total) * spec.extra_inform_rate;
  return p;
}

SynthSpec SynthSpec::from_json(const json& j) {
  SynthSpec s;
  s.n_dialogues = j.value("n_dialogues", s.n_dialogues);
  s.seed = j.value("seed", s.seed);
  s.noise_rate = j.value("noise_rate", s.noise_rate);
  if (j.contains("domains")) s.domains = j.at("domains").get<std::vector<std::string>>();
  s.dialect = j.value("dialect", s.dialect);
  s.domain_dialect_rate = j.value("domain_dialect_rate", s.domain_dialect_rate);
  s.filler_rate = j.value("filler_rate", s.filler_rate);
  s.extra_inform_rate = j.value("extra_inform_rate", s.extra_inform_rate);
  s.min_turns = j.value("min_turns", s.min_turns);
  s.max_turns = j.value("max_turns", s.max_turns);
  if (j.contains("split")) s.split = split_from_string(j.at("split").get<std::string>());
  return s;
}

json SynthSpec::to_json() const {
  return {{"n_dialogues", n_dialogues},
          {"seed", seed},
          {"noise_rate", noise_rate},
          {"domains", domains},
          {"dialect", dialect},
          {"domain_dialect_rate", domain_dialect_rate},
          {"filler_rate", filler_rate},
          {"extra_inform_rate", extra_inform_rate},
          {"min_turns", min_turns},
          {"max_turns", max_turns},
          {"split", to_string(split)}};
}

}  // namespace udat
