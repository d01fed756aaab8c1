#include "udat/schema.hpp"

#include <algorithm>
#include <fstream>

#include "udat/text.hpp"

namespace udat {

namespace detail {
extern const char* kDefaultRulesJson;
}

using nlohmann::json;

const std::vector<std::string>& universal_acts() {
  static const std::vector<std::string> kActs = {
      "ack",          "affirm",          "bye",
      "deny",         "inform",          "repeat",
      "reqalts",      "request",         "restart",
      "thank-you",    "user-confirm",    "sys-impl-confirm",
      "sys-expl-confirm", "sys-hi",      "user-hi",
      "sys-negate",   "user-negate",     "sys-notify-failure",
      "sys-notify-success", "sys-offer"};
  return kActs;
}

int universal_act_index(const std::string& name) {
  const auto& acts = universal_acts();
  for (size_t i = 0; i < acts.size(); ++i)
    if (acts[i] == name) return static_cast<int>(i);
  return -1;
}

std::string normalize_universal_name(const std::string& name) {
  std::string out = lowercase(name);
  for (char& c : out)
    if (c == '_') c = '-';
  return out;
}

// ------------------------------------------------------------ RuleSet ---

namespace {

ArgCondition arg_condition_from_string(const std::string& s) {
  if (s == "any") return ArgCondition::any;
  if (s == "has_args") return ArgCondition::has_args;
  if (s == "no_args") return ArgCondition::no_args;
  throw ParseError("unknown arg_condition '" + s + "'");
}

OutputTemplate::Args args_from_string(const std::string& s) {
  if (s == "keep") return OutputTemplate::Args::keep;
  if (s == "drop") return OutputTemplate::Args::drop;
  if (s == "move") return OutputTemplate::Args::move;
  throw ParseError("unknown arg disposition '" + s + "'");
}

bool rule_matches(const AlignmentRule& r, const DialogueAct& act, Agent agent) {
  if (r.source_ns != act.ns || r.source_act != act.name) return false;
  if (r.agent && *r.agent != agent) return false;
  switch (r.arg_condition) {
    case ArgCondition::any: return true;
    case ArgCondition::has_args: return !act.args.empty();
    case ArgCondition::no_args: return act.args.empty();
  }
  return false;
}

// Merge same-name universal acts, unioning args; keeps first-seen order.
void merge_output(std::vector<DialogueAct>& out, DialogueAct act) {
  for (auto& existing : out) {
    if (existing.name == act.name) {
      for (auto& sv : act.args)
        if (std::find(existing.args.begin(), existing.args.end(), sv) ==
            existing.args.end())
          existing.args.push_back(sv);
      return;
    }
  }
  out.push_back(std::move(act));
}

}  // namespace

RuleSet RuleSet::builtin() {
  return from_json(json::parse(detail::kDefaultRulesJson), "<builtin>");
}

RuleSet RuleSet::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open rule file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return from_json(j, path);
}

RuleSet RuleSet::from_json(const json& j, const std::string& origin) {
  RuleSet rs;
  try {
    rs.version_ = j.value("name", "unnamed");
    if (j.value("schema_version", 0) != 1)
      throw ParseError("rule file schema_version must be 1");
    for (const auto& a : j.at("universal_acts"))
      rs.universal_.push_back(normalize_universal_name(a.get<std::string>()));
    if (rs.universal_.size() != 20)
      throw ParseError("universal_acts must list exactly 20 acts, got " +
                       std::to_string(rs.universal_.size()));
    for (const auto& name : rs.universal_)
      if (universal_act_index(name) < 0)
        throw ParseError("act '" + name + "' is not a universal schema act");

    for (const auto& jr : j.at("rules")) {
      AlignmentRule r;
      r.source_ns = namespace_from_string(jr.at("source_namespace").get<std::string>());
      r.source_act = jr.at("source_act").get<std::string>();
      if (jr.contains("agent")) r.agent = agent_from_string(jr.at("agent").get<std::string>());
      r.arg_condition = arg_condition_from_string(jr.value("arg_condition", "any"));
      r.mod = jr.value("mod", 0);
      r.baseline_for_mod = jr.value("baseline_for_mod", 0);
      for (const auto& jo : jr.at("outputs")) {
        OutputTemplate t;
        t.act = normalize_universal_name(jo.at("act").get<std::string>());
        t.args = args_from_string(jo.value("args", "keep"));
        r.outputs.push_back(std::move(t));
      }
      if (r.outputs.empty()) throw ParseError("rule with empty outputs");
      rs.rules_.push_back(std::move(r));
    }

    for (const auto& jc : j.value("combine_rules", json::array())) {
      CombineRule c;
      c.source_ns = namespace_from_string(jc.at("source_namespace").get<std::string>());
      c.trigger_act = jc.at("trigger_act").get<std::string>();
      c.arg_act = jc.at("arg_act").get<std::string>();
      c.output_act = normalize_universal_name(jc.at("output_act").get<std::string>());
      c.mod = jc.value("mod", 0);
      c.baseline_for_mod = jc.value("baseline_for_mod", 0);
      rs.combines_.push_back(std::move(c));
    }

    for (const auto& jh : j.value("heuristics", json::array())) {
      HeuristicRule h;
      for (const auto& a : jh.at("source_acts")) h.source_acts.push_back(a.get<std::string>());
      h.text_pattern = jh.value("pattern", "");
      if (jh.contains("sequence")) {
        SequenceCondition c;
        const auto& js = jh.at("sequence");
        c.act_name = js.at("ends_with").get<std::string>();
        for (const auto& sv : js.value("args", json::array()))
          c.args.push_back({sv[0].get<std::string>(), sv[1].get<std::string>()});
        c.negate = js.value("negate", false);
        h.sequence = std::move(c);
      }
      h.output = normalize_universal_name(jh.at("output").get<std::string>());
      rs.heuristics_.push_back(std::move(h));
    }
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  rs.validate();
  return rs;
}

RuleSet RuleSet::with_mods_disabled(const std::set<int>& mods) const {
  RuleSet rs = *this;
  rs.disabled_mods_ = mods;
  rs.validate();
  return rs;
}

std::vector<const AlignmentRule*> RuleSet::active_rules() const {
  std::vector<const AlignmentRule*> out;
  for (const auto& r : rules_) {
    if (r.mod > 0 && disabled_mods_.count(r.mod)) continue;
    if (r.baseline_for_mod > 0 && !disabled_mods_.count(r.baseline_for_mod)) continue;
    out.push_back(&r);
  }
  return out;
}

std::vector<const CombineRule*> RuleSet::active_combines() const {
  std::vector<const CombineRule*> out;
  for (const auto& c : combines_) {
    if (c.mod > 0 && disabled_mods_.count(c.mod)) continue;
    if (c.baseline_for_mod > 0 && !disabled_mods_.count(c.baseline_for_mod)) continue;
    out.push_back(&c);
  }
  return out;
}

std::vector<std::string> RuleSet::label_space() const {
  std::set<std::string> names;
  for (const auto* r : active_rules())
    for (const auto& o : r->outputs) names.insert(o.act);
  for (const auto* c : active_combines()) names.insert(c->output_act);
  for (const auto& h : heuristics_) names.insert(h.output);
  // Default configuration: keep the canonical many-hot order.
  const auto& canon = universal_acts();
  if (names.size() == canon.size() &&
      std::all_of(canon.begin(), canon.end(), [&](const std::string& a) { return names.count(a); }))
    return canon;
  return {names.begin(), names.end()};
}

void RuleSet::validate() const {
  auto active = active_rules();
  for (size_t i = 0; i < active.size(); ++i) {
    const auto& a = *active[i];
    // Active rules must stay inside the universal schema; baseline
    // (mod-disabled) rules may reintroduce pre-merge names.
    if (a.baseline_for_mod == 0) {
      for (const auto& o : a.outputs)
        if (universal_act_index(o.act) < 0)
          throw ParseError("rule for '" + a.source_act + "' outputs '" + o.act +
                           "' which is not a universal act");
    }
    for (size_t k = i + 1; k < active.size(); ++k) {
      const auto& b = *active[k];
      if (a.source_ns != b.source_ns || a.source_act != b.source_act) continue;
      bool agents_overlap = !a.agent || !b.agent || *a.agent == *b.agent;
      bool args_overlap = a.arg_condition == ArgCondition::any ||
                          b.arg_condition == ArgCondition::any ||
                          a.arg_condition == b.arg_condition;
      if (agents_overlap && args_overlap)
        throw RuleConflictError("rules for (" + to_string(a.source_ns) + ", " +
                                a.source_act + ") can match the same act");
    }
  }
}

// ---------------------------------------------------------- alignment ---

std::vector<DialogueAct> align_act(const DialogueAct& act, Agent agent,
                                   const RuleSet& rules) {
  if (act.ns == ActNamespace::universal) return {act};
  const AlignmentRule* match = nullptr;
  for (const auto* r : rules.active_rules()) {
    if (!rule_matches(*r, act, agent)) continue;
    if (match)
      throw RuleConflictError("multiple rules match act '" + act.name + "' in " +
                              to_string(act.ns));
    match = r;
  }
  if (!match) throw UnmappedActError(act.ns, act.name);
  std::vector<DialogueAct> out;
  for (const auto& t : match->outputs) {
    DialogueAct a;
    a.name = t.act;
    a.ns = ActNamespace::universal;
    if (t.args != OutputTemplate::Args::drop) a.args = act.args;
    merge_output(out, std::move(a));
  }
  return out;
}

std::vector<DialogueAct> align_turn_acts(const std::vector<DialogueAct>& acts,
                                         Agent agent, const std::string& utterance,
                                         const RuleSet& rules) {
  if (acts.empty()) return {};
  if (acts.front().ns == ActNamespace::multiwoz) {
    Turn t;
    t.agent = agent;
    t.utterance = utterance;
    t.acts = acts;
    return multiwoz_heuristic_acts(t, rules);
  }

  std::vector<DialogueAct> out;
  std::vector<bool> consumed(acts.size(), false);
  for (const auto* combine : rules.active_combines()) {
    int trigger = -1;
    for (size_t i = 0; i < acts.size(); ++i)
      if (!consumed[i] && acts[i].ns == combine->source_ns &&
          acts[i].name == combine->trigger_act && acts[i].args.empty())
        trigger = static_cast<int>(i);
    if (trigger < 0) continue;
    DialogueAct merged;
    merged.name = combine->output_act;
    merged.ns = ActNamespace::universal;
    bool absorbed = false;
    for (size_t i = 0; i < acts.size(); ++i) {
      if (consumed[i] || acts[i].name != combine->arg_act || acts[i].args.empty())
        continue;
      for (const auto& sv : acts[i].args)
        if (std::find(merged.args.begin(), merged.args.end(), sv) == merged.args.end())
          merged.args.push_back(sv);
      consumed[i] = true;
      absorbed = true;
    }
    if (absorbed) {
      consumed[trigger] = true;
      merge_output(out, std::move(merged));
    }
  }
  for (size_t i = 0; i < acts.size(); ++i) {
    if (consumed[i]) continue;
    for (auto& a : align_act(acts[i], agent, rules)) merge_output(out, std::move(a));
  }
  return out;
}

std::vector<DialogueAct> multiwoz_heuristic_acts(const Turn& turn,
                                                 const RuleSet& rules) {
  auto sequence_holds = [&](const SequenceCondition& c) {
    bool ends = false;
    if (!turn.acts.empty()) {
      const auto& last = turn.acts.back();
      ends = last.name == c.act_name && last.args == c.args;
    }
    return c.negate ? !ends : ends;
  };

  std::vector<DialogueAct> out;
  for (const auto& act : turn.acts) {
    bool fired = false;
    for (const auto& h : rules.heuristics()) {
      if (std::find(h.source_acts.begin(), h.source_acts.end(), act.name) ==
          h.source_acts.end())
        continue;
      if (!h.text_pattern.empty() && !contains_pattern(turn.utterance, h.text_pattern))
        continue;
      if (h.sequence && !sequence_holds(*h.sequence)) continue;
      DialogueAct a;
      a.name = h.output;
      a.ns = ActNamespace::universal;
      for (const auto& sv : act.args)
        if (!(sv.slot == "none" && sv.value == "none"))  // MultiWOZ argless marker
          a.args.push_back(sv);
      merge_output(out, std::move(a));
      fired = true;
    }
    if (!fired)
      throw UnmappedActError(ActNamespace::multiwoz, act.name,
                             "no heuristic matched; utterance: " + turn.utterance);
  }
  return out;
}

Corpus align_corpus(const Corpus& corpus, const RuleSet& rules) {
  Corpus out = corpus;
  out.source = ActNamespace::universal;
  for (auto& d : out.dialogues) {
    for (size_t ti = 0; ti < d.turns.size(); ++ti) {
      auto& turn = d.turns[ti];
      try {
        turn.acts = align_turn_acts(turn.acts, turn.agent, turn.utterance, rules);
      } catch (const UnmappedActError& e) {
        throw UnmappedActError(e.ns, e.act,
                               "dialogue " + d.id + " turn " + std::to_string(ti));
      }
    }
  }
  return out;
}

std::vector<SchemaViolation> validate_universal(const Corpus& corpus) {
  std::vector<SchemaViolation> out;
  for (const auto& d : corpus.dialogues) {
    for (size_t ti = 0; ti < d.turns.size(); ++ti) {
      const auto& turn = d.turns[ti];
      for (const auto& act : turn.acts) {
        if (act.ns != ActNamespace::universal || universal_act_index(act.name) < 0) {
          out.push_back({SchemaViolation::Kind::unknown_act, d.id,
                         static_cast<int>(ti), act.name,
                         act.ns != ActNamespace::universal
                             ? "namespace " + to_string(act.ns)
                             : "not in the 20-act schema"});
          continue;
        }
        bool sys_act = act.name.rfind("sys-", 0) == 0;
        bool user_act = act.name.rfind("user-", 0) == 0;
        if ((sys_act && turn.agent == Agent::user) ||
            (user_act && turn.agent == Agent::system)) {
          out.push_back({SchemaViolation::Kind::role_mismatch, d.id,
                         static_cast<int>(ti), act.name,
                         act.name + " on a " + to_string(turn.agent) + " turn"});
        }
      }
    }
  }
  return out;
}

}  // namespace udat
