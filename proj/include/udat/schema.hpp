#ifndef UDAT_SCHEMA_HPP
#define UDAT_SCHEMA_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "udat/types.hpp"

namespace udat {

// The 20-act universal schema, in the fixed order that defines many-hot
// vector indices.
const std::vector<std::string>& universal_acts();
int universal_act_index(const std::string& name);

// Normalizes underscore/hyphen spelling of universal act names
// (thank_you -> thank-you).
std::string normalize_universal_name(const std::string& name);

enum class ArgCondition { any, has_args, no_args };

struct OutputTemplate {
  std::string act;
  enum class Args { keep, drop, move } args = Args::keep;
};

struct AlignmentRule {
  ActNamespace source_ns = ActNamespace::universal;
  std::string source_act;
  std::optional<Agent> agent;  // role-split condition
  ArgCondition arg_condition = ArgCondition::any;
  std::vector<OutputTemplate> outputs;
  int mod = 0;               // 1..4: introduced by that modification
  int baseline_for_mod = 0;  // >0: active only when that mod is disabled
};

// Turn-level merge: a trigger act co-occurring with an argument-bearing act
// collapses into one universal act that absorbs the arguments
// (request_alts() + inform(x=y) -> reqalts(x=y)).
struct CombineRule {
  ActNamespace source_ns = ActNamespace::universal;
  std::string trigger_act;
  std::string arg_act;
  std::string output_act;
  int mod = 0;
  int baseline_for_mod = 0;
};

struct SequenceCondition {
  std::string act_name;          // native act the turn's act list must end in
  std::vector<SlotValue> args;   // exact args of that final act
  bool negate = false;           // "doesn't end in"
};

struct HeuristicRule {
  std::vector<std::string> source_acts;     // MultiWOZ act names
  std::string text_pattern;                 // substring with '*' wildcards; empty = none
  std::optional<SequenceCondition> sequence;
  std::string output;
};

class RuleSet {
 public:
  static RuleSet builtin();  // the shipped universal_v1 rules
  static RuleSet from_file(const std::string& path);
  static RuleSet from_json(const nlohmann::json& j, const std::string& origin);

  RuleSet with_mods_disabled(const std::set<int>& mods) const;

  // Rules active under the current mod configuration.
  std::vector<const AlignmentRule*> active_rules() const;
  std::vector<const CombineRule*> active_combines() const;
  const std::vector<HeuristicRule>& heuristics() const { return heuristics_; }

  // Output act inventory of the active configuration. Equals the 20-act
  // universal set for the default configuration; mod-ablated configurations
  // reintroduce pre-merge names (offer, select, user-request, ...).
  std::vector<std::string> label_space() const;

  const std::string& version() const { return version_; }
  const std::set<int>& disabled_mods() const { return disabled_mods_; }

 private:
  void validate() const;  // uniqueness of rule matches, output membership

  std::string version_;
  std::vector<std::string> universal_;
  std::vector<AlignmentRule> rules_;
  std::vector<CombineRule> combines_;
  std::vector<HeuristicRule> heuristics_;
  std::set<int> disabled_mods_;
};

// Aligns one native act; universal acts pass through unchanged. Throws
// UnmappedActError / RuleConflictError.
std::vector<DialogueAct> align_act(const DialogueAct& act, Agent agent,
                                   const RuleSet& rules);

// Aligns a turn's whole act list: combine rules first, then per-act rules,
// outputs merged by act name. MultiWOZ turns go through the heuristics.
std::vector<DialogueAct> align_turn_acts(const std::vector<DialogueAct>& acts,
                                         Agent agent, const std::string& utterance,
                                         const RuleSet& rules);

std::vector<DialogueAct> multiwoz_heuristic_acts(const Turn& turn,
                                                 const RuleSet& rules);

Corpus align_corpus(const Corpus& corpus, const RuleSet& rules);

struct SchemaViolation {
  enum class Kind { unknown_act, role_mismatch };
  Kind kind;
  std::string dialogue_id;
  int turn_index;
  std::string act_name;
  std::string detail;
};

std::vector<SchemaViolation> validate_universal(const Corpus& corpus);

}  // namespace udat

#endif
