#ifndef UDAT_TYPES_HPP
#define UDAT_TYPES_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace udat {

enum class Agent { user, system };

// Which annotation namespace an act name lives in.
enum class ActNamespace { gsim_r, gsim_m, dstc2, multiwoz, universal };

std::string to_string(Agent a);
std::string to_string(ActNamespace ns);
Agent agent_from_string(const std::string& s);
ActNamespace namespace_from_string(const std::string& s);

struct SlotValue {
  std::string slot;
  std::string value;  // may be empty for valueless slots, e.g. request(food)
  bool operator==(const SlotValue&) const = default;
  bool operator<(const SlotValue& o) const {
    return slot != o.slot ? slot < o.slot : value < o.value;
  }
};

struct DialogueAct {
  std::string name;
  std::vector<SlotValue> args;
  ActNamespace ns = ActNamespace::universal;
  bool operator==(const DialogueAct&) const = default;
};

struct Turn {
  Agent agent = Agent::user;
  std::string utterance;
  std::vector<std::string> tokens;  // derived from utterance, see tokenize()
  std::vector<DialogueAct> acts;
  std::string domain;  // empty = untagged
  bool operator==(const Turn&) const = default;
};

struct Dialogue {
  std::string id;
  std::vector<Turn> turns;
  std::set<std::string> domains;
  bool operator==(const Dialogue&) const = default;
};

enum class Split { train, dev, test };
std::string to_string(Split s);
Split split_from_string(const std::string& s);

struct Corpus {
  std::vector<Dialogue> dialogues;
  Split split = Split::train;
  ActNamespace source = ActNamespace::universal;
  // MultiWOZ-style corpora only annotate one side, so the labeled flag is
  // tracked per agent side.
  bool labeled_user = true;
  bool labeled_system = true;
  bool labels_estimated = false;  // true after self-labeling

  bool labeled(Agent a) const {
    return a == Agent::user ? labeled_user : labeled_system;
  }
  bool fully_labeled() const { return labeled_user && labeled_system; }
  size_t n_turns() const {
    size_t n = 0;
    for (const auto& d : dialogues) n += d.turns.size();
    return n;
  }
  bool operator==(const Corpus&) const = default;
};

struct CorpusStats {
  size_t n_dialogues = 0;
  double avg_turns_per_dialogue = 0.0;
  size_t n_system_acts = 0;        // distinct act names on system turns
  size_t system_vocab_size = 0;    // distinct tokens on system turns
  size_t n_unique_system_turns = 0;  // distinct delexicalized system turns
  double pct_unique_system_turns = 0.0;
};

// Data-level failures carry enough context to locate the offending input.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
 public:
  using DataError::DataError;
};

class UnmappedActError : public DataError {
 public:
  UnmappedActError(ActNamespace ns, const std::string& act,
                   const std::string& where = "")
      : DataError("no alignment rule for act '" + act + "' in namespace " +
                  to_string(ns) + (where.empty() ? "" : " (" + where + ")")),
        ns(ns),
        act(act) {}
  ActNamespace ns;
  std::string act;
};

class RuleConflictError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace udat

#endif
