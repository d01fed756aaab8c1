#include "udat/stats.hpp"

#include <algorithm>
#include <set>

#include "udat/text.hpp"

namespace udat {

std::vector<std::string> delexicalize(const Turn& turn) {
  // Candidate replacements: tokenized argument values, longest first so the
  // leftmost-longest rule falls out of the scan order.
  struct Candidate {
    std::vector<std::string> value_tokens;
    std::string slot;
  };
  std::vector<Candidate> candidates;
  for (const auto& act : turn.acts) {
    for (const auto& sv : act.args) {
      if (sv.value.empty()) continue;
      auto toks = tokenize(sv.value);
      if (!toks.empty()) candidates.push_back({std::move(toks), sv.slot});
    }
  }
  if (candidates.empty()) return turn.tokens;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.value_tokens.size() > b.value_tokens.size();
                   });

  std::vector<std::string> lowered;
  lowered.reserve(turn.tokens.size());
  for (const auto& t : turn.tokens) lowered.push_back(lowercase(t));

  std::vector<std::string> out;
  size_t i = 0;
  while (i < lowered.size()) {
    const Candidate* hit = nullptr;
    for (const auto& c : candidates) {
      if (i + c.value_tokens.size() > lowered.size()) continue;
      bool match = true;
      for (size_t k = 0; k < c.value_tokens.size(); ++k) {
        if (lowered[i + k] != c.value_tokens[k]) {
          match = false;
          break;
        }
      }
      if (match) {
        hit = &c;
        break;
      }
    }
    if (hit) {
      out.push_back("<" + hit->slot + ">");
      i += hit->value_tokens.size();
    } else {
      out.push_back(turn.tokens[i]);
      ++i;
    }
  }
  return out;
}

CorpusStats compute_stats(const Corpus& corpus) {
  if (corpus.dialogues.empty())
    throw DataError("compute_stats: empty corpus (averages undefined)");
  CorpusStats s;
  s.n_dialogues = corpus.dialogues.size();
  size_t total_turns = 0, system_turns = 0;
  std::set<std::string> system_acts;
  std::set<std::string> system_vocab;
  std::set<std::string> unique_delex;
  for (const auto& d : corpus.dialogues) {
    total_turns += d.turns.size();
    for (const auto& t : d.turns) {
      if (t.agent != Agent::system) continue;
      ++system_turns;
      for (const auto& a : t.acts) system_acts.insert(a.name);
      // vocabulary over whitespace tokens of the lowercased utterance
      std::string lower = lowercase(t.utterance);
      size_t pos = 0;
      while (pos < lower.size()) {
        size_t start = lower.find_first_not_of(" \t\r\n", pos);
        if (start == std::string::npos) break;
        size_t end = lower.find_first_of(" \t\r\n", start);
        if (end == std::string::npos) end = lower.size();
        system_vocab.insert(lower.substr(start, end - start));
        pos = end;
      }
      unique_delex.insert(join(delexicalize(t), " "));
    }
  }
  s.avg_turns_per_dialogue = static_cast<double>(total_turns) / s.n_dialogues;
  s.n_system_acts = system_acts.size();
  s.system_vocab_size = system_vocab.size();
  s.n_unique_system_turns = unique_delex.size();
  s.pct_unique_system_turns =
      system_turns == 0 ? 0.0 : 100.0 * unique_delex.size() / system_turns;
  return s;
}

std::string strip_domain_prefix(const std::string& act_name) {
  auto dash = act_name.find('-');
  if (dash == std::string::npos) return lowercase(act_name);
  return lowercase(act_name.substr(dash + 1));
}

std::map<std::string, double> act_distribution(const Corpus& corpus, Agent side) {
  size_t side_turns = 0;
  std::map<std::string, size_t> counts;
  for (const auto& d : corpus.dialogues) {
    for (const auto& t : d.turns) {
      if (t.agent != side) continue;
      ++side_turns;
      std::set<std::string> names;
      for (const auto& a : t.acts)
        names.insert(a.ns == ActNamespace::multiwoz ? strip_domain_prefix(a.name)
                                                    : a.name);
      for (const auto& n : names) ++counts[n];
    }
  }
  if (side_turns == 0)
    throw DataError("act_distribution: no turns on side " + to_string(side));
  std::map<std::string, double> out;
  for (const auto& [name, c] : counts)
    out[name] = static_cast<double>(c) / static_cast<double>(side_turns);
  return out;
}

}  // namespace udat
