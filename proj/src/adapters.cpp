#include "udat/adapters.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "udat/text.hpp"

namespace udat {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void add_arg(DialogueAct& act, const std::string& slot, const std::string& value) {
  SlotValue sv{slot, value};
  if (std::find(act.args.begin(), act.args.end(), sv) == act.args.end())
    act.args.push_back(sv);
}

// Group flat (name, slot, value) annotations into acts, one per name,
// preserving first-appearance order.
struct ActCollector {
  std::vector<DialogueAct> acts;
  ActNamespace ns;
  explicit ActCollector(ActNamespace ns) : ns(ns) {}
  void add(const std::string& name, const std::string& slot, const std::string& value) {
    for (auto& a : acts) {
      if (a.name == name) {
        if (!slot.empty()) add_arg(a, slot, value);
        return;
      }
    }
    DialogueAct a;
    a.name = name;
    a.ns = ns;
    if (!slot.empty()) add_arg(a, slot, value);
    acts.push_back(std::move(a));
  }
};

std::string json_to_value_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return std::to_string(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

Turn make_turn(Agent agent, const std::string& text, std::vector<DialogueAct> acts) {
  Turn t;
  t.agent = agent;
  t.utterance = text;
  t.tokens = tokenize(text);
  t.acts = std::move(acts);
  return t;
}

// ---------------------------------------------------------------- GSim ---

std::vector<DialogueAct> gsim_acts(const json& arr, ActNamespace ns,
                                   const std::string& where) {
  ActCollector c(ns);
  for (const auto& e : arr) {
    if (!e.contains("type"))
      throw ParseError(where + ": act entry without 'type'");
    std::string name = lowercase(e.at("type").get<std::string>());
    std::string slot = e.contains("slot") ? e.at("slot").get<std::string>() : "";
    std::string value = e.contains("value") ? json_to_value_string(e.at("value")) : "";
    c.add(name, slot, value);
  }
  return std::move(c.acts);
}

Corpus load_gsim(ActNamespace ns, const std::string& path, Split split) {
  json root = parse_file(path);
  if (!root.is_array()) throw ParseError(path + ": expected a top-level array");
  Corpus corpus;
  corpus.source = ns;
  corpus.split = split;
  size_t di = 0;
  for (const auto& jd : root) {
    std::string id = jd.contains("dialogue_id")
                         ? jd.at("dialogue_id").get<std::string>()
                         : "dialogue-" + std::to_string(di);
    std::string where = path + " $[" + std::to_string(di) + "] id=" + id;
    Dialogue d;
    d.id = id;
    if (!jd.contains("turns")) throw ParseError(where + ": missing 'turns'");
    for (const auto& jt : jd.at("turns")) {
      if (jt.contains("system_utterance")) {
        d.turns.push_back(make_turn(
            Agent::system, jt.at("system_utterance").at("text").get<std::string>(),
            gsim_acts(jt.value("system_acts", json::array()), ns, where)));
      }
      if (jt.contains("user_utterance")) {
        d.turns.push_back(make_turn(
            Agent::user, jt.at("user_utterance").at("text").get<std::string>(),
            gsim_acts(jt.value("user_acts", json::array()), ns, where)));
      }
    }
    if (!d.turns.empty()) corpus.dialogues.push_back(std::move(d));
    ++di;
  }
  return corpus;
}

// --------------------------------------------------------------- DSTC2 ---

std::vector<DialogueAct> dstc2_acts(const json& arr, const std::string& where) {
  ActCollector c(ActNamespace::dstc2);
  for (const auto& e : arr) {
    if (!e.contains("act")) throw ParseError(where + ": dialog-act without 'act'");
    std::string name = e.at("act").get<std::string>();
    if (!e.contains("slots") || e.at("slots").empty()) {
      c.add(name, "", "");
      continue;
    }
    for (const auto& sv : e.at("slots")) {
      if (!sv.is_array() || sv.size() != 2)
        throw ParseError(where + ": slots entries must be [slot, value] pairs");
      std::string slot = json_to_value_string(sv[0]);
      std::string value = json_to_value_string(sv[1]);
      // DSTC2 writes request(food) as slots [["slot","food"]]
      if (slot == "slot") {
        slot = value;
        value = "";
      }
      c.add(name, slot, value);
    }
  }
  return std::move(c.acts);
}

Dialogue load_dstc2_call(const fs::path& dir) {
  json log = parse_file((dir / "log.json").string());
  json label = parse_file((dir / "label.json").string());
  Dialogue d;
  d.id = log.value("session-id", dir.filename().string());
  const auto& log_turns = log.at("turns");
  const auto& label_turns = label.at("turns");
  if (log_turns.size() != label_turns.size())
    throw ParseError(dir.string() + ": log/label turn counts differ (" +
                     std::to_string(log_turns.size()) + " vs " +
                     std::to_string(label_turns.size()) + ")");
  for (size_t i = 0; i < log_turns.size(); ++i) {
    std::string where = dir.string() + " turn " + std::to_string(i);
    const auto& out = log_turns[i].at("output");
    d.turns.push_back(make_turn(Agent::system,
                                out.at("transcript").get<std::string>(),
                                dstc2_acts(out.value("dialog-acts", json::array()), where)));
    const auto& lab = label_turns[i];
    json sem = json::array();
    if (lab.contains("semantics") && lab.at("semantics").contains("json"))
      sem = lab.at("semantics").at("json");
    d.turns.push_back(make_turn(Agent::user,
                                lab.at("transcription").get<std::string>(),
                                dstc2_acts(sem, where)));
  }
  return d;
}

Corpus load_dstc2(const std::string& path, Split split) {
  Corpus corpus;
  corpus.source = ActNamespace::dstc2;
  corpus.split = split;
  std::vector<fs::path> call_dirs;
  fs::path p(path);
  if (fs::is_regular_file(p) && p.extension() == ".flist") {
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) call_dirs.push_back(p.parent_path() / line);
    }
  } else if (fs::is_directory(p)) {
    if (fs::exists(p / "log.json")) {
      call_dirs.push_back(p);
    } else {
      for (const auto& e : fs::recursive_directory_iterator(p)) {
        if (e.is_regular_file() && e.path().filename() == "log.json")
          call_dirs.push_back(e.path().parent_path());
      }
      std::sort(call_dirs.begin(), call_dirs.end());
    }
  } else {
    throw DataError("dstc2 path must be a directory or .flist file: " + path);
  }
  std::set<std::string> seen;
  for (const auto& dir : call_dirs) {
    Dialogue d = load_dstc2_call(dir);
    if (!seen.insert(d.id).second) d.id = d.id + ":" + dir.filename().string();
    corpus.dialogues.push_back(std::move(d));
  }
  return corpus;
}

// ------------------------------------------------------------- MultiWOZ ---

std::set<std::string> multiwoz_goal_domains(const json& goal) {
  static const char* kDomains[] = {"taxi",  "police",     "hospital", "hotel",
                                   "attraction", "train", "restaurant", "bus"};
  std::set<std::string> out;
  for (const char* dom : kDomains) {
    if (goal.contains(dom) && goal.at(dom).is_object() && !goal.at(dom).empty())
      out.insert(dom);
  }
  return out;
}

std::set<std::string> read_list_file(const fs::path& p) {
  std::set<std::string> out;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() > 5 && line.substr(line.size() - 5) == ".json")
      line = line.substr(0, line.size() - 5);
    out.insert(line);
  }
  return out;
}

Corpus load_multiwoz(const std::string& path, Split split) {
  fs::path data_path(path), dir;
  if (fs::is_directory(data_path)) {
    dir = data_path;
    data_path = dir / "data.json";
  } else {
    dir = data_path.parent_path();
  }
  json data = parse_file(data_path.string());
  json acts = parse_file((dir / "dialogue_acts.json").string());

  std::set<std::string> val_ids, test_ids;
  bool have_lists = fs::exists(dir / "valListFile.txt") && fs::exists(dir / "testListFile.txt");
  if (have_lists) {
    val_ids = read_list_file(dir / "valListFile.txt");
    test_ids = read_list_file(dir / "testListFile.txt");
  }

  Corpus corpus;
  corpus.source = ActNamespace::multiwoz;
  corpus.split = split;
  corpus.labeled_user = false;  // MultiWOZ-2.0 only annotates system turns

  std::vector<std::string> keys;
  for (auto it = data.begin(); it != data.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());

  for (const auto& key : keys) {
    std::string id = key;
    if (id.size() > 5 && id.substr(id.size() - 5) == ".json") id = id.substr(0, id.size() - 5);
    if (have_lists) {
      Split s = test_ids.count(id) ? Split::test
                : val_ids.count(id) ? Split::dev
                                    : Split::train;
      if (s != split) continue;
    }
    const auto& jd = data.at(key);
    std::string where = data_path.string() + " $['" + key + "']";
    Dialogue d;
    d.id = id;
    d.domains = multiwoz_goal_domains(jd.value("goal", json::object()));
    const auto& log = jd.at("log");
    const json* acts_for_dialogue = acts.contains(id) ? &acts.at(id) : nullptr;
    for (size_t i = 0; i < log.size(); ++i) {
      const auto& jt = log[i];
      bool is_system = (i % 2) == 1;  // user opens every MultiWOZ dialogue
      std::vector<DialogueAct> turn_acts;
      if (is_system && acts_for_dialogue) {
        std::string turn_key = std::to_string((i + 1) / 2);
        if (acts_for_dialogue->contains(turn_key)) {
          const auto& ja = acts_for_dialogue->at(turn_key);
          if (ja.is_object()) {  // else "No Annotation"
            ActCollector c(ActNamespace::multiwoz);
            for (auto it = ja.begin(); it != ja.end(); ++it) {
              for (const auto& sv : it.value()) {
                if (!sv.is_array() || sv.size() != 2)
                  throw ParseError(where + " turn " + turn_key +
                                   ": act args must be [slot, value] pairs");
                c.add(it.key(), lowercase(json_to_value_string(sv[0])),
                      json_to_value_string(sv[1]));
              }
            }
            turn_acts = std::move(c.acts);
          }
        }
      }
      d.turns.push_back(make_turn(is_system ? Agent::system : Agent::user,
                                  jt.at("text").get<std::string>(),
                                  std::move(turn_acts)));
    }
    if (!d.turns.empty()) corpus.dialogues.push_back(std::move(d));
  }
  return corpus;
}

}  // namespace

Corpus load_native(ActNamespace dataset, const std::string& path, Split split) {
  switch (dataset) {
    case ActNamespace::gsim_r:
    case ActNamespace::gsim_m:
      return load_gsim(dataset, path, split);
    case ActNamespace::dstc2:
      return load_dstc2(path, split);
    case ActNamespace::multiwoz:
      return load_multiwoz(path, split);
    case ActNamespace::universal:
      break;
  }
  throw DataError("load_native: unknown dataset id");
}

}  // namespace udat
