#include "udat/corpus_io.hpp"

#include <fstream>
#include <set>

namespace udat {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::set<std::string>& required, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ParseError(where + ": unknown key '" + it.key() + "'");
  }
  for (const auto& k : required) {
    if (!obj.contains(k)) throw ParseError(where + ": missing key '" + k + "'");
  }
}

json act_to_json(const DialogueAct& a) {
  json args = json::array();
  for (const auto& sv : a.args) args.push_back({{"slot", sv.slot}, {"value", sv.value}});
  return {{"args", args}, {"name", a.name}, {"namespace", to_string(a.ns)}};
}

DialogueAct act_from_json(const json& j, const std::string& where) {
  check_keys(j, {"args", "name", "namespace"}, {"args", "name", "namespace"}, where);
  DialogueAct a;
  a.name = j.at("name").get<std::string>();
  a.ns = namespace_from_string(j.at("namespace").get<std::string>());
  for (const auto& sv : j.at("args")) {
    check_keys(sv, {"slot", "value"}, {"slot", "value"}, where + ".args");
    a.args.push_back({sv.at("slot").get<std::string>(), sv.at("value").get<std::string>()});
  }
  return a;
}

json turn_to_json(const Turn& t) {
  json acts = json::array();
  for (const auto& a : t.acts) acts.push_back(act_to_json(a));
  return {{"acts", acts},
          {"agent", to_string(t.agent)},
          {"domain", t.domain},
          {"tokens", t.tokens},
          {"utterance", t.utterance}};
}

Turn turn_from_json(const json& j, const std::string& where) {
  check_keys(j, {"acts", "agent", "domain", "tokens", "utterance"},
             {"acts", "agent", "tokens", "utterance"}, where);
  Turn t;
  t.agent = agent_from_string(j.at("agent").get<std::string>());
  t.utterance = j.at("utterance").get<std::string>();
  t.tokens = j.at("tokens").get<std::vector<std::string>>();
  if (j.contains("domain")) t.domain = j.at("domain").get<std::string>();
  int k = 0;
  for (const auto& a : j.at("acts"))
    t.acts.push_back(act_from_json(a, where + ".acts[" + std::to_string(k++) + "]"));
  return t;
}

}  // namespace

json dialogue_to_json(const Dialogue& d, const Corpus& owner) {
  json turns = json::array();
  for (const auto& t : d.turns) turns.push_back(turn_to_json(t));
  return {{"domains", std::vector<std::string>(d.domains.begin(), d.domains.end())},
          {"id", d.id},
          {"labeled", {{"system", owner.labeled_system}, {"user", owner.labeled_user}}},
          {"labels", owner.labels_estimated ? "estimated" : "gold"},
          {"schema_version", kCorpusSchemaVersion},
          {"source", to_string(owner.source)},
          {"split", to_string(owner.split)},
          {"turns", turns}};
}

Dialogue dialogue_from_json(const json& j, const std::string& where) {
  check_keys(j,
             {"domains", "id", "labeled", "labels", "schema_version", "source",
              "split", "turns"},
             {"domains", "id", "schema_version", "source", "split", "turns"}, where);
  int version = j.at("schema_version").get<int>();
  if (version != kCorpusSchemaVersion)
    throw ParseError(where + ": schema_version " + std::to_string(version) +
                     " does not match expected " + std::to_string(kCorpusSchemaVersion));
  Dialogue d;
  d.id = j.at("id").get<std::string>();
  for (const auto& dom : j.at("domains")) d.domains.insert(dom.get<std::string>());
  int k = 0;
  for (const auto& t : j.at("turns"))
    d.turns.push_back(turn_from_json(t, where + ".turns[" + std::to_string(k++) + "]"));
  if (d.turns.empty()) throw ParseError(where + ": dialogue '" + d.id + "' has no turns");
  return d;
}

void save_canonical(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open for writing: " + path);
  for (const auto& d : corpus.dialogues) out << dialogue_to_json(d, corpus).dump() << "\n";
  if (!out) throw DataError("write failed: " + path);
}

Corpus load_canonical(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path);
  Corpus corpus;
  std::string line;
  size_t lineno = 0;
  bool first = true;
  std::set<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string where = path + ":" + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
    Corpus line_meta;
    line_meta.split = split_from_string(j.at("split").get<std::string>());
    line_meta.source = namespace_from_string(j.at("source").get<std::string>());
    if (j.contains("labeled")) {
      const auto& lab = j.at("labeled");
      check_keys(lab, {"system", "user"}, {"system", "user"}, where + ".labeled");
      line_meta.labeled_system = lab.at("system").get<bool>();
      line_meta.labeled_user = lab.at("user").get<bool>();
    }
    if (j.contains("labels"))
      line_meta.labels_estimated = j.at("labels").get<std::string>() == "estimated";
    Dialogue d = dialogue_from_json(j, where);
    if (first) {
      corpus.split = line_meta.split;
      corpus.source = line_meta.source;
      corpus.labeled_user = line_meta.labeled_user;
      corpus.labeled_system = line_meta.labeled_system;
      corpus.labels_estimated = line_meta.labels_estimated;
      first = false;
    } else if (line_meta.split != corpus.split || line_meta.source != corpus.source ||
               line_meta.labeled_user != corpus.labeled_user ||
               line_meta.labeled_system != corpus.labeled_system ||
               line_meta.labels_estimated != corpus.labels_estimated) {
      throw ParseError(where + ": corpus-level fields disagree with earlier lines");
    }
    if (!seen_ids.insert(d.id).second)
      throw ParseError(where + ": duplicate dialogue id '" + d.id + "'");
    corpus.dialogues.push_back(std::move(d));
  }
  return corpus;
}

std::array<Corpus, 3> split_corpus(const Corpus& corpus, double dev_frac,
                                   double test_frac, uint64_t seed) {
  std::array<Corpus, 3> out;
  for (auto& c : out) {
    c.source = corpus.source;
    c.labeled_user = corpus.labeled_user;
    c.labeled_system = corpus.labeled_system;
    c.labels_estimated = corpus.labels_estimated;
  }
  out[0].split = Split::train;
  out[1].split = Split::dev;
  out[2].split = Split::test;
  for (const auto& d : corpus.dialogues) {
    uint64_t h = fnv1a64(d.id) ^ (seed * 0x9e3779b97f4a7c15ULL);
    double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    if (u < test_frac)
      out[2].dialogues.push_back(d);
    else if (u < test_frac + dev_frac)
      out[1].dialogues.push_back(d);
    else
      out[0].dialogues.push_back(d);
  }
  return out;
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string file_hash_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path);
  uint64_t h = 0xcbf29ce484222325ULL;
  char buf[65536];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace udat
