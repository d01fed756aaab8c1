#include "udat/types.hpp"

namespace udat {

std::string to_string(Agent a) { return a == Agent::user ? "user" : "system"; }

std::string to_string(ActNamespace ns) {
  switch (ns) {
    case ActNamespace::gsim_r: return "gsim_r";
    case ActNamespace::gsim_m: return "gsim_m";
    case ActNamespace::dstc2: return "dstc2";
    case ActNamespace::multiwoz: return "multiwoz";
    case ActNamespace::universal: return "universal";
  }
  return "universal";
}

std::string to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::dev: return "dev";
    case Split::test: return "test";
  }
  return "train";
}

Agent agent_from_string(const std::string& s) {
  if (s == "user") return Agent::user;
  if (s == "system") return Agent::system;
  throw ParseError("unknown agent '" + s + "'");
}

ActNamespace namespace_from_string(const std::string& s) {
  if (s == "gsim_r") return ActNamespace::gsim_r;
  if (s == "gsim_m") return ActNamespace::gsim_m;
  if (s == "dstc2") return ActNamespace::dstc2;
  if (s == "multiwoz") return ActNamespace::multiwoz;
  if (s == "universal") return ActNamespace::universal;
  throw ParseError("unknown dataset/namespace '" + s + "'");
}

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "dev") return Split::dev;
  if (s == "test") return Split::test;
  throw ParseError("unknown split '" + s + "'");
}

}  // namespace udat
