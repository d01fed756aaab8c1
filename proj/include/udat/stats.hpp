#ifndef UDAT_STATS_HPP
#define UDAT_STATS_HPP

#include <map>
#include <string>
#include <vector>

#include "udat/types.hpp"

namespace udat {

// Replaces every maximal token subsequence that exactly matches one of the
// turn's act-argument values (case-insensitive) with the placeholder token
// "<slot_name>". Matching is leftmost-longest; turns without argument
// values come back unchanged.
std::vector<std::string> delexicalize(const Turn& turn);

CorpusStats compute_stats(const Corpus& corpus);

// Fraction of `side` turns that carry each act. MultiWOZ act names are
// stripped of their domain prefix first ("Restaurant-Inform" -> "inform").
std::map<std::string, double> act_distribution(const Corpus& corpus, Agent side);

std::string strip_domain_prefix(const std::string& act_name);

}  // namespace udat

#endif
