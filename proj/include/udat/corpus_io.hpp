#ifndef UDAT_CORPUS_IO_HPP
#define UDAT_CORPUS_IO_HPP

#include <array>
#include <string>

#include <json.hpp>

#include "udat/types.hpp"

namespace udat {

inline constexpr int kCorpusSchemaVersion = 1;

// Canonical interchange format: JSON-lines, one dialogue per line, keys
// sorted, UTF-8. Corpus-level fields (split/source/labeled/labels) are
// repeated on every line and must agree across lines.
void save_canonical(const Corpus& corpus, const std::string& path);
Corpus load_canonical(const std::string& path);

nlohmann::json dialogue_to_json(const Dialogue& d, const Corpus& owner);
Dialogue dialogue_from_json(const nlohmann::json& j, const std::string& where);

// Partition by seeded hash of dialogue id into train/dev/test.
std::array<Corpus, 3> split_corpus(const Corpus& corpus, double dev_frac,
                                   double test_frac, uint64_t seed);

uint64_t fnv1a64(const std::string& s);
std::string file_hash_hex(const std::string& path);

}  // namespace udat

#endif
