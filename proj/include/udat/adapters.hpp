#ifndef UDAT_ADAPTERS_HPP
#define UDAT_ADAPTERS_HPP

#include <string>

#include "udat/types.hpp"

namespace udat {

// Reads one of the three native dataset formats into the canonical data
// model, keeping acts in the dataset's own namespace.
//
//   gsim_r / gsim_m: one JSON file (array of dialogues, M2M layout with
//     system_/user_ utterance+acts per exchange).
//   dstc2: a directory tree of call dirs each holding log.json (system
//     side) + label.json (user side), or a .flist file naming call dirs
//     relative to its own directory.
//   multiwoz: a directory with data.json + dialogue_acts.json (optionally
//     valListFile.txt / testListFile.txt used to select the split), or a
//     direct path to data.json.
//
// `split` tags the returned corpus; for multiwoz it also selects which
// dialogues are returned when the list files are present.
Corpus load_native(ActNamespace dataset, const std::string& path,
                   Split split = Split::train);

}  // namespace udat

#endif
