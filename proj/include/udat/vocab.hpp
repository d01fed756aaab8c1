#ifndef UDAT_VOCAB_HPP
#define UDAT_VOCAB_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "udat/types.hpp"

namespace udat {

// Token index with reserved padding/unknown slots; rows of the embedding
// matrix are aligned to these indices.
struct Vocabulary {
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;

  std::vector<std::string> tokens;  // tokens[0]="<pad>", tokens[1]="<unk>"
  std::unordered_map<std::string, int> index;

  static Vocabulary build(const Corpus& corpus);
  static Vocabulary from_tokens(std::vector<std::string> all);  // without reserved

  int id(const std::string& token) const {
    auto it = index.find(token);
    return it == index.end() ? kUnk : it->second;
  }
  std::vector<int> ids(const std::vector<std::string>& toks) const {
    std::vector<int> out;
    out.reserve(toks.size());
    for (const auto& t : toks) out.push_back(id(t));
    return out;
  }
  size_t size() const { return tokens.size(); }
};

// Plain-text word vector file: header "count dim", then one token plus
// `dim` floats per line. Tokens missing from the file keep their random
// initialization; everything is fine-tuned during training.
struct PretrainedVectors {
  int dim = 0;
  std::unordered_map<std::string, std::vector<float>> table;
  static PretrainedVectors load(const std::string& path);
};

}  // namespace udat

#endif
