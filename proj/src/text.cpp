#include "udat/text.hpp"

#include <cctype>
#include <sstream>

namespace udat {

std::string lowercase(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

static bool is_trailing_punct(char c) {
  return c == '.' || c == ',' || c == '?' || c == '!';
}

std::vector<std::string> tokenize(const std::string& utterance) {
  std::vector<std::string> tokens;
  std::istringstream in(lowercase(utterance));
  std::string piece;
  while (in >> piece) {
    size_t end = piece.size();
    while (end > 0 && is_trailing_punct(piece[end - 1])) --end;
    if (end > 0) tokens.push_back(piece.substr(0, end));
    for (size_t i = end; i < piece.size(); ++i) tokens.push_back(std::string(1, piece[i]));
  }
  return tokens;
}

bool contains_pattern(const std::string& text, const std::string& pattern) {
  std::string needle;
  for (char c : pattern)
    if (c != '*') needle += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (needle.empty()) return true;
  return lowercase(text).find(needle) != std::string::npos;
}

std::string join(const std::vector<std::string>& tokens, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

}  // namespace udat
