#ifndef UDAT_TEXT_HPP
#define UDAT_TEXT_HPP

#include <string>
#include <vector>

namespace udat {

// Canonical tokenization: lowercase, separate trailing punctuation
// (. , ? !) into their own tokens, split on whitespace. Recorded in the
// canonical corpus files so every module agrees on token boundaries.
std::vector<std::string> tokenize(const std::string& utterance);

std::string lowercase(const std::string& s);

// Case-insensitive substring test; pattern asterisks are wildcards and are
// ignored ("*bye" means contains "bye").
bool contains_pattern(const std::string& text, const std::string& pattern);

std::string join(const std::vector<std::string>& tokens, const std::string& sep);

}  // namespace udat

#endif
