#include <string>

#include "tweetlab/text_pipeline.hpp"
#include "tweetlab/text_util.hpp"

namespace tweetlab {

namespace {

bool is_token_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\''; }

// Drops URLs and sigil-prefixed handles, replacing each with a space.
std::string strip_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (const std::size_t url = text::url_length_at(text, i); url > 0) {
      out.push_back(' ');
      i += url;
      continue;
    }
    const char c = text[i];
    if (c == '#' || c == '@') {
      std::size_t end = i + 1;
      while (end < text.size() && text::is_handle_byte(static_cast<unsigned char>(text[end]))) ++end;
      if (end > i + 1) {
        out.push_back(' ');
        i = end;
        continue;
      }
    }
    // U+2019 right single quotation mark acts as an apostrophe.
    if (text.substr(i, 3) == "\xE2\x80\x99") {
      out.push_back('\'');
      i += 3;
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  const std::string cleaned = text::to_lower_ascii(strip_entities(text));
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && !is_token_char(cleaned[i])) ++i;
    std::size_t end = i;
    while (end < cleaned.size() && is_token_char(cleaned[end])) ++end;
    std::string_view tok(cleaned.data() + i, end - i);
    while (!tok.empty() && tok.front() == '\'') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == '\'') tok.remove_suffix(1);
    if (!tok.empty()) tokens.emplace_back(tok);
    i = end;
  }
  return tokens;
}

}  // namespace tweetlab
