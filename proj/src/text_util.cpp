#include "tweetlab/text_util.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tweetlab::text {

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

namespace {

bool equals_ignore_case_at(std::string_view haystack, std::size_t pos, std::string_view needle) {
  if (pos + needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i < needle.size(); ++i) {
    char a = haystack[pos + i];
    char b = needle[i];
    if (a >= 'A' && a <= 'Z') a = static_cast<char>(a - 'A' + 'a');
    if (b >= 'A' && b <= 'Z') b = static_cast<char>(b - 'A' + 'a');
    if (a != b) return false;
  }
  return true;
}

bool starts_with_at(std::string_view text, std::size_t pos, std::string_view prefix) {
  return text.substr(pos, prefix.size()) == prefix;
}

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

std::vector<std::size_t> find_whole_words(std::string_view haystack, std::string_view needle) {
  std::vector<std::size_t> hits;
  if (needle.empty()) return hits;
  std::size_t pos = 0;
  while (pos + needle.size() <= haystack.size()) {
    const bool left_ok = pos == 0 || !is_word_byte(static_cast<unsigned char>(haystack[pos - 1]));
    if (left_ok && equals_ignore_case_at(haystack, pos, needle)) {
      const std::size_t end = pos + needle.size();
      const bool right_ok = end == haystack.size() || !is_word_byte(static_cast<unsigned char>(haystack[end]));
      if (right_ok) {
        hits.push_back(pos);
        pos = end;
        continue;
      }
    }
    ++pos;
  }
  return hits;
}

std::size_t url_length_at(std::string_view text, std::size_t pos) {
  if (!(starts_with_at(text, pos, "http://") || starts_with_at(text, pos, "https://") ||
        starts_with_at(text, pos, "t.co/"))) {
    return 0;
  }
  std::size_t end = pos;
  while (end < text.size() && !is_space(static_cast<unsigned char>(text[end]))) ++end;
  return end - pos;
}

std::size_t utf8_length(std::string_view s) {
  std::size_t count = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++count;
  }
  return count;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> read_word_list(std::string_view content) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = trim(content.substr(start, end - start));
    if (!line.empty() && line.front() != '#') words.emplace_back(line);
    start = end + 1;
  }
  return words;
}

std::vector<std::string> read_word_list_file(const std::string& path) {
  return read_word_list(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace tweetlab::text
