#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tweetlab::text {

std::string to_lower_ascii(std::string_view s);

/// Word bytes are ASCII letters, digits, '_' and every byte of a multi-byte
/// UTF-8 sequence, so non-ASCII letters never act as boundaries.
inline bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c >= 0x80;
}

/// ASCII-only [A-Za-z0-9_], the alphabet of hashtags and mentions.
inline bool is_handle_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

/// Byte offsets of case-insensitive whole-word occurrences of `needle`.
/// Matches do not overlap.
std::vector<std::size_t> find_whole_words(std::string_view haystack, std::string_view needle);

/// Length of the URL starting at `pos` ("http://", "https://" or "t.co/"
/// prefix, running to the next whitespace), or 0 when none starts there.
std::size_t url_length_at(std::string_view text, std::size_t pos);

/// Number of code points; invalid lead bytes count as one character each.
std::size_t utf8_length(std::string_view s);

std::string_view trim(std::string_view s);

/// Reads a one-word-per-line list; blank lines and '#' comments skipped.
std::vector<std::string> read_word_list(std::string_view content);
std::vector<std::string> read_word_list_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace tweetlab::text
