#include <string>

#include "tweetlab/text_pipeline.hpp"

namespace tweetlab {

namespace {

// Working buffer b[0..k]; j marks the end of the stem while a suffix is
// being tested.
class PorterStemmer {
public:
  explicit PorterStemmer(std::string_view word) : b_(word), k_(static_cast<int>(word.size()) - 1) {}

  std::string run() {
    if (k_ <= 1) return b_;
    step1ab();
    if (k_ > 0) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    return b_.substr(0, static_cast<std::size_t>(k_ + 1));
  }

private:
  bool cons(int i) const {
    switch (b_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    for (;;) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    for (;;) {
      for (;;) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      for (;;) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_consonant(int j) const { return j >= 1 && b_[j] == b_[j - 1] && cons(j); }

  // consonant-vowel-consonant ending at i, final consonant not w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b_[i];
    return !(ch == 'w' || ch == 'x' || ch == 'y');
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<std::size_t>(k_ - len + 1), s.size(), s) != 0) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(static_cast<std::size_t>(j_ + 1), static_cast<std::size_t>(k_ - j_), s);
    k_ = j_ + static_cast<int>(s.size());
    b_.resize(static_cast<std::size_t>(k_ + 1));
  }

  void replace_if_measured(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void step1ab() {
    if (b_[k_] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (b_[k_ - 1] != 's') {
        --k_;
      }
      b_.resize(static_cast<std::size_t>(k_ + 1));
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      b_.resize(static_cast<std::size_t>(k_ + 1));
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_consonant(k_)) {
        --k_;
        const char ch = b_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (j_ = k_, m() == 1 && cvc(k_)) {
        j_ = k_;
        set_to("e");
      }
    }
    b_.resize(static_cast<std::size_t>(k_ + 1));
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
  }

  // Each branch stops at the first suffix that matches, whether or not the
  // measure condition lets it fire.
  bool try_rules(std::initializer_list<std::pair<std::string_view, std::string_view>> rules) {
    for (const auto& [suffix, replacement] : rules) {
      if (ends(suffix)) {
        replace_if_measured(replacement);
        return true;
      }
    }
    return false;
  }

  void step2() {
    if (k_ < 1) return;
    switch (b_[k_ - 1]) {
      case 'a': try_rules({{"ational", "ate"}, {"tional", "tion"}}); break;
      case 'c': try_rules({{"enci", "ence"}, {"anci", "ance"}}); break;
      case 'e': try_rules({{"izer", "ize"}}); break;
      case 'l': try_rules({{"bli", "ble"}, {"alli", "al"}, {"entli", "ent"}, {"eli", "e"}, {"ousli", "ous"}}); break;
      case 'o': try_rules({{"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}}); break;
      case 's': try_rules({{"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"}, {"ousness", "ous"}}); break;
      case 't': try_rules({{"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}}); break;
      case 'g': try_rules({{"logi", "log"}}); break;
      default: break;
    }
  }

  void step3() {
    switch (b_[k_]) {
      case 'e': try_rules({{"icate", "ic"}, {"ative", ""}, {"alize", "al"}}); break;
      case 'i': try_rules({{"iciti", "ic"}}); break;
      case 'l': try_rules({{"ical", "ic"}, {"ful", ""}}); break;
      case 's': try_rules({{"ness", ""}}); break;
      default: break;
    }
  }

  bool ends_any(std::initializer_list<std::string_view> suffixes) {
    for (auto s : suffixes) {
      if (ends(s)) return true;
    }
    return false;
  }

  void step4() {
    if (k_ < 1) return;
    bool found = false;
    switch (b_[k_ - 1]) {
      case 'a': found = ends_any({"al"}); break;
      case 'c': found = ends_any({"ance", "ence"}); break;
      case 'e': found = ends_any({"er"}); break;
      case 'i': found = ends_any({"ic"}); break;
      case 'l': found = ends_any({"able", "ible"}); break;
      case 'n': found = ends_any({"ant", "ement", "ment", "ent"}); break;
      case 'o':
        if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) {
          found = true;
        } else {
          found = ends_any({"ou"});
        }
        break;
      case 's': found = ends_any({"ism"}); break;
      case 't': found = ends_any({"ate", "iti"}); break;
      case 'u': found = ends_any({"ous"}); break;
      case 'v': found = ends_any({"ive"}); break;
      case 'z': found = ends_any({"ize"}); break;
      default: break;
    }
    if (found && m() > 1) {
      k_ = j_;
      b_.resize(static_cast<std::size_t>(k_ + 1));
    }
  }

  void step5() {
    j_ = k_;
    if (b_[k_] == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (b_[k_] == 'l' && double_consonant(k_) && m() > 1) --k_;
    b_.resize(static_cast<std::size_t>(k_ + 1));
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

}  // namespace

std::string stem(std::string_view token) { return PorterStemmer(token).run(); }

std::vector<std::string> stem_all(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(stem(t));
  return out;
}

}  // namespace tweetlab
