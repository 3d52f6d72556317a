#include "cbir/corpus/porter.hpp"

#include <array>
#include <utility>

namespace cbir::corpus {
namespace {

// Working state for one word. `stem_end` is the length of the candidate stem
// when testing a suffix rule.
class PorterWord {
 public:
  explicit PorterWord(std::string_view word) : w_(word) {}

  std::string take() && { return std::move(w_); }

  bool ends_with(std::string_view suffix) const {
    return w_.size() >= suffix.size() &&
           std::string_view(w_).substr(w_.size() - suffix.size()) == suffix;
  }

  bool consonant(std::size_t i) const {
    switch (w_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 || !consonant(i - 1);
      default:
        return true;
    }
  }

  // m in [C](VC)^m[V] over the first `len` letters.
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && consonant(i)) ++i;
    while (i < len) {
      while (i < len && !consonant(i)) ++i;
      if (i >= len) break;
      while (i < len && consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i)
      if (!consonant(i)) return true;
    return false;
  }

  bool double_consonant(std::size_t len) const {
    return len >= 2 && w_[len - 1] == w_[len - 2] && consonant(len - 1);
  }

  // *o: stem ends consonant-vowel-consonant, last consonant not w, x or y.
  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) return false;
    const char c = w_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  std::size_t size() const { return w_.size(); }
  char back() const { return w_.back(); }

  void replace_suffix(std::size_t suffix_len, std::string_view with) {
    w_.resize(w_.size() - suffix_len);
    w_.append(with);
  }

  void step1a() {
    if (ends_with("sses")) {
      replace_suffix(4, "ss");
    } else if (ends_with("ies")) {
      replace_suffix(3, "i");
    } else if (ends_with("ss")) {
      // unchanged
    } else if (ends_with("s")) {
      replace_suffix(1, "");
    }
  }

  void step1b() {
    if (ends_with("eed")) {
      if (measure(size() - 3) > 0) replace_suffix(3, "ee");
      return;
    }
    bool stripped = false;
    if (ends_with("ed") && has_vowel(size() - 2)) {
      replace_suffix(2, "");
      stripped = true;
    } else if (ends_with("ing") && has_vowel(size() - 3)) {
      replace_suffix(3, "");
      stripped = true;
    }
    if (!stripped) return;

    if (ends_with("at")) {
      replace_suffix(2, "ate");
    } else if (ends_with("bl")) {
      replace_suffix(2, "ble");
    } else if (ends_with("iz")) {
      replace_suffix(2, "ize");
    } else if (double_consonant(size())) {
      const char c = back();
      if (c != 'l' && c != 's' && c != 'z') replace_suffix(1, "");
    } else if (measure(size()) == 1 && cvc(size())) {
      replace_suffix(0, "e");
    }
  }

  void step1c() {
    if (ends_with("y") && has_vowel(size() - 1)) replace_suffix(1, "i");
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  // Applies the first rule whose suffix matches when the remaining stem has
  // measure > min_measure. Only the longest matching suffix is considered;
  // the rule tables are ordered so that it is also the first match.
  template <std::size_t N>
  void apply_first(const std::array<Rule, N>& rules, int min_measure) {
    for (const auto& rule : rules) {
      if (!ends_with(rule.suffix)) continue;
      if (measure(size() - rule.suffix.size()) > min_measure)
        replace_suffix(rule.suffix.size(), rule.replacement);
      return;
    }
  }

  void step2() {
    static constexpr std::array<Rule, 20> kRules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},  {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"},
    }};
    apply_first(kRules, 0);
  }

  void step3() {
    static constexpr std::array<Rule, 7> kRules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    apply_first(kRules, 0);
  }

  void step4() {
    static constexpr std::array<std::string_view, 19> kSuffixes{
        "al",   "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
        "ent",  "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize"};
    for (const auto suffix : kSuffixes) {
      if (!ends_with(suffix)) continue;
      const std::size_t stem = size() - suffix.size();
      if (measure(stem) <= 1) return;
      if (suffix == "ion" && !(stem > 0 && (w_[stem - 1] == 's' || w_[stem - 1] == 't'))) return;
      replace_suffix(suffix.size(), "");
      return;
    }
  }

  void step5a() {
    if (!ends_with("e")) return;
    const std::size_t stem = size() - 1;
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !cvc(stem))) replace_suffix(1, "");
  }

  void step5b() {
    if (measure(size()) > 1 && double_consonant(size()) && back() == 'l') replace_suffix(1, "");
  }

 private:
  std::string w_;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  PorterWord w(word);
  w.step1a();
  w.step1b();
  w.step1c();
  w.step2();
  w.step3();
  w.step4();
  w.step5a();
  w.step5b();
  return std::move(w).take();
}

}  // namespace cbir::corpus
