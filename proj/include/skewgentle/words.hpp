#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewgentle/presentation.hpp"

namespace sg {

struct Letter {
  enum class Kind { direct, inverse, special };
  Kind kind;
  int arrow;  // position in Presentation::arrows
};

// The alphabet Gamma(A) with precomputed sources, targets, inverses and the
// pairwise composability table. Letter order: per ordinary arrow in
// declaration order its direct letter then its inverse, special letters last.
class LetterTable {
 public:
  static LetterTable build(const Presentation& p);

  const Presentation& presentation() const { return *p_; }
  const Index& index() const { return ix_; }

  int size() const { return (int)letters_.size(); }
  const Letter& letter(int i) const { return letters_[i]; }
  int source(int i) const { return src_[i]; }
  int target(int i) const { return tgt_[i]; }
  int inverse(int i) const { return inv_[i]; }
  bool special(int i) const { return letters_[i].kind == Letter::Kind::special; }
  bool valid_pair(int a, int b) const { return pair_ok_[a * size() + b]; }
  // which word condition (2, 3 or 4) a composable pair violates; 0 if fine
  int pair_violation(int a, int b) const;

  const std::string& token(int i) const { return tokens_[i]; }
  int letter_from_token(const std::string& tok) const;  // Errc::foreign_letter
  int special_letter_at_vertex(int v) const { return special_letter_at_[v]; }

 private:
  const Presentation* p_ = nullptr;
  Index ix_;
  std::vector<Letter> letters_;
  std::vector<int> src_, tgt_, inv_;
  std::vector<char> pair_ok_;
  std::vector<std::string> tokens_;
  std::vector<int> special_letter_at_;
};

// A word: a composable letter sequence, or the trivial word at a vertex.
struct Word {
  std::vector<int> letters;
  int base_vertex = -1;  // used only when letters is empty

  bool trivial() const { return letters.empty(); }
};

struct WordCheck {
  bool ok = true;
  int position = -1;   // index of the offending letter
  int condition = 0;   // 1..4 per the word conditions
};

WordCheck check_word(const LetterTable& t, const std::vector<int>& seq);
Word make_word(const LetterTable& t, const std::vector<std::string>& tokens,
               const std::string& trivial_at = "");
std::vector<std::string> word_tokens(const LetterTable& t, const Word& w);
Word inverse_word(const LetterTable& t, const Word& w);
int word_source(const LetterTable& t, const Word& w);
int word_target(const LetterTable& t, const Word& w);

enum class StringKind { asymmetric_string, symmetric_string, not_coadmissible, not_string };

struct StringClass {
  StringKind kind;
  std::string witness;
};

StringClass classify_string(const LetterTable& t, const Word& w);

// A band: canonicalized periodic part of a periodic Z-word.
struct Band {
  std::vector<int> periodic;  // letters of one period
  int period = 0;
  bool symmetric = false;
  std::vector<int> canonical_key;
};

// Validates a cyclic letter sequence as a band (all pairs including the
// wrap-around, primitivity) and computes the classification data.
std::optional<Band> make_band(const LetterTable& t, const std::vector<int>& cyc);

// Letter-transition graph cycle test; returns a shortest witness cycle.
std::optional<Band> band_exists(const LetterTable& t);

struct ClassifiedWord {
  Word word;
  StringClass cls;
};

std::vector<ClassifiedWord> enumerate_strings(const LetterTable& t, int max_len,
                                              size_t cap = 1000000);
std::vector<Band> enumerate_bands(const LetterTable& t, int max_period, size_t cap = 1000000);

// True when the symmetric band's periodic part matches eps* u eta* u^{-1} up
// to rotation for some nonempty u; used as a property check.
bool symmetric_band_normal_form(const LetterTable& t, const Band& b);

}  // namespace sg
