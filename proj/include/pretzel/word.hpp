#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pretzel {

/// A run g^e of a single generator, e != 0.
struct Run {
  int gen = 0;
  long long exp = 1;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A freely reduced word stored as maximal runs of generator powers.
/// Adjacent runs always have different generators.
class Word {
 public:
  Word() = default;
  /// Normalizes arbitrary runs (zero exponents, adjacent equal generators).
  Word(std::initializer_list<Run> runs);
  explicit Word(const std::vector<Run>& runs);

  static Word gen(int g, long long e = 1) { return Word({Run{g, e}}); }

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  /// Number of letters, i.e. the sum of |exponent| over runs.
  long long length() const;
  long long exponent_sum(int g) const;

  Word inverse() const;
  /// w^n for any integer n; w^0 is empty.
  Word pow(long long n) const;
  /// u^-1 w u
  Word conjugate_by(const Word& u) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Run r);
  std::vector<Run> runs_;
};

/// Free reduction of a letter sequence with exponents +-1 (or any run list).
Word reduce(const std::vector<Run>& runs);

/// Serializes as dot-separated factors such as "x^-2.(y.x)^3"; the empty word
/// prints as "1". Repeated blocks of runs are folded into parenthesized powers.
std::string to_string(const Word& w, const std::vector<std::string>& names);

/// Inverse of to_string; accepts nested parenthesized powers.
/// Throws std::invalid_argument on malformed input or unknown names.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

}  // namespace pretzel
