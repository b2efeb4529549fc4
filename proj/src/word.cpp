#include "pretzel/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pretzel {

Word::Word(std::initializer_list<Run> runs) {
  for (const Run& r : runs) push(r);
}

Word::Word(const std::vector<Run>& runs) {
  for (const Run& r : runs) push(r);
}

void Word::push(Run r) {
  if (r.exp == 0) return;
  if (!runs_.empty() && runs_.back().gen == r.gen) {
    runs_.back().exp += r.exp;
    if (runs_.back().exp == 0) runs_.pop_back();
    return;
  }
  runs_.push_back(r);
}

long long Word::length() const {
  long long n = 0;
  for (const Run& r : runs_) n += std::llabs(r.exp);
  return n;
}

long long Word::exponent_sum(int g) const {
  long long s = 0;
  for (const Run& r : runs_) {
    if (r.gen == g) s += r.exp;
  }
  return s;
}

Word Word::inverse() const {
  Word out;
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) out.push({it->gen, -it->exp});
  return out;
}

Word Word::pow(long long n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (long long i = 0; i < std::llabs(n); ++i) out *= base;
  return out;
}

Word Word::conjugate_by(const Word& u) const { return u.inverse() * *this * u; }

Word& Word::operator*=(const Word& rhs) {
  for (const Run& r : rhs.runs_) push(r);
  return *this;
}

Word reduce(const std::vector<Run>& runs) { return Word(runs); }

namespace {

std::string run_str(const Run& r, const std::vector<std::string>& names) {
  const std::string& n = names.at(static_cast<std::size_t>(r.gen));
  return r.exp == 1 ? n : n + "^" + std::to_string(r.exp);
}

}  // namespace

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  const auto& runs = w.runs();
  if (runs.empty()) return "1";
  std::vector<std::string> factors;
  std::size_t i = 0;
  while (i < runs.size()) {
    // Greedy fold: the block length covering the most runs, shortest on ties.
    std::size_t best_len = 0;
    std::size_t best_reps = 1;
    for (std::size_t len = 2; i + 2 * len <= runs.size(); ++len) {
      std::size_t reps = 1;
      while (i + (reps + 1) * len <= runs.size() &&
             std::equal(runs.begin() + i, runs.begin() + i + len,
                        runs.begin() + i + reps * len)) {
        ++reps;
      }
      if (reps >= 2 && reps * len > best_reps * best_len) {
        best_len = len;
        best_reps = reps;
      }
    }
    if (best_len == 0) {
      factors.push_back(run_str(runs[i], names));
      ++i;
      continue;
    }
    std::string block = "(";
    for (std::size_t k = 0; k < best_len; ++k) {
      if (k) block += ".";
      block += run_str(runs[i + k], names);
    }
    block += ")^" + std::to_string(best_reps);
    factors.push_back(block);
    i += best_len * best_reps;
  }
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += ".";
    out += factors[k];
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Word parse() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '1' && text_.find_first_not_of(" \t", pos_ + 1) ==
                                                          std::string::npos) {
      return Word{};
    }
    Word w = product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  Word product() {
    Word w = factor();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      w *= factor();
      skip_space();
    }
    return w;
  }

  Word factor() {
    skip_space();
    Word base;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      base = product();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      base = Word::gen(generator());
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      base = base.pow(exponent());
    }
    return base;
  }

  int generator() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = text_.substr(start, pos_ - start);
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) fail("unknown generator '" + name + "'");
    return static_cast<int>(it - names_.begin());
  }

  long long exponent() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits = text_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-" || digits == "+") fail("missing exponent");
    return std::stoll(digits);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse word '" + text_ + "' at offset " +
                                std::to_string(pos_) + ": " + why);
  }

  const std::string& text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse();
}

}  // namespace pretzel
