#include "pretzel/todd_coxeter.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace pretzel {

namespace {

constexpr std::int32_t kUndef = -1;

// Letters are 2g for generator g and 2g+1 for its inverse.
std::vector<int> letters(const Word& w) {
  std::vector<int> out;
  for (const Run& r : w.runs()) {
    const int letter = 2 * r.gen + (r.exp < 0 ? 1 : 0);
    for (long long i = 0; i < std::llabs(r.exp); ++i) out.push_back(letter);
  }
  return out;
}

struct CapReached {};

class CosetTable {
 public:
  CosetTable(std::size_t num_gens, std::size_t cap) : cols_(2 * num_gens), cap_(cap) {
    add_row();
  }

  std::size_t rows() const { return parent_.size(); }
  bool live(std::size_t a) const { return parent_[a] == static_cast<std::int32_t>(a); }

  std::int32_t get(std::size_t a, int x) const { return table_[a * cols_ + x]; }
  void set(std::size_t a, int x, std::int32_t b) { table_[a * cols_ + x] = b; }

  void define(std::size_t a, int x) {
    const auto b = static_cast<std::int32_t>(add_row());
    set(a, x, b);
    set(static_cast<std::size_t>(b), x ^ 1, static_cast<std::int32_t>(a));
  }

  void scan_and_fill(std::size_t alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    auto f = static_cast<std::int32_t>(alpha);
    auto b = f;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && get(f, w[i]) != kUndef) f = get(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && get(b, w[j - 1] ^ 1) != kUndef) b = get(b, w[--j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        set(b, w[i] ^ 1, f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t a = 0; a < rows(); ++a) n += live(a) ? 1 : 0;
    return n;
  }

  int cols() const { return static_cast<int>(cols_); }

 private:
  std::size_t add_row() {
    if (parent_.size() >= cap_) throw CapReached{};
    const std::size_t a = parent_.size();
    parent_.push_back(static_cast<std::int32_t>(a));
    table_.resize(table_.size() + cols_, kUndef);
    return a;
  }

  std::int32_t rep(std::int32_t a) {
    std::int32_t r = a;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[a] != r) {
      const std::int32_t next = parent_[a];
      parent_[a] = r;
      a = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::deque<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::deque<std::int32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::int32_t g = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols(); ++x) {
        const std::int32_t d = get(g, x);
        if (d == kUndef) continue;
        set(d, x ^ 1, kUndef);
        const std::int32_t mu = rep(g);
        const std::int32_t nu = rep(d);
        if (get(mu, x) != kUndef) {
          merge(nu, get(mu, x), queue);
        } else if (get(nu, x ^ 1) != kUndef) {
          merge(mu, get(nu, x ^ 1), queue);
        } else {
          set(mu, x, nu);
          set(nu, x ^ 1, mu);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> table_;
};

}  // namespace

EnumerationResult todd_coxeter(const GroupPresentation& g, std::size_t max_cosets) {
  if (max_cosets == 0) throw std::invalid_argument("max_cosets must be at least 1");
  g.validate();
  std::vector<std::vector<int>> relators;
  for (const Word& w : g.relators) relators.push_back(letters(w));

  CosetTable t(g.num_generators(), max_cosets);
  EnumerationResult result;
  try {
    for (std::size_t alpha = 0; alpha < t.rows(); ++alpha) {
      for (const auto& w : relators) {
        if (!t.live(alpha)) break;
        t.scan_and_fill(alpha, w);
      }
      if (!t.live(alpha)) continue;
      for (int x = 0; x < t.cols(); ++x) {
        if (t.get(alpha, x) == kUndef) t.define(alpha, x);
      }
    }
  } catch (const CapReached&) {
    result.cosets_defined = t.rows();
    return result;
  }
  result.cosets_defined = t.rows();
  result.order = t.live_count();
  return result;
}

std::size_t default_max_cosets() {
  const char* env = std::getenv("PRETZEL_MAX_COSETS");
  if (env == nullptr || *env == '\0') return kDefaultMaxCosets;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  return kDefaultMaxCosets;
}

}  // namespace pretzel
