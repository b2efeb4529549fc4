#include "pretzel/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pretzel {

void GroupPresentation::validate() const {
  for (const Word& w : relators) {
    for (const Run& r : w.runs()) {
      if (r.gen < 0 || static_cast<std::size_t>(r.gen) >= generators.size()) {
        throw std::invalid_argument("relator uses undeclared generator index " +
                                    std::to_string(r.gen));
      }
    }
  }
}

std::string GroupPresentation::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ",";
    out += generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(relators[i], generators);
  }
  return out + ">";
}

IntegerMatrix relation_matrix(const GroupPresentation& g) {
  g.validate();
  IntegerMatrix m;
  for (const Word& w : g.relators) {
    std::vector<Integer> row(g.num_generators());
    for (const Run& r : w.runs()) row[static_cast<std::size_t>(r.gen)] += r.exp;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& g) {
  return abelian_invariants(relation_matrix(g), g.num_generators());
}

namespace {

bool odd(long long v) { return (v % 2) != 0; }

void require_knot_params(long long p, long long q, long long r) {
  if (!odd(p) || !odd(q) || p < 3 || q < 3 || odd(r) || r < 4) {
    throw std::invalid_argument("expected odd p,q >= 3 and even r >= 4, got (" +
                                std::to_string(p) + "," + std::to_string(q) + ",-" +
                                std::to_string(r) + ")");
  }
}

const Word kXW = Word::gen(kX);
const Word kYW = Word::gen(kY);
const Word kZW = Word::gen(kZ);

Word zx() { return kZW * kXW; }
Word yx() { return kYW * kXW; }
Word yzinv() { return kYW * kZW.inverse(); }

// Relator for the relation lhs = rhs.
Word relation(const Word& lhs, const Word& rhs) { return lhs * rhs.inverse(); }

}  // namespace

GroupPresentation wirtinger_presentation(long long p, long long q, long long r) {
  require_knot_params(p, q, r);
  GroupPresentation g{{"x", "y", "z"}, {}};
  g.relators.push_back(relation(zx().pow((p - 1) / 2) * kZW * zx().pow((1 - p) / 2),
                                yx().pow(-(q + 1) / 2) * kYW * yx().pow((q + 1) / 2)));
  g.relators.push_back(relation(yzinv().pow(-r / 2) * kYW * yzinv().pow(r / 2),
                                yx().pow((1 - q) / 2) * kXW * yx().pow((q - 1) / 2)));
  g.relators.push_back(relation(yzinv().pow(-r / 2) * kZW * yzinv().pow(r / 2),
                                zx().pow((p + 1) / 2) * kXW * zx().pow(-(p + 1) / 2)));
  return g;
}

Word longitude_word(long long p, long long q, long long r) {
  require_knot_params(p, q, r);
  return kXW.pow(-2 * (p + q)) * yx().pow((q - 1) / 2) * yzinv().pow(-r / 2) *
         yx().pow((q + 1) / 2) * zx().pow((p - 1) / 2) * yzinv().pow(r / 2) *
         zx().pow((p + 1) / 2);
}

GroupPresentation filled_presentation(long long p, long long q, long long r, long long s) {
  GroupPresentation g = wirtinger_presentation(p, q, r);
  g.relators.push_back(kXW.pow(s) * longitude_word(p, q, r));
  return g;
}

GroupPresentation coxeter_precursor(long long p, long long q, long long r, long long s) {
  GroupPresentation g = filled_presentation(p, q, r, s);
  g.relators.push_back(yzinv().pow(r / 2));
  g.relators.push_back(kYW * kXW.inverse());
  g.relators.push_back(zx().pow(p));
  return g;
}

CoxeterSignature CoxeterSignature::normalized(long long a, long long b, long long c) {
  if (a < 2 || b < 2 || c < 2) {
    throw std::invalid_argument("(2,a,b;c) needs a,b,c >= 2, got (2," + std::to_string(a) + "," +
                                std::to_string(b) + ";" + std::to_string(c) + ")");
  }
  return {std::min(a, b), std::max(a, b), c};
}

std::string CoxeterSignature::str() const {
  return "(2," + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + ")";
}

GroupPresentation coxeter_presentation(const CoxeterSignature& sig) {
  const Word R = Word::gen(0);
  const Word S = Word::gen(1);
  return {{"R", "S"},
          {R.pow(sig.a), S.pow(sig.b), (R * S).pow(2), (R.pow(2) * S.pow(2)).pow(sig.c)}};
}

CoxeterQuotient coxeter_quotient(long long p, long long r, long long s) {
  if (!odd(p) || p < 3 || odd(r) || r < 4 || !odd(s)) {
    throw std::invalid_argument("coxeter quotient needs odd p >= 3, even r >= 4, odd s");
  }
  if (s == 2 * p) throw std::domain_error("s = 2p gives a degenerate quotient");
  const long long e = s - 2 * p;
  CoxeterQuotient out;

  const Word y = Word::gen(0);
  const Word z = Word::gen(1);
  const Word zy = z * y;
  out.intermediate = {{"y", "z"},
                      {(y * z.inverse()).pow(r / 2), zy.pow(p),
                       z.inverse() * zy.pow((p + 1) / 2) * y * zy.pow(-(p + 1) / 2), y.pow(e)}};

  const Word w = Word::gen(0);
  const Word y2 = Word::gen(1);
  out.two_generator = {{"w", "y"},
                       {(y2.pow(2) * w.pow(2)).pow(r / 2), w.pow(p), (w * y2).pow(2), y2.pow(e)}};

  if (std::llabs(e) >= 2) out.signature = CoxeterSignature::normalized(p, std::llabs(e), r / 2);
  return out;
}

Word reduce_in_torsion_quotient(const Word& w, const std::array<long long, 3>& orders) {
  Word cur = w;
  for (;;) {
    std::vector<Run> runs;
    bool changed = false;
    for (const Run& r : cur.runs()) {
      const long long n = orders.at(static_cast<std::size_t>(r.gen));
      const long long e = n > 0 ? r.exp % n : r.exp;
      if (e != r.exp) changed = true;
      runs.push_back({r.gen, e});
    }
    Word next(runs);
    if (!changed && next == cur) return next;
    cur = std::move(next);
  }
}

Word triangle_longitude(long long p, long long q, long long r) {
  const long long k = (std::llabs(p) - 1) / 2;
  const long long l = (std::llabs(q) - 1) / 2;
  const long long m = std::llabs(r) / 2;
  return Word({{kG, k}, {kF, m}, {kG, k + 1}, {kH, l}, {kF, m}, {kH, l + 1}});
}

bool longitude_triviality_check(long long p, long long q, long long r) {
  const std::array<long long, 3> orders{std::llabs(r) / 2, std::llabs(p), std::llabs(q)};
  return reduce_in_torsion_quotient(triangle_longitude(p, q, r), orders).empty();
}

}  // namespace pretzel
