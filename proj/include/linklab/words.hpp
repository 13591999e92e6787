#pragma once

// Free-group words over meridian generators x1, x2, ... and truncated Magnus
// expansions in non-commuting variables X1, X2, ....  This is the
// computational kernel behind the mu-bar invariants: a word is expanded by
// xi -> 1 + Xi, xi^-1 -> 1 - Xi + Xi^2 - ... and multiplied out, truncating
// every monomial above max_degree.  In "reduced" mode monomials with a
// repeated variable are deleted after every elementary product, which keeps
// term counts bounded by sum_k n!/(n-k)!.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace linklab {

// ---------------------------------------------------------------------------
// Words

struct Letter {
  int gen;  // generator index, >= 1
  int exp;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Canonical form: adjacent letters have distinct generators, exponents are
// nonzero, an empty sequence is the identity.  All constructors reduce.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw) { assign(std::move(raw)); }

  static Word generator(int gen, int exp = 1) {
    return Word(std::vector<Letter>{{gen, exp}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  int max_generator() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.gen);
    return m;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void assign(std::vector<Letter> raw) {
    for (const auto& l : raw) {
      if (l.gen < 1) throw std::invalid_argument("word: generator index must be positive");
      if (l.exp == 0) continue;
      push(l);
    }
  }
  void push(Letter l) {
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  friend Word concat(const Word&, const Word&);
  std::vector<Letter> letters_;
};

// Canonical reduced form of an arbitrary letter sequence.
inline Word free_reduce(const std::vector<Letter>& raw) { return Word(raw); }

inline Word concat(const Word& u, const Word& v) {
  Word r = u;
  for (const auto& l : v.letters_) r.push(l);
  return r;
}

inline Word inverse(const Word& w) {
  std::vector<Letter> rev;
  rev.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    rev.push_back({it->gen, -it->exp});
  return Word(std::move(rev));
}

inline Word power(const Word& w, int e) {
  Word base = e >= 0 ? w : inverse(w);
  Word r;
  for (int i = 0; i < std::abs(e); ++i) r = concat(r, base);
  return r;
}

// u v u^-1 v^-1, reduced.
inline Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

// "x1^2 x3^-1"; the identity prints as "1".
inline std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << l.gen;
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

inline Word parse_word(const std::string& text) {
  std::vector<Letter> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x')
      throw std::invalid_argument("word parse: bad token '" + tok + "'");
    auto caret = tok.find('^');
    int gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int exp = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    letters.push_back({gen, exp});
  }
  return Word(std::move(letters));
}

// ---------------------------------------------------------------------------
// Magnus series

// A monomial is a sequence of variable indices packed into a uint64:
// bits 63..60 hold the length, then one nibble per index from the high end.
// Numeric order on keys is exactly length-then-lexicographic order, which is
// the serialization order.  This caps num_vars at 15 and max_degree at 15 --
// ample for the desk-scale computations here (the homotopy-triviality cap is
// 10 components).
using MonomialKey = std::uint64_t;

inline constexpr int kMaxMagnusVars = 15;
inline constexpr int kMaxMagnusDegree = 15;

inline MonomialKey monomial_key(const std::vector<int>& idx) {
  if (idx.size() > static_cast<size_t>(kMaxMagnusDegree))
    throw std::invalid_argument("monomial too long");
  MonomialKey k = static_cast<MonomialKey>(idx.size()) << 60;
  int shift = 56;
  for (int i : idx) {
    if (i < 1 || i > kMaxMagnusVars) throw std::invalid_argument("monomial index out of range");
    k |= static_cast<MonomialKey>(i) << shift;
    shift -= 4;
  }
  return k;
}

inline int monomial_length(MonomialKey k) { return static_cast<int>(k >> 60); }

inline std::vector<int> monomial_indices(MonomialKey k) {
  int len = monomial_length(k);
  std::vector<int> idx(len);
  int shift = 56;
  for (int i = 0; i < len; ++i, shift -= 4) idx[i] = static_cast<int>((k >> shift) & 0xF);
  return idx;
}

// Bitmask of variables used; bit i-1 set for variable i.
inline std::uint32_t monomial_mask(MonomialKey k) {
  std::uint32_t m = 0;
  int len = monomial_length(k);
  int shift = 56;
  for (int i = 0; i < len; ++i, shift -= 4) m |= 1u << (((k >> shift) & 0xF) - 1);
  return m;
}

inline bool monomial_has_repeat(MonomialKey k) {
  std::uint32_t m = 0;
  int len = monomial_length(k);
  int shift = 56;
  for (int i = 0; i < len; ++i, shift -= 4) {
    std::uint32_t bit = 1u << (((k >> shift) & 0xF) - 1);
    if (m & bit) return true;
    m |= bit;
  }
  return false;
}

// Concatenation; assumes lengths fit.
inline MonomialKey monomial_concat(MonomialKey a, MonomialKey b) {
  int la = monomial_length(a), lb = monomial_length(b);
  MonomialKey body_a = (a & ~(0xFULL << 60));
  MonomialKey body_b = (b & ~(0xFULL << 60));
  return (static_cast<MonomialKey>(la + lb) << 60) | body_a | (body_b >> (4 * la));
}

class MagnusSeries {
 public:
  MagnusSeries(int num_vars, int max_degree, bool reduced)
      : num_vars_(num_vars), max_degree_(max_degree), reduced_(reduced) {
    if (num_vars < 1 || num_vars > kMaxMagnusVars)
      throw std::invalid_argument("MagnusSeries: num_vars out of range [1,15]");
    if (max_degree < 0 || max_degree > kMaxMagnusDegree)
      throw std::invalid_argument("MagnusSeries: max_degree out of range [0,15]");
  }

  static MagnusSeries one(int num_vars, int max_degree, bool reduced) {
    MagnusSeries s(num_vars, max_degree, reduced);
    s.terms_[0] = 1;
    return s;
  }

  int num_vars() const { return num_vars_; }
  int max_degree() const { return max_degree_; }
  bool reduced() const { return reduced_; }
  const std::map<MonomialKey, long long>& terms() const { return terms_; }

  void set(MonomialKey k, long long c) {
    if (monomial_length(k) > max_degree_) return;
    if (reduced_ && monomial_has_repeat(k)) return;
    if (c == 0)
      terms_.erase(k);
    else
      terms_[k] = c;
  }

  void add(MonomialKey k, long long c) {
    if (c == 0 || monomial_length(k) > max_degree_) return;
    if (reduced_ && monomial_has_repeat(k)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  long long at(MonomialKey k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  bool same_shape(const MagnusSeries& o) const {
    return num_vars_ == o.num_vars_ && max_degree_ == o.max_degree_ && reduced_ == o.reduced_;
  }

  friend bool operator==(const MagnusSeries& a, const MagnusSeries& b) {
    return a.num_vars_ == b.num_vars_ && a.max_degree_ == b.max_degree_ &&
           a.reduced_ == b.reduced_ && a.terms_ == b.terms_;
  }

 private:
  int num_vars_;
  int max_degree_;
  bool reduced_;
  std::map<MonomialKey, long long> terms_;
};

inline MagnusSeries series_multiply(const MagnusSeries& s, const MagnusSeries& t) {
  if (!s.same_shape(t))
    throw std::invalid_argument("series_multiply: mismatched num_vars/max_degree/reduced");
  MagnusSeries r(s.num_vars(), s.max_degree(), s.reduced());
  for (const auto& [ka, ca] : s.terms()) {
    int la = monomial_length(ka);
    std::uint32_t mask_a = s.reduced() ? monomial_mask(ka) : 0;
    for (const auto& [kb, cb] : t.terms()) {
      if (la + monomial_length(kb) > s.max_degree()) break;  // keys sorted by length first
      if (s.reduced() && (mask_a & monomial_mask(kb))) continue;
      r.add(monomial_concat(ka, kb), ca * cb);
    }
  }
  return r;
}

// Series of a single generator power: (1+X)^e, truncated; for e < 0 the
// alternating geometric series of (1+X)^-1, raised to |e|.
inline MagnusSeries letter_series(int gen, int exp, int num_vars, int max_degree, bool reduced) {
  if (gen < 1 || gen > num_vars) throw std::out_of_range("magnus: generator index out of range");
  MagnusSeries base = MagnusSeries::one(num_vars, max_degree, reduced);
  if (exp >= 0) {
    if (max_degree >= 1) base.add(monomial_key({gen}), 1);  // 1 + X
  } else {
    std::vector<int> mono;
    long long sign = 1;
    for (int d = 1; d <= max_degree; ++d) {
      mono.push_back(gen);
      sign = -sign;
      base.add(monomial_key(mono), sign);  // reduced mode drops the repeats
    }
  }
  MagnusSeries r = MagnusSeries::one(num_vars, max_degree, reduced);
  for (int i = 0; i < std::abs(exp); ++i) r = series_multiply(r, base);
  return r;
}

inline MagnusSeries magnus_expand(const Word& w, int num_vars, int max_degree, bool reduced) {
  MagnusSeries r = MagnusSeries::one(num_vars, max_degree, reduced);
  for (const auto& l : w.letters())
    r = series_multiply(r, letter_series(l.gen, l.exp, num_vars, max_degree, reduced));
  return r;
}

inline long long coefficient(const MagnusSeries& s, const std::vector<int>& monomial) {
  if (monomial.size() > static_cast<size_t>(s.max_degree())) return 0;
  for (int i : monomial)
    if (i < 1 || i > s.num_vars()) return 0;
  return s.at(monomial_key(monomial));
}

// Multiplicative inverse of a series with constant term 1:
// (1+N)^-1 = 1 - N + N^2 - ... truncated at max_degree.
inline MagnusSeries series_inverse(const MagnusSeries& s) {
  if (s.at(0) != 1) throw std::invalid_argument("series_inverse: constant term must be 1");
  MagnusSeries n(s.num_vars(), s.max_degree(), s.reduced());  // N = s - 1
  for (const auto& [k, c] : s.terms())
    if (k != 0) n.add(k, c);
  MagnusSeries r = MagnusSeries::one(s.num_vars(), s.max_degree(), s.reduced());
  MagnusSeries pw = MagnusSeries::one(s.num_vars(), s.max_degree(), s.reduced());
  long long sign = 1;
  for (int d = 1; d <= s.max_degree(); ++d) {
    pw = series_multiply(pw, n);
    if (pw.terms().empty()) break;
    sign = -sign;
    for (const auto& [k, c] : pw.terms()) r.add(k, sign * c);
  }
  return r;
}

inline MagnusSeries series_power(const MagnusSeries& s, int e) {
  MagnusSeries base = e >= 0 ? s : series_inverse(s);
  MagnusSeries r = MagnusSeries::one(s.num_vars(), s.max_degree(), s.reduced());
  for (int i = 0; i < std::abs(e); ++i) r = series_multiply(r, base);
  return r;
}

}  // namespace linklab
