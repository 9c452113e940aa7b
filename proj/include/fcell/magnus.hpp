#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fcell/word.hpp"

namespace fcell {

using Integer = mpz_class;

/// Ordered product of variables x_{i1} x_{i2} ... ; empty is the constant 1.
using Monomial = std::vector<GeneratorIndex>;

/// Shorter monomials first, then lexicographic in alphabet order.
struct LengthLex {
  bool operator()(Monomial const& a, Monomial const& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Selects monomials that vanish in a quotient ring. The selected set must be
/// closed under inserting further variables anywhere, so that filtering
/// commutes with multiplication.
using MonomialKiller = std::function<bool(std::span<const GeneratorIndex>)>;

bool has_repeated_variable(std::span<const GeneratorIndex> m);

/// Integer noncommutative polynomial in the variables of an alphabet, with
/// all monomials of degree above the bound discarded.
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, Integer, LengthLex>;

  TruncatedSeries(AlphabetPtr alphabet, unsigned degree_bound);

  static TruncatedSeries one(AlphabetPtr alphabet, unsigned degree_bound);
  static TruncatedSeries term(AlphabetPtr alphabet, unsigned degree_bound, Monomial m,
                              Integer const& c = 1);

  AlphabetPtr const& alphabet() const { return alphabet_; }
  unsigned degree_bound() const { return degree_bound_; }
  Terms const& terms() const { return terms_; }

  Integer coefficient(Monomial const& m) const;
  /// Adds c to the coefficient of m; monomials above the degree bound are dropped.
  void add(Monomial const& m, Integer const& c);

  bool is_one() const;
  bool is_zero() const { return terms_.empty(); }
  TruncatedSeries filtered(MonomialKiller const& killer) const;

  /// `c * x1.x2` terms in length-lex order joined by ` + `; the constant
  /// term is printed as a bare integer.
  std::string to_string(std::function<std::string(GeneratorIndex)> const& namer = {}) const;

  bool operator==(TruncatedSeries const& other) const;

 private:
  AlphabetPtr alphabet_;
  unsigned degree_bound_;
  Terms terms_;
};

std::string monomial_to_string(Monomial const& m,
                               std::function<std::string(GeneratorIndex)> const& namer);
/// Variables named by the alphabet, joined by '.'.
std::string monomial_to_string(Monomial const& m, Alphabet const& alphabet);

TruncatedSeries series_add(TruncatedSeries const& a, TruncatedSeries const& b);
TruncatedSeries series_sub(TruncatedSeries const& a, TruncatedSeries const& b);
TruncatedSeries series_mul(TruncatedSeries const& a, TruncatedSeries const& b,
                           MonomialKiller const& killer = {});

inline TruncatedSeries operator+(TruncatedSeries const& a, TruncatedSeries const& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(TruncatedSeries const& a, TruncatedSeries const& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(TruncatedSeries const& a, TruncatedSeries const& b) {
  return series_mul(a, b);
}

/// Magnus expansion: g -> 1 + x_g, g^-1 -> 1 - x_g + x_g^2 - ..., truncated at
/// degree q. With a killer the result is the image in the quotient ring,
/// computed without materializing killed monomials.
TruncatedSeries magnus_expand(Word const& w, unsigned q, MonomialKiller const& killer = {});

/// Number of variables plus one.
unsigned default_degree(Alphabet const& alphabet);

}  // namespace fcell
