#include "fcell/magnus.hpp"

#include <algorithm>

#include "fcell/error.hpp"

namespace fcell {

bool has_repeated_variable(std::span<const GeneratorIndex> m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i] == m[j]) return true;
  return false;
}

TruncatedSeries::TruncatedSeries(AlphabetPtr alphabet, unsigned degree_bound)
    : alphabet_(std::move(alphabet)), degree_bound_(degree_bound) {
  if (!alphabet_) throw InputError("series without alphabet");
  if (degree_bound_ < 1) throw InputError("degree bound must be at least 1");
}

TruncatedSeries TruncatedSeries::one(AlphabetPtr alphabet, unsigned degree_bound) {
  TruncatedSeries s(std::move(alphabet), degree_bound);
  s.terms_.emplace(Monomial{}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::term(AlphabetPtr alphabet, unsigned degree_bound, Monomial m,
                                      Integer const& c) {
  TruncatedSeries s(std::move(alphabet), degree_bound);
  s.add(m, c);
  return s;
}

Integer TruncatedSeries::coefficient(Monomial const& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::add(Monomial const& m, Integer const& c) {
  if (m.size() > degree_bound_ || c == 0) return;
  for (auto v : m)
    if (v >= alphabet_->size()) throw InputError("monomial variable outside alphabet");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool TruncatedSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

TruncatedSeries TruncatedSeries::filtered(MonomialKiller const& killer) const {
  TruncatedSeries out(alphabet_, degree_bound_);
  for (auto const& [m, c] : terms_)
    if (!killer || !killer(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

std::string monomial_to_string(Monomial const& m,
                               std::function<std::string(GeneratorIndex)> const& namer) {
  std::string out;
  for (auto v : m) {
    if (!out.empty()) out += '.';
    out += namer(v);
  }
  return out.empty() ? "1" : out;
}

std::string monomial_to_string(Monomial const& m, Alphabet const& alphabet) {
  return monomial_to_string(m, [&](GeneratorIndex g) { return alphabet.name(g); });
}

std::string TruncatedSeries::to_string(std::function<std::string(GeneratorIndex)> const& namer) const {
  auto name = namer ? namer : [this](GeneratorIndex i) { return alphabet_->name(i); };
  if (terms_.empty()) return "0";
  std::string out;
  for (auto const& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m.empty())
      out += c.get_str();
    else
      out += c.get_str() + " * " + monomial_to_string(m, name);
  }
  return out;
}

bool TruncatedSeries::operator==(TruncatedSeries const& other) const {
  return degree_bound_ == other.degree_bound_ && same_alphabet(alphabet_, other.alphabet_) &&
         terms_ == other.terms_;
}

namespace {

void require_compatible(TruncatedSeries const& a, TruncatedSeries const& b, char const* op) {
  if (!same_alphabet(a.alphabet(), b.alphabet()))
    throw InputError(std::string(op) + ": alphabet mismatch");
  if (a.degree_bound() != b.degree_bound())
    throw InputError(std::string(op) + ": degree bound mismatch");
}

}  // namespace

TruncatedSeries series_add(TruncatedSeries const& a, TruncatedSeries const& b) {
  require_compatible(a, b, "series_add");
  TruncatedSeries out = a;
  for (auto const& [m, c] : b.terms()) out.add(m, c);
  return out;
}

TruncatedSeries series_sub(TruncatedSeries const& a, TruncatedSeries const& b) {
  require_compatible(a, b, "series_sub");
  TruncatedSeries out = a;
  for (auto const& [m, c] : b.terms()) out.add(m, -c);
  return out;
}

TruncatedSeries series_mul(TruncatedSeries const& a, TruncatedSeries const& b,
                           MonomialKiller const& killer) {
  require_compatible(a, b, "series_mul");
  unsigned const q = a.degree_bound();
  TruncatedSeries out(a.alphabet(), q);
  Monomial prod;
  for (auto const& [ma, ca] : a.terms()) {
    // b's terms are ordered by degree, so stop once the product is too long
    for (auto const& [mb, cb] : b.terms()) {
      if (ma.size() + mb.size() > q) break;
      prod.assign(ma.begin(), ma.end());
      prod.insert(prod.end(), mb.begin(), mb.end());
      if (killer && killer(prod)) continue;
      out.add(prod, ca * cb);
    }
  }
  return out;
}

TruncatedSeries magnus_expand(Word const& w, unsigned q, MonomialKiller const& killer) {
  if (q < 1) throw InputError("magnus_expand: degree bound must be at least 1");
  TruncatedSeries::Terms current;
  current.emplace(Monomial{}, 1);
  Monomial m;
  for (auto const& letter : w.letters()) {
    TruncatedSeries::Terms next = current;
    auto accumulate = [&next](Monomial const& key, Integer const& c) {
      auto [it, inserted] = next.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) next.erase(it);
      }
    };
    for (auto const& [base, c] : current) {
      m = base;
      Integer coeff = c;
      // (1 + x) contributes one extra factor; (1 + x)^-1 the alternating geometric tail
      while (m.size() < q) {
        m.push_back(letter.gen);
        if (killer && killer(m)) break;
        if (letter.exp < 0) coeff = -coeff;
        accumulate(m, coeff);
        if (letter.exp > 0) break;
      }
    }
    current = std::move(next);
  }
  TruncatedSeries out(w.alphabet(), q);
  for (auto const& [mono, c] : current) out.add(mono, c);
  return out;
}

unsigned default_degree(Alphabet const& alphabet) {
  return static_cast<unsigned>(alphabet.size()) + 1;
}

}  // namespace fcell
