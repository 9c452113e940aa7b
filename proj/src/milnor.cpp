#include "fcell/milnor.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "fcell/error.hpp"

namespace fcell {

LinkPresentation::LinkPresentation(std::vector<Word> longitudes) : longitudes_(std::move(longitudes)) {
  if (longitudes_.empty()) throw InputError("a link needs at least one component");
  meridians_ = longitudes_.front().alphabet();
  if (meridians_->size() != longitudes_.size())
    throw InputError("link with " + std::to_string(longitudes_.size()) + " components needs " +
                     std::to_string(longitudes_.size()) + " meridian generators, got " +
                     std::to_string(meridians_->size()));
  for (std::size_t j = 0; j < longitudes_.size(); ++j) {
    if (!same_alphabet(longitudes_[j].alphabet(), meridians_))
      throw InputError("longitudes must share one meridian alphabet");
    if (longitudes_[j].exponent_sum(static_cast<GeneratorIndex>(j)) != 0)
      throw InputError("longitude " + std::to_string(j + 1) +
                       " is not untwisted: nonzero exponent of its own meridian");
  }
}

LinkPresentation LinkPresentation::parse(std::vector<std::string> const& longitudes) {
  auto alphabet = numbered_alphabet("m", longitudes.size());
  std::vector<Word> words;
  words.reserve(longitudes.size());
  for (auto const& text : longitudes) words.push_back(Word::parse(alphabet, text));
  return LinkPresentation(std::move(words));
}

MuResidue make_residue(Integer const& value, Integer const& modulus) {
  if (modulus < 0) throw ContractError("negative modulus");
  if (modulus == 0) return {value, 0};
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return {r, modulus};
}

std::vector<std::size_t> MuIndex::full() const {
  std::vector<std::size_t> out(prefix.begin(), prefix.end());
  out.push_back(component);
  return out;
}

std::string format_index(std::vector<std::size_t> const& full) {
  bool short_form = true;
  for (auto i : full) short_form = short_form && i < 9;
  std::string out;
  for (std::size_t k = 0; k < full.size(); ++k) {
    if (!short_form && k > 0) out += ',';
    out += std::to_string(full[k] + 1);
  }
  return out;
}

MuTable::MuTable(LinkPresentation const& link, unsigned q, bool non_repeating_only)
    : link_(link), q_(q), non_repeating_only_(non_repeating_only), cache_(link.components()) {
  if (q < 1) throw InputError("degree bound must be at least 1");
}

TruncatedSeries const& MuTable::expansion(std::size_t component) {
  auto& slot = cache_.at(component);
  if (!slot) {
    slot = non_repeating_only_ ? magnus_expand(link_.longitude(component), q_, has_repeated_variable)
                               : magnus_expand(link_.longitude(component), q_);
  }
  return *slot;
}

Integer MuTable::mu(Monomial const& prefix, std::size_t component) {
  if (component >= link_.components()) throw InputError("component index out of range");
  for (auto i : prefix)
    if (i >= link_.components()) throw InputError("multiindex entry out of range");
  if (prefix.size() > q_)
    throw InputError("multiindex of length " + std::to_string(prefix.size()) +
                     " exceeds the degree bound " + std::to_string(q_));
  if (non_repeating_only_ && has_repeated_variable(prefix))
    throw ContractError("repeated multiindex requested from a non-repeating table");
  return expansion(component).coefficient(prefix);
}

Integer MuTable::delta(std::vector<std::size_t> const& full) {
  std::size_t const k = full.size();
  Integer g = 0;
  if (k < 3) return g;
  // every subset of positions of size 2..k-1, every cyclic rotation
  std::vector<std::size_t> kept;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    kept.clear();
    for (std::size_t p = 0; p < k; ++p)
      if (mask & (std::uint64_t{1} << p)) kept.push_back(full[p]);
    std::size_t const s = kept.size();
    if (s < 2) continue;
    for (std::size_t r = 0; r < s; ++r) {
      Monomial prefix;
      for (std::size_t t = 0; t + 1 < s; ++t) prefix.push_back(static_cast<GeneratorIndex>(kept[(r + t) % s]));
      Integer v = mu(prefix, kept[(r + s - 1) % s]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return g;
    }
  }
  return g;
}

MuResidue MuTable::mu_bar(Monomial const& prefix, std::size_t component) {
  std::vector<std::size_t> full(prefix.begin(), prefix.end());
  full.push_back(component);
  Integer d = delta(full);
  return make_residue(mu(prefix, component), d);
}

Integer mu(LinkPresentation const& link, Monomial const& prefix, std::size_t component, unsigned q) {
  return MuTable(link, q).mu(prefix, component);
}

Integer delta(LinkPresentation const& link, std::vector<std::size_t> const& full, unsigned q) {
  return MuTable(link, q).delta(full);
}

MuResidue mu_bar(LinkPresentation const& link, Monomial const& prefix, std::size_t component,
                 unsigned q) {
  return MuTable(link, q).mu_bar(prefix, component);
}

namespace {

// Calls visit(prefix) for every sequence of distinct entries of `pool` of
// the given length, in lexicographic order; stops when visit returns false.
bool for_each_arrangement(std::vector<std::size_t> const& pool, std::size_t length,
                          std::function<bool(Monomial const&)> const& visit) {
  Monomial current;
  std::vector<bool> used(pool.size(), false);
  std::function<bool()> rec = [&]() -> bool {
    if (current.size() == length) return visit(current);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.push_back(static_cast<GeneratorIndex>(pool[i]));
      bool go_on = rec();
      current.pop_back();
      used[i] = false;
      if (!go_on) return false;
    }
    return true;
  };
  return rec();
}

}  // namespace

TrivialityReport is_homotopically_trivial(LinkPresentation const& link, unsigned q) {
  std::size_t const n = link.components();
  if (q < n + 1)
    throw InputError("homotopy triviality of a " + std::to_string(n) + "-component link needs q >= " +
                     std::to_string(n + 1));
  MuTable table(link, q, true);
  TrivialityReport report;
  for (std::size_t k = 2; k <= n && report.trivial; ++k) {
    for (std::size_t j = 0; j < n && report.trivial; ++j) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < n; ++i)
        if (i != j) pool.push_back(i);
      for_each_arrangement(pool, k - 1, [&](Monomial const& prefix) {
        MuResidue r = table.mu_bar(prefix, j);
        if (r.is_zero()) return true;
        report.trivial = false;
        report.witness = MuIndex{prefix, j};
        report.witness_value = r;
        return false;
      });
    }
  }
  return report;
}

bool is_almost_trivial(LinkPresentation const& link, unsigned q) {
  if (link.components() == 1) return true;
  for (std::size_t i = 0; i < link.components(); ++i)
    if (!is_homotopically_trivial(delete_component(link, i), q).trivial) return false;
  return true;
}

LinkPresentation sublink(LinkPresentation const& link, std::vector<std::size_t> const& keep) {
  if (keep.empty()) throw InputError("empty sublink");
  auto target = numbered_alphabet("m", keep.size());
  std::vector<std::optional<Word>> images(link.components(), Word(target));
  std::vector<bool> seen(link.components(), false);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= link.components() || seen[keep[k]]) throw InputError("bad sublink component list");
    seen[keep[k]] = true;
    images[keep[k]] = Word::generator(target, static_cast<GeneratorIndex>(k));
  }
  std::vector<Word> longitudes;
  for (auto i : keep) longitudes.push_back(substitute(link.longitude(i), images, target));
  return LinkPresentation(std::move(longitudes));
}

LinkPresentation delete_component(LinkPresentation const& link, std::size_t i) {
  if (link.components() < 2) throw InputError("cannot delete the only component");
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < link.components(); ++k)
    if (k != i) keep.push_back(k);
  return sublink(link, keep);
}

TruncatedSeries reduced_magnus(Word const& w, unsigned q) {
  return magnus_expand(w, q, has_repeated_variable);
}

std::string Presentation::to_string() const {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) out << (i ? ", " : "") << generators[i];
  out << " | ";
  for (auto const& r : relators) out << r.to_string() << ", ";
  out << "F^" << nilpotency_class << " >";
  return out.str();
}

Presentation nilpotent_presentation(LinkPresentation const& link, unsigned q) {
  if (q < 1) throw InputError("class must be at least 1");
  Presentation p;
  p.generators = link.meridians()->names();
  p.nilpotency_class = q;
  for (std::size_t j = 0; j + 1 < link.components(); ++j)
    p.relators.push_back(commutator(link.meridian(j), link.longitude(j)));
  return p;
}

}  // namespace fcell
