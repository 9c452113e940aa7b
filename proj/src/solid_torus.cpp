#include "fcell/solid_torus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fcell/error.hpp"

namespace fcell {

AlphabetPtr wedge_alphabet(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  names.push_back("y");
  return make_alphabet(std::move(names));
}

void SolidTorusLink::check_shape() const {
  std::size_t const n = components();
  if (n == 0) throw InputError("solid torus link needs at least one component");
  if (wedge_word.alphabet()->size() != n + 1)
    throw InputError("wedge word must use z1..z" + std::to_string(n) + " and y");
  if (lhat.components() != n + 1)
    throw InputError("lhat must have " + std::to_string(n + 1) + " components");
  if (lplus.components() != n + 2)
    throw InputError("lplus must have " + std::to_string(n + 2) + " components");
  std::vector<std::size_t> sorted = preferred_order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i) throw InputError("preferred order is not a permutation");
}

std::string AdmissibilityReport::summary() const {
  if (admissible) return "admissible";
  std::ostringstream out;
  out << "not admissible:";
  if (!essential) out << " clause (a) fails (L with the wedge curve is homotopically trivial);";
  if (!failed_deletions.empty()) {
    out << " clause (b) fails for component(s)";
    for (auto i : failed_deletions) out << ' ' << i + 1;
    out << ';';
  }
  return out.str();
}

unsigned default_admissibility_degree(SolidTorusLink const& link) {
  return static_cast<unsigned>(link.components()) + 2;
}

AdmissibilityReport is_admissible(SolidTorusLink const& link, unsigned q) {
  link.check_shape();
  AdmissibilityReport report;
  report.essential = !is_homotopically_trivial(link.lhat, q).trivial;
  for (std::size_t i = 0; i < link.components(); ++i)
    if (!is_homotopically_trivial(delete_component(link.lplus, i), q).trivial)
      report.failed_deletions.push_back(i);
  report.admissible = report.essential && report.failed_deletions.empty();
  return report;
}

namespace {

Integer ordered_wedge_coefficient(SolidTorusLink const& link, std::vector<std::size_t> const& order,
                                  unsigned q) {
  Monomial m(order.begin(), order.end());
  return magnus_expand(link.wedge_word, q, has_repeated_variable).coefficient(m);
}

}  // namespace

Integer wedge_mu(SolidTorusLink const& link, unsigned q) {
  link.check_shape();
  if (q < link.components())
    throw InputError("wedge_mu needs q >= " + std::to_string(link.components()));
  Integer mu = ordered_wedge_coefficient(link, link.preferred_order, q);
  if (mu == 0) throw ContractError("invalid preferred order: wedge coefficient vanishes");
  return mu;
}

Integer wedge_mu(SolidTorusLink const& link) {
  return wedge_mu(link, static_cast<unsigned>(link.components()) + 1);
}

std::vector<Word> internal_longitudes(SolidTorusLink const& link) {
  link.check_shape();
  std::size_t const n = link.components();
  auto target = wedge_alphabet(n);
  std::vector<Word> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Word::generator(target, static_cast<GeneratorIndex>(i)));
  images.push_back(Word(target));                                           // wedge curve
  images.push_back(Word::generator(target, static_cast<GeneratorIndex>(n)));  // second wedge curve
  std::vector<Word> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(substitute(link.lplus.longitude(i), images, target));
  return out;
}

SolidTorusLink core_link() {
  auto z = wedge_alphabet(1);
  return SolidTorusLink{
      Word::parse(z, "z1"),
      LinkPresentation::parse({"m2", "m1"}),
      LinkPresentation::parse({"m2 m3", "m1", "m1"}),
      {0},
  };
}

namespace {

// Bing double of the core. Components l1, l2, wedge, second wedge.
SolidTorusLink bing_pattern() {
  auto z = wedge_alphabet(2);
  return SolidTorusLink{
      Word::parse(z, "z1^-1 z2^-1 z1 z2"),
      LinkPresentation::parse({"m2^-1 m3^-1 m2 m3", "m3^-1 m1^-1 m3 m1", "m1^-1 m2^-1 m1 m2"}),
      LinkPresentation::parse({"m2^-1 m4^-1 m3^-1 m2 m3 m4", "m4^-1 m3^-1 m1^-1 m3 m4 m1",
                               "m1^-1 m2^-1 m1 m2", "m1^-1 m2^-1 m1 m2"}),
      {0, 1},
  };
}

// First order (lexicographic over permutations) with a nonzero wedge coefficient.
std::optional<std::vector<std::size_t>> find_preferred_order(SolidTorusLink const& link, unsigned q) {
  auto series = magnus_expand(link.wedge_word, q, has_repeated_variable);
  std::vector<std::size_t> order(link.components());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (series.coefficient(Monomial(order.begin(), order.end())) != 0) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace

LinkPresentation satellite(LinkPresentation const& link, std::size_t c, SolidTorusLink const& pattern) {
  pattern.check_shape();
  std::size_t const n = link.components();
  std::size_t const m = pattern.components();
  if (c >= n) throw InputError("satellite: component index out of range");
  auto target = numbered_alphabet("m", n - 1 + m);
  auto moved = [&](std::size_t i) { return static_cast<GeneratorIndex>(i < c ? i : i + m - 1); };

  std::vector<std::optional<Word>> images(n);
  for (std::size_t i = 0; i < n; ++i)
    if (i != c) images[i] = Word::generator(target, moved(i));
  images[c] = Word(target);
  // y inside the wedge word is read along the old longitude with the old
  // component erased, which avoids a circular definition
  Word const parallel_erased = substitute(link.longitude(c), images, target);

  std::vector<Word> wedge_images;
  for (std::size_t j = 0; j < m; ++j) wedge_images.push_back(Word::generator(target, static_cast<GeneratorIndex>(c + j)));
  wedge_images.push_back(parallel_erased);
  images[c] = substitute(pattern.wedge_word, wedge_images, target);

  Word const parallel = substitute(link.longitude(c), images, target);
  wedge_images.back() = parallel;

  std::vector<Word> longitudes(n - 1 + m, Word(target));
  for (std::size_t i = 0; i < n; ++i)
    if (i != c) longitudes[moved(i)] = substitute(link.longitude(i), images, target);
  auto internal = internal_longitudes(pattern);
  for (std::size_t j = 0; j < m; ++j) longitudes[c + j] = substitute(internal[j], wedge_images, target);
  return LinkPresentation(std::move(longitudes));
}

LinkPresentation compose(LinkPresentation const& link, SolidTorusLink const& pattern) {
  return satellite(link, link.components() - 1, pattern);
}

SolidTorusLink bing_double(SolidTorusLink const& link) {
  link.check_shape();
  std::size_t const n = link.components();
  auto const pattern = bing_pattern();
  LinkPresentation lplus = link.lplus;
  for (std::size_t c = n; c-- > 0;) lplus = satellite(lplus, c, pattern);

  std::size_t const doubled = 2 * n;
  auto z = wedge_alphabet(doubled);
  std::vector<Word> images;
  for (std::size_t i = 0; i < doubled; ++i) images.push_back(Word::generator(z, static_cast<GeneratorIndex>(i)));
  images.push_back(Word(z));
  images.push_back(Word::generator(z, static_cast<GeneratorIndex>(doubled)));

  SolidTorusLink out{
      substitute(lplus.longitude(doubled), images, z),
      delete_component(lplus, doubled + 1),
      lplus,
      {},
  };
  for (auto i : link.preferred_order) {
    out.preferred_order.push_back(2 * i);
    out.preferred_order.push_back(2 * i + 1);
  }
  unsigned const q = static_cast<unsigned>(doubled) + 1;
  if (ordered_wedge_coefficient(out, out.preferred_order, q) == 0) {
    auto order = find_preferred_order(out, q);
    if (!order) throw ContractError("bing_double: wedge word has no nonzero leading coefficient");
    out.preferred_order = *order;
  }
  auto report = is_admissible(out, default_admissibility_degree(out));
  if (!report.admissible) throw ContractError("bing_double produced a link that is " + report.summary());
  return out;
}

SolidTorusLink iterated_bing(unsigned depth) {
  SolidTorusLink out = core_link();
  for (unsigned d = 0; d < depth; ++d) out = bing_double(out);
  return out;
}

}  // namespace fcell
