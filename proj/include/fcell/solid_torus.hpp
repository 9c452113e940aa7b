#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fcell/milnor.hpp"

namespace fcell {

/// Generators z1..zn, y of the complement of a link in the solid torus.
AlphabetPtr wedge_alphabet(std::size_t n);

/// A link L in the solid torus with the data needed to test admissibility.
///
/// Component conventions: lhat is L followed by the wedge curve, lplus is L
/// followed by the wedge curve and a second, parallel wedge curve. The
/// wedge word is written in z1..zn (meridians of L) and y (meridian of the
/// second wedge curve).
struct SolidTorusLink {
  Word wedge_word;
  LinkPresentation lhat;
  LinkPresentation lplus;
  std::vector<std::size_t> preferred_order;

  std::size_t components() const { return preferred_order.size(); }
  /// Throws InputError on inconsistent component counts or a bad permutation.
  void check_shape() const;

  bool operator==(SolidTorusLink const& other) const = default;
};

struct AdmissibilityReport {
  bool admissible = false;
  bool essential = false;                     // clause (a): lhat is homotopically essential
  std::vector<std::size_t> failed_deletions;  // clause (b): components i with lplus - l_i essential
  std::string summary() const;
};

AdmissibilityReport is_admissible(SolidTorusLink const& link, unsigned q);
unsigned default_admissibility_degree(SolidTorusLink const& link);

/// Coefficient of z_{s(1)}...z_{s(n)} in the Magnus expansion of the wedge
/// word, s the preferred order. Zero raises ContractError.
Integer wedge_mu(SolidTorusLink const& link, unsigned q);
Integer wedge_mu(SolidTorusLink const& link);

/// Longitudes of the components of L in the solid torus, as words in z1..zn, y.
std::vector<Word> internal_longitudes(SolidTorusLink const& link);

SolidTorusLink core_link();
/// Replaces every component by its Bing double. The result is checked for
/// admissibility and a nonzero wedge coefficient.
SolidTorusLink bing_double(SolidTorusLink const& link);
SolidTorusLink iterated_bing(unsigned depth);

/// Replaces component c of a link by the pattern link, embedded with the
/// zero framing. The pattern's components take positions c..c+m-1.
LinkPresentation satellite(LinkPresentation const& link, std::size_t c, SolidTorusLink const& pattern);
/// Replaces the last component.
LinkPresentation compose(LinkPresentation const& link, SolidTorusLink const& pattern);

}  // namespace fcell
