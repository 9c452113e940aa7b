#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fcell/magnus.hpp"
#include "fcell/word.hpp"

namespace fcell {

/// An n-component link given by untwisted longitude words in the meridian
/// generators m1..mn.
class LinkPresentation {
 public:
  /// All longitudes must share one alphabet with exactly one generator per
  /// component, and each longitude must have zero exponent sum in its own
  /// meridian.
  explicit LinkPresentation(std::vector<Word> longitudes);

  /// Longitudes parsed over m1..mn.
  static LinkPresentation parse(std::vector<std::string> const& longitudes);

  std::size_t components() const { return longitudes_.size(); }
  AlphabetPtr const& meridians() const { return meridians_; }
  std::vector<Word> const& longitudes() const { return longitudes_; }
  Word const& longitude(std::size_t j) const { return longitudes_.at(j); }
  Word meridian(std::size_t j) const { return Word::generator(meridians_, static_cast<GeneratorIndex>(j)); }

  bool operator==(LinkPresentation const& other) const { return longitudes_ == other.longitudes_; }

 private:
  AlphabetPtr meridians_;
  std::vector<Word> longitudes_;
};

/// Residue class of mu modulo delta. modulus == 0 means an honest integer.
struct MuResidue {
  Integer value;
  Integer modulus;

  bool is_zero() const { return value == 0; }
  std::string to_string() const { return value.get_str() + " (mod " + modulus.get_str() + ")"; }
  bool operator==(MuResidue const&) const = default;
};

MuResidue make_residue(Integer const& value, Integer const& modulus);

/// A multiindex (i1, ..., ik; j): monomial x_{i1}...x_{ik} read off the
/// longitude of component j. Indices are zero based.
struct MuIndex {
  Monomial prefix;
  std::size_t component = 0;

  std::vector<std::size_t> full() const;
  bool operator==(MuIndex const&) const = default;
};

/// "123" for one-digit indices, "1,2,10" otherwise (one based).
std::string format_index(std::vector<std::size_t> const& full);

/// Caches the Magnus expansions of a link's longitudes at a fixed degree.
/// In non-repeating mode expansions live in the reduced ring, which is exact
/// for every multiindex without repeated entries.
class MuTable {
 public:
  MuTable(LinkPresentation const& link, unsigned q, bool non_repeating_only = false);

  LinkPresentation const& link() const { return link_; }
  unsigned degree() const { return q_; }

  Integer mu(Monomial const& prefix, std::size_t component);
  Integer mu(MuIndex const& index) { return mu(index.prefix, index.component); }
  Integer delta(std::vector<std::size_t> const& full);
  MuResidue mu_bar(Monomial const& prefix, std::size_t component);

  TruncatedSeries const& expansion(std::size_t component);

 private:
  LinkPresentation link_;
  unsigned q_;
  bool non_repeating_only_;
  std::vector<std::optional<TruncatedSeries>> cache_;
};

Integer mu(LinkPresentation const& link, Monomial const& prefix, std::size_t component, unsigned q);
/// gcd of mu over all sequences obtained by deleting at least one entry of
/// `full` and cyclically permuting the rest, lengths 2..|full|-1; gcd of the
/// empty set is 0.
Integer delta(LinkPresentation const& link, std::vector<std::size_t> const& full, unsigned q);
MuResidue mu_bar(LinkPresentation const& link, Monomial const& prefix, std::size_t component,
                 unsigned q);

struct TrivialityReport {
  bool trivial = true;
  std::optional<MuIndex> witness;
  std::optional<MuResidue> witness_value;
};

/// All non-repeating mu-bar invariants vanish. Multiindices are scanned by
/// length, then component, then prefix lexicographically; the first
/// nonvanishing one is the witness. Requires q >= n + 1.
TrivialityReport is_homotopically_trivial(LinkPresentation const& link, unsigned q);
/// Every (n-1)-component sublink is homotopically trivial.
bool is_almost_trivial(LinkPresentation const& link, unsigned q);

/// Removes component i; its meridian is sent to the identity in the other longitudes.
LinkPresentation delete_component(LinkPresentation const& link, std::size_t i);
/// Keeps the listed components, in the listed order.
LinkPresentation sublink(LinkPresentation const& link, std::vector<std::size_t> const& keep);

/// Magnus expansion in the ring where monomials with a repeated variable vanish.
TruncatedSeries reduced_magnus(Word const& w, unsigned q);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  unsigned nilpotency_class = 0;

  std::string to_string() const;
};

/// <m1..mn | [m1,w1], ..., [m_{n-1},w_{n-1}], F^q>; the F^q family is recorded, not listed.
Presentation nilpotent_presentation(LinkPresentation const& link, unsigned q);

}  // namespace fcell
