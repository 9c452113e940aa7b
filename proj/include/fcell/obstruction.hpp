#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fcell/milnor.hpp"
#include "fcell/tree.hpp"

namespace fcell {

/// Integer functional on the Q basis of the root of a tree.
struct PhiFunctional {
  AlphabetPtr alphabet;
  std::map<Monomial, Integer, LengthLex> table;

  /// Throws InputError for monomials outside the Q basis.
  Integer value(Monomial const& m) const;
  /// Sum of coefficient times value over the Q basis monomials present in s.
  Integer apply(TruncatedSeries const& s) const;
};

PhiFunctional phi_functional(FCellTree const& tree);
/// Functional of the disjoint union; values multiply on concatenated monomials.
PhiFunctional collection_phi(std::vector<FCellTree> const& trees);

/// Meridian word of vertex v in the leaf generators: a leaf gives its
/// generator, a link substitutes the children's words into its wedge word
/// with y erased, a surface takes its first child.
Word vertex_word(FCellTree const& tree, std::size_t v);
/// vertex_word of the root. Checks that the image lies in S and has nonzero
/// Phi, otherwise throws ContractError.
Word bottom_meridian_word(FCellTree const& tree);

/// Phi(p2(p1(rc_project(M(w))))). Throws InputError when q is below the degree
/// the tree needs, RefusalError when the expansion is outside S.
Integer phi_of_word(FCellTree const& tree, Word const& w, unsigned q);
/// Phi read off the Q coordinates of rc_project(M(w)), with no membership test.
Integer phi_of_word_coordinates(FCellTree const& tree, Word const& w, unsigned q);

enum class RelatorFamily { R1, R2, R4 };
std::string family_name(RelatorFamily f);

struct RelatorSample {
  RelatorFamily family;
  Word word;
  GeneratorIndex a = 0, b = 0;  // R1, R2: the conjugated meridians
  std::size_t surface = 0;      // R4: the surface vertex whose children are compared
  bool inner_stage = false; // R4 above the bottom surface
};

/// Deterministic in the seed. Conjugators have at most max_conjugator letters.
std::vector<RelatorSample> relator_samples(FCellTree const& tree, std::size_t count, std::uint64_t seed,
                                           unsigned max_conjugator = 4);

/// Seeded source of random words. The bounded draw is done by hand so that
/// results do not depend on the standard library's distributions.
class WordSampler {
 public:
  explicit WordSampler(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Reduced word of length at most max_length.
  Word word(AlphabetPtr const& alphabet, unsigned max_length);

 private:
  std::mt19937_64 engine_;
};

enum class Verdict { Obstructed, Inconclusive };
std::string verdict_name(Verdict v);

struct PhiCertificate {
  LinkPresentation link;
  std::vector<std::size_t> sublink;  // components used, in the order of the index
  MuResidue mu_link;
  Integer phi_value = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::string witness_monomial;
  std::string note;
};

/// If index is empty the first nonvanishing mu-bar of a minimal essential
/// sublink is used; otherwise index is a full-length index of L (each
/// component once, last entry the longitude). A nonzero modulus raises
/// RefusalError.
PhiCertificate obstruct_bounding(LinkPresentation const& link, std::vector<FCellTree> const& trees, unsigned q,
                                 std::vector<std::size_t> const& index = {});

}  // namespace fcell
