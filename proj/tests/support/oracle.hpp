#pragma once

// Reference computations used only by the tests. Nothing here calls the
// series arithmetic of the library.

#include <cstdint>
#include <random>
#include <vector>

#include "fcell/milnor.hpp"
#include "fcell/solid_torus.hpp"
#include "fcell/tree.hpp"

namespace oracle {

using fcell::Integer;
using fcell::Monomial;

/// Coefficient of a monomial in the untruncated Magnus expansion of w, by
/// summing over all ways of reading the monomial off the letters.
Integer magnus_coefficient(fcell::Word const& w, Monomial const& m);

Integer mu(fcell::LinkPresentation const& link, std::vector<std::size_t> const& full);
/// gcd over proper cyclic subindices, each mu from magnus_coefficient.
Integer indeterminacy(fcell::LinkPresentation const& link, std::vector<std::size_t> const& full);

/// dim Q of the bottom stage from the tree description alone.
std::size_t q_dimension(fcell::CellNode const& node);
std::size_t leaf_count(fcell::CellNode const& node);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return engine_() & 1u; }
  fcell::Word word(fcell::AlphabetPtr const& a, std::size_t max_length);

 private:
  std::mt19937_64 engine_;
};

/// Random admissible cell of height at most max_height built from the core,
/// bing(1) and bing(2) patterns, with at most max_leaves handles.
fcell::CellNode random_cell(Rng& rng, unsigned max_height, std::size_t max_leaves);

/// Bing-like pattern with every clasp replaced by a k-fold commutator, so the
/// wedge coefficient is k.
fcell::SolidTorusLink clasp_pattern(int k);

}  // namespace oracle
