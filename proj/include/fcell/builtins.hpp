#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fcell/milnor.hpp"
#include "fcell/solid_torus.hpp"
#include "fcell/tree.hpp"

namespace fcell {

using BuiltinObject = std::variant<LinkPresentation, SolidTorusLink, FCellTree>;

/// Named examples: unlink(n), hopf, borromean, whitehead-longitude-demo,
/// core, bing(d), handle, fig1-cell, fig2-cell. Unknown names raise InputError.
BuiltinObject builtin(std::string const& name);

/// The names above with small parameters filled in, for corpus runs.
std::vector<std::string> builtin_names();
std::vector<std::string> builtin_link_names();

LinkPresentation unlink(std::size_t n);
LinkPresentation hopf_link();
LinkPresentation borromean_rings();
LinkPresentation whitehead_longitude_demo();

/// Surface with one handle.
FCellTree handle_cell(std::string const& var = "x1");
/// Pair of pants carrying two Bing doubles of the core.
FCellTree fig1_cell();
/// Height two: a Bing double whose first component bounds a pair of pants
/// with two further Bing doubles.
FCellTree fig2_cell();

}  // namespace fcell
