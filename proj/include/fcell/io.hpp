#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "fcell/builtins.hpp"
#include "fcell/obstruction.hpp"

namespace fcell {

using Json = nlohmann::ordered_json;

// Every document carries "format": 1 and a "type" of link,
// solid-torus-link, cell or certificate. Component and index numbers in
// files are one based.

Json to_json(LinkPresentation const& link);
Json to_json(SolidTorusLink const& link);
Json to_json(FCellTree const& tree);
Json to_json(PhiCertificate const& cert);
Json to_json(Integer const& n);

/// `where` is a JSON pointer used in error messages.
LinkPresentation link_from_json(Json const& j, std::string const& where = "");
SolidTorusLink solid_torus_link_from_json(Json const& j, std::string const& where = "");
FCellTree tree_from_json(Json const& j, std::string const& where = "");
Integer integer_from_json(Json const& j, std::string const& where = "");

/// Parse errors are reported with source, line and column.
Json parse_json(std::string const& text, std::string const& source);
std::string read_file(std::string const& path);

// `builtin:NAME` or a path to a JSON file.
LinkPresentation load_link(std::string const& spec);
SolidTorusLink load_solid_torus_link(std::string const& spec);
FCellTree load_tree(std::string const& spec);

}  // namespace fcell
