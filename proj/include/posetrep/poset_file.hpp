#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetrep/forms.hpp"
#include "posetrep/poset.hpp"

namespace posetrep {

// A parsed poset file: the poset plus its named dimension vectors in
// declaration order. Round trip: parse(render(f)) reproduces the poset's
// order relation and every dimension vector exactly.
struct PosetFile {
  std::string path;
  Poset poset;
  std::vector<std::pair<std::string, DimVector>> dims;

  const DimVector* find_dims(const std::string& name) const;
};

// Line-based format: `elements = l1 l2 ...`, `order = a<b c<d ...`, zero or
// more `dim <name> = alpha0 ; l1:v1 l2:v2 ...` (name defaults to "main");
// `#` starts a comment. Every element must receive a value in every dim
// line. Syntax problems carry 1-based line and column positions.
PosetFile parse_poset_file(const std::string& text);

PosetFile load_poset_file(const std::string& path);

std::string render_poset_file(const PosetFile& file);

// Graphviz digraph of the cover relations, edges pointing bottom to top,
// nodes labeled "label" or "label:alpha" when dims are given.
std::string dot_export(const Poset& p, const DimVector* dims = nullptr);

// Payload of a `dim` line (`alpha0 ; l:v ...`) parsed on its own, with
// negative entries permitted; used for inline vector overrides.
DimVector parse_dim_payload(const std::string& payload, const Poset& poset);

}  // namespace posetrep
