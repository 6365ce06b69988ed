#pragma once

#include <string>
#include <vector>

#include "siglat/group.hpp"

namespace siglat {

/// A group description as loaded from a file or the builtin corpus.
struct GroupSpec {
  std::string name;
  int degree = 0;
  std::vector<std::string> generators;  // cycle notation, 1-based points

  GroupPtr build(int order_cap = 2000) const;
};

/// Loads a GroupSpec from a JSON file:
///   {"name":"S3","degree":3,"generators":["(1 2)","(1 2 3)"]}
/// Throws ParseError with position information on malformed input.
GroupSpec parse_group_file(const std::string& path);
GroupSpec parse_group_json(const std::string& text);

/// The builtin verification corpus: cyclic groups, small abelian groups,
/// dihedral, quaternion, alternating and symmetric groups, SL(2,3), the
/// dicyclic group of order 12, and a few direct products.
const std::vector<GroupSpec>& builtin_corpus();

}  // namespace siglat
