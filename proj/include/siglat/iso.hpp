#pragma once

#include <optional>
#include <vector>

#include "siglat/group.hpp"

namespace siglat {

/// A group isomorphism between two sections of the same parent, as an image
/// table over the domain's cosets.
using SectionMap = std::vector<int>;

/// Backtracking search for an isomorphism f : H1/K -> H2/K with
/// f(x^a) = f(x)^a for every listed actor a. Actors must normalize the top
/// and bottom of both sections; callers pass a generating set of the acting
/// group. An empty actor list gives a plain isomorphism search.
std::optional<SectionMap> find_equivariant_isomorphism(
    const Section& h1, const Section& h2, const std::vector<int>& actors);

/// All isomorphisms h1 -> h2 (automorphisms when h1 == h2).
std::vector<SectionMap> all_isomorphisms(const Section& h1, const Section& h2);

/// All subgroups of A invariant under every automorphism of A. Candidates
/// must be member sets of subgroups of A over the same parent. Throws
/// OrderCapExceeded when |A| > aut_cap.
std::vector<DynBitset> characteristic_subgroups(
    const SubgroupHandle& a, const std::vector<DynBitset>& subgroups_of_a,
    int aut_cap = 128);

}  // namespace siglat
