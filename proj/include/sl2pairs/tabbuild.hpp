#pragma once

#include "sl2pairs/chartab.hpp"
#include "sl2pairs/matgroup.hpp"

#include <string>

namespace sl2pairs::tabbuild {

/// Character table of a cyclic group; classes are the elements, characters
/// indexed by the discrete log against a fixed generator.
chartab::Table table_cyclic(const matgrp::Group& h, const std::string& kind = "");

/// Character table of <a^s> x| <b> <= U(2,p): lifts the linear characters
/// from the cyclic quotient and induces the rest from the abelian subgroup
/// K<b> (K the kernel of the conjugation action).
chartab::Table table_borel_subgroup(long p, long s);

/// Character table of an arbitrary enumerated group at desk scale. Cyclic
/// groups are handled directly; otherwise the table is dug out of the
/// lattice of characters induced from proper subgroups (plus the linear
/// characters of h), via exact LLL reduction and short-vector enumeration.
/// Results are memoized per element set.
chartab::Table build_table(const matgrp::Group& h, const std::string& kind = "");

} // namespace sl2pairs::tabbuild
