#pragma once

#include "sl2pairs/matgroup.hpp"

#include <string>
#include <vector>

namespace sl2pairs::subgrp {

struct SubgroupRecord {
    std::string label;
    matgrp::Group group;
    int conjugacy_class_id = -1; // conjugate subgroups share an id
};

/// The named subgroups of SL(2,p) used throughout: U, A = <a>, B = <b>,
/// B' = <-1,b>, H_q = <a^q> x| <b> for each prime q | p-1, H_4 when
/// 4 | p-1, <a^2>, and <a^2k> x| <b> for odd primes k with 2k | p-1.
/// Requires p >= 5.
std::vector<SubgroupRecord> canonical_subgroups(long p);

/// <a^s> x| <b>, s | p-1 (s = 1 gives U).
matgrp::Group borel_subgroup(long p, long s);

/// The explicit generating-matrix subgroups for p in {5, 7, 11}:
/// SL(2,3) <= SL(2,5); two copies of K (order 48) in SL(2,7); two copies of
/// the binary icosahedral group 2I (order 120) in SL(2,11).
std::vector<SubgroupRecord> theorem3_fixtures(long p);

/// Raw generator literals for the fixtures, as printed matrices.
std::vector<std::vector<std::string>> theorem3_generator_literals(long p);

enum class MaximalKind { DihedralPPlus1, DihedralPMinus1, BorelImage, A4, S4, A5 };
std::string maximal_kind_name(MaximalKind k);

struct MaximalKindInfo {
    MaximalKind kind;
    long order; // order inside PSL(2,p)
};

/// Candidate maximal-subgroup kinds of PSL(2,p) for p >= 13 (the Suzuki
/// list). S4 appears only when p = +-1 mod 8, A5 only when 60 divides
/// |PSL(2,p)|.
std::vector<MaximalKindInfo> maximal_kinds(long p);

/// All subgroups of g up to conjugacy, by closure extension from cyclic
/// subgroups. Exhaustive; guarded by the order cap.
std::vector<matgrp::Group> lattice_classes(const matgrp::Group& g, long max_order = 1500);

/// Subgroup lattice of SL(2,p), p in {2,3,5,7,11}, as labelled records.
std::vector<SubgroupRecord> full_lattice(long p);

/// Structure-derived names for a subgroup of SL(2,p): "C_n" for cyclics,
/// "U"/"H_2" for the canonical solvable subgroups, fixture names for the
/// Theorem-3 groups, "Q_n" for dicyclic, else "order<n>". A subgroup can
/// carry several names (for p = 3, U is cyclic of order 6, so the borel
/// subgroup is both "C_6" and "U"); the first entry is the primary one.
std::vector<std::string> label_aliases(const matgrp::Group& g, const matgrp::Group& h);
std::string structural_label(const matgrp::Group& g, const matgrp::Group& h);

/// Element-order census "o1:c1 o2:c2 ..." (ascending orders).
std::string order_census(const matgrp::Group& h);

} // namespace sl2pairs::subgrp
