#pragma once

#include "sl2pairs/chartab.hpp"
#include "sl2pairs/gelfand.hpp"
#include "sl2pairs/subgroups.hpp"

#include <string>
#include <vector>

namespace sl2pairs::classify {

/// One examined candidate subgroup (a conjugacy class of subgroups).
struct CandidateReport {
    std::vector<std::string> aliases; // first entry is the primary label
    long order = 0;
    bool strong = false;
    std::string method;
    std::string reason; // witness / pruning parent / confirmation route
    std::string label() const { return aliases.empty() ? "?" : aliases.front(); }
};

struct ClassifyReport {
    long p = 0;
    std::string mode; // "lattice" (p <= 11) or "section4" (p >= 13)
    std::vector<std::string> kind_rejections; // maximal-kind analysis, p >= 13
    std::vector<CandidateReport> candidates;
    std::vector<std::string> strong_pairs; // paper-style labels, proper subgroups only
};

/// Full classification of the strong Gelfand pairs of SL(2,p).
/// p <= 11: exhaustive subgroup lattice, Schur-ring oracle and character
/// method side by side (disagreement throws MethodDisagreement).
/// 13 <= p: the maximal-kind rejections, the restriction decompositions for
/// (G,U), and the pruned walk of the subgroups of U.
ClassifyReport run_classify(long p, long max_p = 31);

/// The restriction decompositions of the SL(2,p) characters into U
/// characters, as exact value-vector identities.
struct Prop1Check {
    std::string item; // e.g. "(ii) phi|_U = 1 + chi_{1,2} + chi_{2,2}"
    bool holds = false;
};
std::vector<Prop1Check> check_restriction_decompositions(const chartab::Table& tabG,
                                                         const chartab::Table& tabU);
bool all_hold(const std::vector<Prop1Check>& checks);

/// <chi|_H, psi>_H = <chi, psi-up-G>_G for every pair, with the induction
/// done by the brute-force formula.
bool frobenius_reciprocity_holds(const chartab::Table& tabG, const chartab::Table& tabH,
                                 std::string* detail = nullptr);

/// A character table for an arbitrary subgroup of SL(2,p): cyclic and
/// Borel-type subgroups get their dedicated constructions, everything else
/// goes through the general builder.
chartab::Table table_for_subgroup(long p, const matgrp::Group& h);

struct SuiteResult {
    std::string name;
    bool ok = false;
    bool skipped = false;
    std::string detail;
};

/// The cross-validation suites: orthogonality, restriction decompositions,
/// Munkholm induction, Frobenius reciprocity, oracle agreement, Gauss-sum
/// identities. Which suites run depends on p.
std::vector<SuiteResult> selftest(long p, long max_p = 31);

} // namespace sl2pairs::classify
