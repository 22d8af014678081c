#pragma once

#include "sl2pairs/chartab.hpp"
#include "sl2pairs/matgroup.hpp"
#include "sl2pairs/subgroups.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2pairs::gelfand {

/// Raised when a multiplicity inner product fails to reduce to a
/// nonnegative integer or when the degree balance breaks; either certifies
/// a broken table or fusion, never a property of the pair.
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when the character method and the Schur-ring oracle disagree.
struct MethodDisagreement : std::logic_error {
    using std::logic_error::logic_error;
};

struct MultiplicityMatrix {
    std::vector<std::string> g_names, h_names;
    std::vector<long> g_degrees, h_degrees;
    std::vector<std::vector<long>> entries; // entries[chi][psi] = <chi|_H, psi>_H
    int trivial_col = -1;                   // column of 1_H
    long entry(const std::string& chi, const std::string& psi) const;
};

/// entries[chi][psi] = (1/|H|) sum over H-classes |c| chi(fusion(c))
/// conj(psi(c)). Every entry must reduce to a nonnegative integer and every
/// row must satisfy sum_psi entry * deg(psi) = deg(chi); violations throw
/// IntegrityError.
MultiplicityMatrix multiplicity_matrix(const chartab::Table& tabG, const chartab::Table& tabH,
                                       const chartab::FusionMap& fusion);
MultiplicityMatrix multiplicity_matrix(const chartab::Table& tabG, const chartab::Table& tabH);

struct Witness {
    std::string kind;           // "multiplicity" | "schur" | "lemma2" | "lemma4"
    std::string chi, psi;       // multiplicity witness
    long multiplicity = 0;
    std::string class1, class2; // non-commuting H-class representatives
    std::string via;            // lemma2 parent label or lemma4 kind
    std::string to_string() const;
};

struct PairVerdict {
    long p = 0;
    std::string label;
    long order = 0;
    std::vector<std::string> generators;
    bool strong = false;
    std::string method; // "chars" | "schur" | "both" | "lemma2"
    std::optional<Witness> witness;
};

/// True iff every multiplicity is <= 1; on failure the witness points at
/// the first entry of maximal multiplicity in row-major order.
PairVerdict strong_gelfand_chars(const MultiplicityMatrix& mm);

/// True iff the trivial-psi column has all entries <= 1 (plain Gelfand).
bool gelfand_only(const MultiplicityMatrix& mm);

/// Commutativity of the Schur ring spanned by the H-class sums, checked by
/// direct convolution with early exit. h_elems are indices into g.
PairVerdict schur_ring_commutative_cayley(const matgrp::CayleyGroup& g,
                                          const std::vector<int>& h_elems);
PairVerdict schur_ring_commutative(const matgrp::Group& g, const matgrp::Group& h);

/// Combines both methods and enforces their agreement (MethodDisagreement
/// otherwise).
PairVerdict verdict_both(const chartab::Table& tabG, const chartab::Table& tabH);

struct DegreeReject {
    bool rejected = false;
    long total_degree = 0; // deg(tau) of the subgroup kind
    long bound = 0;        // p + 1, the degree the restriction must reach
};

/// Total-character rejection for the non-Borel maximal kinds; throws when
/// the kind cannot occur in PSL(2,p).
DegreeReject total_degree_reject(subgrp::MaximalKind kind, long p);

/// If (G, parent) is not strong Gelfand and h <= parent, neither is (G, h).
PairVerdict prune_by_lemma2(const PairVerdict& parent_verdict, const matgrp::Group& parent_group,
                            const matgrp::Group& h, const std::string& h_label);

/// Records the transfer (G,H) strong Gelfand <=> (G/N, H/N) strong Gelfand,
/// for N normal in G, N <= H. Validates the preconditions.
struct Lemma3Assertion {
    std::string description;
};
Lemma3Assertion lift_by_lemma3(const matgrp::Group& g, const matgrp::Group& h,
                               const matgrp::Group& n);

} // namespace sl2pairs::gelfand
