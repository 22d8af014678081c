#pragma once

#include "sl2pairs/cyclotomic.hpp"
#include "sl2pairs/matgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl2pairs::chartab {

using cyclo::CycNum;
using cyclo::Rational;

enum class Provenance { ClosedForm, Induced, RestrictedLift, Computed };
std::string provenance_name(Provenance p);

struct Character {
    std::string name;
    long degree = 0;
    Provenance provenance = Provenance::Computed;
    std::vector<CycNum> values; // indexed by table column
};

/// A character table. Columns are conjugacy classes in a fixed presentation
/// order (for the closed-form tables: the paper order, e.g. 1, -1, b, d,
/// -b, -d, a^l, f^m for SL(2,p)); col_of_class translates brute-force class
/// indices to columns.
///
/// PSL(2,p) tables are "projective": the matrices stored are representatives
/// of +-M cosets in the double cover, and col_of_class/classes refer to the
/// cover. Fusion and induction are not defined for projective tables.
struct Table {
    std::string kind; // "U", "SL2", "PSL2", or a subgroup label
    long p = 0;
    long order = 0;
    bool projective = false;
    matgrp::Group group;
    matgrp::ClassData classes;          // brute-force partition of `group`
    std::vector<int> col_of_class;      // class index -> column
    std::vector<matgrp::Mat> col_reps;  // presentation representative per column
    std::vector<long> col_sizes;
    std::vector<std::string> col_labels;
    long identity_col = -1;
    std::vector<Character> chars;

    long num_cols() const { return (long)col_reps.size(); }
    /// Column of the class containing m (non-projective tables).
    int column_of(const matgrp::Mat& m) const;
    const Character* find_char(const std::string& name) const;
    int char_index(const std::string& name) const; // -1 if absent
};

/// Wraps a brute-force class partition into table columns ordered by class
/// minimum, labelling columns by representative. Chars left empty.
Table table_skeleton(std::string kind, const matgrp::Group& g);

/// Reads off char degrees from the identity column; throws on non-integer
/// or non-positive degree.
void finalize_degrees(Table& t);

/// Character table of U(2,p) per the closed forms (p >= 5).
Table table_U(long p);

/// Character table of SL(2,p) per the closed forms (p >= 5); the last four
/// rows depend on p mod 4.
Table table_SL2(long p);

/// Character table of PSL(2,p), derived from table_SL2 by fusing classes
/// under negation and keeping the characters trivial on -1 (p >= 5).
Table table_PSL2(long p);

/// The split-metacyclic induction formula for the nonlinear characters of
/// U: values of the character induced from the linear character T_{i,k} of
/// <-1, b>, on the columns of table_U(p). Requires i != 0 mod p, k in {1,2}.
std::vector<CycNum> munkholm_induce(long p, long i, long k);

/// Class fusion: column c of the subgroup table -> column of the ambient
/// table containing that class.
struct FusionMap {
    std::vector<int> to_parent_col;
};
FusionMap fuse(const Table& parent, const Table& sub);

/// Restriction of a parent-table row to subgroup columns.
std::vector<CycNum> restrict_character(const std::vector<CycNum>& values, const FusionMap& fusion);

/// Brute-force induction data: hit_counts[g_col][h_col] = #{x in G :
/// x g x^-1 lands in that subgroup class} for the column representative g.
struct InductionData {
    std::vector<std::vector<long>> hit_counts;
    long sub_order = 0;
};
InductionData induction_data(const Table& parent, const Table& sub);

/// psi-up-G from subgroup column values, using precomputed data.
std::vector<CycNum> induce_brute(const std::vector<CycNum>& psi, const InductionData& ind,
                                 const Table& parent);
/// Convenience overload computing the data on the fly.
std::vector<CycNum> induce_brute(const std::vector<CycNum>& psi, const Table& sub,
                                 const Table& parent);

/// (1/|H|) sum over columns |c| * a(c) * conj(b(c)); nullopt if irrational.
std::optional<Rational> inner_product(const Table& tab, const std::vector<CycNum>& a,
                                      const std::vector<CycNum>& b);

struct OrthoResult {
    bool ok = true;
    std::string detail; // failure witness
};

/// First (row) and second (column) orthogonality, checked exactly.
OrthoResult verify_orthogonality(const Table& tab);

} // namespace sl2pairs::chartab
