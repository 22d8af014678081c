#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sl2pairs::matgrp {

/// 2x2 matrix over F_p, entries reduced to [0, p). Row-major. The packed id
/// orders matrices lexicographically on (e0, e1, e2, e3), which is the total
/// order used for canonical class representatives everywhere.
struct Mat {
    long p = 0;
    std::array<long, 4> e{1, 0, 0, 1};

    static Mat identity(long p) { return Mat{p, {1 % p, 0, 0, 1 % p}}; }
    static Mat make(long p, long a, long b, long c, long d);

    long det() const { return ((e[0] * e[3] - e[1] * e[2]) % p + p) % p; }
    long trace() const { return (e[0] + e[3]) % p; }
    Mat operator*(const Mat& o) const;
    Mat inverse() const; // requires det = 1
    Mat neg() const;     // -M
    bool is_identity() const { return e[0] == 1 % p && e[1] == 0 && e[2] == 0 && e[3] == 1 % p; }

    uint32_t id() const {
        return (uint32_t)(((e[0] * p + e[1]) * p + e[2]) * p + e[3]);
    }
    static Mat from_id(long p, uint32_t id);

    friend bool operator==(const Mat& a, const Mat& b) { return a.p == b.p && a.e == b.e; }
    friend bool operator<(const Mat& a, const Mat& b) { return a.e < b.e; }

    std::string to_string() const; // "[[a,b],[c,d]]"
};

/// "[[a,b],[c,d]]" with entries reduced mod p; whitespace tolerated.
Mat parse_mat(long p, const std::string& s);

long element_order(const Mat& m);
Mat mat_pow(const Mat& m, long k); // k >= 0

/// Fully enumerated finite matrix group: sorted element ids plus the
/// generating set used for orbit walks. Immutable after construction.
class Group {
public:
    long p = 0;
    std::vector<uint32_t> ids;  // sorted ascending = lex order on matrices
    std::vector<Mat> gens;

    long order() const { return (long)ids.size(); }
    bool contains(const Mat& m) const { return contains_id(m.id()); }
    bool contains_id(uint32_t id) const;
    long index_of_id(uint32_t id) const; // -1 if absent
    Mat element(long i) const { return Mat::from_id(p, ids[i]); }
    std::vector<Mat> generator_list() const { return gens; }
};

/// SL(2,p), fully enumerated. Rejects non-prime p and p beyond the cap.
Group sl2(long p, long max_p = 31);

/// The upper-triangular (Borel) subgroup U(2,p) of SL(2,p).
Group upper_triangular(long p);

struct StandardGenerators {
    Mat a;      // diag(lambda, lambda^{-1}), lambda the smallest primitive root
    Mat b;      // [[1,1],[0,1]]
    Mat d;      // [[1,t],[0,1]], t the smallest non-residue
    Mat minus1; // -identity
    long lambda;
    long t;
};
StandardGenerators standard_generators(long p);

/// First element of multiplicative order exactly p+1 in the lex scan of
/// SL(2,p).
Mat nonsplit_element(const Group& slgroup);

/// Closure of a generating set under multiplication. All generators must
/// have determinant 1.
Group generate(long p, const std::vector<Mat>& gens);

/// Conjugacy partition. Classes are sorted by their minimal element; the
/// representative of a class is that minimal element.
struct ClassData {
    std::vector<uint32_t> rep_ids;
    std::vector<long> sizes;
    std::vector<int> class_of; // indexed like Group::ids
    long num_classes() const { return (long)rep_ids.size(); }
    Mat rep(long p, long c) const { return Mat::from_id(p, rep_ids[c]); }
    int class_of_mat(const Group& g, const Mat& m) const;
};

ClassData conjugacy_classes(const Group& g);

/// Orbits of G under conjugation by H only (the H-classes g^H).
/// H must be a subgroup of G.
ClassData h_classes(const Group& g, const Group& h);

bool subgroup_of(const Group& g, const Group& h);
bool is_conjugate_subgroup(const Group& g, const Group& h1, const Group& h2);

/// Abstract finite group as a multiplication table; used where quotient
/// groups (no matrix model) have to be handled, e.g. PSL(2,p).
struct CayleyGroup {
    long n = 0;
    std::vector<int> mul; // n*n, mul[i*n+j]
    std::vector<int> inv;
    std::vector<std::string> elem_names;
    int times(int i, int j) const { return mul[(size_t)i * n + j]; }
};

/// Cayley form of an enumerated matrix group (index = position in ids).
CayleyGroup to_cayley(const Group& g);

/// Quotient of G by its central subgroup {1, -1}. Element i of the result
/// is the coset of the i-th canonical coset representative (the lex-smaller
/// of {m, -m}). Also returns the projection map from G indices.
struct CentralQuotient {
    CayleyGroup group;
    std::vector<int> proj; // index in G -> index in quotient
};
CentralQuotient quotient_by_center(const Group& g);

/// Image of subgroup H <= G inside the quotient, as sorted index set.
std::vector<int> quotient_image(const CentralQuotient& q, const Group& g, const Group& h);

} // namespace sl2pairs::matgrp
