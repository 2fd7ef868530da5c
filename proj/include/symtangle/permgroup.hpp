#pragma once

// Permutations of qubit labels, the integer group algebra of S_n, Young
// diagrams and standard tableaux, and Young symmetrizers.
//
// Labels 0..n-1 are written a, b, c, ... . A permutation stores
// mapping[i] = image of label i; the cycle (abc) sends a->b, b->c, c->a.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symtangle {

inline constexpr int kMaxLabels = 8;

char label_char(int label);
int label_index(char c);

class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> mapping);

    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    /// Parses cycle text such as "e", "(ab)", "(cba)", "(ab)(cd)".
    static Permutation parse(const std::string &text, int n);

    int n() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int> &mapping() const { return map_; }

    Permutation inverse() const;
    bool is_identity() const;
    int support_size() const;
    /// +1 for even, -1 for odd.
    int sign() const;
    /// Canonical cycle text: disjoint cycles ordered by smallest label, each
    /// started at its smallest label, except that a cycle of length >= 3 whose
    /// remaining labels strictly decrease is started at its largest label
    /// ("(cba)" rather than "(acb)"). The identity is "e".
    std::string str() const;

    auto operator<=>(const Permutation &) const = default;

   private:
    std::vector<int> map_;
};

/// (p o q)(i) = p(q(i)): q acts first.
Permutation compose(const Permutation &p, const Permutation &q);

/// All n! permutations in lexicographic order of their mappings.
std::vector<Permutation> group_elements(int n);

/// Formal integer combination of permutations of the same n.
class GroupAlgebraElement {
   public:
    explicit GroupAlgebraElement(int n = 0) : n_(n) {}

    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement of(const Permutation &p, std::int64_t coefficient = 1);
    /// Parses text such as "e + (ab) - (ac) - 2(cba)".
    static GroupAlgebraElement parse(const std::string &text, int n);

    int n() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, std::int64_t> &terms() const { return terms_; }
    std::int64_t coefficient(const Permutation &p) const;

    void add(const Permutation &p, std::int64_t coefficient);
    GroupAlgebraElement operator+(const GroupAlgebraElement &o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement &o) const;
    GroupAlgebraElement scaled(std::int64_t k) const;
    bool operator==(const GroupAlgebraElement &o) const = default;

    /// Terms ordered by (support size, cycle text).
    std::vector<std::pair<Permutation, std::int64_t>> ordered_terms() const;
    std::string str() const;

   private:
    int n_;
    std::map<Permutation, std::int64_t> terms_;
};

GroupAlgebraElement algebra_product(const GroupAlgebraElement &x, const GroupAlgebraElement &y);

/// Sum over all permutations of `labels` (fixing the rest), each weighted by
/// its sign when `antisymmetric`.
GroupAlgebraElement symmetrizer(int n, const std::vector<int> &labels, bool antisymmetric);

/// If y = c * x for a rational c, returns c as (numerator, denominator).
std::optional<std::pair<std::int64_t, std::int64_t>> proportionality(const GroupAlgebraElement &x,
                                                                     const GroupAlgebraElement &y);

struct YoungDiagram {
    std::vector<int> row_lengths;

    int n() const;
    int rows() const { return static_cast<int>(row_lengths.size()); }
    bool operator==(const YoungDiagram &) const = default;
};

/// Partitions of n: decreasing first row, then lexicographically decreasing.
std::vector<YoungDiagram> partitions(int n);

struct YoungTableau {
    YoungDiagram diagram;
    std::vector<std::vector<int>> rows;

    int n() const { return diagram.n(); }
    std::vector<std::vector<int>> columns() const;
    std::vector<int> reading_word() const;
    bool is_standard() const;
    /// Rows separated by '/', e.g. "ab/cd".
    std::string str() const;
    bool operator==(const YoungTableau &) const = default;
};

/// Standard tableaux of every diagram of n, optionally limited to diagrams
/// with at most max_rows rows. Diagrams follow partitions(); tableaux within a
/// diagram follow their row-reading word lexicographically.
std::vector<YoungTableau> standard_tableaux(int n, std::optional<int> max_rows = std::nullopt);

/// Row symmetrizers times column antisymmetrizers (rows on the left).
GroupAlgebraElement young_idempotent(const YoungTableau &t);

}  // namespace symtangle
