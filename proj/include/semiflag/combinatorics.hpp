#ifndef SEMIFLAG_COMBINATORICS_HPP
#define SEMIFLAG_COMBINATORICS_HPP

#include <string>
#include <vector>

namespace semiflag {

enum class Kind { A, C };

// Row alphabets.  Type A(n): 1 < 2 < ... < n.  Type C(n): 1 < 1b < 2 < 2b <
// ... < n < nb, stored internally through the monotone embedding p -> 2p-1,
// pb -> 2p, so every element is an integer in 1..2n and comparisons are
// plain integer comparisons in both types.
struct Alphabet {
    Kind kind;
    int n;

    int size() const { return kind == Kind::A ? n : 2 * n; }
    // Largest admissible subset: proper in type A, at most n in type C.
    int max_subset() const { return kind == Kind::A ? n - 1 : n; }
    // Columns available to minors (the matrix is size() x size(), but only
    // the first max_subset() columns are ever used).
    int columns() const { return max_subset(); }

    std::string element_token(int v) const;
    // Parses one element token ("3", "2b"); returns 0 on failure.
    int parse_element(const std::string& token) const;
};

// A strictly increasing duplicate-free row index set over an alphabet.
using RowSet = std::vector<int>;

void validate_rowset(const RowSet& I, const Alphabet& a);

std::string format_rowset(const RowSet& I, const Alphabet& a);

// Parses "1,2b,3" (canonical) or the compact "12b3" form usable when every
// element is a single digit.  errpos reports a 0-based offset into the text
// for malformed input.
RowSet parse_rowset(const std::string& text, const Alphabet& a);

enum class SubsetRel { LessEq, GreaterEq, Equal, Incomparable };

// The subset partial order: I <= J iff |I| >= |J| and i_s <= j_s for every
// position s of J.
SubsetRel subset_compare(const RowSet& I, const RowSet& J);

inline bool subsets_comparable(const RowSet& I, const RowSet& J) {
    return subset_compare(I, J) != SubsetRel::Incomparable;
}

// Keeps {i_l, ..., i_|I|}; empty once l exceeds |I|.  truncate(I, l) is the
// (l-1)-st power of the operator deleting the smallest element.
RowSet truncate_set(const RowSet& I, int l);

enum class Ordering { LT, EQ, GT };

// A product of minors, identified by its factor multiset.  Factors are kept
// sorted weakly decreasing under the single-minor order.
struct ProductIndex {
    std::vector<RowSet> factors;
};

ProductIndex make_product(std::vector<RowSet> factors, const Alphabet& a);

// The multi-stage order on products of minors; jet indices are invisible,
// so products equal as factor multisets compare EQ.
//
// Stages: (1) factor count; (2) shape tuples, lexicographic; (3) element
// multiplicities, scanned from the smallest element up, more wins; (4) the
// truncation stage at the deepest level where the truncated factor
// multisets still differ: first multiplicities of that level scanned from
// the largest element down, then the counts p_{a,U} scanned with a
// ascending and U descending in the set order below.
Ordering compare_products(const ProductIndex& P, const ProductIndex& Q, const Alphabet& a);

// Restriction of compare_products to single factors; a total order.
Ordering compare_single(const RowSet& I, const RowSet& J, const Alphabet& a);

// The set order used inside the truncation stage: lexicographic on the
// increasing sequences, a proper prefix is larger, the empty set largest.
Ordering set_order_cmp(const RowSet& U, const RowSet& V);

// Dominance order on equal-size sets: scan elements from the top; the first
// set containing the highest element of the symmetric difference is the
// greater.  Sizes compare first (longer greater).  This is the order in
// which forbidden minors straighten strictly upward.
Ordering dominance_compare(const RowSet& I, const RowSet& J);

// Canonical orientation for a pair: |I| >= |J|, and for equal sizes the
// highest differing coordinate satisfies i < j.  Returns true if the inputs
// were swapped.
bool canonicalize_pair(RowSet& I, RowSet& J);

// The snake of an (unordered) pair: the strictly decreasing interleaving of
// the tails of I and J, each entry tagged with its origin.  k = |S| - |I|
// counts the direction changes; k = 0 exactly for comparable pairs.
struct SnakeData {
    struct Entry {
        int value;
        bool from_lhs; // origin I (after canonicalization)
    };
    std::vector<Entry> seq;
    int k = 0;

    std::vector<int> values() const;
    int lhs_count() const;
};

SnakeData snake(RowSet I, RowSet J);

inline int snake_k(const RowSet& I, const RowSet& J) { return snake(I, J).k; }

// ---- type C ----------------------------------------------------------

// Allowed iff the embedded values satisfy v_p >= 2p-1 for every position.
bool is_allowed(const RowSet& J, const Alphabet& a);

// The two textual criteria, kept as cross-checks: a position b and a number
// a < b with j_b = ab; and a number b with j_b = b, j_{b+1} = bb.
bool is_forbidden_literal(const RowSet& J);
bool is_forbidden_adjacent_pair(const RowSet& J);

long long binomial(int n, int k);

// binom(2n, l) - binom(2n, l-2) for l >= 2; 2n for l = 1; 1 for l = 0.
long long allowed_count_formula(int n, int l);
long long allowed_count_enumerated(int n, int l);

// All admissible row sets of one size (all of them when size = 0 stands for
// "every size"): type A all subsets, type C only if allowed_only.
std::vector<RowSet> all_rowsets(const Alphabet& a, int size, bool allowed_only = false);

} // namespace semiflag

#endif
