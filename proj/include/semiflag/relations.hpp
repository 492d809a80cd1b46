#ifndef SEMIFLAG_RELATIONS_HPP
#define SEMIFLAG_RELATIONS_HPP

#include "semiflag/combinatorics.hpp"
#include "semiflag/linalg.hpp"
#include "semiflag/minors.hpp"
#include "semiflag/oracle.hpp"
#include "semiflag/rational.hpp"

#include <string>
#include <vector>

namespace semiflag {

// A formal quadratic expression sum_a c_a * d^{k_a} m_{L_a}(s) * m_{R_a}(s).
// Left/right factors may be multisets (repeated entries); such terms stand
// for the zero minor and evaluate to nothing, but are kept in the record.
struct RelationRecord {
    struct Term {
        Rat coeff;
        int deriv;
        std::vector<int> left;  // sorted, possibly with repeats
        std::vector<int> right; // empty right factor means the constant 1
    };
    std::vector<Term> terms;
    RowSet lhs, rhs; // the source pair (I, J), canonicalized
    int kprime = 0;
    std::string family; // "finite" | "semiinf" | "sympsum"
};

// The classical quadratic exchange relation of an incomparable pair.  The
// pair is canonicalized; the (I,J) term carries coefficient +1 and is the
// strictly greatest term under compare_products.
RelationRecord finite_pluecker(RowSet I, RowSet J, const Alphabet& a);

// The derivative exchange relation over the snake, for 0 <= kp < k(I,J).
// Throws for kp >= k(I,J): the sum does not vanish there.  The unchecked
// variant builds the same formal sum for any kp >= 0 (the sanity probe that
// k(I,J) really is the last vanishing order).
RelationRecord semiinf_pluecker(RowSet I, RowSet J, int kp, const Alphabet& a);
RelationRecord semiinf_pluecker_unchecked(RowSet I, RowSet J, int kp, const Alphabet& a);

// The n-term symplectic sum m_{I u {1,1b}}(s) + ... + m_{I u {n,nb}}(s),
// zero on Sp_2n jet points but not in the free ring.  Terms with l or lb
// already in I are zero minors and are kept as multiset entries.
RelationRecord symplectic_sum_relation(const RowSet& I, const Alphabet& a);
RelationRecord symplectic_sum_relation_empty(const Alphabet& a); // I = {}

// True iff the full jet expansion vanishes at every s-power <= trunc.
bool verify_relation_symbolic(const RelationRecord& rel, const Alphabet& a, int trunc);

// Exact evaluation at group jet points; true iff the relation vanishes at
// every point (up to the truncation available after derivatives).
bool verify_relation_numeric(const RelationRecord& rel, const std::vector<GroupJetPoint>& pts);

// One linear combination of allowed minors, exact coefficients.
using MinorCombination = std::vector<std::pair<Rat, RowSet>>;

// De Concini straightening: expresses a forbidden minor through allowed
// ones via the inclusion-matrix systems of the symplectic sums, recursing
// on forbidden outputs.  Outputs are strictly greater than J in the
// dominance order, which bounds the recursion.
MinorCombination straighten_forbidden(const RowSet& J, const Alphabet& a);

// The inclusion matrix of the (2s+1)-element set: rows are s-subsets,
// columns (s+1)-subsets, entry 1 iff row contained in column.
RatMatrix inclusion_matrix(int s);

// Rewrites a classical incomparable product as a combination of products of
// comparable pairs, repeatedly exchanging the leading incomparable pair.
struct PairCombination {
    struct Entry {
        Rat coeff;
        RowSet left, right;
    };
    std::vector<Entry> entries;
};
PairCombination straighten_product(RowSet I, RowSet J, const Alphabet& a);

// The ordered pair term (deriv, left, right) that compare_products ranks
// greatest among the record's nonzero terms.
std::size_t leading_term_index(const RelationRecord& rel, const Alphabet& a);

std::string relation_to_json(const RelationRecord& rel, const Alphabet& a);

} // namespace semiflag

#endif
