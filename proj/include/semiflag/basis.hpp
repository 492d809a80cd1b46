#ifndef SEMIFLAG_BASIS_HPP
#define SEMIFLAG_BASIS_HPP

#include "semiflag/characters.hpp"
#include "semiflag/minors.hpp"
#include "semiflag/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace semiflag {

// A product prod_I m_I^{(l_{1,I})} ... m_I^{(l_{r_I,I})} with weakly
// increasing exponents per index set.
struct BasisMonomial {
    JetProduct factors; // sorted by (index set, exponent)

    int jet_degree() const;
};

// The monomials of multidegree r whose minimal exponent per index set
// clears the offset sum_{J < I} k(I,J) r_J, up to total jet degree dmax.
std::vector<BasisMonomial> enumerate_basis(const WeightVectorR& r, int dmax,
                                           OrderChoice order = OrderChoice::Standard);

// Same per-degree counts as a vector indexed by degree.
std::vector<long long> basis_counts(const WeightVectorR& r, int dmax,
                                    OrderChoice order = OrderChoice::Standard);

// All degree-d products of generators with multidegree r (no offset): the
// spanning set whose rank the presentation check measures.
std::vector<BasisMonomial> all_products(const WeightVectorR& r, int degree);

enum class VerifyMode { Symbolic, Numeric };

struct PresentationReport {
    struct Row {
        int degree;
        long long basis_count;
        long long char_coeff;
        long long rank;
        std::string verdict; // "ok" | "mismatch" | "engine-bug"
    };
    std::vector<Row> rows;
    bool ok = true;
    int points_used = 0;
};

// Multidegrees are not a grading of the algebra itself; they grade its
// degeneration.  The certified quantity is therefore the rank of the
// multidegree-r component of the associated graded: within the weight
// class of r (same factor-size multiset and same torus weight),
//
//   rank(products of all r' <= r) - rank(products of r' < r)
//
// under the product order on multidegrees.  For each jet degree d <= dmax
// this graded rank is compared with the enumerated basis count and the
// character coefficient; equality on every row of every class member
// certifies that the quadratic relations span all relations in that degree
// and that the proposed monomials are a basis.  Ranks are exact: symbolic
// coefficient matrices in type A, evaluation at random symplectic jet
// points in type C.
PresentationReport verify_presentation(const WeightVectorR& r, int dmax, VerifyMode mode,
                                       int sample_points = 0, std::uint64_t seed = 1);

// The whole weight class at once (one filtration pass); reports are listed
// in descending multidegree order.
std::vector<std::pair<WeightVectorR, PresentationReport>>
verify_presentation_class(const WeightVectorR& r, int dmax, VerifyMode mode,
                          int sample_points = 0, std::uint64_t seed = 1);

// All multidegrees with the same factor-size multiset and torus weight as
// r (allowed index sets only in type C), sorted descending under the
// product order.
std::vector<WeightVectorR> weight_class(const WeightVectorR& r);

// Pairwise distinctness of the toric leading data d_{I}^{(l)} products of
// the enumerated basis monomials.
bool leading_monomial_basis_check(const WeightVectorR& r, int dmax,
                                  OrderChoice order = OrderChoice::Standard);

std::string presentation_report_to_json(const WeightVectorR& r, const PresentationReport& rep);

} // namespace semiflag

#endif
