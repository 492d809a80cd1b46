#ifndef SEMIFLAG_MINORS_HPP
#define SEMIFLAG_MINORS_HPP

#include "semiflag/combinatorics.hpp"
#include "semiflag/jetpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace semiflag {

// The generic jet matrix of an alphabet: entry (u,v) is the series whose
// s^k-coefficient is the single fresh variable z_{uv}^{(k)}.  Minors only
// ever read the first max_subset() columns, so the coefficients of every
// minor live in the free ring on those columns.
class GenericJetMatrix {
  public:
    GenericJetMatrix(Alphabet a, int trunc);

    const Alphabet& alphabet() const { return alph_; }
    int trunc() const { return trunc_; }

    TruncatedSeries entry(int row, int col) const;

    // Determinant of rows I against columns 1..|I|.  Cofactor expansion
    // with memoization over column prefixes; subminors are shared between
    // all index sets.  A multiset argument (repeated rows) gives the zero
    // series.
    const TruncatedSeries& minor_series(const RowSet& I) const;
    TruncatedSeries minor_multiset_series(std::vector<int> rows) const;

    // The diagonal product z_{i_1 1}(s) ... z_{i_k k}(s): the leading part
    // of minor_series(I) under the degeneration order.
    TruncatedSeries leading_series(const RowSet& I) const;

  private:
    struct Cache {
        std::recursive_mutex lock;
        std::map<RowSet, TruncatedSeries> memo;
    };
    Alphabet alph_;
    int trunc_;
    // Synchronized cache: concurrent callers observe pure-function
    // semantics.  Map nodes are stable, so returned references outlive the
    // lock.
    std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();

    const TruncatedSeries& minor_locked(const RowSet& I) const;
};

struct MinorSeries {
    RowSet index;
    TruncatedSeries series;
};

MinorSeries make_minor(const RowSet& I, const GenericJetMatrix& M);

// Leading monomial (single greatest term) and leading part (greatest
// jet-blind class) of a nonzero polynomial.
inline JetPolynomial::Term leading_monomial(const JetPolynomial& p) { return p.leading_term(); }
inline JetPolynomial leading_part(const JetPolynomial& p) { return p.leading_part(); }

// A product of minors with jet exponents attached: factors (I, l) standing
// for m_I^{(l)}.
using JetProduct = std::vector<std::pair<RowSet, int>>;

// Expanded product of the toric leading terms d_I^{(l)} of a JetProduct.
JetPolynomial leading_product_poly(const JetProduct& prod, const GenericJetMatrix& M);

// True iff the leading-term polynomials of the given products are pairwise
// distinct.  Each product must consist of pairwise comparable factors
// (allowed ones in type C).
bool distinct_leading_check(const std::vector<JetProduct>& products, const GenericJetMatrix& M);

} // namespace semiflag

#endif
