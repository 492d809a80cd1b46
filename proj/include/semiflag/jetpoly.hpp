#ifndef SEMIFLAG_JETPOLY_HPP
#define SEMIFLAG_JETPOLY_HPP

#include "semiflag/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace semiflag {

// A jet variable z_{uv}^{(k)}: row u, column v of the generic matrix, k-th
// s-coefficient.  Packed into one integer so that the natural integer order
// is (col, row, jet) lexicographic: exactly the variable order of the
// degeneration, with the jet index as the least significant tie-break.
struct JetVar {
    int row;
    int col;
    int jet;
};

using VarId = std::uint32_t;

inline VarId var_id(int row, int col, int jet) {
    return (static_cast<VarId>(col) << 20) | (static_cast<VarId>(row) << 10) |
           static_cast<VarId>(jet);
}
inline JetVar var_of_id(VarId id) {
    return JetVar{static_cast<int>((id >> 10) & 0x3ff),
                  static_cast<int>(id >> 20), static_cast<int>(id & 0x3ff)};
}
// Same variable with the jet index masked out; two ids with equal masks are
// equivalent under the degeneration order.
inline VarId jet_blind(VarId id) { return id & ~static_cast<VarId>(0x3ff); }

// A monomial is the sorted (ascending) list of its variables, with
// repetition for powers.  Multiplication is a multiset merge.
using Monomial = std::vector<VarId>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);

// Total monomial order: degree first, then lexicographic on the
// descending-sorted variable lists.  Restricting attention to the jet-blind
// masks gives the degeneration preorder; the jet bits are the built-in
// refinement that makes leading terms unique.
int monomial_cmp(const Monomial& a, const Monomial& b);

// Ditto with jets erased; 0 means "same class", not "same monomial".
int monomial_cmp_jet_blind(const Monomial& a, const Monomial& b);

// Sparse exact polynomial in jet variables.  Terms are kept sorted with the
// leading monomial first; no zero coefficients are stored.
class JetPolynomial {
  public:
    struct Term {
        Monomial mon;
        Rat coeff;
    };

    JetPolynomial() = default;
    static JetPolynomial zero() { return {}; }
    static JetPolynomial constant(const Rat& c);
    static JetPolynomial variable(VarId v);
    static JetPolynomial term(Monomial m, Rat c);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    JetPolynomial operator-() const;
    JetPolynomial& operator+=(const JetPolynomial& o);
    JetPolynomial& operator-=(const JetPolynomial& o);
    friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial& b) {
        a += b;
        return a;
    }
    friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial& b) {
        a -= b;
        return a;
    }
    friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);
    JetPolynomial& operator*=(const JetPolynomial& o) {
        *this = *this * o;
        return *this;
    }
    JetPolynomial scaled(const Rat& c) const;

    bool operator==(const JetPolynomial& o) const;

    // The single greatest term.  Throws on the zero polynomial.
    const Term& leading_term() const;
    // Sum of all terms in the greatest jet-blind class.
    JetPolynomial leading_part() const;

    // Ring homomorphism to Q.  Every variable occurring must be assigned.
    Rat evaluate(const std::map<VarId, Rat>& point) const;

    // terms must be sorted descending, nonzero, distinct; used by the
    // arithmetic kernels.
    static JetPolynomial from_sorted(std::vector<Term> terms);

  private:
    std::vector<Term> terms_;
};

// Degree-bounded formal series in s with JetPolynomial coefficients.
// coeff(d) is exact for every d <= trunc(); higher powers are unknown.
class TruncatedSeries {
  public:
    TruncatedSeries() : trunc_(-1) {}
    explicit TruncatedSeries(int trunc)
        : trunc_(trunc), coeffs_(static_cast<std::size_t>(trunc + 1)) {}

    static TruncatedSeries constant(const Rat& c, int trunc);
    static TruncatedSeries monomial_in_s(JetPolynomial p, int power, int trunc);

    int trunc() const { return trunc_; }
    const JetPolynomial& coeff(int d) const;
    JetPolynomial& coeff(int d);
    bool is_zero() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Rat& c) const;

    bool operator==(const TruncatedSeries& o) const;

  private:
    int trunc_;
    std::vector<JetPolynomial> coeffs_;
};

// Product truncated at min(f.trunc, g.trunc, bound).
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g, int bound);

// d^order/ds^order; the truncation bound drops by order.
TruncatedSeries series_derivative(const TruncatedSeries& f, int order);

// Default bound used by the command line tools; every library call still
// takes the bound explicitly.
inline constexpr int kDefaultTrunc = 4;

} // namespace semiflag

#endif
