#ifndef SEMIFLAG_ORACLE_HPP
#define SEMIFLAG_ORACLE_HPP

#include "semiflag/combinatorics.hpp"
#include "semiflag/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace semiflag {

// s-truncated series with plain rational coefficients; the numeric mirror
// of TruncatedSeries used to evaluate minors at concrete group points.
class RatSeries {
  public:
    RatSeries() : trunc_(-1) {}
    explicit RatSeries(int trunc) : trunc_(trunc), c_(static_cast<std::size_t>(trunc + 1)) {}
    static RatSeries constant(const Rat& v, int trunc);

    int trunc() const { return trunc_; }
    const Rat& coeff(int d) const;
    Rat& coeff(int d);
    bool is_zero() const;

    friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
    RatSeries operator-() const;
    RatSeries derivative(int order) const;
    // Multiplicative inverse; requires an invertible constant term.
    RatSeries inverse() const;

    bool operator==(const RatSeries& o) const;

  private:
    int trunc_;
    std::vector<Rat> c_;
};

// An exact point of SL_n[[s]] or Sp_2n[[s]], truncated at s^D.  Construction
// verifies the defining identity (det = 1, resp. M Omega M^t = Omega and
// M^t Omega M = Omega) modulo s^{D+1}.
class GroupJetPoint {
  public:
    GroupJetPoint(Alphabet a, int trunc, std::uint64_t seed,
                  std::vector<std::vector<RatSeries>> mat);

    const Alphabet& alphabet() const { return alph_; }
    int trunc() const { return trunc_; }
    std::uint64_t seed() const { return seed_; }
    const RatSeries& entry(int row, int col) const;

    // Determinant of rows I, columns 1..|I| at this point; memoized.
    // Multiset row lists with duplicates give the zero series.
    const RatSeries& minor_series(const RowSet& I) const;
    RatSeries minor_multiset_series(std::vector<int> rows) const;

    // Value of m_I^{(l)} at the point.
    Rat evaluate_generator(const RowSet& I, int l) const;
    // Value of a product of generators (I, l).
    Rat evaluate_monomial(const std::vector<std::pair<RowSet, int>>& mono) const;

  private:
    struct Cache {
        std::recursive_mutex lock;
        std::map<RowSet, RatSeries> memo;
    };
    Alphabet alph_;
    int trunc_;
    std::uint64_t seed_;
    std::vector<std::vector<RatSeries>> m_;
    std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();

    const RatSeries& minor_locked(const RowSet& I) const;
};

// Random point of SL_n[[s]]: unipotent-lower x torus x unipotent-upper with
// small random rational series entries; the torus is balanced so that the
// determinant is exactly 1 up to the truncation.
GroupJetPoint random_sl_point(int n, int trunc, std::uint64_t seed);

// Random point of Sp_2n[[s]] in the interleaved row order 1,1b,2,2b,...:
// a product of random symplectic transvections x -> x + c(s) w(v,x) v and
// paired torus blocks diag(a, a^{-1}).
GroupJetPoint random_sp_point(int n, int trunc, std::uint64_t seed);

// The symplectic Gram matrix in the interleaved order: w(e_{2p-1}, e_{2p}) = 1.
std::vector<std::vector<Rat>> symplectic_form(int n);

// Uniformly random "generic" matrix (no group constraint); the negative
// control for symplectic identities.
GroupJetPoint random_generic_point(Alphabet a, int trunc, std::uint64_t seed);

} // namespace semiflag

#endif
