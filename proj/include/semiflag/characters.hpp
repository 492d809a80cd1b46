#ifndef SEMIFLAG_CHARACTERS_HPP
#define SEMIFLAG_CHARACTERS_HPP

#include "semiflag/combinatorics.hpp"

#include <map>
#include <string>
#include <vector>

namespace semiflag {

// Truncated integer series in q.
class QSeries {
  public:
    QSeries() : qmax_(-1) {}
    explicit QSeries(int qmax) : qmax_(qmax), c_(static_cast<std::size_t>(qmax + 1), 0) {}
    static QSeries one(int qmax);

    int qmax() const { return qmax_; }
    long long coeff(int d) const;
    long long& coeff(int d);

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries shifted(int power) const; // multiply by q^power

    bool operator==(const QSeries& o) const;
    // Largest power with a nonzero coefficient, or -1.
    int top_power() const;
    long long value_at_one() const;

  private:
    int qmax_;
    std::vector<long long> c_;
};

// 1 / prod_{i=1..r} (1 - q^i): partitions into at most r parts.
QSeries pochhammer_inv(int r, int qmax);
// prod_{i=1..r} (1 - q^i) as a polynomial.
QSeries pochhammer(int r, int qmax);
// (q)_lambda = prod_k (q)_{lambda_k}.
QSeries pochhammer_lambda(const std::vector<int>& lambda, int qmax);

// Multiplicity vector r = (r_I), the multidegree of a component.
struct WeightVectorR {
    Alphabet alph;
    std::map<RowSet, int> r;

    int total() const;
};

WeightVectorR make_weight_vector(Alphabet a, std::map<RowSet, int> r);

// Linear orders on single row sets usable for the offset/exponent sums; the
// results never depend on the choice, which the tests recompute.
enum class OrderChoice { Standard, Reversed, Dominance };

bool single_less(const RowSet& I, const RowSet& J, const Alphabet& a, OrderChoice o);

// q^{sum_{I<J} k(I,J) r_I r_J} / prod_I (q)_{r_I}, truncated.
QSeries component_character(const WeightVectorR& r, int qmax,
                            OrderChoice order = OrderChoice::Standard);

// Torus weights in epsilon coordinates (length n); barred letters
// contribute negatively in type C.
using WeightKey = std::vector<int>;
WeightKey rowset_weight(const RowSet& I, const Alphabet& a);

struct WeightedQSeries {
    std::map<WeightKey, QSeries> w;

    QSeries specialize() const; // all torus weights -> 1
};

// Character of the global Weyl module of highest weight lambda (fundamental
// coordinates), as a sum of component characters over all r with
// sum_{|I|=p} r_I = lambda_p.
WeightedQSeries weyl_character(const Alphabet& a, const std::vector<int>& lambda, int qmax,
                               OrderChoice order = OrderChoice::Standard);

// (q)_lambda times the global character.  Within the truncation window this
// must be a nonnegative polynomial; if the window is too small to certify
// that, the status says so explicitly.
struct LocalCharacter {
    enum class Status { Polynomial, Inconclusive };
    WeightedQSeries series;
    Status status = Status::Inconclusive;
    long long dimension = -1; // q -> 1 value; meaningful when Polynomial
};

LocalCharacter local_weyl_character(const Alphabet& a, const std::vector<int>& lambda, int qmax,
                                    OrderChoice order = OrderChoice::Standard);

std::string weighted_series_to_csv(const WeightedQSeries& s);
std::string weighted_series_to_json(const WeightedQSeries& s);

void validate_lambda(const Alphabet& a, const std::vector<int>& lambda);

} // namespace semiflag

#endif
