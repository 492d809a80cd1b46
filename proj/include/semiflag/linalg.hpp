#ifndef SEMIFLAG_LINALG_HPP
#define SEMIFLAG_LINALG_HPP

#include "semiflag/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace semiflag {

// Dense exact matrices, row-major.
using RatMatrix = std::vector<std::vector<Rat>>;

// Exact rank.  Rows are cleared of denominators and reduced by fraction-free
// (Bareiss) elimination over the integers.
int exact_rank(RatMatrix m);

// Incremental exact row reduction; the rank is available after every added
// row, which gives all steps of a filtration in one pass.  Pivots are
// eliminated in ascending column order: a reduction step only touches
// columns to the right of its pivot, so earlier pivots stay cleared.
class RowEchelon {
  public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    void add_row(std::vector<Rat> v);
    long long rank() const { return static_cast<long long>(echelon_.size()); }

  private:
    std::size_t cols_;
    std::map<std::size_t, std::vector<Rat>> echelon_;
};

// Determinant of a square matrix, exact.
Rat exact_det(RatMatrix m);

// Solves the square system A x = b exactly; throws std::logic_error if A is
// singular.
std::vector<Rat> solve_square(RatMatrix a, std::vector<Rat> b);

// Inverse of a square matrix; throws on singular input.
RatMatrix invert(RatMatrix a);

} // namespace semiflag

#endif
