#ifndef SEMIFLAG_RATIONAL_HPP
#define SEMIFLAG_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace semiflag {

// Exact arbitrary-precision rationals. No floating point anywhere in the
// core: identities must vanish exactly, not approximately.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "p" or "p/q", canonical form.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s);

} // namespace semiflag

#endif
