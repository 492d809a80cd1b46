#include "semiflag/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semiflag {

std::string Alphabet::element_token(int v) const {
    if (kind == Kind::A)
        return std::to_string(v);
    int p = (v + 1) / 2;
    return (v % 2 == 1) ? std::to_string(p) : std::to_string(p) + "b";
}

int Alphabet::parse_element(const std::string& token) const {
    if (token.empty())
        return 0;
    bool barred = token.back() == 'b';
    std::string digits = barred ? token.substr(0, token.size() - 1) : token;
    if (digits.empty())
        return 0;
    for (char c : digits)
        if (c < '0' || c > '9')
            return 0;
    int p = 0;
    for (char c : digits) {
        p = p * 10 + (c - '0');
        if (p > 1000)
            return 0;
    }
    if (p < 1)
        return 0;
    if (kind == Kind::A) {
        if (barred || p > n)
            return 0;
        return p;
    }
    if (p > n)
        return 0;
    return barred ? 2 * p : 2 * p - 1;
}

void validate_rowset(const RowSet& I, const Alphabet& a) {
    if (I.empty())
        throw std::invalid_argument("row set must be nonempty");
    if (static_cast<int>(I.size()) > a.max_subset())
        throw std::invalid_argument("row set too large for the alphabet");
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (I[i] < 1 || I[i] > a.size())
            throw std::invalid_argument("row set element out of range");
        if (i > 0 && I[i] <= I[i - 1])
            throw std::invalid_argument("row set must be strictly increasing");
    }
}

std::string format_rowset(const RowSet& I, const Alphabet& a) {
    std::string out;
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i)
            out += ',';
        out += a.element_token(I[i]);
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& what) {
    throw std::invalid_argument("bad subset '" + text + "' at position " +
                                std::to_string(pos) + ": " + what);
}

} // namespace

RowSet parse_rowset(const std::string& text, const Alphabet& a) {
    RowSet out;
    if (text.empty())
        parse_fail(text, 0, "empty subset");
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::size_t end = comma == std::string::npos ? text.size() : comma;
            std::string token = text.substr(pos, end - pos);
            int v = a.parse_element(token);
            if (v == 0)
                parse_fail(text, pos, "unknown element '" + token + "'");
            out.push_back(v);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
    } else {
        // Compact single-digit form, e.g. "1268" or "12b".
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c < '0' || c > '9')
                parse_fail(text, i, "expected a digit");
            std::string token(1, c);
            if (i + 1 < text.size() && text[i + 1] == 'b') {
                token += 'b';
                ++i;
            }
            int v = a.parse_element(token);
            if (v == 0)
                parse_fail(text, i, "unknown element '" + token + "'");
            out.push_back(v);
            ++i;
        }
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1])
            parse_fail(text, 0, "repeated element");
    validate_rowset(out, a);
    return out;
}

SubsetRel subset_compare(const RowSet& I, const RowSet& J) {
    auto leq = [](const RowSet& X, const RowSet& Y) {
        if (X.size() < Y.size())
            return false;
        for (std::size_t s = 0; s < Y.size(); ++s)
            if (X[s] > Y[s])
                return false;
        return true;
    };
    bool ij = leq(I, J), ji = leq(J, I);
    if (ij && ji)
        return SubsetRel::Equal;
    if (ij)
        return SubsetRel::LessEq;
    if (ji)
        return SubsetRel::GreaterEq;
    return SubsetRel::Incomparable;
}

RowSet truncate_set(const RowSet& I, int l) {
    if (l < 1)
        throw std::invalid_argument("truncation level must be >= 1");
    if (l > static_cast<int>(I.size()))
        return {};
    return RowSet(I.begin() + (l - 1), I.end());
}

Ordering set_order_cmp(const RowSet& U, const RowSet& V) {
    std::size_t m = std::min(U.size(), V.size());
    for (std::size_t i = 0; i < m; ++i)
        if (U[i] != V[i])
            return U[i] < V[i] ? Ordering::LT : Ordering::GT;
    if (U.size() == V.size())
        return Ordering::EQ;
    // One is a proper prefix of the other; the longer set is the smaller
    // one, so in particular the empty set is the largest.
    return U.size() > V.size() ? Ordering::LT : Ordering::GT;
}

namespace {

bool rowset_lt_canonical(const RowSet& x, const RowSet& y) {
    if (x.size() != y.size())
        return x.size() < y.size();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::vector<RowSet> truncate_all(const std::vector<RowSet>& fs, int l) {
    std::vector<RowSet> out;
    out.reserve(fs.size());
    for (const RowSet& f : fs) {
        RowSet t = truncate_set(f, l);
        if (!t.empty())
            out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), rowset_lt_canonical);
    return out;
}

// Element multiplicities of a factor list, scanned bottom-up (index 1 first)
// or top-down.  More of the first differing element wins.
Ordering cmp_multiplicities(const std::vector<RowSet>& P, const std::vector<RowSet>& Q,
                            int alphabet_size, bool from_top) {
    std::vector<int> wp(static_cast<std::size_t>(alphabet_size) + 1, 0);
    std::vector<int> wq = wp;
    for (const RowSet& f : P)
        for (int v : f)
            ++wp[static_cast<std::size_t>(v)];
    for (const RowSet& f : Q)
        for (int v : f)
            ++wq[static_cast<std::size_t>(v)];
    if (from_top) {
        for (int d = alphabet_size; d >= 1; --d)
            if (wp[static_cast<std::size_t>(d)] != wq[static_cast<std::size_t>(d)])
                return wp[static_cast<std::size_t>(d)] > wq[static_cast<std::size_t>(d)]
                           ? Ordering::GT
                           : Ordering::LT;
    } else {
        for (int d = 1; d <= alphabet_size; ++d)
            if (wp[static_cast<std::size_t>(d)] != wq[static_cast<std::size_t>(d)])
                return wp[static_cast<std::size_t>(d)] > wq[static_cast<std::size_t>(d)]
                           ? Ordering::GT
                           : Ordering::LT;
    }
    return Ordering::EQ;
}

// The (a, U) decomposition at level l: every factor with at least l elements
// contributes a = its l-th smallest element and U = the rest of its tail.
std::map<std::pair<int, RowSet>, int> pau_counts(const std::vector<RowSet>& fs, int l) {
    std::map<std::pair<int, RowSet>, int> out;
    for (const RowSet& f : fs) {
        if (static_cast<int>(f.size()) < l)
            continue;
        int a = f[static_cast<std::size_t>(l - 1)];
        RowSet U(f.begin() + l, f.end());
        ++out[{a, std::move(U)}];
    }
    return out;
}

Ordering cmp_pau(const std::vector<RowSet>& P, const std::vector<RowSet>& Q, int l) {
    auto cp = pau_counts(P, l), cq = pau_counts(Q, l);
    // Scan a ascending; for fixed a scan U descending in the set order.
    std::vector<std::pair<int, RowSet>> keys;
    for (const auto& [k, v] : cp)
        keys.push_back(k);
    for (const auto& [k, v] : cq)
        keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first)
            return x.first < y.first;
        return set_order_cmp(x.second, y.second) == Ordering::GT;
    });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const auto& key : keys) {
        auto ip = cp.find(key);
        auto iq = cq.find(key);
        int p = ip == cp.end() ? 0 : ip->second;
        int q = iq == cq.end() ? 0 : iq->second;
        if (p != q)
            return p > q ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

} // namespace

ProductIndex make_product(std::vector<RowSet> factors, const Alphabet& a) {
    for (const RowSet& f : factors)
        validate_rowset(f, a);
    std::sort(factors.begin(), factors.end(), [&a](const RowSet& x, const RowSet& y) {
        return compare_single(x, y, a) == Ordering::GT;
    });
    return ProductIndex{std::move(factors)};
}

Ordering compare_products(const ProductIndex& P, const ProductIndex& Q, const Alphabet& a) {
    const auto& fp = P.factors;
    const auto& fq = Q.factors;

    if (fp.size() != fq.size())
        return fp.size() > fq.size() ? Ordering::GT : Ordering::LT;

    // Shapes, lexicographic on the weakly decreasing size tuples.
    std::vector<int> sp, sq;
    for (const RowSet& f : fp)
        sp.push_back(static_cast<int>(f.size()));
    for (const RowSet& f : fq)
        sq.push_back(static_cast<int>(f.size()));
    std::sort(sp.rbegin(), sp.rend());
    std::sort(sq.rbegin(), sq.rend());
    for (std::size_t i = 0; i < sp.size(); ++i)
        if (sp[i] != sq[i])
            return sp[i] > sq[i] ? Ordering::GT : Ordering::LT;

    // Element multiplicities of the whole products, smallest element first.
    if (Ordering o = cmp_multiplicities(fp, fq, a.size(), /*from_top=*/false);
        o != Ordering::EQ)
        return o;

    // Truncation stage.  Find the smallest level l whose truncations agree
    // as factor multisets; every deeper level then agrees as well, so l-1
    // is the deepest level where the two products still differ.
    int max_size = sp.empty() ? 0 : sp.front();
    std::vector<RowSet> tp(fp), tq(fq);
    std::sort(tp.begin(), tp.end(), rowset_lt_canonical);
    std::sort(tq.begin(), tq.end(), rowset_lt_canonical);
    if (tp == tq)
        return Ordering::EQ;
    for (int l = 1; l <= max_size; ++l) {
        std::vector<RowSet> up = truncate_all(fp, l + 1);
        std::vector<RowSet> uq = truncate_all(fq, l + 1);
        if (up != uq)
            continue;
        std::vector<RowSet> vp = truncate_all(fp, l);
        std::vector<RowSet> vq = truncate_all(fq, l);
        if (Ordering o = cmp_multiplicities(vp, vq, a.size(), /*from_top=*/true);
            o != Ordering::EQ)
            return o;
        return cmp_pau(fp, fq, l);
    }
    return Ordering::EQ; // unreachable: truncations at max_size are empty
}

Ordering compare_single(const RowSet& I, const RowSet& J, const Alphabet& a) {
    return compare_products(ProductIndex{{I}}, ProductIndex{{J}}, a);
}

Ordering dominance_compare(const RowSet& I, const RowSet& J) {
    if (I.size() != J.size())
        return I.size() > J.size() ? Ordering::GT : Ordering::LT;
    for (std::size_t p = I.size(); p-- > 0;) {
        // Walking both tails in parallel from the top.
        if (I[p] != J[p])
            return I[p] > J[p] ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

bool canonicalize_pair(RowSet& I, RowSet& J) {
    bool swap = false;
    if (I.size() != J.size()) {
        swap = I.size() < J.size();
    } else {
        for (std::size_t p = I.size(); p-- > 0;) {
            if (I[p] != J[p]) {
                swap = I[p] > J[p];
                break;
            }
        }
    }
    if (swap)
        std::swap(I, J);
    return swap;
}

std::vector<int> SnakeData::values() const {
    std::vector<int> out;
    out.reserve(seq.size());
    for (const Entry& e : seq)
        out.push_back(e.value);
    return out;
}

int SnakeData::lhs_count() const {
    int c = 0;
    for (const Entry& e : seq)
        c += e.from_lhs ? 1 : 0;
    return c;
}

SnakeData snake(RowSet I, RowSet J) {
    canonicalize_pair(I, J);
    SnakeData out;
    const int nI = static_cast<int>(I.size());
    const int nJ = static_cast<int>(J.size());

    // Pure tail of I above |J|.
    for (int p = nI; p > nJ; --p)
        out.seq.push_back({I[static_cast<std::size_t>(p - 1)], true});

    // Alternating runs: follow I while i_p <= j_p has not yet flipped, emit
    // both endpoints at every strict reversal.
    bool on_lhs = true;
    for (int p = nJ; p >= 1; --p) {
        int iv = I[static_cast<std::size_t>(p - 1)];
        int jv = J[static_cast<std::size_t>(p - 1)];
        if (on_lhs) {
            out.seq.push_back({iv, true});
            if (iv > jv) { // direction change: the snake turns onto J
                out.seq.push_back({jv, false});
                on_lhs = false;
                ++out.k;
            }
        } else {
            out.seq.push_back({jv, false});
            if (iv < jv) {
                out.seq.push_back({iv, true});
                on_lhs = true;
                ++out.k;
            }
        }
    }

    if (out.k == 0) {
        // Comparable pair; the snake degenerates to I itself.
        out.seq.clear();
        for (int p = nI; p >= 1; --p)
            out.seq.push_back({I[static_cast<std::size_t>(p - 1)], true});
        return out;
    }

    for (std::size_t i = 1; i < out.seq.size(); ++i)
        if (out.seq[i - 1].value <= out.seq[i].value)
            throw std::logic_error("snake sequence not strictly decreasing");
    if (static_cast<int>(out.seq.size()) != nI + out.k)
        throw std::logic_error("snake length mismatch");
    return out;
}

bool is_allowed(const RowSet& J, const Alphabet& a) {
    if (a.kind != Kind::C)
        throw std::invalid_argument("allowed/forbidden applies to type C only");
    validate_rowset(J, a);
    for (std::size_t p = 0; p < J.size(); ++p)
        if (J[p] < 2 * static_cast<int>(p + 1) - 1)
            return false;
    return true;
}

bool is_forbidden_literal(const RowSet& J) {
    // Some position b holds the barred copy of a number a < b.
    for (std::size_t b = 1; b <= J.size(); ++b) {
        int v = J[b - 1];
        if (v % 2 == 0 && v / 2 < static_cast<int>(b))
            return true;
    }
    return false;
}

bool is_forbidden_adjacent_pair(const RowSet& J) {
    // Some number b with j_b = b and j_{b+1} = bb.
    for (std::size_t b = 1; b + 1 <= J.size(); ++b)
        if (J[b - 1] == 2 * static_cast<int>(b) - 1 && J[b] == 2 * static_cast<int>(b))
            return true;
    return false;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

long long allowed_count_formula(int n, int l) {
    if (l == 0)
        return 1;
    if (l == 1)
        return 2 * n;
    return binomial(2 * n, l) - binomial(2 * n, l - 2);
}

long long allowed_count_enumerated(int n, int l) {
    Alphabet a{Kind::C, n};
    long long count = 0;
    for (const RowSet& J : all_rowsets(a, l))
        if (is_allowed(J, a))
            ++count;
    return count;
}

std::vector<RowSet> all_rowsets(const Alphabet& a, int size, bool allowed_only) {
    std::vector<RowSet> out;
    std::vector<int> sizes;
    if (size > 0)
        sizes.push_back(size);
    else
        for (int s = 1; s <= a.max_subset(); ++s)
            sizes.push_back(s);
    for (int s : sizes) {
        RowSet cur(static_cast<std::size_t>(s));
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == s) {
                if (!allowed_only || a.kind != Kind::C || is_allowed(cur, a))
                    out.push_back(cur);
                return;
            }
            for (int v = lo; v <= a.size(); ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
    }
    return out;
}

} // namespace semiflag
