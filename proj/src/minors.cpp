#include "semiflag/minors.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiflag {

GenericJetMatrix::GenericJetMatrix(Alphabet a, int trunc) : alph_(a), trunc_(trunc) {
    if (trunc < 0)
        throw std::invalid_argument("truncation bound must be nonnegative");
}

TruncatedSeries GenericJetMatrix::entry(int row, int col) const {
    if (row < 1 || row > alph_.size() || col < 1 || col > alph_.size())
        throw std::invalid_argument("matrix entry out of range");
    TruncatedSeries s(trunc_);
    for (int k = 0; k <= trunc_; ++k)
        s.coeff(k) = JetPolynomial::variable(var_id(row, col, k));
    return s;
}

const TruncatedSeries& GenericJetMatrix::minor_series(const RowSet& I) const {
    validate_rowset(I, alph_);
    if (static_cast<int>(I.size()) > alph_.columns())
        throw std::invalid_argument("minor wider than the usable columns");
    std::lock_guard<std::recursive_mutex> guard(cache_->lock);
    return minor_locked(I);
}

const TruncatedSeries& GenericJetMatrix::minor_locked(const RowSet& I) const {
    auto it = cache_->memo.find(I);
    if (it != cache_->memo.end())
        return it->second;

    TruncatedSeries det(trunc_);
    int k = static_cast<int>(I.size());
    if (k == 1) {
        det = entry(I[0], 1);
    } else {
        // Expand along the last column; subminors live on the shared column
        // prefix 1..k-1 and are memoized across index sets.
        for (int t = 0; t < k; ++t) {
            RowSet sub;
            sub.reserve(I.size() - 1);
            for (int u = 0; u < k; ++u)
                if (u != t)
                    sub.push_back(I[static_cast<std::size_t>(u)]);
            const TruncatedSeries& inner = minor_locked(sub);
            TruncatedSeries piece =
                series_mul(entry(I[static_cast<std::size_t>(t)], k), inner, trunc_);
            if ((t + k - 1) % 2 == 0)
                det = det + piece;
            else
                det = det - piece;
        }
    }
    return cache_->memo.emplace(I, std::move(det)).first->second;
}

TruncatedSeries GenericJetMatrix::minor_multiset_series(std::vector<int> rows) const {
    std::sort(rows.begin(), rows.end());
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] == rows[i - 1])
            return TruncatedSeries(trunc_); // equal rows: zero determinant
    return minor_series(rows);
}

TruncatedSeries GenericJetMatrix::leading_series(const RowSet& I) const {
    validate_rowset(I, alph_);
    TruncatedSeries d = entry(I[0], 1);
    for (std::size_t c = 1; c < I.size(); ++c)
        d = series_mul(d, entry(I[c], static_cast<int>(c) + 1), trunc_);
    return d;
}

MinorSeries make_minor(const RowSet& I, const GenericJetMatrix& M) {
    return MinorSeries{I, M.minor_series(I)};
}

JetPolynomial leading_product_poly(const JetProduct& prod, const GenericJetMatrix& M) {
    JetPolynomial out = JetPolynomial::constant(make_rat(1));
    for (const auto& [I, l] : prod) {
        if (l < 0 || l > M.trunc())
            throw std::invalid_argument("jet exponent beyond matrix truncation");
        out *= M.leading_series(I).coeff(l);
    }
    return out;
}

bool distinct_leading_check(const std::vector<JetProduct>& products, const GenericJetMatrix& M) {
    for (const JetProduct& p : products)
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) {
                if (!subsets_comparable(p[i].first, p[j].first))
                    throw std::invalid_argument(
                        "distinct_leading_check expects pairwise comparable factors");
                if (M.alphabet().kind == Kind::C &&
                    (!is_allowed(p[i].first, M.alphabet()) ||
                     !is_allowed(p[j].first, M.alphabet())))
                    throw std::invalid_argument(
                        "distinct_leading_check expects allowed factors in type C");
            }
    std::vector<JetPolynomial> polys;
    polys.reserve(products.size());
    for (const JetProduct& p : products)
        polys.push_back(leading_product_poly(p, M));
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j)
            if (polys[i] == polys[j])
                return false;
    return true;
}

} // namespace semiflag
