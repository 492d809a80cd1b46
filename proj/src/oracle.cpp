#include "semiflag/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace semiflag {

RatSeries RatSeries::constant(const Rat& v, int trunc) {
    RatSeries s(trunc);
    if (trunc >= 0)
        s.c_[0] = v;
    return s;
}

const Rat& RatSeries::coeff(int d) const {
    static const Rat kZero(0);
    if (d < 0 || d > trunc_)
        return kZero;
    return c_[static_cast<std::size_t>(d)];
}

Rat& RatSeries::coeff(int d) {
    if (d < 0 || d > trunc_)
        throw std::out_of_range("series coefficient beyond truncation");
    return c_[static_cast<std::size_t>(d)];
}

bool RatSeries::is_zero() const {
    for (const Rat& q : c_)
        if (q != 0)
            return false;
    return true;
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
    RatSeries out(std::min(a.trunc_, b.trunc_));
    for (int d = 0; d <= out.trunc_; ++d)
        out.coeff(d) = a.coeff(d) + b.coeff(d);
    return out;
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) {
    RatSeries out(std::min(a.trunc_, b.trunc_));
    for (int d = 0; d <= out.trunc_; ++d)
        out.coeff(d) = a.coeff(d) - b.coeff(d);
    return out;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
    RatSeries out(std::min(a.trunc_, b.trunc_));
    for (int d = 0; d <= out.trunc_; ++d) {
        Rat acc = 0;
        for (int i = 0; i <= d; ++i)
            acc += a.coeff(i) * b.coeff(d - i);
        out.coeff(d) = acc;
    }
    return out;
}

RatSeries RatSeries::operator-() const {
    RatSeries out(trunc_);
    for (int d = 0; d <= trunc_; ++d)
        out.coeff(d) = -coeff(d);
    return out;
}

RatSeries RatSeries::derivative(int order) const {
    if (order < 0)
        throw std::invalid_argument("derivative order must be nonnegative");
    if (order == 0)
        return *this;
    if (order > trunc_)
        throw std::invalid_argument("derivative order exceeds series truncation");
    RatSeries out(trunc_ - order);
    for (int d = 0; d <= out.trunc(); ++d) {
        Rat f = 1;
        for (int j = 1; j <= order; ++j)
            f *= d + j;
        out.coeff(d) = coeff(d + order) * f;
    }
    return out;
}

RatSeries RatSeries::inverse() const {
    if (trunc_ < 0 || coeff(0) == 0)
        throw std::invalid_argument("series inverse needs an invertible constant term");
    RatSeries out(trunc_);
    Rat c0 = 1 / coeff(0);
    out.coeff(0) = c0;
    for (int d = 1; d <= trunc_; ++d) {
        Rat acc = 0;
        for (int i = 1; i <= d; ++i)
            acc += coeff(i) * out.coeff(d - i);
        out.coeff(d) = -acc * c0;
    }
    return out;
}

bool RatSeries::operator==(const RatSeries& o) const {
    if (trunc_ != o.trunc_)
        return false;
    for (int d = 0; d <= trunc_; ++d)
        if (coeff(d) != o.coeff(d))
            return false;
    return true;
}

namespace {

using SeriesMatrix = std::vector<std::vector<RatSeries>>;

SeriesMatrix identity_matrix(int n, int trunc) {
    SeriesMatrix m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n), RatSeries(trunc));
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            RatSeries::constant(make_rat(1), trunc);
    }
    return m;
}

SeriesMatrix matmul(const SeriesMatrix& a, const SeriesMatrix& b, int trunc) {
    std::size_t n = a.size();
    SeriesMatrix out(n, std::vector<RatSeries>(n, RatSeries(trunc)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero())
                    out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

// Full determinant over the series ring, cofactor expansion memoized on the
// row bitmask (column index implied by the popcount).
RatSeries series_det(const SeriesMatrix& m, int trunc) {
    std::size_t n = m.size();
    std::vector<RatSeries> memo(static_cast<std::size_t>(1) << n);
    std::vector<bool> seen(memo.size(), false);
    auto rec = [&](auto&& self, unsigned mask) -> const RatSeries& {
        if (seen[mask])
            return memo[mask];
        seen[mask] = true;
        int k = __builtin_popcount(mask);
        if (k == 0) {
            memo[mask] = RatSeries::constant(make_rat(1), trunc);
            return memo[mask];
        }
        RatSeries det(trunc);
        int t = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (!(mask & (1u << r)))
                continue;
            RatSeries piece = m[r][static_cast<std::size_t>(k - 1)] *
                              self(self, mask & ~(1u << r));
            det = ((t + k - 1) % 2 == 0) ? det + piece : det - piece;
            ++t;
        }
        memo[mask] = std::move(det);
        return memo[mask];
    };
    return rec(rec, (1u << n) - 1u);
}

struct SmallRng {
    std::mt19937_64 g;
    explicit SmallRng(std::uint64_t seed) : g(seed) {}
    int uniform(int lo, int hi) { // inclusive, reproducible across platforms
        return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rat small_rat() {
        int num = uniform(-3, 3);
        int den = uniform(1, 3);
        return make_rat(num, den);
    }
    RatSeries poly(int trunc, bool zero_constant = false) {
        RatSeries s(trunc);
        for (int d = zero_constant ? 1 : 0; d <= trunc; ++d)
            s.coeff(d) = small_rat();
        return s;
    }
};

bool matrices_equal(const SeriesMatrix& a, const SeriesMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a[i][j] == b[i][j]))
                return false;
    return true;
}

SeriesMatrix transpose(const SeriesMatrix& m) {
    std::size_t n = m.size();
    SeriesMatrix out(n, std::vector<RatSeries>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[j][i] = m[i][j];
    return out;
}

SeriesMatrix form_matrix(int n, int trunc) {
    auto omega = symplectic_form(n);
    SeriesMatrix out(static_cast<std::size_t>(2 * n),
                     std::vector<RatSeries>(static_cast<std::size_t>(2 * n), RatSeries(trunc)));
    for (std::size_t i = 0; i < omega.size(); ++i)
        for (std::size_t j = 0; j < omega.size(); ++j)
            out[i][j] = RatSeries::constant(omega[i][j], trunc);
    return out;
}

} // namespace

std::vector<std::vector<Rat>> symplectic_form(int n) {
    std::vector<std::vector<Rat>> omega(static_cast<std::size_t>(2 * n),
                                        std::vector<Rat>(static_cast<std::size_t>(2 * n), Rat(0)));
    for (int p = 1; p <= n; ++p) {
        omega[static_cast<std::size_t>(2 * p - 2)][static_cast<std::size_t>(2 * p - 1)] = 1;
        omega[static_cast<std::size_t>(2 * p - 1)][static_cast<std::size_t>(2 * p - 2)] = -1;
    }
    return omega;
}

GroupJetPoint::GroupJetPoint(Alphabet a, int trunc, std::uint64_t seed,
                             std::vector<std::vector<RatSeries>> mat)
    : alph_(a), trunc_(trunc), seed_(seed), m_(std::move(mat)) {
    if (static_cast<int>(m_.size()) != alph_.size())
        throw std::invalid_argument("group point matrix has the wrong size");
}

const RatSeries& GroupJetPoint::entry(int row, int col) const {
    if (row < 1 || row > alph_.size() || col < 1 || col > alph_.size())
        throw std::invalid_argument("matrix entry out of range");
    return m_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
}

const RatSeries& GroupJetPoint::minor_series(const RowSet& I) const {
    validate_rowset(I, alph_);
    std::lock_guard<std::recursive_mutex> guard(cache_->lock);
    return minor_locked(I);
}

const RatSeries& GroupJetPoint::minor_locked(const RowSet& I) const {
    auto it = cache_->memo.find(I);
    if (it != cache_->memo.end())
        return it->second;
    // Minor column c is the c-th unbarred column: in the interleaved type C
    // storage that is matrix column 2c-1.
    auto col_of = [this](int c) { return alph_.kind == Kind::C ? 2 * c - 1 : c; };
    RatSeries det(trunc_);
    int k = static_cast<int>(I.size());
    if (k == 1) {
        det = entry(I[0], col_of(1));
    } else {
        for (int t = 0; t < k; ++t) {
            RowSet sub;
            for (int u = 0; u < k; ++u)
                if (u != t)
                    sub.push_back(I[static_cast<std::size_t>(u)]);
            RatSeries piece = entry(I[static_cast<std::size_t>(t)], col_of(k)) * minor_locked(sub);
            det = ((t + k - 1) % 2 == 0) ? det + piece : det - piece;
        }
    }
    return cache_->memo.emplace(I, std::move(det)).first->second;
}

RatSeries GroupJetPoint::minor_multiset_series(std::vector<int> rows) const {
    std::sort(rows.begin(), rows.end());
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] == rows[i - 1])
            return RatSeries(trunc_);
    return minor_series(rows);
}

Rat GroupJetPoint::evaluate_generator(const RowSet& I, int l) const {
    if (l < 0 || l > trunc_)
        throw std::invalid_argument("jet degree beyond the point truncation");
    return minor_series(I).coeff(l);
}

Rat GroupJetPoint::evaluate_monomial(const std::vector<std::pair<RowSet, int>>& mono) const {
    Rat out = 1;
    for (const auto& [I, l] : mono)
        out *= evaluate_generator(I, l);
    return out;
}

GroupJetPoint random_sl_point(int n, int trunc, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("random_sl_point needs n >= 2");
    SmallRng rng(seed);
    std::size_t N = static_cast<std::size_t>(n);

    SeriesMatrix lower = identity_matrix(n, trunc);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < i; ++j)
            lower[i][j] = rng.poly(trunc);
    SeriesMatrix upper = identity_matrix(n, trunc);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            upper[i][j] = rng.poly(trunc);

    SeriesMatrix torus = identity_matrix(n, trunc);
    RatSeries prod = RatSeries::constant(make_rat(1), trunc);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        RatSeries a = rng.poly(trunc, /*zero_constant=*/true);
        a.coeff(0) = 1;
        torus[i][i] = a;
        prod = prod * a;
    }
    torus[N - 1][N - 1] = prod.inverse();

    SeriesMatrix m = matmul(matmul(lower, torus, trunc), upper, trunc);
    RatSeries det = series_det(m, trunc);
    if (!(det == RatSeries::constant(make_rat(1), trunc)))
        throw std::logic_error("random_sl_point: determinant check failed");
    return GroupJetPoint(Alphabet{Kind::A, n}, trunc, seed, std::move(m));
}

GroupJetPoint random_sp_point(int n, int trunc, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_sp_point needs n >= 1");
    SmallRng rng(seed);
    int dim = 2 * n;
    auto omega = symplectic_form(n);

    SeriesMatrix m = identity_matrix(dim, trunc);
    int factors = rng.uniform(10, 30);
    for (int f = 0; f < factors; ++f) {
        if (rng.uniform(0, 3) == 0) {
            // Paired torus block diag(a, a^{-1}) on (l, lb).
            int l = rng.uniform(1, n);
            RatSeries a = rng.poly(trunc, /*zero_constant=*/true);
            a.coeff(0) = 1;
            SeriesMatrix t = identity_matrix(dim, trunc);
            t[static_cast<std::size_t>(2 * l - 2)][static_cast<std::size_t>(2 * l - 2)] = a;
            t[static_cast<std::size_t>(2 * l - 1)][static_cast<std::size_t>(2 * l - 1)] =
                a.inverse();
            m = matmul(m, t, trunc);
        } else {
            // Symplectic transvection x -> x + c(s) w(v, x) v.
            std::vector<Rat> v(static_cast<std::size_t>(dim), Rat(0));
            int support = rng.uniform(1, 2);
            for (int s = 0; s < support; ++s)
                v[static_cast<std::size_t>(rng.uniform(0, dim - 1))] =
                    make_rat(rng.uniform(0, 1) == 0 ? 1 : -1);
            bool nonzero = false;
            for (const Rat& q : v)
                nonzero = nonzero || q != 0;
            if (!nonzero)
                v[0] = 1;
            RatSeries c = rng.poly(trunc);
            SeriesMatrix t = identity_matrix(dim, trunc);
            for (int i = 0; i < dim; ++i) {
                if (v[static_cast<std::size_t>(i)] == 0)
                    continue;
                for (int j = 0; j < dim; ++j) {
                    Rat wj = 0; // (v^t Omega)_j
                    for (int k = 0; k < dim; ++k)
                        wj += v[static_cast<std::size_t>(k)] *
                              omega[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    if (wj == 0)
                        continue;
                    RatSeries add = c;
                    Rat scale = v[static_cast<std::size_t>(i)] * wj;
                    for (int d = 0; d <= trunc; ++d)
                        add.coeff(d) *= scale;
                    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + add;
                }
            }
            m = matmul(m, t, trunc);
        }
    }

    SeriesMatrix om = form_matrix(n, trunc);
    SeriesMatrix mt = transpose(m);
    if (!matrices_equal(matmul(matmul(m, om, trunc), mt, trunc), om) ||
        !matrices_equal(matmul(matmul(mt, om, trunc), m, trunc), om))
        throw std::logic_error("random_sp_point: symplectic identity check failed");
    return GroupJetPoint(Alphabet{Kind::C, n}, trunc, seed, std::move(m));
}

GroupJetPoint random_generic_point(Alphabet a, int trunc, std::uint64_t seed) {
    SmallRng rng(seed);
    std::size_t dim = static_cast<std::size_t>(a.size());
    SeriesMatrix m(dim, std::vector<RatSeries>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m[i][j] = rng.poly(trunc);
    return GroupJetPoint(a, trunc, seed, std::move(m));
}

} // namespace semiflag
