#include "semiflag/characters.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace semiflag {

QSeries QSeries::one(int qmax) {
    QSeries s(qmax);
    if (qmax >= 0)
        s.c_[0] = 1;
    return s;
}

long long QSeries::coeff(int d) const {
    if (d < 0 || d > qmax_)
        return 0;
    return c_[static_cast<std::size_t>(d)];
}

long long& QSeries::coeff(int d) {
    if (d < 0 || d > qmax_)
        throw std::out_of_range("q-power beyond the truncation");
    return c_[static_cast<std::size_t>(d)];
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.qmax_, b.qmax_));
    for (int d = 0; d <= out.qmax_; ++d)
        out.coeff(d) = a.coeff(d) + b.coeff(d);
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.qmax_, b.qmax_));
    for (int d = 0; d <= out.qmax_; ++d) {
        long long acc = 0;
        for (int i = 0; i <= d; ++i)
            acc += a.coeff(i) * b.coeff(d - i);
        out.coeff(d) = acc;
    }
    return out;
}

QSeries QSeries::shifted(int power) const {
    QSeries out(qmax_);
    for (int d = power; d <= qmax_; ++d)
        out.coeff(d) = coeff(d - power);
    return out;
}

bool QSeries::operator==(const QSeries& o) const {
    if (qmax_ != o.qmax_)
        return false;
    return c_ == o.c_;
}

int QSeries::top_power() const {
    for (int d = qmax_; d >= 0; --d)
        if (coeff(d) != 0)
            return d;
    return -1;
}

long long QSeries::value_at_one() const {
    long long acc = 0;
    for (int d = 0; d <= qmax_; ++d)
        acc += coeff(d);
    return acc;
}

QSeries pochhammer_inv(int r, int qmax) {
    if (r < 0)
        throw std::invalid_argument("pochhammer_inv needs r >= 0");
    QSeries s = QSeries::one(qmax);
    // Dividing by (1 - q^i) is a cumulative sum with stride i.
    for (int i = 1; i <= r; ++i)
        for (int d = i; d <= qmax; ++d)
            s.coeff(d) += s.coeff(d - i);
    return s;
}

QSeries pochhammer(int r, int qmax) {
    QSeries s = QSeries::one(qmax);
    for (int i = 1; i <= r; ++i) {
        QSeries f(qmax);
        f.coeff(0) = 1;
        if (i <= qmax)
            f.coeff(i) = -1;
        s = s * f;
    }
    return s;
}

QSeries pochhammer_lambda(const std::vector<int>& lambda, int qmax) {
    QSeries s = QSeries::one(qmax);
    for (int m : lambda)
        s = s * pochhammer(m, qmax);
    return s;
}

int WeightVectorR::total() const {
    int t = 0;
    for (const auto& [I, m] : r)
        t += m;
    return t;
}

WeightVectorR make_weight_vector(Alphabet a, std::map<RowSet, int> r) {
    for (auto it = r.begin(); it != r.end();) {
        validate_rowset(it->first, a);
        if (it->second < 0)
            throw std::invalid_argument("multiplicities must be nonnegative");
        if (a.kind == Kind::C && it->second > 0 && !is_allowed(it->first, a))
            throw std::invalid_argument("type C multiplicities live on allowed sets only");
        if (it->second == 0)
            it = r.erase(it);
        else
            ++it;
    }
    return WeightVectorR{a, std::move(r)};
}

bool single_less(const RowSet& I, const RowSet& J, const Alphabet& a, OrderChoice o) {
    switch (o) {
    case OrderChoice::Standard:
        return compare_single(I, J, a) == Ordering::LT;
    case OrderChoice::Reversed:
        return compare_single(I, J, a) == Ordering::GT;
    case OrderChoice::Dominance:
        return dominance_compare(I, J) == Ordering::LT;
    }
    return false;
}

QSeries component_character(const WeightVectorR& r, int qmax, OrderChoice order) {
    long long exponent = 0;
    for (auto it = r.r.begin(); it != r.r.end(); ++it)
        for (auto jt = r.r.begin(); jt != r.r.end(); ++jt) {
            if (it == jt)
                continue;
            if (single_less(it->first, jt->first, r.alph, order))
                exponent += static_cast<long long>(snake_k(it->first, jt->first)) *
                            it->second * jt->second;
        }
    if (exponent > qmax)
        return QSeries(qmax); // the whole component sits beyond the window
    QSeries s = QSeries::one(qmax);
    for (const auto& [I, m] : r.r)
        s = s * pochhammer_inv(m, qmax);
    return s.shifted(static_cast<int>(exponent));
}

WeightKey rowset_weight(const RowSet& I, const Alphabet& a) {
    WeightKey w(static_cast<std::size_t>(a.n), 0);
    for (int v : I) {
        if (a.kind == Kind::A)
            w[static_cast<std::size_t>(v - 1)] += 1;
        else if (v % 2 == 1)
            w[static_cast<std::size_t>((v + 1) / 2 - 1)] += 1;
        else
            w[static_cast<std::size_t>(v / 2 - 1)] -= 1;
    }
    return w;
}

QSeries WeightedQSeries::specialize() const {
    QSeries out;
    bool first = true;
    for (const auto& [k, s] : w) {
        out = first ? s : out + s;
        first = false;
    }
    return out;
}

void validate_lambda(const Alphabet& a, const std::vector<int>& lambda) {
    if (static_cast<int>(lambda.size()) > a.max_subset())
        throw std::invalid_argument("too many fundamental coordinates");
    for (int m : lambda)
        if (m < 0)
            throw std::invalid_argument("fundamental coordinates must be nonnegative");
}

WeightedQSeries weyl_character(const Alphabet& a, const std::vector<int>& lambda, int qmax,
                               OrderChoice order) {
    validate_lambda(a, lambda);
    WeightedQSeries out;

    // All r with sum_{|I|=p} r_I = lambda_p: a product of compositions,
    // one block per fundamental level.
    std::vector<std::pair<int, int>> levels; // (size p, lambda_p)
    for (std::size_t p = 0; p < lambda.size(); ++p)
        if (lambda[p] > 0)
            levels.push_back({static_cast<int>(p + 1), lambda[p]});

    std::map<RowSet, int> current;
    auto emit = [&]() {
        WeightVectorR r = make_weight_vector(a, current);
        QSeries comp = component_character(r, qmax, order);
        WeightKey key(static_cast<std::size_t>(a.n), 0);
        for (const auto& [I, m] : current) {
            WeightKey wk = rowset_weight(I, a);
            for (std::size_t i = 0; i < key.size(); ++i)
                key[i] += m * wk[i];
        }
        auto it = out.w.find(key);
        if (it == out.w.end())
            out.w.emplace(std::move(key), comp);
        else
            it->second = it->second + comp;
    };

    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == levels.size()) {
            emit();
            return;
        }
        auto [p, budget] = levels[level];
        std::vector<RowSet> sets = all_rowsets(a, p, /*allowed_only=*/true);
        auto fill = [&](auto&& fself, std::size_t idx, int left) -> void {
            if (idx + 1 == sets.size()) {
                if (left > 0)
                    current[sets[idx]] = left;
                self(self, level + 1);
                if (left > 0)
                    current.erase(sets[idx]);
                return;
            }
            for (int take = 0; take <= left; ++take) {
                if (take > 0)
                    current[sets[idx]] = take;
                fself(fself, idx + 1, left - take);
                if (take > 0)
                    current.erase(sets[idx]);
            }
        };
        if (sets.empty())
            throw std::logic_error("no index sets at a positive fundamental level");
        fill(fill, 0, budget);
    };
    rec(rec, 0);
    if (out.w.empty())
        out.w.emplace(WeightKey(static_cast<std::size_t>(a.n), 0), QSeries::one(qmax));
    return out;
}

LocalCharacter local_weyl_character(const Alphabet& a, const std::vector<int>& lambda, int qmax,
                                    OrderChoice order) {
    validate_lambda(a, lambda);
    WeightedQSeries global = weyl_character(a, lambda, qmax, order);
    QSeries poch = pochhammer_lambda(lambda, qmax);

    LocalCharacter out;
    int top = -1;
    for (const auto& [k, s] : global.w) {
        QSeries local = s * poch;
        top = std::max(top, local.top_power());
        out.series.w.emplace(k, std::move(local));
    }
    // Certify polynomiality: the product must have died out well before the
    // window ends.  The safety margin is the degree of (q)_lambda plus one;
    // a shorter window cannot distinguish a polynomial from a tail.
    int margin = poch.top_power() + 1;
    if (top + margin <= qmax) {
        out.status = LocalCharacter::Status::Polynomial;
        long long dim = 0;
        bool nonneg = true;
        for (const auto& [k, s] : out.series.w) {
            dim += s.value_at_one();
            for (int d = 0; d <= s.qmax(); ++d)
                nonneg = nonneg && s.coeff(d) >= 0;
        }
        if (!nonneg)
            throw std::logic_error("local character has a negative coefficient");
        out.dimension = dim;
    }
    return out;
}

std::string weighted_series_to_csv(const WeightedQSeries& s) {
    std::string out = "weight,q_power,coeff\n";
    for (const auto& [k, series] : s.w) {
        std::string key;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i)
                key += ' ';
            key += std::to_string(k[i]);
        }
        for (int d = 0; d <= series.qmax(); ++d)
            if (series.coeff(d) != 0)
                out += key + "," + std::to_string(d) + "," + std::to_string(series.coeff(d)) + "\n";
    }
    return out;
}

std::string weighted_series_to_json(const WeightedQSeries& s) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [k, series] : s.w) {
        nlohmann::ordered_json e;
        e["weight"] = k;
        std::vector<long long> coeffs;
        for (int d = 0; d <= series.qmax(); ++d)
            coeffs.push_back(series.coeff(d));
        e["coeffs"] = coeffs;
        j.push_back(std::move(e));
    }
    return j.dump();
}

} // namespace semiflag
