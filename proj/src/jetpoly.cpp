#include "semiflag/jetpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiflag {

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

// Descending lexicographic on the variable lists read from the top.  Lists
// are stored ascending, so walk from the back.
template <class Mask>
int cmp_impl(const Monomial& a, const Monomial& b, Mask mask) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        VarId x = mask(a[i]), y = mask(b[i]);
        if (x != y)
            return x < y ? -1 : 1;
    }
    return 0;
}

} // namespace

int monomial_cmp(const Monomial& a, const Monomial& b) {
    return cmp_impl(a, b, [](VarId v) { return v; });
}

int monomial_cmp_jet_blind(const Monomial& a, const Monomial& b) {
    return cmp_impl(a, b, [](VarId v) { return jet_blind(v); });
}

JetPolynomial JetPolynomial::constant(const Rat& c) {
    JetPolynomial p;
    if (c != 0)
        p.terms_.push_back({Monomial{}, c});
    return p;
}

JetPolynomial JetPolynomial::variable(VarId v) {
    JetPolynomial p;
    p.terms_.push_back({Monomial{v}, make_rat(1)});
    return p;
}

JetPolynomial JetPolynomial::term(Monomial m, Rat c) {
    JetPolynomial p;
    if (c != 0) {
        std::sort(m.begin(), m.end());
        p.terms_.push_back({std::move(m), std::move(c)});
    }
    return p;
}

JetPolynomial JetPolynomial::from_sorted(std::vector<Term> terms) {
    JetPolynomial p;
    p.terms_ = std::move(terms);
    return p;
}

JetPolynomial JetPolynomial::operator-() const {
    JetPolynomial p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        p.terms_.push_back({t.mon, -t.coeff});
    return p;
}

JetPolynomial& JetPolynomial::operator+=(const JetPolynomial& o) {
    if (o.terms_.empty())
        return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = monomial_cmp(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rat sum = terms_[i].coeff + o.terms_[j].coeff;
            if (sum != 0)
                out.push_back({std::move(terms_[i].mon), std::move(sum)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j)
        out.push_back(o.terms_[j]);
    terms_ = std::move(out);
    return *this;
}

JetPolynomial& JetPolynomial::operator-=(const JetPolynomial& o) { return *this += -o; }

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
    if (a.terms_.empty() || b.terms_.empty())
        return JetPolynomial{};
    std::vector<JetPolynomial::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            prod.push_back({monomial_mul(s.mon, t.mon), s.coeff * t.coeff});
    std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) {
        return monomial_cmp(x.mon, y.mon) > 0;
    });
    std::vector<JetPolynomial::Term> out;
    out.reserve(prod.size());
    for (auto& t : prod) {
        if (!out.empty() && monomial_cmp(out.back().mon, t.mon) == 0)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.coeff == 0; }),
              out.end());
    return JetPolynomial::from_sorted(std::move(out));
}

JetPolynomial JetPolynomial::scaled(const Rat& c) const {
    if (c == 0)
        return {};
    JetPolynomial p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        p.terms_.push_back({t.mon, t.coeff * c});
    return p;
}

bool JetPolynomial::operator==(const JetPolynomial& o) const {
    if (terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff ||
            monomial_cmp(terms_[i].mon, o.terms_[i].mon) != 0)
            return false;
    return true;
}

const JetPolynomial::Term& JetPolynomial::leading_term() const {
    if (terms_.empty())
        throw std::invalid_argument("leading term of the zero polynomial");
    return terms_.front();
}

JetPolynomial JetPolynomial::leading_part() const {
    if (terms_.empty())
        throw std::invalid_argument("leading part of the zero polynomial");
    // Jet-blind classes are not contiguous in the refined term order (jets
    // tie-break before lower variables are reached), so the class maximum
    // needs a full scan.
    const Monomial* best = &terms_.front().mon;
    for (const Term& t : terms_)
        if (monomial_cmp_jet_blind(t.mon, *best) > 0)
            best = &t.mon;
    JetPolynomial p;
    for (const Term& t : terms_)
        if (monomial_cmp_jet_blind(t.mon, *best) == 0)
            p.terms_.push_back(t);
    return p;
}

Rat JetPolynomial::evaluate(const std::map<VarId, Rat>& point) const {
    Rat total = 0;
    for (const Term& t : terms_) {
        Rat v = t.coeff;
        for (VarId id : t.mon) {
            auto it = point.find(id);
            if (it == point.end())
                throw std::invalid_argument("evaluate: unassigned jet variable");
            v *= it->second;
        }
        total += v;
    }
    return total;
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, int trunc) {
    TruncatedSeries s(trunc);
    if (trunc >= 0)
        s.coeffs_[0] = JetPolynomial::constant(c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial_in_s(JetPolynomial p, int power, int trunc) {
    TruncatedSeries s(trunc);
    if (power >= 0 && power <= trunc)
        s.coeffs_[static_cast<std::size_t>(power)] = std::move(p);
    return s;
}

const JetPolynomial& TruncatedSeries::coeff(int d) const {
    static const JetPolynomial kZero;
    if (d < 0 || d > trunc_)
        return kZero;
    return coeffs_[static_cast<std::size_t>(d)];
}

JetPolynomial& TruncatedSeries::coeff(int d) {
    if (d < 0 || d > trunc_)
        throw std::out_of_range("series coefficient beyond truncation");
    return coeffs_[static_cast<std::size_t>(d)];
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.trunc_, b.trunc_));
    for (int d = 0; d <= out.trunc_; ++d)
        out.coeffs_[static_cast<std::size_t>(d)] = a.coeff(d) + b.coeff(d);
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.trunc_, b.trunc_));
    for (int d = 0; d <= out.trunc_; ++d)
        out.coeffs_[static_cast<std::size_t>(d)] = a.coeff(d) - b.coeff(d);
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(trunc_);
    for (int d = 0; d <= trunc_; ++d)
        out.coeffs_[static_cast<std::size_t>(d)] = -coeff(d);
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& c) const {
    TruncatedSeries out(trunc_);
    for (int d = 0; d <= trunc_; ++d)
        out.coeffs_[static_cast<std::size_t>(d)] = coeff(d).scaled(c);
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    if (trunc_ != o.trunc_)
        return false;
    for (int d = 0; d <= trunc_; ++d)
        if (!(coeff(d) == o.coeff(d)))
            return false;
    return true;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g, int bound) {
    int trunc = std::min({f.trunc(), g.trunc(), bound});
    TruncatedSeries out(trunc);
    for (int d = 0; d <= trunc; ++d) {
        JetPolynomial acc;
        for (int a = 0; a <= d; ++a) {
            const JetPolynomial& fa = f.coeff(a);
            const JetPolynomial& gb = g.coeff(d - a);
            if (!fa.is_zero() && !gb.is_zero())
                acc += fa * gb;
        }
        out.coeff(d) = std::move(acc);
    }
    return out;
}

TruncatedSeries series_derivative(const TruncatedSeries& f, int order) {
    if (order < 0)
        throw std::invalid_argument("derivative order must be nonnegative");
    if (order == 0)
        return f;
    if (order > f.trunc())
        throw std::invalid_argument("derivative order exceeds series truncation");
    TruncatedSeries out(f.trunc() - order);
    for (int d = 0; d <= out.trunc(); ++d) {
        Rat factor = 1;
        for (int j = 1; j <= order; ++j)
            factor *= d + j;
        out.coeff(d) = f.coeff(d + order).scaled(factor);
    }
    return out;
}

} // namespace semiflag
