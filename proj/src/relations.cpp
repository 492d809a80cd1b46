#include "semiflag/relations.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace semiflag {

namespace {

// Parity of the permutation taking `reference` to `chain` (both listing the
// same values exactly once).  +1 even, -1 odd.
int permutation_sign(const std::vector<int>& reference, const std::vector<int>& chain) {
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < reference.size(); ++i)
        pos[reference[i]] = i;
    std::vector<std::size_t> perm;
    perm.reserve(chain.size());
    for (int v : chain)
        perm.push_back(pos.at(v));
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<int> multiset_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_difference_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Parity of sorting the concatenation (fixed asc, moving asc) into one
// ascending sequence: the insertion sign of the factor's fixed rows among
// the exchanged ones.  Without it the alternating-sum argument breaks as
// soon as a fixed row interleaves the exchange set.
int merge_sign(const std::vector<int>& fixed, const std::vector<int>& moving) {
    long crossings = 0;
    for (int x : fixed)
        for (int y : moving)
            if (y < x)
                ++crossings;
    return crossings % 2 == 0 ? 1 : -1;
}

void require_incomparable(const RowSet& I, const RowSet& J) {
    if (subset_compare(I, J) != SubsetRel::Incomparable)
        throw std::invalid_argument("the pair is comparable; no exchange relation");
}

// Enumerate all k-subsets of a sorted value list.
void for_each_subset(const std::vector<int>& values, int k,
                     const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (std::size_t i = from; i < values.size(); ++i) {
            cur.push_back(values[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

TruncatedSeries expand_relation(const RelationRecord& rel, const GenericJetMatrix& M,
                                int trunc) {
    TruncatedSeries acc(trunc);
    bool first = true;
    for (const auto& t : rel.terms) {
        TruncatedSeries left = M.minor_multiset_series(t.left);
        if (t.deriv > 0)
            left = series_derivative(left, t.deriv);
        TruncatedSeries prod =
            t.right.empty() ? left : series_mul(left, M.minor_multiset_series(t.right), trunc);
        prod = prod.scaled(t.coeff);
        acc = first ? prod : acc + prod;
        first = false;
    }
    return acc;
}

} // namespace

RelationRecord finite_pluecker(RowSet I, RowSet J, const Alphabet& a) {
    validate_rowset(I, a);
    validate_rowset(J, a);
    require_incomparable(I, J);
    canonicalize_pair(I, J);

    const int k = static_cast<int>(I.size());
    const int l = static_cast<int>(J.size());
    int s = 0;
    for (int p = 1; p <= l; ++p)
        if (I[static_cast<std::size_t>(p - 1)] > J[static_cast<std::size_t>(p - 1)])
            s = p;
    if (s == 0)
        throw std::logic_error("incomparable pair without an exchange position");

    // A = {j_1..j_s, i_s..i_k}, strictly increasing by construction.
    std::vector<int> A(J.begin(), J.begin() + s);
    A.insert(A.end(), I.begin() + (s - 1), I.end());
    for (std::size_t i = 1; i < A.size(); ++i)
        if (A[i] <= A[i - 1])
            throw std::logic_error("exchange set not strictly increasing");

    std::vector<int> I_part(I.begin() + (s - 1), I.end()); // I cap A
    std::vector<int> I_rest(I.begin(), I.begin() + (s - 1));
    std::vector<int> J_rest(J.begin() + s, J.end());

    RelationRecord rel;
    rel.family = "finite";
    rel.lhs = I;
    rel.rhs = J;
    rel.kprime = 0;
    // |B| is pinned by the factor cardinality |(I \ A) u B| = |I|.
    int bsize = k - s + 1;
    auto term_sign = [&](const std::vector<int>& B, const std::vector<int>& rest) {
        std::vector<int> chain = B;
        chain.insert(chain.end(), rest.begin(), rest.end());
        return permutation_sign(A, chain) * merge_sign(I_rest, B) * merge_sign(J_rest, rest);
    };
    int base_sign = term_sign(I_part, set_difference_sorted(A, I_part));
    for_each_subset(A, bsize, [&](const std::vector<int>& B) {
        std::vector<int> rest = set_difference_sorted(A, B);
        RelationRecord::Term t;
        t.coeff = make_rat(term_sign(B, rest) * base_sign);
        t.deriv = 0;
        t.left = multiset_union(I_rest, B);
        t.right = multiset_union(J_rest, rest);
        rel.terms.push_back(std::move(t));
    });

    // Self check: a classical exchange relation must already vanish at s^0.
    if (!verify_relation_symbolic(rel, a, 0))
        throw std::logic_error("finite exchange relation failed its zero check");
    return rel;
}

namespace {

RelationRecord build_snake_relation(RowSet I, RowSet J, int kp, const Alphabet& a) {
    validate_rowset(I, a);
    validate_rowset(J, a);
    require_incomparable(I, J);
    canonicalize_pair(I, J);

    SnakeData S = snake(I, J);
    std::vector<int> svals = S.values(); // strictly decreasing
    std::vector<int> lhs_tags, rhs_tags;
    for (const auto& e : S.seq)
        (e.from_lhs ? lhs_tags : rhs_tags).push_back(e.value);
    std::sort(lhs_tags.begin(), lhs_tags.end());
    std::sort(rhs_tags.begin(), rhs_tags.end());

    std::vector<int> I_rest = set_difference_sorted(I, lhs_tags);
    std::vector<int> J_rest = set_difference_sorted(J, rhs_tags);

    RelationRecord rel;
    rel.family = "semiinf";
    rel.lhs = I;
    rel.rhs = J;
    rel.kprime = kp;

    auto term_sign = [&](const std::vector<int>& A_asc, const std::vector<int>& rest_asc) {
        std::vector<int> chain(A_asc.rbegin(), A_asc.rend());
        chain.insert(chain.end(), rest_asc.rbegin(), rest_asc.rend());
        return permutation_sign(svals, chain) * merge_sign(I_rest, A_asc) *
               merge_sign(J_rest, rest_asc);
    };
    int base_sign = term_sign(lhs_tags, rhs_tags);

    std::vector<int> svals_asc(svals.rbegin(), svals.rend());
    for_each_subset(svals_asc, S.lhs_count(), [&](const std::vector<int>& A_asc) {
        std::vector<int> rest = set_difference_sorted(svals_asc, A_asc);
        RelationRecord::Term t;
        t.coeff = make_rat(term_sign(A_asc, rest) * base_sign);
        t.deriv = kp;
        t.left = multiset_union(I_rest, A_asc);
        t.right = multiset_union(J_rest, rest);
        rel.terms.push_back(std::move(t));
    });
    return rel;
}

} // namespace

RelationRecord semiinf_pluecker_unchecked(RowSet I, RowSet J, int kp, const Alphabet& a) {
    if (kp < 0)
        throw std::invalid_argument("derivative order must be nonnegative");
    return build_snake_relation(std::move(I), std::move(J), kp, a);
}

RelationRecord semiinf_pluecker(RowSet I, RowSet J, int kp, const Alphabet& a) {
    int k = snake_k(I, J);
    if (kp < 0 || kp >= k)
        throw std::invalid_argument("derivative order must satisfy 0 <= k' < k(I,J)");
    RelationRecord rel = build_snake_relation(std::move(I), std::move(J), kp, a);
    // Self-checking generation: the expansion must vanish.  A shallow bound
    // is enough to catch sign or index slips; the full-depth check is run
    // by the verification suites.
    if (!verify_relation_symbolic(rel, a, kp + 1))
        throw std::logic_error("snake relation failed its zero check");
    return rel;
}

RelationRecord symplectic_sum_relation(const RowSet& I, const Alphabet& a) {
    if (a.kind != Kind::C)
        throw std::invalid_argument("symplectic sums need a type C alphabet");
    if (static_cast<int>(I.size()) > a.n - 2)
        throw std::invalid_argument("symplectic sum needs |I| <= n-2");
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (I[i] < 1 || I[i] > a.size())
            throw std::invalid_argument("row set element out of range");
        if (i > 0 && I[i] <= I[i - 1])
            throw std::invalid_argument("row set must be strictly increasing");
    }
    RelationRecord rel;
    rel.family = "sympsum";
    rel.lhs = I;
    rel.kprime = 0;
    for (int l = 1; l <= a.n; ++l) {
        RelationRecord::Term t;
        t.coeff = make_rat(1);
        t.deriv = 0;
        t.left = multiset_union(I, {2 * l - 1, 2 * l});
        rel.terms.push_back(std::move(t));
    }
    return rel;
}

RelationRecord symplectic_sum_relation_empty(const Alphabet& a) {
    return symplectic_sum_relation(RowSet{}, a);
}

bool verify_relation_symbolic(const RelationRecord& rel, const Alphabet& a, int trunc) {
    if (rel.terms.empty())
        return true;
    GenericJetMatrix M(a, trunc + rel.terms.front().deriv);
    return expand_relation(rel, M, trunc).is_zero();
}

bool verify_relation_numeric(const RelationRecord& rel, const std::vector<GroupJetPoint>& pts) {
    for (const GroupJetPoint& pt : pts) {
        RatSeries acc(pt.trunc());
        bool first = true;
        for (const auto& t : rel.terms) {
            RatSeries left = pt.minor_multiset_series(t.left);
            if (t.deriv > 0)
                left = left.derivative(t.deriv);
            RatSeries prod = t.right.empty() ? left : left * pt.minor_multiset_series(t.right);
            for (int d = 0; d <= prod.trunc(); ++d)
                prod.coeff(d) *= t.coeff;
            acc = first ? prod : acc + prod;
            first = false;
        }
        if (!acc.is_zero())
            return false;
    }
    return true;
}

RatMatrix inclusion_matrix(int s) {
    std::vector<int> ground(static_cast<std::size_t>(2 * s + 1));
    for (int i = 0; i < 2 * s + 1; ++i)
        ground[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> rows_idx, cols_idx;
    for_each_subset(ground, s, [&](const std::vector<int>& E) { rows_idx.push_back(E); });
    for_each_subset(ground, s + 1, [&](const std::vector<int>& F) { cols_idx.push_back(F); });
    RatMatrix m(rows_idx.size(), std::vector<Rat>(cols_idx.size(), Rat(0)));
    for (std::size_t r = 0; r < rows_idx.size(); ++r)
        for (std::size_t c = 0; c < cols_idx.size(); ++c)
            if (std::includes(cols_idx[c].begin(), cols_idx[c].end(), rows_idx[r].begin(),
                              rows_idx[r].end()))
                m[r][c] = 1;
    return m;
}

namespace {

// One straightening step: the forbidden minor as a combination of strictly
// dominance-greater minors, through the inclusion-matrix system.
std::map<RowSet, Rat> straighten_step(const RowSet& K, const Alphabet& a) {
    int b = 0;
    for (std::size_t p = 0; p + 1 < K.size(); ++p)
        if (K[p] == 2 * static_cast<int>(p + 1) - 1 && K[p + 1] == 2 * static_cast<int>(p + 1)) {
            b = static_cast<int>(p + 1);
            break;
        }
    if (b == 0)
        throw std::logic_error("forbidden minor without an adjacent full pair");

    std::vector<int> full, empty_pairs;
    for (int x = 1; x < b; ++x) {
        bool lo = std::binary_search(K.begin(), K.end(), 2 * x - 1);
        bool hi = std::binary_search(K.begin(), K.end(), 2 * x);
        if (lo && hi)
            full.push_back(x);
        else if (!lo && !hi)
            empty_pairs.push_back(x);
    }
    int s = static_cast<int>(full.size());
    if (static_cast<int>(empty_pairs.size()) != s)
        throw std::logic_error("pair bookkeeping mismatch in straightening");

    std::vector<int> D = full;
    D.insert(D.end(), empty_pairs.begin(), empty_pairs.end());
    D.push_back(b);
    std::sort(D.begin(), D.end());

    std::vector<int> removed;
    for (int x : full) {
        removed.push_back(2 * x - 1);
        removed.push_back(2 * x);
    }
    removed.push_back(2 * b - 1);
    removed.push_back(2 * b);
    std::sort(removed.begin(), removed.end());
    std::vector<int> base = set_difference_sorted(K, removed);

    std::vector<int> L;
    for (int l = 1; l <= a.n; ++l) {
        if (std::binary_search(D.begin(), D.end(), l))
            continue;
        if (std::binary_search(base.begin(), base.end(), 2 * l - 1) ||
            std::binary_search(base.begin(), base.end(), 2 * l))
            continue;
        L.push_back(l);
    }

    std::vector<std::vector<int>> Es, Fs;
    for_each_subset(D, s, [&](const std::vector<int>& E) { Es.push_back(E); });
    for_each_subset(D, s + 1, [&](const std::vector<int>& F) { Fs.push_back(F); });

    RatMatrix M(Es.size(), std::vector<Rat>(Fs.size(), Rat(0)));
    for (std::size_t r = 0; r < Es.size(); ++r)
        for (std::size_t c = 0; c < Fs.size(); ++c)
            if (std::includes(Fs[c].begin(), Fs[c].end(), Es[r].begin(), Es[r].end()))
                M[r][c] = 1;
    RatMatrix Minv = invert(M); // singularity here would be an engine bug

    // Right-hand sides: the remaining symplectic-sum terms, one bundle per E.
    auto set_with_pairs = [&base](const std::vector<int>& pairs) {
        std::vector<int> out = base;
        for (int x : pairs) {
            out.push_back(2 * x - 1);
            out.push_back(2 * x);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<std::map<RowSet, Rat>> rhs(Es.size());
    for (std::size_t r = 0; r < Es.size(); ++r) {
        std::vector<int> IE = set_with_pairs(Es[r]);
        for (int l : L) {
            std::vector<int> KK = IE;
            KK.push_back(2 * l - 1);
            KK.push_back(2 * l);
            std::sort(KK.begin(), KK.end());
            rhs[r][KK] += make_rat(1);
        }
    }

    std::vector<int> F0 = full;
    F0.push_back(b);
    std::sort(F0.begin(), F0.end());
    std::size_t f0 = 0;
    while (f0 < Fs.size() && Fs[f0] != F0)
        ++f0;
    if (f0 == Fs.size())
        throw std::logic_error("lost the input column in the straightening system");

    std::map<RowSet, Rat> out;
    for (std::size_t r = 0; r < Es.size(); ++r) {
        if (Minv[f0][r] == 0)
            continue;
        for (const auto& [set, c] : rhs[r]) {
            Rat v = out[set] - Minv[f0][r] * c;
            if (v == 0)
                out.erase(set);
            else
                out[set] = v;
        }
    }
    return out;
}

} // namespace

MinorCombination straighten_forbidden(const RowSet& J, const Alphabet& a) {
    if (a.kind != Kind::C)
        throw std::invalid_argument("straightening applies to type C minors");
    validate_rowset(J, a);
    if (is_allowed(J, a))
        throw std::invalid_argument("minor is already allowed");

    std::map<RowSet, Rat> allowed_out, pending;
    pending[J] = 1;
    int guard = 0;
    while (!pending.empty()) {
        if (++guard > 100000)
            throw std::logic_error("straightening did not terminate");
        auto it = pending.begin();
        RowSet K = it->first;
        Rat c = it->second;
        pending.erase(it);
        for (const auto& [K2, c2] : straighten_step(K, a)) {
            if (dominance_compare(K2, K) != Ordering::GT)
                throw std::logic_error("straightening step did not increase dominance");
            Rat add = c * c2;
            auto& slot = is_allowed(K2, a) ? allowed_out : pending;
            Rat v = slot[K2] + add;
            if (v == 0)
                slot.erase(K2);
            else
                slot[K2] = v;
        }
    }

    MinorCombination out;
    for (auto& [K, c] : allowed_out)
        out.push_back({c, K});
    return out;
}

PairCombination straighten_product(RowSet I, RowSet J, const Alphabet& a) {
    validate_rowset(I, a);
    validate_rowset(J, a);

    auto key = [](RowSet x, RowSet y) {
        if (y < x)
            std::swap(x, y);
        return std::make_pair(x, y);
    };
    std::map<std::pair<RowSet, RowSet>, Rat> comb;
    comb[key(I, J)] = 1;

    int guard = 0;
    for (;;) {
        if (++guard > 100000)
            throw std::logic_error("product straightening did not terminate");
        // The leading incomparable pair, if any.
        const std::pair<RowSet, RowSet>* lead = nullptr;
        for (const auto& [pr, c] : comb) {
            if (subsets_comparable(pr.first, pr.second))
                continue;
            if (!lead ||
                compare_products(make_product({pr.first, pr.second}, a),
                                 make_product({lead->first, lead->second}, a),
                                 a) == Ordering::GT)
                lead = &pr;
        }
        if (!lead)
            break;
        auto pr = *lead;
        Rat c = comb[pr];
        comb.erase(pr);
        RelationRecord rel = finite_pluecker(pr.first, pr.second, a);
        std::size_t li = leading_term_index(rel, a);
        auto has_dup = [](const std::vector<int>& v) {
            return std::adjacent_find(v.begin(), v.end()) != v.end();
        };
        for (std::size_t t = 0; t < rel.terms.size(); ++t) {
            if (t == li)
                continue;
            const auto& term = rel.terms[t];
            if (has_dup(term.left) || has_dup(term.right))
                continue; // a repeated row: the zero minor
            Rat add = -c * term.coeff / rel.terms[li].coeff;
            auto k2 = key(term.left, term.right);
            Rat v = comb[k2] + add;
            if (v == 0)
                comb.erase(k2);
            else
                comb[k2] = v;
        }
    }

    PairCombination out;
    for (auto& [pr, c] : comb)
        out.entries.push_back({c, pr.first, pr.second});
    return out;
}

std::size_t leading_term_index(const RelationRecord& rel, const Alphabet& a) {
    auto is_zero_minor = [](const std::vector<int>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] == v[i - 1])
                return true;
        return false;
    };
    std::size_t best = rel.terms.size();
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
        const auto& term = rel.terms[t];
        if (term.coeff == 0 || is_zero_minor(term.left) || is_zero_minor(term.right))
            continue;
        if (best == rel.terms.size()) {
            best = t;
            continue;
        }
        std::vector<RowSet> fp{term.left};
        if (!term.right.empty())
            fp.push_back(term.right);
        std::vector<RowSet> fb{rel.terms[best].left};
        if (!rel.terms[best].right.empty())
            fb.push_back(rel.terms[best].right);
        if (compare_products(make_product(fp, a), make_product(fb, a), a) == Ordering::GT)
            best = t;
    }
    if (best == rel.terms.size())
        throw std::logic_error("relation has no nonzero term");
    return best;
}

namespace {

std::string format_multiset(const std::vector<int>& v, const Alphabet& a) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += a.element_token(v[i]);
    }
    return out;
}

} // namespace

std::string relation_to_json(const RelationRecord& rel, const Alphabet& a) {
    nlohmann::ordered_json j;
    j["family"] = rel.family;
    j["pair"]["I"] = format_multiset(rel.lhs, a);
    j["pair"]["J"] = format_multiset(rel.rhs, a);
    j["kprime"] = rel.kprime;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : rel.terms) {
        nlohmann::ordered_json tj;
        tj["coeff"] = rat_to_string(t.coeff);
        tj["deriv"] = t.deriv;
        tj["left"] = format_multiset(t.left, a);
        tj["right"] = format_multiset(t.right, a);
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

} // namespace semiflag
