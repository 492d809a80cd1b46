// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is a finite, exact check at desk scale.

#include "semiflag/basis.hpp"
#include "semiflag/characters.hpp"
#include "semiflag/combinatorics.hpp"
#include "semiflag/linalg.hpp"
#include "semiflag/relations.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

using namespace semiflag;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& fn) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
    if (!detail.empty())
        line << " (" << detail << ")";
    line << " [" << static_cast<int>(secs * 1000) / 1000.0 << "s]";
    std::cout << line.str() << std::endl;
    if (!ok)
        ++failures;
}

// ---- criterion 1 -------------------------------------------------------

bool order_golden_and_axiom(std::string& detail) {
    Alphabet a8{Kind::A, 8};
    auto prod = [&](std::vector<RowSet> fs, const Alphabet& a) {
        return make_product(std::move(fs), a);
    };
    bool golden =
        compare_products(prod({{1, 2, 3}, {4, 6}, {1}, {1}}, a8),
                         prod({{7, 8}, {6, 7}, {3, 6}, {4, 5}}, a8), a8) == Ordering::GT &&
        compare_products(prod({{1, 2, 6}, {1, 5}, {1}, {1}}, a8),
                         prod({{1, 2, 3}, {4, 6}, {3}, {1}}, a8), a8) == Ordering::GT &&
        compare_products(prod({{1, 2, 6, 8}, {1, 5, 7}, {1}, {1}}, a8),
                         prod({{2, 4, 6, 8}, {4, 6, 7}, {3}, {1}}, a8), a8) == Ordering::GT &&
        compare_products(prod({{1, 2, 6, 8}, {1, 5, 7}, {1}, {1}}, a8),
                         prod({{2, 5, 6, 8}, {1, 2, 7}, {3}, {1}}, a8), a8) == Ordering::GT;
    if (!golden) {
        detail = "a reference comparison came out wrong";
        return false;
    }

    // Monomial axiom, exhaustively: P, Q, R over all products of 1..3
    // factors of proper nonempty subsets of {1..4}.  Products are ranked
    // once; P <= Q must imply PR <= QR, checked through the ranks of the
    // <= 6 factor unions.
    Alphabet a4{Kind::A, 4};
    std::vector<RowSet> sets = all_rowsets(a4, 0);
    const int S = static_cast<int>(sets.size());

    std::vector<std::vector<int>> prods3; // sorted factor id lists
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int from) -> void {
            if (!cur.empty())
                prods3.push_back(cur);
            if (cur.size() == 3)
                return;
            for (int i = from; i < S; ++i) {
                cur.push_back(i);
                self(self, i);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }

    auto key_of = [](const std::vector<int>& ids) {
        std::uint64_t key = static_cast<std::uint64_t>(ids.size());
        for (int id : ids)
            key = (key << 4) | static_cast<std::uint64_t>(id + 1);
        return key;
    };
    auto to_product = [&](const std::vector<int>& ids) {
        std::vector<RowSet> fs;
        for (int id : ids)
            fs.push_back(sets[static_cast<std::size_t>(id)]);
        return make_product(std::move(fs), a4);
    };

    // Rank every product of 1..6 factors.
    std::vector<std::vector<int>> all_ids;
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int from) -> void {
            if (!cur.empty())
                all_ids.push_back(cur);
            if (cur.size() == 6)
                return;
            for (int i = from; i < S; ++i) {
                cur.push_back(i);
                self(self, i);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    std::vector<ProductIndex> all_products_cache;
    all_products_cache.reserve(all_ids.size());
    for (const auto& ids : all_ids)
        all_products_cache.push_back(to_product(ids));
    std::vector<std::size_t> order(all_ids.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return compare_products(all_products_cache[x], all_products_cache[y], a4) ==
               Ordering::LT;
    });
    std::unordered_map<std::uint64_t, int> rank;
    rank.reserve(all_ids.size() * 2);
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        rank[key_of(all_ids[order[pos]])] = static_cast<int>(pos);

    // Sanity: ranks are strict (distinct multisets never tie).
    if (rank.size() != all_ids.size()) {
        detail = "rank collision";
        return false;
    }

    std::vector<int> prank(prods3.size());
    for (std::size_t i = 0; i < prods3.size(); ++i)
        prank[i] = rank.at(key_of(prods3[i]));

    long long checked = 0;
    for (std::size_t p = 0; p < prods3.size(); ++p)
        for (std::size_t q = 0; q < prods3.size(); ++q) {
            if (prank[p] > prank[q])
                continue; // only P <= Q
            for (std::size_t r = 0; r < prods3.size(); ++r) {
                std::vector<int> pu, qu;
                std::merge(prods3[p].begin(), prods3[p].end(), prods3[r].begin(),
                           prods3[r].end(), std::back_inserter(pu));
                std::merge(prods3[q].begin(), prods3[q].end(), prods3[r].begin(),
                           prods3[r].end(), std::back_inserter(qu));
                ++checked;
                if (rank.at(key_of(pu)) > rank.at(key_of(qu))) {
                    detail = "axiom violated";
                    return false;
                }
            }
        }
    detail = "4 reference comparisons, " + std::to_string(checked) + " axiom instances";
    return true;
}

// ---- criterion 2 -------------------------------------------------------

bool allowed_counts(std::string& detail) {
    for (int n = 2; n <= 5; ++n)
        for (int l = 2; l <= n; ++l)
            if (allowed_count_enumerated(n, l) != allowed_count_formula(n, l)) {
                detail = "count mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l);
                return false;
            }
    long long agreed = 0;
    for (int n = 1; n <= 4; ++n) {
        Alphabet c{Kind::C, n};
        for (const RowSet& J : all_rowsets(c, 0)) {
            bool allowed = is_allowed(J, c);
            if (allowed != !is_forbidden_literal(J) ||
                allowed != !is_forbidden_adjacent_pair(J)) {
                detail = "criteria disagree on " + format_rowset(J, c);
                return false;
            }
            ++agreed;
        }
    }
    detail = "formula verified for n<=5, criteria agree on " + std::to_string(agreed) +
             " subsets";
    return true;
}

// ---- criterion 3 -------------------------------------------------------

bool type_a_relations(std::string& detail) {
    long long relations = 0, pairs = 0;
    for (int n = 2; n <= 4; ++n) {
        Alphabet a{Kind::A, n};
        auto sets = all_rowsets(a, 0);
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                if (sets[i].size() > 3 || sets[j].size() > 3)
                    continue;
                if (subsets_comparable(sets[i], sets[j]))
                    continue;
                RowSet I = sets[i], J = sets[j];
                canonicalize_pair(I, J);
                int k = snake_k(I, J);
                ++pairs;
                for (int kp = 0; kp < k; ++kp) {
                    RelationRecord rel = semiinf_pluecker(I, J, kp, a);
                    if (!verify_relation_symbolic(rel, a, 4)) {
                        detail = "relation failed to vanish";
                        return false;
                    }
                    std::size_t li = leading_term_index(rel, a);
                    if (rel.terms[li].left != I || rel.terms[li].right != J ||
                        rel.terms[li].deriv != kp) {
                        detail = "leading term is not the (I,J) product";
                        return false;
                    }
                    ++relations;
                }
                if (verify_relation_symbolic(semiinf_pluecker_unchecked(I, J, k, a), a, 4)) {
                    detail = "sum unexpectedly vanishes at k' = k";
                    return false;
                }
            }
    }
    detail = std::to_string(relations) + " relations over " + std::to_string(pairs) +
             " incomparable pairs, D=4";
    return true;
}

// ---- criterion 4 -------------------------------------------------------

bool type_c_identities(std::string& detail) {
    long long sums = 0, straightenings = 0;
    for (int n = 2; n <= 4; ++n) {
        Alphabet c{Kind::C, n};
        std::vector<GroupJetPoint> pts;
        for (int i = 0; i < 20; ++i)
            pts.push_back(random_sp_point(n, 4, 524287u + 1000u * static_cast<unsigned>(n) +
                                                    static_cast<unsigned>(i)));

        std::vector<RowSet> smalls{{}};
        for (const RowSet& I : all_rowsets(c, 0))
            if (static_cast<int>(I.size()) <= n - 2)
                smalls.push_back(I);
        for (const RowSet& I : smalls) {
            RelationRecord sum = symplectic_sum_relation(I, c);
            if (!verify_relation_numeric(sum, pts)) {
                detail = "symplectic sum failed at n=" + std::to_string(n);
                return false;
            }
            ++sums;
        }
        // Negative control: one corrupted sum per rank.
        RelationRecord bad = symplectic_sum_relation(smalls.front(), c);
        bad.terms.front().coeff = -bad.terms.front().coeff;
        if (verify_relation_numeric(bad, pts)) {
            detail = "corrupted sum relation slipped through";
            return false;
        }

        for (const RowSet& J : all_rowsets(c, 0)) {
            if (is_allowed(J, c))
                continue;
            MinorCombination comb = straighten_forbidden(J, c);
            RelationRecord check;
            check.family = "straighten";
            check.lhs = J;
            check.terms.push_back({make_rat(1), 0, J, {}});
            for (const auto& [coef, K] : comb) {
                if (!is_allowed(K, c)) {
                    detail = "straightening produced a forbidden index";
                    return false;
                }
                check.terms.push_back({-coef, 0, K, {}});
            }
            if (!verify_relation_numeric(check, pts)) {
                detail = "straightening identity failed at " + format_rowset(J, c);
                return false;
            }
            ++straightenings;
        }
        // Negative control for the straightening family.
        {
            RowSet J;
            for (const RowSet& K : all_rowsets(c, 0))
                if (!is_allowed(K, c)) {
                    J = K;
                    break;
                }
            MinorCombination comb = straighten_forbidden(J, c);
            RelationRecord check;
            check.terms.push_back({make_rat(1), 0, J, {}});
            for (const auto& [coef, K] : comb)
                check.terms.push_back({coef, 0, K, {}}); // sign flipped on purpose
            if (verify_relation_numeric(check, pts)) {
                detail = "corrupted straightening slipped through";
                return false;
            }
        }
    }
    for (int s = 1; s <= 3; ++s)
        if (exact_det(inclusion_matrix(s)) == 0) {
            detail = "inclusion matrix singular at s=" + std::to_string(s);
            return false;
        }
    detail = std::to_string(sums) + " sum relations, " + std::to_string(straightenings) +
             " straightenings at 20 points each, D=4, seeds 524287+1000n+i";
    return true;
}

// ---- criterion 5 -------------------------------------------------------

std::vector<WeightVectorR> multidegrees_up_to(const Alphabet& a, int cap) {
    auto sets = all_rowsets(a, 0, /*allowed_only=*/true);
    std::vector<WeightVectorR> out;
    std::map<RowSet, int> cur;
    auto rec = [&](auto&& self, std::size_t at, int left) -> void {
        if (at == sets.size()) {
            out.push_back(make_weight_vector(a, cur));
            return;
        }
        for (int take = 0; take <= left; ++take) {
            if (take > 0)
                cur[sets[at]] = take;
            self(self, at + 1, left - take);
            cur.erase(sets[at]);
        }
    };
    rec(rec, 0, cap);
    return out;
}

std::string class_key(const WeightVectorR& r) {
    std::vector<int> sizes;
    WeightKey w(static_cast<std::size_t>(r.alph.n), 0);
    for (const auto& [I, m] : r.r) {
        for (int i = 0; i < m; ++i)
            sizes.push_back(static_cast<int>(I.size()));
        WeightKey wi = rowset_weight(I, r.alph);
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] += m * wi[i];
    }
    std::sort(sizes.begin(), sizes.end());
    std::string key;
    for (int s : sizes)
        key += std::to_string(s) + ".";
    key += "|";
    for (int x : w)
        key += std::to_string(x) + ".";
    return key;
}

bool count_character_rank(std::string& detail) {
    long long rows_checked = 0;
    for (int pass = 0; pass < 2; ++pass) {
        Alphabet a = pass == 0 ? Alphabet{Kind::A, 3} : Alphabet{Kind::C, 2};
        int cap = pass == 0 ? 3 : 2;
        VerifyMode mode = pass == 0 ? VerifyMode::Symbolic : VerifyMode::Numeric;
        std::set<std::string> done;
        for (const WeightVectorR& r : multidegrees_up_to(a, cap)) {
            if (!done.insert(class_key(r)).second)
                continue; // its weight class was already certified
            auto reports = verify_presentation_class(r, 4, mode, pass == 0 ? 0 : 40, 777);
            for (const auto& [member, rep] : reports) {
                for (const auto& row : rep.rows) {
                    ++rows_checked;
                    if (row.verdict != "ok") {
                        detail = "mismatch: degree " + std::to_string(row.degree) +
                                 " count=" + std::to_string(row.basis_count) +
                                 " char=" + std::to_string(row.char_coeff) +
                                 " rank=" + std::to_string(row.rank);
                        return false;
                    }
                }
            }
        }
    }
    detail = std::to_string(rows_checked) + " (multidegree, degree) cells certified, seed 777";
    return true;
}

// ---- criterion 6 -------------------------------------------------------

bool character_sanity(std::string& detail) {
    long long checked = 0;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<int> ranks;
        for (int n = pass == 0 ? 2 : 1; n <= (pass == 0 ? 4 : 3); ++n) {
            Alphabet a = pass == 0 ? Alphabet{Kind::A, n} : Alphabet{Kind::C, n};
            int rk = a.max_subset();
            std::vector<std::vector<int>> lams;
            lams.push_back(std::vector<int>(static_cast<std::size_t>(rk), 0));
            for (int p = 0; p < rk; ++p)
                for (int q = p; q < rk; ++q) {
                    std::vector<int> lam(static_cast<std::size_t>(rk), 0);
                    lam[static_cast<std::size_t>(p)] += 1;
                    lam[static_cast<std::size_t>(q)] += 1;
                    lams.push_back(std::move(lam));
                }
            for (int p = 0; p < rk; ++p) {
                std::vector<int> lam(static_cast<std::size_t>(rk), 0);
                lam[static_cast<std::size_t>(p)] = 1;
                lams.push_back(std::move(lam));
            }
            for (const auto& lam : lams) {
                LocalCharacter lc = local_weyl_character(a, lam, 12);
                if (lc.status != LocalCharacter::Status::Polynomial) {
                    detail = "inconclusive window at qmax=12";
                    return false;
                }
                for (const auto& [key, s] : lc.series.w)
                    for (int d = 0; d <= s.qmax(); ++d)
                        if (s.coeff(d) < 0) {
                            detail = "negative character coefficient";
                            return false;
                        }
                int weight_sum = 0;
                for (int x : lam)
                    weight_sum += x;
                if (weight_sum == 1) {
                    int p = 0;
                    while (lam[static_cast<std::size_t>(p)] == 0)
                        ++p;
                    long long expect = pass == 0 ? binomial(n, p + 1)
                                                 : allowed_count_formula(n, p + 1);
                    if (lc.dimension != expect) {
                        detail = "fundamental dimension mismatch";
                        return false;
                    }
                }
                ++checked;
            }
        }
    }
    // The flagship number: dim W(omega_2) = 5 for sp_4.
    if (local_weyl_character(Alphabet{Kind::C, 2}, {0, 1}, 12).dimension != 5) {
        detail = "sp_4 omega_2 is not 5-dimensional";
        return false;
    }
    detail = std::to_string(checked) + " local characters, qmax=12";
    return true;
}

// ---- criterion 7 -------------------------------------------------------

bool toric_distinctness(std::string& detail) {
    long long bases = 0;
    for (int pass = 0; pass < 2; ++pass) {
        Alphabet a = pass == 0 ? Alphabet{Kind::A, 3} : Alphabet{Kind::C, 2};
        int cap = pass == 0 ? 3 : 2;
        for (const WeightVectorR& r : multidegrees_up_to(a, cap)) {
            if (!leading_monomial_basis_check(r, 4)) {
                detail = "leading data collision inside a multidegree";
                return false;
            }
            ++bases;
        }
    }
    // Type C leading data must coincide with the embedded type A_{2n} data.
    Alphabet c2{Kind::C, 2};
    Alphabet a4{Kind::A, 4};
    GenericJetMatrix Mc(c2, 4), Ma(a4, 4);
    for (const RowSet& I : all_rowsets(c2, 0, /*allowed_only=*/true)) {
        if (static_cast<int>(I.size()) > a4.max_subset())
            continue;
        for (int k = 0; k <= 4; ++k)
            if (!(Mc.leading_series(I).coeff(k) == Ma.leading_series(I).coeff(k))) {
                detail = "type C leading data does not embed into type A";
                return false;
            }
    }
    detail = std::to_string(bases) + " multidegree windows, Dmax=4";
    return true;
}

} // namespace

int main() {
    criterion(1, "order reference comparisons and the monomial axiom (n=4, <=3 factors)",
              order_golden_and_axiom);
    criterion(2, "allowed counts match binom(2n,l)-binom(2n,l-2); criteria agree (n<=4)",
              allowed_counts);
    criterion(3, "type A snake relations vanish identically, lead with (I,J), fail at k'=k",
              type_a_relations);
    criterion(4, "type C sums and straightenings vanish at 20 symplectic points; controls fail",
              type_c_identities);
    criterion(5, "count = character = graded rank (A n=3 sum r<=3; C n=2 sum r<=2; d<=4)",
              count_character_rank);
    criterion(6, "(q)_lambda ch W is a nonnegative polynomial; fundamental dimensions match",
              character_sanity);
    criterion(7, "toric leading data distinct per multidegree; C embeds into A",
              toric_distinctness);
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
