#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semiflag/relations.hpp"

#include <algorithm>
#include <set>

using namespace semiflag;

namespace {

const Alphabet A3{Kind::A, 3};
const Alphabet A4{Kind::A, 4};
const Alphabet A6{Kind::A, 6};
const Alphabet C2{Kind::C, 2};
const Alphabet C3{Kind::C, 3};

std::vector<GroupJetPoint> sp_points(int n, int count, std::uint64_t seed) {
    std::vector<GroupJetPoint> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back(random_sp_point(n, 4, seed + static_cast<std::uint64_t>(i)));
    return pts;
}

} // namespace

TEST_CASE("finite exchange: the classical three-term identity") {
    RelationRecord rel = finite_pluecker({2, 3}, {1, 4}, A4);
    REQUIRE(rel.terms.size() == 3);
    CHECK(verify_relation_symbolic(rel, A4, 0));
    CHECK(verify_relation_symbolic(rel, A4, 3));

    // Normalized so the (I,J) term carries +1; the three-term identity is
    // m_23 m_14 - m_13 m_24 + m_12 m_34 = 0.
    std::map<std::pair<RowSet, RowSet>, Rat> got;
    for (const auto& t : rel.terms)
        got[{t.left, t.right}] = t.coeff;
    CHECK(got[{{2, 3}, {1, 4}}] == make_rat(1));
    CHECK(got[{{1, 3}, {2, 4}}] == make_rat(-1));
    CHECK(got[{{1, 2}, {3, 4}}] == make_rat(1));
}

TEST_CASE("finite exchange with factors of unequal sizes") {
    RelationRecord rel = finite_pluecker({2, 3}, {1}, A3);
    CHECK(verify_relation_symbolic(rel, A3, 2));
    std::size_t li = leading_term_index(rel, A3);
    CHECK(rel.terms[li].left == std::vector<int>{2, 3});
    CHECK(rel.terms[li].right == std::vector<int>{1});
}

TEST_CASE("finite exchange rejects comparable pairs") {
    CHECK_THROWS_AS(finite_pluecker({1, 2}, {2, 3}, A3), std::invalid_argument);
}

TEST_CASE("leading product of the three-term identity") {
    RelationRecord rel = finite_pluecker({2, 3}, {1, 4}, A4);
    std::size_t li = leading_term_index(rel, A4);
    CHECK(rel.terms[li].left == std::vector<int>{2, 3});
    CHECK(rel.terms[li].right == std::vector<int>{1, 4});
}

TEST_CASE("snake relation at k'=0 coincides with the finite relation for one turn") {
    RelationRecord fin = finite_pluecker({2, 3}, {1, 4}, A4);
    RelationRecord snk = semiinf_pluecker({2, 3}, {1, 4}, 0, A4);
    REQUIRE(fin.terms.size() == snk.terms.size());
    std::map<std::pair<RowSet, RowSet>, Rat> a, b;
    for (const auto& t : fin.terms)
        a[{t.left, t.right}] = t.coeff;
    for (const auto& t : snk.terms)
        b[{t.left, t.right}] = t.coeff;
    CHECK(a == b);
    CHECK(verify_relation_symbolic(snk, A4, 3));
}

TEST_CASE("snake relations vanish exactly below k and fail at k") {
    RowSet I{1, 4, 5}, J{2, 3, 6};
    REQUIRE(snake_k(I, J) == 2);
    for (int kp = 0; kp < 2; ++kp)
        CHECK(verify_relation_symbolic(semiinf_pluecker(I, J, kp, A6), A6, 2));
    CHECK_FALSE(verify_relation_symbolic(semiinf_pluecker_unchecked(I, J, 2, A6), A6, 2));
    CHECK_THROWS_AS(semiinf_pluecker(I, J, 2, A6), std::invalid_argument);
}

TEST_CASE("comparable pairs carry no snake relation") {
    CHECK_THROWS_AS(semiinf_pluecker({1, 2}, {2, 3}, 0, A3), std::invalid_argument);
}

TEST_CASE("every snake relation for n <= 4 vanishes and leads with (I,J)") {
    for (int n = 3; n <= 4; ++n) {
        Alphabet a{Kind::A, n};
        auto sets = all_rowsets(a, 0);
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                if (subsets_comparable(sets[i], sets[j]))
                    continue;
                RowSet I = sets[i], J = sets[j];
                canonicalize_pair(I, J);
                int k = snake_k(I, J);
                for (int kp = 0; kp < k; ++kp) {
                    RelationRecord rel = semiinf_pluecker(I, J, kp, a);
                    CHECK(verify_relation_symbolic(rel, a, 3));
                    std::size_t li = leading_term_index(rel, a);
                    CHECK(rel.terms[li].left == I);
                    CHECK(rel.terms[li].right == J);
                    CHECK(rel.terms[li].coeff == make_rat(1));
                }
            }
    }
}

TEST_CASE("k(I,J) equals the last vanishing derivative order (n = 3 exhaustive)") {
    auto sets = all_rowsets(A3, 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            RowSet I = sets[i], J = sets[j];
            if (subsets_comparable(I, J))
                continue;
            int k = snake_k(I, J);
            int observed = 0;
            while (verify_relation_symbolic(
                semiinf_pluecker_unchecked(I, J, observed, A3), A3, 2))
                ++observed;
            CHECK(observed == k);
        }
}

TEST_CASE("a corrupted relation does not verify") {
    RelationRecord rel = finite_pluecker({2, 3}, {1, 4}, A4);
    rel.terms[1].coeff = -rel.terms[1].coeff;
    CHECK_FALSE(verify_relation_symbolic(rel, A4, 0));
    RelationRecord empty;
    CHECK(verify_relation_symbolic(empty, A4, 3));
}

TEST_CASE("symplectic sums vanish at symplectic points only") {
    auto pts2 = sp_points(2, 20, 101);
    RelationRecord sum = symplectic_sum_relation({}, C2);
    REQUIRE(sum.terms.size() == 2);
    CHECK(verify_relation_numeric(sum, pts2));
    CHECK_FALSE(verify_relation_symbolic(sum, C2, 2));

    auto pts3 = sp_points(3, 20, 202);
    RelationRecord sum3 = symplectic_sum_relation({1}, C3); // internal {1} = element 1
    REQUIRE(sum3.terms.size() == 3);
    CHECK(verify_relation_numeric(sum3, pts3));

    std::vector<GroupJetPoint> generic;
    for (int i = 0; i < 5; ++i)
        generic.push_back(random_generic_point(C2, 4, 900 + i));
    CHECK_FALSE(verify_relation_numeric(sum, generic));
}

TEST_CASE("symplectic sums reject oversized index sets") {
    CHECK_THROWS_AS(symplectic_sum_relation({1}, C2), std::invalid_argument);
}

TEST_CASE("straightening: reference outputs") {
    auto c2 = straighten_forbidden(parse_rowset("1,1b", C2), C2);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].first == make_rat(-1));
    CHECK(format_rowset(c2[0].second, C2) == "2,2b");

    auto c3 = straighten_forbidden(parse_rowset("1,1b", C3), C3);
    REQUIRE(c3.size() == 2);
    for (const auto& [c, K] : c3)
        CHECK(c == make_rat(-1));

    Alphabet c4a{Kind::C, 4};
    auto c4 = straighten_forbidden(parse_rowset("2,2b,3,3b", c4a), c4a);
    REQUIRE(c4.size() == 2);
}

TEST_CASE("straightening outputs are allowed, dominance-greater, and exact") {
    for (int n = 2; n <= 4; ++n) {
        Alphabet c{Kind::C, n};
        auto pts = sp_points(n, 12, 7000 + static_cast<std::uint64_t>(n));
        for (const RowSet& J : all_rowsets(c, 0)) {
            if (is_allowed(J, c))
                continue;
            MinorCombination comb = straighten_forbidden(J, c);
            RelationRecord check;
            check.family = "straighten";
            check.lhs = J;
            check.terms.push_back({make_rat(1), 0, J, {}});
            for (const auto& [coef, K] : comb) {
                CHECK(is_allowed(K, c));
                CHECK(dominance_compare(K, J) == Ordering::GT);
                check.terms.push_back({-coef, 0, K, {}});
            }
            CHECK(verify_relation_numeric(check, pts));
        }
    }
}

TEST_CASE("straightening rejects allowed input; inclusion matrices are regular") {
    CHECK_THROWS_AS(straighten_forbidden(parse_rowset("2,2b", C2), C2),
                    std::invalid_argument);
    for (int s = 1; s <= 3; ++s)
        CHECK(exact_det(inclusion_matrix(s)) != 0);
}

TEST_CASE("product straightening: the incomparable pair rewrites downward") {
    PairCombination pc = straighten_product({2, 3}, {1, 4}, A4);
    REQUIRE(pc.entries.size() == 2);
    std::map<std::pair<RowSet, RowSet>, Rat> got;
    for (const auto& e : pc.entries)
        got[{e.left, e.right}] = e.coeff;
    CHECK(got[{{1, 3}, {2, 4}}] == make_rat(1));
    CHECK(got[{{1, 2}, {3, 4}}] == make_rat(-1));
}

TEST_CASE("product straightening leaves comparable inputs unchanged") {
    PairCombination pc = straighten_product({1, 2}, {2, 3}, A3);
    REQUIRE(pc.entries.size() == 1);
    CHECK(pc.entries[0].coeff == make_rat(1));
}

TEST_CASE("product straightening outputs verify symbolically (n = 4, all pairs)") {
    auto sets = all_rowsets(A4, 0);
    GenericJetMatrix M(A4, 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (subsets_comparable(sets[i], sets[j]))
                continue;
            PairCombination pc = straighten_product(sets[i], sets[j], A4);
            JetPolynomial acc =
                (M.minor_series(sets[i]).coeff(0) * M.minor_series(sets[j]).coeff(0));
            for (const auto& e : pc.entries) {
                CHECK(subsets_comparable(e.left, e.right));
                acc -= (M.minor_series(e.left).coeff(0) * M.minor_series(e.right).coeff(0))
                           .scaled(e.coeff);
            }
            CHECK(acc.is_zero());
        }
}

TEST_CASE("relation JSON export carries the whole record") {
    RelationRecord rel = semiinf_pluecker({2, 3}, {1, 4}, 0, A4);
    std::string js = relation_to_json(rel, A4);
    CHECK(js.find("\"family\":\"semiinf\"") != std::string::npos);
    CHECK(js.find("\"kprime\":0") != std::string::npos);
    CHECK(js.find("\"left\":\"2,3\"") != std::string::npos);
}
