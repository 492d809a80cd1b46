#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semiflag/basis.hpp"
#include "semiflag/linalg.hpp"

#include <random>

using namespace semiflag;

namespace {

const Alphabet A3{Kind::A, 3};
const Alphabet A4{Kind::A, 4};
const Alphabet C2{Kind::C, 2};
const Alphabet C3{Kind::C, 3};

// Every multidegree over the admissible sets with total multiplicity <= cap.
std::vector<WeightVectorR> all_multidegrees(const Alphabet& a, int cap) {
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

} // namespace

TEST_CASE("enumerate_basis: two copies of one generator are partitions") {
    WeightVectorR r = make_weight_vector(A3, {{{1}, 2}});
    auto counts = basis_counts(r, 2);
    CHECK(counts == std::vector<long long>{1, 1, 2});
    auto monos = enumerate_basis(r, 2);
    CHECK(monos.size() == 4); // (0,0) (0,1) (0,2) (1,1)
}

TEST_CASE("enumerate_basis: the offset sits on the greater index") {
    WeightVectorR r = make_weight_vector(A4, {{{2, 3}, 1}, {{1, 4}, 1}});
    auto monos = enumerate_basis(r, 3);
    for (const auto& b : monos)
        for (const auto& [I, l] : b.factors)
            if (I == RowSet{1, 4})
                CHECK(l >= 1); // k({2,3},{1,4}) = 1 pushes the greater index up
    auto counts = basis_counts(r, 3);
    CHECK(counts == std::vector<long long>{0, 1, 2, 3});
}

TEST_CASE("enumerate_basis: empty multidegree has only the empty monomial") {
    WeightVectorR r = make_weight_vector(A3, {});
    auto monos = enumerate_basis(r, 3);
    REQUIRE(monos.size() == 1);
    CHECK(monos[0].factors.empty());
}

TEST_CASE("basis counts reproduce the component character (type A, n <= 4)") {
    for (const Alphabet& a : {A3, A4}) {
        int cap = a.n == 3 ? 3 : 2;
        for (const auto& r : all_multidegrees(a, cap)) {
            QSeries comp = component_character(r, 4);
            auto counts = basis_counts(r, 4);
            for (int d = 0; d <= 4; ++d)
                CHECK(counts[static_cast<std::size_t>(d)] == comp.coeff(d));
        }
    }
}

TEST_CASE("basis counts reproduce the component character (type C, n <= 3)") {
    for (const Alphabet& a : {C2, C3}) {
        for (const auto& r : all_multidegrees(a, 2)) {
            QSeries comp = component_character(r, 4);
            auto counts = basis_counts(r, 4);
            for (int d = 0; d <= 4; ++d)
                CHECK(counts[static_cast<std::size_t>(d)] == comp.coeff(d));
        }
    }
}

TEST_CASE("the count identity holds under both orientations of the order") {
    for (const auto& r : all_multidegrees(A4, 2)) {
        QSeries comp = component_character(r, 4);
        for (OrderChoice o :
             {OrderChoice::Standard, OrderChoice::Reversed, OrderChoice::Dominance}) {
            auto counts = basis_counts(r, 4, o);
            for (int d = 0; d <= 4; ++d)
                CHECK(counts[static_cast<std::size_t>(d)] == comp.coeff(d));
        }
    }
}

TEST_CASE("presentation: single index set has no relations") {
    WeightVectorR r = make_weight_vector(A3, {{{1, 2}, 2}});
    PresentationReport rep = verify_presentation(r, 3, VerifyMode::Symbolic);
    CHECK(rep.ok);
    for (const auto& row : rep.rows) {
        CHECK(row.rank == row.basis_count);
        CHECK(row.verdict == "ok");
    }
}

TEST_CASE("presentation: an incomparable pair certifies exactly (type A)") {
    WeightVectorR r = make_weight_vector(A4, {{{2, 3}, 1}, {{1, 4}, 1}});
    PresentationReport rep = verify_presentation(r, 3, VerifyMode::Symbolic);
    CHECK(rep.ok);
    for (const auto& row : rep.rows)
        CHECK(row.rank == row.char_coeff);
}

TEST_CASE("presentation: whole weight classes agree (type A n=3, pairs)") {
    WeightVectorR r = make_weight_vector(A3, {{{2, 3}, 1}, {{1}, 1}});
    auto reports = verify_presentation_class(r, 3, VerifyMode::Symbolic);
    CHECK(reports.size() == 3); // {23}{1}, {13}{2}, {12}{3}
    for (const auto& [m, rep] : reports)
        CHECK(rep.ok);
}

TEST_CASE("presentation: numeric mode for type C n=2") {
    WeightVectorR r = make_weight_vector(C2, {{{1, 3}, 1}, {{2, 4}, 1}});
    PresentationReport rep = verify_presentation(r, 3, VerifyMode::Numeric, 25, 99);
    CHECK(rep.ok);
    WeightVectorR r2 = make_weight_vector(C2, {{{1, 4}, 1}, {{2, 3}, 1}});
    PresentationReport rep2 = verify_presentation(r2, 3, VerifyMode::Numeric, 25, 99);
    CHECK(rep2.ok);
}

TEST_CASE("presentation: mode/alphabet mismatches are rejected") {
    CHECK_THROWS_AS(
        verify_presentation(make_weight_vector(C2, {{{1, 3}, 1}}), 2, VerifyMode::Symbolic),
        std::invalid_argument);
    CHECK_THROWS_AS(
        verify_presentation(make_weight_vector(A3, {{{1}, 1}}), 2, VerifyMode::Numeric),
        std::invalid_argument);
}

TEST_CASE("leading data of basis monomials stays distinct") {
    CHECK(leading_monomial_basis_check(make_weight_vector(A3, {{{1, 3}, 1}, {{2, 3}, 1}}), 3));
    CHECK(leading_monomial_basis_check(make_weight_vector(A3, {{{1}, 2}, {{1, 2}, 1}}), 3));
    CHECK(leading_monomial_basis_check(make_weight_vector(A3, {{{2}, 1}}), 3));
    for (const auto& r : all_multidegrees(C2, 2))
        CHECK(leading_monomial_basis_check(r, 3));
}

TEST_CASE("presentation report serializes to the documented shape") {
    WeightVectorR r = make_weight_vector(A3, {{{1}, 1}});
    PresentationReport rep = verify_presentation(r, 2, VerifyMode::Symbolic);
    std::string js = presentation_report_to_json(r, rep);
    CHECK(js.find("\"multidegree\"") != std::string::npos);
    CHECK(js.find("\"jetDegree\"") != std::string::npos);
    CHECK(js.find("\"basisCount\"") != std::string::npos);
    CHECK(js.find("\"charCoeff\"") != std::string::npos);
    CHECK(js.find("\"rank\"") != std::string::npos);
    CHECK(js.find("\"verdict\"") != std::string::npos);
}

TEST_CASE("incremental echelon agrees with fraction-free rank on random matrices") {
    std::mt19937_64 g(12345);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + g() % 8, cols = 1 + g() % 8;
        RatMatrix m(rows, std::vector<Rat>(cols));
        for (auto& r : m)
            for (auto& x : r)
                x = make_rat(static_cast<long>(g() % 5) - 2, 1 + static_cast<long>(g() % 2));
        if (rows >= 2 && g() % 2)
            m[rows - 1] = m[0]; // force rank deficits regularly
        if (rows >= 3 && g() % 3 == 0)
            for (std::size_t j = 0; j < cols; ++j)
                m[rows - 2][j] = m[0][j] + m[1][j];
        RowEchelon e(cols);
        for (const auto& r : m)
            e.add_row(r);
        CHECK(e.rank() == exact_rank(m));
    }
}
