// semiflag: exact computations around minors of current groups in types A
// and C: product orders, snakes, exchange relations, straightening,
// characters and basis certification.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "semiflag/basis.hpp"
#include "semiflag/characters.hpp"
#include "semiflag/combinatorics.hpp"
#include "semiflag/relations.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

using namespace semiflag;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string type = "A";
    int n = 0; // 0: infer from the subsets on the command line
    int trunc = kDefaultTrunc;
    int qmax = 12;
    std::uint64_t seed = 0;
    std::string format = "plain";
    std::string out_path;
};

Kind kind_of(const Options& o) {
    if (o.type == "A" || o.type == "a")
        return Kind::A;
    if (o.type == "C" || o.type == "c")
        return Kind::C;
    throw std::invalid_argument("unknown type '" + o.type + "' (expected A or C)");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t at = text.find(sep, pos);
        parts.push_back(text.substr(pos, at == std::string::npos ? std::string::npos : at - pos));
        if (at == std::string::npos)
            break;
        pos = at + 1;
    }
    return parts;
}

// Subsets come as "1,2b,3" or compact "12b3"; products as factors joined by
// '|'; multidegrees as "set=mult" pairs.  When --n is omitted it is
// inferred jointly from every subset on the command line.
int infer_n(const std::vector<std::string>& subset_texts, Kind kind, int explicit_n) {
    if (explicit_n > 0)
        return explicit_n;
    Alphabet wide{kind, 400};
    int need = 1;
    for (const std::string& text : subset_texts)
        for (const std::string& part : split(text, '|')) {
            std::string body = part.substr(0, part.find('='));
            if (body.empty())
                continue;
            RowSet s = parse_rowset(body, wide);
            int hi = s.back();
            int req = kind == Kind::A ? std::max(hi, static_cast<int>(s.size()) + 1)
                                      : std::max((hi + 1) / 2, static_cast<int>(s.size()));
            need = std::max(need, req);
        }
    return need;
}

std::vector<RowSet> parse_factors(const std::string& text, const Alphabet& a) {
    std::vector<RowSet> sets;
    for (const std::string& part : split(text, '|'))
        sets.push_back(parse_rowset(part, a));
    return sets;
}

RowSet parse_one(const std::string& text, const Alphabet& a) {
    auto f = parse_factors(text, a);
    if (f.size() != 1)
        throw std::invalid_argument("expected a single subset, got a product");
    return f[0];
}

std::map<RowSet, int> parse_multidegree(const std::string& text, const Alphabet& a) {
    std::map<RowSet, int> r;
    for (const std::string& part : split(text, '|')) {
        std::size_t eq = part.find('=');
        std::string set_text = eq == std::string::npos ? part : part.substr(0, eq);
        int mult = 1;
        if (eq != std::string::npos)
            mult = std::stoi(part.substr(eq + 1));
        r[parse_one(set_text, a)] += mult;
    }
    return r;
}

std::vector<int> parse_lambda(const std::string& text) {
    std::vector<int> out;
    for (const std::string& tok : split(text, ','))
        out.push_back(std::stoi(tok));
    return out;
}

void emit(const Options& o, const std::string& payload) {
    if (o.out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream f(o.out_path);
    if (!f)
        throw std::invalid_argument("cannot open output file '" + o.out_path + "'");
    f << payload << "\n";
}

json point_to_json(const GroupJetPoint& pt) {
    json j;
    j["kind"] = pt.alphabet().kind == Kind::A ? "A" : "C";
    j["n"] = pt.alphabet().n;
    j["trunc"] = pt.trunc();
    j["seed"] = pt.seed();
    auto rows = json::array();
    for (int u = 1; u <= pt.alphabet().size(); ++u) {
        auto row = json::array();
        for (int v = 1; v <= pt.alphabet().size(); ++v) {
            auto coeffs = json::array();
            for (int d = 0; d <= pt.trunc(); ++d)
                coeffs.push_back(rat_to_string(pt.entry(u, v).coeff(d)));
            row.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for minors of current groups (types A and C)"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    if (const char* env = std::getenv("SEMIFLAG_SEED"))
        o.seed = std::strtoull(env, nullptr, 10);
    app.add_option("--type,-t", o.type, "alphabet type: A or C")->capture_default_str();
    app.add_option("--n", o.n, "rank parameter (inferred from subsets when omitted)");
    app.add_option("--trunc,-D", o.trunc, "series truncation bound")->capture_default_str();
    app.add_option("--qmax", o.qmax, "q-series truncation")->capture_default_str();
    app.add_option("--seed", o.seed, "random seed (env SEMIFLAG_SEED as fallback)");
    app.add_option("--format", o.format, "output format: plain|json|csv")->capture_default_str();
    app.add_option("--out", o.out_path, "write output to a file instead of stdout");

    std::string lhs, rhs, set_text, r_text, lambda_text, mode_text = "auto", family = "semiinf";
    int kprime = -1, size_arg = 0, dmax = 4, points = 0, count_arg = 1;

    auto* order = app.add_subcommand("order", "monomial order on products of minors");
    order->fallthrough();
    auto* order_compare = order->add_subcommand("compare", "compare two products");
    order_compare->fallthrough();
    order_compare->add_option("--lhs", lhs, "left product, factors joined by '|'")->required();
    order_compare->add_option("--rhs", rhs, "right product")->required();

    auto* snake_cmd = app.add_subcommand("snake", "snake and k(I,J) of a pair");
    snake_cmd->fallthrough();
    snake_cmd->add_option("--lhs", lhs, "first subset")->required();
    snake_cmd->add_option("--rhs", rhs, "second subset")->required();

    auto* allowed_cmd = app.add_subcommand("allowed", "type C allowed/forbidden minors");
    allowed_cmd->fallthrough();
    allowed_cmd->add_option("--set", set_text, "classify one subset");
    allowed_cmd->add_option("--size", size_arg, "count allowed minors of one size");

    auto* relations = app.add_subcommand("relations", "exchange relation families");
    relations->fallthrough();
    auto* rel_gen = relations->add_subcommand("generate", "emit relations for a pair");
    auto* rel_verify = relations->add_subcommand("verify", "generate and verify relations");
    for (auto* cmd : {rel_gen, rel_verify}) {
        cmd->fallthrough();
        cmd->add_option("--lhs", lhs, "first subset");
        cmd->add_option("--rhs", rhs, "second subset");
        cmd->add_option("--kprime", kprime, "single derivative order (default: all)");
        cmd->add_option("--family", family, "semiinf|finite|sympsum")->capture_default_str();
        cmd->add_option("--set", set_text, "index set for sympsum (may be empty)");
        cmd->add_option("--points", points, "sample points for numeric families");
    }

    auto* straighten = app.add_subcommand("straighten", "rewrite into the standard spanning set");
    straighten->fallthrough();
    auto* str_minor = straighten->add_subcommand("minor", "forbidden minor -> allowed minors");
    str_minor->fallthrough();
    str_minor->add_option("--set", set_text, "forbidden subset")->required();
    str_minor->add_option("--points", points, "verification sample points");
    auto* str_prod = straighten->add_subcommand("product", "incomparable product -> comparable");
    str_prod->fallthrough();
    str_prod->add_option("--lhs", lhs, "first subset")->required();
    str_prod->add_option("--rhs", rhs, "second subset")->required();

    auto* character = app.add_subcommand("character", "q-characters of Weyl modules");
    character->fallthrough();
    auto* ch_comp = character->add_subcommand("component", "one multidegree component");
    ch_comp->fallthrough();
    ch_comp->add_option("--r", r_text, "multidegree, e.g. \"2,3=1|1,4=1\"")->required();
    auto* ch_weyl = character->add_subcommand("weyl", "global Weyl character");
    ch_weyl->fallthrough();
    ch_weyl->add_option("--lambda", lambda_text, "fundamental coordinates")->required();
    auto* ch_local = character->add_subcommand("local", "local Weyl character");
    ch_local->fallthrough();
    ch_local->add_option("--lambda", lambda_text, "fundamental coordinates")->required();

    auto* basis = app.add_subcommand("basis", "basis monomials and presentation ranks");
    basis->fallthrough();
    auto* basis_enum = basis->add_subcommand("enumerate", "offset-clearing monomials");
    basis_enum->fallthrough();
    basis_enum->add_option("--r", r_text, "multidegree")->required();
    basis_enum->add_option("--dmax", dmax, "jet degree bound")->capture_default_str();
    auto* basis_verify = basis->add_subcommand("verify", "count = character = graded rank");
    basis_verify->fallthrough();
    basis_verify->add_option("--r", r_text, "multidegree")->required();
    basis_verify->add_option("--dmax", dmax, "jet degree bound")->capture_default_str();
    basis_verify->add_option("--mode", mode_text, "symbolic|numeric|auto")->capture_default_str();
    basis_verify->add_option("--points", points, "sample points (numeric mode)");

    auto* oracle = app.add_subcommand("oracle", "exact random group jet points");
    oracle->fallthrough();
    auto* oracle_sample = oracle->add_subcommand("sample", "sample and export points");
    oracle_sample->fallthrough();
    oracle_sample->add_option("--count", count_arg, "number of points")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        Kind kind = kind_of(o);

        if (order_compare->parsed()) {
            Alphabet a{kind, infer_n({lhs, rhs}, kind, o.n)};
            Ordering r = compare_products(make_product(parse_factors(lhs, a), a),
                                          make_product(parse_factors(rhs, a), a), a);
            std::string verdict = r == Ordering::GT ? "GT" : r == Ordering::LT ? "LT" : "EQ";
            if (o.format == "json") {
                json j;
                j["result"] = verdict;
                emit(o, j.dump());
            } else {
                emit(o, verdict);
            }
            return 0;
        }

        if (snake_cmd->parsed()) {
            Alphabet a{kind, infer_n({lhs, rhs}, kind, o.n)};
            SnakeData s = snake(parse_one(lhs, a), parse_one(rhs, a));
            json j;
            auto vals = json::array();
            for (int v : s.values()) {
                if (kind == Kind::A)
                    vals.push_back(v);
                else
                    vals.push_back(a.element_token(v));
            }
            j["S"] = std::move(vals);
            j["k"] = s.k;
            emit(o, j.dump());
            return 0;
        }

        if (allowed_cmd->parsed()) {
            if (kind != Kind::C)
                throw std::invalid_argument("allowed/forbidden is a type C notion; pass --type C");
            if (!set_text.empty()) {
                Alphabet a{kind, infer_n({set_text}, kind, o.n)};
                RowSet J = parse_one(set_text, a);
                bool ok = is_allowed(J, a);
                bool agree = (!ok == is_forbidden_literal(J)) &&
                             (!ok == is_forbidden_adjacent_pair(J));
                json j;
                j["set"] = format_rowset(J, a);
                j["allowed"] = ok;
                j["criteriaAgree"] = agree;
                emit(o, j.dump());
                return agree ? 0 : 1;
            }
            if (o.n == 0)
                throw std::invalid_argument("--size needs an explicit --n");
            long long count = allowed_count_enumerated(o.n, size_arg);
            long long formula = allowed_count_formula(o.n, size_arg);
            json j;
            j["n"] = o.n;
            j["size"] = size_arg;
            j["count"] = count;
            j["formula"] = formula;
            emit(o, j.dump());
            return count == formula ? 0 : 1;
        }

        if (rel_gen->parsed() || rel_verify->parsed()) {
            bool verify = rel_verify->parsed();
            std::vector<RelationRecord> rels;
            Alphabet a{kind, 1};
            if (family == "sympsum") {
                if (kind != Kind::C)
                    throw std::invalid_argument("sympsum needs --type C");
                if (o.n == 0)
                    throw std::invalid_argument("sympsum needs an explicit --n");
                a.n = o.n;
                RowSet I;
                if (!set_text.empty())
                    I = parse_one(set_text, a);
                rels.push_back(symplectic_sum_relation(I, a));
            } else {
                a.n = infer_n({lhs, rhs}, kind, o.n);
                RowSet I = parse_one(lhs, a);
                RowSet J = parse_one(rhs, a);
                if (family == "finite") {
                    rels.push_back(finite_pluecker(I, J, a));
                } else {
                    if (kprime >= 0)
                        rels.push_back(semiinf_pluecker(I, J, kprime, a));
                    else
                        for (int kp = 0; kp < snake_k(I, J); ++kp)
                            rels.push_back(semiinf_pluecker(I, J, kp, a));
                }
            }

            bool all_ok = true;
            auto arr = json::array();
            for (const auto& rel : rels) {
                json j = json::parse(relation_to_json(rel, a));
                if (verify) {
                    bool ok;
                    if (rel.family == "sympsum") {
                        int want = points > 0 ? points : 20;
                        std::vector<GroupJetPoint> pts;
                        for (int i = 0; i < want; ++i)
                            pts.push_back(random_sp_point(a.n, o.trunc, o.seed + i));
                        ok = verify_relation_numeric(rel, pts);
                    } else {
                        ok = verify_relation_symbolic(rel, a, o.trunc);
                    }
                    j["verified"] = ok;
                    all_ok = all_ok && ok;
                }
                arr.push_back(std::move(j));
            }
            emit(o, arr.dump());
            return all_ok ? 0 : 1;
        }

        if (str_minor->parsed()) {
            if (kind != Kind::C)
                throw std::invalid_argument("straighten minor needs --type C");
            Alphabet a{kind, infer_n({set_text}, kind, o.n)};
            RowSet J = parse_one(set_text, a);
            MinorCombination comb = straighten_forbidden(J, a);
            RelationRecord check;
            check.family = "straighten";
            check.lhs = J;
            check.terms.push_back({make_rat(1), 0, J, {}});
            for (const auto& [c, K] : comb)
                check.terms.push_back({-c, 0, K, {}});
            int want = points > 0 ? points : 20;
            std::vector<GroupJetPoint> pts;
            for (int i = 0; i < want; ++i)
                pts.push_back(random_sp_point(a.n, o.trunc, o.seed + i));
            bool ok = verify_relation_numeric(check, pts);
            json j;
            j["input"] = format_rowset(J, a);
            auto arr = json::array();
            for (const auto& [c, K] : comb) {
                json e;
                e["coeff"] = rat_to_string(c);
                e["set"] = format_rowset(K, a);
                arr.push_back(std::move(e));
            }
            j["result"] = std::move(arr);
            j["verified"] = ok;
            emit(o, j.dump());
            return ok ? 0 : 1;
        }

        if (str_prod->parsed()) {
            Alphabet a{kind, infer_n({lhs, rhs}, kind, o.n)};
            RowSet I = parse_one(lhs, a);
            RowSet J = parse_one(rhs, a);
            PairCombination comb = straighten_product(I, J, a);
            json j;
            j["lhs"] = format_rowset(I, a);
            j["rhs"] = format_rowset(J, a);
            auto arr = json::array();
            for (const auto& e : comb.entries) {
                json t;
                t["coeff"] = rat_to_string(e.coeff);
                t["left"] = format_rowset(e.left, a);
                t["right"] = format_rowset(e.right, a);
                arr.push_back(std::move(t));
            }
            j["terms"] = std::move(arr);
            emit(o, j.dump());
            return 0;
        }

        if (ch_comp->parsed()) {
            Alphabet a{kind, infer_n({r_text}, kind, o.n)};
            WeightVectorR r = make_weight_vector(a, parse_multidegree(r_text, a));
            QSeries s = component_character(r, o.qmax);
            json j;
            auto coeffs = json::array();
            for (int d = 0; d <= s.qmax(); ++d)
                coeffs.push_back(s.coeff(d));
            j["qmax"] = o.qmax;
            j["coeffs"] = std::move(coeffs);
            emit(o, j.dump());
            return 0;
        }

        if (ch_weyl->parsed() || ch_local->parsed()) {
            if (o.n == 0)
                throw std::invalid_argument("characters need an explicit --n");
            Alphabet a{kind, o.n};
            std::vector<int> lambda = parse_lambda(lambda_text);
            if (ch_weyl->parsed()) {
                WeightedQSeries w = weyl_character(a, lambda, o.qmax);
                emit(o,
                     o.format == "csv" ? weighted_series_to_csv(w) : weighted_series_to_json(w));
                return 0;
            }
            LocalCharacter lc = local_weyl_character(a, lambda, o.qmax);
            bool poly = lc.status == LocalCharacter::Status::Polynomial;
            if (o.format == "csv") {
                emit(o, weighted_series_to_csv(lc.series));
            } else {
                json j;
                j["lambda"] = lambda;
                j["status"] = poly ? "polynomial" : "inconclusive";
                if (poly)
                    j["dimension"] = lc.dimension;
                j["weights"] = json::parse(weighted_series_to_json(lc.series));
                emit(o, j.dump());
            }
            return poly ? 0 : 1;
        }

        if (basis_enum->parsed()) {
            Alphabet a{kind, infer_n({r_text}, kind, o.n)};
            WeightVectorR r = make_weight_vector(a, parse_multidegree(r_text, a));
            json j = json::array();
            for (const auto& b : enumerate_basis(r, dmax)) {
                auto fac = json::array();
                for (const auto& [I, l] : b.factors) {
                    json f;
                    f["set"] = format_rowset(I, a);
                    f["jet"] = l;
                    fac.push_back(std::move(f));
                }
                j.push_back(std::move(fac));
            }
            emit(o, j.dump());
            return 0;
        }

        if (basis_verify->parsed()) {
            Alphabet a{kind, infer_n({r_text}, kind, o.n)};
            WeightVectorR r = make_weight_vector(a, parse_multidegree(r_text, a));
            VerifyMode mode = mode_text == "symbolic" ? VerifyMode::Symbolic
                              : mode_text == "numeric"
                                  ? VerifyMode::Numeric
                                  : (kind == Kind::A ? VerifyMode::Symbolic : VerifyMode::Numeric);
            PresentationReport rep = verify_presentation(r, dmax, mode, points, o.seed + 1);
            emit(o, presentation_report_to_json(r, rep));
            return rep.ok ? 0 : 1;
        }

        if (oracle_sample->parsed()) {
            if (o.n == 0)
                throw std::invalid_argument("oracle sample needs an explicit --n");
            json arr = json::array();
            for (int i = 0; i < count_arg; ++i) {
                GroupJetPoint pt = kind == Kind::A
                                       ? random_sl_point(o.n, o.trunc, o.seed + i)
                                       : random_sp_point(o.n, o.trunc, o.seed + i);
                arr.push_back(point_to_json(pt));
            }
            emit(o, arr.dump());
            return 0;
        }

        throw std::invalid_argument("no subcommand selected");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
