#include <numeric>
#include <set>

#include <doctest.h>

#include "ramkill/coloring.hpp"
#include "ramkill/random_arrangement.hpp"
#include "ramkill/schemes.hpp"

using namespace ramkill;

namespace {

std::vector<Vertex> named(std::initializer_list<const char*> ids) {
    std::vector<Vertex> out;
    for (const char* id : ids) out.push_back(Vertex{id, VertexKind::original, {}});
    return out;
}

ColoredComplex colored_triangle() {
    SncComplex c = SncComplex::closed(
        3, named({"a", "b", "c"}), {{0, 1}, {0, 2}, {1, 2}});
    return ColoredComplex{c, {1, 2, 3}};
}

ColoredComplex colored_point(int n) {
    SncComplex c = SncComplex::closed(n, named({"a"}), {});
    return ColoredComplex{c, {1}};
}

std::vector<std::vector<long long>> class_matrix(const FunctionScheme& s) {
    std::vector<std::vector<long long>> rows;
    for (const SchemeFunction& f : s.functions) rows.push_back(f.class_coeffs);
    return rows;
}

// Independent verification oracle: enumerate scenarios with its own
// combinatorics and decide solvability by brute force over (Z/r)^k.
struct BruteOutcome {
    bool certified = true;
    Scenario scenario;
    int target = -1;
};

bool brute_solvable(const IntMatrix& m, const std::vector<long long>& b, long long r) {
    std::vector<long long> x(static_cast<size_t>(m.cols), 0);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < m.rows && ok; ++i) {
            long long acc = 0;
            for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * x[static_cast<size_t>(j)];
            ok = (acc - b[static_cast<size_t>(i)]) % r == 0;
        }
        if (ok) return true;
        int k = 0;
        while (k < m.cols && ++x[static_cast<size_t>(k)] == r) {
            x[static_cast<size_t>(k)] = 0;
            ++k;
        }
        if (k == m.cols) return false;
    }
}

BruteOutcome brute_verify(const ColoredComplex& colored, const FunctionScheme& scheme,
                          long long r) {
    const int n = colored.complex.dimension();
    const int naux = static_cast<int>(scheme.aux_order.size());
    for (const Face& t : colored.complex.faces()) {
        const int budget = n - static_cast<int>(t.size());
        // All aux subsets via bitmask, filtered by size, ordered by
        // (size, lex); small schemes only.
        std::vector<std::vector<int>> subsets;
        for (unsigned mask = 0; mask < (1u << naux); ++mask) {
            std::vector<int> j;
            for (int k = 0; k < naux; ++k)
                if (mask & (1u << k)) j.push_back(k);
            if (static_cast<int>(j.size()) <= budget) subsets.push_back(std::move(j));
        }
        std::stable_sort(subsets.begin(), subsets.end(),
                         [](const std::vector<int>& x, const std::vector<int>& y) {
                             if (x.size() != y.size()) return x.size() < y.size();
                             return x < y;
                         });
        for (const std::vector<int>& j : subsets) {
            const LocalSystem system = local_matrix(Scenario{t, j}, scheme, colored);
            for (size_t ti = 0; ti < t.size(); ++ti)
                if (!brute_solvable(system.m, system.targets[ti], r))
                    return BruteOutcome{false, Scenario{t, j}, t[ti]};
        }
    }
    return BruteOutcome{};
}

}  // namespace

TEST_CASE("square scheme instantiates n^2 functions with private auxes") {
    const ColoredComplex point = colored_point(1);
    const FunctionScheme s1 = square_scheme(point);
    REQUIRE(s1.functions.size() == 1);
    CHECK(s1.functions[0].class_coeffs == std::vector<long long>{1});
    CHECK(s1.functions[0].aux_coeffs.size() == 1);
    CHECK(s1.aux_order == std::vector<std::string>{"E1^1"});

    SncComplex c2 = SncComplex::closed(2, named({"a", "b"}), {{0, 1}});
    const FunctionScheme s2 = square_scheme(ColoredComplex{c2, {1, 2}});
    REQUIRE(s2.functions.size() == 4);
    CHECK(s2.functions[2].name == "f2^1");
    CHECK(s2.functions[2].class_coeffs == std::vector<long long>{0, 1});

    const FunctionScheme s3 = square_scheme(colored_triangle());
    REQUIRE(s3.functions.size() == 9);
    std::set<std::string> auxes;
    for (const SchemeFunction& f : s3.functions) {
        long long ones = 0;
        for (long long v : f.class_coeffs) {
            CHECK((v == 0 || v == 1));
            ones += v;
        }
        CHECK(ones == 1);
        REQUIRE(f.aux_coeffs.size() == 1);
        CHECK(f.aux_coeffs.begin()->second == 1);
        auxes.insert(f.aux_coeffs.begin()->first);
    }
    CHECK(auxes.size() == 9);  // every aux is private
}

TEST_CASE("remark4 scheme matches its fixed coefficients") {
    const FunctionScheme s = remark_scheme_4(colored_triangle());
    CHECK(class_matrix(s) == std::vector<std::vector<long long>>{
                                 {1, 1, 1}, {1, 1, 0}, {0, 1, 1}, {1, 2, 1}});
    CHECK(s.aux_order == std::vector<std::string>{"E1", "E2", "E3", "E4"});
    for (size_t k = 0; k < s.functions.size(); ++k) {
        REQUIRE(s.functions[k].aux_coeffs.size() == 1);
        CHECK(s.functions[k].aux_coeffs.count(s.aux_order[k]) == 1);
        CHECK(s.functions[k].aux_coeffs.at(s.aux_order[k]) == 1);
    }
    CHECK_THROWS_AS(remark_scheme_4(colored_point(2)), std::invalid_argument);
}

TEST_CASE("remark3 scheme matches its fixed coefficients") {
    const FunctionScheme s = remark_scheme_3(colored_triangle());
    CHECK(class_matrix(s) ==
          std::vector<std::vector<long long>>{{1, 3, 3}, {1, 2, 1}, {1, 1, 2}});
    CHECK(s.aux_order == std::vector<std::string>{"E1", "E2", "E3"});
    CHECK_THROWS_AS(remark_scheme_3(colored_point(4)), std::invalid_argument);
}

TEST_CASE("scenario enumeration counts and order") {
    const ColoredComplex point = colored_point(1);
    const FunctionScheme square1 = square_scheme(point);
    const auto scen1 = enumerate_scenarios(point, square1);
    REQUIRE(scen1.size() == 1);  // |T| + |J| <= 1 forces J = {}
    CHECK(scen1[0].t == Face{0});
    CHECK(scen1[0].j.empty());

    const ColoredComplex tri = colored_triangle();
    SncComplex with_triple = SncComplex::closed(
        3, named({"a", "b", "c"}), {{0, 1, 2}});
    const ColoredComplex tri3{with_triple, {1, 2, 3}};
    const FunctionScheme r3 = remark_scheme_3(tri3);

    // The full face admits J = {} only; a single component admits
    // 1 + 3 + 3 = 7 subsets of the three auxes.
    const auto scenarios = enumerate_scenarios(tri3, r3);
    long long with_full_t = 0, with_single_a = 0;
    for (const Scenario& sc : scenarios) {
        if (sc.t == Face{0, 1, 2}) {
            CHECK(sc.j.empty());
            ++with_full_t;
        }
        if (sc.t == Face{0}) ++with_single_a;
    }
    CHECK(with_full_t == 1);
    CHECK(with_single_a == 7);
    CHECK(count_scenarios(tri3, r3) == static_cast<long long>(scenarios.size()));

    // Deterministic order: faces by (size, lex), then J by (size, lex).
    for (size_t k = 1; k < scenarios.size(); ++k) {
        const Scenario& prev = scenarios[k - 1];
        const Scenario& cur = scenarios[k];
        const bool face_le =
            prev.t.size() < cur.t.size() ||
            (prev.t.size() == cur.t.size() && prev.t <= cur.t);
        CHECK(face_le);
    }
}

TEST_CASE("local_matrix lays out parameters then functions") {
    const ColoredComplex point = colored_point(1);
    const FunctionScheme square1 = square_scheme(point);
    const LocalSystem sys = local_matrix(Scenario{{0}, {}}, square1, point);
    CHECK(sys.m.rows == 1);
    CHECK(sys.m.cols == 1);
    CHECK(sys.m.at(0, 0) == 1);
    CHECK(sys.targets == std::vector<std::vector<long long>>{{1}});
}

TEST_CASE("local_matrix on the full triangle reproduces the quotient solution") {
    SncComplex with_triple = SncComplex::closed(3, named({"a", "b", "c"}), {{0, 1, 2}});
    const ColoredComplex tri{with_triple, {1, 2, 3}};
    const FunctionScheme r4 = remark_scheme_4(tri);
    const LocalSystem sys = local_matrix(Scenario{{0, 1, 2}, {}}, r4, tri);
    REQUIRE(sys.m.rows == 3);
    REQUIRE(sys.m.cols == 4);
    // Columns are the class coefficient vectors of f1..f4.
    const std::vector<std::vector<long long>> expect{
        {1, 1, 1}, {1, 1, 0}, {0, 1, 1}, {1, 2, 1}};
    for (int f = 0; f < 4; ++f)
        for (int row = 0; row < 3; ++row)
            CHECK(sys.m.at(row, f) == expect[static_cast<size_t>(f)][static_cast<size_t>(row)]);

    // x = (1, 0, -1, 0) sends the system to e_1 for every modulus.
    const std::vector<long long> quotient{1, 0, -1, 0};
    for (long long r = 2; r <= 16; ++r) {
        const std::vector<long long> got = mul(sys.m, quotient);
        CHECK((got[0] - 1) % r == 0);
        CHECK(got[1] % r == 0);
        CHECK(got[2] % r == 0);
    }
}

TEST_CASE("local_matrix eliminates aux rows as documented") {
    const ColoredComplex tri = colored_triangle();
    const FunctionScheme r3 = remark_scheme_3(tri);
    // T = the color-2 component, J = {E1, E3}: rows (3,2,1), (1,0,0), (0,0,1).
    const LocalSystem sys = local_matrix(Scenario{{1}, {0, 2}}, r3, tri);
    REQUIRE(sys.m.rows == 3);
    CHECK(sys.m.at(0, 0) == 3);
    CHECK(sys.m.at(0, 1) == 2);
    CHECK(sys.m.at(0, 2) == 1);
    CHECK(sys.m.at(1, 0) == 1);
    CHECK(sys.m.at(1, 1) == 0);
    CHECK(sys.m.at(1, 2) == 0);
    CHECK(sys.m.at(2, 0) == 0);
    CHECK(sys.m.at(2, 1) == 0);
    CHECK(sys.m.at(2, 2) == 1);
}

TEST_CASE("local_matrix rejects malformed scenarios") {
    const ColoredComplex tri = colored_triangle();
    const FunctionScheme r3 = remark_scheme_3(tri);
    CHECK_THROWS_AS(local_matrix(Scenario{{}, {}}, r3, tri), std::invalid_argument);
    CHECK_THROWS_AS(local_matrix(Scenario{{0, 1}, {0, 1}}, r3, tri),
                    std::invalid_argument);  // |T|+|J| > n
    CHECK_THROWS_AS(local_matrix(Scenario{{0}, {5}}, r3, tri), std::invalid_argument);
    CHECK_THROWS_AS(local_matrix(Scenario{{0}, {1, 0}}, r3, tri), std::invalid_argument);
}

TEST_CASE("verify certifies the square scheme and keeps indicator shape") {
    const ColoredComplex tri = colored_triangle();
    const FunctionScheme square = square_scheme(tri);
    for (long long r = 2; r <= 16; ++r) {
        const VerifyResult result = verify(tri, square, r);
        REQUIRE(std::holds_alternative<Certificate>(result));
        const Certificate& cert = std::get<Certificate>(result);
        CHECK(cert.solved_targets == cert.indicator_solutions);
        for (const CertificateEntry& entry : cert.solutions) {
            long long nonzero = 0;
            for (long long e : entry.exponents)
                if (e != 0) {
                    ++nonzero;
                    CHECK(e == 1);
                }
            CHECK(nonzero == 1);
        }
    }
}

TEST_CASE("verify finds the documented remark3 counterexample at r=2") {
    const ColoredComplex tri = colored_triangle();
    const FunctionScheme r3 = remark_scheme_3(tri);
    const VerifyResult result = verify(tri, r3, 2);
    REQUIRE(std::holds_alternative<Counterexample>(result));
    const Counterexample& ce = std::get<Counterexample>(result);
    CHECK(ce.scenario.t == Face{1});             // the color-2 component
    CHECK(ce.scenario.j == std::vector<int>{0, 2});  // {E1, E3}: forces 2x = 1
    CHECK(ce.target == 1);

    // Enumeration-order agreement: the counterexample index points at the
    // same scenario in the materialized list.
    const auto scenarios = enumerate_scenarios(tri, r3);
    REQUIRE(ce.scenario_index < static_cast<long long>(scenarios.size()));
    CHECK(scenarios[static_cast<size_t>(ce.scenario_index)] == ce.scenario);
}

TEST_CASE("remark3 certifies exactly the moduli prime to 6") {
    const ColoredComplex tri = colored_triangle();
    const FunctionScheme r3 = remark_scheme_3(tri);
    for (long long r = 2; r <= 12; ++r) {
        const VerifyResult result = verify(tri, r3, r);
        const bool coprime = std::gcd(r, 6ll) == 1;
        CHECK(std::holds_alternative<Certificate>(result) == coprime);
    }
}

TEST_CASE("remark4 certifies every modulus on the triangle") {
    const ColoredComplex tri = colored_triangle();
    const FunctionScheme r4 = remark_scheme_4(tri);
    for (long long r = 2; r <= 16; ++r)
        CHECK(std::holds_alternative<Certificate>(verify(tri, r4, r)));
}

TEST_CASE("verify agrees with the independent brute-force oracle") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        RandomArrangementParams params;
        params.dimension = 3;
        params.vertex_count = 3 + static_cast<int>(seed % 4);
        const ColoringResult coloring = color(random_arrangement(params, seed));
        const ColoredComplex& cc = coloring.colored;

        for (const char* name : {"remark3", "remark4"}) {
            const FunctionScheme scheme = scheme_by_name(name, cc);
            for (long long r = 2; r <= 6; ++r) {
                const VerifyResult mine = verify(cc, scheme, r);
                const BruteOutcome oracle = brute_verify(cc, scheme, r);
                REQUIRE(std::holds_alternative<Certificate>(mine) == oracle.certified);
                if (!oracle.certified) {
                    const auto& ce = std::get<Counterexample>(mine);
                    CHECK(ce.scenario == oracle.scenario);
                    CHECK(ce.target == oracle.target);
                }
            }
        }
    }
}

TEST_CASE("serial and parallel verification agree exactly") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        RandomArrangementParams params;
        params.dimension = 3 + static_cast<int>(seed % 2);
        params.vertex_count = 4 + static_cast<int>(seed % 5);
        const ColoredComplex cc = color(random_arrangement(params, seed)).colored;
        const FunctionScheme scheme = square_scheme(cc);

        for (long long r : {2ll, 5ll, 12ll}) {
            const VerifyResult par = verify(cc, scheme, r);
            const VerifyResult ser = verify_serial(cc, scheme, r);
            REQUIRE(par.index() == ser.index());
            if (std::holds_alternative<Certificate>(par)) {
                const auto& a = std::get<Certificate>(par);
                const auto& b = std::get<Certificate>(ser);
                CHECK(a.scenario_count == b.scenario_count);
                CHECK(a.solved_targets == b.solved_targets);
                CHECK(a.indicator_solutions == b.indicator_solutions);
                REQUIRE(a.solutions.size() == b.solutions.size());
                for (size_t k = 0; k < a.solutions.size(); ++k) {
                    CHECK(a.solutions[k].scenario == b.solutions[k].scenario);
                    CHECK(a.solutions[k].exponents == b.solutions[k].exponents);
                }
            } else {
                const auto& a = std::get<Counterexample>(par);
                const auto& b = std::get<Counterexample>(ser);
                CHECK(a.scenario_index == b.scenario_index);
                CHECK(a.scenario == b.scenario);
                CHECK(a.target == b.target);
            }
        }
    }
}

TEST_CASE("reports carry the documented format") {
    const ColoredComplex tri = colored_triangle();
    const FunctionScheme r3 = remark_scheme_3(tri);

    const VerifyResult good = verify(tri, r3, 5);
    const std::string ok = render_report(good, tri, r3);
    CHECK(ok.find("CERTIFIED scheme=remark3 r=5 scenarios=") != std::string::npos);

    const VerifyResult bad = verify(tri, r3, 2);
    const std::string fail = render_report(bad, tri, r3);
    CHECK(fail.find("FAILED scheme=remark3 r=2 scenario=T:{b} J:{E1,E3} target=b") !=
          std::string::npos);
}

TEST_CASE("verify runs the symbolic bridge when asked") {
    const ColoredComplex tri = colored_triangle();
    const FunctionScheme square = square_scheme(tri);
    VerifyOptions options;
    options.symbolic_check = true;
    options.symbolic_seed = 11;
    const VerifyResult result = verify(tri, square, 7, options);
    REQUIRE(std::holds_alternative<Certificate>(result));
    const Certificate& cert = std::get<Certificate>(result);
    CHECK(cert.symbolic_checks == cert.scenario_count);
}
