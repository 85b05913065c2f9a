#include <doctest.h>

#include "ramkill/residue_symbols.hpp"

using namespace ramkill;

namespace {

LocalContext ctx2(long long r = 5) { return LocalContext{{"s1", "s2"}, r}; }

Coefficient unit_coeff(const std::string& atom, long long value = 1) {
    Coefficient c;
    c[BasisTag{atom, {}}] = value;
    return c;
}

}  // namespace

TEST_CASE("residue of an unramified class vanishes") {
    const SymbolClass a = make_symbol_class(ctx2(), 2, {{{}, unit_coeff("c")}});
    const SymbolClass res = residue(a, 1);
    CHECK(res.terms.empty());
    CHECK(res.degree == 1);
    CHECK(res.ctx.params == std::vector<std::string>{"s2"});
}

TEST_CASE("residue strips its own symbol and keeps the coefficient") {
    const SymbolClass a = make_symbol_class(ctx2(), 2, {{{1}, unit_coeff("alpha")}});
    const SymbolClass res = residue(a, 1);
    REQUIRE(res.terms.size() == 1);
    const auto& [key, coeff] = *res.terms.begin();
    CHECK(key.empty());
    CHECK(coeff == unit_coeff("alpha"));
}

TEST_CASE("iterated residues peel a two-symbol term") {
    const SymbolClass a = make_symbol_class(ctx2(), 2, {{{1, 2}, unit_coeff("beta")}});
    const SymbolClass first = residue(a, 2);
    REQUIRE(first.terms.size() == 1);
    CHECK(first.terms.begin()->first == ParamSet{"s1"});

    const SymbolClass second = residue(first, 1);
    REQUIRE(second.terms.size() == 1);
    CHECK(second.terms.begin()->first.empty());
    CHECK(second.terms.begin()->second == unit_coeff("beta"));

    // The other order reaches the same place (signless convention).
    const SymbolClass other = residue(residue(a, 1), 1);
    CHECK(other.terms == second.terms);
}

TEST_CASE("residue checks the parameter index") {
    const SymbolClass a = make_symbol_class(ctx2(), 1, {});
    CHECK_THROWS_AS(residue(a, 0), std::invalid_argument);
    CHECK_THROWS_AS(residue(a, 3), std::invalid_argument);
}

TEST_CASE("residue is linear") {
    const SymbolClass x = make_symbol_class(
        ctx2(7), 2, {{{1}, unit_coeff("a", 3)}, {{1, 2}, unit_coeff("b", 2)}});
    const SymbolClass y = make_symbol_class(
        ctx2(7), 2, {{{1}, unit_coeff("a", 5)}, {{2}, unit_coeff("c", 1)}});
    CHECK(residue(add(x, y), 1).terms == add(residue(x, 1), residue(y, 1)).terms);
    CHECK(residue(scale(x, 4), 2).terms == scale(residue(x, 2), 4).terms);
}

TEST_CASE("substituting a pure r-th power kills the symbol") {
    const SymbolClass a = make_symbol_class(ctx2(), 1, {{{1}, unit_coeff("alpha")}});
    Monomial pure;
    pure.rth_powers.emplace_back("g", 1);
    const SymbolClass image = substitute(a, {{1, pure}});
    CHECK(image.terms.empty());
    CHECK(is_unramified(image));
}

TEST_CASE("substituting unit times r-th power keeps the unit class") {
    const SymbolClass a = make_symbol_class(ctx2(), 1, {{{1}, unit_coeff("alpha")}});
    Monomial m;
    m.unit = "u";
    m.rth_powers.emplace_back("g", 1);
    const SymbolClass image = substitute(a, {{1, m}});
    REQUIRE(image.terms.size() == 1);
    const auto& [key, coeff] = *image.terms.begin();
    CHECK(key.empty());
    REQUIRE(coeff.size() == 1);
    CHECK(coeff.begin()->first == BasisTag{"alpha", {"u"}});
    CHECK(coeff.begin()->second == 1);
    CHECK(is_unramified(image));
}

TEST_CASE("partial substitution leaves other symbols alone") {
    const SymbolClass a = make_symbol_class(
        ctx2(), 3,
        {{{}, unit_coeff("c0")}, {{1}, unit_coeff("c1")}, {{1, 2}, unit_coeff("c12")}});
    Monomial m;
    m.unit = "u";
    m.rth_powers.emplace_back("g", 2);
    const SymbolClass image = substitute(a, {{1, m}});

    CHECK_FALSE(is_unramified(image));  // the s2 dependence survives
    CHECK(image.terms.count(ParamSet{"s2"}) == 1);
    CHECK(image.terms.count(ParamSet{"s1"}) == 0);
    CHECK(image.terms.count(ParamSet{"s1", "s2"}) == 0);

    // The residue at s2 is unchanged up to the cupped unit on the moved term.
    const SymbolClass before = residue(a, 2);
    const SymbolClass after = residue(image, 2);
    REQUIRE(after.terms.size() == 1);
    REQUIRE(before.terms.size() == 1);
    CHECK(after.terms.begin()->second.begin()->first == BasisTag{"c12", {"u"}});
}

TEST_CASE("unit exponent scales the moved coefficient") {
    const SymbolClass a = make_symbol_class(ctx2(), 1, {{{1}, unit_coeff("alpha")}});
    Monomial m;
    m.unit = "u";
    m.unit_exp = 3;
    const SymbolClass image = substitute(a, {{1, m}});
    REQUIRE(image.terms.size() == 1);
    CHECK(image.terms.begin()->second.begin()->second == 3);

    // An exponent divisible by r makes the unit an r-th power as well.
    m.unit_exp = 5;
    CHECK(substitute(a, {{1, m}}).terms.empty());
}

TEST_CASE("substitute validates monomials and indices") {
    const SymbolClass a = make_symbol_class(ctx2(), 1, {{{1}, unit_coeff("alpha")}});
    Monomial bad_unit;
    bad_unit.unit = "";
    CHECK_THROWS_AS(substitute(a, {{1, bad_unit}}), std::invalid_argument);
    Monomial bad_tag;
    bad_tag.rth_powers.emplace_back("", 1);
    CHECK_THROWS_AS(substitute(a, {{1, bad_tag}}), std::invalid_argument);
    CHECK_THROWS_AS(substitute(a, {{9, Monomial{}}}), std::invalid_argument);
}

TEST_CASE("substitute commutes with linear combinations") {
    const SymbolClass x = make_symbol_class(
        ctx2(7), 2, {{{1}, unit_coeff("a", 2)}, {{2}, unit_coeff("b", 3)}});
    const SymbolClass y = make_symbol_class(
        ctx2(7), 2, {{{1}, unit_coeff("a", 4)}, {{1, 2}, unit_coeff("d", 6)}});
    Monomial m;
    m.unit = "u";
    m.rth_powers.emplace_back("g", 1);
    const std::map<int, Monomial> assignment{{1, m}};

    CHECK(substitute(add(x, y), assignment).terms ==
          add(substitute(x, assignment), substitute(y, assignment)).terms);
    CHECK(substitute(scale(x, 5), assignment).terms ==
          scale(substitute(x, assignment), 5).terms);
}

TEST_CASE("a full unit-power assignment always lands unramified") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        LocalContext ctx{{"s1", "s2", "s3"}, 2 + static_cast<long long>(seed % 7)};
        const SymbolClass a = random_symbol_class(ctx, 3, {1, 2, 3}, seed);
        std::map<int, Monomial> assignment;
        for (int k = 1; k <= 3; ++k) {
            Monomial m;
            m.unit = "u" + std::to_string(k);
            m.rth_powers.emplace_back("g" + std::to_string(k), 1);
            assignment[k] = m;
        }
        CHECK(is_unramified(substitute(a, assignment)));
    }
}

TEST_CASE("is_unramified on the basic shapes") {
    CHECK(is_unramified(make_symbol_class(ctx2(), 2, {{{}, unit_coeff("c")}})));
    CHECK_FALSE(is_unramified(make_symbol_class(ctx2(), 2, {{{1}, unit_coeff("c")}})));
    CHECK(is_unramified(make_symbol_class(ctx2(), 2, {})));
}

TEST_CASE("random_symbol_class is deterministic in its seed") {
    const LocalContext ctx{{"s1", "s2"}, 5};
    const SymbolClass a = random_symbol_class(ctx, 2, {1, 2}, 42);
    const SymbolClass b = random_symbol_class(ctx, 2, {1, 2}, 42);
    const SymbolClass c = random_symbol_class(ctx, 2, {1, 2}, 43);
    CHECK(a == b);
    CHECK((a == c || a.terms != c.terms));  // different seed usually differs
}
