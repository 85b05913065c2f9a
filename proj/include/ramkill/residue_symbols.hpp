#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ramkill {

// A local ring seen through its regular subsystem of parameters s_1..s_h,
// with coefficients taken mod r.
struct LocalContext {
    std::vector<std::string> params;
    long long r = 2;

    int param_count() const { return static_cast<int>(params.size()); }
    int param_index(const std::string& name) const;  // 1-based, 0 when absent

    friend bool operator==(const LocalContext&, const LocalContext&) = default;
};

// Opaque basis element of the coefficient module: an atom, possibly cupped
// with unit classes picked up by substitutions. The ring's actual cohomology
// is never computed; sums of cup products of units are unramified atoms.
struct BasisTag {
    std::string atom;
    std::vector<std::string> units;  // kept sorted

    auto operator<=>(const BasisTag&) const = default;
};

// Free Z/r-module element on basis tags; zero entries are never stored.
using Coefficient = std::map<BasisTag, long long>;

using ParamSet = std::set<std::string>;

// Formal class  alpha_0 + sum over nonempty I of alpha_I cup s_I  in degree
// m: terms are keyed by the parameter subset I, the I = {} term is the
// unramified part. Coefficients are reduced mod r.
struct SymbolClass {
    LocalContext ctx;
    int degree = 1;
    std::map<ParamSet, Coefficient> terms;

    friend bool operator==(const SymbolClass&, const SymbolClass&) = default;
};

// Convenience constructor from 1-based parameter indices; coefficients are
// reduced and empty ones dropped.
SymbolClass make_symbol_class(
    LocalContext ctx, int degree,
    const std::vector<std::pair<std::vector<int>, Coefficient>>& terms_by_index);

SymbolClass add(const SymbolClass& x, const SymbolClass& y);
SymbolClass scale(const SymbolClass& x, long long k);

// Residue along the i-th parameter (1-based): terms not involving s_i are
// unramified there and vanish, terms involving it drop s_i and keep their
// coefficient (the convention is signless; only vanishing is consumed
// downstream). The result lives over the quotient context without s_i and
// one degree lower.
SymbolClass residue(const SymbolClass& a, int param_index);

// Image of a parameter in K*/K*^r after a root adjunction: a unit tag to
// some power times factors that became r-th powers.
struct Monomial {
    std::optional<std::string> unit;
    long long unit_exp = 1;
    std::vector<std::pair<std::string, long long>> rth_powers;
};

// Replace assigned parameters by their images: r-th-power factors die, a
// unit tag survives cupped into the coefficient, and a term whose symbols
// are fully consumed moves into the unramified part. Keys are 1-based
// parameter indices; unassigned parameters are untouched.
SymbolClass substitute(const SymbolClass& a, const std::map<int, Monomial>& assignment);

// True iff every residue vanishes, i.e. only the I = {} term remains.
bool is_unramified(const SymbolClass& a);

// Deterministic pseudo-random class supported on subsets of the given
// 1-based parameters; used by the bridge pass and by property tests.
SymbolClass random_symbol_class(const LocalContext& ctx, int degree,
                                const std::vector<int>& support_params,
                                std::uint64_t seed);

}  // namespace ramkill
