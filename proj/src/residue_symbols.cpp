#include "ramkill/residue_symbols.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramkill {

namespace {

long long reduce(long long value, long long r) {
    value %= r;
    if (value < 0) value += r;
    return value;
}

void add_into(Coefficient& dst, const BasisTag& tag, long long value, long long r) {
    value = reduce(value, r);
    if (value == 0) return;
    auto [it, inserted] = dst.emplace(tag, value);
    if (!inserted) {
        it->second = reduce(it->second + value, r);
        if (it->second == 0) dst.erase(it);
    }
}

void merge_term(SymbolClass& dst, const ParamSet& key, const Coefficient& coeff) {
    if (coeff.empty()) return;
    Coefficient& slot = dst.terms[key];
    for (const auto& [tag, value] : coeff) add_into(slot, tag, value, dst.ctx.r);
    if (slot.empty()) dst.terms.erase(key);
}

const std::string& param_name(const LocalContext& ctx, int index_1based) {
    if (index_1based < 1 || index_1based > ctx.param_count())
        throw std::invalid_argument("parameter index out of range");
    return ctx.params[static_cast<size_t>(index_1based - 1)];
}

// splitmix64; deterministic and cheap, used only to derive test data.
std::uint64_t mix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

int LocalContext::param_index(const std::string& name) const {
    for (int i = 0; i < param_count(); ++i)
        if (params[static_cast<size_t>(i)] == name) return i + 1;
    return 0;
}

SymbolClass make_symbol_class(
    LocalContext ctx, int degree,
    const std::vector<std::pair<std::vector<int>, Coefficient>>& terms_by_index) {
    if (ctx.r < 2) throw std::invalid_argument("modulus must be >= 2");
    SymbolClass out{std::move(ctx), degree, {}};
    for (const auto& [indices, coeff] : terms_by_index) {
        if (static_cast<int>(indices.size()) > degree)
            throw std::invalid_argument("term involves more parameters than the degree");
        ParamSet key;
        for (int i : indices) key.insert(param_name(out.ctx, i));
        Coefficient reduced;
        for (const auto& [tag, value] : coeff) add_into(reduced, tag, value, out.ctx.r);
        merge_term(out, key, reduced);
    }
    return out;
}

SymbolClass add(const SymbolClass& x, const SymbolClass& y) {
    if (x.ctx != y.ctx || x.degree != y.degree)
        throw std::invalid_argument("add: classes live in different contexts");
    SymbolClass out = x;
    for (const auto& [key, coeff] : y.terms) merge_term(out, key, coeff);
    return out;
}

SymbolClass scale(const SymbolClass& x, long long k) {
    SymbolClass out{x.ctx, x.degree, {}};
    for (const auto& [key, coeff] : x.terms) {
        Coefficient scaled;
        for (const auto& [tag, value] : coeff) add_into(scaled, tag, value * k, x.ctx.r);
        merge_term(out, key, scaled);
    }
    return out;
}

SymbolClass residue(const SymbolClass& a, int param_index) {
    const std::string& name = param_name(a.ctx, param_index);

    LocalContext quotient{{}, a.ctx.r};
    quotient.params.reserve(a.ctx.params.size() - 1);
    for (const std::string& p : a.ctx.params)
        if (p != name) quotient.params.push_back(p);

    SymbolClass out{std::move(quotient), a.degree - 1, {}};
    for (const auto& [key, coeff] : a.terms) {
        if (!key.count(name)) continue;  // unramified along this parameter
        ParamSet reduced = key;
        reduced.erase(name);
        merge_term(out, reduced, coeff);
    }
    return out;
}

SymbolClass substitute(const SymbolClass& a, const std::map<int, Monomial>& assignment) {
    // Resolve and sanity-check the assignment up front.
    std::map<std::string, const Monomial*> by_name;
    for (const auto& [index, mono] : assignment) {
        const std::string& name = param_name(a.ctx, index);
        if (mono.unit && mono.unit->empty())
            throw std::invalid_argument("malformed monomial: empty unit tag");
        for (const auto& [tag, exp] : mono.rth_powers) {
            if (tag.empty())
                throw std::invalid_argument("malformed monomial: empty power tag");
            (void)exp;
        }
        by_name[name] = &mono;
    }

    SymbolClass out{a.ctx, a.degree, {}};
    for (const auto& [key, coeff] : a.terms) {
        ParamSet remaining;
        long long factor = 1;
        std::vector<std::string> units;
        bool vanished = false;
        for (const std::string& p : key) {
            auto it = by_name.find(p);
            if (it == by_name.end()) {
                remaining.insert(p);
                continue;
            }
            const Monomial& mono = *it->second;
            // r-th powers die in K*/K*^r; only the unit class survives.
            const long long e = mono.unit ? reduce(mono.unit_exp, a.ctx.r) : 0;
            if (e == 0) {
                vanished = true;
                break;
            }
            factor = reduce(factor * e, a.ctx.r);
            units.push_back(*mono.unit);
        }
        if (vanished || factor == 0) continue;

        Coefficient moved;
        for (const auto& [tag, value] : coeff) {
            BasisTag cupped = tag;
            cupped.units.insert(cupped.units.end(), units.begin(), units.end());
            std::sort(cupped.units.begin(), cupped.units.end());
            add_into(moved, cupped, value * factor, a.ctx.r);
        }
        merge_term(out, remaining, moved);
    }
    return out;
}

bool is_unramified(const SymbolClass& a) {
    for (const auto& [key, coeff] : a.terms)
        if (!key.empty() && !coeff.empty()) return false;
    return true;
}

SymbolClass random_symbol_class(const LocalContext& ctx, int degree,
                                const std::vector<int>& support_params,
                                std::uint64_t seed) {
    std::uint64_t state = seed ^ 0xa5a5a5a55a5a5a5aull;
    std::vector<std::pair<std::vector<int>, Coefficient>> terms;
    const int max_take =
        std::min<int>(degree, static_cast<int>(support_params.size()));

    const int term_count = 1 + static_cast<int>(mix(state) % 3);
    for (int t = 0; t < term_count; ++t) {
        std::vector<int> indices;
        for (int i : support_params)
            if (static_cast<int>(indices.size()) < max_take && (mix(state) & 1))
                indices.push_back(i);
        Coefficient coeff;
        const BasisTag tag{"a" + std::to_string(mix(state) % 4), {}};
        coeff[tag] = 1 + static_cast<long long>(mix(state) % (ctx.r > 2 ? ctx.r - 1 : 1));
        terms.emplace_back(std::move(indices), std::move(coeff));
    }
    return make_symbol_class(ctx, degree, terms);
}

}  // namespace ramkill
