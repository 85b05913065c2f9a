#include "ramkill/schemes.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ramkill/errors.hpp"
#include "ramkill/residue_symbols.hpp"

namespace ramkill {

namespace {

long long binomial(int m, int k) {
    if (k < 0 || k > m) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (m - k + i) / i;
    return out;
}

// Next size-|comb| subset of {0..m-1} in lexicographic order.
bool next_combination(std::vector<int>& comb, int m) {
    const int s = static_cast<int>(comb.size());
    int i = s - 1;
    while (i >= 0 && comb[i] == m - s + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int k = i + 1; k < s; ++k) comb[k] = comb[k - 1] + 1;
    return true;
}

int color_of(const ColoredComplex& colored, int v) {
    return colored.color[static_cast<size_t>(v)];
}

void require_dimension_3(const ColoredComplex& colored, const char* scheme) {
    if (colored.complex.dimension() != 3)
        throw std::invalid_argument(std::string(scheme) + " scheme requires dimension 3");
}

FunctionScheme build_fixed_scheme(const char* name,
                                  const std::vector<std::vector<long long>>& rows) {
    FunctionScheme scheme;
    scheme.name = name;
    scheme.n = 3;
    for (size_t k = 0; k < rows.size(); ++k) {
        SchemeFunction f;
        f.name = "f" + std::to_string(k + 1);
        f.class_coeffs = rows[k];
        const std::string aux = "E" + std::to_string(k + 1);
        f.aux_coeffs[aux] = 1;
        scheme.functions.push_back(std::move(f));
        scheme.aux_order.push_back(aux);
    }
    return scheme;
}

// Static parameter names for the bridge contexts; positions double as names
// since the parameters are abstract symbols anyway.
const std::string& bridge_param(int k) {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (int i = 1; i <= 64; ++i) out.push_back("s" + std::to_string(i));
        return out;
    }();
    return names.at(static_cast<size_t>(k));
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Per-(face, modulus) accumulator; merged in face order afterwards.
struct FaceAcc {
    bool failed = false;
    long long fail_local = -1;
    std::vector<int> fail_j;
    int fail_target_pos = -1;
    long long solved = 0;
    long long indicators = 0;
    long long symbolic = 0;
    std::vector<CertificateEntry> entries;
};

struct VerifyEngine {
    const ColoredComplex& colored;
    const FunctionScheme& scheme;
    int n;
    int nfun;
    int naux;
    const std::vector<Face>& faces;
    std::vector<long long> block;   // scenarios contributed by each face
    std::vector<long long> offset;  // prefix sums of block
    long long total = 0;
    // aux valuation of every function: aux_matrix[aux][fun]
    std::vector<std::vector<long long>> aux_matrix;
    // sparse form per function: (aux index, coefficient)
    std::vector<std::vector<std::pair<int, long long>>> fun_aux;

    VerifyEngine(const ColoredComplex& colored_, const FunctionScheme& scheme_)
        : colored(colored_),
          scheme(scheme_),
          n(colored_.complex.dimension()),
          nfun(static_cast<int>(scheme_.functions.size())),
          naux(static_cast<int>(scheme_.aux_order.size())),
          faces(colored_.complex.faces()) {
        if (scheme.n != n)
            throw std::invalid_argument("scheme dimension does not match the complex");
        aux_matrix.assign(static_cast<size_t>(naux),
                          std::vector<long long>(static_cast<size_t>(nfun), 0));
        fun_aux.resize(static_cast<size_t>(nfun));
        for (int f = 0; f < nfun; ++f)
            for (const auto& [id, coeff] : scheme.functions[static_cast<size_t>(f)].aux_coeffs) {
                const int ai = scheme.aux_index(id);
                if (ai < 0)
                    throw std::invalid_argument("function references aux '" + id +
                                                "' missing from aux_order");
                aux_matrix[static_cast<size_t>(ai)][static_cast<size_t>(f)] = coeff;
                fun_aux[static_cast<size_t>(f)].emplace_back(ai, coeff);
            }

        block.reserve(faces.size());
        for (const Face& t : faces) {
            const int mj = n - static_cast<int>(t.size());
            long long count = 0;
            for (int s = 0; s <= std::min(mj, naux); ++s) count += binomial(naux, s);
            block.push_back(count);
        }
        offset.resize(faces.size());
        long long running = 0;
        for (size_t i = 0; i < faces.size(); ++i) {
            offset[i] = running;
            running += block[i];
        }
        total = running;
    }

    // Substituting every T-parameter by unit * r-th power must land the
    // class in the unramified part; anything else is a model bug.
    void bridge_check(int tz, int jz, long long r, std::uint64_t seed) const {
        LocalContext ctx;
        ctx.r = r;
        for (int k = 0; k < tz + jz; ++k) ctx.params.push_back(bridge_param(k));
        std::vector<int> support(static_cast<size_t>(tz));
        for (int k = 0; k < tz; ++k) support[static_cast<size_t>(k)] = k + 1;
        const SymbolClass cls = random_symbol_class(ctx, n, support, seed);
        std::map<int, Monomial> assignment;
        for (int k = 1; k <= tz; ++k) {
            Monomial m;
            m.unit = "u" + std::to_string(k);
            m.unit_exp = 1;
            m.rth_powers.emplace_back("g" + std::to_string(k), 1);
            assignment.emplace(k, std::move(m));
        }
        if (!is_unramified(substitute(cls, assignment)))
            throw internal_error("symbolic bridge: substituted class is still ramified");
    }

    void run_face(int fi, const std::vector<long long>& rs, const VerifyOptions& options,
                  std::vector<FaceAcc>& accs,
                  const std::vector<std::atomic<bool>>* skip_hint) const {
        const Face& t = faces[static_cast<size_t>(fi)];
        const int tz = static_cast<int>(t.size());
        const int mj = std::min(n - tz, naux);
        const int nr = static_cast<int>(rs.size());

        // Class-coefficient rows of the T part, shared by every J.
        std::vector<std::vector<long long>> base(
            static_cast<size_t>(tz), std::vector<long long>(static_cast<size_t>(nfun)));
        for (int ti = 0; ti < tz; ++ti) {
            const int cls = color_of(colored, t[static_cast<size_t>(ti)]) - 1;
            for (int f = 0; f < nfun; ++f)
                base[static_cast<size_t>(ti)][static_cast<size_t>(f)] =
                    scheme.functions[static_cast<size_t>(f)]
                        .class_coeffs[static_cast<size_t>(cls)];
        }

        // Functions whose class row already matches e_ti mod r; candidates
        // for single-indicator witnesses, in function order.
        std::vector<std::vector<std::vector<int>>> witness(static_cast<size_t>(nr));
        for (int ri = 0; ri < nr; ++ri) {
            const long long r = rs[static_cast<size_t>(ri)];
            witness[static_cast<size_t>(ri)].resize(static_cast<size_t>(tz));
            for (int f = 0; f < nfun; ++f)
                for (int ti = 0; ti < tz; ++ti) {
                    bool ok = true;
                    for (int tj = 0; tj < tz && ok; ++tj) {
                        const long long want = (tj == ti) ? 1 : 0;
                        ok = (base[static_cast<size_t>(tj)][static_cast<size_t>(f)] - want) %
                                 r ==
                             0;
                    }
                    if (ok)
                        witness[static_cast<size_t>(ri)][static_cast<size_t>(ti)].push_back(f);
                }
        }

        IntMatrix m;  // rebuilt lazily per J
        std::vector<int> comb;
        long long local = 0;
        std::vector<std::vector<long long>> found(static_cast<size_t>(tz));

        for (int s = 0; s <= mj; ++s) {
            comb.assign(static_cast<size_t>(s), 0);
            for (int k = 0; k < s; ++k) comb[static_cast<size_t>(k)] = k;
            bool more = s <= naux && (s == 0 || !comb.empty());
            while (more) {
                bool m_built = false;
                for (int ri = 0; ri < nr; ++ri) {
                    FaceAcc& acc = accs[static_cast<size_t>(ri)];
                    if (acc.failed) continue;
                    if (skip_hint &&
                        (*skip_hint)[static_cast<size_t>(ri)].load(std::memory_order_relaxed))
                        continue;
                    const long long r = rs[static_cast<size_t>(ri)];

                    bool all_solved = true;
                    for (int ti = 0; ti < tz; ++ti) {
                        // Single-indicator fast path: a function whose class
                        // row is e_ti and whose aux divisors all miss J.
                        int found_fun = -1;
                        for (int f :
                             witness[static_cast<size_t>(ri)][static_cast<size_t>(ti)]) {
                            bool clean = true;
                            for (const auto& [ai, coeff] : fun_aux[static_cast<size_t>(f)]) {
                                if (coeff % r == 0) continue;
                                if (std::binary_search(comb.begin(), comb.end(), ai)) {
                                    clean = false;
                                    break;
                                }
                            }
                            if (clean) {
                                found_fun = f;
                                break;
                            }
                        }

                        std::vector<long long>& x = found[static_cast<size_t>(ti)];
                        if (found_fun >= 0) {
                            x.assign(static_cast<size_t>(nfun), 0);
                            x[static_cast<size_t>(found_fun)] = 1;
                            ++acc.solved;
                            ++acc.indicators;
                        } else {
                            if (!m_built) {
                                m = IntMatrix(tz + s, nfun);
                                for (int ti2 = 0; ti2 < tz; ++ti2)
                                    for (int f = 0; f < nfun; ++f)
                                        m.at(ti2, f) =
                                            base[static_cast<size_t>(ti2)]
                                                [static_cast<size_t>(f)];
                                for (int k = 0; k < s; ++k)
                                    for (int f = 0; f < nfun; ++f)
                                        m.at(tz + k, f) =
                                            aux_matrix[static_cast<size_t>(
                                                comb[static_cast<size_t>(k)])]
                                                      [static_cast<size_t>(f)];
                                m_built = true;
                            }
                            std::vector<long long> target(static_cast<size_t>(tz + s), 0);
                            target[static_cast<size_t>(ti)] = 1;
                            auto solution = solve_mod(m, target, r);
                            if (!solution) {
                                acc.failed = true;
                                acc.fail_local = local;
                                acc.fail_j = comb;
                                acc.fail_target_pos = ti;
                                all_solved = false;
                                break;
                            }
                            x = std::move(*solution);
                            ++acc.solved;
                            long long nonzero = 0;
                            bool unit_entry = true;
                            for (long long e : x)
                                if (e != 0) {
                                    ++nonzero;
                                    unit_entry = unit_entry && e == 1;
                                }
                            if (nonzero == 1 && unit_entry) ++acc.indicators;
                        }

                        if (options.store_solutions) {
                            CertificateEntry entry;
                            entry.scenario_index = offset[static_cast<size_t>(fi)] + local;
                            entry.scenario.t = t;
                            entry.scenario.j = comb;
                            entry.target = t[static_cast<size_t>(ti)];
                            entry.exponents = x;
                            acc.entries.push_back(std::move(entry));
                        }
                    }

                    if (all_solved && options.symbolic_check) {
                        bridge_check(tz, s, r,
                                     mix_seed(options.symbolic_seed,
                                              static_cast<std::uint64_t>(
                                                  offset[static_cast<size_t>(fi)] + local) *
                                                      1000003ull +
                                                  static_cast<std::uint64_t>(r)));
                        ++acc.symbolic;
                    }
                }
                ++local;
                more = s > 0 && next_combination(comb, naux);
            }
        }
    }
};

// Stored solutions are re-checked against their full congruence system
// before the certificate is handed out.
void recheck_entries(const std::vector<CertificateEntry>& entries, long long r,
                     const FunctionScheme& scheme, const ColoredComplex& colored) {
    for (const CertificateEntry& entry : entries) {
        const LocalSystem system = local_matrix(entry.scenario, scheme, colored);
        const std::vector<long long> got = mul(system.m, entry.exponents);
        int row = -1;
        for (size_t k = 0; k < entry.scenario.t.size(); ++k)
            if (entry.scenario.t[k] == entry.target) row = static_cast<int>(k);
        if (row < 0) throw internal_error("certificate entry targets a non-T component");
        for (int k = 0; k < system.m.rows; ++k) {
            const long long want = (k == row) ? 1 : 0;
            if ((got[static_cast<size_t>(k)] - want) % r != 0)
                throw internal_error("certificate entry failed its congruence re-check");
        }
    }
}

std::string face_names(const ColoredComplex& colored, const Face& f) {
    std::string out = "{";
    for (size_t k = 0; k < f.size(); ++k) {
        if (k) out += ',';
        out += colored.complex.vertex(f[k]).id;
    }
    out += '}';
    return out;
}

std::string aux_names(const FunctionScheme& scheme, const std::vector<int>& j) {
    std::string out = "{";
    for (size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        out += scheme.aux_order[static_cast<size_t>(j[k])];
    }
    out += '}';
    return out;
}

}  // namespace

int FunctionScheme::aux_index(const std::string& id) const {
    for (size_t k = 0; k < aux_order.size(); ++k)
        if (aux_order[k] == id) return static_cast<int>(k);
    return -1;
}

FunctionScheme square_scheme(const ColoredComplex& colored) {
    const int n = colored.complex.dimension();
    FunctionScheme scheme;
    scheme.name = "square";
    scheme.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            SchemeFunction f;
            f.name = "f" + std::to_string(i) + "^" + std::to_string(j);
            f.class_coeffs.assign(static_cast<size_t>(n), 0);
            f.class_coeffs[static_cast<size_t>(i - 1)] = 1;
            const std::string aux = "E" + std::to_string(i) + "^" + std::to_string(j);
            f.aux_coeffs[aux] = 1;
            scheme.functions.push_back(std::move(f));
            scheme.aux_order.push_back(aux);
        }
    return scheme;
}

FunctionScheme remark_scheme_4(const ColoredComplex& colored) {
    require_dimension_3(colored, "remark4");
    FunctionScheme scheme = build_fixed_scheme(
        "remark4", {{1, 1, 1}, {1, 1, 0}, {0, 1, 1}, {1, 2, 1}});
    return scheme;
}

FunctionScheme remark_scheme_3(const ColoredComplex& colored) {
    require_dimension_3(colored, "remark3");
    FunctionScheme scheme =
        build_fixed_scheme("remark3", {{1, 3, 3}, {1, 2, 1}, {1, 1, 2}});
    return scheme;
}

FunctionScheme scheme_by_name(const std::string& name, const ColoredComplex& colored) {
    if (name == "square") return square_scheme(colored);
    if (name == "remark4") return remark_scheme_4(colored);
    if (name == "remark3") return remark_scheme_3(colored);
    throw std::invalid_argument("unknown scheme '" + name +
                                "' (expected square, remark4 or remark3)");
}

std::vector<Scenario> enumerate_scenarios(const ColoredComplex& colored,
                                          const FunctionScheme& scheme) {
    const int n = colored.complex.dimension();
    const int naux = static_cast<int>(scheme.aux_order.size());
    std::vector<Scenario> out;
    for (const Face& t : colored.complex.faces()) {
        const int mj = std::min(n - static_cast<int>(t.size()), naux);
        for (int s = 0; s <= mj; ++s) {
            std::vector<int> comb(static_cast<size_t>(s));
            for (int k = 0; k < s; ++k) comb[static_cast<size_t>(k)] = k;
            do {
                out.push_back(Scenario{t, comb});
            } while (s > 0 && next_combination(comb, naux));
        }
    }
    return out;
}

long long count_scenarios(const ColoredComplex& colored, const FunctionScheme& scheme) {
    const int n = colored.complex.dimension();
    const int naux = static_cast<int>(scheme.aux_order.size());
    long long total = 0;
    for (const Face& t : colored.complex.faces()) {
        const int mj = std::min(n - static_cast<int>(t.size()), naux);
        for (int s = 0; s <= mj; ++s) total += binomial(naux, s);
    }
    return total;
}

LocalSystem local_matrix(const Scenario& sc, const FunctionScheme& scheme,
                         const ColoredComplex& colored) {
    const int n = colored.complex.dimension();
    const int naux = static_cast<int>(scheme.aux_order.size());
    if (sc.t.empty() || !colored.complex.is_face(sc.t))
        throw std::invalid_argument("invalid scenario: T is not a face");
    if (!std::is_sorted(sc.j.begin(), sc.j.end()) ||
        std::adjacent_find(sc.j.begin(), sc.j.end()) != sc.j.end())
        throw std::invalid_argument("invalid scenario: J must be sorted and unique");
    for (int ai : sc.j)
        if (ai < 0 || ai >= naux)
            throw std::invalid_argument("invalid scenario: unknown aux divisor");
    if (static_cast<int>(sc.t.size() + sc.j.size()) > n)
        throw std::invalid_argument("invalid scenario: |T| + |J| exceeds n");
    std::vector<char> seen(static_cast<size_t>(n + 1), 0);
    for (int v : sc.t) {
        const int cls = color_of(colored, v);
        if (cls < 1 || cls > n || seen[static_cast<size_t>(cls)])
            throw std::invalid_argument("invalid scenario: T repeats a color class");
        seen[static_cast<size_t>(cls)] = 1;
    }

    const int nfun = static_cast<int>(scheme.functions.size());
    const int rows = static_cast<int>(sc.t.size() + sc.j.size());
    LocalSystem out;
    out.m = IntMatrix(rows, nfun);
    for (int ti = 0; ti < static_cast<int>(sc.t.size()); ++ti) {
        const int cls = color_of(colored, sc.t[static_cast<size_t>(ti)]) - 1;
        for (int f = 0; f < nfun; ++f)
            out.m.at(ti, f) = scheme.functions[static_cast<size_t>(f)]
                                  .class_coeffs[static_cast<size_t>(cls)];
    }
    for (int k = 0; k < static_cast<int>(sc.j.size()); ++k) {
        const std::string& aux = scheme.aux_order[static_cast<size_t>(sc.j[static_cast<size_t>(k)])];
        for (int f = 0; f < nfun; ++f) {
            const auto& coeffs = scheme.functions[static_cast<size_t>(f)].aux_coeffs;
            const auto it = coeffs.find(aux);
            out.m.at(static_cast<int>(sc.t.size()) + k, f) =
                (it == coeffs.end()) ? 0 : it->second;
        }
    }
    for (int ti = 0; ti < static_cast<int>(sc.t.size()); ++ti) {
        std::vector<long long> e(static_cast<size_t>(rows), 0);
        e[static_cast<size_t>(ti)] = 1;
        out.targets.push_back(std::move(e));
    }
    return out;
}

std::vector<VerifyResult> verify_many(const ColoredComplex& colored,
                                      const FunctionScheme& scheme,
                                      const std::vector<long long>& rs,
                                      const VerifyOptions& options) {
    for (long long r : rs)
        if (r < 2) throw std::invalid_argument("verify: modulus must be >= 2");

    const VerifyEngine engine(colored, scheme);
    const int nfaces = static_cast<int>(engine.faces.size());
    const int nr = static_cast<int>(rs.size());

    std::vector<std::vector<FaceAcc>> accs(
        static_cast<size_t>(nfaces), std::vector<FaceAcc>(static_cast<size_t>(nr)));

    std::exception_ptr first_error;
    std::atomic<bool> error_seen{false};

    if (options.parallel) {
        // No cross-face skip hints here: faces run out of order, and a
        // later face must not suppress an earlier counterexample.
#pragma omp parallel for schedule(dynamic, 8)
        for (int fi = 0; fi < nfaces; ++fi) {
            if (error_seen.load(std::memory_order_relaxed)) continue;
            try {
                engine.run_face(fi, rs, options, accs[static_cast<size_t>(fi)], nullptr);
            } catch (...) {
#pragma omp critical
                {
                    if (!error_seen.exchange(true)) first_error = std::current_exception();
                }
            }
        }
    } else {
        // Faces run in enumeration order, so once a modulus has failed the
        // remaining faces can skip it without changing the reported
        // counterexample.
        std::vector<std::atomic<bool>> skip(static_cast<size_t>(nr));
        for (auto& s : skip) s.store(false);
        for (int fi = 0; fi < nfaces && !first_error; ++fi) {
            try {
                engine.run_face(fi, rs, options, accs[static_cast<size_t>(fi)], &skip);
                for (int ri = 0; ri < nr; ++ri)
                    if (accs[static_cast<size_t>(fi)][static_cast<size_t>(ri)].failed)
                        skip[static_cast<size_t>(ri)].store(true,
                                                            std::memory_order_relaxed);
            } catch (...) {
                first_error = std::current_exception();
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<VerifyResult> results;
    results.reserve(static_cast<size_t>(nr));
    for (int ri = 0; ri < nr; ++ri) {
        const long long r = rs[static_cast<size_t>(ri)];
        int fail_face = -1;
        for (int fi = 0; fi < nfaces; ++fi)
            if (accs[static_cast<size_t>(fi)][static_cast<size_t>(ri)].failed) {
                fail_face = fi;
                break;
            }
        if (fail_face >= 0) {
            const FaceAcc& acc = accs[static_cast<size_t>(fail_face)][static_cast<size_t>(ri)];
            Counterexample ce;
            ce.scheme = scheme.name;
            ce.r = r;
            ce.scenario_count = engine.total;
            ce.scenario_index = engine.offset[static_cast<size_t>(fail_face)] + acc.fail_local;
            ce.scenario.t = engine.faces[static_cast<size_t>(fail_face)];
            ce.scenario.j = acc.fail_j;
            ce.target = ce.scenario.t[static_cast<size_t>(acc.fail_target_pos)];
            results.emplace_back(std::move(ce));
            continue;
        }
        Certificate cert;
        cert.scheme = scheme.name;
        cert.r = r;
        cert.scenario_count = engine.total;
        for (int fi = 0; fi < nfaces; ++fi) {
            FaceAcc& acc = accs[static_cast<size_t>(fi)][static_cast<size_t>(ri)];
            cert.solved_targets += acc.solved;
            cert.indicator_solutions += acc.indicators;
            cert.symbolic_checks += acc.symbolic;
            for (CertificateEntry& e : acc.entries) cert.solutions.push_back(std::move(e));
        }
        if (options.store_solutions)
            recheck_entries(cert.solutions, r, scheme, colored);
        results.emplace_back(std::move(cert));
    }
    return results;
}

VerifyResult verify(const ColoredComplex& colored, const FunctionScheme& scheme,
                    long long r, const VerifyOptions& options) {
    return std::move(verify_many(colored, scheme, {r}, options).front());
}

VerifyResult verify_serial(const ColoredComplex& colored, const FunctionScheme& scheme,
                           long long r, VerifyOptions options) {
    options.parallel = false;
    return std::move(verify_many(colored, scheme, {r}, options).front());
}

std::string render_report(const VerifyResult& result, const ColoredComplex& colored,
                          const FunctionScheme& scheme) {
    std::ostringstream os;
    if (const auto* cert = std::get_if<Certificate>(&result)) {
        os << "scenarios: " << cert->scenario_count << "\n";
        os << "CERTIFIED scheme=" << cert->scheme << " r=" << cert->r
           << " scenarios=" << cert->scenario_count << "\n";
    } else {
        const auto& ce = std::get<Counterexample>(result);
        os << "scenarios: " << ce.scenario_count << "\n";
        os << "FAILED scheme=" << ce.scheme << " r=" << ce.r
           << " scenario=T:" << face_names(colored, ce.scenario.t)
           << " J:" << aux_names(scheme, ce.scenario.j)
           << " target=" << colored.complex.vertex(ce.target).id << "\n";
    }
    return os.str();
}

std::string render_report_json(const VerifyResult& result, const ColoredComplex& colored,
                               const FunctionScheme& scheme) {
    nlohmann::json doc;
    if (const auto* cert = std::get_if<Certificate>(&result)) {
        doc["verdict"] = "CERTIFIED";
        doc["scheme"] = cert->scheme;
        doc["r"] = cert->r;
        doc["scenarios"] = cert->scenario_count;
        doc["solved_targets"] = cert->solved_targets;
        doc["indicator_solutions"] = cert->indicator_solutions;
        if (cert->symbolic_checks > 0) doc["symbolic_checks"] = cert->symbolic_checks;
    } else {
        const auto& ce = std::get<Counterexample>(result);
        doc["verdict"] = "FAILED";
        doc["scheme"] = ce.scheme;
        doc["r"] = ce.r;
        doc["scenarios"] = ce.scenario_count;
        doc["scenario_index"] = ce.scenario_index;
        nlohmann::json t = nlohmann::json::array();
        for (int v : ce.scenario.t) t.push_back(colored.complex.vertex(v).id);
        nlohmann::json j = nlohmann::json::array();
        for (int ai : ce.scenario.j)
            j.push_back(scheme.aux_order[static_cast<size_t>(ai)]);
        doc["scenario"] = nlohmann::json{{"T", t}, {"J", j}};
        doc["target"] = colored.complex.vertex(ce.target).id;
    }
    return doc.dump() + "\n";
}

}  // namespace ramkill
