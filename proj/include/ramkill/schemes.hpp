#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ramkill/coloring.hpp"
#include "ramkill/modlinalg.hpp"

namespace ramkill {

// One formal function, recorded through its divisor: an integer coefficient
// per color class D_i plus positive coefficients on private auxiliary
// divisors (the E's) that are in general position with everything chosen
// before them.
struct SchemeFunction {
    std::string name;
    std::vector<long long> class_coeffs;           // length n, entry i-1 is the D_i coefficient
    std::map<std::string, long long> aux_coeffs;   // auxiliary divisor id -> coefficient

    friend bool operator==(const SchemeFunction&, const SchemeFunction&) = default;
};

struct FunctionScheme {
    std::string name;
    int n = 0;
    std::vector<SchemeFunction> functions;
    std::vector<std::string> aux_order;  // creation order; earlier E's constrain later ones

    int aux_index(const std::string& id) const;  // -1 when absent

    friend bool operator==(const FunctionScheme&, const FunctionScheme&) = default;
};

// The n^2 functions f_i^j with div(f_i^j) = D_i + E_i^j, each aux private.
FunctionScheme square_scheme(const ColoredComplex& colored);
// Four functions covering n = 3 with class coefficient rows
// (1,1,1), (1,1,0), (0,1,1), (1,2,1).
FunctionScheme remark_scheme_4(const ColoredComplex& colored);
// Three functions covering n = 3 when r is prime to 6, rows
// (1,3,3), (1,2,1), (1,1,2).
FunctionScheme remark_scheme_3(const ColoredComplex& colored);

FunctionScheme scheme_by_name(const std::string& name, const ColoredComplex& colored);

// A possible valuation center: T is the face of colored components through
// the point, J the set of auxiliary divisors through it. General position
// admits exactly the pairs with |T| + |J| <= n, T nonempty.
struct Scenario {
    Face t;
    std::vector<int> j;  // sorted indices into aux_order

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

// All scenarios, faces ordered by size then lexicographically, J subsets by
// size then lexicographically.
std::vector<Scenario> enumerate_scenarios(const ColoredComplex& colored,
                                          const FunctionScheme& scheme);
long long count_scenarios(const ColoredComplex& colored, const FunctionScheme& scheme);

// Valuation matrix at a scenario: one row per local parameter (T then J),
// one column per function; the targets select each T row in turn.
struct LocalSystem {
    IntMatrix m;
    std::vector<std::vector<long long>> targets;
};
LocalSystem local_matrix(const Scenario& sc, const FunctionScheme& scheme,
                         const ColoredComplex& colored);

struct CertificateEntry {
    long long scenario_index = 0;
    Scenario scenario;
    int target = -1;                   // vertex index, an element of scenario.t
    std::vector<long long> exponents;  // per function, in [0, r)
};

// Every local parameter of every admissible valuation center is a product
// of powers of scheme functions times a unit and an r-th power; the stored
// exponent vectors witness it and are re-checked by multiplication.
struct Certificate {
    std::string scheme;
    long long r = 0;
    long long scenario_count = 0;
    long long solved_targets = 0;
    long long indicator_solutions = 0;  // solutions that are a single entry 1
    long long symbolic_checks = 0;
    std::vector<CertificateEntry> solutions;  // filled when storing is enabled
};

// The first admissible scenario (in enumeration order) where some component
// of T has no exponent vector.
struct Counterexample {
    std::string scheme;
    long long r = 0;
    long long scenario_count = 0;  // total enumerable scenarios
    long long scenario_index = 0;
    Scenario scenario;
    int target = -1;
};

using VerifyResult = std::variant<Certificate, Counterexample>;

struct VerifyOptions {
    bool parallel = true;         // OpenMP over faces when available
    bool store_solutions = true;
    bool symbolic_check = false;  // residue-symbol bridge pass per certified scenario
    std::uint64_t symbolic_seed = 1;
};

// Checks every scenario: a target c in T is solved when some exponent vector
// x satisfies M x == e_c (mod r). Single-indicator witnesses are tried
// before the general Smith-form solver, so square-scheme certificates come
// out in the pigeonhole shape. Scenario checks are independent; the parallel
// path merges deterministically (first counterexample in enumeration order).
VerifyResult verify(const ColoredComplex& colored, const FunctionScheme& scheme,
                    long long r, const VerifyOptions& options = {});

// Reference implementation: identical results, plain sequential loop.
VerifyResult verify_serial(const ColoredComplex& colored, const FunctionScheme& scheme,
                           long long r, VerifyOptions options = {});

// One enumeration pass shared by several moduli.
std::vector<VerifyResult> verify_many(const ColoredComplex& colored,
                                      const FunctionScheme& scheme,
                                      const std::vector<long long>& rs,
                                      const VerifyOptions& options = {});

// Text report: a scenario-count summary line, then
//   CERTIFIED scheme=<name> r=<r> scenarios=<k>
// or
//   FAILED scheme=<name> r=<r> scenario=T:{...} J:{...} target=<component>
std::string render_report(const VerifyResult& result, const ColoredComplex& colored,
                          const FunctionScheme& scheme);
// Same fields as a JSON document.
std::string render_report_json(const VerifyResult& result, const ColoredComplex& colored,
                               const FunctionScheme& scheme);

}  // namespace ramkill
