#pragma once

#include <optional>
#include <vector>

namespace ramkill {

// Dense row-major integer matrix. Arithmetic on these is overflow-checked;
// values leaving the 64-bit range raise std::overflow_error.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int rows_, int cols_);
    static IntMatrix identity(int k);

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
std::vector<long long> mul(const IntMatrix& x, const std::vector<long long>& v);

struct SmithResult {
    IntMatrix u;  // rows x rows, |det| = 1
    IntMatrix d;  // diagonal, d[k] >= 0, d[k] | d[k+1]
    IntMatrix v;  // cols x cols, |det| = 1
};

// Smith normal form u * a * v = d by unimodular row/column operations.
SmithResult smith_normal_form(const IntMatrix& a);

// One solution x with entries in [0, r) of a * x == b (mod r), or nullopt
// when none exists. Works for arbitrary composite r >= 2 by solving the
// diagonalized system d * y == u*b componentwise and mapping back, so no
// factorization of r is needed. The returned vector is re-checked against
// the original system before it is handed out.
std::optional<std::vector<long long>> solve_mod(const IntMatrix& a,
                                                const std::vector<long long>& b,
                                                long long r);

}  // namespace ramkill
