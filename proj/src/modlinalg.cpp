#include "ramkill/modlinalg.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "ramkill/errors.hpp"

namespace ramkill {

namespace {

long long checked_add(long long x, long long y) {
    long long out;
    if (__builtin_add_overflow(x, y, &out))
        throw std::overflow_error("integer overflow in matrix arithmetic");
    return out;
}

long long checked_sub(long long x, long long y) {
    long long out;
    if (__builtin_sub_overflow(x, y, &out))
        throw std::overflow_error("integer overflow in matrix arithmetic");
    return out;
}

long long checked_mul(long long x, long long y) {
    long long out;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::overflow_error("integer overflow in matrix arithmetic");
    return out;
}

// x - q*y across a row/column slice.
void row_axpy(IntMatrix& m, int dst, int src, long long q) {
    for (int c = 0; c < m.cols; ++c)
        m.at(dst, c) = checked_sub(m.at(dst, c), checked_mul(q, m.at(src, c)));
}

void col_axpy(IntMatrix& m, int dst, int src, long long q) {
    for (int r = 0; r < m.rows; ++r)
        m.at(r, dst) = checked_sub(m.at(r, dst), checked_mul(q, m.at(r, src)));
}

void swap_rows(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void negate_row(IntMatrix& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = checked_sub(0, m.at(i, c));
}

long long euclid_gcd(long long x, long long y) {
    x = std::llabs(x);
    y = std::llabs(y);
    while (y) {
        long long t = x % y;
        x = y;
        y = t;
    }
    return x;
}

// Modular inverse of a mod m for gcd(a, m) = 1.
long long mod_inverse(long long a, long long m) {
    long long old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw internal_error("mod_inverse: arguments not coprime");
    long long inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

}  // namespace

IntMatrix::IntMatrix(int rows_, int cols_)
    : rows(rows_), cols(cols_),
      a(static_cast<size_t>(rows_) * static_cast<size_t>(cols_), 0) {
    if (rows_ < 0 || cols_ < 0)
        throw std::invalid_argument("IntMatrix: negative shape");
}

IntMatrix IntMatrix::identity(int k) {
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
    IntMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const long long xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                out.at(i, j) = checked_add(out.at(i, j), checked_mul(xik, y.at(k, j)));
        }
    return out;
}

std::vector<long long> mul(const IntMatrix& x, const std::vector<long long>& v) {
    if (x.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("mul: dimension mismatch");
    std::vector<long long> out(static_cast<size_t>(x.rows), 0);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            out[static_cast<size_t>(i)] =
                checked_add(out[static_cast<size_t>(i)],
                            checked_mul(x.at(i, j), v[static_cast<size_t>(j)]));
    return out;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows);
    IntMatrix v = IntMatrix::identity(a.cols);

    const int steps = std::min(a.rows, a.cols);
    for (int t = 0; t < steps; ++t) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j) {
                const long long m = std::llabs(d.at(i, j));
                if (m != 0 && (pr < 0 || m < best)) {
                    best = m;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // trailing block is zero

        swap_rows(d, t, pr);
        swap_rows(u, t, pr);
        swap_cols(d, t, pc);
        swap_cols(v, t, pc);

        for (;;) {
            // Clear column t below the pivot, then row t right of it; a
            // nonzero remainder becomes the new, strictly smaller pivot.
            bool reduced = true;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                const long long q = d.at(i, t) / d.at(t, t);
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                if (d.at(i, t) != 0) {
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    reduced = false;
                }
            }
            if (!reduced) continue;
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                const long long q = d.at(t, j) / d.at(t, t);
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    reduced = false;
                }
            }
            if (!reduced) continue;

            // The pivot must divide the whole trailing block for the
            // divisibility chain; folding an offending row back in shrinks
            // the pivot, so this terminates.
            bool divides_all = true;
            for (int i = t + 1; i < d.rows && divides_all; ++i)
                for (int j = t + 1; j < d.cols && divides_all; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_axpy(d, t, i, -1);
                        row_axpy(u, t, i, -1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }

        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }

    return SmithResult{std::move(u), std::move(d), std::move(v)};
}

std::optional<std::vector<long long>> solve_mod(const IntMatrix& a,
                                                const std::vector<long long>& b,
                                                long long r) {
    if (r < 2) throw std::invalid_argument("solve_mod: modulus must be >= 2");
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_mod: dimension mismatch");

    const SmithResult snf = smith_normal_form(a);
    const std::vector<long long> c = mul(snf.u, b);

    std::vector<long long> y(static_cast<size_t>(a.cols), 0);
    const int diag = std::min(a.rows, a.cols);
    for (int k = 0; k < a.rows; ++k) {
        long long ck = c[static_cast<size_t>(k)] % r;
        if (ck < 0) ck += r;
        const long long dk = (k < diag) ? snf.d.at(k, k) : 0;
        if (dk % r == 0) {
            // d*y is 0 mod r for every y; solvable iff the target is too.
            if (ck != 0) return std::nullopt;
            continue;
        }
        const long long g = euclid_gcd(dk, r);
        if (ck % g != 0) return std::nullopt;
        const long long rg = r / g;
        y[static_cast<size_t>(k)] =
            checked_mul((ck / g) % rg, mod_inverse((dk / g) % rg, rg)) % rg;
    }

    std::vector<long long> x = mul(snf.v, y);
    for (long long& e : x) {
        e %= r;
        if (e < 0) e += r;
    }

    // The solution is only handed out after re-multiplication against the
    // original system.
    const std::vector<long long> check = mul(a, x);
    for (int k = 0; k < a.rows; ++k) {
        const long long lhs =
            checked_sub(check[static_cast<size_t>(k)], b[static_cast<size_t>(k)]) % r;
        if (lhs != 0) throw internal_error("solve_mod: solution failed re-check");
    }
    return x;
}

}  // namespace ramkill
