#include "torica/int_matrix.hpp"

#include <algorithm>

#include "torica/errors.hpp"

namespace torica {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> data) {
    rows = static_cast<int>(data.size());
    cols = rows ? static_cast<int>(data.begin()->size()) : 0;
    entries.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& r : data) {
        if (static_cast<int>(r.size()) != cols)
            fail(Errc::InvalidArgument, "ragged matrix initializer");
        for (long x : r) entries.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols)
            fail(Errc::InvalidArgument, "ragged row list");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
    return from_rows(cols).transpose();
}

IntVec IntMatrix::row(int i) const {
    IntVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

IntVec IntMatrix::column(int j) const {
    IntVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntVec IntMatrix::apply(const IntVec& x) const {
    if (static_cast<int>(x.size()) != cols) fail(Errc::InvalidArgument, "size mismatch in apply");
    IntVec y(rows, Int(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) y[i] += at(i, j) * x[j];
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) fail(Errc::InvalidArgument, "size mismatch in matrix product");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

namespace {

// Row/column elementary operations mirrored onto the transform matrices.
void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntMatrix& m, int dst, int src, const Int& factor) {  // row dst += factor * row src
    for (int j = 0; j < m.cols; ++j) m.at(dst, j) += factor * m.at(src, j);
}

void add_col(IntMatrix& m, int dst, int src, const Int& factor) {  // col dst += factor * col src
    for (int i = 0; i < m.rows; ++i) m.at(i, dst) += factor * m.at(i, src);
}

void negate_row(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

namespace {

// Quotient rounded to nearest (p > 0), so remainders stay within p/2.
Int round_div(const Int& a, const Int& p) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (2 * r > p) ++q;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const int m = a.rows, n = a.cols;
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);
    const int limit = std::min(m, n);

    for (int t = 0; t < limit; ++t) {
        bool block_empty = false;
        for (;;) {
            // Re-select the smallest nonzero |entry| of the trailing block as
            // pivot on every pass; this is what keeps intermediate entries
            // from blowing up.
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (d.at(i, j) == 0) continue;
                    Int mag = abs(d.at(i, j));
                    if (pi < 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                block_empty = true;
                break;
            }
            swap_rows(d, t, pi);
            swap_rows(u, t, pi);
            swap_cols(d, t, pj);
            swap_cols(v, t, pj);
            if (d.at(t, t) < 0) {
                negate_row(d, t);
                negate_row(u, t);
            }
            const Int p = d.at(t, t);

            bool reduced = true;
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = round_div(d.at(i, t), p);
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(u, i, t, -q);
                }
                if (d.at(i, t) != 0) reduced = false;  // remainder < p: re-select
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = round_div(d.at(t, j), p);
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(v, j, t, -q);
                }
                if (d.at(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // Pivot must divide the whole trailing block for the chain d1|d2|...;
            // fold a bad row into row t and reduce again.
            bool chain_ok = true;
            for (int i = t + 1; i < m && chain_ok; ++i)
                for (int j = t + 1; j < n && chain_ok; ++j)
                    if (d.at(i, j) % p != 0) {
                        add_row(d, t, i, 1);
                        add_row(u, t, i, 1);
                        chain_ok = false;
                    }
            if (chain_ok) break;
        }
        if (block_empty) break;
    }

    SmithDecomposition out;
    out.elementary_divisors.resize(limit);
    for (int i = 0; i < limit; ++i) out.elementary_divisors[i] = d.at(i, i);
    out.u = std::move(u);
    out.d = std::move(d);
    out.v = std::move(v);
    return out;
}

int rank(const IntMatrix& a) {
    // Bareiss fraction-free elimination on a working copy.
    IntMatrix w = a;
    int r = 0;
    Int prev = 1;
    for (int col = 0; col < w.cols && r < w.rows; ++col) {
        int pivot = -1;
        for (int i = r; i < w.rows; ++i)
            if (w.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        swap_rows(w, r, pivot);
        for (int i = r + 1; i < w.rows; ++i) {
            for (int j = col + 1; j < w.cols; ++j) {
                Int num = w.at(i, j) * w.at(r, col) - w.at(i, col) * w.at(r, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, col) = 0;
        }
        prev = w.at(r, col);
        ++r;
    }
    return r;
}

std::vector<IntVec> kernel_basis(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    int rk = 0;
    for (const Int& e : snf.elementary_divisors)
        if (e != 0) ++rk;
    std::vector<IntVec> basis;
    for (int j = rk; j < a.cols; ++j) basis.push_back(snf.v.column(j));
    return basis;
}

Int determinant(const IntMatrix& a) {
    if (a.rows != a.cols) fail(Errc::InvalidArgument, "determinant of non-square matrix");
    const int n = a.rows;
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            swap_rows(w, k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
    if (static_cast<int>(b.size()) != a.rows) fail(Errc::InvalidArgument, "rhs size mismatch");
    SmithDecomposition snf = smith_normal_form(a);
    IntVec c = snf.u.apply(b);
    int limit = std::min(a.rows, a.cols);
    IntVec y(a.cols, Int(0));
    for (int i = 0; i < a.rows; ++i) {
        const Int& di = i < limit ? snf.elementary_divisors[i] : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        }
    }
    return snf.v.apply(y);
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
    if (static_cast<int>(b.size()) != a.rows) fail(Errc::InvalidArgument, "rhs size mismatch");
    const int m = a.rows, n = a.cols;
    std::vector<RatVec> w(m, RatVec(n + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][n] = b[i];
    }
    std::vector<int> pivot_col(m, -1);
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (w[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[r], w[p]);
        Rat inv = 1 / w[r][col];
        for (int j = col; j <= n; ++j) w[r][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (int j = col; j <= n; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col[r] = col;
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (w[i][n] != 0) return std::nullopt;  // inconsistent
    RatVec x(n, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = w[i][n];
    return x;
}

int rational_rank(const std::vector<RatVec>& rows) {
    if (rows.empty()) return 0;
    // Clear denominators row by row; rank is unchanged.
    std::vector<IntVec> scaled;
    scaled.reserve(rows.size());
    for (const RatVec& r : rows) {
        Int lcm = 1;
        for (const Rat& q : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        IntVec z(r.size());
        for (size_t j = 0; j < r.size(); ++j) {
            Rat s = r[j] * Rat(lcm);
            z[j] = s.get_num();
        }
        scaled.push_back(std::move(z));
    }
    return rank(IntMatrix::from_rows(scaled));
}

}  // namespace torica
