#include "torq/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace torq {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> data) {
    rows = (int)data.size();
    cols = rows ? (int)data.begin()->size() : 0;
    entries.reserve((size_t)rows * cols);
    for (const auto& row : data) {
        if ((int)row.size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (long v : row) entries.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

// Bareiss fraction-free elimination
BigInt determinant(const IntMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant: not square");
    int n = a.rows;
    if (n == 0) return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

int rank(const IntMatrix& a) {
    IntMatrix m = a;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        for (int i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            BigInt x = m.at(i, c), y = m.at(r, c);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = m.at(i, j) * y - m.at(r, j) * x;
        }
        ++r;
    }
    return r;
}

BigInt minors_gcd(const IntMatrix& A, int k) {
    if (k <= 0 || k > std::min(A.rows, A.cols))
        throw std::invalid_argument("minors_gcd: k out of range");
    std::vector<int> rsel(k), csel(k);
    BigInt g = 0;

    auto det_sub = [&]() {
        IntMatrix m(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m.at(i, j) = A.at(rsel[i], csel[j]);
        return determinant(m);
    };

    // iterate k-subsets of rows and columns
    std::vector<int> rc(k), cc(k);
    for (int i = 0; i < k; ++i) rc[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) cc[i] = i;
        while (true) {
            rsel = rc;
            csel = cc;
            g = big_gcd(g, det_sub());
            int i = k - 1;
            while (i >= 0 && cc[i] == A.cols - k + i) --i;
            if (i < 0) break;
            ++cc[i];
            for (int j = i + 1; j < k; ++j) cc[j] = cc[j - 1] + 1;
        }
        int i = k - 1;
        while (i >= 0 && rc[i] == A.rows - k + i) --i;
        if (i < 0) break;
        ++rc[i];
        for (int j = i + 1; j < k; ++j) rc[j] = rc[j - 1] + 1;
    }
    return g;
}

namespace {

void row_axpy(IntMatrix& M, int dst, int src, const BigInt& q) {
    for (int j = 0; j < M.cols; ++j) M.at(dst, j) -= q * M.at(src, j);
}

void row_swap(IntMatrix& M, int a, int b) {
    for (int j = 0; j < M.cols; ++j) std::swap(M.at(a, j), M.at(b, j));
}

void row_negate(IntMatrix& M, int r) {
    for (int j = 0; j < M.cols; ++j) M.at(r, j) = -M.at(r, j);
}

}  // namespace

RowReduceResult integer_row_reduce(const IntMatrix& A) {
    IntMatrix R = A;
    IntMatrix U = IntMatrix::identity(A.rows);
    int r = 0;
    for (int c = 0; c < R.cols && r < R.rows; ++c) {
        // gcd elimination below position (r, c)
        while (true) {
            int p = -1;
            for (int i = r; i < R.rows; ++i)
                if (R.at(i, c) != 0 && (p < 0 || abs(R.at(i, c)) < abs(R.at(p, c)))) p = i;
            if (p < 0) break;
            if (p != r) {
                row_swap(R, r, p);
                row_swap(U, r, p);
            }
            bool done = true;
            for (int i = r + 1; i < R.rows; ++i) {
                if (R.at(i, c) == 0) continue;
                BigInt q = R.at(i, c) / R.at(r, c);
                row_axpy(R, i, r, q);
                row_axpy(U, i, r, q);
                if (R.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < R.rows && R.at(r, c) != 0) {
            if (R.at(r, c) < 0) {
                row_negate(R, r);
                row_negate(U, r);
            }
            // reduce entries above the pivot modulo the pivot
            for (int i = 0; i < r; ++i) {
                BigInt q = R.at(i, c) / R.at(r, c);
                if (R.at(i, c) - q * R.at(r, c) < 0) q -= 1;  // floor division
                if (q != 0) {
                    row_axpy(R, i, r, q);
                    row_axpy(U, i, r, q);
                }
            }
            ++r;
        }
    }
    return {std::move(U), std::move(R)};
}

IntMatrix kernel_lattice_basis(const IntMatrix& A) {
    SmithForm sf = smith_normal_form(A);
    int r = 0;
    int dmax = std::min(A.rows, A.cols);
    for (int i = 0; i < dmax; ++i)
        if (sf.S.at(i, i) != 0) ++r;
    IntMatrix basis(A.cols - r, A.cols);
    for (int i = 0; i < A.cols - r; ++i)
        for (int j = 0; j < A.cols; ++j) basis.at(i, j) = sf.V.at(j, r + i);
    return basis;
}

SmithForm smith_normal_form(const IntMatrix& A) {
    IntMatrix S = A;
    IntMatrix U = IntMatrix::identity(A.rows);
    IntMatrix V = IntMatrix::identity(A.cols);

    auto col_axpy = [](IntMatrix& M, int dst, int src, const BigInt& q) {
        for (int i = 0; i < M.rows; ++i) M.at(i, dst) -= q * M.at(i, src);
    };
    auto col_swap = [](IntMatrix& M, int a, int b) {
        for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, a), M.at(i, b));
    };
    auto col_negate = [](IntMatrix& M, int c) {
        for (int i = 0; i < M.rows; ++i) M.at(i, c) = -M.at(i, c);
    };

    int n = std::min(S.rows, S.cols);
    for (int k = 0; k < n; ++k) {
        while (true) {
            // find a nonzero entry of minimal magnitude in the trailing block
            int pr = -1, pc = -1;
            for (int i = k; i < S.rows; ++i)
                for (int j = k; j < S.cols; ++j)
                    if (S.at(i, j) != 0 &&
                        (pr < 0 || abs(S.at(i, j)) < abs(S.at(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) break;  // trailing block is zero
            if (pr != k) {
                row_swap(S, k, pr);
                row_swap(U, k, pr);
            }
            if (pc != k) {
                col_swap(S, k, pc);
                col_swap(V, k, pc);
            }
            bool clean = true;
            for (int i = k + 1; i < S.rows; ++i) {
                if (S.at(i, k) == 0) continue;
                BigInt q = S.at(i, k) / S.at(k, k);
                row_axpy(S, i, k, q);
                row_axpy(U, i, k, q);
                if (S.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < S.cols; ++j) {
                if (S.at(k, j) == 0) continue;
                BigInt q = S.at(k, j) / S.at(k, k);
                col_axpy(S, j, k, q);
                col_axpy(V, j, k, q);
                if (S.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // ensure the pivot divides every entry of the trailing block
            bool divides_all = true;
            for (int i = k + 1; i < S.rows && divides_all; ++i)
                for (int j = k + 1; j < S.cols; ++j)
                    if (S.at(i, j) % S.at(k, k) != 0) {
                        // fold the offending row into row k and restart
                        row_axpy(S, k, i, BigInt(-1));
                        row_axpy(U, k, i, BigInt(-1));
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (k < n && S.at(k, k) < 0) {
            row_negate(S, k);
            row_negate(U, k);
        }
    }
    // make diagonal signs positive (column flip for safety, should be done already)
    for (int k = 0; k < n; ++k)
        if (S.at(k, k) < 0) {
            col_negate(S, k);
            col_negate(V, k);
        }
    return {std::move(U), std::move(S), std::move(V)};
}

std::vector<BigInt> primitive_vector(std::vector<BigInt> v) {
    BigInt g = 0;
    for (const auto& x : v) g = big_gcd(g, x);
    if (g == 0) throw std::invalid_argument("primitive_vector: zero vector");
    int sign = 0;
    for (const auto& x : v)
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    for (auto& x : v) {
        x /= g;
        if (sign < 0) x = -x;
    }
    return v;
}

}  // namespace torq
