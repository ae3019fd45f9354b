#ifndef TORQ_INTMAT_HPP
#define TORQ_INTMAT_HPP

#include <vector>

#include "torq/rational.hpp"

namespace torq {

// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> entries;  // rows * cols

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries((size_t)r * c) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> data);

    BigInt& at(int r, int c) { return entries[(size_t)r * cols + c]; }
    const BigInt& at(int r, int c) const { return entries[(size_t)r * cols + c]; }

    static IntMatrix identity(int n);
    IntMatrix transpose() const;
};

bool operator==(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
BigInt determinant(const IntMatrix& a);  // square input, fraction-free elimination
int rank(const IntMatrix& a);

struct RowReduceResult {
    IntMatrix U;  // unimodular, rows x rows
    IntMatrix R;  // U * A, Hermite-style normal form
};

struct SmithForm {
    IntMatrix U;  // unimodular, rows x rows
    IntMatrix S;  // diagonal, same shape as input; diagonal entries divide successively
    IntMatrix V;  // unimodular, cols x cols;  U * A * V = S
};

// gcd of all k x k minors; 0 when every minor vanishes
BigInt minors_gcd(const IntMatrix& A, int k);

// Hermite-style form: positive pivots, entries above each pivot reduced mod the
// pivot, zero rows last; R = U*A with U unimodular.
RowReduceResult integer_row_reduce(const IntMatrix& A);

// Basis of the saturated lattice {v : A v = 0}, returned as rows; empty matrix
// (0 x cols) when the kernel is trivial.
IntMatrix kernel_lattice_basis(const IntMatrix& A);

SmithForm smith_normal_form(const IntMatrix& A);

// v / gcd(entries) with the first nonzero entry made positive
std::vector<BigInt> primitive_vector(std::vector<BigInt> v);

}  // namespace torq

#endif
