#ifndef TORQ_INVARIANT_RING_HPP
#define TORQ_INVARIANT_RING_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "torq/series.hpp"
#include "torq/weights.hpp"

namespace torq {

// z^a zbar^b with the invariance condition A(a-b) = 0
struct MonomialExp {
    std::vector<int> a;
    std::vector<int> b;

    int degree() const {
        int d = 0;
        for (int x : a) d += x;
        for (int x : b) d += x;
        return d;
    }
    MonomialExp conjugated() const { return {b, a}; }
};

bool operator==(const MonomialExp& x, const MonomialExp& y);
bool operator<(const MonomialExp& x, const MonomialExp& y);  // (degree, lex) order

struct GradedDims {
    std::vector<std::int64_t> dims;  // index k = dim of degree-k invariants
};

struct HilbertBasisResult {
    std::vector<MonomialExp> generators;  // sorted by (degree, lex)
    int degree_cap = 0;
    bool complete = false;
};

// sparse polynomial in variables y_1..y_m with rational coefficients
struct RationalPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rational> terms;

    void add_term(std::vector<int> exp, const Rational& c);
};

struct Dim2IsoData {
    std::vector<BigInt> a;       // negated diagonal of D, all positive
    std::vector<BigInt> nvec;    // last column, nonnegative
    std::vector<int> perm;       // 1-based original column index of each [D|n] coordinate
    BigInt calA = 1;             // lcm of the a_i
    std::vector<BigInt> m;       // m_i = n_i * calA / a_i
    BigInt calM = 0;             // sum of the m_i
    BigInt N = 1;                // calA + calM
    Rational beta;               // calA / N
    Rational alpha_sq;           // calA^calA * prod m_i^{m_i} / N^N
    Rational calB;               // N * prod m_i^{m_i} / calA^(calM-1)
    std::vector<RationalPoly> kernel_generators;  // in y_1..y_{ell+3}
    std::vector<BigInt> generator_degrees;        // [N, N, 2, ..., 2]
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};
struct NotFullRankError : std::runtime_error {
    NotFullRankError() : std::runtime_error("weight matrix does not have full rank") {}
};
struct NotDim2FormError : std::runtime_error {
    NotDim2FormError() : std::runtime_error("weight matrix cannot be brought to [D|n] form") {}
};
struct GcdViolationError : std::runtime_error {
    GcdViolationError() : std::runtime_error("gcd(a_i, n_i) != 1 in [D|n] form") {}
};

// dims[k] = #{(a,b) >= 0 : A(a-b) = 0, |a|+|b| = k}, computed by direct
// enumeration and by constant-term extraction from the Laurent product, which
// must agree.
GradedDims graded_dims(const WeightMatrix& W, int K);

HilbertBasisResult hilbert_basis_monomials(const WeightMatrix& W, int degree_cap);

// graded_dims series multiplied by (1-t^2)^ell
TruncatedSeries quotient_hilbert_series(const WeightMatrix& W, int K);

Dim2IsoData dim2_data(const WeightMatrix& W);

}  // namespace torq

#endif
