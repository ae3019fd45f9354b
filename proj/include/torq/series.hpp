#ifndef TORQ_SERIES_HPP
#define TORQ_SERIES_HPP

#include <optional>
#include <variant>
#include <vector>

#include "torq/rational.hpp"

namespace torq {

// Formal power series truncated at a fixed order; coefficients indexed 0..order.
struct TruncatedSeries {
    int order = 0;
    std::vector<Rational> coeff;  // size order + 1

    TruncatedSeries() : order(0), coeff(1) {}
    explicit TruncatedSeries(int ord) : order(ord), coeff(ord + 1) {}
    TruncatedSeries(int ord, std::vector<Rational> c) : order(ord), coeff(std::move(c)) {
        if ((int)coeff.size() != order + 1)
            throw std::invalid_argument("TruncatedSeries: coefficient count != order+1");
    }

    const Rational& operator[](int k) const { return coeff.at(k); }
    Rational& operator[](int k) { return coeff.at(k); }

    TruncatedSeries truncated(int new_order) const;
    bool integral() const;
    std::vector<long> integer_coeffs() const;  // throws if not integral
};

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

// Dense integer polynomial; trailing coefficient nonzero unless the polynomial is zero.
struct IntPolynomial {
    std::vector<BigInt> coeff;  // coeff[k] multiplies t^k

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> c);
    explicit IntPolynomial(std::vector<BigInt> c);

    int degree() const { return (int)coeff.size() - 1; }  // -1 for zero
    bool is_zero() const { return coeff.empty(); }
    BigInt at(int k) const { return (k >= 0 && k < (int)coeff.size()) ? coeff[k] : BigInt(0); }
    void trim();
};

bool operator==(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);

struct DenomFactor {
    int period = 1;        // n in (1 - t^n)
    int multiplicity = 1;  // exponent
};

// N(t) / prod_i (1 - t^{n_i})^{k_i}, denominator kept factored.
struct RationalFunctionProd {
    IntPolynomial numerator;
    std::vector<DenomFactor> denominator;  // periods strictly increasing

    RationalFunctionProd() = default;
    RationalFunctionProd(IntPolynomial num, std::vector<DenomFactor> den);

    // denominator expanded as an exact integer polynomial
    IntPolynomial denominator_poly() const;
};

TruncatedSeries series_expand(const RationalFunctionProd& rf, int order);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul_poly(const TruncatedSeries& a, const IntPolynomial& p);
bool rf_equal(const RationalFunctionProd& a, const RationalFunctionProd& b);

struct FitMismatch {
    int first_inconsistent_degree = 0;
};

// Numerator N(t) with N/denominator == s through s.order, or the first inconsistent
// degree.  max_numerator_degree < 0 means "no constraint beyond s.order".
std::variant<IntPolynomial, FitMismatch> rational_fit(const TruncatedSeries& s,
                                                      const std::vector<DenomFactor>& denominator,
                                                      int max_numerator_degree = -1);

bool palindromic(const IntPolynomial& p);

}  // namespace torq

#endif
