#include "torq/series.hpp"

#include <algorithm>

namespace torq {

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order) throw std::invalid_argument("truncated: order grows");
    TruncatedSeries s(new_order);
    std::copy(coeff.begin(), coeff.begin() + new_order + 1, s.coeff.begin());
    return s;
}

bool TruncatedSeries::integral() const {
    for (const auto& c : coeff)
        if (!c.is_integer()) return false;
    return true;
}

std::vector<long> TruncatedSeries::integer_coeffs() const {
    std::vector<long> out;
    out.reserve(coeff.size());
    for (const auto& c : coeff) {
        if (!c.is_integer()) throw std::domain_error("series has non-integer coefficient");
        out.push_back(c.num().convert_to<long>());
    }
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order == b.order && a.coeff == b.coeff;
}

IntPolynomial::IntPolynomial(std::initializer_list<long> c) {
    for (long v : c) coeff.emplace_back(v);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : coeff(std::move(c)) { trim(); }

void IntPolynomial::trim() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeff == b.coeff; }

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> c(a.coeff.size() + b.coeff.size() - 1);
    for (size_t i = 0; i < a.coeff.size(); ++i)
        for (size_t j = 0; j < b.coeff.size(); ++j) c[i + j] += a.coeff[i] * b.coeff[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeff.size(), b.coeff.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.at((int)i) + b.at((int)i);
    return IntPolynomial(std::move(c));
}

RationalFunctionProd::RationalFunctionProd(IntPolynomial num, std::vector<DenomFactor> den)
    : numerator(std::move(num)) {
    // merge repeated periods, drop zero multiplicities, keep periods increasing
    std::sort(den.begin(), den.end(),
              [](const DenomFactor& a, const DenomFactor& b) { return a.period < b.period; });
    for (const auto& f : den) {
        if (f.period <= 0 || f.multiplicity < 0)
            throw std::invalid_argument("RationalFunctionProd: bad denominator factor");
        if (f.multiplicity == 0) continue;
        if (!denominator.empty() && denominator.back().period == f.period)
            denominator.back().multiplicity += f.multiplicity;
        else
            denominator.push_back(f);
    }
}

IntPolynomial RationalFunctionProd::denominator_poly() const {
    IntPolynomial p{1};
    for (const auto& f : denominator) {
        std::vector<BigInt> factor(f.period + 1);
        factor[0] = 1;
        factor[f.period] = -1;
        IntPolynomial fp(std::move(factor));
        for (int i = 0; i < f.multiplicity; ++i) p = poly_mul(p, fp);
    }
    return p;
}

TruncatedSeries series_expand(const RationalFunctionProd& rf, int order) {
    if (order < 0) throw std::invalid_argument("series_expand: negative order");
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s[k] = Rational(rf.numerator.at(k));
    // dividing by (1 - t^p) is a strided prefix sum
    for (const auto& f : rf.denominator)
        for (int rep = 0; rep < f.multiplicity; ++rep)
            for (int k = f.period; k <= order; ++k) s[k] += s[k - f.period];
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int order = std::min(a.order, b.order);
    TruncatedSeries s(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            s[i + j] += a[i] * b[j];
        }
    }
    return s;
}

TruncatedSeries series_mul_poly(const TruncatedSeries& a, const IntPolynomial& p) {
    TruncatedSeries s(a.order);
    for (int i = 0; i <= a.order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order && j <= p.degree(); ++j)
            s[i + j] += a[i] * Rational(p.coeff[j]);
    }
    return s;
}

bool rf_equal(const RationalFunctionProd& a, const RationalFunctionProd& b) {
    return poly_mul(a.numerator, b.denominator_poly()) ==
           poly_mul(b.numerator, a.denominator_poly());
}

std::variant<IntPolynomial, FitMismatch> rational_fit(const TruncatedSeries& s,
                                                      const std::vector<DenomFactor>& denominator,
                                                      int max_numerator_degree) {
    // multiply s by the denominator; the product must be a polynomial within budget
    TruncatedSeries p = s;
    for (const auto& f : denominator) {
        for (int rep = 0; rep < f.multiplicity; ++rep) {
            TruncatedSeries r(p.order);
            for (int k = 0; k <= p.order; ++k) {
                r[k] = p[k];
                if (k >= f.period) r[k] -= p[k - f.period];
            }
            p = r;
        }
    }
    int budget = max_numerator_degree >= 0 ? max_numerator_degree : s.order;
    std::vector<BigInt> num;
    for (int k = 0; k <= p.order; ++k) {
        if (!p[k].is_integer()) return FitMismatch{k};
        if (k > budget) {
            if (!p[k].is_zero()) return FitMismatch{k};
        } else if (!p[k].is_zero()) {
            num.resize(k + 1);
            num[k] = p[k].num();
        }
    }
    return IntPolynomial(std::move(num));
}

bool palindromic(const IntPolynomial& p) {
    int d = p.degree();
    for (int i = 0; i * 2 <= d; ++i)
        if (p.coeff[i] != p.coeff[d - i]) return false;
    return true;
}

}  // namespace torq
