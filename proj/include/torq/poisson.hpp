#ifndef TORQ_POISSON_HPP
#define TORQ_POISSON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torq/invariant_ring.hpp"
#include "torq/rational.hpp"
#include "torq/weights.hpp"

namespace torq {

struct GaussianRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
};

GaussianRational operator+(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator-(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator*(const GaussianRational& x, const GaussianRational& y);
bool operator==(const GaussianRational& x, const GaussianRational& y);

// polynomial in z_1..z_n, zbar_1..zbar_n over the Gaussian rationals
class CPolynomial {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;  // (a, b)

    CPolynomial() = default;
    explicit CPolynomial(int n) : n_(n) {}

    static CPolynomial variable_z(int n, int j);     // z_{j+1}
    static CPolynomial variable_zbar(int n, int j);  // zbar_{j+1}
    static CPolynomial constant(int n, const GaussianRational& c);
    static CPolynomial monomial(int n, const MonomialExp& m);       // z^a zbar^b
    static CPolynomial real_part(const CPolynomial& p);             // (p + conj p)/2
    static CPolynomial imag_part(const CPolynomial& p);             // (p - conj p)/(2i)

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    const std::map<Key, GaussianRational>& terms() const { return terms_; }

    void add_term(const MonomialExp& m, const GaussianRational& c);

    CPolynomial operator-() const;
    CPolynomial& operator+=(const CPolynomial& o);
    CPolynomial& operator-=(const CPolynomial& o);
    friend CPolynomial operator+(CPolynomial x, const CPolynomial& y) { return x += y; }
    friend CPolynomial operator-(CPolynomial x, const CPolynomial& y) { return x -= y; }
    friend CPolynomial operator*(const CPolynomial& x, const CPolynomial& y);
    CPolynomial scaled(const GaussianRational& c) const;
    friend bool operator==(const CPolynomial& x, const CPolynomial& y) {
        return x.n_ == y.n_ && x.terms_ == y.terms_;
    }

    CPolynomial d_z(int j) const;     // partial derivative in z_{j+1}
    CPolynomial d_zbar(int j) const;  // partial derivative in zbar_{j+1}
    CPolynomial pow(int e) const;

private:
    int n_ = 0;
    std::map<Key, GaussianRational> terms_;
};

// -2i * sum_k (dp/dz_k dq/dzbar_k - dp/dzbar_k dq/dz_k)
CPolynomial bracket(const CPolynomial& p, const CPolynomial& q);

CPolynomial conjugate(const CPolynomial& p);
bool is_real(const CPolynomial& p);

// true iff {J_a, p} = 0 for every moment-map component of W
bool is_invariant(const WeightMatrix& W, const CPolynomial& p);

struct IdentityFailure : std::runtime_error {
    CPolynomial difference;
    IdentityFailure(const std::string& what, CPolynomial diff)
        : std::runtime_error(what), difference(std::move(diff)) {}
};

struct Dim2BracketReport {
    bool rotation_brackets_ok = false;   // {rho1,rho3} = 2A rho2, {rho2,rho3} = -2A rho1
    bool product_formula_ok = false;     // {rho1,rho2} against the cleared product form
    bool shell_substitution_ok = false;  // substituted form equals B * y3^(N-1)
    bool all_invariant = false;          // every rho Poisson-commutes with the moment map
    std::vector<std::string> checked;
};

// Symbolic verification of the dimension-2 bracket identities; throws
// IdentityFailure with the offending difference when an identity fails.
Dim2BracketReport verify_dim2_brackets(const WeightMatrix& W);

}  // namespace torq

#endif
