#include "torq/poisson.hpp"

#include <algorithm>

namespace torq {

GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
}
GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
}
GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
}

CPolynomial CPolynomial::variable_z(int n, int j) {
    CPolynomial p(n);
    MonomialExp m{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    m.a[j] = 1;
    p.add_term(m, {Rational(1), Rational(0)});
    return p;
}

CPolynomial CPolynomial::variable_zbar(int n, int j) {
    CPolynomial p(n);
    MonomialExp m{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    m.b[j] = 1;
    p.add_term(m, {Rational(1), Rational(0)});
    return p;
}

CPolynomial CPolynomial::constant(int n, const GaussianRational& c) {
    CPolynomial p(n);
    MonomialExp m{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    p.add_term(m, c);
    return p;
}

CPolynomial CPolynomial::monomial(int n, const MonomialExp& m) {
    CPolynomial p(n);
    p.add_term(m, {Rational(1), Rational(0)});
    return p;
}

CPolynomial CPolynomial::real_part(const CPolynomial& p) {
    CPolynomial half = (p + conjugate(p)).scaled({Rational(1, 2), Rational(0)});
    return half;
}

CPolynomial CPolynomial::imag_part(const CPolynomial& p) {
    // (p - conj p) / (2i) = -i/2 * (p - conj p)
    return (p - conjugate(p)).scaled({Rational(0), Rational(-1, 2)});
}

int CPolynomial::degree() const {
    int d = 0;
    for (const auto& [key, c] : terms_) {
        int t = 0;
        for (int x : key.first) t += x;
        for (int x : key.second) t += x;
        d = std::max(d, t);
    }
    return d;
}

void CPolynomial::add_term(const MonomialExp& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    Key k{m.a, m.b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CPolynomial CPolynomial::operator-() const {
    CPolynomial p(n_);
    for (const auto& [k, c] : terms_) p.terms_[k] = {-c.re, -c.im};
    return p;
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    if (n_ == 0) n_ = o.n_;
    return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& o) { return *this += (-o); }

CPolynomial operator*(const CPolynomial& x, const CPolynomial& y) {
    CPolynomial p(std::max(x.n_, y.n_));
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) {
            CPolynomial::Key k = kx;
            for (size_t i = 0; i < k.first.size(); ++i) {
                k.first[i] += ky.first[i];
                k.second[i] += ky.second[i];
            }
            GaussianRational c = cx * cy;
            auto it = p.terms_.find(k);
            if (it == p.terms_.end()) {
                if (!c.is_zero()) p.terms_.emplace(std::move(k), c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) p.terms_.erase(it);
            }
        }
    return p;
}

CPolynomial CPolynomial::scaled(const GaussianRational& c) const {
    CPolynomial p(n_);
    if (c.is_zero()) return p;
    for (const auto& [k, t] : terms_) p.terms_[k] = t * c;
    return p;
}

CPolynomial CPolynomial::d_z(int j) const {
    CPolynomial p(n_);
    for (const auto& [k, c] : terms_) {
        if (k.first[j] == 0) continue;
        Key k2 = k;
        k2.first[j] -= 1;
        p.terms_[k2] = c * GaussianRational{Rational((long)k.first[j]), Rational(0)};
    }
    return p;
}

CPolynomial CPolynomial::d_zbar(int j) const {
    CPolynomial p(n_);
    for (const auto& [k, c] : terms_) {
        if (k.second[j] == 0) continue;
        Key k2 = k;
        k2.second[j] -= 1;
        p.terms_[k2] = c * GaussianRational{Rational((long)k.second[j]), Rational(0)};
    }
    return p;
}

CPolynomial CPolynomial::pow(int e) const {
    CPolynomial r = CPolynomial::constant(n_, {Rational(1), Rational(0)});
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

CPolynomial bracket(const CPolynomial& p, const CPolynomial& q) {
    if (p.degree() + q.degree() > 66)
        throw std::invalid_argument("bracket: product degree exceeds the guard");
    if (!p.is_zero() && !q.is_zero() && p.nvars() != q.nvars())
        throw std::invalid_argument("bracket: mismatched variable counts");
    int n = std::min(p.nvars(), q.nvars());
    CPolynomial acc(n);
    for (int k = 0; k < n; ++k) {
        acc += p.d_z(k) * q.d_zbar(k);
        acc -= p.d_zbar(k) * q.d_z(k);
    }
    // multiply by -2i
    return acc.scaled({Rational(0), Rational(-2)});
}

CPolynomial conjugate(const CPolynomial& p) {
    CPolynomial out(p.nvars());
    for (const auto& [k, c] : p.terms()) {
        MonomialExp m{k.second, k.first};  // swap (a, b)
        out.add_term(m, c.conj());
    }
    return out;
}

bool is_real(const CPolynomial& p) { return p == conjugate(p); }

namespace {

CPolynomial moment_component(const WeightMatrix& W, int a) {
    CPolynomial J(W.n);
    for (int j = 0; j < W.n; ++j) {
        MonomialExp m{std::vector<int>(W.n, 0), std::vector<int>(W.n, 0)};
        m.a[j] = 1;
        m.b[j] = 1;
        J.add_term(m, {Rational(W.A.at(a, j), BigInt(2)), Rational(0)});
    }
    return J;
}

}  // namespace

bool is_invariant(const WeightMatrix& W, const CPolynomial& p) {
    for (int a = 0; a < W.ell; ++a)
        if (!bracket(moment_component(W, a), p).is_zero()) return false;
    return true;
}

Dim2BracketReport verify_dim2_brackets(const WeightMatrix& W) {
    Dim2IsoData d = dim2_data(W);
    const int n = W.n;  // = ell + 1
    const int ell = W.ell;
    Dim2BracketReport rep;

    // u = w_{ell+1}^A * prod_i w_i^{m_i} in the [D|n] coordinate order given by perm
    MonomialExp ue{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    ue.a[d.perm[ell] - 1] = d.calA.convert_to<int>();
    for (int i = 0; i < ell; ++i) ue.a[d.perm[i] - 1] = d.m[i].convert_to<int>();
    CPolynomial u = CPolynomial::monomial(n, ue);

    CPolynomial rho1 = CPolynomial::real_part(u);
    CPolynomial rho2 = CPolynomial::imag_part(u);
    auto diag = [&](int orig_col) {
        MonomialExp m{std::vector<int>(n, 0), std::vector<int>(n, 0)};
        m.a[orig_col - 1] = 1;
        m.b[orig_col - 1] = 1;
        return CPolynomial::monomial(n, m);
    };
    CPolynomial rho3 = diag(d.perm[ell]);

    GaussianRational twoA{Rational(2) * Rational(d.calA), Rational(0)};

    // (a) rotation brackets
    CPolynomial lhs = bracket(rho1, rho3) - rho2.scaled(twoA);
    if (!lhs.is_zero()) throw IdentityFailure("{rho1,rho3} != 2A rho2", lhs);
    lhs = bracket(rho2, rho3) + rho1.scaled(twoA);
    if (!lhs.is_zero()) throw IdentityFailure("{rho2,rho3} != -2A rho1", lhs);
    rep.rotation_brackets_ok = true;
    rep.checked.push_back("{rho1,rho3} = 2A rho2");
    rep.checked.push_back("{rho2,rho3} = -2A rho1");

    // (b) product formula with cleared denominators:
    // {rho1,rho2} = A^2 w^(A-1) prod d_i^(m_i)  +  sum_i m_i^2 w^A d_i^(m_i-1) prod_{j!=i} d_j^(m_j)
    CPolynomial rhs(n);
    {
        MonomialExp t{std::vector<int>(n, 0), std::vector<int>(n, 0)};
        int wcol = d.perm[ell] - 1;
        t.a[wcol] = d.calA.convert_to<int>() - 1;
        t.b[wcol] = t.a[wcol];
        for (int i = 0; i < ell; ++i) {
            int c = d.perm[i] - 1;
            t.a[c] = d.m[i].convert_to<int>();
            t.b[c] = t.a[c];
        }
        CPolynomial term = CPolynomial::monomial(n, t);
        rhs += term.scaled({Rational(d.calA * d.calA), Rational(0)});
        for (int i = 0; i < ell; ++i) {
            if (d.m[i] == 0) continue;
            MonomialExp s{std::vector<int>(n, 0), std::vector<int>(n, 0)};
            s.a[wcol] = d.calA.convert_to<int>();
            s.b[wcol] = s.a[wcol];
            for (int j = 0; j < ell; ++j) {
                int c = d.perm[j] - 1;
                s.a[c] = d.m[j].convert_to<int>() - (j == i ? 1 : 0);
                s.b[c] = s.a[c];
            }
            rhs += CPolynomial::monomial(n, s).scaled({Rational(d.m[i] * d.m[i]), Rational(0)});
        }
    }
    lhs = bracket(rho1, rho2) - rhs;
    if (!lhs.is_zero()) throw IdentityFailure("{rho1,rho2} product formula", lhs);
    rep.product_formula_ok = true;
    rep.checked.push_back("{rho1,rho2} = cleared product formula");

    // shell substitution: d_i -> (m_i/A) w turns the right-hand side into B w^(N-1)
    {
        // substitute in rhs: every monomial is prod d_i^{e_i} w^{f}; map to
        // coefficient * (m_i/A)^{e_i} w^{f + sum e_i}
        std::map<int, Rational> poly_w;  // exponent of w -> coefficient
        for (const auto& [key, c] : rhs.terms()) {
            Rational coeff = c.re;  // rhs is real with real coefficients
            int wexp = 0;
            for (int i = 0; i < ell; ++i) {
                int e = key.first[d.perm[i] - 1];
                coeff *= Rational::pow(Rational(d.m[i]) / Rational(d.calA), e);
                wexp += e;
            }
            wexp += key.first[d.perm[ell] - 1];
            poly_w[wexp] += coeff;
        }
        bool ok = true;
        int target_exp = d.N.convert_to<int>() - 1;
        for (const auto& [e, c] : poly_w) {
            if (e == target_exp) {
                if (c != d.calB) ok = false;
            } else if (!c.is_zero()) {
                ok = false;
            }
        }
        if (!ok)
            throw IdentityFailure("shell substitution does not give B y3^(N-1)", rhs);
        rep.shell_substitution_ok = true;
        rep.checked.push_back("on-shell {y1,y2} = B y3^(N-1)");
    }

    // (c) invariance of the full dimension-2 Hilbert basis
    std::vector<CPolynomial> basis{rho1, rho2, rho3};
    for (int i = 0; i < ell; ++i) basis.push_back(diag(d.perm[i]));
    rep.all_invariant = true;
    for (const auto& rho : basis)
        if (!is_invariant(W, rho)) {
            rep.all_invariant = false;
            throw IdentityFailure("Hilbert basis element is not invariant", rho);
        }
    rep.checked.push_back("all rho invariant under the moment map flow");
    return rep;
}

}  // namespace torq
