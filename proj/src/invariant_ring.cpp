#include "torq/invariant_ring.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace torq {

bool operator==(const MonomialExp& x, const MonomialExp& y) { return x.a == y.a && x.b == y.b; }

bool operator<(const MonomialExp& x, const MonomialExp& y) {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

void RationalPoly::add_term(std::vector<int> exp, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(exp);
    if (it == terms.end()) {
        terms.emplace(std::move(exp), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

namespace {

double log_binomial(int n, int k) {
    double s = 0;
    for (int i = 1; i <= k; ++i) s += std::log((double)(n - k + i)) - std::log((double)i);
    return s;
}

// column weights of the doubled action on (z, zbar): +col_j and -col_j
std::vector<std::vector<long>> doubled_weights(const WeightMatrix& W) {
    std::vector<std::vector<long>> cols;
    for (int j = 0; j < W.n; ++j) {
        std::vector<long> c(W.ell);
        for (int a = 0; a < W.ell; ++a) c[a] = W.A.at(a, j).convert_to<long>();
        cols.push_back(c);
    }
    for (int j = 0; j < W.n; ++j) {
        std::vector<long> c(W.ell);
        for (int a = 0; a < W.ell; ++a) c[a] = -W.A.at(a, j).convert_to<long>();
        cols.push_back(c);
    }
    return cols;
}

// algorithm 1: depth-first enumeration of exponent vectors
void enumerate_count(const std::vector<std::vector<long>>& cols, int K,
                     std::vector<std::int64_t>& out) {
    int ell = cols.empty() ? 0 : (int)cols[0].size();
    std::vector<long> weight(ell, 0);
    std::vector<std::int64_t> counts(K + 1, 0);

    // recursion over variables; at each leaf record the monomial if its weight vanishes
    struct Rec {
        const std::vector<std::vector<long>>& cols;
        int K, ell;
        std::vector<long>& weight;
        std::vector<std::int64_t>& counts;
        void go(size_t var, int deg) {
            if (var == cols.size()) {
                for (long w : weight)
                    if (w != 0) return;
                counts[deg]++;
                return;
            }
            // exponent 0 first, then positive exponents
            go(var + 1, deg);
            for (int e = 1; deg + e <= K; ++e) {
                for (int a = 0; a < ell; ++a) weight[a] += cols[var][a];
                go(var + 1, deg + e);
            }
            int emax = K - deg;
            for (int a = 0; a < ell; ++a) weight[a] -= (long)emax * cols[var][a];
        }
    } rec{cols, K, ell, weight, counts};
    rec.go(0, 0);
    out = std::move(counts);
}

struct VecHash {
    size_t operator()(const std::vector<long>& v) const {
        size_t h = 1469598103934665603ull;
        for (long x : v) {
            h ^= (size_t)x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// algorithm 2: truncated Laurent-product constant-term extraction
void laurent_count(const std::vector<std::vector<long>>& cols, int K,
                   std::vector<std::int64_t>& out) {
    int ell = cols.empty() ? 0 : (int)cols[0].size();
    using State = std::unordered_map<std::vector<long>, std::int64_t, VecHash>;
    std::vector<State> dp(K + 1);
    dp[0][std::vector<long>(ell, 0)] = 1;
    for (const auto& c : cols) {
        // multiply by 1/(1 - u^c t): unbounded knapsack, ascending degree
        for (int d = 1; d <= K; ++d) {
            for (const auto& [w, cnt] : dp[d - 1]) {
                std::vector<long> w2 = w;
                for (int a = 0; a < ell; ++a) w2[a] += c[a];
                dp[d][std::move(w2)] += cnt;
            }
        }
    }
    out.assign(K + 1, 0);
    std::vector<long> zero(ell, 0);
    for (int d = 0; d <= K; ++d) {
        auto it = dp[d].find(zero);
        out[d] = it == dp[d].end() ? 0 : it->second;
    }
}

}  // namespace

GradedDims graded_dims(const WeightMatrix& W, int K) {
    if (K < 0) throw std::invalid_argument("graded_dims: negative order");
    if (log_binomial(2 * W.n + K, 2 * W.n) > std::log(2e8))
        throw BudgetError("graded_dims: enumeration budget exceeded");
    auto cols = doubled_weights(W);
    std::vector<std::int64_t> by_enum, by_laurent;
    enumerate_count(cols, K, by_enum);
    laurent_count(cols, K, by_laurent);
    if (by_enum != by_laurent)
        throw std::logic_error("graded_dims: enumeration and Laurent extraction disagree");
    return GradedDims{std::move(by_enum)};
}

namespace {

// all invariant monomials of degree 1..cap, sorted by (degree, lex)
std::vector<MonomialExp> invariant_monomials(const WeightMatrix& W, int cap) {
    if (log_binomial(2 * W.n + cap, 2 * W.n) > std::log(2e8))
        throw BudgetError("invariant monomial enumeration budget exceeded");
    std::vector<MonomialExp> out;
    std::vector<int> exp(2 * W.n, 0);
    std::vector<BigInt> weight(W.ell, 0);

    struct Rec {
        const WeightMatrix& W;
        int cap;
        std::vector<int>& exp;
        std::vector<BigInt>& weight;
        std::vector<MonomialExp>& out;
        void go(int var, int deg) {
            if (var == 2 * W.n) {
                if (deg == 0) return;
                for (const auto& w : weight)
                    if (w != 0) return;
                MonomialExp m;
                m.a.assign(exp.begin(), exp.begin() + W.n);
                m.b.assign(exp.begin() + W.n, exp.end());
                out.push_back(std::move(m));
                return;
            }
            int sign = var < W.n ? 1 : -1;
            int col = var % W.n;
            go(var + 1, deg);
            for (int e = 1; deg + e <= cap; ++e) {
                exp[var] = e;
                for (int a = 0; a < W.ell; ++a) weight[a] += sign * W.A.at(a, col);
                go(var + 1, deg + e);
            }
            int emax = cap - deg;
            for (int a = 0; a < W.ell; ++a) weight[a] -= emax * sign * W.A.at(a, col);
            exp[var] = 0;
        }
    } rec{W, cap, exp, weight, out};
    rec.go(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool divides(const MonomialExp& g, const MonomialExp& m) {
    for (size_t i = 0; i < g.a.size(); ++i)
        if (g.a[i] > m.a[i]) return false;
    for (size_t i = 0; i < g.b.size(); ++i)
        if (g.b[i] > m.b[i]) return false;
    return true;
}

MonomialExp quotient(const MonomialExp& m, const MonomialExp& g) {
    MonomialExp q = m;
    for (size_t i = 0; i < g.a.size(); ++i) q.a[i] -= g.a[i];
    for (size_t i = 0; i < g.b.size(); ++i) q.b[i] -= g.b[i];
    return q;
}

}  // namespace

HilbertBasisResult hilbert_basis_monomials(const WeightMatrix& W, int degree_cap) {
    if (degree_cap < 2) throw std::invalid_argument("hilbert_basis_monomials: cap < 2");
    auto monos = invariant_monomials(W, degree_cap);

    HilbertBasisResult res;
    res.degree_cap = degree_cap;
    // a monomial is a generator iff no smaller invariant monomial divides it
    for (const auto& m : monos) {
        bool reducible = false;
        for (const auto& g : monos) {
            if (g.degree() >= m.degree()) break;  // sorted by degree
            if (divides(g, m)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) res.generators.push_back(m);
    }

    // certify multiplicativity up to the cap by exhaustive factoring
    std::set<MonomialExp> factorable(res.generators.begin(), res.generators.end());
    bool complete = true;
    for (const auto& m : monos) {
        if (factorable.count(m)) continue;
        bool ok = false;
        for (const auto& g : res.generators) {
            if (g.degree() >= m.degree()) break;
            if (divides(g, m) && factorable.count(quotient(m, g))) {
                ok = true;
                break;
            }
        }
        if (ok)
            factorable.insert(m);
        else
            complete = false;
    }
    res.complete = complete;
    return res;
}

TruncatedSeries quotient_hilbert_series(const WeightMatrix& W, int K) {
    if (rank(W.A) != W.ell) throw NotFullRankError();
    GradedDims dims = graded_dims(W, K);
    TruncatedSeries s(K);
    for (int k = 0; k <= K; ++k) s[k] = Rational((long)dims.dims[k]);
    // complete-intersection factor (1 - t^2)^ell
    for (int i = 0; i < W.ell; ++i) {
        TruncatedSeries r(K);
        for (int k = 0; k <= K; ++k) {
            r[k] = s[k];
            if (k >= 2) r[k] -= s[k - 2];
        }
        s = std::move(r);
    }
    return s;
}

namespace {

Rational rational_pow(const Rational& p, const BigInt& e) {
    return Rational::pow(p, e.convert_to<long>());
}

}  // namespace

Dim2IsoData dim2_data(const WeightMatrix& W) {
    if (W.n != W.ell + 1) throw NotDim2FormError();
    Dim2IsoData d;

    // already in [D|n] form?
    bool direct = true;
    for (int i = 0; i < W.ell && direct; ++i) {
        if (W.A.at(i, i) >= 0) direct = false;
        for (int j = 0; j < W.ell && direct; ++j)
            if (j != i && W.A.at(i, j) != 0) direct = false;
        if (direct && W.A.at(i, W.ell) < 0) direct = false;
    }
    if (direct) {
        for (int i = 0; i < W.ell; ++i) {
            d.a.push_back(-W.A.at(i, i));
            d.nvec.push_back(W.A.at(i, W.ell));
        }
        for (int j = 1; j <= W.n; ++j) d.perm.push_back(j);
    } else {
        SimplicialReport rep = simplicial_check(W);
        if (!rep.simplicial || !rep.standard_form || rep.polytope.vertices.empty())
            throw NotDim2FormError();
        const StandardForm& sf = *rep.standard_form;
        if (sf.D.rows != W.ell || sf.C.cols != 1 || sf.zero_columns != 0)
            throw NotDim2FormError();
        for (int i = 0; i < W.ell; ++i) {
            d.a.push_back(-sf.D.at(i, i));
            d.nvec.push_back(sf.C.at(i, 0));
        }
        d.perm = sf.perm;
    }

    for (int i = 0; i < W.ell; ++i)
        if (big_gcd(d.a[i], d.nvec[i]) != 1) throw GcdViolationError();

    d.calA = 1;
    for (const auto& ai : d.a) d.calA = big_lcm(d.calA, ai);
    d.calM = 0;
    for (int i = 0; i < W.ell; ++i) {
        BigInt mi = d.nvec[i] * d.calA / d.a[i];
        d.m.push_back(mi);
        d.calM += mi;
    }
    d.N = d.calA + d.calM;
    d.beta = Rational(d.calA, d.N);

    Rational prod_mm(1);  // prod m_i^{m_i}, with 0^0 = 1
    for (const auto& mi : d.m)
        if (mi > 0) prod_mm *= Rational(big_pow(mi, mi.convert_to<long>()));
    Rational A_pow_A = Rational(big_pow(d.calA, d.calA.convert_to<long>()));
    Rational N_pow_N = Rational(big_pow(d.N, d.N.convert_to<long>()));
    d.alpha_sq = A_pow_A * prod_mm / N_pow_N;
    // calB = N * prod m^m / calA^(calM - 1)
    Rational A_pow_Mm1 = rational_pow(Rational(d.calA), d.calM - 1);
    d.calB = Rational(d.N) * prod_mm / A_pow_Mm1;

    // consistency: alpha^2 N^2 = beta^(N-1) calB
    Rational lhs = d.alpha_sq * Rational(d.N * d.N);
    Rational rhs = rational_pow(d.beta, d.N - 1) * d.calB;
    if (lhs != rhs) throw std::logic_error("dim2_data: consistency identity failed");

    // kernel generators in y_1..y_{ell+3}
    int nv = W.ell + 3;
    RationalPoly g0;
    g0.nvars = nv;
    std::vector<int> e(nv, 0);
    e[0] = 2;
    g0.add_term(e, Rational(1));  // y1^2
    e.assign(nv, 0);
    e[1] = 2;
    g0.add_term(e, Rational(1));  // y2^2
    e.assign(nv, 0);
    e[2] = d.N.convert_to<int>();
    g0.add_term(e, -(prod_mm / rational_pow(Rational(d.calA), d.calM)));  // -c y3^N
    d.kernel_generators.push_back(std::move(g0));
    for (int i = 0; i < W.ell; ++i) {
        RationalPoly gi;
        gi.nvars = nv;
        e.assign(nv, 0);
        e[3 + i] = 1;
        gi.add_term(e, Rational(1));
        e.assign(nv, 0);
        e[2] = 1;
        gi.add_term(e, -(Rational(d.m[i]) / Rational(d.calA)));
        d.kernel_generators.push_back(std::move(gi));
    }

    d.generator_degrees.push_back(d.N);
    d.generator_degrees.push_back(d.N);
    for (int i = 0; i < W.ell + 1; ++i) d.generator_degrees.push_back(2);
    return d;
}

}  // namespace torq
