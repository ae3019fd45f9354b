#include "torq/duval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace torq {

U2Element u2_mul(const U2Element& x, const U2Element& y) {
    return U2Element{{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
                      x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
}

U2Element u2_scaled(const U2Element& x, Complex s) {
    return U2Element{{x.e[0] * s, x.e[1] * s, x.e[2] * s, x.e[3] * s}};
}

bool u2_close(const U2Element& x, const U2Element& y, double tol) {
    for (int i = 0; i < 4; ++i)
        if (std::abs(x.e[i] - y.e[i]) > tol) return false;
    return true;
}

double u2_unitarity_defect(const U2Element& x) {
    // max-norm of U* U - I
    Complex g00 = std::conj(x.e[0]) * x.e[0] + std::conj(x.e[2]) * x.e[2];
    Complex g01 = std::conj(x.e[0]) * x.e[1] + std::conj(x.e[2]) * x.e[3];
    Complex g10 = std::conj(x.e[1]) * x.e[0] + std::conj(x.e[3]) * x.e[2];
    Complex g11 = std::conj(x.e[1]) * x.e[1] + std::conj(x.e[3]) * x.e[3];
    double d = std::abs(g00 - 1.0);
    d = std::max(d, std::abs(g01));
    d = std::max(d, std::abs(g10));
    d = std::max(d, std::abs(g11 - 1.0));
    return d;
}

std::string spec_name(const GroupSpec& spec) {
    struct V {
        std::string operator()(const CyclicScalar& s) const {
            return "cyclic-scalar:" + std::to_string(s.N);
        }
        std::string operator()(const CyclicSU2& s) const {
            return "cyclic-su2:" + std::to_string(s.N);
        }
        std::string operator()(const BinaryDihedral& s) const {
            return "binary-dihedral:" + std::to_string(s.N);
        }
        std::string operator()(const BinaryTetrahedral&) const { return "binary-tetrahedral"; }
        std::string operator()(const BinaryOctahedral&) const { return "binary-octahedral"; }
        std::string operator()(const BinaryIcosahedral&) const { return "binary-icosahedral"; }
        std::string operator()(const DuValProduct& p) const {
            std::string s = "duval" + std::to_string(p.type);
            if (p.type == 3) s += (p.variant == 0 ? "a" : "b");
            s += ":m=" + std::to_string(p.m);
            if (p.type == 1)
                s += ",n=" + std::to_string(p.n) + ",f=" + std::to_string(p.f) +
                     ",g=" + std::to_string(p.g) + ",d=" + std::to_string(p.d);
            if (p.type >= 2 && p.type <= 4) s += ",l=" + std::to_string(p.l);
            return s;
        }
        std::string operator()(const FromGenerators& f) const {
            return "from-generators(" + std::to_string(f.generators.size()) + ")";
        }
    };
    return std::visit(V{}, spec);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex root_of_unity(long k, long T) {
    double a = 2.0 * kPi * (double)(((k % T) + T) % T) / (double)T;
    return Complex(std::cos(a), std::sin(a));
}

U2Element diag_element(Complex a, Complex d) { return U2Element{{a, Complex(0), Complex(0), d}}; }

U2Element identity2() { return diag_element(1.0, 1.0); }

// quaternion t + xi + yj + zk as a 2x2 complex matrix
U2Element quat(double t, double x, double y, double z) {
    return U2Element{{Complex(t, x), Complex(y, z), Complex(-y, z), Complex(t, -x)}};
}

std::vector<U2Element> closure(std::vector<U2Element> gens, size_t budget = 10000) {
    std::vector<U2Element> elems;
    elems.push_back(identity2());
    auto find = [&](const U2Element& x) {
        for (const auto& e : elems)
            if (u2_close(e, x)) return true;
        return false;
    };
    for (const auto& g : gens)
        if (!find(g)) elems.push_back(g);
    size_t frontier = 0;
    while (frontier < elems.size()) {
        U2Element x = elems[frontier++];
        for (const auto& g : gens) {
            U2Element y = u2_mul(x, g);
            if (!find(y)) {
                if (elems.size() >= budget) throw ClosureBudgetError();
                elems.push_back(y);
            }
        }
    }
    return elems;
}

const std::vector<U2Element>& binary_tetrahedral_elements() {
    static const std::vector<U2Element> elems = [] {
        std::vector<U2Element> gens{quat(0, 1, 0, 0), quat(0, 0, 1, 0),
                                    quat(-0.5, 0.5, 0.5, 0.5)};
        auto c = closure(gens);
        if (c.size() != 24) throw std::logic_error("binary tetrahedral closure != 24");
        return c;
    }();
    return elems;
}

const std::vector<U2Element>& binary_octahedral_elements() {
    static const std::vector<U2Element> elems = [] {
        std::vector<U2Element> gens{quat(0, 1, 0, 0), quat(0, 0, 1, 0),
                                    quat(-0.5, 0.5, 0.5, 0.5),
                                    diag_element(root_of_unity(1, 8), root_of_unity(-1, 8))};
        auto c = closure(gens);
        if (c.size() != 48) throw std::logic_error("binary octahedral closure != 48");
        return c;
    }();
    return elems;
}

const std::vector<U2Element>& binary_icosahedral_elements() {
    static const std::vector<U2Element> elems = [] {
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        std::vector<U2Element> gens{quat(-0.5, 0.5, 0.5, 0.5),
                                    quat(phi / 2.0, 1.0 / (2.0 * phi), 0.5, 0)};
        auto c = closure(gens);
        if (c.size() != 120) throw std::logic_error("binary icosahedral closure != 120");
        return c;
    }();
    return elems;
}

// binary dihedral D_l of order 4l: powers of alpha = diag(w_2l, w_2l^-1) and alpha^k b
std::vector<U2Element> binary_dihedral_elements(int l) {
    std::vector<U2Element> out;
    U2Element b{{Complex(0), Complex(1), Complex(-1), Complex(0)}};
    for (int k = 0; k < 2 * l; ++k) {
        U2Element a = diag_element(root_of_unity(k, 2 * l), root_of_unity(-k, 2 * l));
        out.push_back(a);
        out.push_back(u2_mul(a, b));
    }
    return out;
}

std::vector<U2Element> cyclic_su2_elements(int N) {
    std::vector<U2Element> out;
    for (int k = 0; k < N; ++k)
        out.push_back(diag_element(root_of_unity(k, N), root_of_unity(-k, N)));
    return out;
}

// ---- product groups (L/L_K; R/R_K)_phi ------------------------------------

// R-side data: element list plus quotient-class labels 0..c-1
struct RSide {
    std::vector<U2Element> elements;
    std::vector<int> labels;
    int c = 1;  // quotient order
};

bool contains(const std::vector<U2Element>& v, const U2Element& x) {
    for (const auto& e : v)
        if (u2_close(e, x)) return true;
    return false;
}

// label elements of R by their class in R/R_K with respect to the canonical
// generator rho of the quotient: label(r) = k iff r in rho^k R_K
RSide label_cosets(const std::vector<U2Element>& R, const std::vector<U2Element>& RK,
                   const U2Element& rho, int c) {
    RSide side;
    side.elements = R;
    side.c = c;
    side.labels.assign(R.size(), -1);
    std::vector<U2Element> coset = RK;
    for (int k = 0; k < c; ++k) {
        for (size_t i = 0; i < R.size(); ++i)
            if (side.labels[i] < 0 && contains(coset, R[i])) side.labels[i] = k;
        if (k + 1 < c) {
            std::vector<U2Element> next;
            next.reserve(coset.size());
            for (const auto& e : coset) next.push_back(u2_mul(rho, e));
            coset = std::move(next);
        }
    }
    for (int lab : side.labels)
        if (lab < 0) throw std::logic_error("coset labelling failed");
    return side;
}

FiniteSubgroup assemble_product(const DuValProduct& p, int Lorder, int c, const RSide& rside,
                                int expected_order) {
    // elements l * r over scalar l = w_Lorder^j with class(j) = j mod c matched via d
    std::vector<U2Element> out;
    int d = p.type == 1 ? p.d : 1;
    for (int j = 0; j < Lorder; ++j) {
        int want = (int)(((long)d * j) % c);
        Complex s = root_of_unity(j, Lorder);
        for (size_t i = 0; i < rside.elements.size(); ++i) {
            if (rside.labels[i] != want) continue;
            U2Element m = u2_scaled(rside.elements[i], s);
            if (!contains(out, m)) out.push_back(m);
        }
    }
    if ((int)out.size() != expected_order)
        throw std::logic_error("product group order mismatch for " + spec_name(GroupSpec(p)));
    FiniteSubgroup G;
    G.elements = std::move(out);
    G.spec = p;
    G.order = expected_order;
    return G;
}

void validate_duval(const DuValProduct& p) {
    auto bad = [&](const std::string& w) { throw InvalidParamsError(w + ": " + spec_name(GroupSpec(p))); };
    if (p.m < 1) bad("m < 1");
    switch (p.type) {
        case 1: {
            if (p.n < 1 || p.f < 1 || p.g < 1 || p.d < 1) bad("type 1 parameters");
            if ((2 * p.m) % p.f != 0 || (2 * p.n) % p.g != 0) bad("f or g does not divide");
            int c = 2 * p.m / p.f;
            if (2 * p.n / p.g != c) bad("quotient orders differ");
            if ((p.f - p.g) % 2 != 0) bad("f and g have different parity");
            if (p.d > c || std::gcd(p.d, c) != 1) bad("d not a unit");
            break;
        }
        case 2:
        case 4:
            if (p.l < 1) bad("l < 1");
            break;
        case 3:
            if (p.l < 1) bad("l < 1");
            if (p.m % 2 == 0 || p.l % 2 == 0) bad("type 3 requires m, l odd");
            if (p.variant != 0 && p.variant != 1) bad("type 3 variant");
            break;
        case 5:
        case 6:
        case 7:
        case 8:
        case 9:
            break;
        default:
            bad("unknown type");
    }
}

int duval_order(const DuValProduct& p) {
    switch (p.type) {
        case 1: return p.n * p.f;      // |R||L_K|/2 = 2n*f/2
        case 2: return 4 * p.l * p.m;  // 4l * 2m / 2
        case 3: return p.variant == 0 ? 4 * p.l * p.m : 2 * p.l * p.m;
        case 4: return 8 * p.l * p.m;  // 8l * 2m / 2
        case 5: return 24 * p.m;
        case 6: return 24 * p.m;  // 24 * 2m / 2
        case 7: return 48 * p.m;
        case 8: return 48 * p.m;  // 48 * 2m / 2
        case 9: return 120 * p.m;
    }
    throw InvalidParamsError("unknown type");
}

}  // namespace

FiniteSubgroup duval_product_group(const DuValProduct& p) {
    validate_duval(p);
    const int expected = duval_order(p);
    U2Element b{{Complex(0), Complex(1), Complex(-1), Complex(0)}};

    switch (p.type) {
        case 1: {
            int c = 2 * p.m / p.f;
            // R = Z_2n < SU2 with labels k mod c
            RSide side;
            side.c = c;
            for (int k = 0; k < 2 * p.n; ++k) {
                side.elements.push_back(
                    diag_element(root_of_unity(k, 2 * p.n), root_of_unity(-k, 2 * p.n)));
                side.labels.push_back(k % c);
            }
            return assemble_product(p, 2 * p.m, c, side, expected);
        }
        case 2: {
            RSide side;
            side.c = 1;
            side.elements = binary_dihedral_elements(p.l);
            side.labels.assign(side.elements.size(), 0);
            return assemble_product(p, 2 * p.m, 1, side, expected);
        }
        case 3: {
            auto R = binary_dihedral_elements(p.l);
            if (p.variant == 0) {
                // R_K = Z_2l (the diagonal part), quotient Z_2 generated by b
                RSide side = label_cosets(R, cyclic_su2_elements(2 * p.l), b, 2);
                return assemble_product(p, 4 * p.m, 2, side, expected);
            }
            // variant 1: R_K = Z_l, quotient Z_4 generated by b
            RSide side = label_cosets(R, cyclic_su2_elements(p.l), b, 4);
            return assemble_product(p, 4 * p.m, 4, side, expected);
        }
        case 4: {
            auto R = binary_dihedral_elements(2 * p.l);
            U2Element rho = diag_element(root_of_unity(1, 4 * p.l), root_of_unity(-1, 4 * p.l));
            RSide side = label_cosets(R, binary_dihedral_elements(p.l), rho, 2);
            return assemble_product(p, 4 * p.m, 2, side, expected);
        }
        case 5: {
            RSide side;
            side.c = 1;
            side.elements = binary_tetrahedral_elements();
            side.labels.assign(side.elements.size(), 0);
            return assemble_product(p, 2 * p.m, 1, side, expected);
        }
        case 6: {
            // R_K = D_2 (quaternion group), quotient Z_3 generated by the order-3 unit
            std::vector<U2Element> D2{identity2(),      quat(-1, 0, 0, 0), quat(0, 1, 0, 0),
                                      quat(0, -1, 0, 0), quat(0, 0, 1, 0),  quat(0, 0, -1, 0),
                                      quat(0, 0, 0, 1), quat(0, 0, 0, -1)};
            U2Element w = quat(-0.5, 0.5, 0.5, 0.5);
            RSide side = label_cosets(binary_tetrahedral_elements(), D2, w, 3);
            return assemble_product(p, 6 * p.m, 3, side, expected);
        }
        case 7: {
            RSide side;
            side.c = 1;
            side.elements = binary_octahedral_elements();
            side.labels.assign(side.elements.size(), 0);
            return assemble_product(p, 2 * p.m, 1, side, expected);
        }
        case 8: {
            U2Element rho = diag_element(root_of_unity(1, 8), root_of_unity(-1, 8));
            RSide side = label_cosets(binary_octahedral_elements(), binary_tetrahedral_elements(),
                                      rho, 2);
            return assemble_product(p, 4 * p.m, 2, side, expected);
        }
        case 9: {
            RSide side;
            side.c = 1;
            side.elements = binary_icosahedral_elements();
            side.labels.assign(side.elements.size(), 0);
            return assemble_product(p, 2 * p.m, 1, side, expected);
        }
    }
    throw InvalidParamsError("unknown type");
}

FiniteSubgroup generate(const GroupSpec& spec) {
    struct V {
        FiniteSubgroup operator()(const CyclicScalar& s) const {
            if (s.N < 1) throw InvalidParamsError("cyclic-scalar: N < 1");
            FiniteSubgroup G;
            for (int k = 0; k < s.N; ++k) {
                Complex w = root_of_unity(k, s.N);
                G.elements.push_back(diag_element(w, w));
            }
            G.order = s.N;
            G.spec = s;
            return G;
        }
        FiniteSubgroup operator()(const CyclicSU2& s) const {
            if (s.N < 1) throw InvalidParamsError("cyclic-su2: N < 1");
            FiniteSubgroup G;
            G.elements = cyclic_su2_elements(s.N);
            G.order = s.N;
            G.spec = s;
            return G;
        }
        FiniteSubgroup operator()(const BinaryDihedral& s) const {
            if (s.N < 1) throw InvalidParamsError("binary-dihedral: N < 1");
            U2Element a = diag_element(root_of_unity(1, 2 * s.N), root_of_unity(-1, 2 * s.N));
            U2Element b{{Complex(0), Complex(1), Complex(-1), Complex(0)}};
            auto elems = closure({a, b});
            if ((int)elems.size() != 4 * s.N)
                throw std::logic_error("binary dihedral closure != 4N");
            FiniteSubgroup G;
            G.elements = std::move(elems);
            G.order = 4 * s.N;
            G.spec = s;
            return G;
        }
        FiniteSubgroup operator()(const BinaryTetrahedral& s) const {
            return FiniteSubgroup{binary_tetrahedral_elements(), s, 24};
        }
        FiniteSubgroup operator()(const BinaryOctahedral& s) const {
            return FiniteSubgroup{binary_octahedral_elements(), s, 48};
        }
        FiniteSubgroup operator()(const BinaryIcosahedral& s) const {
            return FiniteSubgroup{binary_icosahedral_elements(), s, 120};
        }
        FiniteSubgroup operator()(const DuValProduct& p) const { return duval_product_group(p); }
        FiniteSubgroup operator()(const FromGenerators& f) const {
            for (const auto& g : f.generators)
                if (u2_unitarity_defect(g) > 1e-9)
                    throw InvalidParamsError("from-generators: matrix is not unitary");
            auto elems = closure(f.generators);
            FiniteSubgroup G;
            G.order = (int)elems.size();
            G.elements = std::move(elems);
            G.spec = f;
            return G;
        }
    };
    return std::visit(V{}, spec);
}

// ---- enumeration ------------------------------------------------------------

namespace {

// eigenvalue exponents of an element: (p, q) mod o, order o
struct EigenExp {
    long o = 1;
    long p = 0, q = 0;
};

EigenExp eigen_exponents(const U2Element& g, int group_order) {
    Complex tr = g.trace(), dt = g.det();
    Complex disc = std::sqrt(tr * tr - 4.0 * dt);
    Complex l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
    double t1 = std::arg(l1) / (2 * kPi), t2 = std::arg(l2) / (2 * kPi);
    if (t1 < 0) t1 += 1;
    if (t2 < 0) t2 += 1;
    for (int o = 1; o <= 2 * group_order; ++o) {
        double a = t1 * o, b = t2 * o;
        if (std::abs(a - std::round(a)) < 1e-6 && std::abs(b - std::round(b)) < 1e-6) {
            EigenExp e;
            e.o = o;
            e.p = (long)llround(a) % o;
            e.q = (long)llround(b) % o;
            return e;
        }
    }
    throw std::logic_error("element order not found");
}

bool group_abelian(const std::vector<U2Element>& elems) {
    // it suffices to test pairwise commutation of the elements as generators
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (!u2_close(u2_mul(elems[i], elems[j]), u2_mul(elems[j], elems[i]), 1e-7))
                return false;
    return true;
}

// common-eigenbasis exponents for an abelian group; T = group order
std::pair<long, std::vector<std::pair<long, long>>> diagonalize_abelian(
    const std::vector<U2Element>& elems) {
    long T = (long)elems.size();
    // find an element with distinct eigenvalues to fix the basis
    int pick = -1;
    for (size_t i = 0; i < elems.size(); ++i) {
        Complex tr = elems[i].trace(), dt = elems[i].det();
        Complex disc = std::sqrt(tr * tr - 4.0 * dt);
        if (std::abs(disc) > 1e-6) {
            pick = (int)i;
            break;
        }
    }
    std::array<Complex, 4> P{Complex(1), Complex(0), Complex(0), Complex(1)};
    if (pick >= 0) {
        const U2Element& g = elems[pick];
        Complex tr = g.trace(), dt = g.det();
        Complex disc = std::sqrt(tr * tr - 4.0 * dt);
        Complex l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
        auto eigvec = [&](Complex lam) -> std::pair<Complex, Complex> {
            // (g - lam I) v = 0
            Complex a = g.e[0] - lam, b = g.e[1];
            Complex c = g.e[2], d = g.e[3] - lam;
            if (std::abs(a) + std::abs(b) > std::abs(c) + std::abs(d)) {
                if (std::abs(b) > std::abs(a)) return {Complex(1), -a / b};
                return {-b / a, Complex(1)};
            }
            if (std::abs(d) > std::abs(c)) return {Complex(1), -c / d};
            return {-d / c, Complex(1)};
        };
        auto [v1a, v1b] = eigvec(l1);
        auto [v2a, v2b] = eigvec(l2);
        double n1 = std::sqrt(std::norm(v1a) + std::norm(v1b));
        double n2 = std::sqrt(std::norm(v2a) + std::norm(v2b));
        P = {v1a / n1, v2a / n2, v1b / n1, v2b / n2};
    }
    // P inverse (2x2)
    Complex det = P[0] * P[3] - P[1] * P[2];
    std::array<Complex, 4> Pi{P[3] / det, -P[1] / det, -P[2] / det, P[0] / det};
    std::vector<std::pair<long, long>> exps;
    for (const auto& g : elems) {
        U2Element t = u2_mul(U2Element{Pi}, u2_mul(g, U2Element{P}));
        if (std::abs(t.e[1]) > 1e-6 || std::abs(t.e[2]) > 1e-6)
            throw std::logic_error("abelian group failed to diagonalize");
        double a1 = std::arg(t.e[0]) / (2 * kPi), a2 = std::arg(t.e[3]) / (2 * kPi);
        if (a1 < 0) a1 += 1;
        if (a2 < 0) a2 += 1;
        double p = a1 * T, q = a2 * T;
        if (std::abs(p - std::round(p)) > 1e-4 || std::abs(q - std::round(q)) > 1e-4)
            throw std::logic_error("abelian exponent not integral");
        exps.emplace_back((long)llround(p) % T, (long)llround(q) % T);
    }
    return {T, exps};
}

// canonical key of the subgroup of (Q/Z)^2 given by { (p,q)/T }: row HNF of the
// lattice spanned by exps and T*Z^2, reduced by the common gcd, minimized over
// the coordinate swap
struct LatticeKey {
    long T, a, b, c;
    bool operator<(const LatticeKey& o) const {
        return std::tie(T, a, b, c) < std::tie(o.T, o.a, o.b, o.c);
    }
    bool operator==(const LatticeKey& o) const {
        return T == o.T && a == o.a && b == o.b && c == o.c;
    }
};

// HNF of the lattice spanned by the given integer row vectors (2 columns):
// returns (a, b, c) with rows (a, b), (0, c), a,c > 0, 0 <= b < c
std::array<long, 3> hnf2(std::vector<std::array<long, 2>> rows) {
    // eliminate the first column by gcd
    long a = 0, b = 0;
    // accumulate gcd of first column while tracking the second coordinate
    for (auto& r : rows) {
        while (r[0] != 0) {
            if (a == 0) {
                a = r[0];
                b = r[1];
                r[0] = 0;
                r[1] = 0;
            } else {
                long q = r[0] / a;
                r[0] -= q * a;
                r[1] -= q * b;
                if (r[0] != 0) {
                    std::swap(a, r[0]);
                    std::swap(b, r[1]);
                }
            }
        }
    }
    long c = 0;
    for (const auto& r : rows) c = std::gcd(c, std::abs(r[1]));
    if (a < 0) {
        a = -a;
        b = -b;
    }
    if (c > 0) b = ((b % c) + c) % c;
    return {a, b, c};
}

LatticeKey lattice_key(long T, const std::vector<std::pair<long, long>>& exps) {
    auto build = [&](bool swap) {
        std::vector<std::array<long, 2>> rows;
        rows.push_back({T, 0});
        rows.push_back({0, T});
        for (const auto& [p, q] : exps) rows.push_back(swap ? std::array<long, 2>{q, p}
                                                            : std::array<long, 2>{p, q});
        auto h = hnf2(std::move(rows));
        long g = std::gcd(std::gcd(h[0], h[1]), std::gcd(h[2], T));
        return LatticeKey{T / g, h[0] / g, h[1] / g, h[2] / g};
    };
    LatticeKey k1 = build(false), k2 = build(true);
    return k1 < k2 ? k1 : k2;
}

// exact exponent-multiset fingerprint for nonabelian groups
using Fingerprint = std::vector<std::array<long, 3>>;

Fingerprint group_fingerprint(const std::vector<U2Element>& elems) {
    Fingerprint f;
    for (const auto& g : elems) {
        EigenExp e = eigen_exponents(g, (int)elems.size());
        long p = e.p, q = e.q;
        if (p > q) std::swap(p, q);
        f.push_back({e.o, p, q});
    }
    std::sort(f.begin(), f.end());
    return f;
}

// enumerate the exponent pairs of the subgroup of Z_T^2 cut out by an HNF lattice
std::vector<std::pair<long, long>> lattice_points(long T, long a, long b, long c) {
    std::vector<std::pair<long, long>> pts;
    pts.reserve((size_t)((T / a) * (T / c)));
    for (long s = 0; s < T / a; ++s)
        for (long t = 0; t < T / c; ++t)
            pts.emplace_back((a * s) % T, ((b * s + c * t) % T + T) % T);
    return pts;
}

U2Element exp_to_matrix(long T, long p, long q) {
    return diag_element(root_of_unity(p, T), root_of_unity(q, T));
}

}  // namespace

void for_each_duval(int order_cap, const std::function<void(const DuvalGroupData&)>& fn) {
    if (order_cap < 1 || order_cap > 2000)
        throw InvalidParamsError("enumerate: order cap must be in 1..2000");

    std::set<LatticeKey> seen_abelian;
    std::set<Fingerprint> seen_nonabelian;
    std::vector<DuvalGroupData> found;

    auto emit_abelian = [&](GroupSpec spec, long T, long a, long b, long c, int order) {
        DuvalGroupData d;
        d.spec = std::move(spec);
        d.order = order;
        d.abelian = true;
        d.T = T;
        d.exps = lattice_points(T, a, b, c);
        if ((int)d.exps.size() != order)
            throw std::logic_error("lattice point count != order for " + spec_name(d.spec));
        found.push_back(std::move(d));
    };

    // Type 1: (Z_2m/Z_f; Z_2n/Z_g)_d, order nf = cfg/2.
    // Enumerate quotient order c, then f, g of equal parity with cf, cg even.
    for (long c = 1; 2L * order_cap >= c; ++c) {
        for (long f = 1; c * f <= 2L * order_cap; ++f) {
            if ((c * f) % 2 != 0) continue;
            for (long g = 1; c * f * g <= 2L * order_cap; ++g) {
                if ((c * g) % 2 != 0) continue;
                if ((f - g) % 2 != 0) continue;
                long m = c * f / 2, n = c * g / 2;
                long order = n * f;
                if (order > order_cap) break;
                long T = std::lcm(2 * m, 2 * n);
                long u = T / (2 * m), v = T / (2 * n);
                for (long d = 1; d <= c; ++d) {
                    if (std::gcd(d, c) != 1) continue;
                    std::vector<std::array<long, 2>> rows{{T, 0},
                                                          {0, T},
                                                          {u + v * d, u - v * d},
                                                          {v * c, -v * c}};
                    auto h = hnf2(std::move(rows));
                    if ((T / h[0]) * (T / h[2]) != order)
                        throw std::logic_error("type 1 lattice order mismatch");
                    // canonical key including the swap
                    std::vector<std::pair<long, long>> gens{{u + v * d, u - v * d},
                                                            {v * c, -v * c}};
                    LatticeKey key = lattice_key(T, gens);
                    if (!seen_abelian.insert(key).second) continue;
                    DuValProduct spec;
                    spec.type = 1;
                    spec.m = (int)m;
                    spec.n = (int)n;
                    spec.f = (int)f;
                    spec.g = (int)g;
                    spec.d = (int)d;
                    emit_abelian(spec, T, h[0], h[1], h[2], (int)order);
                }
            }
        }
    }

    // Types 2-9: construct matrices; abelian cases merge into the lattice keys.
    auto emit_group = [&](const DuValProduct& spec) {
        int order = duval_order(spec);
        if (order > order_cap) return;
        FiniteSubgroup G = duval_product_group(spec);
        if (group_abelian(G.elements)) {
            auto [T, exps] = diagonalize_abelian(G.elements);
            LatticeKey key = lattice_key(T, exps);
            if (!seen_abelian.insert(key).second) return;
            DuvalGroupData d;
            d.spec = spec;
            d.order = order;
            d.abelian = true;
            d.T = T;
            d.exps = std::move(exps);
            found.push_back(std::move(d));
        } else {
            Fingerprint fp = group_fingerprint(G.elements);
            if (!seen_nonabelian.insert(fp).second) return;
            DuvalGroupData d;
            d.spec = spec;
            d.order = order;
            d.abelian = false;
            d.elements = std::move(G.elements);
            found.push_back(std::move(d));
        }
    };

    for (int m = 1; 8 * m <= order_cap * 8; ++m) {
        bool any = false;
        for (int l = 1;; ++l) {
            DuValProduct p2{2, m, 1, 1, 1, 1, l, 0};
            if (4 * l * m > order_cap) break;
            emit_group(p2);
            any = true;
        }
        if (m % 2 == 1) {
            for (int l = 1; 2 * l * m <= order_cap; l += 2) {
                if (4 * l * m <= order_cap) {
                    DuValProduct p3a{3, m, 1, 1, 1, 1, l, 0};
                    emit_group(p3a);
                }
                DuValProduct p3b{3, m, 1, 1, 1, 1, l, 1};
                emit_group(p3b);
                any = true;
            }
        }
        for (int l = 1; 8 * l * m <= order_cap; ++l) {
            DuValProduct p4{4, m, 1, 1, 1, 1, l, 0};
            emit_group(p4);
            any = true;
        }
        if (24 * m <= order_cap) {
            emit_group(DuValProduct{5, m, 1, 1, 1, 1, 1, 0});
            emit_group(DuValProduct{6, m, 1, 1, 1, 1, 1, 0});
            any = true;
        }
        if (48 * m <= order_cap) {
            emit_group(DuValProduct{7, m, 1, 1, 1, 1, 1, 0});
            emit_group(DuValProduct{8, m, 1, 1, 1, 1, 1, 0});
            any = true;
        }
        if (120 * m <= order_cap) {
            emit_group(DuValProduct{9, m, 1, 1, 1, 1, 1, 0});
            any = true;
        }
        if (!any && 4 * m > order_cap) break;
    }

    // deterministic output order: (order, spec name)
    std::sort(found.begin(), found.end(), [](const DuvalGroupData& x, const DuvalGroupData& y) {
        if (x.order != y.order) return x.order < y.order;
        return spec_name(x.spec) < spec_name(y.spec);
    });
    for (const auto& d : found) fn(d);
}

std::vector<std::pair<GroupSpec, FiniteSubgroup>> enumerate_duval(int order_cap) {
    std::vector<std::pair<GroupSpec, FiniteSubgroup>> out;
    for_each_duval(order_cap, [&](const DuvalGroupData& d) {
        FiniteSubgroup G;
        G.spec = d.spec;
        G.order = d.order;
        if (d.abelian) {
            G.elements.reserve(d.exps.size());
            for (const auto& [p, q] : d.exps) G.elements.push_back(exp_to_matrix(d.T, p, q));
        } else {
            G.elements = d.elements;
        }
        out.emplace_back(d.spec, std::move(G));
    });
    return out;
}

}  // namespace torq
