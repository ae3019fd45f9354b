#ifndef TORQ_DUVAL_HPP
#define TORQ_DUVAL_HPP

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace torq {

using Complex = std::complex<double>;

// 2x2 unitary matrix, row-major entries [a b; c d]
struct U2Element {
    std::array<Complex, 4> e{};

    Complex trace() const { return e[0] + e[3]; }
    Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
};

U2Element u2_mul(const U2Element& x, const U2Element& y);
U2Element u2_scaled(const U2Element& x, Complex s);
bool u2_close(const U2Element& x, const U2Element& y, double tol = 1e-9);
double u2_unitarity_defect(const U2Element& x);

struct CyclicScalar {
    int N;
};
struct CyclicSU2 {
    int N;
};
struct BinaryDihedral {
    int N;
};
struct BinaryTetrahedral {};
struct BinaryOctahedral {};
struct BinaryIcosahedral {};
// (L/L_K; R/R_K)_phi product groups, one of the nine classification families.
//   type 1: (Z_2m/Z_f; Z_2n/Z_g)_d
//   type 2: (Z_2m/Z_2m; D_l/D_l)
//   type 3: variant 0: (Z_4m/Z_2m; D_l/Z_2l), variant 1: (Z_4m/Z_m; D_l/Z_l), m,l odd
//   type 4: (Z_4m/Z_2m; D_2l/D_l)
//   type 5: (Z_2m/Z_2m; T/T)        type 6: (Z_6m/Z_2m; T/D_2)
//   type 7: (Z_2m/Z_2m; O/O)        type 8: (Z_4m/Z_2m; O/T)
//   type 9: (Z_2m/Z_2m; I/I)
struct DuValProduct {
    int type = 1;
    int m = 1, n = 1, f = 1, g = 1, d = 1, l = 1;
    int variant = 0;  // type 3 only
};
struct FromGenerators {
    std::vector<U2Element> generators;
};

using GroupSpec = std::variant<CyclicScalar, CyclicSU2, BinaryDihedral, BinaryTetrahedral,
                               BinaryOctahedral, BinaryIcosahedral, DuValProduct, FromGenerators>;

std::string spec_name(const GroupSpec& spec);

struct FiniteSubgroup {
    std::vector<U2Element> elements;
    GroupSpec spec;
    int order = 0;
};

struct ClosureBudgetError : std::runtime_error {
    ClosureBudgetError() : std::runtime_error("group closure exceeds 10000 elements") {}
};
struct InvalidParamsError : std::runtime_error {
    explicit InvalidParamsError(const std::string& w) : std::runtime_error(w) {}
};
struct PhiAmbiguousError : std::runtime_error {
    explicit PhiAmbiguousError(const std::string& w) : std::runtime_error(w) {}
};

FiniteSubgroup generate(const GroupSpec& spec);

FiniteSubgroup duval_product_group(const DuValProduct& p);

// analysis-ready description of one enumerated group
struct DuvalGroupData {
    GroupSpec spec;
    int order = 0;
    bool abelian = false;
    // abelian groups: common-eigenbasis exponent pairs (p, q) modulo T
    long T = 1;
    std::vector<std::pair<long, long>> exps;
    // nonabelian groups: explicit matrices
    std::vector<U2Element> elements;
};

// Streams every family instance of order <= order_cap, deduplicated by a
// conjugacy-invariant key; deterministic order.
void for_each_duval(int order_cap, const std::function<void(const DuvalGroupData&)>& fn);

std::vector<std::pair<GroupSpec, FiniteSubgroup>> enumerate_duval(int order_cap);

}  // namespace torq

#endif
