#ifndef TORQ_WEIGHTS_HPP
#define TORQ_WEIGHTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "torq/intmat.hpp"
#include "torq/rational.hpp"

namespace torq {

using RationalVec = std::vector<Rational>;

// ell x n integer matrix encoding a unitary torus representation: row a gives the
// weights of the a-th circle factor on the coordinates of C^n.
struct WeightMatrix {
    int ell = 0;
    int n = 0;
    IntMatrix A;

    WeightMatrix() = default;
    explicit WeightMatrix(IntMatrix m) : ell(m.rows), n(m.cols), A(std::move(m)) {}
    WeightMatrix(std::initializer_list<std::initializer_list<long>> data)
        : WeightMatrix(IntMatrix(data)) {}

    // "−1 1 2" or "1 −1 0; 0 1 −1" (rows split on ';')
    static WeightMatrix parse(const std::string& text);
};

struct EffectivenessReport {
    int rank_ = 0;
    bool full_rank = false;
    BigInt minors_gcd_value = 0;
    bool effective = false;
    WeightMatrix reduced;
};

struct PolytopeDescription {
    std::vector<RationalVec> vertices;  // canonically sorted
    int dimension = -1;                 // -1 when empty
    std::vector<int> support;           // sorted, 1-based indices
};

struct StandardForm {
    std::vector<int> perm;   // support columns, 1-based original indices:
                             // D block, then C block, then zero columns
    IntMatrix row_transform; // T with T * A'_perm = [D | C | 0]; integer, invertible over Q
    BigInt transform_det = 1;
    IntMatrix D;             // diagonal, strictly negative diagonal
    IntMatrix C;             // nonnegative entries, no zero rows (may have 0 columns)
    int zero_columns = 0;    // trailing zero-column count
};

struct NormalVector {
    std::vector<BigInt> mu;  // length n, primitive
    int separated_index;     // 1-based j_i with <e_{j_i}, mu_i> < 0
};

struct SimplicialReport {
    bool simplicial = false;
    int vertex_count = 0;
    PolytopeDescription polytope;
    std::optional<StandardForm> standard_form;
    std::optional<std::vector<NormalVector>> normals;
};

struct MomentMapData {
    std::vector<RationalVec> components;  // component a: coefficients A_{aj}/2
};

struct CoxGroupData {
    std::vector<BigInt> invariant_factors;  // factors > 1, each divides the next
    BigInt order = 1;
};

struct NotSimplicialError : std::runtime_error {
    NotSimplicialError() : std::runtime_error("weight matrix is not simplicial") {}
};
struct DegeneratePolytopeError : std::runtime_error {
    DegeneratePolytopeError() : std::runtime_error("polytope dimension below n-ell-1") {}
};

EffectivenessReport effectiveness_report(const WeightMatrix& W);

// Vertices of ker(A) ∩ Δ^{n-1} via exhaustive basic-feasible-solution enumeration.
PolytopeDescription polytope(const WeightMatrix& W);

SimplicialReport simplicial_check(const WeightMatrix& W);

// Primitive integer generators of the extreme rays of ker(A) ∩ R^n_{>=0}.
std::vector<std::vector<BigInt>> cone_rays(const WeightMatrix& W);

CoxGroupData cox_group(const WeightMatrix& W);

MomentMapData moment_map(const WeightMatrix& W);

}  // namespace torq

#endif
