#include "torq/weights.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace torq {

WeightMatrix WeightMatrix::parse(const std::string& text) {
    std::vector<std::vector<BigInt>> rows;
    std::stringstream ss(text);
    std::string row_text;
    while (std::getline(ss, row_text, ';')) {
        std::vector<BigInt> row;
        std::stringstream rs(row_text);
        std::string tok;
        while (rs >> tok) row.emplace_back(tok);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty weight matrix");
    size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("ragged weight matrix rows");
    IntMatrix m((int)rows.size(), (int)n);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return WeightMatrix(std::move(m));
}

namespace {

// Exact Gaussian elimination over Q; returns rank, optionally reduced echelon form.
int rational_rank(std::vector<RationalVec> M) {
    int rows = (int)M.size();
    if (rows == 0) return 0;
    int cols = (int)M[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!M[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[r], M[p]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            Rational f = M[i][c] / M[r][c];
            for (int j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return r;
}

bool vec_less(const RationalVec& a, const RationalVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

// affine dimension of a point set
int affine_dimension(const std::vector<RationalVec>& pts) {
    if (pts.empty()) return -1;
    if (pts.size() == 1) return 0;
    std::vector<RationalVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        RationalVec d(pts[0].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rational_rank(std::move(diffs));
}

IntMatrix rows_to_matrix(const std::vector<std::vector<BigInt>>& rows, int cols) {
    IntMatrix m((int)rows.size(), cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

EffectivenessReport effectiveness_report(const WeightMatrix& W) {
    EffectivenessReport rep;
    rep.rank_ = rank(W.A);
    rep.full_rank = (rep.rank_ == W.ell);
    if (rep.rank_ > 0) rep.minors_gcd_value = minors_gcd(W.A, rep.rank_);
    rep.effective = rep.full_rank && rep.minors_gcd_value == 1;
    if (rep.effective) {
        rep.reduced = W;
        return rep;
    }
    if (rep.rank_ == 0) {
        rep.reduced = WeightMatrix(IntMatrix(0, W.n));
        return rep;
    }
    // saturation of the row lattice: double kernel
    IntMatrix ker = kernel_lattice_basis(W.A);
    IntMatrix sat = kernel_lattice_basis(ker);
    // prefer row directions matching rows of the input
    std::vector<std::vector<BigInt>> orig;
    for (int i = 0; i < W.ell; ++i) {
        std::vector<BigInt> r(W.n);
        for (int j = 0; j < W.n; ++j) r[j] = W.A.at(i, j);
        orig.push_back(std::move(r));
    }
    for (int i = 0; i < sat.rows; ++i) {
        std::vector<BigInt> r(W.n), neg(W.n);
        for (int j = 0; j < W.n; ++j) {
            r[j] = sat.at(i, j);
            neg[j] = -sat.at(i, j);
        }
        bool r_in = std::find(orig.begin(), orig.end(), r) != orig.end();
        bool neg_in = std::find(orig.begin(), orig.end(), neg) != orig.end();
        if (neg_in && !r_in)
            for (int j = 0; j < W.n; ++j) sat.at(i, j) = -sat.at(i, j);
    }
    rep.reduced = WeightMatrix(std::move(sat));
    return rep;
}

PolytopeDescription polytope(const WeightMatrix& W) {
    PolytopeDescription P;
    const int n = W.n;
    if (n > 12) throw std::invalid_argument("polytope: n > 12 exceeds the enumeration budget");

    // system M x = b with M = [A; 1...1], b = (0,...,0,1)
    std::vector<RationalVec> M(W.ell + 1, RationalVec(n));
    for (int i = 0; i < W.ell; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = Rational(W.A.at(i, j));
    for (int j = 0; j < n; ++j) M[W.ell][j] = Rational(1);

    int rho = rational_rank(M);
    if (rho == rank(W.A)) {
        // the sum row is dependent on the weight rows: sum = 0 on ker(A), infeasible
        return P;
    }

    std::vector<RationalVec> verts;
    std::vector<int> sel(rho);
    for (int i = 0; i < rho; ++i) sel[i] = i;
    while (true) {
        bool ok_rank = true;
        {
            // basis columns sel: solve M_B x_B = b over the full row space.
            // Reduce M restricted to sel columns together with b by elimination.
            std::vector<RationalVec> Mb(W.ell + 1, RationalVec(rho + 1));
            for (int i = 0; i <= W.ell; ++i) {
                for (int k = 0; k < rho; ++k) Mb[i][k] = M[i][sel[k]];
                Mb[i][rho] = (i == W.ell) ? Rational(1) : Rational(0);
            }
            // eliminate
            int r = 0;
            int rows_n = W.ell + 1;
            for (int c = 0; c < rho && r < rows_n; ++c) {
                int p = -1;
                for (int i = r; i < rows_n; ++i)
                    if (!Mb[i][c].is_zero()) {
                        p = i;
                        break;
                    }
                if (p < 0) {
                    ok_rank = false;
                    break;
                }
                std::swap(Mb[r], Mb[p]);
                for (int i = 0; i < rows_n; ++i) {
                    if (i == r || Mb[i][c].is_zero()) continue;
                    Rational f = Mb[i][c] / Mb[r][c];
                    for (int j = c; j <= rho; ++j) Mb[i][j] -= f * Mb[r][j];
                }
                ++r;
            }
            if (ok_rank) {
                // consistency of remaining rows
                for (int i = r; i < rows_n; ++i)
                    if (!Mb[i][rho].is_zero()) {
                        ok_rank = false;
                        break;
                    }
                if (ok_rank) {
                    RationalVec xb(rho);
                    for (int i = 0; i < rho; ++i) xb[i] = Mb[i][rho] / Mb[i][i];
                    bool nonneg = true;
                    for (const auto& v : xb)
                        if (v.sign() < 0) {
                            nonneg = false;
                            break;
                        }
                    if (nonneg) {
                        RationalVec x(n);
                        for (int i = 0; i < rho; ++i) x[sel[i]] = xb[i];
                        verts.push_back(std::move(x));
                    }
                }
            }
        }
        int i = rho - 1;
        while (i >= 0 && sel[i] == n - rho + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < rho; ++j) sel[j] = sel[j - 1] + 1;
    }

    std::sort(verts.begin(), verts.end(), vec_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    P.vertices = std::move(verts);
    P.dimension = affine_dimension(P.vertices);
    std::vector<bool> in_support(n, false);
    for (const auto& v : P.vertices)
        for (int j = 0; j < n; ++j)
            if (!v[j].is_zero()) in_support[j] = true;
    for (int j = 0; j < n; ++j)
        if (in_support[j]) P.support.push_back(j + 1);
    return P;
}

namespace {

// standard-form construction on the support submatrix (see simplicial_check)
std::optional<std::pair<StandardForm, std::vector<NormalVector>>> build_standard_form(
    const WeightMatrix& W, const PolytopeDescription& P) {
    const int n = W.n;
    // split support into zero columns (of A) and active columns
    std::vector<int> active, zero_cols;
    for (int j1 : P.support) {
        bool all_zero = true;
        for (int i = 0; i < W.ell; ++i)
            if (W.A.at(i, j1 - 1) != 0) {
                all_zero = false;
                break;
            }
        (all_zero ? zero_cols : active).push_back(j1);
    }
    if (active.empty()) {
        // torus acts trivially on the support: empty standard form, no normals
        StandardForm sf;
        sf.perm = zero_cols;
        sf.row_transform = IntMatrix(0, W.ell);
        sf.D = IntMatrix(0, 0);
        sf.C = IntMatrix(0, 0);
        sf.zero_columns = (int)zero_cols.size();
        return std::make_pair(std::move(sf), std::vector<NormalVector>{});
    }

    // A'' = A restricted to active columns; rank k
    std::vector<RationalVec> Aact(W.ell, RationalVec(active.size()));
    for (int i = 0; i < W.ell; ++i)
        for (size_t j = 0; j < active.size(); ++j) Aact[i][j] = Rational(W.A.at(i, active[j] - 1));
    int k = rational_rank(Aact);

    // vertices of the polytope of A'' = original vertices supported inside `active`
    std::vector<RationalVec> verts;
    for (const auto& v : P.vertices) {
        bool inside = true;
        for (int j = 0; j < n; ++j)
            if (!v[j].is_zero() &&
                std::find(active.begin(), active.end(), j + 1) == active.end()) {
                inside = false;
                break;
            }
        if (inside) verts.push_back(v);
    }
    if ((int)verts.size() != (int)active.size() - k) return std::nullopt;

    // separated column for each vertex: positive there, zero on all other vertices;
    // choosing the largest candidate per vertex makes the D block lexicographically
    // smallest (candidate sets are disjoint)
    std::vector<int> separated;  // aligned with verts
    for (size_t vi = 0; vi < verts.size(); ++vi) {
        int best = -1;
        for (int j1 : active) {
            if (verts[vi][j1 - 1].is_zero()) continue;
            bool others_zero = true;
            for (size_t vk = 0; vk < verts.size(); ++vk)
                if (vk != vi && !verts[vk][j1 - 1].is_zero()) {
                    others_zero = false;
                    break;
                }
            if (others_zero) best = std::max(best, j1);
        }
        if (best < 0) return std::nullopt;
        separated.push_back(best);
    }

    std::vector<int> d_cols;
    for (int j1 : active)
        if (std::find(separated.begin(), separated.end(), j1) == separated.end())
            d_cols.push_back(j1);
    if ((int)d_cols.size() != k) return std::nullopt;
    std::vector<int> c_cols = separated;
    std::sort(c_cols.begin(), c_cols.end());

    // each normal mu_i: the (one-dimensional) piece of the row space vanishing on the
    // other D columns, scaled primitive with negative entry at its own D column
    std::vector<NormalVector> normals;
    std::vector<std::vector<BigInt>> trans_rows;
    for (int i = 0; i < k; ++i) {
        // solve y^T A = mu with mu[d_cols[m]] = 0 for m != i; y in Q^ell, 1-dim space.
        // Build the (k-1) x ell system y^T A[:, d_cols[m]] = 0.
        std::vector<RationalVec> sys;
        for (int m = 0; m < k; ++m) {
            if (m == i) continue;
            RationalVec row(W.ell);
            for (int a = 0; a < W.ell; ++a) row[a] = Rational(W.A.at(a, d_cols[m] - 1));
            sys.push_back(std::move(row));
        }
        // kernel of sys (dimension ell - (k-1) >= 1); pick a kernel vector whose mu is
        // nonzero; the row space of A has dimension k, so the solution giving a
        // nonzero mu is unique up to scale.
        // Compute kernel basis of sys over Q by elimination.
        std::vector<RationalVec> mat = sys;
        int rows_n = (int)mat.size();
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < W.ell && r < rows_n; ++c) {
            int p = -1;
            for (int x = r; x < rows_n; ++x)
                if (!mat[x][c].is_zero()) {
                    p = x;
                    break;
                }
            if (p < 0) continue;
            std::swap(mat[r], mat[p]);
            for (int x = 0; x < rows_n; ++x) {
                if (x == r || mat[x][c].is_zero()) continue;
                Rational f = mat[x][c] / mat[r][c];
                for (int j = c; j < W.ell; ++j) mat[x][j] -= f * mat[r][j];
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(W.ell, false);
        for (int c : pivot_col) is_pivot[c] = true;
        std::vector<BigInt> chosen_mu;
        RationalVec chosen_y;
        for (int free = 0; free < W.ell; ++free) {
            if (is_pivot[free]) continue;
            RationalVec y(W.ell);
            y[free] = Rational(1);
            for (int x = r - 1; x >= 0; --x) {
                Rational acc;
                for (int j = pivot_col[x] + 1; j < W.ell; ++j) acc += mat[x][j] * y[j];
                y[pivot_col[x]] = -acc / mat[x][pivot_col[x]];
            }
            // mu = y^T A over the full column set
            RationalVec mu_q(n);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                Rational acc;
                for (int a = 0; a < W.ell; ++a) acc += y[a] * Rational(W.A.at(a, j));
                mu_q[j] = acc;
                if (!acc.is_zero()) nonzero = true;
            }
            if (!nonzero) continue;
            // clear denominators, make primitive
            BigInt lcm = 1;
            for (const auto& q : mu_q) lcm = big_lcm(lcm == 0 ? 1 : lcm, q.den());
            std::vector<BigInt> mu(n);
            for (int j = 0; j < n; ++j) mu[j] = mu_q[j].num() * (lcm / mu_q[j].den());
            mu = primitive_vector(std::move(mu));
            chosen_mu = std::move(mu);
            chosen_y = y;
            break;
        }
        if (chosen_mu.empty()) return std::nullopt;
        // sign: entry at own D column must be negative
        if (chosen_mu[d_cols[i] - 1] == 0) return std::nullopt;
        if (chosen_mu[d_cols[i] - 1] > 0) {
            for (auto& x : chosen_mu) x = -x;
            for (auto& x : chosen_y) x = -x;
        }
        // sign conditions on the support
        for (int j1 : P.support)
            if (j1 != d_cols[i] && chosen_mu[j1 - 1] < 0) return std::nullopt;
        // zero outside nothing to check: mu lives in the row space
        normals.push_back(NormalVector{chosen_mu, d_cols[i]});
        // integer transform row: scale y to integers (mu primitive fixes scale)
        BigInt ylcm = 1;
        for (const auto& q : chosen_y) ylcm = big_lcm(ylcm, q.den());
        std::vector<BigInt> yr(W.ell);
        // y may be non-integral; store y * ylcm and divide the transform det bookkeeping
        // by recording the scaled transform (T A = diag-scaled form is kept exact via mu)
        for (int a = 0; a < W.ell; ++a) yr[a] = chosen_y[a].num() * (ylcm / chosen_y[a].den());
        // normalize so that yr * A = mu exactly: yr*A = ylcm * mu', rescale by gcd
        std::vector<BigInt> prod(n);
        for (int j = 0; j < n; ++j) {
            BigInt acc = 0;
            for (int a = 0; a < W.ell; ++a) acc += yr[a] * W.A.at(a, j);
            prod[j] = acc;
        }
        BigInt g = 0;
        for (const auto& x : prod) g = big_gcd(g, x);
        if (g > 1) {
            bool divides_y = true;
            for (const auto& x : yr)
                if (x % g != 0) {
                    divides_y = false;
                    break;
                }
            if (divides_y)
                for (auto& x : yr) x /= g;
        }
        trans_rows.push_back(std::move(yr));
    }

    StandardForm sf;
    sf.perm = d_cols;
    sf.perm.insert(sf.perm.end(), c_cols.begin(), c_cols.end());
    sf.perm.insert(sf.perm.end(), zero_cols.begin(), zero_cols.end());
    sf.row_transform = rows_to_matrix(trans_rows, W.ell);
    sf.D = IntMatrix(k, k);
    sf.C = IntMatrix(k, (int)c_cols.size());
    for (int i = 0; i < k; ++i) {
        // row_transform * A evaluated on the permuted columns
        for (int m = 0; m < k; ++m) {
            BigInt acc = 0;
            for (int a = 0; a < W.ell; ++a) acc += sf.row_transform.at(i, a) * W.A.at(a, d_cols[m] - 1);
            sf.D.at(i, m) = acc;
        }
        for (size_t m = 0; m < c_cols.size(); ++m) {
            BigInt acc = 0;
            for (int a = 0; a < W.ell; ++a) acc += sf.row_transform.at(i, a) * W.A.at(a, c_cols[m] - 1);
            sf.C.at(i, (int)m) = acc;
        }
    }
    sf.zero_columns = (int)zero_cols.size();
    // validate the diagonal sign pattern
    for (int i = 0; i < k; ++i) {
        if (sf.D.at(i, i) >= 0) return std::nullopt;
        for (int m = 0; m < k; ++m)
            if (m != i && sf.D.at(i, m) != 0) return std::nullopt;
        bool row_zero = true;
        for (int m = 0; m < sf.C.cols; ++m) {
            if (sf.C.at(i, m) < 0) return std::nullopt;
            if (sf.C.at(i, m) != 0) row_zero = false;
        }
        if (sf.C.cols > 0 && row_zero) return std::nullopt;
    }
    if (sf.row_transform.rows == sf.row_transform.cols)
        sf.transform_det = determinant(sf.row_transform);
    return std::make_pair(std::move(sf), std::move(normals));
}

}  // namespace

SimplicialReport simplicial_check(const WeightMatrix& W) {
    SimplicialReport rep;
    rep.polytope = polytope(W);
    rep.vertex_count = (int)rep.polytope.vertices.size();
    if (rep.polytope.vertices.empty()) {
        rep.simplicial = true;  // empty polytope: reduced space is a point
        return rep;
    }
    rep.simplicial = (rep.vertex_count == rep.polytope.dimension + 1);
    if (!rep.simplicial) return rep;  // polytope retains the witness vertices
    auto built = build_standard_form(W, rep.polytope);
    if (built) {
        rep.normals = std::move(built->second);
        rep.standard_form = std::move(built->first);
    }
    return rep;
}

std::vector<std::vector<BigInt>> cone_rays(const WeightMatrix& W) {
    PolytopeDescription P = polytope(W);
    std::vector<std::vector<BigInt>> rays;
    for (const auto& v : P.vertices) {
        BigInt lcm = 1;
        for (const auto& q : v) lcm = big_lcm(lcm, q.den());
        std::vector<BigInt> r(W.n);
        for (int j = 0; j < W.n; ++j) r[j] = v[j].num() * (lcm / v[j].den());
        rays.push_back(primitive_vector(std::move(r)));
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

CoxGroupData cox_group(const WeightMatrix& W) {
    SimplicialReport rep = simplicial_check(W);
    if (!rep.simplicial) throw NotSimplicialError();
    CoxGroupData out;
    if (rep.polytope.vertices.empty()) return out;  // point quotient, trivial group
    int r = rank(W.A);
    if (rep.polytope.dimension != W.n - r - 1) throw DegeneratePolytopeError();

    auto rays = cone_rays(W);
    IntMatrix ker = kernel_lattice_basis(W.A);  // (n-r) x n, saturated
    int d = ker.rows;
    if ((int)rays.size() != d) throw DegeneratePolytopeError();

    // coordinates of each ray in the kernel basis: solve ker^T c = ray over Q
    IntMatrix V(d, d);
    for (int i = 0; i < d; ++i) {
        std::vector<RationalVec> M(W.n, RationalVec(d));
        RationalVec b(W.n);
        for (int row = 0; row < W.n; ++row) {
            for (int c = 0; c < d; ++c) M[row][c] = Rational(ker.at(c, row));
            b[row] = Rational(rays[i][row]);
        }
        // least-squares-free exact solve: reduce the overdetermined system
        // [M | b]; consistent by construction.
        int rr = 0;
        std::vector<int> piv;
        for (int c = 0; c < d && rr < W.n; ++c) {
            int p = -1;
            for (int x = rr; x < W.n; ++x)
                if (!M[x][c].is_zero()) {
                    p = x;
                    break;
                }
            if (p < 0) continue;
            std::swap(M[rr], M[p]);
            std::swap(b[rr], b[p]);
            for (int x = 0; x < W.n; ++x) {
                if (x == rr || M[x][c].is_zero()) continue;
                Rational f = M[x][c] / M[rr][c];
                for (int j = c; j < d; ++j) M[x][j] -= f * M[rr][j];
                b[x] -= f * b[rr];
            }
            piv.push_back(c);
            ++rr;
        }
        for (int x = rr; x < W.n; ++x)
            if (!b[x].is_zero()) throw std::logic_error("cox_group: ray outside kernel lattice");
        for (int x = 0; x < rr; ++x) {
            Rational c = b[x] / M[x][piv[x]];
            if (!c.is_integer())
                throw std::logic_error("cox_group: non-integer ray coordinate");
            V.at(i, piv[x]) = c.num();
        }
    }

    SmithForm sf = smith_normal_form(V);
    out.order = 1;
    for (int i = 0; i < d; ++i) {
        BigInt di = sf.S.at(i, i);
        if (di == 0) throw DegeneratePolytopeError();
        out.order *= di;
        if (di > 1) out.invariant_factors.push_back(di);
    }
    return out;
}

MomentMapData moment_map(const WeightMatrix& W) {
    MomentMapData m;
    for (int a = 0; a < W.ell; ++a) {
        RationalVec comp(W.n);
        for (int j = 0; j < W.n; ++j) comp[j] = Rational(W.A.at(a, j), BigInt(2));
        m.components.push_back(std::move(comp));
    }
    return m;
}

}  // namespace torq
