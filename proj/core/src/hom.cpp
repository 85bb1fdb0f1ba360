#include "ksys/hom.hpp"

namespace ksys {

namespace {

// W-equivariant maps gr_0 M -> gr_k N as a kernel computation; maps are
// returned as matrices (dim gr_k N) x (dim gr_0 M).
std::vector<Matrix<Cyclo>> equivariant_start_maps(const ReflectionGroup& G, const GradedPiece& m0,
                                                  const GradedPiece& nk) {
    int rows = nk.dim, cols = m0.dim;
    if (rows == 0 || cols == 0) return {};
    int unknowns = rows * cols;
    std::vector<std::vector<Cyclo>> constraint_rows;
    for (size_t g = 0; g < G.generators.size(); ++g) {
        // A_N X - X A_M = 0, one scalar row per (i, j).
        const Matrix<Cyclo>& an = nk.gen_action[g];
        const Matrix<Cyclo>& am = m0.gen_action[g];
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                std::vector<Cyclo> row(unknowns, Cyclo(0));
                for (int t = 0; t < rows; ++t) row[t * cols + j] += an.at(i, t);
                for (int t = 0; t < cols; ++t) row[i * cols + t] -= am.at(t, j);
                constraint_rows.push_back(std::move(row));
            }
    }
    Matrix<Cyclo> C(static_cast<int>(constraint_rows.size()), unknowns);
    for (size_t i = 0; i < constraint_rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) C.at(static_cast<int>(i), j) = constraint_rows[i][j];
    std::vector<Matrix<Cyclo>> basis;
    for (const auto& v : kernel_basis(C)) {
        Matrix<Cyclo> X(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) X.at(i, j) = v[i * cols + j];
        basis.push_back(std::move(X));
    }
    return basis;
}

}  // namespace

std::map<int, long> hom_graded(const ReflectionGroup& G, const GradedModule& M,
                               const GradedModule& N) {
    int top = N.top_nonzero_grade();
    std::map<int, long> hom;
    if (top < 0) return hom;
    KSYS_REQUIRE(N.trunc > top, Errc::truncation_insufficient,
                 "target module is not certified finite within its truncation");
    KSYS_REQUIRE(M.trunc >= top + 1, Errc::truncation_insufficient,
                 "source module must be truncated past the target's top grade");
    const int r = G.dim_h;
    const long divisor = static_cast<long>(M.mult_factor) * N.mult_factor;

    for (int k = 0; k <= top; ++k) {
        std::vector<Matrix<Cyclo>> family = equivariant_start_maps(G, M.gr[0], N.gr[k]);
        for (int j = 0; j < top - k && !family.empty(); ++j) {
            const int dmj = M.dim_at(j), dmj1 = M.dim_at(j + 1);
            const int dn = N.dim_at(j + 1 + k);
            const size_t m = family.size();
            // Modules here are generated in grade 0, so a vanished grade
            // stays vanished; every remaining constraint is then vacuous.
            if (dmj1 == 0 || dn == 0) break;
            // Solve X_{j+1} mult^M_a(j) = mult^N_a(j+k) X_j for all a:
            // stacked transposed system S Y = B with Y = X_{j+1}^T.
            int scols = dmj1;
            RowBasis<Cyclo> elim(scols + static_cast<int>(m) * dn);
            for (int a = 0; a < r; ++a) {
                std::vector<Matrix<Cyclo>> rhs;
                rhs.reserve(m);
                for (const auto& X : family) rhs.push_back(N.mult[j + k][a] * X);
                for (int u = 0; u < dmj; ++u) {
                    std::vector<Cyclo> row(scols + m * dn, Cyclo(0));
                    for (int t = 0; t < scols; ++t) row[t] = M.mult[j][a].at(t, u);
                    for (size_t s = 0; s < m; ++s)
                        for (int i = 0; i < dn; ++i) row[scols + s * dn + i] = rhs[s].at(i, u);
                    elim.insert(std::move(row));
                }
            }
            // Pivots inside the S block determine Y rows; pivots beyond it
            // are consistency constraints on the family coefficients.
            std::vector<std::vector<Cyclo>> y_rows(scols);  // per S-column, length m*dn
            std::vector<char> have(scols, 0);
            std::vector<std::vector<Cyclo>> constraints;
            for (int t = 0; t < elim.dim(); ++t) {
                int p = elim.pivots()[t];
                const auto& row = elim.rows()[t];
                std::vector<Cyclo> tail(row.begin() + scols, row.end());
                if (p < scols) {
                    y_rows[p] = std::move(tail);
                    have[p] = 1;
                } else {
                    constraints.push_back(std::move(tail));
                }
            }
            for (int t = 0; t < scols; ++t)
                KSYS_INVARIANT(have[t], "source module is not generated in grade 0");

            std::vector<Matrix<Cyclo>> next;
            if (constraints.empty()) {
                for (size_t s = 0; s < m; ++s) {
                    Matrix<Cyclo> X(dn, dmj1);
                    for (int t = 0; t < dmj1; ++t)
                        for (int i = 0; i < dn; ++i) X.at(i, t) = y_rows[t][s * dn + i];
                    next.push_back(std::move(X));
                }
            } else {
                // lambda-space kernel: each constraint row gives dn equations.
                Matrix<Cyclo> C(static_cast<int>(constraints.size()) * dn, static_cast<int>(m));
                for (size_t cr = 0; cr < constraints.size(); ++cr)
                    for (int i = 0; i < dn; ++i)
                        for (size_t s = 0; s < m; ++s)
                            C.at(static_cast<int>(cr) * dn + i, static_cast<int>(s)) =
                                constraints[cr][s * dn + i];
                for (const auto& lambda : kernel_basis(C)) {
                    Matrix<Cyclo> X(dn, dmj1);
                    for (int t = 0; t < dmj1; ++t)
                        for (int i = 0; i < dn; ++i) {
                            Cyclo acc(0);
                            for (size_t s = 0; s < m; ++s) acc += lambda[s] * y_rows[t][s * dn + i];
                            X.at(i, t) = acc;
                        }
                    next.push_back(std::move(X));
                }
            }
            family = std::move(next);
        }
        long dim = static_cast<long>(family.size());
        KSYS_INVARIANT(dim % divisor == 0, "graded Hom dimension is not divisible by the multiplicity");
        if (dim > 0) hom[k] = dim / divisor;
    }
    return hom;
}

}  // namespace ksys
