#include "ksys/trace.hpp"

#include "amod_internal.hpp"

namespace ksys {

using detail::MonomialBasis;

namespace {

std::vector<Cyclo> piece_char(const ReflectionGroup& G, const GradedPiece& piece) {
    std::vector<Cyclo> v(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c)
        v[c] = element_action(G, piece, G.class_rep[c]).trace();
    return v;
}

// Quotient of a piece by the image of the kill projector; rewrites the piece,
// the incoming multiplication maps, and the character values.
void apply_kill(const ReflectionGroup& G, const std::vector<Cyclo>& weights, long expected_dim,
                GradedPiece& piece, std::vector<Matrix<Cyclo>>& mult_in,
                std::vector<Cyclo>& values) {
    Matrix<Cyclo> proj = detail::kill_projector(G, weights, piece);
    RowBasis<Cyclo> killed(piece.dim);
    for (int j = 0; j < proj.cols(); ++j) killed.insert(proj.col(j));
    KSYS_INVARIANT(killed.dim() == expected_dim, "kill projector rank disagrees with character");
    RowBasis<Cyclo> none(piece.dim);
    GradedPiece out;
    out.dim = piece.dim - killed.dim();
    for (auto& act : piece.gen_action)
        out.gen_action.push_back(detail::induced_on_quotient(act, killed, killed));
    for (auto& m : mult_in) m = detail::induced_on_quotient(m, RowBasis<Cyclo>(m.cols()), killed);
    piece = std::move(out);
    values = piece_char(G, piece);
}

}  // namespace

TraceQuotient trace_quotient(const ReflectionGroup& G, const CharacterTable& T, const Preorder& P,
                             int chi, TraceMode mode, int N) {
    KSYS_REQUIRE(N >= 1, Errc::invalid_truncation, "trace quotient needs truncation >= 1");
    const int r = G.dim_h;
    const long dim_chi = T.dims[chi];

    std::vector<int> kill;
    for (int psi = 0; psi < T.num_chars(); ++psi) {
        if (mode == TraceMode::strict ? P.strictly_below(psi, chi)
                                      : !P.strictly_below(chi, psi))
            kill.push_back(psi);
    }
    std::vector<Cyclo> weights = detail::kill_weights(G, T, kill);

    detail::IdempotentSlice slice = detail::idempotent_slice(G, T, chi);
    const int d0 = slice.basis.dim();

    GradedModule M;
    M.trunc = N;
    M.meta = mode == TraceMode::strict ? "nabla" : "barnabla";
    M.chi = chi;
    M.mult_factor = static_cast<int>(dim_chi);
    M.gr.resize(N + 1);
    M.mult.assign(N, std::vector<Matrix<Cyclo>>(r));

    std::vector<std::vector<Cyclo>> values(N + 1);

    M.gr[0].dim = d0;
    M.gr[0].gen_action = slice.gen_action;
    values[0] = piece_char(G, M.gr[0]);

    // Slice trace and tr Sym^k per class feed the closed-form ambient
    // character dim_chi * chi(c) * tr Sym^k(c).
    std::vector<std::vector<Cyclo>> h_traces(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c)
        h_traces[c] = detail::sym_trace_series(G.elements[G.class_rep[c]], N);

    bool ambient = true;  // no seed has occurred yet: module equals E_chi so far
    std::vector<Matrix<Cyclo>> sym_prev(G.generators.size(), Matrix<Cyclo>::identity(1));

    for (int k = 1; k <= N; ++k) {
        if (ambient) {
            const auto& basis = MonomialBasis::get(r, k);
            const auto& below = MonomialBasis::get(r, k - 1);
            GradedPiece piece;
            piece.dim = d0 * basis.size();
            for (size_t g = 0; g < G.generators.size(); ++g) {
                Matrix<Cyclo> sym = detail::sym_action(G.generators[g], k, sym_prev[g]);
                piece.gen_action.push_back(kron(slice.gen_action[g], sym));
                sym_prev[g] = std::move(sym);
            }
            std::vector<Matrix<Cyclo>> mult_in(r);
            for (int a = 0; a < r; ++a) {
                std::vector<int> shift = detail::variable_shift(r, k - 1, a);
                Matrix<Cyclo> m(d0 * basis.size(), d0 * below.size());
                for (int i = 0; i < d0; ++i)
                    for (int mm = 0; mm < below.size(); ++mm)
                        m.at(i * basis.size() + shift[mm], i * below.size() + mm) = Cyclo(1);
                mult_in[a] = std::move(m);
            }
            std::vector<Cyclo> v(G.num_classes());
            for (int c = 0; c < G.num_classes(); ++c) v[c] = values[0][c] * h_traces[c][k];
            long kd = detail::kill_dimension(G, weights, v);
            if (kd > 0) {
                apply_kill(G, weights, kd, piece, mult_in, v);
                ambient = false;
            }
            M.gr[k] = std::move(piece);
            M.mult[k - 1] = std::move(mult_in);
            values[k] = std::move(v);
            continue;
        }

        const int dk = M.gr[k - 1].dim;
        if (dk == 0) {
            M.gr[k].dim = 0;
            M.gr[k].gen_action.assign(G.generators.size(), Matrix<Cyclo>());
            for (int a = 0; a < r; ++a) M.mult[k - 1][a] = Matrix<Cyclo>(0, 0);
            values[k].assign(G.num_classes(), Cyclo(0));
            continue;
        }

        // V = h (x) gr_{k-1}, Koszul relations x_a (x) x_b u - x_b (x) x_a u
        // over the basis of gr_{k-2}.
        RowBasis<Cyclo> rel(r * dk);
        const int dkk = k >= 2 ? M.gr[k - 2].dim : 0;
        for (int u = 0; u < dkk; ++u) {
            for (int a = 0; a < r; ++a)
                for (int b = a + 1; b < r; ++b) {
                    std::vector<Cyclo> row(r * dk, Cyclo(0));
                    for (int i = 0; i < dk; ++i) {
                        const Cyclo& mb = M.mult[k - 2][b].at(i, u);
                        if (!mb.is_zero()) row[a * dk + i] += mb;
                        const Cyclo& ma = M.mult[k - 2][a].at(i, u);
                        if (!ma.is_zero()) row[b * dk + i] -= ma;
                    }
                    rel.insert(std::move(row));
                }
        }

        GradedPiece piece;
        piece.dim = r * dk - rel.dim();
        for (size_t g = 0; g < G.generators.size(); ++g) {
            Matrix<Cyclo> ka = kron(G.generators[g], M.gr[k - 1].gen_action[g]);
            piece.gen_action.push_back(detail::induced_on_quotient(ka, rel, rel));
        }
        std::vector<Matrix<Cyclo>> mult_in(r);
        {
            std::vector<int> reps = rel.nonpivots();
            for (int a = 0; a < r; ++a) {
                Matrix<Cyclo> m(piece.dim, dk);
                for (int i = 0; i < dk; ++i) {
                    std::vector<Cyclo> v(r * dk, Cyclo(0));
                    v[a * dk + i] = Cyclo(1);
                    rel.reduce(v);
                    for (size_t t = 0; t < reps.size(); ++t) m.at(static_cast<int>(t), i) = v[reps[t]];
                }
                mult_in[a] = std::move(m);
            }
        }
        std::vector<Cyclo> v = piece_char(G, piece);
        long kd = detail::kill_dimension(G, weights, v);
        if (kd > 0) apply_kill(G, weights, kd, piece, mult_in, v);
        M.gr[k] = std::move(piece);
        M.mult[k - 1] = std::move(mult_in);
        values[k] = std::move(v);
    }

    assert_equivariant(G, M);

    TraceQuotient out;
    out.cls.by_class.assign(G.num_classes(), QSeries(N));
    Cyclo inv(rat(1, dim_chi));
    for (int k = 0; k <= N; ++k) {
        KSYS_INVARIANT(M.dim_at(k) % dim_chi == 0,
                       "trace quotient dimension is not divisible by dim chi");
        for (int c = 0; c < G.num_classes(); ++c)
            out.cls.by_class[c].at(k) = values[k][c] * inv;
    }
    out.module = std::move(M);
    return out;
}

bool certify_finite(const GradedClass& cls, int buffer) {
    KSYS_REQUIRE(buffer >= 1, Errc::invalid_input, "certification buffer must be >= 1");
    int t = cls.trunc();
    for (int k = std::max(0, t - buffer + 1); k <= t; ++k)
        if (!cls.grade_is_zero(k)) return false;
    return true;
}

}  // namespace ksys
