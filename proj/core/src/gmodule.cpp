#include "ksys/gmodule.hpp"

#include <json.hpp>
#include <mutex>
#include <sstream>

#include "amod_internal.hpp"

namespace ksys {

namespace detail {

namespace {
void gen_exps(int r, int remaining, int pos, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
    if (pos == r - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        gen_exps(r, remaining - e, pos + 1, cur, out);
    }
}
}  // namespace

const MonomialBasis& MonomialBasis::get(int r, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, MonomialBasis> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(r, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MonomialBasis b;
    b.r = r;
    b.k = k;
    std::vector<int> cur(r, 0);
    if (r >= 1) gen_exps(r, k, 0, cur, b.exps);
    for (size_t i = 0; i < b.exps.size(); ++i) b.index.emplace(b.exps[i], static_cast<int>(i));
    return cache.emplace(key, std::move(b)).first->second;
}

std::vector<int> variable_shift(int r, int k, int a) {
    const auto& from = MonomialBasis::get(r, k);
    const auto& to = MonomialBasis::get(r, k + 1);
    std::vector<int> shift(from.size());
    for (int i = 0; i < from.size(); ++i) {
        std::vector<int> e = from.exps[i];
        ++e[a];
        shift[i] = to.index.at(e);
    }
    return shift;
}

Matrix<Cyclo> sym_action(const Matrix<Cyclo>& m, int k, const Matrix<Cyclo>& prev) {
    int r = m.rows();
    const auto& basis = MonomialBasis::get(r, k);
    if (k == 0) {
        Matrix<Cyclo> s(1, 1);
        s.at(0, 0) = Cyclo(1);
        return s;
    }
    const auto& below = MonomialBasis::get(r, k - 1);
    Matrix<Cyclo> s(basis.size(), basis.size());
    for (int j = 0; j < basis.size(); ++j) {
        std::vector<int> e = basis.exps[j];
        int a = 0;
        while (e[a] == 0) ++a;
        --e[a];
        int j_below = below.index.at(e);
        // column_j = (m * x_a) * prev-column of the remainder monomial
        for (int i_below = 0; i_below < below.size(); ++i_below) {
            const Cyclo& c = prev.at(i_below, j_below);
            if (c.is_zero()) continue;
            for (int b = 0; b < r; ++b) {
                const Cyclo& f = m.at(b, a);
                if (f.is_zero()) continue;
                std::vector<int> te = below.exps[i_below];
                ++te[b];
                s.at(basis.index.at(te), j) += f * c;
            }
        }
    }
    return s;
}

IdempotentSlice idempotent_slice(const ReflectionGroup& G, const CharacterTable& T, int chi) {
    long n = G.order();
    ElementIndex index(G);
    Cyclo scale(rat(T.dims[chi], n));
    IdempotentSlice slice;
    slice.basis = RowBasis<Cyclo>(static_cast<int>(n));
    // Column w of the projector: coefficient of u in e_chi * w is
    // (dim chi / |W|) conj(chi(u w^-1)).
    for (long w = 0; w < n; ++w) {
        std::vector<Cyclo> col(n);
        const Matrix<Cyclo>& winv = G.elements[G.inverse[w]];
        for (long u = 0; u < n; ++u) {
            int uwinv = index.find(G.elements[u] * winv);
            KSYS_INVARIANT(uwinv >= 0, "group not closed under multiplication");
            col[u] = scale * T.rows[chi][G.class_of[uwinv]].conj();
        }
        slice.basis.insert(std::move(col));
    }
    KSYS_INVARIANT(slice.basis.dim() == T.dims[chi] * T.dims[chi],
                   "idempotent slice has dimension (dim chi)^2");

    // Left translation by a generator permutes the group-element coordinates.
    for (size_t g = 0; g < G.generators.size(); ++g) {
        std::vector<int> perm(n);  // u -> g*u
        for (long u = 0; u < n; ++u) {
            perm[u] = index.find(G.generators[g] * G.elements[u]);
            KSYS_INVARIANT(perm[u] >= 0, "group not closed under multiplication");
        }
        int d = slice.basis.dim();
        Matrix<Cyclo> act(d, d);
        for (int i = 0; i < d; ++i) {
            std::vector<Cyclo> img(n, Cyclo(0));
            const auto& row = slice.basis.rows()[i];
            for (long u = 0; u < n; ++u) img[perm[u]] = row[u];
            std::vector<Cyclo> coords = slice.basis.coords(img);
            for (int j = 0; j < d; ++j) act.at(j, i) = coords[j];
        }
        slice.gen_action.push_back(std::move(act));
    }
    return slice;
}

Matrix<Cyclo> induced_on_quotient(const Matrix<Cyclo>& A, const RowBasis<Cyclo>& kill_dom,
                                  const RowBasis<Cyclo>& kill_cod) {
    std::vector<int> dom_rep = kill_dom.nonpivots();
    std::vector<int> cod_rep = kill_cod.nonpivots();
    Matrix<Cyclo> out(static_cast<int>(cod_rep.size()), static_cast<int>(dom_rep.size()));
    for (size_t j = 0; j < dom_rep.size(); ++j) {
        std::vector<Cyclo> v = A.col(dom_rep[j]);
        kill_cod.reduce(v);
        for (size_t i = 0; i < cod_rep.size(); ++i) out.at(static_cast<int>(i), static_cast<int>(j)) = v[cod_rep[i]];
    }
    return out;
}

std::vector<Cyclo> sym_trace_series(const Matrix<Cyclo>& m, int N) {
    int r = m.rows();
    std::vector<Cyclo> p(N + 1, Cyclo(0));  // power sums tr(m^j)
    Matrix<Cyclo> pow = Matrix<Cyclo>::identity(r);
    for (int j = 1; j <= N; ++j) {
        pow = pow * m;
        p[j] = pow.trace();
    }
    std::vector<Cyclo> h(N + 1, Cyclo(0));
    h[0] = Cyclo(1);
    for (int k = 1; k <= N; ++k) {
        Cyclo acc(0);
        for (int j = 1; j <= k; ++j) acc += p[j] * h[k - j];
        h[k] = acc * Cyclo(rat(1, k));
    }
    return h;
}

std::vector<Cyclo> kill_weights(const ReflectionGroup& G, const CharacterTable& T,
                                const std::vector<int>& kill) {
    std::vector<Cyclo> w(G.num_classes(), Cyclo(0));
    for (int psi : kill)
        for (int c = 0; c < G.num_classes(); ++c)
            w[c] += Cyclo(Rat(T.dims[psi])) * T.rows[psi][c].conj();
    return w;
}

Matrix<Cyclo> kill_projector(const ReflectionGroup& G, const std::vector<Cyclo>& weights,
                             const GradedPiece& piece) {
    std::vector<Matrix<Cyclo>> acts = all_element_actions(G, piece);
    Matrix<Cyclo> proj(piece.dim, piece.dim);
    for (long el = 0; el < G.order(); ++el) {
        const Cyclo& w = weights[G.class_of[el]];
        if (w.is_zero()) continue;
        proj += acts[el].scaled(w);
    }
    return proj.scaled(Cyclo(rat(1, G.order())));
}

long kill_dimension(const ReflectionGroup& G, const std::vector<Cyclo>& weights,
                    const std::vector<Cyclo>& values) {
    Cyclo acc(0);
    for (int c = 0; c < G.num_classes(); ++c)
        acc += Cyclo(Rat(G.class_sizes[c])) * weights[c] * values[c];
    acc *= Cyclo(rat(1, G.order()));
    KSYS_INVARIANT(acc.is_rational() && rat_is_integer(acc.rational_value()),
                   "killed isotypic dimension is not an integer");
    long d = rat_to_long(acc.rational_value());
    KSYS_INVARIANT(d >= 0, "killed isotypic dimension is negative");
    return d;
}

}  // namespace detail

using detail::MonomialBasis;

int GradedModule::top_nonzero_grade() const {
    for (int k = trunc; k >= 0; --k)
        if (gr[k].dim > 0) return k;
    return -1;
}

Matrix<Cyclo> element_action(const ReflectionGroup& G, const GradedPiece& piece, int element) {
    Matrix<Cyclo> act = Matrix<Cyclo>::identity(piece.dim);
    for (int g : G.words[element]) act = act * piece.gen_action[g];
    return act;
}

std::vector<Matrix<Cyclo>> all_element_actions(const ReflectionGroup& G, const GradedPiece& piece) {
    std::vector<Matrix<Cyclo>> acts(G.order());
    acts[0] = Matrix<Cyclo>::identity(piece.dim);
    for (long el = 1; el < G.order(); ++el) {
        auto [parent, g] = G.bfs_step[el];
        acts[el] = acts[parent] * piece.gen_action[g];
    }
    return acts;
}

void assert_equivariant(const ReflectionGroup& G, const GradedModule& M) {
    for (int k = 0; k < M.trunc; ++k) {
        for (size_t g = 0; g < G.generators.size(); ++g) {
            for (int a = 0; a < G.dim_h; ++a) {
                Matrix<Cyclo> lhs = M.gr[k + 1].gen_action[g] * M.mult[k][a];
                Matrix<Cyclo> rhs(M.dim_at(k + 1), M.dim_at(k));
                for (int b = 0; b < G.dim_h; ++b) {
                    const Cyclo& coeff = G.generators[g].at(b, a);
                    if (coeff.is_zero()) continue;
                    rhs += (M.mult[k][b] * M.gr[k].gen_action[g]).scaled(coeff);
                }
                KSYS_INVARIANT(lhs == rhs, "module violates h-equivariance at grade " +
                                               std::to_string(k) + ", generator " + std::to_string(g));
            }
        }
    }
}

GradedModule ambient_isotypic(const ReflectionGroup& G, const CharacterTable& T, int chi, int N) {
    KSYS_REQUIRE(N >= 0, Errc::invalid_truncation, "truncation must be nonnegative");
    detail::IdempotentSlice slice = detail::idempotent_slice(G, T, chi);
    int d0 = slice.basis.dim();
    int r = G.dim_h;

    GradedModule M;
    M.trunc = N;
    M.meta = "ambient";
    M.chi = chi;
    M.mult_factor = static_cast<int>(T.dims[chi]);
    M.gr.resize(N + 1);
    M.mult.resize(N);

    std::vector<Matrix<Cyclo>> sym_prev(G.generators.size(), Matrix<Cyclo>::identity(1));
    for (int k = 0; k <= N; ++k) {
        const auto& basis = MonomialBasis::get(r, k);
        GradedPiece piece;
        piece.dim = d0 * basis.size();
        for (size_t g = 0; g < G.generators.size(); ++g) {
            Matrix<Cyclo> sym = detail::sym_action(G.generators[g], k, sym_prev[g]);
            piece.gen_action.push_back(kron(slice.gen_action[g], sym));
            sym_prev[g] = std::move(sym);
        }
        M.gr[k] = std::move(piece);
        if (k < N) M.mult[k].assign(r, Matrix<Cyclo>());
        if (k > 0) {
            int s_from = MonomialBasis::get(r, k - 1).size();
            for (int a = 0; a < r; ++a) {
                std::vector<int> shift = detail::variable_shift(r, k - 1, a);
                Matrix<Cyclo> mult(d0 * basis.size(), d0 * s_from);
                for (int i = 0; i < d0; ++i)
                    for (int m = 0; m < s_from; ++m)
                        mult.at(i * basis.size() + shift[m], i * s_from + m) = Cyclo(1);
                M.mult[k - 1][a] = std::move(mult);
            }
        }
    }
    assert_equivariant(G, M);
    return M;
}

RowBasis<Cyclo> isotypic_component(const ReflectionGroup& G, const CharacterTable& T,
                                   const GradedModule& M, int k, int psi) {
    KSYS_REQUIRE(k >= 0 && k <= M.trunc, Errc::invalid_truncation, "grade out of range");
    Matrix<Cyclo> proj = detail::kill_projector(G, detail::kill_weights(G, T, {psi}), M.gr[k]);
    RowBasis<Cyclo> image(M.dim_at(k));
    for (int j = 0; j < proj.cols(); ++j) image.insert(proj.col(j));
    return image;
}

GradedSubspace empty_subspace(const GradedModule& M) {
    GradedSubspace S;
    for (int k = 0; k <= M.trunc; ++k) S.piece.emplace_back(M.dim_at(k));
    return S;
}

GradedSubspace generated_submodule(const GradedModule& M, const GradedSubspace& seeds) {
    GradedSubspace S;
    S.piece.reserve(M.trunc + 1);
    for (int k = 0; k <= M.trunc; ++k) {
        RowBasis<Cyclo> basis(M.dim_at(k));
        if (k > 0) {
            for (const auto& mult_a : M.mult[k - 1])
                for (const auto& row : S.piece[k - 1].rows()) basis.insert(mult_a.apply(row));
        }
        for (const auto& row : seeds.piece[k].rows()) basis.insert(row);
        S.piece.push_back(std::move(basis));
    }
    return S;
}

GradedModule quotient_module(const ReflectionGroup& G, const GradedModule& M,
                             const GradedSubspace& S) {
    GradedModule Q;
    Q.trunc = M.trunc;
    Q.meta = "quotient";
    Q.chi = M.chi;
    Q.mult_factor = M.mult_factor;
    Q.gr.resize(M.trunc + 1);
    Q.mult.resize(M.trunc);
    for (int k = 0; k <= M.trunc; ++k) {
        GradedPiece piece;
        piece.dim = M.dim_at(k) - S.piece[k].dim();
        for (size_t g = 0; g < G.generators.size(); ++g)
            piece.gen_action.push_back(
                detail::induced_on_quotient(M.gr[k].gen_action[g], S.piece[k], S.piece[k]));
        Q.gr[k] = std::move(piece);
        if (k > 0) {
            Q.mult[k - 1].clear();
            for (int a = 0; a < G.dim_h; ++a)
                Q.mult[k - 1].push_back(
                    detail::induced_on_quotient(M.mult[k - 1][a], S.piece[k - 1], S.piece[k]));
        }
    }
    assert_equivariant(G, Q);
    return Q;
}

GradedClass graded_character(const ReflectionGroup& G, const GradedModule& M) {
    GradedClass cls;
    cls.by_class.assign(G.num_classes(), QSeries(M.trunc));
    for (int k = 0; k <= M.trunc; ++k)
        for (int c = 0; c < G.num_classes(); ++c)
            cls.by_class[c].at(k) = element_action(G, M.gr[k], G.class_rep[c]).trace();
    return cls;
}

std::string module_to_json(const GradedModule& M) {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["trunc"] = M.trunc;
    j["meta"] = M.meta;
    j["mult_factor"] = M.mult_factor;
    auto mat_json = [](const Matrix<Cyclo>& m) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < m.rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int c = 0; c < m.cols(); ++c) {
                const Cyclo& x = m.at(i, c);
                if (x.is_rational()) {
                    row.push_back(rat_str(x.rational_value()));
                } else {
                    nlohmann::ordered_json o;
                    o["conductor"] = x.conductor();
                    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
                    for (const auto& cf : x.coeffs()) {
                        coeffs.push_back(nlohmann::ordered_json::array(
                            {cf.get_num().get_str(), cf.get_den().get_str()}));
                    }
                    o["coeffs"] = coeffs;
                    row.push_back(o);
                }
            }
            rows.push_back(row);
        }
        return rows;
    };
    j["grades"] = nlohmann::ordered_json::array();
    for (int k = 0; k <= M.trunc; ++k) {
        nlohmann::ordered_json gj;
        gj["dim"] = M.dim_at(k);
        gj["gen_action"] = nlohmann::ordered_json::array();
        for (const auto& a : M.gr[k].gen_action) gj["gen_action"].push_back(mat_json(a));
        if (k < M.trunc) {
            gj["mult"] = nlohmann::ordered_json::array();
            for (const auto& m : M.mult[k]) gj["mult"].push_back(mat_json(m));
        }
        j["grades"].push_back(gj);
    }
    return j.dump(2);
}

}  // namespace ksys
