#include "ksys/group.hpp"

#include <map>
#include <queue>

namespace ksys {

namespace {

struct MatLess {
    bool operator()(const Matrix<Cyclo>& a, const Matrix<Cyclo>& b) const {
        if (a.rows() != b.rows()) return a.rows() < b.rows();
        CycloLess less;
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) {
                if (less(a.at(i, j), b.at(i, j))) return true;
                if (less(b.at(i, j), a.at(i, j))) return false;
            }
        return false;
    }
};

// Raw coefficient comparison requires one conductor across all matrices.
Matrix<Cyclo> embed_matrix(const Matrix<Cyclo>& m, int conductor) {
    Matrix<Cyclo> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).embedded(conductor);
    return r;
}

}  // namespace

struct ElementIndex::Impl {
    std::map<Matrix<Cyclo>, int, MatLess> map;
};

ElementIndex::ElementIndex(const ReflectionGroup& G) : impl_(std::make_shared<Impl>()) {
    for (size_t i = 0; i < G.elements.size(); ++i)
        impl_->map.emplace(G.elements[i], static_cast<int>(i));
}

int ElementIndex::find(const Matrix<Cyclo>& m) const {
    auto it = impl_->map.find(m);
    return it == impl_->map.end() ? -1 : it->second;
}

int ReflectionGroup::element_index(const Matrix<Cyclo>& m) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == m) return static_cast<int>(i);
    return -1;
}

int ReflectionGroup::multiply(int a, int b) const {
    int idx = element_index(elements[a] * elements[b]);
    KSYS_INVARIANT(idx >= 0, "group not closed under multiplication");
    return idx;
}

int ReflectionGroup::element_of_word(const std::vector<int>& word) const {
    Matrix<Cyclo> m = Matrix<Cyclo>::identity(dim_h);
    for (int g : word) {
        KSYS_REQUIRE(g >= 0 && g < static_cast<int>(generators.size()), Errc::schema,
                     "generator index out of range in word");
        m = m * generators[g];
    }
    int idx = element_index(m);
    KSYS_REQUIRE(idx >= 0, Errc::schema, "class representative word leads outside the group");
    return idx;
}

void ReflectionGroup::reorder_classes(const std::vector<int>& new_to_old) {
    KSYS_INVARIANT(static_cast<int>(new_to_old.size()) == num_classes(), "class permutation size");
    std::vector<int> old_to_new(new_to_old.size());
    for (size_t n = 0; n < new_to_old.size(); ++n) old_to_new[new_to_old[n]] = static_cast<int>(n);
    std::vector<int> rep(new_to_old.size());
    std::vector<long> sizes(new_to_old.size());
    for (size_t n = 0; n < new_to_old.size(); ++n) {
        rep[n] = class_rep[new_to_old[n]];
        sizes[n] = class_sizes[new_to_old[n]];
    }
    class_rep = std::move(rep);
    class_sizes = std::move(sizes);
    for (auto& c : class_of) c = old_to_new[c];
}

ReflectionGroup generate_group(const std::vector<Matrix<Cyclo>>& generators, int dim_h,
                               int conductor, long bound) {
    KSYS_REQUIRE(dim_h >= 1, Errc::invalid_generator, "dim_h must be positive");
    for (const auto& g : generators)
        KSYS_REQUIRE(g.rows() == dim_h && g.cols() == dim_h, Errc::invalid_generator,
                     "generator is not a square matrix of size dim_h");

    ReflectionGroup G;
    G.dim_h = dim_h;
    G.conductor = conductor;
    for (const auto& g : generators) G.generators.push_back(embed_matrix(g, conductor));

    std::map<Matrix<Cyclo>, int, MatLess> index;
    Matrix<Cyclo> id = embed_matrix(Matrix<Cyclo>::identity(dim_h), conductor);
    G.elements.push_back(id);
    G.words.push_back({});
    G.bfs_step.push_back({-1, -1});
    index.emplace(id, 0);

    std::vector<Matrix<Cyclo>> gen_inv;
    for (const auto& g : G.generators) {
        try {
            gen_inv.push_back(embed_matrix(inverse_of(g), conductor));
        } catch (const Error&) {
            fail(Errc::invalid_generator, "generator is singular");
        }
    }

    for (size_t cur = 0; cur < G.elements.size(); ++cur) {
        for (size_t g = 0; g < G.generators.size(); ++g) {
            Matrix<Cyclo> next = G.elements[cur] * G.generators[g];
            if (index.count(next)) continue;
            KSYS_REQUIRE(static_cast<long>(G.elements.size()) < bound, Errc::group_too_large,
                         "group closure exceeds bound " + std::to_string(bound));
            int idx = static_cast<int>(G.elements.size());
            index.emplace(next, idx);
            G.elements.push_back(std::move(next));
            std::vector<int> w = G.words[cur];
            w.push_back(static_cast<int>(g));
            G.words.push_back(std::move(w));
            G.bfs_step.push_back({static_cast<int>(cur), static_cast<int>(g)});
        }
    }

    long n = G.order();
    G.inverse.assign(n, -1);
    for (long i = 0; i < n; ++i) {
        Matrix<Cyclo> inv = id;
        const auto& w = G.words[i];
        for (auto it = w.rbegin(); it != w.rend(); ++it) inv = inv * gen_inv[*it];
        auto found = index.find(inv);
        KSYS_REQUIRE(found != index.end(), Errc::invalid_generator,
                     "generated set is not closed under inverses");
        G.inverse[i] = found->second;
    }

    // Conjugacy classes as orbits of x -> g^-1 x g over the generators.
    G.class_of.assign(n, -1);
    for (long start = 0; start < n; ++start) {
        if (G.class_of[start] >= 0) continue;
        int cls = static_cast<int>(G.class_rep.size());
        G.class_rep.push_back(static_cast<int>(start));
        std::queue<int> todo;
        todo.push(static_cast<int>(start));
        G.class_of[start] = cls;
        long size = 0;
        while (!todo.empty()) {
            int x = todo.front();
            todo.pop();
            ++size;
            for (size_t g = 0; g < G.generators.size(); ++g) {
                int y = index.at(gen_inv[g] * G.elements[x] * G.generators[g]);
                if (G.class_of[y] < 0) {
                    G.class_of[y] = cls;
                    todo.push(y);
                }
            }
        }
        G.class_sizes.push_back(size);
    }

    for (long c = 0; c < static_cast<long>(G.class_sizes.size()); ++c)
        KSYS_INVARIANT(n % G.class_sizes[c] == 0, "class size does not divide group order");
    return G;
}

Poly<Cyclo> char_poly_h(const ReflectionGroup& G, int element) {
    const Matrix<Cyclo>& w = G.elements[element];
    int r = G.dim_h;
    // det(1 - q w) by minor expansion memoized over column subsets; the row
    // used for a subset is its popcount minus one.
    std::vector<Poly<Cyclo>> memo(static_cast<size_t>(1) << r);
    memo[0] = Poly<Cyclo>(1);
    for (int mask = 1; mask < (1 << r); ++mask) {
        int i = __builtin_popcount(mask) - 1;
        Poly<Cyclo> det;
        int pos = i;  // expansion along row i: sign (-1)^(i + column position)
        for (int j = 0; j < r; ++j) {
            if (!(mask & (1 << j))) continue;
            Poly<Cyclo> entry = Poly<Cyclo>(Cyclo(i == j ? 1 : 0)) - Poly<Cyclo>::monomial(1, w.at(i, j));
            if (!entry.is_zero()) {
                Poly<Cyclo> term = entry * memo[mask ^ (1 << j)];
                det = (pos % 2 == 0) ? det + term : det - term;
            }
            ++pos;
        }
        memo[mask] = std::move(det);
    }
    return memo[(1 << r) - 1];
}

std::vector<int> cycle_type_from_charpoly(const Poly<Cyclo>& cp, int n) {
    // p = cp * (1 - q) should factor as prod (1 - q^{c_i}) with sum c_i = n.
    Poly<Cyclo> p = cp * (Poly<Cyclo>(1) - Poly<Cyclo>::monomial(1));
    std::vector<int> type;
    int remaining = n;
    while (remaining > 0) {
        bool found = false;
        for (int c = remaining; c >= 1; --c) {
            Poly<Cyclo> f = Poly<Cyclo>(1) - Poly<Cyclo>::monomial(c);
            auto [q, r] = divrem(p, f);
            if (r.is_zero()) {
                type.push_back(c);
                p = std::move(q);
                remaining -= c;
                found = true;
                break;
            }
        }
        KSYS_INVARIANT(found, "characteristic polynomial is not a permutation shape");
    }
    KSYS_INVARIANT(p.degree() == 0, "cycle type extraction left a nontrivial factor");
    return type;
}

}  // namespace ksys
