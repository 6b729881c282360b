#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "pdstile/algebra/char_poly.hpp"
#include "pdstile/algebra/hermite.hpp"
#include "pdstile/algebra/perron.hpp"
#include "pdstile/symbolic/substitution.hpp"

namespace pdstile {

struct CollaredLetter {
    Letter left = 0, core = 0, right = 0;
    friend bool operator==(const CollaredLetter& a, const CollaredLetter& b) {
        return a.left == b.left && a.core == b.core && a.right == b.right;
    }
};

/// One-dimensional Anderson-Putnam complex: one edge per collared letter.
struct APGraph {
    std::size_t vertex_count = 0;
    std::vector<std::size_t> source, target;  // per edge
    std::vector<Letter> base_letter;          // letter of the original substitution under each edge
    std::vector<std::string> edge_names;

    std::size_t edge_count() const { return source.size(); }

    std::size_t component_count() const {
        std::vector<std::size_t> parent(vertex_count);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t comps = vertex_count;
        for (std::size_t e = 0; e < edge_count(); ++e) {
            std::size_t a = find(source[e]), b = find(target[e]);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        return comps;
    }

    bool is_cycle(const std::vector<BigInt>& z) const {
        if (z.size() != edge_count()) return false;
        std::vector<BigInt> boundary(vertex_count, BigInt(0));
        for (std::size_t e = 0; e < z.size(); ++e) {
            boundary[target[e]] += z[e];
            boundary[source[e]] -= z[e];
        }
        for (const auto& b : boundary)
            if (b != 0) return false;
        return true;
    }
};

struct Collaring {
    Substitution collared;                  // substitution on the collared letters
    std::vector<CollaredLetter> letters;    // relative to the previous level's alphabet
    APGraph graph;
};

namespace detail {

inline Collaring collar_once(const Substitution& s, const std::vector<Letter>& base_of) {
    if (!is_primitive(s)) throw DomainError("collar: substitution is not primitive");
    const auto l3 = factor_language(s, 3);
    const auto l4 = factor_language(s, 4);
    std::vector<CollaredLetter> letters;
    std::map<Word, Letter> index;
    std::vector<std::string> names;
    const Alphabet& a = s.alphabet();
    for (const auto& w : l3) {
        index.emplace(w, static_cast<Letter>(letters.size()));
        letters.push_back({w[0], w[1], w[2]});
        names.push_back("[" + format_word(a, w) + "]");
    }
    Alphabet collared_alphabet(names);
    std::vector<Word> images;
    for (const auto& c : letters) {
        const Word& before = s.image(c.left);
        const Word& mid = s.image(c.core);
        const Word& after = s.image(c.right);
        Word img;
        for (std::size_t k = 0; k < mid.size(); ++k) {
            Letter l = k == 0 ? before.back() : mid[k - 1];
            Letter r = k + 1 == mid.size() ? after.front() : mid[k + 1];
            auto it = index.find(Word{l, mid[k], r});
            if (it == index.end()) throw InternalError("collared image leaves the language");
            img.push_back(it->second);
        }
        images.push_back(std::move(img));
    }
    Substitution collared(collared_alphabet, std::move(images));

    // Endpoints: 2e = start of edge e, 2e+1 = end. Glue end(abc) to start(bcd) for abcd in L4.
    const std::size_t ne = letters.size();
    std::vector<std::size_t> parent(2 * ne);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& w : l4) {
        std::size_t e1 = static_cast<std::size_t>(index.at(Word{w[0], w[1], w[2]}));
        std::size_t e2 = static_cast<std::size_t>(index.at(Word{w[1], w[2], w[3]}));
        std::size_t x = find(2 * e1 + 1), y = find(2 * e2);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    APGraph g;
    std::map<std::size_t, std::size_t> vertex_of_root;
    auto vertex = [&](std::size_t endpoint) {
        std::size_t r = find(endpoint);
        auto [it, inserted] = vertex_of_root.emplace(r, vertex_of_root.size());
        return it->second;
    };
    for (std::size_t e = 0; e < ne; ++e) {
        g.source.push_back(vertex(2 * e));
        g.target.push_back(vertex(2 * e + 1));
        g.base_letter.push_back(base_of.at(static_cast<std::size_t>(letters[e].core)));
        g.edge_names.push_back(names[e]);
    }
    g.vertex_count = vertex_of_root.size();
    return Collaring{std::move(collared), std::move(letters), std::move(g)};
}

}  // namespace detail

/// Uncollared complex: one edge per letter, end(a) glued to start(b) for ab in L2.
inline Collaring plain_complex(const Substitution& s) {
    if (!is_primitive(s)) throw DomainError("plain_complex: substitution is not primitive");
    const std::size_t ne = static_cast<std::size_t>(s.size());
    std::vector<std::size_t> parent(2 * ne);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& w : factor_language(s, 2)) {
        std::size_t x = find(2 * static_cast<std::size_t>(w[0]) + 1), y = find(2 * static_cast<std::size_t>(w[1]));
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    APGraph g;
    std::map<std::size_t, std::size_t> vertex_of_root;
    auto vertex = [&](std::size_t endpoint) {
        auto [it, inserted] = vertex_of_root.emplace(find(endpoint), vertex_of_root.size());
        return it->second;
    };
    std::vector<CollaredLetter> letters;
    for (std::size_t e = 0; e < ne; ++e) {
        g.source.push_back(vertex(2 * e));
        g.target.push_back(vertex(2 * e + 1));
        g.base_letter.push_back(static_cast<Letter>(e));
        g.edge_names.push_back(s.alphabet().name(static_cast<Letter>(e)));
    }
    g.vertex_count = vertex_of_root.size();
    return Collaring{s, std::move(letters), std::move(g)};
}

/// Collared substitution and AP graph; `passes` > 1 collars the collared substitution again.
inline Collaring collar(const Substitution& s, int passes = 1) {
    if (passes < 1) throw InputError("collar: at least one pass required");
    std::vector<Letter> base(static_cast<std::size_t>(s.size()));
    std::iota(base.begin(), base.end(), 0);
    Collaring c = detail::collar_once(s, base);
    for (int p = 1; p < passes; ++p) c = detail::collar_once(c.collared, c.graph.base_letter);
    return c;
}

struct CycleBasis {
    IntMatrix cycles;                        // rows are integer cycles over the edges
    std::vector<std::size_t> non_tree_edge;  // the edge each fundamental cycle owns
    std::size_t components = 0;
    std::size_t rank() const { return cycles.rows(); }
};

/// Fundamental cycles of a breadth-first spanning forest.
inline CycleBasis h1_data(const APGraph& g) {
    const std::size_t nv = g.vertex_count, ne = g.edge_count();
    std::vector<std::vector<std::size_t>> incident(nv);
    for (std::size_t e = 0; e < ne; ++e) {
        incident[g.source[e]].push_back(e);
        if (g.target[e] != g.source[e]) incident[g.target[e]].push_back(e);
    }
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent_edge(nv, none), parent(nv, none), depth(nv, 0);
    std::vector<bool> seen(nv, false), tree(ne, false);
    CycleBasis out;
    for (std::size_t root = 0; root < nv; ++root) {
        if (seen[root]) continue;
        ++out.components;
        seen[root] = true;
        std::vector<std::size_t> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t v = queue[qi];
            for (std::size_t e : incident[v]) {
                std::size_t w = g.source[e] == v ? g.target[e] : g.source[e];
                if (seen[w]) continue;
                seen[w] = true;
                tree[e] = true;
                parent_edge[w] = e;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t e = 0; e < ne; ++e) {
        if (tree[e]) continue;
        std::vector<BigInt> z(ne, BigInt(0));
        z[e] += 1;
        // Close the loop with the tree path from target(e) back to source(e).
        std::size_t u = g.target[e], w = g.source[e];
        while (u != w) {
            if (depth[u] >= depth[w]) {
                std::size_t f = parent_edge[u];
                z[f] += g.source[f] == u ? 1 : -1;
                u = parent[u];
            } else {
                std::size_t f = parent_edge[w];
                z[f] += g.target[f] == w ? 1 : -1;
                w = parent[w];
            }
        }
        if (!g.is_cycle(z)) throw InternalError("fundamental cycle has nonzero boundary");
        rows.push_back(std::move(z));
        out.non_tree_edge.push_back(e);
    }
    out.cycles = IntMatrix(rows.size(), ne);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t e = 0; e < ne; ++e) out.cycles(i, e) = rows[i][e];
    return out;
}

/// Edge chain of the collared image of each edge.
inline std::vector<std::vector<BigInt>> edge_images(const Collaring& c) {
    const std::size_t ne = c.graph.edge_count();
    std::vector<std::vector<BigInt>> img(ne, std::vector<BigInt>(ne, BigInt(0)));
    for (std::size_t e = 0; e < ne; ++e)
        for (Letter f : c.collared.image(static_cast<Letter>(e))) img[e][static_cast<std::size_t>(f)] += 1;
    return img;
}

inline std::vector<BigInt> push_forward(const Collaring& c, const std::vector<BigInt>& z) {
    const std::size_t ne = c.graph.edge_count();
    auto img = edge_images(c);
    std::vector<BigInt> out(ne, BigInt(0));
    for (std::size_t e = 0; e < ne; ++e) {
        if (z[e] == 0) continue;
        for (std::size_t f = 0; f < ne; ++f) out[f] += z[e] * img[e][f];
    }
    return out;
}

struct InducedMap {
    IntMatrix matrix;  // column j: coordinates of f(b_j) in the basis
};

inline InducedMap induced_f_star(const Collaring& c, const CycleBasis& basis) {
    const std::size_t k = basis.rank(), ne = c.graph.edge_count();
    if (basis.cycles.cols() != ne) throw InputError("induced_f_star: basis is from a different graph");
    InducedMap m{IntMatrix(k, k)};
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<BigInt> image = push_forward(c, basis.cycles.row(j));
        if (!c.graph.is_cycle(image)) throw InternalError("induced_f_star: image of a cycle is not a cycle");
        std::vector<BigInt> rebuilt(ne, BigInt(0));
        for (std::size_t i = 0; i < k; ++i) {
            BigInt coef = image[basis.non_tree_edge[i]];
            m.matrix(i, j) = coef;
            for (std::size_t e = 0; e < ne; ++e) rebuilt[e] += coef * basis.cycles(i, e);
        }
        if (rebuilt != image) throw InternalError("induced_f_star: image is not in the span of the basis");
    }
    return m;
}

/// Product of the nonzero eigenvalues of an integer matrix, exactly.
inline BigInt nonzero_eigenvalue_product(const IntMatrix& m) {
    if (m.rows() == 0) return 1;
    IntPolynomial p = char_poly(m);
    IntPolynomial q = p.divided_by_x_power(p.zero_root_multiplicity());
    return (q.degree() % 2 == 0) ? q.coeff(0) : BigInt(-q.coeff(0));
}

/// l(z): signed sum of the edge lengths ω_core.
inline NumberFieldElement displacement(const APGraph& g, const PerronData& pd, const std::vector<BigInt>& z) {
    if (!g.is_cycle(z)) throw InputError("displacement: chain is not a cycle");
    NumberFieldElement acc(pd.field, Rational(0));
    for (std::size_t e = 0; e < z.size(); ++e)
        if (z[e] != 0) acc += Rational(z[e]) * pd.omega[static_cast<std::size_t>(g.base_letter[e])];
    return acc;
}

/// A finitely generated Z-submodule of Q(λ), kept in Hermite normal form on scaled coordinates.
class ReturnModule {
public:
    ReturnModule(NumberField field, std::vector<NumberFieldElement> generators)
        : field_(std::move(field)), generators_(std::move(generators)), scale_(1) {
        const std::size_t n = static_cast<std::size_t>(field_.degree());
        for (const auto& g : generators_) {
            if (g.field() != field_) throw DomainError("mixed fields");
            for (const auto& c : g.coords()) scale_ = lcm_of(scale_, c.get_den());
        }
        IntMatrix m(generators_.size(), n);
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            auto c = generators_[i].coords();
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(c[j] * Rational(scale_)).get_num();
        }
        hnf_ = hermite_normal_form(m);
    }

    const NumberField& field() const { return field_; }
    const std::vector<NumberFieldElement>& generators() const { return generators_; }
    std::size_t rank() const { return hnf_.basis.rows(); }

    bool contains(const NumberFieldElement& x) const {
        if (x.field() != field_) throw DomainError("mixed fields");
        std::vector<BigInt> v;
        for (const auto& c : x.coords()) {
            Rational s = c * Rational(scale_);
            if (!is_integer(s)) return false;
            v.push_back(s.get_num());
        }
        return lattice_contains(hnf_, v);
    }

    /// Z-basis read off the Hermite form.
    std::vector<NumberFieldElement> basis() const {
        std::vector<NumberFieldElement> out;
        for (std::size_t i = 0; i < hnf_.basis.rows(); ++i) {
            std::vector<Rational> c;
            for (std::size_t j = 0; j < hnf_.basis.cols(); ++j) c.push_back(Rational(hnf_.basis(i, j)) / Rational(scale_));
            out.emplace_back(field_, RatPolynomial(c));
        }
        return out;
    }

    std::string to_string() const {
        auto b = basis();
        if (b.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " + " : "") + std::string("Z·(") + b[i].to_string() + ")";
        return s;
    }

private:
    NumberField field_;
    std::vector<NumberFieldElement> generators_;
    BigInt scale_;
    HermiteForm hnf_;
};

inline ReturnModule gr_group(const APGraph& g, const CycleBasis& basis, const PerronData& pd) {
    std::vector<NumberFieldElement> gens;
    for (std::size_t i = 0; i < basis.rank(); ++i) gens.push_back(displacement(g, pd, basis.cycles.row(i)));
    return ReturnModule(pd.field, std::move(gens));
}

/// ω-lengths between two occurrences of the same letter inside words of L_depth.
inline std::vector<NumberFieldElement> return_vectors_sample(const Substitution& s, const PerronData& pd, std::size_t depth) {
    if (depth < 3) throw InputError("return_vectors_sample: depth must be at least 3");
    std::vector<NumberFieldElement> out;
    auto key_less = [](const NumberFieldElement& a, const NumberFieldElement& b) { return a.coords() < b.coords(); };
    for (const auto& w : factor_language(s, depth))
        for (std::size_t i = 0; i < w.size(); ++i) {
            NumberFieldElement len(pd.field, Rational(0));
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                len += pd.omega[static_cast<std::size_t>(w[j - 1])];
                if (w[j] == w[i]) out.push_back(len);
            }
        }
    std::sort(out.begin(), out.end(), key_less);
    out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a == b; }), out.end());
    return out;
}

struct ReturnFailure {
    NumberFieldElement v;
    int k;
    NumberFieldElement scaled;  // λ^k v, not in GR
};

struct GrReturnReport {
    std::vector<NumberFieldElement> sample;
    std::vector<ReturnFailure> failures;
    int K = 0;
};

/// Tests λ^k v ∈ GR for every sampled return v and |k| ≤ K.
inline GrReturnReport check_gr_vs_returns(const ReturnModule& gr, const std::vector<NumberFieldElement>& sample,
                                          const NumberFieldElement& lambda, int K) {
    GrReturnReport rep{sample, {}, K};
    for (const auto& v : sample)
        for (int k = -K; k <= K; ++k) {
            NumberFieldElement x = lambda.pow(k) * v;
            if (!gr.contains(x)) rep.failures.push_back({v, k, x});
        }
    return rep;
}

/// Everything the 1D homology route computes for one substitution. GR is l(H1) of the
/// uncollared complex (returns of plain tiles); the collared module is a subgroup of it.
struct APComplexReport {
    PerronData perron;
    Collaring collaring;
    CycleBasis basis;
    InducedMap f_star;
    BigInt eigenvalue_product;
    ReturnModule gr;
    ReturnModule collared_gr;
    GrReturnReport returns;
};

inline APComplexReport analyze_ap_complex(const Substitution& s, int K, std::size_t depth = 8, int passes = 1) {
    PerronData pd = perron_data(s.incidence());
    Collaring c = collar(s, passes);
    CycleBasis b = h1_data(c.graph);
    InducedMap f = induced_f_star(c, b);
    BigInt prod = nonzero_eigenvalue_product(f.matrix);
    Collaring plain = plain_complex(s);
    ReturnModule gr = gr_group(plain.graph, h1_data(plain.graph), pd);
    ReturnModule cgr = gr_group(c.graph, b, pd);
    auto sample = return_vectors_sample(s, pd, depth);
    GrReturnReport rr = check_gr_vs_returns(gr, sample, pd.lambda, K);
    return APComplexReport{pd, std::move(c), std::move(b), std::move(f), prod, std::move(gr), std::move(cgr), std::move(rr)};
}

}  // namespace pdstile
