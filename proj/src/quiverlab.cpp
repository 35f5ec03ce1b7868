#include "hsing/quiverlab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hsing {

// ------------------------------------------------------------------ quivers

std::vector<std::size_t> Quiver::topological_order() const {
    std::vector<std::size_t> indeg(num_vertices, 0), order;
    for (auto [s, t] : arrows) {
        if (s >= num_vertices || t >= num_vertices) throw std::invalid_argument("arrow endpoint out of range");
        ++indeg[t];
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = num_vertices; v-- > 0;)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (std::size_t a = arrows.size(); a-- > 0;)
            if (arrows[a].first == v && --indeg[arrows[a].second] == 0) ready.push_back(arrows[a].second);
    }
    if (order.size() != num_vertices) throw std::invalid_argument("quiver has a directed cycle");
    return order;
}

bool Quiver::is_acyclic() const {
    try {
        topological_order();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

Quiver ade_quiver(const ADEType& t) {
    if (!t.is_legal()) throw std::invalid_argument("illegal ADE type " + t.to_string());
    Quiver q;
    q.num_vertices = static_cast<std::size_t>(t.index);
    if (t.family == 'A') {
        for (std::size_t i = 0; i + 1 < q.num_vertices; ++i) q.arrows.push_back({i, i + 1});
    } else if (t.family == 'D') {
        // 1 -> 2, 2 -> 3, 2 -> 4
        q.arrows = {{0, 1}, {1, 2}, {1, 3}};
    } else {
        // 1 -> 2 -> 3 -> 5 -> ... -> n with the branch 3 -> 4
        q.arrows = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
        for (std::size_t i = 4; i + 1 < q.num_vertices; ++i) q.arrows.push_back({i, i + 1});
    }
    return q;
}

IntMatrix cartan_matrix(const Quiver& q) {
    const auto order = q.topological_order();
    const std::size_t n = q.num_vertices;
    IntMatrix c(n, n);
    // paths(i, j) = [i == j] + sum over arrows i -> k of paths(k, j)
    for (std::size_t idx = n; idx-- > 0;) {
        const std::size_t i = order[idx];
        c(i, i) = 1;
        for (auto [s, t] : q.arrows)
            if (s == i)
                for (std::size_t j = 0; j < n; ++j) c(i, j) += c(t, j);
    }
    return c;
}

QuiverAlgebraModel quiver_model(const ADEType& t) {
    QuiverAlgebraModel m;
    m.quiver = ade_quiver(t);
    m.cartan = cartan_matrix(m.quiver);
    m.loewy_length = loewy_length(m.quiver);
    m.label = t.to_string();
    return m;
}

static QMatrix to_q(const IntMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

std::vector<Integer> coxeter_polynomial(const IntMatrix& cartan) {
    const QMatrix c = to_q(cartan);
    const auto inv_t = c.transpose().inverse();
    if (!inv_t) throw std::invalid_argument("Cartan matrix is singular");
    const QMatrix phi = -((*inv_t) * c);
    std::vector<Integer> out;
    for (const auto& coeff : phi.charpoly()) {
        const auto z = as_integer(coeff);
        if (!z) throw std::logic_error("Coxeter polynomial has a non-integral coefficient");
        out.push_back(*z);
    }
    return out;
}

std::string polynomial_to_string(const std::vector<Integer>& a) {
    std::string s;
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] == 0) continue;
        const Integer mag = abs(a[k]);
        if (s.empty())
            s += a[k] < 0 ? "-" : "";
        else
            s += a[k] < 0 ? " - " : " + ";
        if (mag != 1 || k == 0) s += mag.get_str();
        if (k >= 1) s += "x";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

IntMatrix tensor_cartan(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) throw std::invalid_argument("tensor_cartan: square inputs required");
    return a.kron(b);
}

long loewy_length(const Quiver& q) {
    const auto order = q.topological_order();
    if (q.num_vertices == 0) return 0;
    std::vector<long> longest(q.num_vertices, 0);  // longest path ending at v
    for (std::size_t v : order)
        for (auto [s, t] : q.arrows)
            if (s == v) longest[t] = std::max(longest[t], longest[v] + 1);
    return *std::max_element(longest.begin(), longest.end()) + 1;
}

long loewy_length_tensor(const std::vector<long>& lengths) {
    if (lengths.empty()) return 1;  // the ground field
    long total = 0;
    for (long l : lengths) {
        if (l <= 0) return 0;  // a zero factor kills the product
        total += l;
    }
    return total - static_cast<long>(lengths.size() - 1);
}

long ext_simples(const Quiver& q, std::size_t v, std::size_t w, int t) {
    if (v >= q.num_vertices || w >= q.num_vertices) throw std::out_of_range("vertex out of range");
    if (t == 0) return v == w ? 1 : 0;
    if (t == 1) {
        long n = 0;
        for (auto [s, tg] : q.arrows)
            if (s == w && tg == v) ++n;
        return n;
    }
    return 0;
}

// ---------------------------------------------------------- representations

void Representation::validate() const {
    if (dims.size() != quiver.num_vertices) throw std::invalid_argument("dimension vector length mismatch");
    if (maps.size() != quiver.arrows.size()) throw std::invalid_argument("one matrix per arrow required");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        auto [s, t] = quiver.arrows[a];
        if (maps[a].rows() != dims[s] || maps[a].cols() != dims[t])
            throw std::invalid_argument("arrow " + std::to_string(a) + " matrix has the wrong shape");
    }
}

std::size_t Representation::total_dim() const {
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
}

Representation zero_rep(const Quiver& q) {
    Representation r;
    r.quiver = q;
    r.dims.assign(q.num_vertices, 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) r.maps.emplace_back(0, 0);
    return r;
}

Representation simple_rep(const Quiver& q, std::size_t v) {
    if (v >= q.num_vertices) throw std::out_of_range("vertex out of range");
    Representation r = zero_rep(q);
    r.dims[v] = 1;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) r.maps[a] = QMatrix(r.dims[q.arrows[a].first], r.dims[q.arrows[a].second]);
    return r;
}

Representation projective_rep(const Quiver& q, std::size_t v) {
    if (v >= q.num_vertices) throw std::out_of_range("vertex out of range");
    q.topological_order();
    // Basis at vertex y: paths y -> v, as arrow sequences.
    using Path = std::vector<std::size_t>;
    std::vector<std::vector<Path>> paths(q.num_vertices);
    std::function<void(std::size_t, Path&)> extend = [&](std::size_t y, Path& p) {
        // p is a path from y to v; prepend arrows ending at y.
        paths[y].push_back(p);
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].second == y) {
                p.insert(p.begin(), a);
                extend(q.arrows[a].first, p);
                p.erase(p.begin());
            }
    };
    Path empty;
    extend(v, empty);
    std::vector<std::map<Path, std::size_t>> index(q.num_vertices);
    for (std::size_t y = 0; y < q.num_vertices; ++y) {
        std::sort(paths[y].begin(), paths[y].end());
        for (std::size_t k = 0; k < paths[y].size(); ++k) index[y][paths[y][k]] = k;
    }
    Representation r;
    r.quiver = q;
    for (std::size_t y = 0; y < q.num_vertices; ++y) r.dims.push_back(paths[y].size());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [i, j] = q.arrows[a];
        QMatrix m(r.dims[i], r.dims[j]);
        // path p from j to v maps to a.p from i to v
        for (std::size_t k = 0; k < paths[j].size(); ++k) {
            Path ap = paths[j][k];
            ap.insert(ap.begin(), a);
            m(index[i].at(ap), k) = 1;
        }
        r.maps.push_back(std::move(m));
    }
    return r;
}

Representation direct_sum(const Representation& x, const Representation& y) {
    if (!(x.quiver == y.quiver)) throw std::invalid_argument("direct_sum: quiver mismatch");
    Representation r;
    r.quiver = x.quiver;
    for (std::size_t v = 0; v < x.dims.size(); ++v) r.dims.push_back(x.dims[v] + y.dims[v]);
    for (std::size_t a = 0; a < x.maps.size(); ++a) {
        const QMatrix& p = x.maps[a];
        const QMatrix& q = y.maps[a];
        QMatrix m(p.rows() + q.rows(), p.cols() + q.cols());
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) m(i, j) = p(i, j);
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j) m(p.rows() + i, p.cols() + j) = q(i, j);
        r.maps.push_back(std::move(m));
    }
    return r;
}

static bool same_rep(const Representation& a, const Representation& b) {
    return a.quiver == b.quiver && a.dims == b.dims && a.maps == b.maps;
}

namespace {

// delta : (+)_v Hom(M_v, N_v) -> (+)_{a: i -> j} Hom(M_j, N_i),
// (f_v) |-> f_i M_a - N_a f_j. Its kernel is Hom(M, N), its cokernel Ext^1(M, N).
struct Delta {
    QMatrix matrix;
    std::vector<std::size_t> vertex_offset;
    std::vector<std::size_t> arrow_offset;
};

Delta build_delta(const Representation& m, const Representation& n) {
    if (!(m.quiver == n.quiver)) throw std::invalid_argument("representations live on different quivers");
    m.validate();
    n.validate();
    const Quiver& q = m.quiver;
    Delta d;
    std::size_t cols = 0, rows = 0;
    for (std::size_t v = 0; v < q.num_vertices; ++v) {
        d.vertex_offset.push_back(cols);
        cols += n.dims[v] * m.dims[v];
    }
    for (auto [i, j] : q.arrows) {
        d.arrow_offset.push_back(rows);
        rows += n.dims[i] * m.dims[j];
    }
    d.matrix = QMatrix(rows, cols);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [i, j] = q.arrows[a];
        const QMatrix& ma = m.maps[a];  // m_i x m_j
        const QMatrix& na = n.maps[a];  // n_i x n_j
        for (std::size_t r = 0; r < n.dims[i]; ++r)
            for (std::size_t c = 0; c < m.dims[j]; ++c) {
                const std::size_t row = d.arrow_offset[a] + r * m.dims[j] + c;
                // (f_i M_a)(r, c) = sum_k f_i(r, k) M_a(k, c)
                for (std::size_t k = 0; k < m.dims[i]; ++k)
                    if (ma(k, c) != 0) d.matrix(row, d.vertex_offset[i] + r * m.dims[i] + k) += ma(k, c);
                // (N_a f_j)(r, c) = sum_k N_a(r, k) f_j(k, c)
                for (std::size_t k = 0; k < n.dims[j]; ++k)
                    if (na(r, k) != 0) d.matrix(row, d.vertex_offset[j] + k * m.dims[j] + c) -= na(r, k);
            }
    }
    return d;
}

SparseVector to_sparse_column(const QMatrix& m, std::size_t col) {
    SparseVector v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, col) != 0) v[i] = m(i, col);
    return v;
}

SparseVector flatten_cocycle(const Representation& m, const Representation& n, const ExtCocycle& c) {
    const Quiver& q = m.quiver;
    if (c.size() != q.arrows.size()) throw std::invalid_argument("cocycle needs one matrix per arrow");
    SparseVector v;
    std::size_t off = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [i, j] = q.arrows[a];
        if (c[a].rows() != n.dims[i] || c[a].cols() != m.dims[j])
            throw std::invalid_argument("cocycle block has the wrong shape");
        for (std::size_t r = 0; r < n.dims[i]; ++r)
            for (std::size_t col = 0; col < m.dims[j]; ++col) {
                if (c[a](r, col) != 0) v[off] = c[a](r, col);
                ++off;
            }
    }
    return v;
}

}  // namespace

bool is_rep_morphism(const Representation& m, const Representation& n, const RepMorphism& f) {
    if (!(m.quiver == n.quiver) || f.size() != m.quiver.num_vertices) return false;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v].rows() != n.dims[v] || f[v].cols() != m.dims[v]) return false;
    for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
        auto [i, j] = m.quiver.arrows[a];
        if (!(f[i] * m.maps[a] == n.maps[a] * f[j])) return false;
    }
    return true;
}

HomSpace rep_hom(const Representation& m, const Representation& n) {
    const Delta d = build_delta(m, n);
    const QMatrix ker = d.matrix.nullspace();
    HomSpace h;
    h.dimension = ker.cols();
    const Quiver& q = m.quiver;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        RepMorphism f;
        for (std::size_t v = 0; v < q.num_vertices; ++v) {
            QMatrix fv(n.dims[v], m.dims[v]);
            for (std::size_t r = 0; r < n.dims[v]; ++r)
                for (std::size_t c = 0; c < m.dims[v]; ++c) fv(r, c) = ker(d.vertex_offset[v] + r * m.dims[v] + c, k);
            f.push_back(std::move(fv));
        }
        h.basis.push_back(std::move(f));
    }
    return h;
}

ExtSpace ext1(const Representation& m, const Representation& n) {
    const Delta d = build_delta(m, n);
    SparseEchelon image;
    for (std::size_t c = 0; c < d.matrix.cols(); ++c) image.insert(to_sparse_column(d.matrix, c));
    ExtSpace e;
    const Quiver& q = m.quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [i, j] = q.arrows[a];
        for (std::size_t r = 0; r < n.dims[i]; ++r)
            for (std::size_t c = 0; c < m.dims[j]; ++c) {
                const std::size_t row = d.arrow_offset[a] + r * m.dims[j] + c;
                if (!image.insert(SparseVector{{row, Rational(1)}})) continue;
                ExtCocycle xi;
                for (std::size_t b = 0; b < q.arrows.size(); ++b)
                    xi.emplace_back(n.dims[q.arrows[b].first], m.dims[q.arrows[b].second]);
                xi[a](r, c) = 1;
                e.basis.push_back(std::move(xi));
            }
    }
    e.dimension = e.basis.size();
    return e;
}

bool ext_class_is_zero(const Representation& m, const Representation& n, const ExtCocycle& c) {
    const Delta d = build_delta(m, n);
    SparseEchelon image;
    for (std::size_t col = 0; col < d.matrix.cols(); ++col) image.insert(to_sparse_column(d.matrix, col));
    return image.contains(flatten_cocycle(m, n, c));
}

// ------------------------------------------------------------ derived model

namespace {

DerivedBlock zero_block(const Representation& x, int sx, const Representation& y, int sy) {
    DerivedBlock b;
    const Quiver& q = x.quiver;
    if (sy == sx) {
        b.kind = DerivedBlock::Kind::hom;
        for (std::size_t v = 0; v < q.num_vertices; ++v) b.hom.emplace_back(y.dims[v], x.dims[v]);
    } else if (sy == sx + 1) {
        b.kind = DerivedBlock::Kind::ext;
        for (auto [i, j] : q.arrows) b.ext.emplace_back(y.dims[i], x.dims[j]);
    }
    return b;
}

void add_into(std::vector<QMatrix>& acc, const std::vector<QMatrix>& term) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = acc[k] + term[k];
}

void check_morphism(const DerivedMorphism& f) {
    const auto& src = f.source.summands;
    const auto& tgt = f.target.summands;
    if (f.blocks.size() != tgt.size()) throw std::invalid_argument("morphism needs one block row per target summand");
    for (std::size_t t = 0; t < tgt.size(); ++t) {
        if (f.blocks[t].size() != src.size()) throw std::invalid_argument("morphism block row has the wrong length");
        for (std::size_t s = 0; s < src.size(); ++s) {
            const auto& [x, sx] = src[s];
            const auto& [y, sy] = tgt[t];
            const DerivedBlock& b = f.blocks[t][s];
            const DerivedBlock shape = zero_block(x, sx, y, sy);
            if (b.kind == DerivedBlock::Kind::zero) continue;
            if (b.kind != shape.kind) throw std::invalid_argument("block kind does not match the shift difference");
            if (b.kind == DerivedBlock::Kind::hom && !is_rep_morphism(x, y, b.hom))
                throw std::invalid_argument("hom block is not a representation morphism");
            if (b.kind == DerivedBlock::Kind::ext) flatten_cocycle(x, y, b.ext);
        }
    }
}

// Block with explicit zero matrices in place of Kind::zero where the shifts allow a map.
DerivedBlock materialize(const DerivedBlock& b, const Representation& x, int sx, const Representation& y, int sy) {
    if (b.kind != DerivedBlock::Kind::zero) return b;
    return zero_block(x, sx, y, sy);
}

}  // namespace

DerivedMorphism derived_compose(const DerivedMorphism& g, const DerivedMorphism& f) {
    check_morphism(f);
    check_morphism(g);
    const auto& xs = f.source.summands;
    const auto& ys = f.target.summands;
    const auto& zs = g.target.summands;
    if (g.source.summands.size() != ys.size()) throw std::invalid_argument("derived_compose: objects do not match");
    for (std::size_t k = 0; k < ys.size(); ++k)
        if (!same_rep(ys[k].first, g.source.summands[k].first) || ys[k].second != g.source.summands[k].second)
            throw std::invalid_argument("derived_compose: objects do not match");
    DerivedMorphism out;
    out.source = f.source;
    out.target = g.target;
    const Quiver* q = nullptr;
    for (std::size_t z = 0; z < zs.size(); ++z) {
        out.blocks.emplace_back();
        for (std::size_t x = 0; x < xs.size(); ++x) {
            const auto& [X, sx] = xs[x];
            const auto& [Z, sz] = zs[z];
            q = &X.quiver;
            DerivedBlock acc = zero_block(X, sx, Z, sz);
            for (std::size_t y = 0; y < ys.size(); ++y) {
                const auto& [Y, sy] = ys[y];
                const DerivedBlock fb = materialize(f.blocks[y][x], X, sx, Y, sy);
                const DerivedBlock gb = materialize(g.blocks[z][y], Y, sy, Z, sz);
                if (fb.kind == DerivedBlock::Kind::zero || gb.kind == DerivedBlock::Kind::zero) continue;
                using K = DerivedBlock::Kind;
                if (fb.kind == K::hom && gb.kind == K::hom) {
                    std::vector<QMatrix> term;
                    for (std::size_t v = 0; v < q->num_vertices; ++v) term.push_back(gb.hom[v] * fb.hom[v]);
                    add_into(acc.hom, term);
                } else if (fb.kind == K::hom && gb.kind == K::ext) {
                    // xi_a f_j
                    std::vector<QMatrix> term;
                    for (std::size_t a = 0; a < q->arrows.size(); ++a)
                        term.push_back(gb.ext[a] * fb.hom[q->arrows[a].second]);
                    add_into(acc.ext, term);
                } else if (fb.kind == K::ext && gb.kind == K::hom) {
                    // g_i xi_a
                    std::vector<QMatrix> term;
                    for (std::size_t a = 0; a < q->arrows.size(); ++a)
                        term.push_back(gb.hom[q->arrows[a].first] * fb.ext[a]);
                    add_into(acc.ext, term);
                }
                // Ext^1 o Ext^1 lands in Ext^2 = 0.
            }
            out.blocks.back().push_back(std::move(acc));
        }
    }
    return out;
}

bool derived_is_zero(const DerivedMorphism& f) {
    check_morphism(f);
    for (std::size_t t = 0; t < f.blocks.size(); ++t)
        for (std::size_t s = 0; s < f.blocks[t].size(); ++s) {
            const DerivedBlock& b = f.blocks[t][s];
            if (b.kind == DerivedBlock::Kind::hom) {
                for (const auto& m : b.hom)
                    if (!m.is_zero()) return false;
            } else if (b.kind == DerivedBlock::Kind::ext) {
                if (!ext_class_is_zero(f.source.summands[s].first, f.target.summands[t].first, b.ext)) return false;
            }
        }
    return true;
}

bool is_ghost(const DerivedMorphism& f, const DerivedObject& generator) {
    check_morphism(f);
    const auto& src = f.source.summands;
    for (const auto& [g, gshift] : generator.summands) {
        (void)gshift;  // every shift of G is tested, so its own shift is irrelevant
        std::vector<int> shifts;
        for (const auto& [x, sx] : src) {
            shifts.push_back(sx);
            shifts.push_back(sx - 1);
        }
        std::sort(shifts.begin(), shifts.end());
        shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
        for (int t : shifts) {
            DerivedObject gt;
            gt.summands.push_back({g, t});
            for (std::size_t k = 0; k < src.size(); ++k) {
                const auto& [x, sx] = src[k];
                std::vector<DerivedBlock> singles;
                if (sx == t) {
                    for (auto& h : rep_hom(g, x).basis) {
                        DerivedBlock b;
                        b.kind = DerivedBlock::Kind::hom;
                        b.hom = std::move(h);
                        singles.push_back(std::move(b));
                    }
                } else if (sx == t + 1) {
                    for (auto& e : ext1(g, x).basis) {
                        DerivedBlock b;
                        b.kind = DerivedBlock::Kind::ext;
                        b.ext = std::move(e);
                        singles.push_back(std::move(b));
                    }
                }
                for (auto& b : singles) {
                    DerivedMorphism probe;
                    probe.source = gt;
                    probe.target = f.source;
                    for (std::size_t r = 0; r < src.size(); ++r)
                        probe.blocks.push_back({r == k ? b : DerivedBlock{}});
                    if (!derived_is_zero(derived_compose(f, probe))) return false;
                }
            }
        }
    }
    return true;
}

long ghost_lower_bound(const GhostCertificate& cert) {
    if (cert.chain.empty()) throw std::invalid_argument("ghost certificate needs at least one map (length >= 1)");
    for (std::size_t k = 0; k < cert.chain.size(); ++k)
        if (!is_ghost(cert.chain[k], cert.generator))
            throw std::invalid_argument("map f_" + std::to_string(k + 1) + " is not a ghost for the generator");
    DerivedMorphism composite = cert.chain.front();
    for (std::size_t k = 1; k < cert.chain.size(); ++k) composite = derived_compose(cert.chain[k], composite);
    if (derived_is_zero(composite)) throw std::invalid_argument("composite of the ghost chain is zero");
    return cert.length() - 1;
}

// ----------------------------------------------------------- split_complex

std::vector<std::pair<Representation, int>> split_complex(const ComplexOfReps& c) {
    const std::size_t len = c.terms.size();
    if (len == 0) return {};
    if (c.differentials.size() + 1 != len) throw std::invalid_argument("complex needs terms.size() - 1 differentials");
    const Quiver& q = c.terms.front().quiver;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        if (!is_rep_morphism(c.terms[i], c.terms[i + 1], c.differentials[i]))
            throw std::invalid_argument("differential d^" + std::to_string(c.lowest_degree + static_cast<int>(i)) +
                                        " is not a representation morphism");
        if (i + 2 < len)
            for (std::size_t v = 0; v < q.num_vertices; ++v)
                if (!(c.differentials[i + 1][v] * c.differentials[i][v]).is_zero())
                    throw std::invalid_argument("differential does not square to zero");
    }

    std::vector<std::pair<Representation, int>> out;
    for (std::size_t i = 0; i < len; ++i) {
        const Representation& term = c.terms[i];
        // Per vertex: columns of `sub` span B = im d^{i-1}, columns of `hb` complete it to Z = ker d^i.
        std::vector<QMatrix> bcols(q.num_vertices), hcols(q.num_vertices);
        for (std::size_t v = 0; v < q.num_vertices; ++v) {
            const std::size_t n = term.dims[v];
            QMatrix z = i + 1 < len ? c.differentials[i][v].nullspace() : QMatrix::identity(n);
            SparseEchelon ech;
            std::vector<std::size_t> bkeep, hkeep;
            QMatrix b = i > 0 ? c.differentials[i - 1][v] : QMatrix(n, 0);
            for (std::size_t k = 0; k < b.cols(); ++k)
                if (ech.insert(to_sparse_column(b, k))) bkeep.push_back(k);
            for (std::size_t k = 0; k < z.cols(); ++k)
                if (ech.insert(to_sparse_column(z, k))) hkeep.push_back(k);
            bcols[v] = QMatrix(n, bkeep.size());
            hcols[v] = QMatrix(n, hkeep.size());
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t k = 0; k < bkeep.size(); ++k) bcols[v](r, k) = b(r, bkeep[k]);
                for (std::size_t k = 0; k < hkeep.size(); ++k) hcols[v](r, k) = z(r, hkeep[k]);
            }
        }
        Representation h;
        h.quiver = q;
        for (std::size_t v = 0; v < q.num_vertices; ++v) h.dims.push_back(hcols[v].cols());
        if (h.total_dim() == 0) continue;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            auto [src, tgt] = q.arrows[a];
            QMatrix m(h.dims[src], h.dims[tgt]);
            const QMatrix basis = QMatrix::hcat(bcols[src], hcols[src]);
            const QMatrix image = term.maps[a] * hcols[tgt];
            for (std::size_t k = 0; k < image.cols(); ++k) {
                std::vector<Rational> rhs(image.rows());
                for (std::size_t r = 0; r < image.rows(); ++r) rhs[r] = image(r, k);
                const auto x = basis.solve(rhs);
                if (!x) throw std::logic_error("cocycle image left the cycle space");
                for (std::size_t r = 0; r < h.dims[src]; ++r) m(r, k) = (*x)[bcols[src].cols() + r];
            }
            h.maps.push_back(std::move(m));
        }
        const int degree = c.lowest_degree + static_cast<int>(i);
        out.push_back({std::move(h), -degree});
    }
    return out;
}

}  // namespace hsing
