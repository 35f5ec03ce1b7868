#include "hsing/mfengine.hpp"

#include "hsing/linalg.hpp"
#include "hsing/quiverlab.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hsing {

// ---------------------------------------------------------------- the ring

GradedPotential::GradedPotential(GradedRingSpec spec, Poly w) : spec_(std::move(spec)), w_(std::move(w)) {
    spec_.validate();
    if (w_.is_zero()) throw std::invalid_argument("potential must be nonzero");
    for (const auto& [m, c] : w_.terms())
        if (m.size() != spec_.num_variables()) throw std::invalid_argument("potential has the wrong number of variables");
    if (!is_homogeneous(w_, spec_.potential_degree))
        throw std::invalid_argument("potential is not homogeneous of the potential degree");
}

GroupElement GradedPotential::monomial_degree(const Monomial& m) const {
    const auto& g = group();
    IntVector v(g.num_generators(), Integer(0));
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        const auto& a = spec_.generator_degrees[k].coordinates;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += a[i] * m[k];
    }
    return g.element(std::move(v));
}

bool GradedPotential::is_homogeneous(const Poly& p, const GroupElement& deg) const {
    for (const auto& [m, c] : p.terms()) {
        if (m.size() != num_variables()) return false;
        if (!(monomial_degree(m) == deg)) return false;
    }
    return true;
}

std::vector<Monomial> GradedPotential::monomials_of_degree(const GroupElement& deg) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (auto it = cache_->monomials.find(deg.canonical); it != cache_->monomials.end()) return it->second;
    }
    const Integer target = grading().degree(deg);
    std::vector<Monomial> out;
    if (target >= 0) {
        const std::size_t n = num_variables();
        std::vector<Integer> w;
        for (const auto& a : spec_.generator_degrees) w.push_back(grading().degree(a));
        Monomial m(n, 0);
        // Integer knapsack on positive degrees, then an exact check in the group.
        std::function<void(std::size_t, Integer)> rec = [&](std::size_t k, Integer remaining) {
            if (k == n) {
                if (remaining == 0 && monomial_degree(m) == deg) out.push_back(m);
                return;
            }
            for (int e = 0; Integer(e) * w[k] <= remaining; ++e) {
                m[k] = e;
                rec(k + 1, remaining - Integer(e) * w[k]);
            }
            m[k] = 0;
        };
        rec(0, target);
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->monomials.emplace(deg.canonical, out);
    return out;
}

static bool same_ring(const GradedPotential& a, const GradedPotential& b) {
    const auto& ga = a.group();
    const auto& gb = b.group();
    if (ga.num_generators() != gb.num_generators() || !(ga.relations() == gb.relations())) return false;
    if (a.num_variables() != b.num_variables() || !(a.potential() == b.potential())) return false;
    if (!(a.d() == b.d())) return false;
    for (std::size_t k = 0; k < a.num_variables(); ++k)
        if (!(a.spec().generator_degrees[k] == b.spec().generator_degrees[k])) return false;
    return true;
}

GradedPotential one_variable_potential(long d) {
    if (d < 1) throw std::invalid_argument("exponent must be >= 1");
    return GradedPotential(make_spec(pointed_integers(d), {{1}}, {d}), Poly::variable_power(0, static_cast<int>(d), 1));
}

// --------------------------------------------------------- factorizations

GradedFreeModule twisted(const GradedFreeModule& m, const FGAbelianGroup& g, const GroupElement& a) {
    GradedFreeModule out;
    for (const auto& t : m.twists) out.twists.push_back(g.add(t, a));
    return out;
}

static void check_map(const GradedPotential& ring, const GradedFreeModule& src, const GradedFreeModule& tgt,
                      const PolyMatrix& phi, const std::string& name) {
    if (phi.rows() != tgt.rank() || phi.cols() != src.rank())
        throw std::invalid_argument(name + " has shape " + std::to_string(phi.rows()) + "x" +
                                    std::to_string(phi.cols()) + ", expected " + std::to_string(tgt.rank()) + "x" +
                                    std::to_string(src.rank()));
    const auto& g = ring.group();
    for (std::size_t i = 0; i < phi.rows(); ++i)
        for (std::size_t j = 0; j < phi.cols(); ++j)
            if (!ring.is_homogeneous(phi(i, j), g.sub(tgt.twists[i], src.twists[j])))
                throw std::invalid_argument(name + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") is not homogeneous of the forced degree");
}

Factorization make_factorization(const GradedPotential& ring, GradedFreeModule e_minus1, GradedFreeModule e0,
                                 PolyMatrix phi0, PolyMatrix phi_minus1) {
    const auto& g = ring.group();
    check_map(ring, e_minus1, e0, phi0, "phi0");
    check_map(ring, e0, twisted(e_minus1, g, ring.d()), phi_minus1, "phi_-1");
    const std::size_t n = ring.num_variables();
    if (!(phi_minus1 * phi0 == PolyMatrix::scalar(e_minus1.rank(), ring.potential())))
        throw std::invalid_argument("phi_-1 * phi0 != w * id");
    if (!(phi0 * phi_minus1 == PolyMatrix::scalar(e0.rank(), ring.potential())))
        throw std::invalid_argument("phi0 * phi_-1 != w * id");
    (void)n;
    return Factorization{ring, std::move(e_minus1), std::move(e0), std::move(phi0), std::move(phi_minus1)};
}

Factorization zero_factorization(const GradedPotential& ring) {
    return make_factorization(ring, {}, {}, PolyMatrix(0, 0), PolyMatrix(0, 0));
}

std::vector<Factorization> standard_objects(long d) {
    if (d < 2) throw std::invalid_argument("standard objects need d >= 2");
    const GradedPotential ring = one_variable_potential(d);
    const auto& g = ring.group();
    std::vector<Factorization> out;
    for (long i = 1; i < d; ++i) {
        PolyMatrix a(1, 1), b(1, 1);
        a(0, 0) = Poly::variable_power(0, static_cast<int>(i), 1);
        b(0, 0) = Poly::variable_power(0, static_cast<int>(d - i), 1);
        out.push_back(make_factorization(ring, GradedFreeModule{{g.element({-i})}}, GradedFreeModule{{g.zero()}}, a, b));
    }
    return out;
}

Factorization k_object(long d, long a) {
    const auto objs = standard_objects(d);
    return twist(objs.front(), objs.front().ring.group().element({a}));
}

Factorization twist(const Factorization& e, const GroupElement& a) {
    const auto& g = e.ring.group();
    Factorization out = e;
    out.e_minus1 = twisted(e.e_minus1, g, a);
    out.e0 = twisted(e.e0, g, a);
    return out;
}

static Factorization shift_once(const Factorization& e) {
    const auto& g = e.ring.group();
    Factorization out = e;
    out.e_minus1 = e.e0;
    out.e0 = twisted(e.e_minus1, g, e.ring.d());
    out.phi0 = -e.phi_minus1;
    out.phi_minus1 = -e.phi0;
    return out;
}

static Factorization unshift_once(const Factorization& e) {
    const auto& g = e.ring.group();
    Factorization out = e;
    out.e_minus1 = twisted(e.e0, g, g.negate(e.ring.d()));
    out.e0 = e.e_minus1;
    out.phi0 = -e.phi_minus1;
    out.phi_minus1 = -e.phi0;
    return out;
}

Factorization translate(const Factorization& e, int shift, const GroupElement& a) {
    Factorization out = e;
    for (int k = 0; k < shift; ++k) out = shift_once(out);
    for (int k = 0; k > shift; --k) out = unshift_once(out);
    out = twist(out, a);
    return make_factorization(out.ring, out.e_minus1, out.e0, out.phi0, out.phi_minus1);
}

bool is_closed(const Factorization& e, const Factorization& f, const FactorizationMorphism& m) {
    return m.f0 * e.phi0 == f.phi0 * m.f_minus1 && m.f_minus1 * e.phi_minus1 == f.phi_minus1 * m.f0;
}

FactorizationMorphism identity_morphism(const Factorization& e) {
    const std::size_t n = e.ring.num_variables();
    return {PolyMatrix::identity(e.e_minus1.rank(), n), PolyMatrix::identity(e.e0.rank(), n)};
}

Factorization cone(const Factorization& e, const Factorization& f, const FactorizationMorphism& m) {
    if (!same_ring(e.ring, f.ring)) throw std::invalid_argument("cone: objects over different rings");
    check_map(e.ring, e.e_minus1, f.e_minus1, m.f_minus1, "f_-1");
    check_map(e.ring, e.e0, f.e0, m.f0, "f_0");
    if (!is_closed(e, f, m)) throw std::invalid_argument("cone: morphism is not closed");
    const auto& g = e.ring.group();
    GradedFreeModule t_minus1 = e.e0;
    t_minus1.twists.insert(t_minus1.twists.end(), f.e_minus1.twists.begin(), f.e_minus1.twists.end());
    GradedFreeModule t0 = twisted(e.e_minus1, g, e.ring.d());
    t0.twists.insert(t0.twists.end(), f.e0.twists.begin(), f.e0.twists.end());
    // phi0 = [[-phi_-1^E, 0], [f_0, phi0^F]], phi_-1 = [[-phi0^E, 0], [f_-1, phi_-1^F]]
    PolyMatrix p0 = PolyMatrix::blocks(-e.phi_minus1, PolyMatrix(e.e_minus1.rank(), f.e_minus1.rank()), m.f0, f.phi0);
    PolyMatrix p1 = PolyMatrix::blocks(-e.phi0, PolyMatrix(e.e0.rank(), f.e0.rank()), m.f_minus1, f.phi_minus1);
    return make_factorization(e.ring, std::move(t_minus1), std::move(t0), std::move(p0), std::move(p1));
}

// ------------------------------------------------------- strand cohomology

namespace {

// Basis of degree-0 maps P -> Q(shift): triples (i, j, monomial).
struct HomBasis {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> offset;             // per entry (i * cols + j)
    std::vector<std::vector<Monomial>> monomials;  // per entry
    std::vector<std::map<Monomial, std::size_t>> index;
    std::size_t size = 0;

    HomBasis(const GradedPotential& ring, const GradedFreeModule& p, const GradedFreeModule& q, const GroupElement& shift)
        : rows(q.rank()), cols(p.rank()) {
        const auto& g = ring.group();
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const GroupElement deg = g.sub(g.add(q.twists[i], shift), p.twists[j]);
                offset.push_back(size);
                monomials.push_back(ring.monomials_of_degree(deg));
                std::map<Monomial, std::size_t> idx;
                for (std::size_t k = 0; k < monomials.back().size(); ++k) idx.emplace(monomials.back()[k], size + k);
                index.push_back(std::move(idx));
                size += monomials.back().size();
            }
    }

    std::size_t at(std::size_t i, std::size_t j, const Monomial& m) const {
        auto it = index[i * cols + j].find(m);
        if (it == index[i * cols + j].end()) throw std::logic_error("monomial outside the homogeneous component");
        return it->second;
    }
};

// Adds sign * L * X (left) or sign * X * R (right) for X = m e_{ij} into `out`.
void add_left(const PolyMatrix& l, std::size_t i, std::size_t j, const Monomial& m, const Rational& sign,
              const HomBasis& tgt, std::size_t tgt_off, SparseVector& out) {
    for (std::size_t k = 0; k < l.rows(); ++k)
        for (const auto& [lm, c] : l(k, i).terms()) {
            Monomial prod(m.size());
            for (std::size_t v = 0; v < m.size(); ++v) prod[v] = m[v] + lm[v];
            Rational& slot = out[tgt_off + tgt.at(k, j, prod)];
            slot += sign * c;
        }
}

void add_right(const PolyMatrix& r, std::size_t i, std::size_t j, const Monomial& m, const Rational& sign,
               const HomBasis& tgt, std::size_t tgt_off, SparseVector& out) {
    for (std::size_t k = 0; k < r.cols(); ++k)
        for (const auto& [rm, c] : r(j, k).terms()) {
            Monomial prod(m.size());
            for (std::size_t v = 0; v < m.size(); ++v) prod[v] = m[v] + rm[v];
            Rational& slot = out[tgt_off + tgt.at(i, k, prod)];
            slot += sign * c;
        }
}

GroupElement multiple_of_d(const GradedPotential& ring, long l) {
    return ring.group().scale(ring.d(), Integer(l));
}

// Hom^n(E, F) as two blocks.
std::pair<HomBasis, HomBasis> complex_term(const Factorization& e, const Factorization& f, long n) {
    const long l = n >= 0 ? n / 2 : -((-n + 1) / 2);
    const bool odd = (n - 2 * l) == 1;
    const GradedPotential& ring = e.ring;
    if (!odd)
        return {HomBasis(ring, e.e_minus1, f.e_minus1, multiple_of_d(ring, l)),
                HomBasis(ring, e.e0, f.e0, multiple_of_d(ring, l))};
    return {HomBasis(ring, e.e_minus1, f.e0, multiple_of_d(ring, l)),
            HomBasis(ring, e.e0, f.e_minus1, multiple_of_d(ring, l + 1))};
}

// Rank of d^n : Hom^n -> Hom^{n+1}.
std::size_t differential_rank(const Factorization& e, const Factorization& f, long n,
                              const std::pair<HomBasis, HomBasis>& src, const std::pair<HomBasis, HomBasis>& tgt) {
    const bool odd = ((n % 2) + 2) % 2 == 1;
    const auto& [s1, s2] = src;
    const auto& [t1, t2] = tgt;
    const std::size_t t2off = t1.size;
    const Rational one(1), minus(-1);
    SparseEchelon ech;
    auto column = [&](const HomBasis& b, std::size_t i, std::size_t j, const Monomial& m, bool first) {
        SparseVector v;
        if (!odd) {
            // d(f_-1, f_0) = (f_0 phi0^E - phi0^F f_-1, f_-1 phi_-1^E - phi_-1^F f_0)
            if (first) {
                add_left(f.phi0, i, j, m, minus, t1, 0, v);
                add_right(e.phi_minus1, i, j, m, one, t2, t2off, v);
            } else {
                add_right(e.phi0, i, j, m, one, t1, 0, v);
                add_left(f.phi_minus1, i, j, m, minus, t2, t2off, v);
            }
        } else {
            // d(g_1, g_2) = (g_2 phi0^E + phi_-1^F g_1, g_1 phi_-1^E + phi0^F g_2)
            if (first) {
                add_left(f.phi_minus1, i, j, m, one, t1, 0, v);
                add_right(e.phi_minus1, i, j, m, one, t2, t2off, v);
            } else {
                add_right(e.phi0, i, j, m, one, t1, 0, v);
                add_left(f.phi0, i, j, m, one, t2, t2off, v);
            }
        }
        for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
        ech.insert(std::move(v));
        (void)b;
    };
    for (int blk = 0; blk < 2; ++blk) {
        const HomBasis& b = blk == 0 ? s1 : s2;
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j)
                for (const auto& m : b.monomials[i * b.cols + j]) column(b, i, j, m, blk == 0);
    }
    return ech.rank();
}

}  // namespace

long strand_dimension(const Factorization& e, const Factorization& f, int parity, long l) {
    if (!same_ring(e.ring, f.ring)) throw std::invalid_argument("strand cohomology: objects over different rings");
    const long n = 2 * l + parity;
    const auto prev = complex_term(e, f, n - 1);
    const auto cur = complex_term(e, f, n);
    const auto next = complex_term(e, f, n + 1);
    const std::size_t dim = cur.first.size + cur.second.size;
    if (dim == 0) return 0;
    const std::size_t r_out = differential_rank(e, f, n, cur, next);
    const std::size_t r_in = differential_rank(e, f, n - 1, prev, cur);
    return static_cast<long>(dim) - static_cast<long>(r_out) - static_cast<long>(r_in);
}

std::optional<std::pair<Integer, Integer>> finite_length_support(const GradedPotential& ring,
                                                                 const GradedFreeModule& source,
                                                                 const GradedFreeModule& target,
                                                                 const PolyMatrix& phi) {
    const auto& g = ring.group();
    const std::size_t n = ring.num_variables();
    if (target.rank() == 0) return std::make_pair(Integer(1), Integer(0));
    const Integer dd = ring.degree_of_d();
    Integer lo, hi;
    bool first = true;
    for (std::size_t i = 0; i < target.rank(); ++i) {
        const Integer gen_deg = -ring.grading().degree(target.twists[i]);
        Integer top = gen_deg;
        for (std::size_t k = 0; k < n; ++k) {
            const Integer wk = ring.grading().degree(ring.spec().generator_degrees[k]);
            Integer cap_z;
            mpz_cdiv_q(cap_z.get_mpz_t(), dd.get_mpz_t(), wk.get_mpz_t());
            const long cap = 2 * cap_z.get_si() + 2;
            long found = -1;
            for (long p = 1; p <= cap && found < 0; ++p) {
                // Is x_k^p e_i in the image of phi?
                const Monomial xp = [&] {
                    Monomial m(n, 0);
                    m[k] = static_cast<int>(p);
                    return m;
                }();
                const GroupElement c = g.sub(ring.monomial_degree(xp), target.twists[i]);
                std::map<std::pair<std::size_t, Monomial>, std::size_t> idx;
                auto key = [&](std::size_t row, const Monomial& m) {
                    auto [it, ins] = idx.emplace(std::make_pair(row, m), idx.size());
                    return it->second;
                };
                SparseEchelon ech;
                for (std::size_t j = 0; j < source.rank(); ++j)
                    for (const auto& u : ring.monomials_of_degree(g.add(c, source.twists[j]))) {
                        SparseVector v;
                        for (std::size_t r = 0; r < target.rank(); ++r)
                            for (const auto& [pm, coef] : phi(r, j).terms()) {
                                Monomial prod(n);
                                for (std::size_t t = 0; t < n; ++t) prod[t] = pm[t] + u[t];
                                v[key(r, prod)] += coef;
                            }
                        for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
                        ech.insert(std::move(v));
                    }
                if (ech.contains(SparseVector{{key(i, xp), Rational(1)}})) found = p;
            }
            if (found < 0) return std::nullopt;
            top += Integer(found - 1) * wk;
        }
        if (first || gen_deg < lo) lo = gen_deg;
        if (first || top > hi) hi = top;
        first = false;
    }
    return std::make_pair(lo, hi);
}

long StrandCohomology::at(int parity, long l) const {
    auto it = dims.find({parity, l});
    return it == dims.end() ? 0 : it->second;
}

long StrandCohomology::total() const {
    long s = 0;
    for (const auto& [k, v] : dims) s += v;
    return s;
}

std::string StrandCohomology::certification() const {
    return certified ? "certified" : "windowed(" + std::to_string(window) + ")";
}

static Integer floor_div_int(const Integer& a, const Integer& b) { return floor_div(a, b); }
static Integer ceil_div_int(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

StrandCohomology strand_cohomology(const Factorization& e, const Factorization& f, long window) {
    if (!same_ring(e.ring, f.ring)) throw std::invalid_argument("strand cohomology: objects over different rings");
    const GradedPotential& ring = e.ring;
    const auto& g = ring.group();
    const Integer dd = ring.degree_of_d();
    StrandCohomology out;

    // Candidate support from finite-length cokernels (both objects, both maps).
    const auto sup_f0 = finite_length_support(ring, f.e_minus1, f.e0, f.phi0);
    const auto sup_f1 = finite_length_support(ring, f.e0, twisted(f.e_minus1, g, ring.d()), f.phi_minus1);
    const auto sup_e0 = finite_length_support(ring, e.e_minus1, e.e0, e.phi0);
    const auto sup_e1 = finite_length_support(ring, e.e0, twisted(e.e_minus1, g, ring.d()), e.phi_minus1);
    out.certified = sup_f0 && sup_f1 && sup_e0 && sup_e1;

    long spread = 0;
    {
        std::vector<Integer> degs;
        for (const auto* m : {&e.e_minus1, &e.e0, &f.e_minus1, &f.e0})
            for (const auto& t : m->twists) degs.push_back(ring.grading().degree(t));
        if (!degs.empty())
            spread = Integer(*std::max_element(degs.begin(), degs.end()) - *std::min_element(degs.begin(), degs.end())).get_si();
    }
    out.window = window >= 0 ? window : spread + 2 * dd.get_si();

    std::vector<std::pair<int, long>> todo;
    long lo = 0, hi = -1;
    if (window >= 0 || !out.certified) {
        lo = -out.window;
        hi = out.window;
    }
    std::map<int, std::pair<long, long>> certified_range;
    if (out.certified && e.e0.rank() > 0) {
        std::vector<Integer> gens;
        for (const auto& t : e.e0.twists) gens.push_back(-ring.grading().degree(t));
        const Integer gmax = *std::max_element(gens.begin(), gens.end());
        const Integer gmin = *std::min_element(gens.begin(), gens.end());
        for (int parity = 0; parity < 2; ++parity) {
            const auto& sup = parity == 0 ? *sup_f0 : *sup_f1;
            if (sup.first > sup.second) continue;
            const long a = ceil_div_int(sup.first - gmax, dd).get_si();
            const long b = floor_div_int(sup.second - gmin, dd).get_si();
            if (a > b) continue;
            certified_range[parity] = {a, b};
            if (hi < lo) {
                lo = a;
                hi = b;
            } else {
                lo = std::min(lo, a);
                hi = std::max(hi, b);
            }
        }
    }
    if (hi < lo) {
        lo = 0;
        hi = 0;
    }
    out.window_lo = lo;
    out.window_hi = hi;
    for (long l = lo; l <= hi; ++l)
        for (int parity = 0; parity < 2; ++parity) out.dims[{parity, l}] = strand_dimension(e, f, parity, l);
    return out;
}

// ------------------------------------------------------ exterior products

GradedPotential boxplus(const GradedPotential& r1, const GradedPotential& r2) {
    PointedAbelianGroup a(r1.group(), r1.d().coordinates, r1.grading().embeddings());
    PointedAbelianGroup b(r2.group(), r2.d().coordinates, r2.grading().embeddings());
    PointedAbelianGroup prod = boxminus(a, b);
    std::vector<IntVector> gens;
    for (const auto& x : r1.spec().generator_degrees) gens.push_back(prod.embed(0, x.coordinates).coordinates);
    for (const auto& y : r2.spec().generator_degrees) gens.push_back(prod.embed(1, y.coordinates).coordinates);
    const std::size_t n1 = r1.num_variables(), n = n1 + r2.num_variables();
    Poly w = r1.potential().embedded(0, n) + r2.potential().embedded(n1, n);
    IntVector d = prod.marked().coordinates;
    return GradedPotential(make_spec(std::move(prod), std::move(gens), std::move(d)), std::move(w));
}

Factorization exterior_product(const Factorization& e, const Factorization& f) {
    return exterior_product(e, f, boxplus(e.ring, f.ring));
}

Factorization exterior_product(const Factorization& e, const Factorization& f, const GradedPotential& ring) {
    const std::size_t n1 = e.ring.num_variables(), n = ring.num_variables();
    if (n != n1 + f.ring.num_variables()) throw std::invalid_argument("exterior_product: ring mismatch");
    const auto& grading = ring.grading();
    const auto& g = ring.group();
    auto tensor = [&](const GradedFreeModule& m, const GradedFreeModule& k, bool add_d) {
        GradedFreeModule out;
        for (const auto& t : m.twists)
            for (const auto& s : k.twists) {
                GroupElement x = g.add(grading.embed(0, t.coordinates), grading.embed(1, s.coordinates));
                if (add_d) x = g.add(x, ring.d());
                out.twists.push_back(std::move(x));
            }
        return out;
    };
    auto concat = [](GradedFreeModule a, const GradedFreeModule& b) {
        a.twists.insert(a.twists.end(), b.twists.begin(), b.twists.end());
        return a;
    };
    const GradedFreeModule t_minus1 = concat(tensor(e.e_minus1, f.e0, false), tensor(e.e0, f.e_minus1, false));
    const GradedFreeModule t0 = concat(tensor(e.e0, f.e0, false), tensor(e.e_minus1, f.e_minus1, true));

    const PolyMatrix A = e.phi0.embedded(0, n), B = e.phi_minus1.embedded(0, n);
    const PolyMatrix C = f.phi0.embedded(n1, n), D = f.phi_minus1.embedded(n1, n);
    auto id = [&](std::size_t r) { return PolyMatrix::identity(r, n); };
    const std::size_t em = e.e_minus1.rank(), e0 = e.e0.rank(), fm = f.e_minus1.rank(), f0 = f.e0.rank();
    // phi0 = [[A x 1, 1 x C], [-1 x D, B x 1]], phi_-1 = [[B x 1, -1 x C], [1 x D, A x 1]]
    PolyMatrix p0 = PolyMatrix::blocks(A.kron(id(f0)), id(e0).kron(C), -(id(em).kron(D)), B.kron(id(fm)));
    PolyMatrix p1 = PolyMatrix::blocks(B.kron(id(f0)), -(id(em).kron(C)), id(e0).kron(D), A.kron(id(fm)));
    return make_factorization(ring, t_minus1, t0, std::move(p0), std::move(p1));
}

// ------------------------------------------------- endomorphism algebras

EndoAlgebraReport endo_algebra_check(long d) {
    EndoAlgebraReport rep;
    rep.d = d;
    const auto objs = standard_objects(d);
    const std::size_t n = objs.size();
    const IntMatrix c = cartan_matrix(ade_quiver({'A', d - 1}));
    rep.cartan.assign(n, std::vector<long>(n, 0));
    rep.h0.assign(n, std::vector<long>(n, 0));
    rep.other_cohomology_vanishes = true;
    rep.certified = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rep.cartan[i][j] = c(i, j).get_si();
            const auto sc = strand_cohomology(objs[i], objs[j]);
            rep.certified = rep.certified && sc.certified;
            rep.h0[i][j] = sc.at(0, 0);
            for (const auto& [key, dim] : sc.dims)
                if (key != std::make_pair(0, 0L) && dim != 0) {
                    rep.other_cohomology_vanishes = false;
                    rep.diff.push_back("H^" + std::to_string(2 * key.second + key.first) + "(E_" +
                                       std::to_string(i + 1) + ", E_" + std::to_string(j + 1) +
                                       ") = " + std::to_string(dim));
                }
        }
    // Search for a vertex permutation (optionally with transposition) matching the Cartan matrix.
    for (int tr = 0; tr < 2 && !rep.matches; ++tr) {
        std::vector<std::size_t> perm(n);
        std::vector<bool> used(n, false);
        std::function<bool(std::size_t)> place = [&](std::size_t i) {
            if (i == n) return true;
            for (std::size_t v = 0; v < n; ++v) {
                if (used[v]) continue;
                perm[i] = v;
                bool ok = true;
                for (std::size_t j = 0; j <= i && ok; ++j) {
                    const long cij = tr ? rep.cartan[perm[j]][perm[i]] : rep.cartan[perm[i]][perm[j]];
                    const long cji = tr ? rep.cartan[perm[i]][perm[j]] : rep.cartan[perm[j]][perm[i]];
                    ok = rep.h0[i][j] == cij && rep.h0[j][i] == cji;
                }
                if (!ok) continue;
                used[v] = true;
                if (place(i + 1)) return true;
                used[v] = false;
            }
            return false;
        };
        if (place(0)) {
            rep.matches = true;
            rep.transposed = tr == 1;
            rep.permutation = perm;
        }
    }
    if (!rep.matches) rep.diff.push_back("H^0 matrix does not match the A_" + std::to_string(d - 1) + " Cartan matrix");
    return rep;
}

// ------------------------------------------------------ orbit categories

OrbitSpec make_orbit_spec(const PointedAbelianGroup& a, const std::vector<IntVector>& gamma_generators) {
    const auto& g = a.group();
    OrbitSpec psi;
    psi.source = a;
    psi.gamma_generators = gamma_generators;
    for (const auto& v : gamma_generators)
        if (!g.is_torsion(g.element(v))) throw std::invalid_argument("Gamma must be finite: generator is not torsion");
    // Enumerate Gamma by closure under adding generators.
    std::map<CanonicalForm, GroupElement> seen;
    std::vector<GroupElement> frontier{g.zero()};
    seen.emplace(g.zero().canonical, g.zero());
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& v : gamma_generators) {
                GroupElement y = g.add(x, g.element(v));
                if (seen.emplace(y.canonical, y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    for (auto& [k, v] : seen) psi.kernel.push_back(v);

    const std::size_t n = g.num_generators();
    const IntMatrix& rel = g.relations();
    IntMatrix all(rel.rows() + gamma_generators.size(), n);
    for (std::size_t i = 0; i < rel.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) all(i, j) = rel(i, j);
    for (std::size_t i = 0; i < gamma_generators.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) all(rel.rows() + i, j) = gamma_generators[i].at(j);
    psi.target = PointedAbelianGroup(group_from_relations(n, all), a.marked().coordinates, a.embeddings());
    return psi;
}

GradedPotential restrict_ring(const GradedPotential& ring, const OrbitSpec& psi) {
    std::vector<IntVector> gens;
    for (const auto& a : ring.spec().generator_degrees) gens.push_back(a.coordinates);
    return GradedPotential(make_spec(psi.target, std::move(gens), ring.d().coordinates), ring.potential());
}

Factorization restrict_grading(const Factorization& e, const OrbitSpec& psi) {
    return restrict_grading(e, psi, restrict_ring(e.ring, psi));
}

Factorization restrict_grading(const Factorization& e, const OrbitSpec& psi, const GradedPotential& ring) {
    auto map_module = [&](const GradedFreeModule& m) {
        GradedFreeModule out;
        for (const auto& t : m.twists) out.twists.push_back(psi.apply(t));
        return out;
    };
    return make_factorization(ring, map_module(e.e_minus1), map_module(e.e0), e.phi0, e.phi_minus1);
}

OrbitHomReport orbit_hom_check(const Factorization& e, const Factorization& f, const OrbitSpec& psi, long window) {
    const GradedPotential ring = restrict_ring(e.ring, psi);
    const Factorization re = restrict_grading(e, psi, ring);
    const Factorization rf = restrict_grading(f, psi, ring);
    std::vector<Factorization> twists;
    for (const auto& gamma : psi.kernel) twists.push_back(twist(f, gamma));
    OrbitHomReport rep;
    for (long l = -window; l <= window; ++l)
        for (int parity = 0; parity < 2; ++parity) {
            OrbitStrandRow row{parity, l, strand_dimension(re, rf, parity, l), 0};
            for (const auto& fg : twists) row.orbit_sum += strand_dimension(e, fg, parity, l);
            rep.rows.push_back(row);
            if (row.restricted != row.orbit_sum) {
                rep.holds = false;
                rep.counterexamples.push_back(row);
            }
        }
    return rep;
}

}  // namespace hsing
