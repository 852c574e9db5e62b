#include "naka/algebra.hpp"

#include <algorithm>
#include <map>

namespace naka {

namespace {

// Incremental echelon basis over a fixed coordinate order. Vectors are
// stored in permuted coordinates; the pivot of a row is its first nonzero
// position and rows are kept pivot-normalized.
class EchelonSet {
  public:
    explicit EchelonSet(std::size_t width) : width_(width) {}

    // Reduces v in place against the current rows.
    void reduce(std::vector<Scalar>& v) const {
        for (const auto& [pivot, idx] : by_pivot_) {
            if (v[pivot].is_zero()) continue;
            Scalar factor = v[pivot];
            const auto& row = rows_[idx];
            for (std::size_t k = pivot; k < width_; ++k)
                if (!row[k].is_zero()) v[k] = v[k] - factor * row[k];
        }
    }

    // Reduce-then-insert; returns false when v reduces to zero.
    bool insert(std::vector<Scalar> v) {
        reduce(v);
        std::size_t pivot = width_;
        for (std::size_t k = 0; k < width_; ++k)
            if (!v[k].is_zero()) {
                pivot = k;
                break;
            }
        if (pivot == width_) return false;
        Scalar inv = v[pivot].inverse();
        for (std::size_t k = pivot; k < width_; ++k) v[k] = inv * v[k];
        by_pivot_[pivot] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(std::vector<Scalar> v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    std::size_t size() const { return rows_.size(); }
    bool is_pivot(std::size_t pos) const { return by_pivot_.count(pos) > 0; }

  private:
    std::size_t width_;
    std::vector<std::vector<Scalar>> rows_;
    std::map<std::size_t, std::size_t> by_pivot_;  // pivot position -> row
};

}  // namespace

Matrix Algebra::element_left_mult(const Coord& x) const {
    Matrix m(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c)
                if (!left_mult_[i].at(r, c).is_zero())
                    m.at(r, c) += x[i] * left_mult_[i].at(r, c);
    }
    return m;
}

Matrix Algebra::element_right_mult(const Coord& x) const {
    Matrix m(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c)
                if (!right_mult_[i].at(r, c).is_zero())
                    m.at(r, c) += x[i] * right_mult_[i].at(r, c);
    }
    return m;
}

Algebra::Coord Algebra::multiply(const Coord& x, const Coord& y) const {
    Coord z(dim_, Scalar::zero(field_));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            const Coord& m = mult(i, j);
            for (std::size_t l = 0; l < dim_; ++l)
                if (!m[l].is_zero()) z[l] += c * m[l];
        }
    }
    return z;
}

bool Algebra::same_as(const Algebra& o) const {
    if (!(field_ == o.field_) || dim_ != o.dim_ || unit_ != o.unit_) return false;
    return mult_ == o.mult_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

void Algebra::finalize_and_validate() {
    if (dim_ == 0) throw semantic_error("EmptyAlgebra", "algebra must have positive dimension");
    if (labels_.size() != dim_ || mult_.size() != dim_ * dim_ || unit_.size() != dim_)
        throw semantic_error("TableShape", "structure constant table dimensions inconsistent");
    for (const auto& c : mult_)
        if (c.size() != dim_)
            throw semantic_error("TableShape", "structure constant vector has wrong length");

    left_mult_.assign(dim_, Matrix(dim_, dim_, field_));
    right_mult_.assign(dim_, Matrix(dim_, dim_, field_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t m = 0; m < dim_; ++m)
            for (std::size_t l = 0; l < dim_; ++l) {
                left_mult_[i].at(l, m) = mult(i, m)[l];
                right_mult_[i].at(l, m) = mult(m, i)[l];
            }

    // Unit law on every basis element.
    Matrix lu = element_left_mult(unit_), ru = element_right_mult(unit_);
    for (std::size_t m = 0; m < dim_; ++m)
        for (std::size_t l = 0; l < dim_; ++l) {
            bool want_one = (l == m);
            bool lu_ok = want_one ? lu.at(l, m).is_one() : lu.at(l, m).is_zero();
            bool ru_ok = want_one ? ru.at(l, m).is_one() : ru.at(l, m).is_zero();
            if (!lu_ok || !ru_ok)
                throw semantic_error("UnitViolation",
                                     "unit fails to act as identity on basis element " +
                                         std::to_string(m));
        }

    // Associativity over all basis triples, checked as L_i L_j = L_{b_i b_j}.
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            Matrix lhs = left_mult_[i] * left_mult_[j];
            Matrix rhs = element_left_mult(mult(i, j));
            if (lhs != rhs) {
                for (std::size_t k = 0; k < dim_; ++k)
                    for (std::size_t l = 0; l < dim_; ++l)
                        if (lhs.at(l, k) != rhs.at(l, k))
                            throw semantic_error(
                                "AssociativityViolation",
                                "(b_" + std::to_string(i) + " b_" + std::to_string(j) + ") b_" +
                                    std::to_string(k) + " != b_" + std::to_string(i) + " (b_" +
                                    std::to_string(j) + " b_" + std::to_string(k) + ")");
            }
        }

    if (!idempotents_.empty()) {
        Coord sum(dim_, Scalar::zero(field_));
        for (const auto& e : idempotents_) {
            for (std::size_t l = 0; l < dim_; ++l) sum[l] += e[l];
        }
        if (sum != unit_)
            throw semantic_error("IdempotentSum", "idempotents do not sum to the unit");
        for (std::size_t i = 0; i < idempotents_.size(); ++i)
            for (std::size_t j = 0; j < idempotents_.size(); ++j) {
                Coord p = multiply(idempotents_[i], idempotents_[j]);
                const Coord want =
                    i == j ? idempotents_[i] : Coord(dim_, Scalar::zero(field_));
                if (p != want)
                    throw semantic_error("IdempotentOrthogonality",
                                         "idempotents " + std::to_string(i) + ", " +
                                             std::to_string(j) + " are not orthogonal");
            }
    }
}

AlgebraPtr from_structure_constants(const FieldSpec& field,
                                    const std::vector<std::string>& labels,
                                    const std::vector<std::vector<Algebra::Coord>>& mult,
                                    const Algebra::Coord& unit) {
    Algebra a;
    a.field_ = field;
    a.dim_ = labels.size();
    a.labels_ = labels;
    if (mult.size() != a.dim_)
        throw semantic_error("TableShape", "mult table row count != dim");
    for (const auto& row : mult) {
        if (row.size() != a.dim_)
            throw semantic_error("TableShape", "mult table column count != dim");
        for (const auto& c : row) a.mult_.push_back(c);
    }
    a.unit_ = unit;
    a.finalize_and_validate();
    return std::make_shared<Algebra>(std::move(a));
}

// ---------------------------------------------------------------------------
// Path algebras

namespace {

struct PathTable {
    // traversal order: arrows[0] is traversed first
    struct Path {
        std::size_t src, tgt;
        std::vector<std::size_t> arrows;
        std::size_t length() const { return arrows.size(); }
    };
    std::vector<Path> paths;                       // all paths of length <= N
    std::map<std::vector<std::size_t>, std::size_t> index;  // encoded path -> index

    static std::vector<std::size_t> encode(const Path& p, std::size_t n_vertices) {
        if (p.arrows.empty()) return {p.src};
        std::vector<std::size_t> key;
        key.reserve(p.arrows.size());
        for (std::size_t a : p.arrows) key.push_back(n_vertices + a);
        return key;
    }
};

constexpr std::size_t kMaxPaths = 200000;

}  // namespace

AlgebraPtr from_quiver(const QuiverPresentation& p, const FieldSpec& field) {
    if (p.nilpotency_bound < 1)
        throw semantic_error("BoundTooSmall", "nilpotency bound must be >= 1");
    const std::size_t N = p.nilpotency_bound;
    const std::size_t nv = p.vertices.size();
    if (nv == 0) throw semantic_error("EmptyQuiver", "quiver needs at least one vertex");

    std::map<std::string, std::size_t> vertex_index, arrow_index;
    for (std::size_t v = 0; v < nv; ++v) {
        if (vertex_index.count(p.vertices[v]))
            throw semantic_error("MalformedQuiver", "duplicate vertex " + p.vertices[v]);
        vertex_index[p.vertices[v]] = v;
    }
    std::vector<std::pair<std::size_t, std::size_t>> arrow_ends;  // (src, tgt)
    for (std::size_t a = 0; a < p.arrows.size(); ++a) {
        const auto& ar = p.arrows[a];
        if (arrow_index.count(ar.name) || vertex_index.count(ar.name))
            throw semantic_error("MalformedQuiver", "duplicate name " + ar.name);
        if (!vertex_index.count(ar.from) || !vertex_index.count(ar.to))
            throw semantic_error("MalformedQuiver", "arrow " + ar.name + " has unknown endpoint");
        arrow_index[ar.name] = a;
        arrow_ends.emplace_back(vertex_index[ar.from], vertex_index[ar.to]);
    }

    // Enumerate paths of length 0..N, level by level, in deterministic order.
    PathTable pt;
    std::vector<std::size_t> level_begin;  // index of first path of each length
    for (std::size_t v = 0; v < nv; ++v) {
        PathTable::Path trivial{v, v, {}};
        pt.index[PathTable::encode(trivial, nv)] = pt.paths.size();
        pt.paths.push_back(std::move(trivial));
    }
    level_begin.push_back(0);
    std::size_t prev_begin = 0;
    for (std::size_t len = 1; len <= N; ++len) {
        std::size_t this_begin = pt.paths.size();
        level_begin.push_back(this_begin);
        for (std::size_t pi = prev_begin; pi < this_begin; ++pi)
            for (std::size_t a = 0; a < arrow_ends.size(); ++a) {
                if (arrow_ends[a].first != pt.paths[pi].tgt) continue;
                PathTable::Path q = pt.paths[pi];
                q.arrows.push_back(a);
                q.tgt = arrow_ends[a].second;
                pt.index[PathTable::encode(q, nv)] = pt.paths.size();
                pt.paths.push_back(std::move(q));
                if (pt.paths.size() > kMaxPaths)
                    throw semantic_error("PathSpaceTooLarge",
                                         "more than " + std::to_string(kMaxPaths) +
                                             " paths below the nilpotency bound");
            }
        prev_begin = this_begin;
    }
    const std::size_t n_paths = pt.paths.size();
    const std::size_t v_end = level_begin[N];  // paths of length < N

    // Coordinate order: longest paths first, so quotient bases keep the
    // shortest representatives.
    std::vector<std::size_t> coord_of_path(n_paths), path_of_coord(n_paths);
    {
        std::vector<std::size_t> order(n_paths);
        for (std::size_t i = 0; i < n_paths; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return pt.paths[x].length() > pt.paths[y].length();
        });
        for (std::size_t k = 0; k < n_paths; ++k) {
            path_of_coord[k] = order[k];
            coord_of_path[order[k]] = k;
        }
    }

    // Parse relations into path-space vectors; record endpoints.
    struct RelVec {
        std::vector<Scalar> v;  // permuted coordinates over all paths
        std::size_t src, tgt;
        std::size_t max_len;
    };
    std::vector<RelVec> rels;
    for (const auto& rel : p.relations) {
        if (rel.empty()) continue;
        RelVec rv{std::vector<Scalar>(n_paths, Scalar::zero(field)), 0, 0, 0};
        bool first = true;
        for (const auto& term : rel) {
            if (term.path.empty())
                throw semantic_error("MalformedRelation", "relation term with empty path");
            // target-to-source input; traverse in reverse
            std::vector<std::size_t> arrows;
            for (auto it = term.path.rbegin(); it != term.path.rend(); ++it) {
                if (!arrow_index.count(*it))
                    throw semantic_error("MalformedRelation", "unknown arrow " + *it);
                arrows.push_back(arrow_index[*it]);
            }
            for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
                if (arrow_ends[arrows[k]].second != arrow_ends[arrows[k + 1]].first)
                    throw semantic_error("MalformedRelation",
                                         "relation path is not composable");
            std::size_t src = arrow_ends[arrows.front()].first;
            std::size_t tgt = arrow_ends[arrows.back()].second;
            if (arrows.size() < 2)
                throw semantic_error("MalformedRelation",
                                     "relation paths must have length >= 2 (admissible ideal)");
            if (arrows.size() > N)
                throw semantic_error("BoundTooSmall",
                                     "relation path longer than the nilpotency bound");
            if (first) {
                rv.src = src;
                rv.tgt = tgt;
                first = false;
            } else if (rv.src != src || rv.tgt != tgt) {
                throw semantic_error("MalformedRelation",
                                     "relation mixes non-parallel paths");
            }
            PathTable::Path key{src, tgt, arrows};
            std::size_t pi = pt.index.at(PathTable::encode(key, nv));
            rv.v[coord_of_path[pi]] += parse_scalar(field, term.coeff);
            rv.max_len = std::max(rv.max_len, arrows.size());
        }
        rels.push_back(std::move(rv));
    }

    // Ideal elements supported on paths of length <= N, closed under
    // single-arrow multiplication on both sides. No truncation here: only
    // products whose every term stays within the window are kept, so each
    // vector is an honest element of the relation ideal.
    struct WorkVec {
        std::vector<Scalar> v;
        std::size_t src, tgt, max_len;
    };
    EchelonSet window(n_paths);
    std::vector<WorkVec> work;
    auto push_window = [&](std::vector<Scalar> vec, std::size_t src, std::size_t tgt,
                           std::size_t max_len) {
        if (window.insert(vec)) work.push_back(WorkVec{std::move(vec), src, tgt, max_len});
    };
    for (const auto& r : rels) push_window(r.v, r.src, r.tgt, r.max_len);
    for (std::size_t w = 0; w < work.size(); ++w) {
        WorkVec cur = work[w];  // copy: work may reallocate
        if (cur.max_len == N) continue;
        for (std::size_t a = 0; a < arrow_ends.size(); ++a) {
            // left multiply: extend traversal at the end (compose after)
            if (arrow_ends[a].first == cur.tgt) {
                std::vector<Scalar> ext(n_paths, Scalar::zero(field));
                for (std::size_t k = 0; k < n_paths; ++k) {
                    if (cur.v[k].is_zero()) continue;
                    PathTable::Path q = pt.paths[path_of_coord[k]];
                    q.arrows.push_back(a);
                    q.tgt = arrow_ends[a].second;
                    ext[coord_of_path[pt.index.at(PathTable::encode(q, nv))]] += cur.v[k];
                }
                push_window(std::move(ext), cur.src, arrow_ends[a].second, cur.max_len + 1);
            }
            // right multiply: prepend to the traversal (compose before)
            if (arrow_ends[a].second == cur.src) {
                std::vector<Scalar> ext(n_paths, Scalar::zero(field));
                for (std::size_t k = 0; k < n_paths; ++k) {
                    if (cur.v[k].is_zero()) continue;
                    PathTable::Path q = pt.paths[path_of_coord[k]];
                    q.arrows.insert(q.arrows.begin(), a);
                    q.src = arrow_ends[a].first;
                    ext[coord_of_path[pt.index.at(PathTable::encode(q, nv))]] += cur.v[k];
                }
                push_window(std::move(ext), arrow_ends[a].first, cur.tgt, cur.max_len + 1);
            }
        }
    }

    // Admissibility of the bound: every path of length N must be an ideal
    // element already visible in the window.
    for (std::size_t pi = level_begin[N]; pi < n_paths; ++pi) {
        std::vector<Scalar> e(n_paths, Scalar::zero(field));
        e[coord_of_path[pi]] = Scalar::one(field);
        if (!window.contains(std::move(e))) {
            std::string label;
            for (auto it = pt.paths[pi].arrows.rbegin(); it != pt.paths[pi].arrows.rend(); ++it)
                label += (label.empty() ? "" : "*") + p.arrows[*it].name;
            throw semantic_error("BoundTooSmall",
                                 "path " + label + " of length " + std::to_string(N) +
                                     " does not lie in the relation ideal");
        }
    }

    // Projection of the ideal to the span of paths of length < N. Terms of
    // length >= N may now be dropped: they are ideal elements themselves.
    std::vector<std::size_t> vcoord_of_path(n_paths, SIZE_MAX), path_of_vcoord;
    for (std::size_t k = 0; k < n_paths; ++k) {
        if (pt.paths[path_of_coord[k]].length() < N) {
            vcoord_of_path[path_of_coord[k]] = path_of_vcoord.size();
            path_of_vcoord.push_back(path_of_coord[k]);
        }
    }
    const std::size_t v_dim = path_of_vcoord.size();
    EchelonSet ideal_v(v_dim);
    struct VWork {
        std::vector<Scalar> v;
        std::size_t src, tgt;
    };
    std::vector<VWork> vwork;
    auto truncate_to_v = [&](const std::vector<Scalar>& full) {
        std::vector<Scalar> tv(v_dim, Scalar::zero(field));
        for (std::size_t k = 0; k < n_paths; ++k)
            if (!full[k].is_zero() && vcoord_of_path[path_of_coord[k]] != SIZE_MAX)
                tv[vcoord_of_path[path_of_coord[k]]] = full[k];
        return tv;
    };
    auto push_v = [&](std::vector<Scalar> vec, std::size_t src, std::size_t tgt) {
        if (ideal_v.insert(vec)) vwork.push_back(VWork{std::move(vec), src, tgt});
    };
    for (const auto& r : rels) push_v(truncate_to_v(r.v), r.src, r.tgt);
    for (std::size_t w = 0; w < vwork.size(); ++w) {
        VWork cur = vwork[w];
        for (std::size_t a = 0; a < arrow_ends.size(); ++a) {
            if (arrow_ends[a].first == cur.tgt) {
                std::vector<Scalar> ext(v_dim, Scalar::zero(field));
                for (std::size_t k = 0; k < v_dim; ++k) {
                    if (cur.v[k].is_zero()) continue;
                    PathTable::Path q = pt.paths[path_of_vcoord[k]];
                    if (q.length() + 1 >= N) continue;  // lands in the ideal anyway
                    q.arrows.push_back(a);
                    q.tgt = arrow_ends[a].second;
                    ext[vcoord_of_path[pt.index.at(PathTable::encode(q, nv))]] += cur.v[k];
                }
                push_v(std::move(ext), cur.src, arrow_ends[a].second);
            }
            if (arrow_ends[a].second == cur.src) {
                std::vector<Scalar> ext(v_dim, Scalar::zero(field));
                for (std::size_t k = 0; k < v_dim; ++k) {
                    if (cur.v[k].is_zero()) continue;
                    PathTable::Path q = pt.paths[path_of_vcoord[k]];
                    if (q.length() + 1 >= N) continue;
                    q.arrows.insert(q.arrows.begin(), a);
                    q.src = arrow_ends[a].first;
                    ext[vcoord_of_path[pt.index.at(PathTable::encode(q, nv))]] += cur.v[k];
                }
                push_v(std::move(ext), arrow_ends[a].first, cur.tgt);
            }
        }
    }

    // Quotient basis: non-pivot coordinates, i.e. the surviving paths,
    // ordered by enumeration (shortest first).
    std::vector<std::pair<std::size_t, std::size_t>> survivors;  // (path idx, vcoord)
    for (std::size_t k = 0; k < v_dim; ++k)
        if (!ideal_v.is_pivot(k)) survivors.emplace_back(path_of_vcoord[k], k);
    std::sort(survivors.begin(), survivors.end());
    std::vector<std::size_t> basis_paths;  // path index per basis element
    std::vector<std::size_t> basis_of_vcoord(v_dim, SIZE_MAX);
    for (const auto& [pi, k] : survivors) {
        basis_of_vcoord[k] = basis_paths.size();
        basis_paths.push_back(pi);
    }
    const std::size_t dim = basis_paths.size();

    auto normal_form = [&](std::size_t path_idx) {
        std::vector<Scalar> e(v_dim, Scalar::zero(field));
        e[vcoord_of_path[path_idx]] = Scalar::one(field);
        ideal_v.reduce(e);
        Algebra::Coord out(dim, Scalar::zero(field));
        for (std::size_t k = 0; k < v_dim; ++k)
            if (!e[k].is_zero()) out[basis_of_vcoord[k]] = e[k];
        return out;
    };

    auto path_label = [&](std::size_t pi) {
        const auto& path = pt.paths[pi];
        if (path.arrows.empty()) return "e_" + p.vertices[path.src];
        std::string label;
        for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it)
            label += (label.empty() ? "" : "*") + p.arrows[*it].name;
        return label;
    };

    Algebra alg;
    alg.field_ = field;
    alg.dim_ = dim;
    for (std::size_t b : basis_paths) alg.labels_.push_back(path_label(b));
    alg.mult_.assign(dim * dim, Algebra::Coord(dim, Scalar::zero(field)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& pi = pt.paths[basis_paths[i]];
            const auto& pj = pt.paths[basis_paths[j]];
            if (pi.src != pj.tgt) continue;              // not composable: product 0
            if (pi.length() + pj.length() >= N) continue;  // lies in the ideal
            PathTable::Path prod{pj.src, pi.tgt, pj.arrows};
            prod.arrows.insert(prod.arrows.end(), pi.arrows.begin(), pi.arrows.end());
            alg.mult_[i * dim + j] = normal_form(pt.index.at(PathTable::encode(prod, nv)));
        }
    alg.unit_.assign(dim, Scalar::zero(field));
    for (std::size_t v = 0; v < nv; ++v) {
        Algebra::Coord e(dim, Scalar::zero(field));
        std::size_t pi = pt.index.at(std::vector<std::size_t>{v});
        // trivial paths always survive: the ideal sits inside the arrow ideal
        e[basis_of_vcoord[vcoord_of_path[pi]]] = Scalar::one(field);
        for (std::size_t l = 0; l < dim; ++l) alg.unit_[l] += e[l];
        alg.idempotents_.push_back(std::move(e));
    }
    alg.presentation_ = p;
    alg.split_basic_ = true;
    {
        std::vector<std::size_t> radical_cols;
        for (std::size_t i = 0; i < dim; ++i)
            if (!pt.paths[basis_paths[i]].arrows.empty()) radical_cols.push_back(i);
        Matrix rad(dim, radical_cols.size(), field);
        for (std::size_t j = 0; j < radical_cols.size(); ++j)
            rad.at(radical_cols[j], j) = Scalar::one(field);
        alg.radical_basis_ = rad;
    }
    alg.finalize_and_validate();
    return std::make_shared<Algebra>(std::move(alg));
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    Algebra op;
    op.field_ = a->field();
    op.dim_ = a->dim();
    op.labels_ = a->basis_labels();
    op.mult_.resize(op.dim_ * op.dim_);
    for (std::size_t i = 0; i < op.dim_; ++i)
        for (std::size_t j = 0; j < op.dim_; ++j) op.mult_[i * op.dim_ + j] = a->mult(j, i);
    op.unit_ = a->unit();
    op.idempotents_ = a->idempotents();
    if (a->presentation()) {
        QuiverPresentation rev = *a->presentation();
        for (auto& ar : rev.arrows) std::swap(ar.from, ar.to);
        for (auto& rel : rev.relations)
            for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
        op.presentation_ = std::move(rev);
    }
    op.radical_basis_ = a->cached_radical();  // rad(A^op) = rad(A) as a subspace
    op.split_basic_ = a->split_basic();
    op.finalize_and_validate();
    return std::make_shared<Algebra>(std::move(op));
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a1, const AlgebraPtr& a2) {
    if (!(a1->field() == a2->field()))
        throw semantic_error("FieldMismatch", "tensor factors over different fields");
    const FieldSpec& f = a1->field();
    const std::size_t d1 = a1->dim(), d2 = a2->dim(), d = d1 * d2;
    Algebra t;
    t.field_ = f;
    t.dim_ = d;
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            t.labels_.push_back(a1->basis_labels()[i] + "(x)" + a2->basis_labels()[j]);
    auto flatten = [&](const Algebra::Coord& x, const Algebra::Coord& y) {
        Algebra::Coord z(d, Scalar::zero(f));
        for (std::size_t l1 = 0; l1 < d1; ++l1) {
            if (x[l1].is_zero()) continue;
            for (std::size_t l2 = 0; l2 < d2; ++l2)
                if (!y[l2].is_zero()) z[l1 * d2 + l2] = x[l1] * y[l2];
        }
        return z;
    };
    t.mult_.resize(d * d);
    for (std::size_t i1 = 0; i1 < d1; ++i1)
        for (std::size_t i2 = 0; i2 < d2; ++i2)
            for (std::size_t j1 = 0; j1 < d1; ++j1)
                for (std::size_t j2 = 0; j2 < d2; ++j2)
                    t.mult_[(i1 * d2 + i2) * d + (j1 * d2 + j2)] =
                        flatten(a1->mult(i1, j1), a2->mult(i2, j2));
    t.unit_ = flatten(a1->unit(), a2->unit());
    if (a1->has_idempotents() && a2->has_idempotents())
        for (const auto& e1 : a1->idempotents())
            for (const auto& e2 : a2->idempotents()) t.idempotents_.push_back(flatten(e1, e2));
    if (a1->split_basic() && a2->split_basic() && a1->cached_radical() && a2->cached_radical()) {
        // rad(A (x) B) = rad A (x) B + A (x) rad B for split basic factors
        const Matrix& r1 = *a1->cached_radical();
        const Matrix& r2 = *a2->cached_radical();
        Matrix cols = hstack(kron(r1, Matrix::identity(d2, f)), kron(Matrix::identity(d1, f), r2));
        t.radical_basis_ = column_space_basis(cols);
        t.split_basic_ = true;
    }
    t.finalize_and_validate();
    return std::make_shared<Algebra>(std::move(t));
}

AlgebraPtr category_algebra(const CategorySpec& c, const FieldSpec& field) {
    std::map<std::string, std::size_t> obj_index, mor_index;
    for (std::size_t o = 0; o < c.objects.size(); ++o) obj_index[c.objects[o]] = o;
    for (std::size_t m = 0; m < c.morphisms.size(); ++m) {
        const auto& mor = c.morphisms[m];
        if (mor_index.count(mor.name))
            throw semantic_error("MalformedCategory", "duplicate morphism " + mor.name);
        if (!obj_index.count(mor.src) || !obj_index.count(mor.tgt))
            throw semantic_error("MalformedCategory",
                                 "morphism " + mor.name + " has unknown endpoint");
        mor_index[mor.name] = m;
    }
    if (c.identities.size() != c.objects.size())
        throw semantic_error("MalformedCategory", "need one identity per object");
    const std::size_t d = c.morphisms.size();

    Algebra alg;
    alg.field_ = field;
    alg.dim_ = d;
    for (const auto& m : c.morphisms) alg.labels_.push_back(m.name);
    alg.mult_.assign(d * d, Algebra::Coord(d, Scalar::zero(field)));
    for (const auto& [pair, expansion] : c.composition) {
        if (!mor_index.count(pair.first) || !mor_index.count(pair.second))
            throw semantic_error("MalformedCategory", "composition of unknown morphisms");
        std::size_t g = mor_index[pair.first], f2 = mor_index[pair.second];
        if (c.morphisms[f2].tgt != c.morphisms[g].src)
            throw semantic_error("MalformedCategory",
                                 "composition entry for non-composable pair " + pair.first +
                                     " o " + pair.second);
        Algebra::Coord v(d, Scalar::zero(field));
        for (const auto& [name, coeff] : expansion) {
            if (!mor_index.count(name))
                throw semantic_error("MalformedCategory", "unknown morphism " + name);
            std::size_t h = mor_index[name];
            if (c.morphisms[h].src != c.morphisms[f2].src ||
                c.morphisms[h].tgt != c.morphisms[g].tgt)
                throw semantic_error("MalformedCategory",
                                     "composite " + pair.first + " o " + pair.second +
                                         " expands outside its hom space");
            v[h] += parse_scalar(field, coeff);
        }
        alg.mult_[g * d + f2] = std::move(v);
    }
    // identities compose as expected even when not listed in the table
    for (std::size_t o = 0; o < c.objects.size(); ++o) {
        if (!mor_index.count(c.identities[o]))
            throw semantic_error("MalformedCategory", "unknown identity " + c.identities[o]);
        std::size_t e = mor_index[c.identities[o]];
        if (c.morphisms[e].src != c.objects[o] || c.morphisms[e].tgt != c.objects[o])
            throw semantic_error("MalformedCategory",
                                 "identity of " + c.objects[o] + " is not an endomorphism");
        for (std::size_t m = 0; m < d; ++m) {
            if (c.morphisms[m].src == c.objects[o] &&
                !c.composition.count({c.morphisms[m].name, c.identities[o]}))
                alg.mult_[m * d + e][m] = Scalar::one(field);
            if (c.morphisms[m].tgt == c.objects[o] &&
                !c.composition.count({c.identities[o], c.morphisms[m].name}) &&
                !(m == e))  // e o e handled above
                alg.mult_[e * d + m][m] = Scalar::one(field);
        }
    }
    alg.unit_.assign(d, Scalar::zero(field));
    for (const auto& id_name : c.identities) {
        Algebra::Coord e(d, Scalar::zero(field));
        e[mor_index[id_name]] = Scalar::one(field);
        alg.unit_[mor_index[id_name]] += Scalar::one(field);
        alg.idempotents_.push_back(std::move(e));
    }
    alg.finalize_and_validate();
    return std::make_shared<Algebra>(std::move(alg));
}

Bimodule dual_bimodule(const AlgebraPtr& a) {
    Bimodule b;
    b.algebra_left = a;
    b.algebra_right = a;
    b.dim = a->dim();
    for (std::size_t i = 0; i < a->dim(); ++i) {
        b.left_action.push_back(transpose(a->right_mult(i)));
        b.right_action.push_back(transpose(a->left_mult(i)));
    }
    // left/right module axioms and commuting actions
    for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j) {
            Matrix lw(b.dim, b.dim, a->field()), rw(b.dim, b.dim, a->field());
            const auto& c = a->mult(i, j);
            for (std::size_t l = 0; l < a->dim(); ++l) {
                if (c[l].is_zero()) continue;
                lw = lw + c[l] * b.left_action[l];
                rw = rw + c[l] * b.right_action[l];
            }
            if (b.left_action[i] * b.left_action[j] != lw)
                throw semantic_error("BimoduleAxiom", "left action fails on dual bimodule");
            if (b.right_action[j] * b.right_action[i] != rw)
                throw semantic_error("BimoduleAxiom", "right action fails on dual bimodule");
            if (b.left_action[i] * b.right_action[j] != b.right_action[j] * b.left_action[i])
                throw semantic_error("BimoduleAxiom", "dual bimodule actions do not commute");
        }
    return b;
}

namespace {

// Subspace powers J, J^2, ... until zero; throws when the chain stagnates.
void check_nilpotent_ideal(const Algebra& a, const Matrix& rad) {
    const std::size_t d = a.dim();
    // two-sided ideal
    for (std::size_t i = 0; i < d; ++i) {
        if (!solve(rad, a.left_mult(i) * rad) || !solve(rad, a.right_mult(i) * rad))
            throw semantic_error("RadicalCheck", "radical candidate is not a two-sided ideal");
    }
    Matrix power = rad;
    for (std::size_t step = 0; step <= d; ++step) {
        if (power.cols() == 0) return;  // nilpotent
        Matrix next(d, 0, a.field());
        for (std::size_t x = 0; x < power.cols(); ++x) {
            Algebra::Coord xc(d, Scalar::zero(a.field()));
            for (std::size_t l = 0; l < d; ++l) xc[l] = power.at(l, x);
            next = hstack(next, a.element_left_mult(xc) * rad);
        }
        next = column_space_basis(next);
        // J^{m+1} is contained in J^m, so stagnation at nonzero means not nilpotent
        if (next.cols() == power.cols())
            throw semantic_error("RadicalCheck", "radical candidate is not nilpotent");
        power = next;
    }
    throw semantic_error("RadicalCheck", "radical candidate is not nilpotent");
}

Matrix trace_form_radical(const Algebra& a) {
    const std::size_t d = a.dim();
    Matrix gram(d, d, a.field());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Scalar tr = Scalar::zero(a.field());
            const Matrix& li = a.left_mult(i);
            const Matrix& lj = a.left_mult(j);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s)
                    if (!li.at(r, s).is_zero() && !lj.at(s, r).is_zero())
                        tr += li.at(r, s) * lj.at(s, r);
            gram.at(i, j) = tr;
            gram.at(j, i) = tr;
        }
    return kernel_basis(gram);
}

}  // namespace

Matrix radical(const AlgebraPtr& a) {
    if (a->cached_radical()) {
        Matrix rad = *a->cached_radical();
        check_nilpotent_ideal(*a, rad);
        return rad;
    }
    bool char_ok = a->field().kind == FieldSpec::Kind::rationals ||
                   a->field().characteristic > a->dim();
    if (!char_ok)
        throw semantic_error("UnsupportedCharacteristic",
                             "radical needs a quiver presentation, Q, or F_p with p > dim");
    Matrix rad = trace_form_radical(*a);
    check_nilpotent_ideal(*a, rad);
    // semisimple quotient: the trace form of the quotient algebra is
    // nondegenerate (Dickson criterion, valid under the characteristic guard)
    QuotientMaps q = quotient_by_column_space(rad, a->dim());
    const std::size_t qd = q.proj.rows();
    if (qd > 0) {
        std::vector<Matrix> qmult;
        for (std::size_t i = 0; i < qd; ++i) {
            Algebra::Coord xi(a->dim(), Scalar::zero(a->field()));
            for (std::size_t l = 0; l < a->dim(); ++l) xi[l] = q.section.at(l, i);
            qmult.push_back(q.proj * a->element_left_mult(xi) * q.section);
        }
        Matrix gram(qd, qd, a->field());
        for (std::size_t i = 0; i < qd; ++i)
            for (std::size_t j = 0; j < qd; ++j) {
                Scalar tr = Scalar::zero(a->field());
                Matrix prod = qmult[i] * qmult[j];
                for (std::size_t r = 0; r < qd; ++r) tr += prod.at(r, r);
                gram.at(i, j) = tr;
            }
        if (kernel_basis(gram).cols() != 0)
            throw semantic_error("RadicalCheck", "quotient by radical is not semisimple");
    }
    return rad;
}

}  // namespace naka
