#include "naka/functors.hpp"

namespace naka {

namespace {

constexpr std::size_t kValidateLimit = 120;  // skip axiom checks on larger objects

bool small_enough(const ModuleRep& a, const ModuleRep& b) {
    return a.dim() <= kValidateLimit && b.dim() <= kValidateLimit;
}

ModuleRep dlambda_left(const AlgebraPtr& a) {
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < a->dim(); ++i) acts.push_back(transpose(a->right_mult(i)));
    return ModuleRep::make(a, Side::left, std::move(acts), "D(Lambda)", false);
}

void require_left(const ModuleRep& m, const char* op) {
    if (m.side() != Side::left)
        throw semantic_error("MapShape", std::string(op) + " expects a left module");
}

// --- nu(X) = D(Lambda) (x)_Lambda X --------------------------------------
//
// proj_of(j, v) is the class of f_j (x) v; section_col(c) a representative
// of the c-th basis vector inside D(Lambda) (x)_k X.
struct NuStructure {
    ModuleRep result;
    std::function<Matrix(std::size_t, const Matrix&)> proj_of;
    std::function<Matrix(std::size_t)> section_col;
};

NuStructure nu_structure(const ModuleRep& x) {
    const AlgebraPtr& a = x.algebra();
    const FieldSpec& f = a->field();
    const std::size_t d = a->dim(), n = x.dim();
    require_left(x, "nu");

    if (x.shape() && x.shape()->kind == ModuleRep::TensorShape::Kind::free_over) {
        // nu(Lambda (x) W) = D(Lambda) (x) W, projecting f_j (x) b_i (x) w
        // to (f_j . b_i) (x) w
        const std::size_t inner = x.shape()->inner_dim;
        NuStructure ns;
        ns.result = ModuleRep::make_cofree(a, inner, "nu(" + x.name() + ")");
        ns.proj_of = [a, d, inner, f](std::size_t j, const Matrix& v) {
            Matrix out(d * inner, 1, f);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t y = 0; y < inner; ++y) {
                    const Scalar& c = v.at(i * inner + y, 0);
                    if (c.is_zero()) continue;
                    for (std::size_t m = 0; m < d; ++m) {
                        const Scalar& w = a->mult(i, m)[j];
                        if (!w.is_zero()) out.at(m * inner + y, 0) += w * c;
                    }
                }
            return out;
        };
        ns.section_col = [a, d, n, inner, f](std::size_t c) {
            // f_m (x) 1 (x) e_y for c = (m, y)
            std::size_t m = c / inner, y = c % inner;
            Matrix col(d * n, 1, f);
            for (std::size_t i = 0; i < d; ++i)
                if (!a->unit()[i].is_zero()) col.at(m * n + i * inner + y, 0) = a->unit()[i];
            return col;
        };
        return ns;
    }

    // generic coequalizer of D(Lambda) (x) Lambda (x) X => D(Lambda) (x) X
    Matrix relations(d * n, 0, f);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix r = kron(transpose(a->left_mult(i)), Matrix::identity(n, f)) -
                   kron(Matrix::identity(d, f), x.action(i));
        relations = hstack(relations, r);
    }
    QuotientMaps q = quotient_by_column_space(column_space_basis(relations), d * n);
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < d; ++i)
        acts.push_back(q.proj * kron(transpose(a->right_mult(i)), Matrix::identity(n, f)) *
                       q.section);
    ModuleRep res = ModuleRep::make(a, Side::left, std::move(acts), "nu(" + x.name() + ")",
                                    q.proj.rows() <= kValidateLimit);
    res = attach_quotient_data(std::move(res), q.proj, q.section);
    NuStructure ns;
    ns.result = res;
    Matrix proj = q.proj, section = q.section;
    ns.proj_of = [proj, n, f](std::size_t j, const Matrix& v) {
        Matrix big(proj.cols(), 1, f);
        for (std::size_t r = 0; r < v.rows(); ++r) big.at(j * n + r, 0) = v.at(r, 0);
        return proj * big;
    };
    ns.section_col = [section, f](std::size_t c) {
        Matrix col(section.rows(), 1, f);
        for (std::size_t r = 0; r < section.rows(); ++r) col.at(r, 0) = section.at(r, c);
        return col;
    };
    return ns;
}

// --- nu^-(X) = Hom_Lambda(D(Lambda), X) -----------------------------------
struct NuMinusStructure {
    ModuleRep result;
    // hom matrices are X.dim x d (column j = value on f_j)
    std::function<Matrix(const Matrix&)> coords;
    std::function<Matrix(std::size_t)> hom_of;
};

NuMinusStructure nu_minus_structure(const ModuleRep& x) {
    const AlgebraPtr& a = x.algebra();
    const FieldSpec& f = a->field();
    const std::size_t d = a->dim(), n = x.dim();
    require_left(x, "nu^-");

    if (x.shape() && x.shape()->kind == ModuleRep::TensorShape::Kind::cofree_over) {
        // Hom(D(Lambda), D(Lambda) (x) W) = Lambda (x) W via
        // kappa(a (x) w): f -> (f.a) (x) w; inverse by evaluation at the unit.
        const std::size_t inner = x.shape()->inner_dim;
        NuMinusStructure ns;
        ns.result = ModuleRep::make_free(a, inner, "nu^-(" + x.name() + ")");
        ns.hom_of = [a, d, inner, f](std::size_t c) {
            std::size_t ai = c / inner, y = c % inner;
            Matrix h(d * inner, d, f);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t m = 0; m < d; ++m) {
                    const Scalar& w = a->mult(ai, m)[j];
                    if (!w.is_zero()) h.at(m * inner + y, j) += w;
                }
            return h;
        };
        ns.coords = [a, d, inner, f](const Matrix& h) {
            Matrix out(d * inner, 1, f);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t y = 0; y < inner; ++y) {
                    Scalar acc = Scalar::zero(f);
                    for (std::size_t m = 0; m < d; ++m)
                        if (!a->unit()[m].is_zero()) acc += a->unit()[m] * h.at(m * inner + y, j);
                    out.at(j * inner + y, 0) = acc;
                }
            return out;
        };
        return ns;
    }

    ModuleRep dl = dlambda_left(a);
    std::vector<ModuleMap> homs = hom_space(dl, x);
    const std::size_t hd = homs.size();
    Matrix embedding(d * n, hd, f);  // column-major vec of each hom matrix
    for (std::size_t l = 0; l < hd; ++l)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t r = 0; r < n; ++r)
                embedding.at(j * n + r, l) = homs[l].matrix.at(r, j);
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < d; ++i) {
        // (a.h)(f) = h(f.a): precompose with the right action of a on D(Lambda)
        Matrix images(d * n, hd, f);
        Matrix rdi = transpose(a->left_mult(i));
        for (std::size_t l = 0; l < hd; ++l) {
            Matrix moved = homs[l].matrix * rdi;
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t r = 0; r < n; ++r) images.at(j * n + r, l) = moved.at(r, j);
        }
        acts.push_back(coordinates_in_basis(embedding, images));
    }
    ModuleRep res = ModuleRep::make(a, Side::left, std::move(acts), "nu^-(" + x.name() + ")",
                                    hd <= kValidateLimit);
    res = attach_hom_embedding(std::move(res), embedding);
    NuMinusStructure ns;
    ns.result = res;
    std::vector<Matrix> hom_mats;
    for (const auto& h : homs) hom_mats.push_back(h.matrix);
    Matrix emb = embedding;
    ns.coords = [emb, d, n, f](const Matrix& h) {
        Matrix v(d * n, 1, f);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t r = 0; r < n; ++r) v.at(j * n + r, 0) = h.at(r, j);
        return coordinates_in_basis(emb, v);
    };
    ns.hom_of = [hom_mats](std::size_t c) { return hom_mats[c]; };
    return ns;
}

Matrix column_of(const Matrix& m, std::size_t c) {
    Matrix col(m.rows(), 1, m.field());
    for (std::size_t r = 0; r < m.rows(); ++r) col.at(r, 0) = m.at(r, c);
    return col;
}

}  // namespace

// ---------------------------------------------------------------------------

ModuleRep nakayama_apply(const ModuleRep& m) { return nu_structure(m).result; }

ModuleMap nakayama_apply_map(const ModuleMap& f) {
    NuStructure src = nu_structure(f.source), tgt = nu_structure(f.target);
    const AlgebraPtr& a = f.source.algebra();
    const FieldSpec& fl = a->field();
    const std::size_t d = a->dim(), n = f.source.dim();
    Matrix out(tgt.result.dim(), src.result.dim(), fl);
    for (std::size_t c = 0; c < src.result.dim(); ++c) {
        Matrix sec = src.section_col(c);  // in D(Lambda) (x) source
        for (std::size_t j = 0; j < d; ++j) {
            Matrix block(n, 1, fl);
            bool nonzero = false;
            for (std::size_t r = 0; r < n; ++r) {
                block.at(r, 0) = sec.at(j * n + r, 0);
                nonzero = nonzero || !block.at(r, 0).is_zero();
            }
            if (!nonzero) continue;
            Matrix pushed = tgt.proj_of(j, f.matrix * block);
            for (std::size_t r = 0; r < out.rows(); ++r) out.at(r, c) += pushed.at(r, 0);
        }
    }
    return make_map(src.result, tgt.result, std::move(out),
                    small_enough(src.result, tgt.result));
}

ModuleRep nakayama_right_apply(const ModuleRep& m) { return nu_minus_structure(m).result; }

ModuleMap nakayama_right_apply_map(const ModuleMap& f) {
    NuMinusStructure src = nu_minus_structure(f.source), tgt = nu_minus_structure(f.target);
    const FieldSpec& fl = f.source.algebra()->field();
    Matrix out(tgt.result.dim(), src.result.dim(), fl);
    for (std::size_t c = 0; c < src.result.dim(); ++c) {
        Matrix coords = tgt.coords(f.matrix * src.hom_of(c));
        for (std::size_t r = 0; r < out.rows(); ++r) out.at(r, c) = coords.at(r, 0);
    }
    return make_map(src.result, tgt.result, std::move(out),
                    small_enough(src.result, tgt.result));
}

ModuleRep P_apply(const ModuleRep& m) {
    require_left(m, "P");
    return ModuleRep::make_free(m.algebra(), m.dim(), "P(" + m.name() + ")");
}

ModuleMap P_apply_map(const ModuleMap& f) {
    Matrix k = kron(Matrix::identity(f.source.algebra()->dim(), f.source.algebra()->field()),
                    f.matrix);
    return make_map(P_apply(f.source), P_apply(f.target), std::move(k), false);
}

ModuleRep I_apply(const ModuleRep& m) {
    require_left(m, "I");
    return ModuleRep::make_cofree(m.algebra(), m.dim(), "I(" + m.name() + ")");
}

ModuleMap I_apply_map(const ModuleMap& f) {
    Matrix k = kron(Matrix::identity(f.source.algebra()->dim(), f.source.algebra()->field()),
                    f.matrix);
    return make_map(I_apply(f.source), I_apply(f.target), std::move(k), false);
}

ModuleRep T_apply(const ModuleRep& m) {
    return P_apply(nakayama_apply(m)).renamed("T(" + m.name() + ")");
}

ModuleRep S_apply(const ModuleRep& m) {
    return I_apply(nakayama_right_apply(m)).renamed("S(" + m.name() + ")");
}

ModuleMap unit_lambda(const ModuleRep& m) {
    NuStructure ns = nu_structure(m);
    NuMinusStructure nms = nu_minus_structure(ns.result);
    const AlgebraPtr& a = m.algebra();
    const FieldSpec& f = a->field();
    const std::size_t d = a->dim();
    Matrix lam(nms.result.dim(), m.dim(), f);
    for (std::size_t k = 0; k < m.dim(); ++k) {
        Matrix ek(m.dim(), 1, f);
        ek.at(k, 0) = Scalar::one(f);
        Matrix phi(ns.result.dim(), d, f);  // f_j -> class(f_j (x) e_k)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix col = ns.proj_of(j, ek);
            for (std::size_t r = 0; r < phi.rows(); ++r) phi.at(r, j) = col.at(r, 0);
        }
        Matrix coords = nms.coords(phi);
        for (std::size_t r = 0; r < lam.rows(); ++r) lam.at(r, k) = coords.at(r, 0);
    }
    return make_map(m, nms.result, std::move(lam), small_enough(m, nms.result));
}

ModuleMap counit_sigma(const ModuleRep& m) {
    NuMinusStructure nms = nu_minus_structure(m);
    NuStructure ns = nu_structure(nms.result);
    const AlgebraPtr& a = m.algebra();
    const FieldSpec& f = a->field();
    const std::size_t d = a->dim(), hd = nms.result.dim();
    Matrix sig(m.dim(), ns.result.dim(), f);
    for (std::size_t c = 0; c < ns.result.dim(); ++c) {
        Matrix sec = ns.section_col(c);  // in D(Lambda) (x) nu^-(m)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < hd; ++l) {
                const Scalar& w = sec.at(j * hd + l, 0);
                if (w.is_zero()) continue;
                Matrix h = nms.hom_of(l);  // evaluate at f_j
                for (std::size_t r = 0; r < m.dim(); ++r)
                    if (!h.at(r, j).is_zero()) sig.at(r, c) += w * h.at(r, j);
            }
    }
    return make_map(ns.result, m, std::move(sig), small_enough(ns.result, m));
}

// --- generic bimodule functors --------------------------------------------

ModuleRep tensor_apply(const Bimodule& b, const ModuleRep& m) {
    if (!same_algebra(b.algebra_right, m.algebra()) || m.side() != Side::left)
        throw semantic_error("MapShape", "tensor_apply needs a left module over the right algebra");
    const FieldSpec& f = m.algebra()->field();
    const std::size_t n = m.dim(), bd = b.dim, d = m.algebra()->dim();
    Matrix relations(bd * n, 0, f);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix r = kron(b.right_action[i], Matrix::identity(n, f)) -
                   kron(Matrix::identity(bd, f), m.action(i));
        relations = hstack(relations, r);
    }
    QuotientMaps q = quotient_by_column_space(column_space_basis(relations), bd * n);
    const AlgebraPtr& gamma = b.algebra_left;
    std::vector<Matrix> acts;
    for (std::size_t g = 0; g < gamma->dim(); ++g)
        acts.push_back(q.proj * kron(b.left_action[g], Matrix::identity(n, f)) * q.section);
    ModuleRep res = ModuleRep::make(gamma, Side::left, std::move(acts),
                                    "B(x)" + m.name(), q.proj.rows() <= kValidateLimit);
    return attach_quotient_data(std::move(res), q.proj, q.section);
}

ModuleMap tensor_apply_map(const Bimodule& b, const ModuleMap& f) {
    ModuleRep src = tensor_apply(b, f.source), tgt = tensor_apply(b, f.target);
    const FieldSpec& fl = f.source.algebra()->field();
    Matrix mid = kron(Matrix::identity(b.dim, fl), f.matrix);
    Matrix mat = *tgt.quot_proj() * mid * *src.quot_section();
    return make_map(src, tgt, std::move(mat), small_enough(src, tgt));
}

TensorSpace tensor_space_over(const ModuleRep& right, const ModuleRep& left) {
    if (right.side() != Side::right || left.side() != Side::left ||
        !same_algebra(right.algebra(), left.algebra()))
        throw semantic_error("MapShape", "tensor_space_over needs (right, left) over one algebra");
    const FieldSpec& f = left.algebra()->field();
    const std::size_t x = right.dim(), n = left.dim(), d = left.algebra()->dim();
    Matrix relations(x * n, 0, f);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix r = kron(right.action(i), Matrix::identity(n, f)) -
                   kron(Matrix::identity(x, f), left.action(i));
        relations = hstack(relations, r);
    }
    QuotientMaps q = quotient_by_column_space(column_space_basis(relations), x * n);
    return TensorSpace{q.proj.rows(), q.proj, q.section};
}

ModuleRep hom_apply(const Bimodule& b, const ModuleRep& m) {
    if (!same_algebra(b.algebra_left, m.algebra()) || m.side() != Side::left)
        throw semantic_error("MapShape", "hom_apply needs a left module over the left algebra");
    const AlgebraPtr& gamma = b.algebra_left;
    const AlgebraPtr& lambda = b.algebra_right;
    const FieldSpec& f = gamma->field();
    ModuleRep b_left = ModuleRep::make(gamma, Side::left, b.left_action, "B", false);
    std::vector<ModuleMap> homs = hom_space(b_left, m);
    const std::size_t hd = homs.size(), n = m.dim(), bd = b.dim;
    Matrix embedding(bd * n, hd, f);
    for (std::size_t l = 0; l < hd; ++l)
        for (std::size_t j = 0; j < bd; ++j)
            for (std::size_t r = 0; r < n; ++r)
                embedding.at(j * n + r, l) = homs[l].matrix.at(r, j);
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < lambda->dim(); ++i) {
        Matrix images(bd * n, hd, f);
        for (std::size_t l = 0; l < hd; ++l) {
            Matrix moved = homs[l].matrix * b.right_action[i];
            for (std::size_t j = 0; j < bd; ++j)
                for (std::size_t r = 0; r < n; ++r) images.at(j * n + r, l) = moved.at(r, j);
        }
        acts.push_back(coordinates_in_basis(embedding, images));
    }
    ModuleRep res = ModuleRep::make(lambda, Side::left, std::move(acts),
                                    "Hom(B," + m.name() + ")", hd <= kValidateLimit);
    return attach_hom_embedding(std::move(res), embedding);
}

ModuleMap hom_apply_map(const Bimodule& b, const ModuleMap& f) {
    ModuleRep src = hom_apply(b, f.source), tgt = hom_apply(b, f.target);
    const FieldSpec& fl = f.source.algebra()->field();
    const std::size_t bd = b.dim;
    Matrix out(tgt.dim(), src.dim(), fl);
    const Matrix& es = *src.hom_embedding();
    const Matrix& et = *tgt.hom_embedding();
    for (std::size_t c = 0; c < src.dim(); ++c) {
        // reshape, push through f, express in the target hom basis
        Matrix h(f.source.dim(), bd, fl);
        for (std::size_t j = 0; j < bd; ++j)
            for (std::size_t r = 0; r < f.source.dim(); ++r)
                h.at(r, j) = es.at(j * f.source.dim() + r, c);
        Matrix moved = f.matrix * h;
        Matrix v(bd * f.target.dim(), 1, fl);
        for (std::size_t j = 0; j < bd; ++j)
            for (std::size_t r = 0; r < f.target.dim(); ++r)
                v.at(j * f.target.dim() + r, 0) = moved.at(r, j);
        Matrix coords = coordinates_in_basis(et, v);
        for (std::size_t r = 0; r < out.rows(); ++r) out.at(r, c) = coords.at(r, 0);
    }
    return make_map(src, tgt, std::move(out), small_enough(src, tgt));
}

// --- functor handles -------------------------------------------------------

Functor Functor::identity_f(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::identity;
    f.algebra_ = std::move(a);
    f.name_ = "Id";
    return f;
}
Functor Functor::nu(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::nu;
    f.algebra_ = std::move(a);
    f.name_ = "nu";
    return f;
}
Functor Functor::nu_minus(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::nu_minus;
    f.algebra_ = std::move(a);
    f.name_ = "nu^-";
    return f;
}
Functor Functor::P(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::induce_p;
    f.algebra_ = std::move(a);
    f.name_ = "P";
    return f;
}
Functor Functor::I(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::coinduce_i;
    f.algebra_ = std::move(a);
    f.name_ = "I";
    return f;
}
Functor Functor::T(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::tee;
    f.algebra_ = std::move(a);
    f.name_ = "T";
    return f;
}
Functor Functor::S(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::ess;
    f.algebra_ = std::move(a);
    f.name_ = "S";
    return f;
}
Functor Functor::omega(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::omega;
    f.algebra_ = std::move(a);
    f.name_ = "Omega";
    return f;
}
Functor Functor::sigma(AlgebraPtr a) {
    Functor f;
    f.kind_ = Kind::sigma;
    f.algebra_ = std::move(a);
    f.name_ = "Sigma";
    return f;
}
Functor Functor::tensor(Bimodule b) {
    Functor f;
    f.kind_ = Kind::tensor;
    f.algebra_ = b.algebra_left;
    f.bimodule_ = std::make_shared<Bimodule>(std::move(b));
    f.name_ = "B(x)-";
    return f;
}
Functor Functor::hom(Bimodule b) {
    Functor f;
    f.kind_ = Kind::hom;
    f.algebra_ = b.algebra_right;
    f.bimodule_ = std::make_shared<Bimodule>(std::move(b));
    f.name_ = "Hom(B,-)";
    return f;
}
Functor Functor::compose(std::vector<Functor> factors) {
    Functor f;
    f.kind_ = Kind::compose;
    if (!factors.empty()) f.algebra_ = factors.front().algebra_;
    f.factors_ = std::move(factors);
    f.name_ = "";
    for (const auto& g : f.factors_) f.name_ += (f.name_.empty() ? "" : " o ") + g.name_;
    return f;
}

ModuleRep Functor::apply(const ModuleRep& m) const {
    switch (kind_) {
        case Kind::identity: return m;
        case Kind::nu: return nakayama_apply(m);
        case Kind::nu_minus: return nakayama_right_apply(m);
        case Kind::induce_p: return P_apply(m);
        case Kind::coinduce_i: return I_apply(m);
        case Kind::tee: return T_apply(m);
        case Kind::ess: return S_apply(m);
        case Kind::omega: return omega_step(m).module;
        case Kind::sigma: return sigma_step(m).module;
        case Kind::tensor: return tensor_apply(*bimodule_, m);
        case Kind::hom: return hom_apply(*bimodule_, m);
        case Kind::compose: {
            ModuleRep cur = m;
            for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) cur = it->apply(cur);
            return cur;
        }
    }
    throw std::logic_error("unreachable");
}

ModuleMap Functor::apply(const ModuleMap& f) const {
    switch (kind_) {
        case Kind::identity: return f;
        case Kind::nu: return nakayama_apply_map(f);
        case Kind::nu_minus: return nakayama_right_apply_map(f);
        case Kind::induce_p: return P_apply_map(f);
        case Kind::coinduce_i: return I_apply_map(f);
        case Kind::tee: return P_apply_map(nakayama_apply_map(f));
        case Kind::ess: return I_apply_map(nakayama_right_apply_map(f));
        case Kind::omega: {
            SubModule ox = omega_step(f.source), oy = omega_step(f.target);
            ModuleMap pif = P_apply_map(I_apply_map(f));
            Matrix restricted = coordinates_in_basis(
                oy.inclusion.matrix, pif.matrix * ox.inclusion.matrix);
            return make_map(ox.module, oy.module, std::move(restricted),
                            small_enough(ox.module, oy.module));
        }
        case Kind::sigma: {
            QuotientModule sx = sigma_step(f.source), sy = sigma_step(f.target);
            // PT(f) = P(P(nu(f)))
            ModuleMap ptf = P_apply_map(P_apply_map(nakayama_apply_map(f)));
            Matrix sec = *solve(sx.projection.matrix,
                                Matrix::identity(sx.module.dim(),
                                                 f.source.algebra()->field()));
            Matrix mat = sy.projection.matrix * ptf.matrix * sec;
            return make_map(sx.module, sy.module, std::move(mat),
                            small_enough(sx.module, sy.module));
        }
        case Kind::tensor: return tensor_apply_map(*bimodule_, f);
        case Kind::hom: return hom_apply_map(*bimodule_, f);
        case Kind::compose: {
            ModuleMap cur = f;
            for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) cur = it->apply(cur);
            return cur;
        }
    }
    throw std::logic_error("unreachable");
}

// --- adjunctions -----------------------------------------------------------

Adjunction adj_nu(const AlgebraPtr& a) {
    Adjunction adj;
    adj.left = Functor::nu(a);
    adj.right = Functor::nu_minus(a);
    adj.unit = [](const ModuleRep& m) { return unit_lambda(m); };
    adj.counit = [](const ModuleRep& m) { return counit_sigma(m); };
    adj.name = "nu -| nu^-";
    return adj;
}

Adjunction adj_P_I(const AlgebraPtr& a) {
    Adjunction adj;
    adj.left = Functor::P(a);
    adj.right = Functor::I(a);
    adj.unit = [a](const ModuleRep& m) {
        // x -> sum_i f_i (x) 1 (x) (b_i x)
        const FieldSpec& f = a->field();
        const std::size_t d = a->dim(), n = m.dim();
        Matrix mat(d * d * n, n, f);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < d; ++j) {
                Matrix bj = m.action(j);
                for (std::size_t i = 0; i < d; ++i) {
                    if (a->unit()[i].is_zero()) continue;
                    for (std::size_t y = 0; y < n; ++y)
                        if (!bj.at(y, k).is_zero())
                            mat.at(j * d * n + i * n + y, k) += a->unit()[i] * bj.at(y, k);
                }
            }
        return make_map(m, I_apply(P_apply(m)), std::move(mat), m.dim() <= kValidateLimit);
    };
    adj.counit = [a](const ModuleRep& m) {
        // b_i (x) f_j (x) y -> f_j(1) * (b_i y)
        const FieldSpec& f = a->field();
        const std::size_t d = a->dim(), n = m.dim();
        Matrix mat(n, d * d * n, f);
        for (std::size_t i = 0; i < d; ++i) {
            Matrix bi = m.action(i);
            for (std::size_t j = 0; j < d; ++j) {
                if (a->unit()[j].is_zero()) continue;
                for (std::size_t y = 0; y < n; ++y)
                    for (std::size_t x = 0; x < n; ++x)
                        if (!bi.at(x, y).is_zero())
                            mat.at(x, i * d * n + j * n + y) += a->unit()[j] * bi.at(x, y);
            }
        }
        return make_map(P_apply(I_apply(m)), m, std::move(mat), m.dim() <= kValidateLimit);
    };
    adj.name = "P -| I";
    return adj;
}

Adjunction adj_T_P(const AlgebraPtr& a) {
    Adjunction adj;
    adj.left = Functor::T(a);
    adj.right = Functor::P(a);
    Adjunction pi = adj_P_I(a);
    adj.unit = [pi](const ModuleRep& m) {
        // nu^-(eta^{PI} at nu(m)) o lambda_m, landing in P(T(m))
        ModuleMap lam = unit_lambda(m);
        ModuleMap eta_nu = pi.unit(nakayama_apply(m));
        ModuleMap moved = nakayama_right_apply_map(eta_nu);
        Matrix mat = moved.matrix * lam.matrix;
        return make_map(m, P_apply(T_apply(m)), std::move(mat), m.dim() <= kValidateLimit);
    };
    adj.counit = [a, pi](const ModuleRep& m) {
        // same matrix as the P -| I counit, with source T(P(m)) = P(I(m))
        ModuleMap eps = pi.counit(m);
        return make_map(T_apply(P_apply(m)), m, eps.matrix, m.dim() <= kValidateLimit);
    };
    adj.name = "T -| P";
    return adj;
}

Adjunction adj_I_S(const AlgebraPtr& a) {
    Adjunction adj;
    adj.left = Functor::I(a);
    adj.right = Functor::S(a);
    Adjunction pi = adj_P_I(a);
    adj.unit = [a, pi](const ModuleRep& m) {
        // same matrix as the P -| I unit, landing in S(I(m)) = I(P(m))
        ModuleMap eta = pi.unit(m);
        return make_map(m, S_apply(I_apply(m)), eta.matrix, m.dim() <= kValidateLimit);
    };
    adj.counit = [a, pi](const ModuleRep& m) {
        // sigma_m o nu(eps^{PI} at nu^-(m))
        ModuleRep num = nakayama_right_apply(m);
        ModuleMap eps = pi.counit(num);
        ModuleMap moved = nakayama_apply_map(eps);
        ModuleMap sig = counit_sigma(m);
        Matrix mat = sig.matrix * moved.matrix;
        return make_map(I_apply(S_apply(m)), m, std::move(mat), m.dim() <= kValidateLimit);
    };
    adj.name = "I -| S";
    return adj;
}

SubModule omega_step(const ModuleRep& m) {
    Adjunction pi = adj_P_I(m.algebra());
    ModuleMap eps = pi.counit(m);
    if (rank(eps.matrix) != m.dim())
        throw theorem_violation("counit PI(m) -> m is not epi on " + m.name());
    SubModule k = kernel(eps);
    return SubModule{k.module.renamed("Omega(" + m.name() + ")"), k.inclusion};
}

QuotientModule sigma_step(const ModuleRep& m) {
    Adjunction tp = adj_T_P(m.algebra());
    ModuleMap alpha = tp.unit(m);
    if (rank(alpha.matrix) != m.dim())
        throw theorem_violation("unit m -> PT(m) is not mono on " + m.name());
    QuotientModule c = cokernel(alpha);
    return QuotientModule{c.module.renamed("Sigma(" + m.name() + ")"), c.projection};
}

Adjunction adj_sigma_omega(const AlgebraPtr& a) {
    // Sigma = Coker(unit of T -| P) is left adjoint to Omega = Ker(counit
    // of P -| I); the unit/counit below are the mates of the canonical
    // projection/inclusion under the composite adjunction PT -| PI.
    Adjunction adj;
    adj.left = Functor::sigma(a);
    adj.right = Functor::omega(a);
    Adjunction tp = adj_T_P(a);
    Adjunction pi = adj_P_I(a);
    adj.unit = [tp, pi](const ModuleRep& m) {
        // mate of p: PT(m) ->> Sigma(m), factored through Omega(Sigma m)
        QuotientModule sm = sigma_step(m);
        ModuleMap u1 = tp.unit(m);                    // m -> P T m
        ModuleMap u2 = pi.unit(T_apply(m));           // T m -> I P T m
        Matrix comp_unit = P_apply_map(u2).matrix * u1.matrix;  // m -> PI(PT m)
        ModuleMap pip = P_apply_map(I_apply_map(sm.projection));
        Matrix into_pi = pip.matrix * comp_unit;      // m -> PI(Sigma m)
        SubModule om = omega_step(sm.module);
        Matrix coords = coordinates_in_basis(om.inclusion.matrix, into_pi);
        return make_map(m, om.module, std::move(coords), m.dim() <= kValidateLimit);
    };
    adj.counit = [tp, pi](const ModuleRep& m) {
        // mate of i: Omega(m) -> PI(m), factored through Sigma(Omega m)
        const FieldSpec& f = m.algebra()->field();
        SubModule om = omega_step(m);
        ModuleMap h = om.inclusion;
        // PT(h) = P(T(h)) with T = P o nu
        ModuleMap th = P_apply_map(nakayama_apply_map(h));
        ModuleMap pth = P_apply_map(th);              // PT(Omega m) -> PT(PI m)
        ModuleMap eps_tp = tp.counit(I_apply(m));     // T P I m -> I m
        ModuleMap eps_pi = pi.counit(m);              // P I m -> m
        Matrix psi = eps_pi.matrix * P_apply_map(eps_tp).matrix * pth.matrix;
        // well defined on the cokernel of the unit
        ModuleMap alpha = tp.unit(om.module);
        if (!(psi * alpha.matrix).is_zero())
            throw theorem_violation("Sigma -| Omega counit does not kill the unit image");
        QuotientModule so = sigma_step(om.module);
        Matrix sec = *solve(so.projection.matrix, Matrix::identity(so.module.dim(), f));
        Matrix mat = psi * sec;
        return make_map(so.module, m, std::move(mat),
                        so.module.dim() <= kValidateLimit && m.dim() <= kValidateLimit);
    };
    adj.name = "Sigma -| Omega";
    return adj;
}

}  // namespace naka
