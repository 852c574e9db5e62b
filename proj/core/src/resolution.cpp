#include "naka/resolution.hpp"

namespace naka {

void check_complex(const ChainComplex& c) {
    for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k)
        if (!(c.differentials[k].matrix * c.differentials[k + 1].matrix).is_zero())
            throw semantic_error("ComplexAxiom",
                                 "d o d != 0 at degree " + std::to_string(c.lo + (long)k + 2));
}

Resolution projective_resolution(const ModuleRep& m, std::size_t max_len) {
    Resolution res;
    Cover c0 = projective_cover(m);
    res.minimal = c0.minimal;
    res.augmentation = c0.map;
    res.complex.lo = 0;
    res.complex.modules.push_back(c0.map.source);
    ModuleMap cur_cover = c0.map;
    for (std::size_t i = 0; i < max_len; ++i) {
        SubModule k = kernel(cur_cover);
        if (k.module.dim() == 0) {
            res.complete = true;
            break;
        }
        res.syzygies.push_back(k.module.renamed("Omega^" + std::to_string(i + 1)));
        Cover c = projective_cover(k.module);
        res.minimal = res.minimal && c.minimal;
        ModuleMap d = compose(k.inclusion, c.map);  // P_{i+1} -> P_i
        res.complex.modules.push_back(c.map.source);
        res.complex.differentials.push_back(
            make_map(c.map.source, res.complex.modules[i], d.matrix, false));
        cur_cover = c.map;
    }
    if (!res.complete) {
        SubModule k = kernel(cur_cover);
        if (k.module.dim() == 0) res.complete = true;
        else res.syzygies.push_back(k.module.renamed("Omega^" +
                                                     std::to_string(max_len + 1)));
    }
    check_complex(res.complex);
    // exactness certificates for the augmented complex
    if (!(res.augmentation.matrix *
          (res.complex.differentials.empty()
               ? Matrix(res.complex.modules[0].dim(), 0, m.algebra()->field())
               : res.complex.differentials[0].matrix))
             .is_zero())
        throw semantic_error("ResolutionExactness", "augmentation does not kill im d_1");
    if (rank(res.augmentation.matrix) != m.dim())
        throw semantic_error("ResolutionExactness", "augmentation is not onto");
    for (std::size_t k = 0; k < res.complex.differentials.size(); ++k) {
        const Matrix& d_out = k == 0 ? res.augmentation.matrix
                                     : res.complex.differentials[k - 1].matrix;
        if (homology_dim(res.complex.differentials[k].matrix, d_out) != 0)
            throw semantic_error("ResolutionExactness",
                                 "resolution not exact at degree " + std::to_string(k));
    }
    if (res.complete && !res.complex.differentials.empty()) {
        const ModuleMap& last = res.complex.differentials.back();
        if (kernel_basis(last.matrix).cols() != 0)
            throw semantic_error("ResolutionExactness", "final differential is not injective");
    }
    return res;
}

Coresolution injective_coresolution(const ModuleRep& m, std::size_t max_len) {
    AlgebraPtr op = opposite(m.algebra());
    ModuleRep w = swap_to_opposite(dual(m), op);
    Resolution res = projective_resolution(w, max_len);
    Coresolution cor;
    cor.minimal = res.minimal;
    cor.complete = res.complete;
    const AlgebraPtr& a = m.algebra();
    auto back = [&](const ModuleRep& p) { return swap_to_opposite(dual(p), a); };
    for (const auto& p : res.complex.modules) cor.modules.push_back(back(p));
    for (std::size_t k = 0; k < res.complex.differentials.size(); ++k) {
        const ModuleMap& d = res.complex.differentials[k];
        cor.maps.push_back(
            make_map(cor.modules[k], cor.modules[k + 1], transpose(d.matrix), false));
    }
    // augmentation: m = D(D(m)) -> D(P_0)
    cor.augmentation = make_map(m, cor.modules[0], transpose(res.augmentation.matrix), false);
    for (const auto& s : res.syzygies) cor.cosyzygies.push_back(back(s));
    return cor;
}

DerivedTable left_derived_nu(const ModuleRep& m, std::size_t bound) {
    DerivedTable t;
    t.functor_tag = "L nu";
    t.bound = bound;
    if (m.dim() == 0) {
        t.dims.assign(bound + 1, 0);
        t.resolution_complete = true;
        return t;
    }
    Resolution res = projective_resolution(m, bound + 1);
    t.resolution_complete = res.complete;
    std::vector<Matrix> nd;  // nu(d_i)
    for (const auto& d : res.complex.differentials)
        nd.push_back(nakayama_apply_map(d).matrix);
    std::vector<std::size_t> nu_dims;
    for (const auto& p : res.complex.modules) nu_dims.push_back(nakayama_apply(p).dim());
    const FieldSpec& f = m.algebra()->field();
    for (std::size_t i = 0; i <= bound; ++i) {
        if (i >= res.complex.modules.size()) {
            t.dims.push_back(0);
            continue;
        }
        Matrix d_in = i < nd.size() ? nd[i] : Matrix(nu_dims[i], 0, f);
        if (i == 0) {
            t.dims.push_back(nu_dims[0] - rank(d_in));
        } else {
            Matrix d_out = nd[i - 1];
            t.dims.push_back(homology_dim(d_in, d_out));
        }
    }
    return t;
}

DerivedTable right_derived_nu_minus(const ModuleRep& m, std::size_t bound) {
    DerivedTable t;
    t.functor_tag = "R nu^-";
    t.bound = bound;
    if (m.dim() == 0) {
        t.dims.assign(bound + 1, 0);
        t.resolution_complete = true;
        return t;
    }
    Coresolution cor = injective_coresolution(m, bound + 1);
    t.resolution_complete = cor.complete;
    std::vector<Matrix> nd;
    for (const auto& d : cor.maps) nd.push_back(nakayama_right_apply_map(d).matrix);
    std::vector<std::size_t> dims;
    for (const auto& p : cor.modules) dims.push_back(nakayama_right_apply(p).dim());
    const FieldSpec& f = m.algebra()->field();
    for (std::size_t i = 0; i <= bound; ++i) {
        if (i >= cor.modules.size()) {
            t.dims.push_back(0);
            continue;
        }
        Matrix d_out = i < nd.size() ? nd[i] : Matrix(0, dims[i], f);
        if (i == 0) {
            t.dims.push_back(dims[0] - rank(d_out));
        } else {
            Matrix d_in = nd[i - 1];
            t.dims.push_back(homology_dim(d_in, d_out));
        }
    }
    return t;
}

std::size_t tor_dim(std::size_t i, const ModuleRep& right, const ModuleRep& left) {
    if (right.side() != Side::right || left.side() != Side::left)
        throw semantic_error("MapShape", "tor_dim expects (right, left)");
    if (right.dim() == 0 || left.dim() == 0) return 0;
    AlgebraPtr op = opposite(right.algebra());
    ModuleRep w = swap_to_opposite(right, op);
    Resolution res = projective_resolution(w, i + 1);
    if (i >= res.complex.modules.size()) return 0;
    const AlgebraPtr& a = left.algebra();
    std::vector<TensorSpace> spaces;
    for (const auto& p : res.complex.modules)
        spaces.push_back(tensor_space_over(swap_to_opposite(p, a), left));
    const FieldSpec& f = a->field();
    const std::size_t n = left.dim();
    auto induced = [&](std::size_t k) {  // P_{k+1} (x) left -> P_k (x) left
        const Matrix& d = res.complex.differentials[k].matrix;
        return spaces[k].proj * kron(d, Matrix::identity(n, f)) * spaces[k + 1].section;
    };
    Matrix d_in = i < res.complex.differentials.size()
                      ? induced(i)
                      : Matrix(spaces[i].dim, 0, f);
    if (i == 0) return spaces[0].dim - rank(d_in);
    Matrix d_out = induced(i - 1);
    return homology_dim(d_in, d_out);
}

std::size_t ext_dim(std::size_t i, const ModuleRep& x, const ModuleRep& m) {
    if (x.side() != Side::left || m.side() != Side::left)
        throw semantic_error("MapShape", "ext_dim expects left modules");
    if (x.dim() == 0 || m.dim() == 0) return 0;
    Resolution res = projective_resolution(x, i + 1);
    if (i >= res.complex.modules.size()) return 0;
    const FieldSpec& f = m.algebra()->field();
    // hom bases per degree plus induced precomposition maps
    std::vector<std::vector<ModuleMap>> homs;
    for (const auto& p : res.complex.modules) homs.push_back(hom_space(p, m));
    auto embedding = [&](std::size_t k) {
        Matrix e(res.complex.modules[k].dim() * m.dim(), homs[k].size(), f);
        for (std::size_t l = 0; l < homs[k].size(); ++l)
            for (std::size_t cj = 0; cj < res.complex.modules[k].dim(); ++cj)
                for (std::size_t r = 0; r < m.dim(); ++r)
                    e.at(cj * m.dim() + r, l) = homs[k][l].matrix.at(r, cj);
        return e;
    };
    auto induced = [&](std::size_t k) {  // Hom(P_k, m) -> Hom(P_{k+1}, m)
        const Matrix& d = res.complex.differentials[k].matrix;
        Matrix img(res.complex.modules[k + 1].dim() * m.dim(), homs[k].size(), f);
        for (std::size_t l = 0; l < homs[k].size(); ++l) {
            Matrix moved = homs[k][l].matrix * d;
            for (std::size_t cj = 0; cj < res.complex.modules[k + 1].dim(); ++cj)
                for (std::size_t r = 0; r < m.dim(); ++r)
                    img.at(cj * m.dim() + r, l) = moved.at(r, cj);
        }
        return coordinates_in_basis(embedding(k + 1), img);
    };
    Matrix d_out = i < res.complex.differentials.size()
                       ? induced(i)
                       : Matrix(0, homs[i].size(), f);
    if (i == 0) return homs[0].size() - rank(d_out);
    Matrix d_in = induced(i - 1);
    return homology_dim(d_in, d_out);
}

bool is_projective(const ModuleRep& m) {
    if (m.dim() == 0) return true;
    Cover c = projective_cover(m);
    if (c.minimal) return kernel_basis(c.map.matrix).cols() == 0;
    // split test: look for a section of the cover
    std::vector<ModuleMap> homs = hom_space(m, c.map.source);
    if (homs.empty()) return false;
    const FieldSpec& f = m.algebra()->field();
    Matrix system(m.dim() * m.dim(), homs.size(), f);
    for (std::size_t l = 0; l < homs.size(); ++l) {
        Matrix comp = c.map.matrix * homs[l].matrix;
        for (std::size_t cj = 0; cj < m.dim(); ++cj)
            for (std::size_t r = 0; r < m.dim(); ++r)
                system.at(cj * m.dim() + r, l) = comp.at(r, cj);
    }
    Matrix id_vec(m.dim() * m.dim(), 1, f);
    for (std::size_t r = 0; r < m.dim(); ++r) id_vec.at(r * m.dim() + r, 0) = Scalar::one(f);
    return solve(system, id_vec).has_value();
}

bool is_injective(const ModuleRep& m) {
    AlgebraPtr op = opposite(m.algebra());
    return is_projective(swap_to_opposite(dual(m), op));
}

DimResult proj_dim(const ModuleRep& m, std::size_t bound) {
    if (m.dim() == 0) return DimResult{true, 0};
    Resolution res = projective_resolution(m, bound);
    if (res.minimal) {
        if (res.complete) return DimResult{true, res.length()};
        return DimResult{false, bound};
    }
    // non-minimal route: first projective syzygy
    if (is_projective(m)) return DimResult{true, 0};
    for (std::size_t i = 0; i < res.syzygies.size() && i < bound; ++i)
        if (is_projective(res.syzygies[i])) return DimResult{true, i + 1};
    if (res.complete) return DimResult{true, res.length()};
    return DimResult{false, bound};
}

DimResult inj_dim(const ModuleRep& m, std::size_t bound) {
    if (m.dim() == 0) return DimResult{true, 0};
    AlgebraPtr op = opposite(m.algebra());
    return proj_dim(swap_to_opposite(dual(m), op), bound);
}

std::size_t default_bound(const AlgebraPtr& a) { return 2 * a->dim() + 2; }

}  // namespace naka
