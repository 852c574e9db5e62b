#include <algorithm>

#include "naka/functors.hpp"

namespace naka {

namespace {

// vec (column-major) of a hom matrix, for expressing maps in hom bases
Matrix vec_of(const Matrix& m) {
    Matrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t r = 0; r < m.rows(); ++r) v.at(j * m.rows() + r, 0) = m.at(r, j);
    return v;
}

}  // namespace

CheckReport verify_adjunction(const Adjunction& adj, const std::vector<ModuleRep>& tests) {
    CheckReport rep;
    for (const ModuleRep& m : tests) {
        // G(counit_m) o unit_{G m} = id_{G m}
        ModuleRep gm = adj.right.apply(m);
        ModuleMap u = adj.unit(gm);
        ModuleMap c = adj.counit(m);
        ModuleMap gc = adj.right.apply(c);
        rep.record("triangle right at " + m.name() + " [" + adj.name + "]",
                   (gc.matrix * u.matrix).is_identity());
        // counit_{F m} o F(unit_m) = id_{F m}
        ModuleRep fm = adj.left.apply(m);
        ModuleMap u2 = adj.unit(m);
        ModuleMap fu = adj.left.apply(u2);
        ModuleMap c2 = adj.counit(fm);
        rep.record("triangle left at " + m.name() + " [" + adj.name + "]",
                   (c2.matrix * fu.matrix).is_identity());
    }
    // naturality of the unit/counit on hom-space generators, and
    // bijectivity of phi(f) = G(f) o unit on hom bases
    for (const ModuleRep& m : tests)
        for (const ModuleRep& n : tests) {
            for (const ModuleMap& f : hom_space(m, n)) {
                ModuleMap un = adj.unit(n), um = adj.unit(m);
                ModuleMap gff = adj.right.apply(adj.left.apply(f));
                rep.record("unit naturality " + m.name() + " -> " + n.name() + " [" +
                               adj.name + "]",
                           un.matrix * f.matrix == gff.matrix * um.matrix);
                ModuleMap cn = adj.counit(n), cm = adj.counit(m);
                ModuleMap fgf = adj.left.apply(adj.right.apply(f));
                rep.record("counit naturality " + m.name() + " -> " + n.name() + " [" +
                               adj.name + "]",
                           f.matrix * cm.matrix == cn.matrix * fgf.matrix);
            }
            ModuleRep fm = adj.left.apply(m);
            ModuleRep gn = adj.right.apply(n);
            std::vector<ModuleMap> lhs = hom_space(fm, n);
            std::vector<ModuleMap> rhs = hom_space(m, gn);
            bool ok = lhs.size() == rhs.size();
            if (ok && !rhs.empty()) {
                Matrix basis(gn.dim() * m.dim(), rhs.size(), fm.algebra()->field());
                for (std::size_t l = 0; l < rhs.size(); ++l) {
                    Matrix v = vec_of(rhs[l].matrix);
                    for (std::size_t r = 0; r < v.rows(); ++r) basis.at(r, l) = v.at(r, 0);
                }
                Matrix images(gn.dim() * m.dim(), lhs.size(), fm.algebra()->field());
                ModuleMap um = adj.unit(m);
                for (std::size_t l = 0; l < lhs.size(); ++l) {
                    ModuleMap gf = adj.right.apply(lhs[l]);
                    Matrix v = vec_of(gf.matrix * um.matrix);
                    for (std::size_t r = 0; r < v.rows(); ++r) images.at(r, l) = v.at(r, 0);
                }
                auto coords = solve(basis, images);
                ok = coords.has_value() && rank(*coords) == lhs.size();
            } else if (ok) {
                ok = lhs.empty();
            }
            rep.record("phi bijection Hom(F " + m.name() + ", " + n.name() + ") = Hom(" +
                           m.name() + ", G " + n.name() + ") [" + adj.name + "]",
                       ok);
        }
    return rep;
}

Adjunction perturb_counit(Adjunction adj) {
    auto old_counit = adj.counit;
    adj.counit = [old_counit](const ModuleRep& m) {
        ModuleMap c = old_counit(m);
        Scalar two = Scalar::from_int(m.algebra()->field(), 2);
        return ModuleMap{c.source, c.target, two * c.matrix};
    };
    adj.name += " (perturbed counit)";
    return adj;
}

// ---------------------------------------------------------------------------
// k-linear monad/comonad layer: T = Lambda (x)_k -, S = D(Lambda) (x)_k -

namespace {

struct KModData {
    Matrix mult;       // d x d^2, (i,j) -> b_i b_j
    Matrix unit;       // d x 1
    Matrix comult;     // d^2 x d, transpose of mult
    Matrix counit;     // 1 x d
    std::size_t d;
    FieldSpec f;
};

KModData kmod_data(const AlgebraPtr& a, Perturbation p) {
    const std::size_t d = a->dim();
    const FieldSpec& f = a->field();
    KModData k{Matrix(d, d * d, f), Matrix(d, 1, f), Matrix(), Matrix(), d, f};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) k.mult.at(l, i * d + j) = a->mult(i, j)[l];
    for (std::size_t l = 0; l < d; ++l) k.unit.at(l, 0) = a->unit()[l];
    if (p == Perturbation::mult_table)
        k.mult.at(0, 0) = k.mult.at(0, 0) + Scalar::one(f);
    if (p == Perturbation::unit_vector) k.unit.at(0, 0) = k.unit.at(0, 0) + Scalar::one(f);
    k.comult = transpose(k.mult);
    k.counit = transpose(k.unit);
    return k;
}

}  // namespace

CheckReport verify_monad_comonad(const AlgebraPtr& a, const std::vector<std::size_t>& test_dims,
                                 Perturbation p) {
    CheckReport rep;
    KModData k = kmod_data(a, p);
    const FieldSpec& f = k.f;
    const std::size_t d = k.d;
    std::vector<std::size_t> dims = test_dims;
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    for (std::size_t n : dims) {
        if (n == 0) continue;
        Matrix in = Matrix::identity(n, f);
        Matrix idn = Matrix::identity(d * n, f);
        Matrix mu = kron(k.mult, in);                     // TT(V) -> T(V)
        Matrix t_mu = kron(Matrix::identity(d, f), mu);   // T(mu_V)
        Matrix mu_t = kron(k.mult, idn);                  // mu at T(V)
        rep.record("monad associativity at dim " + std::to_string(n),
                   mu * t_mu == mu * mu_t);
        Matrix eta = kron(k.unit, in);
        Matrix t_eta = kron(Matrix::identity(d, f), eta);
        Matrix eta_t = kron(k.unit, idn);
        rep.record("monad unit (T eta) at dim " + std::to_string(n),
                   (mu * t_eta).is_identity());
        rep.record("monad unit (eta T) at dim " + std::to_string(n),
                   (mu * eta_t).is_identity());

        Matrix delta = kron(k.comult, in);                    // S(V) -> SS(V)
        Matrix s_delta = kron(Matrix::identity(d, f), delta);  // S(Delta_V)
        Matrix delta_s = kron(k.comult, idn);                  // Delta at S(V)
        rep.record("comonad coassociativity at dim " + std::to_string(n),
                   s_delta * delta == delta_s * delta);
        Matrix eps = kron(k.counit, in);
        Matrix s_eps = kron(Matrix::identity(d, f), eps);
        Matrix eps_s = kron(k.counit, idn);
        rep.record("comonad counit (S eps) at dim " + std::to_string(n),
                   (s_eps * delta).is_identity());
        rep.record("comonad counit (eps S) at dim " + std::to_string(n),
                   (eps_s * delta).is_identity());
    }
    return rep;
}

namespace {

// An adjunction between width functors W_L (x) - -| W_R (x) - on k-mod,
// described by its unit component at k.
struct KAdjDesc {
    std::size_t lw, rw;
    Matrix unit_k;  // (rw * lw) x 1
    std::string name;
};

// phi(g) = R(g) o unit_D for g: L(D) -> E, computed blockwise to avoid
// materializing kron(I_rw, g).
Matrix k_adj_phi(const KAdjDesc& adj, const Matrix& g, std::size_t n_d, const FieldSpec& f) {
    Matrix unit_d = kron(adj.unit_k, Matrix::identity(n_d, f));  // (rw*lw*n_d) x n_d
    const std::size_t block = adj.lw * n_d;
    const std::size_t n_e = g.rows();
    Matrix out(adj.rw * n_e, n_d, f);
    for (std::size_t b = 0; b < adj.rw; ++b) {
        // g * (block b of unit_d)
        for (std::size_t col = 0; col < n_d; ++col)
            for (std::size_t r = 0; r < n_e; ++r) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t t = 0; t < block; ++t) {
                    const Scalar& gv = g.at(r, t);
                    if (gv.is_zero()) continue;
                    const Scalar& uv = unit_d.at(b * block + t, col);
                    if (!uv.is_zero()) acc += gv * uv;
                }
                out.at(b * n_e + r, col) = acc;
            }
    }
    return out;
}

// Square (0.1): phi_1(f o sigma_D) = tau_E o phi_2(f) for all f: L_2(D) -> E.
bool conjugacy_square(const KAdjDesc& adj1, const KAdjDesc& adj2, const Matrix& sigma_k,
                      const Matrix& tau_k, std::size_t n_d, std::size_t n_e,
                      const FieldSpec& f) {
    Matrix sigma_d = kron(sigma_k, Matrix::identity(n_d, f));  // L1(D) -> L2(D)
    Matrix tau_e = kron(tau_k, Matrix::identity(n_e, f));      // R2(E) -> R1(E)
    const std::size_t l2dim = adj2.lw * n_d;
    for (std::size_t r = 0; r < n_e; ++r)
        for (std::size_t s = 0; s < l2dim; ++s) {
            Matrix el(n_e, l2dim, f);
            el.at(r, s) = Scalar::one(f);
            Matrix lhs = k_adj_phi(adj1, el * sigma_d, n_d, f);
            Matrix rhs = tau_e * k_adj_phi(adj2, el, n_d, f);
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace

CheckReport verify_ambidextrous(const AlgebraPtr& a, const std::vector<std::size_t>& test_dims,
                                Perturbation p) {
    CheckReport rep;
    const FieldSpec& f = a->field();
    const std::size_t d = a->dim();
    KModData base = kmod_data(a, Perturbation::none);
    KModData pert = kmod_data(a, p);
    // mu/eta take the perturbed data so negative controls break one side
    const Matrix& mu = pert.mult;
    const Matrix& eta = pert.unit;
    const Matrix delta = base.comult;
    const Matrix eps = base.counit;

    // pairing vector sum_i e_i (x) e_i, the unit of both S -| T and T -| S
    Matrix copair(d * d, 1, f);
    for (std::size_t i = 0; i < d; ++i) copair.at(i * d + i, 0) = Scalar::one(f);
    KAdjDesc id_adj{1, 1, Matrix::identity(1, f), "Id -| Id"};
    KAdjDesc st{d, d, copair, "S -| T"};
    KAdjDesc ts{d, d, copair, "T -| S"};
    auto compose_desc = [&](const KAdjDesc& x, const std::string& nm) {
        // unit of the self-composed adjunction at k
        Matrix u2 = kron(Matrix::identity(d, f), kron(x.unit_k, Matrix::identity(d, f))) *
                    x.unit_k;
        return KAdjDesc{x.lw * x.lw, x.rw * x.rw, u2, nm};
    };
    KAdjDesc sstt = compose_desc(st, "SS -| TT");
    KAdjDesc ttss = compose_desc(ts, "TT -| SS");

    std::vector<std::size_t> dims = test_dims;
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    for (std::size_t nd : dims) {
        if (nd == 0) continue;
        for (std::size_t ne : dims) {
            if (ne == 0) continue;
            std::string at = " at dims (" + std::to_string(nd) + ", " + std::to_string(ne) + ")";
            // S -| T: Delta: S -> SS conjugate to mu: TT -> T
            rep.record("conjugacy (Delta, mu) for S -| T" + at,
                       conjugacy_square(st, sstt, delta, mu, nd, ne, f));
            // S -| T: eps: S -> Id conjugate to eta: Id -> T
            rep.record("conjugacy (eps, eta) for S -| T" + at,
                       conjugacy_square(st, id_adj, eps, eta, nd, ne, f));
            // T -| S: mu: TT -> T conjugate to Delta: S -> SS
            rep.record("conjugacy (mu, Delta) for T -| S" + at,
                       conjugacy_square(ttss, ts, mu, delta, nd, ne, f));
            // T -| S: eta: Id -> T conjugate to eps: S -> Id
            rep.record("conjugacy (eta, eps) for T -| S" + at,
                       conjugacy_square(id_adj, ts, eta, eps, nd, ne, f));
        }
    }
    return rep;
}

}  // namespace naka
