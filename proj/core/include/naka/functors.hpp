#ifndef NAKA_FUNCTORS_HPP
#define NAKA_FUNCTORS_HPP

#include <functional>

#include "naka/module_rep.hpp"

namespace naka {

/// b (x)_Lambda m for a (Gamma, Lambda)-bimodule and a left Lambda-module:
/// the cokernel of the standard coequalizer b (x)_k Lambda (x)_k m =>
/// b (x)_k m, carrying the induced left Gamma-action.
ModuleRep tensor_apply(const Bimodule& b, const ModuleRep& m);
ModuleMap tensor_apply_map(const Bimodule& b, const ModuleMap& f);

/// Quotient presentation of right (x)_Lambda left as a plain k-space:
/// proj/section against the coequalizer inside right (x)_k left.
struct TensorSpace {
    std::size_t dim = 0;
    Matrix proj, section;
};
TensorSpace tensor_space_over(const ModuleRep& right, const ModuleRep& left);

/// Hom_Gamma(b, m) as a left Lambda-module via (a.h)(x) = h(x.a).
ModuleRep hom_apply(const Bimodule& b, const ModuleRep& m);
ModuleMap hom_apply_map(const Bimodule& b, const ModuleMap& f);

/// nu = D(Lambda) (x)_Lambda -. Free-shaped inputs take the canonical
/// cofree form without elimination; results carry quotient data.
ModuleRep nakayama_apply(const ModuleRep& m);
ModuleMap nakayama_apply_map(const ModuleMap& f);

/// nu^- = Hom_Lambda(D(Lambda), -). Cofree-shaped inputs take the
/// canonical free form; generic results carry their hom-basis embedding.
ModuleRep nakayama_right_apply(const ModuleRep& m);
ModuleMap nakayama_right_apply_map(const ModuleMap& f);

ModuleRep P_apply(const ModuleRep& m);  // Lambda (x)_k m, free shape
ModuleMap P_apply_map(const ModuleMap& f);
ModuleRep I_apply(const ModuleRep& m);  // D(Lambda) (x)_k m, cofree shape
ModuleMap I_apply_map(const ModuleMap& f);
ModuleRep T_apply(const ModuleRep& m);  // P o nu
ModuleRep S_apply(const ModuleRep& m);  // I o nu^-

/// Unit of nu -| nu^-: m -> nu^- nu (m). Identity on free-shaped inputs.
ModuleMap unit_lambda(const ModuleRep& m);
/// Counit: nu nu^- (m) -> m. Identity on cofree-shaped inputs.
ModuleMap counit_sigma(const ModuleRep& m);

/// Functor handles over one algebra; compose applies right-to-left.
class Functor {
  public:
    enum class Kind {
        identity, nu, nu_minus, induce_p, coinduce_i, tee, ess, omega, sigma,
        tensor, hom, compose
    };

    static Functor identity_f(AlgebraPtr a);
    static Functor nu(AlgebraPtr a);
    static Functor nu_minus(AlgebraPtr a);
    static Functor P(AlgebraPtr a);
    static Functor I(AlgebraPtr a);
    static Functor T(AlgebraPtr a);
    static Functor S(AlgebraPtr a);
    static Functor omega(AlgebraPtr a);
    static Functor sigma(AlgebraPtr a);
    static Functor tensor(Bimodule b);
    static Functor hom(Bimodule b);
    static Functor compose(std::vector<Functor> factors);

    ModuleRep apply(const ModuleRep& m) const;
    ModuleMap apply(const ModuleMap& f) const;
    const std::string& name() const { return name_; }

  private:
    Kind kind_ = Kind::identity;
    AlgebraPtr algebra_;
    std::shared_ptr<const Bimodule> bimodule_;
    std::vector<Functor> factors_;
    std::string name_;
};

/// An adjunction F -| G with explicit unit and counit constructions.
struct Adjunction {
    Functor left, right;
    std::function<ModuleMap(const ModuleRep&)> unit;    // m -> G F m
    std::function<ModuleMap(const ModuleRep&)> counit;  // F G m -> m
    std::string name;
};

Adjunction adj_nu(const AlgebraPtr& a);   // nu -| nu^-
Adjunction adj_P_I(const AlgebraPtr& a);  // P -| I
Adjunction adj_T_P(const AlgebraPtr& a);  // T -| P
Adjunction adj_I_S(const AlgebraPtr& a);  // I -| S
/// Sigma -| Omega, built from the conjugate pair (unit of T -| P,
/// counit of P -| I) through the kernel/cokernel construction.
Adjunction adj_sigma_omega(const AlgebraPtr& a);

/// Omega(m) = Ker(PI(m) -> m) with its inclusion; exactness of
/// 0 -> Omega(m) -> PI(m) -> m -> 0 is checked.
SubModule omega_step(const ModuleRep& m);
/// Sigma(m) = Coker(m -> PT(m)); exactness checked dually.
QuotientModule sigma_step(const ModuleRep& m);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> passed;
    std::vector<std::string> failed;
    void record(const std::string& what, bool good) {
        (good ? passed : failed).push_back(what);
        ok = ok && good;
    }
    std::string first_failure() const { return failed.empty() ? "" : failed.front(); }
};

/// Triangle identities as exact matrix equalities on every test module,
/// naturality of unit/counit on hom-space generators, and bijectivity of
/// the adjunction correspondence phi(f) = G(f) o unit on hom bases.
CheckReport verify_adjunction(const Adjunction& adj, const std::vector<ModuleRep>& tests);

enum class Perturbation { none, unit_vector, mult_table };

/// Perturbed copy for negative controls: scales the counit components.
Adjunction perturb_counit(Adjunction adj);

/// Monad axioms for T = Lambda (x)_k - and comonad axioms for
/// S = D(Lambda) (x)_k - on k-spaces of the given dimensions.
CheckReport verify_monad_comonad(const AlgebraPtr& a, const std::vector<std::size_t>& test_dims,
                                 Perturbation p = Perturbation::none);

/// Both adjunctions S -| T and T -| S from the pairing D(Lambda) x Lambda -> k,
/// with the conjugacy squares for (Delta, mu) and (epsilon, eta) checked
/// on all pairs of test dimensions.
CheckReport verify_ambidextrous(const AlgebraPtr& a, const std::vector<std::size_t>& test_dims,
                                Perturbation p = Perturbation::none);

}  // namespace naka

#endif
