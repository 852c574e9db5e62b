#ifndef NAKA_MODULE_REP_HPP
#define NAKA_MODULE_REP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "naka/algebra.hpp"

namespace naka {

enum class Side { left, right };

/// Finite-dimensional module as one action matrix per algebra basis
/// element. Cheap to copy (shared immutable payload).
///
/// Modules produced by the induction functors carry a tensor shape:
/// free_over n means the object is Lambda (x) k^n with action L_b (x) I,
/// cofree_over n means D(Lambda) (x) k^n with action R_b^T (x) I. For
/// shaped modules the action matrices are generated on demand instead of
/// stored; large intermediate objects stay cheap.
class ModuleRep {
  public:
    struct TensorShape {
        enum class Kind { free_over, cofree_over };
        Kind kind;
        std::size_t inner_dim;
        bool operator==(const TensorShape&) const = default;
    };

    ModuleRep() = default;

    static ModuleRep make(AlgebraPtr a, Side side, std::vector<Matrix> action,
                          std::string name = "", bool validate = true);
    static ModuleRep make_free(AlgebraPtr a, std::size_t inner_dim, std::string name = "");
    static ModuleRep make_cofree(AlgebraPtr a, std::size_t inner_dim, std::string name = "");
    static ModuleRep zero_module(AlgebraPtr a, Side side);
    static ModuleRep regular_left(AlgebraPtr a);
    static ModuleRep regular_right(AlgebraPtr a);

    const AlgebraPtr& algebra() const;
    Side side() const;
    std::size_t dim() const;
    /// Action of the i-th basis element; generated on demand for shaped modules.
    Matrix action(std::size_t i) const;
    /// Action of an arbitrary element given by coordinates.
    Matrix action_of(const Algebra::Coord& x) const;
    const std::string& name() const;
    ModuleRep renamed(std::string name) const;

    const std::optional<TensorShape>& shape() const;

    /// Auxiliary construction data: quotient maps when the module was built
    /// as a tensor quotient (nu), hom-basis embedding when built as a hom
    /// space (nu-minus). Null otherwise.
    const Matrix* quot_proj() const;
    const Matrix* quot_section() const;
    const Matrix* hom_embedding() const;

    bool equal_to(const ModuleRep& o) const;
    bool is_valid() const { return d_ != nullptr; }

    friend ModuleRep attach_quotient_data(ModuleRep m, Matrix proj, Matrix section);
    friend ModuleRep attach_hom_embedding(ModuleRep m, Matrix embedding);

  private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

ModuleRep attach_quotient_data(ModuleRep m, Matrix proj, Matrix section);
ModuleRep attach_hom_embedding(ModuleRep m, Matrix embedding);

/// A module homomorphism; intertwining with every basis action is checked
/// on construction unless validate = false (used on formula-derived maps
/// whose endpoints are large shaped objects).
struct ModuleMap {
    ModuleRep source, target;
    Matrix matrix;
};

ModuleMap make_map(ModuleRep source, ModuleRep target, Matrix m, bool validate = true);
ModuleMap identity_map(const ModuleRep& m);
ModuleMap zero_map(const ModuleRep& source, const ModuleRep& target);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool is_identity_map(const ModuleMap& f);

/// Deterministic basis of Hom_Lambda(m, n).
std::vector<ModuleMap> hom_space(const ModuleRep& m, const ModuleRep& n);

struct SubModule {
    ModuleRep module;
    ModuleMap inclusion;
};
struct QuotientModule {
    ModuleRep module;
    ModuleMap projection;
};

SubModule kernel(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);
/// Submodule on an explicit invariant column span (checked invariant).
SubModule submodule(const ModuleRep& ambient, const Matrix& columns, std::string name = "");
/// Image as a submodule of the target.
SubModule image(const ModuleMap& f);

/// k-linear dual, swapping sides; actions transpose.
ModuleRep dual(const ModuleRep& m);
/// Contravariant action on maps: dual(f): dual(target) -> dual(source).
ModuleMap dual_map(const ModuleMap& f);

/// Reinterpret a right module as a left module over the opposite algebra
/// (same matrices), and back.
ModuleRep swap_to_opposite(const ModuleRep& m, const AlgebraPtr& op);

std::vector<ModuleRep> indecomposable_projectives(const AlgebraPtr& a);
std::vector<ModuleRep> indecomposable_injectives(const AlgebraPtr& a);

struct Cover {
    ModuleMap map;  // epimorphism from a projective (mono into injective, dually)
    bool minimal;
};
/// Projective cover through the radical top when the algebra is split
/// basic with known radical; free cover from a greedy generating set
/// otherwise. Minimality (kernel inside rad * source) is checked, and the
/// construction falls back to the free cover when it fails.
Cover projective_cover(const ModuleRep& m);
Cover injective_envelope(const ModuleRep& m);

struct DirectSum {
    ModuleRep module;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<ModuleRep>& parts);

/// Exact isomorphism test: searches a deterministic sequence of
/// combinations of a hom basis for an invertible one; certifies a negative
/// answer by grid enumeration when the budget allows, and throws
/// IsoTestInconclusive otherwise.
bool is_isomorphic(const ModuleRep& m, const ModuleRep& n);

/// Simple top m / rad*m together with the projection.
QuotientModule top_of(const ModuleRep& m);

}  // namespace naka

#endif
