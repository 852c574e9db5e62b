#ifndef NAKA_ALGEBRA_HPP
#define NAKA_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "naka/error.hpp"
#include "naka/matrix.hpp"

namespace naka {

/// Quiver with relations. Paths are written target-to-source: the list
/// {a, b} denotes a∘b, i.e. first traverse b, then a. Every path of
/// length >= nilpotency_bound must lie in the relation ideal; this is
/// verified, not trusted.
struct QuiverPresentation {
    struct Arrow {
        std::string name;
        std::string from, to;
    };
    /// One summand of a relation: coeff * path. The coefficient is kept
    /// textual so presentations stay field-independent.
    struct RelTerm {
        std::string coeff;
        std::vector<std::string> path;  // arrow names, target-to-source
    };
    using Relation = std::vector<RelTerm>;

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::size_t nilpotency_bound = 1;
};

class Algebra;
struct CategorySpec;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional associative unital algebra given by structure
/// constants on a fixed basis. Immutable after validation.
class Algebra {
  public:
    using Coord = std::vector<Scalar>;  // coordinate vector over the basis

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Coord& mult(std::size_t i, std::size_t j) const { return mult_[i * dim_ + j]; }
    const Coord& unit() const { return unit_; }

    /// L_i: coordinate matrix of x -> b_i * x.
    const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
    /// R_i: coordinate matrix of x -> x * b_i.
    const Matrix& right_mult(std::size_t i) const { return right_mult_[i]; }
    Matrix element_left_mult(const Coord& x) const;
    Matrix element_right_mult(const Coord& x) const;
    /// Coordinates of the product of two elements.
    Coord multiply(const Coord& x, const Coord& y) const;

    bool has_idempotents() const { return !idempotents_.empty(); }
    const std::vector<Coord>& idempotents() const { return idempotents_; }

    const std::optional<QuiverPresentation>& presentation() const { return presentation_; }
    /// Set when the algebra is known split basic with radical available
    /// at construction (quiver algebras and their opposites/tensors).
    bool split_basic() const { return split_basic_; }
    const std::optional<Matrix>& cached_radical() const { return radical_basis_; }

    bool same_as(const Algebra& o) const;

    friend AlgebraPtr from_structure_constants(const FieldSpec& field,
                                               const std::vector<std::string>& labels,
                                               const std::vector<std::vector<Coord>>& mult,
                                               const Coord& unit);
    friend AlgebraPtr from_quiver(const QuiverPresentation& p, const FieldSpec& field);
    friend AlgebraPtr opposite(const AlgebraPtr& a);
    friend AlgebraPtr tensor_algebra(const AlgebraPtr& a1, const AlgebraPtr& a2);
    friend AlgebraPtr category_algebra(const CategorySpec& c, const FieldSpec& field);

  private:
    Algebra() = default;
    void finalize_and_validate();  // builds mult matrices, checks axioms

    FieldSpec field_;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Coord> mult_;  // row-major dim x dim table
    Coord unit_;
    std::vector<Coord> idempotents_;
    std::vector<Matrix> left_mult_, right_mult_;
    std::optional<QuiverPresentation> presentation_;
    std::optional<Matrix> radical_basis_;
    bool split_basic_ = false;
};

AlgebraPtr from_structure_constants(const FieldSpec& field,
                                    const std::vector<std::string>& labels,
                                    const std::vector<std::vector<Algebra::Coord>>& mult,
                                    const Algebra::Coord& unit);

AlgebraPtr from_quiver(const QuiverPresentation& p, const FieldSpec& field);

AlgebraPtr opposite(const AlgebraPtr& a);

AlgebraPtr tensor_algebra(const AlgebraPtr& a1, const AlgebraPtr& a2);

/// Finite k-linear category presented by hom-space bases and a composition
/// table. Missing composable products default to zero; products of
/// non-composable morphisms are zero by construction.
struct CategorySpec {
    struct Mor {
        std::string name;
        std::string src, tgt;
    };
    std::vector<std::string> objects;
    std::vector<Mor> morphisms;               // includes the identities
    std::vector<std::string> identities;      // one morphism name per object
    /// composition[{g, f}] = expansion of g∘f (f applied first).
    std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, std::string>>>
        composition;  // value: list of (morphism name, coefficient text)
};

AlgebraPtr category_algebra(const CategorySpec& c, const FieldSpec& field);

/// A (left algebra, right algebra)-bimodule with commuting actions.
struct Bimodule {
    AlgebraPtr algebra_left, algebra_right;
    std::size_t dim = 0;
    std::vector<Matrix> left_action;   // per basis element of algebra_left
    std::vector<Matrix> right_action;  // per basis element of algebra_right
};

/// D(Lambda) = Hom_k(Lambda, k) with (x.f.y)(z) = f(yzx): the left action
/// of b is the transpose of right-multiplication-by-b, the right action
/// the transpose of left-multiplication.
Bimodule dual_bimodule(const AlgebraPtr& a);

/// Basis of the Jacobson radical, as columns. Uses the quiver presentation
/// when available, otherwise the trace bilinear form (valid over Q, or
/// over F_p when p > dim). The result is checked to be a two-sided
/// nilpotent ideal with semisimple quotient.
Matrix radical(const AlgebraPtr& a);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace naka

#endif
