#ifndef SEMIDUAL_MODULES_HPP
#define SEMIDUAL_MODULES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "semidual/action.hpp"

namespace semidual {

using Exp = std::vector<std::int64_t>;

std::int64_t total_degree(const Exp& a);
Exp exp_add(const Exp& a, const Exp& b);
Exp exp_sub(const Exp& a, const Exp& b);
bool exp_dominates(const Exp& a, const Exp& b);   // a >= b componentwise
bool exp_is_zero(const Exp& a);

/// Canonical monomial order: total degree first, then the first differing
/// coordinate with the larger entry comes first (x before y before z).
bool mono_less(const Exp& a, const Exp& b);

/// Visit all a in N^d with |a| = degree, in canonical order.
void for_each_monomial(std::int64_t d, std::int64_t degree,
                       const std::function<void(const Exp&)>& fn);

/// Visit all a with lo <= a <= hi componentwise, row-major.
void for_each_box(const Exp& lo, const Exp& hi,
                  const std::function<void(const Exp&)>& fn);

/// Minimal elements of { u in N^d : weight(u) ≡ w (mod n) } under
/// divisibility by the invariant semigroup.  Enumerates up to total
/// degree n, then sweeps to 2n and throws if the zero-sum generator
/// bound is violated.
std::vector<Exp> class_set_generators(const DiagonalAction& A, std::int64_t w);

/// Minimal nonzero elements of the invariant semigroup (same bound and
/// safety sweep).
std::vector<Exp> hilbert_basis(const DiagonalAction& A);

/// The invariant exponent semigroroup with its cached Hilbert basis.
class InvariantSemigroup {
public:
    explicit InvariantSemigroup(const DiagonalAction& A)
        : action_(A), basis_(semidual::hilbert_basis(A)) {}
    const DiagonalAction& action() const { return action_; }
    const std::vector<Exp>& basis() const { return basis_; }
    bool contains(const Exp& a) const { return action_.in_semigroup(a); }

private:
    DiagonalAction action_;
    std::vector<Exp> basis_;
};

/*
 * A finitely generated set of lattice exponents E = union of g + Q over
 * the generators g, all of one weight class.  Models the relative
 * invariants R_chi, their products, colon modules and the dualizing
 * module.  Generators are minimal and canonically sorted, so equal sets
 * in the same embedding compare equal syntactically.
 *
 * When the set is saturated -- equal to { a >= corner : weight(a) ≡ w } --
 * the corner is recorded and membership is a congruence test.
 */
class MonomialModule {
public:
    static MonomialModule from_generators(const DiagonalAction& A, std::vector<Exp> gens);
    static MonomialModule saturated(const DiagonalAction& A, std::int64_t weight,
                                    const Exp& corner);

    const DiagonalAction& action() const { return action_; }
    const std::vector<Exp>& generators() const { return gens_; }
    std::int64_t weight() const { return weight_; }
    std::int64_t dim_count() const { return action_.dim(); }

    bool contains(const Exp& a) const;
    bool is_saturated() const { return corner_.has_value(); }
    const std::optional<Exp>& saturation_corner() const { return corner_; }

    /// Componentwise minimum of the generators.
    Exp generator_corner() const;

    /// Translate so the generators touch the coordinate hyperplanes;
    /// returns the translated module and the shift that was removed.
    std::pair<MonomialModule, Exp> normal_form() const;

    /// Same generator list (and weight) -- syntactic equality.
    bool same_presentation(const MonomialModule& other) const;

private:
    MonomialModule(DiagonalAction A, std::vector<Exp> gens, std::int64_t w,
                   std::optional<Exp> corner);

    DiagonalAction action_;
    std::vector<Exp> gens_;
    std::int64_t weight_;
    std::optional<Exp> corner_;
};

/// The module of the class-group element c: exponents a with
/// weight(a) ≡ -c, i.e. the relative invariants of chi_c^{-1}.
MonomialModule module_for_class(const DiagonalAction& A, CharacterClass c);

/// The invariant ring as a module over itself (generator 0).
MonomialModule unit_module(const DiagonalAction& A);

/// Strictly interior exponents { a : a_i >= 1, weight(a) ≡ 0 } -- the
/// combinatorial dualizing module.
MonomialModule interior_dualizing(const DiagonalAction& A);

/// Number of exponents of E(M) with the given total degree.
std::int64_t dim_component(const MonomialModule& M, std::int64_t degree);

/// Character-sum oracle for graded dimensions: the count of monomials of
/// total degree m and weight c, via (1/n) sum_j chi_c(g^j)^{-1} times the
/// generating-series trace, evaluated in a second, larger prime field.
/// Throws if the count could reach that modulus.
std::int64_t molien_dim(const DiagonalAction& A, CharacterClass chi, std::int64_t m);

/// True iff a (which must lie in E(M)) is not reachable from E(M) by a
/// nonzero invariant exponent.
bool is_indivisible(const MonomialModule& M, const Exp& a);

/// Module generated by all pairwise sums of generators, minimalized.
MonomialModule product(const MonomialModule& Ma, const MonomialModule& Mb);

struct ColonResult {
    MonomialModule module;  // first-orthant normal form of the colon set
    Exp shift;              // true colon set = shift + E(module)
};

/// (B : A) = { v : v + g in E(B) for every generator g of A }.  B must be
/// saturated in its weight class (verified; throws otherwise).
ColonResult colon(const MonomialModule& B, const MonomialModule& A);

struct Classified {
    CharacterClass cls;
    Exp shift;  // E(M) = shift + E(module_for_class(cls))
};

/// Identify M as a lattice translate of a class-group representative.
/// Throws std::domain_error("not in class group") when no translate matches.
Classified classify(const MonomialModule& M);

} // namespace semidual

#endif
