#ifndef SEMIDUAL_ACTION_HPP
#define SEMIDUAL_ACTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "semidual/exact.hpp"

namespace semidual {

/// A character of the cyclic group, named by its exponent: chi_c sends the
/// distinguished generator g to zeta^c.
struct CharacterClass {
    std::int64_t c = 0;
    friend bool operator==(const CharacterClass&, const CharacterClass&) = default;
    friend auto operator<=>(const CharacterClass&, const CharacterClass&) = default;
};

/*
 * A diagonal action of the cyclic group of order n on d variables:
 * g.x_i = zeta^{eta_i} x_i over F_q with q ≡ 1 (mod n) and zeta of exact
 * order n.  The weight vector must be faithful: gcd(eta_1,...,eta_d,n)=1.
 *
 * The monomial x^a has weight eta·a (mod n); the invariant exponents
 * Q = { a in N^d : eta·a ≡ 0 } are the semigroup everything else is
 * built on.
 */
class DiagonalAction {
public:
    DiagonalAction(std::int64_t order, std::vector<std::int64_t> weights);

    std::int64_t order() const { return n_; }
    std::int64_t dim() const { return d_; }
    const std::vector<std::int64_t>& weights() const { return eta_; }
    std::int64_t modulus() const { return q_; }
    std::int64_t zeta() const { return zeta_; }
    const PrimeField& field() const { return field_; }

    /// eta·a mod n for an exponent vector (entries may be negative).
    std::int64_t weight_of(const std::vector<std::int64_t>& a) const;

    /// True iff a lies in N^d and has weight zero.
    bool in_semigroup(const std::vector<std::int64_t>& a) const;

    std::string describe() const;

private:
    std::int64_t n_, d_, q_, zeta_;
    std::vector<std::int64_t> eta_;
    PrimeField field_;
};

/// The cyclic divisor class group: the characters trivial on every
/// pseudoreflection, as a subgroup of Z/n.
struct ClassGroup {
    std::int64_t order = 1;
    CharacterClass generator{0};          // smallest positive generating member, 0 if trivial
    std::vector<std::int64_t> members;    // sorted residues
    bool contains(std::int64_t c) const;
};

/// Powers m (1 <= m < n) for which g^m moves exactly one coordinate.
std::vector<std::int64_t> pseudoreflection_powers(const DiagonalAction& A);

ClassGroup class_group(const DiagonalAction& A);

/// True iff some eta_i is coprime to n, i.e. g has a primitive n-th root
/// of unity among its eigenvalues.
bool has_primitive_eigenvalue(const DiagonalAction& A);

/// Sum of the weights mod n (the character of det(g)).
CharacterClass determinant_character(const DiagonalAction& A);

} // namespace semidual

#endif
