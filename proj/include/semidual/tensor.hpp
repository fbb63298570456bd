#ifndef SEMIDUAL_TENSOR_HPP
#define SEMIDUAL_TENSOR_HPP

#include <cstdint>
#include <vector>

#include "semidual/modules.hpp"

namespace semidual {

/// Which sigma generate the exchange relations: every nonzero invariant
/// exponent under the degree, or Hilbert-basis elements only.  The two
/// must give the same quotient (kept as a cross-check).
enum class RelationMode { AllSemigroup, GeneratorsOnly };

/*
 * The degree-gamma piece of A tensor_S B, presented exactly: the pair
 * basis { (mu,nu) : mu in E(A), nu in E(B), mu+nu = gamma } modulo one
 * exchange row (mu+sigma, nu) - (mu, nu+sigma) per admissible sigma.
 * Every row has one +1 and one -1, so elimination never leaves difference
 * rows and the rank over Q is pairs minus connected components; that is
 * the exact rational rank of the relation matrix.
 */
class TensorComponent {
public:
    struct Pair {
        Exp left, right;
        friend bool operator==(const Pair&, const Pair&) = default;
    };
    struct ResidualEntry {
        std::int64_t pair;   // index of a component representative
        std::int64_t coeff;  // +1 / -1
    };

    TensorComponent(const MonomialModule& A, const MonomialModule& B, Exp degree,
                    RelationMode mode = RelationMode::AllSemigroup);

    const Exp& degree() const { return gamma_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    std::int64_t pair_count() const { return static_cast<std::int64_t>(pairs_.size()); }
    std::int64_t relation_row_count() const { return rows_; }
    std::int64_t relation_rank() const { return pair_count() - components_; }
    std::int64_t dimension() const { return components_; }

    /// Index of the pair with the given left exponent, -1 if absent.
    std::int64_t pair_index(const Exp& left) const;

    std::int64_t component_of(std::int64_t pair) const;

    /// Coordinates of e_p - e_q in the quotient, written over the
    /// lex-least representative pair of each component.  Empty when zero.
    std::vector<ResidualEntry> residual(std::int64_t p, std::int64_t q) const;

    /// Dense relation matrix for rational-rank cross-checks (small
    /// components only; throws above the guard size).
    RationalMatrix relation_matrix() const;

private:
    Exp gamma_;
    std::vector<Pair> pairs_;
    std::vector<std::int64_t> comp_;  // pair -> component representative (smallest index)
    std::vector<std::pair<std::int64_t, std::int64_t>> row_list_;
    std::int64_t rows_ = 0;
    std::int64_t components_ = 0;
};

} // namespace semidual

#endif
