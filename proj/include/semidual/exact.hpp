#ifndef SEMIDUAL_EXACT_HPP
#define SEMIDUAL_EXACT_HPP

#include <cstdint>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

namespace semidual {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Smallest prime q with q ≡ 1 (mod n).  Throws if none is found below
/// the search cap, which Dirichlet says cannot happen for sane caps.
std::int64_t find_modulus(std::int64_t n, std::int64_t cap = 100000000);

/// Smallest prime q with q ≡ 1 (mod n) and q >= floor.  Used to pick the
/// oracle modulus for character-sum dimension counts.
std::int64_t find_modulus_at_least(std::int64_t n, std::int64_t floor,
                                   std::int64_t cap = 100000000);

bool is_prime(std::int64_t n);

/*
 * Arithmetic in F_q for a word-sized prime q.  Values are canonical
 * residues in [0, q).  q stays below 2^31 so products fit in int64.
 */
class PrimeField {
public:
    explicit PrimeField(std::int64_t q);

    std::int64_t modulus() const { return q_; }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % q_; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return (a - b % q_ + q_) % q_; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a % q_) * (b % q_) % q_; }
    std::int64_t pow(std::int64_t a, std::int64_t e) const;
    std::int64_t inv(std::int64_t a) const;
    std::int64_t neg(std::int64_t a) const { return (q_ - a % q_) % q_; }

    /// Multiplicative order of a (a must be a unit).
    std::int64_t order(std::int64_t a) const;

private:
    std::int64_t q_;
};

/// Smallest residue in F_q of multiplicative order exactly n.
/// Requires n | q - 1; throws otherwise.
std::int64_t root_of_unity(std::int64_t q, std::int64_t n);

/*
 * Dense matrix of exact rationals.  Exists so that certificate-deciding
 * ranks are computed over Q, where the {-1,0,1} relation matrices keep
 * their characteristic-zero rank.
 */
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transposed() const;

    /// Exact rank over Q by fraction-free (Bareiss) elimination on the
    /// integer matrix obtained after clearing row denominators.
    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    std::vector<BigRational> data_;
};

} // namespace semidual

#endif
