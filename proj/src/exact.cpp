#include "semidual/exact.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace semidual {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::int64_t find_modulus(std::int64_t n, std::int64_t cap) {
    return find_modulus_at_least(n, 2, cap);
}

std::int64_t find_modulus_at_least(std::int64_t n, std::int64_t floor, std::int64_t cap) {
    if (n < 1) throw std::invalid_argument("find_modulus: order must be positive");
    // First candidate >= floor that is ≡ 1 (mod n); for n = 1 every prime works.
    std::int64_t q = (n == 1) ? floor : ((floor - 2 + n) / n) * n + 1;
    if (q < 2) q = 2;
    for (; q <= cap; q += (n == 1 ? 1 : n)) {
        if (q >= floor && is_prime(q) && (n == 1 || q % n == 1)) return q;
    }
    throw std::runtime_error("find_modulus: no prime ≡ 1 mod " + std::to_string(n) +
                             " below cap " + std::to_string(cap));
}

PrimeField::PrimeField(std::int64_t q) : q_(q) {
    if (!is_prime(q)) throw std::invalid_argument("PrimeField: modulus not prime");
    if (q >= (std::int64_t{1} << 31)) throw std::invalid_argument("PrimeField: modulus too large");
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t e) const {
    a %= q_;
    if (a < 0) a += q_;
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = r * a % q_;
        a = a * a % q_;
        e >>= 1;
    }
    return r;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    a %= q_;
    if (a < 0) a += q_;
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, q_ - 2);
}

std::int64_t PrimeField::order(std::int64_t a) const {
    a %= q_;
    if (a < 0) a += q_;
    if (a == 0) throw std::domain_error("PrimeField: order of zero");
    std::int64_t x = a, ord = 1;
    while (x != 1) {
        x = x * a % q_;
        ++ord;
        if (ord > q_) throw std::logic_error("PrimeField: order runaway");
    }
    return ord;
}

std::int64_t root_of_unity(std::int64_t q, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
    PrimeField F(q);
    if ((q - 1) % n != 0)
        throw std::invalid_argument("root_of_unity: " + std::to_string(n) +
                                    " does not divide q - 1");
    for (std::int64_t x = 1; x < q; ++x) {
        if (F.order(x) == n) return x;
    }
    throw std::logic_error("root_of_unity: exhausted field");  // unreachable for prime q
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

std::size_t RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;

    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < cols_; ++c)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(at(r, c)));
        for (std::size_t c = 0; c < cols_; ++c) {
            const BigRational& v = at(r, c);
            m[r][c] = boost::multiprecision::numerator(v) *
                      (l / boost::multiprecision::denominator(v));
        }
    }

    // Bareiss: division-free apart from exact divisions by the previous pivot.
    std::size_t rank = 0;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && m[piv][col] == 0) ++piv;
        if (piv == rows_) continue;
        std::swap(m[piv], m[row]);
        const BigInt pivot = m[row][col];
        for (std::size_t r = row + 1; r < rows_; ++r) {
            for (std::size_t c = col + 1; c < cols_; ++c)
                m[r][c] = (m[r][c] * pivot - m[r][col] * m[row][c]) / prev;
            m[r][col] = 0;
        }
        prev = pivot;
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace semidual
