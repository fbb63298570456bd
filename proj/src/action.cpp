#include "semidual/action.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace semidual {

DiagonalAction::DiagonalAction(std::int64_t order, std::vector<std::int64_t> weights)
    : n_(order),
      d_(static_cast<std::int64_t>(weights.size())),
      q_(find_modulus(order < 1 ? 1 : order)),
      zeta_(0),
      eta_(std::move(weights)),
      field_(q_) {
    if (n_ < 1) throw std::invalid_argument("DiagonalAction: order must be positive");
    if (d_ < 1) throw std::invalid_argument("DiagonalAction: need at least one variable");
    std::int64_t g = n_;
    for (auto& w : eta_) {
        w %= n_;
        if (w < 0) w += n_;
        g = std::gcd(g, w);
    }
    if (g != 1)
        throw std::invalid_argument("DiagonalAction: weights not faithful (gcd " +
                                    std::to_string(g) + " with the order)");
    zeta_ = root_of_unity(q_, n_);
}

std::int64_t DiagonalAction::weight_of(const std::vector<std::int64_t>& a) const {
    if (static_cast<std::int64_t>(a.size()) != d_)
        throw std::invalid_argument("weight_of: wrong exponent length");
    std::int64_t s = 0;
    for (std::int64_t i = 0; i < d_; ++i) s += eta_[i] * (a[i] % n_);
    s %= n_;
    return s < 0 ? s + n_ : s;
}

bool DiagonalAction::in_semigroup(const std::vector<std::int64_t>& a) const {
    for (auto v : a)
        if (v < 0) return false;
    return weight_of(a) == 0;
}

std::string DiagonalAction::describe() const {
    std::ostringstream os;
    os << "Z/" << n_ << " acting with weights (";
    for (std::int64_t i = 0; i < d_; ++i) os << (i ? "," : "") << eta_[i];
    os << ") over F_" << q_ << ", zeta = " << zeta_;
    return os.str();
}

std::vector<std::int64_t> pseudoreflection_powers(const DiagonalAction& A) {
    std::vector<std::int64_t> out;
    const std::int64_t n = A.order();
    for (std::int64_t m = 1; m < n; ++m) {
        int moved = 0;
        for (auto w : A.weights())
            if (m * w % n != 0) ++moved;
        if (moved == 1) out.push_back(m);
    }
    return out;
}

bool ClassGroup::contains(std::int64_t c) const {
    return std::binary_search(members.begin(), members.end(), c);
}

ClassGroup class_group(const DiagonalAction& A) {
    const std::int64_t n = A.order();
    const auto prs = pseudoreflection_powers(A);
    ClassGroup H;
    H.members.clear();
    for (std::int64_t c = 0; c < n; ++c) {
        bool ok = true;
        for (auto m : prs)
            if (c * m % n != 0) { ok = false; break; }
        if (ok) H.members.push_back(c);
    }
    H.order = static_cast<std::int64_t>(H.members.size());
    H.generator = CharacterClass{0};
    for (auto c : H.members) {
        if (c == 0) continue;
        // c generates iff its multiples hit every member.
        std::int64_t cnt = 0;
        for (std::int64_t k = 0, x = 0; k < H.order; ++k, x = (x + c) % n)
            if (H.contains(x)) ++cnt;
        std::int64_t span = n / std::gcd(c, n);
        if (span == H.order && cnt == H.order) { H.generator = CharacterClass{c}; break; }
    }
    return H;
}

bool has_primitive_eigenvalue(const DiagonalAction& A) {
    for (auto w : A.weights())
        if (std::gcd(w, A.order()) == 1) return true;
    return false;
}

CharacterClass determinant_character(const DiagonalAction& A) {
    std::int64_t s = 0;
    for (auto w : A.weights()) s += w;
    return CharacterClass{s % A.order()};
}

} // namespace semidual
