#include "semidual/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semidual {

namespace {

struct Dsu {
    std::vector<std::int64_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::int64_t find(std::int64_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Keep the smaller index as representative so reps are lex-least pairs.
    bool unite(std::int64_t a, std::int64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::int64_t box_size_checked(const Exp& gamma) {
    std::int64_t size = 1;
    for (auto g : gamma) {
        if (g < 0) return 0;
        size *= g + 1;
        if (size > 16'000'000)
            throw std::invalid_argument("TensorComponent: degree box too large");
    }
    return size;
}

std::int64_t box_index(const Exp& a, const Exp& gamma) {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] > gamma[i]) return -1;
        idx = idx * (gamma[i] + 1) + a[i];
    }
    return idx;
}

} // namespace

TensorComponent::TensorComponent(const MonomialModule& A, const MonomialModule& B,
                                 Exp degree, RelationMode mode)
    : gamma_(std::move(degree)) {
    if (A.action().weights() != B.action().weights() ||
        A.action().order() != B.action().order())
        throw std::invalid_argument("TensorComponent: modules over different actions");
    if (static_cast<std::int64_t>(gamma_.size()) != A.action().dim())
        throw std::invalid_argument("TensorComponent: degree of wrong length");

    const DiagonalAction& act = A.action();
    const std::int64_t bsize = box_size_checked(gamma_);
    if (bsize == 0) {  // some coordinate negative: empty component
        components_ = 0;
        return;
    }

    const Exp zero(gamma_.size(), 0);
    std::vector<Exp> in_a, in_q;
    std::vector<uint8_t> b_mask(static_cast<std::size_t>(bsize), 0);
    for_each_box(zero, gamma_, [&](const Exp& p) {
        if (A.contains(p)) in_a.push_back(p);
        if (B.contains(p)) b_mask[static_cast<std::size_t>(box_index(p, gamma_))] = 1;
        if (mode == RelationMode::AllSemigroup && !exp_is_zero(p) && act.in_semigroup(p))
            in_q.push_back(p);
    });
    if (mode == RelationMode::GeneratorsOnly) {
        for (const auto& h : hilbert_basis(act))
            if (exp_dominates(gamma_, h)) in_q.push_back(h);
    }

    // Pair basis, sorted canonically by left exponent.
    std::vector<std::int64_t> pair_of(static_cast<std::size_t>(bsize), -1);
    for (const auto& mu : in_a) {
        const Exp nu = exp_sub(gamma_, mu);
        const std::int64_t bi = box_index(nu, gamma_);
        if (bi >= 0 && b_mask[static_cast<std::size_t>(bi)])
            pairs_.push_back(Pair{mu, nu});
    }
    std::sort(pairs_.begin(), pairs_.end(),
              [](const Pair& x, const Pair& y) { return mono_less(x.left, y.left); });
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        pair_of[static_cast<std::size_t>(box_index(pairs_[i].left, gamma_))] =
            static_cast<std::int64_t>(i);

    Dsu dsu(pairs_.size());
    for (const auto& sigma : in_q) {
        for (const auto& mu : in_a) {
            const Exp top = exp_add(mu, sigma);
            const std::int64_t pi = box_index(top, gamma_);
            if (pi < 0) continue;
            const std::int64_t p = pair_of[static_cast<std::size_t>(pi)];
            if (p < 0) continue;  // (mu+sigma, nu) not a valid pair
            const std::int64_t qi = box_index(mu, gamma_);
            const std::int64_t q = pair_of[static_cast<std::size_t>(qi)];
            if (q < 0) continue;  // needs nu+sigma in E(B), i.e. (mu, gamma-mu) valid
            // row: +1 at (mu+sigma, nu), -1 at (mu, nu+sigma)
            row_list_.emplace_back(p, q);
            dsu.unite(p, q);
            ++rows_;
        }
    }

    comp_.resize(pairs_.size());
    components_ = 0;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        comp_[i] = dsu.find(static_cast<std::int64_t>(i));
        if (comp_[i] == static_cast<std::int64_t>(i)) ++components_;
    }
}

std::int64_t TensorComponent::pair_index(const Exp& left) const {
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i].left == left) return static_cast<std::int64_t>(i);
    return -1;
}

std::int64_t TensorComponent::component_of(std::int64_t pair) const {
    return comp_.at(static_cast<std::size_t>(pair));
}

std::vector<TensorComponent::ResidualEntry>
TensorComponent::residual(std::int64_t p, std::int64_t q) const {
    const std::int64_t cp = component_of(p), cq = component_of(q);
    if (cp == cq) return {};
    std::vector<ResidualEntry> r{{std::min(cp, cq), cp < cq ? +1 : -1},
                                 {std::max(cp, cq), cp < cq ? -1 : +1}};
    return r;
}

RationalMatrix TensorComponent::relation_matrix() const {
    if (pairs_.size() * row_list_.size() > 4'000'000)
        throw std::invalid_argument("relation_matrix: component too large to densify");
    RationalMatrix M(row_list_.size(), pairs_.size());
    for (std::size_t r = 0; r < row_list_.size(); ++r) {
        const auto [p, q] = row_list_[r];
        M.at(r, static_cast<std::size_t>(p)) = 1;
        M.at(r, static_cast<std::size_t>(q)) -= 1;  // stays 0 if p == q
    }
    return M;
}

} // namespace semidual
