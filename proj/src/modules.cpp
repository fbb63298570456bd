#include "semidual/modules.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semidual {

std::int64_t total_degree(const Exp& a) {
    std::int64_t s = 0;
    for (auto v : a) s += v;
    return s;
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool exp_dominates(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

bool exp_is_zero(const Exp& a) {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

bool mono_less(const Exp& a, const Exp& b) {
    const std::int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

void monomials_rec(Exp& cur, std::size_t i, std::int64_t left,
                   const std::function<void(const Exp&)>& fn) {
    if (i + 1 == cur.size()) {
        cur[i] = left;
        fn(cur);
        return;
    }
    for (std::int64_t v = left; v >= 0; --v) {
        cur[i] = v;
        monomials_rec(cur, i + 1, left - v, fn);
    }
}

} // namespace

void for_each_monomial(std::int64_t d, std::int64_t degree,
                       const std::function<void(const Exp&)>& fn) {
    if (d < 1 || degree < 0) return;
    Exp cur(static_cast<std::size_t>(d), 0);
    monomials_rec(cur, 0, degree, fn);
}

void for_each_box(const Exp& lo, const Exp& hi,
                  const std::function<void(const Exp&)>& fn) {
    const std::size_t d = lo.size();
    for (std::size_t i = 0; i < d; ++i)
        if (lo[i] > hi[i]) return;
    Exp cur = lo;
    while (true) {
        fn(cur);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                for (std::size_t j = i + 1; j < d; ++j) cur[j] = lo[j];
                break;
            }
            if (i == 0) return;
        }
    }
}

namespace {

bool dominated_by_any(const Exp& u, const std::vector<Exp>& gens) {
    for (const auto& g : gens)
        if (exp_dominates(u, g)) return true;
    return false;
}

// Shared enumeration for minimal elements of a weight-class set; skip_zero
// turns it into the Hilbert-basis variant.
std::vector<Exp> minimal_weight_class(const DiagonalAction& A, std::int64_t w,
                                      bool skip_zero) {
    const std::int64_t n = A.order(), d = A.dim();
    w = ((w % n) + n) % n;
    std::vector<Exp> gens;
    for (std::int64_t deg = skip_zero ? 1 : 0; deg <= n; ++deg) {
        for_each_monomial(d, deg, [&](const Exp& u) {
            if (A.weight_of(u) != w) return;
            if (!dominated_by_any(u, gens)) gens.push_back(u);
        });
    }
    // Safety sweep: the zero-sum argument says nothing new can appear here.
    for (std::int64_t deg = n + 1; deg <= 2 * n; ++deg) {
        for_each_monomial(d, deg, [&](const Exp& u) {
            if (A.weight_of(u) != w) return;
            if (!dominated_by_any(u, gens))
                throw std::logic_error(
                    "weight-class generator above the zero-sum degree bound");
        });
    }
    return gens;
}

} // namespace

std::vector<Exp> class_set_generators(const DiagonalAction& A, std::int64_t w) {
    return minimal_weight_class(A, w, /*skip_zero=*/false);
}

std::vector<Exp> hilbert_basis(const DiagonalAction& A) {
    return minimal_weight_class(A, 0, /*skip_zero=*/true);
}

MonomialModule::MonomialModule(DiagonalAction A, std::vector<Exp> gens, std::int64_t w,
                               std::optional<Exp> corner)
    : action_(std::move(A)), gens_(std::move(gens)), weight_(w), corner_(std::move(corner)) {}

MonomialModule MonomialModule::from_generators(const DiagonalAction& A,
                                               std::vector<Exp> gens) {
    if (gens.empty()) throw std::invalid_argument("MonomialModule: no generators");
    const std::int64_t w = A.weight_of(gens.front());
    for (const auto& g : gens) {
        if (static_cast<std::int64_t>(g.size()) != A.dim())
            throw std::invalid_argument("MonomialModule: generator of wrong length");
        for (auto v : g)
            if (v < 0) throw std::invalid_argument("MonomialModule: negative exponent");
        if (A.weight_of(g) != w)
            throw std::invalid_argument("MonomialModule: generators of mixed weight");
    }
    std::sort(gens.begin(), gens.end(), mono_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Minimalize: within one weight class, g' + Q contains g iff g >= g'.
    std::vector<Exp> keep;
    for (const auto& g : gens)
        if (!dominated_by_any(g, keep)) keep.push_back(g);
    return MonomialModule(A, std::move(keep), w, std::nullopt);
}

MonomialModule MonomialModule::saturated(const DiagonalAction& A, std::int64_t weight,
                                         const Exp& corner) {
    const std::int64_t n = A.order();
    const std::int64_t w = ((weight % n) + n) % n;
    const std::int64_t wrel = ((w - A.weight_of(corner)) % n + n) % n;
    auto rel = class_set_generators(A, wrel);
    std::vector<Exp> gens;
    gens.reserve(rel.size());
    for (const auto& u : rel) gens.push_back(exp_add(corner, u));
    std::sort(gens.begin(), gens.end(), mono_less);
    return MonomialModule(A, std::move(gens), w, corner);
}

bool MonomialModule::contains(const Exp& a) const {
    if (action_.weight_of(a) != weight_) return false;
    if (corner_) return exp_dominates(a, *corner_);
    return dominated_by_any(a, gens_);
}

Exp MonomialModule::generator_corner() const {
    Exp c = gens_.front();
    for (const auto& g : gens_)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(c[i], g[i]);
    return c;
}

std::pair<MonomialModule, Exp> MonomialModule::normal_form() const {
    const Exp c = generator_corner();
    if (exp_is_zero(c)) return {*this, c};
    std::vector<Exp> shifted;
    shifted.reserve(gens_.size());
    for (const auto& g : gens_) shifted.push_back(exp_sub(g, c));
    std::optional<Exp> corner;
    if (corner_) corner = exp_sub(*corner_, c);
    const std::int64_t n = action_.order();
    const std::int64_t w = ((weight_ - action_.weight_of(c)) % n + n) % n;
    return {MonomialModule(action_, std::move(shifted), w, std::move(corner)), c};
}

bool MonomialModule::same_presentation(const MonomialModule& other) const {
    return action_.order() == other.action_.order() &&
           action_.weights() == other.action_.weights() && weight_ == other.weight_ &&
           gens_ == other.gens_;
}

MonomialModule module_for_class(const DiagonalAction& A, CharacterClass c) {
    const std::int64_t n = A.order();
    const std::int64_t cc = ((c.c % n) + n) % n;
    if (!class_group(A).contains(cc))
        throw std::domain_error("module_for_class: character outside the class group");
    return MonomialModule::saturated(A, (n - cc) % n, Exp(A.dim(), 0));
}

MonomialModule unit_module(const DiagonalAction& A) {
    return MonomialModule::saturated(A, 0, Exp(A.dim(), 0));
}

MonomialModule interior_dualizing(const DiagonalAction& A) {
    return MonomialModule::saturated(A, 0, Exp(A.dim(), 1));
}

std::int64_t dim_component(const MonomialModule& M, std::int64_t degree) {
    if (degree < 0) throw std::invalid_argument("dim_component: negative degree");
    std::int64_t count = 0;
    for_each_monomial(M.dim_count(), degree, [&](const Exp& a) {
        if (M.contains(a)) ++count;
    });
    return count;
}

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::int64_t molien_dim(const DiagonalAction& A, CharacterClass chi, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("molien_dim: negative degree");
    const std::int64_t n = A.order(), d = A.dim();
    const std::int64_t p = find_modulus_at_least(n, 1000003);
    if (binom(m + d - 1, d - 1) >= p)
        throw std::overflow_error("molien_dim: count could reach the oracle modulus");
    const PrimeField F(p);
    const std::int64_t zp = root_of_unity(p, n);
    const std::int64_t c = ((chi.c % n) + n) % n;

    std::int64_t total = 0;
    std::vector<std::int64_t> series(static_cast<std::size_t>(m) + 1);
    for (std::int64_t j = 0; j < n; ++j) {
        std::fill(series.begin(), series.end(), 0);
        series[0] = 1;
        for (std::int64_t i = 0; i < d; ++i) {
            // multiply by 1/(1 - zp^{eta_i j} t) truncated at degree m
            const std::int64_t r = F.pow(zp, A.weights()[i] * j % n);
            for (std::int64_t t = 1; t <= m; ++t)
                series[t] = (series[t] + r * series[t - 1]) % p;
        }
        const std::int64_t chi_inv = F.pow(zp, ((n - c) % n) * j % n);
        total = (total + chi_inv * series[m]) % p;
    }
    total = F.mul(total, F.inv(n % p));
    return total;
}

bool is_indivisible(const MonomialModule& M, const Exp& a) {
    if (!M.contains(a))
        throw std::invalid_argument("is_indivisible: exponent not in the module");
    bool divisible = false;
    Exp lo(a.size(), 0);
    for_each_box(lo, a, [&](const Exp& sigma) {
        if (divisible || exp_is_zero(sigma)) return;
        if (!M.action().in_semigroup(sigma)) return;
        if (M.contains(exp_sub(a, sigma))) divisible = true;
    });
    return !divisible;
}

MonomialModule product(const MonomialModule& Ma, const MonomialModule& Mb) {
    if (Ma.action().weights() != Mb.action().weights() ||
        Ma.action().order() != Mb.action().order())
        throw std::invalid_argument("product: modules over different actions");
    std::vector<Exp> sums;
    sums.reserve(Ma.generators().size() * Mb.generators().size());
    for (const auto& g : Ma.generators())
        for (const auto& h : Mb.generators()) sums.push_back(exp_add(g, h));
    return MonomialModule::from_generators(Ma.action(), std::move(sums));
}

ColonResult colon(const MonomialModule& B, const MonomialModule& A) {
    if (B.action().weights() != A.action().weights() ||
        B.action().order() != A.action().order())
        throw std::invalid_argument("colon: modules over different actions");
    const DiagonalAction& act = B.action();
    const std::int64_t n = act.order();

    // The target must be saturated in its weight class, otherwise the colon
    // set need not be one and the generator bound below would be unsound.
    const Exp t = B.generator_corner();
    if (!B.is_saturated()) {
        bool ok = true;
        const std::int64_t wrel = ((B.weight() - act.weight_of(t)) % n + n) % n;
        for (std::int64_t deg = 0; deg <= n && ok; ++deg) {
            for_each_monomial(act.dim(), deg, [&](const Exp& u) {
                if (!ok || act.weight_of(u) != wrel) return;
                if (!B.contains(exp_add(t, u))) ok = false;
            });
        }
        if (!ok) throw std::domain_error("colon: target not saturated in its weight class");
    }
    const Exp corner = B.is_saturated() ? *B.saturation_corner() : t;

    Exp lo(act.dim());
    for (std::int64_t i = 0; i < act.dim(); ++i) {
        std::int64_t m = A.generators().front()[i];
        for (const auto& g : A.generators()) m = std::min(m, g[i]);
        lo[i] = corner[i] - m;
    }
    const std::int64_t w = ((B.weight() - A.weight() - act.weight_of(lo)) % n + n) % n;
    return ColonResult{MonomialModule::saturated(act, w, Exp(act.dim(), 0)), lo};
}

Classified classify(const MonomialModule& M) {
    auto [m0, shift] = M.normal_form();
    for (auto c : class_group(M.action()).members) {
        const MonomialModule rep = module_for_class(M.action(), CharacterClass{c});
        auto [r0, rshift] = rep.normal_form();
        if (m0.generators() == r0.generators() && m0.weight() == r0.weight())
            return Classified{CharacterClass{c}, exp_sub(shift, rshift)};
    }
    throw std::domain_error("not in class group");
}

} // namespace semidual
