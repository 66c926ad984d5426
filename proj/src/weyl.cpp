#include "tautring/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tautring {

WeylElement::WeylElement(int n) : perm_(n), signs_(n, 1) {
    if (n < 1) throw std::invalid_argument("WeylElement: n >= 1 required");
    std::iota(perm_.begin(), perm_.end(), 1);
}

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
    if (perm_.empty() || perm_.size() != signs_.size())
        throw std::invalid_argument("WeylElement: bad sizes");
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
        if (p < 1 || p > static_cast<int>(perm_.size()) || seen[p - 1])
            throw std::invalid_argument("WeylElement: not a permutation");
        seen[p - 1] = true;
    }
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("WeylElement: signs must be +-1");
}

WeylElement WeylElement::transposition(int n, int a, int b) {
    WeylElement g(n);
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("WeylElement::transposition: index out of range");
    std::swap(g.perm_[a - 1], g.perm_[b - 1]);
    return g;
}

WeylElement WeylElement::sign_flip(int n, int k) {
    WeylElement g(n);
    if (k < 1 || k > n) throw std::invalid_argument("WeylElement::sign_flip: index out of range");
    g.signs_[k - 1] = -1;
    return g;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("WeylElement: rank mismatch");
    int n = a.n();
    std::vector<int> perm(n), signs(n);
    for (int i = 1; i <= n; ++i) {
        // b: e_i -> s_b(i) e_{pb(i)}, then a: e_{pb(i)} -> s_a(pb(i)) e_{pa(pb(i))}
        perm[i - 1] = a.perm(b.perm(i));
        signs[i - 1] = b.sign(i) * a.sign(b.perm(i));
    }
    return WeylElement(std::move(perm), std::move(signs));
}

WeylElement WeylElement::inverse() const {
    int n = this->n();
    std::vector<int> perm(n), signs(n);
    for (int i = 1; i <= n; ++i) {
        perm[perm_[i - 1] - 1] = i;
        signs[perm_[i - 1] - 1] = signs_[i - 1];
    }
    return WeylElement(std::move(perm), std::move(signs));
}

std::vector<WeylElement> weyl_generators(int n) {
    std::vector<WeylElement> gens;
    for (int i = 1; i < n; ++i) gens.push_back(WeylElement::transposition(n, i, i + 1));
    for (int k = 1; k <= n; ++k) gens.push_back(WeylElement::sign_flip(n, k));
    return gens;
}

std::vector<WeylElement> weyl_group(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<WeylElement> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> signs(n, 1);
            for (int k = 0; k < n; ++k)
                if (mask & (1u << k)) signs[k] = -1;
            out.emplace_back(perm, signs);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace tautring
