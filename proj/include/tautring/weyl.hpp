#ifndef TAUTRING_WEYL_HPP
#define TAUTRING_WEYL_HPP

#include <vector>

namespace tautring {

/// Element of the hyperoctahedral group W_n = S_n x| Z_2^n, stored as a
/// signed permutation: the element sends basis vector e_i to sign(i) e_{perm(i)}
/// (indices 1-based).
class WeylElement {
public:
    explicit WeylElement(int n);  // identity
    WeylElement(std::vector<int> perm, std::vector<int> signs);

    static WeylElement identity(int n) { return WeylElement(n); }
    static WeylElement transposition(int n, int a, int b);
    static WeylElement sign_flip(int n, int k);  // theta_k

    int n() const { return static_cast<int>(perm_.size()); }
    int perm(int i) const { return perm_.at(i - 1); }
    int sign(int i) const { return signs_.at(i - 1); }

    /// Composition as maps: (a*b)(v) = a(b(v)).
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    WeylElement inverse() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.perm_ == b.perm_ && a.signs_ == b.signs_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

/// Generating set: adjacent transpositions (i, i+1) and the sign flips
/// theta_1..theta_n.
std::vector<WeylElement> weyl_generators(int n);

/// The full group, all 2^n n! elements, in a deterministic order.
std::vector<WeylElement> weyl_group(int n);

}  // namespace tautring

#endif
