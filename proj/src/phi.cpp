#include "tautring/phi.hpp"

#include <array>
#include <stdexcept>

namespace tautring {

VarSpacePtr phi_space() {
    static const VarSpacePtr space = VarSpace::create({{"x", 2}, {"y", 3}});
    return space;
}

PhiTable::PhiTable() : space_(phi_space()), three_x_(space_), depth3_factor_(space_) {
    three_x_ = Rational(3) * Poly::variable(space_, "x");
    Poly y = Poly::variable(space_, "y");
    Poly x = Poly::variable(space_, "x");
    depth3_factor_ = Rational(27) * (y * y) - Rational(4) * (x * x * x);
}

Poly PhiTable::phi(int a, int b) const {
    if (a < 0 || b < 0) throw std::invalid_argument("phi: negative index");
    std::lock_guard<std::mutex> lock(mutex_);
    return phi_locked(a, b);
}

const Poly& PhiTable::phi_locked(int a, int b) const {
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Poly value(space_);
    if (a > 0) {
        value = phi_locked(a - 1, b + 1) + three_x_ * phi_locked(a - 1, b);
    } else if (b == 0) {
        // zero
    } else if (b == 1) {
        value = Poly::constant(space_, Rational(3));
    } else if (b == 2) {
        value = three_x_;
    } else {
        value = three_x_ * phi_locked(0, b - 1) + depth3_factor_ * phi_locked(0, b - 3);
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

const PhiTable& shared_phi_table() {
    static const PhiTable table;
    return table;
}

Poly phi(int a, int b) { return shared_phi_table().phi(a, b); }

namespace {

// Element of Q[x,y][z] / (z^3 - x z - y): coefficients of z^0, z^1, z^2.
struct CubicModZ {
    std::array<Poly, 3> c;

    explicit CubicModZ(const VarSpacePtr& s) : c{Poly(s), Poly(s), Poly(s)} {}
};

CubicModZ mul_mod(const CubicModZ& u, const CubicModZ& v, const Poly& x, const Poly& y) {
    const VarSpacePtr& s = x.space();
    // raw degree-4 product, then fold z^3 = x z + y and z^4 = x z^2 + y z
    std::array<Poly, 5> raw{Poly(s), Poly(s), Poly(s), Poly(s), Poly(s)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) raw[i + j] += u.c[i] * v.c[j];
    CubicModZ r(s);
    r.c[0] = raw[0] + y * raw[3];
    r.c[1] = raw[1] + x * raw[3] + y * raw[4];
    r.c[2] = raw[2] + x * raw[4];
    return r;
}

}  // namespace

Poly phi_oracle_residue(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("phi_oracle_residue: negative index");
    VarSpacePtr s = phi_space();
    Poly x = Poly::variable(s, "x");
    Poly y = Poly::variable(s, "y");

    CubicModZ pprime(s);  // 3z^2 - x
    pprime.c[0] = -x;
    pprime.c[2] = Poly::constant(s, Rational(3));
    CubicModZ shifted(s);  // p'(z) + 3x = 3z^2 + 2x
    shifted.c[0] = Rational(2) * x;
    shifted.c[2] = Poly::constant(s, Rational(3));

    CubicModZ f(s);
    f.c[0] = Poly::constant(s, Rational(1));
    for (int i = 0; i < a; ++i) f = mul_mod(f, shifted, x, y);
    for (int i = 0; i < b; ++i) f = mul_mod(f, pprime, x, y);
    return f.c[2];
}

Rational phi_numeric(int a, int b, const Rational& x0, const Rational& y0) {
    return phi(a, b).evaluate({{"x", x0}, {"y", y0}});
}

}  // namespace tautring
