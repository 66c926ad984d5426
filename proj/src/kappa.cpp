#include "tautring/kappa.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tautring/linalg.hpp"
#include "tautring/phi.hpp"

namespace tautring {

namespace {

FamilyPtr shared_constrained(int n) {
    static std::mutex m;
    static std::map<int, FamilyPtr> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, FamilyPresentation::constrained(n)).first;
    return it->second;
}

void assert_even_c(const Poly& p) {
    // n = 1 outputs live in {B, C}; tautological classes contain C only squared
    if (same_space(p.space(), bc_space()) && !p.even_in(p.space()->index_of("C")))
        throw std::logic_error("kappa: odd power of C in a tautological class");
}

}  // namespace

Poly kappa_even(int n, int a, int b) {
    if (n < 1) throw std::invalid_argument("kappa_even: n >= 1 required");
    if (a < 0 || b < 0) throw std::invalid_argument("kappa_even: negative exponent");
    if (b % 2 != 0)
        throw std::invalid_argument("kappa_even: odd e-power; use kappa_odd with a choice index");
    FamilyPtr pres = shared_constrained(n);
    Poly pab = phi(a, b);
    Poly total(pres->space());
    for (int i = 1; i <= n; ++i)
        total += pab.substitute({{"x", pres->B(i)}, {"y", pres->C(i)}});
    assert_even_c(total);
    return total;
}

Poly kappa_odd(int n, int a, int b, int i) {
    if (n < 1) throw std::invalid_argument("kappa_odd: n >= 1 required");
    if (a < 0 || b < 0) throw std::invalid_argument("kappa_odd: negative exponent");
    if (b % 2 != 1) throw std::invalid_argument("kappa_odd: even e-power; use kappa_even");
    if (n >= 2 && (i < 1 || i > n))
        throw std::invalid_argument("kappa_odd: choice index out of range");
    FamilyPtr pres = shared_constrained(n);
    Poly pab = phi(a, b);
    Poly total(pres->space());
    for (int j = 1; j <= n; ++j)
        total += pab.substitute({{"x", pres->B(j)}, {"y", pres->C(j)}});
    for (int j = 1; n >= 2 && j <= n; ++j) {
        if (j == i) continue;
        Poly d2 = Rational(3) * (pres->D(i, j) * pres->D(i, j));
        Poly base_p = d2 + Rational(2) * pres->B(j);
        Poly base_e = d2 - pres->B(j);
        total -= Rational(2) * (base_p.pow(a) * base_e.pow(b - 1));
    }
    assert_even_c(total);
    return total;
}

KappaExpression kappa(int n, int a, int b, std::optional<int> choice_i) {
    KappaExpression k;
    k.n = n;
    k.a = a;
    k.b = b;
    if (b % 2 == 0) {
        k.choice_i = std::nullopt;
        k.value = kappa_even(n, a, b);
    } else {
        k.choice_i = choice_i.value_or(1);
        k.value = kappa_odd(n, a, b, *k.choice_i);
    }
    return k;
}

// ---------------------------------------------------------------------------
// W_n action on D polynomials

namespace {

struct DSpaceInfo {
    int n = 0;
    std::vector<std::pair<int, int>> pair_of;        // var index -> (i, j)
    std::map<std::pair<int, int>, int> index_of;     // (i, j) -> var index
};

DSpaceInfo d_space_info(const VarSpacePtr& space) {
    int nvars = space->size();
    // n(n-1) = nvars
    int n = 2;
    while (n * (n - 1) < nvars) ++n;
    if (n * (n - 1) != nvars)
        throw std::invalid_argument("weyl_act: not a D variable space");
    DSpaceInfo info;
    info.n = n;
    int v = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (space->name(v) != d_var_name(i, j) || space->weight(v) != 2)
                throw std::invalid_argument("weyl_act: not a D variable space");
            info.pair_of.emplace_back(i, j);
            info.index_of[{i, j}] = v;
            ++v;
        }
    return info;
}

}  // namespace

Poly weyl_act(const WeylElement& g, const Poly& p) {
    DSpaceInfo info = d_space_info(p.space());
    if (g.n() != info.n) throw std::invalid_argument("weyl_act: rank mismatch");
    Poly out(p.space());
    int nvars = p.space()->size();
    for (const auto& [e, c] : p.terms()) {
        Exponents ee(nvars, 0);
        Rational coeff = c;
        for (int v = 0; v < nvars; ++v) {
            if (e[v] == 0) continue;
            auto [i, j] = info.pair_of[v];
            int target = info.index_of.at({g.perm(i), g.perm(j)});
            ee[target] += e[v];
            if (g.sign(j) < 0 && e[v] % 2 == 1) coeff = -coeff;
        }
        Poly term = Poly::monomial(p.space(), std::move(ee), coeff);
        out += term;
    }
    return out;
}

bool is_invariant(int n, const Poly& p) {
    for (const auto& g : weyl_generators(n))
        if (weyl_act(g, p) != p) return false;
    return true;
}

Poly reynolds_average(int n, const Poly& p) {
    std::vector<WeylElement> group = weyl_group(n);
    Poly sum(p.space());
    for (const auto& g : group) sum += weyl_act(g, p);
    return Rational(1, static_cast<long>(group.size())) * sum;
}

Poly invariant_i1(int n) {
    FamilyPtr pres = shared_constrained(n);
    Poly s(pres->space());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) s += pres->D(i, j) * pres->D(i, j);
    return s;
}

Poly invariant_i2(int n) {
    FamilyPtr pres = shared_constrained(n);
    Poly s(pres->space());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                s += pres->D(i, k) * pres->D(j, k);
            }
    return s;
}

InvariantSpan invariant_subspace(int n, long degree) {
    if (n < 2) throw std::invalid_argument("invariant_subspace: n >= 2 required");
    VarSpacePtr space = d_space(n);
    std::vector<Exponents> monos = monomials_of_weighted_degree(space, degree);
    std::map<Exponents, int, TermOrder> col{TermOrder{space.get()}};
    for (int c = 0; c < static_cast<int>(monos.size()); ++c) col.emplace(monos[c], c);

    QMatrix rows;
    for (const auto& m : monos) {
        Poly avg = reynolds_average(n, Poly::monomial(space, m, Rational(1)));
        if (avg.is_zero()) continue;
        QVector row(monos.size(), Rational(0));
        for (const auto& [e, c] : avg.terms()) row[col.at(e)] = c;
        rows.push_back(std::move(row));
    }

    InvariantSpan out;
    if (rows.empty()) return out;
    RrefResult r = rref(std::move(rows));
    out.dimension = r.rank;
    for (int i = 0; i < r.rank; ++i) {
        std::vector<Integer> prim = primitive_normalize(r.mat[i]);
        Poly basis_poly(space);
        for (int c = 0; c < static_cast<int>(monos.size()); ++c)
            if (prim[c] != 0) basis_poly += Poly::monomial(space, monos[c], Rational(prim[c]));
        out.basis.push_back(std::move(basis_poly));
    }
    return out;
}

InvariantSpan i4_span_check(int n) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("i4_span_check: supported for 2 <= n <= 4");
    InvariantSpan span = invariant_subspace(n, 4);

    // the named invariants must lie in the computed span
    VarSpacePtr space = d_space(n);
    std::vector<Exponents> monos = monomials_of_weighted_degree(space, 4);
    std::map<Exponents, int, TermOrder> col{TermOrder{space.get()}};
    for (int c = 0; c < static_cast<int>(monos.size()); ++c) col.emplace(monos[c], c);
    QMatrix rows;
    auto poly_row = [&](const Poly& p) {
        QVector row(monos.size(), Rational(0));
        for (const auto& [e, c] : p.terms()) row[col.at(e)] = c;
        return row;
    };
    for (const auto& b : span.basis) rows.push_back(poly_row(b));
    int base_rank = rank(rows);
    rows.push_back(poly_row(invariant_i1(n)));
    rows.push_back(poly_row(invariant_i2(n)));
    if (rank(rows) != base_rank)
        throw std::logic_error("i4_span_check: I1/I2 outside the invariant span");
    return span;
}

// ---------------------------------------------------------------------------
// generator rewriting

VarSpacePtr cp2_generator_space() {
    static const VarSpacePtr space = VarSpace::create({{"u", 2}, {"v", 6}});
    return space;
}

Poly express_in_generators_n1(const Poly& p) {
    if (!same_space(p.space(), bc_space()))
        throw std::invalid_argument("express_in_generators_n1: expected a {B, C} polynomial");
    int ci = p.space()->index_of("C");
    int bi = p.space()->index_of("B");
    if (!p.even_in(ci))
        throw std::invalid_argument("express_in_generators_n1: odd power of C");

    VarSpacePtr gs = cp2_generator_space();
    Poly u = Poly::variable(gs, "u");
    Poly v = Poly::variable(gs, "v");
    // B = u/21, C^2 = v/81 - (203/27)(u/21)^3
    Poly b_img = Rational(1, 21) * u;
    Poly c2_img = Rational(1, 81) * v - Rational(203, 250047) * (u * u * u);

    Poly out(gs);
    for (const auto& [e, c] : p.terms())
        out += Rational(c) * (b_img.pow(e[bi]) * c2_img.pow(e[ci] / 2));
    return out;
}

VarSpacePtr cp2cp2_generator_space() {
    static const VarSpacePtr space = VarSpace::create({{"kp12", 4}, {"kp13", 8}});
    return space;
}

Poly express_in_generators_n2(const Poly& p) {
    if (!same_space(p.space(), d_space(2)))
        throw std::invalid_argument("express_in_generators_n2: expected a D polynomial for n = 2");
    if (!is_invariant(2, p))
        throw std::invalid_argument(
            "express_in_generators_n2: input is not a symmetric polynomial in D_1_2^2, D_2_1^2");

    // view through P = D_1_2^2, Q = D_2_1^2 (weights 4)
    VarSpacePtr pq = VarSpace::create({{"P", 4}, {"Q", 4}});
    Poly r(pq);
    for (const auto& [e, c] : p.terms())
        r += Poly::monomial(pq, {e[0] / 2, e[1] / 2}, c);

    Poly s1 = Poly::variable(pq, "P") + Poly::variable(pq, "Q");
    Poly s2 = Poly::variable(pq, "P") * Poly::variable(pq, "Q");

    VarSpacePtr es = VarSpace::create({{"s1", 4}, {"s2", 8}});
    Poly sym(es);
    // standard elementary-symmetric reduction on two variables
    while (!r.is_zero()) {
        auto lead = r.terms().begin();
        int a = lead->first[0], b = lead->first[1];
        Rational c = lead->second;
        if (a < b) std::swap(a, b);
        sym += Poly::monomial(es, {a - b, b}, c);
        r -= c * (s1.pow(a - b) * s2.pow(b));
    }

    VarSpacePtr gs = cp2cp2_generator_space();
    Poly k2 = Poly::variable(gs, "kp12");
    Poly k3 = Poly::variable(gs, "kp13");
    // kappa_{p1^2} = 63 s1 and kappa_{p1^3} = (5265/8) s1^2 - (1053/2) s2
    Poly s1_img = Rational(1, 63) * k2;
    Poly s2_img = Rational(5, 15876) * (k2 * k2) - Rational(2, 1053) * k3;
    return sym.substitute({{"s1", s1_img}, {"s2", s2_img}});
}

PointedRelation cp2_pointed_relation() {
    Poly kap = kappa_n1(2, 0);    // 21B
    Poly kap4 = kappa_n1(4, 0);   // 81C^2 + 609B^3

    N1Quotient p1 = N1Quotient::p1();
    N1Quotient lhs = p1.pow(3);
    std::array<N1Quotient, 4> basis = {
        kap * p1.pow(2),
        (kap * kap) * p1,
        N1Quotient::scalar(kap * kap * kap),
        N1Quotient::scalar(kap4),
    };

    // match coefficients of every (x-power, monomial) pair
    std::map<std::pair<int, Exponents>, int> row_index;
    auto touch = [&](const N1Quotient& q) {
        for (int k = 0; k < 3; ++k)
            for (const auto& [e, c] : q.c[k].terms()) {
                auto key = std::make_pair(k, e);
                if (!row_index.count(key)) {
                    int next = static_cast<int>(row_index.size());
                    row_index.emplace(key, next);
                }
            }
    };
    touch(lhs);
    for (const auto& b : basis) touch(b);

    QMatrix a(row_index.size(), QVector(4, Rational(0)));
    QVector rhs(row_index.size(), Rational(0));
    for (const auto& [key, r] : row_index) {
        rhs[r] = lhs.c[key.first].coeff(key.second);
        for (int c = 0; c < 4; ++c) a[r][c] = basis[c].c[key.first].coeff(key.second);
    }
    QVector sol = solve_unique(a, rhs);
    return PointedRelation{sol[0], sol[1], sol[2], sol[3]};
}

}  // namespace tautring
