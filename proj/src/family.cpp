#include "tautring/family.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace tautring {

std::string d_var_name(int i, int j) {
    return "D_" + std::to_string(i) + "_" + std::to_string(j);
}

VarSpacePtr d_space(int n) {
    if (n < 2) throw std::invalid_argument("d_space: requires n >= 2");
    std::vector<Var> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) vars.push_back({d_var_name(i, j), 2});
    return VarSpace::create(std::move(vars));
}

VarSpacePtr bc_space() {
    static const VarSpacePtr space = VarSpace::create({{"B", 2}, {"C", 3}});
    return space;
}

int FamilyPresentation::check_index(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("FamilyPresentation: index out of range");
    return i;
}

const Poly& FamilyPresentation::D(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("FamilyPresentation: D_ii is undefined");
    return D_[i - 1][j - 1];
}

const Poly& FamilyPresentation::mu() const {
    if (!mu_) throw std::invalid_argument("FamilyPresentation: mu is undefined in free mode");
    return *mu_;
}

FamilyPresentation::FamilyPresentation(int n, RingMode mode)
    : n_(n), mode_(mode), omega_(Poly(bc_space())) {
    if (n < 1) throw std::invalid_argument("FamilyPresentation: n >= 1 required");

    if (mode == RingMode::Free) {
        std::vector<Var> vars;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) vars.push_back({d_var_name(i, j), 2});
        for (int i = 1; i <= n; ++i) vars.push_back({"G_" + std::to_string(i), 4});
        for (int i = 1; i <= n; ++i) vars.push_back({"J_" + std::to_string(i), 6});
        vars.push_back({"omega", 8});
        space_ = VarSpace::create(std::move(vars));

        D_.assign(n, std::vector<Poly>(n, Poly(space_)));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) D_[i - 1][j - 1] = Poly::variable(space_, d_var_name(i, j));
        for (int i = 1; i <= n; ++i) G_.push_back(Poly::variable(space_, "G_" + std::to_string(i)));
        for (int i = 1; i <= n; ++i) J_.push_back(Poly::variable(space_, "J_" + std::to_string(i)));
        omega_ = Poly::variable(space_, "omega");
        // B_i = 2G_i + sum_{j != i} D_ij^2,  C_i = J_i - sum_{j != i} D_ij^2 D_ji
        for (int i = 1; i <= n; ++i) {
            Poly b = Rational(2) * G_[i - 1];
            Poly c = J_[i - 1];
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                const Poly& dij = D_[i - 1][j - 1];
                const Poly& dji = D_[j - 1][i - 1];
                b += dij * dij;
                c -= dij * dij * dji;
            }
            B_.push_back(std::move(b));
            C_.push_back(std::move(c));
        }
        return;
    }

    if (n == 1) {
        space_ = bc_space();
        Poly b = Poly::variable(space_, "B");
        Poly c = Poly::variable(space_, "C");
        D_.assign(1, std::vector<Poly>(1, Poly(space_)));
        B_.push_back(b);
        C_.push_back(c);
        G_.push_back(Rational(1, 2) * b);
        J_.push_back(c);
        omega_ = Rational(1, 4) * (b * b);
        mu_ = Rational(2) * b;
        return;
    }

    space_ = d_space(n);
    D_.assign(n, std::vector<Poly>(n, Poly(space_)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) D_[i - 1][j - 1] = Poly::variable(space_, d_var_name(i, j));

    // I1 = sum_{i != j} D_ij^2,  I2 = sum_{i,j,k distinct} D_ik D_jk
    Poly i1(space_), i2(space_);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            i1 += D_[i - 1][j - 1] * D_[i - 1][j - 1];
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                i2 += D_[i - 1][k - 1] * D_[j - 1][k - 1];
            }
        }

    // mu forced by summing the B_i constraint over i
    Rational nn(long(n) * (n - 1));
    mu_ = Rational(-(n - 5), 1) / nn * i1 - Rational(2) / nn * i2;

    // B_i from -2B_i + 3 sum D_ij^2 + mu = 0; this (not the looser printed
    // I2 coefficient) is the definition consistent with the kappa identities.
    for (int i = 1; i <= n; ++i) {
        Poly sum_dij2(space_);
        for (int j = 1; j <= n; ++j)
            if (j != i) sum_dij2 += D_[i - 1][j - 1] * D_[i - 1][j - 1];
        B_.push_back(Rational(3, 2) * sum_dij2 + Rational(1, 2) * (*mu_));
    }

    // C_i = (1/(n-1)) sum_{j != i} (D_ji^3 - B_i D_ji)
    for (int i = 1; i <= n; ++i) {
        Poly c(space_);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const Poly& dji = D_[j - 1][i - 1];
            c += dji * dji * dji - B_[i - 1] * dji;
        }
        C_.push_back(Rational(1, n - 1) * c);
    }

    // G_i = (B_i - sum D_ij^2)/2,  J_i = C_i + sum D_ij^2 D_ji
    for (int i = 1; i <= n; ++i) {
        Poly sum_dij2(space_), sum_d2d(space_);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const Poly& dij = D_[i - 1][j - 1];
            const Poly& dji = D_[j - 1][i - 1];
            sum_dij2 += dij * dij;
            sum_d2d += dij * dij * dji;
        }
        G_.push_back(Rational(1, 2) * (B_[i - 1] - sum_dij2));
        J_.push_back(C_[i - 1] + sum_d2d);
    }

    // omega from the nu^2-associativity equation, averaged over i
    Poly omega_sum(space_);
    for (int i = 1; i <= n; ++i) {
        Poly w = G_[i - 1] * G_[i - 1];
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const Poly& dij = D_[i - 1][j - 1];
            const Poly& dji = D_[j - 1][i - 1];
            w += dij * dij * dji * dji;
            w -= J_[j - 1] * dij;
        }
        omega_sum += w;
    }
    omega_ = Rational(1, n) * omega_sum;
}

FamilyPtr FamilyPresentation::constrained(int n) {
    return FamilyPtr(new FamilyPresentation(n, RingMode::Constrained));
}

FamilyPtr FamilyPresentation::free_mode(int n) {
    return FamilyPtr(new FamilyPresentation(n, RingMode::Free));
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(FamilyPtr pres)
    : pres_(std::move(pres)),
      c0_(pres_->space()),
      cx_(pres_->n(), Poly(pres_->space())),
      cnu_(pres_->space()) {}

RingElement RingElement::one(const FamilyPtr& pres) {
    RingElement e(pres);
    e.c0_ = pres->constant(Rational(1));
    return e;
}

RingElement RingElement::x(const FamilyPtr& pres, int i) {
    if (i < 1 || i > pres->n()) throw std::invalid_argument("RingElement::x: index out of range");
    RingElement e(pres);
    e.cx_[i - 1] = pres->constant(Rational(1));
    return e;
}

RingElement RingElement::nu(const FamilyPtr& pres) {
    RingElement e(pres);
    e.cnu_ = pres->constant(Rational(1));
    return e;
}

RingElement RingElement::scalar(const FamilyPtr& pres, const Poly& c0) {
    RingElement e(pres);
    if (!same_space(c0.space(), pres->space()))
        throw std::invalid_argument("RingElement::scalar: wrong coefficient space");
    e.c0_ = c0;
    return e;
}

bool RingElement::is_zero() const {
    if (!c0_.is_zero() || !cnu_.is_zero()) return false;
    for (const auto& c : cx_)
        if (!c.is_zero()) return false;
    return true;
}

RingElement RingElement::operator-() const {
    RingElement r(pres_);
    r.c0_ = -c0_;
    for (int i = 0; i < pres_->n(); ++i) r.cx_[i] = -cx_[i];
    r.cnu_ = -cnu_;
    return r;
}

static void check_same_pres(const FamilyPtr& a, const FamilyPtr& b) {
    if (a == b) return;
    if (a->n() != b->n() || a->mode() != b->mode() || !same_space(a->space(), b->space()))
        throw std::invalid_argument("RingElement: mismatched presentations");
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same_pres(pres_, o.pres_);
    c0_ += o.c0_;
    for (int i = 0; i < pres_->n(); ++i) cx_[i] += o.cx_[i];
    cnu_ += o.cnu_;
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check_same_pres(pres_, o.pres_);
    c0_ -= o.c0_;
    for (int i = 0; i < pres_->n(); ++i) cx_[i] -= o.cx_[i];
    cnu_ -= o.cnu_;
    return *this;
}

RingElement operator*(const Poly& c, RingElement e) {
    e.c0_ = c * e.c0_;
    for (auto& cc : e.cx_) cc = c * cc;
    e.cnu_ = c * e.cnu_;
    return e;
}

RingElement operator*(const Rational& c, RingElement e) {
    e.c0_ = c * e.c0_;
    for (auto& cc : e.cx_) cc = c * cc;
    e.cnu_ = c * e.cnu_;
    return e;
}

namespace {

// basis products from the structure table
RingElement table_xx(const FamilyPtr& p, int i, int j) {
    RingElement r(p);
    if (i == j) {
        // x_i^2 = nu + sum_{j != i} D_ij x_j + G_i
        r += RingElement::nu(p);
        for (int k = 1; k <= p->n(); ++k)
            if (k != i) r += p->D(i, k) * RingElement::x(p, k);
        r += RingElement::scalar(p, p->G(i));
    } else {
        // x_i x_j = D_ij x_i + D_ji x_j - D_ij D_ji
        r += p->D(i, j) * RingElement::x(p, i);
        r += p->D(j, i) * RingElement::x(p, j);
        r -= RingElement::scalar(p, p->D(i, j) * p->D(j, i));
    }
    return r;
}

RingElement table_xnu(const FamilyPtr& p, int i) {
    // x_i nu = G_i x_i - sum_{j != i} D_ij D_ji x_j + J_i
    RingElement r(p);
    r += p->G(i) * RingElement::x(p, i);
    for (int j = 1; j <= p->n(); ++j)
        if (j != i) r -= (p->D(i, j) * p->D(j, i)) * RingElement::x(p, j);
    r += RingElement::scalar(p, p->J(i));
    return r;
}

RingElement table_nunu(const FamilyPtr& p) {
    // nu^2 = sum_j J_j x_j + omega
    RingElement r(p);
    for (int j = 1; j <= p->n(); ++j) r += p->J(j) * RingElement::x(p, j);
    r += RingElement::scalar(p, p->omega());
    return r;
}

}  // namespace

RingElement operator*(const RingElement& a, const RingElement& b) {
    check_same_pres(a.pres_, b.pres_);
    const FamilyPtr& p = a.pres_;
    const int n = p->n();

    RingElement r(p);
    if (!a.c0_.is_zero()) r += a.c0_ * b;
    for (int i = 1; i <= n; ++i) {
        const Poly& ai = a.cx_[i - 1];
        if (ai.is_zero()) continue;
        if (!b.c0_.is_zero()) r += (ai * b.c0_) * RingElement::x(p, i);
        for (int j = 1; j <= n; ++j) {
            const Poly& bj = b.cx_[j - 1];
            if (bj.is_zero()) continue;
            r += (ai * bj) * table_xx(p, i, j);
        }
        if (!b.cnu_.is_zero()) r += (ai * b.cnu_) * table_xnu(p, i);
    }
    if (!a.cnu_.is_zero()) {
        if (!b.c0_.is_zero()) r += (a.cnu_ * b.c0_) * RingElement::nu(p);
        for (int j = 1; j <= n; ++j) {
            const Poly& bj = b.cx_[j - 1];
            if (bj.is_zero()) continue;
            r += (a.cnu_ * bj) * table_xnu(p, j);
        }
        if (!b.cnu_.is_zero()) r += (a.cnu_ * b.cnu_) * table_nunu(p);
    }
    return r;
}

RingElement RingElement::pow(int k) const {
    if (k < 0) throw std::invalid_argument("RingElement::pow: negative exponent");
    RingElement r = RingElement::one(pres_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
    check_same_pres(a.pres_, b.pres_);
    if (a.c0_ != b.c0_ || a.cnu_ != b.cnu_) return false;
    for (int i = 0; i < a.pres_->n(); ++i)
        if (a.cx_[i] != b.cx_[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// integration and characteristic classes

Poly fibre_integrate(const RingElement& u) { return u.cnu(); }

RingElement class_p1(const FamilyPtr& pres, const std::optional<Poly>& mu) {
    Poly m = pres->zero();
    if (pres->mode() == RingMode::Constrained) {
        m = pres->mu();
        if (mu) throw std::invalid_argument("class_p1: mu is derived in constrained mode");
    } else {
        if (!mu) throw std::invalid_argument("class_p1: free mode requires mu");
        if (!same_space(mu->space(), pres->space()))
            throw std::invalid_argument("class_p1: mu in wrong space");
        m = *mu;
    }
    RingElement r = RingElement::scalar(pres, m);
    for (int i = 1; i <= pres->n(); ++i) r += Rational(3) * table_xx(pres, i, i);
    return r;
}

RingElement class_e(const FamilyPtr& pres) {
    RingElement r = Rational(2) * RingElement::nu(pres);
    for (int i = 1; i <= pres->n(); ++i) r += table_xx(pres, i, i);
    return r;
}

CubicCheck cubic_check(const FamilyPtr& pres, int i) {
    if (i < 1 || i > pres->n()) throw std::invalid_argument("cubic_check: index out of range");
    RingElement xi = RingElement::x(pres, i);
    RingElement cubic = (xi * xi) * xi;
    cubic -= pres->B(i) * xi;
    cubic -= RingElement::scalar(pres, pres->C(i));
    CubicCheck out{std::move(cubic), {}};
    for (int j = 1; j <= pres->n(); ++j) {
        if (j == i) continue;
        const Poly& dji = pres->D(j, i);
        out.d_residuals.push_back(dji * dji * dji - pres->B(i) * dji - pres->C(i));
    }
    return out;
}

std::vector<Obstruction> associativity_obstructions(const FamilyPtr& pres) {
    const int n = pres->n();
    std::vector<std::pair<std::string, RingElement>> gens;
    for (int i = 1; i <= n; ++i) gens.emplace_back("x" + std::to_string(i), RingElement::x(pres, i));
    gens.emplace_back("nu", RingElement::nu(pres));

    std::vector<Obstruction> out;
    for (const auto& [ua, u] : gens)
        for (const auto& [va, v] : gens)
            for (const auto& [wa, w] : gens) {
                RingElement res = (u * v) * w - u * (v * w);
                out.push_back({ua + "*" + va + "*" + wa, std::move(res)});
            }
    return out;
}

// ---------------------------------------------------------------------------
// polynomial integration formulas

VarSpacePtr extended_space(const FamilyPtr& pres) {
    std::vector<Var> vars;
    const VarSpacePtr& cs = pres->space();
    for (int i = 0; i < cs->size(); ++i) vars.push_back(cs->var(i));
    for (int i = 1; i <= pres->n(); ++i) vars.push_back({"t_" + std::to_string(i), 2});
    return VarSpace::create(std::move(vars));
}

Poly promote(const FamilyPtr& pres, const Poly& p) {
    if (!same_space(p.space(), pres->space()))
        throw std::invalid_argument("promote: polynomial not in coefficient space");
    VarSpacePtr ext = extended_space(pres);
    Poly out(ext);
    int ncoeff = pres->space()->size();
    for (const auto& [e, c] : p.terms()) {
        Exponents ee(ext->size(), 0);
        for (int i = 0; i < ncoeff; ++i) ee[i] = e[i];
        out.set_coeff(ee, c);
    }
    return out;
}

Poly restrict_to_coeff(const FamilyPtr& pres, const Poly& p) {
    VarSpacePtr cs = pres->space();
    int ncoeff = cs->size();
    Poly out(cs);
    for (const auto& [e, c] : p.terms()) {
        for (int i = ncoeff; i < static_cast<int>(e.size()); ++i)
            if (e[i] != 0)
                throw std::invalid_argument("restrict_to_coeff: residual fibre variable");
        Exponents ee(e.begin(), e.begin() + ncoeff);
        out.set_coeff(ee, c);
    }
    return out;
}

namespace {

// f as a univariate polynomial in t_j: coefficient polynomials (in the full
// extended space but t-free) indexed by the t_j power.
std::map<int, Poly> collect_powers(const FamilyPtr& pres, const Poly& f, int j) {
    const VarSpacePtr& ext = f.space();
    int tj = ext->index_of("t_" + std::to_string(j));
    int ncoeff = pres->space()->size();
    std::map<int, Poly> by_power;
    for (const auto& [e, c] : f.terms()) {
        for (int k = ncoeff; k < ext->size(); ++k)
            if (k != tj && e[k] != 0)
                throw std::invalid_argument("collect_powers: unexpected fibre variable");
        Exponents ee = e;
        int m = ee[tj];
        ee[tj] = 0;
        auto it = by_power.find(m);
        if (it == by_power.end()) it = by_power.emplace(m, Poly(ext)).first;
        it->second += Poly::monomial(ext, std::move(ee), c);
    }
    return by_power;
}

// reduce t^m for m >= 3 by t^3 = B t + C, then return the t^2 coefficient
Poly single_var_integral(const FamilyPtr& pres, std::map<int, Poly> by_power, const Poly& bj,
                         const Poly& cj) {
    while (!by_power.empty()) {
        auto it = std::prev(by_power.end());
        int m = it->first;
        if (m < 3) break;
        Poly lead = std::move(it->second);
        by_power.erase(it);
        auto add = [&](int k, const Poly& inc) {
            auto jt = by_power.find(k);
            if (jt == by_power.end())
                by_power.emplace(k, inc);
            else
                jt->second += inc;
        };
        add(m - 2, bj * lead);
        add(m - 3, cj * lead);
    }
    auto it = by_power.find(2);
    if (it == by_power.end()) return Poly(pres->space());
    return restrict_to_coeff(pres, it->second);
}

Poly substitute_row(const FamilyPtr& pres, const Poly& f, int j) {
    // t_k -> D_jk (k != j), t_j kept
    const VarSpacePtr& ext = f.space();
    std::map<std::string, Poly> bind;
    for (int i = 0; i < pres->space()->size(); ++i) {
        const std::string& nm = pres->space()->name(i);
        bind.emplace(nm, Poly::variable(ext, nm));
    }
    for (int k = 1; k <= pres->n(); ++k) {
        std::string tk = "t_" + std::to_string(k);
        if (k == j)
            bind.emplace(tk, Poly::variable(ext, tk));
        else
            bind.emplace(tk, promote(pres, pres->D(j, k)));
    }
    return f.substitute(bind);
}

}  // namespace

Poly integrate_poly_diagonal(const FamilyPtr& pres, const Poly& f) {
    VarSpacePtr ext = extended_space(pres);
    if (!same_space(f.space(), ext))
        throw std::invalid_argument("integrate_poly_diagonal: f not in extended space");
    Poly total(pres->space());
    for (int j = 1; j <= pres->n(); ++j) {
        Poly fj = substitute_row(pres, f, j);
        total += single_var_integral(pres, collect_powers(pres, fj, j), promote(pres, pres->B(j)),
                                     promote(pres, pres->C(j)));
    }
    return total;
}

Poly integrate_poly_times_e(const FamilyPtr& pres, const Poly& f, int i) {
    if (i < 1 || i > pres->n())
        throw std::invalid_argument("integrate_poly_times_e: choice index out of range");
    VarSpacePtr ext = extended_space(pres);
    if (!same_space(f.space(), ext))
        throw std::invalid_argument("integrate_poly_times_e: f not in extended space");

    Poly total(pres->space());
    for (int j = 1; j <= pres->n(); ++j) {
        Poly fj = substitute_row(pres, f, j);
        // e(j) = 3 t_j^2 - B_j
        Poly tj = Poly::variable(ext, "t_" + std::to_string(j));
        Poly ej = Rational(3) * (tj * tj) - promote(pres, pres->B(j));
        total += single_var_integral(pres, collect_powers(pres, fj * ej, j),
                                     promote(pres, pres->B(j)), promote(pres, pres->C(j)));
    }
    for (int j = 1; j <= pres->n(); ++j) {
        if (j == i) continue;
        Poly fj = substitute_row(pres, f, j);
        std::map<std::string, Poly> bind;
        for (int k = 0; k < pres->space()->size(); ++k) {
            const std::string& nm = pres->space()->name(k);
            bind.emplace(nm, Poly::variable(pres->space(), nm));
        }
        for (int k = 1; k <= pres->n(); ++k) {
            std::string tk = "t_" + std::to_string(k);
            bind.emplace(tk, k == j ? pres->D(i, j) : pres->zero());  // t_k != j already gone
        }
        total -= Rational(2) * fj.substitute(bind);
    }
    return total;
}

Poly trace_integral(const RingElement& u) {
    const FamilyPtr& pres = u.presentation();
    Poly tr = (u * RingElement::one(pres)).c0();
    for (int i = 1; i <= pres->n(); ++i) tr += (u * RingElement::x(pres, i)).cx(i);
    tr += (u * RingElement::nu(pres)).cnu();
    return tr;
}

RingElement ring_eval_poly(const FamilyPtr& pres, const Poly& f) {
    VarSpacePtr ext = extended_space(pres);
    if (!same_space(f.space(), ext))
        throw std::invalid_argument("ring_eval_poly: f not in extended space");
    int ncoeff = pres->space()->size();
    RingElement total(pres);
    for (const auto& [e, c] : f.terms()) {
        Exponents coeff_exps(e.begin(), e.begin() + ncoeff);
        RingElement term =
            RingElement::scalar(pres, Poly::monomial(pres->space(), coeff_exps, c));
        for (int k = 1; k <= pres->n(); ++k) {
            int exp = e[ncoeff + k - 1];
            for (int q = 0; q < exp; ++q) term = term * RingElement::x(pres, k);
        }
        total += term;
    }
    return total;
}

std::vector<std::pair<std::string, Poly>> verify_sw_identities(const FamilyPtr& pres) {
    if (pres->mode() != RingMode::Constrained)
        throw std::invalid_argument("verify_sw_identities: constrained mode required");
    const int n = pres->n();
    std::vector<std::pair<std::string, Poly>> out;
    RingElement p1 = class_p1(pres);
    RingElement e = class_e(pres);
    auto X = [&](int i) { return RingElement::x(pres, i); };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                out.emplace_back(
                    "sw1[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                        "]",
                    fibre_integrate((X(i) * X(j)) * X(k)));
            }

    for (int i = 1; i <= n; ++i) {
        RingElement s = (X(i) * X(i)) * X(i);
        for (int j = 1; j <= n; ++j)
            if (j != i) s += Rational(3) * ((X(i) * X(j)) * X(j));
        s -= p1 * X(i);
        out.emplace_back("sw2[" + std::to_string(i) + "]", fibre_integrate(s));
    }

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            RingElement s = ((X(i) * X(j)) * X(j)) * X(j);
            s += ((X(i) * X(i)) * X(i)) * X(j);
            for (int k = 1; k <= n; ++k)
                if (k != i && k != j) s += Rational(3) * (((X(i) * X(j)) * X(k)) * X(k));
            s -= (p1 * X(i)) * X(j);
            out.emplace_back("sw3[" + std::to_string(i) + "," + std::to_string(j) + "]",
                             fibre_integrate(s));
        }

    {
        RingElement s(pres);
        for (int i = 1; i <= n; ++i) s += ((X(i) * X(i)) * X(i)) * X(i);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) s += Rational(6) * (((X(i) * X(i)) * X(j)) * X(j));
        s += Rational(3) * (e * e);
        for (int i = 1; i <= n; ++i) s -= Rational(2) * ((p1 * X(i)) * X(i));
        out.emplace_back("sw4", fibre_integrate(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// n = 1 quotient-ring model

N1Quotient::N1Quotient() : c{Poly(bc_space()), Poly(bc_space()), Poly(bc_space())} {}

N1Quotient N1Quotient::scalar(const Poly& c0) {
    if (!same_space(c0.space(), bc_space()))
        throw std::invalid_argument("N1Quotient: coefficient must live in {B, C}");
    N1Quotient q;
    q.c[0] = c0;
    return q;
}

N1Quotient N1Quotient::scalar(const Rational& c0) {
    return scalar(Poly::constant(bc_space(), c0));
}

N1Quotient N1Quotient::x() {
    N1Quotient q;
    q.c[1] = Poly::constant(bc_space(), Rational(1));
    return q;
}

N1Quotient N1Quotient::p1() {
    N1Quotient q;
    q.c[0] = Rational(2) * Poly::variable(bc_space(), "B");
    q.c[2] = Poly::constant(bc_space(), Rational(3));
    return q;
}

N1Quotient N1Quotient::e() {
    N1Quotient q;
    q.c[0] = -Poly::variable(bc_space(), "B");
    q.c[2] = Poly::constant(bc_space(), Rational(3));
    return q;
}

N1Quotient operator+(const N1Quotient& a, const N1Quotient& b) {
    N1Quotient r;
    for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

N1Quotient operator-(const N1Quotient& a, const N1Quotient& b) {
    N1Quotient r;
    for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

N1Quotient operator*(const N1Quotient& a, const N1Quotient& b) {
    VarSpacePtr s = bc_space();
    Poly B = Poly::variable(s, "B");
    Poly C = Poly::variable(s, "C");
    std::array<Poly, 5> raw{Poly(s), Poly(s), Poly(s), Poly(s), Poly(s)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) raw[i + j] += a.c[i] * b.c[j];
    // fold x^3 = B x + C and x^4 = B x^2 + C x
    N1Quotient r;
    r.c[0] = raw[0] + C * raw[3];
    r.c[1] = raw[1] + B * raw[3] + C * raw[4];
    r.c[2] = raw[2] + B * raw[4];
    return r;
}

N1Quotient operator*(const Poly& s, const N1Quotient& a) {
    N1Quotient r;
    for (int i = 0; i < 3; ++i) r.c[i] = s * a.c[i];
    return r;
}

N1Quotient N1Quotient::pow(int k) const {
    if (k < 0) throw std::invalid_argument("N1Quotient::pow: negative exponent");
    N1Quotient r = N1Quotient::scalar(Rational(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

Poly kappa_n1(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("kappa_n1: negative exponent");
    return (N1Quotient::p1().pow(a) * N1Quotient::e().pow(b)).integrate();
}

}  // namespace tautring
