#include "tautring/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautring {

Poly::Poly(VarSpacePtr space) : space_(std::move(space)), terms_(TermOrder{space_.get()}) {
    if (!space_) throw std::invalid_argument("Poly: null variable space");
}

Poly Poly::constant(VarSpacePtr space, const Rational& c) {
    Poly p(std::move(space));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.space_->size(), 0), c);
    return p;
}

Poly Poly::variable(VarSpacePtr space, int index) {
    Poly p(std::move(space));
    if (index < 0 || index >= p.space_->size())
        throw std::invalid_argument("Poly::variable: index out of range");
    Exponents e(p.space_->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::variable(VarSpacePtr space, const std::string& name) {
    int idx = space->index_of(name);
    return variable(std::move(space), idx);
}

Poly Poly::monomial(VarSpacePtr space, Exponents exps, const Rational& c) {
    Poly p(std::move(space));
    if (static_cast<int>(exps.size()) != p.space_->size())
        throw std::invalid_argument("Poly::monomial: exponent vector has wrong length");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

Rational Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Exponents(space_->size(), 0)); }

bool Poly::is_homogeneous(long degree) const {
    TermOrder ord{space_.get()};
    for (const auto& [e, c] : terms_)
        if (ord.weighted_degree(e) != degree) return false;
    return true;
}

bool Poly::even_in(int index) const {
    for (const auto& [e, c] : terms_)
        if (e.at(index) % 2 != 0) return false;
    return true;
}

bool Poly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

void Poly::set_coeff(const Exponents& e, const Rational& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

Poly Poly::operator-() const {
    Poly r(space_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!same_space(space_, o.space_))
        throw std::invalid_argument("Poly: mismatched variable spaces");
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!same_space(space_, o.space_))
        throw std::invalid_argument("Poly: mismatched variable spaces");
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!same_space(a.space_, b.space_))
        throw std::invalid_argument("Poly: mismatched variable spaces");
    Poly r(a.space_);
    const int nv = a.space_->size();
    Exponents e(nv);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Poly operator*(const Rational& c, Poly p) {
    if (c.is_zero()) return Poly(p.space_);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = constant(space_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (!same_space(a.space_, b.space_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
    // Resolve the target space and per-variable images.
    VarSpacePtr target;
    std::vector<const Poly*> image(space_->size(), nullptr);
    for (const auto& [name, img] : bindings) {
        if (!target)
            target = img.space();
        else if (!same_space(target, img.space()))
            throw std::invalid_argument("Poly::substitute: images in different spaces");
        if (space_->has(name)) image[space_->index_of(name)] = &img;
    }
    if (!target) {
        if (terms_.empty()) throw std::invalid_argument("Poly::substitute: no bindings given");
        target = space_;  // only reachable for constant polynomials below
    }

    int nv = space_->size();
    std::vector<int> max_exp(nv, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nv; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    for (int i = 0; i < nv; ++i)
        if (max_exp[i] > 0 && image[i] == nullptr)
            throw std::invalid_argument("Poly::substitute: unbound variable '" + space_->name(i) +
                                        "'");

    // Power cache: powers[i][k] = image_i^k.
    std::vector<std::vector<Poly>> powers(nv);
    for (int i = 0; i < nv; ++i) {
        if (max_exp[i] == 0) continue;
        powers[i].push_back(Poly::constant(target, Rational(1)));
        for (int k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * (*image[i]));
    }

    Poly result(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (int i = 0; i < nv; ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        result += term;
    }
    return result;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<std::optional<Rational>> vals(space_->size());
    for (const auto& [name, v] : point)
        if (space_->has(name)) vals[space_->index_of(name)] = v;
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < space_->size(); ++i) {
            if (e[i] == 0) continue;
            if (!vals[i])
                throw std::invalid_argument("Poly::evaluate: unbound variable '" +
                                            space_->name(i) + "'");
            for (int k = 0; k < e[i]; ++k) t *= *vals[i];
        }
        total += t;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        for (int i = 0; i < space_->size(); ++i)
            if (e[i] > 0) has_vars = true;
        bool unit = (mag == Rational(1));
        if (!unit || !has_vars) os << mag.str();
        bool need_star = !unit || !has_vars;
        for (int i = 0; i < space_->size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << space_->name(i);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

void enumerate_monomials(const VarSpacePtr& space, int var, long remaining,
                         const std::vector<int>* parity, Exponents& current,
                         std::vector<Exponents>& out) {
    int nv = space->size();
    if (var == nv) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    int w = space->weight(var);
    int p = parity ? (*parity)[var] : -1;
    // descending exponent gives descending graded-lex order within fixed degree
    for (int e = static_cast<int>(remaining / w); e >= 0; --e) {
        if (p >= 0 && e % 2 != p) continue;
        current[var] = e;
        enumerate_monomials(space, var + 1, remaining - long(e) * w, parity, current, out);
    }
    current[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_weighted_degree(const VarSpacePtr& space, long degree,
                                                    const std::vector<int>* parity) {
    if (degree < 0) throw std::invalid_argument("monomials_of_weighted_degree: negative degree");
    if (parity && static_cast<int>(parity->size()) != space->size())
        throw std::invalid_argument("monomials_of_weighted_degree: parity vector wrong length");
    std::vector<Exponents> out;
    Exponents current(space->size(), 0);
    enumerate_monomials(space, 0, degree, parity, current, out);
    return out;
}

}  // namespace tautring
