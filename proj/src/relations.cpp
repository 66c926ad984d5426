#include "tautring/relations.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tautring/linalg.hpp"
#include "tautring/phi.hpp"

namespace tautring {

std::string kappa_label(int d, int j) {
    int a = d - 2 * j;
    int b = 2 * j;
    std::ostringstream os;
    if (a > 0) {
        os << "p1";
        if (a > 1) os << "^" << a;
    }
    if (b > 0) {
        if (a > 0) os << " ";
        os << "e";
        if (b > 1) os << "^" << b;
    }
    return os.str();
}

RelationVector make_relation(int d, std::vector<Integer> coeffs) {
    if (static_cast<int>(coeffs.size()) != d / 2 + 1)
        throw std::invalid_argument("make_relation: wrong coefficient count");
    RelationVector r;
    r.d = d;
    r.coeffs = std::move(coeffs);
    for (int j = 0; j <= d / 2; ++j) r.labels.push_back(kappa_label(d, j));
    return r;
}

bool relation_holds(const RelationVector& r) {
    Poly sum(phi_space());
    for (int j = 0; j <= r.d / 2; ++j)
        sum += Rational(r.coeffs[j]) * phi(r.d - 2 * j, 2 * j);
    return sum.is_zero();
}

int relation_count_lower_bound(int d) {
    if (d < 1) throw std::invalid_argument("relation_count_lower_bound: d >= 1 required");
    return d / 2 - (d - 1) / 3;
}

std::vector<RelationVector> phi_relation_kernel(int d) {
    if (d < 1) throw std::invalid_argument("phi_relation_kernel: d >= 1 required");
    VarSpacePtr space = phi_space();
    std::vector<int> parity = {-1, 0};  // y even only
    std::vector<Exponents> monos = monomials_of_weighted_degree(space, 2 * (d - 1), &parity);

    QMatrix m(monos.size(), QVector(d / 2 + 1, Rational(0)));
    for (int j = 0; j <= d / 2; ++j) {
        Poly col = phi(d - 2 * j, 2 * j);
        for (int row = 0; row < static_cast<int>(monos.size()); ++row)
            m[row][j] = col.coeff(monos[row]);
    }

    std::vector<RelationVector> out;
    for (auto& v : kernel_basis(m)) out.push_back(make_relation(d, std::move(v)));
    return out;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and the L sequence

namespace {

class BernoulliCache {
public:
    Rational get(int m) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(values_.size()) <= m) {
            int k = static_cast<int>(values_.size());
            // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1
            Rational acc(0);
            Integer binom(1);  // C(k+1, 0)
            for (int j = 0; j < k; ++j) {
                acc += Rational(binom) * values_[j];
                binom = binom * Integer(k + 1 - j) / Integer(j + 1);
            }
            values_.push_back(k == 0 ? Rational(1) : -acc / Rational(binom));
        }
        return values_[m];
    }

private:
    std::mutex mutex_;
    std::vector<Rational> values_;
};

BernoulliCache& shared_bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

Rational factorial(int m) {
    Integer f(1);
    for (int i = 2; i <= m; ++i) f *= i;
    return Rational(f);
}

}  // namespace

Rational bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    return shared_bernoulli_cache().get(m);
}

VarSpacePtr lgenus_space() {
    static const VarSpacePtr space = VarSpace::create({{"p1", 4}, {"p2", 8}});
    return space;
}

namespace {

// q_m = 2^{2m} B_{2m} / (2m)!, the coefficients of sqrt(u)/tanh(sqrt(u))
std::vector<Rational> tanh_series(int order) {
    std::vector<Rational> q;
    Rational pow4(1);
    for (int m = 0; m <= order; ++m) {
        q.push_back(pow4 * bernoulli(2 * m) / factorial(2 * m));
        pow4 *= Rational(4);
    }
    return q;
}

}  // namespace

LPolyTwoVar l_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("l_polynomial: k >= 1 required");
    std::vector<Rational> q = tanh_series(k);

    VarSpacePtr space = lgenus_space();
    Poly e1 = Poly::variable(space, "p1");
    Poly e2 = Poly::variable(space, "p2");
    // power sums of the two formal roots via Newton's identities
    std::vector<Poly> psum = {Poly::constant(space, Rational(2)), e1};
    for (int m = 2; m <= k; ++m) psum.push_back(e1 * psum[m - 1] - e2 * psum[m - 2]);

    // degree-k part of Q(u1) Q(u2): sum over a+b=k, a >= b, of q_a q_b m_{a,b}
    // with m_{a,b} = e2^b (u1^{a-b} + u2^{a-b}) for a > b and e2^a for a = b
    LPolyTwoVar l;
    l.k = k;
    Poly total(space);
    for (int a = k; 2 * a >= k; --a) {
        int b = k - a;
        if (a == b)
            total += (q[a] * q[b]) * e2.pow(a);
        else
            total += (q[a] * q[b]) * (e2.pow(b) * psum[a - b]);
    }
    l.value = std::move(total);
    return l;
}

Poly l_polynomial_at_order(int k, int order) {
    if (k < 1) throw std::invalid_argument("l_polynomial_at_order: k >= 1 required");
    if (order < k) throw std::invalid_argument("l_polynomial_at_order: series order too small");
    std::vector<Rational> q = tanh_series(order);

    // literal product of the two truncated root series
    VarSpacePtr roots = VarSpace::create({{"u1", 1}, {"u2", 1}});
    Poly q1(roots), q2(roots);
    for (int m = 0; m <= order; ++m) {
        q1 += Poly::monomial(roots, {m, 0}, q[m]);
        q2 += Poly::monomial(roots, {0, m}, q[m]);
    }
    Poly product = q1 * q2;

    // homogeneous degree-k slice
    Poly slice(roots);
    for (const auto& [e, c] : product.terms())
        if (e[0] + e[1] == k) slice += Poly::monomial(roots, e, c);

    // rewrite the symmetric slice in the elementary symmetric functions
    VarSpacePtr space = lgenus_space();
    Poly s1 = Poly::variable(roots, "u1") + Poly::variable(roots, "u2");
    Poly s2 = Poly::variable(roots, "u1") * Poly::variable(roots, "u2");
    Poly out(space);
    while (!slice.is_zero()) {
        auto lead = slice.terms().begin();
        int a = lead->first[0], b = lead->first[1];
        Rational c = lead->second;
        if (a < b) std::swap(a, b);
        out += Poly::monomial(space, {a - b, b}, c);
        slice -= c * (s1.pow(a - b) * s2.pow(b));
    }
    return out;
}

RelationVector signature_relation(int d) {
    if (d < 2) throw std::invalid_argument("signature_relation: d >= 2 required");
    Poly l = l_polynomial(d).value;
    QVector coeffs;
    for (int j = 0; j <= d / 2; ++j) {
        Exponents e = {d - 2 * j, j};
        coeffs.push_back(l.coeff(e));
    }
    return make_relation(d, primitive_normalize(coeffs));
}

// ---------------------------------------------------------------------------
// printed tables

const std::vector<RelationVector>& printed_signature_rows() {
    static const std::vector<RelationVector> rows = [] {
        std::vector<RelationVector> r;
        r.push_back(make_relation(2, {1, -7}));
        r.push_back(make_relation(3, {2, -13}));
        r.push_back(make_relation(4, {3, -22, 19}));
        r.push_back(make_relation(5, {10, -83, 127}));
        r.push_back(make_relation(6, {1382, -12842, 27635, -8718}));
        r.push_back(make_relation(7, {420, -4322, 11880, -7978}));
        r.push_back(make_relation(8, {10851, -122508, 407726, -423040, 68435}));
        r.push_back(make_relation(
            9, {438670, -5391213, 20996751, -29509334, 11098737}));
        return r;
    }();
    return rows;
}

const std::vector<RelationVector>& printed_extra_rows() {
    static const std::vector<RelationVector> rows = [] {
        std::vector<RelationVector> r;
        r.push_back(make_relation(6, {0, 4, -41, 100}));
        r.push_back(make_relation(8, {0, 36, -461, 1843, -2300}));
        r.push_back(make_relation(9, {0, 24, -322, 1379, -1900}));
        r.push_back(make_relation(10, {0, 108, -1579, 7902, -15531, 9100}));
        r.push_back(make_relation(11, {0, 360, -5606, 30923, -71311, 57100}));
        r.push_back(make_relation(12, {0, 0, 144, -2552, 16629, -47400, 50000}));
        r.push_back(make_relation(12, {0, 6000, -98012, 577796, -1461667, 1338700, 0}));
        return r;
    }();
    return rows;
}

bool TableReport::all_passed() const {
    for (const auto& row : rows)
        if (!row.passed) return false;
    return true;
}

namespace {

std::vector<Integer> primitive_of(const std::vector<Integer>& v) {
    QVector q;
    for (const auto& x : v) q.push_back(Rational(x));
    return primitive_normalize(q);
}

std::string coeff_str(const std::vector<Integer>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    return os.str();
}

}  // namespace

TableReport verify_tables() {
    TableReport report;

    for (const auto& row : printed_signature_rows()) {
        RelationVector computed = signature_relation(row.d);
        bool ok = primitive_of(row.coeffs) == computed.coeffs;
        std::string detail = ok ? "" : "computed " + coeff_str(computed.coeffs) +
                                           " vs printed " + coeff_str(row.coeffs);
        report.rows.push_back({"signature-row-d" + std::to_string(row.d), ok, detail});
    }

    int extra_index = 0;
    for (const auto& row : printed_extra_rows()) {
        bool ok = relation_holds(row);
        ++extra_index;
        report.rows.push_back({"extra-row-" + std::to_string(extra_index) + "-d" +
                                   std::to_string(row.d),
                               ok, ok ? "" : "not annihilated by the phi matrix"});
    }

    for (int d = 2; d <= 12; ++d) {
        bool ok = relation_holds(signature_relation(d));
        report.rows.push_back({"signature-in-kernel-d" + std::to_string(d), ok,
                               ok ? "" : "phi sum nonzero"});
    }
    return report;
}

}  // namespace tautring
