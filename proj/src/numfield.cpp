#include "kronlift/numfield.hpp"

#include "kronlift/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kronlift {

namespace {

Rational eval_poly(const std::vector<Integer> &p, const Rational &t) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * t + Rational(*it);
    return acc;
}

int sgn(const Rational &q) { return ::sgn(q); }

void trim(std::vector<Rational> &p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Quotient and remainder of a by b in Q[x]; b nonzero and trimmed.
std::pair<std::vector<Rational>, std::vector<Rational>>
divmod(std::vector<Rational> a, const std::vector<Rational> &b) {
    trim(a);
    std::vector<Rational> q;
    if (a.size() < b.size())
        return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational &lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return {q, a};
}

std::vector<Rational> poly_sub_mul(const std::vector<Rational> &a,
                                   const std::vector<Rational> &q,
                                   const std::vector<Rational> &b) {
    // a - q*b
    std::vector<Rational> out(std::max(a.size(), q.empty() || b.empty()
                                                     ? std::size_t{0}
                                                     : q.size() + b.size() - 1),
                              Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] -= q[i] * b[j];
    trim(out);
    return out;
}

struct Interval {
    Rational lo, hi;
};

Interval imul(const Interval &a, const Interval &b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

} // namespace

NumberField::NumberField(std::vector<Integer> minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), root_{std::move(lo), std::move(hi)} {
    root_.lo.canonicalize();
    root_.hi.canonicalize();
    if (minpoly_.size() < 2 || minpoly_.back() != 1)
        throw Error(Errc::NonMonic, "minimal polynomial must be monic of degree >= 1");
    if (!(root_.lo < root_.hi))
        throw Error(Errc::NoRealRootIsolated, "root interval must satisfy lo < hi");
    if (sign_at(root_.lo) * sign_at(root_.hi) >= 0)
        throw Error(Errc::NoRealRootIsolated,
                    "minimal polynomial does not change sign on the root interval");
}

int NumberField::sign_at(const Rational &t) const { return sgn(eval_poly(minpoly_, t)); }

RationalInterval NumberField::refined_root(const Rational &max_width) const {
    RationalInterval r = root_;
    int slo = sign_at(r.lo);
    while (r.width() > max_width) {
        Rational mid = (r.lo + r.hi) / 2;
        int s = sign_at(mid);
        if (s == 0)
            return {mid, mid};
        if (s == slo)
            r.lo = mid;
        else
            r.hi = mid;
    }
    return r;
}

FieldPtr make_field(std::vector<Integer> minpoly, Rational lo, Rational hi) {
    return std::make_shared<const NumberField>(std::move(minpoly), std::move(lo),
                                               std::move(hi));
}

FieldPtr rational_field() {
    static const FieldPtr q = make_field({Integer(-1), Integer(1)}, Rational(0), Rational(2));
    return q;
}

bool same_field(const FieldPtr &a, const FieldPtr &b) {
    return a == b || (a && b && *a == *b);
}

FieldElement::FieldElement(FieldPtr field)
    : field_(std::move(field)), coeffs_(field_->degree(), Rational(0)) {}

FieldElement::FieldElement(FieldPtr field, const Rational &value) : FieldElement(std::move(field)) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree())
        throw Error(Errc::FieldMismatch, "coefficient vector length differs from field degree");
    for (auto &c : coeffs_)
        c.canonicalize();
}

FieldElement FieldElement::alpha_power(const FieldPtr &field, std::size_t power) {
    FieldElement acc(field, Rational(1));
    if (field->degree() == 1) {
        // alpha = -c_0 in Q
        FieldElement a(field, Rational(-field->minpoly()[0]));
        for (std::size_t i = 0; i < power; ++i)
            acc *= a;
        return acc;
    }
    std::vector<Rational> c(field->degree(), Rational(0));
    c[1] = 1;
    FieldElement a(field, std::move(c));
    for (std::size_t i = 0; i < power; ++i)
        acc *= a;
    return acc;
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

bool FieldElement::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational &c) { return c == 0; });
}

void FieldElement::check_same(const FieldElement &rhs) const {
    if (!same_field(field_, rhs.field_))
        throw Error(Errc::FieldMismatch, "operands live in different number fields");
}

FieldElement FieldElement::operator-() const {
    FieldElement out(*this);
    for (auto &c : out.coeffs_)
        c = -c;
    return out;
}

FieldElement &FieldElement::operator+=(const FieldElement &rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

FieldElement &FieldElement::operator*=(const Rational &rhs) {
    for (auto &c : coeffs_)
        c *= rhs;
    return *this;
}

FieldElement &FieldElement::operator*=(const FieldElement &rhs) {
    check_same(rhs);
    const std::size_t D = coeffs_.size();
    if (D == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    if (rhs.is_rational())
        return *this *= rhs.coeffs_[0];
    if (is_rational()) {
        Rational r = coeffs_[0];
        coeffs_ = rhs.coeffs_;
        return *this *= r;
    }
    std::vector<Rational> prod(2 * D - 1, Rational(0));
    for (std::size_t i = 0; i < D; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < D; ++j)
            if (rhs.coeffs_[j] != 0)
                prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    const auto &f = field_->minpoly();
    for (std::size_t k = 2 * D - 2; k >= D; --k) {
        if (prod[k] == 0)
            continue;
        Rational c = prod[k];
        for (std::size_t i = 0; i < D; ++i)
            prod[k - D + i] -= c * Rational(f[i]);
        prod[k] = 0;
    }
    prod.resize(D);
    coeffs_ = std::move(prod);
    return *this;
}

FieldElement &FieldElement::operator/=(const FieldElement &rhs) { return *this *= rhs.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw Error(Errc::DivisionByZero, "inverse of zero");
    if (is_rational())
        return FieldElement(field_, Rational(1) / coeffs_[0]);
    std::vector<Rational> f(field_->minpoly().begin(), field_->minpoly().end());
    std::vector<Rational> a = coeffs_;
    trim(a);
    // Invariant: s_i * a == r_i (mod f).
    std::vector<Rational> r0 = f, r1 = a;
    std::vector<Rational> s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        std::vector<Rational> s = poly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (r1.empty())
            throw Error(Errc::ReducibleMinimalPolynomial,
                        "element shares a factor with the minimal polynomial");
    }
    // r1 is a nonzero constant.
    Rational c = r1[0];
    std::vector<Rational> out(field_->degree(), Rational(0));
    auto [q, rem] = divmod(s1, f);
    for (std::size_t i = 0; i < rem.size(); ++i)
        out[i] = rem[i] / c;
    return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::reduced_mod_one() const {
    FieldElement out(*this);
    out.coeffs_[0] = mod_one(out.coeffs_[0]);
    return out;
}

bool FieldElement::operator==(const FieldElement &rhs) const {
    return same_field(field_, rhs.field_) && coeffs_ == rhs.coeffs_;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << coeffs_[i].get_str();
        if (i == 1)
            os << "*a";
        else if (i > 1)
            os << "*a^" << i;
    }
    if (first)
        os << "0";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const FieldElement &x) { return os << x.to_string(); }

RationalInterval approx(const FieldElement &x, const Rational &eps) {
    if (x.is_rational())
        return {x.rational_part(), x.rational_part()};
    Rational width = x.field()->root_interval().width();
    for (;;) {
        RationalInterval root = x.field()->refined_root(width);
        Interval t{root.lo, root.hi};
        const auto &c = x.coeffs();
        Interval acc{c.back(), c.back()};
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            acc = imul(acc, t);
            acc.lo += c[i];
            acc.hi += c[i];
        }
        if (acc.hi - acc.lo < eps)
            return {acc.lo, acc.hi};
        width /= 2;
    }
}

double to_double(const FieldElement &x) {
    RationalInterval iv = approx(x, Rational(1, 1) / Rational(Integer(1) << 60));
    Rational mid = (iv.lo + iv.hi) / 2;
    return mid.get_d();
}

Rational floor_rational(const Rational &q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

Rational mod_one(const Rational &q) { return q - floor_rational(q); }

} // namespace kronlift
