#include "gdbialg/conformal.hpp"

#include <sstream>
#include <stdexcept>

namespace gdbialg {

std::string ConformalMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* name, unsigned e) {
        if (!e) return;
        if (!first) os << "*";
        os << name;
        if (e > 1) os << "^" << e;
        first = false;
    };
    emit("del", d);
    emit("lambda", l);
    emit("mu", m);
    if (first) os << "1";
    return os.str();
}

PolyScalar PolyScalar::constant(const Scalar& c) {
    PolyScalar p;
    p.add_term({0, 0, 0}, c);
    return p;
}
PolyScalar PolyScalar::partial() {
    PolyScalar p;
    p.add_term({1, 0, 0}, Scalar(1));
    return p;
}
PolyScalar PolyScalar::lambda() {
    PolyScalar p;
    p.add_term({0, 1, 0}, Scalar(1));
    return p;
}
PolyScalar PolyScalar::mu() {
    PolyScalar p;
    p.add_term({0, 0, 1}, Scalar(1));
    return p;
}

void PolyScalar::add_term(const ConformalMonomial& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_[mono] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyScalar PolyScalar::operator+(const PolyScalar& o) const {
    PolyScalar out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}
PolyScalar PolyScalar::operator-(const PolyScalar& o) const {
    PolyScalar out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}
PolyScalar PolyScalar::operator*(const PolyScalar& o) const {
    PolyScalar out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            out.add_term({m1.d + m2.d, m1.l + m2.l, m1.m + m2.m}, c1 * c2);
    return out;
}
PolyScalar PolyScalar::pow(unsigned e) const {
    PolyScalar out = constant(Scalar(1));
    for (unsigned i = 0; i < e; ++i) out = out * (*this);
    return out;
}
PolyScalar PolyScalar::negated() const {
    PolyScalar out;
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

std::string PolyScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.str() << "*" << m.str();
        first = false;
    }
    return os.str();
}

PolyVector PolyVector::from_vector(const Vector& v) {
    PolyVector out(v.dim());
    out.add_term({0, 0, 0}, v);
    return out;
}

void PolyVector::add_term(const ConformalMonomial& mono, const Vector& v) {
    if (v.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_[mono] = v;
    } else {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyVector PolyVector::operator+(const PolyVector& o) const {
    PolyVector out = *this;
    if (out.dim_ == 0) out.dim_ = o.dim_;
    for (const auto& [m, v] : o.terms_) out.add_term(m, v);
    return out;
}
PolyVector PolyVector::operator-(const PolyVector& o) const {
    PolyVector out = *this;
    if (out.dim_ == 0) out.dim_ = o.dim_;
    for (const auto& [m, v] : o.terms_) out.add_term(m, -v);
    return out;
}
PolyVector PolyVector::scaled(const PolyScalar& p) const {
    PolyVector out(dim_);
    for (const auto& [m1, c] : p.terms())
        for (const auto& [m2, v] : terms_)
            out.add_term({m1.d + m2.d, m1.l + m2.l, m1.m + m2.m}, c * v);
    return out;
}
PolyVector PolyVector::apply_partial() const {
    PolyVector out(dim_);
    for (const auto& [m, v] : terms_) out.add_term({m.d + 1, m.l, m.m}, v);
    return out;
}

namespace {

Scalar binomial(unsigned n, unsigned k) {
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return Scalar(num, den);
}

}  // namespace

PolyVector PolyVector::substitute_lambda_neg_shift() const {
    // lambda^l -> (-lambda - del)^l = sum_t C(l,t) (-1)^l lambda^{l-t} del^t
    PolyVector out(dim_);
    for (const auto& [m, v] : terms_) {
        if (m.m != 0)
            throw std::logic_error("substitute_lambda_neg_shift: mu present in skew check");
        Scalar sign = (m.l % 2 == 0) ? Scalar(1) : Scalar(-1);
        for (unsigned t = 0; t <= m.l; ++t) {
            Scalar c = sign * binomial(m.l, t);
            out.add_term({m.d + t, m.l - t, 0}, c * v);
        }
    }
    return out;
}

std::string PolyVector::str(const std::vector<std::string>& basis_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [m, v] : terms_) {
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (v[i].is_zero()) continue;
            if (!first_term) os << " + ";
            os << "(" << v[i].str() << ")*" << m.str() << "*";
            if (i < basis_names.size()) os << basis_names[i];
            else os << "e" << (i + 1);
            first_term = false;
        }
    }
    return os.str();
}

QuadraticLambdaBracket::QuadraticLambdaBracket(GDBialgebra source) : src_(std::move(source)) {
    std::size_t n = src_.dim;
    star_ = BilinearMap(n, n, n);
    // star_(a, b) evaluates b * a = a o b + b o a (the symmetric part).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                star_.at(i, j, k) = src_.product.at(i, j, k) + src_.product.at(j, i, k);
}

PolyVector QuadraticLambdaBracket::bracket(const PolyVector& u, const PolyVector& v,
                                           const PolyScalar& x) const {
    std::size_t n = src_.dim;
    if ((u.dim() && u.dim() != n) || (v.dim() && v.dim() != n))
        throw DimensionMismatchError("QuadraticLambdaBracket::bracket: dimension mismatch");
    PolyVector out(n);
    PolyScalar x_plus_del = x + PolyScalar::partial();
    for (const auto& [m1, a] : u.terms()) {
        // [del^i a _x .] = (-x)^i [a _x .]
        PolyScalar left = x.negated().pow(m1.d);
        // carry the lambda/mu exponents of the u monomial
        PolyScalar carry1;
        carry1.add_term({0, m1.l, m1.m}, Scalar(1));
        for (const auto& [m2, b] : v.terms()) {
            // [. _x del^j b] = (x + del)^j [. _x b]
            PolyScalar right = x_plus_del.pow(m2.d);
            PolyScalar carry2;
            carry2.add_term({0, m2.l, m2.m}, Scalar(1));

            // [a _x b] = del (b o a) + x (b * a) + [b, a]
            PolyVector base(n);
            Vector boa = src_.product.eval(b, a);
            Vector bsa = star_.eval(a, b);  // b * a
            Vector bra = src_.bracket.eval(b, a);
            base = base + PolyVector::from_vector(boa).apply_partial();
            base = base + PolyVector::from_vector(bsa).scaled(x);
            base = base + PolyVector::from_vector(bra);

            out = out + base.scaled(left * right * carry1 * carry2);
        }
    }
    return out;
}

PolyVector QuadraticLambdaBracket::bracket_lambda(const PolyVector& u, const PolyVector& v) const {
    return bracket(u, v, PolyScalar::lambda());
}

namespace {

void record_poly(ValidationReport& rep, const std::string& cond, std::vector<std::size_t> idx,
                 const PolyVector& residual) {
    if (rep.has(cond)) return;
    // Pick the first nonzero monomial as the witness.
    const auto& [mono, vec] = *residual.terms().begin();
    rep.violations.push_back({cond, std::move(idx), vec, mono.str()});
}

}  // namespace

ValidationReport check_conformal_skew(const QuadraticLambdaBracket& B) {
    const GDBialgebra& A = B.source();
    std::size_t n = A.dim;
    ValidationReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        PolyVector a = PolyVector::from_vector(Vector::basis(n, i));
        for (std::size_t j = 0; j < n; ++j) {
            PolyVector b = PolyVector::from_vector(Vector::basis(n, j));
            // [b_l a] + [a_{-l-del} b] = 0
            PolyVector r = B.bracket_lambda(b, a) +
                           B.bracket_lambda(a, b).substitute_lambda_neg_shift();
            if (!r.is_zero()) record_poly(rep, "skew", {i, j}, r);
        }
    }
    return rep;
}

ValidationReport check_conformal_skew(const GDBialgebra& A) {
    return check_conformal_skew(QuadraticLambdaBracket(A));
}

ValidationReport check_conformal_jacobi(const QuadraticLambdaBracket& B) {
    const GDBialgebra& A = B.source();
    std::size_t n = A.dim;
    ValidationReport rep;
    PolyScalar lam = PolyScalar::lambda(), mu = PolyScalar::mu();
    PolyScalar lam_mu = lam + mu;
    for (std::size_t i = 0; i < n; ++i) {
        PolyVector a = PolyVector::from_vector(Vector::basis(n, i));
        for (std::size_t j = 0; j < n; ++j) {
            PolyVector b = PolyVector::from_vector(Vector::basis(n, j));
            for (std::size_t k = 0; k < n; ++k) {
                PolyVector c = PolyVector::from_vector(Vector::basis(n, k));
                // [a_l [b_m c]] - [[a_l b]_{l+m} c] - [b_m [a_l c]] = 0
                PolyVector r = B.bracket(a, B.bracket(b, c, mu), lam) -
                               B.bracket(B.bracket(a, b, lam), c, lam_mu) -
                               B.bracket(b, B.bracket(a, c, lam), mu);
                if (!r.is_zero()) record_poly(rep, "jacobi", {i, j, k}, r);
            }
        }
    }
    return rep;
}

ValidationReport check_conformal_jacobi(const GDBialgebra& A) {
    return check_conformal_jacobi(QuadraticLambdaBracket(A));
}

}  // namespace gdbialg
