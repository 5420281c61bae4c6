#include "ambiskew/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "ambiskew/errors.hpp"
#include "poly_internal.hpp"

namespace ambiskew {

namespace {

bool is_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den)
{
    // den is monic with integer coefficients.
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (std::size_t k = num.size(); k-- >= den.size();) {
        const long c = num[k];
        quot[k - (den.size() - 1)] = c;
        for (std::size_t i = 0; i < den.size(); ++i) {
            num[k - (den.size() - 1) + i] -= c * den[i];
        }
        if (k == den.size() - 1) {
            break;
        }
    }
    return quot;
}

} // namespace

std::vector<long> cyclotomic_polynomial(int n)
{
    if (n < 1) {
        throw InvalidArgument("cyclotomic polynomial order must be positive");
    }
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = poly_divide_exact(p, cyclotomic_polynomial(d));
        }
    }
    return p;
}

Field FieldSpec::make(std::vector<Parameter> parameters)
{
    std::shared_ptr<FieldSpec> f(new FieldSpec());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        const auto& p = parameters[i];
        if (!is_identifier(p.name)) {
            throw InvalidArgument("parameter name '" + p.name + "' is not an identifier");
        }
        if (!seen.insert(p.name).second) {
            throw InvalidArgument("duplicate parameter name '" + p.name + "'");
        }
        if (p.kind == ParameterKind::root_of_unity) {
            if (p.order < 1) {
                throw InvalidArgument("root-of-unity order must be at least 1");
            }
            if (f->root_) {
                throw InvalidArgument("at most one root-of-unity parameter is supported");
            }
            f->root_ = i;
            f->conductor_ = p.order;
        } else {
            f->variables_.push_back(i);
        }
    }
    f->parameters_ = std::move(parameters);
    for (long c : cyclotomic_polynomial(f->conductor_)) {
        f->modulus_.emplace_back(c);
    }
    return f;
}

Field FieldSpec::rationals()
{
    static const Field q = make({});
    return q;
}

std::optional<std::size_t> FieldSpec::find(std::string_view name) const
{
    for (std::size_t i = 0; i < parameters_.size(); ++i) {
        if (parameters_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> FieldSpec::variable_of(std::size_t parameter) const
{
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        if (variables_[v] == parameter) {
            return v;
        }
    }
    return std::nullopt;
}

bool same_field(const Field& a, const Field& b) noexcept
{
    if (a == b) {
        return true;
    }
    if (!a || !b) {
        return false;
    }
    return *a == *b;
}

// ---------------------------------------------------------------------------
// Scalar

using detail::Coeff;
using detail::Exponents;
using detail::Poly;

namespace {

Field resolve(const Field& a, const Field& b)
{
    if (!a) {
        return b;
    }
    if (b && !same_field(a, b)) {
        throw InvalidArgument("scalars belong to different fields");
    }
    return a;
}

} // namespace

Scalar::Scalar(Field field) : field_(std::move(field)) {}

Scalar::Scalar(Field field, Poly num, Poly den) : field_(std::move(field)), num_(std::move(num)), den_(std::move(den))
{
}

Scalar Scalar::integer(Field field, long value)
{
    return rational(std::move(field), mpq_class(value));
}

Scalar Scalar::rational(Field field, const mpq_class& value)
{
    if (!field) {
        throw InvalidArgument("scalar requires a field");
    }
    detail::PolyContext ctx(*field);
    Coeff c = ctx.zero_coeff();
    c[0] = value;
    c[0].canonicalize();
    return Scalar(field, ctx.constant(c), {});
}

Scalar Scalar::parameter(Field field, std::size_t index)
{
    if (!field || index >= field->parameters().size()) {
        throw InvalidArgument("unknown parameter index");
    }
    detail::PolyContext ctx(*field);
    if (field->root_parameter() && *field->root_parameter() == index) {
        Coeff c = ctx.zero_coeff();
        if (ctx.deg >= 2) {
            c[1] = 1;
        } else {
            // x mod (x + m0)
            c[0] = -field->modulus()[0];
        }
        return Scalar(field, ctx.constant(c), {});
    }
    Exponents e(ctx.nvars, 0);
    e[*field->variable_of(index)] = 1;
    Poly p;
    p.emplace(std::move(e), ctx.one_coeff());
    return Scalar(field, std::move(p), {});
}

Scalar Scalar::parameter(Field field, std::string_view name)
{
    if (!field) {
        throw InvalidArgument("scalar requires a field");
    }
    auto idx = field->find(name);
    if (!idx) {
        throw InvalidArgument("unknown parameter '" + std::string(name) + "'");
    }
    return parameter(std::move(field), *idx);
}

bool Scalar::is_one() const
{
    if (!den_.empty() || num_.size() != 1) {
        return false;
    }
    const auto& [e, c] = *num_.begin();
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }) && detail::coeff_is_one(c);
}

bool Scalar::is_constant() const
{
    if (!den_.empty()) {
        return false;
    }
    if (num_.empty()) {
        return true;
    }
    if (num_.size() != 1) {
        return false;
    }
    const auto& e = num_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<mpq_class> Scalar::as_rational() const
{
    if (num_.empty()) {
        return mpq_class(0);
    }
    if (!is_constant()) {
        return std::nullopt;
    }
    const Coeff& c = num_.begin()->second;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return c[0];
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    for (auto& [e, c] : r.num_) {
        for (auto& x : c) {
            x = -x;
        }
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    field_ = resolve(field_, rhs.field_);
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        num_ = rhs.num_;
        den_ = rhs.den_;
        return *this;
    }
    detail::PolyContext ctx(*field_);
    if (den_.empty() && rhs.den_.empty()) {
        ctx.add_into(num_, rhs.num_);
        return *this;
    }
    if (den_ == rhs.den_) {
        ctx.add_into(num_, rhs.num_);
        if (num_.empty()) {
            den_.clear();
            return *this;
        }
        Poly g = ctx.gcd(num_, den_);
        if (!ctx.is_one(g)) {
            num_ = ctx.div_exact(num_, g);
            den_ = ctx.div_exact(den_, g);
        }
        if (ctx.is_one(den_)) {
            den_.clear();
        }
        return *this;
    }
    if (rhs.den_.empty()) {
        // a/b + c = (a + c b)/b, already reduced
        ctx.add_into(num_, ctx.mul(rhs.num_, den_));
        if (num_.empty()) {
            den_.clear();
        }
        return *this;
    }
    if (den_.empty()) {
        Poly n = ctx.mul(num_, rhs.den_);
        ctx.add_into(n, rhs.num_);
        num_ = std::move(n);
        den_ = rhs.den_;
        if (num_.empty()) {
            den_.clear();
        }
        return *this;
    }
    const Poly g = ctx.gcd(den_, rhs.den_);
    const Poly b1 = ctx.div_exact(den_, g);
    const Poly d1 = ctx.div_exact(rhs.den_, g);
    Poly n = ctx.mul(num_, d1);
    ctx.add_into(n, ctx.mul(rhs.num_, b1));
    if (n.empty()) {
        num_.clear();
        den_.clear();
        return *this;
    }
    Poly d = ctx.mul(b1, rhs.den_);
    if (!ctx.is_one(g)) {
        const Poly g2 = ctx.gcd(n, g);
        if (!ctx.is_one(g2)) {
            n = ctx.div_exact(n, g2);
            d = ctx.div_exact(d, g2);
        }
    }
    num_ = std::move(n);
    den_ = ctx.is_one(d) ? Poly{} : std::move(d);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    field_ = resolve(field_, rhs.field_);
    if (is_zero()) {
        return *this;
    }
    if (rhs.is_zero()) {
        num_.clear();
        den_.clear();
        return *this;
    }
    detail::PolyContext ctx(*field_);
    if (den_.empty() && rhs.den_.empty()) {
        num_ = ctx.mul(num_, rhs.num_);
        return *this;
    }
    Poly a = num_;
    Poly c = rhs.num_;
    Poly b = den_;
    Poly d = rhs.den_;
    if (!d.empty()) {
        Poly g1 = ctx.gcd(a, d);
        if (!ctx.is_one(g1)) {
            a = ctx.div_exact(a, g1);
            d = ctx.div_exact(d, g1);
        }
    }
    if (!b.empty()) {
        Poly g2 = ctx.gcd(c, b);
        if (!ctx.is_one(g2)) {
            c = ctx.div_exact(c, g2);
            b = ctx.div_exact(b, g2);
        }
    }
    num_ = ctx.mul(a, c);
    Poly den;
    if (b.empty() || ctx.is_one(b)) {
        den = std::move(d);
    } else if (d.empty() || ctx.is_one(d)) {
        den = std::move(b);
    } else {
        den = ctx.mul(b, d);
    }
    den_ = (den.empty() || ctx.is_one(den)) ? Poly{} : std::move(den);
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero();
    }
    detail::PolyContext ctx(*field_);
    Poly n = den_.empty() ? ctx.one() : den_;
    Poly d = num_;
    const Coeff lc_inv = ctx.coeff_inv(d.begin()->second);
    n = ctx.scale(n, lc_inv);
    d = ctx.scale(d, lc_inv);
    if (ctx.is_one(d)) {
        d.clear();
    }
    return Scalar(field_, std::move(n), std::move(d));
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    return *this *= rhs.inverse();
}

Scalar Scalar::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    if (!field_) {
        if (exponent == 0) {
            throw InvalidArgument("0^0 of an unbound scalar");
        }
        return *this;
    }
    Scalar result = integer(field_, 1);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    return same_field(a.field_, b.field_) && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string n = detail::poly_to_string(*field_, num_);
    if (den_.empty()) {
        return n;
    }
    return "(" + n + ")/(" + detail::poly_to_string(*field_, den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

std::optional<int> root_of_unity_order(const Scalar& a)
{
    if (a.is_zero() || !a.is_constant()) {
        return std::nullopt;
    }
    const int c = a.field()->conductor();
    const int l = std::lcm(2, c);
    for (int d = 1; d <= l; ++d) {
        if (l % d == 0 && a.pow(d).is_one()) {
            return d;
        }
    }
    return std::nullopt;
}

} // namespace ambiskew
