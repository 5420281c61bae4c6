#include "poly_internal.hpp"

#include <algorithm>

#include "ambiskew/errors.hpp"

namespace ambiskew::detail {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

QPoly qsub(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
    }
    trim(r);
    return r;
}

QPoly qmul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// a = q b + r
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r)
{
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= c * b[i];
        }
        a.pop_back();
        trim(a);
    }
    trim(q);
    r = std::move(a);
}

int degree_in(const Poly& p, std::size_t var)
{
    int d = -1;
    for (const auto& [e, c] : p) {
        d = std::max(d, e[var]);
    }
    return d;
}

bool involves_only(const Poly& p, std::size_t var)
{
    for (const auto& [e, c] : p) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != var && e[i] != 0) {
                return false;
            }
        }
    }
    return true;
}

Poly coeff_at(const Poly& p, std::size_t var, int d)
{
    Poly r;
    for (const auto& [e, c] : p) {
        if (e[var] == d) {
            Exponents f = e;
            f[var] = 0;
            r.emplace(std::move(f), c);
        }
    }
    return r;
}

} // namespace

bool coeff_is_zero(const Coeff& c)
{
    return std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x == 0; });
}

bool coeff_is_one(const Coeff& c)
{
    if (c.empty() || c[0] != 1) {
        return false;
    }
    return std::all_of(c.begin() + 1, c.end(), [](const mpq_class& x) { return x == 0; });
}

Coeff PolyContext::one_coeff() const
{
    Coeff c(deg);
    c[0] = 1;
    return c;
}

Coeff PolyContext::coeff_mul(const Coeff& a, const Coeff& b) const
{
    if (deg == 1) {
        return Coeff{a[0] * b[0]};
    }
    std::vector<mpq_class> r(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < deg; ++j) {
            if (b[j] != 0) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    const auto& m = *modulus;
    for (std::size_t k = r.size(); k-- > deg;) {
        if (r[k] == 0) {
            continue;
        }
        const mpq_class c = r[k];
        for (std::size_t i = 0; i <= deg; ++i) {
            r[k - deg + i] -= c * m[i];
        }
    }
    r.resize(deg);
    return r;
}

Coeff PolyContext::coeff_inv(const Coeff& a) const
{
    if (deg == 1) {
        if (a[0] == 0) {
            throw DivisionByZero();
        }
        return Coeff{1 / a[0]};
    }
    QPoly r0(modulus->begin(), modulus->end());
    QPoly r1(a.begin(), a.end());
    trim(r1);
    if (r1.empty()) {
        throw DivisionByZero();
    }
    QPoly s0;
    QPoly s1{mpq_class(1)};
    while (r1.size() > 1) {
        QPoly q;
        QPoly r;
        qdivmod(r0, r1, q, r);
        if (r.empty()) {
            throw InternalError("cyclotomic modulus is not irreducible");
        }
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const mpq_class inv = 1 / r1[0];
    QPoly q;
    QPoly rem;
    qdivmod(s1, QPoly(modulus->begin(), modulus->end()), q, rem);
    Coeff out(deg);
    for (std::size_t i = 0; i < rem.size(); ++i) {
        out[i] = rem[i] * inv;
    }
    return out;
}

Poly PolyContext::constant(const Coeff& c) const
{
    Poly p;
    if (!coeff_is_zero(c)) {
        p.emplace(Exponents(nvars, 0), c);
    }
    return p;
}

bool PolyContext::is_constant(const Poly& p) const
{
    if (p.empty()) {
        return true;
    }
    if (p.size() != 1) {
        return false;
    }
    const auto& e = p.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool PolyContext::is_one(const Poly& p) const
{
    return p.size() == 1 && is_constant(p) && coeff_is_one(p.begin()->second);
}

void PolyContext::add_term(Poly& p, const Exponents& e, const Coeff& c) const
{
    auto [it, inserted] = p.try_emplace(e, c);
    if (inserted) {
        if (coeff_is_zero(c)) {
            p.erase(it);
        }
        return;
    }
    for (std::size_t i = 0; i < deg; ++i) {
        it->second[i] += c[i];
    }
    if (coeff_is_zero(it->second)) {
        p.erase(it);
    }
}

void PolyContext::subtract_multiple(Poly& r, const Poly& b, const Exponents& e, const Coeff& c) const
{
    Exponents f(nvars);
    for (const auto& [eb, cb] : b) {
        for (std::size_t i = 0; i < nvars; ++i) {
            f[i] = eb[i] + e[i];
        }
        Coeff t = coeff_mul(cb, c);
        for (auto& x : t) {
            x = -x;
        }
        add_term(r, f, t);
    }
}

void PolyContext::add_into(Poly& p, const Poly& q) const
{
    for (const auto& [e, c] : q) {
        add_term(p, e, c);
    }
}

Poly PolyContext::sub(const Poly& a, const Poly& b) const
{
    Poly r = a;
    for (const auto& [e, c] : b) {
        Coeff n = c;
        for (auto& x : n) {
            x = -x;
        }
        add_term(r, e, n);
    }
    return r;
}

Poly PolyContext::mul_term(const Poly& a, const Exponents& e, const Coeff& c) const
{
    Poly r;
    for (const auto& [f, d] : a) {
        Exponents g = f;
        for (std::size_t i = 0; i < nvars; ++i) {
            g[i] += e[i];
        }
        Coeff k = coeff_mul(c, d);
        if (!coeff_is_zero(k)) {
            r.emplace(std::move(g), std::move(k));
        }
    }
    return r;
}

Poly PolyContext::mul(const Poly& a, const Poly& b) const
{
    if (a.size() > b.size()) {
        return mul(b, a);
    }
    Poly r;
    for (const auto& [e, c] : a) {
        add_into(r, mul_term(b, e, c));
    }
    return r;
}

Poly PolyContext::scale(const Poly& a, const Coeff& c) const
{
    return mul_term(a, Exponents(nvars, 0), c);
}

Poly PolyContext::monic(const Poly& a) const
{
    if (a.empty() || coeff_is_one(a.begin()->second)) {
        return a;
    }
    return scale(a, coeff_inv(a.begin()->second));
}

Poly PolyContext::div_exact(const Poly& a, const Poly& b) const
{
    if (b.empty()) {
        throw DivisionByZero();
    }
    const auto& [eb, cb] = *b.begin();
    const Coeff inv = coeff_inv(cb);
    Poly q;
    Poly r = a;
    while (!r.empty()) {
        const auto& [er, cr] = *r.begin();
        Exponents e(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0) {
                throw InternalError("inexact polynomial division");
            }
        }
        Coeff c = coeff_mul(cr, inv);
        add_term(q, e, c);
        subtract_multiple(r, b, e, c);
    }
    return q;
}

Poly PolyContext::content_in(const Poly& a, std::size_t var) const
{
    std::map<int, Poly> parts;
    for (const auto& [e, c] : a) {
        Exponents f = e;
        f[var] = 0;
        parts[e[var]].emplace(std::move(f), c);
    }
    Poly g;
    for (const auto& [d, p] : parts) {
        g = gcd_rec(g, p, var + 1);
        if (is_constant(g)) {
            return one();
        }
    }
    return g;
}

Poly PolyContext::pseudo_rem(const Poly& a, const Poly& b, std::size_t var) const
{
    const int db = degree_in(b, var);
    const Poly lb = coeff_at(b, var, db);
    Poly r = a;
    int dr = degree_in(r, var);
    if (is_one(lb)) {
        // Monic divisor: ordinary division, updating r in place.
        while (!r.empty() && dr >= db) {
            for (const auto& [e, c] : coeff_at(r, var, dr)) {
                Exponents f = e;
                f[var] += dr - db;
                subtract_multiple(r, b, f, c);
            }
            const int nd = degree_in(r, var);
            if (nd >= dr) {
                throw InternalError("pseudo-remainder failed to reduce degree");
            }
            dr = nd;
        }
        return r;
    }
    while (!r.empty() && dr >= db) {
        Poly lr = coeff_at(r, var, dr);
        Poly shifted = lr;
        {
            Poly s;
            for (const auto& [e, c] : lr) {
                Exponents f = e;
                f[var] += dr - db;
                s.emplace(std::move(f), c);
            }
            shifted = std::move(s);
        }
        r = sub(mul(lb, r), mul(shifted, b));
        const int nd = degree_in(r, var);
        if (nd >= dr) {
            throw InternalError("pseudo-remainder failed to reduce degree");
        }
        dr = nd;
    }
    return r;
}

Poly PolyContext::gcd_rec(const Poly& a, const Poly& b, std::size_t var) const
{
    if (a.empty()) {
        return b;
    }
    if (b.empty()) {
        return a;
    }
    if (var >= nvars) {
        return one();
    }
    const int da = degree_in(a, var);
    const int db = degree_in(b, var);
    if (da == 0 && db == 0) {
        return gcd_rec(a, b, var + 1);
    }
    if (da == 0) {
        return gcd_rec(a, content_in(b, var), var + 1);
    }
    if (db == 0) {
        return gcd_rec(content_in(a, var), b, var + 1);
    }
    const Poly ca = content_in(a, var);
    const Poly cb = content_in(b, var);
    const Poly c = gcd_rec(ca, cb, var + 1);
    Poly pa = monic(div_exact(a, ca));
    Poly pb = monic(div_exact(b, cb));
    if (da < db) {
        std::swap(pa, pb);
    }
    const bool univariate = involves_only(pa, var) && involves_only(pb, var);
    Poly g;
    while (true) {
        Poly r = pseudo_rem(pa, pb, var);
        if (r.empty()) {
            g = pb;
            break;
        }
        if (degree_in(r, var) == 0) {
            g = one();
            break;
        }
        pa = std::move(pb);
        pb = univariate ? monic(r) : monic(div_exact(r, content_in(r, var)));
    }
    if (!univariate && !is_constant(g)) {
        g = div_exact(g, content_in(g, var));
    }
    return mul(c, g);
}

Poly PolyContext::gcd(const Poly& a, const Poly& b) const
{
    if (a.empty()) {
        return monic(b);
    }
    if (b.empty()) {
        return monic(a);
    }
    if (nvars == 0) {
        return one();
    }
    Exponents m(nvars, 0);
    Exponents ma = a.begin()->first;
    for (const auto& [e, c] : a) {
        for (std::size_t i = 0; i < nvars; ++i) {
            ma[i] = std::min(ma[i], e[i]);
        }
    }
    Exponents mb = b.begin()->first;
    for (const auto& [e, c] : b) {
        for (std::size_t i = 0; i < nvars; ++i) {
            mb[i] = std::min(mb[i], e[i]);
        }
    }
    auto strip = [&](const Poly& p, const Exponents& s) {
        Poly r;
        for (const auto& [e, c] : p) {
            Exponents f = e;
            for (std::size_t i = 0; i < nvars; ++i) {
                f[i] -= s[i];
            }
            r.emplace(std::move(f), c);
        }
        return r;
    };
    for (std::size_t i = 0; i < nvars; ++i) {
        m[i] = std::min(ma[i], mb[i]);
    }
    Poly g = gcd_rec(strip(a, ma), strip(b, mb), 0);
    return monic(mul_term(g, m, one_coeff()));
}

std::string poly_to_string(const FieldSpec& f, const Poly& p)
{
    if (p.empty()) {
        return "0";
    }
    const auto& params = f.parameters();
    const auto root = f.root_parameter();
    std::vector<std::pair<std::vector<int>, mpq_class>> flat;
    for (const auto& [e, c] : p) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) {
                continue;
            }
            std::vector<int> x(params.size(), 0);
            for (std::size_t k = 0; k < params.size(); ++k) {
                if (root && *root == k) {
                    x[k] = static_cast<int>(i);
                } else {
                    x[k] = e[*f.variable_of(k)];
                }
            }
            flat.emplace_back(std::move(x), c[i]);
        }
    }
    std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string out;
    bool first = true;
    for (const auto& [x, c] : flat) {
        std::string mono;
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += params[k].name;
            if (x[k] != 1) {
                mono += "^" + std::to_string(x[k]);
            }
        }
        const bool negative = c < 0;
        const mpq_class mag = abs(c);
        std::string term;
        if (mono.empty()) {
            term = mag.get_str();
        } else if (mag == 1) {
            term = mono;
        } else {
            term = mag.get_str() + "*" + mono;
        }
        if (first) {
            out = negative ? "-" + term : term;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

} // namespace ambiskew::detail
