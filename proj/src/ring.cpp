#include "ambiskew/ring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

#include "ambiskew/errors.hpp"

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

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool needs_parens(const Scalar& c)
{
    return c.denominator().empty() && c.to_string().find_first_of("+-", 1) != std::string::npos;
}

std::string term_string(const Scalar& c, const std::string& mono)
{
    if (mono.empty()) {
        return c.to_string();
    }
    if (c.is_one()) {
        return mono;
    }
    if ((-c).is_one()) {
        return "-" + mono;
    }
    if (needs_parens(c)) {
        return "(" + c.to_string() + ")*" + mono;
    }
    return c.to_string() + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i][0] == '-') {
            out += " - " + terms[i].substr(1);
        } else {
            out += " + " + terms[i];
        }
    }
    return out;
}

std::string monomial_string(const RingSpec& ring, const RingElement::Monomial& m, std::size_t lo, std::size_t n)
{
    std::string s;
    for (std::size_t i = lo; i < lo + n; ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += ring.generator(i).name;
        if (m[i] != 1) {
            s += "^" + std::to_string(m[i]);
        }
    }
    return s;
}

// (x + s)^e with x = generator `gen`, s scalar.
RingElement binomial_power(const Ring& ring, std::size_t gen, const Scalar& s, int e)
{
    RingElement out(ring);
    Scalar sp = Scalar::integer(ring->field(), 1);
    std::vector<Scalar> spow{sp};
    for (int k = 1; k <= e; ++k) {
        spow.push_back(spow.back() * s);
    }
    for (int k = 0; k <= e; ++k) {
        Scalar coef = Scalar::rational(ring->field(), mpq_class(binomial(e, k))) * spow[e - k];
        if (coef.is_zero()) {
            continue;
        }
        RingElement::Monomial m(ring->size(), 0);
        m[gen] = k;
        out.add_term(m, coef);
    }
    return out;
}

// sigma^n on generators lo .. lo+count-1 of a's ring.
RingElement sigma_range(const RingElement& a, long n, std::size_t lo, std::size_t count)
{
    if (n == 0 || a.is_zero()) {
        return a;
    }
    const Ring& ring = a.ring();
    const Field& f = ring->field();
    std::vector<Scalar> shift(ring->size());
    std::vector<Scalar> mult(ring->size());
    for (std::size_t i = lo; i < lo + count; ++i) {
        const auto& g = ring->generator(i);
        if (g.kind == GeneratorKind::additive) {
            shift[i] = Scalar::integer(f, n) * g.sigma_action;
        } else {
            mult[i] = g.sigma_action.pow(n);
        }
    }
    std::map<std::pair<std::size_t, int>, RingElement> cache;
    RingElement out(ring);
    for (const auto& [m, c] : a.terms()) {
        Scalar coef = c;
        RingElement::Monomial base = m;
        std::vector<std::size_t> additive;
        for (std::size_t i = lo; i < lo + count; ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (ring->generator(i).kind == GeneratorKind::multiplicative) {
                coef *= mult[i].pow(m[i]);
            } else if (!shift[i].is_zero()) {
                additive.push_back(i);
                base[i] = 0;
            }
        }
        RingElement t = RingElement::monomial(ring, base, coef);
        for (std::size_t i : additive) {
            auto key = std::make_pair(i, m[i]);
            auto it = cache.find(key);
            if (it == cache.end()) {
                it = cache.emplace(key, binomial_power(ring, i, shift[i], m[i])).first;
            }
            t *= it->second;
        }
        out += t;
    }
    return out;
}

} // namespace

Ring RingSpec::make(Field field, std::vector<GeneratorInfo> generators)
{
    if (!field) {
        throw InvalidArgument("ring requires a field");
    }
    std::set<std::string> seen;
    for (auto& g : generators) {
        if (!is_identifier(g.name)) {
            throw InvalidArgument("generator name '" + g.name + "' is not an identifier");
        }
        if (!seen.insert(g.name).second) {
            throw InvalidArgument("duplicate generator name '" + g.name + "'");
        }
        if (field->find(g.name)) {
            throw InvalidArgument("generator name '" + g.name + "' clashes with a parameter");
        }
        if (g.sigma_action.field() && !same_field(g.sigma_action.field(), field)) {
            throw InvalidArgument("sigma action of '" + g.name + "' is over a different field");
        }
        g.sigma_action = g.sigma_action + Scalar(field);
        if (g.kind == GeneratorKind::multiplicative && g.sigma_action.is_zero()) {
            throw InvalidArgument("sigma multiplier of '" + g.name + "' must be nonzero");
        }
    }
    std::shared_ptr<RingSpec> sq(new RingSpec());
    sq->field_ = field;
    sq->generators_ = generators;
    sq->generators_.insert(sq->generators_.end(), generators.begin(), generators.end());
    sq->half_ = generators.size();

    std::shared_ptr<RingSpec> r(new RingSpec());
    r->field_ = std::move(field);
    r->generators_ = std::move(generators);
    r->square_ = std::move(sq);
    return r;
}

std::optional<std::size_t> RingSpec::find(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

bool RingSpec::operator==(const RingSpec& other) const
{
    if (!same_field(field_, other.field_) || half_ != other.half_ || generators_.size() != other.generators_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& a = generators_[i];
        const auto& b = other.generators_[i];
        if (a.name != b.name || a.kind != b.kind || !(a.sigma_action == b.sigma_action)) {
            return false;
        }
    }
    return true;
}

bool same_ring(const Ring& a, const Ring& b)
{
    if (a == b) {
        return true;
    }
    return a && b && *a == *b;
}

// ---------------------------------------------------------------------------

RingElement::RingElement(Ring ring) : ring_(std::move(ring)) {}

RingElement RingElement::constant(Ring ring, const Scalar& c)
{
    RingElement r(ring);
    r.add_term(Monomial(ring->size(), 0), c);
    return r;
}

RingElement RingElement::integer(Ring ring, long c)
{
    const Field f = ring->field();
    return constant(std::move(ring), Scalar::integer(f, c));
}

RingElement RingElement::generator(Ring ring, std::size_t index)
{
    if (index >= ring->size()) {
        throw InvalidArgument("generator index out of range");
    }
    Monomial m(ring->size(), 0);
    m[index] = 1;
    const Field f = ring->field();
    return monomial(std::move(ring), std::move(m), Scalar::integer(f, 1));
}

RingElement RingElement::generator(Ring ring, std::string_view name)
{
    auto idx = ring->find(name);
    if (!idx) {
        throw InvalidArgument("unknown generator '" + std::string(name) + "'");
    }
    return generator(std::move(ring), *idx);
}

RingElement RingElement::monomial(Ring ring, Monomial exps, const Scalar& c)
{
    if (exps.size() != ring->size()) {
        throw InvalidArgument("monomial has the wrong number of exponents");
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 && ring->generator(i).kind == GeneratorKind::additive) {
            throw MathRefusal("additive generator '" + ring->generator(i).name + "' is not invertible");
        }
    }
    RingElement r(std::move(ring));
    r.add_term(exps, c);
    return r;
}

void RingElement::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

bool RingElement::is_constant() const
{
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() != 1) {
        return false;
    }
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

std::optional<Scalar> RingElement::as_scalar() const
{
    if (!is_constant()) {
        return std::nullopt;
    }
    if (terms_.empty()) {
        return ring_ ? Scalar(ring_->field()) : Scalar();
    }
    return terms_.begin()->second;
}

const Ring& RingElement::adopt(const RingElement& other)
{
    if (!ring_) {
        ring_ = other.ring_;
    } else if (other.ring_ && !same_ring(ring_, other.ring_)) {
        throw InvalidArgument("ring elements belong to different rings");
    }
    return ring_;
}

RingElement RingElement::operator-() const
{
    RingElement r = *this;
    for (auto& [m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

RingElement& RingElement::operator+=(const RingElement& rhs)
{
    adopt(rhs);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs)
{
    adopt(rhs);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs)
{
    adopt(rhs);
    Terms out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] += mb[i];
            }
            Scalar c = ca * cb;
            auto [it, inserted] = out.try_emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    out.erase(it);
                }
            }
        }
    }
    terms_ = std::move(out);
    return *this;
}

RingElement& RingElement::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) {
        x *= c;
    }
    return *this;
}

bool RingElement::is_invertible() const
{
    if (terms_.size() != 1) {
        return false;
    }
    const auto& m = terms_.begin()->first;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0 && ring_->generator(i).kind == GeneratorKind::additive) {
            return false;
        }
    }
    return true;
}

RingElement RingElement::inverse() const
{
    if (!is_invertible()) {
        throw MathRefusal("element " + to_string() + " is not invertible in the ring");
    }
    const auto& [m, c] = *terms_.begin();
    Monomial inv = m;
    for (auto& x : inv) {
        x = -x;
    }
    RingElement r(ring_);
    r.add_term(inv, c.inverse());
    return r;
}

RingElement RingElement::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    if (!ring_) {
        throw InvalidArgument("power of an unbound ring element");
    }
    RingElement result = integer(ring_, 1);
    RingElement base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

bool operator==(const RingElement& a, const RingElement& b)
{
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string RingElement::to_string() const
{
    std::vector<std::string> parts;
    for (const auto& [m, c] : terms_) {
        parts.push_back(term_string(c, monomial_string(*ring_, m, 0, m.size())));
    }
    return join_terms(parts);
}

std::ostream& operator<<(std::ostream& os, const RingElement& a)
{
    return os << a.to_string();
}

std::string tensor_to_string(const RingElement& t)
{
    const RingSpec& ring = *t.ring();
    const std::size_t n = ring.half();
    std::vector<std::string> parts;
    for (const auto& [m, c] : t.terms()) {
        std::string l = monomial_string(ring, m, 0, n);
        std::string r = monomial_string(ring, m, n, n);
        std::string body = (l.empty() ? "1" : l) + " ⊗ " + (r.empty() ? "1" : r);
        if (c.is_one()) {
            parts.push_back(body);
        } else if ((-c).is_one()) {
            parts.push_back("-" + body);
        } else if (needs_parens(c)) {
            parts.push_back("(" + c.to_string() + ")*(" + body + ")");
        } else {
            parts.push_back(c.to_string() + "*(" + body + ")");
        }
    }
    return join_terms(parts);
}

// ---------------------------------------------------------------------------

RingElement apply_sigma(const RingElement& a, long n)
{
    if (a.is_zero()) {
        return a;
    }
    return sigma_range(a, n, 0, a.ring()->size());
}

RingElement apply_sigma_tensor(const RingElement& t, long n, int side)
{
    if (t.is_zero()) {
        return t;
    }
    const std::size_t h = t.ring()->half();
    return sigma_range(t, n, side == 0 ? 0 : h, h);
}

RingElement coproduct(const RingElement& a)
{
    const Ring& ring = a.ring();
    const Ring& sq = ring->square();
    const std::size_t n = ring->size();
    RingElement out(sq);
    for (const auto& [m, c] : a.terms()) {
        RingElement::Monomial grouplike(2 * n, 0);
        std::vector<std::size_t> additive;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (ring->generator(i).kind == GeneratorKind::multiplicative) {
                grouplike[i] = m[i];
                grouplike[n + i] = m[i];
            } else {
                additive.push_back(i);
            }
        }
        RingElement t = RingElement::monomial(sq, grouplike, c);
        for (std::size_t i : additive) {
            RingElement p(sq);
            for (int k = 0; k <= m[i]; ++k) {
                RingElement::Monomial e(2 * n, 0);
                e[i] = k;
                e[n + i] = m[i] - k;
                p.add_term(e, Scalar::rational(ring->field(), mpq_class(binomial(m[i], k))));
            }
            t *= p;
        }
        out += t;
    }
    return out;
}

Scalar counit(const RingElement& a)
{
    Scalar s(a.ring() ? a.ring()->field() : Field{});
    for (const auto& [m, c] : a.terms()) {
        bool vanishes = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0 && a.ring()->generator(i).kind == GeneratorKind::additive) {
                vanishes = true;
                break;
            }
        }
        if (!vanishes) {
            s += c;
        }
    }
    return s;
}

RingElement antipode(const RingElement& a)
{
    RingElement out(a.ring());
    for (const auto& [m, c] : a.terms()) {
        RingElement::Monomial e = m;
        bool negate = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (a.ring()->generator(i).kind == GeneratorKind::multiplicative) {
                e[i] = -m[i];
            } else if (m[i] % 2 != 0) {
                negate = !negate;
            }
        }
        out.add_term(e, negate ? -c : c);
    }
    return out;
}

Scalar evaluate(const RingElement& a, const std::vector<Scalar>& coords)
{
    if (a.is_zero()) {
        return a.ring() ? Scalar(a.ring()->field()) : Scalar();
    }
    if (coords.size() != a.ring()->size()) {
        throw InvalidArgument("weight has the wrong number of coordinates");
    }
    std::map<std::pair<std::size_t, int>, Scalar> powers;
    auto power = [&](std::size_t i, int e) -> const Scalar& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end()) {
            it = powers.emplace(key, coords[i].field() ? coords[i].pow(e)
                                                       : (e == 0 ? Scalar::integer(a.ring()->field(), 1)
                                                                 : Scalar(a.ring()->field())))
                     .first;
        }
        return it->second;
    };
    Scalar s(a.ring()->field());
    for (const auto& [m, c] : a.terms()) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
            if (m[i] != 0) {
                t *= power(i, m[i]);
            }
        }
        s += t;
    }
    return s;
}

RingElement tensor_embed(const RingElement& a, int side)
{
    const Ring& sq = a.ring()->square();
    const std::size_t n = a.ring()->size();
    RingElement out(sq);
    for (const auto& [m, c] : a.terms()) {
        RingElement::Monomial e(2 * n, 0);
        std::copy(m.begin(), m.end(), e.begin() + (side == 0 ? 0 : static_cast<long>(n)));
        out.add_term(e, c);
    }
    return out;
}

RingElement tensor(const RingElement& left, const RingElement& right)
{
    return tensor_embed(left, 0) * tensor_embed(right, 1);
}

RingElement counit_side(const RingElement& t, int side)
{
    // Result stays in R (x) R with the surviving factor on its own side;
    // callers compare against tensor_embed.
    const RingSpec& ring = *t.ring();
    const std::size_t n = ring.half();
    const std::size_t lo = side == 0 ? 0 : n;
    RingElement out(t.ring());
    for (const auto& [m, c] : t.terms()) {
        bool vanishes = false;
        RingElement::Monomial e = m;
        for (std::size_t i = lo; i < lo + n; ++i) {
            if (m[i] != 0 && ring.generator(i).kind == GeneratorKind::additive) {
                vanishes = true;
                break;
            }
            e[i] = 0;
        }
        if (!vanishes) {
            out.add_term(e, c);
        }
    }
    return out;
}

Scalar evaluate_tensor(const RingElement& t, const std::vector<Scalar>& left, const std::vector<Scalar>& right)
{
    std::vector<Scalar> coords = left;
    coords.insert(coords.end(), right.begin(), right.end());
    return evaluate(t, coords);
}

std::optional<Scalar> sigma_multiplier(const RingElement& a, long n)
{
    if (!a.is_invertible()) {
        return std::nullopt;
    }
    const auto& m = a.terms().begin()->first;
    Scalar lambda = Scalar::integer(a.ring()->field(), 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) {
            lambda *= a.ring()->generator(i).sigma_action.pow(n * m[i]);
        }
    }
    return lambda;
}

bool is_grouplike_monomial(const RingElement& a)
{
    return a.is_invertible() && a.terms().begin()->second.is_one();
}

} // namespace ambiskew
