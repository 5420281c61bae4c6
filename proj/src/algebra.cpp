#include "ambiskew/algebra.hpp"

#include <ostream>

#include "ambiskew/errors.hpp"

namespace ambiskew {

namespace {

// Left multiplication by X+, a and X- on normal-form elements. The s_p of
// X+ X-^p = xi^p X-^p X+ + X-^(p-1) s_p are cached across calls.
class LeftMultiplier {
public:
    explicit LeftMultiplier(const Algebra& a) : alg_(a) { s_.emplace_back(a->ring()); }

    AlgebraElement xplus(const AlgebraElement& y)
    {
        AlgebraElement out(alg_);
        for (const auto& [key, c] : y.terms()) {
            const auto [p, q] = key;
            const RingElement sc = apply_sigma(c, 1);
            out.add_term(p, q + 1, sc * alg_->xi().pow(p));
            if (p > 0) {
                out.add_term(p - 1, q, s(p) * c);
            }
        }
        return out;
    }

    AlgebraElement ring(const RingElement& a, const AlgebraElement& y)
    {
        AlgebraElement out(alg_);
        std::map<int, RingElement> shifted;
        for (const auto& [key, c] : y.terms()) {
            auto it = shifted.find(key.first);
            if (it == shifted.end()) {
                it = shifted.emplace(key.first, apply_sigma(a, key.first)).first;
            }
            out.add_term(key.first, key.second, it->second * c);
        }
        return out;
    }

    AlgebraElement xminus(const AlgebraElement& y)
    {
        AlgebraElement out(alg_);
        for (const auto& [key, c] : y.terms()) {
            out.add_term(key.first + 1, key.second, c);
        }
        return out;
    }

private:
    const RingElement& s(int p)
    {
        while (static_cast<int>(s_.size()) <= p) {
            const int k = static_cast<int>(s_.size()) - 1;
            s_.push_back(apply_sigma(s_.back(), 1) + alg_->h() * alg_->xi().pow(k));
        }
        return s_[static_cast<std::size_t>(p)];
    }

    Algebra alg_;
    std::vector<RingElement> s_;
};

const Algebra& common(const AlgebraElement& a, const AlgebraElement& b)
{
    if (!a.algebra()) {
        return b.algebra();
    }
    if (b.algebra() && a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra())) {
        throw InvalidArgument("algebra elements belong to different algebras");
    }
    return a.algebra();
}

} // namespace

AlgebraElement::AlgebraElement(Algebra algebra) : algebra_(std::move(algebra)) {}

AlgebraElement AlgebraElement::one(Algebra algebra)
{
    RingElement a = algebra->one();
    return term(std::move(algebra), 0, a, 0);
}

AlgebraElement AlgebraElement::xplus(Algebra algebra)
{
    RingElement a = algebra->one();
    return term(std::move(algebra), 0, a, 1);
}

AlgebraElement AlgebraElement::xminus(Algebra algebra)
{
    RingElement a = algebra->one();
    return term(std::move(algebra), 1, a, 0);
}

AlgebraElement AlgebraElement::from_ring(Algebra algebra, const RingElement& a)
{
    return term(std::move(algebra), 0, a, 0);
}

AlgebraElement AlgebraElement::term(Algebra algebra, int i, const RingElement& a, int j)
{
    AlgebraElement x(std::move(algebra));
    x.add_term(i, j, a);
    return x;
}

void AlgebraElement::add_term(int i, int j, const RingElement& a)
{
    if (a.is_zero()) {
        return;
    }
    if (i < 0 || j < 0) {
        throw InvalidArgument("negative power of X+ or X-");
    }
    auto [it, inserted] = terms_.try_emplace(Key{i, j}, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement r = *this;
    for (auto& [k, a] : r.terms_) {
        a = -a;
    }
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs)
{
    algebra_ = common(*this, rhs);
    for (const auto& [k, a] : rhs.terms_) {
        add_term(k.first, k.second, a);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs)
{
    return *this += -rhs;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, a] : terms_) {
        a *= c;
    }
    return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y)
{
    const Algebra alg = common(x, y);
    if (!alg) {
        return {};
    }
    LeftMultiplier lm(alg);
    AlgebraElement out(alg);
    for (const auto& [key, a] : x.terms()) {
        AlgebraElement t = y;
        for (int k = 0; k < key.second; ++k) {
            t = lm.xplus(t);
        }
        t = lm.ring(a, t);
        for (int k = 0; k < key.first; ++k) {
            t = lm.xminus(t);
        }
        out += t;
    }
    return out;
}

AlgebraElement AlgebraElement::pow(int n) const
{
    if (n < 0) {
        throw InvalidArgument("negative power in the algebra");
    }
    AlgebraElement r = one(algebra_);
    for (int k = 0; k < n; ++k) {
        r = r * *this;
    }
    return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    return a.terms_ == b.terms_;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [key, a] : terms_) {
        std::vector<std::string> factors;
        if (key.first > 0) {
            factors.push_back(key.first == 1 ? "X-" : "X-^" + std::to_string(key.first));
        }
        std::string mid = a.to_string();
        bool negative = false;
        if (key.first + key.second > 0) {
            if (a.terms().size() == 1 && mid[0] == '-' && mid.find(' ') == std::string::npos) {
                negative = true;
                mid = mid.substr(1);
            }
            if (mid != "1") {
                factors.push_back(a.terms().size() > 1 || mid.find(' ') != std::string::npos ? "(" + mid + ")" : mid);
            }
        } else {
            factors.push_back(mid);
        }
        if (key.second > 0) {
            factors.push_back(key.second == 1 ? "X+" : "X+^" + std::to_string(key.second));
        }
        std::string t;
        for (const auto& f : factors) {
            t += (t.empty() ? "" : "*") + f;
        }
        if (negative) {
            t = "-" + t;
        }
        if (first) {
            out = t;
            first = false;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x)
{
    return os << x.to_string();
}

AlgebraElement normalize(const Algebra& algebra, const std::vector<Token>& word)
{
    LeftMultiplier lm(algebra);
    AlgebraElement x = AlgebraElement::one(algebra);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
        case Token::Kind::xplus:
            x = lm.xplus(x);
            break;
        case Token::Kind::xminus:
            x = lm.xminus(x);
            break;
        case Token::Kind::ring:
            x = lm.ring(it->value, x);
            break;
        }
    }
    return x;
}

std::optional<int> z_degree(const AlgebraElement& x)
{
    std::optional<int> d;
    for (const auto& [key, a] : x.terms()) {
        const int e = key.second - key.first;
        if (d && *d != e) {
            return std::nullopt;
        }
        d = e;
    }
    return d.value_or(0);
}

GWAElement sigma_gwa(const AlgebraSpec& a, const GWAElement& x, long n)
{
    GWAElement y = x;
    const RingElement h_inv = apply_sigma(a.h(), -1);
    const Scalar xi_inv = a.xi().inverse();
    for (long k = 0; k < n; ++k) {
        // sigma(c t + b) = c xi t + (c h + sigma(b))
        y = GWAElement{y.c * a.xi(), y.c * a.h() + apply_sigma(y.a, 1)};
    }
    for (long k = 0; k > n; --k) {
        // sigma^-1(t) = xi^-1 (t - sigma^-1(h))
        y = GWAElement{y.c * xi_inv, -(y.c * xi_inv) * h_inv + apply_sigma(y.a, -1)};
    }
    return y;
}

GWAElement sigma_power_t(const AlgebraSpec& a, long j)
{
    return sigma_gwa(a, GWAElement{a.scalar(1), RingElement(a.ring())}, j);
}

AlgebraElement gwa_to_algebra(const Algebra& algebra, const GWAElement& x)
{
    AlgebraElement r(algebra);
    r.add_term(1, 1, RingElement::constant(algebra->ring(), x.c));
    r.add_term(0, 0, x.a);
    return r;
}

} // namespace ambiskew
