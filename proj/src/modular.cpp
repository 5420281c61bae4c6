#include "modular.hpp"

#include <random>

#include "ambiskew/errors.hpp"

namespace ambiskew::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n)
{
    if (n < 2) {
        return false;
    }
    for (u64 s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % s == 0) {
            return n == s;
        }
    }
    u64 d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < r && composite; ++i) {
            x = mulmod(x, x, n);
            composite = x != n - 1;
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

std::vector<u64> prime_factors(u64 n)
{
    std::vector<u64> f;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        f.push_back(n);
    }
    return f;
}

} // namespace

ModularImage::ModularImage(const Field& field)
{
    const u64 c = static_cast<u64>(field->conductor());
    u64 k = ((u64{1} << 61) - 1) / c;
    while (!is_prime(k * c + 1)) {
        --k;
    }
    p_ = k * c + 1;
    std::mt19937_64 rng(0x5eed + c);
    const auto factors = prime_factors(c);
    while (c > 1 && root_ == 0) {
        const u64 w = powmod(2 + rng() % (p_ - 3), (p_ - 1) / c, p_);
        bool primitive = w != 1;
        for (u64 f : factors) {
            primitive = primitive && powmod(w, c / f, p_) != 1;
        }
        if (primitive) {
            root_ = w;
        }
    }
    for (std::size_t i = 0; i < field->variable_count(); ++i) {
        vars_.push_back(2 + rng() % (p_ - 3));
    }
}

u64 ModularImage::add(u64 a, u64 b) const
{
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
}

u64 ModularImage::mul(u64 a, u64 b) const
{
    return mulmod(a, b, p_);
}

u64 ModularImage::inv(u64 a) const
{
    if (a == 0) {
        throw DivisionByZero();
    }
    return powmod(a, p_ - 2, p_);
}

u64 ModularImage::pow(u64 a, long e) const
{
    if (e < 0) {
        return powmod(inv(a), static_cast<u64>(-e), p_);
    }
    return powmod(a, static_cast<u64>(e), p_);
}

std::optional<u64> ModularImage::operator()(const mpq_class& q) const
{
    const mpz_class m(std::to_string(p_));
    const mpz_class num = ((q.get_num() % m) + m) % m;
    const mpz_class den = q.get_den() % m;
    if (den == 0) {
        return std::nullopt;
    }
    return mul(std::stoull(num.get_str()), inv(std::stoull(den.get_str())));
}

std::optional<u64> ModularImage::poly(const Poly& p) const
{
    u64 total = 0;
    for (const auto& [e, c] : p) {
        u64 coeff = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) {
                continue;
            }
            auto v = (*this)(c[i]);
            if (!v) {
                return std::nullopt;
            }
            coeff = add(coeff, mul(*v, i == 0 ? 1 : powmod(root_, i, p_)));
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            coeff = mul(coeff, powmod(vars_[i], static_cast<u64>(e[i]), p_));
        }
        total = add(total, coeff);
    }
    return total;
}

std::optional<u64> ModularImage::operator()(const Scalar& s) const
{
    auto n = poly(s.numerator());
    if (!n) {
        return std::nullopt;
    }
    if (s.denominator().empty()) {
        return n;
    }
    auto d = poly(s.denominator());
    if (!d || *d == 0) {
        return std::nullopt;
    }
    return mul(*n, inv(*d));
}

std::optional<u64> ModularImage::evaluate(const RingElement& a, const std::vector<u64>& coords) const
{
    u64 total = 0;
    for (const auto& [mono, c] : a.terms()) {
        auto v = (*this)(c);
        if (!v) {
            return std::nullopt;
        }
        u64 t = *v;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) {
                continue;
            }
            if (mono[i] < 0 && coords[i] == 0) {
                return std::nullopt;
            }
            t = mul(t, pow(coords[i], mono[i]));
        }
        total = add(total, t);
    }
    return total;
}

} // namespace ambiskew::detail
