#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ambiskew/spec.hpp"

namespace ambiskew {

/// Element of A in the basis X-^i a X+^j, a in R.
class AlgebraElement {
public:
    using Key = std::pair<int, int>; // (i, j)
    using Terms = std::map<Key, RingElement>;

    AlgebraElement() = default;
    explicit AlgebraElement(Algebra algebra);

    static AlgebraElement one(Algebra algebra);
    static AlgebraElement xplus(Algebra algebra);
    static AlgebraElement xminus(Algebra algebra);
    static AlgebraElement from_ring(Algebra algebra, const RingElement& a);
    static AlgebraElement term(Algebra algebra, int i, const RingElement& a, int j);

    const Algebra& algebra() const noexcept { return algebra_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(int i, int j, const RingElement& a);

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const Scalar& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
    friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

    AlgebraElement pow(int n) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    std::string to_string() const;

private:
    Algebra algebra_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x);

struct Token {
    enum class Kind { xplus, xminus, ring } kind;
    RingElement value; // only for Kind::ring

    static Token plus() { return {Kind::xplus, {}}; }
    static Token minus() { return {Kind::xminus, {}}; }
    static Token of(RingElement a) { return {Kind::ring, std::move(a)}; }
};

AlgebraElement normalize(const Algebra& algebra, const std::vector<Token>& word);

// j - i when every term shares it.
std::optional<int> z_degree(const AlgebraElement& x);

// c t + a with t = X- X+.
struct GWAElement {
    Scalar c;
    RingElement a;

    friend bool operator==(const GWAElement&, const GWAElement&) = default;
};

GWAElement sigma_power_t(const AlgebraSpec& a, long j);
GWAElement sigma_gwa(const AlgebraSpec& a, const GWAElement& x, long n);
AlgebraElement gwa_to_algebra(const Algebra& algebra, const GWAElement& x);

} // namespace ambiskew
