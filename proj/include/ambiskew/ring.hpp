#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ambiskew/scalar.hpp"

namespace ambiskew {

enum class GeneratorKind { additive, multiplicative };

// additive: sigma(g) = g + sigma_action, primitive.
// multiplicative: sigma(g) = sigma_action * g, grouplike and invertible.
struct GeneratorInfo {
    std::string name;
    GeneratorKind kind = GeneratorKind::additive;
    Scalar sigma_action;
};

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;

/// Mixed polynomial / Laurent polynomial ring over a Field.
class RingSpec {
public:
    static Ring make(Field field, std::vector<GeneratorInfo> generators);

    const Field& field() const noexcept { return field_; }
    const std::vector<GeneratorInfo>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    std::optional<std::size_t> find(std::string_view name) const;
    const GeneratorInfo& generator(std::size_t i) const { return generators_.at(i); }

    // R (x) R, realised as the ring on two copies of the generators.
    // Null for a ring that is itself a tensor square.
    const Ring& square() const noexcept { return square_; }
    bool is_square() const noexcept { return half_ != 0; }
    std::size_t half() const noexcept { return half_; }

    bool operator==(const RingSpec& other) const;

private:
    RingSpec() = default;

    Field field_;
    std::vector<GeneratorInfo> generators_;
    Ring square_;
    std::size_t half_ = 0;
};

bool same_ring(const Ring& a, const Ring& b);

/// Element of a RingSpec: sparse map from exponent vectors to scalars.
class RingElement {
public:
    using Monomial = std::vector<int>;
    using Terms = std::map<Monomial, Scalar, std::greater<>>;

    RingElement() = default;
    explicit RingElement(Ring ring);

    static RingElement constant(Ring ring, const Scalar& c);
    static RingElement integer(Ring ring, long c);
    static RingElement generator(Ring ring, std::size_t index);
    static RingElement generator(Ring ring, std::string_view name);
    static RingElement monomial(Ring ring, Monomial exps, const Scalar& c);

    const Ring& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Scalar> as_scalar() const;
    // The single term, when there is exactly one.
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& rhs);
    RingElement& operator-=(const RingElement& rhs);
    RingElement& operator*=(const RingElement& rhs);
    RingElement& operator*=(const Scalar& c);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator*(RingElement a, const Scalar& c) { return a *= c; }
    friend RingElement operator*(const Scalar& c, RingElement a) { return a *= c; }

    // Negative powers only for invertible elements (a scalar times a monomial
    // in multiplicative generators).
    RingElement pow(long e) const;
    bool is_invertible() const;
    RingElement inverse() const;

    friend bool operator==(const RingElement& a, const RingElement& b);

    std::string to_string() const;

    void add_term(const Monomial& m, const Scalar& c);

private:
    Ring ring_;
    Terms terms_;

    const Ring& adopt(const RingElement& other);
};

std::ostream& operator<<(std::ostream& os, const RingElement& a);

RingElement apply_sigma(const RingElement& a, long n);
// sigma^n applied to one tensor factor of an element of R (x) R (side 0 or 1).
RingElement apply_sigma_tensor(const RingElement& t, long n, int side);

RingElement coproduct(const RingElement& a);
Scalar counit(const RingElement& a);
RingElement antipode(const RingElement& a);

// Substitute generator i by coords[i].
Scalar evaluate(const RingElement& a, const std::vector<Scalar>& coords);

// a (x) 1 and 1 (x) a inside R (x) R.
RingElement tensor_embed(const RingElement& a, int side);
RingElement tensor(const RingElement& left, const RingElement& right);
// (eps (x) id) or (id (x) eps) applied to t in R (x) R.
RingElement counit_side(const RingElement& t, int side);
// m o (phi_m (x) phi_n).
Scalar evaluate_tensor(const RingElement& t, const std::vector<Scalar>& left, const std::vector<Scalar>& right);

// Scalar lambda with sigma^n(a) = lambda * a, for a monomial in multiplicative
// generators; nullopt otherwise.
std::optional<Scalar> sigma_multiplier(const RingElement& a, long n = 1);

// Coefficient-one monomial in multiplicative generators only.
bool is_grouplike_monomial(const RingElement& a);

std::string tensor_to_string(const RingElement& t);

} // namespace ambiskew
