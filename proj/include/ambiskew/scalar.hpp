#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ambiskew {

enum class ParameterKind { transcendental, root_of_unity };

struct Parameter {
    std::string name;
    ParameterKind kind = ParameterKind::transcendental;
    int order = 0; // only meaningful for root_of_unity

    friend bool operator==(const Parameter&, const Parameter&) = default;
};

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// The coefficient field: Q(zeta_C)(t_1, ..., t_k), where zeta_C is the
/// (optional) root-of-unity parameter and t_i the transcendental ones.
/// Immutable once built; share it through `Field`.
class FieldSpec {
public:
    static Field make(std::vector<Parameter> parameters);
    static Field rationals();

    const std::vector<Parameter>& parameters() const noexcept { return parameters_; }
    std::optional<std::size_t> find(std::string_view name) const;

    int conductor() const noexcept { return conductor_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    // Coefficients of Phi_C, lowest degree first; monic.
    const std::vector<mpq_class>& modulus() const noexcept { return modulus_; }
    std::optional<std::size_t> root_parameter() const noexcept { return root_; }

    // Transcendental parameters are the polynomial variables, numbered in
    // declaration order.
    std::size_t variable_count() const noexcept { return variables_.size(); }
    std::size_t variable_parameter(std::size_t var) const { return variables_.at(var); }
    std::optional<std::size_t> variable_of(std::size_t parameter) const;

    bool operator==(const FieldSpec& other) const noexcept { return parameters_ == other.parameters_; }

private:
    FieldSpec() = default;

    std::vector<Parameter> parameters_;
    std::vector<std::size_t> variables_;
    std::optional<std::size_t> root_;
    int conductor_ = 1;
    std::vector<mpq_class> modulus_;
};

bool same_field(const Field& a, const Field& b) noexcept;

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

namespace detail {

// Element of Q(zeta_C) in the power basis 1, zeta, ..., zeta^(d-1).
using Coeff = std::vector<mpq_class>;
using Exponents = std::vector<int>;
// Sparse polynomial in the transcendental variables; lex-descending so that
// begin() is the leading term.
using Poly = std::map<Exponents, Coeff, std::greater<>>;

} // namespace detail

/// Exact element of the field. Stored as a reduced fraction num/den with the
/// leading coefficient of den equal to one, so equality is structural.
class Scalar {
public:
    // Zero, not yet bound to a field. Adopts the other operand's field.
    Scalar() = default;
    explicit Scalar(Field field);

    static Scalar integer(Field field, long value);
    static Scalar rational(Field field, const mpq_class& value);
    static Scalar parameter(Field field, std::size_t index);
    static Scalar parameter(Field field, std::string_view name);

    const Field& field() const noexcept { return field_; }

    bool is_zero() const noexcept { return num_.empty(); }
    bool is_one() const;
    // True when the value does not depend on any transcendental parameter.
    bool is_constant() const;
    std::optional<mpq_class> as_rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    // Canonical text: parameters in declaration order, exponents descending,
    // "(num)/(den)" when the denominator is not one.
    std::string to_string() const;

    const detail::Poly& numerator() const noexcept { return num_; }
    const detail::Poly& denominator() const noexcept { return den_; }

private:
    Scalar(Field field, detail::Poly num, detail::Poly den);

    Field field_;
    detail::Poly num_; // empty means zero
    detail::Poly den_; // empty means one
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Multiplicative order of `a` when it is a root of unity in the field.
std::optional<int> root_of_unity_order(const Scalar& a);

} // namespace ambiskew
