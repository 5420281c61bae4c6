#pragma once

#include <string>

#include "ambiskew/scalar.hpp"

namespace ambiskew::detail {

bool coeff_is_zero(const Coeff& c);
bool coeff_is_one(const Coeff& c);

// Arithmetic in Q(zeta_C)[t_1..t_k] for a fixed field.
struct PolyContext {
    explicit PolyContext(const FieldSpec& f)
        : deg(f.degree()), modulus(&f.modulus()), nvars(f.variable_count())
    {
    }

    std::size_t deg;
    const std::vector<mpq_class>* modulus;
    std::size_t nvars;

    Coeff zero_coeff() const { return Coeff(deg); }
    Coeff one_coeff() const;
    Coeff coeff_mul(const Coeff& a, const Coeff& b) const;
    Coeff coeff_inv(const Coeff& a) const;

    Poly constant(const Coeff& c) const;
    Poly one() const { return constant(one_coeff()); }
    bool is_one(const Poly& p) const;
    bool is_constant(const Poly& p) const;

    void add_term(Poly& p, const Exponents& e, const Coeff& c) const;
    void add_into(Poly& p, const Poly& q) const;
    // r -= (c * t^e) * b
    void subtract_multiple(Poly& r, const Poly& b, const Exponents& e, const Coeff& c) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly scale(const Poly& a, const Coeff& c) const;
    Poly mul_term(const Poly& a, const Exponents& e, const Coeff& c) const;
    Poly monic(const Poly& a) const;

    // Throws InternalError when b does not divide a.
    Poly div_exact(const Poly& a, const Poly& b) const;
    // Monic gcd; gcd(0, 0) = 0.
    Poly gcd(const Poly& a, const Poly& b) const;

private:
    Poly gcd_rec(const Poly& a, const Poly& b, std::size_t var) const;
    Poly content_in(const Poly& a, std::size_t var) const;
    Poly pseudo_rem(const Poly& a, const Poly& b, std::size_t var) const;
};

std::string poly_to_string(const FieldSpec& f, const Poly& p);

} // namespace ambiskew::detail
