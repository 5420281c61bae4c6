#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ambiskew/algebra.hpp"

namespace ambiskew {

enum class ConditionStatus { pass, fail, skipped };

const char* to_string(ConditionStatus s);

struct ConditionRecord {
    std::string id;
    std::string statement;
    ConditionStatus status = ConditionStatus::pass;
    std::string witness; // nonzero difference on failure, reason when skipped
};

struct H1Diagnostic {
    Scalar h1;            // h(1)
    bool generic = true;  // h(1) != 0
    std::string case_name;
    std::vector<std::pair<std::string, bool>> identities;
};

struct HopfReport {
    std::vector<ConditionRecord> conditions;
    bool overall = false;
    RingElement s_plus;
    RingElement s_minus;
    std::optional<H1Diagnostic> h1; // only when overall passes

    std::vector<std::string> failed() const;
    const ConditionRecord& condition(std::string_view id) const;
};

// Condition ids, in report order.
inline constexpr std::array<const char*, 8> hopf_condition_ids = {
    "sigma_coproduct", "antipode_sigma", "coproduct_h", "counit",
    "antipode_h",      "grouplike",      "twist",       "antipode_coeffs",
};

HopfReport check_hopf(const AlgebraSpec& a);

// s+- = -(l+- sigma^{+-1}(r+-))^{-1}
std::pair<RingElement, RingElement> derive_antipode_coeffs(const AlgebraSpec& a);

H1Diagnostic h1_diagnostic(const AlgebraSpec& a);

/// Element of A (x) A: (X-^i . X+^j) (x) (X-^k . X+^l) with middle coefficient in R (x) R.
class TensorAlgebraElement {
public:
    using Key = std::array<int, 4>;
    using Terms = std::map<Key, RingElement>;

    TensorAlgebraElement() = default;
    explicit TensorAlgebraElement(Algebra algebra) : algebra_(std::move(algebra)) {}

    static TensorAlgebraElement one(Algebra algebra);
    static TensorAlgebraElement pure(const AlgebraElement& left, const AlgebraElement& right);

    const Algebra& algebra() const noexcept { return algebra_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Key& k, const RingElement& coeff);
    TensorAlgebraElement& operator+=(const TensorAlgebraElement& rhs);
    friend TensorAlgebraElement operator-(const TensorAlgebraElement& a, const TensorAlgebraElement& b);
    friend bool operator==(const TensorAlgebraElement& a, const TensorAlgebraElement& b);
    // Componentwise product in A (x) A.
    friend TensorAlgebraElement operator*(const TensorAlgebraElement& a, const TensorAlgebraElement& b);

    // Pure tensors whose sum is this element.
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pure_terms() const;

    // Sum of f(left) * g(right) over the pure tensors.
    AlgebraElement contract(const std::function<AlgebraElement(const AlgebraElement&)>& f,
                            const std::function<AlgebraElement(const AlgebraElement&)>& g) const;

    std::string to_string() const;

private:
    Algebra algebra_;
    Terms terms_;
};

TensorAlgebraElement coproduct_on_A(const AlgebraElement& x);
Scalar counit_on_A(const AlgebraElement& x);
AlgebraElement antipode_on_A(const AlgebraElement& x);

} // namespace ambiskew
