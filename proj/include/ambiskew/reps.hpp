#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ambiskew/group.hpp"
#include "ambiskew/matrix.hpp"

namespace ambiskew {

inline constexpr long default_bound = 1000;

struct Dimension {
    enum class Kind { finite, infinite, unknown };
    Kind kind = Kind::unknown;
    long value = 0; // finite
    long bound = 0; // unknown: search limit reached

    static Dimension finite(long n) { return {Kind::finite, n, 0}; }
    static Dimension infinite() { return {Kind::infinite, 0, 0}; }
    static Dimension unknown(long bound) { return {Kind::unknown, 0, bound}; }
    bool is_finite() const noexcept { return kind == Kind::finite; }

    friend bool operator==(const Dimension&, const Dimension&) = default;
};

// Branch names: G0_plus_j, G_half_plus_j, G0_plus_j_wrap, G_half_plus_j_wrap,
// generic_N, infinite, unknown_beyond_bound, nu_scan.
struct ClassCase {
    std::string branch;
    std::optional<int> N;
    std::optional<long> j;
    std::optional<Weight> base; // the G0 or G_half point with m = base + j
};

struct Classification {
    ClassCase cls;
    Dimension dim;
};

struct SimpleDescriptor {
    Weight highest_weight;
    Dimension dim;
    std::vector<Scalar> nu; // nu_1 .. nu_{dim-1} when finite
    ClassCase class_case;
};

// Torsion is refused unless N is finite (the root-of-unity branches).
void require_rep_hypotheses(const AlgebraSpec& a);

// nu_n = sum_{k<n} xi^{n-1-k} h(m - k), n = 1..n_max.
std::vector<Scalar> nu_sequence(const AlgebraSpec& a, const Weight& m, long n_max);

// Throws MathRefusal when h(1) = 0.
Classification classify_dimension(const AlgebraSpec& a, const Weight& m, long bound = default_bound);

SimpleDescriptor simple_dimension(const AlgebraSpec& a, const Weight& m, long bound = default_bound);

// Membership of m in (G0 u G_half) + Z, scanning offsets |j| <= bound.
std::optional<std::pair<Weight, long>> finite_support_witness(const AlgebraSpec& a, const Weight& m,
                                                              long bound = default_bound);

struct WeightBlock {
    Weight weight;
    std::size_t dim = 0;
};

/// Finite-dimensional weight module. Basis vectors are grouped by weight,
/// blocks in a fixed order, and generators act diagonally.
class WeightModule {
public:
    WeightModule() = default;
    WeightModule(Algebra algebra, std::vector<WeightBlock> blocks, Matrix xplus, Matrix xminus);

    const Algebra& algebra() const noexcept { return algebra_; }
    const std::vector<WeightBlock>& blocks() const noexcept { return blocks_; }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& xplus() const noexcept { return xplus_; }
    const Matrix& xminus() const noexcept { return xminus_; }

    std::size_t offset(std::size_t block) const { return offsets_.at(block); }
    std::optional<std::size_t> find_block(const Weight& w) const;
    const Weight& weight_of(std::size_t basis_index) const;
    std::vector<Weight> support() const;

    // Diagonal matrix of a ring element acting on the basis.
    Matrix action(const RingElement& a) const;

private:
    Algebra algebra_;
    std::vector<WeightBlock> blocks_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
    Matrix xplus_;
    Matrix xminus_;
};

// Each failed identity, described; empty when the module is valid.
std::vector<std::string> relation_failures(const WeightModule& v);

WeightModule build_simple(const Algebra& a, const Weight& m, long bound = default_bound);
WeightModule trivial_module(const Algebra& a);
WeightModule direct_sum(const std::vector<WeightModule>& parts);
WeightModule tensor_module(const WeightModule& v, const WeightModule& w);
// Module in the basis given by the columns of p; p must preserve weight blocks.
WeightModule change_basis(const WeightModule& v, const Matrix& p);

std::vector<std::pair<Weight, Vector>> highest_weight_vectors(const WeightModule& v);

struct CGDecomposition {
    std::vector<SimpleDescriptor> summands;
    int s = 0;
    std::size_t highest_weight_vector_count = 0;
};

CGDecomposition cg_decompose(const Algebra& a, const Weight& m, const Weight& n, long bound = default_bound);

Scalar casimir_scalar(const AlgebraSpec& a, const Weight& m0, long j);
Matrix casimir_matrix(const WeightModule& v, const Weight& m0);

struct Summand {
    SimpleDescriptor simple;
    int multiplicity = 0;
};

std::vector<Summand> decompose_semisimple(const WeightModule& v, long bound = default_bound);

// Direct sum of the simple B_q-modules with highest h-coordinate alpha and
// w = q^alpha, each repeated `multiplicity` times.
WeightModule downup_embed(const Algebra& bq, const std::vector<std::pair<long, int>>& weights);
// Every block has w-coordinate q^(h-coordinate) with integral h-coordinate.
bool in_downup_image(const WeightModule& v);

} // namespace ambiskew
