#include "ambiskew/reps.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ambiskew/algebra.hpp"
#include "ambiskew/errors.hpp"
#include "modular.hpp"

namespace ambiskew {

namespace {

bool in_G0(const AlgebraSpec& a, const Weight& m)
{
    return evaluate_at(a.h(), m).is_zero();
}

bool in_G_half(const AlgebraSpec& a, const Weight& m)
{
    return (evaluate_at(a.h(), sigma_on_weight(m, -1)) + a.xi() * evaluate_at(a.h(), m)).is_zero();
}

using Residues = std::optional<std::vector<std::uint64_t>>;

// Walks sigma-orbits of weights modulo p. A nonzero residue is a proof of
// nonvanishing, so the exact test only runs where the residue is zero or
// undefined.
class Screen {
public:
    explicit Screen(const AlgebraSpec& a) : a_(a), img_(a.field())
    {
        const Weight one = underline(a.ring(), 1);
        std::vector<std::uint64_t> step;
        for (std::size_t i = 0; i < one.coords().size(); ++i) {
            auto v = img_(one[i]);
            mult_.push_back(a.ring()->generator(i).kind == GeneratorKind::multiplicative);
            if (!v || (mult_.back() && *v == 0)) {
                return;
            }
            step.push_back(*v);
        }
        step_ = std::move(step);
        xi_ = img_(a.xi());
    }

    // Image of sigma_on_weight(m, n).
    Residues at(const Weight& m, long n) const
    {
        if (!step_) {
            return std::nullopt;
        }
        std::vector<std::uint64_t> c;
        for (std::size_t i = 0; i < m.coords().size(); ++i) {
            auto v = img_(m[i]);
            if (!v) {
                return std::nullopt;
            }
            const std::uint64_t s = (*step_)[i];
            if (mult_[i]) {
                c.push_back(img_.mul(*v, img_.pow(s, n)));
            } else {
                const std::uint64_t k = static_cast<std::uint64_t>(n < 0 ? -n : n) % img_.prime();
                const std::uint64_t d = img_.mul(s, k);
                c.push_back(n < 0 ? img_.add(*v, d == 0 ? 0 : img_.prime() - d) : img_.add(*v, d));
            }
        }
        return c;
    }

    std::optional<std::uint64_t> h(const Residues& c) const
    {
        return c ? img_.evaluate(a_.h(), *c) : std::nullopt;
    }

    bool h_nonzero(const Residues& c) const
    {
        auto v = h(c);
        return v && *v != 0;
    }

    // h(sigma^-1 w) + xi h(w), given the residues of w and sigma^-1 w.
    bool half_nonzero(const Residues& w, const Residues& below) const
    {
        auto hw = h(w);
        auto hb = h(below);
        return xi_ && hw && hb && img_.add(*hb, img_.mul(*xi_, *hw)) != 0;
    }

    const detail::ModularImage& image() const noexcept { return img_; }
    const std::optional<std::uint64_t>& xi() const noexcept { return xi_; }

private:
    const AlgebraSpec& a_;
    detail::ModularImage img_;
    std::vector<bool> mult_;
    std::optional<std::vector<std::uint64_t>> step_;
    std::optional<std::uint64_t> xi_;
};

struct CosetHit {
    bool g0 = false;
    bool half = false;
};

// Membership of sigma_on_weight(m, -j) in G0 and in G_half.
CosetHit coset_test(const AlgebraSpec& a, const Screen& s, const Weight& m, long j, bool want_half)
{
    const Residues w = s.at(m, -j);
    CosetHit hit;
    if (!s.h_nonzero(w)) {
        hit.g0 = in_G0(a, sigma_on_weight(m, -j));
    }
    if (want_half && !hit.g0 && !s.half_nonzero(w, s.at(m, -j - 1))) {
        hit.half = in_G_half(a, sigma_on_weight(m, -j));
    }
    return hit;
}

std::string branch_name(bool half, bool wrap)
{
    std::string s = half ? "G_half_plus_j" : "G0_plus_j";
    return wrap ? s + "_wrap" : s;
}

Classification finite_case(const NInfo& info, bool half, long j, Weight base, long dim, bool wrap)
{
    return {{branch_name(half, wrap), info.N, j, std::move(base)}, Dimension::finite(dim)};
}

// Groups basis vectors by weight, keeping first-appearance order.
WeightModule assemble(const Algebra& a, const std::vector<Weight>& weights, const Matrix& xp, const Matrix& xm)
{
    std::vector<WeightBlock> blocks;
    std::map<Weight, std::size_t> index;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        auto [it, fresh] = index.try_emplace(weights[i], blocks.size());
        if (fresh) {
            blocks.push_back({weights[i], 0});
            members.emplace_back();
        }
        blocks[it->second].dim++;
        members[it->second].push_back(i);
    }
    std::vector<std::size_t> order;
    for (const auto& m : members) {
        order.insert(order.end(), m.begin(), m.end());
    }
    const std::size_t n = weights.size();
    Matrix p(a->field(), n, n);
    Matrix m(a->field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            p(i, j) = xp(order[i], order[j]);
            m(i, j) = xm(order[i], order[j]);
        }
    }
    return WeightModule(a, std::move(blocks), std::move(p), std::move(m));
}

std::vector<Weight> basis_weights(const WeightModule& v)
{
    std::vector<Weight> w;
    for (const auto& b : v.blocks()) {
        w.insert(w.end(), b.dim, b.weight);
    }
    return w;
}

void require_same_algebra(const WeightModule& v, const WeightModule& w)
{
    if (v.algebra() != w.algebra() && !(*v.algebra() == *w.algebra())) {
        throw InvalidArgument("modules belong to different algebras");
    }
}

void require_infinite_N(const AlgebraSpec& a, const char* what)
{
    if (compute_N(a).N) {
        throw MathRefusal(std::string("unsupported case: ") + what + " needs N = infinity, but N = " +
                          std::to_string(*compute_N(a).N));
    }
}

// Casimir on every block, relative to an arbitrary base in the same orbit.
Matrix casimir_relative(const WeightModule& v, const Weight& base, std::vector<std::string>* offending)
{
    const auto& a = *v.algebra();
    const Matrix t = v.xminus() * v.xplus();
    Matrix c(a.field(), v.dim(), v.dim());
    for (std::size_t b = 0; b < v.blocks().size(); ++b) {
        const auto& w = v.blocks()[b].weight;
        auto j = solve_underline(weight_difference(w, base));
        if (!j) {
            if (offending) {
                offending->push_back(w.to_string());
            }
            continue;
        }
        const auto g = sigma_power_t(a, *j);
        const Scalar shift = evaluate_at(g.a, w);
        const std::size_t o = v.offset(b);
        for (std::size_t r = 0; r < v.blocks()[b].dim; ++r) {
            for (std::size_t s = 0; s < v.blocks()[b].dim; ++s) {
                c(o + r, o + s) = g.c * t(o + r, o + s);
            }
            c(o + r, o + r) += shift;
        }
    }
    return c;
}

std::vector<Vector> chain(const WeightModule& v, const Vector& x, std::size_t limit)
{
    std::vector<Vector> out;
    Vector cur = x;
    while (out.size() <= limit) {
        if (std::all_of(cur.begin(), cur.end(), [](const Scalar& s) { return s.is_zero(); })) {
            break;
        }
        out.push_back(cur);
        cur = v.xminus() * cur;
    }
    return out;
}

// Combinations of `span` killed by X+.
std::vector<Vector> killed_by_xplus(const WeightModule& v, const std::vector<Vector>& span)
{
    if (span.empty()) {
        return {};
    }
    const auto& f = v.algebra()->field();
    Matrix basis = Matrix::from_columns(f, v.dim(), span);
    std::vector<Vector> out;
    for (const auto& c : kernel(v.xplus() * basis)) {
        out.push_back(basis * c);
    }
    return out;
}

Vector restrict_block(const WeightModule& v, std::size_t b, const Vector& local)
{
    Vector full(v.dim(), Scalar(v.algebra()->field()));
    for (std::size_t i = 0; i < local.size(); ++i) {
        full[v.offset(b) + i] = local[i];
    }
    return full;
}

} // namespace

void require_rep_hypotheses(const AlgebraSpec& a)
{
    if (auto why = torsion_obstruction(a.ring())) {
        if (compute_N(a).N) {
            return;
        }
        throw MathRefusal("torsion: " + *why);
    }
}

std::vector<Scalar> nu_sequence(const AlgebraSpec& a, const Weight& m, long n_max)
{
    std::vector<Scalar> nu;
    Scalar prev(a.field());
    Weight w = m;
    for (long n = 1; n <= n_max; ++n) {
        prev = a.xi() * prev + evaluate_at(a.h(), w);
        nu.push_back(prev);
        w = sigma_on_weight(w, -1);
    }
    return nu;
}

Classification classify_dimension(const AlgebraSpec& a, const Weight& m, long bound)
{
    require_rep_hypotheses(a);
    const NInfo info = compute_N(a);
    if (info.h1_is_zero) {
        throw MathRefusal("degenerate case: h(1) = 0, the classification does not apply; see the h(1) diagnostic "
                          "of check-hopf");
    }
    const Screen screen(a);
    if (!info.N) {
        for (long j = 0; j <= bound; ++j) {
            const auto hit = coset_test(a, screen, m, j, true);
            if (hit.g0 || hit.half) {
                return finite_case(info, hit.half, j, sigma_on_weight(m, -j), hit.half ? 2 * j + 2 : 2 * j + 1, false);
            }
        }
        for (long j = -1; j >= -bound; --j) {
            const auto hit = coset_test(a, screen, m, j, true);
            if (hit.g0 || hit.half) {
                return {{"infinite", info.N, j, sigma_on_weight(m, -j)}, Dimension::infinite()};
            }
        }
        return {{"unknown_beyond_bound", info.N, std::nullopt, std::nullopt}, Dimension::unknown(bound)};
    }
    const long N = *info.N;
    if (N % 2 == 1) {
        for (long j = 0; j < N; ++j) {
            if (coset_test(a, screen, m, j, false).g0) {
                const bool wrap = j >= (N + 1) / 2;
                return finite_case(info, false, j, sigma_on_weight(m, -j), wrap ? 2 * j + 1 - N : 2 * j + 1, wrap);
            }
        }
    } else {
        for (long j = 0; j < N / 2; ++j) {
            const auto hit = coset_test(a, screen, m, j, true);
            if (hit.g0 || hit.half) {
                return finite_case(info, hit.half, j, sigma_on_weight(m, -j), hit.half ? 2 * j + 2 : 2 * j + 1, false);
            }
        }
    }
    // Off the cosets every simple has the maximal dimension N.
    return {{"generic_N", info.N, std::nullopt, std::nullopt}, Dimension::finite(N)};
}

SimpleDescriptor simple_dimension(const AlgebraSpec& a, const Weight& m, long bound)
{
    require_rep_hypotheses(a);
    const NInfo info = compute_N(a);
    std::optional<Classification> cls;
    if (!info.h1_is_zero) {
        cls = classify_dimension(a, m, bound);
    }
    long limit = info.N ? *info.N : bound;
    if (cls && cls->dim.is_finite()) {
        limit = std::max(limit, cls->dim.value);
    }

    SimpleDescriptor d;
    d.highest_weight = m;
    // The exact recursion is only needed up to a finite classified
    // dimension, or when the residues fail to rule out a zero.
    long exact_limit = cls && cls->dim.is_finite() ? cls->dim.value : 0;
    if (exact_limit == 0) {
        const Screen screen(a);
        const auto& img = screen.image();
        std::uint64_t nu = 0;
        for (long n = 1; n <= limit; ++n) {
            auto hw = screen.h(screen.at(m, 1 - n));
            if (!hw || !screen.xi()) {
                exact_limit = limit;
                break;
            }
            nu = img.add(img.mul(*screen.xi(), nu), *hw);
            if (nu == 0) {
                exact_limit = limit;
                break;
            }
        }
    }
    std::optional<long> found;
    Scalar nu(a.field());
    Weight w = m;
    for (long n = 1; n <= exact_limit; ++n) {
        nu = a.xi() * nu + evaluate_at(a.h(), w);
        if (nu.is_zero()) {
            found = n;
            break;
        }
        d.nu.push_back(nu);
        w = sigma_on_weight(w, -1);
    }

    if (!cls) {
        d.dim = found ? Dimension::finite(*found) : Dimension::unknown(bound);
        d.class_case = {found ? "nu_scan" : "unknown_beyond_bound", info.N, std::nullopt, std::nullopt};
    } else {
        const bool agree = found ? cls->dim == Dimension::finite(*found) : !cls->dim.is_finite();
        if (!agree) {
            throw InternalError("nu-scan and classification disagree at " + m.to_string());
        }
        d.dim = cls->dim;
        d.class_case = cls->cls;
    }
    if (!d.dim.is_finite()) {
        d.nu.clear();
    }
    return d;
}

std::optional<std::pair<Weight, long>> finite_support_witness(const AlgebraSpec& a, const Weight& m, long bound)
{
    const Screen screen(a);
    for (long k = 0; k <= 2 * bound; ++k) {
        const long j = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        const auto hit = coset_test(a, screen, m, j, true);
        if (hit.g0 || hit.half) {
            return std::make_pair(sigma_on_weight(m, -j), j);
        }
    }
    return std::nullopt;
}

WeightModule::WeightModule(Algebra algebra, std::vector<WeightBlock> blocks, Matrix xplus, Matrix xminus)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)), xplus_(std::move(xplus)), xminus_(std::move(xminus))
{
    std::map<Weight, int> seen;
    for (const auto& b : blocks_) {
        if (!same_ring(b.weight.ring(), algebra_->ring())) {
            throw InvalidArgument("block weight belongs to a different ring");
        }
        if (b.dim == 0) {
            throw InvalidArgument("empty weight block " + b.weight.to_string());
        }
        if (seen[b.weight]++) {
            throw InvalidArgument("repeated weight block " + b.weight.to_string());
        }
        offsets_.push_back(dim_);
        dim_ += b.dim;
    }
    for (const Matrix* x : {&xplus_, &xminus_}) {
        if (x->rows() != dim_ || x->cols() != dim_) {
            throw InvalidArgument("action matrix has shape " + std::to_string(x->rows()) + "x" +
                                  std::to_string(x->cols()) + ", expected " + std::to_string(dim_));
        }
    }
}

std::optional<std::size_t> WeightModule::find_block(const Weight& w) const
{
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].weight == w) {
            return b;
        }
    }
    return std::nullopt;
}

const Weight& WeightModule::weight_of(std::size_t basis_index) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), basis_index);
    return blocks_.at(static_cast<std::size_t>(it - offsets_.begin()) - 1).weight;
}

std::vector<Weight> WeightModule::support() const
{
    std::vector<Weight> s;
    for (const auto& b : blocks_) {
        s.push_back(b.weight);
    }
    return s;
}

Matrix WeightModule::action(const RingElement& a) const
{
    Vector d;
    for (const auto& b : blocks_) {
        d.insert(d.end(), b.dim, evaluate_at(a, b.weight));
    }
    return Matrix::diagonal(algebra_->field(), d);
}

std::vector<std::string> relation_failures(const WeightModule& v)
{
    const auto& a = *v.algebra();
    std::vector<std::string> out;
    for (int sign : {1, -1}) {
        const Matrix& x = sign > 0 ? v.xplus() : v.xminus();
        const char* name = sign > 0 ? "X+" : "X-";
        bool ok = true;
        for (std::size_t i = 0; i < v.dim() && ok; ++i) {
            for (std::size_t j = 0; j < v.dim() && ok; ++j) {
                if (!x(i, j).is_zero() && !(v.weight_of(i) == sigma_on_weight(v.weight_of(j), sign))) {
                    out.push_back(std::string(name) + " maps weight " + v.weight_of(j).to_string() + " to " +
                                  v.weight_of(i).to_string());
                    ok = false;
                }
            }
        }
        for (std::size_t g = 0; g < a.ring()->size(); ++g) {
            const auto gen = RingElement::generator(a.ring(), g);
            if (!(x * v.action(gen) == v.action(apply_sigma(gen, sign)) * x)) {
                out.push_back(std::string(name) + " does not twist " + a.ring()->generator(g).name + " by sigma");
            }
        }
    }
    const Matrix lhs = v.xplus() * v.xminus() - v.xminus() * v.xplus() * a.xi();
    if (!(lhs == v.action(a.h()))) {
        out.push_back("X+ X- - xi X- X+ differs from h");
    }
    return out;
}

WeightModule build_simple(const Algebra& a, const Weight& m, long bound)
{
    const auto d = simple_dimension(*a, m, bound);
    if (!d.dim.is_finite()) {
        throw MathRefusal("L(" + m.to_string() + ") is not known to be finite-dimensional (" + d.class_case.branch +
                          ")");
    }
    const auto n = static_cast<std::size_t>(d.dim.value);
    std::vector<Weight> weights;
    Weight w = m;
    for (std::size_t k = 0; k < n; ++k) {
        weights.push_back(w);
        w = sigma_on_weight(w, -1);
    }
    Matrix xp(a->field(), n, n);
    Matrix xm(a->field(), n, n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        xm(k + 1, k) = a->scalar(1);
        xp(k, k + 1) = d.nu[k];
    }
    return assemble(a, weights, xp, xm);
}

WeightModule trivial_module(const Algebra& a)
{
    return build_simple(a, zero_weight(a->ring()));
}

WeightModule direct_sum(const std::vector<WeightModule>& parts)
{
    if (parts.empty()) {
        throw InvalidArgument("direct sum of no modules");
    }
    const Algebra& a = parts.front().algebra();
    std::size_t n = 0;
    for (const auto& p : parts) {
        require_same_algebra(parts.front(), p);
        n += p.dim();
    }
    std::vector<Weight> weights;
    Matrix xp(a->field(), n, n);
    Matrix xm(a->field(), n, n);
    std::size_t o = 0;
    for (const auto& p : parts) {
        auto w = basis_weights(p);
        weights.insert(weights.end(), w.begin(), w.end());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            for (std::size_t j = 0; j < p.dim(); ++j) {
                xp(o + i, o + j) = p.xplus()(i, j);
                xm(o + i, o + j) = p.xminus()(i, j);
            }
        }
        o += p.dim();
    }
    return assemble(a, weights, xp, xm);
}

WeightModule tensor_module(const WeightModule& v, const WeightModule& w)
{
    require_same_algebra(v, w);
    const Algebra& a = v.algebra();
    const auto& hd = a->hopf();
    const auto wv = basis_weights(v);
    const auto ww = basis_weights(w);
    const std::size_t nv = v.dim();
    const std::size_t nw = w.dim();
    const std::size_t n = nv * nw;
    std::vector<Weight> weights;
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < nw; ++j) {
            weights.push_back(weight_sum(wv[i], ww[j]));
        }
    }
    const auto eval_all = [](const RingElement& r, const std::vector<Weight>& ws) {
        Vector out;
        for (const auto& x : ws) {
            out.push_back(evaluate_at(r, x));
        }
        return out;
    };
    Matrix out[2] = {Matrix(a->field(), n, n), Matrix(a->field(), n, n)};
    for (int side = 0; side < 2; ++side) {
        const Matrix& xv = side == 0 ? v.xplus() : v.xminus();
        const Matrix& xw = side == 0 ? w.xplus() : w.xminus();
        const Vector r = eval_all(side == 0 ? hd.r_plus : hd.r_minus, ww);
        const Vector l = eval_all(side == 0 ? hd.l_plus : hd.l_minus, wv);
        Matrix& x = out[side];
        for (std::size_t i = 0; i < nv; ++i) {
            for (std::size_t j = 0; j < nw; ++j) {
                const std::size_t col = i * nw + j;
                for (std::size_t p = 0; p < nv; ++p) {
                    if (!xv(p, i).is_zero()) {
                        x(p * nw + j, col) += xv(p, i) * r[j];
                    }
                }
                for (std::size_t q = 0; q < nw; ++q) {
                    if (!xw(q, j).is_zero()) {
                        x(i * nw + q, col) += l[i] * xw(q, j);
                    }
                }
            }
        }
    }
    return assemble(a, weights, out[0], out[1]);
}

WeightModule change_basis(const WeightModule& v, const Matrix& p)
{
    if (p.rows() != v.dim() || p.cols() != v.dim()) {
        throw InvalidArgument("change of basis has the wrong size");
    }
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            if (!p(i, j).is_zero() && !(v.weight_of(i) == v.weight_of(j))) {
                throw InvalidArgument("change of basis mixes weight blocks");
            }
        }
    }
    const Matrix pinv = inverse(p);
    return WeightModule(v.algebra(), v.blocks(), pinv * v.xplus() * p, pinv * v.xminus() * p);
}

std::vector<std::pair<Weight, Vector>> highest_weight_vectors(const WeightModule& v)
{
    std::vector<std::pair<Weight, Vector>> out;
    for (std::size_t b = 0; b < v.blocks().size(); ++b) {
        const auto& blk = v.blocks()[b];
        for (const auto& k : kernel(v.xplus().block(0, v.offset(b), v.dim(), blk.dim))) {
            out.emplace_back(blk.weight, restrict_block(v, b, k));
        }
    }
    return out;
}

CGDecomposition cg_decompose(const Algebra& a, const Weight& m, const Weight& n, long bound)
{
    require_rep_hypotheses(*a);
    require_infinite_N(*a, "the Clebsch-Gordan decomposition");
    const auto dm = simple_dimension(*a, m, bound);
    const auto dn = simple_dimension(*a, n, bound);
    for (const auto* d : {&dm, &dn}) {
        if (!d->dim.is_finite()) {
            throw MathRefusal("L(" + d->highest_weight.to_string() + ") is not known to be finite-dimensional");
        }
    }
    CGDecomposition cg;
    cg.s = static_cast<int>(std::min(dm.dim.value, dn.dim.value));
    const Weight top = weight_sum(m, n);
    for (int k = 0; k < cg.s; ++k) {
        cg.summands.push_back(simple_dimension(*a, sigma_on_weight(top, -k), bound));
    }

    const auto t = tensor_module(build_simple(a, m, bound), build_simple(a, n, bound));
    const auto hw = highest_weight_vectors(t);
    cg.highest_weight_vector_count = hw.size();
    if (hw.size() != static_cast<std::size_t>(cg.s)) {
        throw InternalError("expected " + std::to_string(cg.s) + " highest weight vectors, found " +
                            std::to_string(hw.size()));
    }
    std::vector<Vector> span;
    long total = 0;
    for (const auto& s : cg.summands) {
        auto it = std::find_if(hw.begin(), hw.end(), [&](const auto& p) { return p.first == s.highest_weight; });
        if (it == hw.end() || !s.dim.is_finite()) {
            throw InternalError("no highest weight vector at " + s.highest_weight.to_string());
        }
        auto c = chain(t, it->second, t.dim());
        if (static_cast<long>(c.size()) != s.dim.value) {
            throw InternalError("submodule generated at " + s.highest_weight.to_string() + " has dimension " +
                                std::to_string(c.size()) + ", expected " + std::to_string(s.dim.value));
        }
        span.insert(span.end(), c.begin(), c.end());
        total += s.dim.value;
    }
    if (total != dm.dim.value * dn.dim.value ||
        rank(Matrix::from_columns(a->field(), t.dim(), span)) != t.dim()) {
        throw InternalError("highest weight submodules do not span the tensor product");
    }
    return cg;
}

Scalar casimir_scalar(const AlgebraSpec& a, const Weight& m0, long j)
{
    if (!in_G0(a, m0)) {
        throw MathRefusal("base weight " + m0.to_string() + " is not in G0");
    }
    if (j < 0) {
        throw InvalidArgument("j must be nonnegative");
    }
    Scalar sum(a.field());
    for (long k = 0; k < j; ++k) {
        sum += a.xi().pow(k) * evaluate_at(a.h(), sigma_on_weight(m0, k + 1));
    }
    return sum;
}

Matrix casimir_matrix(const WeightModule& v, const Weight& m0)
{
    if (!in_G0(*v.algebra(), m0)) {
        throw MathRefusal("base weight " + m0.to_string() + " is not in G0");
    }
    std::vector<std::string> bad;
    Matrix c = casimir_relative(v, m0, &bad);
    if (!bad.empty()) {
        std::string list;
        for (const auto& b : bad) {
            list += (list.empty() ? "" : ", ") + b;
        }
        throw MathRefusal("support not contained in " + m0.to_string() + " + Z: " + list);
    }
    return c;
}

std::vector<Summand> decompose_semisimple(const WeightModule& v, long bound)
{
    const Algebra& alg = v.algebra();
    const auto& a = *alg;
    require_rep_hypotheses(a);
    require_infinite_N(a, "semisimple decomposition");
    if (auto f = relation_failures(v); !f.empty()) {
        throw InvalidArgument("not a weight module: " + f.front());
    }
    const auto& field = a.field();
    const std::size_t nb = v.blocks().size();

    // Components of the support under steps by 1.
    std::vector<int> comp(nb, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < nb; ++s) {
        if (comp[s] >= 0) {
            continue;
        }
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            const auto b = stack.back();
            stack.pop_back();
            for (int sign : {1, -1}) {
                auto nbh = v.find_block(sigma_on_weight(v.blocks()[b].weight, sign));
                if (nbh && comp[*nbh] < 0) {
                    comp[*nbh] = ncomp;
                    stack.push_back(*nbh);
                }
            }
        }
        ++ncomp;
    }

    std::vector<Summand> result;
    const auto record = [&](SimpleDescriptor d) {
        for (auto& s : result) {
            if (s.simple.highest_weight == d.highest_weight) {
                ++s.multiplicity;
                return;
            }
        }
        result.push_back({std::move(d), 1});
    };

    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t b = 0; b < nb; ++b) {
            if (comp[b] == c) {
                members.push_back(b);
            }
        }
        const Weight& base = v.blocks()[members.front()].weight;
        const Matrix cas = casimir_relative(v, base, nullptr);

        std::vector<Scalar> candidates;
        for (auto b : members) {
            // C acts on a highest weight vector by the ring part of sigma^j(t).
            const auto j = solve_underline(weight_difference(v.blocks()[b].weight, base));
            const Scalar shift = evaluate_at(sigma_power_t(a, *j).a, v.blocks()[b].weight);
            if (std::find(candidates.begin(), candidates.end(), shift) == candidates.end()) {
                candidates.push_back(shift);
            }
        }

        std::size_t covered = 0;
        std::size_t comp_dim = 0;
        for (auto b : members) {
            comp_dim += v.blocks()[b].dim;
        }
        for (const auto& lambda : candidates) {
            std::vector<std::vector<Vector>> eigen(nb);
            std::size_t edim = 0;
            for (auto b : members) {
                const auto o = v.offset(b);
                const auto d = v.blocks()[b].dim;
                Matrix shifted = cas.block(o, o, d, d) - Matrix::identity(field, d) * lambda;
                for (const auto& k : kernel(shifted.pow(static_cast<unsigned>(d)))) {
                    eigen[b].push_back(restrict_block(v, b, k));
                }
                edim += eigen[b].size();
            }
            if (edim == 0) {
                continue;
            }
            covered += edim;
            std::vector<Vector> span;
            for (auto b : members) {
                for (const auto& x : killed_by_xplus(v, eigen[b])) {
                    auto d = simple_dimension(a, v.blocks()[b].weight, bound);
                    if (!d.dim.is_finite()) {
                        throw InternalError("highest weight " + v.blocks()[b].weight.to_string() +
                                            " of a finite module has no finite simple quotient");
                    }
                    auto ch = chain(v, x, v.dim());
                    if (static_cast<long>(ch.size()) != d.dim.value) {
                        throw InternalError("peeling stalled: the submodule generated at " +
                                            v.blocks()[b].weight.to_string() + " is not simple");
                    }
                    span.insert(span.end(), ch.begin(), ch.end());
                    record(std::move(d));
                }
            }
            if (span.size() != edim || rank(Matrix::from_columns(field, v.dim(), span)) != edim) {
                throw InternalError("peeling stalled: highest weight submodules do not fill a Casimir eigenspace");
            }
        }
        if (covered != comp_dim) {
            throw InternalError("Casimir eigenspaces do not exhaust the component");
        }
    }
    return result;
}

WeightModule downup_embed(const Algebra& bq, const std::vector<std::pair<long, int>>& weights)
{
    const auto& R = bq->ring();
    auto hi = R->find("h");
    auto wi = R->find("w");
    if (!hi || !wi || R->generator(*wi).kind != GeneratorKind::multiplicative) {
        throw InvalidArgument("downup_embed needs the downup_bq preset");
    }
    const Scalar q = R->generator(*wi).sigma_action;
    std::vector<WeightModule> parts;
    for (const auto& [alpha, mult] : weights) {
        if (mult < 0) {
            throw InvalidArgument("negative multiplicity");
        }
        std::vector<Scalar> coords(R->size(), Scalar::integer(bq->field(), 0));
        coords[*hi] = Scalar::integer(bq->field(), alpha);
        coords[*wi] = q.pow(alpha);
        const auto simple = build_simple(bq, Weight(R, coords));
        for (int i = 0; i < mult; ++i) {
            parts.push_back(simple);
        }
    }
    return direct_sum(parts);
}

bool in_downup_image(const WeightModule& v)
{
    const auto& R = v.algebra()->ring();
    auto hi = R->find("h");
    auto wi = R->find("w");
    if (!hi || !wi) {
        return false;
    }
    const Scalar q = R->generator(*wi).sigma_action;
    for (const auto& b : v.blocks()) {
        auto h = b.weight[*hi].as_rational();
        if (!h || h->get_den() != 1 || !h->get_num().fits_slong_p()) {
            return false;
        }
        if (!(b.weight[*wi] == q.pow(h->get_num().get_si()))) {
            return false;
        }
    }
    return true;
}

} // namespace ambiskew
