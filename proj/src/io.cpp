#include "ambiskew/io.hpp"

#include <cctype>

#include "ambiskew/errors.hpp"

namespace ambiskew {

namespace {

class Parser {
public:
    Parser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

    RingElement run()
    {
        skip();
        if (at_end()) {
            fail("empty expression", pos_);
        }
        RingElement e = expr();
        if (!at_end()) {
            fail(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const
    {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }

    RingElement expr()
    {
        RingElement e = term();
        for (;;) {
            if (accept('+')) {
                e += term();
            } else if (accept('-')) {
                e -= term();
            } else {
                return e;
            }
        }
    }

    RingElement term()
    {
        RingElement e = unary();
        for (;;) {
            if (accept('*')) {
                e *= unary();
            } else if (!at_end() && text_[pos_] == '/') {
                const std::size_t at = pos_;
                accept('/');
                const RingElement d = unary();
                if (d.is_zero()) {
                    fail("division by zero", at);
                }
                if (!d.is_invertible()) {
                    fail("division by non-invertible element " + d.to_string(), at);
                }
                e *= d.inverse();
            } else {
                return e;
            }
        }
    }

    RingElement unary()
    {
        if (accept('-')) {
            return -unary();
        }
        return power();
    }

    RingElement power()
    {
        const std::size_t start = pos_;
        RingElement base = atom();
        if (!accept('^')) {
            return base;
        }
        const std::size_t at = pos_;
        const bool negative = accept('-');
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected integer exponent", pos_);
        }
        const mpz_class e = integer();
        if (!e.fits_slong_p() || abs(e) > 1000000) {
            fail("exponent out of range", at);
        }
        const long n = negative ? -e.get_si() : e.get_si();
        if (!at_end() && text_[pos_] == '^') {
            fail("chained '^' is ambiguous; use parentheses", pos_);
        }
        if (n < 0 && !base.is_invertible()) {
            const std::string what = std::string(text_.substr(start, at - 1 - start));
            if (base.is_zero()) {
                fail("division by zero", at);
            }
            fail("negative exponent on non-invertible " + what +
                     (is_additive_generator(base) ? " (additive generator not invertible)" : ""),
                 at);
        }
        return base.pow(n);
    }

    bool is_additive_generator(const RingElement& x) const
    {
        if (!x.is_monomial() || !x.terms().begin()->second.is_one()) {
            return false;
        }
        const auto& m = x.terms().begin()->first;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0 && ring_->generator(i).kind == GeneratorKind::additive) {
                return true;
            }
        }
        return false;
    }

    mpz_class integer()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        mpz_class v(std::string(text_.substr(start, pos_ - start)));
        skip();
        return v;
    }

    RingElement atom()
    {
        if (at_end()) {
            fail("unexpected end of expression", pos_);
        }
        const char c = text_[pos_];
        if (c == '(') {
            const std::size_t open = pos_;
            accept('(');
            RingElement e = expr();
            if (!accept(')')) {
                fail(at_end() ? "unclosed '('" : "expected ')'", at_end() ? open : pos_);
            }
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RingElement::constant(ring_, Scalar::rational(ring_->field(), mpq_class(integer())));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            skip();
            if (auto g = ring_->find(name)) {
                return RingElement::generator(ring_, *g);
            }
            if (auto p = ring_->field()->find(name)) {
                return RingElement::constant(ring_, Scalar::parameter(ring_->field(), *p));
            }
            fail("unknown identifier '" + name + "'", start);
        }
        fail(std::string("unexpected '") + c + "'", pos_);
    }

    const Ring& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Accepts expression strings and JSON integers.
std::string expr_text(const Json& j, const std::string& path)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_integer()) {
        return std::to_string(j.get<long long>());
    }
    throw ParseError(path + ": expected an expression string");
}

template <class F>
auto at_path(const std::string& path, F&& f)
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

const Json& member(const Json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object()) {
        throw ParseError(path + ": expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(path + ": missing \"" + key + "\"");
    }
    return *it;
}

RingElement ring_member(const Ring& ring, const Json& doc, const char* key)
{
    const std::string path = std::string("$.") + key;
    const std::string text = expr_text(member(doc, key, "$"), path);
    return at_path(path, [&] { return parse_ring_expr(ring, text); });
}

Json nullable(const std::optional<long>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json matrix_rows(const Matrix& m)
{
    Json rows = Json::array();
    for (const auto& r : m.to_strings()) {
        rows.push_back(r);
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const Json& rows, std::size_t n, const std::string& path)
{
    if (!rows.is_array() || rows.size() != n) {
        throw ParseError(path + ": expected " + std::to_string(n) + " rows");
    }
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != n) {
            throw ParseError(rp + ": expected " + std::to_string(n) + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const std::string ep = rp + "[" + std::to_string(j) + "]";
            const std::string text = expr_text(rows[i][j], ep);
            m(i, j) = at_path(ep, [&] { return parse_scalar(f, text); });
        }
    }
    return m;
}

} // namespace

RingElement parse_ring_expr(const Ring& ring, std::string_view text)
{
    if (!ring) {
        throw InvalidArgument("expression parsing requires a ring");
    }
    return Parser(ring, text).run();
}

Scalar parse_scalar(const Field& field, std::string_view text)
{
    const Ring bare = RingSpec::make(field, {});
    return *parse_ring_expr(bare, text).as_scalar();
}

Algebra spec_from_json(const Json& doc)
{
    if (!doc.is_object()) {
        throw ParseError("$: expected an object");
    }
    std::string name = "custom";
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) {
            throw ParseError("$.name: expected a string");
        }
        name = it->get<std::string>();
    }

    std::vector<Parameter> params;
    const Json& field = member(doc, "field", "$");
    const Json& plist = member(field, "parameters", "$.field");
    if (!plist.is_array()) {
        throw ParseError("$.field.parameters: expected an array");
    }
    for (std::size_t i = 0; i < plist.size(); ++i) {
        const std::string path = "$.field.parameters[" + std::to_string(i) + "]";
        const Json& name_j = member(plist[i], "name", path);
        const Json& kind_j = member(plist[i], "kind", path);
        if (!name_j.is_string() || !kind_j.is_string()) {
            throw ParseError(path + ": name and kind must be strings");
        }
        Parameter p{name_j.get<std::string>(), ParameterKind::transcendental, 0};
        const auto kind = kind_j.get<std::string>();
        if (kind == "root_of_unity") {
            p.kind = ParameterKind::root_of_unity;
            const Json& order = member(plist[i], "order", path);
            if (!order.is_number_integer()) {
                throw ParseError(path + ".order: expected an integer");
            }
            p.order = order.get<int>();
        } else if (kind != "transcendental") {
            throw ParseError(path + ".kind: expected \"transcendental\" or \"root_of_unity\"");
        }
        params.push_back(std::move(p));
    }
    const Field f = at_path("$.field", [&] { return FieldSpec::make(params); });

    std::vector<GeneratorInfo> gens;
    const Json& glist = member(doc, "generators", "$");
    if (!glist.is_array()) {
        throw ParseError("$.generators: expected an array");
    }
    for (std::size_t i = 0; i < glist.size(); ++i) {
        const std::string path = "$.generators[" + std::to_string(i) + "]";
        const Json& name_j = member(glist[i], "name", path);
        const Json& kind_j = member(glist[i], "kind", path);
        if (!name_j.is_string() || !kind_j.is_string()) {
            throw ParseError(path + ": name and kind must be strings");
        }
        GeneratorInfo g;
        g.name = name_j.get<std::string>();
        const auto kind = kind_j.get<std::string>();
        if (kind == "multiplicative") {
            g.kind = GeneratorKind::multiplicative;
        } else if (kind != "additive") {
            throw ParseError(path + ".kind: expected \"additive\" or \"multiplicative\"");
        }
        const std::string text = expr_text(member(glist[i], "sigma", path), path + ".sigma");
        g.sigma_action = at_path(path + ".sigma", [&] { return parse_scalar(f, text); });
        gens.push_back(std::move(g));
    }
    const Ring ring = at_path("$.generators", [&] { return RingSpec::make(f, gens); });

    const RingElement h = ring_member(ring, doc, "h");
    const std::string xi_text = expr_text(member(doc, "xi", "$"), "$.xi");
    const Scalar xi = at_path("$.xi", [&] { return parse_scalar(f, xi_text); });
    HopfData hopf{ring_member(ring, doc, "r_plus"), ring_member(ring, doc, "r_minus"),
                  ring_member(ring, doc, "l_plus"), ring_member(ring, doc, "l_minus")};
    return AlgebraSpec::make(std::move(name), ring, h, xi, std::move(hopf));
}

Algebra parse_spec(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return spec_from_json(doc);
}

Json spec_to_json(const AlgebraSpec& a)
{
    Json params = Json::array();
    for (const auto& p : a.field()->parameters()) {
        Json pj = {{"name", p.name}};
        if (p.kind == ParameterKind::root_of_unity) {
            pj["kind"] = "root_of_unity";
            pj["order"] = p.order;
        } else {
            pj["kind"] = "transcendental";
        }
        params.push_back(std::move(pj));
    }
    Json gens = Json::array();
    for (const auto& g : a.ring()->generators()) {
        gens.push_back({{"name", g.name},
                        {"kind", g.kind == GeneratorKind::additive ? "additive" : "multiplicative"},
                        {"sigma", g.sigma_action.to_string()}});
    }
    Json doc;
    doc["name"] = a.name();
    doc["field"] = {{"parameters", params}};
    doc["generators"] = gens;
    doc["xi"] = a.xi().to_string();
    doc["h"] = a.h().to_string();
    doc["r_plus"] = a.hopf().r_plus.to_string();
    doc["r_minus"] = a.hopf().r_minus.to_string();
    doc["l_plus"] = a.hopf().l_plus.to_string();
    doc["l_minus"] = a.hopf().l_minus.to_string();
    return doc;
}

Weight weight_from_json(const Ring& ring, const Json& w)
{
    if (!w.is_object()) {
        throw ParseError("weight: expected an object mapping generator names to expressions");
    }
    for (const auto& [key, value] : w.items()) {
        if (!ring->find(key)) {
            throw ParseError("weight: unknown generator '" + key + "'");
        }
    }
    std::vector<Scalar> coords;
    for (const auto& g : ring->generators()) {
        auto it = w.find(g.name);
        if (it == w.end()) {
            throw ParseError("weight: missing coordinate for '" + g.name + "'");
        }
        const std::string path = "weight." + g.name;
        const std::string text = expr_text(*it, path);
        coords.push_back(at_path(path, [&] { return parse_scalar(ring->field(), text); }));
        if (g.kind == GeneratorKind::multiplicative && coords.back().is_zero()) {
            throw InvalidArgument(path + ": coordinate of an invertible generator must be nonzero");
        }
    }
    return Weight(ring, std::move(coords));
}

Json weight_to_json(const Weight& w)
{
    Json j = Json::object();
    for (std::size_t i = 0; i < w.coords().size(); ++i) {
        j[w.ring()->generator(i).name] = w[i].to_string();
    }
    return j;
}

Json dimension_to_json(const Dimension& d)
{
    switch (d.kind) {
    case Dimension::Kind::finite:
        return d.value;
    case Dimension::Kind::infinite:
        return "infinite";
    case Dimension::Kind::unknown:
        break;
    }
    return "unknown_beyond_bound";
}

Json class_case_to_json(const ClassCase& c)
{
    Json j;
    j["branch"] = c.branch;
    j["N"] = c.N ? Json(*c.N) : Json(nullptr);
    j["j"] = nullable(c.j);
    j["base"] = c.base ? weight_to_json(*c.base) : Json(nullptr);
    return j;
}

Json classification_to_json(const Classification& c)
{
    Json j;
    j["dim"] = dimension_to_json(c.dim);
    if (c.dim.kind == Dimension::Kind::unknown) {
        j["bound"] = c.dim.bound;
    }
    j["class_case"] = class_case_to_json(c.cls);
    return j;
}

Json dim_summary_to_json(const Classification& c)
{
    Json j;
    j["dim"] = dimension_to_json(c.dim);
    j["branch"] = c.cls.branch;
    if (c.cls.j) {
        j["j"] = *c.cls.j;
    }
    if (c.dim.kind == Dimension::Kind::unknown) {
        j["bound"] = c.dim.bound;
    }
    return j;
}

Json simple_to_json(const SimpleDescriptor& d)
{
    Json j;
    j["highest_weight"] = weight_to_json(d.highest_weight);
    j["dim"] = dimension_to_json(d.dim);
    if (d.dim.kind == Dimension::Kind::unknown) {
        j["bound"] = d.dim.bound;
    }
    Json nu = Json::array();
    for (const auto& v : d.nu) {
        nu.push_back(v.to_string());
    }
    j["nu"] = nu;
    j["class_case"] = class_case_to_json(d.class_case);
    return j;
}

Json hopf_report_to_json(const AlgebraSpec& a, const HopfReport& r)
{
    Json j;
    j["overall"] = r.overall;
    j["failed"] = r.failed();
    j["algebra"] = a.name();
    Json conds = Json::array();
    for (const auto& c : r.conditions) {
        conds.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"pass", c.status != ConditionStatus::fail},
                         {"statement", c.statement}, {"witness", c.witness}});
    }
    j["conditions"] = conds;
    if (r.overall) {
        j["s_plus"] = r.s_plus.to_string();
        j["s_minus"] = r.s_minus.to_string();
    }
    if (r.h1) {
        Json ids = Json::object();
        for (const auto& [name, ok] : r.h1->identities) {
            ids[name] = ok;
        }
        j["h1"] = {{"value", r.h1->h1.to_string()},
                   {"generic", r.h1->generic},
                   {"case", r.h1->case_name},
                   {"identities", ids}};
    }
    return j;
}

Json cg_to_json(const CGDecomposition& cg)
{
    Json j;
    j["s"] = cg.s;
    Json dims = Json::array();
    Json summands = Json::array();
    for (const auto& d : cg.summands) {
        dims.push_back(dimension_to_json(d.dim));
        summands.push_back(simple_to_json(d));
    }
    j["dims"] = dims;
    j["highest_weight_vector_count"] = cg.highest_weight_vector_count;
    j["summands"] = summands;
    return j;
}

Json summands_to_json(const std::vector<Summand>& s)
{
    Json dims = Json::array();
    Json parts = Json::array();
    for (const auto& x : s) {
        for (int k = 0; k < x.multiplicity; ++k) {
            dims.push_back(dimension_to_json(x.simple.dim));
        }
        parts.push_back({{"highest_weight", weight_to_json(x.simple.highest_weight)},
                         {"dim", dimension_to_json(x.simple.dim)},
                         {"multiplicity", x.multiplicity},
                         {"class_case", class_case_to_json(x.simple.class_case)}});
    }
    Json j;
    j["dims"] = dims;
    j["summands"] = parts;
    return j;
}

Json module_to_json(const WeightModule& v)
{
    Json blocks = Json::array();
    for (const auto& b : v.blocks()) {
        blocks.push_back({{"weight", weight_to_json(b.weight)}, {"dim", b.dim}});
    }
    Json j;
    j["dim"] = v.dim();
    j["blocks"] = blocks;
    j["xplus"] = matrix_rows(v.xplus());
    j["xminus"] = matrix_rows(v.xminus());
    return j;
}

WeightModule module_from_json(const Algebra& a, const Json& doc)
{
    const Json& blist = member(doc, "blocks", "$");
    if (!blist.is_array()) {
        throw ParseError("$.blocks: expected an array");
    }
    std::vector<WeightBlock> blocks;
    std::size_t n = 0;
    for (std::size_t i = 0; i < blist.size(); ++i) {
        const std::string path = "$.blocks[" + std::to_string(i) + "]";
        const Json& dim = member(blist[i], "dim", path);
        if (!dim.is_number_unsigned()) {
            throw ParseError(path + ".dim: expected a nonnegative integer");
        }
        const Json& wj = member(blist[i], "weight", path);
        Weight w = at_path(path, [&] { return weight_from_json(a->ring(), wj); });
        blocks.push_back({std::move(w), dim.get<std::size_t>()});
        n += blocks.back().dim;
    }
    Matrix xp = matrix_from_json(a->field(), member(doc, "xplus", "$"), n, "$.xplus");
    Matrix xm = matrix_from_json(a->field(), member(doc, "xminus", "$"), n, "$.xminus");
    WeightModule v = at_path("$", [&] { return WeightModule(a, std::move(blocks), std::move(xp), std::move(xm)); });
    if (auto bad = relation_failures(v); !bad.empty()) {
        std::string msg = "$: not an A-module:";
        for (const auto& b : bad) {
            msg += " " + b + ";";
        }
        msg.pop_back();
        throw InvalidArgument(msg);
    }
    return v;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace ambiskew
