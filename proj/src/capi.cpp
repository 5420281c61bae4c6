#include "ambiskew/ambiskew.h"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <string>

#include "ambiskew/errors.hpp"
#include "ambiskew/io.hpp"
#include "ambiskew/presets.hpp"

struct ambi_algebra {
    ambiskew::Algebra algebra;
};

namespace {

using namespace ambiskew;

thread_local std::string last_error;

char* copy_out(const std::string& s)
{
    char* p = new char[s.size() + 1];
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
ambi_status guarded(char** out, F&& f)
{
    if (out) {
        *out = nullptr;
    }
    last_error.clear();
    try {
        std::string result = f();
        if (out) {
            *out = copy_out(result);
        }
        return AMBI_OK;
    } catch (const ParseError& e) {
        last_error = e.what();
        return AMBI_PARSE_ERROR;
    } catch (const Json::exception& e) {
        last_error = std::string("invalid JSON: ") + e.what();
        return AMBI_PARSE_ERROR;
    } catch (const InvalidArgument& e) {
        last_error = e.what();
        return AMBI_INVALID_ARGUMENT;
    } catch (const MathRefusal& e) {
        last_error = e.what();
        return AMBI_REFUSED;
    } catch (const std::exception& e) {
        last_error = e.what();
        return AMBI_INTERNAL;
    }
}

const Algebra& algebra_of(const ambi_algebra* a)
{
    if (!a || !a->algebra) {
        throw InvalidArgument("null algebra handle");
    }
    return a->algebra;
}

std::string text_of(const char* s, const char* what)
{
    if (!s) {
        throw InvalidArgument(std::string("null ") + what);
    }
    return s;
}

Weight weight_arg(const Algebra& a, const char* text, const char* what)
{
    Json j;
    try {
        j = Json::parse(text_of(text, what));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
    }
    return weight_from_json(a->ring(), j);
}

long bound_arg(long bound)
{
    return bound <= 0 ? default_bound : bound;
}

int int_value(const std::string& key, const std::string& v)
{
    int out = 0;
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || end != v.data() + v.size()) {
        throw ParseError("preset parameter " + key + ": expected an integer, got '" + v + "'");
    }
    return out;
}

PresetParams preset_params(const char* text)
{
    PresetParams p;
    if (!text) {
        return p;
    }
    std::string s = text;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) {
            end = s.size();
        }
        const std::string item = s.substr(start, end - start);
        start = end + 1;
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParseError("preset parameter '" + item + "': expected key=value");
        }
        const std::string key = item.substr(0, eq);
        const std::string v = item.substr(eq + 1);
        if (key == "alpha") {
            try {
                p.alpha = mpq_class(v);
                p.alpha.canonicalize();
            } catch (const std::invalid_argument&) {
                throw ParseError("preset parameter alpha: expected a rational, got '" + v + "'");
            }
            continue;
        }
        const int n = int_value(key, v);
        if (key == "q_order") {
            p.q_order = n;
        } else if (key == "M") {
            p.M = n;
        } else if (key == "p") {
            p.p = n;
        } else if (key == "r") {
            p.r = n;
        } else if (key == "s") {
            p.s = n;
        } else if (key == "t") {
            p.t = n;
        } else if (key == "p2") {
            p.p2 = n;
        } else if (key == "r2") {
            p.r2 = n;
        } else if (key == "s2") {
            p.s2 = n;
        } else if (key == "t2") {
            p.t2 = n;
        } else if (key == "rho") {
            p.rho = n;
        } else if (key == "lambda") {
            p.lambda = n;
        } else {
            throw ParseError("unknown preset parameter '" + key + "'");
        }
    }
    return p;
}

} // namespace

extern "C" {

const char* ambi_version(void)
{
    return "0.1.0";
}

const char* ambi_last_error(void)
{
    return last_error.c_str();
}

void ambi_string_free(char* s)
{
    delete[] s;
}

ambi_status ambi_algebra_from_json(const char* json, ambi_algebra** out)
{
    if (out) {
        *out = nullptr;
    }
    return guarded(nullptr, [&] {
        if (!out) {
            throw InvalidArgument("null output handle");
        }
        *out = new ambi_algebra{parse_spec(text_of(json, "spec document"))};
        return std::string();
    });
}

ambi_status ambi_algebra_from_preset(const char* id, const char* params, ambi_algebra** out)
{
    if (out) {
        *out = nullptr;
    }
    return guarded(nullptr, [&] {
        if (!out) {
            throw InvalidArgument("null output handle");
        }
        const std::string name = text_of(id, "preset id");
        const auto& ids = preset_ids();
        if (std::find(ids.begin(), ids.end(), name) == ids.end()) {
            throw InvalidArgument("unknown preset '" + name + "'");
        }
        *out = new ambi_algebra{preset(name, preset_params(params))};
        return std::string();
    });
}

void ambi_algebra_free(ambi_algebra* a)
{
    delete a;
}

ambi_status ambi_algebra_to_json(const ambi_algebra* a, char** out)
{
    return guarded(out, [&] { return dump(spec_to_json(*algebra_of(a))); });
}

ambi_status ambi_preset_list(char** out)
{
    return guarded(out, [&] {
        Json j;
        j["presets"] = preset_ids();
        return dump(j);
    });
}

ambi_status ambi_check_hopf(const ambi_algebra* a, char** out)
{
    return guarded(out, [&] {
        const auto& alg = algebra_of(a);
        return dump(hopf_report_to_json(*alg, check_hopf(*alg)));
    });
}

ambi_status ambi_classify(const ambi_algebra* a, const char* weight, long bound, char** out)
{
    return guarded(out, [&] {
        const auto& alg = algebra_of(a);
        const Weight m = weight_arg(alg, weight, "weight");
        Json j;
        j["weight"] = weight_to_json(m);
        const auto c = classify_dimension(*alg, m, bound_arg(bound));
        j.update(classification_to_json(c));
        return dump(j);
    });
}

ambi_status ambi_dim(const ambi_algebra* a, const char* weight, long bound, char** out)
{
    return guarded(out, [&] {
        const auto& alg = algebra_of(a);
        const auto d = simple_dimension(*alg, weight_arg(alg, weight, "weight"), bound_arg(bound));
        return dump(dim_summary_to_json({d.class_case, d.dim}));
    });
}

ambi_status ambi_simple(const ambi_algebra* a, const char* weight, long bound, int with_matrices, char** out)
{
    return guarded(out, [&] {
        const auto& alg = algebra_of(a);
        const Weight m = weight_arg(alg, weight, "weight");
        Json j = simple_to_json(simple_dimension(*alg, m, bound_arg(bound)));
        if (with_matrices) {
            j["module"] = module_to_json(build_simple(alg, m, bound_arg(bound)));
        }
        return dump(j);
    });
}

ambi_status ambi_tensor(const ambi_algebra* a, const char* left, const char* right, long bound, char** out)
{
    return guarded(out, [&] {
        const auto& alg = algebra_of(a);
        const Weight m = weight_arg(alg, left, "left weight");
        const Weight n = weight_arg(alg, right, "right weight");
        const auto cg = cg_decompose(alg, m, n, bound_arg(bound));
        Json j;
        j["left"] = weight_to_json(m);
        j["right"] = weight_to_json(n);
        j.update(cg_to_json(cg));
        return dump(j);
    });
}

ambi_status ambi_casimir(const ambi_algebra* a, const char* base, long j, char** out)
{
    return guarded(out, [&] {
        const auto& alg = algebra_of(a);
        const Weight m0 = weight_arg(alg, base, "base weight");
        const Scalar c = casimir_scalar(*alg, m0, j);
        Json r;
        r["base"] = weight_to_json(m0);
        r["j"] = j;
        r["highest_weight"] = weight_to_json(sigma_on_weight(m0, j));
        r["value"] = c.to_string();
        return dump(r);
    });
}

ambi_status ambi_decompose(const ambi_algebra* a, const char* module, long bound, char** out)
{
    return guarded(out, [&] {
        const auto& alg = algebra_of(a);
        const WeightModule v = module_from_json(alg, Json::parse(text_of(module, "module document")));
        Json j;
        j["dim"] = v.dim();
        j.update(summands_to_json(decompose_semisimple(v, bound_arg(bound))));
        return dump(j);
    });
}

} // extern "C"
