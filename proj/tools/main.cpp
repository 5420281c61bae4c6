#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ambiskew/ambiskew.h"

namespace {

using Json = nlohmann::ordered_json;

int exit_code(ambi_status s)
{
    switch (s) {
    case AMBI_OK:
        return 0;
    case AMBI_REFUSED:
        return 1;
    case AMBI_PARSE_ERROR:
    case AMBI_INVALID_ARGUMENT:
        return 2;
    case AMBI_INTERNAL:
        break;
    }
    return 3;
}

const char* status_name(ambi_status s)
{
    switch (s) {
    case AMBI_OK:
        return "ok";
    case AMBI_REFUSED:
        return "refused";
    case AMBI_PARSE_ERROR:
        return "parse_error";
    case AMBI_INVALID_ARGUMENT:
        return "invalid_argument";
    case AMBI_INTERNAL:
        break;
    }
    return "internal";
}

int report_error(ambi_status s, const std::string& message)
{
    Json j;
    j["error"] = message;
    j["status"] = status_name(s);
    std::cout << j.dump(2) << "\n";
    return exit_code(s);
}

int finish(ambi_status s, char* out = nullptr)
{
    if (s != AMBI_OK) {
        return report_error(s, ambi_last_error());
    }
    std::cout << out;
    ambi_string_free(out);
    return 0;
}

bool read_file(const std::string& path, std::string& text)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    return true;
}

struct Handle {
    ambi_algebra* a = nullptr;
    bool unreadable = false;
    ~Handle() { ambi_algebra_free(a); }
};

// A spec file path, or preset:<id>[:key=value,...].
ambi_status load_spec(const std::string& arg, Handle& h)
{
    if (arg.rfind("preset:", 0) == 0) {
        const std::string rest = arg.substr(7);
        const auto colon = rest.find(':');
        const std::string id = rest.substr(0, colon);
        const std::string params = colon == std::string::npos ? "" : rest.substr(colon + 1);
        return ambi_algebra_from_preset(id.c_str(), params.c_str(), &h.a);
    }
    std::string text;
    if (!read_file(arg, text)) {
        h.unreadable = true;
        return AMBI_PARSE_ERROR;
    }
    return ambi_algebra_from_json(text.c_str(), &h.a);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in ambiskew polynomial rings with Hopf structure"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ambi_version()));

    std::string spec;
    std::string weight;
    std::string left;
    std::string right;
    std::string module_path;
    std::string preset_id;
    std::string preset_params;
    long bound = 1000;
    long j = 0;
    bool matrices = false;

    const auto add_spec = [&](CLI::App* c) {
        c->add_option("spec", spec, "Spec document (JSON file) or preset:<id>[:key=value,...]")->required();
    };
    const auto add_bound = [&](CLI::App* c) {
        c->add_option("--bound", bound, "Search bound for the finiteness scan")->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check-hopf", "Check the Hopf conditions");
    add_spec(check);

    auto* classify = app.add_subcommand("classify", "Classify the simple module of a highest weight");
    add_spec(classify);
    classify->add_option("--weight", weight, "Weight, e.g. {\"K\":\"q^3\"}")->required();
    add_bound(classify);

    auto* dim = app.add_subcommand("dim", "Dimension of the simple module of a highest weight");
    add_spec(dim);
    dim->add_option("--weight", weight, "Weight, e.g. {\"K\":\"q^3\"}")->required();
    add_bound(dim);

    auto* simple = app.add_subcommand("simple", "Describe a simple module");
    add_spec(simple);
    simple->add_option("--weight", weight, "Highest weight")->required();
    simple->add_flag("--matrices", matrices, "Include the matrices of X+ and X-");
    add_bound(simple);

    auto* tensor = app.add_subcommand("tensor", "Clebsch-Gordan decomposition of a tensor product");
    add_spec(tensor);
    tensor->add_option("--left", left, "Highest weight of the left factor")->required();
    tensor->add_option("--right", right, "Highest weight of the right factor")->required();
    add_bound(tensor);

    auto* casimir = app.add_subcommand("casimir", "Casimir scalar on L(base + j)");
    add_spec(casimir);
    casimir->add_option("--base", weight, "Base weight in G0")->required();
    casimir->add_option("--j", j, "Offset")->required();

    auto* decompose = app.add_subcommand("decompose", "Decompose a finite-dimensional weight module");
    add_spec(decompose);
    decompose->add_option("--module", module_path, "WeightModule document (JSON file)")->required();
    add_bound(decompose);

    auto* preset = app.add_subcommand("preset", "List or emit presets");
    preset->require_subcommand(1);
    auto* list = preset->add_subcommand("list", "List preset ids");
    auto* emit = preset->add_subcommand("emit", "Emit the spec document of a preset");
    emit->add_option("id", preset_id, "Preset id")->required();
    emit->add_option("--params", preset_params, "key=value,... (q_order, alpha, M, p, r, s, t, p2, r2, s2, t2, rho, lambda)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    char* out = nullptr;
    if (list->parsed()) {
        const auto s = ambi_preset_list(&out);
        return finish(s, out);
    }
    if (emit->parsed()) {
        Handle h;
        if (auto s = ambi_algebra_from_preset(preset_id.c_str(), preset_params.c_str(), &h.a); s != AMBI_OK) {
            return finish(s, nullptr);
        }
        const auto s = ambi_algebra_to_json(h.a, &out);
        return finish(s, out);
    }

    Handle h;
    if (auto s = load_spec(spec, h); s != AMBI_OK) {
        if (h.unreadable) {
            return report_error(s, "cannot read spec file '" + spec + "'");
        }
        return finish(s, nullptr);
    }

    if (check->parsed()) {
        const auto s = ambi_check_hopf(h.a, &out);
        if (s != AMBI_OK) {
            return finish(s, out);
        }
        const bool overall = Json::parse(out)["overall"].get<bool>();
        finish(s, out);
        return overall ? 0 : 1;
    }
    if (classify->parsed()) {
        const auto s = ambi_classify(h.a, weight.c_str(), bound, &out);
        return finish(s, out);
    }
    if (dim->parsed()) {
        const auto s = ambi_dim(h.a, weight.c_str(), bound, &out);
        return finish(s, out);
    }
    if (simple->parsed()) {
        const auto s = ambi_simple(h.a, weight.c_str(), bound, matrices ? 1 : 0, &out);
        return finish(s, out);
    }
    if (tensor->parsed()) {
        const auto s = ambi_tensor(h.a, left.c_str(), right.c_str(), bound, &out);
        return finish(s, out);
    }
    if (casimir->parsed()) {
        const auto s = ambi_casimir(h.a, weight.c_str(), j, &out);
        return finish(s, out);
    }
    if (decompose->parsed()) {
        std::string text;
        if (!read_file(module_path, text)) {
            return report_error(AMBI_PARSE_ERROR, "cannot read module file '" + module_path + "'");
        }
        const auto s = ambi_decompose(h.a, text.c_str(), bound, &out);
        return finish(s, out);
    }
    return 2;
}
