// fimlab: command-line driver for the fim library.
//
// Every command prints a JSON report on stdout. Exit codes: 0 success, 1 a check or
// verification failed, 2 bad input or an error during computation.

#include "fim/functors.hpp"
#include "fim/homology.hpp"
#include "fim/lab.hpp"
#include "fim/module_io.hpp"
#include "fim/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using fim::Json;

struct GlobalOptions {
    std::uint32_t seed = 1;
    std::vector<int> window{3};
    std::string group = "trivial";
};

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
        out.push_back(value);
    }
    return out;
}

fim::ObjectIndex parse_object(const std::string& text) { return fim::ObjectIndex(parse_ints(text)); }

/// "1,2" (1-based) -> {0, 1}.
fim::CoordSet parse_coords(const std::string& text) {
    fim::CoordSet out;
    for (int c : parse_ints(text)) out.push_back(c - 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// Shapes per coordinate separated by ';', parts by ','. "2,1;" is ((2,1), ()).
std::vector<fim::Partition> parse_shapes(const std::string& text) {
    std::vector<fim::Partition> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) out.emplace_back(parse_ints(item));
    if (!text.empty() && text.back() == ';') out.emplace_back();
    return out;
}

fim::GroupPtr parse_group(const std::string& text) {
    if (text == "trivial") return fim::GroupTable::trivial();
    if (text.size() >= 2 && (text[0] == 'S' || text[0] == 'C') &&
        text.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int n = std::stoi(text.substr(1));
        return text[0] == 'S' ? fim::GroupTable::symmetric(n) : fim::GroupTable::cyclic(n);
    }
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("unknown group: " + text);
    return fim::group_from_json(Json::parse(in));
}

Json coords_json(const fim::CoordSet& s) {
    Json out = Json::array();
    for (int c : s) out.push_back(c + 1);
    return out;
}

Json family_dims(const fim::TruncatedModule& v, const fim::SubspaceFamily& f) {
    Json out = Json::object();
    for (std::size_t idx = 0; idx < f.size(); ++idx)
        if (f[idx].dim() > 0) out[fim::object_key(v.window().object(idx))] = f[idx].dim();
    return out;
}

Json dims_json(const fim::TruncatedModule& v) {
    Json out = Json::object();
    for (std::size_t idx = 0; idx < v.window().size(); ++idx) out[fim::object_key(v.window().object(idx))] = v.dim_at(idx);
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_module(const fim::TruncatedModule& v, const std::string& out) {
    if (out.empty() || out == "-")
        emit(fim::module_to_json(v));
    else {
        fim::save_module(v, out);
        emit(Json{{"written", out}, {"dims", dims_json(v)}});
    }
}

Json homology_json(const fim::TruncatedModule& v, const fim::HomologyReport& r) {
    Json h0 = Json::object(), h1 = Json::object();
    for (const auto& [s, d] : r.h0_slices) h0[fim::object_key(s)] = d;
    for (const auto& [s, d] : r.h1_slices) h1[fim::object_key(s)] = d;
    Json h0_dims = Json::object(), h1_dims = Json::object();
    for (std::size_t idx = 0; idx < v.window().size(); ++idx) {
        const std::string key = fim::object_key(v.window().object(idx));
        if (r.h0_dims[idx]) h0_dims[key] = r.h0_dims[idx];
        if (r.h1_dims[idx]) h1_dims[key] = r.h1_dims[idx];
    }
    return Json{{"S", coords_json(r.coords)}, {"h0_dims", h0_dims}, {"h1_dims", h1_dims}, {"h0_slices", h0},
                {"h1_slices", h1}, {"t0", r.t0}, {"t1", r.t1}, {"status", fim::to_string(r.status)}};
}

Json suite_json(const fim::SuiteResult& r) {
    return Json{{"suite", r.name},         {"description", r.description}, {"passed", r.passed},
                {"checks", r.checks},      {"seconds", r.seconds},         {"limit_seconds", r.limit_seconds},
                {"failures", r.failures},  {"notes", r.notes}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with truncated FI^m-modules over Q"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file with seed, window and group");
    GlobalOptions global;
    app.add_option("--seed", global.seed, "seed for random batteries");
    app.add_option("--window", global.window, "window bound, e.g. 3,3")->delimiter(',');
    app.add_option("--group", global.group, "trivial, S<n>, C<n> or a group JSON file");

    int exit_code = 0;
    std::string input, output;
    std::string coords_text = "1";

    auto load = [&] { return fim::share(fim::load_module(input)); };

    // validate
    auto* validate = app.add_subcommand("validate", "check a module file");
    validate->add_option("module", input)->required();
    validate->callback([&] {
        const fim::ValidationReport r = fim::validate(fim::load_module(input));
        emit(Json{{"ok", r.ok}, {"failure", r.failure}});
        exit_code = r.ok ? 0 : 1;
    });

    // build
    auto* build = app.add_subcommand("build", "construct a module");
    std::string kind, object_text, shapes_text, left, right, rep_text = "regular";
    build->add_option("kind", kind, "free|point|induced|cofree|coinduced|tensor|sum")
        ->required()
        ->check(CLI::IsMember({"free", "point", "induced", "cofree", "coinduced", "tensor", "sum"}));
    build->add_option("--n", object_text, "object for free/cofree, e.g. 1,2");
    build->add_option("--shapes", shapes_text, "partitions per coordinate for induced/coinduced, e.g. '2,1;1'");
    build->add_option("--rep", rep_text, "group representation for induced/coinduced")
        ->check(CLI::IsMember({"regular", "trivial"}));
    build->add_option("--left", left, "first factor (tensor, sum)");
    build->add_option("--right", right, "second factor (tensor, sum)");
    build->add_option("-o,--output", output, "output file, stdout when omitted");
    build->callback([&] {
        const fim::GroupPtr group = parse_group(global.group);
        const fim::Window window{fim::ObjectIndex(global.window)};
        const auto rep = rep_text == "trivial" ? fim::GroupRep::Trivial : fim::GroupRep::Regular;
        fim::TruncatedModule v = [&]() -> fim::TruncatedModule {
            if (kind == "free") return fim::make_free(parse_object(object_text), window, group);
            if (kind == "point") return fim::make_point(window, group);
            if (kind == "cofree") return fim::make_cofree(parse_object(object_text), window, group);
            if (kind == "induced") return fim::make_induced(parse_shapes(shapes_text), window, group, rep);
            if (kind == "coinduced") return fim::make_coinduced(parse_shapes(shapes_text), window, group, rep);
            if (left.empty() || right.empty()) throw std::invalid_argument(kind + " needs --left and --right");
            const auto a = fim::load_module(left);
            const auto b = fim::load_module(right);
            return kind == "tensor" ? fim::external_tensor(a, b) : fim::direct_sum(a, b);
        }();
        write_module(v, output);
    });

    // shift / derivative / kernel
    int power = 1;
    for (const std::string name : {"shift", "derivative", "kernel"}) {
        auto* cmd = app.add_subcommand(name, name + " functor in the given coordinates");
        cmd->add_option("module", input)->required();
        cmd->add_option("-i,--S", coords_text, "coordinates, 1-based, e.g. 1 or 1,2");
        cmd->add_option("-o,--output", output, "output file, stdout when omitted");
        if (name == "shift") cmd->add_option("--n", power, "shift each coordinate n times");
        cmd->callback([&, name] {
            const auto v = fim::load_module(input);
            const fim::CoordSet s = parse_coords(coords_text);
            if (name == "shift") write_module(fim::shift_prod(v, s, power), output);
            else if (name == "derivative") write_module(fim::derivative_sum(v, s), output);
            else write_module(fim::kernel_sum(v, s), output);
        });
    }

    // homology
    auto* homology = app.add_subcommand("homology", "S-homology H0 and H1 with t0, t1");
    homology->add_option("module", input)->required();
    homology->add_option("--S", coords_text, "coordinates, 1-based");
    homology->callback([&] {
        const auto v = load();
        emit(homology_json(*v, fim::homology(v, parse_coords(coords_text))));
    });

    // torsion
    auto* torsion = app.add_subcommand("torsion", "detected S-torsion per object");
    torsion->add_option("module", input)->required();
    torsion->add_option("--S", coords_text, "coordinates, 1-based");
    torsion->callback([&] {
        const auto v = fim::load_module(input);
        const auto s = parse_coords(coords_text);
        const fim::TorsionVerdict t = fim::detect_torsion(v, s);
        emit(Json{{"S", coords_json(s)},
                  {"torsion_dims", family_dims(v, t.torsion)},
                  {"total", t.total_dim()},
                  {"status", fim::to_string(t.status)}});
    });

    // shift-theorem
    auto* theorem = app.add_subcommand("shift-theorem", "smallest shift that is S-semi-induced");
    int max_n = 4;
    theorem->add_option("module", input)->required();
    theorem->add_option("--S", coords_text, "coordinates, 1-based");
    theorem->add_option("--max-n", max_n, "largest shift tried");
    theorem->callback([&] {
        const auto v = load();
        const auto s = parse_coords(coords_text);
        const fim::ShiftSearchResult r = fim::shift_theorem_search(v, s, max_n);
        Json log = Json::array();
        for (const auto& step : r.log)
            log.push_back(Json{{"n", step.n},
                               {"torsion_dim", step.torsion_dim},
                               {"t0", step.t0},
                               {"t1", step.t1},
                               {"semi_induced", step.semi_induced},
                               {"status", fim::to_string(step.status)}});
        Json filtration = Json::array();
        for (const auto& step : r.certificate.filtration) filtration.push_back(fim::object_key(step.s));
        emit(Json{{"S", coords_json(s)},
                  {"N", r.N ? Json(*r.N) : Json(nullptr)},
                  {"status", fim::to_string(r.status)},
                  {"recertified", r.recertified},
                  {"filtration_slices", filtration},
                  {"log", log}});
        exit_code = r.N ? 0 : 1;
    });

    // cogenerate
    auto* cogen = app.add_subcommand("cogenerate", "embed into a finite sum of injectives");
    cogen->add_option("module", input)->required();
    cogen->callback([&] {
        const fim::CogenerationWitness w = fim::cogenerate(load(), global.seed);
        Json targets = Json::array();
        for (const auto& t : w.targets) targets.push_back(t.describe());
        emit(Json{{"targets", targets},
                  {"verified", w.verified},
                  {"status", fim::to_string(w.status)},
                  {"reason", w.reason}});
        exit_code = w.verified ? 0 : 1;
    });

    // endring
    auto* endring = app.add_subcommand("endring", "endomorphism algebra and locality");
    endring->add_option("module", input)->required();
    endring->callback([&] {
        const fim::EndRingData e = fim::end_ring(load(), global.seed);
        emit(Json{{"dim", e.dim()},
                  {"radical_dim", e.radical_dim},
                  {"is_local", e.is_local},
                  {"idempotent_found", e.idempotent.has_value()},
                  {"commutative", e.algebra.is_commutative()},
                  {"status", fim::to_string(e.status)},
                  {"reason", e.reason}});
    });

    // ext1
    auto* ext = app.add_subcommand("ext1", "dimension of Ext^1(V, I)");
    std::string target;
    ext->add_option("module", input)->required();
    ext->add_option("target", target)->required();
    ext->callback([&] {
        const fim::Ext1Report r = fim::ext1(load(), fim::share(fim::load_module(target)));
        emit(Json{{"dim", r.dim},
                  {"hom_v", r.hom_v},
                  {"hom_cover", r.hom_p},
                  {"hom_kernel", r.hom_k},
                  {"status", fim::to_string(r.status)}});
    });

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run acceptance suites");
    std::string suite = "all";
    std::vector<std::string> names;
    for (const auto& info : fim::suites()) names.push_back(info.name);
    names.push_back("all");
    verify->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(names));
    verify->callback([&] {
        Json reports = Json::array();
        for (const auto& info : fim::suites()) {
            if (suite != "all" && suite != info.name) continue;
            const fim::SuiteResult r = fim::run_suite(info.name, fim::SuiteConfig{global.seed});
            reports.push_back(suite_json(r));
            if (!r.passed) {
                exit_code = 1;
                break;
            }
        }
        emit(Json{{"passed", exit_code == 0}, {"seed", global.seed}, {"suites", reports}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        emit(Json{{"error", e.what()}});
        return 2;
    }
    return exit_code;
}
