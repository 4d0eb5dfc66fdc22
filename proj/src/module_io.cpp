#include "fim/module_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fim {

Json group_to_json(const GroupTable& g) {
    return Json{{"order", g.order()}, {"mult", g.table()}, {"generators", g.generators()}};
}

GroupPtr group_from_json(const Json& j) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "trivial") return GroupTable::trivial();
        throw std::invalid_argument("unknown group reference '" + name + "'");
    }
    auto mult = j.at("mult").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != mult.size())
        throw std::invalid_argument("group order does not match the table");
    auto gens = j.at("generators").get<std::vector<int>>();
    auto g = std::make_shared<const GroupTable>(std::move(mult), std::move(gens));
    if (g->is_trivial() && g->generators().empty()) return GroupTable::trivial();
    return g;
}

Json matrix_to_json(const Matrix& a) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix has the wrong number of rows");
    Matrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols) throw std::invalid_argument("matrix row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& x = row[c];
            a(r, c) = x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>());
        }
    }
    return a;
}

std::string object_key(const ObjectIndex& n) { return to_string(n); }

Json object_to_json(const ObjectIndex& n) { return n.coords(); }

ObjectIndex object_from_json(const Json& j) { return ObjectIndex(j.get<std::vector<int>>()); }

Json module_to_json(const TruncatedModule& v) {
    Json j;
    j["m"] = v.m();
    j["group_ref"] = v.group().is_trivial() ? Json("trivial") : group_to_json(v.group());
    j["window"] = object_to_json(v.window().bound());
    Json dims = Json::object();
    for (const auto& n : v.window().objects()) dims[object_key(n)] = v.dim(n);
    j["dims"] = dims;
    Json actions = Json::array();
    for (const auto& g : generators(v.window(), v.group())) {
        const Matrix& a = v.generator_matrix(g);
        if (a.rows() == 0 || a.cols() == 0) continue;
        Json gen;
        switch (g.kind) {
            case Generator::Kind::Inclusion: gen["incl"] = g.coord + 1; break;
            case Generator::Kind::Swap: gen["swap"] = {g.coord + 1, g.k + 1}; break;
            case Generator::Kind::Group: gen["group"] = g.group_gen; break;
        }
        gen["at"] = object_to_json(g.at);
        actions.push_back(Json{{"gen", gen}, {"matrix", matrix_to_json(a)}});
    }
    j["actions"] = actions;
    if (v.presentation()) {
        Json p;
        Json slots = Json::array();
        for (const auto& n : v.presentation()->generator_slots) slots.push_back(object_to_json(n));
        p["generators"] = slots;
        p["relation_bound"] = v.presentation()->relation_bound ? object_to_json(*v.presentation()->relation_bound) : Json();
        j["presentation"] = p;
    }
    return j;
}

TruncatedModule module_from_json(const Json& j) {
    const int m = j.at("m").get<int>();
    const GroupPtr group = group_from_json(j.contains("group_ref") ? j.at("group_ref") : Json("trivial"));
    const Window window(object_from_json(j.at("window")));
    if (window.m() != m) throw std::invalid_argument("window arity differs from m");
    std::vector<std::size_t> dims;
    const auto& jd = j.at("dims");
    for (const auto& n : window.objects()) {
        const auto key = object_key(n);
        dims.push_back(jd.contains(key) ? jd.at(key).get<std::size_t>() : 0);
    }
    TruncatedModule v(window, group, dims);
    for (const auto& act : j.at("actions")) {
        const auto& gen = act.at("gen");
        Generator g{Generator::Kind::Inclusion, object_from_json(gen.at("at")), 0, 0, 0};
        if (g.at.m() != m || !window.contains(g.at)) throw std::invalid_argument("action source outside the window");
        if (gen.contains("incl")) {
            g.coord = gen.at("incl").get<int>() - 1;
            if (g.coord < 0 || g.coord >= m) throw std::invalid_argument("inclusion coordinate out of range");
        } else if (gen.contains("swap")) {
            g.kind = Generator::Kind::Swap;
            g.coord = gen.at("swap").at(0).get<int>() - 1;
            g.k = gen.at("swap").at(1).get<int>() - 1;
            if (g.coord < 0 || g.coord >= m || g.k < 0 || g.k + 1 >= g.at[g.coord])
                throw std::invalid_argument("transposition out of range");
        } else if (gen.contains("group")) {
            g.kind = Generator::Kind::Group;
            g.group_gen = gen.at("group").get<int>();
            if (g.group_gen < 0 || g.group_gen >= static_cast<int>(group->generators().size()))
                throw std::invalid_argument("group generator out of range");
        } else {
            throw std::invalid_argument("unknown generator descriptor");
        }
        const auto target = to_morphism(g, *group).target;
        if (!window.contains(target)) throw std::invalid_argument("action target outside the window");
        v.set_generator_matrix(g, matrix_from_json(act.at("matrix"), v.dim(target), v.dim(g.at)));
    }
    if (j.contains("presentation") && !j.at("presentation").is_null()) {
        const auto& jp = j.at("presentation");
        Presentation p;
        for (const auto& n : jp.at("generators")) p.generator_slots.push_back(object_from_json(n));
        if (jp.contains("relation_bound") && !jp.at("relation_bound").is_null())
            p.relation_bound = object_from_json(jp.at("relation_bound"));
        v.set_presentation(std::move(p));
    }
    return v;
}

void save_module(const TruncatedModule& v, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << module_to_json(v).dump(1) << "\n";
}

TruncatedModule load_module(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return module_from_json(Json::parse(in));
}

}  // namespace fim
