#include "dwred/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dwred {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

json group_to_json(const FiniteGroup& g) {
    json rows = json::array();
    for (int a = 0; a < g.order; ++a) {
        json row = json::array();
        for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
        rows.push_back(std::move(row));
    }
    return json{{"name", g.name}, {"order", g.order}, {"mult", rows}};
}

FiniteGroup group_from_json(const json& j) {
    std::string name = j.value("name", "group");
    if (!j.contains("mult")) throw std::runtime_error("group file: missing mult table");
    const json& rows = j.at("mult");
    std::vector<int> mult;
    for (const json& row : rows)
        for (const json& v : row) mult.push_back(v.get<int>());
    if (j.contains("order")) {
        long long n = j.at("order").get<long long>();
        if (n * n != (long long)mult.size())
            throw std::runtime_error("group file: order does not match table size");
    }
    return group_from_table(name, std::move(mult)); // throws naming the axiom
}

json cochain_to_json(const Cochain& c) {
    json entries = json::array();
    c.for_each_nonzero([&](const std::vector<int>& args, const Phase& p) {
        json e = json::array();
        for (int a : args) e.push_back(a);
        e.push_back(p.value().num());
        e.push_back(p.value().den());
        entries.push_back(std::move(e));
    });
    return json{{"group", c.group().name}, {"degree", c.degree()}, {"entries", entries}};
}

Cochain cochain_from_json(const json& j, const FiniteGroup& group, bool verify_cocycle) {
    int degree = j.at("degree").get<int>();
    if (degree < 1) throw std::runtime_error("cocycle file: degree must be >= 1");
    if (j.contains("group")) {
        std::string name = j.at("group").get<std::string>();
        if (name != group.name)
            throw std::runtime_error("cocycle file: group '" + name +
                                     "' does not match requested group '" + group.name + "'");
    }
    Cochain c(group, degree);
    for (const json& e : j.value("entries", json::array())) {
        if ((int)e.size() != degree + 2)
            throw std::runtime_error("cocycle file: entry arity mismatch");
        std::vector<int> args(degree);
        for (int i = 0; i < degree; ++i) args[i] = e[i].get<int>();
        long long num = e[degree].get<long long>();
        long long den = e[degree + 1].get<long long>();
        try {
            c.set(args, Phase(num, den));
        } catch (const std::invalid_argument& err) {
            throw std::runtime_error(std::string("cocycle file: ") + err.what());
        }
    }
    if (verify_cocycle && !is_cocycle(c))
        throw std::runtime_error("cocycle file: cochain fails the cocycle condition");
    return c;
}

json complex_to_json(const DeltaComplex& x) {
    json levels = json::object();
    for (int k = 1; k <= x.dimension(); ++k) {
        json lst = json::array();
        for (int s = 0; s < x.simplex_count(k); ++s) lst.push_back(x.faces(k, s));
        levels[std::to_string(k)] = std::move(lst);
    }
    json signs = json::array();
    for (int s = 0; s < x.top_count(); ++s) signs.push_back(x.sign(s));
    return json{{"name", x.name()},
                {"dimension", x.dimension()},
                {"vertices", x.vertex_count()},
                {"simplices", levels},
                {"signs", signs}};
}

DeltaComplex complex_from_json(const json& j) {
    int dim = j.at("dimension").get<int>();
    int vertices = j.at("vertices").get<int>();
    std::vector<std::vector<std::vector<int>>> faces(dim + 1);
    const json& levels = j.at("simplices");
    for (int k = 1; k <= dim; ++k) {
        auto it = levels.find(std::to_string(k));
        if (it == levels.end()) continue;
        for (const json& f : *it) faces[k].push_back(f.get<std::vector<int>>());
    }
    std::vector<int> signs = j.at("signs").get<std::vector<int>>();
    return DeltaComplex(j.value("name", "complex"), dim, vertices, std::move(faces),
                        std::move(signs));
}

json cyclotomic_to_json(const CyclotomicSum& v) {
    json terms = json::array();
    const auto& coeffs = v.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        terms.push_back(json::array({i, coeffs[i].num(), coeffs[i].den()}));
    }
    json out{{"conductor", v.conductor()}, {"terms", terms}};
    if (auto r = v.rational_value()) out["rational"] = r->str();
    auto z = v.to_complex();
    out["approx"] = json::array({z.real(), z.imag()});
    return out;
}

CyclotomicSum cyclotomic_from_json(const json& j) {
    int conductor = j.at("conductor").get<int>();
    CyclotomicSum v;
    for (const json& t : j.at("terms")) {
        long long power = t.at(0).get<long long>();
        Rational c(t.at(1).get<long long>(), t.at(2).get<long long>());
        v += CyclotomicSum::root_of_unity(Phase(power, conductor)).scaled(c);
    }
    return v;
}

json report_to_json(const DecompositionReport& r) {
    json per_class = json::array();
    for (const PerClassValue& p : r.per_class)
        per_class.push_back(json{{"rep", p.rep},
                                 {"centralizer_order", p.centralizer_order},
                                 {"value", cyclotomic_to_json(p.value)}});
    return json{{"lhs", cyclotomic_to_json(r.lhs)},
                {"rhs", cyclotomic_to_json(r.rhs)},
                {"equal", r.equal},
                {"per_class", per_class}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

bool looks_like_path(const std::string& s) {
    return s.find('/') != std::string::npos || s.find(".json") != std::string::npos;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::runtime_error("bad " + what + ": '" + s + "'");
    }
}

} // namespace

FiniteGroup resolve_group_spec(const std::string& spec) {
    std::string s = trim(spec);
    if (looks_like_path(s)) return group_from_json(load_json_file(s));
    try {
        return builtin_group(s);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

DeltaComplex resolve_space_spec(const std::string& spec) {
    std::string s = trim(spec);
    // product suffixes: "... x S1" (or "...xS1"), possibly repeated
    for (const char* suffix : {" x S1", "xS1"}) {
        std::size_t n = std::string(suffix).size();
        if (s.size() > n && s.compare(s.size() - n, n, suffix) == 0)
            return product_with_circle(resolve_space_spec(s.substr(0, s.size() - n)));
    }
    if (looks_like_path(s)) {
        DeltaComplex x = complex_from_json(load_json_file(s));
        ValidationReport rep = x.validate();
        if (!rep.ok) throw std::runtime_error("complex file rejected: " + rep.message);
        return x;
    }
    auto parts = split(s, ':');
    if (parts[0] == "circle" && parts.size() == 2)
        return circle(parse_int(parts[1], "circle vertex count"));
    if (parts[0] == "sphere" && parts.size() == 1) return sphere2();
    if (parts[0] == "surface" && parts.size() == 2)
        return surface(parse_int(parts[1], "genus"));
    if (parts[0] == "torusgrid" && parts.size() == 3)
        return torus_grid(parse_int(parts[1], "grid width"),
                          parse_int(parts[2], "grid height"));
    throw std::runtime_error("unknown space spec: '" + spec + "'");
}

Cochain resolve_cocycle_spec(const std::string& spec, const FiniteGroup& group,
                             int degree, bool verify_cocycle) {
    std::string s = trim(spec);
    if (s.empty() || s == "trivial") return zero_cochain(group, degree);
    auto parts = split(s, ':');
    if (parts[0] == "cyclic") {
        if (parts.size() != 3) throw std::runtime_error("cyclic cocycle spec needs cyclic:k:p");
        int k = parse_int(parts[1], "cyclic modulus");
        int p = parse_int(parts[2], "cyclic exponent");
        FiniteGroup zk = make_cyclic(k);
        if (group.order != zk.order || group.mult != zk.mult)
            throw std::runtime_error("cyclic:" + parts[1] + ":" + parts[2] +
                                     " lives on Z" + parts[1] + ", not on " + group.name);
        return cyclic_cocycle(k, p);
    }
    if (parts[0] == "inflate") {
        if (parts.size() < 2) throw std::runtime_error("inflate spec needs inflate:FILE");
        std::string path = s.substr(std::string("inflate:").size());
        json j = load_json_file(path);
        FiniteGroup target = j.at("target_group").is_string()
                                 ? resolve_group_spec(j.at("target_group").get<std::string>())
                                 : group_from_json(j.at("target_group"));
        Cochain base = j.at("cocycle").is_string()
                           ? resolve_cocycle_spec(j.at("cocycle").get<std::string>(), target,
                                                  degree, verify_cocycle)
                           : cochain_from_json(j.at("cocycle"), target, verify_cocycle);
        std::vector<int> images = j.at("images").get<std::vector<int>>();
        GroupHom hom = make_hom(group, target, std::move(images));
        return restrict_cochain(base, hom);
    }
    if (looks_like_path(s))
        return cochain_from_json(load_json_file(s), group, verify_cocycle);
    throw std::runtime_error("unknown cocycle spec: '" + spec + "'");
}

} // namespace dwred
