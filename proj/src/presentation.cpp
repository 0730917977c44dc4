#include "equihom/presentation.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace equihom {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& msg) {
    throw PresentationError(origin + ": " + path + ": " + msg);
}

void expect_object(const json& j, const std::string& origin, const std::string& path) {
    if (!j.is_object()) fail(origin, path, "expected an object");
}

void check_keys(const json& j, const std::string& origin, const std::string& path,
                const std::vector<std::string>& required,
                const std::vector<std::string>& optional) {
    for (const auto& k : required)
        if (!j.contains(k)) fail(origin, path, "missing key '" + k + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (std::find(required.begin(), required.end(), k) == required.end() &&
            std::find(optional.begin(), optional.end(), k) == optional.end())
            fail(origin, path, "unknown key '" + k + "'");
    }
}

std::string parse_name(const json& j, const std::string& origin, const std::string& path) {
    if (!j.is_string() || j.get<std::string>().empty())
        fail(origin, path, "expected a nonempty string");
    return j.get<std::string>();
}

struct NamedBasis {
    Basis basis;
    std::map<std::string, u16> index;
};

NamedBasis parse_basis(const json& j, const std::string& origin, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(origin, path, "expected a nonempty array");
    if (j.size() > 0xffff) fail(origin, path, "basis too large");
    NamedBasis nb;
    for (size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        expect_object(j[i], origin, p);
        check_keys(j[i], origin, p, {"name"}, {"degree"});
        std::string name = parse_name(j[i].at("name"), origin, p + ".name");
        if (nb.index.count(name)) fail(origin, p + ".name", "duplicate basis element '" + name + "'");
        int degree = 0;
        if (j[i].contains("degree")) {
            if (!j[i].at("degree").is_number_integer())
                fail(origin, p + ".degree", "expected an integer");
            degree = j[i].at("degree").get<int>();
        }
        nb.index[name] = static_cast<u16>(nb.basis.names.size());
        nb.basis.names.push_back(name);
        nb.basis.degrees.push_back(degree);
    }
    return nb;
}

u16 lookup(const NamedBasis& nb, const json& j, const std::string& origin,
           const std::string& path) {
    std::string name = parse_name(j, origin, path);
    auto it = nb.index.find(name);
    if (it == nb.index.end()) fail(origin, path, "unknown basis element '" + name + "'");
    return it->second;
}

std::vector<u16> lookup_word(const NamedBasis& nb, const json& j, const std::string& origin,
                             const std::string& path) {
    if (!j.is_array()) fail(origin, path, "expected an array");
    std::vector<u16> w;
    for (size_t i = 0; i < j.size(); ++i)
        w.push_back(lookup(nb, j[i], origin, path + "[" + std::to_string(i) + "]"));
    return w;
}

std::vector<u16> parse_support(const NamedBasis& nb, const json& j, const std::string& origin,
                               const std::string& path) {
    std::vector<u16> s = lookup_word(nb, j, origin, path);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        fail(origin, path, "repeated element");
    return s;
}

const json& member(const json& j, const char* k, const std::string& origin,
                   const std::string& path, bool want_array) {
    const json& v = j.at(k);
    if (want_array && !v.is_array()) fail(origin, path + "." + k, "expected an array");
    return v;
}

AInfAlgebra parse_algebra_doc(const json& j, const std::string& origin, const std::string& path) {
    expect_object(j, origin, path);
    check_keys(j, origin, path, {"kind", "name", "basis", "augmentation", "ops"}, {});
    if (j.at("kind") != "algebra") fail(origin, path + ".kind", "expected \"algebra\"");
    AInfAlgebra a;
    a.name = parse_name(j.at("name"), origin, path + ".name");
    NamedBasis nb = parse_basis(j.at("basis"), origin, path + ".basis");
    a.basis = nb.basis;
    a.aug = parse_support(nb, member(j, "augmentation", origin, path, true), origin,
                          path + ".augmentation");
    const json& ops = member(j, "ops", origin, path, true);
    for (size_t i = 0; i < ops.size(); ++i) {
        std::string p = path + ".ops[" + std::to_string(i) + "]";
        expect_object(ops[i], origin, p);
        check_keys(ops[i], origin, p, {"in", "out"}, {});
        AlgTerm t;
        t.in = lookup_word(nb, ops[i].at("in"), origin, p + ".in");
        if (t.in.empty()) fail(origin, p + ".in", "operation needs at least one input");
        t.out = lookup(nb, ops[i].at("out"), origin, p + ".out");
        a.mu[static_cast<u32>(t.in.size())].push_back(std::move(t));
    }
    return a;
}

AInfCoalgebra parse_coalgebra_doc(const json& j, const std::string& origin,
                                  const std::string& path) {
    expect_object(j, origin, path);
    check_keys(j, origin, path, {"kind", "name", "basis", "trivial_support", "ops"}, {});
    if (j.at("kind") != "coalgebra") fail(origin, path + ".kind", "expected \"coalgebra\"");
    AInfCoalgebra c;
    c.name = parse_name(j.at("name"), origin, path + ".name");
    NamedBasis nb = parse_basis(j.at("basis"), origin, path + ".basis");
    c.basis = nb.basis;
    c.triv = parse_support(nb, member(j, "trivial_support", origin, path, true), origin,
                           path + ".trivial_support");
    const json& ops = member(j, "ops", origin, path, true);
    for (size_t i = 0; i < ops.size(); ++i) {
        std::string p = path + ".ops[" + std::to_string(i) + "]";
        expect_object(ops[i], origin, p);
        check_keys(ops[i], origin, p, {"in", "out"}, {});
        CoalgTerm t;
        t.in = lookup(nb, ops[i].at("in"), origin, p + ".in");
        t.out = lookup_word(nb, ops[i].at("out"), origin, p + ".out");
        if (t.out.empty()) fail(origin, p + ".out", "operation needs at least one output");
        c.delta[static_cast<u32>(t.out.size())].push_back(std::move(t));
    }
    return c;
}

} // namespace

ParsedInput parse_presentation(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw PresentationError(origin + ": " + e.what());
    }
    expect_object(j, origin, "$");
    if (!j.contains("kind")) fail(origin, "$", "missing key 'kind'");
    std::string kind = parse_name(j.at("kind"), origin, "$.kind");
    ParsedInput out;
    out.kind = kind;
    if (kind == "algebra") {
        out.algebra = parse_algebra_doc(j, origin, "$");
        return out;
    }
    if (kind == "coalgebra") {
        out.coalgebra = parse_coalgebra_doc(j, origin, "$");
        return out;
    }
    if (kind == "left_module" || kind == "right_module") {
        check_keys(j, origin, "$", {"kind", "name", "algebra", "basis", "ops"}, {});
        out.algebra = parse_algebra_doc(j.at("algebra"), origin, "$.algebra");
        AInfModule m;
        m.name = parse_name(j.at("name"), origin, "$.name");
        m.side = kind == "left_module" ? ModuleSide::left : ModuleSide::right;
        NamedBasis nb = parse_basis(j.at("basis"), origin, "$.basis");
        m.basis = nb.basis;
        NamedBasis anb;
        anb.basis = out.algebra.basis;
        for (u16 i = 0; i < anb.basis.size(); ++i) anb.index[anb.basis.names[i]] = i;
        const json& ops = member(j, "ops", origin, "$", true);
        for (size_t i = 0; i < ops.size(); ++i) {
            std::string p = "$.ops[" + std::to_string(i) + "]";
            expect_object(ops[i], origin, p);
            check_keys(ops[i], origin, p, {"letters", "in", "out"}, {});
            ModTerm t;
            t.a = lookup_word(anb, ops[i].at("letters"), origin, p + ".letters");
            t.m_in = lookup(nb, ops[i].at("in"), origin, p + ".in");
            t.m_out = lookup(nb, ops[i].at("out"), origin, p + ".out");
            m.mu[static_cast<u32>(t.a.size())].push_back(std::move(t));
        }
        out.module = std::move(m);
        return out;
    }
    if (kind == "left_comodule" || kind == "right_comodule") {
        check_keys(j, origin, "$", {"kind", "name", "coalgebra", "basis", "ops"}, {});
        out.coalgebra = parse_coalgebra_doc(j.at("coalgebra"), origin, "$.coalgebra");
        AInfComodule n;
        n.name = parse_name(j.at("name"), origin, "$.name");
        n.side = kind == "left_comodule" ? ModuleSide::left : ModuleSide::right;
        NamedBasis nb = parse_basis(j.at("basis"), origin, "$.basis");
        n.basis = nb.basis;
        NamedBasis cnb;
        cnb.basis = out.coalgebra->basis;
        for (u16 i = 0; i < cnb.basis.size(); ++i) cnb.index[cnb.basis.names[i]] = i;
        const json& ops = member(j, "ops", origin, "$", true);
        for (size_t i = 0; i < ops.size(); ++i) {
            std::string p = "$.ops[" + std::to_string(i) + "]";
            expect_object(ops[i], origin, p);
            check_keys(ops[i], origin, p, {"in", "letters", "out"}, {});
            ComodTerm t;
            t.m_in = lookup(nb, ops[i].at("in"), origin, p + ".in");
            t.c = lookup_word(cnb, ops[i].at("letters"), origin, p + ".letters");
            t.m_out = lookup(nb, ops[i].at("out"), origin, p + ".out");
            n.delta[static_cast<u32>(t.c.size())].push_back(std::move(t));
        }
        out.comodule = std::move(n);
        return out;
    }
    fail(origin, "$.kind", "unknown kind '" + kind + "'");
}

ParsedInput load_presentation(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PresentationError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), path);
}

namespace {

ordered_json basis_json(const Basis& b) {
    ordered_json arr = ordered_json::array();
    for (u16 i = 0; i < b.size(); ++i) {
        ordered_json e;
        e["name"] = b.names[i];
        if (b.degree(i) != 0) e["degree"] = b.degree(i);
        arr.push_back(std::move(e));
    }
    return arr;
}

ordered_json names_json(const Basis& b, const std::vector<u16>& w) {
    ordered_json arr = ordered_json::array();
    for (u16 i : w) arr.push_back(b.names[i]);
    return arr;
}

ordered_json algebra_json(const AInfAlgebra& a) {
    ordered_json j;
    j["kind"] = "algebra";
    j["name"] = a.name;
    j["basis"] = basis_json(a.basis);
    j["augmentation"] = names_json(a.basis, a.aug);
    ordered_json ops = ordered_json::array();
    for (const auto& [arity, terms] : a.mu) {
        (void)arity;
        auto sorted = terms;
        std::sort(sorted.begin(), sorted.end(),
                  [](const AlgTerm& x, const AlgTerm& y) {
                      return std::tie(x.in, x.out) < std::tie(y.in, y.out);
                  });
        for (const AlgTerm& t : sorted) {
            ordered_json o;
            o["in"] = names_json(a.basis, t.in);
            o["out"] = a.basis.names[t.out];
            ops.push_back(std::move(o));
        }
    }
    j["ops"] = std::move(ops);
    return j;
}

ordered_json coalgebra_json(const AInfCoalgebra& c) {
    ordered_json j;
    j["kind"] = "coalgebra";
    j["name"] = c.name;
    j["basis"] = basis_json(c.basis);
    j["trivial_support"] = names_json(c.basis, c.triv);
    ordered_json ops = ordered_json::array();
    for (const auto& [len, terms] : c.delta) {
        (void)len;
        auto sorted = terms;
        std::sort(sorted.begin(), sorted.end(),
                  [](const CoalgTerm& x, const CoalgTerm& y) {
                      return std::tie(x.in, x.out) < std::tie(y.in, y.out);
                  });
        for (const CoalgTerm& t : sorted) {
            ordered_json o;
            o["in"] = c.basis.names[t.in];
            o["out"] = names_json(c.basis, t.out);
            ops.push_back(std::move(o));
        }
    }
    j["ops"] = std::move(ops);
    return j;
}

std::string finish(ordered_json j) { return j.dump(2) + "\n"; }

} // namespace

std::string dump_algebra(const AInfAlgebra& a) { return finish(algebra_json(a)); }

std::string dump_coalgebra(const AInfCoalgebra& c) { return finish(coalgebra_json(c)); }

std::string dump_module(const AInfModule& m, const AInfAlgebra& a) {
    ordered_json j;
    j["kind"] = m.side == ModuleSide::left ? "left_module" : "right_module";
    j["name"] = m.name;
    j["algebra"] = algebra_json(a);
    j["basis"] = basis_json(m.basis);
    ordered_json ops = ordered_json::array();
    for (const auto& [count, terms] : m.mu) {
        (void)count;
        auto sorted = terms;
        std::sort(sorted.begin(), sorted.end(),
                  [](const ModTerm& x, const ModTerm& y) {
                      return std::tie(x.a, x.m_in, x.m_out) < std::tie(y.a, y.m_in, y.m_out);
                  });
        for (const ModTerm& t : sorted) {
            ordered_json o;
            o["letters"] = names_json(a.basis, t.a);
            o["in"] = m.basis.names[t.m_in];
            o["out"] = m.basis.names[t.m_out];
            ops.push_back(std::move(o));
        }
    }
    j["ops"] = std::move(ops);
    return finish(std::move(j));
}

std::string dump_comodule(const AInfComodule& n, const AInfCoalgebra& c) {
    ordered_json j;
    j["kind"] = n.side == ModuleSide::left ? "left_comodule" : "right_comodule";
    j["name"] = n.name;
    j["coalgebra"] = coalgebra_json(c);
    j["basis"] = basis_json(n.basis);
    ordered_json ops = ordered_json::array();
    for (const auto& [count, terms] : n.delta) {
        (void)count;
        auto sorted = terms;
        std::sort(sorted.begin(), sorted.end(),
                  [](const ComodTerm& x, const ComodTerm& y) {
                      return std::tie(x.m_in, x.c, x.m_out) < std::tie(y.m_in, y.c, y.m_out);
                  });
        for (const ComodTerm& t : sorted) {
            ordered_json o;
            o["in"] = n.basis.names[t.m_in];
            o["letters"] = names_json(c.basis, t.c);
            o["out"] = n.basis.names[t.m_out];
            ops.push_back(std::move(o));
        }
    }
    j["ops"] = std::move(ops);
    return finish(std::move(j));
}

std::vector<std::string> example_names() { return {"exterior1", "trivial", "z2", "z3"}; }

std::optional<ExamplePair> example_pair(const std::string& name) {
    AInfAlgebra a;
    if (name == "z2") a = make_z2();
    else if (name == "z3") a = make_z3();
    else if (name == "trivial") a = make_trivial_group();
    else if (name == "exterior1") a = exterior_algebra_rank1(1);
    else return std::nullopt;
    AInfModule m = trivial_module(a, ModuleSide::left);
    return ExamplePair{std::move(a), std::move(m)};
}

} // namespace equihom
