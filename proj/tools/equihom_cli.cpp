// Command line front end: verification, dualization, the homology
// invariants (borel, coborel, twisted-borel, tate), exactness checking and
// tree enumeration, with deterministic JSON or CSV reports.

#include "equihom/presentation.hpp"
#include "equihom/tate.hpp"
#include "equihom/trees.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using namespace equihom;
using nlohmann::ordered_json;

namespace {

// User error: bad flags, unusable input, degrees outside the trusted range.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string example;
    std::string input;
    std::string out;
    std::string format = "json";
    std::string degrees;
    bool d2 = true;
    u32 k_max = 0, l_max = 0, k_check = 4, n = 4;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write to '" + out_path + "'");
    f << text;
}

std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

ParsedInput load_input(const Options& o) {
    if (!o.example.empty() && !o.input.empty())
        throw UsageError("give either --example or --input, not both");
    if (!o.example.empty()) {
        auto p = example_pair(o.example);
        if (!p) {
            std::string names;
            for (const auto& n : example_names()) names += (names.empty() ? "" : ", ") + n;
            throw UsageError("unknown example '" + o.example + "' (known: " + names + ")");
        }
        ParsedInput in;
        in.kind = "left_module";
        in.algebra = std::move(p->algebra);
        in.module = std::move(p->module);
        return in;
    }
    if (!o.input.empty()) return load_presentation(o.input);
    throw UsageError("an input is required: --example NAME or --input FILE");
}

ordered_json input_desc(const Options& o) {
    ordered_json j;
    if (!o.example.empty()) j["example"] = o.example;
    else j["file"] = o.input;
    return j;
}

std::pair<AInfAlgebra, AInfModule> need_algebra_module(ParsedInput p) {
    if (p.kind == "algebra") {
        AInfModule m = trivial_module(p.algebra, ModuleSide::left);
        return {std::move(p.algebra), std::move(m)};
    }
    if (p.kind == "left_module") return {std::move(p.algebra), std::move(*p.module)};
    throw UsageError("this command needs an algebra or left_module document, got '" + p.kind +
                     "'");
}

std::optional<DegreeRange> parse_degrees(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t dots = s.find("..");
    if (dots == std::string::npos)
        throw UsageError("--degrees wants the form a..b, got '" + s + "'");
    DegreeRange r;
    try {
        size_t used = 0;
        r.lo = std::stoi(s.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument("");
        std::string rest = s.substr(dots + 2);
        r.hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw UsageError("--degrees wants the form a..b, got '" + s + "'");
    }
    if (r.hi < r.lo) throw UsageError("--degrees range is empty: '" + s + "'");
    return r;
}

ordered_json range_json(const DegreeRange& r) {
    ordered_json j;
    if (r.lo == INT_MIN) j["lo"] = nullptr;
    else j["lo"] = r.lo;
    if (r.hi == INT_MAX) j["hi"] = nullptr;
    else j["hi"] = r.hi;
    return j;
}

// Requested degrees must sit inside the trusted range; the default window
// is trusted intersected with the support.
DegreeRange resolve_window(const ChainComplex& cx, const std::optional<DegreeRange>& req) {
    const DegreeRange& t = cx.trusted;
    if (req) {
        if (t.empty() || req->lo < t.lo || req->hi > t.hi) {
            std::ostringstream ss;
            ss << "--degrees " << req->lo << ".." << req->hi
               << " leaves the trusted range (";
            if (t.empty()) ss << "empty";
            else {
                if (t.lo == INT_MIN) ss << "-inf";
                else ss << t.lo;
                ss << "..";
                if (t.hi == INT_MAX) ss << "+inf";
                else ss << t.hi;
            }
            ss << "); raise the caps or shrink the window";
            throw UsageError(ss.str());
        }
        return *req;
    }
    return {std::max(t.lo, cx.lo), std::min(t.hi, cx.hi)};
}

int emit_homology(const char* command, const Options& o, const ChainComplex& cx,
                  ordered_json params, const std::string& d2_word) {
    ordered_json rep;
    rep["command"] = command;
    rep["input"] = input_desc(o);
    for (auto& [k, v] : params.items()) rep[k] = v;
    rep["trusted"] = range_json(cx.trusted);
    if (o.d2) {
        if (auto f = check_d2(cx)) {
            std::cerr << "square-zero check failed at degree " << f->degree << ", column "
                      << f->column << (d2_word.empty() ? "" : " " + d2_word) << "\n";
            if (o.format == "json") {
                ordered_json d2;
                d2["degree"] = f->degree;
                d2["column"] = f->column;
                rep["d2"] = std::move(d2);
                rep["pass"] = false;
                emit(render(rep), o.out);
            } else {
                emit("degree,dimension,trusted\n", o.out);
            }
            return 1;
        }
        rep["d2"] = "ok";
    }
    DegreeRange window = resolve_window(cx, parse_degrees(o.degrees));
    rep["window"] = range_json(window);
    auto h = homology_dims(cx, window);
    if (o.format == "csv") {
        std::ostringstream ss;
        ss << "degree,dimension,trusted\n";
        for (const auto& [d, r] : h) ss << d << "," << r << ",1\n";
        emit(ss.str(), o.out);
        return 0;
    }
    ordered_json betti = ordered_json::array();
    for (const auto& [d, r] : h) {
        ordered_json row;
        row["degree"] = d;
        row["dim"] = r;
        betti.push_back(std::move(row));
    }
    rep["betti"] = std::move(betti);
    rep["pass"] = true;
    emit(render(rep), o.out);
    return 0;
}

int cmd_verify(const Options& o) {
    ParsedInput p = load_input(o);
    ordered_json rep;
    rep["command"] = "verify";
    rep["input"] = input_desc(o);
    rep["k_check"] = o.k_check;
    ordered_json results = ordered_json::array();
    bool pass = true;
    auto add = [&](const char* structure, const VerifyReport& r) {
        ordered_json e;
        e["structure"] = structure;
        e["pass"] = r.pass;
        e["checked"] = r.checked;
        if (!r.pass) {
            e["failure"] = r.what;
            e["witness"] = r.witness;
            e["residual"] = r.residual;
        }
        results.push_back(std::move(e));
        pass = pass && r.pass;
    };
    if (p.kind == "algebra") {
        add("algebra", verify_algebra(p.algebra, o.k_check));
    } else if (p.kind == "left_module" || p.kind == "right_module") {
        add("algebra", verify_algebra(p.algebra, o.k_check));
        add("module", verify_module(p.algebra, *p.module, o.k_check));
    } else if (p.kind == "coalgebra") {
        add("coalgebra", verify_coalgebra(*p.coalgebra, o.k_check));
    } else {
        add("coalgebra", verify_coalgebra(*p.coalgebra, o.k_check));
        add("comodule", verify_comodule(*p.coalgebra, *p.comodule, o.k_check));
    }
    rep["results"] = std::move(results);
    rep["pass"] = pass;
    if (o.format == "csv") {
        std::ostringstream ss;
        ss << "structure,pass,checked\n";
        for (const auto& e : rep["results"])
            ss << e["structure"].get<std::string>() << "," << (e["pass"].get<bool>() ? 1 : 0)
               << "," << e["checked"].get<u64>() << "\n";
        emit(ss.str(), o.out);
    } else {
        emit(render(rep), o.out);
    }
    return pass ? 0 : 1;
}

int cmd_dualize(const Options& o) {
    ParsedInput p = load_input(o);
    if (p.kind == "algebra") {
        emit(dump_coalgebra(dualize_algebra(p.algebra)), o.out);
        return 0;
    }
    if (p.kind == "coalgebra") {
        emit(dump_algebra(dualize_coalgebra(*p.coalgebra)), o.out);
        return 0;
    }
    if (p.kind == "left_module" || p.kind == "right_module") {
        emit(dump_comodule(dual_module(*p.module), dualize_algebra(p.algebra)), o.out);
        return 0;
    }
    throw UsageError("dualize supports algebra, coalgebra and module documents, got '" + p.kind +
                     "'");
}

int cmd_borel(const Options& o) {
    auto [a, m] = need_algebra_module(load_input(o));
    BarComplex b = borel_complex(a, m, o.k_max);
    ordered_json params;
    params["k_max"] = o.k_max;
    std::string word;
    return emit_homology("borel", o, b.cx, std::move(params), word);
}

int cmd_coborel(const Options& o) {
    auto [a, m] = need_algebra_module(load_input(o));
    CobarComplex c = coborel_complex(a, m, o.l_max);
    ordered_json params;
    params["l_max"] = o.l_max;
    std::string word;
    return emit_homology("coborel", o, c.cx, std::move(params), word);
}

int cmd_twisted(const Options& o) {
    auto [a, m] = need_algebra_module(load_input(o));
    TwistedComplex t = twisted_borel_complex(a, m, {o.k_max, o.l_max});
    ordered_json params;
    params["k_max"] = o.k_max;
    params["l_max"] = o.l_max;
    std::string word;
    return emit_homology("twisted-borel", o, t.cx, std::move(params), word);
}

int cmd_tate(const Options& o) {
    auto [a, m] = need_algebra_module(load_input(o));
    TateComplex t = tate_complex(a, m, {o.k_max, o.l_max});
    ordered_json params;
    params["k_max"] = o.k_max;
    params["l_max"] = o.l_max;
    std::string word = "(cone of the norm; lower block is the twisted complex shifted up)";
    return emit_homology("tate", o, t.cx, std::move(params), word);
}

int cmd_les_check(const Options& o) {
    auto [a, m] = need_algebra_module(load_input(o));
    TateComplex t = tate_complex(a, m, {o.k_max, o.l_max});
    DegreeRange window = resolve_window(t.cx, parse_degrees(o.degrees));
    auto nodes = tate_les_report(t, window);
    bool pass = true;
    for (const auto& n : nodes) pass = pass && (!n.checked || n.exact);
    if (o.format == "csv") {
        std::ostringstream ss;
        ss << "degree,node,checked,exact\n";
        for (const auto& n : nodes)
            ss << n.degree << "," << n.label << "," << (n.checked ? 1 : 0) << ","
               << (n.checked && n.exact ? 1 : 0) << "\n";
        emit(ss.str(), o.out);
        return pass ? 0 : 1;
    }
    ordered_json rep;
    rep["command"] = "les-check";
    rep["input"] = input_desc(o);
    rep["k_max"] = o.k_max;
    rep["l_max"] = o.l_max;
    rep["window"] = range_json(window);
    ordered_json rows = ordered_json::array();
    for (const auto& n : nodes) {
        ordered_json e;
        e["degree"] = n.degree;
        e["node"] = n.label;
        e["checked"] = n.checked;
        if (n.checked) {
            e["exact"] = n.exact;
            e["rank_in"] = n.rank_in;
            e["rank_out"] = n.rank_out;
            e["dim_mid"] = n.dim_mid;
        }
        rows.push_back(std::move(e));
    }
    rep["nodes"] = std::move(rows);
    rep["pass"] = pass;
    emit(render(rep), o.out);
    return pass ? 0 : 1;
}

int cmd_trees(const Options& o) {
    if (o.n < 2 || o.n > 10) throw UsageError("--n must lie in 2..10");
    auto ts = enumerate_trees(o.n);
    u32 trivalent = 0;
    std::map<u32, u32> by_codim;
    for (const auto& t : ts) {
        if (is_trivalent(t)) ++trivalent;
        ++by_codim[codimension(t)];
    }
    if (o.format == "csv") {
        std::ostringstream ss;
        ss << "codim,count\n";
        for (const auto& [c, k] : by_codim) ss << c << "," << k << "\n";
        emit(ss.str(), o.out);
        return 0;
    }
    auto wa = wall_adjacency(o.n);
    ordered_json rep;
    rep["command"] = "trees";
    rep["n"] = o.n;
    rep["total"] = ts.size();
    rep["trivalent"] = trivalent;
    rep["walls"] = wa.walls.size();
    rep["chambers"] = wa.chambers.size();
    ordered_json rows = ordered_json::array();
    for (const auto& [c, k] : by_codim) {
        ordered_json e;
        e["codim"] = c;
        e["count"] = k;
        rows.push_back(std::move(e));
    }
    rep["by_codim"] = std::move(rows);
    emit(render(rep), o.out);
    return 0;
}

void add_input_opts(CLI::App* sub, Options& o) {
    sub->add_option("--example", o.example, "built-in example (exterior1, trivial, z2, z3)");
    sub->add_option("--input", o.input, "presentation JSON file");
}

void add_report_opts(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_str("json");
    sub->add_option("--out", o.out, "write the report to this file instead of stdout");
}

void add_window_opts(CLI::App* sub, Options& o) {
    sub->add_option("--degrees", o.degrees,
                    "degree window a..b; must lie inside the trusted range");
    sub->add_flag("--check-d2,!--no-check-d2", o.d2,
                  "verify the assembled boundary squares to zero (default on)");
}

} // namespace

int main(int argc, char** argv) {
    auto start = std::chrono::steady_clock::now();
    CLI::App app{"Homology invariants of finitely presented module presentations over F2"};
    app.require_subcommand(1);
    Options o;

    CLI::App* verify = app.add_subcommand("verify", "check the structure relations");
    add_input_opts(verify, o);
    add_report_opts(verify, o);
    verify->add_option("--kcheck", o.k_check, "check relations on words up to this many letters")
        ->default_val(4);

    CLI::App* dualize = app.add_subcommand("dualize", "emit the dual presentation");
    add_input_opts(dualize, o);
    dualize->add_option("--out", o.out, "write the document to this file instead of stdout");

    CLI::App* borel = app.add_subcommand("borel", "bar-style invariant of the module");
    add_input_opts(borel, o);
    add_report_opts(borel, o);
    add_window_opts(borel, o);
    borel->add_option("--kmax", o.k_max, "cap on bar letters")->required();

    CLI::App* coborel = app.add_subcommand("coborel", "cobar-style invariant of the module");
    add_input_opts(coborel, o);
    add_report_opts(coborel, o);
    add_window_opts(coborel, o);
    coborel->add_option("--lmax", o.l_max, "cap on cobar letters")->required();

    CLI::App* twisted =
        app.add_subcommand("twisted-borel", "twisted bar-style invariant of the module");
    add_input_opts(twisted, o);
    add_report_opts(twisted, o);
    add_window_opts(twisted, o);
    twisted->add_option("--kmax", o.k_max, "cap on bar letters")->required();
    twisted->add_option("--lmax", o.l_max, "cap on emitted prefix letters")->required();

    CLI::App* tate = app.add_subcommand("tate", "cone of the norm map");
    add_input_opts(tate, o);
    add_report_opts(tate, o);
    add_window_opts(tate, o);
    tate->add_option("--kmax", o.k_max, "cap on bar letters")->required();
    tate->add_option("--lmax", o.l_max, "cap on cobar letters")->required();

    CLI::App* les = app.add_subcommand("les-check", "exactness of the cone homology triangle");
    add_input_opts(les, o);
    add_report_opts(les, o);
    les->add_option("--degrees", o.degrees,
                    "degree window a..b; must lie inside the trusted range");
    les->add_option("--kmax", o.k_max, "cap on bar letters")->required();
    les->add_option("--lmax", o.l_max, "cap on cobar letters")->required();

    CLI::App* trees = app.add_subcommand("trees", "associahedron face counts");
    add_report_opts(trees, o);
    trees->add_option("--n", o.n, "number of leaves (2..10)")->required();

    int rc = 0;
    try {
        app.parse(argc, argv);
        if (verify->parsed()) rc = cmd_verify(o);
        else if (dualize->parsed()) rc = cmd_dualize(o);
        else if (borel->parsed()) rc = cmd_borel(o);
        else if (coborel->parsed()) rc = cmd_coborel(o);
        else if (twisted->parsed()) rc = cmd_twisted(o);
        else if (tate->parsed()) rc = cmd_tate(o);
        else if (les->parsed()) rc = cmd_les_check(o);
        else if (trees->parsed()) rc = cmd_trees(o);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AssemblyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "elapsed_ms=" << ms << "\n";
    return rc;
}
