// reflexkit: command-line front end.
//
// Exit codes: 0 success, 1 theorem violation, 2 parse error, 3 precondition
// violation. Errors are reported on stderr as a single JSON object.

#include "reflexkit/reflexkit.hpp"
#include "reflexkit/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rk = reflexkit;
using rk::report::Json;

namespace {

enum Exit { ok = 0, violation = 1, parse_failure = 2, precondition = 3 };

struct Options {
    std::string command;
    std::string file;
    bool text = false;
    bool quiet = false;
    bool strict = false;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    int box = 3;
    std::string out_dir;
};

unsigned default_jobs() {
    if (const char* env = std::getenv("REFLEXKIT_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid REFLEXKIT_JOBS='" << env << "'\n";
    }
    return 1;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw rk::PreconditionError("unreadable_file", "cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

std::vector<rk::Polytope> load(const Options& o) {
    const auto raws = rk::read_polytopes(read_input(o.file), o.strict ? rk::ReadMode::strict : rk::ReadMode::lenient);
    std::vector<rk::Polytope> out;
    for (std::size_t i = 0; i < raws.size(); ++i) {
        rk::Polytope p = rk::to_polytope(raws[i]);
        if (o.seed) {
            std::mt19937_64 rng(*o.seed + i);
            p = p.transformed(rk::random_unimodular(p.dim(), rng));
        }
        out.push_back(std::move(p));
    }
    return out;
}

void print(const Options& o, const Json& j) {
    if (!o.quiet) std::cout << j.dump(2) << '\n';
}

template <class Fn>
std::vector<Json> per_polytope(const Options& o, const std::vector<rk::Polytope>& ps, Fn fn) {
    std::vector<Json> out(ps.size());
    rk::parallel_for(ps.size(), o.jobs, [&](std::size_t i) { out[i] = fn(ps[i]); });
    return out;
}

Json as_array(std::vector<Json> items) {
    Json a = Json::array();
    for (auto& j : items) a.push_back(std::move(j));
    return a;
}

int run_analyze(const Options& o) {
    const auto ps = load(o);
    auto reports = per_polytope(o, ps, [](const rk::Polytope& p) { return rk::report::analyze(p); });
    if (o.quiet) return ok;
    if (!o.text) {
        print(o, as_array(std::move(reports)));
        return ok;
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const Json& r = reports[i];
        std::cout << "polytope " << i << ": dim " << r["dimension"] << ", " << r["vertex_count"] << " vertices, "
                  << r["facet_count"] << " facets, reflexive " << r["flags"]["reflexive"] << ", simplicial "
                  << r["flags"]["simplicial"] << ", smooth " << r["flags"]["smooth"] << ", delta " << r["delta"]
                  << ", picard " << r["picard"];
        if (!r["pseudo_index"].is_null())
            std::cout << ", min degree " << r["pseudo_index"]["min_invariant_degree"].get<std::string>()
                      << ", upper bound " << r["pseudo_index"]["upper_bound"];
        std::cout << '\n';
    }
    return ok;
}

int run_dual(const Options& o) {
    const auto ps = load(o);
    std::vector<rk::Polytope> duals;
    for (const auto& p : ps) duals.push_back(rk::dual(p));
    if (!o.quiet) std::cout << rk::emit(duals);
    return ok;
}

int run_mori(const Options& o) {
    const auto ps = load(o);
    for (const auto& p : ps) rk::require_simplicial_reflexive(p);
    auto tables = per_polytope(o, ps, [](const rk::Polytope& p) { return rk::report::curves(p); });
    if (o.quiet) return ok;
    if (!o.text) {
        print(o, as_array(std::move(tables)));
        return ok;
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
        std::cout << "polytope " << i << '\n';
        for (const auto& w : tables[i]["walls"])
            std::cout << "  facets " << w["facets"][0] << "," << w["facets"][1] << " side "
                      << w["side"].get<std::string>() << ": b " << w["b"].get<std::string>() << ", degree "
                      << w["degree"].get<std::string>() << '\n';
    }
    return ok;
}

int run_decompose(const Options& o) {
    const auto ps = load(o);
    for (const auto& p : ps) rk::require_simplicial_reflexive(p);
    auto out = per_polytope(o, ps, [](const rk::Polytope& p) {
        Json j;
        j["schema"] = rk::report::schema_version;
        j["vertices"] = rk::report::points(p.vertices());
        return j;
    });
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto bv = rk::verify_bounds(ps[i]);
        if (!bv.equality_ii) {
            std::ostringstream why;
            if (bv.delta == 0) why << "delta = 0, so the bound |V| <= n + n/delta does not apply";
            else
                why << "|V| = " << ps[i].vertices().size() << " but n + n/delta = " << ps[i].dim() << " + "
                    << ps[i].dim() << "/" << bv.delta;
            throw rk::PreconditionError("equality_fails", "polytope " + std::to_string(i) + ": " + why.str());
        }
    }
    rk::parallel_for(ps.size(), o.jobs, [&](std::size_t i) {
        out[i]["decomposition"] = rk::report::decomposition(ps[i], rk::decompose_equality(ps[i]));
        out[i]["classification"] = rk::report::variety(rk::classify_equality_variety(ps[i]));
    });
    if (o.quiet) return ok;
    if (!o.text) {
        print(o, as_array(std::move(out)));
        return ok;
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& d = out[i]["decomposition"];
        std::cout << "polytope " << i << ": " << d["blocks"].size() << " blocks, "
                  << out[i]["classification"]["description"].get<std::string>() << '\n';
    }
    return ok;
}

int run_canon(const Options& o) {
    const auto ps = load(o);
    auto out = per_polytope(o, ps, [](const rk::Polytope& p) { return rk::report::canonical(p); });
    if (o.quiet) return ok;
    if (!o.text) {
        print(o, as_array(std::move(out)));
        return ok;
    }
    std::vector<rk::Polytope> reps;
    for (const auto& p : ps) reps.push_back(rk::polytope_of(rk::canonical_form(p), p.ambient()));
    std::cout << rk::emit(reps);
    return ok;
}

int run_verify(const Options& o) {
    const auto ps = load(o);
    const auto summary = rk::verify_corpus(ps, o.jobs);
    if (!o.quiet) {
        if (!o.text) print(o, rk::report::summary(summary));
        else {
            std::cout << "checked " << summary.checked << " of " << summary.input_count << ", "
                      << summary.violations.size() << " violations\n";
            for (const auto& v : summary.violations)
                std::cout << "  polytope " << v.index << ": " << v.check << ": " << v.witness << '\n';
        }
    }
    return summary.ok() ? ok : violation;
}

int run_enumerate(const Options& o) {
    const auto e = rk::run_enumeration_2d(o.box, 7, o.jobs);
    std::vector<rk::Polytope> corpus;
    for (const auto& c : e.classes) corpus.push_back(c.representative);
    const auto summary = rk::verify_corpus(corpus, o.jobs);

    if (!o.out_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(o.out_dir, ec);
        if (ec || !fs::is_directory(o.out_dir))
            throw rk::PreconditionError("unwritable_output", "cannot create directory " + o.out_dir);
        auto open = [&](const std::string& name) {
            std::ofstream f(fs::path(o.out_dir) / name);
            if (!f) throw rk::PreconditionError("unwritable_output", "cannot write " + name + " in " + o.out_dir);
            return f;
        };
        for (std::size_t i = 0; i < e.classes.size(); ++i) {
            std::ostringstream name;
            name << "class_" << std::setw(2) << std::setfill('0') << i + 1 << ".txt";
            auto f = open(name.str());
            rk::write_polytope(f, e.classes[i].representative, e.classes[i].provenance);
        }
        open("corpus.txt") << rk::emit(corpus);
        Json s = rk::report::enumeration(e);
        s["verification"] = rk::report::summary(summary);
        open("summary.json") << s.dump(2) << '\n';
    }
    if (!o.quiet) {
        if (!o.text) {
            Json s = rk::report::enumeration(e);
            s["verification"] = rk::report::summary(summary);
            print(o, s);
        } else {
            std::cout << e.classes.size() << " classes in [-" << o.box << "," << o.box << "]^2, "
                      << e.probe_hits.size() << " reflexive polygons with more than 6 vertices\n";
            for (const auto& c : e.classes) {
                std::cout << "  " << c.report.vertex_count << " vertices, delta "
                          << (c.report.delta ? rk::to_string(*c.report.delta) : "-") << ":";
                for (const auto& v : c.representative.vertices()) std::cout << ' ' << v;
                std::cout << '\n';
            }
        }
    }
    return summary.ok() && e.probe_hits.empty() ? ok : violation;
}

void fail(const std::string& kind, const std::string& message, const Json& extra = Json::object()) {
    Json j;
    j["error"] = kind;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    j["message"] = message;
    std::cerr << j.dump() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    o.jobs = default_jobs();

    CLI::App app{"Exact invariants of reflexive lattice polytopes"};
    app.require_subcommand(1);
    app.add_flag("--json", "JSON output (default)");
    app.add_flag("--text", o.text, "human-readable output");
    app.add_flag("-q,--quiet", o.quiet, "no output on stdout; only the exit code");
    app.add_flag("--strict", o.strict, "require the \"v n\" orientation in input files");
    app.add_option("--seed", o.seed, "apply a seeded random unimodular transform to every input");
    app.add_option("-j,--jobs", o.jobs, "worker threads (default: REFLEXKIT_JOBS or 1)")->check(CLI::Range(1u, 1024u));

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub file_commands[] = {{"analyze", "report all invariants"},
                                 {"dual", "print the dual polytopes"},
                                 {"mori", "invariant curve classes wall by wall"},
                                 {"decompose", "block decomposition in the equality case |V| = n + n/delta"},
                                 {"verify", "run every invariant check over a corpus"},
                                 {"canon", "canonical forms"}};
    for (const auto& s : file_commands) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("file", o.file, "polytope file, or - for stdin")->required();
        sub->fallthrough();
    }
    auto* en = app.add_subcommand("enumerate2d", "enumerate reflexive polygons");
    en->add_option("--box", o.box, "search box radius")->check(CLI::Range(2, 1000));
    en->add_option("--out", o.out_dir, "directory for class files and summary");
    en->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : precondition;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        if (o.command == "analyze") return run_analyze(o);
        if (o.command == "dual") return run_dual(o);
        if (o.command == "mori") return run_mori(o);
        if (o.command == "decompose") return run_decompose(o);
        if (o.command == "verify") return run_verify(o);
        if (o.command == "canon") return run_canon(o);
        return run_enumerate(o);
    } catch (const rk::ParseError& e) {
        fail("parse", e.what(), {{"line", e.line()}});
        return parse_failure;
    } catch (const rk::PreconditionError& e) {
        fail("precondition", e.what(), {{"reason", e.reason()}});
        return precondition;
    } catch (const rk::TheoremViolation& e) {
        fail("theorem_violation", e.what(), {{"check", e.check()}});
        return violation;
    }
}
