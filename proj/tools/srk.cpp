// srk: command-line front end for the rank-variety library.
//
// Exit codes: 0 on success, 1 when a check fails (tensor formula mismatch,
// projectivity discrepancy), 2 on bad input or a cap violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "srk/catalog.hpp"
#include "srk/io.hpp"

namespace {

using namespace srk;
using io::Json;

struct Config {
    bool text = false;
    std::string out;
    rvar::Options opts;
};

/// JSON payload plus its human-readable rendering.
struct Result {
    Json json;
    std::string text;
    int code = 0;
};

void emit(const Config& cfg, const Result& r) {
    if (!cfg.out.empty()) {
        if (cfg.text) {
            std::ofstream f(cfg.out);
            if (!f) throw Error("cannot write " + cfg.out);
            f << r.text;
        } else {
            io::save(cfg.out, r.json);
        }
        return;
    }
    if (cfg.text)
        std::cout << r.text;
    else
        std::cout << io::dump(r.json) << "\n";
}

smod::SuperModule load_module(const std::string& path) {
    auto m = io::module_from_json(io::load(path));
    const auto report = smod::validate(m);
    if (!report.ok()) throw Error(path + " is not a valid module: " + report.violations.front());
    return m;
}

gf::Field field_for(const smod::SuperModule& m, unsigned ext) {
    if (ext == 0) throw Error("--ext must be at least 1");
    if (!m.field().is_prime_field() && ext != m.field().degree())
        throw Error("module is defined over " + m.field().name() + "; --ext must equal its degree");
    return gf::Field::build(m.field().p(), ext);
}

std::string point_text(const gf::Field& f, const rvar::Point& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + f.to_string(p[i]);
    return s + "]";
}

std::string points_text(const gf::Field& f, const std::vector<rvar::Point>& pts) {
    if (pts.empty()) return "(empty)\n";
    std::string s;
    for (const auto& p : pts) s += "  " + point_text(f, p) + "\n";
    return s;
}

std::vector<std::string> lambda_names(std::size_t r) { return poly::default_names(r, "Y", 1); }

Result cmd_validate(const std::string& path) {
    const auto m = io::module_from_json(io::load(path));
    const auto report = smod::validate(m);
    Result r;
    r.json = Json{{"valid", report.ok()}, {"dim", m.dim()}, {"violations", report.violations}};
    r.text = report.ok() ? "valid module of dimension " + std::to_string(m.dim()) + "\n" : "";
    for (const auto& v : report.violations) r.text += "violation: " + v + "\n";
    r.code = report.ok() ? 0 : 2;
    return r;
}

Json algebra_info(const halg::Algebra& a, std::string& text) {
    const auto names = a.generator_names();
    Json gens = Json::array();
    std::ostringstream t;
    t << catalog::algebra_name(a.spec()) << ": dimension " << a.dim() << "\n";
    for (std::size_t g = 0; g < names.size(); ++g) {
        Json entry{{"name", names[g]}, {"parity", a.generators()[g].parity}, {"bound", a.generators()[g].bound}};
        t << "  " << names[g] << (a.generators()[g].parity ? " (odd)" : " (even)");
        if (a.has_coproduct()) {
            const auto delta = halg::to_string(a, a.coproduct_of_generator(g));
            entry["coproduct"] = delta;
            t << "  Delta = " << delta;
        }
        t << "\n";
        gens.push_back(entry);
    }
    Json rels = Json::array();
    for (const auto& rel : a.relations()) {
        rels.push_back(rel.to_string(names));
        t << "  relation " << rel.to_string(names) << " = 0\n";
    }
    text += t.str();
    return Json{{"name", catalog::algebra_name(a.spec())},
                {"spec", io::to_json(a.spec())},
                {"dim", a.dim()},
                {"generators", gens},
                {"relations", rels},
                {"hopf", a.has_coproduct()}};
}

Result cmd_info(const std::string& path) {
    const auto j = io::load(path);
    Result r;
    if (!j.contains("action")) {
        r.json = algebra_info(*halg::Algebra::build(io::spec_from_json(j)), r.text);
        return r;
    }
    const auto m = io::module_from_json(j);
    const auto report = smod::validate(m);
    std::size_t odd = 0;
    for (int par : m.parity()) odd += par;
    r.json["algebra"] = algebra_info(*m.algebra(), r.text);
    r.json["module"] = Json{{"field", io::to_json(m.field())},
                            {"dim", m.dim()},
                            {"even", m.dim() - odd},
                            {"odd", odd},
                            {"valid", report.ok()}};
    r.text += "module over " + m.field().name() + ": dimension " + std::to_string(m.dim()) + " (" +
              std::to_string(m.dim() - odd) + "|" + std::to_string(odd) + ")" + (report.ok() ? "" : ", INVALID") +
              "\n";
    if (report.ok() && m.algebra()->is_unipotent()) {
        const auto f = smod::is_free(m);
        r.json["module"]["free"] = f.free;
        if (f.free) r.json["module"]["free_rank"] = f.rank;
        r.text += f.free ? "free of rank " + std::to_string(f.rank) + "\n" : "not free\n";
    }
    return r;
}

Result cmd_points(const Config& cfg, const std::string& path, unsigned ext, const std::string& at) {
    const auto m = load_module(path);
    const auto field = field_for(m, ext);
    Result r;
    if (!at.empty()) {
        const auto lambda = io::pipoint_from_json(io::load(at), field);
        const auto len = pip::lambda_length(*m.algebra());
        if (lambda.size() != len)
            throw Error("pi-point has " + std::to_string(lambda.size()) + " coordinates, expected " +
                        std::to_string(len));
        const auto restricted = pip::restrict(smod::base_change(m, field), lambda);
        const auto rank = linalg::rank(pip::rank_matrix(restricted));
        std::vector<gf::Code> codes;
        for (const auto& x : lambda) codes.push_back(x.code());
        const bool ffd = rank == m.dim();
        r.json = Json{{"field", io::to_json(field)},   {"lambda", io::pipoint_to_json(field, codes)["lambda"]},
                      {"d", m.dim()},                  {"rank", rank},
                      {"finite_flat_dim", ffd},        {"in_variety", !ffd}};
        r.text = "rank " + std::to_string(rank) + " of " + std::to_string(m.dim()) + " at " +
                 point_text(field, codes) + (ffd ? ": finite flat dimension\n" : ": in the rank variety\n");
        return r;
    }
    const auto v = rvar::variety_points(m, field, cfg.opts);
    r.json = io::to_json(v);
    r.text = "rank variety over " + field.name() + " (d = " + std::to_string(v.d) + ", " +
             std::to_string(v.points.size()) + " points)\n" + points_text(field, v.points);
    for (const auto& [p, rank] : v.rank_at) r.text += "  rank " + point_text(field, p) + " = " + std::to_string(rank) + "\n";
    return r;
}

Result cmd_minors(const Config& cfg, const std::string& path) {
    const auto m = load_module(path);
    const auto ideal = rvar::minor_ideal(m, cfg.opts.caps);
    const auto names = lambda_names(ideal.nvars);
    Result r;
    Json gens = Json::array();
    r.text = std::to_string(ideal.generators.size()) + " nonzero " + std::to_string(ideal.d) + "x" +
             std::to_string(ideal.d) + " minors in " + std::to_string(ideal.nvars) + " variables\n";
    for (const auto& g : ideal.generators) {
        gens.push_back(g.to_string(names));
        r.text += "  " + g.to_string(names) + "\n";
    }
    r.json = Json{{"d", ideal.d},
                  {"variables", names},
                  {"weights", ideal.weights},
                  {"homogeneous", ideal.homogeneous},
                  {"weighted_homogeneous", ideal.weighted_homogeneous},
                  {"generators", gens}};
    return r;
}

Result cmd_projective(const Config& cfg, const std::string& path, std::size_t depth) {
    const auto m = load_module(path);
    const auto v = rvar::projectivity_verdict(m, depth, cfg.opts);
    Result r;
    r.json = Json{{"projective", v.projective}, {"depth", v.depth}};
    if (v.witness) {
        const auto wf = gf::Field::build(m.field().p(), v.witness_degree);
        r.json["witness"] = Json{{"field", io::to_json(wf)}, {"lambda", io::points_to_json(wf, {*v.witness})[0]}};
        r.text = "not projective: witness " + point_text(wf, *v.witness) + " over " + wf.name() + "\n";
    } else {
        r.json["witness"] = nullptr;
        r.text = "projective (no witness up to depth " + std::to_string(v.depth) + ")\n";
    }
    r.json["oracle"] = Json{{"free", v.oracle_free}, {"rank", v.oracle_rank}};
    r.json["discrepancy"] = v.discrepancy;
    r.text += std::string("freeness oracle: ") + (v.oracle_free ? "free" : "not free") + "\n";
    if (v.discrepancy) r.text += "DISCREPANCY between the rank search and the freeness oracle\n";
    r.code = v.discrepancy ? 1 : 0;
    return r;
}

void check_tensor_cap(const Config& cfg, const smod::SuperModule& m, const smod::SuperModule& n) {
    if (m.dim() * n.dim() > cfg.opts.caps.tensor_dim)
        throw Error("tensor dimension " + std::to_string(m.dim() * n.dim()) + " exceeds --cap-tensor " +
                    std::to_string(cfg.opts.caps.tensor_dim));
}

Result module_result(const smod::SuperModule& m) {
    const auto j = io::to_json(m);
    return {j, io::dump(j) + "\n", 0};
}

Result cmd_tensor(const Config& cfg, const std::string& a, const std::string& b) {
    const auto m = load_module(a), n = load_module(b);
    check_tensor_cap(cfg, m, n);
    return module_result(smod::tensor(m, n));
}

Result cmd_check_tensor(const Config& cfg, const std::string& a, const std::string& b, unsigned ext) {
    const auto m = load_module(a), n = load_module(b);
    const auto field = field_for(m, ext);
    const auto c = rvar::tensor_formula_check(m, n, field, cfg.opts);
    Result r;
    r.json = Json{{"pass", c.pass},
                  {"field", io::to_json(field)},
                  {"tensor", io::points_to_json(field, c.lhs.points)},
                  {"intersection", io::points_to_json(field, c.rhs)},
                  {"left", io::points_to_json(field, c.left)},
                  {"right", io::points_to_json(field, c.right)},
                  {"tensor_free", c.tensor_free}};
    r.text = std::string(c.pass ? "PASS" : "FAIL") + ": V(M (x) N) " + (c.pass ? "=" : "!=") + " V(M) n V(N) over " +
             field.name() + "\nV(M (x) N):\n" + points_text(field, c.lhs.points) + "V(M) n V(N):\n" +
             points_text(field, c.rhs);
    r.code = c.pass ? 0 : 1;
    return r;
}

Result cmd_witt(std::uint32_t p, std::size_t n) {
    const auto sums = poly::witt_sums(p, n);
    const auto names = poly::witt_variable_names(n);
    Result r;
    Json arr = Json::array();
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const auto s = sums[i].to_string(names);
        arr.push_back(Json{{"name", "S" + std::to_string(i)}, {"poly", s}});
        r.text += "S" + std::to_string(i) + " = " + s + "\n";
    }
    r.json = Json{{"p", p}, {"n", n}, {"sums", arr}};
    return r;
}

std::string file_stem(std::string name) {
    for (char& c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    return name;
}

Result cmd_catalog(const std::string& dir) {
    const auto seed = catalog::seed_from_env();
    Result r;
    Json algebras = Json::array();
    for (const auto& a : catalog::module_algebras()) {
        Json mods = Json::array();
        if (!dir.empty()) std::filesystem::create_directories(std::filesystem::path(dir) / a.name);
        for (const auto& e : catalog::modules(a, seed)) {
            const auto file = a.name + "/" + file_stem(e.name) + ".json";
            mods.push_back(Json{{"name", e.name}, {"dim", e.module.dim()}, {"file", file}});
            if (!dir.empty()) io::save(std::filesystem::path(dir) / file, io::to_json(e.module));
            r.text += a.name + "  " + e.name + "  dim " + std::to_string(e.module.dim()) + "\n";
        }
        algebras.push_back(Json{{"name", a.name}, {"spec", io::to_json(a.algebra->spec())}, {"modules", mods}});
    }
    r.json = Json{{"seed", seed}, {"algebras", algebras}};
    if (!dir.empty()) io::save(std::filesystem::path(dir) / "index.json", r.json);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"srk: rank varieties of supermodules over elementary supergroup schemes"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    bool json_flag = false;
    app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_flag("--text", cfg.text, "human-readable output");
    app.add_option("-o,--output", cfg.out, "write output to a file instead of stdout");
    app.add_option("--jobs", cfg.opts.jobs, "worker threads for point enumeration")->check(CLI::PositiveNumber);
    app.add_option("--cap-points", cfg.opts.caps.points, "maximum projective points per field")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-tensor", cfg.opts.caps.tensor_dim, "maximum tensor product dimension")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-minors", cfg.opts.caps.minor_d, "maximum module dimension for symbolic minors")
        ->check(CLI::PositiveNumber);

    std::string file, file2, at;
    unsigned ext = 1;
    std::size_t depth = 2;
    std::uint32_t wp = 3;
    std::size_t wn = 2;

    auto* validate = app.add_subcommand("validate", "check a module file against the algebra relations");
    validate->add_option("module", file)->required();
    auto* info = app.add_subcommand("info", "describe an algebra spec or module file");
    info->add_option("file", file)->required();
    auto* points = app.add_subcommand("points", "rank variety points over GF(p^ext)");
    points->add_option("module", file)->required();
    points->add_option("--ext", ext, "extension degree")->check(CLI::PositiveNumber);
    points->add_flag("--diagnostics", cfg.opts.diagnostics, "report the rank at every point");
    points->add_option("--at", at, "evaluate at the pi-point in this JSON file");
    auto* minors = app.add_subcommand("minors", "symbolic d x d minors of the rank matrix");
    minors->add_option("module", file)->required();
    auto* projective = app.add_subcommand("projective", "search for a witness of non-projectivity");
    projective->add_option("module", file)->required();
    projective->add_option("--depth", depth, "largest extension degree searched")->check(CLI::PositiveNumber);
    auto* tensor = app.add_subcommand("tensor", "tensor product module");
    tensor->add_option("m", file)->required();
    tensor->add_option("n", file2)->required();
    auto* check_tensor = app.add_subcommand("check-tensor", "compare V(M (x) N) with V(M) n V(N)");
    check_tensor->add_option("m", file)->required();
    check_tensor->add_option("n", file2)->required();
    check_tensor->add_option("--ext", ext, "extension degree")->check(CLI::PositiveNumber);
    auto* syzygy = app.add_subcommand("syzygy", "first syzygy module");
    syzygy->add_option("module", file)->required();
    auto* witt = app.add_subcommand("witt", "Witt vector addition polynomials mod p");
    witt->add_option("-p", wp, "prime")->required();
    witt->add_option("-n", wn, "number of polynomials")->required();
    auto* cat = app.add_subcommand("catalog", "regenerate the seeded module corpus (SRK_SEED overrides the seed)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (json_flag && cfg.text) {
        std::cerr << "error: --json and --text are exclusive\n";
        return 2;
    }

    try {
        Result r;
        if (*validate) r = cmd_validate(file);
        else if (*info) r = cmd_info(file);
        else if (*points) r = cmd_points(cfg, file, ext, at);
        else if (*minors) r = cmd_minors(cfg, file);
        else if (*projective) r = cmd_projective(cfg, file, depth);
        else if (*tensor) r = cmd_tensor(cfg, file, file2);
        else if (*check_tensor) r = cmd_check_tensor(cfg, file, file2, ext);
        else if (*syzygy) r = module_result(smod::syzygy(load_module(file)));
        else if (*witt) r = cmd_witt(wp, wn);
        else if (*cat) {
            r = cmd_catalog(cfg.out);
            cfg.out.clear();
        }
        emit(cfg, r);
        return r.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
