#include "srk/io.hpp"

#include <algorithm>
#include <fstream>

namespace srk::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string(what) + ": " + e.what());
    }
}

std::uint32_t get_u32(const Json& j, const char* key, std::uint32_t fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw Error(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::uint32_t>();
}

bool has_object(const Json& j) {
    if (j.is_object()) return true;
    if (j.is_array())
        for (const auto& e : j)
            if (has_object(e)) return true;
    return false;
}

void dump_into(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
    if (j.is_array() && !j.empty()) {
        const auto flat = j.dump();
        const bool scalars = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
        if (scalars || (!has_object(j) && flat.size() <= 100)) {
            out += flat;
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            dump_into(j[i], indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out += pad + Json(k).dump() + ": ";
            dump_into(v, indent + 2, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    dump_into(j, 0, out);
    return out;
}

Json load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void save(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << dump(j) << "\n";
}

Json to_json(const halg::AlgebraSpec& spec) {
    Json j;
    j["p"] = spec.p;
    j["kind"] = halg::kind_name(spec.kind);
    j["n"] = spec.n;
    j["m"] = spec.m;
    j["s_zp"] = spec.s_zp;
    if (spec.kind == halg::Kind::MnFMu) {
        Json f = Json::array();
        for (const auto& [i, a] : spec.f) f.push_back({i, a});
        j["f"] = f;
        j["mu"] = spec.mu;
    }
    return j;
}

halg::AlgebraSpec spec_from_json(const Json& j) {
    return guarded("algebra spec", [&] {
        if (!j.is_object()) throw Error("algebra spec must be an object");
        if (!j.contains("kind")) throw Error("algebra spec needs 'kind'");
        halg::AlgebraSpec spec;
        spec.kind = halg::parse_kind(j.at("kind").get<std::string>());
        spec.p = get_u32(j, "p", 3);
        spec.n = get_u32(j, "n", 0);
        spec.m = get_u32(j, "m", 1);
        spec.s_zp = get_u32(j, "s_zp", 0);
        spec.mu = get_u32(j, "mu", 0);
        if (j.contains("f"))
            for (const auto& term : j.at("f")) {
                if (!term.is_array() || term.size() != 2) throw Error("each term of 'f' must be [i, coeff]");
                spec.f.emplace_back(term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>());
            }
        return spec;
    });
}

Json to_json(const gf::Field& f) { return Json{{"p", f.p()}, {"m", f.degree()}}; }

gf::Field field_from_json(const Json& j) {
    return guarded("field", [&] {
        if (!j.is_object()) throw Error("field must be an object {\"p\":..,\"m\":..}");
        return gf::Field::build(get_u32(j, "p", 0), get_u32(j, "m", 1));
    });
}

Json element_to_json(const gf::Field& f, gf::Code c) {
    if (f.is_prime_field()) return c;
    Json out = Json::array();
    for (auto d : f.coefficients(c)) out.push_back(d);
    return out;
}

gf::Code element_from_json(const gf::Field& f, const Json& j) {
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(f.p()))
            throw Error("field element " + std::to_string(v) + " out of range 0.." + std::to_string(f.p() - 1));
        return static_cast<gf::Code>(v);
    }
    if (j.is_array()) {
        if (j.size() > f.degree()) throw Error("coefficient vector longer than the extension degree");
        std::vector<std::uint32_t> coeffs(f.degree(), 0);
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number_integer()) throw Error("field element coefficients must be integers");
            const auto v = j[i].get<std::int64_t>();
            if (v < 0 || v >= static_cast<std::int64_t>(f.p())) throw Error("field element coefficient out of range");
            coeffs[i] = static_cast<std::uint32_t>(v);
        }
        return f.from_coefficients(coeffs);
    }
    throw Error("field element must be an integer or a coefficient vector");
}

Json to_json(const smod::SuperModule& m) {
    Json j;
    j["algebra"] = to_json(m.algebra()->spec());
    j["field"] = to_json(m.field());
    j["dim"] = m.dim();
    j["parity"] = m.parity();
    Json action = Json::object();
    const auto names = m.algebra()->generator_names();
    for (std::size_t g = 0; g < names.size(); ++g) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.dim(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(element_to_json(m.field(), m.action(g).at(i, k)));
            rows.push_back(row);
        }
        action[names[g]] = rows;
    }
    j["action"] = action;
    return j;
}

smod::SuperModule module_from_json(const Json& j) {
    return guarded("module", [&] {
        for (const char* key : {"algebra", "field", "dim", "parity", "action"})
            if (!j.contains(key)) throw Error(std::string("module file needs '") + key + "'");
        const auto algebra = halg::Algebra::build(spec_from_json(j.at("algebra")));
        const auto field = field_from_json(j.at("field"));
        const auto dim = j.at("dim").get<std::size_t>();
        const auto parity = j.at("parity").get<std::vector<int>>();
        if (parity.size() != dim) throw Error("parity vector length differs from dim");
        const auto& action = j.at("action");
        if (!action.is_object()) throw Error("'action' must map generator names to matrices");
        for (const auto& [name, _] : action.items()) algebra->generator_index(name);
        std::vector<linalg::Matrix> mats;
        for (const auto& name : algebra->generator_names()) {
            if (!action.contains(name)) throw Error("no action matrix for generator '" + name + "'");
            const auto& rows = action.at(name);
            if (!rows.is_array() || rows.size() != dim)
                throw Error("action of '" + name + "' must have " + std::to_string(dim) + " rows");
            linalg::Matrix mat(field, dim, dim);
            for (std::size_t i = 0; i < dim; ++i) {
                if (!rows[i].is_array() || rows[i].size() != dim)
                    throw Error("row " + std::to_string(i) + " of '" + name + "' must have " + std::to_string(dim) +
                                " entries");
                for (std::size_t k = 0; k < dim; ++k) mat.set(i, k, element_from_json(field, rows[i][k]));
            }
            mats.push_back(std::move(mat));
        }
        return smod::SuperModule(algebra, field, parity, std::move(mats));
    });
}

std::vector<gf::FieldElement> pipoint_from_json(const Json& j, const gf::Field& f) {
    return guarded("pi-point", [&] {
        if (!j.contains("lambda") || !j.at("lambda").is_array()) throw Error("pi-point needs a 'lambda' array");
        if (j.value("symbolic", false)) throw Error("symbolic pi-points are not evaluated at a single point");
        std::vector<gf::FieldElement> out;
        for (const auto& e : j.at("lambda")) out.push_back(f.element(element_from_json(f, e)));
        return out;
    });
}

Json pipoint_to_json(const gf::Field& f, std::span<const gf::Code> lambda) {
    Json arr = Json::array();
    for (auto c : lambda) arr.push_back(element_to_json(f, c));
    return Json{{"lambda", arr}, {"symbolic", false}};
}

Json points_to_json(const gf::Field& f, const std::vector<rvar::Point>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) {
        Json row = Json::array();
        for (auto c : p) row.push_back(element_to_json(f, c));
        arr.push_back(row);
    }
    return arr;
}

Json to_json(const rvar::VarietyPoints& v) {
    Json j;
    j["field"] = to_json(v.field);
    j["ambient"] = v.ambient;
    j["d"] = v.d;
    j["points"] = points_to_json(v.field, v.points);
    if (!v.rank_at.empty()) {
        Json diag = Json::array();
        for (const auto& [p, r] : v.rank_at) {
            Json row = Json::array();
            for (auto c : p) row.push_back(element_to_json(v.field, c));
            diag.push_back(Json{{"lambda", row}, {"rank", r}});
        }
        j["rank_at"] = diag;
    }
    return j;
}

}  // namespace srk::io
