#include "ainf/spec.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace ainf {

namespace {

using json = nlohmann::json;

const json& require(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object() || !j.contains(key)) throw SpecError(path, "missing field '" + key + "'");
    return j.at(key);
}

std::string as_string(const json& j, const std::string& path)
{
    if (!j.is_string()) throw SpecError(path, "expected a string");
    return j.get<std::string>();
}

Scalar as_scalar(const json& j, const std::string& path)
{
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw SpecError(path, "coefficients are rational strings like \"3/2\"");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const StructuralError& e) {
        throw SpecError(path, e.what());
    }
}

int label_index(const BasisInfo& b, const json& j, const std::string& path)
{
    const std::string l = as_string(j, path);
    const int i = b.find(l);
    if (i < 0) throw SpecError(path, "unknown basis label '" + l + "'");
    return i;
}

std::vector<LabelEntry> entries_of(const json& list, const std::string& path, std::optional<std::size_t> arity)
{
    if (!list.is_array()) throw SpecError(path, "expected an array of entries");
    std::vector<LabelEntry> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        const json& e = list[i];
        LabelEntry le;
        const json& in = require(e, "inputs", p);
        if (!in.is_array()) throw SpecError(p + "/inputs", "expected an array of labels");
        for (std::size_t k = 0; k < in.size(); ++k) le.inputs.push_back(as_string(in[k], p + "/inputs/" + std::to_string(k)));
        if (arity && le.inputs.size() != *arity)
            throw SpecError(p + "/inputs", "expected " + std::to_string(*arity) + " inputs");
        le.output = as_string(require(e, "output", p), p + "/output");
        le.coeff = e.contains("coeff") ? as_scalar(e.at("coeff"), p + "/coeff") : Scalar(1);
        out.push_back(std::move(le));
    }
    return out;
}

// Entries grouped by arity: {"2": [...], "3": [...]}.
std::vector<LabelEntry> ops_of(const json& ops, const std::string& path)
{
    if (!ops.is_object()) throw SpecError(path, "expected an object keyed by arity");
    std::vector<LabelEntry> out;
    for (const auto& [key, list] : ops.items()) {
        std::size_t n = 0;
        try {
            n = std::stoul(key);
        } catch (const std::exception&) {
            throw SpecError(path + "/" + key, "arity keys are positive integers");
        }
        if (n == 0) throw SpecError(path + "/" + key, "arity keys are positive integers");
        auto e = entries_of(list, path + "/" + key, n);
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

Cochain cochain_of(const BasisInfo& b, int k, const std::vector<LabelEntry>& entries, const std::string& path)
{
    try {
        Cochain c = cochain_from_entries(b, k, entries);
        c.validate(b);
        return c;
    } catch (const StructuralError& e) {
        throw SpecError(path, e.what());
    }
}

// {"label": "coeff", ...}
SparseVec vector_of(const BasisInfo& b, const json& j, const std::string& path)
{
    if (!j.is_object()) throw SpecError(path, "expected an object label -> coefficient");
    std::map<int, Scalar> m;
    for (const auto& [l, c] : j.items()) m[label_index(b, json(l), path + "/" + l)] += as_scalar(c, path + "/" + l);
    return SparseVec::from_map(m);
}

AInfinityAlgebra algebra_of(const json& j, bool validate)
{
    if (!j.is_object()) throw SpecError("", "spec must be a JSON object");
    const std::string field = j.contains("field") ? as_string(j.at("field"), "/field") : "Q";
    if (field != "Q") throw SpecError("/field", "only the field Q is supported");
    const std::string name = j.contains("name") ? as_string(j.at("name"), "/name") : "A";

    const json& labels_j = require(j, "labels", "");
    if (!labels_j.is_array()) throw SpecError("/labels", "expected an array of label arrays, one per degree");
    std::vector<std::vector<std::string>> labels;
    for (std::size_t d = 0; d < labels_j.size(); ++d) {
        const std::string p = "/labels/" + std::to_string(d);
        if (!labels_j[d].is_array()) throw SpecError(p, "expected an array of labels");
        labels.emplace_back();
        for (std::size_t i = 0; i < labels_j[d].size(); ++i) labels.back().push_back(as_string(labels_j[d][i], p + "/" + std::to_string(i)));
    }
    if (j.contains("dims")) {
        const json& dims = j.at("dims");
        if (!dims.is_array() || dims.size() != labels.size()) throw SpecError("/dims", "one entry per degree of /labels");
        for (std::size_t d = 0; d < dims.size(); ++d)
            if (!dims[d].is_number_integer() || dims[d].get<std::size_t>() != labels[d].size())
                throw SpecError("/dims/" + std::to_string(d), "does not match the number of labels");
    }
    std::set<std::string> seen;
    for (const auto& row : labels)
        for (const auto& l : row)
            if (!seen.insert(l).second) throw SpecError("/labels", "duplicate label '" + l + "'");

    std::vector<LabelEntry> entries = j.contains("ops") ? ops_of(j.at("ops"), "/ops") : std::vector<LabelEntry>{};
    const json ops = j.contains("ops") ? j.at("ops") : json::object();
    for (const auto& [key, list] : ops.items())
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string p = "/ops/" + key + "/" + std::to_string(i);
            const json& in = list[i].at("inputs");
            for (std::size_t k = 0; k < in.size(); ++k)
                if (!seen.count(in[k].get<std::string>()))
                    throw SpecError(p + "/inputs/" + std::to_string(k), "unknown basis label '" + in[k].get<std::string>() + "'");
            if (!seen.count(list[i].at("output").get<std::string>())) throw SpecError(p + "/output", "unknown basis label");
        }
    std::optional<std::string> unit;
    if (j.contains("unit")) unit = as_string(j.at("unit"), "/unit");
    const bool complete = j.value("complete_unit", true);
    AInfinityAlgebra a;
    try {
        a = make_algebra(name, labels, entries, unit, complete, false);
        a.m.validate(a.basis());
    } catch (const StructuralError& e) {
        throw SpecError("/ops", e.what());
    }
    if (validate) a.validate();
    return a;
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text, const SpecOptions& opt)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError("", std::string("JSON parse error: ") + e.what());
    }
    AlgebraSpec s{algebra_of(j, opt.validate), {}, {}, {}, {}, {}};
    const BasisInfo b = s.algebra.basis();

    if (j.contains("ideal")) {
        const json& i = j.at("ideal");
        if (!i.is_array()) throw SpecError("/ideal", "expected an array of vectors");
        AInfinityIdeal ideal;
        for (std::size_t k = 0; k < i.size(); ++k) ideal.span.push_back(vector_of(b, i[k], "/ideal/" + std::to_string(k)));
        s.ideal = ideal;
    }
    if (j.contains("trace")) s.trace = Trace{vector_of(b, j.at("trace"), "/trace")};
    if (j.contains("derivations")) {
        const json& ds = j.at("derivations");
        if (!ds.is_array()) throw SpecError("/derivations", "expected an array");
        for (std::size_t k = 0; k < ds.size(); ++k) {
            const std::string p = "/derivations/" + std::to_string(k);
            const json& d = ds[k];
            const std::string name = d.contains("name") ? as_string(d.at("name"), p + "/name") : "D" + std::to_string(k);
            const int deg = d.value("degree", 0);
            s.derivations.push_back({name, cochain_of(b, deg, entries_of(require(d, "entries", p), p + "/entries", {}), p)});
        }
    }
    if (j.contains("deformation")) {
        const json& terms = require(j.at("deformation"), "terms", "/deformation");
        if (!terms.is_array()) throw SpecError("/deformation/terms", "expected an array, one entry list per order");
        FormalDeformation d{s.algebra, {}};
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const std::string p = "/deformation/terms/" + std::to_string(k);
            d.terms.push_back(cochain_of(b, -1, entries_of(terms[k], p, {}), p));
        }
        s.deformation = d;
    }
    if (j.contains("morphism")) {
        const json& m = j.at("morphism");
        const json& t = require(m, "target", "/morphism");
        AInfinityAlgebra target;
        if (t.is_string()) {
            target = load_spec((std::filesystem::path(opt.base_dir) / t.get<std::string>()).string(), opt.validate).algebra;
        } else {
            try {
                target = algebra_of(t, opt.validate);
            } catch (const SpecError& e) {
                throw SpecError("/morphism/target" + e.field(), e.what());
            }
        }
        const BasisInfo tb = target.basis();
        SparseMatrix f(tb.size(), b.size());
        std::map<int, std::map<int, Scalar>> cols;
        const json& entries = require(m, "map", "/morphism");
        if (!entries.is_array()) throw SpecError("/morphism/map", "expected an array of {input, output, coeff}");
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const std::string p = "/morphism/map/" + std::to_string(k);
            const int in = label_index(b, require(entries[k], "input", p), p + "/input");
            const int out = label_index(tb, require(entries[k], "output", p), p + "/output");
            cols[in][out] += entries[k].contains("coeff") ? as_scalar(entries[k].at("coeff"), p + "/coeff") : Scalar(1);
        }
        for (const auto& [c, v] : cols) f.set_column(c, SparseVec::from_map(v));
        s.morphism = StrictMorphism{s.algebra, target, f};
    }
    return s;
}

AlgebraSpec load_spec(const std::string& path, bool validate)
{
    std::ifstream in(path);
    if (!in) throw SpecError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    SpecOptions opt;
    opt.validate = validate;
    opt.base_dir = std::filesystem::path(path).parent_path().string();
    if (opt.base_dir.empty()) opt.base_dir = ".";
    return parse_spec(ss.str(), opt);
}

}  // namespace ainf
