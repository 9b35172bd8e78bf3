#include "riesz/io.hpp"

#include "riesz/errors.hpp"

#include <set>

namespace riesz::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw ParseError("schema: " + what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object()) {
        schema("expected an object");
    }
    auto it = j.find(name);
    if (it == j.end()) {
        schema(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

std::size_t count_from_json(const json& j, const char* what, std::size_t min_value = 0) {
    if (!j.is_number_integer()) {
        schema(std::string(what) + " must be an integer");
    }
    const auto v = j.get<long long>();
    if (v < static_cast<long long>(min_value)) {
        schema(std::string(what) + " out of range");
    }
    return static_cast<std::size_t>(v);
}

std::size_t index_key(const std::string& key) {
    if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos) {
        schema("sequence index \"" + key + "\" is not a positive integer");
    }
    const auto v = std::stoul(key);
    if (v == 0) {
        schema("sequence indices are 1-based");
    }
    return v;
}

void check_kind(const json& j, std::string_view expected) {
    if (auto it = j.find("version"); it != j.end()) {
        if (!it->is_number_integer() || it->get<int>() != kFormatVersion) {
            schema("unsupported format version");
        }
    }
    if (auto it = j.find("kind"); it != j.end()) {
        if (!it->is_string() || it->get<std::string>() != expected) {
            schema("expected kind \"" + std::string(expected) + "\"");
        }
    }
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const FinVector& v) {
    json a = json::array();
    for (const auto& c : v.coords()) {
        a.push_back(c.str());
    }
    return a;
}

json to_json(const MultiTensor& t) {
    json entries = json::array();
    for (const auto& [key, value] : t.entries()) {
        json idx = json::array();
        for (auto i : key.idx) {
            idx.push_back(i + 1);
        }
        entries.push_back(json{{"out", key.out + 1}, {"idx", std::move(idx)}, {"value", value.str()}});
    }
    return json{{"version", kFormatVersion}, {"kind", "tensor"},          {"m", t.arity()},
                {"domain_dims", t.domain_dims()}, {"codomain_dim", t.codomain_dim()}, {"entries", std::move(entries)}};
}

json to_json(const seq::EvConstSeq& s) {
    json ex = json::object();
    for (const auto& [n, v] : s.exceptions()) {
        ex[std::to_string(n)] = v.str();
    }
    return json{{"exceptions", std::move(ex)}, {"tail", s.tail().str()}};
}

json to_json(const seq::DiagBilinear& a) {
    return json{{"version", kFormatVersion}, {"kind", "diag-bilinear"}, {"weight", to_json(a.weight)}};
}

json to_json(const seq::WeightedCompOp& t) {
    json table = json::object();
    for (const auto& [k, target] : t.table) {
        table[std::to_string(k)] = target;
    }
    return json{{"version", kFormatVersion},
                {"kind", "weighted-comp"},
                {"weight", to_json(t.weight)},
                {"index_map", json{{"table", std::move(table)}, {"shift", t.shift}}}};
}

json to_json(const OperatorSpec& spec) {
    return std::visit([](const auto& s) { return to_json(s); }, spec);
}

json to_json(const DPWitness& w) {
    json args = json::array();
    for (std::size_t s = 0; s < w.args.size(); ++s) {
        args.push_back(s == w.slot ? json(nullptr) : to_json(w.args[s]));
    }
    return json{{"slot", w.slot + 1},
                {"out", w.out + 1},
                {"x", to_json(w.x)},
                {"y", to_json(w.y)},
                {"args", std::move(args)},
                {"image_x", to_json(w.image_x)},
                {"image_y", to_json(w.image_y)}};
}

json to_json(const DPVerdict& v) {
    json out{{"is_dp", v.is_dp}};
    if (v.is_dp) {
        json cert = json::array();
        for (std::size_t k = 0; k < v.certificate.size(); ++k) {
            json idx = nullptr;
            if (v.certificate[k]) {
                idx = json::array();
                for (auto i : *v.certificate[k]) {
                    idx.push_back(i + 1);
                }
            }
            cert.push_back(json{{"out", k + 1}, {"idx", std::move(idx)}});
        }
        out["certificate"] = std::move(cert);
    }
    if (v.witness) {
        out["witness"] = to_json(*v.witness);
    }
    return out;
}

json to_json(const MultimorphismFactorization& f) {
    if (f.zero_operator) {
        return json{{"zero_operator", true}};
    }
    json coords = json::array();
    for (auto c : f.coords) {
        coords.push_back(c + 1);
    }
    return json{{"zero_operator", false}, {"scale", f.scale.str()}, {"coords", std::move(coords)}};
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) {
        schema("rational values must be strings \"p/q\"");
    }
    return Rational::parse(j.get<std::string>());
}

FinVector vector_from_json(const json& j) {
    if (!j.is_array()) {
        schema("vector must be an array");
    }
    std::vector<Rational> coords;
    for (const auto& c : j) {
        coords.push_back(rational_from_json(c));
    }
    return FinVector(std::move(coords));
}

MultiTensor tensor_from_json(const json& j) {
    check_kind(j, "tensor");
    const std::size_t m = count_from_json(field(j, "m"), "m", 1);
    const json& dims_json = field(j, "domain_dims");
    if (!dims_json.is_array() || dims_json.size() != m) {
        schema("domain_dims must be an array of length m");
    }
    std::vector<std::size_t> dims;
    for (const auto& d : dims_json) {
        dims.push_back(count_from_json(d, "domain dimension", 1));
    }
    const std::size_t codim = count_from_json(field(j, "codomain_dim"), "codomain_dim", 1);
    MultiTensor t = [&] {
        try {
            return MultiTensor(dims, codim);
        } catch (const DomainError& e) {
            throw ParseError(std::string("schema: ") + e.what());
        }
    }();
    const json& entries = field(j, "entries");
    if (!entries.is_array()) {
        schema("entries must be an array");
    }
    std::set<EntryKey> seen;
    for (const auto& e : entries) {
        const std::size_t out = count_from_json(field(e, "out"), "out", 1);
        const json& idx_json = field(e, "idx");
        if (!idx_json.is_array() || idx_json.size() != m) {
            schema("idx must be an array of length m");
        }
        Index idx;
        for (std::size_t s = 0; s < m; ++s) {
            const std::size_t i = count_from_json(idx_json[s], "index", 1);
            if (i > dims[s]) {
                schema("index out of range in slot " + std::to_string(s + 1));
            }
            idx.push_back(i - 1);
        }
        if (out > codim) {
            schema("out exceeds codomain_dim");
        }
        EntryKey key{out - 1, idx};
        if (!seen.insert(key).second) {
            schema("duplicate entry (out, idx)");
        }
        t.set(out - 1, idx, rational_from_json(field(e, "value")));
    }
    return t;
}

seq::EvConstSeq sequence_from_json(const json& j) {
    const json& ex_json = field(j, "exceptions");
    if (!ex_json.is_object()) {
        schema("exceptions must be an object");
    }
    std::map<std::size_t, Rational> ex;
    for (const auto& [key, value] : ex_json.items()) {
        if (!ex.emplace(index_key(key), rational_from_json(value)).second) {
            schema("duplicate sequence index");
        }
    }
    return seq::EvConstSeq(std::move(ex), rational_from_json(field(j, "tail")));
}

seq::DiagBilinear diag_from_json(const json& j) {
    check_kind(j, "diag-bilinear");
    return seq::DiagBilinear{sequence_from_json(field(j, "weight"))};
}

seq::WeightedCompOp comp_from_json(const json& j) {
    check_kind(j, "weighted-comp");
    seq::WeightedCompOp t;
    t.weight = sequence_from_json(field(j, "weight"));
    const json& map = field(j, "index_map");
    const json& table = field(map, "table");
    if (!table.is_object()) {
        schema("index_map.table must be an object");
    }
    for (const auto& [key, value] : table.items()) {
        t.table[index_key(key)] = count_from_json(value, "index_map target", 1);
    }
    t.shift = count_from_json(field(map, "shift"), "shift", 0);
    return t;
}

OperatorSpec spec_from_json(const json& j) {
    if (!j.is_object()) {
        schema("operator spec must be an object");
    }
    std::string kind = "tensor";
    if (auto it = j.find("kind"); it != j.end()) {
        if (!it->is_string()) {
            schema("kind must be a string");
        }
        kind = it->get<std::string>();
    }
    if (kind == "tensor") {
        return tensor_from_json(j);
    }
    if (kind == "diag-bilinear") {
        return diag_from_json(j);
    }
    if (kind == "weighted-comp") {
        return comp_from_json(j);
    }
    schema("unknown kind \"" + kind + "\"");
}

DPWitness witness_from_json(const json& j) {
    DPWitness w;
    w.slot = count_from_json(field(j, "slot"), "slot", 1) - 1;
    w.out = count_from_json(field(j, "out"), "out", 1) - 1;
    w.x = vector_from_json(field(j, "x"));
    w.y = vector_from_json(field(j, "y"));
    const json& args = field(j, "args");
    if (!args.is_array()) {
        schema("args must be an array");
    }
    for (std::size_t s = 0; s < args.size(); ++s) {
        w.args.push_back(args[s].is_null() ? FinVector(s == w.slot ? w.x.dim() : 0) : vector_from_json(args[s]));
    }
    w.image_x = vector_from_json(field(j, "image_x"));
    w.image_y = vector_from_json(field(j, "image_y"));
    return w;
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

OperatorSpec parse_spec(std::string_view text) { return spec_from_json(parse_text(text)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace riesz::io
