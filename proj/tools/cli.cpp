#include "cli.hpp"

#include "riesz/arens.hpp"
#include "riesz/dp.hpp"
#include "riesz/errors.hpp"
#include "riesz/factorize.hpp"
#include "riesz/io.hpp"
#include "riesz/lattice_rank.hpp"
#include "riesz/seq/operators.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace riesz::cli {

namespace {

using io::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string text;
    std::string digest;
};

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return "sha256:" + os.str();
}

Input read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    Input input{os.str(), {}};
    input.digest = sha256_hex(input.text);
    return input;
}

MultiTensor read_tensor(const Input& input) {
    auto spec = io::parse_spec(input.text);
    if (auto* t = std::get_if<MultiTensor>(&spec)) {
        return std::move(*t);
    }
    throw InputError("this command expects a tensor spec");
}

unsigned thread_count() {
    const char* env = std::getenv("RIESZ_THREADS");
    if (env == nullptr) {
        return 1;
    }
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || n == 0) {
        return 1;
    }
    return static_cast<unsigned>(std::min(n, 64UL));
}

/// The report every command fills in.
struct Report {
    json command = json::object();
    json input_digest = nullptr;
    json seed = nullptr;
    json result = json::object();
    json verdicts = json::array();
    json witnesses = json::array();

    void verdict(const std::string& check, bool holds, json detail = nullptr) {
        json v{{"check", check}, {"holds", holds}};
        if (!detail.is_null()) {
            v["detail"] = std::move(detail);
        }
        verdicts.push_back(std::move(v));
    }

    void witness(const std::string& check, json w) {
        witnesses.push_back(json{{"check", check}, {"witness", std::move(w)}});
    }

    bool holds() const {
        for (const auto& v : verdicts) {
            if (!v["holds"].get<bool>()) {
                return false;
            }
        }
        return true;
    }
};

struct Options {
    bool json_output = false;
    bool timing = false;
};

json trace_to_json(const std::vector<TraceEntry>& trace) {
    json out = json::array();
    for (const auto& e : trace) {
        json slots = json::array();
        for (const auto& s : e.form.slots()) {
            slots.push_back(s.label + 1);
        }
        json values = json::array();
        for (const auto& [idx, v] : e.form.values()) {
            json i = json::array();
            for (auto x : idx) {
                i.push_back(x + 1);
            }
            values.push_back(json{{"idx", std::move(i)}, {"value", v.str()}});
        }
        out.push_back(json{{"out", e.out + 1}, {"step", e.step}, {"slots", std::move(slots)},
                           {"values", std::move(values)}});
    }
    return out;
}

json seq_failure_to_json(const seq::SeqFailure& f) {
    return json{{"u", io::to_json(f.u)},
                {"v", io::to_json(f.v)},
                {"image_u", io::to_json(f.image_u)},
                {"image_v", io::to_json(f.image_v)}};
}

void cmd_check_dp(const Input& input, Report& r) {
    const MultiTensor a = read_tensor(input);
    const DPVerdict v = is_dp(a);
    r.result["verdict"] = io::to_json(v);
    r.verdict("is_dp", v.is_dp);
    if (v.witness) {
        r.witness("is_dp", io::to_json(*v.witness));
    }
}

std::vector<Permutation> select_perms(const std::string& perm, std::size_t m) {
    if (perm == "all") {
        return Permutation::all(m);
    }
    return {Permutation::parse(perm, m)};
}

void cmd_arens(const Input& input, const std::string& perm, bool trace, Report& r) {
    const MultiTensor a = read_tensor(input);
    const auto perms = select_perms(perm, a.arity());
    const DPVerdict input_verdict = is_dp(a);
    r.verdict("input_is_dp", input_verdict.is_dp);
    if (input_verdict.witness) {
        r.witness("input_is_dp", io::to_json(*input_verdict.witness));
    }

    std::vector<ArensResult> results;
    if (perms.size() > 1) {
        results = arens_extensions_all(a, trace, thread_count());
    } else {
        results.push_back(arens_extension(a, perms.front(), trace));
    }
    json list = json::array();
    for (const auto& ext : results) {
        const std::string name = ext.rho.cycles();
        const bool restriction = ext.tensor == a;
        const DPVerdict v = is_dp(ext.tensor);
        json item{{"rho", name},
                  {"one_line", ext.rho.one_line()},
                  {"tensor", io::to_json(ext.tensor)},
                  {"restriction_law", restriction},
                  {"is_dp", v.is_dp}};
        if (ext.trace) {
            item["trace"] = trace_to_json(*ext.trace);
        }
        list.push_back(std::move(item));
        r.verdict("restriction_law " + name, restriction);
        if (input_verdict.is_dp) {
            r.verdict("extension_is_dp " + name, v.is_dp);
            if (v.witness) {
                r.witness("extension_is_dp " + name, io::to_json(*v.witness));
            }
        }
    }
    r.result["extensions"] = std::move(list);
}

void cmd_modulus(const Input& input, Report& r) {
    const MultiTensor a = read_tensor(input);
    const MultiTensor m = modulus(a);
    r.result["modulus"] = io::to_json(m);
    r.result["positive_part"] = io::to_json(positive_part(a));
    r.result["negative_part"] = io::to_json(negative_part(a));
    r.result["riesz_multimorphism"] = is_riesz_multimorphism(m);
    r.verdict("majorant", operator_leq(a, m) && operator_leq(-a, m));
}

void cmd_factorize(const Input& input, Report& r) {
    const MultiTensor a = read_tensor(input);
    if (a.codomain_dim() != 1) {
        throw InputError("factorize expects a scalar-valued tensor (codomain_dim 1)");
    }
    try {
        r.result["factorization"] = io::to_json(factorize_multimorphism(a));
        r.verdict("is_dp", true);
    } catch (const NotDisjointnessPreserving& e) {
        r.verdict("is_dp", false);
        r.witness("is_dp", io::to_json(*e.verdict().witness));
    }
}

void cmd_rank(const Input& input, Report& r) {
    const MultiTensor a = read_tensor(input);
    r.result["lattice_rank"] = lattice_rank(a);
    r.result["codomain_dim"] = a.codomain_dim();
    r.verdict("finite_lattice_rank", true);
}

void cmd_replay(const Input& input, const Input& witness_input, Report& r) {
    const MultiTensor a = read_tensor(input);
    const json doc = io::parse_text(witness_input.text);
    // Accept a bare witness or the first witness of a report.
    const json* w = &doc;
    if (doc.is_object() && doc.contains("witnesses")) {
        const json& ws = doc["witnesses"];
        if (!ws.is_array() || ws.empty()) {
            throw InputError("report carries no witness");
        }
        w = &ws[0]["witness"];
    }
    const DPWitness witness = io::witness_from_json(*w);
    if (witness.slot >= a.arity() || witness.args.size() != a.arity() || witness.out >= a.codomain_dim()) {
        throw InputError("witness does not fit the operator shape");
    }
    for (std::size_t s = 0; s < a.arity(); ++s) {
        const std::size_t dim = s == witness.slot ? witness.x.dim() : witness.args[s].dim();
        if (dim != a.domain_dims()[s] || (s == witness.slot && witness.y.dim() != dim)) {
            throw InputError("witness does not fit the operator shape");
        }
    }
    r.result["witness_digest"] = witness_input.digest;
    r.verdict("witness_reverifies", verify_witness(a, witness));
}

void cmd_normalize(const Input& input, std::ostream& out) { out << io::dump(io::to_json(io::parse_spec(input.text))); }

seq::DiagBilinear read_weight(const std::string& path, Report& r) {
    if (path.empty()) {
        return {};
    }
    const Input input = read_input(path);
    r.input_digest = input.digest;
    auto spec = io::parse_spec(input.text);
    if (auto* d = std::get_if<seq::DiagBilinear>(&spec)) {
        return *d;
    }
    throw InputError("--weight expects a diag-bilinear spec");
}

void cmd_seq_demo(std::uint64_t seed, const std::string& weight_path, Report& r) {
    using namespace seq;
    const DiagBilinear given = read_weight(weight_path, r);
    const bool fixed_weight = !weight_path.empty();
    Sampler rng(seed);
    const auto perms = Permutation::all(2);

    // (a) closed form against the contraction pipeline on e_n*, n ≤ 64
    {
        bool ok = true;
        std::size_t checked = 0;
        for (int i = 0; i < 50 && ok; ++i) {
            const DiagBilinear a = fixed_weight ? given : DiagBilinear{random_sequence(rng, 20)};
            const auto u = random_sequence(rng, 20);
            const auto v = random_sequence(rng, 20);
            const auto closed = diag_apply(a, u, v);
            for (const auto& rho : perms) {
                for (std::size_t n = 1; n <= 64 && ok; ++n) {
                    const Rational got = diag_arens_functional(a, u, v, rho, EvConstSeq::atom(n));
                    if (got != closed.at(n)) {
                        ok = false;
                        r.witness("diag_arens_agreement",
                                  json{{"weight", io::to_json(a.weight)},
                                       {"u", io::to_json(u)},
                                       {"v", io::to_json(v)},
                                       {"rho", rho.cycles()},
                                       {"n", n},
                                       {"pipeline", got.str()},
                                       {"closed_form", closed.at(n).str()}});
                    }
                    ++checked;
                }
                if (ok && diag_arens(a, u, v, rho) != closed) {
                    ok = false;
                    r.witness("diag_arens_agreement", json{{"u", io::to_json(u)}, {"v", io::to_json(v)},
                                                           {"rho", rho.cycles()}});
                }
            }
        }
        r.verdict("diag_arens_agreement", ok, json{{"functionals_checked", checked}});
    }

    // (b) second adjoints of weighted compositions, and T''∘J = J∘T
    {
        bool ok = true;
        bool restriction = true;
        for (int i = 0; i < 20 && ok && restriction; ++i) {
            const WeightedCompOp t = random_comp_op(rng);
            const auto pairs = sample_disjoint_pairs(rng, 50);
            if (auto f = biadjoint_dp_check(t, pairs)) {
                ok = false;
                json w = seq_failure_to_json(*f);
                w["operator"] = io::to_json(t);
                r.witness("biadjoint_dp", std::move(w));
            }
            for (int s = 0; s < 10 && restriction; ++s) {
                const auto x = random_sequence(rng, 14, true);
                if (comp_biadjoint(t, x) != comp_apply(t, x)) {
                    restriction = false;
                    r.witness("biadjoint_restriction", json{{"operator", io::to_json(t)}, {"x", io::to_json(x)}});
                }
            }
        }
        r.verdict("biadjoint_dp", ok, json{{"operators", 20}, {"pairs_per_operator", 50}});
        r.verdict("biadjoint_restriction", restriction);
    }

    // (c) coordinate functionals
    {
        const auto pairs = sample_disjoint_pairs(rng, 200);
        const auto failed = dual_basis_dp(32, pairs);
        r.verdict("dual_basis_dp", !failed, json{{"n_max", 32}});
        if (failed) {
            r.witness("dual_basis_dp", json{{"n", *failed}});
        }
    }

    // (d) unbounded lattice rank alongside disjointness preservation
    {
        const DiagBilinear a = fixed_weight ? given : DiagBilinear{};
        std::size_t vanishing = 0;
        for (std::size_t n = 1; n <= 32 && vanishing == 0; ++n) {
            if (a.weight.at(n).is_zero()) {
                vanishing = n;
            }
        }
        if (vanishing != 0) {
            r.verdict("rank_lower_bound", false, json{{"n", 32}});
            r.witness("rank_lower_bound", json{{"index", vanishing}, {"weight_value", "0"}});
        } else {
            const std::size_t bound = rank_lower_bound(a, 32);
            r.verdict("rank_lower_bound", bound == 32, json{{"n", 32}, {"bound", bound}});
        }
        const MultiTensor t = truncate(a, MultiTensor::kMaxDim);
        const DPVerdict v = is_dp(t);
        r.verdict("diag_is_dp", v.is_dp, json{{"truncation", MultiTensor::kMaxDim}});
        if (v.witness) {
            r.witness("diag_is_dp", io::to_json(*v.witness));
        }
    }

    // (e) each slot of the extension separately
    {
        const DiagBilinear a = fixed_weight ? given : DiagBilinear{};
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            const EvConstSeq u = i == 0 ? EvConstSeq::constant(1) : random_sequence(rng);
            if (auto f = slotwise_dp_check(a, u, sample_disjoint_pairs(rng, 50))) {
                ok = false;
                json w = seq_failure_to_json(*f);
                w["u_fixed"] = io::to_json(u);
                r.witness("slotwise_dp", std::move(w));
            }
        }
        r.verdict("slotwise_dp", ok, json{{"fixed", 5}, {"pairs_per_fixed", 50}});
    }
}

void print_text(const json& report, std::ostream& out) {
    out << "command: " << report["command"]["name"].get<std::string>() << "\n";
    if (!report["input_digest"].is_null()) {
        out << "input: " << report["input_digest"].get<std::string>() << "\n";
    }
    if (!report["seed"].is_null()) {
        out << "seed: " << report["seed"].dump() << "\n";
    }
    for (const auto& [key, value] : report["result"].items()) {
        if (value.is_array()) {
            out << key << ":\n";
            for (const auto& item : value) {
                out << "  " << item.dump() << "\n";
            }
        } else {
            out << key << ": " << value.dump() << "\n";
        }
    }
    for (const auto& v : report["verdicts"]) {
        out << (v["holds"].get<bool>() ? "PASS " : "FAIL ") << v["check"].get<std::string>();
        if (v.contains("detail")) {
            out << " " << v["detail"].dump();
        }
        out << "\n";
    }
    for (const auto& w : report["witnesses"]) {
        out << "witness " << w["check"].get<std::string>() << ": " << w["witness"].dump() << "\n";
    }
    if (report.contains("timing")) {
        out << "elapsed_ms: " << report["timing"]["elapsed_ms"].dump() << "\n";
    }
    out << "status: " << report["status"].get<std::string>() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for multilinear operators on coordinatewise Riesz spaces", "riesz"};
    app.require_subcommand(1);

    Options opts;
    std::string file;
    std::string witness_file;
    std::string perm = "all";
    bool trace = false;
    std::uint64_t seed = 1;
    std::string weight_file;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", opts.json_output, "Emit the JSON report");
        sub->add_flag("--timing", opts.timing, "Include wall-clock time in the report");
    };
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Operator spec (JSON)")->required(); };

    auto* check = app.add_subcommand("check-dp", "Decide disjointness preservation");
    add_file(check);
    add_common(check);

    auto* arens = app.add_subcommand("arens", "Arens extensions and their DP verdicts");
    add_file(arens);
    arens->add_option("--perm", perm, "\"all\", \"id\", \"theta\" or cycle notation such as \"(1 2)\"");
    arens->add_flag("--trace", trace, "Include the intermediate forms");
    add_common(arens);

    auto* mod = app.add_subcommand("modulus", "Modulus and positive/negative parts");
    add_file(mod);
    add_common(mod);

    auto* fac = app.add_subcommand("factorize", "Factor the modulus of a scalar DP form");
    add_file(fac);
    add_common(fac);

    auto* rank = app.add_subcommand("rank", "Lattice rank of the range");
    add_file(rank);
    add_common(rank);

    auto* demo = app.add_subcommand("seq-demo", "Sequence-model instance suite");
    demo->add_option("--seed", seed, "Sampler seed");
    demo->add_option("--weight", weight_file, "diag-bilinear spec supplying the weight");
    add_common(demo);

    auto* replay = app.add_subcommand("replay", "Re-verify a DP witness against an operator");
    add_file(replay);
    replay->add_option("witness", witness_file, "Witness or report (JSON)")->required();
    add_common(replay);

    auto* normalize = app.add_subcommand("normalize", "Print the canonical form of a spec");
    add_file(normalize);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report;
    const CLI::App* sub = app.get_subcommands().front();
    report.command["name"] = sub->get_name();
    try {
        if (sub == normalize) {
            cmd_normalize(read_input(file), out);
            return kExitHolds;
        }
        if (sub == demo) {
            report.command["seed"] = seed;
            report.command["weight"] = !weight_file.empty();
            report.seed = seed;
            cmd_seq_demo(seed, weight_file, report);
        } else {
            const Input input = read_input(file);
            report.input_digest = input.digest;
            if (sub == check) {
                cmd_check_dp(input, report);
            } else if (sub == arens) {
                report.command["perm"] = perm;
                report.command["trace"] = trace;
                cmd_arens(input, perm, trace, report);
            } else if (sub == mod) {
                cmd_modulus(input, report);
            } else if (sub == fac) {
                cmd_factorize(input, report);
            } else if (sub == rank) {
                cmd_rank(input, report);
            } else if (sub == replay) {
                cmd_replay(input, read_input(witness_file), report);
            }
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DimensionError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }

    const bool holds = report.holds();
    json doc{{"version", io::kFormatVersion},
             {"command", report.command},
             {"input_digest", report.input_digest},
             {"seed", report.seed},
             {"result", report.result},
             {"verdicts", report.verdicts},
             {"witnesses", report.witnesses},
             {"status", holds ? "holds" : "fails"}};
    if (opts.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        doc["timing"] = json{{"elapsed_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
    }
    if (opts.json_output) {
        out << io::dump(doc);
    } else {
        print_text(doc, out);
    }
    return holds ? kExitHolds : kExitFails;
}

}  // namespace riesz::cli
