#pragma once

// Command dispatch for the snfc tool. Kept out of main() so tests can run
// commands in-process with a controlled environment.

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snfc/capacity_bounds.hpp"
#include "snfc/code.hpp"
#include "snfc/cuts.hpp"
#include "snfc/error.hpp"
#include "snfc/fixtures.hpp"
#include "snfc/io.hpp"
#include "snfc/network.hpp"
#include "snfc/verification.hpp"

namespace snfc::cli {

using Env = std::map<std::string, std::string>;
using nlohmann::json;

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t exhaustive_cap(const Env& env) {
    auto it = env.find("SNFC_MAX_EXHAUSTIVE");
    if (it == env.end()) return kDefaultExhaustiveCap;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(it->second, &used);
        if (used == it->second.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("SNFC_MAX_EXHAUSTIVE must be a non-negative integer, got '" + it->second + "'");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::vector<std::size_t> node_list(const Network& n, const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& name : split_list(s)) out.push_back(n.node_index(name));
    return out;
}

/// Hand-authored codes carried by the built-in examples.
inline std::optional<SecureNetworkCode> builtin_code(const std::string& network, const std::string& code) {
    if (network == "n1" && (code.empty() || code == "n1"))
        return fixtures::secure_code_from(fixtures::n1(), fixtures::n1_code_spec());
    if (network == "butterfly" && (code.empty() || code == "butterfly_gf4")) return fixtures::butterfly_secure_code();
    if (network == "butterfly" && code == "butterfly_gf2")
        return fixtures::secure_code_from(fixtures::butterfly(), fixtures::butterfly_gf2_spec());
    return std::nullopt;
}

/// Where the network (and, for example mode, a default code) comes from.
struct Source {
    std::string example;  // empty unless running under `example NAME`
};

class Runner {
public:
    Runner(const Env& env, std::ostream& out, std::ostream& err) : env_(env), out_(out), err_(err) {}

    int run(const std::vector<std::string>& args, const Source& src = {}) {
        CLI::App app{"Secure network function computation: bounds, cuts, code construction and verification", "snfc"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all");

        std::string network_path, code_path, out_path, field, from, to, sources, edges, example_name;
        std::size_t r = 0, rate = 0;
        std::uint64_t seed = 1;
        bool oracle = false, exhaustive = false, fast = false;
        const bool in_example = !src.example.empty();

        // Not marked required: `cuts` and its modes share the option.
        auto add_network = [&](CLI::App* c) { c->add_option("--network", network_path, "network JSON file"); };
        auto add_json = [&](CLI::App* c) { c->add_flag("--json", json_, "print JSON"); };

        auto* bound = app.add_subcommand("bound", "capacity bounds for an r-edge wiretapper");
        add_network(bound);
        bound->add_option("--r", r, "security level")->required();
        bound->add_flag("--oracle", oracle, "also evaluate the brute-force upper bound");
        add_json(bound);

        auto* cuts = app.add_subcommand("cuts", "minimum cut queries");
        cuts->require_subcommand(1);
        auto* mincut = cuts->add_subcommand("mincut", "primary minimum cut between node sets");
        mincut->add_option("--from", from, "origin nodes, comma separated")->required();
        mincut->add_option("--to", to, "target node")->required();
        auto* primary = cuts->add_subcommand("primary", "primary minimum cut separating edges from nodes");
        primary->add_option("--sources", sources, "origin nodes, comma separated")->required();
        primary->add_option("--edges", edges, "target edges, comma separated")->required();
        for (auto* c : {cuts, mincut, primary}) {
            add_network(c);
            add_json(c);
        }

        auto* construct = app.add_subcommand("construct", "build a secure sum-computing code");
        add_network(construct);
        construct->add_option("--r", r, "security level")->required();
        auto* rate_opt = construct->add_option("--rate", rate, "code rate R (default C_min)");
        auto* field_opt = construct->add_option("--field", field, "starting field p^m");
        construct->add_option("--seed", seed, "multicast kernel seed");
        auto* out_opt = construct->add_option("--out", out_path, "code file to write");
        if (!in_example) out_opt->required();
        add_json(construct);

        auto* verify = app.add_subcommand("verify", "check computability and security of a code");
        add_network(verify);
        auto* code_opt = verify->add_option("--code", code_path, "code JSON file");
        if (!in_example) code_opt->required();
        verify->add_option("--r", r, "security level")->required();
        verify->add_flag("--exhaustive", exhaustive, "also enumerate every source input");
        verify->add_flag("--fast", fast, "enumerate only primary wiretap sets");
        add_json(verify);

        auto* example = app.add_subcommand("example", "run a command on a built-in network");
        example->add_option("name", example_name, "n1, butterfly or fig2")->required();
        example->prefix_command();
        if (in_example) example->group("");

        try {
            std::vector<std::string> rev(args.rbegin(), args.rend());
            app.parse(rev);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err_ << "usage: " << e.what() << "\n";
            return kUsage;
        }

        try {
            if (*example) {
                if (in_example) throw UsageError("example cannot be nested");
                return run_example(example_name, example->remaining());
            }
            if (*bound) return cmd_bound(load_network(network_path, src), r, oracle);
            if (*mincut) return cmd_mincut(load_network(network_path, src), from, to);
            if (*primary) return cmd_primary(load_network(network_path, src), sources, edges);
            if (*cuts) throw UsageError("cuts needs mincut or primary");
            if (*construct) {
                ConstructOptions opt;
                if (*rate_opt) opt.rate = rate;
                if (*field_opt) opt.field = Field::parse(field);
                opt.seed = seed;
                return cmd_construct(load_network(network_path, src), r, opt, out_path);
            }
            if (*verify) {
                const Network n = load_network(network_path, src);
                return cmd_verify(n, load_code(n, code_path, src), r, exhaustive, fast);
            }
        } catch (const UsageError& e) {
            err_ << "usage: " << e.what() << "\n";
            return kUsage;
        } catch (const Error& e) {
            if (json_) out_ << json{{"error", std::string(code_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
            err_ << "error: " << e.what() << "\n";
            return kDomainError;
        }
        err_ << "usage: no command\n";
        return kUsage;
    }

private:
    const Env& env_;
    std::ostream& out_;
    std::ostream& err_;
    bool json_ = false;

    Network load_network(const std::string& path, const Source& src) {
        if (!path.empty()) return Network::parse(read_file(path));
        if (src.example.empty()) throw UsageError("--network is required");
        return fixtures::by_name(src.example);
    }

    SecureNetworkCode load_code(const Network& n, const std::string& path, const Source& src) {
        if (!src.example.empty()) {
            if (auto c = builtin_code(src.example, path)) return *c;
            if (path.empty()) throw UsageError("example '" + src.example + "' has no built-in code; pass --code FILE");
        }
        return io::parse_code(n, read_file(path));
    }

    int run_example(const std::string& name, std::vector<std::string> rest) {
        const auto known = fixtures::names();
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw UsageError("unknown example '" + name + "' (n1, butterfly, fig2)");
        if (rest.empty()) {
            out_ << fixtures::by_name(name).to_json().dump(2) << "\n";
            return kOk;
        }
        // `--cuts MODE ...` is shorthand for `cuts MODE ...`.
        if (rest.front() == "--cuts") rest.front() = "cuts";
        return Runner(env_, out_, err_).run(rest, Source{name});
    }

    int cmd_bound(const Network& n, std::size_t r, bool oracle) {
        const auto rep = upper_bound(n, r);
        std::optional<std::size_t> brute;
        if (oracle) brute = upper_bound_oracle(n, r);
        if (json_) {
            json j = io::bound_report_json(n, rep);
            if (brute) j["oracle"] = *brute;
            out_ << j.dump() << "\n";
        } else {
            out_ << "C_min      " << rep.c_min << "\n"
                 << "C_min_bar  " << rep.c_min_bar << "\n"
                 << "upper      " << rep.upper << "\n"
                 << "lower      " << rep.lower << "\n";
            if (rep.exact) out_ << "exact      " << rep.exact->value << " (" << reason_name(rep.exact->reason) << ")\n";
            out_ << "witness W  {" << join(n.edge_ids(rep.witness_w)) << "}, cut {" << join(n.edge_ids(rep.witness_cut))
                 << "}\n";
            if (brute) out_ << "oracle     " << *brute << "\n";
        }
        if (brute && *brute != rep.upper)
            throw Error(ErrorCode::ValidationFailure, "oracle " + std::to_string(*brute) + " differs from upper bound " +
                                                          std::to_string(rep.upper));
        return kOk;
    }

    int cmd_mincut(const Network& n, const std::string& from, const std::string& to) {
        const auto rep = min_cut(n, node_list(n, from), n.node_index(to));
        if (json_) {
            out_ << io::cut_report_json(n, rep).dump() << "\n";
        } else {
            out_ << "capacity " << rep.capacity << "\ncut {" << join(n.edge_ids(rep.cut_edges)) << "}\n";
        }
        return kOk;
    }

    int cmd_primary(const Network& n, const std::string& sources, const std::string& edges) {
        const auto cut = primary_min_cut(n, node_list(n, sources), n.edge_set(split_list(edges)));
        if (json_)
            out_ << json{{"cut", n.edge_ids(cut)}}.dump() << "\n";
        else
            out_ << "{" << join(n.edge_ids(cut)) << "}\n";
        return kOk;
    }

    int cmd_construct(const Network& n, std::size_t r, const ConstructOptions& opt, const std::string& out_path) {
        const auto res = construct_report(n, r, opt);
        const auto& sc = res.code;
        const json code = io::code_to_json(n, sc);
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw Error(ErrorCode::MalformedInput, "cannot write '" + out_path + "'");
            f << code.dump(2) << "\n";
        }
        json summary{{"field", sc.field().to_string()},
                     {"rate", sc.rate()},
                     {"r", sc.r},
                     {"message_dims", sc.message_dims()},
                     {"B", io::rows_json(sc.B)},
                     {"family", res.family},
                     {"fields_tried", res.fields_tried}};
        if (sc.field().m() > 1) {
            const auto lifted = lift_extension(sc);
            summary["lifted"] = {{"field", lifted.base.to_string()}, {"ell", lifted.ell}, {"n", lifted.n}};
        } else {
            summary["lifted"] = nullptr;
        }
        if (out_path.empty()) summary["code"] = code;
        if (json_) {
            out_ << summary.dump() << "\n";
        } else {
            out_ << "field GF(" << sc.field().to_string() << "), R = " << sc.rate() << ", r = " << sc.r
                 << ", secure rate " << sc.message_dims() << "\n"
                 << "B chosen against " << res.family << " after " << res.fields_tried << " field(s)\n";
            if (out_path.empty()) out_ << code.dump(2) << "\n";
            else out_ << "wrote " << out_path << "\n";
        }
        return kOk;
    }

    int cmd_verify(const Network& n, const SecureNetworkCode& sc, std::size_t r, bool exhaustive, bool fast) {
        VerifyOptions opt;
        opt.exhaustive = exhaustive;
        opt.fast = fast;
        opt.cap = exhaustive_cap(env_);
        if (exhaustive && input_space_size(sc, opt.cap) > opt.cap)
            throw Error(ErrorCode::TooLarge, "q^(Rs) exceeds the exhaustive cap of " + std::to_string(opt.cap) +
                                                 " (raise SNFC_MAX_EXHAUSTIVE)");
        const auto rep = snfc::verify(sc, n, r, opt);
        const bool pass = rep.all_ok() && (!exhaustive || (rep.computable_exhaustive.value_or(false) &&
                                                           rep.secure_exhaustive.value_or(false)));
        if (json_) {
            out_ << io::verify_report_json(n, rep).dump() << "\n";
        } else {
            auto flag = [](std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "not run"; };
            out_ << "computable          " << (rep.computable ? "yes" : "no") << "\n"
                 << "secure (rank)       " << (rep.secure_rank ? "yes" : "no") << "\n"
                 << "secure (exhaustive) " << flag(rep.secure_exhaustive) << "\n"
                 << "rate                " << rep.ell << "/" << rep.n << " (upper bound " << rep.upper << ")\n";
            if (rep.failing_w) out_ << "leaking W           {" << join(n.edge_ids(*rep.failing_w)) << "}\n";
            if (!rep.failure.empty()) out_ << "failure             " << rep.failure << "\n";
        }
        return pass ? kOk : kDomainError;
    }

    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s;
    }
};

inline int run(const std::vector<std::string>& args, const Env& env, std::ostream& out, std::ostream& err) {
    return Runner(env, out, err).run(args);
}

}  // namespace snfc::cli
