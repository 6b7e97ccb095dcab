#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circlex/census.hpp"
#include "circlex/checks.hpp"
#include "circlex/circulant.hpp"
#include "circlex/decompose.hpp"
#include "circlex/io.hpp"
#include "circlex/isotest.hpp"
#include "circlex/permgroup.hpp"
#include "circlex/zmod.hpp"

using namespace circlex;

namespace {

struct Options {
    SearchLimits limits;
    int threads = 1;
    bool json_inputs = false;
    int exit_code = 0;
};

void print(const Json& j) { std::cout << j.dump() << "\n"; }

void cmd_decompose(const Options& opt, const std::string& arg, bool verify) {
    Circulant c = parse_circulant(arg, opt.json_inputs);
    Decomposition d = decompose(c, opt.limits);
    Json out = to_json(d);
    if (verify) out["verification"] = to_json(verify_decomposition(c, d, opt.limits));
    print(out);
}

void cmd_iso(Options& opt, const std::string& a1, const std::string& a2) {
    CiReport r = ci_isomorphic(parse_circulant(a1, opt.json_inputs),
                               parse_circulant(a2, opt.json_inputs), opt.limits);
    print(to_json(r));
    opt.exit_code = r.isomorphic ? 0 : 1;
}

void cmd_aut(const Options& opt, const std::string& arg) {
    Circulant c = parse_circulant(arg, opt.json_inputs);
    DenseDigraph g = to_dense(c);
    PermGroup aut = automorphism_group(g, opt.limits);
    Json gens = Json::array();
    for (const Permutation& p : aut.generators()) gens.push_back(p.images());
    Json out{{"order", aut.order().str()}, {"generators", gens}};
    if (g.arc_count() > 0 && is_arc_transitive(g, opt.limits))
        out["formula_order"] = aut_order(decompose(c, opt.limits, true)).str();
    else
        out["formula_order"] = nullptr;
    print(out);
}

void cmd_arc_transitive(const Options& opt, const std::string& arg) {
    Circulant c = parse_circulant(arg, opt.json_inputs);
    DenseDigraph g = to_dense(c);
    int orbit = arc_orbit_size(g, opt.limits);
    print(Json{{"arc_transitive", orbit == g.arc_count()},
               {"arc_orbit_size", orbit},
               {"arc_count", g.arc_count()}});
}

void cmd_normal(const Options& opt, const std::string& arg) {
    Circulant c = parse_circulant(arg, opt.json_inputs);
    PermGroup aut = automorphism_group(to_dense(c), opt.limits);
    BigInt normalizer =
        BigInt(c.order()) * static_cast<int>(multiplier_stabilizer(c).size());
    Json out{{"normal", is_normal_circulant(c, opt.limits)},
             {"aut_order", aut.order().str()},
             {"normalizer_order", normalizer.str()}};
    if (aut.order() <= opt.limits.group_budget)
        out["regular_cyclic_count"] =
            regular_cyclic_subgroups(aut, opt.limits.group_budget).size();
    else
        out["regular_cyclic_count"] = nullptr;
    print(out);
}

void cmd_census(const Options& opt, int n, const std::string& method,
                const std::string& format) {
    std::vector<CensusEntry> entries;
    if (method == "exhaustive") {
        entries = census_exhaustive(n, opt.limits, opt.threads);
    } else if (method == "constructive") {
        entries = census_constructive(n, opt.limits);
    } else {
        entries = census_exhaustive(n, opt.limits, opt.threads);
        std::vector<CensusEntry> other = census_constructive(n, opt.limits);
        bool agree = entries.size() == other.size();
        for (size_t i = 0; agree && i < entries.size(); ++i)
            agree = entries[i].canonical == other[i].canonical;
        if (!agree) throw std::runtime_error("census methods disagree at n=" + std::to_string(n));
    }
    if (format == "csv")
        std::cout << census_csv(entries);
    else
        print(to_json(entries));
}

void cmd_product_tensor(const Options& opt, const std::string& a1, const std::string& a2) {
    Circulant c1 = parse_circulant(a1, opt.json_inputs);
    Circulant c2 = parse_circulant(a2, opt.json_inputs);
    if (std::gcd(c1.order(), c2.order()) == 1) {
        // coprime orders: the product is itself a circulant, with vertex x
        // standing for the pair (x mod n1, x mod n2)
        int n = c1.order() * c2.order();
        const auto& s1 = c1.connection_set();
        const auto& s2 = c2.connection_set();
        std::vector<int> s;
        for (int x = 0; x < n; ++x)
            if (std::binary_search(s1.begin(), s1.end(), x % c1.order()) &&
                std::binary_search(s2.begin(), s2.end(), x % c2.order()))
                s.push_back(x);
        print(Json{{"circulant", to_json(Circulant(n, std::move(s)))}});
    } else {
        print(Json{{"digraph", to_json(tensor_product(to_dense(c1), to_dense(c2)))}});
    }
}

void cmd_product_lex(const Options& opt, const std::string& arg, int b) {
    Circulant c = parse_circulant(arg, opt.json_inputs);
    if (b < 1) throw std::invalid_argument("block count must be at least 1");
    std::vector<int> s;
    for (int v : c.connection_set())
        for (int j = 0; j < b; ++j) s.push_back(v + j * c.order());
    print(Json{{"circulant", to_json(Circulant(c.order() * b, std::move(s)))}});
}

void cmd_verify_paper(Options& opt, int max_n) {
    std::vector<CheckResult> results = run_structure_checks(max_n, opt.limits, opt.threads);
    size_t width = 0;
    for (const CheckResult& r : results) width = std::max(width, r.name.size());
    int passed = 0;
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name
                  << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
        if (r.pass) ++passed;
    }
    std::cout << results.size() << " checks, " << passed << " passed\n";
    if (passed != static_cast<int>(results.size())) opt.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure toolkit for connected arc-transitive circulant digraphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--aut-bound", opt.limits.aut_bound,
                   "largest digraph order the automorphism search accepts")
        ->envname("CIRCLEX_AUT_BOUND")
        ->capture_default_str();
    app.add_option("--group-budget", opt.limits.group_budget,
                   "largest group order element enumeration accepts")
        ->envname("CIRCLEX_GROUP_BUDGET")
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "parallelism degree for census enumeration")
        ->envname("CIRCLEX_THREADS")
        ->capture_default_str();
    app.add_flag("--json", opt.json_inputs,
                 "require circulant arguments in JSON form {\"n\":8,\"s\":[1,3]}");

    std::string arg1, arg2;
    bool verify = false;
    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "factor a circulant into core, complete factors, blocks");
    decompose_cmd->add_option("circulant", arg1, "circulant, e.g. \"8:1,2,3,5,6,7\"")->required();
    decompose_cmd->add_flag("--verify", verify, "audit the factorization and attach the report");
    decompose_cmd->callback([&] { cmd_decompose(opt, arg1, verify); });

    CLI::App* iso_cmd = app.add_subcommand("iso", "test two circulants for isomorphism");
    iso_cmd->add_option("first", arg1, "circulant")->required();
    iso_cmd->add_option("second", arg2, "circulant")->required();
    iso_cmd->callback([&] { cmd_iso(opt, arg1, arg2); });

    CLI::App* aut_cmd = app.add_subcommand("aut", "automorphism group generators and order");
    aut_cmd->add_option("circulant", arg1, "circulant")->required();
    aut_cmd->callback([&] { cmd_aut(opt, arg1); });

    CLI::App* at_cmd = app.add_subcommand("arc-transitive", "arc orbit evidence");
    at_cmd->add_option("circulant", arg1, "circulant")->required();
    at_cmd->callback([&] { cmd_arc_transitive(opt, arg1); });

    CLI::App* normal_cmd =
        app.add_subcommand("normal", "is the translation subgroup normal in Aut");
    normal_cmd->add_option("circulant", arg1, "circulant")->required();
    normal_cmd->callback([&] { cmd_normal(opt, arg1); });

    int census_n = 0;
    std::string method = "exhaustive", format = "json";
    CLI::App* census_cmd =
        app.add_subcommand("census", "all isomorphism classes of a given order");
    census_cmd->add_option("n", census_n, "number of vertices")->required();
    census_cmd->add_option("--method", method, "exhaustive, constructive, or both")
        ->check(CLI::IsMember({"exhaustive", "constructive", "both"}))
        ->capture_default_str();
    census_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    census_cmd->callback([&] { cmd_census(opt, census_n, method, format); });

    std::vector<std::string> tensor_args;
    std::vector<std::string> lex_args;
    CLI::App* product_cmd = app.add_subcommand("product", "tensor or block product");
    CLI::Option* tensor_opt =
        product_cmd->add_option("--tensor", tensor_args, "two circulants")->expected(2);
    CLI::Option* lex_opt =
        product_cmd->add_option("--lex", lex_args, "circulant and block count")->expected(2);
    tensor_opt->excludes(lex_opt);
    lex_opt->excludes(tensor_opt);
    product_cmd->callback([&] {
        if (!tensor_args.empty())
            cmd_product_tensor(opt, tensor_args[0], tensor_args[1]);
        else if (!lex_args.empty())
            cmd_product_lex(opt, lex_args[0], std::stoi(lex_args[1]));
        else
            throw std::invalid_argument("product requires --tensor or --lex");
    });

    int max_n = 12;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify-paper", "run the structure verification suite");
    verify_cmd->add_option("--max-n", max_n, "largest order swept")->capture_default_str();
    verify_cmd->callback([&] { cmd_verify_paper(opt, max_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return opt.exit_code;
}
