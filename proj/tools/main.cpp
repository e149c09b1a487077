// Command-line driver: exhaustive order generation, closed-form evaluation
// and the verification suites, with text/JSON/DOT/CSV output.

#include "sandlat/cfg.hpp"
#include "sandlat/enumerate.hpp"
#include "sandlat/graph_io.hpp"
#include "sandlat/ltheta.hpp"
#include "sandlat/order.hpp"
#include "sandlat/spm.hpp"
#include "sandlat/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sandlat;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::size_t node_cap_from_env() {
    if (const char* raw = std::getenv("SANDLAT_NODE_CAP")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (end && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
        std::cerr << "ignoring malformed SANDLAT_NODE_CAP='" << raw << "'\n";
    }
    return kDefaultNodeCap;
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::ParseError, "cannot open output file " + path);
    out << content;
}

void check_n(int n) {
    if (n < 1 || n > 64) fail(Err::InvalidN, "n must be in [1, 64]");
}

struct GenerateArgs {
    int n = 0;
    std::string rule;
    std::string format = "text";
    std::string origin;
    std::string out;
};

int cmd_generate(const GenerateArgs& args, std::size_t cap) {
    check_n(args.n);
    const RuleSet rule = RuleSet::parse(args.rule);
    const Composition seed =
        args.origin.empty() ? staircase_seed(args.n) : parse_composition(args.origin, args.n);
    const StateGraph g = StateGraph::generate(seed, rule, cap);
    if (args.format == "text") {
        write_output(to_text(g), args.out);
    } else if (args.format == "json") {
        write_output(to_json(g), args.out);
    } else if (args.format == "dot") {
        write_output(to_dot(g), args.out);
    } else {
        fail(Err::ParseError, "unknown format '" + args.format + "'");
    }
    return kExitPass;
}

int parse_int(const std::string& text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        fail(Err::ParseError, "expected an integer, got '" + text + "'");
    return value;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) {
        const int n = parse_int(text);
        return {n, n};
    }
    return {parse_int(text.substr(0, sep)), parse_int(text.substr(sep + 2))};
}

int cmd_verify(const std::string& range, const std::string& suite_name, const std::string& out,
               std::size_t cap) {
    const auto [lo, hi] = parse_range(range);
    check_n(lo);
    check_n(hi);
    VerifyOptions options;
    options.node_cap = cap;
    const VerifyReport report = run_suite(parse_suite(suite_name), lo, hi, options);
    write_output(report.to_csv(), out);
    if (const VerifyRow* failure = report.first_failure()) {
        std::cerr << "FAIL n=" << failure->n << " " << failure->param << " "
                  << failure->property << " witness: " << failure->witness << "\n";
        return kExitVerifyFail;
    }
    return kExitPass;
}

int cmd_classes(int n, bool with_members, const std::string& format, const std::string& out,
                std::size_t cap) {
    check_n(n);
    const ClassPartition classes = partition_classes(n);
    if (format == "dot") {
        const StateGraph lb = StateGraph::generate(staircase_seed(n), RuleSet::lb(), cap);
        write_output(to_dot_classes(lb, classes), out);
        return kExitPass;
    }
    std::ostringstream text;
    for (const auto& cls : classes.classes) {
        text << cls.fixed_point.to_string() << " size=" << cls.members.size();
        if (with_members) {
            text << " members=";
            for (std::size_t i = 0; i < cls.members.size(); ++i) {
                if (i) text << ' ';
                text << cls.members[i].to_string();
            }
        }
        text << '\n';
    }
    write_output(text.str(), out);
    return kExitPass;
}

int cmd_fixed_point(int n, int theta, const std::string& out) {
    check_n(n);
    write_output(theta_fixed_point(n, theta).to_string() + "\n", out);
    return kExitPass;
}

int cmd_chain(int n, const std::string& out, std::size_t cap) {
    check_n(n);
    const ThetaChainReport report = theta_chain_report(n, cap);
    std::ostringstream csv;
    csv << "theta,size,fixed_point,chain_length,lattice_pass,suborder_pass\n";
    for (const auto& row : report.rows) {
        csv << row.theta << ',' << row.size << ',' << csv_field(row.fixed_point.to_string())
            << ',' << row.chain_length << ',' << (row.lattice_pass ? "pass" : "fail") << ','
            << (row.suborder_pass ? "pass" : "fail") << '\n';
    }
    csv << "# theta below " << (-n + 2) << " generates the same order as theta=" << (-n + 2)
        << "\n";
    csv << "# spm==theta:2 " << (report.spm_equals_theta2 ? "pass" : "fail")
        << "; lb suborder of theta:1 " << (report.lb_suborder_of_theta1 ? "pass" : "fail")
        << "; |L(n," << (-n + 2) << ")|==C(2n-1,n) " << (report.endpoint_count_ok ? "pass" : "fail")
        << "\n";
    write_output(csv.str(), out);
    return report.all_ok() ? kExitPass : kExitVerifyFail;
}

int cmd_cfg_verify(int n, int m, const std::string& origin_text, const std::string& out,
                   std::size_t cap) {
    check_n(n);
    const Composition origin =
        origin_text.empty() ? staircase_seed(n) : parse_composition(origin_text, n);
    const StateGraph g = StateGraph::generate(origin, RuleSet::cfg(m), cap);
    const OrderIndex oi(g);

    std::ostringstream csv;
    csv << "property,pass,detail\n";
    bool all = true;
    auto emit = [&](const std::string& property, bool pass, const std::string& detail) {
        csv << property << ',' << (pass ? "pass" : "fail") << ',' << csv_field(detail) << '\n';
        all = all && pass;
    };

    bool order_ok = true;
    std::string order_witness;
    for (int x = 0; x < static_cast<int>(g.size()) && order_ok; ++x) {
        for (int y = 0; y < static_cast<int>(g.size()); ++y) {
            if (cfg_leq(origin, g.node(x), g.node(y), m) != oi.reachable(x, y)) {
                order_ok = false;
                order_witness = g.node(x).to_string() + " vs " + g.node(y).to_string();
                break;
            }
        }
    }
    emit("shot-order-equals-reachability", order_ok, order_witness);

    bool inf_ok = true;
    std::string inf_witness;
    std::vector<std::uint64_t> scratch;
    for (int x = 0; x < static_cast<int>(g.size()) && inf_ok; ++x) {
        for (int y = x + 1; y < static_cast<int>(g.size()); ++y) {
            const auto brute = oi.inf(x, y, scratch);
            if (!brute || g.node(*brute) != cfg_inf(origin, g.node(x), g.node(y), m)) {
                inf_ok = false;
                inf_witness = g.node(x).to_string() + " vs " + g.node(y).to_string();
                break;
            }
        }
    }
    emit("shot-max-inf-equals-brute-inf", inf_ok, inf_witness);

    const auto lattice = is_lattice(g);
    emit("order-is-lattice", lattice.is_lattice, lattice.detail);

    const auto convergence = strong_convergence_check(origin, m);
    emit("strongly-convergent", convergence.ok,
         "terminal=" + convergence.terminal.to_string() +
             " moves=" + std::to_string(convergence.moves));

    const auto greedoid = greedoid_check(origin, m, static_cast<int>(g.max_level()));
    emit("word-language-is-greedoid", greedoid.ok,
         "words=" + std::to_string(greedoid.words));

    write_output(csv.str(), out);
    return all ? kExitPass : kExitVerifyFail;
}

int cmd_cfg_language(int n, int m, int max_len, const std::string& origin_text,
                     const std::string& out) {
    check_n(n);
    const Composition origin =
        origin_text.empty() ? staircase_seed(n) : parse_composition(origin_text, n);
    // Depth-first in letter order, short words first within each branch.
    std::ostringstream text;
    struct Frame {
        Composition state;
        int next_letter;
    };
    std::vector<int> word;
    std::vector<Frame> stack{{origin, 1}};
    text << "\n"; // the empty word
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (static_cast<int>(word.size()) >= max_len || top.next_letter + m > n) {
            stack.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        const int letter = top.next_letter++;
        if (auto next = cfg_step(top.state, letter, m)) {
            word.push_back(letter);
            for (std::size_t i = 0; i < word.size(); ++i) {
                if (i) text << ',';
                text << word[i];
            }
            text << '\n';
            stack.push_back({std::move(*next), 1});
        }
    }
    write_output(text.str(), out);
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sand-pile transition systems: orders, lattices and closed forms"};
    app.require_subcommand(1);
    const std::size_t cap = node_cap_from_env();

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "generate the order reachable from a seed");
    generate->add_option("--n", gen.n, "total grain count")->required();
    generate->add_option("--rule", gen.rule, "lb | spm | theta:<int> | cfg:<int>")->required();
    generate->add_option("--format", gen.format, "text | json | dot");
    generate->add_option("--origin", gen.origin, "seed composition, default (n,0,...,0)");
    generate->add_option("--out", gen.out, "output path, default stdout");

    std::string verify_range, verify_suite = "all", verify_out;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--n", verify_range, "n or lo..hi range")->required();
    verify->add_option("--suite", verify_suite,
                       "thm1|thm2|prop1|prop2|thm3|cor1|thm5|thm6|thm7|thm8|thm9|prop3|prop4|"
                       "prop5|cor2|lemma2|all");
    verify->add_option("--out", verify_out, "output path, default stdout");

    int classes_n = 0;
    bool classes_members = false;
    std::string classes_format = "text", classes_out;
    auto* classes = app.add_subcommand("classes", "vertical-rule classes of the lb order");
    classes->add_option("--n", classes_n, "total grain count")->required();
    classes->add_flag("--members", classes_members, "list class members");
    classes->add_option("--format", classes_format, "text | dot");
    classes->add_option("--out", classes_out, "output path, default stdout");

    int fp_n = 0, fp_theta = 0;
    std::string fp_out;
    auto* fixed_point = app.add_subcommand("fixed-point", "closed-form fixed point of theta order");
    fixed_point->add_option("--n", fp_n, "total grain count")->required();
    fixed_point->add_option("--theta", fp_theta, "gap threshold")->required();
    fixed_point->add_option("--out", fp_out, "output path, default stdout");

    int chain_n = 0;
    std::string chain_out;
    auto* chain = app.add_subcommand("chain", "per-theta report over the whole lattice chain");
    chain->alias("theta-report");
    chain->add_option("--n", chain_n, "total grain count")->required();
    chain->add_option("--out", chain_out, "output path, default stdout");

    int cv_n = 0, cv_m = 0;
    std::string cv_origin, cv_out;
    auto* cfg_verify = app.add_subcommand("cfg-verify", "property table for one cfg order");
    cfg_verify->add_option("n", cv_n, "total grain count")->required();
    cfg_verify->add_option("m", cv_m, "firing width")->required();
    cfg_verify->add_option("--origin", cv_origin, "origin composition, default (n,0,...,0)");
    cfg_verify->add_option("--out", cv_out, "output path, default stdout");

    int cl_n = 0, cl_m = 0, cl_len = 0;
    std::string cl_origin, cl_out;
    auto* cfg_language = app.add_subcommand("cfg-language", "stream the valid firing words");
    cfg_language->add_option("n", cl_n, "total grain count")->required();
    cfg_language->add_option("m", cl_m, "firing width")->required();
    cfg_language->add_option("L", cl_len, "maximum word length")->required();
    cfg_language->add_option("--origin", cl_origin, "origin composition, default (n,0,...,0)");
    cfg_language->add_option("--out", cl_out, "output path, default stdout");

    try {
        app.parse(argc, argv);
        if (generate->parsed()) return cmd_generate(gen, cap);
        if (verify->parsed()) return cmd_verify(verify_range, verify_suite, verify_out, cap);
        if (classes->parsed())
            return cmd_classes(classes_n, classes_members, classes_format, classes_out, cap);
        if (fixed_point->parsed()) return cmd_fixed_point(fp_n, fp_theta, fp_out);
        if (chain->parsed()) return cmd_chain(chain_n, chain_out, cap);
        if (cfg_verify->parsed()) return cmd_cfg_verify(cv_n, cv_m, cv_origin, cv_out, cap);
        if (cfg_language->parsed())
            return cmd_cfg_language(cl_n, cl_m, cl_len, cl_origin, cl_out);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        if (e.code() == Err::CapacityExceeded) return kExitCapacity;
        if (e.code() == Err::ParseError || e.code() == Err::InvalidN ||
            e.code() == Err::InvalidRule)
            return kExitUsage;
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
