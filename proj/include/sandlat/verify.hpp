#pragma once

#include "sandlat/state_graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sandlat {

/// Verification suites exposed by the CLI. Each one checks a family of
/// structural claims against independent routes (closed form vs brute force,
/// filter vs generation, shot vectors vs reachability, ...).
enum class Suite {
    Thm1,   // fixed points <-> strict partitions, dual anti-isomorphism
    Thm2,   // vertical-rule classes partition L_B(n); unique fixed point below each element
    Prop1,  // shot-vector order == reachability in cfg graphs
    Prop2,  // pointwise-max shot vector == brute-force inf
    Thm3,   // cfg graphs (all origins) plus spm/lb are lattices
    Cor1,   // strong convergence of the cfg game
    Thm5,   // the cfg word language is a greedoid
    Thm6,   // membership filter == generated node set, every theta
    Thm7,   // reachability == extended dominance inside each theta order
    Thm8,   // theta orders are lattices; prefix-min inf == brute-force inf
    Thm9,   // suborder chain over consecutive theta; endpoint count C(2n-1,n)
    Prop3,  // spm == theta:2 exactly; lb is a suborder of theta:1
    Prop4,  // closed-form fixed point == breadth-first terminal, every theta
    Prop5,  // closed-form chain length == energy == depth, theta != 1
    Cor2,   // a_i - a_{i+l} > l(theta-1) - 2 for every member and window
    Lemma2, // shot-vector domination transfers firability between nodes
    All,
};

Suite parse_suite(std::string_view name);
const char* to_string(Suite s);

struct VerifyRow {
    int n = 0;
    std::string param;    // "theta=2", "m=1,origin=[...]", "-"
    std::string property; // short machine-readable property label
    bool pass = false;
    std::string witness;  // first counterexample, empty on pass
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass() const;
    const VerifyRow* first_failure() const;
    std::string to_csv() const;
};

/// Quotes a value for CSV output when it contains commas, quotes or newlines.
std::string csv_field(const std::string& value);

struct VerifyOptions {
    std::size_t node_cap = kDefaultNodeCap;
    /// Random play-outs per (n, m) cell for the convergence suite above the
    /// exhaustive range.
    std::size_t playouts_per_cell = 139;
    /// Random extra cfg origins per (n, m) cell for Prop1/Prop2.
    std::size_t random_origins = 5;
    std::uint32_t seed = 0x5EEDBA5Eu;
};

/// Runs one suite for every n in [n_lo, n_hi], appending one row per checked
/// property instance.
VerifyReport run_suite(Suite suite, int n_lo, int n_hi, const VerifyOptions& options = {});

} // namespace sandlat
