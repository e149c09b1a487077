#include "sandlat/ltheta.hpp"

#include "sandlat/enumerate.hpp"
#include "sandlat/order.hpp"
#include "sandlat/rules.hpp"

#include <algorithm>

namespace sandlat {

int clamp_theta(int n, int theta) { return std::max(theta, -n + 2); }

namespace {

// Scanned span and its gap list: positive prefix for theta >= 2, full vector
// otherwise. gaps[t] = v_{t+1} - v_{t+2} in 0-based storage.
int scan_length(const Composition& a, int theta) {
    return theta >= 2 ? a.positive_prefix_length() : a.n();
}

} // namespace

std::optional<ThetaPattern> find_theta_pattern(const Composition& a, int theta) {
    const int len = scan_length(a, theta);
    const int cliff = theta - 2;   // gap value opening/closing the window
    const int plateau = theta - 1; // interior gap value
    auto gap = [&](int t) { return a.part(t) - a.part(t + 1); }; // 1 <= t <= len-1
    for (int i = 1; i <= len - 1; ++i) {
        if (gap(i) != cliff) continue;
        int t = i + 1;
        while (t <= len - 1 && gap(t) == plateau) ++t;
        if (t <= len - 1 && gap(t) == cliff) return ThetaPattern{i, t - i};
    }
    return std::nullopt;
}

bool theta_member(const Composition& a, int theta) {
    if (theta >= 2 && !a.is_partition()) return false;
    const int len = scan_length(a, theta);
    for (int i = 1; i <= len - 1; ++i) {
        if (a.part(i) - a.part(i + 1) < theta - 2) return false;
    }
    return !find_theta_pattern(a, theta).has_value();
}

std::vector<Composition> generate_by_filter(int n, int theta, std::size_t cap) {
    if (n < 1) fail(Err::InvalidN, "generate_by_filter requires n >= 1");
    std::vector<Composition> out;
    for_each_composition(n, [&](const std::vector<int>& parts) {
        Composition c = make_composition(parts, n);
        if (theta_member(c, theta)) {
            if (out.size() >= cap) fail(Err::CapacityExceeded, "filter set exceeds cap");
            out.push_back(std::move(c));
        }
    });
    return out; // enumeration order is already lexicographically ascending
}

ThetaDecomposition decompose(int n, int theta) {
    if (n < 1) fail(Err::InvalidN, "decompose requires n >= 1");
    if (theta == 1)
        fail(Err::ThetaOneDegenerate, "theta = 1 voids the decomposition constraints");
    const long long q = theta > 1 ? theta - 1 : 1 - theta;
    auto tri = [](long long k) { return k * (k + 1) / 2; };
    long long k = 0;
    while (q * tri(k + 1) <= n) ++k;
    const long long r = n - q * tri(k);
    ThetaDecomposition d;
    d.n = n;
    d.theta = theta;
    d.k = static_cast<int>(k);
    d.l = static_cast<int>(r / (k + 1));
    d.p = static_cast<int>(r % (k + 1));
    return d;
}

namespace {

Composition fixed_point_from_formula(const ThetaDecomposition& d) {
    const int theta = d.theta;
    std::vector<int> parts;
    if (theta >= 2) {
        // l+k(theta-1), ..., l+p(theta-1), then l+(p-1)(theta-1)+1, ..., l+1.
        for (int j = d.k; j >= d.p; --j) parts.push_back(d.l + j * (theta - 1));
        for (int j = d.p - 1; j >= 0; --j) parts.push_back(d.l + j * (theta - 1) + 1);
    } else {
        // 0,...,0, l, l+(1-theta), ..., l+(k-p)(1-theta),
        // l+(k-p+1)(1-theta)+1, ..., l+k(1-theta)+1.
        const int zeros = d.n - (d.k + 1);
        for (int z = 0; z < zeros; ++z) parts.push_back(0);
        for (int j = 0; j <= d.k - d.p; ++j) parts.push_back(d.l + j * (1 - theta));
        for (int j = d.k - d.p + 1; j <= d.k; ++j) parts.push_back(d.l + j * (1 - theta) + 1);
    }
    // Only at n = 1 can the block overrun n; the overhang entries are zeros.
    while (static_cast<int>(parts.size()) > d.n && parts.front() == 0)
        parts.erase(parts.begin());
    return make_composition(std::move(parts), d.n);
}

} // namespace

Composition theta_fixed_point(int n, int theta) {
    if (n < 1) fail(Err::InvalidN, "theta_fixed_point requires n >= 1");
    const int t = clamp_theta(n, theta);
    Composition p;
    if (t == 1) {
        const StateGraph g = StateGraph::generate(staircase_seed(n), RuleSet::theta(1));
        const auto terminals = g.terminals();
        if (terminals.size() != 1)
            throw std::logic_error("theta = 1 order has " + std::to_string(terminals.size()) +
                                   " terminals");
        p = terminals.front();
    } else {
        p = fixed_point_from_formula(decompose(n, t));
    }
    if (!theta_member(p, t) || !successors(p, TransitionRule::theta_rule(t)).empty())
        throw std::logic_error("computed fixed point fails its postcondition: " + p.to_string());
    return p;
}

long long max_chain_length(int n, int theta) {
    if (n < 1) fail(Err::InvalidN, "max_chain_length requires n >= 1");
    const int t = clamp_theta(n, theta);
    if (t == 1) return theta_fixed_point(n, 1).energy();
    const ThetaDecomposition d = decompose(n, t);
    const long long k = d.k, l = d.l, p = d.p, nn = n;
    if (t >= 2) {
        return (t - 1) * ((k - 1) * k * (k + 1)) / 6 + l * (k * (k + 1)) / 2 +
               p * (2 * k - p + 1) / 2;
    }
    return (1 - t) * ((3 * nn - k - 2) * k * (k + 1)) / 6 + l * ((k + 1) * (2 * nn - k - 2)) / 2 +
           p * (2 * nn - p - 1) / 2;
}

bool ThetaChainReport::all_ok() const {
    if (!spm_equals_theta2 || !lb_suborder_of_theta1 || !endpoint_count_ok) return false;
    for (const auto& row : rows) {
        if (!row.lattice_pass || !row.suborder_pass || !row.filter_matches_bfs ||
            !row.fixed_point_is_terminal || !row.chain_matches_depth)
            return false;
    }
    return true;
}

ThetaChainReport theta_chain_report(int n, std::size_t node_cap) {
    if (n < 1) fail(Err::InvalidN, "theta_chain_report requires n >= 1");
    ThetaChainReport report;
    report.n = n;
    const Composition seed = staircase_seed(n);

    std::optional<StateGraph> previous; // L(n, theta+1)
    for (int theta = n; theta >= -n + 2; --theta) {
        StateGraph g = StateGraph::generate(seed, RuleSet::theta(theta), node_cap);
        ThetaChainRow row;
        row.theta = theta;
        row.size = g.size();

        std::vector<Composition> sorted_nodes = g.nodes();
        std::sort(sorted_nodes.begin(), sorted_nodes.end());
        row.filter_matches_bfs = sorted_nodes == generate_by_filter(n, theta, node_cap);

        row.fixed_point = theta_fixed_point(n, theta);
        const auto terminals = g.terminals();
        row.fixed_point_is_terminal =
            terminals.size() == 1 && terminals.front() == row.fixed_point;

        row.chain_length = max_chain_length(n, theta);
        const auto dist = longest_dist_from_seed(g);
        long long depth = 0;
        for (long long d : dist) depth = std::max(depth, d);
        row.chain_matches_depth = row.chain_length == depth &&
                                  row.chain_length == row.fixed_point.energy();

        row.lattice_pass = is_lattice(g).is_lattice;
        row.suborder_pass = previous ? suborder_check(*previous, g) : true;

        if (theta == 2) {
            const StateGraph spm = StateGraph::generate(seed, RuleSet::spm(), node_cap);
            report.spm_equals_theta2 = same_order(spm, g);
        }
        if (theta == 1) {
            const StateGraph lb = StateGraph::generate(seed, RuleSet::lb(), node_cap);
            report.lb_suborder_of_theta1 = suborder_check(lb, g);
        }
        if (theta == -n + 2) {
            report.endpoint_count_ok =
                static_cast<unsigned long long>(g.size()) == composition_count(n);
        }

        report.rows.push_back(std::move(row));
        previous = std::move(g);
    }
    if (n == 1) {
        // Single row (theta = 1 = -n+2); the bracketing graphs coincide with it.
        report.spm_equals_theta2 = true;
        const StateGraph lb = StateGraph::generate(seed, RuleSet::lb(), node_cap);
        const StateGraph l1 = StateGraph::generate(seed, RuleSet::theta(1), node_cap);
        report.lb_suborder_of_theta1 = suborder_check(lb, l1);
        report.endpoint_count_ok = true;
    }
    return report;
}

} // namespace sandlat
