#include "ccplab/ccp.hpp"

#include <cmath>
#include <cstdlib>

#include "ccplab/numeric.hpp"

namespace ccplab {

ValidationResult validate_instance(const CcpInstance& inst) {
    ValidationResult r;
    if (inst.N < 1) {
        r.violations.push_back("N must be positive, got " + std::to_string(inst.N));
    }
    if (inst.M < 2) {
        r.violations.push_back("M must be at least 2, got " + std::to_string(inst.M));
    }
    if (inst.d < 2) {
        r.violations.push_back("d must be at least 2, got " + std::to_string(inst.d));
    }
    if (inst.mu < 0) {
        r.violations.push_back("mu must be non-negative, got " + std::to_string(inst.mu));
    }
    if (inst.N >= 1 && inst.mu >= 0 && 2 * inst.mu + 1 > inst.N) {
        r.violations.push_back("promise windows overlap: 2*mu+1 = " +
                               std::to_string(2 * inst.mu + 1) + " exceeds N = " +
                               std::to_string(inst.N));
    }
    if (!r.ok()) return r;

    if (inst.mu == 0) {
        r.notes.push_back("degenerate promise (mu = 0): every link difference is pinned exactly");
    }
    if (inst.N <= 10 * inst.mu * inst.M) {
        r.notes.push_back("asymptotic regime strained: N = " + std::to_string(inst.N) +
                          " <= 10*mu*M = " + std::to_string(10 * inst.mu * inst.M));
    }
    if (!drift_regime_ok(inst)) {
        r.notes.push_back("accumulated drift mu*(M-1) = " +
                          std::to_string(static_cast<long long>(inst.mu) * (inst.M - 1)) +
                          " can leave the answer window (>= N - mu = " +
                          std::to_string(inst.N - inst.mu) + ")");
    }
    return r;
}

bool drift_regime_ok(const CcpInstance& inst) {
    return static_cast<long long>(inst.mu) * (inst.M - 1) <
           static_cast<long long>(inst.N) - inst.mu;
}

LinkDecomposition decompose_link(long long x, long long y, const CcpInstance& inst) {
    const long long dn = inst.alphabet();
    const long long diff = mod_floor(x - y, dn);
    // Nearest multiple of N; q may equal d when diff wraps near dN.
    const long long q = (diff + inst.N / 2) / inst.N;
    const long long b = diff - q * inst.N;
    if (std::llabs(b) > inst.mu) {
        const long long nearest_label = mod_floor(q, inst.d);
        throw PromiseViolation(
            "promise violated: x = " + std::to_string(mod_floor(x, dn)) + ", y = " +
            std::to_string(mod_floor(y, dn)) + ", x - y = " + std::to_string(diff) +
            " (mod " + std::to_string(dn) + ") is outside every window; nearest is S_" +
            std::to_string(nearest_label) + " at distance " +
            std::to_string(std::llabs(b) - inst.mu));
    }
    return LinkDecomposition{static_cast<int>(mod_floor(q, inst.d)), static_cast<int>(b)};
}

std::pair<long long, long long> InputAssignment::link_inputs(int k) const {
    const int n_links = static_cast<int>(links.size());
    const long long x = k == 0 ? x_first : middle[static_cast<size_t>(k) - 1].first;
    const long long y = k == n_links - 1 ? y_last : middle[static_cast<size_t>(k)].second;
    return {x, y};
}

InputAssignment make_assignment(const CcpInstance& inst, long long x1,
                                const std::vector<std::pair<long long, long long>>& middle,
                                long long yM) {
    if (static_cast<int>(middle.size()) != inst.M - 2) {
        throw ValidationError("assignment has " + std::to_string(middle.size()) +
                              " middle pairs, expected M - 2 = " +
                              std::to_string(inst.M - 2));
    }
    const long long dn = inst.alphabet();
    InputAssignment a;
    a.x_first = mod_floor(x1, dn);
    a.middle.reserve(middle.size());
    for (const auto& [x, y] : middle) {
        a.middle.emplace_back(mod_floor(x, dn), mod_floor(y, dn));
    }
    a.y_last = mod_floor(yM, dn);

    a.links.resize(static_cast<size_t>(inst.links()));
    long long label_acc = 0;
    for (int k = 0; k < inst.links(); ++k) {
        const auto [x, y] = a.link_inputs(k);
        a.links[static_cast<size_t>(k)] = decompose_link(x, y, inst);
        label_acc += a.links[static_cast<size_t>(k)].a;
        a.total_drift += a.links[static_cast<size_t>(k)].b;
    }
    a.label_sum = static_cast<int>(mod_floor(label_acc, inst.d));
    return a;
}

int ground_truth(const InputAssignment& assignment) { return assignment.label_sum; }

InputAssignment sample_assignment(const CcpInstance& inst, Rng& rng) {
    const long long dn = inst.alphabet();
    const int n_links = inst.links();
    std::vector<long long> xs(static_cast<size_t>(n_links));
    std::vector<long long> ys(static_cast<size_t>(n_links));
    for (int k = 0; k < n_links; ++k) {
        xs[static_cast<size_t>(k)] = rng.below(dn);
        const long long a = rng.below(inst.d);
        const long long b = rng.below(2 * inst.mu + 1) - inst.mu;
        ys[static_cast<size_t>(k)] = mod_floor(xs[static_cast<size_t>(k)] - (a * inst.N + b), dn);
    }
    std::vector<std::pair<long long, long long>> middle;
    middle.reserve(static_cast<size_t>(inst.M) - 2);
    for (int j = 0; j + 1 < n_links; ++j) {
        middle.emplace_back(xs[static_cast<size_t>(j) + 1], ys[static_cast<size_t>(j)]);
    }
    return make_assignment(inst, xs[0], middle, ys[static_cast<size_t>(n_links) - 1]);
}

nlohmann::json assignment_to_json(const CcpInstance& inst, const InputAssignment& assignment) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, y] : assignment.middle) {
        pairs.push_back({x, y});
    }
    return nlohmann::json{{"N", inst.N},   {"M", inst.M},
                          {"d", inst.d},   {"mu", inst.mu},
                          {"x1", assignment.x_first}, {"pairs", pairs},
                          {"yM", assignment.y_last}};
}

std::pair<CcpInstance, InputAssignment> assignment_from_json(const nlohmann::json& j) {
    for (const char* key : {"N", "d", "mu", "x1", "pairs", "yM"}) {
        if (!j.contains(key)) {
            throw ValidationError(std::string("assignment JSON is missing key \"") + key + "\"");
        }
    }
    if (!j["pairs"].is_array()) {
        throw ValidationError("assignment JSON key \"pairs\" must be an array");
    }
    CcpInstance inst;
    inst.N = j["N"].get<int>();
    inst.d = j["d"].get<int>();
    inst.mu = j["mu"].get<int>();
    inst.M = static_cast<int>(j["pairs"].size()) + 2;
    if (j.contains("M") && j["M"].get<int>() != inst.M) {
        throw ValidationError("assignment JSON has M = " + std::to_string(j["M"].get<int>()) +
                              " but " + std::to_string(j["pairs"].size()) + " middle pairs");
    }
    const ValidationResult v = validate_instance(inst);
    if (!v.ok()) {
        std::string msg = "invalid instance:";
        for (const std::string& s : v.violations) msg += " " + s + ";";
        throw ValidationError(msg);
    }
    std::vector<std::pair<long long, long long>> middle;
    for (const auto& p : j["pairs"]) {
        if (!p.is_array() || p.size() != 2) {
            throw ValidationError("assignment JSON pairs must be [x_i, y_i] arrays");
        }
        middle.emplace_back(p[0].get<long long>(), p[1].get<long long>());
    }
    return {inst, make_assignment(inst, j["x1"].get<long long>(), middle,
                                  j["yM"].get<long long>())};
}

}  // namespace ccplab
