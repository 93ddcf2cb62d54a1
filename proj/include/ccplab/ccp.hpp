#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ccplab/rng.hpp"

namespace ccplab {

// One task instance. Inputs live in Z_{dN}; for each label l in Z_d the
// promised window is S_l = {N*l - mu, ..., N*l + mu} mod dN. The windows are
// pairwise disjoint iff 2*mu + 1 <= N.
struct CcpInstance {
    int N = 0;   // window spacing
    int M = 0;   // party count, >= 2
    int d = 0;   // alphabet size, >= 2
    int mu = 0;  // promise half-width

    long long alphabet() const { return static_cast<long long>(d) * N; }
    int links() const { return M - 1; }
};

struct ValidationResult {
    std::vector<std::string> violations;  // hard constraint failures
    std::vector<std::string> notes;       // non-fatal regime warnings
    bool ok() const { return violations.empty(); }
};

// Hard checks: N >= 1, M >= 2, d >= 2, mu >= 0, 2*mu + 1 <= N. Regime notes:
// N <= 10*mu*M (large-N approximations strained), mu*(M-1) >= N - mu (the
// accumulated drift can leave the promised window around the answer label),
// mu = 0 (degenerate promise, every difference is pinned exactly).
ValidationResult validate_instance(const CcpInstance& inst);

// True when mu*(M-1) < N - mu, so the summed difference always stays inside
// the window of the label-sum answer.
bool drift_regime_ok(const CcpInstance& inst);

class PromiseViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// x - y = a*N + b (mod dN) with a in [0, d), b in [-mu, mu]. Unique when the
// promise windows are disjoint.
struct LinkDecomposition {
    int a = 0;
    int b = 0;
};

// Throws PromiseViolation naming the offending pair and the nearest window.
// Inputs are reduced modulo dN first.
LinkDecomposition decompose_link(long long x, long long y, const CcpInstance& inst);

// A full set of party inputs. Link k (0-based, k < M-1) joins the sender
// input x_{k+1} with the receiver input y_{k+2}; party i in 2..M-1 holds the
// pair (x_i, y_i).
struct InputAssignment {
    long long x_first = 0;
    std::vector<std::pair<long long, long long>> middle;  // (x_i, y_i)
    long long y_last = 0;

    std::vector<LinkDecomposition> links;
    int label_sum = 0;      // sum of link labels a_i, mod d
    long long total_drift = 0;  // sum of link drifts b_i

    // (sender input, receiver input) of link k.
    std::pair<long long, long long> link_inputs(int k) const;
};

// Builds the assignment and decomposes every link; throws PromiseViolation
// if any pair breaks the promise, ValidationError on malformed shape.
InputAssignment make_assignment(const CcpInstance& inst, long long x1,
                                const std::vector<std::pair<long long, long long>>& middle,
                                long long yM);

// The answer the protocols aim for: sum of link labels mod d. When
// drift_regime_ok(inst) is false this is still the defined answer, but the
// summed difference may stray outside every promised window.
int ground_truth(const InputAssignment& assignment);

// Distributor model: per link, the sender input is uniform on Z_{dN} and the
// decomposition (a, b) is uniform on [0,d) x [-mu,mu], independently across
// links; the receiver input is derived.
InputAssignment sample_assignment(const CcpInstance& inst, Rng& rng);

// Flat wire format: {"N","M","d","mu","x1","pairs","yM"} with pairs a list
// of [x_i, y_i]. M must equal pairs.size() + 2 when present.
nlohmann::json assignment_to_json(const CcpInstance& inst, const InputAssignment& assignment);
std::pair<CcpInstance, InputAssignment> assignment_from_json(const nlohmann::json& j);

}  // namespace ccplab
