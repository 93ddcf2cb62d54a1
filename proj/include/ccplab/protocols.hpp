#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccplab/ccp.hpp"
#include "ccplab/qudit.hpp"
#include "ccplab/rng.hpp"

namespace ccplab {

enum class ProtocolKind { Classical, PE, P1, P2 };

const char* to_string(ProtocolKind kind);

// Classical block strategy: the sender announces which of the d blocks
// G_k = {N*k, ..., N*(k+1)-1} + offset contains its input.
struct ClassicalStrategy {
    long long partition_offset = 0;
};

// Distribution of the per-step deviation eps in Z_d between the decoded (or
// measured) label and the true running label.
struct StepErrorDistribution {
    int d = 0;
    std::vector<double> probs;

    double at(int eps) const { return probs[static_cast<std::size_t>(eps)]; }
};

StepErrorDistribution delta_step_distribution(int d);
StepErrorDistribution convolve(const StepErrorDistribution& lhs,
                               const StepErrorDistribution& rhs);

struct EfficiencyModel {
    double eta = 1.0;  // probability a single measurement succeeds
};

struct RunTranscript {
    ProtocolKind kind = ProtocolKind::Classical;
    // One record per hop/link/measurement; meaning depends on the protocol:
    //   Classical: (message sent, decoded running label)
    //   P1:        (phase argument applied before the hop mod dN, -1)
    //   P2:        (measurement outcome, -1), intermediate then final
    //   PE:        (sender outcome, receiver outcome) per link
    std::vector<std::pair<int, int>> per_step;
    int final_answer = 0;
    bool correct = false;
    bool detector_failed = false;
};

// --- classical engine -------------------------------------------------------

int classical_encode(long long x, const CcpInstance& inst, const ClassicalStrategy& strategy);

// Maximum-posterior label given the received block index and the own input;
// ties broken toward the candidate closer to its window center, then toward
// the smaller label.
int classical_decode(int message, long long y, const CcpInstance& inst,
                     const ClassicalStrategy& strategy);

// Exact law of the decoding deviation for a uniform promise-consistent
// sender input given the receiver input y.
StepErrorDistribution classical_step_error_distribution(long long y, const CcpInstance& inst,
                                                        const ClassicalStrategy& strategy);

// The same law averaged over a uniform receiver input.
StepErrorDistribution classical_step_error_distribution_avg(const CcpInstance& inst,
                                                            const ClassicalStrategy& strategy);

// --- quantum per-step laws --------------------------------------------------

// Outcome-deviation law of a single link with drift b, from the squared
// cosine/sine sums of the Fourier measurement statistics.
StepErrorDistribution quantum_step_error_distribution(int b, const CcpInstance& inst);

// The same law obtained through the entangled-pair route: build the shared
// state, apply the local phases, and marginalize the joint outcome onto the
// deviation of l_sender + l_receiver from the link label.
StepErrorDistribution pe_link_error_distribution(long long x, long long y,
                                                 const CcpInstance& inst);

// --- exact evaluators -------------------------------------------------------

// Success probability conditioned on the assignment's receiver inputs,
// averaging over promise-consistent sender inputs; the protocol itself is
// deterministic once all inputs are fixed.
double exact_success_classical(const InputAssignment& assignment, const CcpInstance& inst,
                               const ClassicalStrategy& strategy = {});

// Full average over the distributor's sampling law. Includes error
// cancellation across links, which the closed-form estimate neglects.
double exact_average_success_classical(const CcpInstance& inst,
                                       const ClassicalStrategy& strategy = {});

double exact_success_p1(const InputAssignment& assignment, const CcpInstance& inst);
double exact_success_p2(const InputAssignment& assignment, const CcpInstance& inst);
double exact_success_pe(const InputAssignment& assignment, const CcpInstance& inst);

// Average over the distributor's law for any protocol.
double exact_average_success(ProtocolKind kind, const CcpInstance& inst,
                             const ClassicalStrategy& strategy = {});

// --- worst case over assignments --------------------------------------------

struct WorstCase {
    double success = 1.0;
    bool exhaustive = true;  // false when the drift vectors exceeded the budget
};

// Minimum exact success over all promise-consistent drift vectors. Exhaustive
// when (2*mu+1)^(M-1) fits the budget, otherwise evaluated at the extremal
// all-mu vector (exact for d = 2 by kernel monotonicity).
WorstCase worst_case_success(ProtocolKind kind, const CcpInstance& inst,
                             long long enumeration_budget = 1000000);

// --- detector efficiency ------------------------------------------------------

// Physical measurements required: 2(M-1) for PE, M-1 for P2, 1 for P1, 0
// for Classical.
int measurement_count(ProtocolKind kind, int M);

// eta^m * p_ideal + (1 - eta^m)/d: any failed measurement reduces the run to
// a uniform guess.
double efficiency_adjusted_success(double p_ideal, ProtocolKind kind, const CcpInstance& inst,
                                   double eta);

// --- stochastic simulation ---------------------------------------------------

// One full protocol run driven through the qudit layer (or the classical
// chain). With an efficiency model, each physical measurement independently
// fails with probability 1 - eta; any failure turns the final answer into a
// uniform guess and sets detector_failed.
RunTranscript simulate_run(ProtocolKind kind, const InputAssignment& assignment,
                           const CcpInstance& inst, Rng& rng,
                           const EfficiencyModel* efficiency = nullptr,
                           const ClassicalStrategy& strategy = {});

}  // namespace ccplab
