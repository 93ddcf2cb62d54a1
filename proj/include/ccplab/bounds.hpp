#pragma once

#include <string>
#include <vector>

#include "ccplab/ccp.hpp"

namespace ccplab {

// Closed-form reference figures: the classical error estimate, the quantum
// success lower bounds, and the exact single-outcome kernel. All pure
// functions, usable as oracles against the exact evaluators.

// mu*(mu+1)*(M-1) / (N*(2*mu+1)), clamped to [0, 1]. Estimate only: neglects
// error cancellation across links.
double classical_error_estimate(const CcpInstance& inst);

// 1 - 4 pi^2 mu^2 (d-1)^2 (M-1)   / (d^2 N^2)  (entanglement route), and
// 1 - 4 pi^2 mu^2 (d-1)^2 (M-1)^2 / (d^2 N^2)  (single-qudit route).
// The *_raw forms return the bare formula; the plain forms clamp to
// [1/d, 1], since outside the asymptotic regime the formula can dip below
// the guessing rate.
double pe_success_bound_raw(const CcpInstance& inst);
double pe_success_bound(const CcpInstance& inst);
double p1_success_bound_raw(const CcpInstance& inst);
double p1_success_bound(const CcpInstance& inst);

// Exact probability of the correct Fourier outcome under total drift B:
// (1/d^2) [sin(pi B / N) / sin(pi B / (d N))]^2, with the removable
// singularity at B = 0 mod dN evaluated exactly to 1.
double fejer_success(long long B, int N, int d);

struct BoundReport {
    CcpInstance instance;
    double classical_error_est = 0.0;
    double pe_bound = 0.0;
    double p1_bound = 0.0;
    double exact_worst_p1 = 0.0;
    double exact_worst_p2 = 0.0;
    bool worst_exhaustive = true;
    std::vector<std::string> notes;
};

BoundReport bound_report(const CcpInstance& inst);

struct ScalingFit {
    std::vector<int> grid;                // N values
    std::vector<double> classical_error;  // exact average error
    std::vector<double> quantum_error;    // exact worst-case single-qudit error
    double classical_slope = 0.0;
    double quantum_slope = 0.0;
    bool degenerate = false;
    std::string note;
};

// Least-squares slopes of log(error) vs log(N) at fixed (M, d, mu). Throws
// on a grid with fewer than 3 valid points; reports degenerate when the
// errors vanish identically (mu = 0).
ScalingFit scaling_slopes(const std::vector<int>& N_grid, int M, int d, int mu);

}  // namespace ccplab
