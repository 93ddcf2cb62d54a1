#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ccplab/rng.hpp"

namespace ccplab {

using Complex = std::complex<double>;

enum class Side { Left, Right };

// Pure state of a single qudit (dim d) or an ordered qudit pair (dim d*d,
// amplitude index d*k_left + k_right). Amplitudes are kept unit-norm; every
// factory and operation below preserves that invariant.
struct PureState {
    int local_dim = 0;
    bool bipartite = false;
    std::vector<Complex> amps;

    int dim() const { return static_cast<int>(amps.size()); }
    double norm_sq() const;
    void check_valid() const;
};

// Probabilities over Z_d (arity 1) or Z_d x Z_d (arity 2, index d*l1 + l2).
struct OutcomeDistribution {
    int d = 0;
    int arity = 1;
    std::vector<double> probs;

    double at(int l) const { return probs[static_cast<std::size_t>(l)]; }
    double at(int l1, int l2) const {
        return probs[static_cast<std::size_t>(l1) * d + l2];
    }
};

// |psi_0> = (1/sqrt d) sum_k |k>.
PureState uniform_state(int d);

// |e_l> = (1/sqrt d) sum_k omega^{kl} |k>, omega = exp(2 pi i / d).
PureState fourier_basis_state(int d, int l);

// (1/sqrt d) sum_k |kk>.
PureState maximally_entangled_state(int d);

// U(z): |k> -> exp(2 pi i z k / (d N)) |k>. z may be negative; phases are
// periodic in z with period d*N, reduced in integer arithmetic before the
// complex exponential.
PureState apply_phase(const PureState& state, long long z, int N);

// U(z) on one tensor factor of a qudit pair.
PureState apply_phase_local(const PureState& state, long long z, Side side, int N);

// P(l) = |<e_l|psi>|^2, or jointly P(l1, l2) = |<e_l1 e_l2|psi>|^2.
OutcomeDistribution fourier_distribution(const PureState& state);

// Projective Fourier-basis measurement that leaves the qudit in the measured
// basis state |e_l>.
std::pair<int, PureState> qnd_collapse(const PureState& state, Rng& rng);

int sample_outcome(const OutcomeDistribution& dist, Rng& rng);

}  // namespace ccplab
