#include "ccplab/qudit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ccplab/numeric.hpp"

namespace ccplab {

namespace {

void require_dim(int d) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2, got " +
                                    std::to_string(d));
    }
}

OutcomeDistribution finalize(int d, int arity, std::vector<double> probs) {
    double sum = 0.0;
    for (double& p : probs) {
        p = clamp_probability(p);
        sum += p;
    }
    if (std::abs(sum - 1.0) > kNormTol) {
        throw std::logic_error("outcome distribution sums to " + std::to_string(sum));
    }
    return OutcomeDistribution{d, arity, std::move(probs)};
}

}  // namespace

double PureState::norm_sq() const {
    double s = 0.0;
    for (const Complex& a : amps) s += std::norm(a);
    return s;
}

void PureState::check_valid() const {
    require_dim(local_dim);
    const std::size_t expected =
        bipartite ? static_cast<std::size_t>(local_dim) * local_dim
                  : static_cast<std::size_t>(local_dim);
    if (amps.size() != expected) {
        throw std::invalid_argument("state has " + std::to_string(amps.size()) +
                                    " amplitudes, expected " + std::to_string(expected));
    }
    if (std::abs(norm_sq() - 1.0) > kNormTol) {
        throw std::invalid_argument("state norm " + std::to_string(norm_sq()) +
                                    " is not 1");
    }
}

PureState uniform_state(int d) {
    require_dim(d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    return PureState{d, false, std::vector<Complex>(d, Complex{amp, 0.0})};
}

PureState fourier_basis_state(int d, int l) {
    require_dim(d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    PureState s{d, false, std::vector<Complex>(d)};
    for (int k = 0; k < d; ++k) {
        s.amps[k] = std::polar(amp, kTwoPi * k * l / d);
    }
    return s;
}

PureState maximally_entangled_state(int d) {
    require_dim(d);
    PureState s{d, true, std::vector<Complex>(static_cast<std::size_t>(d) * d)};
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        s.amps[static_cast<std::size_t>(k) * d + k] = Complex{amp, 0.0};
    }
    return s;
}

PureState apply_phase(const PureState& state, long long z, int N) {
    if (state.bipartite) {
        throw std::invalid_argument("apply_phase expects a single qudit");
    }
    state.check_valid();
    const int d = state.local_dim;
    const long long period = static_cast<long long>(d) * N;
    const long long zr = mod_floor(z, period);
    PureState out = state;
    for (int k = 0; k < d; ++k) {
        out.amps[k] *= std::polar(1.0, kTwoPi * static_cast<double>(zr) * k /
                                           static_cast<double>(period));
    }
    return out;
}

PureState apply_phase_local(const PureState& state, long long z, Side side, int N) {
    if (!state.bipartite) {
        throw std::invalid_argument("apply_phase_local expects a qudit pair");
    }
    state.check_valid();
    const int d = state.local_dim;
    const long long period = static_cast<long long>(d) * N;
    const long long zr = mod_floor(z, period);
    PureState out = state;
    for (int kl = 0; kl < d; ++kl) {
        for (int kr = 0; kr < d; ++kr) {
            const int k = side == Side::Left ? kl : kr;
            out.amps[static_cast<std::size_t>(kl) * d + kr] *=
                std::polar(1.0, kTwoPi * static_cast<double>(zr) * k /
                                    static_cast<double>(period));
        }
    }
    return out;
}

OutcomeDistribution fourier_distribution(const PureState& state) {
    state.check_valid();
    const int d = state.local_dim;
    if (!state.bipartite) {
        std::vector<double> probs(d);
        const double scale = 1.0 / std::sqrt(static_cast<double>(d));
        for (int l = 0; l < d; ++l) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k < d; ++k) {
                acc += std::polar(scale, -kTwoPi * k * l / d) * state.amps[k];
            }
            probs[l] = std::norm(acc);
        }
        return finalize(d, 1, std::move(probs));
    }
    std::vector<double> probs(static_cast<std::size_t>(d) * d);
    const double scale = 1.0 / d;
    for (int l1 = 0; l1 < d; ++l1) {
        for (int l2 = 0; l2 < d; ++l2) {
            Complex acc{0.0, 0.0};
            for (int k1 = 0; k1 < d; ++k1) {
                for (int k2 = 0; k2 < d; ++k2) {
                    const double angle =
                        -kTwoPi * (static_cast<double>(k1) * l1 + static_cast<double>(k2) * l2) / d;
                    acc += std::polar(scale, angle) *
                           state.amps[static_cast<std::size_t>(k1) * d + k2];
                }
            }
            probs[static_cast<std::size_t>(l1) * d + l2] = std::norm(acc);
        }
    }
    return finalize(d, 2, std::move(probs));
}

std::pair<int, PureState> qnd_collapse(const PureState& state, Rng& rng) {
    if (state.bipartite) {
        throw std::invalid_argument("qnd_collapse expects a single qudit");
    }
    const OutcomeDistribution dist = fourier_distribution(state);
    const int l = sample_outcome(dist, rng);
    return {l, fourier_basis_state(state.local_dim, l)};
}

int sample_outcome(const OutcomeDistribution& dist, Rng& rng) {
    const double u = rng.u01();
    double cum = 0.0;
    const int n = static_cast<int>(dist.probs.size());
    for (int i = 0; i < n; ++i) {
        cum += dist.probs[i];
        if (u < cum) return i;
    }
    return n - 1;
}

}  // namespace ccplab
