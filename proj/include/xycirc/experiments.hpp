#pragma once

#include <vector>

#include "xycirc/builders.hpp"

namespace xyc {

struct SpacetimeGrid {
    std::vector<double> times;
    std::vector<int> sites;
    std::vector<std::vector<double>> values;  // values[t_index][site_index]
};

struct EntropyCurve {
    std::vector<int> lengths;      // 0..L
    std::vector<double> entropies; // bits
};

struct FitResult {
    double c_fit = 0;
    double c1 = 0;
    double r_squared_log = 0;
    double r_squared_linear = 0;
};

enum class FitModel { Log, Linear };
enum class ThermalBasis { Energy, Position };

/// <Z_i>(t) grid for a single-excitation position state evolved exactly.
SpacetimeGrid run_expz_spacetime(const ModelParams& params, int initial_site,
                                 const std::vector<double>& times);

/// Coarse-grained grid: the initial fine-chain state is reduced with
/// coarse_grain, then evolved by the kept-mode phase layer conjugated by the
/// coarse chain's own basis rotation.
SpacetimeGrid run_expz_coarse(const ModelParams& params, double cutoff,
                              const StateVector& initial_state,
                              const std::vector<double>& times);

/// S(l) over the leading blocks of the given site order, l = 0..L.
EntropyCurve run_entropy_curve(const StateVector& state,
                               const std::vector<int>& block_sites);

/// Least-squares fits of an entropy curve. Interior points l = 1..L-1 feed
/// the chord-length model; l = 1..L/2 feed the linear model. Both goodness
/// metrics are always reported; `model` selects which parameters land in
/// (c_fit, c1).
FitResult critical_fit(const EntropyCurve& curve, FitModel model);

DensityMatrix thermal_state_oracle(const ModelParams& params, double beta,
                                   ThermalBasis basis);

/// TFD on 2m qubits; optionally rotated to position space on each side.
StateVector prepare_tfd_state(int m, const ModelParams& params, double beta,
                              bool position_basis);

/// Ground state through the circuit pipeline (power-of-two n).
StateVector prepare_ground_state_circuit(const ModelParams& params);

struct TfdEntropyRow {
    double beta = 0;
    double s_half_cut = 0;
    EntropyCurve curve;  // position-basis blocks of the left chain
};

std::vector<TfdEntropyRow> run_tfd_entropy_vs_beta(const ModelParams& params,
                                                   const std::vector<double>& betas);

}  // namespace xyc
