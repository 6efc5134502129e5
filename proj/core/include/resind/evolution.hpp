#pragma once

// Macroscopic evolution of the averaged shape data: the per-irrep cumulant
// flow driven by the decay factors a_k(t), the closed R-transform formulas
// for both clock types, the corresponding flows of compound (Levy) measures,
// the three built-in initial ensembles, and a residual check of the implied
// first-order PDE for the Cauchy transform under the exponential clock.

#include "resind/freeprob.hpp"
#include "resind/group_table.hpp"
#include "resind/pausing.hpp"

#include <complex>
#include <string>
#include <vector>

namespace resind {

struct EvolutionSpec {
  FiniteGroupTable table;
  ClockMode clock;
  std::vector<std::vector<double>> r0;  // per irrep; R_1 at index 0
  std::vector<LevyMeasure> levy0;       // optional, empty when absent
  std::vector<double> sigma2;           // (dim zeta)^2 / |T| per irrep
};

// validates R_1 = 0 per irrep and sum of R_2 over irreps equal to 1
EvolutionSpec make_evolution_spec(const FiniteGroupTable& table, const ClockMode& clock,
                                  std::vector<std::vector<double>> r0,
                                  std::vector<LevyMeasure> levy0 = {});

// R_1(t) = 0, R_2(t) = (1-a_1) sigma2 + a_1 R_2, R_{k+1}(t) = a_k R_{k+1}
std::vector<std::vector<double>> evolve_cumulants(const EvolutionSpec& spec, double t);

// closed substitution form for the exponential clock,
// R(t,w) = (1-e^{-t/m}) sigma2 w + R(0, e^{-t/m} w); matches evolve_cumulants
std::vector<std::vector<double>> r_transform_exponential(const EvolutionSpec& spec, double t);

// Gaussian-average substitution form for the 1/2-stable clock: coefficients
// of int phi(u) {(1-e^{-sqrt(t)|u|}) sigma2 w + R(0, e^{-sqrt(t)|u|} w)} du,
// folded to (0,inf) and integrated adaptively
std::vector<std::vector<double>> r_transform_stable(const EvolutionSpec& spec, double t);

// pushforward flows of the compound measure
LevyMeasure levy_flow_exponential(const LevyMeasure& l0, double t, double m, double sigma2);
LevyMeasure levy_flow_stable(const LevyMeasure& l0, double t, double sigma2);

// built-in initial ensembles
enum class PresetKind { P1, P2, P3 };

struct PresetParams {
  double r = 1.0;
  double rp = 1.0;
  std::vector<double> a, b, c;  // per irrep; P1 ignores all of these
};

struct EnsemblePreset {
  PresetKind kind;
  PresetParams params;
  EvolutionSpec spec;  // r0/levy0 from the closed initial forms

  // literal transcriptions of the displayed time-t formulas for the preset
  // and the spec's clock; t = 0 gives the initial forms
  std::vector<double> r_closed(int zeta, double t, int order) const;
  LevyMeasure levy_closed(int zeta, double t) const;
};

PresetKind parse_preset_name(const std::string& name);

// P2/P3 require r, rp > 0 and per-irrep a, b >= 0 and c > 0 with a + b <= c
// and sum of c equal to 1; P1 ignores the parameters
void validate_preset_params(PresetKind kind, const PresetParams& params, size_t num_irreps);

// name is "P1", "P2" or "P3"
EnsemblePreset ensemble_preset(const std::string& name, const PresetParams& params,
                               const FiniteGroupTable& table, const ClockMode& clock);

// residual of d_t G = (1/(mG) - sigma2 G/m) d_z G + G/m at (t, z) with
// central differences of step h; exponential clock only
std::complex<double> pde_residual(const EvolutionSpec& spec, int zeta, double t,
                                  std::complex<double> z, double h,
                                  const StieltjesOptions& opt = {});

}  // namespace resind
