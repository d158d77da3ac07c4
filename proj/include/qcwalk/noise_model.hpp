#pragma once

#include <string>
#include <variant>

namespace qcwalk {

/// Closed evolution dr/dt = -i[L, r]. Limit case of every model below.
struct UnitaryModel {};

/// Intrinsic decoherence: dr/dt = -i[L,r] - (gamma/2)[L,[L,r]].
/// Equivalently a single Lindblad channel with jump operator L at rate gamma.
struct IntrinsicModel {
  double gamma = 1.0;
};

/// Haken-Strobl dephasing in the node basis: projectors P_k = |k><k| at a
/// uniform rate. Populations follow the unitary walk; node-basis coherences
/// decay at gamma.
struct HakenStroblModel {
  double gamma = 1.0;
};

/// Quantum stochastic walk interpolation: (1-p) unitary part plus p times the
/// CTRW-derived jump channels L_kj |k><j| over all pairs with L_kj != 0,
/// diagonal pairs included. p = 0 is unitary, p = 1 relaxes populations
/// exactly like the classical walk.
struct QswModel {
  double p = 0.5;
};

using NoiseModel =
    std::variant<UnitaryModel, IntrinsicModel, HakenStroblModel, QswModel>;

/// Throws std::invalid_argument on gamma < 0 or p outside [0, 1].
void validate(const NoiseModel& model);

/// Stable lowercase tag: "unitary", "intrinsic", "haken_strobl", "qsw".
std::string model_tag(const NoiseModel& model);

/// Parse the pair (tag, parameter) back into a model. The parameter is gamma
/// for intrinsic/haken_strobl, p for qsw, and ignored for unitary.
NoiseModel model_from_tag(const std::string& tag, double parameter);

}  // namespace qcwalk
