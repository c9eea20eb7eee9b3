#pragma once

#include <string>
#include <vector>

namespace rpe {

// The two native gates. Serialized as "Gx"/"Gy"; keyed as 'x'/'y'.
enum class GateLabel : char { Gx = 'x', Gy = 'y' };

std::string to_string(GateLabel label);
GateLabel gate_label_from_string(const std::string& text);

// Which phase a design or an analysis targets: alpha is the full X rotation
// angle, epsilon the full Y rotation angle.
enum class PhaseTarget { Alpha, Epsilon };

std::string to_string(PhaseTarget target);
PhaseTarget phase_target_from_string(const std::string& text);

// Germ gate for a phase target: Gx for alpha, Gy for epsilon.
GateLabel target_germ(PhaseTarget target);

}  // namespace rpe
