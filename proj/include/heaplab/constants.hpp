#pragma once

#include <cmath>

namespace heaplab {

// Golden ratio and the two log bases of the skew-heap potential analysis.
// beta = phi^(phi+2) ~ 5.703, alpha = phi^(2*phi-1) ~ 2.933, and
// 1/(2*phi-1) + 2/(phi+2) = 1, i.e. log_alpha(phi) + 2*log_beta(phi) = 1.
inline const double kPhi = (std::sqrt(5.0) + 1.0) / 2.0;
inline const double kBeta = std::pow(kPhi, kPhi + 2.0);
inline const double kAlpha = std::pow(kPhi, 2.0 * kPhi - 1.0);

inline const double kLnPhi = std::log(kPhi);
inline const double kLnBeta = std::log(kBeta);
inline const double kLnAlpha = std::log(kAlpha);

inline double log_phi(double v) { return std::log(v) / kLnPhi; }
inline double log_beta(double v) { return std::log(v) / kLnBeta; }
inline double log_alpha(double v) { return std::log(v) / kLnAlpha; }

}  // namespace heaplab
