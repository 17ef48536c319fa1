#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "base3/types.hpp"

namespace base3 {

// The three component scores combined by the interpolation.
struct ComponentScores {
    int s_eb{};     // EdgeBank membership, {0,1}
    int s_pt{};     // PopTrack top-K membership, {0,1}
    double s_cm{};  // t-CoMem score, [0,1]
};

struct InterpolationWeights {
    double alpha{};  // EdgeBank weight
    double beta{};   // PopTrack weight
    double delta{};  // t-CoMem weight
};

enum class Scheme { uniform, eb_conf, multi_conf };

inline const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::uniform: return "uniform";
        case Scheme::eb_conf: return "eb_conf";
        case Scheme::multi_conf: return "multi_conf";
    }
    return "?";
}

inline Scheme scheme_from_string(const std::string& s) {
    if (s == "uniform") return Scheme::uniform;
    if (s == "eb_conf") return Scheme::eb_conf;
    if (s == "multi_conf") return Scheme::multi_conf;
    throw std::invalid_argument("unknown scheme '" + s + "'");
}

// Confidence-conditional weight tables. The constants are fixed; they are
// selected by the binary EdgeBank / PopTrack flags.
inline InterpolationWeights weights_for(Scheme scheme, int s_eb, int s_pt) {
    switch (scheme) {
        case Scheme::uniform:
            return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
        case Scheme::eb_conf:
            return s_eb ? InterpolationWeights{0.5, 0.2, 0.3}
                        : InterpolationWeights{0.2, 0.3, 0.5};
        case Scheme::multi_conf:
            if (s_eb && s_pt) return {0.35, 0.45, 0.20};
            if (s_eb) return {0.45, 0.25, 0.30};
            if (s_pt) return {0.15, 0.70, 0.15};
            return {0.20, 0.45, 0.35};
    }
    throw std::invalid_argument("invalid scheme");
}

inline double interpolate(const ComponentScores& s,
                          const InterpolationWeights& w) {
    return w.alpha * s.s_eb + w.beta * s.s_pt + w.delta * s.s_cm;
}

inline double ensemble_score(const ComponentScores& s, Scheme scheme) {
    return interpolate(s, weights_for(scheme, s.s_eb, s.s_pt));
}

inline void validate(const InterpolationWeights& w) {
    if (w.alpha < 0 || w.beta < 0 || w.delta < 0 ||
        std::abs(w.alpha + w.beta + w.delta - 1.0) > 1e-9)
        throw std::invalid_argument(
            "interpolation weights must be non-negative and sum to 1");
}

}  // namespace base3
