#pragma once

namespace canonaut {

// Numerical tolerances threaded through the pipeline. Both are exposed as
// CLI flags; near-degenerate inputs are rejected rather than guessed at.
struct Tolerances {
    double cluster = 1e-6; // chordal distance below which roots are one point
    double match = 1e-7;   // matrix distance below which group elements match

    // Clusters separated by less than this multiple of `cluster` are treated
    // as ill-conditioned instead of silently kept distinct.
    static constexpr double ambiguity_band = 10.0;
};

} // namespace canonaut
