#pragma once

namespace projsimplex {

/// Numerical thresholds used across the library. Every check that needs a
/// band takes one of these values, so tests can tighten or corrupt a single
/// field and observe the effect.
struct Tolerances {
    double unit_norm = 1e-12;      // |herm_norm(v) - 1| allowed for points/hyperplanes
    double independence = 1e-10;   // |det| or |wedge| at or below this is degenerate
    double orthogonality = 1e-10;  // |v_i . conj(v_j)| counted as zero (Hadamard equality)
    double sandwich_slack = 1e-9;  // relative slack on d_min^n <= |D| <= d_min
    double tie_band = 1e-9;        // d_j <= d_min + tie_band counts as a tie
    double near_equality = 1e-6;   // lower margin counted as "near equality" in the census
    double sample_reject = 1e-6;   // random simplices with |D| at or below are resampled
    double det_feasibility = 1e-6; // conjecture search: |achieved - target| band

    // Residual bounds used by the verification suites.
    double determinant_rel = 1e-10;
    double identity_rel = 1e-10;
    double isometry_rel = 1e-12;
    double multicross_rel = 1e-8;
    double gauge_rel = 1e-10;
};

inline constexpr Tolerances default_tolerances{};

}  // namespace projsimplex
