#pragma once

#include "cryptoeq/model.hpp"

/// Disparate-timescale (leader-follower) solver: the government commits
/// irrevocably to p, maximizing its linear utility against the wealthy's
/// best response x̂(p).
namespace cryptoeq {

/// Position of the attractiveness measure A = 2*d2*sigY2 + 1 - mY
/// relative to the seizure fraction k; the regimes partition [0, inf).
enum class AttractivenessRegime {
    Zero,      ///< A == 0: crypto is riskless and lossless; commit p = 0
    BelowK,    ///< 0 < A < k: interior optimum from the closed form
    EqualsK,   ///< A == k: optimum at exactly 1/2
    KToTwoK,   ///< k < A <= 2k: smaller root of the stationarity quadratic, else 1
    AboveTwoK, ///< A > 2k: objective increasing on [0,1]; commit p = 1
};

struct ClosedFormLeaderP {
    double p = 0.0;
    AttractivenessRegime regime = AttractivenessRegime::Zero;
};

/// The leader's committed-p objective: linear government utility
/// evaluated against the follower's clamped best response,
///   (1 - x̂(p)) * k * p.
/// Wherever x̂ is interior this equals
///   (k/(2 d2)) * (A p - k p^2) / (sigY2 + k^2 p (1-p)).
/// Requires k > 0, d2 > 0, sigY2 > 0, covYF == 0.
double leader_objective(const ModelParams& params, double p);

/// Closed-form candidate for the leader's optimal p, by regime:
///   A == 0        -> 0
///   0 < A < k     -> A*B / (k*(B + sqrt(B^2 + A*B*(k - A))))   with B = sigY2
///   A == k        -> 1/2
///   k < A <= 2k   -> smaller positive root of
///                    Q(p) = A*B - 2*B*k*p + k^2*(A-k)*p^2 when it is real
///                    and <= 1, else 1
///   A > 2k        -> 1
/// The 0 < A < k expression is the stationarity-quadratic root in
/// rationalized form, stable as A -> k.  Derived assuming x̂ stays
/// interior; when clamping is active near the optimum the numeric
/// solver is authoritative.  Requires k > 0 and covYF == 0.
ClosedFormLeaderP closed_form_pstar(const ModelParams& params);

struct StackelbergOptions {
    int coarse_intervals = 4096;  ///< first-pass grid over [0,1]
    double refine_tol = 1e-10;    ///< golden-section bracket width target
};

struct StackelbergSolution {
    double pstar = 0.0;  ///< leader's committed probability
    double xstar = 0.0;  ///< follower's best response at pstar
    double uD = 0.0;     ///< linear government utility at the solution
    double uW = 0.0;     ///< wealthy utility at the solution
    AttractivenessRegime regime = AttractivenessRegime::Zero;
    double closed_form_p = 0.0;          ///< closed-form candidate, for reference
    bool closed_form_used = false;       ///< candidate certified: A < k and x̂ interior there
    double closed_form_numeric_gap = 0.0;  ///< |pstar - closed_form_p|
};

/// Maximizes leader_objective over [0,1]: coarse grid, golden-section
/// refinement around every local maximum, exact endpoints kept as
/// candidates, ties resolved to the smallest p.  The numeric argmax is
/// authoritative; the closed form is attached as a cross-check and
/// closed_form_used marks the cases where it is provably the optimum.
/// Requires k > 0, d2 > 0, sigY2 > 0, covYF == 0.
StackelbergSolution solve_stackelberg(const ModelParams& params,
                                      const StackelbergOptions& opts = {});

}  // namespace cryptoeq
