#pragma once

#include "skewflow/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace skewflow {

class SkewSystem;

/// Boundary-term formulations. Default resolves per node to the model's
/// minimal-conditions policy for the local flow direction.
enum class Formulation {
  Default,
  IeeChar,       // W = (u_n + p/u_n, u_tau, p/u_n), Lambda = u_n diag(1, 1, -1)
  IeeVelocity,   // W = (u_n, u_tau, sqrt(p)), Lambda = u_n diag(1, 1, 2); diagnostics only
  SweU,          // variables (U1, Un, Utau), Lambda = u_n diag(1, 1/2, 1/2)
  SweW,          // W = (U1^2, U1^2 + Un^2, Un Utau), Lambda = diag(-1, 1, 1)/(2 Un sqrt(U1))
  CeeDiag,       // W = (phi1, phi2 + 2 phi4^2/phi2, phi3, phi4)
  CeeContracted, // rotated variables, Lambda = u_n diag(1, (g-1)/2, (g-1)/2, g)
};

const char* to_string(Formulation f);
Formulation formulation_from_string(const std::string& name);

/// Rotated boundary state at a single boundary node.
///
/// Invariants: w = t_inv * u at the state the split was built from, and
/// w' Lambda w equals the symmetrized flux quadratic form u' (n_i A_i) u.
/// Entries with lambda >= 0 (ties included) are listed in `plus`, the rest
/// in `minus`; both keep the model's documented eigenvalue order.
struct CharSplit {
  Vec w;                  // rotated variables
  Vec lambda;             // diagonal of Lambda, model order
  Mat t_inv;              // frozen-coefficient map u -> w
  std::vector<int> plus;  // indices with lambda >= 0
  std::vector<int> minus; // indices with lambda < 0 (one boundary condition each)
  Formulation formulation = Formulation::Default;

  int n() const { return static_cast<int>(lambda.size()); }
  int n_minus() const { return static_cast<int>(minus.size()); }
  int n_plus() const { return static_cast<int>(plus.size()); }

  Vec w_minus() const;
  Vec w_plus() const;
  Vec lambda_minus_abs() const;  // |Lambda^-| diagonal
  Vec lambda_plus() const;       // Lambda^+ diagonal
  Mat j_minus() const;           // 0/1 selector, n_minus x n
  Mat j_plus() const;
  double quadratic_form() const; // w' Lambda w
};

/// Classify lambda entries into plus/minus selectors. Entries within
/// tie_tol of zero count as plus (no condition on zero-speed modes).
void classify_split(CharSplit& split, double tie_tol);

enum class BcMode { Strong, Weak };
enum class BcKind { Characteristic, DirichletVelocity, None };

const char* to_string(BcKind k);

/// Time/position-dependent boundary data. Supplies the target values
/// r = S^{-1} G for W^- - R W^+; only the first |Lambda^-| entries are used.
struct BoundaryData {
  enum class Kind { Zero, Constant, Sine };
  Kind kind = Kind::Zero;
  Vec values;          // Constant: targets; Sine: amplitudes
  double freq = 1.0;   // Sine: temporal frequency
  std::function<Vec(double x, double y, double t)> custom; // overrides kind when set

  Vec eval(double x, double y, double t, int m) const;
  bool is_zero() const;
};

/// One boundary condition S(W^- - R W^+) = G in the sense of the general
/// form: R couples W^+ into W^-, S = S_tilde^{-1} |Lambda^-|^{1/2}, and the
/// penalty matrix is always Sigma = |Lambda^-| (recomputed per evaluation,
/// never stored).
struct BoundaryCondition {
  BcKind kind = BcKind::Characteristic;
  BcMode mode = BcMode::Weak;
  Formulation formulation = Formulation::Default;
  double s_tilde = 0.5;          // S_tilde = s_tilde * I
  std::optional<Mat> r_override; // explicit R (n_minus x n_plus)
  std::optional<Mat> s_override; // explicit S_tilde matrix
  BoundaryData data;

  bool homogeneous() const { return data.is_zero(); }
};

/// R/S_tilde/targets resolved against one split and one point in space-time.
struct ResolvedBc {
  Mat r;        // n_minus x n_plus
  Mat s_tilde;  // n_minus x n_minus
  Vec target;   // r = S^{-1} G, size n_minus
  bool active = true; // false for BcKind::None
};

ResolvedBc resolve_bc(const SkewSystem& model, const CharSplit& split,
                      const BoundaryCondition& bc, double x, double y, double t);

/// Squared norm of the external data G = S_tilde^{-1} |Lambda^-|^{1/2} target.
double data_norm_sq(const CharSplit& split, const ResolvedBc& rbc);

struct ConditionReport {
  double margin = 0.0;
  bool pass = false;
};

/// Smallest eigenvalue of Lambda^+ - R' |Lambda^-| R. Non-strict pass allows
/// a small negative round-off margin; strict requires margin above
/// 1e-10 * max(Lambda^+).
ConditionReport check_r_condition(const CharSplit& split, const Mat& r, bool strict);

/// Smallest eigenvalue of the 2x2-block matrix
///   [ Lambda^+ - R'|L^-|R   -R'|L^-|^{1/2} S~ ]
///   [      (sym)              I - S~' S~      ]
/// Pass means >= -1e-12 (the inhomogeneous bound in terms of data holds).
ConditionReport check_s_smallness(const CharSplit& split, const Mat& r, const Mat& s_tilde);

/// Weak-imposition penalty 2 (J^- T^{-1})' Sigma (W^- - R W^+ - S^{-1}G)
/// evaluated at one boundary node. Zero when no conditions apply (empty
/// Lambda^- or glancing node).
Vec penalty_vector(const Vec& u_b, const Vec2& normal, const SkewSystem& model,
                   const BoundaryCondition& bc, double x, double y, double t);

/// Boundary operator in the original variables: L = |L^-|^{1/2}(J^- - R J^+)T^{-1}
/// and data g = S_tilde G, so that L u - g = 0 exactly on compliant states.
struct BoundaryOperator {
  Mat l; // n_minus x n
  Vec g; // n_minus
};

BoundaryOperator boundary_operator_data(const CharSplit& split, const ResolvedBc& rbc);

/// Per-node boundary energy flux: strong mode substitutes the condition into
/// W' Lambda W; weak mode adds the lifting pairing 2 (W^-)' Sigma (W^- - RW^+ - S^{-1}G).
double boundary_energy_flux(const Vec& u_b, const Vec2& normal, const SkewSystem& model,
                            const BoundaryCondition& bc, double t, BcMode mode,
                            double x = 0.0, double y = 0.0);

/// Rotate one boundary state. Resolves Formulation::Default through the
/// model policy, verifies positivity, and throws DegenerateRotation where
/// the formulation is undefined (callers fall back to glancing treatment).
CharSplit rotate_boundary_state(const SkewSystem& model, const Vec& u_b,
                                const Vec2& normal, Formulation f);

} // namespace skewflow
