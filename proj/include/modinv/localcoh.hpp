#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "modinv/cartan.hpp"
#include "modinv/dickson.hpp"
#include "modinv/group.hpp"

namespace modinv {

// Generators of a homogeneous invariant ideal of S = R^G. Each generator must
// be homogeneous, nonzero and G-invariant.
struct IdealSpec {
  std::vector<Polynomial> generators;
};

// Graded pieces of the truncated Cech (Koszul power) complex of S supported
// on an ideal: level k at truncation t and internal degree n is the direct
// sum over size-k subsets T of the generators of the invariant graded piece
// S_{n + t * deg x_T}, modelling the fraction a / x_T^t. The differential into
// level k+1 multiplies by x_j^t with the usual alternating sign; the
// transition from truncation t to t+1 multiplies componentwise by x_T.
class KoszulEngine {
public:
  KoszulEngine(std::shared_ptr<const Group> group, IdealSpec ideal);

  const Group& group() const { return cache_.group(); }
  const IdealSpec& ideal() const { return ideal_; }
  InvariantBasisCache& cache() { return cache_; }
  int ngens() const { return static_cast<int>(ideal_.generators.size()); }

  // Size-k subsets of the generator indices, lexicographically ordered.
  const std::vector<std::vector<int>>& subsets(int k);

  struct Layout {
    int level = 0, truncation = 0, degree = 0;
    std::vector<std::vector<int>> subsets;
    std::vector<int> component_degrees;
    std::vector<int> offsets;
    int total = 0;
  };
  Layout layout(int level, int t, int n);

  // Differential out of `from` into level+1 at the same (t, n).
  MatrixGF differential(const Layout& from);
  // Componentwise multiplication by x_T: level k at t into level k at t+1.
  MatrixGF level_transition(const Layout& from);

  struct Cohomology {
    Layout layout;
    int dim = 0;
    MatrixGF reps;    // kernel representatives completing the image, per column
    MatrixGF image;   // basis of the image of the incoming differential
    MatrixGF d_out;   // outgoing differential, for cocycle checks
  };
  // H^i at truncation t, internal degree n, with chosen representatives.
  Cohomology cohomology(int i, int t, int n);

  // Coordinates of cocycle columns in the class basis of h, solving against
  // [reps | image]. Throws std::logic_error if a column is not a cocycle;
  // returns nullopt if a column is not spanned (window precision exceeded).
  std::optional<MatrixGF> class_coords(const Cohomology& h, const MatrixGF& v);

  // Transition H^i_t(n) -> H^i_{t+1}(n) in the chosen bases.
  MatrixGF transition(const Cohomology& at_t, const Cohomology& at_t1);

  // x_T and x_j^t with memoization.
  const Polynomial& subset_product(const std::vector<int>& subset);
  const Polynomial& generator_power(int j, int t);

private:
  IdealSpec ideal_;
  InvariantBasisCache cache_;
  std::mutex mu_;
  std::map<int, std::vector<std::vector<int>>> subsets_memo_;
  std::map<std::vector<int>, Polynomial> subset_product_memo_;
  std::map<std::pair<int, int>, Polynomial> gen_power_memo_;
};

// Stabilization status of one window degree. `dim_history[k]` is the
// dimension at truncation k+1.
struct DegreeReport {
  int dim = 0;
  bool stabilized = false;
  std::vector<int> dim_history;
};

enum class ClassOpStatus { ok, outside_window, not_stabilized, not_representable };

struct ClassVector {
  ClassOpStatus status = ClassOpStatus::ok;
  int degree = 0;
  std::vector<FieldCode> coords;  // in the window basis at `degree` when ok
};

// A window of H^i_I(S): per-degree dimensions, stabilization flags and
// representative cocycles at the reporting truncation t. A degree is flagged
// stabilized when the transitions t -> t+1 -> t+2 are both isomorphisms;
// unstabilized dimensions are window-precision readings, never exact claims.
class GradedCohomologyWindow {
public:
  GradedCohomologyWindow(std::shared_ptr<KoszulEngine> engine, int index,
                         int lo, int hi, int t_max);

  const std::shared_ptr<KoszulEngine>& engine() const { return engine_; }
  int index() const { return index_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int truncation() const { return t_rep_; }
  int t_max() const { return t_max_; }
  bool in_window(int n) const { return n >= lo_ && n <= hi_; }

  const DegreeReport& report(int n) const;
  int dim(int n) const { return report(n).dim; }
  bool stabilized(int n) const { return report(n).stabilized; }
  bool all_zero() const;
  bool all_stabilized() const;

  // Representative of class k at degree n as a tuple of fractions indexed by
  // the size-i subsets.
  std::vector<Fraction> representative(int n, int k) const;

  // Class of the product f * c for an invariant homogeneous f.
  ClassVector multiply(const Polynomial& f, int n,
                       std::span<const FieldCode> coords) const;
  // Induced Q^r; lands at degree n + r(q-1), computed at a higher truncation.
  ClassVector induced_q(int r, int n, std::span<const FieldCode> coords) const;

private:
  const KoszulEngine::Cohomology& coh(int n) const;

  std::shared_ptr<KoszulEngine> engine_;
  int index_ = 0, lo_ = 0, hi_ = 0, t_rep_ = 1, t_max_ = 1;
  std::map<int, DegreeReport> reports_;
  std::map<int, KoszulEngine::Cohomology> data_;

  friend GradedCohomologyWindow colimit_window(std::shared_ptr<KoszulEngine>,
                                               int, int, int, int);
};

// Computes the window by running truncations 1..t_max; representatives are
// reported at t_max - 2 so both following transitions witness stabilization.
GradedCohomologyWindow colimit_window(std::shared_ptr<KoszulEngine> engine,
                                      int index, int lo, int hi, int t_max);

// Per-degree dimension comparison for two generator lists of the same ideal.
struct WindowComparison {
  bool agree = true;
  std::vector<int> differing_degrees;
};
WindowComparison compare_windows(const GradedCohomologyWindow& a,
                                 const GradedCohomologyWindow& b);

struct SkippedConstraint {
  int source_degree;      // window degree n whose product left the usable range
  int factor_degree;      // degree of the multiplier
  ClassOpStatus reason;   // outside_window or not_stabilized
};

// Graded annihilator of the window classes: pieces A_e for e = 0..degree_cap
// of invariant f with f * c = 0 for every testable window class c. Products
// leaving the window (or touching unstabilized degrees) are excluded from the
// constraints and recorded.
class WindowAnnihilator {
public:
  struct Piece {
    int degree = 0;
    int space_dim = 0;           // dim S_e
    MatrixGF coords;             // basis of the piece, in S_e coordinates
    std::vector<Polynomial> basis;
    int constraints = 0;         // number of scalar constraints imposed
    std::vector<SkippedConstraint> skipped;
  };

  const GradedCohomologyWindow& window() const { return *window_; }
  int degree_cap() const { return degree_cap_; }
  const Piece& piece(int e) const;
  bool window_all_zero() const { return window_all_zero_; }
  // True when every piece up to the cap is zero (and the window is not).
  bool trivial() const;
  bool contains(const Polynomial& f) const;

private:
  friend WindowAnnihilator window_annihilator(const GradedCohomologyWindow&, int);
  const GradedCohomologyWindow* window_ = nullptr;
  int degree_cap_ = 0;
  bool window_all_zero_ = false;
  std::map<int, Piece> pieces_;
};

WindowAnnihilator window_annihilator(const GradedCohomologyWindow& window,
                                     int degree_cap);

// Checks closure of the computed annihilator under every Steenrod component
// within the cap: P^i(f) for f in A_e must land in A_{e + i(q-1)}.
struct ClosureViolation {
  int degree;
  int basis_index;
  std::size_t power;
};
struct ClosureReport {
  bool pass = true;
  std::vector<ClosureViolation> violations;
  int checked = 0;
  int skipped = 0;  // targets beyond the cap
};
ClosureReport pstar_closure_check(const WindowAnnihilator& ann);

// Checks closure under multiplication by invariants within the cap: h * f for
// f in A_e and invariant h of degree c must land in A_{e+c}. Window-precision
// caveats apply where constraints were skipped.
struct MultClosureViolation {
  int degree;
  int basis_index;
  int factor_degree;
  int factor_index;
};
struct MultClosureReport {
  bool pass = true;
  std::vector<MultClosureViolation> violations;
  int checked = 0;
};
MultClosureReport invariant_closure_check(const WindowAnnihilator& ann);

// Containment of Dickson generator powers in the window annihilator.
enum class ContainmentStatus { contained, not_contained, inconclusive };
struct GeneratorContainment {
  ContainmentStatus status = ContainmentStatus::inconclusive;
  int witness_power = 0;  // least e with gen^e in the annihilator, when contained
};
enum class ProbeStatus { vacuous_pass, hypothesis_not_met, checked };
struct DicksonProbeReport {
  ProbeStatus status = ProbeStatus::checked;
  std::vector<GeneratorContainment> generators;
};
DicksonProbeReport dickson_containment_probe(const WindowAnnihilator& ann,
                                             const DicksonAlgebra& algebra,
                                             int g, int power_bound = 4);

// Degreewise regularity probe: step k tests whether multiplication by seq[k]
// is injective on S / (seq[0..k-1]) in all degrees up to cap - deg seq[k].
struct DepthStep {
  bool regular = true;
  int tested_up_to = -1;
  std::optional<int> violation_degree;
  std::optional<Polynomial> witness;  // nonzero kernel element
};
struct DepthReport {
  bool regular = true;
  std::vector<DepthStep> steps;
};
DepthReport depth_probe(const std::vector<Polynomial>& sequence,
                        InvariantBasisCache& cache, int degree_cap);

}  // namespace modinv
