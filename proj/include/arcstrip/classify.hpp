#pragma once

/*
 * Recognition layer on top of the arc-set engine: the boundedness
 * conditions with failure certificates, fan minima, construction and
 * verification of finite shift-bases for crosser sets, left-approximation
 * existence, and the derived cotorsion / t-structure / triangulation
 * classifiers.  Everything is exact on zone-presented (possibly infinite)
 * sets; the few places with dual characterizations compute both and treat
 * disagreement as an internal invariant violation.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcstrip/arcset.hpp"
#include "arcstrip/errors.hpp"
#include "arcstrip/strip_model.hpp"

namespace arcstrip {

// Witness for a failed boundedness condition: at `point` the set runs off
// unboundedly in `direction` while the paired direction stays bounded.
struct BoundCert {
  MarkedPoint point;
  BoundDirection direction;
  std::string str() const;
};

struct CondReport {
  bool holds = false;
  std::optional<BoundCert> cert;  // present exactly when !holds
};

// Condition (B): at every marked point, escaping along the own boundary to
// the right forces a connecting escape to the right, and a connecting
// escape to the left forces an own-boundary escape to the left.  Condition
// (B') is the left-right mirror image.
CondReport cond_B(const ArcSet& t);
CondReport cond_Bprime(const ArcSet& t);

// Condition (C): the set or its noncrossing complement contains a
// connecting arc.
bool cond_C(const ArcSet& t);

// Compactness of the shift in either direction; decided by the criterion
// (B) and (C), resp. (B') and (C).  Throws InputError when t is not a
// Ptolemy diagram (the criterion does not apply).
bool is_tau_compact(const ArcSet& t);
bool is_tau_inv_compact(const ArcSet& t);

// Thrown when a requested fan minimum does not exist because the deciding
// class of the fan is unbounded toward `direction`.
class FanUnboundedError : public InputError {
 public:
  FanUnboundedError(MarkedPoint p, BoundDirection dir);
  MarkedPoint point;
  BoundDirection direction;
};

// Minimum of the fan of t's members at p.  Without a pivot the minimum
// ranges over arcs of t ending at p and is absent when no such arc exists.
// With strictly_above = u (an arc or edge at p), the minimum ranges over
// members-and-boundary-edges strictly greater than u at p, and is absent
// only when u is already the top of the fan.  Throws FanUnboundedError
// when the deciding class has no greatest element.
std::optional<ArcOrEdge> fan_min(const ArcSet& t, MarkedPoint p,
                                 std::optional<ArcOrEdge> strictly_above = {});

// Whether sigma is a finite tau-basis of omega: every member of omega must
// be served by some s in sigma, meaning tau(s) crosses it and, when s also
// crosses it, both middle terms of that crossing lie in omega or are
// boundary edges.  Members of sigma must be arcs belonging to omega
// (InputError otherwise).  Finite omega is checked by enumeration; infinite
// omega symbolically on zones.  is_tau_inv_basis is the mirror-conjugate
// statement for the inverse shift.
bool is_tau_basis(const std::vector<ArcOrEdge>& sigma, const ArcSet& omega);
bool is_tau_inv_basis(const std::vector<ArcOrEdge>& sigma,
                      const ArcSet& omega);

namespace detail {
// The symbolic route of is_tau_basis, exposed so tests can cross-check it
// against the enumeration route on finite inputs.
bool is_tau_basis_symbolic(const std::vector<ArcOrEdge>& sigma,
                           const ArcSet& omega);
}  // namespace detail

// A finite tau-basis of the crossers of w inside t, constructed from fan
// minima and verified with is_tau_basis before returning (sorted, no
// duplicates).  Requires is_tau_compact(t) (InputError otherwise); under
// that precondition the construction cannot fail, so any internal failure
// throws InternalInvariantError.  tau_inv_basis_of_crossers is the
// mirror-conjugate for the inverse shift.
std::vector<ArcOrEdge> tau_basis_of_crossers(const ArcSet& t,
                                             const ArcOrEdge& w);
std::vector<ArcOrEdge> tau_inv_basis_of_crossers(const ArcSet& t,
                                                 const ArcOrEdge& w);

// Left approximation of the object of u by the additive closure of y: when
// it exists, `summands` lists a finite tau-basis of the crossers of tau(u)
// in y (empty when nothing crosses).  exists == false means no finite
// approximation exists (some deciding fan is unbounded).  Inputs the
// procedure can neither certify nor refute (possible only when y is not a
// Ptolemy diagram) throw InputError.
struct ApproxResult {
  bool exists = false;
  std::vector<ArcOrEdge> summands;
};
ApproxResult left_approx_summands(const ArcSet& y, const ArcOrEdge& u);

// Cotorsion-pair recognition, decided through both one-sided
// characterizations (x inv-compact with y = nc x; y compact with
// x = nc y); they agree on every pair, and disagreement throws
// InternalInvariantError.  is_torsion shifts y back by one step.
bool is_cotorsion(const ArcSet& x, const ArcSet& y);
bool is_torsion(const ArcSet& x, const ArcSet& y);

ArcSet core_of(const ArcSet& x, const ArcSet& y);
ArcSet heart_of(const ArcSet& x, const ArcSet& y);

// t-structure = cotorsion pair with empty core; cross-checked against
// shift-closedness of x (InternalInvariantError on disagreement).
bool is_t_structure(const ArcSet& x, const ArcSet& y);

// The classified t-structures come in two one-parameter-per-boundary
// families: side 1 keeps everything from l_p and r_q rightward (p, q in
// Z union {+inf}, where +inf means the empty family), side 2 everything
// leftward (Z union {-inf}).
enum class TSide { LeftAperture = 1, RightAperture = 2 };

struct TParams {
  i64 p = 0;
  i64 q = 0;  // +-kInf encode the infinite parameter of the side
  TSide side = TSide::LeftAperture;
  bool operator==(const TParams&) const = default;
};

// The pair (x, y) of the t-structure with the given parameters.
std::pair<ArcSet, ArcSet> t_structure(i64 p, i64 q, TSide side);

// Recovers the parameters from a pair, or nullopt when (x, y) is not one
// of the classified t-structures.
std::optional<TParams> t_params(const ArcSet& x, const ArcSet& y);

enum class TriangulationStatus {
  None,            // has a crossing pair
  Partial,         // noncrossing
  Full,            // noncrossing and equal to its own noncrossing complement
  CompactPartial,  // Partial with (B), (B') and (C)
  CompactFull,     // Full with (B), (B') and (C)
};
std::string to_string(TriangulationStatus s);

TriangulationStatus triangulation_status(const ArcSet& t);

// One-stop summary used by the check command.
struct ClassificationReport {
  bool is_ptolemy = false;
  bool cond_b = false;
  std::optional<BoundCert> cert_b;
  bool cond_bprime = false;
  std::optional<BoundCert> cert_bprime;
  bool cond_c = false;
  bool tau_compact = false;
  bool tau_inv_compact = false;
  std::optional<ArcSet> cotorsion_partner;  // nc(t) when compact either way
  std::optional<TParams> t_params;
  bool is_t_structure = false;
  TriangulationStatus triangulation = TriangulationStatus::None;
  std::string str() const;
};
ClassificationReport classify_report(const ArcSet& t);

}  // namespace arcstrip
