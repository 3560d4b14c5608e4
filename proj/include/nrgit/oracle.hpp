// Brute-force verification of the closed-form classifiers.
//
// Stability under a group is the worst torus status over all translates of
// a point. For these actions the torus status of a translate depends only on
// which roots land on the two torus-fixed points [1:0], [0:1] of P^1 and where
// [v1:v2] ends up, so the group quantifier reduces to a finite placement set.

#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "nrgit/binary_forms.hpp"
#include "nrgit/envelope.hpp"

namespace nrgit {

constexpr int kDefaultCensusMaxN = 12;

/// All multiplicity profiles of degree n. Throws std::invalid_argument unless
/// 1 <= n <= max_n.
std::vector<Divisor> enumerate_profiles(int n, int max_n = kDefaultCensusMaxN);

enum class Group { TorusOnly, Borel, FullEnvelopeGroup, UnipotentEnvelope };

std::string to_string(Group g);

/// One point of P^1 that matters to a placement: a root (mult > 0), the
/// special slots even when empty, the marked point, or a fresh non-root.
struct TrackedPoint {
  enum class Origin { InfSlot, ZeroSlot, GenericRoot, MarkedNonRoot, Fresh };
  Origin origin;
  int mult;
};

/// Sends `to_inf` to [1:0] and `to_zero` to [0:1]; indices into the tracked list.
struct Placement {
  std::size_t to_inf;
  std::size_t to_zero;
};

struct GroupMoveSet {
  Group group;
  std::vector<TrackedPoint> points;
  std::optional<std::size_t> marked;  // index of [v1:v2] when (v1, v2) != 0
  std::vector<Placement> moves;
};

GroupMoveSet move_set(const EnvPoint& p, Group g);

/// The translate of p realising a placement.
EnvPoint apply_placement(const EnvPoint& p, const GroupMoveSet& set, const Placement& move);

/// Torus status of a single translate under the test belonging to the group.
Status placement_status(const EnvPoint& moved, const EnvParams& params, Group g);

/// Per-translate statuses already computed for one fixed EnvParams.
class PlacementCache {
 public:
  Status status(const EnvPoint& moved, const EnvParams& params, Group g);

 private:
  using Key = std::tuple<bool, unsigned, Divisor, int>;
  std::map<Key, Status> memo_;
};

/// Minimum over the move set of the per-placement torus status. A cache, if
/// given, must only ever be used with the same params.
Status worst_case_status(const EnvPoint& p, const EnvParams& params, Group g,
                         PlacementCache* cache = nullptr);

/// For a divisor: Borel and TorusOnly act on ([1:1:0], sigma) with H fixing
/// [1:0]; the envelope groups act on the same embedded point.
Status worst_case_status(const Divisor& d, const LinParam& p, Group g);

struct DiffEntry {
  std::string check;
  std::string subject;
  std::string closed_form;
  std::string oracle;
};

/// Closed-form classifiers under test. Defaults to the library's.
struct Classifiers {
  std::function<Status(const Divisor&, const LinParam&)> intrinsic = classify_H;
  std::function<Status(const EnvPoint&, const EnvParams&)> envelope = group_status;
  std::function<Status(const EnvPoint&, const EnvParams&)> torus_cases = torus_case_status;
  std::function<Status(const EnvPoint&, int)> unipotent = unipotent_status;
};

/// Every disagreement between a closed-form classifier and its brute-force
/// counterpart at degree n and linearisation p. Empty on success.
std::vector<DiffEntry> diff_report(int n, const LinParam& p, const Classifiers& c = {});

/// Disagreements between classify_U and the unipotent envelope oracle on
/// restrict_to_X(d), over every profile of degree n.
std::vector<DiffEntry> unipotent_baseline_report(int n);

}  // namespace nrgit
