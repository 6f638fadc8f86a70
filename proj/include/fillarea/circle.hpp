#pragma once

// Oriented triangle calculus on the unit circle.
//
// Every triangle here has one vertex at the origin and two on S^1, so it is
// determined by a pair of angles.  The signed area of such a triangle is
// sin(b - a) / 2: positive when the shorter arc from a to b runs
// counterclockwise, negative when it runs clockwise, zero for equal or
// antipodal pairs.  Cyclic sums of these areas over ordered point sets are
// the Riemann sums that converge to the area of the unit disc, and the
// grouped-arc configurations bound such sums by pi + 2G.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fillarea {

inline constexpr double kTau = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

// Wraparound tolerance for treating two angles as the same point on S^1.
inline constexpr double kAngleTol = 1e-12;

// An angle stored as its canonical representative in [0, 2*pi).
struct CircleAngle {
  double theta = 0.0;

  CircleAngle() = default;
  explicit CircleAngle(double radians);

  // Equality up to wraparound tolerance.
  bool same_point(CircleAngle other) const;
};

// Canonicalize any real angle into [0, 2*pi).
double wrap_angle(double radians);

// Counterclockwise angular distance from a to b, in [0, 2*pi).
double ccw_gap(CircleAngle a, CircleAngle b);

// An ordered sequence of angles.  `cyclic` selects the index convention for
// sums: with cyclic closure the successor of the last point is the first.
struct CirclePointSet {
  std::vector<CircleAngle> angles;
  bool cyclic = true;

  std::size_t size() const { return angles.size(); }
};

// n equally spaced points starting at `phase`.
CirclePointSet equally_spaced(int n, double phase = 0.0);

// Signed area of the origin triangle spanned by unit vectors at angles a, b.
// Exactly zero for coincident or antipodal inputs (within kAngleTol).
double oriented_area(CircleAngle a, CircleAngle b);

// Sum of oriented areas over consecutive pairs of P, closing the cycle when
// P.cyclic.  Throws std::invalid_argument("degenerate point set") for |P|<2.
double cyclic_area_sum(const CirclePointSet& P);

// Length of the longest open arc of S^1 \ P.  Throws on an empty set.
double longest_gap(const CirclePointSet& P);

// True iff `candidate`, read in the same index order as `reference`, is a
// cyclic rotation of a counterclockwise-sorted sequence (winding number 1).
// `reference` must itself be counterclockwise; duplicates throw.
bool check_cyclic_order(const CirclePointSet& reference,
                        const CirclePointSet& candidate);

// True iff the sequence walks counterclockwise around S^1 exactly once.
bool is_ccw_cyclic(const CirclePointSet& P);

// A partition of S^1 into 4G half-open arcs [start, start+length).
struct ArcPartition {
  struct Arc {
    CircleAngle start;
    double length = 0.0;  // radians, > 0
  };
  std::vector<Arc> arcs;
  int genus = 0;  // G >= 1; arcs.size() == 4G

  // Checks positivity, contiguity and total length 2*pi; throws on failure.
  void validate() const;
};

// Per-arc ordered vector groups.  Within a group the angles are monotone in
// the arc (all counterclockwise or all clockwise); groups may be empty.
struct GroupedVectors {
  struct Group {
    std::vector<CircleAngle> angles;
    bool ccw = true;
  };
  std::vector<Group> groups;  // one per arc, same order as the partition
};

struct GroupedBoundReport {
  double sum = 0.0;    // full cyclic oriented-area sum
  double bound = 0.0;  // pi + 2G
  double slack = 0.0;  // bound - sum
  bool pass = false;
  std::vector<double> group_sums;    // per-arc partial sums
  std::vector<double> group_limits;  // Length(tau_i) / 2
  bool groups_pass = false;          // every partial sum within its limit
};

// Checks the grouped-arc configuration against the pi + 2G bound and the
// per-group Length(tau)/2 partial-sum bounds (tolerance 1e-9 on both).
// Throws std::invalid_argument("invalid configuration") if a vector falls
// outside its arc interior or a group is not monotone.
GroupedBoundReport verify_grouped_bound(const ArcPartition& partition,
                                        const GroupedVectors& vectors);

// Random valid configuration for the brute-force verifier; deterministic in
// the generator state.  max_per_group bounds the vectors drawn per arc.
struct GroupedConfig {
  ArcPartition partition;
  GroupedVectors vectors;
};
GroupedConfig random_grouped_config(std::mt19937_64& rng, int genus,
                                    int max_per_group = 6);

}  // namespace fillarea
