#include "fillarea/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fillarea {

double wrap_angle(double radians) {
  double t = std::fmod(radians, kTau);
  if (t < 0.0) t += kTau;
  // fmod of a negative value can land exactly on kTau after the correction
  if (t >= kTau) t = 0.0;
  return t;
}

CircleAngle::CircleAngle(double radians) : theta(wrap_angle(radians)) {}

bool CircleAngle::same_point(CircleAngle other) const {
  double d = std::fabs(theta - other.theta);
  return d <= kAngleTol || kTau - d <= kAngleTol;
}

double ccw_gap(CircleAngle a, CircleAngle b) {
  double d = b.theta - a.theta;
  if (d < 0.0) d += kTau;
  return d;
}

CirclePointSet equally_spaced(int n, double phase) {
  if (n < 1) throw std::invalid_argument("equally_spaced: n must be positive");
  CirclePointSet P;
  P.angles.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    P.angles.emplace_back(phase + kTau * static_cast<double>(i) / n);
  return P;
}

double oriented_area(CircleAngle a, CircleAngle b) {
  // Snap the neutral cases (equal or antipodal) to exactly zero.
  double gap = ccw_gap(a, b);
  if (gap <= kAngleTol || kTau - gap <= kAngleTol) return 0.0;
  if (std::fabs(gap - kPi) <= kAngleTol) return 0.0;
  return 0.5 * std::sin(b.theta - a.theta);
}

double cyclic_area_sum(const CirclePointSet& P) {
  const std::size_t n = P.size();
  if (n < 2) throw std::invalid_argument("degenerate point set");
  double sum = 0.0;
  const std::size_t last = P.cyclic ? n : n - 1;
  for (std::size_t i = 0; i < last; ++i)
    sum += oriented_area(P.angles[i], P.angles[(i + 1) % n]);
  return sum;
}

double longest_gap(const CirclePointSet& P) {
  if (P.angles.empty()) throw std::invalid_argument("empty point set");
  if (P.angles.size() == 1) return kTau;
  std::vector<double> sorted;
  sorted.reserve(P.angles.size());
  for (const CircleAngle& a : P.angles) sorted.push_back(a.theta);
  std::sort(sorted.begin(), sorted.end());
  double best = kTau - sorted.back() + sorted.front();
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    best = std::max(best, sorted[i + 1] - sorted[i]);
  return best;
}

bool is_ccw_cyclic(const CirclePointSet& P) {
  const std::size_t n = P.size();
  if (n < 2) return true;
  // Walking p_i -> p_{i+1} counterclockwise must wrap around exactly once.
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    total += ccw_gap(P.angles[i], P.angles[(i + 1) % n]);
  long winding = std::lround(total / kTau);
  return winding == 1;
}

namespace {

void require_distinct(const CirclePointSet& P, const char* what) {
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      if (P.angles[i].same_point(P.angles[j]))
        throw std::invalid_argument(std::string(what) + ": duplicate points");
}

}  // namespace

bool check_cyclic_order(const CirclePointSet& reference,
                        const CirclePointSet& candidate) {
  if (reference.size() != candidate.size())
    throw std::invalid_argument("check_cyclic_order: size mismatch");
  require_distinct(reference, "check_cyclic_order reference");
  require_distinct(candidate, "check_cyclic_order candidate");
  if (!is_ccw_cyclic(reference))
    throw std::invalid_argument(
        "check_cyclic_order: reference is not counterclockwise");
  return is_ccw_cyclic(candidate);
}

void ArcPartition::validate() const {
  if (genus < 1) throw std::invalid_argument("arc partition: genus must be >= 1");
  if (arcs.size() != static_cast<std::size_t>(4 * genus))
    throw std::invalid_argument("arc partition: expected 4G arcs");
  double total = 0.0;
  for (const Arc& a : arcs) {
    if (a.length <= 0.0) throw std::invalid_argument("arc partition: nonpositive arc");
    total += a.length;
  }
  if (std::fabs(total - kTau) > 1e-9)
    throw std::invalid_argument("arc partition: lengths must sum to 2*pi");
  // Arcs must be consecutive: each starts where the previous one ends.
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& cur = arcs[i];
    const Arc& next = arcs[(i + 1) % arcs.size()];
    double expected = wrap_angle(cur.start.theta + cur.length);
    if (!CircleAngle(expected).same_point(next.start) &&
        std::fabs(wrap_angle(expected - next.start.theta)) > 1e-9 &&
        std::fabs(wrap_angle(next.start.theta - expected)) > 1e-9)
      throw std::invalid_argument("arc partition: arcs are not contiguous");
  }
}

GroupedBoundReport verify_grouped_bound(const ArcPartition& partition,
                                        const GroupedVectors& vectors) {
  partition.validate();
  if (vectors.groups.size() != partition.arcs.size())
    throw std::invalid_argument("invalid configuration");

  // Validate interiority and monotonicity, and build the concatenated
  // counterclockwise-by-group sequence.
  std::vector<CircleAngle> seq;
  GroupedBoundReport report;
  report.group_sums.assign(partition.arcs.size(), 0.0);
  report.group_limits.reserve(partition.arcs.size());
  for (const ArcPartition::Arc& arc : partition.arcs)
    report.group_limits.push_back(arc.length / 2.0);

  for (std::size_t g = 0; g < vectors.groups.size(); ++g) {
    const GroupedVectors::Group& group = vectors.groups[g];
    const ArcPartition::Arc& arc = partition.arcs[g];
    double prev_off = group.ccw ? -1.0 : arc.length + 1.0;
    for (const CircleAngle& v : group.angles) {
      double off = ccw_gap(arc.start, v);
      if (off <= 0.0 || off >= arc.length)
        throw std::invalid_argument("invalid configuration");
      if (group.ccw ? (off <= prev_off) : (off >= prev_off))
        throw std::invalid_argument("invalid configuration");
      prev_off = off;
      seq.push_back(v);
    }
    for (std::size_t j = 0; j + 1 < group.angles.size(); ++j)
      report.group_sums[g] +=
          oriented_area(group.angles[j], group.angles[j + 1]);
  }

  report.bound = kPi + 2.0 * static_cast<double>(partition.genus);
  if (seq.size() >= 2) {
    CirclePointSet P;
    P.angles = std::move(seq);
    report.sum = cyclic_area_sum(P);
  }
  report.slack = report.bound - report.sum;
  report.pass = report.sum <= report.bound + 1e-9;
  report.groups_pass = true;
  for (std::size_t g = 0; g < report.group_sums.size(); ++g)
    if (report.group_sums[g] > report.group_limits[g] + 1e-9)
      report.groups_pass = false;
  return report;
}

GroupedConfig random_grouped_config(std::mt19937_64& rng, int genus,
                                    int max_per_group) {
  if (genus < 1) throw std::invalid_argument("random_grouped_config: genus >= 1");
  const int n_arcs = 4 * genus;
  GroupedConfig cfg;
  cfg.partition.genus = genus;

  // Arc lengths: normalized exponential draws, then a random global phase.
  std::exponential_distribution<double> exp_draw(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> lengths(n_arcs);
  double total = 0.0;
  for (double& L : lengths) {
    L = exp_draw(rng) + 1e-3;
    total += L;
  }
  double start = unit(rng) * kTau;
  for (int i = 0; i < n_arcs; ++i) {
    ArcPartition::Arc arc;
    arc.start = CircleAngle(start);
    arc.length = lengths[i] / total * kTau;
    cfg.partition.arcs.push_back(arc);
    start += arc.length;
  }

  std::uniform_int_distribution<int> count_draw(0, max_per_group);
  for (const ArcPartition::Arc& arc : cfg.partition.arcs) {
    GroupedVectors::Group group;
    group.ccw = unit(rng) < 0.5;
    int count = count_draw(rng);
    std::vector<double> offsets(count);
    for (double& off : offsets)
      off = (0.01 + 0.98 * unit(rng)) * arc.length;
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    if (!group.ccw) std::reverse(offsets.begin(), offsets.end());
    for (double off : offsets)
      group.angles.emplace_back(arc.start.theta + off);
    cfg.vectors.groups.push_back(std::move(group));
  }
  return cfg;
}

}  // namespace fillarea
