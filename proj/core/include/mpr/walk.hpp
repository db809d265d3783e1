#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mpr {

enum class WalkKind { closed, free };
std::string to_string(WalkKind k);
WalkKind walk_kind_from_string(const std::string& s);

/// Steps are 0 = E, 1 = W, 2 = N, 3 = S.
struct WalkSample {
  WalkKind kind = WalkKind::free;
  long n = 0;
  std::vector<std::uint8_t> steps;

  std::size_t length() const { return steps.size(); }
  static WalkSample from_string(WalkKind kind, const std::string& letters);
  std::string to_string() const;
};

/// Closed walks have length 2n and are uniform over all closed walks;
/// free walks have length n with i.i.d. uniform steps.
WalkSample sample_walk(WalkKind kind, long n, std::uint64_t seed);

/// Which occupation times count towards a point's multiplicity, and which
/// multiplicity N_{2k} refers to.
struct VisitConvention {
  /// Count the occupation at time 0 as well as times 1..length.
  bool count_time_zero = false;
  /// N_{2k} counts points of multiplicity exactly 2k; when false it counts
  /// points of multiplicity exactly k.
  bool even_multiplicity = true;

  int multiplicity_for(int k) const { return even_multiplicity ? 2 * k : k; }
  std::string describe() const;
};

/// Open-addressing table of visit counts keyed by lattice coordinates.
/// Doubles its capacity when half full; clear() keeps the capacity so the
/// table can be reused across walks.
class LatticeCounter {
 public:
  explicit LatticeCounter(std::size_t expected_points);
  void clear();
  void visit(std::int32_t x, std::int32_t y);
  std::size_t distinct_points() const { return used_.size(); }
  /// multiplicity -> number of points
  std::map<int, long> histogram() const;

 private:
  struct Slot {
    std::int32_t x, y;
    std::uint32_t count;
  };
  void reset_capacity(std::size_t cap_hint);
  std::size_t locate(std::int32_t x, std::int32_t y) const;
  void grow();

  std::vector<Slot> slots_;
  std::vector<std::size_t> used_;
  std::size_t mask_ = 0;
  int shift_ = 0;
};

/// multiplicity -> number of lattice points visited exactly that often.
std::map<int, long> visit_histogram(const WalkSample& w, const VisitConvention& c = {});
/// The same via std::map on coordinate pairs; the test oracle.
std::map<int, long> visit_histogram_naive(const WalkSample& w, const VisitConvention& c = {});

/// k -> N_{2k} for k = 1..max_k.
std::map<int, long> multiplicity_range(const WalkSample& w, int max_k, const VisitConvention& c = {});

struct BetaStats {
  WalkKind kind = WalkKind::free;
  long n = 0;
  int k = 1;
  long batch = 0;
  std::uint64_t seed = 0;
  double scale = 0.0;  // ln(L)^3 / (4 pi^3 L), L the walk length
  double mean = 0.0;   // of beta, zero up to rounding after centering
  double mean_stderr = 0.0;
  double var = 0.0, var_stderr = 0.0;
  double m3 = 0.0, m3_stderr = 0.0;
  double raw_mean_count = 0.0;  // batch mean of N_{2k}
};

/// Moments of beta = scale * (N_{2k} - batch mean of N_{2k}) over `batch`
/// independent walks with per-walk seeds derived from `seed`.
BetaStats beta_statistic(WalkKind kind, long n, int k, long batch, std::uint64_t seed, const VisitConvention& c = {});

struct ChiSquareResult {
  long n = 0;
  long samples = 0;
  long categories = 0;
  double statistic = 0.0;
  double p_value = 0.0;
};
/// Goodness of fit of the closed-walk sampler against the uniform law on
/// all C(2n,n)^2 closed walks of length 2n.
ChiSquareResult closed_sampler_uniformity(long n, long samples, std::uint64_t seed);

/// All closed walks of length 2n, in lexicographic step order.
std::vector<WalkSample> enumerate_closed_walks(long n);

}  // namespace mpr
