#include "mpr/walk.hpp"

#include "mpr/feynman.hpp"
#include "mpr/parallel.hpp"
#include "mpr/special.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <memory>
#include <mutex>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mpr {

std::string to_string(WalkKind k) { return k == WalkKind::closed ? "closed" : "free"; }

WalkKind walk_kind_from_string(const std::string& s) {
  if (s == "closed") return WalkKind::closed;
  if (s == "free") return WalkKind::free;
  throw std::invalid_argument("walk kind must be 'closed' or 'free', got '" + s + "'");
}

WalkSample WalkSample::from_string(WalkKind kind, const std::string& letters) {
  WalkSample w;
  w.kind = kind;
  for (char ch : letters) {
    switch (ch) {
      case 'E': w.steps.push_back(0); break;
      case 'W': w.steps.push_back(1); break;
      case 'N': w.steps.push_back(2); break;
      case 'S': w.steps.push_back(3); break;
      default: throw std::invalid_argument(std::string("invalid step letter ") + ch);
    }
  }
  w.n = kind == WalkKind::closed ? static_cast<long>(w.steps.size() / 2) : static_cast<long>(w.steps.size());
  return w;
}

std::string WalkSample::to_string() const {
  static const char letters[] = {'E', 'W', 'N', 'S'};
  std::string s;
  for (auto st : steps) s.push_back(letters[st]);
  return s;
}

namespace {

// The number of closed walks of length 2n with a east steps is
// (2n)! / (a!^2 (n-a)!^2), proportional to C(n,a)^2. Returns the
// normalized cumulative distribution over a = 0..n.
std::shared_ptr<const std::vector<double>> closed_east_count_cdf(long n) {
  static std::mutex m;
  static std::map<long, std::shared_ptr<const std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto cdf = std::make_shared<std::vector<double>>(static_cast<std::size_t>(n + 1));
  const auto log_binom = [n](long a) { return std::lgamma(n + 1.0) - std::lgamma(a + 1.0) - std::lgamma(n - a + 1.0); };
  const double top = 2.0 * log_binom(n / 2);
  double acc = 0.0;
  for (long a = 0; a <= n; ++a) (*cdf)[static_cast<std::size_t>(a)] = acc += std::exp(2.0 * log_binom(a) - top);
  for (double& x : *cdf) x /= acc;
  if (cache.size() > 64) cache.clear();
  return cache.emplace(n, std::move(cdf)).first->second;
}

}  // namespace

WalkSample sample_walk(WalkKind kind, long n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_walk: n must be positive");
  std::mt19937_64 rng(seed);
  WalkSample w;
  w.kind = kind;
  w.n = n;
  if (kind == WalkKind::free) {
    w.steps.resize(static_cast<std::size_t>(n));
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
      if (i % 32 == 0) bits = rng();
      w.steps[i] = static_cast<std::uint8_t>(bits & 3);
      bits >>= 2;
    }
    return w;
  }
  const auto cdf = closed_east_count_cdf(n);
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const long a = std::min<long>(n, std::upper_bound(cdf->begin(), cdf->end(), u) - cdf->begin());
  w.steps.reserve(static_cast<std::size_t>(2 * n));
  for (long j = 0; j < a; ++j) {
    w.steps.push_back(0);
    w.steps.push_back(1);
  }
  for (long j = a; j < n; ++j) {
    w.steps.push_back(2);
    w.steps.push_back(3);
  }
  // Fisher-Yates with Lemire's multiply-shift bounded draws.
  for (std::size_t i = w.steps.size() - 1; i > 0; --i) {
    const std::uint64_t range = i + 1;
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * range;
    if (static_cast<std::uint64_t>(m) < range) {
      const std::uint64_t threshold = (0 - range) % range;
      while (static_cast<std::uint64_t>(m) < threshold) m = static_cast<unsigned __int128>(rng()) * range;
    }
    std::swap(w.steps[i], w.steps[static_cast<std::size_t>(m >> 64)]);
  }
  return w;
}

std::string VisitConvention::describe() const {
  return std::string(count_time_zero ? "times 0..L" : "times 1..L") + ", N_2k = points visited exactly " +
         (even_multiplicity ? "2k" : "k") + " times";
}

namespace {

std::uint64_t pack(std::int32_t x, std::int32_t y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) | static_cast<std::uint32_t>(y);
}

template <class Visit>
void walk_positions(const WalkSample& w, const VisitConvention& c, Visit&& visit) {
  std::int32_t x = 0, y = 0;
  if (c.count_time_zero) visit(x, y);
  for (auto s : w.steps) {
    switch (s) {
      case 0: ++x; break;
      case 1: --x; break;
      case 2: ++y; break;
      default: --y; break;
    }
    visit(x, y);
  }
}

}  // namespace

LatticeCounter::LatticeCounter(std::size_t expected_points) { reset_capacity(std::max<std::size_t>(16, expected_points)); }

void LatticeCounter::reset_capacity(std::size_t cap_hint) {
  std::size_t cap = 16;
  while (cap < cap_hint) cap <<= 1;
  slots_.assign(cap, Slot{0, 0, 0});
  mask_ = cap - 1;
  shift_ = 0;
  while ((std::size_t(1) << (2 * (shift_ + 1))) <= cap) ++shift_;
  used_.clear();
}

void LatticeCounter::clear() {
  for (std::size_t p : used_) slots_[p].count = 0;
  used_.clear();
}

std::size_t LatticeCounter::locate(std::int32_t x, std::int32_t y) const {
  // Primary slot tiles the plane onto a torus so that neighbouring points
  // share cache lines; collisions step by an odd key-dependent stride.
  std::size_t p = ((static_cast<std::size_t>(static_cast<std::uint32_t>(y)) << shift_) +
                   static_cast<std::size_t>(static_cast<std::uint32_t>(x))) & mask_;
  const auto taken = [&](std::size_t q) { return slots_[q].count != 0 && (slots_[q].x != x || slots_[q].y != y); };
  if (taken(p)) {
    const std::uint64_t key = pack(x, y);
    const std::size_t step = static_cast<std::size_t>(((key ^ (key >> 29)) * 0xbf58476d1ce4e5b9ULL) >> 32) | 1;
    do p = (p + step) & mask_;
    while (taken(p));
  }
  return p;
}

void LatticeCounter::grow() {
  std::vector<Slot> old;
  old.reserve(used_.size());
  for (std::size_t p : used_) old.push_back(slots_[p]);
  reset_capacity(2 * slots_.size());
  for (const Slot& s : old) {
    const std::size_t p = locate(s.x, s.y);
    slots_[p] = s;
    used_.push_back(p);
  }
}

void LatticeCounter::visit(std::int32_t x, std::int32_t y) {
  std::size_t p = locate(x, y);
  if (slots_[p].count == 0) {
    if (2 * (used_.size() + 1) > slots_.size()) {
      grow();
      p = locate(x, y);
    }
    slots_[p].x = x;
    slots_[p].y = y;
    used_.push_back(p);
  }
  ++slots_[p].count;
}

std::map<int, long> LatticeCounter::histogram() const {
  std::vector<long> dense(64, 0);
  for (std::size_t p : used_) {
    const std::uint32_t c = slots_[p].count;
    if (c >= dense.size()) dense.resize(2 * c, 0);
    ++dense[c];
  }
  std::map<int, long> h;
  for (std::size_t c = 1; c < dense.size(); ++c)
    if (dense[c] != 0) h.emplace(static_cast<int>(c), dense[c]);
  return h;
}

std::map<int, long> visit_histogram(const WalkSample& w, const VisitConvention& c) {
  thread_local LatticeCounter counter(1024);
  counter.clear();
  walk_positions(w, c, [&](std::int32_t x, std::int32_t y) { counter.visit(x, y); });
  return counter.histogram();
}

std::map<int, long> visit_histogram_naive(const WalkSample& w, const VisitConvention& c) {
  std::map<std::pair<int, int>, int> visits;
  walk_positions(w, c, [&](std::int32_t x, std::int32_t y) { ++visits[{x, y}]; });
  std::map<int, long> h;
  for (const auto& [pt, m] : visits) ++h[m];
  return h;
}

std::map<int, long> multiplicity_range(const WalkSample& w, int max_k, const VisitConvention& c) {
  const auto h = visit_histogram(w, c);
  std::map<int, long> out;
  for (int k = 1; k <= max_k; ++k) {
    const auto it = h.find(c.multiplicity_for(k));
    out[k] = it == h.end() ? 0 : it->second;
  }
  return out;
}

BetaStats beta_statistic(WalkKind kind, long n, int k, long batch, std::uint64_t seed, const VisitConvention& c) {
  if (batch < 2) throw std::invalid_argument("beta_statistic: batch must be at least 2");
  if (k < 1) throw std::invalid_argument("beta_statistic: k must be positive");
  BetaStats st;
  st.kind = kind;
  st.n = n;
  st.k = k;
  st.batch = batch;
  st.seed = seed;
  const double L = kind == WalkKind::closed ? 2.0 * n : double(n);
  st.scale = std::pow(std::log(L), 3) / (4.0 * kPi * kPi * kPi * L);

  const int target = c.multiplicity_for(k);
  std::vector<double> counts(static_cast<std::size_t>(batch));
  const std::string label = to_string(kind) + ":" + std::to_string(n) + ":" + std::to_string(k) + ":";
  parallel_for(static_cast<std::size_t>(batch), [&](std::size_t i) {
    const WalkSample w = sample_walk(kind, n, derive_seed(seed, label + std::to_string(i)));
    const auto h = visit_histogram(w, c);
    const auto it = h.find(target);
    counts[i] = it == h.end() ? 0.0 : double(it->second);
  });

  const double B = double(batch);
  double mean = 0.0;
  for (double x : counts) mean += x;
  mean /= B;
  st.raw_mean_count = mean;
  double m1 = 0, m2 = 0, m3 = 0, m4 = 0, m6 = 0;
  for (double x : counts) {
    const double d = st.scale * (x - mean);
    m1 += d;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
    m6 += d * d * d * d * d * d;
  }
  m1 /= B;
  m2 /= B;
  m3 /= B;
  m4 /= B;
  m6 /= B;
  st.mean = m1;
  st.mean_stderr = std::sqrt(m2 / B);
  st.var = m2 * B / (B - 1.0);
  st.var_stderr = std::sqrt(std::max(0.0, m4 - m2 * m2) / B);
  st.m3 = m3;
  st.m3_stderr = std::sqrt(std::max(0.0, m6 - m3 * m3) / B);
  return st;
}

std::vector<WalkSample> enumerate_closed_walks(long n) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_closed_walks: n must be in 1..6");
  std::vector<WalkSample> out;
  const long L = 2 * n;
  const std::uint64_t total = std::uint64_t(1) << (2 * L);
  for (std::uint64_t code = 0; code < total; ++code) {
    WalkSample w;
    w.kind = WalkKind::closed;
    w.n = n;
    int dx = 0, dy = 0;
    for (long i = L - 1; i >= 0; --i) {
      const auto s = static_cast<std::uint8_t>((code >> (2 * i)) & 3);
      w.steps.push_back(s);
      dx += s == 0 ? 1 : s == 1 ? -1 : 0;
      dy += s == 2 ? 1 : s == 3 ? -1 : 0;
    }
    if (dx == 0 && dy == 0) out.push_back(std::move(w));
  }
  return out;
}

ChiSquareResult closed_sampler_uniformity(long n, long samples, std::uint64_t seed) {
  const auto walks = enumerate_closed_walks(n);
  std::map<std::vector<std::uint8_t>, std::size_t> index;
  for (std::size_t i = 0; i < walks.size(); ++i) index[walks[i].steps] = i;
  std::vector<long> observed(walks.size(), 0);
  std::mt19937_64 master(seed);
  for (long s = 0; s < samples; ++s) {
    const auto it = index.find(sample_walk(WalkKind::closed, n, master()).steps);
    if (it == index.end()) throw std::logic_error("closed sampler produced a non-closed walk");
    ++observed[it->second];
  }
  ChiSquareResult r;
  r.n = n;
  r.samples = samples;
  r.categories = static_cast<long>(walks.size());
  const double expected = double(samples) / double(walks.size());
  for (long o : observed) r.statistic += (o - expected) * (o - expected) / expected;
  boost::math::chi_squared dist(double(walks.size() - 1));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

}  // namespace mpr
