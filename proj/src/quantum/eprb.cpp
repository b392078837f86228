#include "nonindiv/quantum/eprb.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "nonindiv/error.hpp"
#include "nonindiv/random.hpp"

namespace nonindiv::quantum {

void EprbCounts::add(int a, int b) noexcept {
  if (a > 0) {
    (b > 0 ? pp : pm) += 1;
  } else {
    (b > 0 ? mp : mm) += 1;
  }
}

EprbCounts& EprbCounts::operator+=(const EprbCounts& o) noexcept {
  pp += o.pp;
  pm += o.pm;
  mp += o.mp;
  mm += o.mm;
  return *this;
}

EprbResult summarize(const EprbCounts& c) {
  EprbResult r;
  r.counts = c;
  const double n = static_cast<double>(c.total());
  if (n == 0) return r;
  const double same = static_cast<double>(c.pp + c.mm);
  const double diff = static_cast<double>(c.pm + c.mp);
  r.correlation = (same - diff) / n;
  r.standard_error = std::sqrt(std::max(0.0, 1.0 - r.correlation * r.correlation) / n);
  return r;
}

namespace {

std::pair<int, int> run_trial(const JointSpinMeasurement& jm, const StateVector& psi, std::uint64_t seed,
                              std::uint64_t index) {
  Rng rng(seed_split(seed, index));
  return jm(psi, rng);
}

unsigned pick_threads(unsigned threads, std::uint64_t trials) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
}

// Splits [0, trials) into contiguous chunks, one per worker.
template <class Body>
void parallel_chunks(std::uint64_t trials, unsigned threads, Body body) {
  if (threads <= 1) {
    body(0u, std::uint64_t{0}, trials);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = std::min(trials, w * chunk);
    const std::uint64_t hi = std::min(trials, lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      try {
        body(w, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::pair<int, int> eprb_trial(const Direction& a, const Direction& b, std::uint64_t seed, std::uint64_t index) {
  return run_trial(JointSpinMeasurement(a, b), singlet(), seed, index);
}

EprbResult eprb_statistics(const Direction& a, const Direction& b, std::uint64_t trials, std::uint64_t seed,
                           unsigned threads) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  const JointSpinMeasurement jm(a, b);
  const StateVector psi = singlet();
  threads = pick_threads(threads, trials);
  std::vector<EprbCounts> partial(std::max(1u, threads));
  parallel_chunks(trials, threads, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    EprbCounts c;
    for (std::uint64_t i = lo; i < hi; ++i) {
      auto [x, y] = run_trial(jm, psi, seed, i);
      c.add(x, y);
    }
    partial[w] = c;
  });
  EprbCounts total;
  for (const auto& c : partial) total += c;
  return summarize(total);
}

std::vector<std::pair<int, int>> eprb_outcomes(const Direction& a, const Direction& b, std::uint64_t trials,
                                               std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  const JointSpinMeasurement jm(a, b);
  const StateVector psi = singlet();
  std::vector<std::pair<int, int>> out(trials);
  parallel_chunks(trials, pick_threads(threads, trials), [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) out[i] = run_trial(jm, psi, seed, i);
  });
  return out;
}

}  // namespace nonindiv::quantum
