#include "cgm/grid.hpp"

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace cgm {

std::string to_string(ScanPredicate predicate) {
  switch (predicate) {
    case ScanPredicate::gamma: return "gamma";
    case ScanPredicate::gamma_prime: return "gamma_prime";
    case ScanPredicate::delta: return "delta";
    case ScanPredicate::delta_prime: return "delta_prime";
    case ScanPredicate::scalar_sufficient: return "scalar_sufficient";
    case ScanPredicate::vertical_positive: return "vertical_positive";
  }
  return "?";
}

ScanPredicate parse_scan_predicate(const std::string& name) {
  for (auto p : {ScanPredicate::gamma, ScanPredicate::gamma_prime, ScanPredicate::delta, ScanPredicate::delta_prime,
                 ScanPredicate::scalar_sufficient, ScanPredicate::vertical_positive}) {
    if (to_string(p) == name) {
      return p;
    }
  }
  throw std::invalid_argument("unknown scan predicate: " + name);
}

std::size_t GridRange::count() const {
  if (!(step > 0) || hi < lo) {
    return 0;
  }
  const Rational spans = (hi - lo) / step;
  const BigInt whole = boost::multiprecision::numerator(spans) / boost::multiprecision::denominator(spans);
  if (whole >= BigInt(kMaxScanCells)) {
    return kMaxScanCells + 1;
  }
  return whole.convert_to<std::size_t>() + 1;
}

void ScanSpec::validate() const {
  if (n < 2) {
    throw std::invalid_argument("scan: n must be at least 2");
  }
  for (const GridRange* r : {&p_range, &q_range}) {
    if (!(r->step > 0)) {
      throw std::invalid_argument("scan: step must be positive");
    }
    if (r->hi < r->lo) {
      throw std::invalid_argument("scan: empty range (hi < lo)");
    }
  }
  const std::size_t cp = p_range.count();
  const std::size_t cq = q_range.count();
  if (cp > kMaxScanCells || cq > kMaxScanCells || cp * cq > kMaxScanCells) {
    throw std::invalid_argument("scan: grid exceeds 10^7 cells");
  }
  if (predicate == ScanPredicate::scalar_sufficient && !c) {
    throw std::invalid_argument("scan: scalar_sufficient needs --c");
  }
}

std::optional<bool> evaluate_cell(const ScanSpec& spec, const ExactParams& params) {
  switch (spec.predicate) {
    case ScanPredicate::gamma:
      return region::gamma(params);
    case ScanPredicate::gamma_prime:
      return region::gamma_prime(params);
    case ScanPredicate::delta:
      if (!spec.c || *spec.c < 0) {
        return std::nullopt;
      }
      return region::delta(params, *spec.c);
    case ScanPredicate::delta_prime:
      if (!spec.c || *spec.c < 0) {
        return std::nullopt;
      }
      return region::delta_prime(params, *spec.c);
    case ScanPredicate::scalar_sufficient:
      return scalar_pos_sufficient(params, spec.n, *spec.c) != ScalarCase::None;
    case ScanPredicate::vertical_positive:
      return vertical_positivity(params, spec.n);
  }
  return std::nullopt;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CGM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<unsigned>(std::min<long>(v, 1024));
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += threads) {
          fn(i);
        }
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

ScanResult run_scan(const ScanSpec& spec, unsigned threads) {
  spec.validate();
  ScanResult result;
  result.columns = spec.p_range.count();
  result.rows = spec.q_range.count();
  result.cells.resize(result.columns * result.rows);
  parallel_for(result.cells.size(), threads, [&](std::size_t index) {
    const std::size_t row = index / result.columns;
    const std::size_t col = index % result.columns;
    const ExactParams params{spec.p_range.node(col), spec.q_range.node(row)};
    ScanCell& cell = result.cells[index];
    cell.p = to_double(params.p);
    cell.q = to_double(params.q);
    cell.value = evaluate_cell(spec, params);
  });
  return result;
}

}  // namespace cgm
