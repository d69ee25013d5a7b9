#include "arterm/verify.hpp"

#include "arterm/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace arterm {

namespace {

struct IndexResult {
  bool done = false;
  bool match = false;
  std::optional<BigInt> got;
  std::string error;
  std::size_t peak_bits = 0;
};

IndexResult check_index(const SequenceWindow& oracle, const Term& term, const BigInt& c, std::size_t n,
                        const EvalOptions& options) {
  IndexResult r;
  r.done = true;
  Evaluator eval(options);
  try {
    const BigInt value = eval(term, Assignment{{"n", BigInt(static_cast<unsigned long>(n))}});
    const BigInt got = value - ipow(c, static_cast<unsigned long>(n + 1));
    r.match = got == oracle[n];
    r.got = got;
  } catch (const ResourceError& e) {
    r.error = e.what();
  }
  r.peak_bits = eval.peak_bits();
  return r;
}

}  // namespace

VerificationReport verify_term(const SequenceWindow& oracle, const Term& term, const BigInt& c, std::size_t lo,
                               std::size_t hi, unsigned threads, EvalOptions options) {
  if (lo > hi) throw DomainError("empty verification range");
  if (hi >= oracle.size()) throw DomainError("oracle does not cover n = " + std::to_string(hi));
  const auto start = std::chrono::steady_clock::now();

  const std::size_t count = hi - lo + 1;
  std::vector<IndexResult> results(count);
  // Lowest index known to fail; workers skip anything above it.
  std::atomic<std::size_t> stop{count};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > stop.load()) return;
      results[i] = check_index(oracle, term, c, lo + i, options);
      if (!results[i].match) {
        std::size_t seen = stop.load();
        while (i < seen && !stop.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.lo = lo;
  report.hi = hi;
  for (std::size_t i = 0; i < count; ++i) {
    const IndexResult& r = results[i];
    report.checked = i + 1;
    report.peak_bits = std::max(report.peak_bits, r.peak_bits);
    if (!r.match) {
      report.first_failure = FailureRecord{lo + i, oracle[lo + i], r.got};
      report.error = r.error;
      break;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<std::pair<std::string, VerificationReport>> verify_fixtures(const std::vector<Fixture>& list,
                                                                        std::size_t horizon, unsigned threads) {
  std::vector<std::pair<std::string, VerificationReport>> out;
  for (const auto& f : list) {
    const std::size_t hi = std::max(horizon, f.valid_from);
    const SequenceWindow oracle = eval_oracle(f.recurrence, hi);
    out.emplace_back(f.id, verify_term(oracle, f.reference_term, f.reference_c, f.valid_from, hi, threads));
  }
  return out;
}

std::vector<std::pair<std::string, VerificationReport>> verify_catalog(std::size_t horizon, unsigned threads) {
  return verify_fixtures(fixtures(), horizon, threads);
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["range"] = {report.lo, report.hi};
  j["ok"] = report.ok();
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    j["first_failure"] = {{"n", f.n},
                          {"expected", to_string(f.expected)},
                          {"got", f.got ? nlohmann::json(to_string(*f.got)) : nlohmann::json(nullptr)}};
  } else {
    j["first_failure"] = nullptr;
  }
  j["peak_bits"] = report.peak_bits;
  j["checked"] = report.checked;
  j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
  if (!report.error.empty()) j["error"] = report.error;
  return j;
}

std::string describe(const VerificationReport& report) {
  const std::string range = "[" + std::to_string(report.lo) + ", " + std::to_string(report.hi) + "]";
  if (report.ok())
    return "ok " + range + " checked=" + std::to_string(report.checked) +
           " peak_bits=" + std::to_string(report.peak_bits);
  const auto& f = *report.first_failure;
  std::string line = "FAIL " + range + " at n=" + std::to_string(f.n) + " expected " + to_string(f.expected);
  if (f.got) line += " got " + to_string(*f.got);
  if (!report.error.empty()) line += " (" + report.error + ")";
  return line;
}

}  // namespace arterm
