#include "tristrat/strategy.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "parallel.hpp"
#include "tristrat/nonconsistency.hpp"

namespace tristrat {

namespace {

void check_enumerable(std::size_t n, std::optional<int> order, bool allow_large) {
  if (n == 0) fail(ErrorKind::Validation, "no issues to enumerate");
  if (n > kMaxAxisSize) fail(ErrorKind::Capacity, "more than 64 issues are not supported");
  if (order && (*order < 1 || static_cast<std::size_t>(*order) > n)) {
    fail(ErrorKind::Validation, "order " + std::to_string(*order) + " outside [1, " + std::to_string(n) + "]");
  }
  if (n > kDefaultIssueCap && !order && !allow_large) {
    fail(ErrorKind::Capacity, std::to_string(n) + " issues exceed the enumeration cap of " +
                                  std::to_string(kDefaultIssueCap) + "; pass an order or the override");
  }
}

// Next larger integer with the same popcount (Gosper's hack); 0 once the
// 64-bit range is exhausted or the result leaves `limit`.
std::uint64_t next_same_popcount(std::uint64_t x, std::uint64_t limit) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return 0;
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  return (next & ~limit) != 0 ? 0 : next;
}

__extension__ using Int128 = __int128;

BigInt common_multiple(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Per-issue integer numerators N_t = D·ω(t)·d(t) and masses M_t = D·ω(t)
// over a common denominator D, so that degree(J) = ΣN / ΣM.
struct ScaledIssues {
  std::vector<BigInt> numer;
  std::vector<BigInt> mass;
};

ScaledIssues scale(const WeightVector& omega, const std::vector<Rational>& degrees) {
  BigInt d = 1;
  std::vector<Rational> products;
  for (std::size_t t = 0; t < degrees.size(); ++t) {
    products.push_back(omega[t] * degrees[t]);
    d = common_multiple(d, products.back().denominator());
    d = common_multiple(d, omega[t].denominator());
  }
  ScaledIssues s;
  for (std::size_t t = 0; t < degrees.size(); ++t) {
    s.numer.push_back(products[t].numerator() * (d / products[t].denominator()));
    s.mass.push_back(omega[t].numerator() * (d / omega[t].denominator()));
  }
  return s;
}

template <class Int>
Int to_int(const BigInt& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return v;
  } else {
    return static_cast<Int>(v.convert_to<long long>());
  }
}

template <class Int>
BigInt to_big(const Int& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return v;
  } else {
    return BigInt(v);
  }
}

// Scans candidate strategies, keeping J where keep(ΣN, ΣM) holds. With an
// order the candidates are the order-sized subsets, otherwise every bitmask
// in [1, 2^n). `Int` must hold every partial product without overflow.
template <class Int, class Keep>
std::vector<ScoredStrategy> scan(const ScaledIssues& s, std::optional<int> order, unsigned workers, Keep keep) {
  const std::size_t n = s.numer.size();
  std::vector<Int> numer, mass;
  for (std::size_t t = 0; t < n; ++t) {
    numer.push_back(to_int<Int>(s.numer[t]));
    mass.push_back(to_int<Int>(s.mass[t]));
  }
  std::vector<Strategy> candidates;
  if (order) candidates = enumerate_strategies(n, order, true);
  const std::uint64_t total = order ? candidates.size() : Strategy::first(n).bits();
  const std::uint64_t per_chunk = std::max<std::uint64_t>(1 << 12, total / (std::uint64_t{workers} * 8 + 1));
  const std::size_t chunks = static_cast<std::size_t>((total + per_chunk - 1) / per_chunk);
  std::vector<std::vector<ScoredStrategy>> found(chunks);

  detail::parallel_chunks(chunks, workers, [&](std::size_t c) {
    const std::uint64_t lo = c * per_chunk;
    const std::uint64_t hi = std::min(total, lo + per_chunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t bits = order ? candidates[i].bits() : i + 1;
      Int sn = 0, sm = 0;
      for (std::uint64_t b = bits; b != 0; b &= b - 1) {
        const auto t = static_cast<std::size_t>(std::countr_zero(b));
        sn += numer[t];
        sm += mass[t];
      }
      if (sm == 0 || !keep(sn, sm)) continue;
      found[c].push_back({Strategy(bits), Rational(to_big(sn), to_big(sm))});
    }
  });

  std::vector<ScoredStrategy> out;
  for (auto& f : found) out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  std::sort(out.begin(), out.end(),
            [](const ScoredStrategy& a, const ScoredStrategy& b) { return canonical_less(a.strategy, b.strategy); });
  return out;
}

// Keeps ΣN/ΣM ≥ threshold (at_least) or ≤ threshold, i.e. den·ΣN vs num·ΣM.
template <class Int>
std::vector<ScoredStrategy> scan_threshold(const ScaledIssues& s, const Rational& threshold, bool at_least,
                                           std::optional<int> order, unsigned workers) {
  const Int num = to_int<Int>(threshold.numerator());
  const Int den = to_int<Int>(threshold.denominator());
  return scan<Int>(s, order, workers, [&](const Int& sn, const Int& sm) {
    const Int lhs = den * sn;
    const Int rhs = num * sm;
    return at_least ? lhs >= rhs : lhs <= rhs;
  });
}

std::vector<ScoredStrategy> select(const WeightVector& omega, const std::vector<Rational>& degrees,
                                   const Rational& threshold, bool at_least, const EngineOptions& options) {
  const unsigned workers = options.workers ? options.workers : resolve_worker_count();
  const ScaledIssues s = scale(omega, degrees);
  // Int128 suffices when every subset sum times the threshold parts stays below 2^126.
  BigInt sum_n = 0, sum_m = 0;
  for (std::size_t t = 0; t < degrees.size(); ++t) {
    sum_n += s.numer[t];
    sum_m += s.mass[t];
  }
  const BigInt bound = BigInt(1) << 62;
  if (sum_n < bound && sum_m < bound && threshold.numerator() < bound && threshold.denominator() < bound) {
    return scan_threshold<Int128>(s, threshold, at_least, options.order, workers);
  }
  return scan_threshold<BigInt>(s, threshold, at_least, options.order, workers);
}

void check_gate(const SituationTable& table, Clique g, const ParamSet& params) {
  table.check_clique(g);
  if (!clique_gate(g, table.agent_count(), params.gamma_p())) {
    fail(ErrorKind::Gate, "clique " + table.format(g) + " has " + std::to_string(g.size()) + " of " +
                              std::to_string(table.agent_count()) + " agents, below gamma_p = " +
                              params.gamma_p().to_display());
  }
}

OptimalSet pick(const FeasibleSet& fs, std::size_t issue_count, const ParamSet& params, bool maximize) {
  OptimalSet out{fs.kind, {}, std::nullopt};
  for (const auto& s : fs.strategies) {
    if (Rational(static_cast<std::int64_t>(s.strategy.size()), static_cast<std::int64_t>(issue_count)) <
        params.gamma_t()) {
      continue;
    }
    if (!out.extremal_degree || (maximize ? s.degree > *out.extremal_degree : s.degree < *out.extremal_degree)) {
      out.extremal_degree = s.degree;
      out.strategies.clear();
    }
    if (s.degree == *out.extremal_degree) out.strategies.push_back(s.strategy);
  }
  return out;
}

}  // namespace

const char* to_string(MeasureKind kind) {
  return kind == MeasureKind::Consistency ? "consistency" : "non-consistency";
}

unsigned resolve_worker_count() {
  if (const char* env = std::getenv("TRISTRAT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_strategy(std::size_t n, std::optional<int> order, bool allow_large,
                       const std::function<void(Strategy)>& visit) {
  check_enumerable(n, order, allow_large);
  const std::uint64_t limit = Strategy::first(n).bits();
  const int lo = order ? *order : 1;
  const int hi = order ? *order : static_cast<int>(n);
  for (int k = lo; k <= hi; ++k) {
    for (std::uint64_t bits = Strategy::first(static_cast<std::size_t>(k)).bits(); bits != 0;
         bits = next_same_popcount(bits, limit)) {
      visit(Strategy(bits));
    }
  }
}

std::vector<Strategy> enumerate_strategies(std::size_t n, std::optional<int> order, bool allow_large) {
  std::vector<Strategy> out;
  for_each_strategy(n, order, allow_large, [&](Strategy s) { out.push_back(s); });
  return out;
}

bool clique_gate(Clique g, std::size_t agent_count, const Rational& gamma_p) {
  if (agent_count == 0) fail(ErrorKind::Validation, "no agents");
  return Rational(static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(agent_count)) >= gamma_p;
}

FeasibleSet FeasibleSet::of_order(int order) const {
  FeasibleSet out{kind, clique, params, {}};
  for (const auto& s : strategies) {
    if (s.strategy.size() == static_cast<std::size_t>(order)) out.strategies.push_back(s);
  }
  return out;
}

FeasibleSet feasible_c(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                       Clique g, const ParamSet& params, const EngineOptions& options) {
  check_gate(table, g, params);
  check_enumerable(table.issue_count(), options.order, options.allow_large);
  const ConsistencyProfile profile(table, theta, g, params);
  return {MeasureKind::Consistency, g, params, select(omega, profile.degrees(), params.lambda(), true, options)};
}

FeasibleSet feasible_n(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                       Clique g, const ParamSet& params, const EngineOptions& options) {
  check_gate(table, g, params);
  check_enumerable(table.issue_count(), options.order, options.allow_large);
  const NonConsistencyProfile profile(table, theta, g);
  return {MeasureKind::NonConsistency, g, params, select(omega, profile.degrees(), params.tau(), false, options)};
}

FeasibleSet feasible(MeasureKind kind, const SituationTable& table, const WeightVector& theta,
                     const WeightVector& omega, Clique g, const ParamSet& params, const EngineOptions& options) {
  return kind == MeasureKind::Consistency ? feasible_c(table, theta, omega, g, params, options)
                                          : feasible_n(table, theta, omega, g, params, options);
}

OptimalSet optimal_c(const FeasibleSet& fs, std::size_t issue_count, const ParamSet& params) {
  if (fs.kind != MeasureKind::Consistency) fail(ErrorKind::Usage, "optimal_c needs a consistency feasible set");
  return pick(fs, issue_count, params, true);
}

OptimalSet optimal_n(const FeasibleSet& fs, std::size_t issue_count, const ParamSet& params) {
  if (fs.kind != MeasureKind::NonConsistency) {
    fail(ErrorKind::Usage, "optimal_n needs a non-consistency feasible set");
  }
  return pick(fs, issue_count, params, false);
}

OptimalSet optimal(const FeasibleSet& fs, std::size_t issue_count, const ParamSet& params) {
  return fs.kind == MeasureKind::Consistency ? optimal_c(fs, issue_count, params)
                                             : optimal_n(fs, issue_count, params);
}

}  // namespace tristrat
