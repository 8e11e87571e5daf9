#include "tristrat_oracle/oracle.hpp"

#include <algorithm>
#include <cstdlib>

#include <gmpxx.h>

namespace tristrat::oracle {

// Arithmetic runs on GMP rationals so the oracle shares no numeric code with
// the engine; values cross the API as Rational.
namespace {

using Q = mpq_class;

Q to_q(const Rational& r) {
  Q q(r.numerator().str() + "/" + r.denominator().str());
  q.canonicalize();
  return q;
}

Rational from_q(const Q& q) {
  return Rational(BigInt(q.get_num().get_str()), BigInt(q.get_den().get_str()));
}

struct Weights {
  std::vector<Q> w;

  explicit Weights(const WeightVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) w.push_back(to_q(v[i]));
  }

  Q sum(std::uint64_t bits) const {
    Q total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((bits >> i) & 1u) total += w[i];
    }
    return total;
  }
};

std::vector<std::size_t> members(std::uint64_t bits) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((bits >> i) & 1u) out.push_back(i);
  }
  return out;
}

Q sa_agent(const SituationTable& table, std::size_t p, std::size_t t, int ideal) {
  return Q(1) - Q(std::abs(table.value(p, t) - ideal), 2);
}

Rating rating(const SituationTable& table, const Weights& theta, Clique g, std::size_t t, const Q& mu,
              const Q& nu) {
  const Q total = theta.sum(g.bits());
  Q pos = 0;
  Q neg = 0;
  for (auto p : members(g.bits())) {
    pos += theta.w[p] / total * sa_agent(table, p, t, 1);
    neg += theta.w[p] / total * sa_agent(table, p, t, -1);
  }
  const Q diff = pos - neg;
  if (diff > mu) return Rating::Positive;
  if (diff >= nu) return Rating::Neutral;
  return Rating::Negative;
}

Q cm_issue(const SituationTable& table, const Weights& theta, Clique g, std::size_t t, const Q& mu, const Q& nu) {
  const int overall = static_cast<int>(rating(table, theta, g, t, mu, nu));
  const Q total = theta.sum(g.bits());
  Q distance = 0;
  for (auto p : members(g.bits())) distance += theta.w[p] / total * std::abs(table.value(p, t) - overall);
  return Q(1) - distance / 2;
}

Q cm(const SituationTable& table, const Weights& theta, const Weights& omega, Clique g, Strategy j, const Q& mu,
     const Q& nu) {
  const Q total = omega.sum(j.bits());
  Q sum = 0;
  for (auto t : members(j.bits())) sum += omega.w[t] / total * cm_issue(table, theta, g, t, mu, nu);
  return sum;
}

Q ca(const SituationTable& table, const Weights& theta, std::size_t p, std::size_t q, std::size_t t) {
  const Q gap = std::abs(table.value(p, t) - table.value(q, t));
  if (p == q) return gap;
  const Q pair = theta.w[p] + theta.w[q];
  const Q imbalance = abs(theta.w[p] / pair - theta.w[q] / pair);
  return gap * (Q(1) - imbalance) / 2;
}

Q nm_issue(const SituationTable& table, const Weights& theta, Clique g, std::size_t t) {
  const auto agents = members(g.bits());
  Q sum = 0;
  for (auto p : agents) {
    for (auto q : agents) sum += ca(table, theta, p, q, t);
  }
  const auto k = static_cast<long>(agents.size());
  return sum / (k * k);
}

Q nm(const SituationTable& table, const Weights& theta, const Weights& omega, Clique g, Strategy j) {
  const Q total = omega.sum(j.bits());
  Q sum = 0;
  for (auto t : members(j.bits())) sum += omega.w[t] / total * nm_issue(table, theta, g, t);
  return sum;
}

}  // namespace

Rational oracle_sa_agent(const SituationTable& table, std::size_t p, std::size_t t, int ideal) {
  return from_q(sa_agent(table, p, t, ideal));
}

Rating oracle_rating(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                     const ParamSet& params) {
  return rating(table, Weights(theta), g, t, to_q(params.mu()), to_q(params.nu()));
}

Rational oracle_cm_issue(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t,
                         const ParamSet& params) {
  return from_q(cm_issue(table, Weights(theta), g, t, to_q(params.mu()), to_q(params.nu())));
}

Rational oracle_cm(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                   Clique g, Strategy j, const ParamSet& params) {
  return from_q(cm(table, Weights(theta), Weights(omega), g, j, to_q(params.mu()), to_q(params.nu())));
}

Rational oracle_ca(const SituationTable& table, const WeightVector& theta, std::size_t p, std::size_t q,
                   std::size_t t) {
  return from_q(ca(table, Weights(theta), p, q, t));
}

Rational oracle_nm_issue(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t t) {
  return from_q(nm_issue(table, Weights(theta), g, t));
}

Rational oracle_nm(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                   Clique g, Strategy j) {
  return from_q(nm(table, Weights(theta), Weights(omega), g, j));
}

OracleSelection oracle_select(const SituationTable& table, const WeightVector& theta, const WeightVector& omega,
                              Clique g, const ParamSet& params, Kind kind, int order) {
  const std::size_t n = table.issue_count();
  if (n > kMaxOracleIssues) fail(ErrorKind::Capacity, "oracle enumeration is limited to 12 issues");
  const auto size = static_cast<long>(members(g.bits()).size());
  if (Q(size, static_cast<long>(table.agent_count())) < to_q(params.gamma_p())) {
    fail(ErrorKind::Gate, "clique below gamma_p");
  }
  const Weights th(theta);
  const Weights om(omega);
  const Q mu = to_q(params.mu());
  const Q nu = to_q(params.nu());
  const Q lambda = to_q(params.lambda());
  const Q tau = to_q(params.tau());
  const Q gamma_t = to_q(params.gamma_t());

  std::vector<std::pair<Strategy, Q>> feasible;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Strategy j(bits);
    if (om.sum(bits) == 0) continue;
    const Q d = kind == Kind::Consistency ? cm(table, th, om, g, j, mu, nu) : nm(table, th, om, g, j);
    if (kind == Kind::Consistency ? d >= lambda : d <= tau) feasible.emplace_back(j, d);
  }
  std::sort(feasible.begin(), feasible.end(), [](const auto& a, const auto& b) {
    const auto sa = members(a.first.bits()).size();
    const auto sb = members(b.first.bits()).size();
    return sa != sb ? sa < sb : a.first.bits() < b.first.bits();
  });

  auto extremal = [&](int wanted) {
    std::vector<std::pair<Strategy, Q>> eligible;
    for (const auto& [j, d] : feasible) {
      const auto k = static_cast<long>(members(j.bits()).size());
      if (wanted > 0 && k != wanted) continue;
      if (Q(k, static_cast<long>(n)) < gamma_t) continue;
      eligible.emplace_back(j, d);
    }
    std::vector<Strategy> out;
    for (const auto& [j, d] : eligible) {
      const bool beaten = std::any_of(eligible.begin(), eligible.end(), [&](const auto& other) {
        return kind == Kind::Consistency ? other.second > d : other.second < d;
      });
      if (!beaten) out.push_back(j);
    }
    return out;
  };

  OracleSelection out;
  for (const auto& [j, d] : feasible) out.feasible.push_back(j);
  out.optimal = extremal(0);
  if (order > 0) out.optimal_order = extremal(order);
  return out;
}

std::vector<Strategy> oracle_feasible(const SituationTable& table, const WeightVector& theta,
                                      const WeightVector& omega, Clique g, const ParamSet& params, Kind kind) {
  return oracle_select(table, theta, omega, g, params, kind, 0).feasible;
}

std::vector<Strategy> oracle_optimal(const SituationTable& table, const WeightVector& theta,
                                     const WeightVector& omega, Clique g, const ParamSet& params, Kind kind,
                                     int order) {
  auto s = oracle_select(table, theta, omega, g, params, kind, order);
  return order > 0 ? s.optimal_order : s.optimal;
}

OracleReport compare(std::string quantity, const Rational& engine, const Rational& oracle) {
  const bool equal = engine == oracle;
  return OracleReport{std::move(quantity), engine, oracle, equal};
}

}  // namespace tristrat::oracle
