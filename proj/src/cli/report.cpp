#include "tristrat/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include "tristrat/baseline_xu.hpp"
#include "tristrat/consistency.hpp"
#include "tristrat/nonconsistency.hpp"
#include "tristrat/sensitivity.hpp"

namespace tristrat::cli {

namespace {

Json strategy_json(const SituationTable& table, Strategy j) {
  Json ids = Json::array();
  for (auto i : j.indices()) ids.push_back(table.issues()[i]);
  return ids;
}

Json clique_json(const SituationTable& table, Clique g) {
  Json ids = Json::array();
  for (auto i : g.indices()) ids.push_back(table.agents()[i]);
  return ids;
}

std::string clique_text(const SituationTable& table, Clique g) {
  std::string out = "{";
  for (auto i : g.indices()) out += (out.size() > 1 ? "," : "") + table.agents()[i];
  return out + "}";
}

Json params_json(const ParamSet& params) {
  const ParamValues& v = params.values();
  Json out;
  out["mu"] = degree_json(v.mu);
  out["nu"] = degree_json(v.nu);
  out["lambda"] = degree_json(v.lambda);
  out["tau"] = degree_json(v.tau);
  out["gamma_p"] = degree_json(v.gamma_p);
  out["gamma_t"] = degree_json(v.gamma_t);
  out["order"] = v.order;
  out["alpha_c"] = degree_json(v.alpha_c);
  out["beta_c"] = degree_json(v.beta_c);
  out["alpha_n"] = degree_json(v.alpha_n);
  out["beta_n"] = degree_json(v.beta_n);
  out["alpha_pair"] = degree_json(v.alpha_pair);
  out["beta_pair"] = degree_json(v.beta_pair);
  return out;
}

Json header(const std::string& command, const Inputs& in, const ParamSet& params) {
  Json doc;
  doc["command"] = command;
  Json config;
  config["agents"] = in.table.agents();
  config["issues"] = in.table.issues();
  Json theta = Json::array();
  for (std::size_t i = 0; i < in.theta.size(); ++i) theta.push_back(degree_json(in.theta[i]));
  Json omega = Json::array();
  for (std::size_t i = 0; i < in.omega.size(); ++i) omega.push_back(degree_json(in.omega[i]));
  config["agent_weights"] = std::move(theta);
  config["issue_weights"] = std::move(omega);
  config["params"] = params_json(params);
  Json cliques = Json::array();
  for (auto g : in.cliques) cliques.push_back(clique_json(in.table, g));
  config["cliques"] = std::move(cliques);
  if (in.focus) config["focus"] = in.table.issues()[*in.focus];
  doc["config"] = std::move(config);
  return doc;
}

char symbol(Rating r) { return to_symbol(r); }

Json trisection_json(const SituationTable& table, const IssueTrisection& tri) {
  Json out;
  out["alliance"] = strategy_json(table, tri.alliance);
  out["neutral"] = strategy_json(table, tri.neutral);
  out["conflict"] = strategy_json(table, tri.conflict);
  return out;
}

std::string measure_name(MeasureKind kind) { return kind == MeasureKind::Consistency ? "CM" : "NM"; }

Json optimal_json(const SituationTable& table, const OptimalSet& o) {
  Json out;
  Json list = Json::array();
  for (auto s : o.strategies) list.push_back(strategy_json(table, s));
  out["strategies"] = std::move(list);
  out["degree"] = o.extremal_degree ? degree_json(*o.extremal_degree) : Json(nullptr);
  return out;
}

std::string optimal_text(const SituationTable& table, const OptimalSet& o, MeasureKind kind) {
  if (o.empty()) return "none";
  std::string out;
  for (auto s : o.strategies) out += (out.empty() ? "" : " ") + table.format(s);
  return out + " (" + measure_name(kind) + " " + o.extremal_degree->to_display() + ")";
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<MeasureKind> kinds_of(std::optional<MeasureKind> kind) {
  if (kind) return {*kind};
  return {MeasureKind::Consistency, MeasureKind::NonConsistency};
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

Json degree_json(const Rational& value) {
  Json out;
  out["num"] = value.numerator().str();
  out["den"] = value.denominator().str();
  out["decimal"] = value.to_decimal(6);
  return out;
}

Rational degree_from_json(const Json& value) {
  return Rational::parse(value.at("num").get<std::string>() + "/" + value.at("den").get<std::string>());
}

Report run_analyze(const Inputs& in) {
  const auto& t = in.table;
  const ParamSet& params = in.params;
  Json doc = header("analyze", in, params);
  std::ostringstream text;
  Json results = Json::array();
  for (auto g : in.cliques) {
    ConsistencyProfile cp(t, in.theta, g, params);
    NonConsistencyProfile np(t, in.theta, g);
    text << "clique " << clique_text(t, g) << "\n";
    text << pad("issue", 8) << pad("rho+", 10) << pad("rho0", 10) << pad("rho-", 10) << pad("SA+", 10)
         << pad("SA-", 10) << pad("R", 3) << pad("CM", 10) << "NM\n";
    Json issues = Json::array();
    for (std::size_t i = 0; i < t.issue_count(); ++i) {
      const Powers& pw = cp.powers()[i];
      const Rational sp = sa_clique(t, in.theta, g, i, Sign::Positive);
      const Rational sn = sa_clique(t, in.theta, g, i, Sign::Negative);
      text << pad(t.issues()[i], 8) << pad(pw.positive.to_display(), 10) << pad(pw.neutral.to_display(), 10)
           << pad(pw.negative.to_display(), 10) << pad(sp.to_display(), 10) << pad(sn.to_display(), 10)
           << pad(std::string(1, symbol(cp.ratings()[i])), 3) << pad(cp.degrees()[i].to_display(), 10)
           << np.degrees()[i].to_display() << "\n";
      Json row;
      row["issue"] = t.issues()[i];
      row["rho_positive"] = degree_json(pw.positive);
      row["rho_neutral"] = degree_json(pw.neutral);
      row["rho_negative"] = degree_json(pw.negative);
      row["sa_positive"] = degree_json(sp);
      row["sa_negative"] = degree_json(sn);
      row["rating"] = value_of(cp.ratings()[i]);
      row["cm"] = degree_json(cp.degrees()[i]);
      row["nm"] = degree_json(np.degrees()[i]);
      issues.push_back(std::move(row));
    }
    const Strategy all = t.all_issues();
    const Rational cm = cp.cm(in.omega, all);
    const Rational nm = np.nm(in.omega, all);
    const auto state_c = classify_clique_c(cm, params);
    const auto state_n = classify_clique_n(nm, params);
    const auto tri_c = cp.trisection(params);
    const auto tri_n = np.trisection(params);
    std::string ratings;
    for (auto r : cp.ratings()) ratings += symbol(r);
    text << "rating vector " << ratings << "\n";
    text << "CM(T) " << cm.to_display() << " -> " << to_string(state_c) << "\n";
    text << "NM(T) " << nm.to_display() << " -> " << to_string(state_n) << "\n";
    text << "issues by CM: alliance " << t.format(tri_c.alliance) << " neutral " << t.format(tri_c.neutral)
         << " conflict " << t.format(tri_c.conflict) << "\n";
    text << "issues by NM: alliance " << t.format(tri_n.alliance) << " neutral " << t.format(tri_n.neutral)
         << " conflict " << t.format(tri_n.conflict) << "\n";

    const auto matrix = PairConflictMatrix::for_strategy(t, in.theta, in.omega, all);
    const auto pairs = pair_trisection(matrix, params.values().alpha_pair, params.values().beta_pair);
    Json pair_doc;
    const std::pair<const char*, const std::vector<AgentPair>*> parts[] = {
        {"alliance", &pairs.alliance}, {"neutral", &pairs.neutral}, {"conflict", &pairs.conflict}};
    for (const auto& [name, list] : parts) {
      Json arr = Json::array();
      std::string line;
      for (auto [p, q] : *list) {
        if (p == q || !g.contains(p) || !g.contains(q)) continue;
        arr.push_back(Json::array({t.agents()[p], t.agents()[q]}));
        line += " " + t.agents()[p] + "-" + t.agents()[q];
      }
      text << "pairs " << name << ":" << (line.empty() ? " none" : line) << "\n";
      pair_doc[name] = std::move(arr);
    }
    text << "\n";

    Json entry;
    entry["clique"] = clique_json(t, g);
    entry["issues"] = std::move(issues);
    entry["cm_all"] = degree_json(cm);
    entry["state_c"] = to_string(state_c);
    entry["nm_all"] = degree_json(nm);
    entry["state_n"] = to_string(state_n);
    entry["issue_trisection_c"] = trisection_json(t, tri_c);
    entry["issue_trisection_n"] = trisection_json(t, tri_n);
    entry["pair_trisection"] = std::move(pair_doc);
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);
  return Report{text.str(), std::move(doc)};
}

Report run_strategies(const Inputs& in, const StrategyRequest& request) {
  const auto& t = in.table;
  const std::size_t n = t.issue_count();
  ParamValues v = in.params.values();
  if (request.order) v.order = *request.order;
  const ParamSet params(v);
  params.check_order(n);
  const int order = params.order();

  EngineOptions engine = request.engine;
  const bool full = n <= kDefaultIssueCap || engine.allow_large;
  if (!full && request.order) engine.order = order;

  Json doc = header("strategies", in, params);
  std::ostringstream text;
  Json counts;
  if (full) counts["strategies"] = std::to_string((n == 64 ? ~0ULL : (1ULL << n) - 1));
  counts["order_strategies"] = binomial(n, static_cast<std::size_t>(order)).str();
  doc["counts"] = counts;

  Json results = Json::array();
  for (auto g : in.cliques) {
    text << "clique " << clique_text(t, g) << "\n";
    if (full) text << "strategies " << counts["strategies"].get<std::string>() << " | ";
    text << order << "-order " << counts["order_strategies"].get<std::string>() << "\n";
    Json entry;
    entry["clique"] = clique_json(t, g);
    for (auto kind : kinds_of(request.kind)) {
      const FeasibleSet fs = feasible(kind, t, in.theta, in.omega, g, params, engine);
      const FeasibleSet fs_order = fs.of_order(order);
      const std::string tag = kind == MeasureKind::Consistency ? "C" : "N";
      Json k;
      if (full) k["feasible_count"] = fs.size();
      k["order_feasible_count"] = fs_order.size();
      text << to_string(kind) << ":";
      if (full) text << " FS^" << tag << " " << fs.size() << " |";
      text << " FS^" << tag << "_" << order << " " << fs_order.size() << "\n";
      if (!request.optimal_only) {
        Json list = Json::array();
        for (const auto& s : fs.strategies) {
          text << "  " << pad(t.format(s.strategy), 24) << s.degree.to_display() << "\n";
          list.push_back(Json{{"strategy", strategy_json(t, s.strategy)}, {"degree", degree_json(s.degree)}});
        }
        k["feasible"] = std::move(list);
      }
      if (full) {
        const auto o = optimal(fs, n, params);
        text << "  optimal " << optimal_text(t, o, kind) << "\n";
        k["optimal"] = optimal_json(t, o);
      }
      const auto o_order = optimal(fs_order, n, params);
      text << "  " << order << "-order optimal " << optimal_text(t, o_order, kind) << "\n";
      k["order_optimal"] = optimal_json(t, o_order);
      entry[kind == MeasureKind::Consistency ? "consistency" : "nonconsistency"] = std::move(k);
    }
    text << "\n";
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);
  return Report{text.str(), std::move(doc)};
}

Report run_sweep(const Inputs& in, const std::map<SweepParam, SweepAxis>& sweeps, std::optional<MeasureKind> kind,
                 const EngineOptions& engine) {
  const auto& t = in.table;
  if (sweeps.empty()) fail(ErrorKind::Usage, "no sweep.<param> entries in the config");
  const bool mu_nu = sweeps.count(SweepParam::Mu) || sweeps.count(SweepParam::Nu);
  const bool scalar = sweeps.count(SweepParam::Lambda) || sweeps.count(SweepParam::Tau);
  if (mu_nu && scalar) fail(ErrorKind::Usage, "a sweep is either over (mu, nu) or over one of lambda, tau");
  if (sweeps.size() == 2 && scalar) fail(ErrorKind::Usage, "sweep over lambda or tau, not both");

  Json doc = header("sweep", in, in.params);
  std::ostringstream text;
  Json results = Json::array();
  const int order = in.params.order();

  auto summary_cols = [&](const KindSummary& s, MeasureKind k, Json& cell) {
    text << pad(std::to_string(s.feasible), 6) << pad(std::to_string(s.feasible_order), 6)
         << pad(optimal_text(t, s.optimal, k), 40) << optimal_text(t, s.optimal_order, k) << "\n";
    cell["feasible_count"] = s.feasible;
    cell["order_feasible_count"] = s.feasible_order;
    cell["optimal"] = optimal_json(t, s.optimal);
    cell["order_optimal"] = optimal_json(t, s.optimal_order);
  };

  for (auto g : in.cliques) {
    text << "clique " << clique_text(t, g) << "\n";
    Json entry;
    entry["clique"] = clique_json(t, g);
    Json cells = Json::array();
    if (mu_nu) {
      if (kind && *kind != MeasureKind::Consistency) {
        fail(ErrorKind::Usage, "a (mu, nu) sweep reports consistency; drop --kind n");
      }
      if (!in.focus) fail(ErrorKind::Usage, "a (mu, nu) sweep needs 'focus = <issue id>'");
      const auto& v = in.params.values();
      auto axis_or = [&](SweepParam p, const Rational& base) {
        auto it = sweeps.find(p);
        return it != sweeps.end() ? it->second : SweepAxis{p, base, base, Rational(0)};
      };
      const auto grid = sweep_mu_nu(t, in.theta, in.omega, g, *in.focus, in.params, axis_or(SweepParam::Mu, v.mu),
                                    axis_or(SweepParam::Nu, v.nu), engine);
      text << pad("mu", 8) << pad("nu", 8) << pad("R", 3) << pad("CM", 8) << pad("FS", 6)
           << pad("FS_" + std::to_string(order), 6) << pad("optimal", 40) << order << "-order optimal\n";
      for (const auto& c : grid.cells) {
        text << pad(c.coords[0].to_display(), 8) << pad(c.coords[1].to_display(), 8)
             << pad(std::string(1, symbol(*c.rating)), 3) << pad(c.cm->to_decimal(2), 8);
        Json cell;
        cell["mu"] = degree_json(c.coords[0]);
        cell["nu"] = degree_json(c.coords[1]);
        cell["rating"] = value_of(*c.rating);
        cell["cm"] = degree_json(*c.cm);
        summary_cols(*c.consistency, MeasureKind::Consistency, cell);
        cells.push_back(std::move(cell));
      }
      entry["kind"] = to_string(MeasureKind::Consistency);
      entry["focus"] = t.issues()[*in.focus];
    } else {
      const auto& axis = sweeps.begin()->second;
      const MeasureKind k =
          axis.param == SweepParam::Lambda ? MeasureKind::Consistency : MeasureKind::NonConsistency;
      if (kind && *kind != k) {
        fail(ErrorKind::Usage, std::string("sweep over ") + to_string(axis.param) + " does not match --kind");
      }
      const auto grid = sweep_scalar(t, in.theta, in.omega, g, k, in.params, axis, engine);
      text << pad(to_string(axis.param), 8) << pad("FS", 6) << pad("FS_" + std::to_string(order), 6)
           << pad("optimal", 40) << order << "-order optimal\n";
      for (const auto& c : grid.cells) {
        text << pad(c.coords[0].to_display(), 8);
        Json cell;
        cell[to_string(axis.param)] = degree_json(c.coords[0]);
        summary_cols(k == MeasureKind::Consistency ? *c.consistency : *c.nonconsistency, k, cell);
        cells.push_back(std::move(cell));
      }
      entry["kind"] = to_string(k);
    }
    text << "\n";
    entry["cells"] = std::move(cells);
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);
  return Report{text.str(), std::move(doc)};
}

Report run_baseline(const Inputs& in, const EngineOptions& engine) {
  const auto& t = in.table;
  Json doc = header("baseline-xu", in, in.params);
  std::ostringstream text;
  Json results = Json::array();
  for (auto g : in.cliques) {
    std::string xu_r;
    std::string ours_r;
    Json degrees = Json::array();
    Json xu_ratings = Json::array();
    Json our_ratings = Json::array();
    ConsistencyProfile cp(t, in.theta, g, in.params);
    for (std::size_t i = 0; i < t.issue_count(); ++i) {
      const Rating r = xu_rating(t, g, i);
      xu_r += symbol(r);
      xu_ratings.push_back(value_of(r));
      degrees.push_back(degree_json(xu_cm(t, g, i)));
      ours_r += symbol(cp.ratings()[i]);
      our_ratings.push_back(value_of(cp.ratings()[i]));
    }
    std::string diverge;
    Json diverging = Json::array();
    for (std::size_t i = 0; i < t.issue_count(); ++i) {
      if (xu_r[i] == ours_r[i]) continue;
      diverge += (diverge.empty() ? "" : ",") + t.issues()[i];
      diverging.push_back(t.issues()[i]);
    }
    text << "clique " << clique_text(t, g) << "\n";
    text << "unweighted ratings " << xu_r << "\n";
    text << "unweighted CM    ";
    for (std::size_t i = 0; i < t.issue_count(); ++i) text << " " << xu_cm(t, g, i).to_display();
    text << "\n";

    Json entry;
    entry["clique"] = clique_json(t, g);
    entry["unweighted_ratings"] = std::move(xu_ratings);
    entry["unweighted_cm"] = std::move(degrees);
    const auto dominant = xu_feasible_L(t, g, in.params);
    const int order = in.params.order();
    if (dominant) {
      text << order << "-order dominant " << t.format(dominant->strategy) << " (CM "
           << dominant->degree.to_display() << ")";
      if (!dominant->alternates.empty()) text << " tied with " << t.format(dominant->alternates);
      text << "\n";
      entry["dominant"] = Json{{"strategy", strategy_json(t, dominant->strategy)},
                               {"degree", degree_json(dominant->degree)},
                               {"alternates", strategy_json(t, dominant->alternates)}};
    } else {
      text << order << "-order dominant none\n";
      entry["dominant"] = nullptr;
    }
    text << "weighted ratings   " << ours_r << (diverge.empty() ? "" : "  (differs on " + diverge + ")") << "\n";
    entry["weighted_ratings"] = std::move(our_ratings);
    entry["diverging_issues"] = std::move(diverging);

    const FeasibleSet fs = feasible_c(t, in.theta, in.omega, g, in.params, engine);
    Json list = Json::array();
    text << "weighted FS^C " << fs.size() << "\n";
    for (const auto& s : fs.strategies) {
      text << "  " << pad(t.format(s.strategy), 24) << s.degree.to_display() << "\n";
      list.push_back(Json{{"strategy", strategy_json(t, s.strategy)}, {"degree", degree_json(s.degree)}});
    }
    entry["weighted_feasible"] = std::move(list);
    text << "\n";
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);
  return Report{text.str(), std::move(doc)};
}

}  // namespace tristrat::cli
