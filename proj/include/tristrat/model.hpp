#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tristrat/error.hpp"
#include "tristrat/rational.hpp"

namespace tristrat {

/// Three-valued attitude of an agent on an issue.
enum class Rating : std::int8_t { Negative = -1, Neutral = 0, Positive = 1 };

constexpr int value_of(Rating r) { return static_cast<int>(r); }
Rating rating_from_int(int value);
/// "+", "0" or "-".
char to_symbol(Rating r);

enum class Axis { Agents, Issues };

const char* to_string(Axis axis);

/// Hard ceiling imposed by the 64-bit subset representation.
inline constexpr std::size_t kMaxAxisSize = 64;

/// Subset of agent or issue indices, stored as a bitmask. Iteration and
/// rendering follow ascending index order.
template <Axis A>
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static IndexSet of(std::initializer_list<std::size_t> indices) {
    IndexSet s;
    for (auto i : indices) s.insert(i);
    return s;
  }
  /// {0, 1, ..., count - 1}
  static constexpr IndexSet first(std::size_t count) {
    return IndexSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1u) != 0; }
  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Index one past the highest member; zero when empty.
  constexpr std::size_t extent() const {
    return bits_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  void insert(std::size_t i) {
    if (i >= kMaxAxisSize) fail(ErrorKind::Capacity, "index beyond 64-element limit");
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(std::size_t i) {
    if (i < 64) bits_ &= ~(std::uint64_t{1} << i);
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

  /// Canonical order: cardinality first, then bitmask value.
  friend constexpr bool canonical_less(IndexSet a, IndexSet b) {
    const auto sa = a.size();
    const auto sb = b.size();
    return sa != sb ? sa < sb : a.bits_ < b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

using Clique = IndexSet<Axis::Agents>;
/// A strategy is a subset of issues; measure operations reject the empty one.
using Strategy = IndexSet<Axis::Issues>;

/// Agents x issues matrix of three-valued ratings. Immutable once built.
class SituationTable {
 public:
  SituationTable(std::vector<std::string> agents, std::vector<std::string> issues,
                 std::vector<Rating> ratings);

  std::size_t agent_count() const { return agents_.size(); }
  std::size_t issue_count() const { return issues_.size(); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& issues() const { return issues_; }

  Rating rating(std::size_t agent, std::size_t issue) const {
    return ratings_[agent * issues_.size() + issue];
  }
  int value(std::size_t agent, std::size_t issue) const { return value_of(rating(agent, issue)); }

  std::optional<std::size_t> find_agent(std::string_view id) const;
  std::optional<std::size_t> find_issue(std::string_view id) const;

  std::size_t agent_index(std::string_view id) const;
  std::size_t issue_index(std::string_view id) const;

  Clique all_agents() const { return Clique::first(agent_count()); }
  Strategy all_issues() const { return Strategy::first(issue_count()); }

  /// Resolves identifiers (validation error on unknown or repeated ids).
  Clique clique_of(const std::vector<std::string>& ids) const;
  Strategy strategy_of(const std::vector<std::string>& ids) const;

  void check_agent(std::size_t index) const;
  void check_issue(std::size_t index) const;
  void check_clique(Clique g) const;
  void check_strategy(Strategy j) const;

  /// "{p1,p3}" style rendering with the table's identifiers.
  std::string format(Clique g) const;
  std::string format(Strategy j) const;

 private:
  std::vector<std::string> agents_;
  std::vector<std::string> issues_;
  std::vector<Rating> ratings_;
};

/// Nonnegative weights over one axis of a table. The total need not be one;
/// every consumer conditions on a context set.
class WeightVector {
 public:
  WeightVector(Axis axis, std::vector<std::string> ids, std::vector<Rational> weights);

  /// Equal weight 1 for every identifier.
  static WeightVector uniform(Axis axis, std::vector<std::string> ids);

  Axis axis() const { return axis_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& values() const { return weights_; }
  const Rational& total() const { return total_; }

  /// Sum of weights over the members of `s`.
  template <Axis A>
  Rational mass(IndexSet<A> s) const {
    check_axis(A);
    Rational sum;
    for (auto i : s.indices()) sum += at(i);
    return sum;
  }

  /// Same weights reordered to follow `table`'s identifiers on this axis.
  /// Missing or extra identifiers are a validation error.
  WeightVector aligned_to(const SituationTable& table) const;

 private:
  void check_axis(Axis a) const;
  const Rational& at(std::size_t i) const;

  Axis axis_;
  std::vector<std::string> ids_;
  std::vector<Rational> weights_;
  Rational total_;
};

/// Weight of `inner` relative to `context`: w(inner) / w(context).
template <Axis A>
Rational conditional_weight(const WeightVector& w, IndexSet<A> inner, IndexSet<A> context) {
  if (!inner.is_subset_of(context)) {
    fail(ErrorKind::SubsetViolation, "conditioning set is not contained in its context");
  }
  Rational mass = w.mass(context);
  if (mass.is_zero()) fail(ErrorKind::ZeroMass, "context has zero total weight");
  return w.mass(inner) / mass;
}

/// ω-weighted mean of per-issue values over `j`: Σ ω(t|j)·value[t].
/// `per_issue` is indexed by issue; `j` must be nonempty with positive weight.
Rational issue_average(const WeightVector& omega, Strategy j, const std::vector<Rational>& per_issue);

struct Coalitions {
  Clique positive;
  Clique neutral;
  Clique negative;
};

struct Powers {
  Rational positive;
  Rational neutral;
  Rational negative;

  friend bool operator==(const Powers&, const Powers&) = default;
};

/// Splits `g` by the members' ratings on `issue`.
Coalitions coalitions(const SituationTable& table, Clique g, std::size_t issue);

/// Conditional weights of the three coalitions relative to `g`.
Powers powers(const SituationTable& table, const WeightVector& theta, Clique g, std::size_t issue);

/// Plain aggregate used to assemble a ParamSet.
struct ParamValues {
  Rational mu{0};
  Rational nu{0};
  Rational lambda{1, 2};
  Rational tau{1, 2};
  Rational gamma_p{0};
  Rational gamma_t{0};
  int order = 1;
  Rational alpha_c{3, 4};
  Rational beta_c{3, 5};
  Rational alpha_n{1, 2};
  Rational beta_n{1, 4};
  Rational alpha_pair{1, 2};
  Rational beta_pair{1, 4};
};

/// Validated thresholds. Construction rejects any out-of-range value; the
/// upper bound of `order` depends on the table and is checked where used.
class ParamSet {
 public:
  ParamSet() : ParamSet(ParamValues{}) {}
  explicit ParamSet(ParamValues values);

  const ParamValues& values() const { return v_; }

  const Rational& mu() const { return v_.mu; }
  const Rational& nu() const { return v_.nu; }
  const Rational& lambda() const { return v_.lambda; }
  const Rational& tau() const { return v_.tau; }
  const Rational& gamma_p() const { return v_.gamma_p; }
  const Rational& gamma_t() const { return v_.gamma_t; }
  int order() const { return v_.order; }
  const Rational& alpha_c() const { return v_.alpha_c; }
  const Rational& beta_c() const { return v_.beta_c; }
  const Rational& alpha_n() const { return v_.alpha_n; }
  const Rational& beta_n() const { return v_.beta_n; }
  const Rational& alpha_pair() const { return v_.alpha_pair; }
  const Rational& beta_pair() const { return v_.beta_pair; }

  void check_order(std::size_t issue_count) const;

 private:
  ParamValues v_;
};

}  // namespace tristrat
