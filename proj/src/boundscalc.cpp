#include "gdelta/boundscalc.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <optional>

#include "gdelta/checked.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/families.hpp"
#include "gdelta/modcert.hpp"

namespace gdelta {

namespace {

// Largest C(p, r) for which the moment-curve family is certified.
constexpr double kVandermondeMinorBudget = 2e5;

double binomial(double n, double k) {
  double acc = 1;
  for (double i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

// m^r <= (130 r^3)^r delta^2, exactly; nullopt on 128-bit overflow.
std::optional<bool> below_sublinear(Entry m, Entry delta, std::size_t r) {
  try {
    const i128 c = 130 * static_cast<i128>(r) * static_cast<i128>(r) * static_cast<i128>(r);
    i128 lhs = 1, rhs = checked_mul(static_cast<i128>(delta), static_cast<i128>(delta));
    for (std::size_t k = 0; k < r; ++k) {
      lhs = checked_mul(lhs, static_cast<i128>(m));
      rhs = checked_mul(rhs, c);
    }
    return lhs <= rhs;
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

// floor(130 r^3 delta^(2/r)) by exact correction of the floating estimate.
std::optional<Entry> exact_floor_sublinear(Entry delta, std::size_t r, long double estimate) {
  Entry m = static_cast<Entry>(std::floor(estimate));
  for (int step = 0; step < 4; ++step) {
    const auto lo = below_sublinear(m, delta, r);
    const auto hi = below_sublinear(m + 1, delta, r);
    if (!lo || !hi) return std::nullopt;
    if (*lo && !*hi) return m;
    m += *lo ? 1 : -1;
  }
  return std::nullopt;
}

void require_rank(std::size_t r, const char* who) {
  if (r < 2) throw InvalidInput(std::string(who) + ": r must be at least 2");
}

}  // namespace

Entry smallest_prime_above(Entry delta) {
  if (delta < 0) throw InvalidInput("smallest_prime_above: negative argument");
  Entry p = delta + 1;
  while (!is_prime(p)) ++p;
  return p;
}

BoundReport upper_bound(Entry delta, std::size_t r) {
  if (delta < 1) throw InvalidInput("upper_bound: delta must be positive");
  require_rank(r, "upper_bound");
  BoundReport rep;
  rep.delta = delta;
  rep.r = r;
  const Entry re = static_cast<Entry>(r);
  const Entry p = smallest_prime_above(delta);
  rep.upper_linear = std::max(re, p) + 1;
  if (delta >= 2 && re <= 2 * delta - 1) rep.upper_linear = std::min(rep.upper_linear, 2 * delta);
  if (r >= 3) {
    const long double v = 130.0L * re * re * re * std::pow(static_cast<long double>(delta), 2.0L / re);
    rep.upper_sublinear = exact_floor_sublinear(delta, r, v).value_or(static_cast<Entry>(std::ceil(v)));
  }
  if (re >= 2 * delta - 1) rep.exact_if_forced = re + 1;
  return rep;
}

Entry vandermonde_modularity(Entry p, std::size_t r) {
  static std::mutex mu;
  static std::map<std::pair<Entry, std::size_t>, Entry> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({p, r}); it != memo.end()) return it->second;
  }
  const Entry d = certify(construct_vandermonde(p, r), 1).max_abs_top_minor;
  std::lock_guard lock(mu);
  memo[{p, r}] = d;
  return d;
}

BoundReport lower_bound(Entry delta, std::size_t r) {
  if (delta < 1) throw InvalidInput("lower_bound: delta must be positive");
  require_rank(r, "lower_bound");
  BoundReport rep;
  rep.delta = delta;
  rep.r = r;
  auto offer = [&](Entry value, std::string tag) {
    if (value > rep.lower_bound) {
      rep.lower_bound = value;
      rep.lower_provenance = std::move(tag);
    }
  };
  offer(static_cast<Entry>(r) + 1, "basic");
  if (r == 2) {
    offer(delta + 2, "f1");
    if (delta >= 3 && delta % 2 == 1) offer(delta + 3, "f2");
    if (f3_admissible(delta)) offer(delta + 4, "f3");
    if (delta >= 24 && (delta - 24) % 30 == 0 && (delta - 24) / 30 <= 12)
      offer(delta + 2 + nu_30s24(static_cast<int>((delta - 24) / 30)) / 2, "30s24");
    return rep;
  }
  // Claimed only when D_p divides delta: one row scaled by delta / D_p.
  const Entry cap = 2 * delta;
  for (Entry p = static_cast<Entry>(r) + 2; p <= cap; ++p) {
    if (!is_prime(p)) continue;
    if (binomial(static_cast<double>(p), static_cast<double>(r)) > kVandermondeMinorBudget) break;
    const Entry d = vandermonde_modularity(p, r);
    if (d > 0 && d <= delta && delta % d == 0) offer(p, "vandermonde(p=" + std::to_string(p) + ")");
  }
  return rep;
}

BoundReport bounds(Entry delta, std::size_t r) {
  BoundReport rep = upper_bound(delta, r);
  const BoundReport lo = lower_bound(delta, r);
  rep.lower_bound = lo.lower_bound;
  rep.lower_provenance = lo.lower_provenance;
  return rep;
}

}  // namespace gdelta
