#include "osd/oracle.hpp"

#include "osd/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace osd {

namespace {

FieldElement scaled(const FieldElement& e, const Integer& k) { return e * Rational(k); }

}  // namespace

PairTrajectory iterate_pair_density(const BalancedPair& seed, const SubstitutionRule& rule, const InflationData& data,
                                    std::size_t iterations, std::size_t cap) {
  if (iterations < 1) throw std::invalid_argument("iterate_pair_density: need at least one iteration");
  const auto& lengths = data.lengths;
  const auto& ctx = data.field;
  PairTrajectory t;
  t.log_lambda = std::log(data.lambda.to_double());

  std::map<BalancedPair, std::size_t> index;
  std::vector<FieldElement> type_length;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> memo;
  auto type_of = [&](const BalancedPair& p) {
    auto [it, fresh] = index.emplace(p, t.types.size());
    if (fresh) {
      t.types.push_back(p);
      type_length.push_back(word_length(p.top, lengths));
      if (t.types.size() > cap)
        throw CapExceeded(t.types.size(), "trajectory exceeded " + std::to_string(cap) + " pair types");
    }
    return it->second;
  };

  std::vector<Integer> v;
  for (const auto& piece : split(seed.top, seed.bottom, lengths)) {
    const std::size_t k = type_of(piece);
    if (v.size() <= k) v.resize(k + 1);
    v[k] += 1;
  }
  const FieldElement seed_length = word_length(seed.top, lengths);
  FieldElement lambda_n = FieldElement::constant(ctx, Rational(1));
  const FieldElement x = FieldElement::generator(ctx);

  for (std::size_t n = 0;; ++n) {
    FieldElement total = FieldElement::constant(ctx, Rational(0));
    FieldElement disc = total;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      const FieldElement part = scaled(type_length[k], v[k]);
      total += part;
      if (!t.types[k].is_coincidence()) disc += part;
    }
    if (!field_equal(total, lambda_n * seed_length)) t.lengths_exact = false;
    TrajectoryStep s;
    s.n = n;
    s.total_length = total.to_double();
    s.discrepancy_length = disc.to_double();
    s.density = s.total_length > 0 ? s.discrepancy_length / s.total_length : 0.0;
    t.steps.push_back(s);
    t.counts.push_back(v);
    if (n == iterations) break;

    std::vector<Integer> next(t.types.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      while (memo.size() <= k) memo.emplace_back();
      if (memo[k].empty()) {
        const BalancedPair p = t.types[k];
        for (const auto& [child, mult] : substitute_pair(p, rule, lengths)) memo[k].emplace_back(type_of(child), mult);
      }
      for (auto [child, mult] : memo[k]) {
        if (next.size() <= child) next.resize(child + 1);
        next[child] += v[k] * static_cast<unsigned long>(mult);
      }
    }
    v = std::move(next);
    lambda_n = FieldElement(ctx, (lambda_n * x).canonical_key());
  }
  for (auto& row : t.counts) row.resize(t.types.size());
  return t;
}

DecayEstimate estimate_decay(const PairTrajectory& t, std::size_t burn_in) {
  std::vector<double> xs, ys;
  for (const auto& s : t.steps)
    if (s.n > burn_in && s.density > 0) {
      xs.push_back(static_cast<double>(s.n));
      ys.push_back(std::log(s.density));
    }
  if (xs.size() < 4) throw InsufficientData("need at least 4 steps with positive density after burn-in");
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  DecayEstimate e;
  e.slope = sxy / sxx;
  e.estimated_log_lambda_dc = e.slope + t.d * t.log_lambda;
  e.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return e;
}

std::vector<Word> return_words(const SubstitutionRule& rule, Letter letter, std::size_t horizon) {
  Word w{letter};
  while (w.size() < horizon) {
    Word next = rule.apply(w);
    if (next.size() <= w.size()) break;
    w = std::move(next);
  }
  if (w.size() > horizon) w.resize(horizon);
  std::vector<Word> out;
  std::size_t prev = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != letter) continue;
    if (prev < i) {
      Word r(w.begin() + static_cast<std::ptrdiff_t>(prev), w.begin() + static_cast<std::ptrdiff_t>(i));
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    prev = i;
  }
  return out;
}

}  // namespace osd
