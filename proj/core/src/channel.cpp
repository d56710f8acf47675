#include "rmlab/channel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rmlab {

Pattern::Pattern(std::size_t n, std::vector<std::size_t> support) : n_(n), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    throw std::invalid_argument("pattern support has duplicate coordinates");
  }
  if (!support_.empty() && support_.back() >= n_) throw std::out_of_range("pattern coordinate out of range");
}

Pattern Pattern::from_indicator(const BitVector& indicator) { return Pattern(indicator.size(), indicator.support()); }

Pattern Pattern::full(std::size_t n) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return Pattern(n, std::move(all));
}

bool Pattern::contains(std::size_t i) const { return std::binary_search(support_.begin(), support_.end(), i); }

BitVector Pattern::indicator() const { return BitVector::indicator(n_, support_); }

Pattern Pattern::complement() const {
  std::vector<std::size_t> rest;
  rest.reserve(n_ - support_.size());
  auto it = support_.begin();
  for (std::size_t i = 0; i < n_; ++i) {
    if (it != support_.end() && *it == i) {
      ++it;
    } else {
      rest.push_back(i);
    }
  }
  Pattern out;
  out.n_ = n_;
  out.support_ = std::move(rest);
  return out;
}

CorruptionModel CorruptionModel::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("model must look like uniform:s=K or iid:p=P");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  std::string_view key;
  if (kind == "uniform") {
    key = "s=";
  } else if (kind == "iid") {
    key = "p=";
  } else {
    throw std::invalid_argument("unknown corruption model '" + std::string(kind) + "'");
  }
  if (rest.substr(0, 2) != key) throw std::invalid_argument("model parameter must be given as " + std::string(key));
  const std::string number(rest.substr(2));
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size()) throw std::invalid_argument("model parameter is not a number");
  CorruptionModel model = kind == "uniform" ? uniform(value) : iid(value);
  if (model.kind == Kind::Iid && (value < 0.0 || value > 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  if (model.kind == Kind::UniformWeight && value < 0.0) throw std::invalid_argument("s must be non-negative");
  return model;
}

std::string CorruptionModel::to_string() const {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  const std::string number(buf, res.ptr);
  return kind == Kind::UniformWeight ? "uniform:s=" + number : "iid:p=" + number;
}

std::size_t CorruptionModel::uniform_weight() const { return static_cast<std::size_t>(std::ceil(value)); }

void CorruptionModel::validate(std::size_t n) const {
  if (kind == Kind::UniformWeight) {
    if (value < 0.0) throw std::invalid_argument("uniform weight must be non-negative");
    if (uniform_weight() > n) throw std::invalid_argument("uniform weight exceeds blocklength");
  } else if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("i.i.d. probability must lie in [0,1]");
  }
}

Pattern sample_pattern(const CorruptionModel& model, std::size_t n, Rng& rng) {
  model.validate(n);
  std::vector<std::size_t> support;
  if (model.kind == CorruptionModel::Kind::UniformWeight) {
    // Partial Fisher-Yates: the first s slots end up a uniform s-subset.
    const std::size_t s = model.uniform_weight();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < s; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(idx[i], idx[pick(rng)]);
    }
    support.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(s));
  } else {
    std::bernoulli_distribution coin(model.value);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) support.push_back(i);
    }
  }
  return Pattern(n, std::move(support));
}

std::vector<Point> sample_points_iid(unsigned m, std::size_t s, Rng& rng) {
  if (m > kMaxVariables) throw std::invalid_argument("m exceeds the supported number of variables");
  std::uniform_int_distribution<Point> pick(0, (Point{1} << m) - 1);
  std::vector<Point> out(s);
  for (auto& p : out) p = pick(rng);
  return out;
}

double entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("entropy: p must lie in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double inv_entropy(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("inv_entropy: y must lie in [0,1]");
  double lo = 0.0;
  double hi = 0.5;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (entropy(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Regime parse_regime(std::string_view text) {
  if (text == "low-bec") return Regime::LowRateBec;
  if (text == "low-bsc") return Regime::LowRateBsc;
  if (text == "high-bec") return Regime::HighRateBec;
  if (text == "high-bsc") return Regime::HighRateBsc;
  throw std::invalid_argument("regime must be one of low-bec, low-bsc, high-bec, high-bsc");
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::LowRateBec:
      return "low-bec";
    case Regime::LowRateBsc:
      return "low-bsc";
    case Regime::HighRateBec:
      return "high-bec";
    case Regime::HighRateBsc:
      return "high-bsc";
  }
  return "unknown";
}

double capacity_gap_threshold(Regime regime, double rate, double eps) {
  if (!(rate > 0.0 && rate < 1.0)) throw std::domain_error("rate must lie in (0,1)");
  if (!(eps >= 0.0)) throw std::domain_error("eps must be non-negative");
  const bool low = regime == Regime::LowRateBec || regime == Regime::LowRateBsc;
  const double target = low ? 1.0 - rate * (1.0 + eps) : (1.0 - rate) * (1.0 - eps);
  switch (regime) {
    case Regime::LowRateBec:
    case Regime::HighRateBec:
      return std::clamp(target, 0.0, 1.0);
    case Regime::LowRateBsc:
    case Regime::HighRateBsc:
      if (target < 0.0 || target > 1.0) throw std::domain_error("entropy argument falls outside [0,1]");
      return std::clamp(inv_entropy(target), 0.0, 0.5);
  }
  return 0.0;
}

}  // namespace rmlab
