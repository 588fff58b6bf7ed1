#include "subcube/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subcube {

namespace {

void check_dim(int n, int cap, const char* what) {
  if (n > cap) {
    throw dimension_cap_error(std::string(what) + ": dimension " + std::to_string(n) +
                              " exceeds exact cap " + std::to_string(cap));
  }
}

std::vector<double> normalized_pmf(std::vector<double> pmf, const char* what) {
  double sum = 0.0;
  for (double v : pmf) {
    if (!(v >= 0.0)) throw std::invalid_argument(std::string(what) + ": negative pmf entry");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > kRenormalizeTolerance) {
    throw std::invalid_argument(std::string(what) + ": pmf sums to " + std::to_string(sum));
  }
  if (sum != 1.0) {
    for (double& v : pmf) v /= sum;
  }
  return pmf;
}

}  // namespace

DistributionSpec DistributionSpec::uniform(int n) {
  if (n == 0) return make_explicit(0, {1.0});
  return make_product(std::vector<double>(static_cast<std::size_t>(n), 0.5));
}

DistributionSpec DistributionSpec::make_explicit(int n, std::vector<double> pmf) {
  if (n < 0 || n > kExactDimCap) throw std::invalid_argument("explicit: bad dimension");
  if (pmf.size() != (std::size_t{1} << n)) throw std::invalid_argument("explicit: pmf length != 2^n");
  ExplicitDist d{n, normalized_pmf(std::move(pmf), "explicit")};
  return DistributionSpec(std::move(d));
}

DistributionSpec DistributionSpec::make_product(std::vector<double> bias) {
  for (double b : bias) {
    if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("product: bias outside [0,1]");
  }
  return DistributionSpec(ProductDist{std::move(bias)});
}

DistributionSpec DistributionSpec::make_junta(int n, std::vector<int> vars,
                                              std::vector<double> inner_pmf) {
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw std::invalid_argument("junta: duplicate relevant variable");
  }
  if (!vars.empty() && (vars.front() < 0 || vars.back() >= n)) {
    throw std::invalid_argument("junta: relevant variable outside [n]");
  }
  if (static_cast<int>(vars.size()) > n || static_cast<int>(vars.size()) > kExactDimCap) {
    throw std::invalid_argument("junta: too many relevant variables");
  }
  if (inner_pmf.size() != (std::size_t{1} << vars.size())) {
    throw std::invalid_argument("junta: inner pmf length != 2^|vars|");
  }
  JuntaDist d{n, std::move(vars), normalized_pmf(std::move(inner_pmf), "junta")};
  return DistributionSpec(std::move(d));
}

DistributionSpec::Kind DistributionSpec::kind() const {
  if (std::holds_alternative<ExplicitDist>(rep_)) return Kind::Explicit;
  if (std::holds_alternative<ProductDist>(rep_)) return Kind::Product;
  return Kind::Junta;
}

int DistributionSpec::dimension() const {
  switch (kind()) {
    case Kind::Explicit:
      return as_explicit().n;
    case Kind::Product:
      return static_cast<int>(as_product().bias.size());
    case Kind::Junta:
      return as_junta().n;
  }
  return 0;
}

ExplicitDist DistributionSpec::to_explicit(int cap) const {
  const int n = dimension();
  check_dim(n, cap, "to_explicit");
  const std::size_t size = std::size_t{1} << n;
  switch (kind()) {
    case Kind::Explicit:
      return as_explicit();
    case Kind::Product: {
      const auto& bias = as_product().bias;
      std::vector<double> pmf(size, 1.0);
      for (std::size_t idx = 0; idx < size; ++idx) {
        double v = 1.0;
        for (int i = 0; i < n; ++i) {
          v *= ((idx >> i) & 1u) ? bias[static_cast<std::size_t>(i)]
                                 : 1.0 - bias[static_cast<std::size_t>(i)];
        }
        pmf[idx] = v;
      }
      return ExplicitDist{n, std::move(pmf)};
    }
    case Kind::Junta: {
      const auto& j = as_junta();
      const int offCount = n - static_cast<int>(j.vars.size());
      const double offMass = std::ldexp(1.0, -offCount);  // 2^-(n-k)
      std::vector<double> pmf(size, 0.0);
      for (std::size_t idx = 0; idx < size; ++idx) {
        std::uint32_t inner = 0;
        for (std::size_t t = 0; t < j.vars.size(); ++t) {
          if ((idx >> j.vars[t]) & 1u) inner |= (1u << t);
        }
        pmf[idx] = j.inner_pmf[inner] * offMass;
      }
      return ExplicitDist{n, std::move(pmf)};
    }
  }
  return {};
}

std::vector<double> DistributionSpec::mean_vector() const {
  const int n = dimension();
  std::vector<double> mu(static_cast<std::size_t>(n), 0.0);
  switch (kind()) {
    case Kind::Product: {
      const auto& bias = as_product().bias;
      for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] = 2.0 * bias[static_cast<std::size_t>(i)] - 1.0;
      return mu;
    }
    case Kind::Explicit: {
      const auto& d = as_explicit();
      for (std::size_t idx = 0; idx < d.pmf.size(); ++idx) {
        for (int i = 0; i < n; ++i) {
          mu[static_cast<std::size_t>(i)] += d.pmf[idx] * (((idx >> i) & 1u) ? 1.0 : -1.0);
        }
      }
      return mu;
    }
    case Kind::Junta: {
      const auto& j = as_junta();
      const std::size_t innerSize = j.inner_pmf.size();
      for (std::size_t t = 0; t < j.vars.size(); ++t) {
        double m = 0.0;
        for (std::size_t idx = 0; idx < innerSize; ++idx) {
          m += j.inner_pmf[idx] * (((idx >> t) & 1u) ? 1.0 : -1.0);
        }
        mu[static_cast<std::size_t>(j.vars[t])] = m;
      }
      return mu;
    }
  }
  return mu;
}

double DistributionSpec::mass_at(const Sample& x) const {
  const int n = dimension();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("mass_at: dimension mismatch");
  switch (kind()) {
    case Kind::Explicit:
      return as_explicit().pmf[sample_to_index(x)];
    case Kind::Product: {
      const auto& bias = as_product().bias;
      double v = 1.0;
      for (int i = 0; i < n; ++i) {
        v *= (x[static_cast<std::size_t>(i)] == 1) ? bias[static_cast<std::size_t>(i)]
                                                   : 1.0 - bias[static_cast<std::size_t>(i)];
      }
      return v;
    }
    case Kind::Junta: {
      const auto& j = as_junta();
      std::uint32_t inner = 0;
      for (std::size_t t = 0; t < j.vars.size(); ++t) {
        if (x[static_cast<std::size_t>(j.vars[t])] == 1) inner |= (1u << t);
      }
      return j.inner_pmf[inner] * std::ldexp(1.0, -(j.n - static_cast<int>(j.vars.size())));
    }
  }
  return 0.0;
}

double DistributionSpec::subcube_mass(const Restriction& rho) const {
  const int n = dimension();
  if (rho.dimension() != n) throw std::invalid_argument("subcube_mass: dimension mismatch");
  switch (kind()) {
    case Kind::Product: {
      const auto& bias = as_product().bias;
      double mass = 1.0;
      for (int i = 0; i < n; ++i) {
        if (rho.is_star(i)) continue;
        mass *= (rho.value(i) == 1) ? bias[static_cast<std::size_t>(i)]
                                    : 1.0 - bias[static_cast<std::size_t>(i)];
      }
      return mass;
    }
    case Kind::Junta: {
      const auto& j = as_junta();
      double innerMass = 0.0;
      // Mass of the inner pmf consistent with the fixed relevant cells.
      for (std::size_t idx = 0; idx < j.inner_pmf.size(); ++idx) {
        bool ok = true;
        for (std::size_t t = 0; t < j.vars.size(); ++t) {
          const int i = j.vars[t];
          if (rho.is_star(i)) continue;
          const std::int8_t want = ((idx >> t) & 1u) ? 1 : -1;
          if (rho.value(i) != want) {
            ok = false;
            break;
          }
        }
        if (ok) innerMass += j.inner_pmf[idx];
      }
      int offFixed = 0;
      for (int i = 0; i < n; ++i) {
        if (!rho.is_star(i) && !std::binary_search(j.vars.begin(), j.vars.end(), i)) ++offFixed;
      }
      return innerMass * std::ldexp(1.0, -offFixed);
    }
    case Kind::Explicit: {
      const auto& d = as_explicit();
      double mass = 0.0;
      const std::size_t size = d.pmf.size();
      for (std::size_t idx = 0; idx < size; ++idx) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          if (rho.is_star(i)) continue;
          if ((((idx >> i) & 1u) ? 1 : -1) != rho.value(i)) {
            ok = false;
            break;
          }
        }
        if (ok) mass += d.pmf[idx];
      }
      return mass;
    }
  }
  return 0.0;
}

DistributionSpec restrict_exact(const DistributionSpec& p, const Restriction& rho, int cap) {
  const int n = p.dimension();
  if (rho.dimension() != n) throw std::invalid_argument("restrict_exact: dimension mismatch");
  check_dim(n, cap, "restrict_exact");
  const ExplicitDist d = p.to_explicit(cap);
  const auto& stars = rho.stars();
  const int m = static_cast<int>(stars.size());
  std::vector<double> out(std::size_t{1} << m, 0.0);
  double mass = 0.0;
  for (std::size_t idx = 0; idx < d.pmf.size(); ++idx) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (rho.is_star(i)) continue;
      if ((((idx >> i) & 1u) ? 1 : -1) != rho.value(i)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::uint32_t sub = 0;
    for (int t = 0; t < m; ++t) {
      if ((idx >> stars[static_cast<std::size_t>(t)]) & 1u) sub |= (1u << t);
    }
    out[sub] += d.pmf[idx];
    mass += d.pmf[idx];
  }
  if (mass <= 0.0) throw std::domain_error("restrict_exact: zero subcube mass");
  for (double& v : out) v /= mass;
  return DistributionSpec::make_explicit(m, std::move(out));
}

DistributionSpec project_exact(const DistributionSpec& p, const std::vector<int>& S, int cap) {
  const int n = p.dimension();
  check_dim(n, cap, "project_exact");
  std::vector<bool> drop(static_cast<std::size_t>(n), false);
  for (int i : S) {
    if (i < 0 || i >= n) throw std::invalid_argument("project_exact: coordinate outside [n]");
    drop[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if (!drop[static_cast<std::size_t>(i)]) keep.push_back(i);
  }
  const ExplicitDist d = p.to_explicit(cap);
  std::vector<double> out(std::size_t{1} << keep.size(), 0.0);
  for (std::size_t idx = 0; idx < d.pmf.size(); ++idx) {
    std::uint32_t sub = 0;
    for (std::size_t t = 0; t < keep.size(); ++t) {
      if ((idx >> keep[t]) & 1u) sub |= (1u << t);
    }
    out[sub] += d.pmf[idx];
  }
  return DistributionSpec::make_explicit(static_cast<int>(keep.size()), std::move(out));
}

double tv_distance(const ExplicitDist& p, const ExplicitDist& q) {
  if (p.n != q.n) throw std::invalid_argument("tv_distance: dimension mismatch");
  double acc = 0.0;
  for (std::size_t idx = 0; idx < p.pmf.size(); ++idx) {
    acc += std::fabs(p.pmf[idx] - q.pmf[idx]);
  }
  return 0.5 * acc;
}

double tv_distance(const DistributionSpec& p, const DistributionSpec& q, int cap) {
  if (p.dimension() != q.dimension()) throw std::invalid_argument("tv_distance: dimension mismatch");
  return tv_distance(p.to_explicit(cap), q.to_explicit(cap));
}

std::vector<double> empirical_mean(const std::vector<Sample>& samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_mean: empty sample list");
  const std::size_t n = samples.front().size();
  std::vector<double> mu(n, 0.0);
  for (const Sample& x : samples) {
    if (x.size() != n) throw std::invalid_argument("empirical_mean: ragged samples");
    for (std::size_t i = 0; i < n; ++i) mu[i] += x[i];
  }
  const double inv = 1.0 / static_cast<double>(samples.size());
  for (double& v : mu) v *= inv;
  return mu;
}

}  // namespace subcube
