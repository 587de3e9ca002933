#include "ipsd/lattice.hpp"

#include <algorithm>

namespace ipsd {

const Rational& Kernel::rate(int i, int l) const { return rates_[i * n_ + l]; }

bool Kernel::is_boundary(int i) const {
  return std::find(boundary_.begin(), boundary_.end(), i) != boundary_.end();
}

int Kernel::sink_of(int boundary_site) const {
  auto it = std::find(boundary_.begin(), boundary_.end(), boundary_site);
  if (it == boundary_.end()) throw UnknownBoundarySite("not a boundary site");
  return n_ + static_cast<int>(it - boundary_.begin());
}

const Rational& Kernel::reservoir_param(int boundary_site) const {
  auto it = reservoir_.find(boundary_site);
  if (it == reservoir_.end()) throw UnknownBoundarySite("no reservoir parameter");
  return it->second;
}

std::vector<int> Kernel::neighbors(int i) const {
  std::vector<int> out;
  for (int l = 0; l < n_; ++l)
    if (rate(i, l) != 0) out.push_back(l);
  return out;
}

Kernel build_kernel(const GraphSpec& spec) {
  Kernel k;
  k.n_ = spec.n_sites;
  k.rates_.assign(static_cast<std::size_t>(k.n_) * k.n_, Rational(0));
  for (const auto& [i, l, w] : spec.edges) {
    if (i < 0 || i >= k.n_ || l < 0 || l >= k.n_)
      throw KernelError("edge endpoint out of range");
    if (i == l) throw KernelError("self-loop not allowed");
    if (w < 0) throw NegativeRate("negative edge weight");
    k.rates_[i * k.n_ + l] += w;
    k.rates_[l * k.n_ + i] += w;
  }
  // Undirected edge input makes asymmetry unrepresentable; scan anyway so the
  // invariant is checked even if construction changes.
  for (int i = 0; i < k.n_; ++i)
    for (int l = 0; l < i; ++l)
      if (k.rate(i, l) != k.rate(l, i)) throw AsymmetricKernel("p(i,l) != p(l,i)");
  for (const auto& [site, param] : spec.boundary) {
    if (site < 0 || site >= k.n_) throw UnknownBoundarySite("boundary site out of range");
    k.boundary_.push_back(site);
    k.reservoir_[site] = param;
  }
  std::sort(k.boundary_.begin(), k.boundary_.end());
  return k;
}

Kernel chain_kernel(int n) {
  GraphSpec s;
  s.n_sites = n;
  for (int i = 0; i + 1 < n; ++i) s.edges.emplace_back(i, i + 1, Rational(1));
  return build_kernel(s);
}

Kernel boundary_chain_kernel(int n, const Rational& left, const Rational& right) {
  GraphSpec s;
  s.n_sites = n;
  for (int i = 0; i + 1 < n; ++i) s.edges.emplace_back(i, i + 1, Rational(1));
  s.boundary[0] = left;
  s.boundary[n - 1] = right;
  return build_kernel(s);
}

}  // namespace ipsd
