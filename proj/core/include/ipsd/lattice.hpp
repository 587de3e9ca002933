#ifndef IPSD_LATTICE_HPP
#define IPSD_LATTICE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ipsd/rational.hpp"

namespace ipsd {

struct KernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeRate : KernelError { using KernelError::KernelError; };
struct AsymmetricKernel : KernelError { using KernelError::KernelError; };
struct UnknownBoundarySite : KernelError { using KernelError::KernelError; };

// Declarative graph description consumed by build_kernel.
struct GraphSpec {
  int n_sites = 0;
  // (i, l, weight), undirected; sites are 0-based.
  std::vector<std::tuple<int, int, Rational>> edges;
  // boundary site -> reservoir parameter (rho for particle models, T for
  // energy models).
  std::map<int, Rational> boundary;
};

// Finite site set with a symmetric rate kernel p(i,l), optional boundary
// sites with reservoir parameters and one sink site per boundary site.
// Immutable after construction.
class Kernel {
 public:
  int n_sites() const { return n_; }
  const Rational& rate(int i, int l) const;
  const std::vector<int>& boundary() const { return boundary_; }
  bool is_boundary(int i) const;
  // Sink ids are n_sites() .. n_sites()+boundary().size()-1, in boundary
  // order; sink_of(i) maps a boundary site to its sink.
  int n_sinks() const { return static_cast<int>(boundary_.size()); }
  int sink_of(int boundary_site) const;
  const Rational& reservoir_param(int boundary_site) const;

  // Sites l with p(i,l) > 0.
  std::vector<int> neighbors(int i) const;

  friend Kernel build_kernel(const GraphSpec& spec);

 private:
  int n_ = 0;
  std::vector<Rational> rates_;  // n x n, symmetric, zero diagonal
  std::vector<int> boundary_;
  std::map<int, Rational> reservoir_;
};

Kernel build_kernel(const GraphSpec& spec);

// Chain of n sites with unit nearest-neighbor rates.
Kernel chain_kernel(int n);
// Same, with boundary at both ends carrying reservoir parameters.
Kernel boundary_chain_kernel(int n, const Rational& left, const Rational& right);

}  // namespace ipsd

#endif
