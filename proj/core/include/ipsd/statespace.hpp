#ifndef IPSD_STATESPACE_HPP
#define IPSD_STATESPACE_HPP

#include <map>
#include <optional>
#include <vector>

#include "ipsd/matrix.hpp"

namespace ipsd {

// Occupation configuration over slots (sites, possibly followed by sinks or
// site-level pairs), one nonnegative count per slot.
using Config = std::vector<int>;

struct EmptySector : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumerated finite state space, lexicographically ordered with the first
// slot most significant. full() with uniform caps matches the Kronecker
// product basis ordering (last slot fastest).
class StateSpace {
 public:
  // All configurations with n_slot occupation <= caps[slot].
  static StateSpace full(const std::vector<int>& caps);
  // Configurations with fixed total; caps[slot] < 0 means unbounded.
  static StateSpace sector(const std::vector<int>& caps, int total);

  std::size_t size() const { return states_.size(); }
  const Config& state(std::size_t i) const { return states_[i]; }
  const std::vector<Config>& states() const { return states_; }
  std::optional<std::size_t> index_of(const Config& c) const;
  std::size_t n_slots() const { return states_.empty() ? 0 : states_[0].size(); }

 private:
  std::vector<Config> states_;
  std::map<Config, std::size_t> index_;
  void finish();
};

// Rows/columns of `m` (indexed by `basis`) restricted to the states of
// `sub`, in sub's order. Every sub state must exist in basis.
RatMatrix restrict_to(const RatMatrix& m, const StateSpace& basis, const StateSpace& sub);

}  // namespace ipsd

#endif
