#include "ipsd/statespace.hpp"

namespace ipsd {

namespace {

void enumerate_full(const std::vector<int>& caps, std::size_t slot, Config& cur,
                    std::vector<Config>& out) {
  if (slot == caps.size()) { out.push_back(cur); return; }
  for (int k = 0; k <= caps[slot]; ++k) {
    cur[slot] = k;
    enumerate_full(caps, slot + 1, cur, out);
  }
}

void enumerate_sector(const std::vector<int>& caps, std::size_t slot, int remaining,
                      Config& cur, std::vector<Config>& out) {
  if (slot == caps.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (slot + 1 == caps.size()) {
    if (caps[slot] < 0 || remaining <= caps[slot]) {
      cur[slot] = remaining;
      out.push_back(cur);
    }
    return;
  }
  int hi = caps[slot] < 0 ? remaining : std::min(caps[slot], remaining);
  for (int k = 0; k <= hi; ++k) {
    cur[slot] = k;
    enumerate_sector(caps, slot + 1, remaining - k, cur, out);
  }
}

}  // namespace

void StateSpace::finish() {
  for (std::size_t i = 0; i < states_.size(); ++i) index_[states_[i]] = i;
}

StateSpace StateSpace::full(const std::vector<int>& caps) {
  StateSpace s;
  Config cur(caps.size(), 0);
  enumerate_full(caps, 0, cur, s.states_);
  s.finish();
  return s;
}

StateSpace StateSpace::sector(const std::vector<int>& caps, int total) {
  StateSpace s;
  Config cur(caps.size(), 0);
  enumerate_sector(caps, 0, total, cur, s.states_);
  if (s.states_.empty()) throw EmptySector("no configuration with the requested total");
  s.finish();
  return s;
}

std::optional<std::size_t> StateSpace::index_of(const Config& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RatMatrix restrict_to(const RatMatrix& m, const StateSpace& basis, const StateSpace& sub) {
  RatMatrix r(sub.size(), sub.size());
  std::vector<std::size_t> idx(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    auto j = basis.index_of(sub.state(i));
    if (!j) throw std::invalid_argument("restrict_to: state not in basis");
    idx[i] = *j;
  }
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j) r(i, j) = m(idx[i], idx[j]);
  return r;
}

}  // namespace ipsd
