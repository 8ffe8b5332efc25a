#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/error.hpp"

namespace qcat {

using BoolMatrix = std::vector<std::vector<bool>>;
using Mask = std::uint32_t;

/// Largest lattice accepted by the down-set enumeration.
inline constexpr int kMaxDownSetElements = 16;

class FiniteLattice {
 public:
  FiniteLattice() = default;

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int u) const { return names_.at(u); }
  int index_of(const std::string& name) const;

  bool leq(int u, int v) const { return leq_[u * n_ + v]; }
  int join(int u, int v) const { return join_[u * n_ + v]; }
  int meet(int u, int v) const { return meet_[u * n_ + v]; }
  int bot() const { return bot_; }
  int top() const { return top_; }

  int join_all(const std::vector<int>& xs) const;
  int meet_all(const std::vector<int>& xs) const;
  int join_mask(Mask set) const;
  int meet_mask(Mask set) const;

  BoolMatrix leq_table() const;
  bool operator==(const FiniteLattice& other) const;

  friend FiniteLattice validate_lattice(const BoolMatrix& leq, std::vector<std::string> names);

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<int> join_, meet_;
  int bot_ = 0, top_ = 0;
};

/// Checks the order axioms and existence of binary bounds, then derives the tables.
FiniteLattice validate_lattice(const BoolMatrix& leq, std::vector<std::string> names = {});

/// Order dual.
FiniteLattice reverse(const FiniteLattice& lattice);

struct TotallyBelow {
  int n = 0;
  BoolMatrix tb;
  bool operator()(int x, int y) const { return tb[x][y]; }
};

/// All down-closed subsets, by closing each of the 2^n subsets.
std::vector<Mask> down_sets(const FiniteLattice& lattice);

TotallyBelow totally_below(const FiniteLattice& lattice);

CheckReport is_completely_distributive(const FiniteLattice& lattice);
CheckReport is_join_irreducible(const FiniteLattice& lattice, int v);
CheckReport is_approximated(const FiniteLattice& lattice, int v);
CheckReport is_approximated(const FiniteLattice& lattice, const TotallyBelow& tb, int v);

/// The chain 0 < 1/(m-1) < ... < 1, elements named by reduced fractions.
FiniteLattice chain_lattice(int m);
std::string chain_name(int i, int m);

}  // namespace qcat
