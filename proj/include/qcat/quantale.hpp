#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/lattice.hpp"

namespace qcat {

using IndexMatrix = std::vector<std::vector<int>>;

class Quantale {
 public:
  const FiniteLattice& lattice() const { return lattice_; }
  const std::string& label() const { return label_; }
  int size() const { return lattice_.size(); }

  int tensor(int u, int v) const { return tensor_[u * size() + v]; }
  int hom(int u, int v) const { return hom_[u * size() + v]; }
  int unit() const { return unit_; }
  int bot() const { return lattice_.bot(); }
  int top() const { return lattice_.top(); }
  bool leq(int u, int v) const { return lattice_.leq(u, v); }
  int join(int u, int v) const { return lattice_.join(u, v); }
  int meet(int u, int v) const { return lattice_.meet(u, v); }
  const std::string& name(int u) const { return lattice_.name(u); }
  int index_of(const std::string& name) const { return lattice_.index_of(name); }

  IndexMatrix tensor_table() const;
  /// Cached; throws SizeLimitExceeded beyond the down-set cap.
  const TotallyBelow& totally_below() const;
  bool unit_is_top() const { return unit_ == top(); }
  /// Cached at validation; false when the down-set cap is exceeded.
  bool completely_distributive() const { return cd_; }

  /// Same lattice, tensor and unit.
  bool same_as(const Quantale& other) const;

  friend std::shared_ptr<const Quantale> validate_quantale(FiniteLattice lattice,
                                                           const IndexMatrix& tensor, int unit,
                                                           std::string label);

 private:
  FiniteLattice lattice_;
  std::string label_;
  std::vector<int> tensor_, hom_;
  int unit_ = 0;
  std::optional<TotallyBelow> tb_;
  bool cd_ = false;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// Exhaustive axiom check: commutativity, unit, associativity, distribution over
/// binary joins and the empty join.
QuantalePtr validate_quantale(FiniteLattice lattice, const IndexMatrix& tensor, int unit,
                              std::string label = {});

QuantalePtr two();
QuantalePtr chain_min(int m);
QuantalePtr chain_luk(int m);
QuantalePtr chain_nilmin(int m);
QuantalePtr product(const QuantalePtr& q1, const QuantalePtr& q2);
/// Step functions on the time grid {0..t} with values in the m-chain {0..v-1}.
/// Grid point g >= 1 stands for the interval (g-1, g] and the last one is open to
/// infinity; f(0) is always 0. Rejected with ValidationFailed when the
/// construction is not a quantale.
QuantalePtr delta_grid(int t, int v, const std::string& base_tensor);

/// Parses "two", "chain_luk(3)", "product(two,chain_min(3))", "delta_grid(3,2,min)".
QuantalePtr builtin(const std::string& expr);

struct LaxMorphism {
  QuantalePtr source;
  QuantalePtr target;
  std::vector<int> map;
  int operator()(int u) const { return map.at(u); }
};

CheckReport is_lax_morphism(const std::vector<int>& map, const Quantale& q1, const Quantale& q2);
/// Validated constructor; throws ValidationFailed with the failing witness.
LaxMorphism make_lax_morphism(std::vector<int> map, QuantalePtr q1, QuantalePtr q2);

/// 0 -> bottom, 1 -> unit.
LaxMorphism canonical_i(const QuantalePtr& q);
/// v -> 1 iff unit <= v.
LaxMorphism canonical_p(const QuantalePtr& q);

struct GirardStructure {
  QuantalePtr quantale;
  int dualizing = 0;
  std::vector<int> neg;
  int operator()(int u) const { return neg.at(u); }
};

std::vector<GirardStructure> find_dualizing(const QuantalePtr& q);

/// Adjunction u*v <= w iff v <= hom(u,w), over every triple.
CheckReport check_residuation(const Quantale& q);

}  // namespace qcat
