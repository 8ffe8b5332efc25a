#pragma once

#include <string>
#include <vector>

#include "qcat/quantale.hpp"

namespace qcat {

/// A src x tgt matrix of quantale elements, row-major, row = source point.
class VRelation {
 public:
  VRelation() = default;
  VRelation(QuantalePtr q, int src, int tgt);
  VRelation(QuantalePtr q, const IndexMatrix& rows);
  /// Fills every entry with `value`.
  VRelation(QuantalePtr q, int src, int tgt, int value);

  const QuantalePtr& quantale() const { return q_; }
  const Quantale& q() const { return *q_; }
  int src() const { return src_; }
  int tgt() const { return tgt_; }

  int operator()(int x, int y) const { return m_[x * tgt_ + y]; }
  void set(int x, int y, int v) { m_[x * tgt_ + y] = v; }
  const std::vector<int>& data() const { return m_; }

  IndexMatrix rows() const;
  bool operator==(const VRelation& other) const;
  bool operator!=(const VRelation& other) const { return !(*this == other); }
  /// Pointwise order.
  bool leq(const VRelation& other) const;

 private:
  QuantalePtr q_;
  int src_ = 0, tgt_ = 0;
  std::vector<int> m_;
};

void require_same_quantale(const Quantale& a, const Quantale& b);

/// (s.r)(x,z) = join over y of r(x,y) * s(y,z).
VRelation compose(const VRelation& s, const VRelation& r);
VRelation identity_rel(const QuantalePtr& q, int n);
/// Graph of f: X -> Y, with |Y| = tgt.
VRelation from_map(const QuantalePtr& q, const std::vector<int>& f, int tgt);
VRelation opposite(const VRelation& r);
VRelation join(const VRelation& r, const VRelation& s);
VRelation meet(const VRelation& r, const VRelation& s);

/// (t <| r)(y,z) = meet over x of hom(r(x,y), t(x,z)).
VRelation extension(const VRelation& t, const VRelation& r);
/// (r |> t)(z,x) = meet over y of hom(r(x,y), t(z,y)).
VRelation lifting(const VRelation& r, const VRelation& t);

/// 1_X <= s.r and r.s <= 1_Y.
CheckReport is_adjoint_pair(const VRelation& r, const VRelation& s);

/// First entry where lhs <= rhs fails, or a pass.
CheckReport check_leq(const std::string& law, const VRelation& lhs, const VRelation& rhs);
CheckReport check_eq(const std::string& law, const VRelation& lhs, const VRelation& rhs);

std::string render(const VRelation& r);

}  // namespace qcat
