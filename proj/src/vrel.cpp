#include "qcat/vrel.hpp"

namespace qcat {

VRelation::VRelation(QuantalePtr q, int src, int tgt) : VRelation(q, src, tgt, q->bot()) {}

VRelation::VRelation(QuantalePtr q, int src, int tgt, int value)
    : q_(std::move(q)), src_(src), tgt_(tgt), m_(static_cast<std::size_t>(src) * tgt, value) {
  if (src < 0 || tgt < 0) throw Error(ErrorKind::InvalidArgument, "negative carrier size");
}

VRelation::VRelation(QuantalePtr q, const IndexMatrix& rows) : q_(std::move(q)) {
  src_ = static_cast<int>(rows.size());
  tgt_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != tgt_)
      throw Error(ErrorKind::DimensionMismatch, "ragged relation matrix");
    for (int v : row) {
      if (v < 0 || v >= q_->size())
        throw Error(ErrorKind::InvalidArgument, "relation entry is not an element index");
      m_.push_back(v);
    }
  }
}

IndexMatrix VRelation::rows() const {
  IndexMatrix out(src_, std::vector<int>(tgt_));
  for (int x = 0; x < src_; ++x)
    for (int y = 0; y < tgt_; ++y) out[x][y] = (*this)(x, y);
  return out;
}

bool VRelation::operator==(const VRelation& other) const {
  return src_ == other.src_ && tgt_ == other.tgt_ && m_ == other.m_ && q_->same_as(*other.q_);
}

bool VRelation::leq(const VRelation& other) const {
  if (src_ != other.src_ || tgt_ != other.tgt_)
    throw Error(ErrorKind::DimensionMismatch, "comparing relations of different shape");
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (!q_->leq(m_[i], other.m_[i])) return false;
  return true;
}

void require_same_quantale(const Quantale& a, const Quantale& b) {
  if (!a.same_as(b))
    throw Error(ErrorKind::QuantaleMismatch,
                "operands live over different quantales (" + a.label() + ", " + b.label() + ")");
}

VRelation compose(const VRelation& s, const VRelation& r) {
  require_same_quantale(s.q(), r.q());
  if (s.src() != r.tgt())
    throw Error(ErrorKind::DimensionMismatch,
                "compose: target " + std::to_string(r.tgt()) + " vs source " +
                    std::to_string(s.src()));
  const Quantale& q = r.q();
  VRelation out(r.quantale(), r.src(), s.tgt());
  for (int x = 0; x < r.src(); ++x)
    for (int z = 0; z < s.tgt(); ++z) {
      int acc = q.bot();
      for (int y = 0; y < r.tgt(); ++y) acc = q.join(acc, q.tensor(r(x, y), s(y, z)));
      out.set(x, z, acc);
    }
  return out;
}

VRelation identity_rel(const QuantalePtr& q, int n) {
  VRelation out(q, n, n);
  for (int x = 0; x < n; ++x) out.set(x, x, q->unit());
  return out;
}

VRelation from_map(const QuantalePtr& q, const std::vector<int>& f, int tgt) {
  VRelation out(q, static_cast<int>(f.size()), tgt);
  for (int x = 0; x < static_cast<int>(f.size()); ++x) {
    if (f[x] < 0 || f[x] >= tgt) throw Error(ErrorKind::InvalidArgument, "map value out of range");
    out.set(x, f[x], q->unit());
  }
  return out;
}

VRelation opposite(const VRelation& r) {
  VRelation out(r.quantale(), r.tgt(), r.src());
  for (int x = 0; x < r.src(); ++x)
    for (int y = 0; y < r.tgt(); ++y) out.set(y, x, r(x, y));
  return out;
}

VRelation join(const VRelation& r, const VRelation& s) {
  require_same_quantale(r.q(), s.q());
  if (r.src() != s.src() || r.tgt() != s.tgt())
    throw Error(ErrorKind::DimensionMismatch, "join of relations of different shape");
  VRelation out = r;
  for (int x = 0; x < r.src(); ++x)
    for (int y = 0; y < r.tgt(); ++y) out.set(x, y, r.q().join(r(x, y), s(x, y)));
  return out;
}

VRelation meet(const VRelation& r, const VRelation& s) {
  require_same_quantale(r.q(), s.q());
  if (r.src() != s.src() || r.tgt() != s.tgt())
    throw Error(ErrorKind::DimensionMismatch, "meet of relations of different shape");
  VRelation out = r;
  for (int x = 0; x < r.src(); ++x)
    for (int y = 0; y < r.tgt(); ++y) out.set(x, y, r.q().meet(r(x, y), s(x, y)));
  return out;
}

VRelation extension(const VRelation& t, const VRelation& r) {
  require_same_quantale(t.q(), r.q());
  if (t.src() != r.src())
    throw Error(ErrorKind::DimensionMismatch, "extension: sources differ");
  const Quantale& q = r.q();
  VRelation out(r.quantale(), r.tgt(), t.tgt());
  for (int y = 0; y < r.tgt(); ++y)
    for (int z = 0; z < t.tgt(); ++z) {
      int acc = q.top();
      for (int x = 0; x < r.src(); ++x) acc = q.meet(acc, q.hom(r(x, y), t(x, z)));
      out.set(y, z, acc);
    }
  return out;
}

VRelation lifting(const VRelation& r, const VRelation& t) {
  require_same_quantale(t.q(), r.q());
  if (t.tgt() != r.tgt())
    throw Error(ErrorKind::DimensionMismatch, "lifting: targets differ");
  const Quantale& q = r.q();
  VRelation out(r.quantale(), t.src(), r.src());
  for (int z = 0; z < t.src(); ++z)
    for (int x = 0; x < r.src(); ++x) {
      int acc = q.top();
      for (int y = 0; y < r.tgt(); ++y) acc = q.meet(acc, q.hom(r(x, y), t(z, y)));
      out.set(z, x, acc);
    }
  return out;
}

CheckReport check_leq(const std::string& law, const VRelation& lhs, const VRelation& rhs) {
  require_same_quantale(lhs.q(), rhs.q());
  if (lhs.src() != rhs.src() || lhs.tgt() != rhs.tgt())
    throw Error(ErrorKind::DimensionMismatch, law + ": shapes differ");
  for (int x = 0; x < lhs.src(); ++x)
    for (int y = 0; y < lhs.tgt(); ++y)
      if (!lhs.q().leq(lhs(x, y), rhs(x, y)))
        return CheckReport::fail(law, {x, y}, lhs.q().name(lhs(x, y)), rhs.q().name(rhs(x, y)));
  return CheckReport::pass(law);
}

CheckReport check_eq(const std::string& law, const VRelation& lhs, const VRelation& rhs) {
  require_same_quantale(lhs.q(), rhs.q());
  if (lhs.src() != rhs.src() || lhs.tgt() != rhs.tgt())
    throw Error(ErrorKind::DimensionMismatch, law + ": shapes differ");
  for (int x = 0; x < lhs.src(); ++x)
    for (int y = 0; y < lhs.tgt(); ++y)
      if (lhs(x, y) != rhs(x, y))
        return CheckReport::fail(law, {x, y}, lhs.q().name(lhs(x, y)), rhs.q().name(rhs(x, y)));
  return CheckReport::pass(law);
}

CheckReport is_adjoint_pair(const VRelation& r, const VRelation& s) {
  if (r.src() != s.tgt() || r.tgt() != s.src())
    throw Error(ErrorKind::DimensionMismatch, "adjoint pair shapes do not match");
  auto unit = check_leq("adjoint_pair.unit", identity_rel(r.quantale(), r.src()), compose(s, r));
  if (!unit) return unit;
  auto counit =
      check_leq("adjoint_pair.counit", compose(r, s), identity_rel(r.quantale(), r.tgt()));
  if (!counit) return counit;
  return CheckReport::pass("adjoint_pair");
}

std::string render(const VRelation& r) {
  std::string out = "[";
  for (int x = 0; x < r.src(); ++x) {
    out += x ? ",[" : "[";
    for (int y = 0; y < r.tgt(); ++y) out += (y ? "," : "") + r.q().name(r(x, y));
    out += "]";
  }
  return out + "]";
}

}  // namespace qcat
