#include "qcat/quantale.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace qcat {

namespace {

std::string triple(const Quantale& q, int u, int v, int w) {
  return "(" + q.name(u) + "," + q.name(v) + "," + q.name(w) + ")";
}

QuantalePtr chain_with(int m, const std::string& label, const std::function<int(int, int)>& op) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "chains need at least two elements");
  IndexMatrix t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = op(i, j);
  return validate_quantale(chain_lattice(m), t, m - 1, label);
}

std::function<int(int, int)> chain_op(const std::string& name, int m) {
  const int top = m - 1;
  if (name == "min") return [](int i, int j) { return std::min(i, j); };
  if (name == "luk") return [top](int i, int j) { return std::max(0, i + j - top); };
  if (name == "nilmin")
    return [top](int i, int j) { return i + j > top ? std::min(i, j) : 0; };
  throw Error(ErrorKind::UnknownBuiltin, "unknown chain tensor '" + name + "'");
}

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw Error(ErrorKind::UnknownBuiltin,
                  "expected '" + std::string(1, c) + "' in builtin expression '" + s + "'");
  }
  std::string word() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos)
      throw Error(ErrorKind::UnknownBuiltin, "malformed builtin expression '" + s + "'");
    return s.substr(start, pos - start);
  }
  int number() {
    const std::string w = word();
    if (!std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::UnknownBuiltin, "expected an integer, got '" + w + "'");
    return std::stoi(w);
  }
};

QuantalePtr parse_builtin(Cursor& c) {
  const std::string head = c.word();
  if (head == "two") return two();
  if (head == "chain_min" || head == "chain_luk" || head == "chain_nilmin") {
    c.expect('(');
    const int m = c.number();
    c.expect(')');
    if (head == "chain_min") return chain_min(m);
    if (head == "chain_luk") return chain_luk(m);
    return chain_nilmin(m);
  }
  if (head == "product") {
    c.expect('(');
    auto q1 = parse_builtin(c);
    c.expect(',');
    auto q2 = parse_builtin(c);
    c.expect(')');
    return product(q1, q2);
  }
  if (head == "delta_grid") {
    c.expect('(');
    const int t = c.number();
    c.expect(',');
    const int v = c.number();
    c.expect(',');
    const std::string base = c.word();
    c.expect(')');
    return delta_grid(t, v, base);
  }
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin '" + head + "'");
}

}  // namespace

IndexMatrix Quantale::tensor_table() const {
  IndexMatrix t(size(), std::vector<int>(size()));
  for (int u = 0; u < size(); ++u)
    for (int v = 0; v < size(); ++v) t[u][v] = tensor(u, v);
  return t;
}

const TotallyBelow& Quantale::totally_below() const {
  if (!tb_)
    throw Error(ErrorKind::SizeLimitExceeded,
                "totally-below relation unavailable for " + std::to_string(size()) + " elements");
  return *tb_;
}

bool Quantale::same_as(const Quantale& other) const {
  return this == &other ||
         (lattice_ == other.lattice_ && tensor_ == other.tensor_ && unit_ == other.unit_);
}

QuantalePtr validate_quantale(FiniteLattice lattice, const IndexMatrix& tensor, int unit,
                              std::string label) {
  const int n = lattice.size();
  if (static_cast<int>(tensor.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "tensor table has wrong row count");
  for (const auto& row : tensor) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::DimensionMismatch, "tensor table has wrong column count");
    for (int x : row)
      if (x < 0 || x >= n) throw Error(ErrorKind::InvalidArgument, "tensor entry out of range");
  }
  if (unit < 0 || unit >= n) throw Error(ErrorKind::InvalidArgument, "unit out of range");

  auto q = std::make_shared<Quantale>();
  q->lattice_ = std::move(lattice);
  q->label_ = std::move(label);
  q->unit_ = unit;
  q->tensor_.resize(n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) q->tensor_[u * n + v] = tensor[u][v];
  const Quantale& Q = *q;

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (Q.tensor(u, v) != Q.tensor(v, u))
        throw Error(ErrorKind::NotCommutative,
                    Q.name(u) + "*" + Q.name(v) + " = " + Q.name(Q.tensor(u, v)) + " but " +
                        Q.name(v) + "*" + Q.name(u) + " = " + Q.name(Q.tensor(v, u)),
                    {u, v});
  for (int u = 0; u < n; ++u)
    if (Q.tensor(u, unit) != u)
      throw Error(ErrorKind::UnitFails,
                  Q.name(u) + "*" + Q.name(unit) + " = " + Q.name(Q.tensor(u, unit)), {u, unit});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (Q.tensor(Q.tensor(u, v), w) != Q.tensor(u, Q.tensor(v, w)))
          throw Error(ErrorKind::NotAssociative, "at " + triple(Q, u, v, w), {u, v, w});
  for (int u = 0; u < n; ++u) {
    if (Q.tensor(u, Q.bot()) != Q.bot())
      throw Error(ErrorKind::NotJoinDistributive,
                  Q.name(u) + "*bottom = " + Q.name(Q.tensor(u, Q.bot())), {u, Q.bot()});
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (Q.tensor(u, Q.join(v, w)) != Q.join(Q.tensor(u, v), Q.tensor(u, w)))
          throw Error(ErrorKind::NotJoinDistributive, "at " + triple(Q, u, v, w), {u, v, w});
  }

  q->hom_.resize(n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int h = Q.bot();
      for (int w = 0; w < n; ++w)
        if (Q.leq(Q.tensor(u, w), v)) h = Q.join(h, w);
      q->hom_[u * n + v] = h;
    }
  if (n <= kMaxDownSetElements) {
    q->tb_ = qcat::totally_below(q->lattice_);
    q->cd_ = static_cast<bool>(is_completely_distributive(q->lattice_));
  }
  return q;
}

QuantalePtr two() {
  static const QuantalePtr q = chain_with(2, "two", [](int i, int j) { return std::min(i, j); });
  return q;
}

QuantalePtr chain_min(int m) {
  return chain_with(m, "chain_min(" + std::to_string(m) + ")", chain_op("min", m));
}

QuantalePtr chain_luk(int m) {
  return chain_with(m, "chain_luk(" + std::to_string(m) + ")", chain_op("luk", m));
}

QuantalePtr chain_nilmin(int m) {
  return chain_with(m, "chain_nilmin(" + std::to_string(m) + ")", chain_op("nilmin", m));
}

QuantalePtr product(const QuantalePtr& q1, const QuantalePtr& q2) {
  const int n1 = q1->size(), n2 = q2->size(), n = n1 * n2;
  BoolMatrix leq(n, std::vector<bool>(n));
  std::vector<std::string> names(n);
  IndexMatrix t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const int a1 = a / n2, a2 = a % n2;
    names[a] = "(" + q1->name(a1) + "," + q2->name(a2) + ")";
    for (int b = 0; b < n; ++b) {
      const int b1 = b / n2, b2 = b % n2;
      leq[a][b] = q1->leq(a1, b1) && q2->leq(a2, b2);
      t[a][b] = q1->tensor(a1, b1) * n2 + q2->tensor(a2, b2);
    }
  }
  return validate_quantale(validate_lattice(leq, names), t, q1->unit() * n2 + q2->unit(),
                           "product(" + q1->label() + "," + q2->label() + ")");
}

QuantalePtr delta_grid(int t, int v, const std::string& base_tensor) {
  if (t < 1 || v < 2)
    throw Error(ErrorKind::InvalidArgument, "delta_grid needs t >= 1 and v >= 2");
  const auto op = chain_op(base_tensor, v);
  // Monotone value sequences f(1..t); f(0) = 0 is implicit.
  std::vector<std::vector<int>> fs;
  std::vector<int> cur(t, 0);
  std::function<void(int, int)> gen = [&](int pos, int lo) {
    if (pos == t) {
      fs.push_back(cur);
      return;
    }
    for (int x = lo; x < v; ++x) {
      cur[pos] = x;
      gen(pos + 1, x);
    }
  };
  gen(0, 0);
  const int n = static_cast<int>(fs.size());
  require_enumerable(static_cast<double>(n) * n * n, "delta_grid validation");
  BoolMatrix leq(n, std::vector<bool>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = "f0";
    for (int x : fs[a]) names[a] += std::to_string(x);
    for (int b = 0; b < n; ++b) {
      bool le = true;
      for (int g = 0; g < t; ++g) le = le && fs[a][g] <= fs[b][g];
      leq[a][b] = le;
    }
  }
  auto index = [&](const std::vector<int>& f) {
    return static_cast<int>(std::find(fs.begin(), fs.end(), f) - fs.begin());
  };
  IndexMatrix tensor(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> h(t, 0);
      for (int al = 1; al <= t; ++al)
        for (int be = 1; be <= t; ++be) {
          const int reach = std::min(al + be - 1, t);
          const int val = op(fs[a][al - 1], fs[b][be - 1]);
          for (int g = reach; g <= t; ++g) h[g - 1] = std::max(h[g - 1], val);
        }
      tensor[a][b] = index(h);
    }
  const int unit = index(std::vector<int>(t, v - 1));
  const std::string label =
      "delta_grid(" + std::to_string(t) + "," + std::to_string(v) + "," + base_tensor + ")";
  try {
    return validate_quantale(validate_lattice(leq, names), tensor, unit, label);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationFailed, label + " is not a quantale: " + e.what(),
                e.witness());
  }
}

QuantalePtr builtin(const std::string& expr) {
  Cursor c{expr};
  auto q = parse_builtin(c);
  c.skip();
  if (c.pos != expr.size())
    throw Error(ErrorKind::UnknownBuiltin, "trailing input in builtin expression '" + expr + "'");
  return q;
}

CheckReport is_lax_morphism(const std::vector<int>& map, const Quantale& q1, const Quantale& q2) {
  const std::string law = "lax_morphism";
  if (static_cast<int>(map.size()) != q1.size())
    throw Error(ErrorKind::DimensionMismatch, "map length differs from source size");
  for (int x : map)
    if (x < 0 || x >= q2.size()) throw Error(ErrorKind::InvalidArgument, "map value out of range");
  for (int u = 0; u < q1.size(); ++u)
    for (int v = 0; v < q1.size(); ++v)
      if (q1.leq(u, v) && !q2.leq(map[u], map[v]))
        return CheckReport::fail(law, {u, v}, q2.name(map[u]), q2.name(map[v]), "not monotone");
  if (!q2.leq(q2.unit(), map[q1.unit()]))
    return CheckReport::fail(law, {q1.unit()}, q2.name(q2.unit()), q2.name(map[q1.unit()]),
                             "unit not preserved laxly");
  for (int u = 0; u < q1.size(); ++u)
    for (int v = 0; v < q1.size(); ++v) {
      const int lhs = q2.tensor(map[u], map[v]);
      const int rhs = map[q1.tensor(u, v)];
      if (!q2.leq(lhs, rhs))
        return CheckReport::fail(law, {u, v}, q2.name(lhs), q2.name(rhs),
                                 "tensor not preserved laxly");
    }
  return CheckReport::pass(law);
}

LaxMorphism make_lax_morphism(std::vector<int> map, QuantalePtr q1, QuantalePtr q2) {
  auto r = is_lax_morphism(map, *q1, *q2);
  if (!r) throw Error(ErrorKind::ValidationFailed, r.detail + ": " + r.lhs + " vs " + r.rhs, r.witness);
  return LaxMorphism{std::move(q1), std::move(q2), std::move(map)};
}

LaxMorphism canonical_i(const QuantalePtr& q) {
  return make_lax_morphism({q->bot(), q->unit()}, two(), q);
}

LaxMorphism canonical_p(const QuantalePtr& q) {
  std::vector<int> map(q->size());
  for (int v = 0; v < q->size(); ++v) map[v] = q->leq(q->unit(), v) ? 1 : 0;
  return make_lax_morphism(std::move(map), q, two());
}

std::vector<GirardStructure> find_dualizing(const QuantalePtr& q) {
  std::vector<GirardStructure> out;
  const int n = q->size();
  for (int d = 0; d < n; ++d) {
    std::vector<int> neg(n);
    for (int u = 0; u < n; ++u) neg[u] = q->hom(u, d);
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) ok = neg[neg[u]] == u;
    if (!ok) continue;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (q->hom(u, v) != neg[q->tensor(u, neg[v])])
          throw Error(ErrorKind::InternalLawViolation, "hom reconstruction fails", {d, u, v});
        if (!q->leq(q->hom(u, v), q->hom(neg[v], neg[u])))
          throw Error(ErrorKind::InternalLawViolation, "negation is not order-reversing", {d, u, v});
      }
    out.push_back(GirardStructure{q, d, std::move(neg)});
  }
  return out;
}

CheckReport check_residuation(const Quantale& q) {
  const int n = q.size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        const bool lhs = q.leq(q.tensor(u, v), w);
        const bool rhs = q.leq(v, q.hom(u, w));
        if (lhs != rhs)
          return CheckReport::fail("residuation", {u, v, w}, lhs ? "true" : "false",
                                   rhs ? "true" : "false");
      }
  return CheckReport::pass("residuation");
}

}  // namespace qcat
