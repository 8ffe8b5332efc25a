#include "qcat/lattice.hpp"

#include <numeric>
#include <set>

namespace qcat {

namespace {

std::string pair_text(const FiniteLattice& l, int u, int v) {
  return "(" + l.name(u) + "," + l.name(v) + ")";
}

}  // namespace

int FiniteLattice::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  throw Error(ErrorKind::InvalidArgument, "unknown element '" + name + "'");
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
  int r = bot_;
  for (int x : xs) r = join(r, x);
  return r;
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
  int r = top_;
  for (int x : xs) r = meet(r, x);
  return r;
}

int FiniteLattice::join_mask(Mask set) const {
  int r = bot_;
  for (int x = 0; x < n_; ++x)
    if (set >> x & 1u) r = join(r, x);
  return r;
}

int FiniteLattice::meet_mask(Mask set) const {
  int r = top_;
  for (int x = 0; x < n_; ++x)
    if (set >> x & 1u) r = meet(r, x);
  return r;
}

BoolMatrix FiniteLattice::leq_table() const {
  BoolMatrix t(n_, std::vector<bool>(n_));
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) t[u][v] = leq(u, v);
  return t;
}

bool FiniteLattice::operator==(const FiniteLattice& other) const {
  return n_ == other.n_ && leq_ == other.leq_ && names_ == other.names_;
}

FiniteLattice validate_lattice(const BoolMatrix& leq, std::vector<std::string> names) {
  const int n = static_cast<int>(leq.size());
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "a lattice needs at least one element");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::DimensionMismatch, "order table is not square");
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (static_cast<int>(names.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "name count differs from element count");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    throw Error(ErrorKind::InvalidArgument, "element names must be distinct");

  for (int u = 0; u < n; ++u)
    if (!leq[u][u])
      throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + names[u], {u, u});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (leq[u][v] && leq[v][u])
        throw Error(ErrorKind::NotAPartialOrder,
                    "not antisymmetric at (" + names[u] + "," + names[v] + ")", {u, v});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (leq[u][v] && leq[v][w] && !leq[u][w])
          throw Error(ErrorKind::NotAPartialOrder,
                      "not transitive at (" + names[u] + "," + names[v] + "," + names[w] + ")",
                      {u, v, w});

  FiniteLattice l;
  l.n_ = n;
  l.names_ = std::move(names);
  l.leq_.resize(n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) l.leq_[u * n + v] = leq[u][v];
  l.join_.assign(n * n, -1);
  l.meet_.assign(n * n, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < n && l.join_[u * n + v] < 0; ++c) {
        if (!leq[u][c] || !leq[v][c]) continue;
        bool least = true;
        for (int d = 0; d < n && least; ++d)
          if (leq[u][d] && leq[v][d] && !leq[c][d]) least = false;
        if (least) l.join_[u * n + v] = c;
      }
      for (int c = 0; c < n && l.meet_[u * n + v] < 0; ++c) {
        if (!leq[c][u] || !leq[c][v]) continue;
        bool greatest = true;
        for (int d = 0; d < n && greatest; ++d)
          if (leq[d][u] && leq[d][v] && !leq[d][c]) greatest = false;
        if (greatest) l.meet_[u * n + v] = c;
      }
      if (l.join_[u * n + v] < 0)
        throw Error(ErrorKind::NotALattice, "no least upper bound of " + pair_text(l, u, v),
                    {u, v});
      if (l.meet_[u * n + v] < 0)
        throw Error(ErrorKind::NotALattice, "no greatest lower bound of " + pair_text(l, u, v),
                    {u, v});
    }
  int bot = 0, top = 0;
  for (int u = 1; u < n; ++u) {
    bot = l.meet(bot, u);
    top = l.join(top, u);
  }
  l.bot_ = bot;
  l.top_ = top;
  return l;
}

FiniteLattice reverse(const FiniteLattice& lattice) {
  const int n = lattice.size();
  BoolMatrix t(n, std::vector<bool>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) t[u][v] = lattice.leq(v, u);
  return validate_lattice(t, lattice.names());
}

std::vector<Mask> down_sets(const FiniteLattice& lattice) {
  const int n = lattice.size();
  if (n > kMaxDownSetElements)
    throw Error(ErrorKind::SizeLimitExceeded,
                "down-set enumeration is capped at " + std::to_string(kMaxDownSetElements) +
                    " elements, lattice has " + std::to_string(n));
  std::vector<Mask> below(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (lattice.leq(y, x)) below[x] |= Mask{1} << y;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<Mask> out;
  for (Mask s = 0;; ++s) {
    Mask closed = 0;
    for (int x = 0; x < n; ++x)
      if (s >> x & 1u) closed |= below[x];
    if (!seen[closed]) {
      seen[closed] = true;
      out.push_back(closed);
    }
    if (s == full) break;
  }
  return out;
}

TotallyBelow totally_below(const FiniteLattice& lattice) {
  const int n = lattice.size();
  const auto downs = down_sets(lattice);
  TotallyBelow t{n, BoolMatrix(n, std::vector<bool>(n, true))};
  for (Mask a : downs) {
    const int sup = lattice.join_mask(a);
    for (int y = 0; y < n; ++y) {
      if (!lattice.leq(y, sup)) continue;
      for (int x = 0; x < n; ++x)
        if (!(a >> x & 1u)) t.tb[x][y] = false;
    }
  }
  return t;
}

CheckReport is_completely_distributive(const FiniteLattice& lattice) {
  const auto tb = totally_below(lattice);
  for (int y = 0; y < lattice.size(); ++y) {
    Mask approx = 0;
    for (int x = 0; x < lattice.size(); ++x)
      if (tb(x, y)) approx |= Mask{1} << x;
    const int sup = lattice.join_mask(approx);
    if (sup != y)
      return CheckReport::fail("completely_distributive", {y}, lattice.name(sup), lattice.name(y),
                               "join of elements totally below " + lattice.name(y) +
                                   " differs from it");
  }
  return CheckReport::pass("completely_distributive");
}

CheckReport is_join_irreducible(const FiniteLattice& lattice, int v) {
  if (v < 0 || v >= lattice.size())
    throw Error(ErrorKind::InvalidArgument, "element index out of range", {v});
  if (v == lattice.bot())
    return CheckReport::fail("join_irreducible", {v}, lattice.name(v), lattice.name(v),
                             "bottom is never join-irreducible");
  for (int u = 0; u < lattice.size(); ++u)
    for (int w = 0; w < lattice.size(); ++w)
      if (lattice.leq(v, lattice.join(u, w)) && !lattice.leq(v, u) && !lattice.leq(v, w))
        return CheckReport::fail("join_irreducible", {u, w}, lattice.name(v),
                                 lattice.name(lattice.join(u, w)),
                                 lattice.name(v) + " <= " + lattice.name(u) + " v " +
                                     lattice.name(w) + " but below neither");
  return CheckReport::pass("join_irreducible");
}

CheckReport is_approximated(const FiniteLattice& lattice, const TotallyBelow& tb, int v) {
  std::vector<int> below;
  for (int x = 0; x < lattice.size(); ++x)
    if (tb(x, v)) below.push_back(x);
  if (below.empty())
    return CheckReport::fail("approximated", {v}, "{}", lattice.name(v),
                             "nothing is totally below " + lattice.name(v));
  for (int x : below)
    for (int y : below) {
      bool bounded = false;
      for (int z : below)
        if (lattice.leq(x, z) && lattice.leq(y, z)) bounded = true;
      if (!bounded)
        return CheckReport::fail("approximated", {x, y}, lattice.name(x), lattice.name(y),
                                 "no upper bound totally below " + lattice.name(v));
    }
  const int sup = lattice.join_all(below);
  if (sup != v)
    return CheckReport::fail("approximated", {v}, lattice.name(sup), lattice.name(v),
                             "join of the approximating set is not the element");
  return CheckReport::pass("approximated");
}

CheckReport is_approximated(const FiniteLattice& lattice, int v) {
  return is_approximated(lattice, totally_below(lattice), v);
}

std::string chain_name(int i, int m) {
  if (i == 0) return "0";
  if (i == m - 1) return "1";
  const int g = std::gcd(i, m - 1);
  return std::to_string(i / g) + "/" + std::to_string((m - 1) / g);
}

FiniteLattice chain_lattice(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "chain needs at least one element");
  BoolMatrix t(m, std::vector<bool>(m));
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back(m == 1 ? "0" : chain_name(i, m));
    for (int j = 0; j < m; ++j) t[i][j] = i <= j;
  }
  return validate_lattice(t, names);
}

}  // namespace qcat
