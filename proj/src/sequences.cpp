#include "qcat/sequences.hpp"

#include <regex>

namespace qcat {

int EvPeriodicSeq::at(long n) const {
  if (n < static_cast<long>(pre.size())) return pre[n];
  return per[(n - pre.size()) % per.size()];
}

void validate_sequence(const VCategory& x, const EvPeriodicSeq& s) {
  if (s.per.empty()) throw Error(ErrorKind::InvalidArgument, "sequence period is empty");
  for (const auto* part : {&s.pre, &s.per})
    for (int v : *part)
      if (v < 0 || v >= x.size())
        throw Error(ErrorKind::InvalidArgument, "sequence entry is not an object", {v});
}

EvPeriodicSeq constant_sequence(int obj) { return EvPeriodicSeq{{}, {obj}}; }

int cauchy_degree(const VCategory& x, const EvPeriodicSeq& s) {
  validate_sequence(x, s);
  const Quantale& q = x.q();
  int acc = q.top();
  for (int z : s.per)
    for (int w : s.per) acc = q.meet(acc, x(z, w));
  return acc;
}

bool is_cauchy(const VCategory& x, const EvPeriodicSeq& s) {
  return x.q().leq(x.q().unit(), cauchy_degree(x, s));
}

InducedWeights induced_weights(const VCategory& x, const EvPeriodicSeq& s) {
  validate_sequence(x, s);
  const Quantale& q = x.q();
  InducedWeights w{Weight(x.size(), q.top()), Weight(x.size(), q.top())};
  for (int t = 0; t < x.size(); ++t)
    for (int z : s.per) {
      w.phi[t] = q.meet(w.phi[t], x(z, t));
      w.psi[t] = q.meet(w.psi[t], x(t, z));
    }
  if (auto r = is_weight(x, w.phi, Side::Left); !r)
    throw Error(ErrorKind::InternalLawViolation, "phi_s is not a left weight", r.witness);
  if (auto r = is_weight(x, w.psi, Side::Right); !r)
    throw Error(ErrorKind::InternalLawViolation, "psi_s is not a right weight", r.witness);
  return w;
}

CheckReport converges_to(const VCategory& x, const EvPeriodicSeq& s, int obj) {
  validate_sequence(x, s);
  const Quantale& q = x.q();
  for (int z : s.per) {
    const int v = q.tensor(x(obj, z), x(z, obj));
    if (!q.leq(q.unit(), v))
      return CheckReport::fail("converges", {obj, z}, q.name(q.unit()), q.name(v));
  }
  return CheckReport::pass("converges");
}

std::vector<EvPeriodicSeq> enumerate_sequences(int objects, int max_pre, int max_per) {
  std::vector<EvPeriodicSeq> out;
  std::vector<std::vector<int>> pres{{}};
  for (int len = 1; len <= max_pre; ++len)
    for_each_vector(objects, len, [&](const std::vector<int>& v) {
      pres.push_back(v);
      return true;
    });
  for (const auto& pre : pres)
    for (int len = 1; len <= max_per; ++len)
      for_each_vector(objects, len, [&](const std::vector<int>& v) {
        out.push_back(EvPeriodicSeq{pre, v});
        return true;
      });
  return out;
}

EvPeriodicSeq parse_sequence(const VCategory& x, const std::string& text) {
  static const std::regex form(R"(\s*pre\s*=\s*\[([^\]]*)\]\s*;\s*per\s*=\s*\[([^\]]*)\]\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, form))
    throw Error(ErrorKind::ParseError, "sequence must look like pre=[...];per=[...]");
  const auto items = [&](const std::string& body) {
    std::vector<int> out;
    static const std::regex item(R"([^,\s]+)");
    for (auto it = std::sregex_iterator(body.begin(), body.end(), item); it != std::sregex_iterator(); ++it) {
      try {
        out.push_back(x.index_of(it->str()));
      } catch (const Error&) {
        throw Error(ErrorKind::ParseError, "unknown object '" + it->str() + "' in sequence");
      }
    }
    return out;
  };
  EvPeriodicSeq s{items(m[1].str()), items(m[2].str())};
  validate_sequence(x, s);
  return s;
}

std::string render_sequence(const VCategory& x, const EvPeriodicSeq& s) {
  const auto list = [&](const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + x.objects[v[i]];
    return out;
  };
  return "pre=[" + list(s.pre) + "];per=[" + list(s.per) + "]";
}

}  // namespace qcat
