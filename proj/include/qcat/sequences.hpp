#pragma once

#include <vector>

#include "qcat/vdist.hpp"

namespace qcat {

/// The sequence pre ++ per ++ per ++ ... of object indices.
struct EvPeriodicSeq {
  std::vector<int> pre;
  std::vector<int> per;

  int at(long n) const;
  bool operator==(const EvPeriodicSeq& other) const = default;
};

void validate_sequence(const VCategory& x, const EvPeriodicSeq& s);
EvPeriodicSeq constant_sequence(int obj);

/// join over N of meet over n, m >= N of a(x_n, x_m).
int cauchy_degree(const VCategory& x, const EvPeriodicSeq& s);
bool is_cauchy(const VCategory& x, const EvPeriodicSeq& s);

struct InducedWeights {
  Weight phi;  // left: meet over the tail of a(x_n, -)
  Weight psi;  // right: meet over the tail of a(-, x_n)
};
InducedWeights induced_weights(const VCategory& x, const EvPeriodicSeq& s);

/// k <= a(x, z) * a(z, x) for every object z recurring in the period.
CheckReport converges_to(const VCategory& x, const EvPeriodicSeq& s, int obj);

/// All sequences with |pre| <= max_pre and 1 <= |per| <= max_per.
std::vector<EvPeriodicSeq> enumerate_sequences(int objects, int max_pre, int max_per);

/// Parses "pre=[a,b];per=[c]" against the object names of x.
EvPeriodicSeq parse_sequence(const VCategory& x, const std::string& text);
std::string render_sequence(const VCategory& x, const EvPeriodicSeq& s);

}  // namespace qcat
