// The binary abelian code over Z7 x Z7 used across the test suites: its 11
// defining zeros, the 31-character complete zero set, and the 12-step
// shifting trace for the case where (1,3) (hence (2,6) and (4,5)) is a
// nonzero of the codeword. The trace is stored as (shift, extension) pairs
// applied to the previous independent set; CertificateBuilder converts it
// into explicit certificate steps and throws if any step is invalid.

#pragma once

#include <vector>

#include "abelian/shift.hpp"

namespace z7z7 {

inline abelian::GroupSpec group() { return abelian::make_group({7, 7}); }

inline std::vector<abelian::GElem> defining_zeros() {
  return {{0, 0}, {0, 1}, {0, 3}, {1, 0}, {3, 0}, {1, 1}, {1, 2}, {1, 4}, {3, 3}, {3, 5}, {3, 6}};
}

inline std::vector<abelian::GElem> complete_zeros() {
  return {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
          {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0},
          {1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 2}, {2, 4}, {4, 1}, {4, 2}, {4, 4},
          {3, 3}, {3, 5}, {3, 6}, {5, 3}, {5, 5}, {5, 6}, {6, 3}, {6, 5}, {6, 6}};
}

struct TraceStep {
  abelian::GElem shift;
  abelian::GElem extension;
};

inline std::vector<TraceStep> shifting_trace() {
  return {
      {{0, 0}, {1, 3}},
      {{6, 6}, {1, 3}},
      {{0, 5}, {1, 3}},
      {{6, 5}, {2, 6}},
      {{0, 2}, {4, 5}},
      {{0, 3}, {2, 6}},
      {{5, 1}, {2, 6}},
      {{2, 2}, {4, 5}},
      {{5, 3}, {2, 6}},
      {{5, 2}, {1, 3}},
      {{6, 4}, {1, 3}},
      {{1, 1}, {2, 6}},
  };
}

/// Builds the 12-step certificate over the complete zero set by replaying
/// the trace through the rule-checking builder.
inline abelian::ShiftCertificate certificate() {
  abelian::GroupSpec g = group();
  abelian::CharSet zeros(g, complete_zeros());
  abelian::CertificateBuilder builder(zeros);
  for (const TraceStep& step : shifting_trace()) {
    builder.shift(step.shift);
    builder.extend(step.extension);
  }
  return builder.certificate();
}

/// Chain for the case where the (1,3) orbit consists of zeros but (1,5) is
/// a nonzero: walk the row of (1,*) characters downward, then sweep the
/// (0,*) row, extending by (1,5) each time. Twelve steps.
inline abelian::ShiftCertificate row_chain_15() {
  abelian::GroupSpec g = group();
  std::vector<abelian::GElem> zeros = complete_zeros();
  for (const abelian::GElem& e :
       {abelian::GElem{1, 3}, abelian::GElem{2, 6}, abelian::GElem{4, 5}}) {
    zeros.push_back(e);
  }
  abelian::CertificateBuilder builder(abelian::CharSet(g, zeros));
  builder.extend({1, 5});
  for (int step = 0; step < 5; ++step) {
    builder.shift({0, 6});
    builder.extend({1, 5});
  }
  builder.shift({6, 0});
  builder.extend({1, 5});
  for (int step = 0; step < 5; ++step) {
    builder.shift({0, 6});
    builder.extend({1, 5});
  }
  return builder.certificate();
}

/// Chain for the case where the (1,3) and (1,5) orbits are zeros but (1,6)
/// is a nonzero; fourteen steps by the same row-then-sweep pattern.
inline abelian::ShiftCertificate row_chain_16() {
  abelian::GroupSpec g = group();
  std::vector<abelian::GElem> zeros = complete_zeros();
  for (const abelian::GElem& e :
       {abelian::GElem{1, 3}, abelian::GElem{2, 6}, abelian::GElem{4, 5},
        abelian::GElem{1, 5}, abelian::GElem{2, 3}, abelian::GElem{4, 6}}) {
    zeros.push_back(e);
  }
  abelian::CertificateBuilder builder(abelian::CharSet(g, zeros));
  builder.extend({1, 6});
  for (int step = 0; step < 6; ++step) {
    builder.shift({0, 6});
    builder.extend({1, 6});
  }
  builder.shift({6, 0});
  builder.extend({1, 6});
  for (int step = 0; step < 6; ++step) {
    builder.shift({0, 6});
    builder.extend({1, 6});
  }
  return builder.certificate();
}

}  // namespace z7z7
