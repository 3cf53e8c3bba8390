#pragma once

namespace posetsym {

inline constexpr int kDefaultDegreeBound = 10;
// Hard ceiling for the degree bound override (plucking operations).
inline constexpr int kMaxDegreeBound = 12;
// Largest ground set for exhaustive scans over all posets.
inline constexpr int kMaxFullScan = 7;

// Degree bound for symmetric-function work: 10 unless POSETSYM_DEGREE_BOUND
// holds an integer in [1, 12]. Read once.
int degree_bound();
// Throws SizeError when n exceeds degree_bound().
void check_degree(int n, const char* what);

}  // namespace posetsym
