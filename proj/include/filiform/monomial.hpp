#pragma once

#include <numeric>
#include <string>
#include <vector>

namespace filiform {

/// Strictly increasing generator indices i_1 < ... < i_q of e^{i_1}^...^e^{i_q}.
using Monomial = std::vector<int>;

inline int weight(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }
inline int degree(const Monomial& m) { return static_cast<int>(m.size()); }

/// Sorts a wedge word in place and returns the sign of the sorting
/// permutation, or 0 when an index repeats (the word vanishes).
int canonicalize(std::vector<int>& word);

/// "e2^e3^e13"; the empty monomial prints as "1".
std::string monomial_text(const Monomial& m, char letter = 'e');

}  // namespace filiform
