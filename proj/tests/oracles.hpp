// oracles.hpp -- definitional reference computations on plain strings,
// independent of the library's bit-packed words, automaton and DP.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::string word(std::uint64_t code, std::size_t n) {
  std::string s(n, 'H');
  for (std::size_t i = 0; i < n; ++i) {
    if ((code >> (n - 1 - i)) & 1u) s[i] = 'T';
  }
  return s;
}

inline std::vector<std::string> all_words(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) out.push_back(word(c, n));
  return out;
}

/// End positions k (1-based) with x[k-l+1..k] == a.
inline std::size_t count(const std::string& a, const std::string& x) {
  std::size_t n = 0;
  for (std::size_t k = a.size(); k <= x.size(); ++k) {
    if (x.compare(k - a.size(), a.size(), a) == 0) ++n;
  }
  return n;
}

inline std::vector<std::size_t> cor(const std::string& a, const std::string& b) {
  std::vector<std::size_t> out;
  const std::size_t l = a.size();
  for (std::size_t k = 1; k < l; ++k) {
    if (a.substr(l - k) == b.substr(0, k)) out.push_back(k);
  }
  return out;
}

inline std::uint64_t cor_number(const std::string& a, const std::string& b) {
  std::uint64_t v = 0;
  for (auto k : cor(a, b)) v += std::uint64_t{1} << k;
  return v;
}

inline std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> joint(const std::string& a, const std::string& b,
                                                                          std::size_t n) {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    const std::string x = word(c, n);
    ++out[{count(a, x), count(b, x)}];
  }
  return out;
}

}  // namespace oracle
