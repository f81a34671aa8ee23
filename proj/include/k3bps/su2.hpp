#pragma once

#include <k3bps/bilaurent.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k3bps {

/// Multiplicities of SU(2)_L x SU(2)_R representations [j_L, j_R], keyed by
/// doubled spins (2 j_L, 2 j_R). Zero multiplicities are never stored.
class SpinTable {
 public:
  using Key = std::pair<int, int>;  // (jl2, jr2)
  using Entries = std::map<Key, Rational>;

  SpinTable() = default;
  SpinTable(std::initializer_list<std::pair<const Key, Rational>> init);

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Rational at(int jl2, int jr2) const;
  void add(int jl2, int jr2, const Rational& c);

  SpinTable& operator+=(const SpinTable& o);
  SpinTable& operator-=(const SpinTable& o);
  friend SpinTable operator+(SpinTable a, const SpinTable& b) { return a += b; }
  friend SpinTable operator-(SpinTable a, const SpinTable& b) { return a -= b; }
  friend SpinTable operator*(const Rational& c, const SpinTable& t);
  bool operator==(const SpinTable& o) const = default;

  bool is_integral() const;
  bool is_nonnegative() const;
  int max_jl2() const;

  /// Sum of c [j_L]_y [j_R]_u over all entries.
  BiLaurent realize() const;

  /// "488[0,0] + [1/2,0] + [1/2,1]" in canonical key order.
  std::string to_string() const;

 private:
  Entries entries_;
};

/// Genus-indexed integer table (n_g or r^h_g).
using GenusTable = std::map<int, Integer>;

enum class CharVar { u, y };

/// [j]_x = x^{-2j} + x^{-2j+2} + ... + x^{2j}, given j2 = 2j >= 0.
BiLaurent character(int j2, CharVar var);

/// Inverts the character expansion of a Laurent polynomial symmetric under
/// u -> 1/u and y -> 1/y by peeling the lexicographically largest (e_y, e_u).
SpinTable decompose(const BiLaurent& p);

/// Clebsch-Gordan product applied independently to the left and right spins.
SpinTable tensor(const SpinTable& a, const SpinTable& b);

/// Basis change sum (-1)^{2j_R}(2j_R+1) N_{j_L,j_R} [j_L] = sum_g n_g I_g with
/// I_g = (2[0] + [1/2])^{g}. Throws Falsification on a non-integral n_g.
GenusTable unrefine(const SpinTable& t);

/// r^h_g for h = 0..hmax from per-h refined tables (index = h).
std::vector<GenusTable> kkv_reduction(const std::vector<SpinTable>& tables, int hmax);

std::string spin_label(int j2);

}  // namespace k3bps
