#include <k3bps/su2.hpp>

#include <k3bps/error.hpp>

#include <sstream>

namespace k3bps {

SpinTable::SpinTable(std::initializer_list<std::pair<const Key, Rational>> init) {
  for (const auto& [k, c] : init) add(k.first, k.second, c);
}

Rational SpinTable::at(int jl2, int jr2) const {
  auto it = entries_.find({jl2, jr2});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SpinTable::add(int jl2, int jr2, const Rational& c) {
  if (jl2 < 0 || jr2 < 0) throw DomainError("negative doubled spin");
  if (c == 0) return;
  auto [it, inserted] = entries_.try_emplace(Key{jl2, jr2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

SpinTable& SpinTable::operator+=(const SpinTable& o) {
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, c);
  return *this;
}

SpinTable& SpinTable::operator-=(const SpinTable& o) {
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, -c);
  return *this;
}

SpinTable operator*(const Rational& c, const SpinTable& t) {
  SpinTable r;
  for (const auto& [k, v] : t.entries_) r.add(k.first, k.second, c * v);
  return r;
}

bool SpinTable::is_integral() const {
  for (const auto& [k, c] : entries_)
    if (!is_integer(c)) return false;
  return true;
}

bool SpinTable::is_nonnegative() const {
  for (const auto& [k, c] : entries_)
    if (c < 0) return false;
  return true;
}

int SpinTable::max_jl2() const {
  int m = 0;
  for (const auto& [k, c] : entries_) m = std::max(m, k.first);
  return m;
}

BiLaurent SpinTable::realize() const {
  BiLaurent p;
  for (const auto& [k, c] : entries_)
    p += (character(k.first, CharVar::y) * character(k.second, CharVar::u)) * c;
  return p;
}

std::string spin_label(int j2) {
  return j2 % 2 == 0 ? std::to_string(j2 / 2) : std::to_string(j2) + "/2";
}

std::string SpinTable::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : entries_) {
    Rational v = c;
    bool negative = v < 0;
    if (negative) v = -v;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (v != 1) out << v.get_str();
    out << '[' << spin_label(k.first) << ',' << spin_label(k.second) << ']';
  }
  return out.str();
}

BiLaurent character(int j2, CharVar var) {
  if (j2 < 0) throw DomainError("character: negative spin");
  BiLaurent p;
  for (int e = -j2; e <= j2; e += 2) {
    if (var == CharVar::u)
      p.add_term(e, 0, 1);
    else
      p.add_term(0, e, 1);
  }
  return p;
}

SpinTable decompose(const BiLaurent& p) {
  if (!p.is_symmetric())
    throw DomainError("decompose: input is not symmetric under u -> 1/u and y -> 1/y");
  SpinTable t;
  BiLaurent rest = p;
  while (!rest.is_zero()) {
    // Extremal term: largest e_y, then largest e_u among those.
    auto best = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      const auto& [eu, ey] = it->first;
      if (ey > best->first.second || (ey == best->first.second && eu > best->first.first)) best = it;
    }
    const int jr2 = best->first.first;
    const int jl2 = best->first.second;
    const Rational c = best->second;
    if (jr2 < 0 || jl2 < 0) throw Error("decompose: nonzero remainder after peeling (internal)");
    t.add(jl2, jr2, c);
    rest -= (character(jl2, CharVar::y) * character(jr2, CharVar::u)) * c;
  }
  return t;
}

SpinTable tensor(const SpinTable& a, const SpinTable& b) {
  SpinTable r;
  for (const auto& [ka, ca] : a.entries()) {
    for (const auto& [kb, cb] : b.entries()) {
      const Rational c = ca * cb;
      for (int l = std::abs(ka.first - kb.first); l <= ka.first + kb.first; l += 2)
        for (int rr = std::abs(ka.second - kb.second); rr <= ka.second + kb.second; rr += 2)
          r.add(l, rr, c);
    }
  }
  return r;
}

GenusTable unrefine(const SpinTable& t) {
  BiLaurent lhs;
  for (const auto& [k, c] : t.entries()) {
    const int weight = sign_power(k.second) * (k.second + 1);
    lhs += character(k.first, CharVar::y) * (c * weight);
  }
  const BiLaurent ig_base = BiLaurent::y(-1) + BiLaurent(2) + BiLaurent::y(1);
  GenusTable out;
  while (!lhs.is_zero()) {
    const int g = lhs.y_range()->second;
    if (g < 0) throw Falsification("unrefine: [j_L]-content is not symmetric");
    const Rational c = lhs.coeff(0, g);
    if (!is_integer(c))
      throw Falsification("unrefine: non-integral genus-" + std::to_string(g) +
                          " coefficient " + c.get_str());
    out[g] = c.get_num();
    lhs -= ig_base.pow(static_cast<unsigned>(g)) * c;
  }
  return out;
}

std::vector<GenusTable> kkv_reduction(const std::vector<SpinTable>& tables, int hmax) {
  if (hmax < 0 || static_cast<std::size_t>(hmax) >= tables.size())
    throw DomainError("kkv_reduction: hmax outside the supplied tables");
  std::vector<GenusTable> out;
  out.reserve(static_cast<std::size_t>(hmax) + 1);
  for (int h = 0; h <= hmax; ++h) out.push_back(unrefine(tables[static_cast<std::size_t>(h)]));
  return out;
}

}  // namespace k3bps
