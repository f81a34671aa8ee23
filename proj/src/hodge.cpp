#include <k3bps/hodge.hpp>

#include <k3bps/error.hpp>
#include <k3bps/parallel.hpp>

#include <map>
#include <mutex>

namespace k3bps {

namespace {

BiLaurent adams(const BiLaurent& p, int r) {
  BiLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(r * e.first, r * e.second, c);
  return out;
}

// Cache of the refined tables so repeated queries (multiple covers, NL sums)
// do not re-expand the products.
struct TableCache {
  std::mutex mutex;
  std::vector<SpinTable> tables;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

}  // namespace

BiLaurent hodge_factor_base() {
  BiLaurent b = diamond_factor_base();
  b += BiLaurent(20);
  return b;
}

BiLaurent diamond_factor_base() {
  return BiLaurent::monomial(1, -1, -1) + BiLaurent::monomial(1, -1, 1) +
         BiLaurent::monomial(1, 1, -1) + BiLaurent::monomial(1, 1, 1);
}

BiLaurent kkv_factor_base() { return BiLaurent::monomial(2, 0, -1) + BiLaurent(20) + BiLaurent::monomial(2, 0, 1); }

TruncatedSeries plethystic_product(const BiLaurent& base, int hmax) {
  if (hmax < 0) throw DomainError("product truncation must be nonnegative");
  TruncatedSeries log(Grading::q, hmax);
  for (int d = 1; d <= hmax; ++d) {
    BiLaurent ld;
    for (int r = 1; r <= d; ++r)
      if (d % r == 0) ld += adams(base, r) * Rational(1, r);
    log.set_coeff(d, std::move(ld));
  }
  return series_exp(log);
}

TruncatedSeries product_by_factors(const BiLaurent& base, int hmax) {
  if (hmax < 0) throw DomainError("product truncation must be nonnegative");
  TruncatedSeries acc = TruncatedSeries::one(Grading::q, hmax);
  for (int n = 1; n <= hmax; ++n) {
    for (const auto& [e, c] : base.terms()) {
      if (!is_integer(c)) throw DomainError("product_by_factors: non-integral exponent");
      const long exponent = -c.get_num().get_si();
      acc = series_mul(acc, expand_factor(BiLaurent::monomial(1, e.first, e.second), n, exponent, hmax));
    }
  }
  return acc;
}

TruncatedSeries hodge_product(int hmax) { return plethystic_product(hodge_factor_base(), hmax); }

TruncatedSeries diamond_product(int hmax) { return plethystic_product(diamond_factor_base(), hmax); }

std::vector<RefinedTriple> refined_tables(int hmax) {
  const auto full = hodge_product(hmax);
  const auto diamond = diamond_product(hmax);
  std::vector<RefinedTriple> out(static_cast<std::size_t>(hmax) + 1);
  parallel_for(out.size(), [&](std::size_t i) {
    const int h = static_cast<int>(i);
    auto& t = out[i];
    t.h = h;
    t.full = decompose(full.coeff(h));
    t.diamond = decompose(diamond.coeff(h));
    t.circ = t.full - t.diamond;
  });
  for (const auto& t : out) {
    for (const auto& [k, c] : t.circ.entries()) {
      if (c < 0 || !is_integer(c))
        throw Falsification("R^{" + std::to_string(t.h) + ",circ} entry [" + spin_label(k.first) +
                            "," + spin_label(k.second) + "] = " + c.get_str() +
                            " is not a nonnegative integer");
    }
  }
  return out;
}

std::vector<SpinTable> refined_invariants(int hmax) {
  if (hmax < 0) return {};
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  if (c.tables.size() <= static_cast<std::size_t>(hmax)) {
    const auto full = hodge_product(hmax);
    std::vector<SpinTable> tables(static_cast<std::size_t>(hmax) + 1);
    parallel_for(tables.size(), [&](std::size_t i) {
      tables[i] = decompose(full.coeff(static_cast<int>(i)));
    });
    c.tables = std::move(tables);
  }
  return {c.tables.begin(), c.tables.begin() + hmax + 1};
}

SpinTable refined_invariant(int h) {
  if (h < 0) return {};
  return refined_invariants(h)[static_cast<std::size_t>(h)];
}

std::vector<GenusTable> kkv_from_product(int hmax) {
  const auto series = product_by_factors(kkv_factor_base(), hmax);
  const BiLaurent basis = BiLaurent::y(1) - BiLaurent(2) + BiLaurent::y(-1);
  std::vector<GenusTable> out;
  for (int h = 0; h <= hmax; ++h) {
    BiLaurent rest = series.coeff(h);
    GenusTable t;
    while (!rest.is_zero()) {
      const int g = rest.y_range()->second;
      if (g < 0) throw Falsification("KKV product coefficient is not symmetric in y");
      const Rational lead = rest.coeff(0, g);  // = (-1)^g r_g
      const Rational r = lead * sign_power(g);
      if (!is_integer(r)) throw Falsification("non-integral KKV count r^" + std::to_string(h) + "_" + std::to_string(g));
      t[g] = r.get_num();
      rest -= basis.pow(static_cast<unsigned>(g)) * lead;
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace k3bps
