#pragma once

#include <k3bps/motivic.hpp>
#include <k3bps/moonshine.hpp>
#include <k3bps/noether_lefschetz.hpp>
#include <k3bps/pairs.hpp>
#include <k3bps/series.hpp>
#include <k3bps/su2.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace k3bps {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; readers accept both.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

/// Sorted records {eu, ey, num, den}.
Json to_json(const BiLaurent& p);
BiLaurent bilaurent_from_json(const Json& j);

/// {var, trunc, ywindow, coeffs: [[records]...]}.
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

/// Sorted records {jl2, jr2, num, den}.
Json to_json(const SpinTable& t);
SpinTable spin_table_from_json(const Json& j);

/// Records {g, n}.
Json to_json(const GenusTable& t);

/// Records {n, k, poly}.
Json to_json(const PairsTable& t);

Json to_json(const NLProfile& p);
NLProfile nl_profile_from_json(const Json& j);

Json to_json(const EqPoincare& e);
EqPoincare eq_poincare_from_json(const Json& j);

Json to_json(const StrataInput& s);
StrataInput strata_from_json(const Json& j);

Json to_json(const M24Decomposition& d);

/// Grid in the layout rows i = 2 j_L, columns j = 2 j_R; blank for zero.
std::string render_spin_grid(const std::string& title, const SpinTable& t);

/// Grid with rows g and columns h (index of `tables`).
std::string render_genus_grid(const std::string& title, const std::vector<GenusTable>& tables);

/// "2024+231".
std::string render_sum(const std::vector<std::int64_t>& parts);

}  // namespace k3bps
