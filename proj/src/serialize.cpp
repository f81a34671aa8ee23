#include <k3bps/serialize.hpp>

#include <k3bps/error.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace k3bps {

namespace {

void put_rational(Json& rec, const Rational& c) {
  rec["num"] = integer_to_json(c.get_num());
  rec["den"] = integer_to_json(c.get_den());
}

Rational get_rational(const Json& rec) {
  Rational q(integer_from_json(rec.at("num")), integer_from_json(rec.at("den")));
  if (q.get_den() == 0) throw DomainError("zero denominator in input");
  q.canonicalize();
  return q;
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (fits_int64(z)) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw DomainError("expected an integer");
}

Json to_json(const BiLaurent& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json rec;
    rec["eu"] = e.first;
    rec["ey"] = e.second;
    put_rational(rec, c);
    arr.push_back(std::move(rec));
  }
  return arr;
}

BiLaurent bilaurent_from_json(const Json& j) {
  BiLaurent p;
  for (const auto& rec : j) p.add_term(rec.at("eu").get<int>(), rec.at("ey").get<int>(), get_rational(rec));
  return p;
}

Json to_json(const TruncatedSeries& s) {
  Json j;
  j["var"] = grading_name(s.var());
  j["trunc"] = s.trunc_order();
  j["ywindow"] = s.y_window() ? Json(*s.y_window()) : Json(nullptr);
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  const std::string var = j.at("var").get<std::string>();
  if (var != "q" && var != "v") throw DomainError("unknown grading variable " + var);
  std::optional<int> window;
  if (j.contains("ywindow") && !j.at("ywindow").is_null()) window = j.at("ywindow").get<int>();
  TruncatedSeries s(var == "q" ? Grading::q : Grading::v, j.at("trunc").get<int>(), window);
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() > static_cast<std::size_t>(s.trunc_order()) + 1)
    throw DomainError("series has coefficients beyond its truncation order");
  for (std::size_t d = 0; d < coeffs.size(); ++d) s.set_coeff(static_cast<int>(d), bilaurent_from_json(coeffs[d]));
  return s;
}

Json to_json(const SpinTable& t) {
  Json arr = Json::array();
  for (const auto& [k, c] : t.entries()) {
    Json rec;
    rec["jl2"] = k.first;
    rec["jr2"] = k.second;
    put_rational(rec, c);
    arr.push_back(std::move(rec));
  }
  return arr;
}

SpinTable spin_table_from_json(const Json& j) {
  SpinTable t;
  for (const auto& rec : j) t.add(rec.at("jl2").get<int>(), rec.at("jr2").get<int>(), get_rational(rec));
  return t;
}

Json to_json(const GenusTable& t) {
  Json arr = Json::array();
  for (const auto& [g, n] : t) arr.push_back(Json{{"g", g}, {"n", integer_to_json(n)}});
  return arr;
}

Json to_json(const PairsTable& t) {
  Json arr = Json::array();
  for (const auto& [key, poly] : t) arr.push_back(Json{{"n", key.first}, {"k", key.second}, {"poly", to_json(poly)}});
  return arr;
}

Json to_json(const NLProfile& p) {
  Json j;
  j["h"] = p.h;
  j["degrees"] = p.degrees;
  j["discriminant"] = integer_to_json(p.discriminant);
  j["nl_number"] = integer_to_json(p.nl_number);
  j["rnl_circ"] = to_json(p.rnl_circ);
  j["rnl_diamond"] = to_json(p.rnl_diamond);
  return j;
}

NLProfile nl_profile_from_json(const Json& j) {
  NLProfile p;
  p.h = j.at("h").get<int>();
  p.degrees = j.at("degrees").get<std::vector<long>>();
  p.discriminant = integer_from_json(j.at("discriminant"));
  p.nl_number = integer_from_json(j.at("nl_number"));
  p.rnl_circ = spin_table_from_json(j.at("rnl_circ"));
  p.rnl_diamond = spin_table_from_json(j.at("rnl_diamond"));
  return p;
}

Json to_json(const EqPoincare& e) { return Json{{"even", to_json(e.even)}, {"odd", to_json(e.odd)}}; }

EqPoincare eq_poincare_from_json(const Json& j) {
  return {bilaurent_from_json(j.at("even")), bilaurent_from_json(j.at("odd"))};
}

Json to_json(const StrataInput& s) {
  Json j;
  j["exponents"] = s.exponents;
  j["ambient_dim"] = s.ambient_dim;
  if (s.ambient_class) j["ambient_class"] = to_json(*s.ambient_class);
  Json strata = Json::array();
  for (const auto& st : s.strata) {
    Json rec;
    rec["indices"] = st.indices;
    rec["open_class"] = to_json(st.open_class);
    if (st.cover) rec["cover"] = to_json(*st.cover);
    strata.push_back(std::move(rec));
  }
  j["strata"] = std::move(strata);
  return j;
}

StrataInput strata_from_json(const Json& j) {
  StrataInput s;
  s.exponents = j.at("exponents").get<std::vector<int>>();
  s.ambient_dim = j.at("ambient_dim").get<int>();
  if (j.contains("ambient_class")) s.ambient_class = bilaurent_from_json(j.at("ambient_class"));
  if (j.contains("strata")) {
    for (const auto& rec : j.at("strata")) {
      Stratum st;
      st.indices = rec.at("indices").get<std::vector<int>>();
      st.open_class = bilaurent_from_json(rec.at("open_class"));
      if (rec.contains("cover")) st.cover = eq_poincare_from_json(rec.at("cover"));
      s.strata.push_back(std::move(st));
    }
  }
  validate(s);
  return s;
}

Json to_json(const M24Decomposition& d) {
  Json j;
  j["n"] = d.n;
  j["allow_ones"] = d.allow_ones;
  j["max_summands"] = d.max_summands;
  j["min_count"] = d.min_count ? Json(*d.min_count) : Json(nullptr);
  j["solutions"] = d.solutions;
  j["cap_reached"] = d.cap_reached;
  j["impossible"] = d.impossible;
  return j;
}

std::string render_spin_grid(const std::string& title, const SpinTable& t) {
  int rows = 0, cols = 0;
  for (const auto& [k, c] : t.entries()) {
    rows = std::max(rows, k.first);
    cols = std::max(cols, k.second);
  }
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows) + 1,
                                              std::vector<std::string>(static_cast<std::size_t>(cols) + 1));
  std::size_t width = 1;
  for (const auto& [k, c] : t.entries()) {
    auto& cell = cells[static_cast<std::size_t>(k.first)][static_cast<std::size_t>(k.second)];
    cell = c.get_str();
    width = std::max(width, cell.size());
  }
  width = std::max(width, std::to_string(cols).size());
  std::ostringstream out;
  out << title << '\n';
  out << std::setw(5) << "i\\j" << " |";
  for (int j = 0; j <= cols; ++j) out << ' ' << std::setw(static_cast<int>(width)) << j;
  out << '\n';
  for (int i = 0; i <= rows; ++i) {
    out << std::setw(5) << i << " |";
    for (int j = 0; j <= cols; ++j)
      out << ' ' << std::setw(static_cast<int>(width)) << cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    out << '\n';
  }
  return out.str();
}

std::string render_genus_grid(const std::string& title, const std::vector<GenusTable>& tables) {
  int gmax = 0;
  std::size_t width = 1;
  for (const auto& t : tables)
    for (const auto& [g, n] : t) {
      gmax = std::max(gmax, g);
      width = std::max(width, n.get_str().size());
    }
  std::ostringstream out;
  out << title << '\n';
  out << std::setw(5) << "g\\h" << " |";
  for (std::size_t h = 0; h < tables.size(); ++h) out << ' ' << std::setw(static_cast<int>(width)) << h;
  out << '\n';
  for (int g = 0; g <= gmax; ++g) {
    out << std::setw(5) << g << " |";
    for (const auto& t : tables) {
      auto it = t.find(g);
      out << ' ' << std::setw(static_cast<int>(width)) << (it == t.end() ? std::string() : it->second.get_str());
    }
    out << '\n';
  }
  return out.str();
}

std::string render_sum(const std::vector<std::int64_t>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace k3bps
