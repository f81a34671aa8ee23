#include <k3bps/error.hpp>
#include <k3bps/hodge.hpp>
#include <k3bps/motivic.hpp>
#include <k3bps/moonshine.hpp>
#include <k3bps/noether_lefschetz.hpp>
#include <k3bps/pairs.hpp>
#include <k3bps/su2.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace k3bps;

namespace {

py::object to_py(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::object to_py(const Rational& q) {
  if (q.get_den() == 1) return to_py(q.get_num());
  return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

Rational from_py(const py::handle& h) {
  const auto fraction = py::module_::import("fractions").attr("Fraction")(h);
  const std::string num = py::str(fraction.attr("numerator")), den = py::str(fraction.attr("denominator"));
  return Rational(Integer(num), Integer(den));
}

py::dict to_py(const SpinTable& t) {
  py::dict d;
  for (const auto& [k, c] : t.entries()) d[py::make_tuple(k.first, k.second)] = to_py(c);
  return d;
}

SpinTable spin_from_py(const py::dict& d) {
  SpinTable t;
  for (const auto& [k, v] : d) {
    const auto key = k.cast<std::pair<int, int>>();
    t.add(key.first, key.second, from_py(v));
  }
  return t;
}

py::dict to_py(const BiLaurent& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::make_tuple(e.first, e.second)] = to_py(c);
  return d;
}

py::dict to_py(const GenusTable& g) {
  py::dict d;
  for (const auto& [genus, n] : g) d[py::int_(genus)] = to_py(n);
  return d;
}

py::dict to_py(const PairsTable& t) {
  py::dict d;
  for (const auto& [k, p] : t) d[py::make_tuple(k.first, k.second)] = to_py(p);
  return d;
}

py::list genus_list(const std::vector<GenusTable>& tables) {
  py::list out;
  for (const auto& g : tables) out.append(to_py(g));
  return out;
}

}  // namespace

PYBIND11_MODULE(_k3bps, m) {
  m.doc() = "Refined BPS invariants of K3 surfaces";

  py::register_exception<Falsification>(m, "Falsification", PyExc_ArithmeticError);
  py::register_exception<WindowError>(m, "WindowError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("refined_tables", [](int hmax) {
    py::list out;
    for (const auto& t : refined_tables(hmax)) {
      py::dict d;
      d["h"] = t.h;
      d["full"] = to_py(t.full);
      d["diamond"] = to_py(t.diamond);
      d["circ"] = to_py(t.circ);
      out.append(d);
    }
    return out;
  }, py::arg("hmax"), "R^h, R^{h,diamond} and R^{h,circ} for h = 0..hmax, keyed by (2 j_L, 2 j_R).");

  m.def("kkv", [](int hmax) { return genus_list(kkv_reduction(refined_invariants(hmax), hmax)); },
        py::arg("hmax"), "r^h_g from the refined tables, one dict {g: r} per h.");
  m.def("kkv_direct", [](int hmax) { return genus_list(kkv_from_product(hmax)); }, py::arg("hmax"),
        "r^h_g read off the unrefined product directly.");

  m.def("decompose", [](const py::dict& poly) {
    BiLaurent p;
    for (const auto& [k, v] : poly) {
      const auto key = k.cast<std::pair<int, int>>();
      p.add_term(key.first, key.second, from_py(v));
    }
    return to_py(decompose(p));
  }, py::arg("poly"), "Character decomposition of {(e_u, e_y): c}.");
  m.def("unrefine", [](const py::dict& table) { return to_py(unrefine(spin_from_py(table))); }, py::arg("table"));
  m.def("spin_table_string", [](const py::dict& table) { return spin_from_py(table).to_string(); }, py::arg("table"));

  m.def("ky_check", [](int hmax, int nmax) {
    const auto r = kawai_yoshioka_check(hmax, nmax);
    py::dict d;
    d["ok"] = r.ok;
    py::list series;
    for (const auto& p : r.pairs_series) series.append(to_py(p));
    d["pairs_series"] = series;
    py::list mism;
    for (const auto& w : r.mismatches) mism.append(py::make_tuple(w.h, w.y_exponent));
    d["mismatches"] = mism;
    return d;
  }, py::arg("hmax"), py::arg("nmax"));

  m.def("conjecture_c", [](int h, int kmax, int window) {
    const auto r = conjecture_c(h, kmax, window);
    py::dict d;
    d["partition"] = to_py(r.partition);
    d["invariants"] = to_py(r.invariants);
    return d;
  }, py::arg("h"), py::arg("kmax") = 3, py::arg("window") = 12,
     "Partition-function and log coefficients keyed by (n, k); polynomials keyed by (e_u, e_y).");

  m.def("stu_nl_series", [](int n) {
    py::list out;
    for (const auto& c : stu_nl_series(n)) out.append(to_py(c));
    return out;
  }, py::arg("n"));
  m.def("conjecture_d", [](int d1, int d2) { return to_py(conjecture_d(d1, d2)); }, py::arg("d1"), py::arg("d2"));
  m.def("stu_betti", [](int d1, int d2, int mmax) {
    py::dict d;
    for (const auto& [k, p] : stu_betti_prediction(d1, d2, mmax)) d[py::int_(k)] = to_py(p);
    return d;
  }, py::arg("d1"), py::arg("d2"), py::arg("mmax"));

  m.def("elliptic_k3", [] {
    const auto r = elliptic_k3_example();
    py::dict d;
    d["ok"] = r.ok;
    d["log_sf_q0"] = to_py(r.log_sf_q0);
    d["log_sf_q1"] = to_py(r.log_sf_q1);
    d["log_f_q0"] = to_py(r.log_f_q0);
    d["log_f_q1"] = to_py(r.log_f_q1);
    d["two_fiber"] = to_py(r.two_fiber);
    return d;
  });

  m.def("moonshine", [](std::int64_t n, bool allow_ones, int max_summands) {
    const auto r = decompose_m24(n, allow_ones, max_summands);
    py::dict d;
    d["min_count"] = r.min_count ? py::object(py::int_(*r.min_count)) : py::object(py::none());
    d["solutions"] = r.solutions;
    d["cap_reached"] = r.cap_reached;
    d["impossible"] = r.impossible;
    return d;
  }, py::arg("n"), py::arg("allow_ones") = true, py::arg("max_summands") = 6);
}
