#include <k3bps/error.hpp>
#include <k3bps/hodge.hpp>
#include <k3bps/motivic.hpp>
#include <k3bps/moonshine.hpp>
#include <k3bps/noether_lefschetz.hpp>
#include <k3bps/pairs.hpp>
#include <k3bps/serialize.hpp>
#include <k3bps/su2.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace k3bps;

namespace {

enum class Format { text, json, tsv };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}, {"tsv", Format::tsv}};

void add_format(CLI::App* cmd, Format& fmt) {
  cmd->add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

Json envelope(const std::string& command) {
  Json j;
  j["command"] = command;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void tsv_spin(std::ostream& out, const std::string& prefix, const SpinTable& t) {
  for (const auto& [k, c] : t.entries()) out << prefix << k.first << '\t' << k.second << '\t' << c.get_str() << '\n';
}

void tsv_poly(std::ostream& out, const std::string& prefix, const BiLaurent& p) {
  for (const auto& [e, c] : p.terms()) out << prefix << e.first << '\t' << e.second << '\t' << c.get_str() << '\n';
}

std::string h_label(int h) { return "h=" + std::to_string(h); }

int run_refined(int hmax, bool diamond, Format fmt) {
  const auto triples = refined_tables(hmax);
  if (fmt == Format::json) {
    Json j = envelope("refined");
    j["hmax"] = hmax;
    j["diamond"] = diamond;
    Json tables = Json::array();
    for (const auto& t : triples) {
      Json rec{{"h", t.h}, {"full", to_json(t.full)}};
      if (diamond) {
        rec["diamond"] = to_json(t.diamond);
        rec["circ"] = to_json(t.circ);
      }
      tables.push_back(std::move(rec));
    }
    j["tables"] = std::move(tables);
    emit(j);
  } else if (fmt == Format::tsv) {
    std::cout << "h\ttable\tjl2\tjr2\tvalue\n";
    for (const auto& t : triples) {
      const std::string h = std::to_string(t.h) + '\t';
      tsv_spin(std::cout, h + "full\t", t.full);
      if (diamond) {
        tsv_spin(std::cout, h + "diamond\t", t.diamond);
        tsv_spin(std::cout, h + "circ\t", t.circ);
      }
    }
  } else {
    std::cout << "# rows i = 2 j_L, columns j = 2 j_R\n";
    for (const auto& t : triples) {
      std::cout << render_spin_grid("R " + h_label(t.h), t.full);
      if (diamond) {
        std::cout << render_spin_grid("R diamond " + h_label(t.h), t.diamond);
        std::cout << render_spin_grid("R circ " + h_label(t.h), t.circ);
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int run_kkv(int hmax, Format fmt) {
  const auto reduced = kkv_reduction(refined_invariants(hmax), hmax);
  const auto direct = kkv_from_product(hmax);
  const bool agree = reduced == direct;
  if (fmt == Format::json) {
    Json j = envelope("kkv");
    j["hmax"] = hmax;
    j["cross_check"] = agree;
    Json tables = Json::array();
    for (std::size_t h = 0; h < reduced.size(); ++h) tables.push_back(Json{{"h", h}, {"genus", to_json(reduced[h])}});
    j["tables"] = std::move(tables);
    emit(j);
  } else if (fmt == Format::tsv) {
    std::cout << "h\tg\tvalue\n";
    for (std::size_t h = 0; h < reduced.size(); ++h)
      for (const auto& [g, n] : reduced[h]) std::cout << h << '\t' << g << '\t' << n.get_str() << '\n';
  } else {
    std::cout << render_genus_grid("r^h_g", reduced);
    std::cout << "cross-check against the direct KKV expansion: " << (agree ? "agree" : "DISAGREE") << '\n';
  }
  if (!agree) {
    std::cerr << "falsified: refined reduction and direct KKV expansion disagree\n";
    return 1;
  }
  return 0;
}

int run_ky(int hmax, int nmax, Format fmt) {
  const KyReport r = kawai_yoshioka_check(hmax, nmax);
  if (fmt == Format::json) {
    Json j = envelope("ky-check");
    j["hmax"] = hmax;
    j["nmax"] = nmax;
    j["ok"] = r.ok;
    Json series = Json::array();
    for (std::size_t h = 0; h < r.pairs_series.size(); ++h)
      series.push_back(Json{{"h", h}, {"poly", to_json(r.pairs_series[h])}});
    j["pairs_series"] = std::move(series);
    Json mism = Json::array();
    for (const auto& m : r.mismatches)
      mism.push_back(Json{{"h", m.h}, {"y_exponent", m.y_exponent}, {"expected", to_json(m.expected)},
                          {"actual", to_json(m.actual)}});
    j["mismatches"] = std::move(mism);
    emit(j);
  } else if (fmt == Format::tsv) {
    std::cout << "h\teu\tey\tvalue\n";
    for (std::size_t h = 0; h < r.pairs_series.size(); ++h)
      tsv_poly(std::cout, std::to_string(h) + '\t', r.pairs_series[h]);
  } else {
    std::cout << (r.ok ? "PASS" : "FAIL") << " ky-check hmax=" << hmax << " nmax=" << nmax << '\n';
    for (const auto& m : r.mismatches)
      std::cout << "  witness h=" << m.h << " y^" << m.y_exponent << ": expected " << m.expected.to_string()
                << ", got " << m.actual.to_string() << '\n';
  }
  return r.ok ? 0 : 1;
}

int run_conjecture_c(int h, int kmax, int window, Format fmt) {
  const auto res = conjecture_c(h, kmax, window);
  if (fmt == Format::json) {
    Json j = envelope("conjecture-c");
    j["h"] = h;
    j["kmax"] = kmax;
    j["window"] = window;
    j["partition"] = to_json(res.partition);
    j["invariants"] = to_json(res.invariants);
    emit(j);
  } else if (fmt == Format::tsv) {
    std::cout << "table\tn\tk\teu\tvalue\n";
    for (const auto& [key, p] : res.partition)
      for (const auto& [e, c] : p.terms())
        std::cout << "partition\t" << key.first << '\t' << key.second << '\t' << e.first << '\t' << c.get_str() << '\n';
    for (const auto& [key, p] : res.invariants)
      for (const auto& [e, c] : p.terms())
        std::cout << "log\t" << key.first << '\t' << key.second << '\t' << e.first << '\t' << c.get_str() << '\n';
  } else {
    std::cout << "# virtual Poincare polynomials of P_n(S, k alpha), h=" << h << '\n';
    for (const auto& [key, p] : res.partition)
      std::cout << "n=" << key.first << " k=" << key.second << ": " << p.to_string() << '\n';
  }
  return 0;
}

int run_stu(int d1, int d2, std::optional<int> betti, Format fmt) {
  std::vector<NLProfile> profiles;
  for (int h = 0; h <= 1 + d1 * d2; ++h) profiles.push_back(stu_profile(h, d1, d2));
  const SpinTable table = conjecture_d(d1, d2);
  std::map<int, BiLaurent> bettis;
  if (betti) bettis = stu_betti_prediction(d1, d2, *betti);
  if (fmt == Format::json) {
    Json j = envelope("stu");
    j["d1"] = d1;
    j["d2"] = d2;
    Json prof = Json::array();
    for (const auto& p : profiles) prof.push_back(to_json(p));
    j["profiles"] = std::move(prof);
    j["table"] = to_json(table);
    if (betti) {
      Json b = Json::array();
      for (const auto& [m, p] : bettis) b.push_back(Json{{"m", m}, {"poly", to_json(p)}});
      j["betti"] = std::move(b);
    }
    emit(j);
  } else if (fmt == Format::tsv) {
    std::cout << "section\ta\tb\tvalue\n";
    for (const auto& p : profiles)
      std::cout << "nl\t" << p.h << '\t' << p.discriminant.get_str() << '\t' << p.nl_number.get_str() << '\n';
    tsv_spin(std::cout, "table\t", table);
    for (const auto& [m, p] : bettis)
      for (const auto& [e, c] : p.terms()) std::cout << "betti\t" << m << '\t' << e.first << '\t' << c.get_str() << '\n';
  } else {
    std::cout << "# Noether-Lefschetz profile, class (" << d1 << "," << d2 << ")\n";
    for (const auto& p : profiles)
      std::cout << "h=" << p.h << " discriminant=" << p.discriminant.get_str() << " NL=" << p.nl_number.get_str()
                << " circ: " << p.rnl_circ.to_string() << " diamond: " << p.rnl_diamond.to_string() << '\n';
    std::cout << table.to_string() << '\n';
    std::cout << render_spin_grid("N (" + std::to_string(d1) + "," + std::to_string(d2) + ")", table);
    for (const auto& [m, p] : bettis) std::cout << "m=" << m << ": " << p.to_string() << '\n';
  }
  return 0;
}

int run_motivic(const std::string& strata_file, Format fmt) {
  if (!strata_file.empty()) {
    std::ifstream in(strata_file);
    if (!in) throw DomainError("cannot open " + strata_file);
    const StrataInput s = strata_from_json(Json::parse(in));
    const BiLaurent nearby = nearby_cycle(s), vanishing = vanishing_cycle(s);
    if (fmt == Format::json) {
      Json j = envelope("motivic-strata");
      j["input"] = to_json(s);
      j["nearby_cycle"] = to_json(nearby);
      j["vanishing_cycle"] = to_json(vanishing);
      emit(j);
    } else if (fmt == Format::tsv) {
      std::cout << "quantity\teu\tey\tvalue\n";
      tsv_poly(std::cout, "nearby\t", nearby);
      tsv_poly(std::cout, "vanishing\t", vanishing);
    } else {
      std::cout << "nearby cycle: " << nearby.to_string() << '\n';
      std::cout << "vanishing cycle: " << vanishing.to_string() << '\n';
    }
    return 0;
  }
  const EllipticK3Report r = elliptic_k3_example();
  const std::vector<std::pair<std::string, const BiLaurent*>> rows{
      {"p1", &r.p1_class},           {"k3", &r.k3_class},       {"p1_sf", &r.p1_sf_class},
      {"p1_sf_virtual", &r.p1_sf_virtual}, {"log_sf_q0", &r.log_sf_q0}, {"log_sf_q1", &r.log_sf_q1},
      {"log_f_q0", &r.log_f_q0},     {"log_f_q1", &r.log_f_q1}, {"two_fiber", &r.two_fiber}};
  if (fmt == Format::json) {
    Json j = envelope("motivic-examples");
    j["ok"] = r.ok;
    for (const auto& [name, p] : rows) j[name] = to_json(*p);
    emit(j);
  } else if (fmt == Format::tsv) {
    std::cout << "quantity\teu\tey\tvalue\n";
    for (const auto& [name, p] : rows) tsv_poly(std::cout, name + '\t', *p);
  } else {
    for (const auto& [name, p] : rows) std::cout << name << ": " << p->to_string() << '\n';
    std::cout << (r.ok ? "PASS" : "FAIL") << " elliptic K3 checks\n";
  }
  return r.ok ? 0 : 1;
}

int run_moonshine(std::int64_t n, bool no_ones, Format fmt) {
  const auto d = decompose_m24(n, !no_ones);
  if (fmt == Format::json) {
    Json j = envelope("moonshine");
    j.update(to_json(d));
    emit(j);
  } else if (fmt == Format::tsv) {
    std::cout << "n\tcount\tsummands\n";
    for (const auto& s : d.solutions) std::cout << n << '\t' << s.size() << '\t' << render_sum(s) << '\n';
  } else if (d.solutions.empty()) {
    std::cout << n << ": no decomposition"
              << (d.impossible ? "" : " with at most " + std::to_string(d.max_summands) + " summands") << '\n';
  } else {
    for (const auto& s : d.solutions) std::cout << n << " = " << render_sum(s) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Refined BPS invariants of K3 surfaces and related checks", "k3bps"};
  app.require_subcommand(1);

  Format fmt = Format::text;
  int hmax = 6, nmax = 8, h = 0, kmax = 3, window = 12, d1 = 0, d2 = 1;
  bool diamond = false, no_ones = false;
  std::optional<int> betti;
  std::int64_t n = 0;
  std::string strata;

  auto* refined = app.add_subcommand("refined", "Refined invariants R^h_{jL,jR}");
  refined->add_option("--hmax", hmax, "Largest h")->check(CLI::Range(0, 40));
  refined->add_flag("--diamond", diamond, "Also emit the diamond and circ parts");
  add_format(refined, fmt);

  auto* kkv = app.add_subcommand("kkv", "Unrefined invariants r^h_g");
  kkv->add_option("--hmax", hmax, "Largest h")->check(CLI::Range(0, 40));
  add_format(kkv, fmt);

  auto* ky = app.add_subcommand("ky-check", "Kawai-Yoshioka consistency check");
  ky->add_option("--hmax", hmax, "Largest h")->check(CLI::Range(0, 20));
  ky->add_option("--nmax", nmax, "Largest y exponent")->check(CLI::Range(0, 40));
  add_format(ky, fmt);

  auto* cc = app.add_subcommand("conjecture-c", "Stable pairs in multiple classes");
  cc->set_help_flag("--help", "Print this help message and exit");
  cc->add_option("--h", h, "Base genus parameter")->check(CLI::Range(0, 20));
  cc->add_option("--kmax", kmax, "Largest multiple")->check(CLI::Range(1, 6));
  cc->add_option("--window", window, "Largest y exponent")->check(CLI::Range(-40, 40));
  add_format(cc, fmt);

  auto* stu = app.add_subcommand("stu", "STU model fiber classes");
  stu->add_option("--d1", d1, "First degree")->check(CLI::Range(0, 20));
  stu->add_option("--d2", d2, "Second degree")->check(CLI::Range(0, 20));
  stu->add_option("--betti", betti, "Emit Poincare predictions for m <= M")->check(CLI::Range(-20, 20));
  add_format(stu, fmt);

  auto* mot = app.add_subcommand("motivic-examples", "Motivic vanishing cycle examples");
  mot->add_option("--strata", strata, "JSON strata description of a monomial superpotential");
  add_format(mot, fmt);

  auto* moon = app.add_subcommand("moonshine", "Decompose into M24 dimensions");
  moon->add_option("N", n, "Positive integer")->required()->check(CLI::PositiveNumber);
  moon->add_flag("--no-ones", no_ones, "Exclude the trivial representation");
  add_format(moon, fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    return 2;
  }

  try {
    if (*refined) return run_refined(hmax, diamond, fmt);
    if (*kkv) return run_kkv(hmax, fmt);
    if (*ky) return run_ky(hmax, nmax, fmt);
    if (*cc) return run_conjecture_c(h, kmax, window, fmt);
    if (*stu) return run_stu(d1, d2, betti, fmt);
    if (*mot) return run_motivic(strata, fmt);
    if (*moon) return run_moonshine(n, no_ones, fmt);
  } catch (const Falsification& e) {
    std::cerr << "falsified: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
