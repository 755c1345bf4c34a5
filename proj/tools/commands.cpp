#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qinv/identities.hpp"
#include "qinv/invseq.hpp"
#include "qinv/json.hpp"
#include "qinv/paths.hpp"
#include "qinv/qcalc.hpp"
#include "qinv/qoperator.hpp"
#include "qinv/qstirling.hpp"
#include "qinv/recurrence.hpp"

#ifndef QINV_DATA_DIR
#define QINV_DATA_DIR "data"
#endif

namespace qinv::cli {

namespace {

using nlohmann::json;

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += sep;
    s += v[i];
  }
  return s;
}

template <typename T>
std::string join_ints(const std::vector<T>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, Integer>) {
      s.push_back(x.get_str());
    } else {
      s.push_back(std::to_string(x));
    }
  }
  return join(s, ",");
}

template <typename Fn>
Check timed(std::string name, Fn&& fn) {
  Check c;
  c.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::tie(c.pass, c.detail) = fn();
  } catch (const std::exception& ex) {
    c.pass = false;
    c.detail = std::string("exception: ") + ex.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

using Result = std::pair<bool, std::string>;

const std::map<Var, long> kAllOnesButQ{{Var::x, 1}, {Var::y, 1}, {Var::z, 1}, {Var::p, 1}};

QLaurent f_of_q(int n) { return to_qlaurent(eval_partial(F(n), kAllOnesButQ)); }

// -------------------------------------------------------------------------
// suites

std::vector<Check> suite_recurrence(int max_n) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(timed("F(" + std::to_string(n) + ") == brute_F", [&] {
      return Result{F(n) == brute_F(n), ""};
    }));
    out.push_back(timed("F(" + std::to_string(n) + ";1,1,p,1) == product formula", [&] {
      return Result{eval_partial(F(n), {{Var::y, 1}, {Var::z, 1}, {Var::q, 1}}) == product_formula(n), ""};
    }));
    out.push_back(timed("f_" + std::to_string(n) + "(1) == n!", [&] {
      Integer v = evaluate(f_of_q(n), 1);
      return Result{v == factorial(n), v.get_str()};
    }));
  }
  return out;
}

std::vector<Check> suite_paths(int max_n) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n) {
    const std::string tag = "(n=" + std::to_string(n) + ")";
    const auto wi = weakly_increasing(n);
    const auto paths = all_paths(n);
    out.push_back(timed("Catalan count " + tag, [&] {
      bool ok = Integer(static_cast<long>(wi.size())) == catalan(n) &&
                Integer(static_cast<long>(paths.size())) == catalan(n) &&
                evaluate(to_qlaurent(eval_partial(F(n), kAllOnesButQ)), 0) == catalan(n);
      return Result{ok, std::to_string(wi.size())};
    }));
    out.push_back(timed("phi bijection " + tag, [&] {
      for (const auto& e : wi) {
        if (phi_inv(phi(e)) != e) return Result{false, e.to_string()};
      }
      for (const auto& p : paths) {
        if (phi(phi_inv(p)) != p) return Result{false, p.to_string()};
      }
      return Result{true, ""};
    }));
    out.push_back(timed("Narayana valleys " + tag, [&] {
      std::vector<Integer> by_tel(static_cast<std::size_t>(n), 0), by_valleys(static_cast<std::size_t>(n), 0);
      for (const auto& e : wi) ++by_tel[static_cast<std::size_t>(stats(e).tel)];
      for (const auto& p : paths) ++by_valleys[static_cast<std::size_t>(dyck_stats(p).valleys)];
      for (int k = 0; k < n; ++k) {
        if (by_tel[k] != narayana(n, k) || by_valleys[k] != narayana(n, k)) return Result{false, "k=" + std::to_string(k)};
      }
      return Result{true, ""};
    }));
    out.push_back(timed("returns T(n,k) / first peak / zeros " + tag, [&] {
      const auto t = returns_triangle(n);
      std::vector<Integer> zeros(static_cast<std::size_t>(n) + 1, 0), ret(zeros), first(zeros);
      for (const auto& e : wi) ++zeros[static_cast<std::size_t>(stats(e).noz)];
      for (const auto& p : paths) {
        const DyckStats s = dyck_stats(p);
        ++ret[static_cast<std::size_t>(s.returns)];
        ++first[static_cast<std::size_t>(s.first_peak_height)];
      }
      for (int k = 1; k <= n; ++k) {
        if (zeros[k] != t[n][k] || ret[k] != t[n][k] || first[k] != t[n][k]) return Result{false, "k=" + std::to_string(k)};
      }
      return Result{true, ""};
    }));
    out.push_back(timed("f_n(x,z) symmetry and first+last peak heights " + tag, [&] {
      MultiPoly f = var(Var::z) * eval_partial(F(n), {{Var::y, 1}, {Var::p, 1}, {Var::q, 0}});
      MultiPoly swapped;
      for (const auto& [e, c] : f) {
        Exponents s = e;
        std::swap(s[0], s[2]);
        swapped.add_term(s, c);
      }
      if (swapped != f) return Result{false, "asymmetric"};
      std::vector<Integer> h(static_cast<std::size_t>(2 * n) + 1, 0);
      for (const auto& p : paths) {
        const DyckStats s = dyck_stats(p);
        ++h[static_cast<std::size_t>(s.first_peak_height + s.last_peak_height)];
      }
      return Result{h == first_last_peak_row(n), join_ints(first_last_peak_row(n))};
    }));
  }
  return out;
}

std::vector<Check> suite_tau(int max_n) {
  std::vector<Check> out;
  std::vector<std::string> counts;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(timed("tau involution (n=" + std::to_string(n) + ")", [&] {
      long fixed = 0;
      bool ok = true;
      InvSeqStream s(n);
      while (s.next() && ok) {
        const InvSeq e = s.value();
        const InvSeq t = tau(e);
        if (tau(t) != e) ok = false;
        if (t == e) {
          ++fixed;
        } else if (std::abs(stats(t).inv - stats(e).inv) != 1) {
          ok = false;
        }
      }
      counts.push_back(std::to_string(fixed));
      return Result{ok && Integer(fixed) == involution_count(n), "fixed points " + std::to_string(fixed)};
    }));
  }
  out.push_back(timed("fixed-point counts", [&] { return Result{true, join(counts, ",")}; }));
  return out;
}

std::vector<Check> suite_freq(int max_n) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(timed("fixed-frequency product (n=" + std::to_string(n) + ")", [&] {
      const auto table = brute_fixed_freq_table(n);
      const auto vectors = all_freq_vectors(n);
      QLaurent total;
      for (const auto& v : vectors) {
        const QLaurent prod = fixed_freq_poly(v);
        auto it = table.find(v);
        const QLaurent brute = it == table.end() ? QLaurent() : it->second;
        if (prod != brute) return Result{false, "mismatch at " + join_ints(std::vector<int>(v.counts().begin(), v.counts().end()))};
        total += prod;
      }
      return Result{total == f_of_q(n), std::to_string(vectors.size()) + " vectors"};
    }));
  }
  return out;
}

std::vector<Check> suite_stirling(int max_n) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(timed("S_q(n,k) == Inv sum over I_{n,k} (n=" + std::to_string(n) + ")", [&] {
      for (int k = 1; k <= n; ++k) {
        if (s_q(n, k) != s_q_via_invseq(n, k)) return Result{false, "k=" + std::to_string(k)};
      }
      return Result{true, ""};
    }));
    out.push_back(timed("Milne / Leroux-Medicis relations (n=" + std::to_string(n) + ")", [&] {
      for (int j = 1; j <= n; ++j) {
        const int twice = (j - 1) * (2 * n - j);
        if (twice % 2 != 0) return Result{false, "odd exponent"};
        const QLaurent milne = shift_q(invert_q(s_milne(n, j)), twice / 2);
        const QLaurent star = shift_q(invert_q(s_star(n, j)), (j - 1) * (n - j));
        if (!is_polynomial(milne) || !is_polynomial(star)) return Result{false, "negative exponent"};
        if (milne != s_q(n, j) || star != s_q(n, j)) return Result{false, "j=" + std::to_string(j)};
      }
      return Result{true, ""};
    }));
    out.push_back(timed("q=1 collapse to S(n,k) (n=" + std::to_string(n) + ")", [&] {
      for (int k = 0; k <= n; ++k) {
        const Integer s = stirling2(n, k);
        if (evaluate(s_q(n, k), 1) != s || evaluate(s_star(n, k), 1) != s ||
            (k >= 1 && evaluate(s_milne(n, k), 1) != s)) {
          return Result{false, "k=" + std::to_string(k)};
        }
      }
      return Result{true, ""};
    }));
  }
  return out;
}

std::vector<Check> suite_operator(int max_n) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n) {
    const std::string tag = "(n=" + std::to_string(n) + ")";
    SymExpr expansion;
    out.push_back(timed("q-Leibniz iteration == inversion-sequence expansion " + tag, [&] {
      expansion = expand_via_invseq(n);
      return Result{gdq_power(n) == expansion, std::to_string(expansion.size()) + " words"};
    }));
    out.push_back(timed("L_{n,k} three routes agree " + tag, [&] {
      for (int k = 1; k <= n; ++k) {
        const SymExpr a = lnk_from_expansion(expansion, n, k);
        if (a != lnk_explicit(n, k) || a != lnk_recurrence(n, k)) return Result{false, "k=" + std::to_string(k)};
      }
      return Result{true, ""};
    }));
    out.push_back(timed("g(x)=x gives x^k S_q(n,k) " + tag, [&] {
      for (int k = 1; k <= n; ++k) {
        const MultiPoly want = var(Var::x, k) * from_qlaurent(s_q(n, k));
        if (specialize_g(lnk_explicit(n, k), g_is_x()) != want) return Result{false, "k=" + std::to_string(k)};
      }
      return Result{true, ""};
    }));
  }
  return out;
}

std::vector<Check> suite_identities(int max_n, int truncation) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n) {
    const std::string tag = "(n=" + std::to_string(n) + ")";
    const int L = truncation > 0 ? truncation : default_truncation(n);
    out.push_back(timed("Stirling-Euler-Mahonian " + tag, [&] { return Result{check_stirling_euler(n), ""}; }));
    out.push_back(timed("Garsia " + tag, [&] { return Result{check_garsia(n), ""}; }));
    out.push_back(timed("q-power sum, k<=6 " + tag, [&] { return Result{check_qpower(n, 6), ""}; }));
    out.push_back(timed("Carlitz " + tag, [&] { return Result{check_carlitz(n, L), "L=" + std::to_string(L)}; }));
    out.push_back(timed("(xD_q)^n 1/(1-x) " + tag, [&] {
      return Result{check_eu_ma_operator(n, L), "L=" + std::to_string(L)};
    }));
  }
  return out;
}

// -------------------------------------------------------------------------
// output helpers

std::map<std::string, long> parse_bindings(const std::string& text) {
  std::map<std::string, long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("binding '" + item + "' is not var=int");
    const std::string name = item.substr(0, eq);
    std::size_t used = 0;
    const std::string rhs = item.substr(eq + 1);
    const long value = std::stol(rhs, &used);
    if (used != rhs.size()) throw std::invalid_argument("binding '" + item + "' has a non-integer value");
    if (name == "all") {
      for (auto v : kVarNames) out[std::string(v)] = value;
    } else {
      parse_var(name);
      out[name] = value;
    }
  }
  return out;
}

json bindings_json(const std::map<std::string, long>& b) {
  json j = json::object();
  for (const auto& [k, v] : b) j[k] = v;
  return j;
}

json checks_json(const std::vector<Check>& checks, bool timing) {
  json arr = json::array();
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (timing) j["seconds"] = c.seconds;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_prefix(const std::string& path) {
  std::vector<std::string> values;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) values.push_back(tok);
  }
  return values;
}

}  // namespace

const std::map<std::string, int>& suite_limits() {
  static const std::map<std::string, int> limits{
      {"recurrence", 10}, {"paths", 10},   {"tau", 10},        {"freq", 9},
      {"stirling", 9},    {"operator", 8}, {"identities", 8}, {"all", 8},
  };
  return limits;
}

std::vector<Check> run_suite(const std::string& suite, int max_n, int truncation) {
  auto it = suite_limits().find(suite);
  if (it == suite_limits().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (max_n < 1 || max_n > it->second) {
    throw std::invalid_argument("suite '" + suite + "' accepts n-max in [1, " + std::to_string(it->second) + "]");
  }
  if (suite == "recurrence") return suite_recurrence(max_n);
  if (suite == "paths") return suite_paths(max_n);
  if (suite == "tau") return suite_tau(max_n);
  if (suite == "freq") return suite_freq(max_n);
  if (suite == "stirling") return suite_stirling(max_n);
  if (suite == "operator") return suite_operator(max_n);
  if (suite == "identities") return suite_identities(max_n, truncation);
  std::vector<Check> all;
  for (const char* name : {"recurrence", "paths", "tau", "freq", "stirling", "operator", "identities"}) {
    auto part = run_suite(name, max_n, truncation);
    for (auto& c : part) c.name = std::string(name) + ": " + c.name;
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::string sequence_oeis_id(const std::string& stat) {
  static const std::map<std::string, std::string> ids{
      {"catalan", "A000108"}, {"narayana", "A001263"}, {"returns", "A033184"}, {"a114503", "A114503"},
      {"a056151", "A056151"}, {"involutions", "A000085"}, {"eulerian", "A008292"},
  };
  auto it = ids.find(stat);
  if (it == ids.end()) throw std::invalid_argument("unknown statistic '" + stat + "'");
  return it->second;
}

std::vector<std::vector<std::string>> sequence_rows(const std::string& stat, int max_n) {
  sequence_oeis_id(stat);
  if (max_n < 1) throw std::invalid_argument("n-max must be positive");
  std::vector<std::vector<std::string>> rows;
  auto push = [&rows](const std::vector<Integer>& v) {
    std::vector<std::string> r;
    for (const auto& x : v) r.push_back(x.get_str());
    rows.push_back(std::move(r));
  };
  if (stat == "catalan" || stat == "involutions") {
    std::vector<Integer> seq;
    for (int n = 1; n <= max_n; ++n) seq.push_back(stat == "catalan" ? catalan(n) : involution_count(n));
    push(seq);
    return rows;
  }
  const int limit = stat == "a114503" || stat == "a056151" || stat == "eulerian" ? 10 : 30;
  if (max_n > limit) throw std::invalid_argument(stat + " accepts n-max up to " + std::to_string(limit));
  if (stat == "returns") {
    const auto t = returns_triangle(max_n);
    for (int n = 1; n <= max_n; ++n) push(std::vector<Integer>(t[n].begin() + 1, t[n].begin() + n + 1));
    return rows;
  }
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Integer> row;
    if (stat == "narayana") {
      for (int k = 0; k < n; ++k) row.push_back(narayana(n, k));
    } else if (stat == "a114503") {
      const auto h = first_last_peak_row(n);
      row.assign(h.begin() + 2, h.end());
    } else if (stat == "a056151") {
      row = max_line_coeffs(n);
      std::reverse(row.begin(), row.end());
    } else {  // eulerian: [y^k] F_n(1; y, 1, 1, 1)
      const MultiPoly m = eval_partial(F(n), {{Var::x, 1}, {Var::z, 1}, {Var::p, 1}, {Var::q, 1}});
      row.assign(static_cast<std::size_t>(n), 0);
      for (const auto& [e, c] : m) row[static_cast<std::size_t>(e[1])] = c;
    }
    push(row);
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inversion-sequence generating polynomials and q-operator expansions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();

  int n = 0, k = 0, max_n = 0, trunc = -1;
  std::string bind_text, columns_text, suite, stat, vector_text, route;
  bool timing = false, check_prefix = false, with_brute = false;
  std::string data_dir = QINV_DATA_DIR;

  auto* fpoly = app.add_subcommand("fpoly", "Print F_n or a specialisation");
  fpoly->add_option("n", n, "Length")->required()->check(CLI::Range(1, 12));
  fpoly->add_option("--bind", bind_text, "Bindings var=int,... (all=v binds every variable)");
  fpoly->add_option("--columns", columns_text, "Table mode: var=v1,v2,... evaluated for rows 1..n");

  auto* verify = app.add_subcommand("verify", "Run an invariant sweep");
  verify->add_option("suite", suite, "recurrence|paths|tau|freq|stirling|operator|identities|all")->required();
  verify->add_option("n_max,--max-n", max_n, "Largest n checked")->required();
  verify->add_option("--trunc", trunc, "Series truncation L for the identities suite");
  verify->add_flag("--timing", timing, "Report per-check wall time");

  auto* sequence = app.add_subcommand("sequence", "Emit an integer table");
  sequence->add_option("stat", stat, "catalan|narayana|returns|a114503|a056151|involutions|eulerian")->required();
  sequence->add_option("n_max,--max-n", max_n, "Rows 1..n_max")->required();
  sequence->add_flag("--check", check_prefix, "Compare against the stored OEIS prefix");
  sequence->add_option("--data-dir", data_dir, "Directory holding oeis/<id>.txt");

  auto* lnk = app.add_subcommand("lnk", "Print L_{n,k}(q)");
  lnk->add_option("n", n)->required()->check(CLI::Range(1, 9));
  lnk->add_option("k", k)->required()->check(CLI::Range(1, 9));
  lnk->add_option("--route", route, "explicit|expansion|recurrence")
      ->check(CLI::IsMember({"explicit", "expansion", "recurrence"}));

  auto* expand = app.add_subcommand("expand", "Print (g D_q)^n f");
  expand->add_option("n", n)->required()->check(CLI::Range(1, 9));
  expand->add_option("--route", route, "leibniz|invseq")->check(CLI::IsMember({"leibniz", "invseq"}));

  auto* freqcmd = app.add_subcommand("freq", "Fixed-frequency q-enumerator");
  freqcmd->add_option("vector", vector_text, "Counts |e|_0,...,|e|_{n-1}")->required();
  freqcmd->add_flag("--brute", with_brute, "Also compute the filtered enumeration");

  std::vector<std::string> argv_store{"qinv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  const Format format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::plain;

  try {
    if (fpoly->parsed()) {
      const auto bindings = parse_bindings(bind_text);
      json params{{"n", n}, {"bind", bindings_json(bindings)}};
      if (!columns_text.empty()) {
        const auto eq = columns_text.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--columns expects var=v1,v2,...");
        const std::string col_var = columns_text.substr(0, eq);
        const Var cv = parse_var(col_var);
        std::vector<long> values;
        std::stringstream ss(columns_text.substr(eq + 1));
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(std::stol(item));
        params["columns"] = {{"var", col_var}, {"values", values}};
        json rows = json::array();
        if (format == Format::csv) {
          out << "n,polynomial";
          for (long v : values) out << "," << col_var << "=" << v;
          out << "\n";
        }
        for (int m = 1; m <= n; ++m) {
          const MultiPoly poly = eval_partial(F(m), bindings);
          std::vector<std::string> evals;
          for (long v : values) evals.push_back(constant_value(eval_partial(poly, {{cv, v}})).get_str());
          if (format == Format::plain) {
            out << m << " | " << to_string(poly) << " | " << join(evals, " | ") << "\n";
          } else if (format == Format::csv) {
            out << m << "," << csv_escape(to_string(poly)) << "," << join(evals, ",") << "\n";
          } else {
            rows.push_back({{"n", m}, {"polynomial", to_string(poly)}, {"values", evals}});
          }
        }
        if (format == Format::json) {
          out << json{{"command", "fpoly"}, {"params", params}, {"result", rows}, {"checks", json::array()}}.dump(2)
              << "\n";
        }
        return kExitPass;
      }
      const MultiPoly poly = eval_partial(F(n), bindings);
      if (format == Format::plain) {
        out << to_string(poly) << "\n";
      } else if (format == Format::csv) {
        out << "coeff,ex,ey,ez,ep,eq\n";
        for (const auto& t : to_json(poly)) {
          out << t["coeff"].get<std::string>() << "," << t["ex"] << "," << t["ey"] << "," << t["ez"] << ","
              << t["ep"] << "," << t["eq"] << "\n";
        }
      } else {
        json result{{"text", to_string(poly)}, {"terms", to_json(poly)}};
        out << json{{"command", "fpoly"}, {"params", params}, {"result", result}, {"checks", json::array()}}.dump(2)
            << "\n";
      }
      return kExitPass;
    }

    if (verify->parsed()) {
      const auto checks = run_suite(suite, max_n, trunc);
      const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
      if (format == Format::json) {
        json params{{"suite", suite}, {"max_n", max_n}};
        if (trunc > 0) params["trunc"] = trunc;
        out << json{{"command", "verify"},
                    {"params", params},
                    {"result", all_pass ? "PASS" : "FAIL"},
                    {"checks", checks_json(checks, timing)}}
                   .dump(2)
            << "\n";
      } else if (format == Format::csv) {
        out << "name,pass,detail" << (timing ? ",seconds" : "") << "\n";
        for (const auto& c : checks) {
          out << csv_escape(c.name) << "," << (c.pass ? "true" : "false") << "," << csv_escape(c.detail);
          if (timing) out << "," << c.seconds;
          out << "\n";
        }
      } else {
        for (const auto& c : checks) {
          out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
          if (!c.detail.empty()) out << "  [" << c.detail << "]";
          if (timing) out << "  (" << std::fixed << std::setprecision(3) << c.seconds << "s)";
          out << "\n";
        }
        const auto passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
        out << (all_pass ? "PASS" : "FAIL") << " " << passed << "/" << checks.size() << " checks\n";
      }
      return all_pass ? kExitPass : kExitFail;
    }

    if (sequence->parsed()) {
      const auto rows = sequence_rows(stat, max_n);
      std::vector<Check> checks;
      if (check_prefix) {
        const std::string id = sequence_oeis_id(stat);
        const auto expected = read_prefix(data_dir + "/oeis/" + id + ".txt");
        std::vector<std::string> flat;
        for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
        const std::size_t m = std::min(flat.size(), expected.size());
        const bool ok = std::equal(flat.begin(), flat.begin() + static_cast<long>(m), expected.begin());
        checks.push_back({id + " prefix", ok, std::to_string(m) + " terms compared", 0.0});
      }
      if (format == Format::json) {
        out << json{{"command", "sequence"},
                    {"params", {{"stat", stat}, {"max_n", max_n}}},
                    {"result", rows},
                    {"checks", checks_json(checks, false)}}
                   .dump(2)
            << "\n";
      } else {
        const std::string sep = format == Format::csv ? "," : " ";
        for (const auto& r : rows) out << join(r, sep) << "\n";
        for (const auto& c : checks) out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
      }
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
      return ok ? kExitPass : kExitFail;
    }

    if (lnk->parsed()) {
      if (k > n) throw std::invalid_argument("lnk requires k <= n");
      SymExpr value;
      if (route == "expansion") {
        value = lnk_from_expansion(expand_via_invseq(n), n, k);
      } else if (route == "recurrence") {
        value = lnk_recurrence(n, k);
      } else {
        value = lnk_explicit(n, k);
      }
      if (format == Format::json) {
        json terms = json::array();
        for (const auto& [w, c] : value) terms.push_back({{"word", to_string(w)}, {"coeff", to_json(c)}});
        out << json{{"command", "lnk"},
                    {"params", {{"n", n}, {"k", k}, {"route", route.empty() ? "explicit" : route}}},
                    {"result", {{"text", to_string(value)}, {"terms", terms}}},
                    {"checks", json::array()}}
                   .dump(2)
            << "\n";
      } else {
        out << to_string(value) << "\n";
      }
      return kExitPass;
    }

    if (expand->parsed()) {
      const SymExpr value = route == "invseq" ? expand_via_invseq(n) : gdq_power(n);
      if (format == Format::json) {
        json terms = json::array();
        for (const auto& [w, c] : value) terms.push_back({{"word", to_string(w)}, {"coeff", to_json(c)}});
        out << json{{"command", "expand"},
                    {"params", {{"n", n}, {"route", route.empty() ? "leibniz" : route}}},
                    {"result", {{"text", to_string(value)}, {"terms", terms}}},
                    {"checks", json::array()}}
                   .dump(2)
            << "\n";
      } else {
        // One line per terminal f factor, matching L_{n,k} f_k^{(n-k)}.
        for (int kk = 1; kk <= n; ++kk) {
          const SymExpr part = lnk_from_expansion(value, n, kk);
          if (part.is_zero()) continue;
          out << "(" << to_string(part) << ") " << to_string(SymFactor::f(kk, n - kk)) << "\n";
        }
      }
      return kExitPass;
    }

    if (freqcmd->parsed()) {
      std::vector<int> counts;
      std::stringstream ss(vector_text);
      std::string item;
      while (std::getline(ss, item, ',')) counts.push_back(std::stoi(item));
      const FreqVec v(counts);
      const QLaurent prod = fixed_freq_poly(v);
      std::vector<Check> checks;
      if (with_brute) {
        const QLaurent brute = brute_fixed_freq(v);
        checks.push_back({"product == brute force", prod == brute, to_string(brute), 0.0});
      }
      if (format == Format::json) {
        out << json{{"command", "freq"},
                    {"params", {{"vector", counts}}},
                    {"result", {{"text", to_string(prod)}, {"terms", to_json(prod)}}},
                    {"checks", checks_json(checks, false)}}
                   .dump(2)
            << "\n";
      } else {
        out << to_string(prod) << "\n";
        for (const auto& c : checks) out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
      }
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
      return ok ? kExitPass : kExitFail;
    }
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace qinv::cli
