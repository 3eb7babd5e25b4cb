#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyhom/operators.hpp"
#include "polyhom/script.hpp"
#include "polyhom/verify.hpp"

namespace {

using namespace polyhom;
using nlohmann::ordered_json;

struct Output {
  bool structured = false;
  ordered_json j = ordered_json::object();
  std::ostringstream plain;

  void kv(const std::string& k, const std::string& v) {
    if (structured)
      j[k] = v;
    else
      plain << k << " = " << v << "\n";
  }
  void kv(const std::string& k, bool v) {
    if (structured)
      j[k] = v;
    else
      plain << k << " = " << (v ? "true" : "false") << "\n";
  }
  void kv(const std::string& k, long v) {
    if (structured)
      j[k] = v;
    else
      plain << k << " = " << v << "\n";
  }
  void grid(const std::string& k, const std::vector<std::vector<std::string>>& rows,
            const std::string& sep) {
    if (structured) {
      j[k] = rows;
    } else {
      for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) plain << (i ? sep : "") << row[i];
        plain << "\n";
      }
    }
  }
  void flush() {
    if (structured)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << plain.str();
  }
};

std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : " ") + std::to_string(v[i]);
  return s + (v.empty() ? "}" : " }");
}

std::string pairs_text(const std::vector<std::pair<int, int>>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? ", (" : " (") + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
  return s + (v.empty() ? "}" : " }");
}

std::string digits_text(const gf::Matrix& basis, int row) {
  std::string s;
  for (int j = 0; j < basis.cols; ++j) s += std::to_string(basis.at(row, j));
  return s;
}

void print_polyhom(Output& out, const std::string& name, const Polyhom& p) {
  out.kv("kind", std::string("polyhom"));
  out.kv("name", name);
  out.kv("zero", p.is_zero());
  out.kv("source_order", (long)p.source().group->order());
  out.kv("target_order", (long)p.target().group->order());
  out.kv("source_pointmass", to_fraction(p.source().point_mass));
  out.kv("target_pointmass", to_fraction(p.target().point_mass));
  out.kv("alpha", to_fraction(p.alpha()));
  out.kv("beta", to_fraction(p.beta()));
  if (!p.is_zero()) {
    out.kv("weight", to_fraction(p.weight()));
    const auto& r = p.relation();
    out.kv("dom", set_text(r.dom().elements()));
    out.kv("im", set_text(r.im().elements()));
    out.kv("ker", set_text(r.ker().elements()));
    out.kv("indef", set_text(r.indef().elements()));
    out.kv("carrier", pairs_text(r.pairs()));
  }
}

void print_fp(Output& out, const std::string& name, const FpPolyhom& q) {
  out.kv("kind", std::string("fppolyhom"));
  out.kv("name", name);
  out.kv("p", (long)q.space().p);
  out.kv("dim", (long)q.space().dim);
  out.kv("pointmass", to_fraction(q.space().point_mass()));
  out.kv("zero", q.is_zero());
  if (!q.is_zero()) {
    out.kv("weight", to_fraction(q.weight()));
    out.kv("alpha", to_fraction(q.alpha()));
    out.kv("beta", to_fraction(q.beta()));
    auto d = q.marginal_dims();
    out.kv("dim_dom", (long)d.dom);
    out.kv("dim_im", (long)d.im);
    out.kv("dim_ker", (long)d.ker);
    out.kv("dim_indef", (long)d.indef);
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < q.carrier().dim(); ++i) rows.push_back({digits_text(q.carrier().basis, i)});
    out.grid("basis", rows, "");
  }
}

void emit_definition(const Session& s, const std::string& name, const Polyhom& p) {
  std::cout << polyhom_definition_text(s, name, p);
}

FpWindow window_of(const FpPolyhom& q) {
  const FpSpace& sp = q.space();
  if (sp.dim != 2 * sp.pm_exp) throw Error("this value does not live in a symmetric window");
  return FpWindow{sp.p, sp.pm_exp};
}

FpWindow resolve_window(const Session& s, const std::string& token) {
  auto it = s.windows.find(token);
  if (it != s.windows.end()) return it->second;
  // literal pPrR form, e.g. p2r3
  if (token.size() >= 4 && token[0] == 'p') {
    auto rpos = token.find('r');
    if (rpos != std::string::npos) {
      try {
        int p = std::stoi(token.substr(1, rpos - 1));
        int r = std::stoi(token.substr(rpos + 1));
        return FpWindow{p, r};
      } catch (const std::exception&) {
      }
    }
  }
  throw NameError(token);
}

gf::Matrix parse_digit_matrix(int p, const std::vector<std::string>& rows) {
  int n = (int)rows.size();
  gf::Matrix g(p, n, n);
  for (int i = 0; i < n; ++i) {
    if ((int)rows[i].size() != n) throw Error("matrix rows must be square digit strings");
    for (int j = 0; j < n; ++j) {
      int v = rows[i][j] - '0';
      if (v < 0 || v >= p) throw Error("digit out of range for the field");
      g.at(i, j) = v;
    }
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhom: exact calculator for measure-weighted subgroup relations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string script_path;
  bool structured = false;
  app.add_option("-s,--script", script_path, "definition script to load");
  app.add_flag("--structured", structured, "emit a JSON object instead of key = value lines");

  std::string arg1, arg2, arg3, arg4;
  std::string as_name, format = "grid";
  bool emit_def = false;
  int m_level = 1, j_block = 0, fam_k = 1, fam_l = 1;
  long budget = 200;
  std::string pointmass = "1/1";
  unsigned long long seed = VerifyOptions{}.seed;
  int samples = 0;
  int chi_p = 2, chi_s = 1, chi_d = 2;
  std::vector<std::string> chi_rows;

  auto* c_inspect = app.add_subcommand("inspect", "print every field of a named value");
  c_inspect->add_option("name", arg1)->required();
  c_inspect->add_flag("--emit-def", emit_def, "also print a re-parseable definition");

  auto* c_compose = app.add_subcommand("compose", "compose two polyhomomorphisms (t after r)");
  c_compose->add_option("t", arg1)->required();
  c_compose->add_option("r", arg2)->required();
  c_compose->add_option("--as", as_name, "name for the result in the output");

  auto* c_matrix = app.add_subcommand("matrix", "print the operator matrix of a polyhomomorphism");
  c_matrix->add_option("name", arg1)->required();
  c_matrix->add_option("--format", format, "grid | csv")->check(CLI::IsMember({"grid", "csv"}));

  auto* c_involution = app.add_subcommand("involution", "reverse a polyhomomorphism");
  c_involution->add_option("name", arg1)->required();

  auto* c_decompose = app.add_subcommand("decompose", "three-factor decomposition");
  c_decompose->add_option("name", arg1)->required();

  auto* c_angle = app.add_subcommand("angle", "angle scalar of two projection pairs");
  c_angle->add_option("phi", arg1)->required();
  c_angle->add_option("delta", arg2)->required();
  c_angle->add_option("psi", arg3)->required();
  c_angle->add_option("gamma", arg4)->required();
  c_angle->add_option("--pointmass", pointmass, "ambient point mass (default 1/1)");

  auto* c_fp = app.add_subcommand("fp", "windowed linear-relation commands");
  c_fp->require_subcommand(1);
  auto* f_theta = c_fp->add_subcommand("theta", "truncation relation theta_m");
  f_theta->add_option("window", arg1)->required();
  f_theta->add_option("m", m_level)->required();
  auto* f_sandwich = c_fp->add_subcommand("sandwich", "theta_m R theta_m");
  f_sandwich->add_option("name", arg1)->required();
  f_sandwich->add_option("m", m_level)->required();
  auto* f_disc = c_fp->add_subcommand("discrepancy", "max box-measure gap on a coset family");
  f_disc->add_option("a", arg1)->required();
  f_disc->add_option("b", arg2)->required();
  f_disc->add_option("--k", fam_k, "coset subgroup level (default 1)");
  f_disc->add_option("--l", fam_l, "shift range level (default 1)");
  auto* f_realize = c_fp->add_subcommand("realize", "find an invertible matrix with the same sandwich");
  f_realize->add_option("name", arg1)->required();
  f_realize->add_option("m", m_level)->required();
  f_realize->add_option("--budget", budget, "search candidates before constructing");
  auto* f_chi = c_fp->add_subcommand("chi", "characteristic relation of a block matrix");
  f_chi->add_option("p", chi_p)->required();
  f_chi->add_option("s", chi_s)->required();
  f_chi->add_option("d", chi_d)->required();
  f_chi->add_option("rows", chi_rows, "matrix rows as digit strings")->required();
  auto* f_splus = c_fp->add_subcommand("splus", "positive-side block swap");
  f_splus->add_option("window", arg1)->required();
  f_splus->add_option("m", m_level)->required();
  f_splus->add_option("j", j_block)->required();
  auto* f_sminus = c_fp->add_subcommand("sminus", "negative-side block swap");
  f_sminus->add_option("window", arg1)->required();
  f_sminus->add_option("m", m_level)->required();
  f_sminus->add_option("j", j_block)->required();

  auto* c_verify = app.add_subcommand("verify", "run a named property suite (or 'all')");
  c_verify->add_option("suite", arg1)->required();
  c_verify->add_option("--seed", seed, "sample stream seed");
  c_verify->add_option("--samples", samples, "override the composable-pair sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Session session;
    if (!script_path.empty()) {
      std::ifstream in(script_path);
      if (!in) throw Error("cannot open script '" + script_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      session = parse_script(buf.str());
    }
    Output out;
    out.structured = structured;

    if (*c_inspect) {
      if (session.polyhoms.count(arg1)) {
        const Polyhom& p = session.polyhom(arg1);
        print_polyhom(out, arg1, p);
        out.flush();
        if (emit_def) emit_definition(session, arg1, p);
        return 0;
      }
      if (session.fp_polyhoms.count(arg1)) {
        print_fp(out, arg1, session.fp_polyhom(arg1));
      } else if (session.relations.count(arg1)) {
        const MultRelation& r = session.relation(arg1);
        out.kv("kind", std::string("relation"));
        out.kv("name", arg1);
        out.kv("dom", set_text(r.dom().elements()));
        out.kv("im", set_text(r.im().elements()));
        out.kv("ker", set_text(r.ker().elements()));
        out.kv("indef", set_text(r.indef().elements()));
        out.kv("carrier", pairs_text(r.pairs()));
      } else if (session.subgroups.count(arg1)) {
        out.kv("kind", std::string("subgroup"));
        out.kv("name", arg1);
        out.kv("elements", set_text(session.subgroup(arg1).elements()));
      } else if (session.groups.count(arg1)) {
        const GroupPtr& g = session.group(arg1);
        out.kv("kind", std::string("group"));
        out.kv("name", arg1);
        out.kv("order", (long)g->order());
        out.kv("identity", (long)g->identity());
        out.kv("abelian", g->is_abelian());
      } else if (session.measured_groups.count(arg1)) {
        const MeasuredGroup& mg = session.measured_group(arg1);
        out.kv("kind", std::string("measured"));
        out.kv("name", arg1);
        out.kv("order", (long)mg.group->order());
        out.kv("pointmass", to_fraction(mg.point_mass));
      } else {
        throw NameError(arg1);
      }
      out.flush();
    } else if (*c_compose) {
      Polyhom s = ph_compose(session.polyhom(arg1), session.polyhom(arg2));
      print_polyhom(out, as_name.empty() ? arg1 + "*" + arg2 : as_name, s);
      out.flush();
    } else if (*c_matrix) {
      const Polyhom& p = session.polyhom(arg1);
      RationalMatrix m = pi(p);
      std::vector<std::vector<std::string>> rows(m.rows());
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i].push_back(to_fraction(m.at(i, j)));
      out.grid("matrix", rows, format == "csv" ? "," : " ");
      out.flush();
    } else if (*c_involution) {
      print_polyhom(out, arg1 + "^op", involution(session.polyhom(arg1)));
      out.flush();
    } else if (*c_decompose) {
      Decomposition d = decompose(session.polyhom(arg1));
      Polyhom recomposed = ph_compose(d.t, ph_compose(d.s, d.q));
      if (structured) {
        Output oq, os, ot;
        oq.structured = os.structured = ot.structured = true;
        print_polyhom(oq, arg1 + ".q", d.q);
        print_polyhom(os, arg1 + ".s", d.s);
        print_polyhom(ot, arg1 + ".t", d.t);
        out.j["q"] = oq.j;
        out.j["s"] = os.j;
        out.j["t"] = ot.j;
        out.j["recomposition_exact"] = recomposed == session.polyhom(arg1);
      } else {
        print_polyhom(out, arg1 + ".q", d.q);
        print_polyhom(out, arg1 + ".s", d.s);
        print_polyhom(out, arg1 + ".t", d.t);
        out.kv("recomposition_exact", recomposed == session.polyhom(arg1));
      }
      out.flush();
    } else if (*c_angle) {
      const Subgroup& phi = session.subgroup(arg1);
      const Subgroup& delta = session.subgroup(arg2);
      const Subgroup& psi = session.subgroup(arg3);
      const Subgroup& gamma = session.subgroup(arg4);
      MeasuredGroup mg = measured(phi.parent(), parse_fraction(pointmass));
      out.kv("sigma", to_fraction(angle_check(mg, phi, delta, psi, gamma)));
      out.flush();
    } else if (*c_fp) {
      if (*f_theta) {
        print_fp(out, "theta_" + std::to_string(m_level),
                 theta(resolve_window(session, arg1), m_level));
      } else if (*f_sandwich) {
        const FpPolyhom& q = session.fp_polyhom(arg1);
        print_fp(out, arg1 + ".sandwich", sandwich(q, window_of(q), m_level));
      } else if (*f_disc) {
        const FpPolyhom& a = session.fp_polyhom(arg1);
        const FpPolyhom& b = session.fp_polyhom(arg2);
        out.kv("discrepancy",
               to_fraction(box_discrepancy(a, b, window_of(a), fam_k, fam_l)));
      } else if (*f_realize) {
        const FpPolyhom& q = session.fp_polyhom(arg1);
        auto g = realize_finitary(q, window_of(q), m_level, budget);
        out.kv("found", g.has_value());
        if (g) {
          std::vector<std::vector<std::string>> rows;
          for (int i = 0; i < g->rows; ++i) rows.push_back({digits_text(*g, i)});
          out.grid("g", rows, "");
        }
      } else if (*f_chi) {
        gf::Matrix g = parse_digit_matrix(chi_p, chi_rows);
        print_fp(out, "chi", chi(g, chi_s, chi_d));
      } else if (*f_splus) {
        print_fp(out, "splus", s_plus(resolve_window(session, arg1), m_level, j_block));
      } else if (*f_sminus) {
        print_fp(out, "sminus", s_minus(resolve_window(session, arg1), m_level, j_block));
      }
      out.flush();
    } else if (*c_verify) {
      VerifyOptions opt;
      opt.seed = seed;
      if (samples > 0) opt.pair_samples = samples;
      auto results = run_suites(arg1, opt);
      bool all_ok = true;
      for (const auto& r : results) {
        std::cout << "suite " << r.name << ": checked = " << r.checked
                  << ", failed = " << r.failed << (r.ok() ? "  PASS" : "  FAIL") << "\n";
        if (!r.ok()) {
          all_ok = false;
          if (!r.detail.empty()) std::cout << "  detail: " << r.detail << "\n";
        }
      }
      return all_ok ? 0 : 1;
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
