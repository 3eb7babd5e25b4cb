#include "polyhom/script.hpp"

#include <cctype>

namespace polyhom {

namespace {

struct Token {
  std::string text;
  int line, column;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') { ++line; col = 1; } else { ++col; }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') { advance(text[i]); ++i; }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) { advance(c); ++i; continue; }
    int tl = line, tc = col;
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
      std::string word;
      // '->' is its own token; a leading '-' may also start a negative number
      if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
        out.push_back(Token{"->", tl, tc});
        advance(c); advance('>'); i += 2;
        continue;
      }
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
              text[i] == '-')) {
        if (text[i] == '-' && !word.empty()) break;
        word += text[i];
        advance(text[i]);
        ++i;
      }
      out.push_back(Token{word, tl, tc});
      continue;
    }
    if (c == '/' || c == '{' || c == '}' || c == '(' || c == ')' || c == '[' || c == ']' ||
        c == ',' || c == ';' || c == '=' || c == ':') {
      out.push_back(Token{std::string(1, c), tl, tc});
      advance(c);
      ++i;
      continue;
    }
    throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
  }
  return out;
}

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  Session session;

  [[noreturn]] void fail(const std::string& what) {
    if (at < toks.size()) throw ParseError(toks[at].line, toks[at].column, what);
    throw ParseError(toks.empty() ? 1 : toks.back().line, 0, what + " (at end of input)");
  }
  bool done() const { return at >= toks.size(); }
  const Token& peek() {
    if (done()) fail("unexpected end of input");
    return toks[at];
  }
  std::string next() {
    const Token& t = peek();
    ++at;
    return t.text;
  }
  void expect(const std::string& s) {
    if (next() != s) { --at; fail("expected '" + s + "'"); }
  }
  bool accept(const std::string& s) {
    if (!done() && toks[at].text == s) { ++at; return true; }
    return false;
  }
  int integer() {
    std::string t = next();
    try {
      size_t pos = 0;
      int v = std::stoi(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      --at;
      fail("expected an integer, got '" + t + "'");
    }
  }
  Rational fraction() {
    std::string num = next();
    std::string text = num;
    if (accept("/")) text += "/" + next();
    try {
      return parse_fraction(text);
    } catch (const std::exception& e) {
      --at;
      fail(e.what());
    }
  }
  std::string name() {
    std::string t = next();
    if (t.empty() || !(std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_')) {
      --at;
      fail("expected a name, got '" + t + "'");
    }
    return t;
  }

  std::vector<int> int_set() {  // { 1, 2, 3 }
    expect("{");
    std::vector<int> out;
    if (!accept("}")) {
      do {
        out.push_back(integer());
      } while (accept(","));
      expect("}");
    }
    return out;
  }
  std::vector<std::pair<int, int>> pair_set() {  // { (1,2), (3,4) }
    expect("{");
    std::vector<std::pair<int, int>> out;
    if (!accept("}")) {
      do {
        expect("(");
        int a = integer();
        expect(",");
        int b = integer();
        expect(")");
        out.emplace_back(a, b);
      } while (accept(","));
      expect("}");
    }
    return out;
  }
  std::vector<int> int_list() {  // [0, 1, 2]
    expect("[");
    std::vector<int> out;
    if (!accept("]")) {
      do {
        out.push_back(integer());
      } while (accept(","));
      expect("]");
    }
    return out;
  }
  std::vector<std::vector<int>> int_table() {  // [[...],...]
    expect("[");
    std::vector<std::vector<int>> out;
    if (!accept("]")) {
      do {
        out.push_back(int_list());
      } while (accept(","));
      expect("]");
    }
    return out;
  }

  template <class M, class V>
  void bind(M& map, const std::string& name, V value) {
    if (!map.emplace(name, std::move(value)).second) throw NameError(name);
  }

  void statement() {
    std::string kind = next();
    if (kind == "group") {
      std::string n = name();
      expect("=");
      std::string what = next();
      if (what == "cyclic") {
        bind(session.groups, n, FiniteGroup::cyclic(integer()));
      } else if (what == "product") {
        const GroupPtr& a = session.group(name());
        const GroupPtr& b = session.group(name());
        bind(session.groups, n, FiniteGroup::direct_product(a, b));
      } else if (what == "table") {
        bind(session.groups, n, FiniteGroup::from_cayley_table(int_table()));
      } else if (what == "symmetric") {
        bind(session.groups, n, FiniteGroup::symmetric(integer()));
      } else {
        --at;
        fail("expected cyclic | product | table | symmetric");
      }
    } else if (kind == "subgroup") {
      std::string n = name();
      expect("in");
      const GroupPtr& g = session.group(name());
      expect("=");
      if (accept("generated"))
        bind(session.subgroups, n, Subgroup::generate(g, int_set()));
      else
        bind(session.subgroups, n, Subgroup::from_elements(g, int_set()));
    } else if (kind == "relation") {
      std::string n = name();
      expect(":");
      const GroupPtr& src = session.group(name());
      expect("->");
      const GroupPtr& tgt = session.group(name());
      expect("=");
      if (accept("generated"))
        bind(session.relations, n, MultRelation::generate(src, tgt, pair_set()));
      else if (accept("graph"))
        bind(session.relations, n, MultRelation::graph(src, tgt, int_list()));
      else if (accept("pairs"))
        bind(session.relations, n, MultRelation::from_pairs(src, tgt, pair_set()));
      else
        fail("expected generated | graph | pairs");
    } else if (kind == "measured") {
      std::string n = name();
      expect("=");
      const GroupPtr& g = session.group(name());
      expect("pointmass");
      bind(session.measured_groups, n, measured(g, fraction()));
    } else if (kind == "polyhom") {
      std::string n = name();
      if (accept("=")) {
        expect("zero");
        const MeasuredGroup& a = session.measured_group(name());
        const MeasuredGroup& b = session.measured_group(name());
        bind(session.polyhoms, n, Polyhom::zero(a, b));
        return;
      }
      expect(":");
      const MeasuredGroup& src = session.measured_group(name());
      expect("->");
      const MeasuredGroup& tgt = session.measured_group(name());
      expect("{");
      expect("relation");
      expect("=");
      const MultRelation& rel = session.relation(name());
      expect(";");
      expect("weight");
      expect("=");
      Rational w = fraction();
      accept(";");
      expect("}");
      bind(session.polyhoms, n, Polyhom::make(rel, w, src, tgt));
    } else if (kind == "fpwindow") {
      std::string n = name();
      expect("=");
      expect("p");
      int p = integer();
      expect("radius");
      int radius = integer();
      if (radius < 1) fail("window radius must be positive");
      for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) fail("p must be prime");
      if (p < 2) fail("p must be prime");
      bind(session.windows, n, FpWindow{p, radius});
    } else if (kind == "fppolyhom") {
      std::string n = name();
      expect("in");
      const FpWindow& win = session.window(name());
      expect("{");
      expect("basis");
      expect("=");
      auto rows = int_table();
      expect(";");
      expect("weight");
      expect("=");
      Rational w = fraction();
      accept(";");
      expect("}");
      int ambient = 4 * win.radius;
      gf::Matrix m(win.p, (int)rows.size(), ambient);
      for (int i = 0; i < (int)rows.size(); ++i) {
        if ((int)rows[i].size() != ambient)
          fail("basis rows must have length " + std::to_string(ambient));
        for (int j = 0; j < ambient; ++j) m.at(i, j) = ((rows[i][j] % win.p) + win.p) % win.p;
      }
      bind(session.fp_polyhoms, n,
           FpPolyhom::make(win.space(), gf::make_subspace(win.p, ambient, m), w));
    } else {
      --at;
      fail("unknown statement '" + kind + "'");
    }
  }
};

template <class M>
const typename M::mapped_type& lookup(const M& map, const std::string& name) {
  auto it = map.find(name);
  if (it == map.end()) throw NameError(name);
  return it->second;
}

}  // namespace

const GroupPtr& Session::group(const std::string& name) const { return lookup(groups, name); }
const Subgroup& Session::subgroup(const std::string& name) const {
  return lookup(subgroups, name);
}
const MultRelation& Session::relation(const std::string& name) const {
  return lookup(relations, name);
}
const MeasuredGroup& Session::measured_group(const std::string& name) const {
  return lookup(measured_groups, name);
}
const Polyhom& Session::polyhom(const std::string& name) const { return lookup(polyhoms, name); }
const FpWindow& Session::window(const std::string& name) const { return lookup(windows, name); }
const FpPolyhom& Session::fp_polyhom(const std::string& name) const {
  return lookup(fp_polyhoms, name);
}

Session parse_script(const std::string& text) {
  Parser p;
  p.toks = tokenize(text);
  while (!p.done()) p.statement();
  return std::move(p.session);
}

namespace {

std::string pair_set_text(const std::vector<std::pair<int, int>>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? ", (" : " (") + std::to_string(v[i].first) + "," +
         std::to_string(v[i].second) + ")";
  return s + (v.empty() ? "}" : " }");
}

}  // namespace

std::string polyhom_definition_text(const Session& s, const std::string& name,
                                    const Polyhom& p) {
  auto measured_name = [&](const MeasuredGroup& mg) -> std::string {
    for (const auto& [n, v] : s.measured_groups)
      if (same_measured(v, mg)) return n;
    throw NameError("(measured group not bound in the script)");
  };
  auto group_name = [&](const GroupPtr& g) -> std::string {
    for (const auto& [n, v] : s.groups)
      if (FiniteGroup::same_structure(*v, *g)) return n;
    throw NameError("(group not bound in the script)");
  };
  if (p.is_zero())
    return "polyhom " + name + "__def = zero " + measured_name(p.source()) + " " +
           measured_name(p.target()) + "\n";
  std::string out;
  out += "relation " + name + "__rel : " + group_name(p.source().group) + " -> " +
         group_name(p.target().group) + " = pairs " + pair_set_text(p.relation().pairs()) +
         "\n";
  out += "polyhom " + name + "__def : " + measured_name(p.source()) + " -> " +
         measured_name(p.target()) + " { relation = " + name +
         "__rel; weight = " + to_fraction(p.weight()) + " }\n";
  return out;
}

}  // namespace polyhom
