#include "lvo/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lvo {

bool ModelConfig::wants(const std::string& suite) const {
  for (const auto& s : suites)
    if (s == "all" || s == suite) return true;
  return false;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

mpq_class parse_rational(const std::string& s) {
  std::string t = trim(s);
  if (t.empty()) throw Error(Err::ConfigError, "empty rational literal");
  try {
    mpq_class q(t);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(Err::ConfigError, "bad rational literal: " + t);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// ---- token expressions -----------------------------------------------------
//
// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := ['-'] atom
// atom   := rational | 'R' | 'sqrt2' | 'sqrt' '(' rational ')' | '(' expr ')'
//
// Exact values are kept as c * sqrt(rad) with c, rad rational; sums are legal
// only within one square class.

struct Radical {
  mpq_class c;
  mpq_class rad;  // under the square root; 1 for plain rationals

  // normalize to a square-free integer radicand
  void normalize() {
    if (c == 0) {
      rad = 1;
      return;
    }
    if (rad == 0) {
      c = 0;
      rad = 1;
      return;
    }
    mpz_class n = rad.get_num() * rad.get_den();
    mpz_class f, d;
    squarefree_split(n, f, d);
    // sqrt(rad) = f sqrt(d) / den
    c *= mpq_class(f, rad.get_den());
    c.canonicalize();
    rad = d;
  }
};

struct TokenParser {
  std::string s;
  size_t pos = 0;
  const ModelConfig* cfg;
  bool exact;

  char peek() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpq_class r2_exact() const {
    if (!cfg->r2) throw Error(Err::ConfigError, "token uses R but R2 is not declared");
    return *cfg->r2;
  }
  double r2_float() const {
    if (cfg->r2_float) return *cfg->r2_float;
    if (cfg->r2) return cfg->r2->get_d();
    throw Error(Err::ConfigError, "token uses R but R2 is not declared");
  }

  // exact lane
  Radical expr() {
    Radical v = term();
    while (true) {
      if (eat('+')) {
        Radical w = term();
        v.normalize();
        w.normalize();
        if (v.c == 0) {
          v = w;
        } else if (w.c != 0) {
          if (v.rad != w.rad)
            throw Error(Err::ConfigError, "sum mixes distinct square classes in: " + s);
          v.c += w.c;
        }
      } else if (eat('-')) {
        Radical w = term();
        v.normalize();
        w.normalize();
        if (v.c == 0) {
          v = w;
          v.c = -v.c;
        } else if (w.c != 0) {
          if (v.rad != w.rad)
            throw Error(Err::ConfigError, "sum mixes distinct square classes in: " + s);
          v.c -= w.c;
        }
      } else {
        break;
      }
    }
    return v;
  }
  Radical term() {
    Radical v = factor();
    while (true) {
      if (eat('*')) {
        Radical w = factor();
        v.c *= w.c;
        v.rad *= w.rad;
      } else if (eat('/')) {
        Radical w = factor();
        if (w.c == 0) throw Error(Err::ConfigError, "division by zero in token: " + s);
        v.c /= w.c;
        v.rad /= w.rad;
      } else {
        break;
      }
    }
    return v;
  }
  Radical factor() {
    if (eat('-')) {
      Radical v = factor();
      v.c = -v.c;
      return v;
    }
    return atom();
  }
  Radical atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Radical v = expr();
      if (!eat(')')) throw Error(Err::ConfigError, "missing ')' in token: " + s);
      return v;
    }
    if (c == 'R') {
      ++pos;
      return Radical{1, r2_exact()};
    }
    if (c == 's') {
      if (s.compare(pos, 5, "sqrt2") == 0) {
        pos += 5;
        return Radical{1, 2};
      }
      if (s.compare(pos, 5, "sqrt(") == 0) {
        pos += 5;
        size_t close = s.find(')', pos);
        if (close == std::string::npos)
          throw Error(Err::ConfigError, "missing ')' in token: " + s);
        mpq_class q = parse_rational(s.substr(pos, close - pos));
        pos = close + 1;
        if (q < 0) throw Error(Err::ConfigError, "sqrt of a negative rational in: " + s);
        return Radical{1, q};
      }
      throw Error(Err::ConfigError, "unknown symbol in token: " + s);
    }
    // integer literal; quotients go through the division operator
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (start == pos) throw Error(Err::ConfigError, "bad token: " + s);
    return Radical{parse_rational(s.substr(start, pos - start)), 1};
  }

  // float lane
  double fexpr() {
    double v = fterm();
    while (true) {
      if (eat('+'))
        v += fterm();
      else if (eat('-'))
        v -= fterm();
      else
        break;
    }
    return v;
  }
  double fterm() {
    double v = ffactor();
    while (true) {
      if (eat('*'))
        v *= ffactor();
      else if (eat('/'))
        v /= ffactor();
      else
        break;
    }
    return v;
  }
  double ffactor() {
    if (eat('-')) return -ffactor();
    char c = peek();
    if (c == '(') {
      eat('(');
      double v = fexpr();
      if (!eat(')')) throw Error(Err::ConfigError, "missing ')' in token: " + s);
      return v;
    }
    if (c == 'R') {
      ++pos;
      return std::sqrt(r2_float());
    }
    if (c == 's') {
      if (s.compare(pos, 5, "sqrt2") == 0) {
        pos += 5;
        return std::sqrt(2.0);
      }
      if (s.compare(pos, 5, "sqrt(") == 0) {
        pos += 5;
        size_t close = s.find(')', pos);
        if (close == std::string::npos)
          throw Error(Err::ConfigError, "missing ')' in token: " + s);
        double q = parse_rational(s.substr(pos, close - pos)).get_d();
        pos = close + 1;
        return std::sqrt(q);
      }
      throw Error(Err::ConfigError, "unknown symbol in token: " + s);
    }
    size_t start = pos;
    while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '.')) ++pos;
    if (start == pos) throw Error(Err::ConfigError, "bad token: " + s);
    return std::stod(s.substr(start, pos - start));
  }
};

}  // namespace

Scalar eval_token(const std::string& token, const ModelConfig& cfg) {
  TokenParser p;
  p.s = token;
  p.cfg = &cfg;
  p.exact = cfg.backend.exact();
  if (!p.exact) {
    double v = p.fexpr();
    if (p.peek() != '\0') throw Error(Err::ConfigError, "trailing input in token: " + token);
    return Scalar::flt(v, cfg.backend.tol);
  }
  Radical v = p.expr();
  if (p.peek() != '\0') throw Error(Err::ConfigError, "trailing input in token: " + token);
  v.normalize();
  if (v.rad == 1 || v.c == 0) return Scalar::rational(v.c, cfg.backend);
  if (cfg.backend.kind != BackendKind::quadratic ||
      mpz_class(cfg.backend.quad_d) != v.rad.get_num()) {
    throw Error(Err::BackendMismatch, "token " + token + " needs sqrt(" +
                                          v.rad.get_str() + ") outside backend " +
                                          cfg.backend.str());
  }
  return Scalar::quad(0, v.c, cfg.backend.quad_d);
}

ModelConfig parse_config_text(const std::string& text) {
  ModelConfig cfg;
  cfg.echo = text;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    size_t hash = t.find('#');
    if (hash != std::string::npos) t = trim(t.substr(0, hash));
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw Error(Err::ConfigError, "bad section at line " + std::to_string(lineno));
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(Err::ConfigError, "expected key = value at line " + std::to_string(lineno));
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (section == "space") {
      if (key == "dplus")
        cfg.space.d_plus = std::stoi(val);
      else if (key == "dminus")
        cfg.space.d_minus = std::stoi(val);
      else
        throw Error(Err::ConfigError, "unknown space key: " + key);
    } else if (section == "backend") {
      if (key == "kind") {
        if (val == "rational")
          cfg.backend = Backend::rational_backend();
        else if (val == "quadratic")
          cfg.backend.kind = BackendKind::quadratic;
        else if (val == "float")
          cfg.backend.kind = BackendKind::bigfloat;
        else
          throw Error(Err::ConfigError, "unknown backend kind: " + val);
      } else if (key == "d") {
        cfg.backend.quad_d = std::stol(val);
      } else if (key == "tol") {
        cfg.backend.tol = std::stod(val);
      } else {
        throw Error(Err::ConfigError, "unknown backend key: " + key);
      }
    } else if (section == "lattice") {
      if (key == "generator") {
        cfg.generator_rows.push_back(val);
      } else if (key == "R2") {
        if (val.find('.') != std::string::npos) {
          cfg.r2_float = std::stod(val);
        } else {
          cfg.r2 = parse_rational(val);
          cfg.r2_float = cfg.r2->get_d();
        }
      } else {
        throw Error(Err::ConfigError, "unknown lattice key: " + key);
      }
    } else if (section == "cutoffs") {
      if (key == "energy")
        cfg.energy = std::stoi(val);
      else if (key == "series_order")
        cfg.series_order = std::stoi(val);
      else if (key == "box_radius")
        cfg.box_radius = std::stoi(val);
      else if (key == "state_budget")
        cfg.state_budget = (size_t)std::stoll(val);
      else
        throw Error(Err::ConfigError, "unknown cutoffs key: " + key);
    } else if (section == "suites") {
      if (key == "run")
        cfg.suites = split(val, ',');
      else
        throw Error(Err::ConfigError, "unknown suites key: " + key);
    } else {
      throw Error(Err::ConfigError, "unknown section: [" + section + "]");
    }
  }
  if (cfg.backend.kind == BackendKind::quadratic && cfg.backend.quad_d <= 1)
    throw Error(Err::ConfigError, "quadratic backend needs d > 1");
  return cfg;
}

ModelConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ConfigError, "cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

Lattice build_config_lattice(const ModelConfig& cfg) {
  if (cfg.generator_rows.empty())
    throw Error(Err::ConfigError, "no lattice generators declared");
  std::vector<Generator> gens;
  for (const auto& row : cfg.generator_rows) {
    auto cells = split(row, ',');
    if ((int)cells.size() != cfg.space.dim())
      throw Error(Err::ConfigError, "generator row has " + std::to_string(cells.size()) +
                                        " entries, expected " + std::to_string(cfg.space.dim()));
    Generator g;
    for (int k = 0; k < cfg.space.d_plus; ++k) g.plus.push_back(eval_token(cells[k], cfg));
    for (int k = 0; k < cfg.space.d_minus; ++k)
      g.minus.push_back(eval_token(cells[cfg.space.d_plus + k], cfg));
    gens.push_back(g);
  }
  return build_lattice(cfg.space, gens, cfg.backend);
}

}  // namespace lvo
