#include "gwdeg/problem_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gwdeg/parser.hpp"

namespace gwdeg {

namespace {

std::string trim(const std::string& s, int* col_shift = nullptr) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) {
    if (col_shift) *col_shift = 0;
    return "";
  }
  size_t b = s.find_last_not_of(" \t\r");
  if (col_shift) *col_shift = static_cast<int>(a);
  return s.substr(a, b - a + 1);
}

// "key: value" split; returns false when there is no colon.
bool split_kv(const std::string& s, std::string& key, std::string& value, int& value_col) {
  size_t c = s.find(':');
  if (c == std::string::npos) return false;
  key = trim(s.substr(0, c));
  int shift = 0;
  value = trim(s.substr(c + 1), &shift);
  value_col = static_cast<int>(c) + 1 + shift + 1;  // 1-based
  return true;
}

std::vector<SourceString> split_list(const SourceString& src) {
  std::vector<SourceString> out;
  size_t start = 0;
  while (true) {
    size_t comma = src.text.find(',', start);
    std::string piece = src.text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    int shift = 0;
    std::string t = trim(piece, &shift);
    out.push_back(SourceString{t, src.line, src.col + static_cast<int>(start) + shift});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Rational> parse_rational_list(const SourceString& src) {
  std::vector<Rational> out;
  for (const auto& piece : split_list(src)) {
    if (piece.text.empty())
      fail(Errc::syntax_error, "empty entry in a coefficient list", piece.line, piece.col);
    try {
      out.push_back(rat_from_string(piece.text));
    } catch (const Error& e) {
      fail(e.code(), e.what(), piece.line, piece.col);
    }
  }
  return out;
}

BaseField parse_base(const SourceString& src) {
  if (src.text == "Q") return BaseField::rationals();
  if (src.text.size() >= 2 && src.text[0] == 'F' &&
      std::all_of(src.text.begin() + 1, src.text.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    try {
      return BaseField::prime_field(std::stol(src.text.substr(1)));
    } catch (const Error& e) {
      fail(e.code(), e.what(), src.line, src.col);
    } catch (const std::exception&) {
      fail(Errc::syntax_error, "field characteristic out of range", src.line, src.col);
    }
  }
  fail(Errc::syntax_error, "base field must be Q or F<p>, got '" + src.text + "'",
       src.line, src.col);
}

struct LineCursor {
  std::vector<std::string> lines;
  size_t i = 0;

  bool done() const { return i >= lines.size(); }
  int lineno() const { return static_cast<int>(i) + 1; }
  std::string next() { return lines[i++]; }
};

ExtensionSpec parse_extension_body(LineCursor& cur, const char* what) {
  ExtensionSpec ext;
  ext.line = cur.lineno() - 1;
  bool closed = false, have_gen = false, have_poly = false;
  while (!cur.done()) {
    int ln = cur.lineno();
    std::string raw = cur.next();
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line == "}") { closed = true; break; }
    std::string key, value;
    int vcol = 0;
    if (!split_kv(line, key, value, vcol))
      fail(Errc::syntax_error, "expected 'key: value' or '}'", ln, 1);
    SourceString src{value, ln, vcol};
    if (key == "generator") {
      ext.generator = value;
      have_gen = true;
    } else if (key == "min_poly") {
      ext.min_poly = parse_rational_list(src);
      have_poly = true;
    } else {
      fail(Errc::syntax_error, std::string("unknown key '") + key + "' in a " + what +
                                   " record", ln, 1);
    }
  }
  if (!closed) fail(Errc::syntax_error, std::string("unterminated ") + what + " record",
                    ext.line, 1);
  if (have_gen != have_poly)
    fail(Errc::syntax_error, "generator and min_poly must be given together", ext.line, 1);
  if (!have_gen) ext.generator.clear();
  return ext;
}

}  // namespace

BaseField parse_base_field(const std::string& name) {
  return parse_base(SourceString{name, -1, -1});
}

ProblemFile parse_problem_text(const std::string& text) {
  ProblemFile pf;
  LineCursor cur;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) cur.lines.push_back(line);
  }
  bool have_field = false, have_vars = false;

  while (!cur.done()) {
    int ln = cur.lineno();
    std::string raw = cur.next();
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;

    if (line == "field {") {
      if (have_field) fail(Errc::syntax_error, "duplicate field record", ln, 1);
      have_field = true;
      // The field record allows base:, generator:, min_poly:.
      bool closed = false;
      std::optional<std::string> gen;
      std::optional<std::vector<Rational>> mp;
      while (!cur.done()) {
        int ln2 = cur.lineno();
        std::string raw2 = cur.next();
        std::string l2 = trim(raw2.substr(0, raw2.find('#')));
        if (l2.empty()) continue;
        if (l2 == "}") { closed = true; break; }
        std::string key, value;
        int vcol = 0;
        if (!split_kv(l2, key, value, vcol))
          fail(Errc::syntax_error, "expected 'key: value' or '}'", ln2, 1);
        SourceString src{value, ln2, vcol};
        if (key == "base") {
          pf.base = parse_base(src);
        } else if (key == "generator") {
          gen = value;
        } else if (key == "min_poly") {
          mp = parse_rational_list(src);
        } else {
          fail(Errc::syntax_error, "unknown key '" + key + "' in the field record", ln2, 1);
        }
      }
      if (!closed) fail(Errc::syntax_error, "unterminated field record", ln, 1);
      if (gen.has_value() != mp.has_value())
        fail(Errc::syntax_error, "generator and min_poly must be given together", ln, 1);
      if (gen) pf.ext = ExtensionSpec{*gen, *mp, ln};
      continue;
    }

    if (line == "point {") {
      PointRecord pr;
      pr.line = ln;
      bool closed = false;
      std::optional<std::string> gen;
      std::optional<std::vector<Rational>> mp;
      while (!cur.done()) {
        int ln2 = cur.lineno();
        std::string raw2 = cur.next();
        std::string l2 = trim(raw2.substr(0, raw2.find('#')));
        if (l2.empty()) continue;
        if (l2 == "}") { closed = true; break; }
        std::string key, value;
        int vcol = 0;
        if (!split_kv(l2, key, value, vcol))
          fail(Errc::syntax_error, "expected 'key: value' or '}'", ln2, 1);
        SourceString src{value, ln2, vcol};
        if (key == "generator") {
          gen = value;
        } else if (key == "min_poly") {
          mp = parse_rational_list(src);
        } else if (key == "coords") {
          pr.coord_exprs = split_list(src);
        } else {
          fail(Errc::syntax_error, "unknown key '" + key + "' in a point record", ln2, 1);
        }
      }
      if (!closed) fail(Errc::syntax_error, "unterminated point record", ln, 1);
      if (gen.has_value() != mp.has_value())
        fail(Errc::syntax_error, "generator and min_poly must be given together", ln, 1);
      if (gen) pr.ext = ExtensionSpec{*gen, *mp, ln};
      if (pr.coord_exprs.empty())
        fail(Errc::syntax_error, "point record without coords", ln, 1);
      pf.points.push_back(std::move(pr));
      continue;
    }

    std::string key, value;
    int vcol = 0;
    if (!split_kv(line, key, value, vcol))
      fail(Errc::syntax_error, "expected 'key: value' or a record", ln, 1);
    SourceString src{value, ln, vcol};
    if (key == "variables") {
      if (have_vars) fail(Errc::syntax_error, "duplicate variables line", ln, 1);
      have_vars = true;
      for (const auto& piece : split_list(src)) {
        if (piece.text.empty())
          fail(Errc::syntax_error, "empty variable name", piece.line, piece.col);
        pf.variables.push_back(piece.text);
      }
    } else if (key == "poly") {
      if (value.empty()) fail(Errc::syntax_error, "empty polynomial", ln, vcol);
      pf.poly_exprs.push_back(src);
    } else if (key == "seed") {
      try {
        pf.seed = std::stoull(value);
      } catch (const std::exception&) {
        fail(Errc::syntax_error, "seed must be a nonnegative integer", ln, vcol);
      }
    } else {
      fail(Errc::syntax_error, "unknown key '" + key + "'", ln, 1);
    }
  }

  if (pf.variables.empty())
    fail(Errc::syntax_error, "no variables declared");
  if (pf.poly_exprs.empty())
    fail(Errc::syntax_error, "no polynomials declared");
  return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::file_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str());
}

namespace {

// Reraises parse errors from an embedded expression with file coordinates.
template <typename Fn>
auto with_position(const SourceString& src, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.is_parse() && e.line() < 0) {
      int col = e.col() > 0 ? src.col + e.col() - 1 : src.col;
      fail(e.code(), e.what(), src.line, col);
    }
    throw;
  }
}

}  // namespace

namespace {

FieldDescriptor ambient_field(const ProblemFile& pf) {
  if (!pf.ext) return FieldDescriptor::base_only(pf.base);
  try {
    return FieldDescriptor::extension(pf.base, pf.ext->generator, pf.ext->min_poly);
  } catch (const Error& e) {
    if (e.line() < 0) fail(e.code(), e.what(), pf.ext->line);
    throw;
  }
}

}  // namespace

LoadedProblem load_problem(const ProblemFile& pf) {
  LoadedProblem lp{ambient_field(pf), nullptr, {}, {}, 0};

  for (const auto& v : pf.variables) {
    if (std::count(pf.variables.begin(), pf.variables.end(), v) > 1)
      fail(Errc::syntax_error, "duplicate variable '" + v + "'");
    if (pf.ext && pf.ext->generator == v)
      fail(Errc::syntax_error, "variable '" + v + "' clashes with the field generator");
  }
  lp.vars = make_vars(pf.variables);

  for (const auto& src : pf.poly_exprs)
    lp.polys.push_back(
        with_position(src, [&] { return parse_poly(src.text, lp.field, lp.vars); }));

  for (const auto& pr : pf.points) {
    FieldDescriptor residue = lp.field;
    if (pr.ext) {
      if (pf.ext)
        fail(Errc::incompatible_fields,
             "point extensions require the ambient field to be the plain base field",
             pr.line);
      for (const auto& v : pf.variables)
        if (pr.ext->generator == v)
          fail(Errc::syntax_error,
               "point generator '" + pr.ext->generator + "' clashes with a variable",
               pr.line);
      try {
        residue = FieldDescriptor::extension(pf.base, pr.ext->generator, pr.ext->min_poly);
      } catch (const Error& e) {
        if (e.line() < 0) fail(e.code(), e.what(), pr.line);
        throw;
      }
    }
    PointSpec ps{residue, {}};
    for (const auto& src : pr.coord_exprs)
      ps.coords.push_back(
          with_position(src, [&] { return parse_field_element(src.text, residue); }));
    lp.points.push_back(std::move(ps));
  }

  lp.seed = pf.seed.value_or(0);
  return lp;
}

}  // namespace gwdeg
