#include "mph/io/formats.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "mph/core/errors.hpp"

namespace mph::io {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line split on whitespace; ParseError at end of input.
  std::vector<std::string> next(const char* expecting) {
    std::string line;
    if (!std::getline(in_, line)) throw ParseError(std::string("unexpected end of input, expected ") + expecting, line_ + 1);
    ++line_;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    return tokens;
  }

  /// Peeks whether the next line starts with `word`.
  bool next_starts_with(const std::string& word) {
    auto pos = in_.tellg();
    std::string line;
    if (!std::getline(in_, line)) {
      in_.clear();
      in_.seekg(pos);
      return false;
    }
    in_.seekg(pos);
    return line.rfind(word, 0) == 0;
  }

  void expect_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing content", line_);
    }
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::size_t parse_count(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not a count: '" + s + "'", line);
  }
  if (pos != s.size() || s.front() == '-' || s.front() == '+') throw ParseError("not a count: '" + s + "'", line);
  return static_cast<std::size_t>(v);
}

long long parse_integer(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + s + "'", line);
  }
  if (pos != s.size()) throw ParseError("not an integer: '" + s + "'", line);
  return v;
}

void expect_header(LineReader& r, const std::string& magic) {
  auto t = r.next(magic.c_str());
  if (t.size() != 2 || t[0] + " " + t[1] != magic) throw ParseError("expected '" + magic + "'", r.line());
}

Field read_field(LineReader& r) {
  auto t = r.next("field");
  if (t.size() != 2 || t[0] != "field") throw ParseError("expected 'field <p>'", r.line());
  auto p = parse_count(t[1], r.line());
  try {
    return Field(static_cast<std::uint32_t>(p));
  } catch (const ContractError& e) {
    throw ParseError(e.what(), r.line());
  }
}

std::size_t read_keyword_count(LineReader& r, const std::string& key) {
  auto t = r.next(key.c_str());
  if (t.size() != 2 || t[0] != key) throw ParseError("expected '" + key + " <n>'", r.line());
  return parse_count(t[1], r.line());
}

bool parse_dir(const std::string& s, std::size_t line) {
  if (s == "+") return false;
  if (s == "-") return true;
  throw ParseError("axis direction must be + or -, got '" + s + "'", line);
}

bifilt::Axes parse_axes(const std::vector<std::string>& t, std::size_t line) {
  if (t.size() != 5 || t[0] != "axes") throw ParseError("expected 'axes <x-name> <y-name> <+|-> <+|->'", line);
  return {t[1], t[2], parse_dir(t[3], line), parse_dir(t[4], line)};
}

/// `x y : i i^c ...` with indices below `bound`.
std::pair<Grade, SparseColumn> read_graded_column(LineReader& r, const Field& f, std::size_t bound, const char* what) {
  auto t = r.next(what);
  const auto line = r.line();
  if (t.size() < 3 || t[2] != ":") throw ParseError("expected 'x y : indices'", line);
  Grade g{parse_real(t[0], line), parse_real(t[1], line)};
  std::vector<Entry> entries;
  std::set<std::uint32_t> seen;
  for (std::size_t k = 3; k < t.size(); ++k) {
    auto caret = t[k].find('^');
    auto idx = parse_count(t[k].substr(0, caret), line);
    long long c = caret == std::string::npos ? 1 : parse_integer(t[k].substr(caret + 1), line);
    if (idx >= bound) throw ParseError("index " + std::to_string(idx) + " out of range", line);
    if (!seen.insert(static_cast<std::uint32_t>(idx)).second)
      throw ParseError("duplicate index " + std::to_string(idx), line);
    entries.push_back({static_cast<std::uint32_t>(idx), f.from_int(c)});
  }
  return {g, SparseColumn::from_entries(std::move(entries), f)};
}

void write_column(std::ostream& out, const Grade& g, const SparseColumn& c, const Field& f) {
  out << format_real(g.x) << ' ' << format_real(g.y) << " :";
  for (const auto& e : c.entries()) {
    out << ' ' << e.row;
    if (f.characteristic() != 2) out << '^' << e.coeff;
  }
  out << '\n';
}

const char* dir(bool reversed) { return reversed ? "-" : "+"; }

template <class T, class Reader>
T load(const std::string& path, Reader read) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read(in);
}

}  // namespace

bifilt::FreeChainComplex read_bifcc(std::istream& in) {
  LineReader r(in);
  expect_header(r, "bifcc v1");
  bifilt::FreeChainComplex c;
  c.field = read_field(r);
  c.axes = parse_axes(r.next("axes"), r.line());
  auto t = r.next("sizes");
  if (t.size() != 4 || t[0] != "sizes") throw ParseError("expected 'sizes n2 n1 n0'", r.line());
  const auto line = r.line();
  const std::size_t n2 = parse_count(t[1], line), n1 = parse_count(t[2], line), n0 = parse_count(t[3], line);

  std::vector<Grade> g2, g1, g0;
  std::vector<SparseColumn> c2, c1;
  for (std::size_t k = 0; k < n2; ++k) {
    auto [g, col] = read_graded_column(r, c.field, n1, "a degree-2 generator");
    g2.push_back(g);
    c2.push_back(std::move(col));
  }
  for (std::size_t k = 0; k < n1; ++k) {
    auto [g, col] = read_graded_column(r, c.field, n0, "a degree-1 generator");
    g1.push_back(g);
    c1.push_back(std::move(col));
  }
  for (std::size_t k = 0; k < n0; ++k) {
    auto [g, col] = read_graded_column(r, c.field, 0, "a degree-0 generator");
    g0.push_back(g);
  }
  r.expect_end();
  c.boundary.emplace_back(c.field, g0, g1, std::move(c1));
  c.boundary.emplace_back(c.field, g1, g2, std::move(c2));
  return c;
}

void write_bifcc(std::ostream& out, const bifilt::FreeChainComplex& c) {
  if (c.top() != 2) throw ContractError("bifcc stores exactly the degrees 0, 1 and 2");
  const auto& d1 = c.boundary[0];
  const auto& d2 = c.boundary[1];
  out << "bifcc v1\n";
  out << "field " << c.field.characteristic() << '\n';
  out << "axes " << c.axes.x_name << ' ' << c.axes.y_name << ' ' << dir(c.axes.x_reversed) << ' '
      << dir(c.axes.y_reversed) << '\n';
  out << "sizes " << d2.num_cols() << ' ' << d1.num_cols() << ' ' << d1.num_rows() << '\n';
  for (std::size_t j = 0; j < d2.num_cols(); ++j) write_column(out, d2.col_grade(j), d2.column(j), c.field);
  for (std::size_t j = 0; j < d1.num_cols(); ++j) write_column(out, d1.col_grade(j), d1.column(j), c.field);
  for (std::size_t i = 0; i < d1.num_rows(); ++i) write_column(out, d1.row_grade(i), {}, c.field);
}

present::Presentation read_mpres(std::istream& in) {
  LineReader r(in);
  expect_header(r, "mpres v1");
  Field f = read_field(r);
  auto t = r.next("hom");
  if (t.size() != 2 || t[0] != "hom") throw ParseError("expected 'hom <i>'", r.line());
  const auto hom = parse_count(t[1], r.line());
  bifilt::Axes axes;
  if (r.next_starts_with("axes")) axes = parse_axes(r.next("axes"), r.line());
  const auto n = read_keyword_count(r, "rows");
  std::vector<Grade> rows;
  for (std::size_t k = 0; k < n; ++k) {
    auto g = r.next("a row grade");
    if (g.size() != 2) throw ParseError("expected 'x y'", r.line());
    rows.push_back({parse_real(g[0], r.line()), parse_real(g[1], r.line())});
  }
  const auto m = read_keyword_count(r, "cols");
  std::vector<Grade> cols;
  std::vector<SparseColumn> cs;
  for (std::size_t k = 0; k < m; ++k) {
    auto [g, col] = read_graded_column(r, f, n, "a column");
    cols.push_back(g);
    cs.push_back(std::move(col));
  }
  r.expect_end();
  return {GradedMatrix(f, std::move(rows), std::move(cols), std::move(cs)), static_cast<int>(hom), axes};
}

void write_mpres(std::ostream& out, const present::Presentation& p) {
  const auto& m = p.matrix;
  out << "mpres v1\n";
  out << "field " << m.field().characteristic() << '\n';
  out << "hom " << p.hom << '\n';
  if (p.axes != bifilt::Axes{})
    out << "axes " << p.axes.x_name << ' ' << p.axes.y_name << ' ' << dir(p.axes.x_reversed) << ' '
        << dir(p.axes.y_reversed) << '\n';
  out << "rows " << m.num_rows() << '\n';
  for (std::size_t i = 0; i < m.num_rows(); ++i)
    out << format_real(m.row_grade(i).x) << ' ' << format_real(m.row_grade(i).y) << '\n';
  out << "cols " << m.num_cols() << '\n';
  for (std::size_t j = 0; j < m.num_cols(); ++j) write_column(out, m.col_grade(j), m.column(j), m.field());
}

bifilt::FreeChainComplex load_bifcc(const std::string& path) {
  return load<bifilt::FreeChainComplex>(path, [](std::istream& in) { return read_bifcc(in); });
}

present::Presentation load_mpres(const std::string& path) {
  return load<present::Presentation>(path, [](std::istream& in) { return read_mpres(in); });
}

}  // namespace mph::io
